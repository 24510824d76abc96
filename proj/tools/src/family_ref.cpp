#include "enumorder_cli/family_ref.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>
#include <vector>

#include "enumorder/seqlang.hpp"

namespace enumorder::cli {

namespace {

constexpr std::string_view kModifiers[] = {"+shift=", "+drop=", "+add="};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_long(std::string_view text, const std::string& segment) {
  long v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || p != end) throw ResolutionError(segment, "expected an integer");
  return v;
}

std::vector<Rational> parse_values(std::string_view text, char sep, const std::string& segment) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, sep)) {
    try {
      out.push_back(parse_rational(part));
    } catch (const std::exception& e) {
      throw ResolutionError(segment, e.what());
    }
  }
  return out;
}

std::string read_file(const std::string& path, const std::string& segment) {
  std::ifstream in(path);
  if (!in) throw ResolutionError(segment, "cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Naturals separated by whitespace or commas; '#' comments.
std::vector<Rational> read_indices(const std::string& path, const std::string& segment) {
  std::string text = read_file(path, segment);
  std::string cleaned;
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    cleaned += (comment || c == ',') ? ' ' : c;
  }
  std::istringstream in(cleaned);
  std::vector<Rational> out;
  std::string word;
  while (in >> word) {
    if (!std::all_of(word.begin(), word.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ResolutionError(segment, "'" + word + "' is not a natural number");
    out.push_back(Rational(BigInt(word)));
  }
  return out;
}

SetSpec resolve_base(const std::string& base) {
  const auto colon = base.find(':');
  const std::string head = base.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : base.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;

  try {
    if (head == "harmonic" && !has_arg) return builtin_harmonic();
    if (head == "thirds" && !has_arg) return builtin_thirds();
    if (head == "T" && has_arg) return build_T(parse_long(rest, base));
    if (head == "A" && has_arg) return build_A(parse_long(rest, base));
    if (head == "interval" && has_arg) {
      const auto ends = parse_values(rest, ',', base);
      if (ends.size() != 2) throw ResolutionError(base, "expected interval:<a>,<b>");
      return rationals_in_interval(ends[0], ends[1]);
    }
    if (head == "finite" && has_arg) return finite_listing(parse_values(rest, ',', base));
    if (head == "dyadic" && has_arg) return builtin_dyadic(listing_from_values(read_indices(rest, base)));
    if (head == "seq" && has_arg) {
      std::string path = rest;
      BigInt i = 1;
      const auto marker = path.rfind(":i=");
      if (marker != std::string::npos) {
        i = parse_long(std::string_view(path).substr(marker + 3), base);
        path.resize(marker);
      }
      SetSpec s;
      try {
        s.listing = seqlang::to_listing(seqlang::parse(read_file(path, base)), i);
      } catch (const seqlang::SyntaxError& e) {
        throw ResolutionError(base, e.what());
      } catch (const seqlang::NonTotalPiecewise& e) {
        throw ResolutionError(base, e.what());
      }
      return s;
    }
  } catch (const FamilyError& e) {
    throw ResolutionError(base, e.what());
  }
  throw ResolutionError(base, "unknown family");
}

}  // namespace

SetSpec resolve_family(std::string_view ref) {
  // Cut the reference at every modifier marker.
  std::vector<std::size_t> cuts;
  for (auto marker : kModifiers)
    for (auto pos = ref.find(marker); pos != std::string_view::npos; pos = ref.find(marker, pos + 1))
      cuts.push_back(pos);
  std::sort(cuts.begin(), cuts.end());

  const std::size_t base_end = cuts.empty() ? ref.size() : cuts.front();
  const std::string base(ref.substr(0, base_end));
  // File paths may contain '+'; elsewhere "+word=" can only be a modifier.
  if (!base.starts_with("seq:") && !base.starts_with("dyadic:")) {
    static const std::regex kUnknownModifier(R"(\+[A-Za-z_]+=?.*)");
    std::smatch m;
    if (std::regex_search(base, m, kUnknownModifier)) throw ResolutionError(m.str(), "unknown modifier");
  }
  SetSpec spec = resolve_base(base);

  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const std::size_t end = k + 1 < cuts.size() ? cuts[k + 1] : ref.size();
    const std::string segment(ref.substr(cuts[k], end - cuts[k]));
    const auto eq = segment.find('=');
    const std::string kind = segment.substr(1, eq - 1);
    const std::string arg = segment.substr(eq + 1);
    try {
      if (kind == "shift") {
        const long m = parse_long(arg, segment);
        if (m < 0) throw ResolutionError(segment, "shift must be nonnegative");
        spec = shift(spec, static_cast<std::size_t>(m));
      } else if (kind == "drop") {
        spec = remove_finite(spec, parse_values(arg, ';', segment));
      } else {
        spec = add_finite(spec, parse_values(arg, ';', segment));
      }
    } catch (const FamilyError& e) {
      throw ResolutionError(segment, e.what());
    }
  }
  spec.name = std::string(ref);
  return spec;
}

}  // namespace enumorder::cli
