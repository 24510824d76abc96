#include "enumorder_cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "enumorder/coorder.hpp"
#include "enumorder/set_order.hpp"
#include "enumorder_cli/family_ref.hpp"
#include "enumorder_cli/report_json.hpp"

namespace enumorder::cli {

namespace {

std::string describe(const WitnessPair& w) {
  std::ostringstream s;
  s << "(i=" << w.i << ", j=" << w.j << "): h(i)=" << w.h_i << " h(j)=" << w.h_j << "  g(i)=" << w.g_i
    << " g(j)=" << w.g_j;
  return s.str();
}

std::string join(std::span<const Rational> values) {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) s += ", ";
    s += values[k].str();
  }
  return s;
}

double to_double(const Rational& x) {
  return x.numerator().convert_to<double>() / x.denominator().convert_to<double>();
}

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Runs `body`, mapping resolution and listing failures to kUsage.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ResolutionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ListingExhausted& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace

std::string render_svg(std::span<const Rational> values, std::string_view title) {
  constexpr double kWidth = 640, kHeight = 400, kLeft = 80, kRight = 20, kTop = 30, kBottom = 40;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  Rational lo = values.empty() ? Rational(0) : values[0];
  Rational hi = lo;
  for (const auto& v : values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (lo == hi) hi = lo + Rational(1);
  const double lo_d = to_double(lo);
  const double span = to_double(hi) - lo_d;
  const std::size_t count = std::max<std::size_t>(values.size(), 2);

  auto x_of = [&](std::size_t k) { return kLeft + plot_w * static_cast<double>(k) / static_cast<double>(count - 1); };
  auto y_of = [&](const Rational& v) { return kTop + plot_h * (1.0 - (to_double(v) - lo_d) / span); };

  std::ostringstream s;
  s << std::fixed << std::setprecision(2);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << kWidth / 2 << "\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
    << escape_xml(title) << "</text>\n";
  s << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
    << kTop + plot_h << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
    << "\" stroke=\"black\"/>\n";

  // y ticks at exact fractions of the value range
  constexpr int kTicks = 4;
  for (int t = 0; t <= kTicks; ++t) {
    const Rational v = lo + (hi - lo) * Rational(BigInt(t), BigInt(kTicks));
    const double y = y_of(v);
    s << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft << "\" y2=\"" << y
      << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << v.str() << "</text>\n";
  }
  // x ticks at first and last index
  for (std::size_t k : {std::size_t{0}, count - 1}) {
    s << "<text x=\"" << x_of(k) << "\" y=\"" << kTop + plot_h + 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << k << "</text>\n";
  }
  s << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 6
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">index</text>\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    s << "<circle cx=\"" << x_of(k) << "\" cy=\"" << y_of(values[k]) << "\" r=\"2.5\" fill=\"steelblue\"><title>"
      << k << ": " << values[k].str() << "</title></circle>\n";
  }
  s << "</svg>\n";
  return s.str();
}

int cmd_list(std::string_view ref, std::size_t count, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SetSpec spec = resolve_family(ref);
    const std::size_t got = spec.listing.produce(count);
    const auto values = spec.listing.produced().first(got);
    if (got < count) err << "note: " << spec.name << " has only " << got << " values\n";
    switch (format) {
      case Format::Text:
        out << join(values) << "\n";
        break;
      case Format::Json: {
        Json arr = Json::array();
        for (const auto& v : values) arr.push_back(v.str());
        out << arr.dump() << "\n";
        break;
      }
      case Format::Svg:
        out << render_svg(values, spec.name);
        break;
    }
    return int{kPositive};
  });
}

int cmd_check(std::string_view ref_a, std::string_view ref_b, std::size_t prefix, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    SetSpec a = resolve_family(ref_a);
    SetSpec b = resolve_family(ref_b);
    const CoorderVerdict v = prefix_coorder(a.listing, b.listing, prefix);
    if (const auto* d = std::get_if<Disagree>(&v)) {
      out << "disagree " << describe(d->witness) << "\n";
      return int{kNegative};
    }
    out << "agree on the first " << prefix << " values\n";
    return int{kPositive};
  });
}

int cmd_type2(std::string_view ref_a, std::string_view ref_b, const SearchBounds& bounds, Format format,
              std::ostream& out, std::ostream& err) {
  if (format == Format::Svg) {
    err << "error: type2 writes text or json\n";
    return int{kUsage};
  }
  return guarded(err, [&] {
    SetSpec a = resolve_family(ref_a);
    SetSpec b = resolve_family(ref_b);
    ReproReport report;
    report.experiment = "type2";
    report.params = {{"m_max", static_cast<std::int64_t>(bounds.m_max)},
                     {"n_max", static_cast<std::int64_t>(bounds.n_max)},
                     {"N", static_cast<std::int64_t>(bounds.prefix)}};
    PairResult pair;
    pair.left = a.name;
    pair.right = b.name;
    pair.descriptor = refute_type2(a, b);
    pair.search = type2_search(a.listing, b.listing, bounds.m_max, bounds.n_max, bounds.prefix);
    const bool all = pair.search.all_witnessed();
    report.passed = !all;
    report.pairs.push_back(std::move(pair));

    if (format == Format::Json) {
      out << to_json(report).dump(2) << "\n";
    } else {
      const PairResult& p = report.pairs.front();
      out << "descriptor: " << (p.descriptor.refuted() ? "refuted (" + p.descriptor.reason + ")" : "unknown")
          << "\n";
      for (const auto& c : p.search.cells) {
        out << "(m=" << c.m << ", n=" << c.n << ") ";
        if (c.witness) {
          out << "witness " << describe(*c.witness) << "\n";
        } else {
          out << "no witness within N=" << bounds.prefix << " (type-2 candidate)\n";
        }
      }
    }
    return int{all ? kNegative : kPositive};
  });
}

int cmd_match(std::string_view ref_a, std::string_view ref_b, std::size_t fuel, std::size_t prefix,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SetSpec a = resolve_family(ref_a);
    SetSpec b = resolve_family(ref_b);
    const MatchResult r = match_listing(a.listing, b, fuel, prefix);
    if (const auto* ok = std::get_if<MatchSuccess>(&r)) {
      out << "matched " << ok->values.size() << " values using " << ok->fuel_used << " draws"
          << (ok->rank_matched ? " (rank matching)" : "") << "\n";
      out << join(ok->values) << "\n";
      return int{kPositive};
    }
    const auto& f = std::get<MatchFailure>(r);
    auto bound = [](const std::optional<Rational>& x, const char* inf) { return x ? x->str() : std::string(inf); };
    out << (f.kind == MatchFailureKind::GapEmpty ? "gap empty" : "fuel exhausted") << " at step " << f.step
        << ": gap (" << bound(f.gap.lower, "-inf") << ", " << bound(f.gap.upper, "+inf") << ") after "
        << f.fuel_used << " draws\n";
    out << "partial: " << join(f.partial) << "\n";
    return int{f.kind == MatchFailureKind::GapEmpty ? kNegative : kInconclusive};
  });
}

int cmd_repro(std::string_view name, const ReproOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ReproReport report;
    if (name == "theorem9") {
      report = repro_theorem9(options.i_max ? options.i_max : 5, options.bounds);
    } else if (name == "theorem5") {
      report = repro_theorem5_chain(options.i_max ? options.i_max : 4, options.bounds);
    } else if (name == "examples") {
      report = repro_examples();
    } else if (name == "lemma5") {
      report = repro_lemma5();
    } else {
      err << "error: unknown experiment '" << name << "' (expected theorem9, theorem5, examples or lemma5)\n";
      return int{kUsage};
    }
    out << to_json(report).dump(2) << "\n";
    return int{report.passed ? kPositive : kNegative};
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumeration-order analysis of computable listings of rationals"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_file;
  app.add_option("--out", out_file, "Write output to FILE instead of stdout");

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"svg", Format::Svg}};
  std::string format_name = "text";
  std::string ref_a, ref_b, experiment;
  std::size_t count = 10, fuel = 100000, m_max = 10, n_max = 10, i_max = 0;
  std::optional<std::size_t> prefix;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "svg"}))
        ->capture_default_str();
  };

  auto* list = app.add_subcommand("list", "Print the first values of a family's listing");
  list->add_option("family", ref_a)->required();
  list->add_option("--count", count, "Number of values")->capture_default_str();
  add_format(list);

  auto* check = app.add_subcommand("check", "Prefix co-order check of two natural listings");
  check->add_option("left", ref_a)->required();
  check->add_option("right", ref_b)->required();

  auto* type2 = app.add_subcommand("type2", "Search all shift pairs for order-disagreement witnesses");
  type2->add_option("left", ref_a)->required();
  type2->add_option("right", ref_b)->required();
  type2->add_option("--mmax", m_max, "Largest shift of the left listing")->capture_default_str();
  type2->add_option("--nmax", n_max, "Largest shift of the right listing")->capture_default_str();
  add_format(type2);

  auto* match = app.add_subcommand("match", "Build a listing of B co-order with A's natural listing");
  match->add_option("left", ref_a)->required();
  match->add_option("right", ref_b)->required();
  match->add_option("--fuel", fuel, "Fresh elements of B that may be drawn")->capture_default_str();

  auto* repro = app.add_subcommand("repro", "Run a scripted reproduction and emit a JSON report");
  repro->add_option("name", experiment, "theorem9 | theorem5 | examples | lemma5")->required();
  repro->add_option("--imax", i_max, "Largest family index");
  repro->add_option("--mmax", m_max, "Largest shift of the left listing")->capture_default_str();
  repro->add_option("--nmax", n_max, "Largest shift of the right listing")->capture_default_str();

  const std::pair<CLI::App*, const char*> prefix_help[] = {
      {check, "Prefix length [100]"}, {type2, "Prefix length [500]"}, {match, "Prefix length [20]"},
      {repro, "Prefix length [500]"}};
  for (const auto& [cmd, help] : prefix_help) cmd->add_option("-N,--prefix", prefix, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : int{kUsage};
  }

  std::ofstream file;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) {
      err << "error: cannot write " << out_file << "\n";
      return kUsage;
    }
  }
  std::ostream& sink = out_file.empty() ? out : file;

  const Format format = formats.at(format_name);
  auto prefix_or = [&](std::size_t fallback) { return prefix.value_or(fallback); };
  if (list->parsed()) return cmd_list(ref_a, count, format, sink, err);
  if (check->parsed()) return cmd_check(ref_a, ref_b, prefix_or(100), sink, err);
  if (type2->parsed()) return cmd_type2(ref_a, ref_b, {m_max, n_max, prefix_or(500)}, format, sink, err);
  if (match->parsed()) return cmd_match(ref_a, ref_b, fuel, prefix_or(20), sink, err);
  return cmd_repro(experiment, {i_max, {m_max, n_max, prefix_or(500)}}, sink, err);
}

}  // namespace enumorder::cli
