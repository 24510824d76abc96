#include "enumorder/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <stdexcept>

namespace enumorder {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Each task gets its own copies of the specs, so listings are never shared.
PairResult search_pair(SetSpec left, SetSpec right, const SearchBounds& b, std::string role = {}) {
  PairResult r;
  r.left = left.name;
  r.right = right.name;
  r.role = std::move(role);
  r.descriptor = refute_type2(left, right);
  r.search = type2_search(left.listing, right.listing, b.m_max, b.n_max, b.prefix);
  return r;
}

std::map<std::string, std::int64_t> bounds_params(std::size_t i_max, const SearchBounds& b) {
  return {{"i_max", static_cast<std::int64_t>(i_max)},
          {"m_max", static_cast<std::int64_t>(b.m_max)},
          {"n_max", static_cast<std::int64_t>(b.n_max)},
          {"N", static_cast<std::int64_t>(b.prefix)}};
}

std::vector<PairResult> collect(std::vector<std::future<PairResult>>& tasks) {
  std::vector<PairResult> out;
  out.reserve(tasks.size());
  for (auto& t : tasks) out.push_back(t.get());
  return out;
}

}  // namespace

bool GrowthSeries::strictly_increasing() const {
  const auto increasing = [](const std::vector<std::size_t>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  return increasing(m_sizes) && increasing(l_sizes);
}

ReproReport repro_theorem9(std::size_t i_max, const SearchBounds& bounds) {
  if (i_max < 2) throw std::invalid_argument("theorem9: i_max must be at least 2");
  const auto start = Clock::now();
  ReproReport report;
  report.experiment = "theorem9";
  report.params = bounds_params(i_max, bounds);

  std::vector<std::future<PairResult>> tasks;
  for (std::size_t i = 1; i <= i_max; ++i)
    for (std::size_t j = i + 1; j <= i_max; ++j)
      tasks.push_back(std::async(std::launch::async, [i, j, bounds] {
        return search_pair(build_A(static_cast<long>(i)), build_A(static_cast<long>(j)), bounds);
      }));
  report.pairs = collect(tasks);

  report.passed = std::all_of(report.pairs.begin(), report.pairs.end(), [](const PairResult& p) {
    return p.descriptor.refuted() && p.search.all_witnessed();
  });
  report.elapsed_ms = ms_since(start);
  return report;
}

ReproReport repro_theorem5_chain(std::size_t i_max, const SearchBounds& bounds) {
  if (i_max < 2) throw std::invalid_argument("theorem5: i_max must be at least 2");
  const auto start = Clock::now();
  ReproReport report;
  report.experiment = "theorem5";
  report.params = bounds_params(i_max, bounds);

  std::vector<std::future<PairResult>> tasks;
  for (std::size_t i = 1; i < i_max; ++i) {
    const long step = static_cast<long>(i);
    tasks.push_back(std::async(std::launch::async, [step, bounds] {
      return search_pair(interleave({build_A(step), build_T(step + 1)}), build_A(1), bounds, "chain");
    }));
    tasks.push_back(std::async(std::launch::async, [step, bounds] {
      return search_pair(build_A(step), build_T(step + 1), bounds, "base");
    }));
  }
  report.pairs = collect(tasks);

  report.passed = std::all_of(report.pairs.begin(), report.pairs.end(),
                              [](const PairResult& p) { return p.search.all_witnessed(); });
  report.elapsed_ms = ms_since(start);
  return report;
}

ReproReport repro_examples() {
  const auto start = Clock::now();
  ReproReport report;
  report.experiment = "examples";

  // {1/n} vs {n/3}: not co-order.
  {
    SetSpec a = builtin_harmonic();
    SetSpec b = builtin_thirds();
    PairResult p;
    p.left = a.name;
    p.right = b.name;
    p.descriptor = refute_coorder(a, b);
    p.search = type2_search(a.listing, b.listing, 0, 0, 10);
    report.checks.push_back({"harmonic-vs-thirds-descriptor", p.descriptor.refuted(), p.descriptor.reason});

    const CoorderVerdict v = prefix_coorder(a.listing, b.listing, 10);
    const auto* d = std::get_if<Disagree>(&v);
    const bool at_01 = d && d->witness.i == 0 && d->witness.j == 1;
    report.checks.push_back({"harmonic-vs-thirds-witness", at_01,
                             d ? "(" + std::to_string(d->witness.i) + "," + std::to_string(d->witness.j) + ")"
                               : "agree"});

    // Both sets are recursive, yet not co-order.
    const bool recursive = a.contains && b.contains && a.contains(Rational(BigInt(1), BigInt(7))) &&
                           !a.contains(Rational(BigInt(2), BigInt(7))) && b.contains(Rational(BigInt(5), BigInt(3))) &&
                           !b.contains(Rational(BigInt(1), BigInt(2)));
    report.checks.push_back(
        {"recursive-pair-not-coorder", recursive && p.descriptor.refuted(), "membership decidable for both sets"});
    report.pairs.push_back(std::move(p));
  }

  // Finite sets of equal size are co-order.
  {
    const std::vector<Rational> a{Rational(BigInt(1), BigInt(2)), Rational(3), Rational(5)};
    const std::vector<Rational> b{Rational(-1), Rational(0), Rational(7)};
    const bool direct = finite_coorder(a, b);
    const bool brute = brute_force_coorder_oracle(a, b);
    Listing h = finite_listing(a).listing;
    const bool matched = std::holds_alternative<MatchSuccess>(match_listing(h, finite_listing(b), 100, 3));
    report.checks.push_back({"finite-equal-size-coorder", direct && brute && matched,
                             "finite_coorder, brute force and match_listing agree"});
  }

  // [0,1] is recursive and its listing reaches 1/2 early.
  {
    SetSpec unit = rationals_in_interval(Rational(0), Rational(1));
    const auto head = unit.listing.prefix(3);
    const bool has_half = std::find(head.begin(), head.end(), Rational(BigInt(1), BigInt(2))) != head.end();
    std::string shown;
    for (const auto& v : head) shown += (shown.empty() ? "" : ", ") + v.str();
    report.checks.push_back({"interval-listing-reaches-half", has_half, shown});
  }

  report.passed = std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.passed; });
  report.elapsed_ms = ms_since(start);
  return report;
}

ReproReport lemma5_growth(const SetSpec& h, const SetSpec& g, const std::vector<ShiftPair>& shifts,
                          const std::vector<std::size_t>& schedule) {
  const Refutation co = refute_coorder(h, g);
  const Refutation t2 = refute_type2(h, g);
  if (!co.refuted() && !t2.refuted())
    throw std::invalid_argument("lemma5: " + h.name + " and " + g.name + " are not refuted by their descriptors");

  const auto start = Clock::now();
  ReproReport report;
  report.experiment = "lemma5";
  if (shifts.empty()) {
    report.passed = true;
    return report;
  }

  PairResult p;
  p.left = h.name;
  p.right = g.name;
  p.descriptor = t2.refuted() ? t2 : co;
  for (const auto& s : shifts) {
    GrowthSeries series{s, schedule, {}, {}};
    for (std::size_t N : schedule) {
      Listing hl = h.listing;
      Listing gl = g.listing;
      const auto E = witness_set_E(hl, gl, s.m, s.n, N);
      series.m_sizes.push_back(project_M(E).size());
      series.l_sizes.push_back(project_L(E).size());
    }
    p.growth.push_back(std::move(series));
  }
  report.passed = std::all_of(p.growth.begin(), p.growth.end(),
                              [](const GrowthSeries& s) { return s.strictly_increasing(); });
  report.pairs.push_back(std::move(p));
  report.elapsed_ms = ms_since(start);
  return report;
}

ReproReport repro_lemma5() {
  const std::vector<ShiftPair> shifts{{0, 0}, {3, 1}, {7, 7}};
  const std::vector<std::size_t> schedule{50, 100, 200, 400};
  const auto start = Clock::now();

  ReproReport report = lemma5_growth(builtin_harmonic(), builtin_thirds(), shifts, schedule);
  ReproReport second = lemma5_growth(build_A(1), build_A(2), shifts, schedule);
  report.pairs.insert(report.pairs.end(), second.pairs.begin(), second.pairs.end());
  report.passed = report.passed && second.passed;
  report.params = {{"schedule_max", 400}, {"shift_count", static_cast<std::int64_t>(shifts.size())}};
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace enumorder
