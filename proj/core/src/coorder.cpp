#include "enumorder/coorder.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace enumorder {

namespace {

std::vector<std::size_t> ranks_of(std::span<const Rational> values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
  std::vector<std::size_t> rank(values.size());
  for (std::size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = r;
  return rank;
}

WitnessPair make_witness(std::span<const Rational> h, std::span<const Rational> g, std::size_t i, std::size_t j,
                         std::size_t m, std::size_t n) {
  return WitnessPair{i, j, h[i + m], h[j + m], g[i + n], g[j + n]};
}

void require_distinct(const std::vector<Rational>& values) {
  bool distinct = true;
  if (values.size() <= 16) {
    for (std::size_t k = 0; k < values.size() && distinct; ++k)
      for (std::size_t t = k + 1; t < values.size() && distinct; ++t) distinct = values[k] != values[t];
  } else {
    std::vector<Rational> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  if (!distinct) throw std::invalid_argument("co-order: list contains duplicate values");
}

}  // namespace

std::vector<std::size_t> order_pattern(Listing& h, std::size_t N) { return ranks_of(h.prefix(N)); }

CoorderVerdict prefix_coorder(Listing& h, Listing& g, std::size_t N) {
  const auto hv = h.prefix(N);
  const auto gv = g.prefix(N);
  const auto hr = ranks_of(hv);
  const auto gr = ranks_of(gv);
  if (hr == gr) return Agree{N};
  for (std::size_t j = 1; j < N; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((hr[i] < hr[j]) != (gr[i] < gr[j])) return Disagree{make_witness(hv, gv, i, j, 0, 0)};
  throw std::logic_error("prefix_coorder: patterns differ but no violating pair found");
}

std::vector<WitnessPair> witness_set_E(Listing& h, Listing& g, std::size_t m, std::size_t n, std::size_t N) {
  const auto hv = h.prefix(N + m);
  const auto gv = g.prefix(N + n);
  const auto hr = ranks_of(hv);
  const auto gr = ranks_of(gv);
  std::vector<WitnessPair> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j && hr[i + m] < hr[j + m] && gr[i + n] > gr[j + n]) out.push_back(make_witness(hv, gv, i, j, m, n));
  return out;
}

std::set<std::size_t> project_M(const std::vector<WitnessPair>& E) {
  std::set<std::size_t> out;
  for (const auto& w : E) out.insert(w.i);
  return out;
}

std::set<std::size_t> project_L(const std::vector<WitnessPair>& E) {
  std::set<std::size_t> out;
  for (const auto& w : E) out.insert(w.j);
  return out;
}

bool WitnessReport::all_witnessed() const {
  return std::all_of(cells.begin(), cells.end(), [](const ShiftCell& c) { return c.witness.has_value(); });
}

WitnessReport type2_search(Listing& h, Listing& g, std::size_t m_max, std::size_t n_max, std::size_t N) {
  const auto hv = h.prefix(N + m_max);
  const auto gv = g.prefix(N + n_max);
  const auto hr = ranks_of(hv);
  const auto gr = ranks_of(gv);

  WitnessReport report{m_max, n_max, N, {}};
  report.cells.reserve((m_max + 1) * (n_max + 1));
  for (std::size_t m = 0; m <= m_max; ++m) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      ShiftCell cell{m, n, std::nullopt};
      auto in_E = [&](std::size_t i, std::size_t j) { return hr[i + m] < hr[j + m] && gr[i + n] > gr[j + n]; };
      // Pairs with max(i, j) = d, lexicographically: (0,d) .. (d-1,d), (d,0) .. (d,d-1).
      for (std::size_t d = 1; d < N && !cell.witness; ++d) {
        for (std::size_t i = 0; i < d && !cell.witness; ++i)
          if (in_E(i, d)) cell.witness = make_witness(hv, gv, i, d, m, n);
        for (std::size_t j = 0; j < d && !cell.witness; ++j)
          if (in_E(d, j)) cell.witness = make_witness(hv, gv, d, j, m, n);
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

MatchResult match_listing(Listing& h, const SetSpec& B, std::size_t fuel, std::size_t prefix) {
  const std::size_t K = h.produce(prefix);
  const auto hv = h.produced().first(K);

  Listing b = B.listing;
  std::size_t next_fresh = 0;
  std::size_t fuel_used = 0;
  auto draw = [&]() -> std::optional<Rational> {
    if (fuel_used >= fuel || !b.has(next_fresh)) return std::nullopt;
    ++fuel_used;
    return b.at(next_fresh++);
  };
  auto b_complete = [&] { return !b.has(next_fresh); };

  // Whole of h known and B finite of the same size: match ranks directly.
  const bool h_complete = h.produce(prefix + 1) <= prefix;
  if (h_complete) {
    while (next_fresh <= K && draw()) {
    }
    if (b_complete() && next_fresh == K) {
      const auto sorted_b = [&] {
        const auto span = b.produced();
        std::vector<Rational> v(span.begin(), span.end());
        std::sort(v.begin(), v.end());
        return v;
      }();
      const auto rank = ranks_of(hv);
      MatchSuccess ok;
      for (std::size_t k = 0; k < K; ++k) ok.values.push_back(sorted_b[rank[k]]);
      ok.drawn_per_step.assign(K, 0);
      if (K > 0) ok.drawn_per_step[0] = fuel_used;
      ok.fuel_used = fuel_used;
      ok.rank_matched = true;
      ok.listing = listing_from_values(ok.values);
      return ok;
    }
  }

  std::vector<Rational> pool(b.produced().begin(), b.produced().begin() + static_cast<std::ptrdiff_t>(next_fresh));
  std::map<Rational, Rational> chosen;  // h value -> g value
  std::vector<Rational> values;
  std::vector<std::size_t> drawn_per_step;
  // Set once a pick may have emptied a gap that a better pick would have
  // kept; empty gaps after that are no longer a refutation of h.
  bool compromised = !B.gap_oracle;

  for (std::size_t k = 0; k < K; ++k) {
    const std::size_t fuel_before = fuel_used;
    OpenGap gap;
    const auto above = chosen.lower_bound(hv[k]);
    if (above != chosen.end()) gap.upper = above->second;
    if (above != chosen.begin()) gap.lower = std::prev(above)->second;

    auto fail = [&](MatchFailureKind kind) {
      return MatchFailure{kind, k, gap, values, fuel_used};
    };
    if (B.gap_oracle && !B.gap_oracle(gap))
      return fail(compromised ? MatchFailureKind::FuelExhausted : MatchFailureKind::GapEmpty);

    // Prefer a value with members of B on both sides inside the gap, so the
    // gaps left for later steps stay non-empty.
    std::optional<std::size_t> fallback;
    auto acceptable = [&](const Rational& x, std::size_t pool_index) {
      if (!gap.contains(x)) return false;
      if (!B.gap_oracle) return true;
      const bool left = B.gap_oracle(OpenGap{gap.lower, x});
      const bool right = B.gap_oracle(OpenGap{x, gap.upper});
      if (left == right) return true;  // both sides live, or x is the gap's only member
      if (!fallback) fallback = pool_index;
      return false;
    };

    std::optional<std::size_t> pick;
    for (std::size_t p = 0; p < pool.size() && !pick; ++p)
      if (acceptable(pool[p], p)) pick = p;
    while (!pick) {
      auto x = draw();
      if (!x) break;
      pool.push_back(std::move(*x));
      if (acceptable(pool.back(), pool.size() - 1)) pick = pool.size() - 1;
    }
    if (!pick && fallback) {
      pick = fallback;
      if (!b_complete()) compromised = true;
    }
    if (!pick) {
      // All of a finite B already used up refutes h whatever the earlier picks were.
      const bool used_up = b_complete() && values.size() == b.produced().size();
      const bool refuted = used_up || (b_complete() && !compromised);
      return fail(refuted ? MatchFailureKind::GapEmpty : MatchFailureKind::FuelExhausted);
    }

    values.push_back(pool[*pick]);
    chosen.emplace(hv[k], pool[*pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(*pick));
    drawn_per_step.push_back(fuel_used - fuel_before);
  }

  MatchSuccess ok;
  ok.values = values;
  ok.drawn_per_step = std::move(drawn_per_step);
  ok.fuel_used = fuel_used;
  ok.listing = listing_from_values(std::move(values));
  return ok;
}

bool finite_coorder(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  require_distinct(a);
  require_distinct(b);
  return a.size() == b.size();
}

bool brute_force_coorder_oracle(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() > kBruteForceCap || b.size() > kBruteForceCap)
    throw std::invalid_argument("brute-force co-order oracle: lists are capped at " +
                                std::to_string(kBruteForceCap) + " values");
  require_distinct(a);
  require_distinct(b);

  // Compare each pair of values once; patterns of permutations then only
  // need integer comparisons.
  auto ranks = [](const std::vector<Rational>& values) {
    std::vector<std::size_t> r(values.size());
    for (std::size_t k = 0; k < values.size(); ++k)
      for (std::size_t t = 0; t < values.size(); ++t)
        if (values[t] < values[k]) ++r[k];
    return r;
  };
  // A pattern of at most kBruteForceCap ranks packs into one word, 4 bits each.
  auto pattern_of = [](const std::vector<std::size_t>& rank, const std::vector<std::size_t>& order) {
    std::uint64_t code = order.size();
    for (std::size_t k = 0; k < order.size(); ++k) {
      std::uint64_t r = 0;
      for (std::size_t t = 0; t < order.size(); ++t) r += rank[order[t]] < rank[order[k]];
      code = (code << 4) | r;
    }
    return code;
  };
  const auto a_rank = ranks(a);
  const auto b_rank = ranks(b);

  std::vector<std::uint64_t> a_patterns;
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    a_patterns.push_back(pattern_of(a_rank, order));
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(a_patterns.begin(), a_patterns.end());

  order.resize(b.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (std::binary_search(a_patterns.begin(), a_patterns.end(), pattern_of(b_rank, order))) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace enumorder
