#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "enumorder/coorder.hpp"
#include "enumorder/set_spec.hpp"
#include "support/generators.hpp"

namespace enumorder {
namespace {

Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

std::vector<Rational> values_of(Listing l, std::size_t n) {
  const auto s = l.prefix(n);
  return {s.begin(), s.end()};
}

// Reference E straight from the two inequalities, over plain vectors.
std::vector<std::pair<std::size_t, std::size_t>> oracle_E(const std::vector<Rational>& h, const std::vector<Rational>& g,
                                                          std::size_t m, std::size_t n, std::size_t N) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j && h[i + m] < h[j + m] && g[i + n] > g[j + n]) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const std::vector<WitnessPair>& E) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& w : E) out.emplace_back(w.i, w.j);
  return out;
}

TEST(OrderPattern, Examples) {
  Listing up = listing_from_values({1, 2, 3, 4});
  EXPECT_EQ(order_pattern(up, 4), (std::vector<std::size_t>{0, 1, 2, 3}));
  Listing h = builtin_harmonic().listing;
  EXPECT_EQ(order_pattern(h, 4), (std::vector<std::size_t>{3, 2, 1, 0}));
  EXPECT_TRUE(order_pattern(h, 0).empty());
  Listing mixed = listing_from_values({frac(1, 2), -3, 7, 0});
  EXPECT_EQ(order_pattern(mixed, 4), (std::vector<std::size_t>{2, 0, 3, 1}));
}

TEST(OrderPattern, ShortListingReportsLength) {
  Listing l = listing_from_values({1, 2});
  try {
    order_pattern(l, 5);
    FAIL();
  } catch (const ListingExhausted& e) {
    EXPECT_EQ(e.available(), 2u);
  }
}

TEST(PrefixCoorder, Examples) {
  Listing h = builtin_harmonic().listing;
  Listing h2 = h;
  EXPECT_TRUE(agrees(prefix_coorder(h, h2, 50)));

  Listing t = builtin_thirds().listing;
  const auto v = prefix_coorder(h, t, 2);
  ASSERT_FALSE(agrees(v));
  const auto& w = std::get<Disagree>(v).witness;
  EXPECT_EQ(w.i, 0u);
  EXPECT_EQ(w.j, 1u);
  EXPECT_EQ(w.h_i, Rational(1));
  EXPECT_EQ(w.h_j, frac(1, 2));
  EXPECT_EQ(w.g_i, Rational(0));
  EXPECT_EQ(w.g_j, frac(1, 3));

  Listing t1 = build_T(1).listing, t3 = build_T(3).listing;
  const auto a = prefix_coorder(t1, t3, 100);
  ASSERT_TRUE(agrees(a));
  EXPECT_EQ(std::get<Agree>(a).prefix, 100u);

  Listing short1 = listing_from_values({1, 2});
  EXPECT_THROW(prefix_coorder(short1, t1, 3), ListingExhausted);
}

TEST(PrefixCoorder, MatchesPatternsAndFirstViolationOnRandomPrefixes) {
  testing::Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t N = static_cast<std::size_t>(testing::uniform(rng, 0, 9));
    // Small value range so agreement happens often enough to matter.
    auto hv = testing::random_distinct(rng, N, 5, 2);
    auto gv = testing::random_distinct(rng, N, 5, 2);
    if (t % 3 == 0) {
      // Force agreement by sorting g into h's rank order.
      std::vector<std::size_t> idx(N);
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return hv[a] < hv[b]; });
      std::sort(gv.begin(), gv.end());
      std::vector<Rational> g2(N);
      for (std::size_t r = 0; r < N; ++r) g2[idx[r]] = gv[r];
      gv = g2;
    }
    Listing h = listing_from_values(hv), g = listing_from_values(gv);
    const auto verdict = prefix_coorder(h, g, N);
    Listing h2 = listing_from_values(hv), g2 = listing_from_values(gv);
    EXPECT_EQ(agrees(verdict), order_pattern(h2, N) == order_pattern(g2, N));
    Listing h3 = listing_from_values(hv), g3 = listing_from_values(gv);
    EXPECT_EQ(agrees(verdict), agrees(prefix_coorder(g3, h3, N)));

    // First violation in (j, i) order, i < j.
    std::optional<std::pair<std::size_t, std::size_t>> first;
    for (std::size_t j = 0; j < N && !first; ++j)
      for (std::size_t i = 0; i < j && !first; ++i)
        if ((hv[i] < hv[j]) != (gv[i] < gv[j])) first = {i, j};
    if (first) {
      ASSERT_FALSE(agrees(verdict));
      const auto& w = std::get<Disagree>(verdict).witness;
      EXPECT_EQ(std::make_pair(w.i, w.j), *first);
      EXPECT_EQ(w.h_i, hv[w.i]);
      EXPECT_EQ(w.h_j, hv[w.j]);
      EXPECT_EQ(w.g_i, gv[w.i]);
      EXPECT_EQ(w.g_j, gv[w.j]);
      EXPECT_NE(w.h_i < w.h_j, w.g_i < w.g_j);
    } else {
      EXPECT_TRUE(agrees(verdict));
    }
  }
}

TEST(WitnessSetE, Examples) {
  Listing h = builtin_harmonic().listing, h2 = h;
  EXPECT_TRUE(witness_set_E(h, h2, 3, 3, 40).empty());

  Listing t = builtin_thirds().listing;
  const auto E = witness_set_E(h, t, 0, 0, 3);
  EXPECT_EQ(pairs_of(E), (std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 0}, {2, 1}}));
  EXPECT_EQ(project_M(E), (std::set<std::size_t>{1, 2}));
  EXPECT_EQ(project_L(E), (std::set<std::size_t>{0, 1}));
  EXPECT_TRUE(project_M({}).empty());
  EXPECT_TRUE(project_L({}).empty());

  Listing short1 = listing_from_values({1, 2, 3});
  EXPECT_THROW(witness_set_E(short1, t, 1, 0, 3), ListingExhausted);
}

TEST(WitnessSetE, AgreesWithDirectEnumeration) {
  testing::Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    SetSpec a = testing::random_spec(rng), b = testing::random_spec(rng);
    const std::size_t m = static_cast<std::size_t>(testing::uniform(rng, 0, 4));
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 0, 4));
    const std::size_t N = static_cast<std::size_t>(testing::uniform(rng, 0, 30));
    const auto hv = values_of(a.listing, N + m), gv = values_of(b.listing, N + n);
    const auto E = witness_set_E(a.listing, b.listing, m, n, N);
    EXPECT_EQ(pairs_of(E), oracle_E(hv, gv, m, n, N)) << a.name << " / " << b.name;
    for (const auto& w : E) {
      EXPECT_EQ(w.h_i, hv[w.i + m]);
      EXPECT_EQ(w.g_j, gv[w.j + n]);
    }
    const auto M = project_M(E), L = project_L(E);
    EXPECT_LE(M.size(), E.size());
    EXPECT_LE(L.size(), E.size());
  }
}

TEST(WitnessSetE, TranspositionAndShiftLaws) {
  testing::Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    SetSpec a = testing::random_spec(rng), b = testing::random_spec(rng);
    const std::size_t m = static_cast<std::size_t>(testing::uniform(rng, 0, 5));
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 0, 5));
    const std::size_t N = 25;
    auto E = pairs_of(witness_set_E(a.listing, b.listing, m, n, N));
    auto T = pairs_of(witness_set_E(b.listing, a.listing, n, m, N));
    for (auto& p : T) std::swap(p.first, p.second);
    std::sort(T.begin(), T.end());
    EXPECT_EQ(E, T);

    Listing sa = shift(a.listing, m), sb = shift(b.listing, n);
    EXPECT_EQ(E, pairs_of(witness_set_E(sa, sb, 0, 0, N)));
  }
}

TEST(Type2Search, EqualListingsHaveDiagonalCandidates) {
  Listing h = build_A(3).listing, g = h;
  const auto report = type2_search(h, g, 4, 4, 100);
  for (std::size_t m = 0; m <= 4; ++m) EXPECT_FALSE(report.cell(m, m).witness.has_value());
  EXPECT_FALSE(report.all_witnessed());
  EXPECT_TRUE(report.cell(0, 1).witness.has_value());
}

TEST(Type2Search, ShiftedSelfAgreement) {
  Listing h = builtin_harmonic().listing, g = shift(h, 5);
  const auto report = type2_search(h, g, 10, 10, 100);
  EXPECT_FALSE(report.cell(5, 0).witness.has_value());
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_FALSE(report.cell(5 + k, k).witness.has_value());
  // h and g both descend, so every shift agrees.
  EXPECT_FALSE(report.cell(0, 3).witness.has_value());
}

TEST(Type2Search, RecursivePairIsWitnessedEverywhere) {
  Listing a1 = build_A(1).listing, a2 = build_A(2).listing;
  const auto report = type2_search(a1, a2, 10, 10, 200);
  EXPECT_EQ(report.cells.size(), 121u);
  EXPECT_TRUE(report.all_witnessed());
}

TEST(Type2Search, MinimalWitnessMatchesBruteForce) {
  testing::Rng rng(19);
  for (int t = 0; t < 25; ++t) {
    SetSpec a = testing::random_spec(rng), b = testing::random_spec(rng);
    const std::size_t N = 20, mm = 3, nm = 3;
    const auto report = type2_search(a.listing, b.listing, mm, nm, N);
    const auto hv = values_of(a.listing, N + mm), gv = values_of(b.listing, N + nm);
    for (std::size_t m = 0; m <= mm; ++m) {
      for (std::size_t n = 0; n <= nm; ++n) {
        auto E = oracle_E(hv, gv, m, n, N);
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (const auto& p : E) {
          const auto key = [](const auto& q) { return std::make_tuple(std::max(q.first, q.second), q.first, q.second); };
          if (!best || key(p) < key(*best)) best = p;
        }
        const auto& cell = report.cell(m, n);
        EXPECT_EQ(cell.m, m);
        EXPECT_EQ(cell.n, n);
        ASSERT_EQ(cell.witness.has_value(), best.has_value()) << a.name << "/" << b.name << " " << m << "," << n;
        if (best) {
          EXPECT_EQ(std::make_pair(cell.witness->i, cell.witness->j), *best);
          EXPECT_EQ(cell.witness->h_i, hv[best->first + m]);
          EXPECT_EQ(cell.witness->g_j, gv[best->second + n]);
        }
      }
    }
  }
}

// Sound matches agree with h at every constructed length.
void expect_sound(const Listing& h, const MatchSuccess& ok) {
  Listing hh = h;
  for (std::size_t k = 1; k <= ok.values.size(); ++k) {
    Listing g = listing_from_values(ok.values);
    EXPECT_TRUE(agrees(prefix_coorder(hh, g, k))) << "length " << k;
  }
}

TEST(MatchListing, FiniteSetsRankMatch) {
  Listing h = listing_from_values({5, 1, 3});
  const auto r = match_listing(h, finite_listing({frac(1, 2), -7, 0}), 100, 10);
  ASSERT_TRUE(std::holds_alternative<MatchSuccess>(r));
  const auto& ok = std::get<MatchSuccess>(r);
  EXPECT_TRUE(ok.rank_matched);
  EXPECT_EQ(ok.values, (std::vector<Rational>{frac(1, 2), -7, 0}));
  expect_sound(h, ok);
}

TEST(MatchListing, DenseTargetFillsEveryGap) {
  for (std::size_t k : {5u, 10u, 20u, 30u}) {
    Listing h = builtin_harmonic().listing;
    const auto r = match_listing(h, rationals_in_interval(0, 1), 10 * k * k, k);
    ASSERT_TRUE(std::holds_alternative<MatchSuccess>(r)) << k;
    const auto& ok = std::get<MatchSuccess>(r);
    EXPECT_EQ(ok.values.size(), k);
    EXPECT_EQ(ok.drawn_per_step.size(), k);
    EXPECT_EQ(std::accumulate(ok.drawn_per_step.begin(), ok.drawn_per_step.end(), std::size_t{0}), ok.fuel_used);
    EXPECT_LE(ok.fuel_used, 10 * k * k);
    expect_sound(h, ok);
  }
}

TEST(MatchListing, DescendingIntoThirdsIsRefuted) {
  Listing h = builtin_harmonic().listing;
  const auto r = match_listing(h, builtin_thirds(), 100000, 20);
  ASSERT_TRUE(std::holds_alternative<MatchFailure>(r));
  const auto& f = std::get<MatchFailure>(r);
  EXPECT_EQ(f.kind, MatchFailureKind::GapEmpty);
  // The first pick must leave room below it; the next step finds (-inf, 0) empty.
  EXPECT_LE(f.step, 2u);
  ASSERT_EQ(f.partial.size(), f.step);
  ASSERT_TRUE(f.gap.upper.has_value());
  EXPECT_FALSE(f.gap.lower.has_value());
  EXPECT_FALSE(builtin_thirds().gap_oracle(f.gap));
}

TEST(MatchListing, FuelExhaustionIsInconclusive) {
  Listing h = builtin_harmonic().listing;
  const auto r = match_listing(h, rationals_in_interval(0, 1), 3, 20);
  ASSERT_TRUE(std::holds_alternative<MatchFailure>(r));
  EXPECT_EQ(std::get<MatchFailure>(r).kind, MatchFailureKind::FuelExhausted);
  EXPECT_EQ(std::get<MatchFailure>(r).fuel_used, 3u);
}

TEST(MatchListing, FiniteTargetTooSmall) {
  Listing h = builtin_harmonic().listing;
  const auto r = match_listing(h, finite_listing({1, 2}), 100, 5);
  ASSERT_TRUE(std::holds_alternative<MatchFailure>(r));
  EXPECT_EQ(std::get<MatchFailure>(r).kind, MatchFailureKind::GapEmpty);
}

TEST(MatchListing, SoundOnRandomInputs) {
  testing::Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    SetSpec a = testing::random_spec(rng);
    SetSpec b = testing::random_spec(rng);
    const auto r = match_listing(a.listing, b, 5000, 12);
    if (const auto* ok = std::get_if<MatchSuccess>(&r)) {
      expect_sound(a.listing, *ok);
    } else {
      const auto& f = std::get<MatchFailure>(r);
      if (f.kind == MatchFailureKind::GapEmpty && b.gap_oracle) EXPECT_FALSE(b.gap_oracle(f.gap)) << a.name << " -> " << b.name;
    }
  }
}

TEST(FiniteCoorder, Examples) {
  EXPECT_TRUE(finite_coorder({frac(1, 2), 3, 5}, {-1, 0, 7}));
  EXPECT_FALSE(finite_coorder({1}, {1, 2}));
  EXPECT_TRUE(finite_coorder({4, -1, frac(2, 3)}, {4, -1, frac(2, 3)}));
  EXPECT_TRUE(finite_coorder({}, {}));
  EXPECT_THROW(finite_coorder({1, 1}, {1, 2}), std::invalid_argument);
}

TEST(BruteForceOracle, Examples) {
  EXPECT_TRUE(brute_force_coorder_oracle({3}, {-9}));
  EXPECT_TRUE(brute_force_coorder_oracle({}, {}));
  EXPECT_FALSE(brute_force_coorder_oracle({}, {1}));
  std::vector<Rational> nine;
  for (int k = 0; k < 9; ++k) nine.emplace_back(k);
  EXPECT_THROW(brute_force_coorder_oracle(nine, nine), std::invalid_argument);
}

TEST(BruteForceOracle, AgreesWithDecisionOnSmallSubsets) {
  std::vector<std::vector<Rational>> subsets;
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<Rational> s;
    for (int k = 0; k < 5; ++k)
      if (mask & (1u << k)) s.emplace_back(k - 2);
    if (s.size() <= 4) subsets.push_back(s);
  }
  for (const auto& a : subsets)
    for (const auto& b : subsets) EXPECT_EQ(finite_coorder(a, b), brute_force_coorder_oracle(a, b));
}

}  // namespace
}  // namespace enumorder
