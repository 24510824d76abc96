#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "enumorder/listing.hpp"
#include "enumorder/rational.hpp"
#include "enumorder/set_spec.hpp"

namespace enumorder {

/// An index pair on which two listings disagree about relative order.
/// Indices are the unshifted (i, j); the values are h(i+m), h(j+m),
/// g(i+n), g(j+n) for whichever shift produced the pair.
struct WitnessPair {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational h_i, h_j, g_i, g_j;

  bool operator==(const WitnessPair&) const = default;
};

struct ShiftPair {
  std::size_t m = 0;
  std::size_t n = 0;

  bool operator==(const ShiftPair&) const = default;
};

struct Agree {
  std::size_t prefix = 0;
};

struct Disagree {
  WitnessPair witness;
};

using CoorderVerdict = std::variant<Agree, Disagree>;

inline bool agrees(const CoorderVerdict& v) { return std::holds_alternative<Agree>(v); }

/// output[k] = #{t < N : h(t) < h(k)}. Throws ListingExhausted.
std::vector<std::size_t> order_pattern(Listing& h, std::size_t N);

/// Agree(N) iff the first N values of h and g have the same order pattern;
/// otherwise the first violating pair in (j, i) order with i < j.
CoorderVerdict prefix_coorder(Listing& h, Listing& g, std::size_t N);

/// All ordered (i, j), i != j, i, j < N, with h(i+m) < h(j+m) and
/// g(i+n) > g(j+n), in lexicographic order.
std::vector<WitnessPair> witness_set_E(Listing& h, Listing& g, std::size_t m, std::size_t n, std::size_t N);

std::set<std::size_t> project_M(const std::vector<WitnessPair>& E);
std::set<std::size_t> project_L(const std::vector<WitnessPair>& E);

struct ShiftCell {
  std::size_t m = 0;
  std::size_t n = 0;
  /// Absent: no witness among indices < N. That makes (m, n) a type-2
  /// candidate, not a proof of type-2 co-order.
  std::optional<WitnessPair> witness;
};

struct WitnessReport {
  std::size_t m_max = 0;
  std::size_t n_max = 0;
  std::size_t prefix = 0;
  std::vector<ShiftCell> cells;  // ordered by (m, n)

  const ShiftCell& cell(std::size_t m, std::size_t n) const { return cells.at(m * (n_max + 1) + n); }
  bool all_witnessed() const;
};

/// For every m <= m_max, n <= n_max: the minimal witness in E_{m,n} over
/// indices < N (smallest max(i, j), then lexicographic), or none.
WitnessReport type2_search(Listing& h, Listing& g, std::size_t m_max, std::size_t n_max, std::size_t N);

enum class MatchFailureKind { GapEmpty, FuelExhausted };

struct MatchSuccess {
  Listing listing;
  std::vector<Rational> values;
  /// Fresh elements of B drawn during each step.
  std::vector<std::size_t> drawn_per_step;
  std::size_t fuel_used = 0;
  bool rank_matched = false;
};

struct MatchFailure {
  MatchFailureKind kind = MatchFailureKind::FuelExhausted;
  std::size_t step = 0;
  OpenGap gap;
  std::vector<Rational> partial;
  std::size_t fuel_used = 0;
};

using MatchResult = std::variant<MatchSuccess, MatchFailure>;

/// Builds g with the same order pattern as h on the first `prefix` values
/// (or all of h, if shorter), choosing each g(k) inside the gap that h(k)'s
/// rank determines among the values chosen so far. `fuel` bounds the number
/// of fresh elements drawn from B's listing.
///
/// GapEmpty: B's oracle (or B's complete finite listing) shows the gap the
/// greedy reached holds no element of B. Picks keep members of B on both
/// sides of each choice where possible, so for a monotone h against a B
/// without room on that side (descending h into a well-ordered B) this is
/// the expected refutation. It is always about this greedy run; a finite
/// prefix alone never rules out an infinite B. Once a pick had to leave one
/// side of its gap empty, later empty gaps report FuelExhausted instead.
/// FuelExhausted is inconclusive.
MatchResult match_listing(Listing& h, const SetSpec& B, std::size_t fuel, std::size_t prefix);

/// Two finite sets are co-order iff they have the same size. Throws
/// std::invalid_argument on duplicates.
bool finite_coorder(const std::vector<Rational>& a, const std::vector<Rational>& b);

inline constexpr std::size_t kBruteForceCap = 8;

/// Searches all orderings of both lists for a common order pattern.
/// Independent check for finite_coorder; sizes are capped at kBruteForceCap.
bool brute_force_coorder_oracle(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace enumorder
