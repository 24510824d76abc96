#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "enumorder/rational.hpp"

namespace enumorder {

/// Thrown when a listing ends before the requested index.
class ListingExhausted : public std::out_of_range {
 public:
  ListingExhausted(std::size_t requested, std::size_t available);

  std::size_t requested() const { return requested_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t requested_;
  std::size_t available_;
};

/// A replayable injective stream of rationals with a memoized prefix.
///
/// The raw generator may repeat itself; repeats are skipped so that the
/// memoized prefix is always pairwise distinct (first occurrence wins). A
/// generator that yields `kRepeatBudget` repeats in a row is treated as
/// finished.
///
/// Copies are deep: the generator state and the memo are duplicated, so a
/// copy can be advanced on another thread independently of the original.
class Listing {
 public:
  using RawStream = std::function<std::optional<Rational>()>;

  static constexpr std::size_t kRepeatBudget = 10000;

  Listing() = default;
  explicit Listing(RawStream raw);

  /// Memoizes up to `count` values; returns how many are available (<= count).
  std::size_t produce(std::size_t count);
  bool has(std::size_t index) { return produce(index + 1) > index; }

  const Rational& at(std::size_t index);
  std::span<const Rational> prefix(std::size_t count);
  std::span<const Rational> produced() const { return memo_; }

  /// True once the raw generator has ended; produced() is then the whole range.
  bool exhausted() const { return done_; }

 private:
  RawStream raw_;
  std::vector<Rational> memo_;
  std::set<Rational> seen_;
  bool done_ = true;
};

Listing listing_from_values(std::vector<Rational> values);

/// h'(i) = h(i + m).
Listing shift(Listing h, std::size_t m);

/// Round-robin over the sources; exhausted sources drop out.
Listing round_robin(std::vector<Listing> sources);

}  // namespace enumorder
