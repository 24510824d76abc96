#include "enumorder/listing.hpp"

namespace enumorder {

ListingExhausted::ListingExhausted(std::size_t requested, std::size_t available)
    : std::out_of_range("listing exhausted: requested " + std::to_string(requested) +
                        " values, only " + std::to_string(available) + " exist"),
      requested_(requested),
      available_(available) {}

Listing::Listing(RawStream raw) : raw_(std::move(raw)), done_(!raw_) {}

std::size_t Listing::produce(std::size_t count) {
  std::size_t repeats = 0;
  while (memo_.size() < count && !done_) {
    std::optional<Rational> next = raw_();
    if (!next) {
      done_ = true;
      break;
    }
    if (seen_.insert(*next).second) {
      memo_.push_back(std::move(*next));
      repeats = 0;
    } else if (++repeats >= kRepeatBudget) {
      done_ = true;
    }
  }
  return std::min(count, memo_.size());
}

const Rational& Listing::at(std::size_t index) {
  if (!has(index)) throw ListingExhausted(index + 1, memo_.size());
  return memo_[index];
}

std::span<const Rational> Listing::prefix(std::size_t count) {
  if (produce(count) < count) throw ListingExhausted(count, memo_.size());
  return std::span<const Rational>(memo_).first(count);
}

Listing listing_from_values(std::vector<Rational> values) {
  return Listing([values = std::move(values), k = std::size_t{0}]() mutable -> std::optional<Rational> {
    if (k >= values.size()) return std::nullopt;
    return values[k++];
  });
}

Listing shift(Listing h, std::size_t m) {
  return Listing([h = std::move(h), k = m]() mutable -> std::optional<Rational> {
    if (!h.has(k)) return std::nullopt;
    return h.at(k++);
  });
}

Listing round_robin(std::vector<Listing> sources) {
  struct State {
    std::vector<Listing> sources;
    std::vector<std::size_t> cursor;
    std::size_t turn = 0;
  };
  State st{std::move(sources), {}, 0};
  st.cursor.assign(st.sources.size(), 0);
  return Listing([st = std::move(st)]() mutable -> std::optional<Rational> {
    for (std::size_t tries = 0; tries < st.sources.size(); ++tries) {
      const std::size_t s = st.turn;
      st.turn = (st.turn + 1) % st.sources.size();
      if (st.sources[s].has(st.cursor[s])) return st.sources[s].at(st.cursor[s]++);
    }
    return std::nullopt;
  });
}

}  // namespace enumorder
