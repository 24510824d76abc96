#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace enumorder {

/// Symbolic linear-order shape: a finite chain, omega, omega*, a dense
/// block with or without endpoints, or a concatenation of those.
struct OrderType {
  enum class Kind { Fin, Omega, OmegaStar, Dense, Concat };

  Kind kind = Kind::Fin;
  std::uint64_t count = 0;      // Fin
  bool left_endpoint = false;   // Dense
  bool right_endpoint = false;  // Dense
  std::vector<OrderType> blocks;  // Concat

  static OrderType fin(std::uint64_t k);
  static OrderType omega();
  static OrderType omega_star();
  static OrderType dense(bool left_endpoint, bool right_endpoint);
  static OrderType concat(std::vector<OrderType> blocks);

  bool operator==(const OrderType&) const = default;
};

class OrderTypeSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical form: no nested Concat, no Fin(0), adjacent finite blocks merged,
/// single-block Concat unwrapped, and the absorption laws
///   n + w = w,  w* + n = w*,  1 + Q(.. = Q[..,  ..) + 1 = ..],
///   Q(..) + Q(..) = Q(..) when the seam has at most one endpoint.
/// Idempotent.
OrderType normalize(const OrderType& d);

/// Structural equality of normal forms.
bool isomorphic(const OrderType& a, const OrderType& b);

bool is_infinite(const OrderType& d);

/// "FIN(3)", "W", "W*", "Q[a,b]" / "Q(a,b)" / ..., concatenation joined by " + ".
std::string to_string(const OrderType& d);
OrderType parse_order_type(std::string_view text);

enum class BlockDirection { Asc, Desc };

std::string to_string(BlockDirection dir);
std::string to_string(const std::vector<BlockDirection>& signature);

/// ASC per omega block, DESC per omega* block. Throws UnsupportedShape for
/// anything that is not a concatenation of omega / omega* blocks.
std::vector<BlockDirection> block_signature(const OrderType& d);

}  // namespace enumorder
