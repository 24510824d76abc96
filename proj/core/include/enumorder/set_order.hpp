#pragma once

#include <string>
#include <vector>

#include "enumorder/order_type.hpp"
#include "enumorder/set_spec.hpp"

namespace enumorder {

/// Block signature of the set's declared descriptor. Throws UnsupportedShape
/// when the set has no descriptor or it is not a concatenation of
/// omega / omega* blocks.
std::vector<BlockDirection> block_signature(const SetSpec& spec);

struct Refutation {
  enum class Verdict { Refuted, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::string reason;

  bool refuted() const { return verdict == Verdict::Refuted; }
};

/// Co-order listings induce an order isomorphism of the two sets, so
/// non-isomorphic descriptors refute co-order.
Refutation refute_coorder(const SetSpec& a, const SetSpec& b);

/// Finite edits leave the omega / omega* block signature unchanged, so
/// differing signatures refute type-2 co-order. Anything else is Unknown.
Refutation refute_type2(const SetSpec& a, const SetSpec& b);

}  // namespace enumorder
