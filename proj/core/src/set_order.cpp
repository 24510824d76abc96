#include "enumorder/set_order.hpp"

namespace enumorder {

namespace {

std::optional<std::vector<BlockDirection>> try_signature(const SetSpec& s) {
  if (!s.descriptor) return std::nullopt;
  try {
    return block_signature(*s.descriptor);
  } catch (const UnsupportedShape&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<BlockDirection> block_signature(const SetSpec& spec) {
  if (!spec.descriptor) throw UnsupportedShape("block signature: " + spec.name + " has no order-type descriptor");
  return block_signature(*spec.descriptor);
}

Refutation refute_coorder(const SetSpec& a, const SetSpec& b) {
  if (!a.descriptor || !b.descriptor) return {};
  if (isomorphic(*a.descriptor, *b.descriptor)) return {};
  return {Refutation::Verdict::Refuted,
          "order type " + to_string(normalize(*a.descriptor)) + " != " + to_string(normalize(*b.descriptor))};
}

Refutation refute_type2(const SetSpec& a, const SetSpec& b) {
  const auto sa = try_signature(a);
  const auto sb = try_signature(b);
  if (!sa || !sb || *sa == *sb) return {};
  return {Refutation::Verdict::Refuted, "signature " + to_string(*sa) + " != " + to_string(*sb)};
}

}  // namespace enumorder
