#include "enumorder/order_type.hpp"

#include <cctype>
#include <optional>

namespace enumorder {

OrderType OrderType::fin(std::uint64_t k) {
  OrderType d;
  d.kind = Kind::Fin;
  d.count = k;
  return d;
}

OrderType OrderType::omega() {
  OrderType d;
  d.kind = Kind::Omega;
  return d;
}

OrderType OrderType::omega_star() {
  OrderType d;
  d.kind = Kind::OmegaStar;
  return d;
}

OrderType OrderType::dense(bool left_endpoint, bool right_endpoint) {
  OrderType d;
  d.kind = Kind::Dense;
  d.left_endpoint = left_endpoint;
  d.right_endpoint = right_endpoint;
  return d;
}

OrderType OrderType::concat(std::vector<OrderType> blocks) {
  OrderType d;
  d.kind = Kind::Concat;
  d.blocks = std::move(blocks);
  return d;
}

namespace {

using Kind = OrderType::Kind;

void flatten_into(const OrderType& d, std::vector<OrderType>& out) {
  if (d.kind == Kind::Concat) {
    for (const auto& b : d.blocks) flatten_into(b, out);
  } else {
    out.push_back(d);
  }
}

// Rewrites the adjacent pair (x, y) if a law applies; the replacement may be
// zero, one or two blocks.
std::optional<std::vector<OrderType>> combine(const OrderType& x, const OrderType& y) {
  if (x.kind == Kind::Fin && x.count == 0) return std::vector<OrderType>{y};
  if (y.kind == Kind::Fin && y.count == 0) return std::vector<OrderType>{x};
  if (x.kind == Kind::Fin && y.kind == Kind::Fin)
    return std::vector<OrderType>{OrderType::fin(x.count + y.count)};
  if (x.kind == Kind::Fin && y.kind == Kind::Omega) return std::vector<OrderType>{y};
  if (x.kind == Kind::OmegaStar && y.kind == Kind::Fin) return std::vector<OrderType>{x};
  if (x.kind == Kind::Dense && y.kind == Kind::Dense && !(x.right_endpoint && y.left_endpoint))
    return std::vector<OrderType>{OrderType::dense(x.left_endpoint, y.right_endpoint)};
  if (x.kind == Kind::Fin && y.kind == Kind::Dense && !y.left_endpoint)
    return std::vector<OrderType>{OrderType::fin(x.count - 1), OrderType::dense(true, y.right_endpoint)};
  if (x.kind == Kind::Dense && !x.right_endpoint && y.kind == Kind::Fin)
    return std::vector<OrderType>{OrderType::dense(x.left_endpoint, true), OrderType::fin(y.count - 1)};
  return std::nullopt;
}

}  // namespace

OrderType normalize(const OrderType& d) {
  if (d.kind != Kind::Concat) return d;
  std::vector<OrderType> blocks;
  flatten_into(d, blocks);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (blocks[k].kind == Kind::Fin && blocks[k].count == 0 && blocks.size() > 1) {
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
      if (k + 1 < blocks.size()) {
        if (auto r = combine(blocks[k], blocks[k + 1])) {
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(k),
                       blocks.begin() + static_cast<std::ptrdiff_t>(k) + 2);
          blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(k), r->begin(), r->end());
          changed = true;
          break;
        }
      }
    }
  }

  if (blocks.empty()) return OrderType::fin(0);
  if (blocks.size() == 1) return blocks.front();
  return OrderType::concat(std::move(blocks));
}

bool isomorphic(const OrderType& a, const OrderType& b) { return normalize(a) == normalize(b); }

bool is_infinite(const OrderType& d) {
  switch (d.kind) {
    case Kind::Fin:
      return false;
    case Kind::Omega:
    case Kind::OmegaStar:
    case Kind::Dense:
      return true;
    case Kind::Concat:
      for (const auto& b : d.blocks)
        if (is_infinite(b)) return true;
      return false;
  }
  return false;
}

std::string to_string(const OrderType& d) {
  switch (d.kind) {
    case Kind::Fin:
      return "FIN(" + std::to_string(d.count) + ")";
    case Kind::Omega:
      return "W";
    case Kind::OmegaStar:
      return "W*";
    case Kind::Dense:
      return std::string("Q") + (d.left_endpoint ? "[" : "(") + "a,b" + (d.right_endpoint ? "]" : ")");
    case Kind::Concat: {
      std::string s;
      for (std::size_t k = 0; k < d.blocks.size(); ++k) {
        if (k > 0) s += " + ";
        s += to_string(d.blocks[k]);
      }
      return s;
    }
  }
  return {};
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

OrderType parse_block(const std::string& s) {
  if (s == "W") return OrderType::omega();
  if (s == "W*") return OrderType::omega_star();
  if (s.size() == 6 && s[0] == 'Q' && s.substr(2, 3) == "a,b" && (s[1] == '[' || s[1] == '(') &&
      (s[5] == ']' || s[5] == ')'))
    return OrderType::dense(s[1] == '[', s[5] == ']');
  if (s.size() > 5 && s.rfind("FIN(", 0) == 0 && s.back() == ')') {
    const std::string digits = s.substr(4, s.size() - 5);
    if (!digits.empty() && digits.size() < 19 &&
        digits.find_first_not_of("0123456789") == std::string::npos)
      return OrderType::fin(std::stoull(digits));
  }
  throw OrderTypeSyntaxError("order type: cannot parse block '" + s + "'");
}

}  // namespace

OrderType parse_order_type(std::string_view text) {
  const std::string s = strip_spaces(text);
  std::vector<OrderType> blocks;
  std::size_t start = 0;
  while (true) {
    const auto plus = s.find('+', start);
    blocks.push_back(parse_block(s.substr(start, plus - start)));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (blocks.size() == 1) return blocks.front();
  return OrderType::concat(std::move(blocks));
}

std::string to_string(BlockDirection dir) { return dir == BlockDirection::Asc ? "ASC" : "DESC"; }

std::string to_string(const std::vector<BlockDirection>& signature) {
  std::string s = "[";
  for (std::size_t k = 0; k < signature.size(); ++k) {
    if (k > 0) s += ",";
    s += to_string(signature[k]);
  }
  return s + "]";
}

std::vector<BlockDirection> block_signature(const OrderType& d) {
  const OrderType n = normalize(d);
  std::vector<OrderType> blocks;
  flatten_into(n, blocks);
  std::vector<BlockDirection> sig;
  for (const auto& b : blocks) {
    if (b.kind == Kind::Omega) {
      sig.push_back(BlockDirection::Asc);
    } else if (b.kind == Kind::OmegaStar) {
      sig.push_back(BlockDirection::Desc);
    } else {
      throw UnsupportedShape("block signature: unsupported block " + to_string(b) + " in " + to_string(n));
    }
  }
  return sig;
}

}  // namespace enumorder
