#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enumorder/listing.hpp"
#include "enumorder/rational.hpp"

// A closed-form sequence language in two variables: the family index `i` and
// the position `n` (n >= 1), with parity / threshold guards.
//
//   file   := defn (";" defn)*
//   defn   := "case" guard ":" expr | expr
//   guard  := "i" ("odd"|"even") | "n" ("<"|">=") int | "otherwise"
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := ("-")? atom ("^" int)?
//   atom   := int | "n" | "i" | "(" expr ")"
//
// '#' starts a comment that runs to the end of the line.
namespace enumorder::seqlang {

enum class BinOp { Add, Sub, Mul, Div };

struct Guard {
  enum class Kind { IOdd, IEven, NLess, NAtLeast, Otherwise };
  Kind kind = Kind::Otherwise;
  BigInt bound;  // NLess / NAtLeast

  bool operator==(const Guard&) const = default;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Int, VarN, VarI, Neg, Binary, Pow, Piecewise };

  Kind kind = Kind::Int;
  BigInt value;                // Int
  BinOp op = BinOp::Add;       // Binary
  std::uint32_t exponent = 0;  // Pow
  NodePtr lhs;                 // Binary, Neg operand, Pow base
  NodePtr rhs;                 // Binary
  std::vector<std::pair<Guard, NodePtr>> cases;  // Piecewise
};

NodePtr make_int(BigInt value);
NodePtr make_var_n();
NodePtr make_var_i();
NodePtr make_neg(NodePtr operand);
NodePtr make_binary(BinOp op, NodePtr lhs, NodePtr rhs);
NodePtr make_pow(NodePtr base, std::uint32_t exponent);
/// Throws NonTotalPiecewise unless the guards cover every (i, n).
NodePtr make_piecewise(std::vector<std::pair<Guard, NodePtr>> cases);

inline constexpr std::uint32_t kMaxExponent = 4096;

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class NonTotalPiecewise : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EvalDivisionByZero : public std::domain_error {
 public:
  EvalDivisionByZero(BigInt i, std::int64_t n);

  const BigInt& i() const { return i_; }
  std::int64_t n() const { return n_; }

 private:
  BigInt i_;
  std::int64_t n_;
};

/// Parsed, immutable sequence definition.
class SequenceExpr {
 public:
  explicit SequenceExpr(NodePtr root) : root_(std::move(root)) {}
  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }

 private:
  NodePtr root_;
};

SequenceExpr parse(std::string_view text);
SequenceExpr parse_file(const std::filesystem::path& path);

/// Exact value at (i, n); n must be >= 1. The first matching guard wins.
Rational eval(const SequenceExpr& expr, const BigInt& i, std::int64_t n);

/// Listing k -> eval(expr, i, k + 1), repeats skipped.
Listing to_listing(const SequenceExpr& expr, const BigInt& i);

/// Re-parseable text; print(parse(t)) parses back to the same tree.
std::string print(const SequenceExpr& expr);

bool same_structure(const Node& a, const Node& b);

}  // namespace enumorder::seqlang
