#include "enumorder/seqlang.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace enumorder::seqlang {

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error([&] {
        std::string msg = "syntax error at offset " + std::to_string(offset) + ": found " + found;
        if (!expected.empty()) {
          msg += ", expected one of:";
          for (const auto& e : expected) msg += " " + e;
        }
        return msg;
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

EvalDivisionByZero::EvalDivisionByZero(BigInt i, std::int64_t n)
    : std::domain_error("division by zero evaluating at i=" + i.str() + ", n=" + std::to_string(n)),
      i_(std::move(i)),
      n_(n) {}

NodePtr make_int(BigInt value) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Int;
  node->value = std::move(value);
  return node;
}

NodePtr make_var_n() {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::VarN;
  return node;
}

NodePtr make_var_i() {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::VarI;
  return node;
}

NodePtr make_neg(NodePtr operand) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Neg;
  node->lhs = std::move(operand);
  return node;
}

NodePtr make_binary(BinOp op, NodePtr lhs, NodePtr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Binary;
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

NodePtr make_pow(NodePtr base, std::uint32_t exponent) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Pow;
  node->lhs = std::move(base);
  node->exponent = exponent;
  return node;
}

namespace {

bool covers_everything(const std::vector<std::pair<Guard, NodePtr>>& cases) {
  bool odd = false;
  bool even = false;
  std::optional<BigInt> max_less;      // n < c covers n < c
  std::optional<BigInt> min_at_least;  // n >= d covers n >= d
  for (const auto& [g, _] : cases) {
    switch (g.kind) {
      case Guard::Kind::Otherwise:
        return true;
      case Guard::Kind::IOdd:
        odd = true;
        break;
      case Guard::Kind::IEven:
        even = true;
        break;
      case Guard::Kind::NLess:
        if (!max_less || g.bound > *max_less) max_less = g.bound;
        break;
      case Guard::Kind::NAtLeast:
        if (!min_at_least || g.bound < *min_at_least) min_at_least = g.bound;
        break;
    }
  }
  if (odd && even) return true;
  // n ranges over n >= 1, so "n >= 1" alone is total too.
  if (min_at_least && *min_at_least <= 1) return true;
  return max_less && min_at_least && *min_at_least <= *max_less;
}

}  // namespace

NodePtr make_piecewise(std::vector<std::pair<Guard, NodePtr>> cases) {
  if (!covers_everything(cases)) throw NonTotalPiecewise("piecewise definition does not cover every (i, n)");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Piecewise;
  node->cases = std::move(cases);
  return node;
}

namespace {

struct Token {
  enum class Kind { Int, Word, Symbol, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (true) {
    while (k < src.size()) {
      const auto c = static_cast<unsigned char>(src[k]);
      if (std::isspace(c)) {
        ++k;
      } else if (c == '#') {
        while (k < src.size() && src[k] != '\n') ++k;
      } else {
        break;
      }
    }
    if (k >= src.size()) break;
    const std::size_t start = k;
    const auto c = static_cast<unsigned char>(src[k]);
    if (std::isdigit(c)) {
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
      out.push_back({Token::Kind::Int, std::string(src.substr(start, k - start)), start});
    } else if (std::isalpha(c)) {
      while (k < src.size() && std::isalpha(static_cast<unsigned char>(src[k]))) ++k;
      out.push_back({Token::Kind::Word, std::string(src.substr(start, k - start)), start});
    } else if (src.substr(k, 2) == ">=") {
      k += 2;
      out.push_back({Token::Kind::Symbol, ">=", start});
    } else {
      ++k;
      out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), start});
    }
  }
  out.push_back({Token::Kind::End, "end of input", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  NodePtr parse_file() {
    std::vector<std::pair<Guard, NodePtr>> cases;
    bool guarded = false;
    do {
      if (accept_word("case")) {
        guarded = true;
        Guard g = parse_guard();
        expect_symbol(":");
        cases.emplace_back(std::move(g), parse_expr());
      } else {
        cases.emplace_back(Guard{}, parse_expr());
      }
    } while (accept_symbol(";"));
    if (peek().kind != Token::Kind::End) fail();
    if (cases.size() == 1 && !guarded) return cases.front().second;
    return make_piecewise(std::move(cases));
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  void consume() {
    ++pos_;
    expected_.clear();
  }

  [[noreturn]] void fail() const {
    std::vector<std::string> expected = expected_;
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    const std::string found = peek().kind == Token::Kind::End ? peek().text : "'" + peek().text + "'";
    throw SyntaxError(peek().offset, std::move(expected), found);
  }

  bool accept_symbol(const char* s) {
    if (peek().kind == Token::Kind::Symbol && peek().text == s) {
      consume();
      return true;
    }
    expected_.push_back(std::string("'") + s + "'");
    return false;
  }

  bool accept_word(const char* w) {
    if (peek().kind == Token::Kind::Word && peek().text == w) {
      consume();
      return true;
    }
    expected_.push_back(std::string("'") + w + "'");
    return false;
  }

  void expect_symbol(const char* s) {
    if (!accept_symbol(s)) fail();
  }

  BigInt expect_int() {
    if (peek().kind != Token::Kind::Int) {
      expected_.push_back("integer");
      fail();
    }
    BigInt v(peek().text);
    consume();
    return v;
  }

  Guard parse_guard() {
    Guard g;
    if (accept_word("otherwise")) {
      g.kind = Guard::Kind::Otherwise;
    } else if (accept_word("i")) {
      if (accept_word("odd")) {
        g.kind = Guard::Kind::IOdd;
      } else if (accept_word("even")) {
        g.kind = Guard::Kind::IEven;
      } else {
        fail();
      }
    } else if (accept_word("n")) {
      if (accept_symbol("<")) {
        g.kind = Guard::Kind::NLess;
      } else if (accept_symbol(">=")) {
        g.kind = Guard::Kind::NAtLeast;
      } else {
        fail();
      }
      g.bound = expect_int();
    } else {
      fail();
    }
    return g;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (true) {
      if (accept_symbol("+")) {
        lhs = make_binary(BinOp::Add, lhs, parse_term());
      } else if (accept_symbol("-")) {
        lhs = make_binary(BinOp::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (true) {
      if (accept_symbol("*")) {
        lhs = make_binary(BinOp::Mul, lhs, parse_factor());
      } else if (accept_symbol("/")) {
        lhs = make_binary(BinOp::Div, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    const bool negate = accept_symbol("-");
    NodePtr node = parse_atom();
    if (accept_symbol("^")) {
      const std::size_t at = peek().offset;
      const BigInt e = expect_int();
      if (e > kMaxExponent)
        throw SyntaxError(at, {"integer <= " + std::to_string(kMaxExponent)}, "exponent " + e.str());
      node = make_pow(node, static_cast<std::uint32_t>(e));
    }
    return negate ? make_neg(node) : node;
  }

  NodePtr parse_atom() {
    if (peek().kind == Token::Kind::Int) return make_int(expect_int());
    if (accept_word("n")) return make_var_n();
    if (accept_word("i")) return make_var_i();
    if (accept_symbol("(")) {
      NodePtr inner = parse_expr();
      expect_symbol(")");
      return inner;
    }
    expected_.push_back("integer");
    fail();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> expected_;
};

bool guard_matches(const Guard& g, const BigInt& i, std::int64_t n) {
  switch (g.kind) {
    case Guard::Kind::IOdd:
      return i % 2 != 0;
    case Guard::Kind::IEven:
      return i % 2 == 0;
    case Guard::Kind::NLess:
      return BigInt(n) < g.bound;
    case Guard::Kind::NAtLeast:
      return BigInt(n) >= g.bound;
    case Guard::Kind::Otherwise:
      return true;
  }
  return false;
}

Rational eval_node(const Node& node, const BigInt& i, std::int64_t n) {
  switch (node.kind) {
    case Node::Kind::Int:
      return Rational(node.value);
    case Node::Kind::VarN:
      return Rational(n);
    case Node::Kind::VarI:
      return Rational(i);
    case Node::Kind::Neg:
      return -eval_node(*node.lhs, i, n);
    case Node::Kind::Pow:
      return pow_nonneg(eval_node(*node.lhs, i, n), node.exponent);
    case Node::Kind::Binary: {
      const Rational l = eval_node(*node.lhs, i, n);
      const Rational r = eval_node(*node.rhs, i, n);
      switch (node.op) {
        case BinOp::Add:
          return l + r;
        case BinOp::Sub:
          return l - r;
        case BinOp::Mul:
          return l * r;
        case BinOp::Div:
          if (r.sign() == 0) throw EvalDivisionByZero(i, n);
          return l / r;
      }
      break;
    }
    case Node::Kind::Piecewise:
      for (const auto& [g, body] : node.cases)
        if (guard_matches(g, i, n)) return eval_node(*body, i, n);
      break;
  }
  throw std::logic_error("seqlang: malformed expression tree");
}

int precedence(const Node& node) {
  switch (node.kind) {
    case Node::Kind::Binary:
      return (node.op == BinOp::Add || node.op == BinOp::Sub) ? 1 : 2;
    case Node::Kind::Neg:
      return 3;
    case Node::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string print_node(const Node& node);

std::string print_atom(const Node& node) {
  const std::string s = print_node(node);
  return precedence(node) == 5 ? s : "(" + s + ")";
}

std::string print_guard(const Guard& g) {
  switch (g.kind) {
    case Guard::Kind::IOdd:
      return "i odd";
    case Guard::Kind::IEven:
      return "i even";
    case Guard::Kind::NLess:
      return "n < " + g.bound.str();
    case Guard::Kind::NAtLeast:
      return "n >= " + g.bound.str();
    case Guard::Kind::Otherwise:
      return "otherwise";
  }
  return {};
}

std::string print_node(const Node& node) {
  switch (node.kind) {
    case Node::Kind::Int:
      return node.value.str();
    case Node::Kind::VarN:
      return "n";
    case Node::Kind::VarI:
      return "i";
    case Node::Kind::Neg:
      return "-" + (node.lhs->kind == Node::Kind::Pow ? print_node(*node.lhs) : print_atom(*node.lhs));
    case Node::Kind::Pow:
      return print_atom(*node.lhs) + "^" + std::to_string(node.exponent);
    case Node::Kind::Binary: {
      static constexpr const char* kOps[] = {" + ", " - ", " * ", " / "};
      const int p = precedence(node);
      std::string l = print_node(*node.lhs);
      if (precedence(*node.lhs) < p) l = "(" + l + ")";
      std::string r = print_node(*node.rhs);
      if (precedence(*node.rhs) <= p) r = "(" + r + ")";
      return l + kOps[static_cast<int>(node.op)] + r;
    }
    case Node::Kind::Piecewise: {
      std::string s;
      for (std::size_t k = 0; k < node.cases.size(); ++k) {
        if (k > 0) s += " ; ";
        s += "case " + print_guard(node.cases[k].first) + ": " + print_node(*node.cases[k].second);
      }
      return s;
    }
  }
  return {};
}

}  // namespace

SequenceExpr parse(std::string_view text) { return SequenceExpr(Parser(text).parse_file()); }

SequenceExpr parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sequence file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Rational eval(const SequenceExpr& expr, const BigInt& i, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("seqlang: n must be >= 1, got " + std::to_string(n));
  return eval_node(expr.root(), i, n);
}

Listing to_listing(const SequenceExpr& expr, const BigInt& i) {
  return Listing([expr, i, n = std::int64_t{1}]() mutable -> std::optional<Rational> { return eval(expr, i, n++); });
}

std::string print(const SequenceExpr& expr) { return print_node(expr.root()); }

bool same_structure(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Node::Kind::Int:
      return a.value == b.value;
    case Node::Kind::VarN:
    case Node::Kind::VarI:
      return true;
    case Node::Kind::Neg:
      return same_structure(*a.lhs, *b.lhs);
    case Node::Kind::Pow:
      return a.exponent == b.exponent && same_structure(*a.lhs, *b.lhs);
    case Node::Kind::Binary:
      return a.op == b.op && same_structure(*a.lhs, *b.lhs) && same_structure(*a.rhs, *b.rhs);
    case Node::Kind::Piecewise:
      if (a.cases.size() != b.cases.size()) return false;
      for (std::size_t k = 0; k < a.cases.size(); ++k)
        if (!(a.cases[k].first == b.cases[k].first) || !same_structure(*a.cases[k].second, *b.cases[k].second))
          return false;
      return true;
  }
  return false;
}

}  // namespace enumorder::seqlang
