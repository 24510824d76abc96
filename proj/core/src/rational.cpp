#include "enumorder/rational.hpp"

#include <cctype>
#include <ostream>

namespace enumorder {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw ZeroDenominator();
  canonicalize();
}

void Rational::canonicalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g < 0) g = -g;
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  // Denominators are positive, so cross-multiplication preserves order.
  const BigInt lhs = x.num_ * y.den_;
  const int c = lhs.compare(y.num_ * x.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& y) {
  num_ = num_ * y.den_ + y.num_ * den_;
  den_ *= y.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& y) {
  num_ = num_ * y.den_ - y.num_ * den_;
  den_ *= y.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& y) {
  num_ *= y.num_;
  den_ *= y.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& y) {
  if (y.num_ == 0) throw DivisionByZero();
  num_ *= y.den_;
  den_ *= y.num_;
  canonicalize();
  return *this;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

Rational make_rational(unsigned s, const BigInt& a, const BigInt& b) {
  if (b == 0) throw ZeroDenominator();
  Rational r(a, b);
  return (s % 2 == 1) ? -r : r;
}

Order compare(const Rational& x, const Rational& y) {
  const auto c = x <=> y;
  if (c < 0) return Order::LT;
  if (c > 0) return Order::GT;
  return Order::EQ;
}

Rational add(const Rational& x, const Rational& y) { return x + y; }
Rational sub(const Rational& x, const Rational& y) { return x - y; }
Rational mul(const Rational& x, const Rational& y) { return x * y; }
Rational div(const Rational& x, const Rational& y) { return x / y; }

Rational pow_nonneg(const Rational& base, std::uint32_t exponent) {
  return Rational(boost::multiprecision::pow(base.numerator(), exponent),
                  boost::multiprecision::pow(base.denominator(), exponent));
}

BigInt floor(const Rational& x) {
  const BigInt& p = x.numerator();
  const BigInt& q = x.denominator();
  if (p >= 0) return p / q;
  return -((-p + q - 1) / q);
}

BigInt ceil(const Rational& x) { return -floor(-x); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw RationalSyntaxError(text);
  const BigInt d{std::string(den)};
  if (d == 0) throw ZeroDenominator();
  return make_rational(negative ? 1 : 0, BigInt(std::string(num)), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace enumorder
