#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace enumorder {

using BigInt = boost::multiprecision::cpp_int;

class ZeroDenominator : public std::domain_error {
 public:
  ZeroDenominator() : std::domain_error("rational: zero denominator") {}
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("rational: division by zero") {}
};

class RationalSyntaxError : public std::invalid_argument {
 public:
  explicit RationalSyntaxError(std::string_view text)
      : std::invalid_argument("rational: cannot parse '" + std::string(text) + "'") {}
};

/// Exact signed fraction, always held in lowest terms with a positive
/// denominator. Equality is therefore field-wise.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  /// Throws ZeroDenominator when den == 0.
  Rational(BigInt num, BigInt den);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  Rational operator-() const;
  Rational& operator+=(const Rational& y);
  Rational& operator-=(const Rational& y);
  Rational& operator*=(const Rational& y);
  Rational& operator/=(const Rational& y);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

 private:
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

/// (-1)^s * a / b in canonical form.
Rational make_rational(unsigned s, const BigInt& a, const BigInt& b);

enum class Order { LT, EQ, GT };
Order compare(const Rational& x, const Rational& y);

Rational add(const Rational& x, const Rational& y);
Rational sub(const Rational& x, const Rational& y);
Rational mul(const Rational& x, const Rational& y);
Rational div(const Rational& x, const Rational& y);
Rational pow_nonneg(const Rational& base, std::uint32_t exponent);

BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

/// Inverse of Rational::str. Accepts an optional leading '-' and an
/// optional "/q" part; surrounding whitespace is ignored.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace enumorder
