#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sexa {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision signed rational, always stored reduced with a positive
// denominator. Zero is 0/1.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  ExactRational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)
  // Throws DivisionByZero when `denominator` is zero.
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  ExactRational abs() const;
  // Largest integer not greater than the value.
  BigInt floor() const;

  // "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  friend ExactRational operator+(const ExactRational& x, const ExactRational& y);
  friend ExactRational operator-(const ExactRational& x, const ExactRational& y);
  friend ExactRational operator*(const ExactRational& x, const ExactRational& y);
  friend ExactRational operator/(const ExactRational& x, const ExactRational& y);
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& x, const ExactRational& y) {
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& x, const ExactRational& y);

 private:
  explicit ExactRational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_;
};

enum class ArithOp { add, sub, mul, div };

// Parses `[-]digits[.digits][(e|E)[-]digits]` exactly, with no binary
// floating-point intermediate. Throws ParseError naming the offending position.
ExactRational rat_parse(std::string_view text);

ExactRational rat_arith(ArithOp op, const ExactRational& x, const ExactRational& y);

// base^exponent for any signed exponent; base must be nonzero when exponent < 0.
ExactRational pow(const ExactRational& base, std::int64_t exponent);

BigInt pow(const BigInt& base, unsigned exponent);

struct IntSqrt {
  BigInt floor_root;
  bool is_perfect = false;
};

// floor_root^2 <= n < (floor_root+1)^2. Throws DomainError for negative n.
IntSqrt int_sqrt(const BigInt& n);

}  // namespace sexa
