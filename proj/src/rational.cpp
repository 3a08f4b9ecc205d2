#include "sexa/rational.hpp"

#include "sexa/error.hpp"

namespace sexa {

namespace {

constexpr const char* kModule = "exact-core";

// Decimal exponents past this magnitude are refused rather than expanded.
constexpr std::int64_t kMaxDecimalExponent = 100000;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DivisionByZero();
  // Sign goes on the numerator before Boost sees it; a negative cpp_int
  // denominator trips its normalization.
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(BigInt(-numerator), BigInt(-denominator));
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

ExactRational ExactRational::abs() const { return ExactRational(boost::multiprecision::abs(value_)); }

BigInt ExactRational::floor() const {
  const BigInt num = numerator();
  const BigInt den = denominator();
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::string ExactRational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

ExactRational operator+(const ExactRational& x, const ExactRational& y) {
  return ExactRational(x.value_ + y.value_);
}
ExactRational operator-(const ExactRational& x, const ExactRational& y) {
  return ExactRational(x.value_ - y.value_);
}
ExactRational operator*(const ExactRational& x, const ExactRational& y) {
  return ExactRational(x.value_ * y.value_);
}
ExactRational operator/(const ExactRational& x, const ExactRational& y) {
  if (y.is_zero()) throw DivisionByZero();
  return ExactRational(x.value_ / y.value_);
}
ExactRational ExactRational::operator-() const { return ExactRational(-value_); }

std::strong_ordering operator<=>(const ExactRational& x, const ExactRational& y) {
  if (x.value_ < y.value_) return std::strong_ordering::less;
  if (x.value_ > y.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExactRational rat_parse(std::string_view text) {
  std::size_t i = 0;
  const auto fail = [&](const std::string& what) -> ExactRational {
    throw ParseError(kModule, what, i + 1);
  };
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  if (i >= text.size() || !is_digit(text[i])) return fail("expected digit");
  BigInt mantissa = 0;
  std::int64_t scale = 0;  // number of fractional digits consumed
  for (; i < text.size() && is_digit(text[i]); ++i) mantissa = mantissa * 10 + (text[i] - '0');
  if (i < text.size() && text[i] == '.') {
    ++i;
    if (i >= text.size() || !is_digit(text[i])) return fail("expected digit after '.'");
    for (; i < text.size() && is_digit(text[i]); ++i) {
      mantissa = mantissa * 10 + (text[i] - '0');
      ++scale;
    }
  }
  std::int64_t exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool negative_exponent = false;
    if (i < text.size() && text[i] == '-') {
      negative_exponent = true;
      ++i;
    }
    if (i >= text.size() || !is_digit(text[i])) return fail("expected exponent digit");
    for (; i < text.size() && is_digit(text[i]); ++i) {
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > kMaxDecimalExponent) throw RangeError(kModule, "decimal exponent out of range");
    }
    if (negative_exponent) exponent = -exponent;
  }
  if (i != text.size()) return fail("unexpected character");
  if (negative) mantissa = -mantissa;
  return ExactRational(mantissa) * pow(ExactRational(10), exponent - scale);
}

ExactRational rat_arith(ArithOp op, const ExactRational& x, const ExactRational& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  throw DomainError(kModule, "unknown arithmetic operation");
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

ExactRational pow(const ExactRational& base, std::int64_t exponent) {
  if (exponent == 0) return ExactRational(1);
  const auto magnitude = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  const ExactRational raised(pow(base.numerator(), magnitude), pow(base.denominator(), magnitude));
  return exponent < 0 ? ExactRational(1) / raised : raised;
}

IntSqrt int_sqrt(const BigInt& n) {
  if (n < 0) throw DomainError(kModule, "int_sqrt of a negative number");
  BigInt remainder;
  BigInt root = boost::multiprecision::sqrt(n, remainder);
  return {root, remainder == 0};
}

}  // namespace sexa
