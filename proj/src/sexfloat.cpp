#include "sexa/sexfloat.hpp"

#include <algorithm>

#include "sexa/error.hpp"

namespace sexa {

namespace {

constexpr const char* kModule = "exact-core";

const ExactRational& sixty() {
  static const ExactRational value(kSexagesimalBase);
  return value;
}

}  // namespace

SexFloat::SexFloat(std::size_t precision) : mantissa_(std::max<std::size_t>(precision, 1)) {}

SexFloat::SexFloat(Sign sign, std::vector<SexDigit> mantissa, std::int64_t exponent)
    : sign_(sign), mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_.empty()) throw DomainError(kModule, "empty mantissa");
  if (sign_ == Sign::zero) {
    if (std::any_of(mantissa_.begin(), mantissa_.end(), [](SexDigit d) { return d.value() != 0; }) ||
        exponent_ != 0) {
      throw DomainError(kModule, "zero float must have an all-zero mantissa and exponent 0");
    }
  } else if (mantissa_.front().value() == 0) {
    throw DomainError(kModule, "mantissa is not normalized");
  }
}

ExactRational SexFloat::mantissa_value() const {
  BigInt digits = 0;
  for (const SexDigit d : mantissa_) digits = digits * kSexagesimalBase + d.value();
  return ExactRational(digits, pow(BigInt(kSexagesimalBase), static_cast<unsigned>(mantissa_.size())));
}

ExactRational SexFloat::value() const {
  const ExactRational magnitude = mantissa_value() * pow(sixty(), exponent_);
  return sign_ == Sign::negative ? -magnitude : magnitude;
}

SexNumber SexFloat::to_number() const {
  if (is_zero()) return SexNumber();
  std::vector<SexDigit> digits = mantissa_;
  const auto length = static_cast<std::int64_t>(digits.size());
  std::size_t frac_count = 0;
  if (exponent_ <= 0) {
    digits.insert(digits.begin(), static_cast<std::size_t>(-exponent_), SexDigit(0));
    frac_count = digits.size();
  } else if (exponent_ >= length) {
    digits.insert(digits.end(), static_cast<std::size_t>(exponent_ - length), SexDigit(0));
  } else {
    frac_count = static_cast<std::size_t>(length - exponent_);
  }
  return SexNumber::from_digits(sign_, std::move(digits), frac_count);
}

std::int64_t sexagesimal_exponent(const ExactRational& x) {
  if (x.is_zero()) throw DomainError(kModule, "exponent of zero");
  const ExactRational magnitude = x.abs();
  // log2(60) ~ 5.907; start from a bit-length estimate and correct.
  const auto num_bits = static_cast<double>(boost::multiprecision::msb(magnitude.numerator()));
  const auto den_bits = static_cast<double>(boost::multiprecision::msb(magnitude.denominator()));
  auto exponent = static_cast<std::int64_t>((num_bits - den_bits) / 5.906890595608519) + 1;
  while (pow(sixty(), exponent - 1) > magnitude) --exponent;
  while (pow(sixty(), exponent) <= magnitude) ++exponent;
  return exponent;
}

SexFloat normalize_float(const ExactRational& x, std::size_t precision, RoundingMode mode) {
  if (precision == 0) throw DomainError(kModule, "precision must be at least 1");
  if (x.is_zero()) return SexFloat(precision);
  std::int64_t exponent = sexagesimal_exponent(x);
  const ExactRational scaled =
      x.abs() * pow(sixty(), static_cast<std::int64_t>(precision) - exponent);
  BigInt units = round_quotient(scaled.numerator(), scaled.denominator(), mode);
  const BigInt full = pow(BigInt(kSexagesimalBase), static_cast<unsigned>(precision));
  if (units == full) {
    units /= kSexagesimalBase;
    ++exponent;
  }
  std::vector<SexDigit> mantissa(precision);
  for (std::size_t i = precision; i-- > 0;) {
    mantissa[i] = SexDigit(static_cast<int>(units % kSexagesimalBase));
    units /= kSexagesimalBase;
  }
  return SexFloat(x.sign() < 0 ? Sign::negative : Sign::positive, std::move(mantissa), exponent);
}

ExactRational machine_epsilon(std::size_t precision) {
  if (precision == 0) throw DomainError(kModule, "precision must be at least 1");
  return pow(sixty(), -static_cast<std::int64_t>(precision));
}

}  // namespace sexa
