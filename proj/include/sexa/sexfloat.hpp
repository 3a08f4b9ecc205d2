#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sexa/positional.hpp"
#include "sexa/rational.hpp"

namespace sexa {

// Normalized base-60 float: value = sign * (sum_i mantissa[i] * 60^-(i+1)) * 60^exponent,
// with mantissa[0] != 0 so that 1/60 <= M < 1. The exponent bias is fixed at 0.
//
// Zero is a distinguished value: sign zero, exponent 0, mantissa all zeros.
class SexFloat {
 public:
  // Zero at the given precision.
  explicit SexFloat(std::size_t precision = 1);

  // Throws DomainError if the mantissa is empty or, for a nonzero sign, not
  // normalized.
  SexFloat(Sign sign, std::vector<SexDigit> mantissa, std::int64_t exponent);

  Sign sign() const noexcept { return sign_; }
  const std::vector<SexDigit>& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  std::size_t precision() const noexcept { return mantissa_.size(); }
  bool is_zero() const noexcept { return sign_ == Sign::zero; }

  // Mantissa as a number in [1/60, 1), or zero.
  ExactRational mantissa_value() const;
  ExactRational value() const;
  // Same value as a positional numeral, e.g. 1;59:0:15 for mantissa
  // 1:59:0:15:0:0:0:0 with exponent 1.
  SexNumber to_number() const;

  friend bool operator==(const SexFloat&, const SexFloat&) = default;

 private:
  Sign sign_ = Sign::zero;
  std::vector<SexDigit> mantissa_;
  std::int64_t exponent_ = 0;
};

// Exponent e with 60^(e-1) <= |x| < 60^e. x must be nonzero.
std::int64_t sexagesimal_exponent(const ExactRational& x);

// Rounds |x| = M * 60^e to a `precision`-sexagesit mantissa. A carry out of
// the mantissa (all 59s rounding up) bumps the exponent. Zero maps to the zero
// SexFloat. Throws DomainError when precision is 0.
SexFloat normalize_float(const ExactRational& x, std::size_t precision,
                         RoundingMode mode = RoundingMode::truncate);

// One unit in the last place of a `precision`-sexagesit mantissa: exactly 60^-precision.
ExactRational machine_epsilon(std::size_t precision);

}  // namespace sexa
