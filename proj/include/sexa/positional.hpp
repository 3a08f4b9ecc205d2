#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sexa/rational.hpp"

namespace sexa {

inline constexpr int kSexagesimalBase = 60;

// Period searches give up after this many remainder states.
inline constexpr std::size_t kRepetendSearchBound = 1'000'000;

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

// One base-60 digit (a sexagesit), 0..59.
class SexDigit {
 public:
  constexpr SexDigit() = default;
  // Throws RangeError outside 0..59.
  explicit SexDigit(int value);

  constexpr int value() const noexcept { return value_; }

  friend constexpr bool operator==(SexDigit, SexDigit) = default;
  friend constexpr auto operator<=>(SexDigit, SexDigit) = default;

 private:
  std::uint8_t value_ = 0;
};

std::vector<SexDigit> make_digits(std::initializer_list<int> values);

// Exact base-60 positional numeral: a sign, digits most significant first,
// and the count of digits right of the radix point. Always canonical: no
// leading integer zeros (a lone 0 precedes a purely fractional value), no
// trailing fractional zeros, and zero is {zero, [0], 0}.
class SexNumber {
 public:
  SexNumber();

  // Canonicalizes. A zero magnitude forces Sign::zero; a nonzero magnitude with
  // Sign::zero is taken as positive. Throws RangeError if frac_count exceeds
  // the digit count.
  static SexNumber from_digits(Sign sign, std::vector<SexDigit> digits, std::size_t frac_count);
  static SexNumber from_integer(const BigInt& value);

  Sign sign() const noexcept { return sign_; }
  const std::vector<SexDigit>& digits() const noexcept { return digits_; }
  std::size_t frac_count() const noexcept { return frac_count_; }

  std::span<const SexDigit> integer_digits() const;
  std::span<const SexDigit> fractional_digits() const;

  bool is_zero() const noexcept { return sign_ == Sign::zero; }

  friend bool operator==(const SexNumber&, const SexNumber&) = default;

 private:
  Sign sign_ = Sign::zero;
  std::vector<SexDigit> digits_;
  std::size_t frac_count_ = 0;
};

enum class RoundingMode { truncate, half_up, half_even };

std::string_view to_string(RoundingMode mode);
std::optional<RoundingMode> parse_rounding_mode(std::string_view name);

// Rounds the non-negative quotient num/den to an integer. Halves round away
// from zero under half_up.
BigInt round_quotient(const BigInt& num, const BigInt& den, RoundingMode mode);

enum class ExpansionKind {
  terminating,  // every digit emitted, period empty
  repeating,    // preperiod then a minimal nonempty period
  truncated,    // digits cut at the requested length (or the period search bound)
};

// Positional expansion of a rational in an arbitrary base. Digits are values
// in 0..base-1, most significant first.
struct Expansion {
  int base = 10;
  Sign sign = Sign::zero;
  std::vector<int> integer_digits;
  std::vector<int> preperiod;
  std::vector<int> period;
  ExpansionKind kind = ExpansionKind::terminating;
  // Set when a repetend was requested but the search bound ran out.
  bool bound_exceeded = false;

  // "[-]int.preperiod" for base 10, "[-]int;d:d" for base 60; no radix point
  // when the preperiod is empty.
  std::string fixed_text() const;
  // Period digits: concatenated for base 10, ':'-separated for base 60.
  std::string period_text() const;
  // fixed_text with the period in parentheses, e.g. "0.01(6)"; a trailing
  // "..." marks a truncated expansion.
  std::string to_string() const;
};

// Expands x in `base` (2..60). With `detect_repetend`, the exact preperiod and
// minimal period are produced (max_frac is ignored unless the search bound is
// exceeded); otherwise at most max_frac fractional digits are emitted.
Expansion expand(const ExactRational& x, int base, std::size_t max_frac, bool detect_repetend);

Expansion to_decimal(const ExactRational& x, std::size_t max_frac, bool detect_repetend);

enum class SexagesimalStatus { terminates_within, terminates_later, repeats };

struct SexConversion {
  SexNumber value;
  SexagesimalStatus status = SexagesimalStatus::terminates_within;
  // Exact number of fractional sexagesits when the expansion terminates.
  std::optional<std::size_t> terminating_length;
  // Filled for repeating expansions when requested and found within the bound.
  std::vector<SexDigit> repetend;
};

SexConversion to_sexagesimal(const ExactRational& x, std::size_t max_frac,
                             RoundingMode mode = RoundingMode::truncate, bool want_repetend = false);

ExactRational from_sexagesimal(const SexNumber& x);

// Scientific decimal text with `significant` digits, e.g. "5.95374180765127267e-15".
std::string to_scientific_decimal(const ExactRational& x, std::size_t significant,
                                  RoundingMode mode = RoundingMode::truncate);

// Reduced denominator is 2^a 3^b 5^c, i.e. the base-60 expansion terminates.
bool has_terminating_sexagesimal(const ExactRational& x);

}  // namespace sexa
