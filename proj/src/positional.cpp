#include "sexa/positional.hpp"

#include <algorithm>
#include <numeric>

#include "sexa/error.hpp"

namespace sexa {

namespace {

constexpr const char* kModule = "exact-core";

std::uint64_t gcd_of(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

Sign sign_of(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }

// Digits of n (n >= 0) in `base`, most significant first; [0] for zero.
std::vector<int> integer_digits_of(BigInt n, int base) {
  std::vector<int> out;
  while (n > 0) {
    out.push_back(static_cast<int>(n % base));
    n /= base;
  }
  if (out.empty()) out.push_back(0);
  std::reverse(out.begin(), out.end());
  return out;
}

// Long division of remainder/den (0 <= remainder < den) producing `count`
// fractional digits; returns the remainder left over.
template <class Int>
Int long_divide(Int remainder, const Int& den, int base, std::size_t count, std::vector<int>& out) {
  for (std::size_t i = 0; i < count; ++i) {
    remainder *= base;
    out.push_back(static_cast<int>(remainder / den));
    remainder %= den;
  }
  return remainder;
}

// Multiplicative order of base modulo m (gcd(base, m) = 1, m > 1), or nullopt
// past the search bound.
template <class Int>
std::optional<std::size_t> multiplicative_order(int base, const Int& m) {
  Int r = Int(base) % m;
  std::size_t order = 1;
  while (r != 1) {
    if (order >= kRepetendSearchBound) return std::nullopt;
    r = (r * base) % m;
    ++order;
  }
  return order;
}

template <class Int>
void expand_fraction(Int remainder, const Int& den, int base, std::size_t max_frac,
                     bool detect_repetend, Expansion& out) {
  if (!detect_repetend) {
    remainder = long_divide(remainder, den, base, max_frac, out.preperiod);
    // Strip trailing zeros only for an exact result.
    if (remainder == 0) {
      while (!out.preperiod.empty() && out.preperiod.back() == 0) out.preperiod.pop_back();
      out.kind = ExpansionKind::terminating;
    } else {
      out.kind = ExpansionKind::truncated;
    }
    return;
  }
  // den = (part sharing primes with base) * cofactor coprime to base.
  Int cofactor = den;
  std::size_t preperiod_length = 0;
  for (Int g = gcd_of(cofactor, Int(base)); g > 1; g = gcd_of(cofactor, Int(base))) {
    cofactor /= g;
    ++preperiod_length;
  }
  if (cofactor == 1) {
    long_divide(remainder, den, base, preperiod_length, out.preperiod);
    while (!out.preperiod.empty() && out.preperiod.back() == 0) out.preperiod.pop_back();
    out.kind = ExpansionKind::terminating;
    return;
  }
  const auto period_length = multiplicative_order(base, cofactor);
  if (!period_length) {
    long_divide(remainder, den, base, max_frac, out.preperiod);
    out.kind = ExpansionKind::truncated;
    out.bound_exceeded = true;
    return;
  }
  remainder = long_divide(remainder, den, base, preperiod_length, out.preperiod);
  long_divide(remainder, den, base, *period_length, out.period);
  out.kind = ExpansionKind::repeating;
}

bool is_regular_denominator(BigInt den) {
  for (const int p : {2, 3, 5}) {
    while (den % p == 0) den /= p;
  }
  return den == 1;
}

std::string join_digits(const std::vector<int>& digits, int base) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (base != 10 && i > 0) out.push_back(':');
    out += std::to_string(digits[i]);
  }
  return out;
}

}  // namespace

SexDigit::SexDigit(int value) {
  if (value < 0 || value >= kSexagesimalBase) {
    throw RangeError(kModule, "sexagesit " + std::to_string(value) + " outside 0..59");
  }
  value_ = static_cast<std::uint8_t>(value);
}

std::vector<SexDigit> make_digits(std::initializer_list<int> values) {
  std::vector<SexDigit> out;
  out.reserve(values.size());
  for (const int v : values) out.emplace_back(v);
  return out;
}

SexNumber::SexNumber() : digits_{SexDigit(0)} {}

SexNumber SexNumber::from_digits(Sign sign, std::vector<SexDigit> digits, std::size_t frac_count) {
  if (frac_count > digits.size()) {
    throw RangeError(kModule, "fractional digit count exceeds digit count");
  }
  // Trailing fractional zeros.
  while (frac_count > 0 && digits.back().value() == 0) {
    digits.pop_back();
    --frac_count;
  }
  // Leading integer zeros, keeping at least one integer digit.
  std::size_t integer_count = digits.size() - frac_count;
  std::size_t lead = 0;
  while (lead + 1 < integer_count && digits[lead].value() == 0) ++lead;
  if (integer_count == 0) {
    digits.insert(digits.begin(), SexDigit(0));
  } else {
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(lead));
  }
  SexNumber out;
  const bool all_zero =
      std::all_of(digits.begin(), digits.end(), [](SexDigit d) { return d.value() == 0; });
  if (all_zero) return out;
  out.sign_ = sign == Sign::negative ? Sign::negative : Sign::positive;
  out.digits_ = std::move(digits);
  out.frac_count_ = frac_count;
  return out;
}

SexNumber SexNumber::from_integer(const BigInt& value) {
  std::vector<SexDigit> digits;
  for (const int d : integer_digits_of(boost::multiprecision::abs(value), kSexagesimalBase)) {
    digits.emplace_back(d);
  }
  return from_digits(sign_of(value.sign()), std::move(digits), 0);
}

std::span<const SexDigit> SexNumber::integer_digits() const {
  return std::span<const SexDigit>(digits_).first(digits_.size() - frac_count_);
}

std::span<const SexDigit> SexNumber::fractional_digits() const {
  return std::span<const SexDigit>(digits_).last(frac_count_);
}

std::string_view to_string(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::truncate: return "trunc";
    case RoundingMode::half_up: return "half-up";
    case RoundingMode::half_even: return "half-even";
  }
  return "trunc";
}

std::optional<RoundingMode> parse_rounding_mode(std::string_view name) {
  if (name == "trunc") return RoundingMode::truncate;
  if (name == "half-up") return RoundingMode::half_up;
  if (name == "half-even") return RoundingMode::half_even;
  return std::nullopt;
}

BigInt round_quotient(const BigInt& num, const BigInt& den, RoundingMode mode) {
  BigInt q = num / den;
  const BigInt twice_r = 2 * (num % den);
  switch (mode) {
    case RoundingMode::truncate: break;
    case RoundingMode::half_up:
      if (twice_r >= den) q += 1;
      break;
    case RoundingMode::half_even:
      if (twice_r > den || (twice_r == den && q % 2 == 1)) q += 1;
      break;
  }
  return q;
}

std::string Expansion::fixed_text() const {
  std::string out = sign == Sign::negative ? "-" : "";
  out += join_digits(integer_digits, base);
  if (!preperiod.empty() || !period.empty()) out.push_back(base == 10 ? '.' : ';');
  out += join_digits(preperiod, base);
  return out;
}

std::string Expansion::period_text() const { return join_digits(period, base); }

std::string Expansion::to_string() const {
  std::string out = fixed_text();
  if (kind == ExpansionKind::repeating) {
    if (base != 10 && !preperiod.empty()) out.push_back(':');
    out += "(" + period_text() + ")";
  } else if (kind == ExpansionKind::truncated) {
    out += "...";
  }
  return out;
}

Expansion expand(const ExactRational& x, int base, std::size_t max_frac, bool detect_repetend) {
  if (base < 2 || base > kSexagesimalBase) throw DomainError(kModule, "base outside 2..60");
  Expansion out;
  out.base = base;
  out.sign = sign_of(x.sign());
  const BigInt num = boost::multiprecision::abs(x.numerator());
  const BigInt den = x.denominator();
  out.integer_digits = integer_digits_of(num / den, base);
  const BigInt remainder = num % den;
  // 64-bit fast path while remainder * base cannot overflow.
  if (den < (BigInt(1) << 56)) {
    expand_fraction(static_cast<std::uint64_t>(remainder), static_cast<std::uint64_t>(den), base,
                    max_frac, detect_repetend, out);
  } else {
    expand_fraction(remainder, den, base, max_frac, detect_repetend, out);
  }
  return out;
}

Expansion to_decimal(const ExactRational& x, std::size_t max_frac, bool detect_repetend) {
  return expand(x, 10, max_frac, detect_repetend);
}

bool has_terminating_sexagesimal(const ExactRational& x) {
  return is_regular_denominator(x.denominator());
}

SexConversion to_sexagesimal(const ExactRational& x, std::size_t max_frac, RoundingMode mode,
                             bool want_repetend) {
  SexConversion out;
  const BigInt scale = pow(BigInt(kSexagesimalBase), static_cast<unsigned>(max_frac));
  const BigInt scaled = round_quotient(boost::multiprecision::abs(x.numerator()) * scale,
                                       x.denominator(), mode);
  std::vector<SexDigit> digits;
  for (const int d : integer_digits_of(scaled, kSexagesimalBase)) digits.emplace_back(d);
  // Pad so that max_frac digits sit right of the radix point.
  if (digits.size() < max_frac + 1) {
    digits.insert(digits.begin(), max_frac + 1 - digits.size(), SexDigit(0));
  }
  out.value = SexNumber::from_digits(sign_of(x.sign()), std::move(digits), max_frac);

  if (has_terminating_sexagesimal(x)) {
    const Expansion exact = expand(x, kSexagesimalBase, 0, true);
    out.terminating_length = exact.preperiod.size();
    out.status = *out.terminating_length <= max_frac ? SexagesimalStatus::terminates_within
                                                     : SexagesimalStatus::terminates_later;
  } else {
    out.status = SexagesimalStatus::repeats;
    if (want_repetend) {
      const Expansion exact = expand(x, kSexagesimalBase, 0, true);
      for (const int d : exact.period) out.repetend.emplace_back(d);
    }
  }
  return out;
}

ExactRational from_sexagesimal(const SexNumber& x) {
  BigInt magnitude = 0;
  for (const SexDigit d : x.digits()) magnitude = magnitude * kSexagesimalBase + d.value();
  const BigInt scale = pow(BigInt(kSexagesimalBase), static_cast<unsigned>(x.frac_count()));
  ExactRational value(magnitude, scale);
  return x.sign() == Sign::negative ? -value : value;
}

std::string to_scientific_decimal(const ExactRational& x, std::size_t significant, RoundingMode mode) {
  if (significant == 0) throw DomainError(kModule, "significant digit count must be positive");
  if (x.is_zero()) return "0";
  const ExactRational magnitude = x.abs();
  // Find exponent with 10^exponent <= |x| < 10^(exponent+1).
  std::int64_t exponent = static_cast<std::int64_t>(magnitude.numerator().str().size()) -
                          static_cast<std::int64_t>(magnitude.denominator().str().size());
  while (pow(ExactRational(10), exponent) > magnitude) --exponent;
  while (pow(ExactRational(10), exponent + 1) <= magnitude) ++exponent;
  const ExactRational scaled =
      magnitude * pow(ExactRational(10), static_cast<std::int64_t>(significant) - 1 - exponent);
  BigInt digits = round_quotient(scaled.numerator(), scaled.denominator(), mode);
  if (digits == pow(BigInt(10), static_cast<unsigned>(significant))) {
    digits /= 10;
    ++exponent;
  }
  const std::string text = digits.str();
  std::string out = x.sign() < 0 ? "-" : "";
  out += text.substr(0, 1);
  if (text.size() > 1) out += "." + text.substr(1);
  if (exponent != 0) out += "e" + std::to_string(exponent);
  return out;
}

}  // namespace sexa
