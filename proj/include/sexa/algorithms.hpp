#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sexa/rational.hpp"
#include "sexa/sexfloat.hpp"

namespace sexa {

// Exact Heron (Babylonian) square root.
//
// Iterates a_{n+1} = (a_n + a/a_n)/2 on exact rationals until
// |a_{n+1} - a_n| < 60^-P, then rounds the last iterate to P fractional
// sexagesits. The precision is absolute, so the returned mantissa holds
// P + e sexagesits where e is the value's sexagesimal exponent; a result
// below 60^-P collapses to zero.

inline constexpr std::size_t kHeronIterationCap = 1000;

struct HeronResult {
  SexFloat value;
  ExactRational iterate;  // final exact iterate a_{n+1}
  std::size_t iterations = 0;
  ExactRational residual;  // |a_{n+1} - a_n| at termination
};

// One step of the recurrence. a_n must be nonzero.
ExactRational heron_step(const ExactRational& a, const ExactRational& current);

// max(1, int_sqrt(floor(a))).
ExactRational heron_default_guess(const ExactRational& a);

// Throws DomainError for a <= 0 or a0 <= 0, ConvergenceError past
// kHeronIterationCap.
HeronResult heron_sqrt(const ExactRational& a, std::optional<ExactRational> a0, std::size_t precision,
                       RoundingMode mode = RoundingMode::truncate);

// Rounds x to `frac_places` sexagesits after the radix point.
SexFloat round_to_places(const ExactRational& x, std::size_t frac_places, RoundingMode mode);

// Area sqrt(s(s-a)(s-b)(s-c)) with s the semiperimeter; the radicand is exact
// and the root goes through heron_sqrt. Throws DomainError for non-positive
// sides or a degenerate triangle.
SexFloat heron_area(const ExactRational& a, const ExactRational& b, const ExactRational& c,
                    std::size_t precision, RoundingMode mode = RoundingMode::truncate);

// Divisors d of n with 1 < d < n, ascending. Throws DomainError for n < 2.
std::vector<std::uint64_t> nontrivial_divisors(std::uint64_t n);

// Number of divisors of n (n >= 1) from its prime factorization.
std::uint64_t divisor_count(std::uint64_t n);

struct RegularFactorization {
  bool regular = false;
  unsigned twos = 0;
  unsigned threes = 0;
  unsigned fives = 0;
  BigInt cofactor;  // n / (2^twos 3^threes 5^fives)
};

// Throws DomainError for n < 1.
RegularFactorization is_regular(const BigInt& n);

// a^2 + b^2 = d^2 with a <= b < d.
struct Triple {
  BigInt a;
  BigInt b;
  BigInt d;

  friend bool operator==(const Triple&, const Triple&) = default;
};

// Euclid's parametrization: legs p^2 - q^2 and 2pq, hypotenuse p^2 + q^2.
// Requires p > q >= 1, gcd(p, q) = 1, and p, q not both odd; throws
// DomainError naming the failed condition.
Triple triple_from_generators(std::int64_t p, std::int64_t q);

}  // namespace sexa
