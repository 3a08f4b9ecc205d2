#include "sexa/algorithms.hpp"

#include <numeric>

#include "sexa/error.hpp"

namespace sexa {

namespace {

constexpr const char* kModule = "babylon-algorithms";

}  // namespace

ExactRational heron_step(const ExactRational& a, const ExactRational& current) {
  return (current + a / current) / ExactRational(2);
}

ExactRational heron_default_guess(const ExactRational& a) {
  const BigInt whole = a.floor();
  if (whole < 1) return ExactRational(1);
  return ExactRational(int_sqrt(whole).floor_root);
}

SexFloat round_to_places(const ExactRational& x, std::size_t frac_places, RoundingMode mode) {
  const SexNumber rounded = to_sexagesimal(x, frac_places, mode).value;
  if (rounded.is_zero()) return SexFloat(1);
  const ExactRational value = from_sexagesimal(rounded);
  const std::int64_t digits = sexagesimal_exponent(value) + static_cast<std::int64_t>(frac_places);
  return normalize_float(value, static_cast<std::size_t>(std::max<std::int64_t>(digits, 1)));
}

HeronResult heron_sqrt(const ExactRational& a, std::optional<ExactRational> a0, std::size_t precision,
                       RoundingMode mode) {
  if (a.sign() <= 0) throw DomainError(kModule, "heron_sqrt needs a > 0");
  const ExactRational start = a0 ? *a0 : heron_default_guess(a);
  if (start.sign() <= 0) throw DomainError(kModule, "heron_sqrt needs a0 > 0");
  const ExactRational tolerance = machine_epsilon(precision);

  ExactRational current = start;
  for (std::size_t n = 1; n <= kHeronIterationCap; ++n) {
    ExactRational next = heron_step(a, current);
    ExactRational residual = (next - current).abs();
    if (residual < tolerance) {
      HeronResult out{round_to_places(next, precision, mode), next, n, residual};
      return out;
    }
    current = std::move(next);
  }
  throw ConvergenceError(kModule, "heron_sqrt did not converge within the iteration cap");
}

SexFloat heron_area(const ExactRational& a, const ExactRational& b, const ExactRational& c,
                    std::size_t precision, RoundingMode mode) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) {
    throw DomainError(kModule, "triangle sides must be positive");
  }
  const ExactRational s = (a + b + c) / ExactRational(2);
  const ExactRational radicand = s * (s - a) * (s - b) * (s - c);
  if (radicand.sign() <= 0) throw DomainError(kModule, "degenerate or impossible triangle");
  // An exact rational root is used as the starting guess, so perfect squares
  // converge in one step.
  std::optional<ExactRational> guess;
  const IntSqrt num_root = int_sqrt(radicand.numerator());
  const IntSqrt den_root = int_sqrt(radicand.denominator());
  if (num_root.is_perfect && den_root.is_perfect) {
    guess = ExactRational(num_root.floor_root, den_root.floor_root);
  }
  return heron_sqrt(radicand, guess, precision, mode).value;
}

std::vector<std::uint64_t> nontrivial_divisors(std::uint64_t n) {
  if (n < 2) throw DomainError(kModule, "nontrivial_divisors needs n >= 2");
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::uint64_t divisor_count(std::uint64_t n) {
  if (n < 1) throw DomainError(kModule, "divisor_count needs n >= 1");
  std::uint64_t count = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint64_t exponent = 0;
    while (n % p == 0) {
      n /= p;
      ++exponent;
    }
    count *= exponent + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

RegularFactorization is_regular(const BigInt& n) {
  if (n < 1) throw DomainError(kModule, "is_regular needs n >= 1");
  RegularFactorization out;
  out.cofactor = n;
  const auto strip = [&out](unsigned p, unsigned& exponent) {
    while (out.cofactor % p == 0) {
      out.cofactor /= p;
      ++exponent;
    }
  };
  strip(2, out.twos);
  strip(3, out.threes);
  strip(5, out.fives);
  out.regular = out.cofactor == 1;
  return out;
}

Triple triple_from_generators(std::int64_t p, std::int64_t q) {
  if (q < 1) throw DomainError(kModule, "generators need q >= 1");
  if (p <= q) throw DomainError(kModule, "generators need p > q");
  if (std::gcd(p, q) != 1) throw DomainError(kModule, "generators need gcd(p, q) = 1");
  if (p % 2 == 1 && q % 2 == 1) throw DomainError(kModule, "generators must not both be odd");
  const BigInt bp = p;
  const BigInt bq = q;
  BigInt odd_leg = bp * bp - bq * bq;
  BigInt even_leg = 2 * bp * bq;
  if (odd_leg > even_leg) std::swap(odd_leg, even_leg);
  return {odd_leg, even_leg, bp * bp + bq * bq};
}

}  // namespace sexa
