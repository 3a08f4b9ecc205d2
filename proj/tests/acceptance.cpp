// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 only when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sexa/algorithms.hpp"
#include "sexa/cli.hpp"
#include "sexa/codec.hpp"
#include "sexa/constants.hpp"
#include "sexa/error.hpp"
#include "sexa/plimpton.hpp"
#include "sexa/positional.hpp"
#include "sexa/rational.hpp"
#include "sexa/sexfloat.hpp"

#include "golden_cases.hpp"
#include "oracles.hpp"

namespace {

using sexa::BigInt;
using sexa::ExactRational;

// Tolerances. Every comparison below is exact; these pin the lengths and
// budgets the criteria are stated in.
constexpr std::size_t kEpsilonSignificantDigits = 18;
constexpr std::size_t kEpsilonPrecision = 8;
constexpr std::size_t kHeronPrecision = 8;
constexpr std::size_t kHeronMaxIterations = 8;
constexpr std::size_t kAreaTriangles = 50;
constexpr std::uint64_t kDivisorBruteForceLimit = 10'000;
constexpr int kCrossBaseMaxPower = 12;
constexpr int kCodecRoundTrips = 10'000;
constexpr double kBudgetInstantSeconds = 1.0;
constexpr double kBudgetOneSecond = 1.0;
constexpr double kBudgetCliSeconds = 5.0;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string digits_text(const std::vector<int>& digits) {
  std::string out;
  for (const int d : digits) out += std::to_string(d);
  return out;
}

// 1. Machine epsilon at eight sexagesits.
Outcome machine_epsilon() {
  Outcome o;
  const ExactRational eps = sexa::machine_epsilon(kEpsilonPrecision);
  o.check(eps == ExactRational(1, sexa::pow(BigInt(60), 8)), "machine_epsilon(8) == 1/60^8");
  const std::string printed = sexa::to_scientific_decimal(eps, kEpsilonSignificantDigits);
  const std::string published = "5.95374180765127242e-15";
  o.note("computed  " + printed);
  o.note("published " + published);
  o.check(printed == published, "18 significant digits equal the published literal");
  // Independent oracle: floor(10^32 / 60^8) gives the leading digits.
  const BigInt scaled = sexa::pow(BigInt(10), 32) / sexa::pow(BigInt(60), 8);
  o.check(scaled.str().substr(0, 18) == "595374180765127267", "computed digits agree with integer division");
  return o;
}

// 2. Decimal expansions of 60^-n.
Outcome powers_table() {
  Outcome o;
  struct Row {
    int n;
    const char* preperiod;
    const char* period;  // nullptr: the literal carries no repetend
  };
  const Row published[] = {
      {1, "01", "6"},
      {2, "0002", "7"},
      {3, "000004", "629"},
      {4, "00000007", "716049382"},
      {5, "00000000128600823045267496", nullptr},
      {6, "0000000000214334705075445825", nullptr},
      {7, "000000000000357224508459076342", nullptr},
      {8, "00000000000000595374180765127242", nullptr},
  };
  for (const Row& row : published) {
    const ExactRational x(1, sexa::pow(BigInt(60), static_cast<unsigned>(row.n)));
    const auto e = sexa::to_decimal(x, 0, true);
    const auto want = oracle::long_division(1, sexa::pow(BigInt(60), static_cast<unsigned>(row.n))
                                                   .convert_to<std::uint64_t>(), 10);
    o.check(e.preperiod == want.preperiod && e.period == want.period,
            "n=" + std::to_string(row.n) + " expansion agrees with long division");
    const std::string pre = digits_text(e.preperiod);
    const std::string per = digits_text(e.period);
    if (row.period != nullptr) {
      o.check(pre == row.preperiod && per == row.period,
              "n=" + std::to_string(row.n) + " preperiod+period " + pre + "(" + per + ")");
      continue;
    }
    // Literal without repetend: it must be the leading digits of the exact expansion.
    std::string exact = pre;
    while (exact.size() < std::string(row.preperiod).size()) exact += per;
    exact.resize(std::string(row.preperiod).size());
    const bool ok = exact == row.preperiod;
    if (!ok) {
      std::size_t at = 0;
      while (exact[at] == row.preperiod[at]) ++at;
      o.note("n=" + std::to_string(row.n) + " published 0." + row.preperiod + " exact 0." + exact +
             " (first difference at decimal place " + std::to_string(at + 1) + ")");
    }
    o.check(ok, "n=" + std::to_string(row.n) + " published literal is a prefix of the exact expansion");
  }
  // n = 9: the published literal has two decimal points, so the computed
  // expansion is checked against the oracle only.
  {
    const BigInt den = sexa::pow(BigInt(60), 9);
    const auto e = sexa::to_decimal(ExactRational(1, den), 0, true);
    const auto want = oracle::long_division(1, den.convert_to<std::uint64_t>(), 10);
    o.check(e.preperiod == want.preperiod && e.period == want.period, "n=9 expansion agrees with long division");
    o.note("n=9 published literal malformed (0.00000000000000009.9229030127521216); computed 0." +
           digits_text(e.preperiod) + "(" + std::to_string(e.period.size()) + "-digit period)");
  }
  return o;
}

// 3. Plimpton reconstruction.
Outcome plimpton() {
  Outcome o;
  const auto report = sexa::reconstruct_table();
  o.check(report.rows.size() == 15, "15 rows");
  o.check(report.all_reconstructed(), "every row reconstructs");
  for (const auto& r : report.rows) {
    if (!r.row) {
      o.check(false, "row " + std::to_string(r.record.index) + ": " + r.detail);
      continue;
    }
    const auto& row = *r.row;
    const BigInt gap = row.d * row.d - row.a * row.a;
    o.check(oracle::bisect_sqrt(gap) * oracle::bisect_sqrt(gap) == gap, "row " + std::to_string(row.index) +
                                                                            " d^2-a^2 is a perfect square");
    o.check(oracle::trial_division(row.b.convert_to<std::uint64_t>()).rest == 1,
            "row " + std::to_string(row.index) + " b is regular");
  }
  std::string actual;
  for (const auto& line : sexa::mismatch_lines(report)) actual += line + "\n";
  std::string expected;
  std::istringstream fixture(golden::read_file(SEXA_TEST_DIR "/fixtures/plimpton_mismatches.txt"));
  for (std::string line; std::getline(fixture, line);) {
    if (!line.empty() && line[0] != '#') expected += line + "\n";
  }
  o.check(actual == expected, "residual mismatches equal the fixture");
  struct Anchor {
    std::size_t row;
    long a, b, d;
    const char* ratio;
  };
  for (const Anchor& x : {Anchor{1, 119, 120, 169, "1;59:0:15"}, Anchor{11, 45, 60, 75, "1;33:45"},
                          Anchor{15, 56, 90, 106, "1;23:13:46:40"}}) {
    const auto& row = report.rows.at(x.row - 1).row;
    o.check(row && row->a == x.a && row->b == x.b && row->d == x.d &&
                sexa::encode_canonical(row->ratio) == x.ratio,
            "anchor row " + std::to_string(x.row));
  }
  o.note(std::to_string(report.count(sexa::RowStatus::match)) + "/15 rows re-encode to the published glyphs");
  return o;
}

// 4. Heron convergence.
Outcome heron() {
  Outcome o;
  const auto r = sexa::heron_sqrt(ExactRational(2), ExactRational(1), kHeronPrecision);
  o.check(r.iterations <= kHeronMaxIterations, "sqrt(2) in <= 8 iterations (took " +
                                                    std::to_string(r.iterations) + ")");
  const std::string text = sexa::encode_canonical(r.value.to_number());
  o.check(text.starts_with("1;24:51:10:7:46:6:4:44"), "sqrt(2) prefix 1;24:51:10:7:46:6:4:44 (got " + text + ")");
  const BigInt root = sexa::int_sqrt(2 * sexa::pow(BigInt(60), 16)).floor_root;
  o.check(oracle::base60(root) == std::vector<int>{1, 24, 51, 10, 7, 46, 6, 4, 44},
          "int_sqrt(2*60^16) oracle digits");
  const ExactRational scaled = r.value.value() * ExactRational(sexa::pow(BigInt(60), 8));
  o.check(scaled == ExactRational(root), "heron result equals int_sqrt(2*60^16)/60^8");
  const auto four = sexa::heron_sqrt(ExactRational(4), ExactRational(1), kHeronPrecision);
  o.check(four.value.value() == ExactRational(2), "sqrt(4) is exactly 2");
  return o;
}

// 5. Heron area on right triangles.
Outcome heron_area() {
  Outcome o;
  std::size_t done = 0;
  for (std::int64_t p = 2; done < kAreaTriangles; ++p) {
    for (std::int64_t q = 1; q < p && done < kAreaTriangles; ++q) {
      if (std::gcd(p, q) != 1 || (p - q) % 2 == 0) continue;
      const auto t = sexa::triple_from_generators(p, q);
      const auto area = sexa::heron_area(ExactRational(t.a), ExactRational(t.b), ExactRational(t.d), 8);
      const ExactRational want = ExactRational(BigInt(t.a * t.b)) / ExactRational(2);
      o.check(area.value() == want, "triangle (" + t.a.str() + "," + t.b.str() + "," + t.d.str() + ")");
      ++done;
    }
  }
  o.note(std::to_string(done) + " triangles");
  return o;
}

// 6. Divisor counts.
Outcome divisors() {
  Outcome o;
  o.check(sexa::nontrivial_divisors(10).size() == 2, "10 has 2 nontrivial divisors");
  o.check(sexa::nontrivial_divisors(60) == std::vector<std::uint64_t>{2, 3, 4, 5, 6, 10, 12, 15, 20, 30},
          "60 has divisors 2 3 4 5 6 10 12 15 20 30");
  const auto sieve = oracle::divisor_sieve(kDivisorBruteForceLimit);
  std::uint64_t bad = 0;
  for (std::uint64_t n = 2; n <= kDivisorBruteForceLimit; ++n) {
    if (sexa::nontrivial_divisors(n) != sieve[n]) ++bad;
  }
  o.check(bad == 0, "brute-force agreement for n <= 10^4 (" + std::to_string(bad) + " disagreements)");
  return o;
}

// 7. Cross-base identity.
Outcome cross_base() {
  Outcome o;
  for (int n = 1; n <= kCrossBaseMaxPower; ++n) {
    const auto un = static_cast<unsigned>(n);
    const ExactRational lhs(1, sexa::pow(BigInt(10), un));
    const ExactRational rhs = ExactRational(sexa::pow(BigInt(6), un)) / ExactRational(sexa::pow(BigInt(60), un));
    o.check(lhs == rhs, "10^-" + std::to_string(n) + " == 6^" + std::to_string(n) + " * 60^-" + std::to_string(n));
  }
  return o;
}

// 8. Codec properties.
Outcome codec() {
  Outcome o;
  const auto& table = sexa::GlyphTable::standard();
  bool bijective = true;
  for (int v = 0; v < 60; ++v) {
    const auto back = table.lookup(table.glyph(sexa::SexDigit(v)));
    bijective = bijective && back && back->value() == v;
  }
  o.check(bijective, "glyph(value) round-trips for all 60 values");
  std::mt19937 rng(20240601);
  int failures = 0;
  for (int i = 0; i < kCodecRoundTrips; ++i) {
    const std::size_t length = 1 + rng() % 12;
    std::vector<sexa::SexDigit> digits;
    for (std::size_t k = 0; k < length; ++k) digits.emplace_back(static_cast<int>(rng() % 60));
    const auto x = sexa::SexNumber::from_digits(rng() % 3 == 0 ? sexa::Sign::negative : sexa::Sign::positive,
                                                digits, rng() % (length + 1));
    if (sexa::decode_glyphs(sexa::encode_glyphs(x)) != x) ++failures;
  }
  o.check(failures == 0, "10^4 random round trips (" + std::to_string(failures) + " failures)");
  const std::string boltzmann = "1vBα7IδIRK";
  try {
    sexa::decode_glyphs(boltzmann);
    o.check(false, "Boltzmann string must not decode");
  } catch (const sexa::UnknownGlyph& e) {
    o.check(e.glyph() == U'v' && e.position() == 2, std::string("unknown glyph 'v' at position 2 (got ") + e.what() + ")");
  }
  return o;
}

// 9. Constants verification report.
Outcome constants() {
  Outcome o;
  const auto report = sexa::verify_table();
  const auto* c = &report.items.at(1);
  o.check(c->entry.symbol == "c", "second entry is the speed of light");
  const auto& s = c->status;
  o.check(s.kind == sexa::ConstantStatusKind::mismatch && s.diffs.size() == 1 && s.diffs[0].published == 48 &&
              s.diffs[0].derived == 55,
          "speed of light is a single-position mismatch 48 vs 55");
  o.check(report.count(sexa::ConstantStatusKind::undecodable) >= 2, "at least two undecodable entries");
  const std::string machine = sexa::format_verification_report(report, sexa::OutputFormat::machine);
  o.check(machine == golden::read_file(SEXA_TEST_DIR "/fixtures/constants_report.tsv"),
          "machine report equals the fixture byte-for-byte");
  o.check(sexa::format_verification_report(report, sexa::OutputFormat::human) ==
              golden::read_file(SEXA_TEST_DIR "/fixtures/constants_report.txt"),
          "human report equals the fixture byte-for-byte");
  o.check(machine == sexa::format_verification_report(sexa::verify_table(), sexa::OutputFormat::machine),
          "report is deterministic");
  o.note("match=" + std::to_string(report.count(sexa::ConstantStatusKind::match)) +
         " mismatch=" + std::to_string(report.count(sexa::ConstantStatusKind::mismatch)) +
         " undecodable=" + std::to_string(report.count(sexa::ConstantStatusKind::undecodable)));
  return o;
}

// 10. CLI contract.
Outcome cli() {
  Outcome o;
  const auto cases = golden::load_cases();
  std::vector<std::string> subcommands;
  for (const auto& c : cases) {
    const auto first = sexa::cli::run(c.args);
    const auto second = sexa::cli::run(c.args);
    o.check(first.exit_code == c.exit_code, c.name + " exit code " + std::to_string(first.exit_code));
    o.check(golden::transcript(first) == golden::expected(c), c.name + " output equals golden file");
    o.check(first.out == second.out && first.err == second.err && first.exit_code == second.exit_code,
            c.name + " is byte-identical on rerun");
    if (!c.args.empty()) subcommands.push_back(c.args.front());
  }
  for (const char* sub : {"convert", "arith", "sqrt", "area", "epsilon", "divisors", "plimpton", "constants"}) {
    o.check(std::find(subcommands.begin(), subcommands.end(), sub) != subcommands.end(),
            std::string("golden case for ") + sub);
  }
  o.check(sexa::cli::run({"convert", "1", "--p", "99"}).exit_code == sexa::cli::kExitUsage, "usage error exits 2");
  o.check(sexa::cli::run({"arith", "div", "1", "0"}).exit_code == sexa::cli::kExitError, "domain error exits 1");
  o.note(std::to_string(cases.size()) + " golden cases");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "machine epsilon 60^-8", kBudgetInstantSeconds, machine_epsilon},
      {2, "decimal expansions of 60^-n", kBudgetInstantSeconds, powers_table},
      {3, "Plimpton 322 reconstruction", kBudgetOneSecond, plimpton},
      {4, "Heron square root convergence", kBudgetInstantSeconds, heron},
      {5, "Heron area of right triangles", kBudgetInstantSeconds, heron_area},
      {6, "nontrivial divisor counts", kBudgetOneSecond, divisors},
      {7, "cross-base identity 10^-n = 6^n 60^-n", kBudgetInstantSeconds, cross_base},
      {8, "glyph codec properties", kBudgetOneSecond, codec},
      {9, "physical constants verification", kBudgetOneSecond, constants},
      {10, "CLI contract", kBudgetCliSeconds, cli},
  };
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    only = std::stoi(argv[2]);
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
    return 2;
  }
  bool all = true;
  bool ran = false;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("unexpected exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.check(seconds <= c.budget_seconds, "runtime budget");
    std::printf("criterion %2d: %s  %s (%.3fs)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, seconds);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    all = all && o.pass;
  }
  if (!ran) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all ? 0 : 1;
}
