#include "sexa/cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "sexa/algorithms.hpp"
#include "sexa/codec.hpp"
#include "sexa/constants.hpp"
#include "sexa/error.hpp"
#include "sexa/format.hpp"
#include "sexa/plimpton.hpp"
#include "sexa/positional.hpp"
#include "sexa/sexfloat.hpp"

namespace sexa::cli {

namespace {

constexpr const char* kModule = "cli";
constexpr std::size_t kMinPrecision = 1;
constexpr std::size_t kMaxPrecision = 64;
// Digits shown when a decimal period is longer than the search bound.
constexpr std::size_t kDecimalFallbackDigits = 60;

enum class Notation { decimal, canonical, glyph };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Notation> parse_notation(std::string_view name) {
  if (name == "decimal") return Notation::decimal;
  if (name == "canonical") return Notation::canonical;
  if (name == "glyph") return Notation::glyph;
  return std::nullopt;
}

// Flags shared by every subcommand.
struct RawOptions {
  int precision = 8;
  std::string round = "trunc";
  std::string from = "decimal";
  std::string to;
  std::string ratio = "d2b2";
  std::string format = "human";
};

struct Options {
  std::size_t precision = 8;
  RoundingMode round = RoundingMode::truncate;
  Notation from = Notation::decimal;
  std::optional<Notation> to;
  RatioColumn ratio = RatioColumn::d2_over_b2;
  OutputFormat format = OutputFormat::human;

  Notation to_or(Notation fallback) const { return to.value_or(fallback); }
  bool machine() const { return format == OutputFormat::machine; }
};

Options validate(const RawOptions& raw) {
  Options out;
  if (raw.precision < static_cast<int>(kMinPrecision) || raw.precision > static_cast<int>(kMaxPrecision)) {
    throw UsageError("--p must be in [1, 64]");
  }
  out.precision = static_cast<std::size_t>(raw.precision);
  const auto round = parse_rounding_mode(raw.round);
  if (!round) throw UsageError("--round must be trunc, half-up or half-even");
  out.round = *round;
  const auto from = parse_notation(raw.from);
  if (!from) throw UsageError("--from must be decimal, canonical or glyph");
  out.from = *from;
  if (!raw.to.empty()) {
    out.to = parse_notation(raw.to);
    if (!out.to) throw UsageError("--to must be decimal, canonical or glyph");
  }
  const auto ratio = parse_ratio_column(raw.ratio);
  if (!ratio) throw UsageError("--ratio must be d2b2 or a2b2");
  out.ratio = *ratio;
  const auto format = parse_output_format(raw.format);
  if (!format) throw UsageError("--format must be human or machine");
  out.format = *format;
  return out;
}

ExactRational parse_input(std::string_view text, Notation from) {
  switch (from) {
    case Notation::decimal: {
      const auto slash = text.find('/');
      if (slash == std::string_view::npos) return rat_parse(text);
      return rat_parse(text.substr(0, slash)) / rat_parse(text.substr(slash + 1));
    }
    case Notation::canonical: return from_sexagesimal(decode_canonical(text));
    case Notation::glyph: return from_sexagesimal(decode_glyphs(text));
  }
  throw DomainError(kModule, "unknown notation");
}

BigInt parse_integer(std::string_view text, Notation from) {
  const ExactRational value = parse_input(text, from);
  if (!value.is_integer()) throw DomainError(kModule, "expected an integer, got " + value.to_string());
  return value.numerator();
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(kModule, "expected a non-negative integer", 1);
  }
  return out;
}

std::int64_t parse_i64(std::string_view text) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(kModule, "expected an integer", 1);
  }
  return out;
}

std::string render_digits(const std::vector<SexDigit>& digits, Notation to) {
  return to == Notation::glyph ? encode_glyph_digits(digits) : join_canonical(digits);
}

std::string render_number(const SexNumber& x, Notation to) {
  return to == Notation::glyph ? encode_glyphs(x) : encode_canonical(x);
}

struct Rendered {
  std::string text;
  std::string status;  // exact, terminating, terminates-later, repeats, truncated
  std::string note;    // human-readable qualifier, empty when exact
};

Rendered render_value(const ExactRational& x, Notation to, const Options& options) {
  if (to == Notation::decimal) {
    const Expansion e = to_decimal(x, kDecimalFallbackDigits, true);
    switch (e.kind) {
      case ExpansionKind::terminating: return {e.to_string(), "exact", ""};
      case ExpansionKind::repeating: return {e.to_string(), "repeats", ""};
      case ExpansionKind::truncated:
        return {e.to_string(), "truncated", "period not found within bound"};
    }
  }
  const SexConversion c = to_sexagesimal(x, options.precision, options.round, true);
  Rendered out{render_number(c.value, to), "exact", ""};
  switch (c.status) {
    case SexagesimalStatus::terminates_within: break;
    case SexagesimalStatus::terminates_later:
      out.status = "terminates-later";
      out.note = "inexact: terminates after " + std::to_string(*c.terminating_length) + " places";
      break;
    case SexagesimalStatus::repeats:
      out.status = "repeats";
      out.note = c.repetend.empty() ? "inexact: period not found within bound"
                                    : "inexact: repeats " + render_digits(c.repetend, to);
      break;
  }
  return out;
}

std::string human_line(const Rendered& r) {
  return r.text + (r.note.empty() ? "" : "  (" + r.note + ")") + "\n";
}

std::string render_float(const SexFloat& f, Notation to) {
  if (f.is_zero()) return "0";
  std::string out = f.sign() == Sign::negative ? "-0;" : "0;";
  out += render_digits(f.mantissa(), to);
  return out + " * 60^" + std::to_string(f.exponent());
}

std::string run_convert(const std::vector<std::string>& values, bool as_float, const Options& options) {
  if (values.size() != 1) throw UsageError("convert takes exactly one value");
  const ExactRational x = parse_input(values[0], options.from);
  const Notation to = options.to_or(Notation::canonical);
  if (as_float) {
    const SexFloat f = normalize_float(x, options.precision, options.round);
    if (options.machine()) {
      return render_record({"float", std::string(f.is_zero() ? "0" : render_digits(f.mantissa(), to)),
                            std::to_string(f.exponent())});
    }
    return render_float(f, to) + "\n";
  }
  const Rendered r = render_value(x, to, options);
  if (options.machine()) return render_record({"value", r.text, r.status, x.to_string()});
  return human_line(r);
}

std::string run_arith(const std::vector<std::string>& values, const Options& options) {
  if (values.size() != 3) throw UsageError("arith takes an operation and two values");
  static const std::pair<std::string_view, ArithOp> kOps[] = {
      {"add", ArithOp::add}, {"sub", ArithOp::sub}, {"mul", ArithOp::mul}, {"div", ArithOp::div}};
  std::optional<ArithOp> op;
  for (const auto& [name, candidate] : kOps) {
    if (values[0] == name) op = candidate;
  }
  if (!op) throw UsageError("arith operation must be add, sub, mul or div");
  const ExactRational result =
      rat_arith(*op, parse_input(values[1], options.from), parse_input(values[2], options.from));
  const Rendered r = render_value(result, options.to_or(Notation::canonical), options);
  if (options.machine()) return render_record({"value", r.text, r.status, result.to_string()});
  return human_line(r);
}

std::string run_sqrt(const std::vector<std::string>& values, const std::string& a0, bool integer,
                     const Options& options) {
  if (values.size() != 1) throw UsageError("sqrt takes exactly one value");
  if (integer) {
    const IntSqrt root = int_sqrt(parse_integer(values[0], options.from));
    if (options.machine()) {
      return render_record({"isqrt", root.floor_root.str(), root.is_perfect ? "perfect" : "not-perfect"});
    }
    return root.floor_root.str() + (root.is_perfect ? "  (perfect square)\n" : "  (not a perfect square)\n");
  }
  std::optional<ExactRational> guess;
  if (!a0.empty()) guess = parse_input(a0, options.from);
  const HeronResult result = heron_sqrt(parse_input(values[0], options.from), guess, options.precision,
                                        options.round);
  const Rendered r = render_value(result.value.value(), options.to_or(Notation::canonical), options);
  const std::string residual = to_scientific_decimal(result.residual, 6);
  if (options.machine()) {
    return render_record({"sqrt", r.text, std::to_string(result.iterations), residual});
  }
  return r.text + "  (iterations " + std::to_string(result.iterations) + ", residual " + residual + ")\n";
}

std::string run_area(const std::vector<std::string>& values, const Options& options) {
  if (values.size() != 3) throw UsageError("area takes three side lengths");
  const SexFloat area = heron_area(parse_input(values[0], options.from), parse_input(values[1], options.from),
                                   parse_input(values[2], options.from), options.precision, options.round);
  const Rendered r = render_value(area.value(), options.to_or(Notation::canonical), options);
  if (options.machine()) return render_record({"area", r.text, area.value().to_string()});
  return r.text + "\n";
}

std::string run_epsilon(const std::vector<std::string>& values, const Options& options) {
  if (!values.empty()) throw UsageError("epsilon takes no values");
  const ExactRational eps = machine_epsilon(options.precision);
  const Notation to = options.to_or(Notation::decimal);
  const std::string text = to == Notation::decimal ? to_scientific_decimal(eps, 18, options.round)
                                                   : render_value(eps, to, options).text;
  const std::string p = std::to_string(options.precision);
  if (options.machine()) return render_record({"epsilon", p, text, eps.to_string()});
  return text + " (= 60^-" + p + ")\n";
}

std::string run_divisors(const std::vector<std::string>& values, const Options& options) {
  if (values.size() != 1) throw UsageError("divisors takes exactly one value");
  const std::uint64_t n = parse_u64(values[0]);
  const auto divisors = nontrivial_divisors(n);
  const RegularFactorization f = is_regular(BigInt(n));
  std::string list;
  for (const auto d : divisors) list += (list.empty() ? "" : " ") + std::to_string(d);
  const std::string count = std::to_string(divisors.size());
  if (options.machine()) {
    std::string csv = list;
    std::replace(csv.begin(), csv.end(), ' ', ',');
    return render_record({"divisors", values[0], count, csv.empty() ? "-" : csv}) +
           render_record({"regular", values[0], f.regular ? "true" : "false", std::to_string(f.twos),
                          std::to_string(f.threes), std::to_string(f.fives), f.cofactor.str()});
  }
  std::string out = "nontrivial divisors of " + values[0] + ": " + (list.empty() ? "none" : list) +
                    " (count " + count + ")\n";
  out += values[0] + " = 2^" + std::to_string(f.twos) + " * 3^" + std::to_string(f.threes) + " * 5^" +
         std::to_string(f.fives);
  if (!f.regular) out += " * " + f.cofactor.str();
  out += f.regular ? " (regular)\n" : " (not regular)\n";
  return out;
}

struct PlimptonArgs {
  std::vector<std::string> row;
  std::vector<std::string> triple;
  int index = 0;
};

std::string run_plimpton(const std::vector<std::string>& values, const PlimptonArgs& args,
                         const Options& options, int& exit_code) {
  if (!values.empty()) throw UsageError("plimpton takes no positional values");
  if (!args.row.empty() && !args.triple.empty()) throw UsageError("--row and --triple are exclusive");
  const Notation to = options.to_or(Notation::canonical);
  if (!args.triple.empty()) {
    const Triple t = triple_from_generators(parse_i64(args.triple[0]), parse_i64(args.triple[1]));
    if (options.machine()) return render_record({"triple", t.a.str(), t.b.str(), t.d.str()});
    return "a=" + t.a.str() + " b=" + t.b.str() + " d=" + t.d.str() + "\n";
  }
  if (!args.row.empty()) {
    const PlimptonRow row = plimpton_row_compute(parse_integer(args.row[0], options.from),
                                                 parse_integer(args.row[1], options.from), args.index,
                                                 options.ratio);
    const std::string ratio = render_number(row.ratio, to);
    const std::string glyphs = encode_glyph_digits(row.ratio.digits());
    if (options.machine()) {
      return render_record({"row", std::to_string(row.index), row.a.str(), row.b.str(), row.d.str(), ratio,
                            glyphs});
    }
    const std::string label = row.index > 0 ? "row " + std::to_string(row.index) + ": " : "";
    return label + "a=" + row.a.str() + " b=" + row.b.str() +
           " d=" + row.d.str() + " ratio " + ratio + "\n";
  }
  const TableReport report = reconstruct_table(options.ratio);
  if (!report.all_reconstructed()) exit_code = kExitError;
  return format_table_report(report, options.format);
}

std::string run_constants(const std::vector<std::string>& values, const std::string& entry,
                          const std::string& encode, const Options& options) {
  if (!values.empty()) throw UsageError("constants takes no positional values");
  if (!entry.empty() && !encode.empty()) throw UsageError("--entry and --encode are exclusive");
  if (!encode.empty()) {
    const ScientificGlyphs s = encode_scientific(parse_input(encode, options.from), options.precision,
                                                 options.round);
    if (options.machine()) {
      return render_record({"scientific", s.mantissa_glyphs, std::to_string(s.exponent), s.exponent_glyphs,
                            s.table_notation()});
    }
    return s.table_notation() + "  (mantissa " + s.mantissa_glyphs + ", exponent " +
           std::to_string(s.exponent) + ", glyph " + s.exponent_glyphs + ")\n";
  }
  if (!entry.empty()) {
    for (const ConstantEntry& e : constants_table()) {
      if (e.symbol != entry) continue;
      const ConstantEntry single[] = {e};
      return format_verification_report(verify_table(single, options.round), options.format);
    }
    throw DomainError("constants-verify", "no constant with symbol '" + entry + "'");
  }
  return format_verification_report(verify_table(options.round), options.format);
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  CLI::App app{"Exact base-60 arithmetic, Plimpton 322 reconstruction and constant verification", "sexa"};
  app.fallthrough();
  app.require_subcommand(1);

  RawOptions raw;
  app.add_option("--p", raw.precision, "Precision in sexagesits, 1..64")->capture_default_str();
  app.add_option("--round", raw.round, "Rounding: trunc, half-up, half-even")->capture_default_str();
  app.add_option("--from", raw.from, "Input notation: decimal, canonical, glyph")->capture_default_str();
  app.add_option("--to", raw.to, "Output notation: decimal, canonical, glyph");
  app.add_option("--ratio", raw.ratio, "Plimpton ratio column: d2b2 or a2b2")->capture_default_str();
  app.add_option("--format", raw.format, "Output format: human or machine")->capture_default_str();

  std::vector<std::string> values;
  bool as_float = false;
  bool integer = false;
  bool check = false;
  std::string a0;
  std::string entry;
  std::string encode;
  PlimptonArgs plimpton;

  auto* convert = app.add_subcommand("convert", "Convert a number between notations");
  convert->add_option("value", values, "Number to convert");
  convert->add_flag("--float", as_float, "Show the normalized base-60 float at precision --p");
  auto* arith = app.add_subcommand("arith", "Exact arithmetic: arith <add|sub|mul|div> <x> <y>");
  arith->add_option("args", values, "Operation and operands");
  auto* sqrt = app.add_subcommand("sqrt", "Heron square root to --p fractional sexagesits");
  sqrt->add_option("value", values, "Radicand");
  sqrt->add_option("--a0", a0, "Starting approximation");
  sqrt->add_flag("--integer", integer, "Integer square root with perfect-square flag");
  auto* area = app.add_subcommand("area", "Heron area of a triangle from its three sides");
  area->add_option("sides", values, "Side lengths");
  auto* epsilon = app.add_subcommand("epsilon", "Machine epsilon 60^-P of a P-sexagesit mantissa");
  auto* divisors = app.add_subcommand("divisors", "Nontrivial divisors and 2-3-5 factorization");
  divisors->add_option("n", values, "Integer >= 2");
  auto* table = app.add_subcommand("plimpton", "Reconstruct and diff the Plimpton 322 table");
  table->add_flag("--check", check, "Diff every row against the transcription (default)");
  table->add_option("--row", plimpton.row, "Compute one row from a and d")->expected(2);
  table->add_option("--index", plimpton.index, "Row index reported with --row");
  table->add_option("--triple", plimpton.triple, "Triple from generators p q")->expected(2);
  auto* constants = app.add_subcommand("constants", "Verify the physical-constants table");
  constants->add_option("--entry", entry, "Verify only the constant with this symbol");
  constants->add_option("--encode", encode, "Encode a positive value in scientific glyph notation");
  (void)epsilon;
  (void)check;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return result;
  }

  try {
    const Options options = validate(raw);
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "convert") {
      result.out = run_convert(values, as_float, options);
    } else if (name == "arith") {
      result.out = run_arith(values, options);
    } else if (name == "sqrt") {
      result.out = run_sqrt(values, a0, integer, options);
    } else if (name == "area") {
      result.out = run_area(values, options);
    } else if (name == "epsilon") {
      result.out = run_epsilon(values, options);
    } else if (name == "divisors") {
      result.out = run_divisors(values, options);
    } else if (name == "plimpton") {
      result.out = run_plimpton(values, plimpton, options, result.exit_code);
    } else if (name == "constants") {
      result.out = run_constants(values, entry, encode, options);
    }
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.err = std::string("usage: ") + e.what() + "\n";
    result.out.clear();
  } catch (const Error& e) {
    result.exit_code = kExitError;
    result.err = "error [" + e.module() + "]: " + e.what() + "\n";
    result.out.clear();
  }
  return result;
}

}  // namespace sexa::cli
