#include "sexa/constants.hpp"

#include <algorithm>

#include "sexa/codec.hpp"
#include "sexa/error.hpp"

namespace sexa {

namespace {

constexpr const char* kModule = "constants-verify";
constexpr std::string_view kCenterDot = "·";

std::string glyph_numeral(std::int64_t value) {
  const std::string magnitude = encode_glyphs(SexNumber::from_integer(value < 0 ? -value : value));
  return value < 0 ? "-" + magnitude : magnitude;
}

// Glyph cells count one sexagesit per non-space scalar.
std::size_t glyph_count(std::string_view text) {
  const std::u32string scalars = decode_utf8(text);
  return static_cast<std::size_t>(
      std::count_if(scalars.begin(), scalars.end(), [](char32_t c) { return c != U' ' && c != U'\t'; }));
}

std::string published_notation(const ConstantEntry& entry) {
  std::string out;
  for (const char c : entry.glyphs) {
    if (c != ' ') out.push_back(c);
  }
  if (entry.exponent_glyphs) out += std::string(kCenterDot) + *entry.exponent_glyphs;
  return out;
}

std::string diff_text(const ConstantStatus& status) {
  std::string out;
  for (const DigitDiff& d : status.diffs) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(d.position) + ":" + std::to_string(d.published) + ">" + std::to_string(d.derived);
  }
  return out;
}

}  // namespace

std::vector<ConstantEntry> parse_constants_dataset(std::string_view text) {
  std::vector<ConstantEntry> out;
  for (const TsvLine& line : read_tsv(text)) {
    if (line.fields.size() != 7) throw ParseError(kModule, "expected 7 fields", line.line);
    ConstantEntry entry;
    entry.name = line.fields[0];
    entry.symbol = line.fields[1];
    entry.glyphs = line.fields[2];
    if (line.fields[3] != "-") entry.exponent_glyphs = line.fields[3];
    entry.unit = line.fields[4];
    entry.reference_decimal = line.fields[5];
    try {
      entry.reference_value = rat_parse(entry.reference_decimal);
    } catch (const ParseError&) {
      throw ParseError(kModule, "bad reference decimal", line.line);
    }
    if (entry.reference_value.sign() <= 0) {
      throw ParseError(kModule, "reference value must be positive", line.line);
    }
    entry.reference_source = line.fields[6];
    out.push_back(std::move(entry));
  }
  return out;
}

const std::vector<ConstantEntry>& constants_table() {
  static const std::vector<ConstantEntry> table = parse_constants_dataset(embedded_constants_dataset());
  return table;
}

std::int64_t parse_exponent_notation(std::string_view text) {
  const std::u32string scalars = decode_utf8(text);
  const std::u32string_view prefix = U"10^{";
  if (!std::u32string_view(scalars).starts_with(prefix)) {
    throw ParseError(kModule, "exponent must start with 10^{", 1);
  }
  std::size_t i = prefix.size();
  bool negative = false;
  if (i < scalars.size() && scalars[i] == U'-') {
    negative = true;
    ++i;
  }
  std::int64_t power = 0;
  std::size_t glyphs = 0;
  for (; i < scalars.size() && scalars[i] != U'}'; ++i) {
    if (scalars[i] == U' ') continue;
    const auto digit = GlyphTable::standard().lookup(scalars[i]);
    if (!digit) throw UnknownGlyph(scalars[i], i + 1);
    power = power * kSexagesimalBase + digit->value();
    if (power > 1'000'000) throw RangeError(kModule, "exponent out of range");
    ++glyphs;
  }
  if (glyphs == 0) throw ParseError(kModule, "empty exponent", i + 1);
  if (i + 1 != scalars.size()) throw ParseError(kModule, "expected closing brace at end", i + 1);
  return negative ? -power : power;
}

std::string format_exponent_notation(std::int64_t power) { return "10^{" + glyph_numeral(power) + "}"; }

std::string ScientificGlyphs::table_notation() const {
  const std::int64_t power = exponent - static_cast<std::int64_t>(value.precision());
  if (power == 0) return mantissa_glyphs;
  return mantissa_glyphs + std::string(kCenterDot) + format_exponent_notation(power);
}

ScientificGlyphs encode_scientific(const ExactRational& x, std::size_t precision, RoundingMode mode) {
  if (x.sign() <= 0) throw DomainError(kModule, "encode_scientific needs x > 0");
  ScientificGlyphs out{normalize_float(x, precision, mode), "", 0, ""};
  out.mantissa_glyphs = encode_glyph_digits(out.value.mantissa());
  out.exponent = out.value.exponent();
  out.exponent_glyphs = glyph_numeral(out.exponent);
  return out;
}

std::string_view to_string(ConstantStatusKind kind) {
  switch (kind) {
    case ConstantStatusKind::match: return "match";
    case ConstantStatusKind::mismatch: return "mismatch";
    case ConstantStatusKind::undecodable: return "undecodable";
  }
  return "match";
}

ConstantStatus verify_constant(const ConstantEntry& entry, RoundingMode mode) {
  ConstantStatus status;
  std::int64_t power = 0;
  try {
    status.published_digits = decode_glyph_digits(entry.glyphs);
  } catch (const UnknownGlyph& e) {
    status.kind = ConstantStatusKind::undecodable;
    status.glyph_position = e.position();
    status.glyph = e.glyph();
  }
  if (status.kind != ConstantStatusKind::undecodable && entry.exponent_glyphs) {
    try {
      power = parse_exponent_notation(*entry.exponent_glyphs);
    } catch (const UnknownGlyph& e) {
      status.kind = ConstantStatusKind::undecodable;
      status.glyph_position = e.position();
      status.glyph = e.glyph();
      status.in_exponent = true;
    }
  }
  const std::size_t precision = std::max<std::size_t>(
      1, status.kind == ConstantStatusKind::undecodable ? glyph_count(entry.glyphs)
                                                         : status.published_digits.size());
  const SexFloat derived = normalize_float(entry.reference_value, precision, mode);
  status.derived_digits = derived.mantissa();
  status.derived_exponent = derived.exponent();
  if (status.kind == ConstantStatusKind::undecodable) return status;

  status.published_exponent = static_cast<std::int64_t>(status.published_digits.size()) + power;
  for (std::size_t i = 0; i < precision; ++i) {
    const int p = status.published_digits[i].value();
    const int d = status.derived_digits[i].value();
    if (p != d) status.diffs.push_back({i + 1, p, d});
  }
  status.kind = status.diffs.empty() && status.published_exponent == status.derived_exponent
                    ? ConstantStatusKind::match
                    : ConstantStatusKind::mismatch;
  return status;
}

std::size_t VerificationReport::count(ConstantStatusKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [kind](const Item& i) { return i.status.kind == kind; }));
}

VerificationReport verify_table(std::span<const ConstantEntry> entries, RoundingMode mode) {
  VerificationReport report;
  report.items.reserve(entries.size());
  for (const ConstantEntry& entry : entries) report.items.push_back({entry, verify_constant(entry, mode)});
  return report;
}

VerificationReport verify_table(RoundingMode mode) { return verify_table(constants_table(), mode); }

std::string format_verification_report(const VerificationReport& report, OutputFormat format) {
  std::string out;
  const std::string counts[] = {
      "entries=" + std::to_string(report.items.size()),
      "match=" + std::to_string(report.count(ConstantStatusKind::match)),
      "mismatch=" + std::to_string(report.count(ConstantStatusKind::mismatch)),
      "undecodable=" + std::to_string(report.count(ConstantStatusKind::undecodable)),
  };
  if (format == OutputFormat::machine) {
    for (const auto& [entry, status] : report.items) {
      const bool undecodable = status.kind == ConstantStatusKind::undecodable;
      out += render_record({
          "constant",
          entry.symbol,
          std::string(to_string(status.kind)),
          undecodable ? "-" : join_canonical(status.published_digits),
          join_canonical(status.derived_digits),
          undecodable ? "-" : std::to_string(status.published_exponent),
          std::to_string(status.derived_exponent),
          status.diffs.empty() ? "-" : diff_text(status),
          undecodable ? std::string(status.in_exponent ? "exponent:" : "") +
                            std::to_string(status.glyph_position) + ":" + encode_utf8(status.glyph)
                      : "-",
      });
    }
    out += render_record({"summary", counts[0], counts[1], counts[2], counts[3]});
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"symbol", "status", "published", "derived", "detail"}};
  for (const auto& [entry, status] : report.items) {
    ScientificGlyphs derived{SexFloat(Sign::positive, status.derived_digits, status.derived_exponent), "",
                             status.derived_exponent, ""};
    derived.mantissa_glyphs = encode_glyph_digits(status.derived_digits);
    std::string detail;
    switch (status.kind) {
      case ConstantStatusKind::match: break;
      case ConstantStatusKind::mismatch:
        detail = status.diffs.empty() ? "" : "sexagesits " + diff_text(status);
        if (status.published_exponent != status.derived_exponent) {
          if (!detail.empty()) detail += "; ";
          detail += "exponent " + std::to_string(status.published_exponent) + ">" +
                    std::to_string(status.derived_exponent);
        }
        break;
      case ConstantStatusKind::undecodable:
        detail = std::string(status.in_exponent ? "exponent glyph '" : "glyph '") +
                 encode_utf8(status.glyph) + "' at position " + std::to_string(status.glyph_position);
        break;
    }
    rows.push_back({entry.symbol, std::string(to_string(status.kind)), published_notation(entry),
                    derived.table_notation(), detail});
  }
  out += render_columns(rows);
  out += counts[0] + " " + counts[1] + " " + counts[2] + " " + counts[3] + "\n";
  return out;
}

}  // namespace sexa
