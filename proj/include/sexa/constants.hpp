#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sexa/format.hpp"
#include "sexa/positional.hpp"
#include "sexa/rational.hpp"
#include "sexa/sexfloat.hpp"

namespace sexa {

// A physical constant as printed in sexagesimal, with the decimal reference
// value it is checked against.
struct ConstantEntry {
  std::string name;
  std::string symbol;
  std::string glyphs;                          // verbatim
  std::optional<std::string> exponent_glyphs;  // e.g. "10^{-L}", verbatim
  std::string unit;
  ExactRational reference_value;
  std::string reference_decimal;
  std::string reference_source;
};

// Tab-separated records `name symbol glyphs exponent unit reference source`,
// with "-" for a missing exponent. Throws ParseError (1-based line number as
// position) on a malformed record.
std::vector<ConstantEntry> parse_constants_dataset(std::string_view text);

// Contents of data/constants.tsv compiled into the library.
std::string_view embedded_constants_dataset();
const std::vector<ConstantEntry>& constants_table();

// Power of sixty written as "10^{X}" or "10^{-X}" with X a glyph numeral.
// Throws UnknownGlyph (position within `text`) or ParseError.
std::int64_t parse_exponent_notation(std::string_view text);
std::string format_exponent_notation(std::int64_t power);

struct ScientificGlyphs {
  SexFloat value;
  std::string mantissa_glyphs;  // all P sexagesits
  std::int64_t exponent = 0;    // value = 0.mantissa * 60^exponent
  std::string exponent_glyphs;  // exponent as a signed glyph numeral, e.g. "L", "-1"

  // Mantissa read as an integer numeral times a power of sixty, as printed in
  // tables: "N7υεψ", "1Pψ1MYMξ3A·10^{-L}".
  std::string table_notation() const;
};

// Throws DomainError unless x > 0 and precision >= 1.
ScientificGlyphs encode_scientific(const ExactRational& x, std::size_t precision,
                                   RoundingMode mode = RoundingMode::truncate);

struct DigitDiff {
  std::size_t position = 0;  // 1-based sexagesit position
  int published = 0;
  int derived = 0;

  friend bool operator==(const DigitDiff&, const DigitDiff&) = default;
};

enum class ConstantStatusKind { match, mismatch, undecodable };

std::string_view to_string(ConstantStatusKind kind);

struct ConstantStatus {
  ConstantStatusKind kind = ConstantStatusKind::match;
  std::vector<SexDigit> published_digits;
  std::vector<SexDigit> derived_digits;
  std::int64_t published_exponent = 0;  // normalized (mantissa in [1/60, 1))
  std::int64_t derived_exponent = 0;
  std::vector<DigitDiff> diffs;
  // Undecodable entries only.
  std::size_t glyph_position = 0;  // 1-based scalar position in the offending cell
  char32_t glyph = 0;
  bool in_exponent = false;
};

// Decodes the published cell and compares it with the reference value
// rounded to the same number of sexagesits. Never throws on bad glyphs.
ConstantStatus verify_constant(const ConstantEntry& entry, RoundingMode mode = RoundingMode::truncate);

struct VerificationReport {
  struct Item {
    ConstantEntry entry;
    ConstantStatus status;
  };
  std::vector<Item> items;

  std::size_t count(ConstantStatusKind kind) const;
};

// One item per entry, in table order.
VerificationReport verify_table(std::span<const ConstantEntry> entries,
                                RoundingMode mode = RoundingMode::truncate);
VerificationReport verify_table(RoundingMode mode = RoundingMode::truncate);

std::string format_verification_report(const VerificationReport& report, OutputFormat format);

}  // namespace sexa
