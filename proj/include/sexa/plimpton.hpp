#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sexa/format.hpp"
#include "sexa/positional.hpp"
#include "sexa/rational.hpp"

namespace sexa {

// One transcribed Plimpton 322 row, glyph cells verbatim.
struct PlimptonRecord {
  int index = 0;
  std::string ratio_glyphs;
  std::string a_glyphs;
  std::string d_glyphs;
};

// Tab-separated records `index ratio a d`; '#' lines and blank lines are
// skipped. Throws ParseError with the 1-based line number as position.
std::vector<PlimptonRecord> parse_plimpton_dataset(std::string_view text);

// Contents of data/plimpton322.tsv compiled into the library.
std::string_view embedded_plimpton_dataset();
const std::vector<PlimptonRecord>& plimpton_table();

// Which value the first column is read as: d^2/b^2 (leading sexagesit 1) or
// a^2/b^2 = d^2/b^2 - 1.
enum class RatioColumn { d2_over_b2, a2_over_b2 };

std::string_view to_string(RatioColumn column);
std::optional<RatioColumn> parse_ratio_column(std::string_view name);

struct PlimptonRow {
  int index = 0;
  SexNumber ratio;
  BigInt a;
  BigInt b;
  BigInt d;
};

// Recovers b = sqrt(d^2 - a^2) and the exact ratio column. Throws DomainError
// unless d > a > 0, ReconstructionError when d^2 - a^2 is not a perfect square
// or b is not regular.
PlimptonRow plimpton_row_compute(const BigInt& a, const BigInt& d, int index,
                                 RatioColumn column = RatioColumn::d2_over_b2);

// Published vs recomputed sexagesit at a 1-based position of the published
// cell; -1 marks a digit missing on that side.
struct DigitMismatch {
  std::size_t position = 0;
  int published = -1;
  int computed = -1;

  friend bool operator==(const DigitMismatch&, const DigitMismatch&) = default;
};

enum class RowStatus { match, mismatch, undecodable, not_reconstructible };

std::string_view to_string(RowStatus status);

struct RowReport {
  PlimptonRecord record;
  RowStatus status = RowStatus::match;
  std::optional<PlimptonRow> row;
  std::vector<DigitMismatch> mismatches;
  std::string detail;  // diagnostic for undecodable / not_reconstructible rows
};

struct TableReport {
  RatioColumn column = RatioColumn::d2_over_b2;
  std::vector<RowReport> rows;

  std::size_t count(RowStatus status) const;
  bool all_reconstructed() const;
};

// Decodes each record, recomputes b and the ratio, and diffs the ratio
// sexagesit by sexagesit. Per-row failures are reported, never thrown.
TableReport reconstruct_table(std::span<const PlimptonRecord> records,
                              RatioColumn column = RatioColumn::d2_over_b2);
TableReport reconstruct_table(RatioColumn column = RatioColumn::d2_over_b2);

// One line per non-matching sexagesit: "row\tposition\tpublished\tcomputed",
// plus "row\t-\tstatus\tdetail" for rows that could not be compared.
std::vector<std::string> mismatch_lines(const TableReport& report);

std::string format_table_report(const TableReport& report, OutputFormat format);

}  // namespace sexa
