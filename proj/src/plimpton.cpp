#include "sexa/plimpton.hpp"

#include <algorithm>
#include <charconv>

#include "sexa/algorithms.hpp"
#include "sexa/codec.hpp"
#include "sexa/error.hpp"

namespace sexa {

namespace {

constexpr const char* kModule = "babylon-algorithms";

BigInt digits_to_integer(const std::vector<SexDigit>& digits) {
  BigInt out = 0;
  for (const SexDigit d : digits) out = out * kSexagesimalBase + d.value();
  return out;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (const char c : text) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

// Sexagesits of the computed ratio that line up with the published cell.
std::vector<SexDigit> comparable_digits(const SexNumber& ratio, RatioColumn column) {
  if (column == RatioColumn::d2_over_b2) return ratio.digits();
  const auto fraction = ratio.fractional_digits();
  return {fraction.begin(), fraction.end()};
}

std::string mismatch_summary(const std::vector<DigitMismatch>& mismatches) {
  std::string out;
  for (const DigitMismatch& m : mismatches) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(m.position) + ":" +
           (m.published < 0 ? "-" : std::to_string(m.published)) + ">" +
           (m.computed < 0 ? "-" : std::to_string(m.computed));
  }
  return out;
}

}  // namespace

std::vector<PlimptonRecord> parse_plimpton_dataset(std::string_view text) {
  std::vector<PlimptonRecord> out;
  for (const TsvLine& line : read_tsv(text)) {
    if (line.fields.size() != 4) throw ParseError(kModule, "expected 4 fields", line.line);
    PlimptonRecord record;
    const std::string& index = line.fields[0];
    const auto [ptr, ec] = std::from_chars(index.data(), index.data() + index.size(), record.index);
    if (ec != std::errc() || ptr != index.data() + index.size()) {
      throw ParseError(kModule, "bad row index", line.line);
    }
    record.ratio_glyphs = line.fields[1];
    record.a_glyphs = line.fields[2];
    record.d_glyphs = line.fields[3];
    out.push_back(std::move(record));
  }
  return out;
}

const std::vector<PlimptonRecord>& plimpton_table() {
  static const std::vector<PlimptonRecord> table = parse_plimpton_dataset(embedded_plimpton_dataset());
  return table;
}

std::string_view to_string(RatioColumn column) {
  return column == RatioColumn::d2_over_b2 ? "d2b2" : "a2b2";
}

std::optional<RatioColumn> parse_ratio_column(std::string_view name) {
  if (name == "d2b2") return RatioColumn::d2_over_b2;
  if (name == "a2b2") return RatioColumn::a2_over_b2;
  return std::nullopt;
}

std::string_view to_string(RowStatus status) {
  switch (status) {
    case RowStatus::match: return "match";
    case RowStatus::mismatch: return "mismatch";
    case RowStatus::undecodable: return "undecodable";
    case RowStatus::not_reconstructible: return "not-reconstructible";
  }
  return "match";
}

PlimptonRow plimpton_row_compute(const BigInt& a, const BigInt& d, int index, RatioColumn column) {
  if (!(a > 0 && d > a)) throw DomainError(kModule, "plimpton row needs d > a > 0");
  const std::string label = index > 0 ? "row " + std::to_string(index) + ": " : "";
  const IntSqrt root = int_sqrt(d * d - a * a);
  if (!root.is_perfect) {
    throw ReconstructionError(kModule, label + "d^2 - a^2 = " +
                                           BigInt(d * d - a * a).str() + " is not a perfect square");
  }
  const BigInt& b = root.floor_root;
  if (!is_regular(b).regular) {
    throw ReconstructionError(kModule, label + "b = " + b.str() +
                                           " is not regular, the ratio does not terminate");
  }
  const BigInt top = column == RatioColumn::d2_over_b2 ? BigInt(d * d) : BigInt(a * a);
  const ExactRational ratio(top, b * b);
  const auto exact = expand(ratio, kSexagesimalBase, 0, true);
  const SexConversion converted = to_sexagesimal(ratio, exact.preperiod.size());
  return {index, converted.value, a, b, d};
}

std::size_t TableReport::count(RowStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [status](const RowReport& r) { return r.status == status; }));
}

bool TableReport::all_reconstructed() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowReport& r) { return r.row.has_value(); });
}

TableReport reconstruct_table(std::span<const PlimptonRecord> records, RatioColumn column) {
  TableReport report;
  report.column = column;
  for (const PlimptonRecord& record : records) {
    RowReport out;
    out.record = record;
    std::vector<SexDigit> published;
    BigInt a;
    BigInt d;
    try {
      published = decode_glyph_digits(record.ratio_glyphs);
      a = digits_to_integer(decode_glyph_digits(record.a_glyphs));
      d = digits_to_integer(decode_glyph_digits(record.d_glyphs));
    } catch (const Error& e) {
      out.status = RowStatus::undecodable;
      out.detail = e.what();
      report.rows.push_back(std::move(out));
      continue;
    }
    try {
      out.row = plimpton_row_compute(a, d, record.index, column);
    } catch (const Error& e) {
      out.status = RowStatus::not_reconstructible;
      out.detail = e.what();
      report.rows.push_back(std::move(out));
      continue;
    }
    // Under a2b2 the ambiguous leading sexagesit of the published cell is skipped.
    const std::size_t offset = column == RatioColumn::d2_over_b2 ? 0 : 1;
    const std::vector<SexDigit> computed = comparable_digits(out.row->ratio, column);
    const std::size_t published_len = published.size() > offset ? published.size() - offset : 0;
    const std::size_t length = std::max(published_len, computed.size());
    for (std::size_t i = 0; i < length; ++i) {
      const int p = i < published_len ? published[i + offset].value() : -1;
      const int c = i < computed.size() ? computed[i].value() : -1;
      if (p != c) out.mismatches.push_back({i + offset + 1, p, c});
    }
    out.status = out.mismatches.empty() ? RowStatus::match : RowStatus::mismatch;
    report.rows.push_back(std::move(out));
  }
  return report;
}

TableReport reconstruct_table(RatioColumn column) { return reconstruct_table(plimpton_table(), column); }

std::vector<std::string> mismatch_lines(const TableReport& report) {
  std::vector<std::string> out;
  for (const RowReport& row : report.rows) {
    const std::string index = std::to_string(row.record.index);
    if (row.status == RowStatus::undecodable || row.status == RowStatus::not_reconstructible) {
      out.push_back(index + "\t-\t" + std::string(to_string(row.status)) + "\t" + row.detail);
      continue;
    }
    for (const DigitMismatch& m : row.mismatches) {
      out.push_back(index + "\t" + std::to_string(m.position) + "\t" +
                    (m.published < 0 ? "-" : std::to_string(m.published)) + "\t" +
                    (m.computed < 0 ? "-" : std::to_string(m.computed)));
    }
  }
  return out;
}

std::string format_table_report(const TableReport& report, OutputFormat format) {
  std::vector<std::vector<std::string>> rows;
  for (const RowReport& r : report.rows) {
    std::vector<std::string> fields{std::to_string(r.record.index)};
    if (r.row) {
      const std::vector<SexDigit> computed = comparable_digits(r.row->ratio, report.column);
      fields.insert(fields.end(), {r.row->a.str(), r.row->b.str(), r.row->d.str(),
                                   encode_canonical(r.row->ratio), encode_glyph_digits(computed)});
    } else {
      fields.insert(fields.end(), {"-", "-", "-", "-", "-"});
    }
    fields.push_back(strip_spaces(r.record.ratio_glyphs));
    fields.emplace_back(to_string(r.status));
    if (r.status == RowStatus::mismatch) {
      fields.push_back(mismatch_summary(r.mismatches));
    } else if (!r.detail.empty()) {
      fields.push_back(r.detail);
    } else if (format == OutputFormat::machine) {
      fields.emplace_back("-");
    }
    rows.push_back(std::move(fields));
  }
  const std::string summary_counts =
      "match=" + std::to_string(report.count(RowStatus::match)) +
      " mismatch=" + std::to_string(report.count(RowStatus::mismatch)) +
      " undecodable=" + std::to_string(report.count(RowStatus::undecodable)) +
      " not-reconstructible=" + std::to_string(report.count(RowStatus::not_reconstructible));

  std::string out;
  if (format == OutputFormat::machine) {
    for (auto& fields : rows) {
      fields.insert(fields.begin(), "row");
      out += render_record(fields);
    }
    out += render_record({"summary", "rows=" + std::to_string(report.rows.size()),
                          "ratio=" + std::string(to_string(report.column)),
                          "match=" + std::to_string(report.count(RowStatus::match)),
                          "mismatch=" + std::to_string(report.count(RowStatus::mismatch)),
                          "undecodable=" + std::to_string(report.count(RowStatus::undecodable)),
                          "not-reconstructible=" +
                              std::to_string(report.count(RowStatus::not_reconstructible))});
    return out;
  }
  const std::string ratio_header =
      report.column == RatioColumn::d2_over_b2 ? "d^2/b^2" : "a^2/b^2";
  rows.insert(rows.begin(), {"row", "a", "b", "d", ratio_header, "glyphs", "published", "status"});
  out += render_columns(rows);
  out += std::to_string(report.rows.size()) + " rows (" + summary_counts + ")\n";
  return out;
}

}  // namespace sexa
