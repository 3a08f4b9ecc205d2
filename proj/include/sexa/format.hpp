#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sexa {

enum class OutputFormat { human, machine };

std::optional<OutputFormat> parse_output_format(std::string_view name);

// Width in Unicode scalars (every glyph in use is single-width).
std::size_t display_width(std::string_view utf8);

// Left-aligned columns separated by two spaces; trailing padding trimmed.
std::string render_columns(const std::vector<std::vector<std::string>>& rows);

// Tab-separated record terminated by '\n'.
std::string render_record(const std::vector<std::string>& fields);

struct TsvLine {
  std::size_t line = 0;  // 1-based
  std::vector<std::string> fields;
};

// Splits tab-separated text into records, skipping blank and '#' lines.
std::vector<TsvLine> read_tsv(std::string_view text);

}  // namespace sexa
