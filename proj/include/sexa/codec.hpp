#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sexa/positional.hpp"

namespace sexa {

// UTF-8 helpers. decode_utf8 throws ParseError (1-based byte position) on
// malformed input.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(char32_t scalar);
std::string encode_utf8(std::u32string_view text);

// Bijection between sexagesit values and single-scalar glyphs, plus
// decode-only aliases for look-alike characters.
class GlyphTable {
 public:
  // Throws DomainError if `forward` repeats a glyph, uses a radix/sign/space
  // character, or an alias shadows a primary glyph.
  GlyphTable(const std::array<char32_t, kSexagesimalBase>& forward,
             const std::vector<std::pair<char32_t, int>>& aliases);

  // 0-9, A-Z, then the Greek run alpha..omega with Latin 'o' for 50.
  static const GlyphTable& standard();

  char32_t glyph(SexDigit digit) const { return forward_[static_cast<std::size_t>(digit.value())]; }
  // Primary glyph or alias.
  std::optional<SexDigit> lookup(char32_t glyph) const;
  bool is_alias(char32_t glyph) const { return aliases_.contains(glyph); }

  const std::array<char32_t, kSexagesimalBase>& forward() const noexcept { return forward_; }
  const std::map<char32_t, SexDigit>& aliases() const noexcept { return aliases_; }

 private:
  std::array<char32_t, kSexagesimalBase> forward_{};
  std::map<char32_t, SexDigit> reverse_;
  std::map<char32_t, SexDigit> aliases_;
};

// One glyph per sexagesit, ';' as radix point, leading '-' for negatives.
std::string encode_glyphs(const SexNumber& x, const GlyphTable& table = GlyphTable::standard());

// Inverse of encode_glyphs; spaces and tabs between glyphs are ignored and
// aliases resolve to their digit. Throws UnknownGlyph (1-based scalar
// position) or ParseError.
SexNumber decode_glyphs(std::string_view text, const GlyphTable& table = GlyphTable::standard());

// Raw digit run with no sign or radix point, preserving leading and trailing
// zeros exactly as written. Used for transcribed table cells.
std::vector<SexDigit> decode_glyph_digits(std::string_view text,
                                          const GlyphTable& table = GlyphTable::standard());

std::string encode_glyph_digits(const std::vector<SexDigit>& digits,
                                const GlyphTable& table = GlyphTable::standard());

// "1;59:0:15", "2:49", "-0;30".
std::string encode_canonical(const SexNumber& x);

// Throws RangeError for a digit token above 59 and ParseError for anything
// that does not match `[-]n(:n)*[;n(:n)*]`.
SexNumber decode_canonical(std::string_view text);

// Canonical rendering of a bare digit run, e.g. "1:59:0:15".
std::string join_canonical(const std::vector<SexDigit>& digits);

}  // namespace sexa
