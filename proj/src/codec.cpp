#include "sexa/codec.hpp"

#include "sexa/error.hpp"

namespace sexa {

namespace {

constexpr const char* kModule = "sex-codec";

bool is_space(char32_t c) { return c == U' ' || c == U'\t'; }

bool is_reserved(char32_t c) { return c == U';' || c == U'-' || is_space(c); }

std::array<char32_t, kSexagesimalBase> standard_forward() {
  std::array<char32_t, kSexagesimalBase> out{};
  std::size_t i = 0;
  for (char32_t c = U'0'; c <= U'9'; ++c) out[i++] = c;
  for (char32_t c = U'A'; c <= U'Z'; ++c) out[i++] = c;
  const std::u32string_view greek = U"αβγδεζηθικλμνξoπρστυφχψω";
  for (const char32_t c : greek) out[i++] = c;
  return out;
}

}  // namespace

UnknownGlyph::UnknownGlyph(char32_t glyph, std::size_t position)
    : Error(kModule, "unknown glyph '" + encode_utf8(glyph) + "' at position " + std::to_string(position)),
      glyph_(glyph),
      position_(position) {}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t length = 0;
    char32_t scalar = 0;
    if (lead < 0x80) {
      length = 1;
      scalar = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      length = 2;
      scalar = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      length = 3;
      scalar = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      length = 4;
      scalar = lead & 0x07;
    } else {
      throw ParseError(kModule, "invalid UTF-8 lead byte", i + 1);
    }
    if (i + length > text.size()) throw ParseError(kModule, "truncated UTF-8 sequence", i + 1);
    for (std::size_t k = 1; k < length; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) throw ParseError(kModule, "invalid UTF-8 continuation", i + k + 1);
      scalar = (scalar << 6) | (cont & 0x3F);
    }
    const bool overlong = (length == 2 && scalar < 0x80) || (length == 3 && scalar < 0x800) ||
                          (length == 4 && scalar < 0x10000);
    if (overlong || scalar > 0x10FFFF || (scalar >= 0xD800 && scalar <= 0xDFFF)) {
      throw ParseError(kModule, "invalid UTF-8 scalar", i + 1);
    }
    out.push_back(scalar);
    i += length;
  }
  return out;
}

std::string encode_utf8(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  for (const char32_t c : text) out += encode_utf8(c);
  return out;
}

GlyphTable::GlyphTable(const std::array<char32_t, kSexagesimalBase>& forward,
                       const std::vector<std::pair<char32_t, int>>& aliases)
    : forward_(forward) {
  for (std::size_t v = 0; v < forward_.size(); ++v) {
    if (is_reserved(forward_[v])) throw DomainError(kModule, "glyph collides with a separator");
    if (!reverse_.emplace(forward_[v], SexDigit(static_cast<int>(v))).second) {
      throw DomainError(kModule, "glyph table is not injective");
    }
  }
  for (const auto& [glyph, value] : aliases) {
    if (reverse_.contains(glyph) || is_reserved(glyph)) {
      throw DomainError(kModule, "alias shadows a primary glyph");
    }
    aliases_.emplace(glyph, SexDigit(value));
  }
}

const GlyphTable& GlyphTable::standard() {
  static const GlyphTable table(standard_forward(), {
                                                        {U'ϕ', 56},  // phi symbol
                                                        {U'ϵ', 40},  // lunate epsilon
                                                        {U'ϑ', 43},  // theta symbol
                                                        {U'ο', 50},  // Greek omicron
                                                    });
  return table;
}

std::optional<SexDigit> GlyphTable::lookup(char32_t glyph) const {
  if (const auto it = reverse_.find(glyph); it != reverse_.end()) return it->second;
  if (const auto it = aliases_.find(glyph); it != aliases_.end()) return it->second;
  return std::nullopt;
}

std::string encode_glyphs(const SexNumber& x, const GlyphTable& table) {
  std::string out = x.sign() == Sign::negative ? "-" : "";
  for (const SexDigit d : x.integer_digits()) out += encode_utf8(table.glyph(d));
  if (x.frac_count() > 0) {
    out.push_back(';');
    for (const SexDigit d : x.fractional_digits()) out += encode_utf8(table.glyph(d));
  }
  return out;
}

SexNumber decode_glyphs(std::string_view text, const GlyphTable& table) {
  const std::u32string scalars = decode_utf8(text);
  Sign sign = Sign::positive;
  std::vector<SexDigit> digits;
  std::optional<std::size_t> radix_at;  // digit count before ';'
  bool seen_digit = false;
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    const char32_t c = scalars[i];
    if (is_space(c)) continue;
    if (c == U'-') {
      if (seen_digit || radix_at || sign == Sign::negative) {
        throw ParseError(kModule, "misplaced sign", i + 1);
      }
      sign = Sign::negative;
    } else if (c == U';') {
      if (radix_at || !seen_digit) throw ParseError(kModule, "misplaced radix point", i + 1);
      radix_at = digits.size();
    } else if (const auto digit = table.lookup(c)) {
      digits.push_back(*digit);
      seen_digit = true;
    } else {
      throw UnknownGlyph(c, i + 1);
    }
  }
  if (!seen_digit) throw ParseError(kModule, "no glyphs", scalars.size() + 1);
  if (radix_at && *radix_at == digits.size()) {
    throw ParseError(kModule, "missing fractional glyphs", scalars.size() + 1);
  }
  const std::size_t frac_count = radix_at ? digits.size() - *radix_at : 0;
  return SexNumber::from_digits(sign, std::move(digits), frac_count);
}

std::vector<SexDigit> decode_glyph_digits(std::string_view text, const GlyphTable& table) {
  const std::u32string scalars = decode_utf8(text);
  std::vector<SexDigit> digits;
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    if (is_space(scalars[i])) continue;
    const auto digit = table.lookup(scalars[i]);
    if (!digit) throw UnknownGlyph(scalars[i], i + 1);
    digits.push_back(*digit);
  }
  if (digits.empty()) throw ParseError(kModule, "no glyphs", scalars.size() + 1);
  return digits;
}

std::string encode_glyph_digits(const std::vector<SexDigit>& digits, const GlyphTable& table) {
  std::string out;
  for (const SexDigit d : digits) out += encode_utf8(table.glyph(d));
  return out;
}

std::string join_canonical(const std::vector<SexDigit>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out.push_back(':');
    out += std::to_string(digits[i].value());
  }
  return out;
}

std::string encode_canonical(const SexNumber& x) {
  std::string out = x.sign() == Sign::negative ? "-" : "";
  const auto integer = x.integer_digits();
  out += join_canonical({integer.begin(), integer.end()});
  if (x.frac_count() > 0) {
    const auto fraction = x.fractional_digits();
    out += ";" + join_canonical({fraction.begin(), fraction.end()});
  }
  return out;
}

SexNumber decode_canonical(std::string_view text) {
  std::size_t i = 0;
  Sign sign = Sign::positive;
  if (i < text.size() && text[i] == '-') {
    sign = Sign::negative;
    ++i;
  }
  std::vector<SexDigit> digits;
  std::optional<std::size_t> radix_at;
  while (true) {
    if (i >= text.size() || text[i] < '0' || text[i] > '9') {
      throw ParseError(kModule, "expected sexagesit", i + 1);
    }
    const std::size_t token_start = i;
    int value = 0;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
      value = value * 10 + (text[i] - '0');
      if (value > 59) {
        throw RangeError(kModule, "sexagesit '" + std::string(text.substr(token_start, i - token_start + 1)) +
                                      "' at position " + std::to_string(token_start + 1) +
                                      " exceeds 59");
      }
    }
    digits.emplace_back(value);
    if (i == text.size()) break;
    if (text[i] == ';' && !radix_at) {
      radix_at = digits.size();
    } else if (text[i] != ':') {
      throw ParseError(kModule, "unexpected character", i + 1);
    }
    ++i;
  }
  const std::size_t frac_count = radix_at ? digits.size() - *radix_at : 0;
  return SexNumber::from_digits(sign, std::move(digits), frac_count);
}

}  // namespace sexa
