#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sexa/codec.hpp"
#include "sexa/error.hpp"

using sexa::GlyphTable;
using sexa::SexDigit;
using sexa::SexNumber;
using sexa::Sign;

namespace {

SexNumber sn(std::initializer_list<int> digits, std::size_t frac_count, Sign sign = Sign::positive) {
  return SexNumber::from_digits(sign, sexa::make_digits(digits), frac_count);
}

}  // namespace

TEST(GlyphTable, StandardIsBijective) {
  const GlyphTable& t = GlyphTable::standard();
  std::set<char32_t> seen;
  for (int v = 0; v < 60; ++v) {
    const char32_t g = t.glyph(SexDigit(v));
    EXPECT_TRUE(seen.insert(g).second) << "duplicate glyph for " << v;
    ASSERT_TRUE(t.lookup(g).has_value());
    EXPECT_EQ(t.lookup(g)->value(), v);
    EXPECT_FALSE(t.is_alias(g));
  }
}

TEST(GlyphTable, Layout) {
  const GlyphTable& t = GlyphTable::standard();
  EXPECT_EQ(t.glyph(SexDigit(0)), U'0');
  EXPECT_EQ(t.glyph(SexDigit(9)), U'9');
  EXPECT_EQ(t.glyph(SexDigit(10)), U'A');
  EXPECT_EQ(t.glyph(SexDigit(35)), U'Z');
  EXPECT_EQ(t.glyph(SexDigit(36)), U'α');
  EXPECT_EQ(t.glyph(SexDigit(50)), U'o');
  EXPECT_EQ(t.glyph(SexDigit(56)), U'φ');
  EXPECT_EQ(t.glyph(SexDigit(59)), U'ω');
}

TEST(GlyphTable, Aliases) {
  const GlyphTable& t = GlyphTable::standard();
  EXPECT_EQ(t.lookup(U'ϕ')->value(), 56);
  EXPECT_EQ(t.lookup(U'ϵ')->value(), 40);
  EXPECT_EQ(t.lookup(U'ϑ')->value(), 43);
  EXPECT_EQ(t.lookup(U'ο')->value(), 50);
  EXPECT_TRUE(t.is_alias(U'ϕ'));
  // Aliases decode but never encode.
  EXPECT_EQ(sexa::decode_glyphs("1ϕ"), sexa::decode_glyphs("1φ"));
  EXPECT_EQ(sexa::encode_glyphs(sexa::decode_glyphs("1ϕ")), "1φ");
}

TEST(GlyphTable, CaseSensitive) {
  const GlyphTable& t = GlyphTable::standard();
  EXPECT_EQ(t.lookup(U'o')->value(), 50);
  EXPECT_EQ(t.lookup(U'O')->value(), 24);
  EXPECT_EQ(t.lookup(U'V')->value(), 31);
  EXPECT_FALSE(t.lookup(U'v').has_value());
  EXPECT_FALSE(t.lookup(U'a').has_value());
}

TEST(GlyphTable, ConstructorValidates) {
  std::array<char32_t, 60> forward = GlyphTable::standard().forward();
  forward[1] = U'0';
  EXPECT_THROW(GlyphTable(forward, {}), sexa::DomainError);
  forward = GlyphTable::standard().forward();
  forward[1] = U';';
  EXPECT_THROW(GlyphTable(forward, {}), sexa::DomainError);
  forward = GlyphTable::standard().forward();
  EXPECT_THROW(GlyphTable(forward, {{U'A', 3}}), sexa::DomainError);
  EXPECT_NO_THROW(GlyphTable(forward, {{U'a', 10}}));
}

TEST(EncodeGlyphs, Examples) {
  EXPECT_EQ(sexa::encode_glyphs(SexNumber::from_integer(119)), "1ω");
  EXPECT_EQ(sexa::encode_glyphs(SexNumber()), "0");
  EXPECT_EQ(sexa::encode_glyphs(SexNumber::from_integer(4961)), "1Mζ");
  EXPECT_EQ(sexa::encode_glyphs(sn({1, 59, 0, 15}, 3)), "1;ω0F");
  EXPECT_EQ(sexa::encode_glyphs(sn({0, 30}, 1, Sign::negative)), "-0;U");
}

TEST(DecodeGlyphs, Examples) {
  EXPECT_EQ(sexa::decode_glyphs("1ω"), SexNumber::from_integer(119));
  EXPECT_EQ(sexa::decode_glyphs("φ 7"), SexNumber::from_integer(3367));
  EXPECT_EQ(sexa::decode_glyphs("-1;U"), sn({1, 30}, 1, Sign::negative));
}

TEST(DecodeGlyphs, UnknownGlyphPosition) {
  try {
    sexa::decode_glyphs("1vB");
    FAIL() << "expected UnknownGlyph";
  } catch (const sexa::UnknownGlyph& e) {
    EXPECT_EQ(e.glyph(), U'v');
    EXPECT_EQ(e.position(), 2u);
    EXPECT_STREQ(e.what(), "unknown glyph 'v' at position 2");
  }
  // Positions count scalars, not bytes.
  try {
    sexa::decode_glyphs("ωωy");
    FAIL() << "expected UnknownGlyph";
  } catch (const sexa::UnknownGlyph& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(DecodeGlyphs, MalformedLayout) {
  EXPECT_THROW(sexa::decode_glyphs(""), sexa::ParseError);
  EXPECT_THROW(sexa::decode_glyphs("1;2;3"), sexa::ParseError);
  EXPECT_THROW(sexa::decode_glyphs("1-2"), sexa::ParseError);
  EXPECT_THROW(sexa::decode_glyphs("\xff"), sexa::ParseError);
}

TEST(DecodeGlyphDigits, KeepsZeros) {
  EXPECT_EQ(sexa::decode_glyph_digits("01ω0"), sexa::make_digits({0, 1, 59, 0}));
  EXPECT_EQ(sexa::encode_glyph_digits(sexa::make_digits({0, 1, 59, 0})), "01ω0");
}

TEST(Canonical, Examples) {
  EXPECT_EQ(sexa::encode_canonical(sn({1, 59, 0, 15}, 3)), "1;59:0:15");
  EXPECT_EQ(sexa::encode_canonical(SexNumber::from_integer(169)), "2:49");
  EXPECT_EQ(sexa::encode_canonical(sn({0, 30}, 1, Sign::negative)), "-0;30");
  EXPECT_EQ(sexa::decode_canonical("1;59:0:15"), sn({1, 59, 0, 15}, 3));
  EXPECT_EQ(sexa::decode_canonical("0;0:30:0"), sn({0, 0, 30}, 2));
  EXPECT_EQ(sexa::join_canonical(sexa::make_digits({1, 59, 0, 15})), "1:59:0:15");
}

TEST(Canonical, Errors) {
  EXPECT_THROW(sexa::decode_canonical("1;60"), sexa::RangeError);
  try {
    sexa::decode_canonical("1;60");
  } catch (const sexa::RangeError& e) {
    EXPECT_NE(std::string(e.what()).find("60"), std::string::npos);
  }
  EXPECT_THROW(sexa::decode_canonical("1;;2"), sexa::ParseError);
  EXPECT_THROW(sexa::decode_canonical("1:"), sexa::ParseError);
  EXPECT_THROW(sexa::decode_canonical(""), sexa::ParseError);
  EXPECT_THROW(sexa::decode_canonical("1;a"), sexa::ParseError);
}

TEST(Codec, RandomRoundTrips) {
  std::mt19937 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t length = 1 + rng() % 10;
    std::vector<SexDigit> digits;
    for (std::size_t k = 0; k < length; ++k) digits.emplace_back(static_cast<int>(rng() % 60));
    const SexNumber x = SexNumber::from_digits(rng() % 4 == 0 ? Sign::negative : Sign::positive, digits,
                                               rng() % (length + 1));
    ASSERT_EQ(sexa::decode_glyphs(sexa::encode_glyphs(x)), x);
    ASSERT_EQ(sexa::decode_canonical(sexa::encode_canonical(x)), x);
    ASSERT_EQ(sexa::decode_glyph_digits(sexa::encode_glyph_digits(digits)), digits);
  }
}

TEST(Utf8, RoundTripAndStrictness) {
  const std::string text = "1φω;ο";
  EXPECT_EQ(sexa::encode_utf8(sexa::decode_utf8(text)), text);
  EXPECT_EQ(sexa::decode_utf8(text).size(), 5u);
  EXPECT_THROW(sexa::decode_utf8("\xc0\x80"), sexa::ParseError);      // overlong
  EXPECT_THROW(sexa::decode_utf8("\xed\xa0\x80"), sexa::ParseError);  // surrogate
  EXPECT_THROW(sexa::decode_utf8("\xe2\x82"), sexa::ParseError);      // truncated
}
