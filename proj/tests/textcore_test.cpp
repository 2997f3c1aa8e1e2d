//
// Copyright 2026 The Diacritica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "diacritica/textcore.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifdef DIACRITICA_HAVE_ICU
#include <unicode/uchar.h>
#include <unicode/uversion.h>
#endif

namespace diacritica {
namespace {

const std::vector<std::string> kLanguages = {
    "croatian", "czech",  "french",  "hungarian", "irish",   "latvian",   "lithuanian",
    "polish",   "romanian", "slovak", "spanish",  "turkish", "vietnamese"};

DiacriticTable LoadTable(const std::string& language) {
  return DiacriticTable::load(std::string(DIACRITICA_TABLE_DIR) + "/" + language + ".tsv");
}

TEST(DiacriticTableTest, LowercaseCountsMatchLanguageInventories) {
  const std::map<std::string, std::size_t> expected = {
      {"croatian", 5},  {"czech", 19},     {"french", 15},   {"hungarian", 9}, {"irish", 5},
      {"latvian", 15},  {"lithuanian", 9}, {"polish", 9},    {"romanian", 6},  {"slovak", 25},
      {"spanish", 7},   {"turkish", 11},   {"vietnamese", 67}};
  for (const auto& [language, count] : expected) {
    const DiacriticTable table = LoadTable(language);
    EXPECT_EQ(table.language(), language);
    EXPECT_EQ(table.lowercase_letter_count(), count) << language;
  }
}

TEST(DiacriticTableTest, BaseLettersAreNeverStripped) {
  for (const auto& language : kLanguages) {
    const DiacriticTable table = LoadTable(language);
    for (const auto& p : table.pairs()) {
      EXPECT_FALSE(table.contains(p.base)) << language;
      EXPECT_EQ(table.base_of(p.base), p.base);
      EXPECT_TRUE(is_letter(p.diacritic));
      EXPECT_TRUE(is_letter(p.base));
    }
  }
}

TEST(DiacriticTableTest, ParseRejectsBadTables) {
  std::istringstream self("a\ta\n");
  EXPECT_THROW(DiacriticTable::parse("x", self), DataError);
  std::istringstream dup("á\ta\ná\ta\n");
  EXPECT_THROW(DiacriticTable::parse("x", dup), DataError);
  std::istringstream chain("á\ta\né\tá\n");
  EXPECT_THROW(DiacriticTable::parse("x", chain), DataError);
  std::istringstream multi("œ\toe\n");
  EXPECT_THROW(DiacriticTable::parse("x", multi), DataError);
  std::istringstream no_tab("á a\n");
  EXPECT_THROW(DiacriticTable::parse("x", no_tab), DataError);
  std::istringstream ok("# comment\n\ná\ta\r\n");
  EXPECT_EQ(DiacriticTable::parse("x", ok).pairs().size(), 1u);
  EXPECT_THROW(DiacriticTable::load("/nonexistent/table.tsv"), DataError);
}

TEST(StripTest, Examples) {
  const DiacriticTable czech = LoadTable("czech");
  EXPECT_EQ(strip_diacritics("š", czech), "s");
  EXPECT_EQ(strip_diacritics("hello", czech), "hello");
  EXPECT_EQ(strip_diacritics("", czech), "");
  EXPECT_EQ(strip_diacritics("Příliš žluťoučký kůň", czech), "Prilis zlutoucky kun");

  const DiacriticTable polish = LoadTable("polish");
  EXPECT_EQ(strip_diacritics("łódź", polish), "lodz");
  const DiacriticTable croatian = LoadTable("croatian");
  EXPECT_EQ(strip_diacritics("đak", croatian), "dak");
  const DiacriticTable turkish = LoadTable("turkish");
  EXPECT_EQ(strip_diacritics("ılık", turkish), "ilik");
  EXPECT_EQ(strip_diacritics("iş", turkish), "is");
}

TEST(StripTest, LithuanianMatchesHandBuiltMapping) {
  const std::map<char32_t, char32_t> oracle = {
      {U'ą', U'a'}, {U'č', U'c'}, {U'ę', U'e'}, {U'ė', U'e'}, {U'į', U'i'},
      {U'š', U's'}, {U'ų', U'u'}, {U'ū', U'u'}, {U'ž', U'z'}};
  const DiacriticTable table = LoadTable("lithuanian");
  const auto apply = [&](const std::string& s) {
    std::u32string out;
    for (char32_t c : to_u32(s)) {
      const auto it = oracle.find(c);
      out.push_back(it == oracle.end() ? c : it->second);
    }
    return to_utf8(out);
  };
  EXPECT_EQ(strip_diacritics("ąžuolas", table), "azuolas");
  for (const std::string s : {"ąžuolas", "žąsis", "ėjo į mūšį", "grįžtų čia", "labas"}) {
    EXPECT_EQ(strip_diacritics(s, table), apply(s)) << s;
  }
}

// Random strings mixing table letters, ASCII and arbitrary scalars.
std::string RandomText(std::mt19937_64& rng, const DiacriticTable& table) {
  std::uniform_int_distribution<int> len(0, 24);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, table.pairs().size() - 1);
  std::uniform_int_distribution<char32_t> ascii(0x20, 0x7E);
  std::uniform_int_distribution<char32_t> any(0xA0, 0x10FFFF);
  std::u32string out;
  for (int i = len(rng); i > 0; --i) {
    switch (kind(rng)) {
      case 0: out.push_back(table.pairs()[pick(rng)].diacritic); break;
      case 1: out.push_back(table.pairs()[pick(rng)].base); break;
      case 2: out.push_back(ascii(rng)); break;
      default: {
        char32_t c = any(rng);
        if (c >= 0xD800 && c <= 0xDFFF) c = U'x';
        out.push_back(c);
      }
    }
  }
  return to_utf8(out);
}

TEST(StripTest, IdempotentLengthPreservingFixedPoint) {
  std::mt19937_64 rng(20260101);
  std::vector<DiacriticTable> tables;
  for (const auto& language : kLanguages) tables.push_back(LoadTable(language));
  for (int n = 0; n < 10000; ++n) {
    const DiacriticTable& table = tables[n % tables.size()];
    const std::string x = RandomText(rng, table);
    const std::string once = strip_diacritics(x, table);
    ASSERT_EQ(strip_diacritics(once, table), once);
    ASSERT_EQ(char_count(once), char_count(x));
    ASSERT_FALSE(is_diacritized(once, table));
    if (!is_diacritized(x, table)) {
      ASSERT_EQ(once, x);
    }
  }
}

TEST(IsDiacritizedTest, Examples) {
  const DiacriticTable french = LoadTable("french");
  EXPECT_TRUE(is_diacritized("ça", french));
  EXPECT_FALSE(is_diacritized("va", french));
  EXPECT_TRUE(is_diacritized("žąsis", LoadTable("lithuanian")));
}

TEST(TokenizeTest, Examples) {
  const Sentence s = tokenize("ça va bien");
  ASSERT_EQ(s.size(), 3u);
  for (const auto& t : s.tokens) EXPECT_TRUE(t.is_alpha);
  EXPECT_TRUE(tokenize("").empty());

  const Sentence mixed = tokenize("abc 123 a1");
  ASSERT_EQ(mixed.size(), 3u);
  EXPECT_TRUE(mixed.tokens[0].is_alpha);
  EXPECT_FALSE(mixed.tokens[1].is_alpha);
  EXPECT_FALSE(mixed.tokens[2].is_alpha);
}

TEST(TokenizeTest, RoundTripsRegularLines) {
  for (const std::string line : {"ça va bien", "a", "x , y .", "1 2 3"}) {
    EXPECT_EQ(tokenize(line).to_line(), line);
  }
}

TEST(TokenizeTest, IrregularSpacingIsCountedOncePerLine) {
  Diagnostics diag;
  EXPECT_EQ(tokenize("a  b   c", &diag).size(), 3u);
  EXPECT_EQ(diag.irregular_spacing_lines.load(), 1u);
  EXPECT_EQ(tokenize(" a b ", &diag).to_line(), "a b");
  EXPECT_EQ(diag.irregular_spacing_lines.load(), 2u);
  tokenize("a b", &diag);
  tokenize("", &diag);
  EXPECT_EQ(diag.irregular_spacing_lines.load(), 2u);
}

TEST(AlphaWordTest, CategoryRules) {
  EXPECT_TRUE(is_alpha_word("ąžuolas"));
  EXPECT_TRUE(is_alpha_word("ǅ"));        // Lt
  EXPECT_TRUE(is_alpha_word("ʰ"));        // Lm
  EXPECT_TRUE(is_alpha_word("中文"));     // Lo
  EXPECT_FALSE(is_alpha_word(""));
  EXPECT_FALSE(is_alpha_word("don't"));
  EXPECT_FALSE(is_alpha_word("e\xCC\x81"));  // combining mark is Mn
  EXPECT_FALSE(is_alpha_word("\xFF"));
}

TEST(CorpusStatsTest, Examples) {
  const DiacriticTable french = LoadTable("french");
  const std::vector<std::string> one = {"ça va"};
  const CorpusStats s = corpus_stats(one, french);
  EXPECT_EQ(s.sentences, 1u);
  EXPECT_EQ(s.alpha_words, 2u);
  EXPECT_DOUBLE_EQ(s.diacritic_word_pct(), 50.0);
  EXPECT_DOUBLE_EQ(s.diacritic_letter_pct(), 25.0);

  const std::vector<std::string> ascii = {"hello world 42"};
  const CorpusStats a = corpus_stats(ascii, french);
  EXPECT_EQ(a.alpha_words, 2u);
  EXPECT_DOUBLE_EQ(a.diacritic_word_pct(), 0.0);
  EXPECT_TRUE(a.defined());

  const std::vector<std::string> none;
  const CorpusStats e = corpus_stats(none, french);
  EXPECT_FALSE(e.defined());
  EXPECT_EQ(e.alpha_words, 0u);
  EXPECT_DOUBLE_EQ(e.diacritic_word_pct(), 0.0);
}

TEST(CorpusStatsTest, MergeEqualsSinglePass) {
  const DiacriticTable czech = LoadTable("czech");
  const std::vector<std::string> lines = {"žluťoučký kůň", "pěl 12 ódy", "", "a b c"};
  CorpusStats merged;
  for (const auto& l : lines) {
    CorpusStats part;
    part.add(l, czech);
    merged.merge(part);
  }
  const CorpusStats whole = corpus_stats(lines, czech);
  EXPECT_EQ(merged.alpha_words, whole.alpha_words);
  EXPECT_EQ(merged.letters, whole.letters);
  EXPECT_EQ(merged.diacritic_letters, whole.diacritic_letters);
  EXPECT_EQ(whole.sentences, 4u);
  EXPECT_EQ(whole.alpha_words, 7u);
  EXPECT_EQ(whole.diacritized_alpha_words, 4u);
}

#ifdef DIACRITICA_HAVE_ICU

// ICU's database may be newer than the generated table; only scalars
// assigned by our table's version are compared.
bool AssignedByTableVersion(UChar32 c) {
  UVersionInfo age;
  u_charAge(c, age);
  return age[0] != 0 && (age[0] < 13 || (age[0] == 13 && age[1] == 0));
}

bool IcuLetter(UChar32 c) {
  switch (u_charType(c)) {
    case U_UPPERCASE_LETTER:
    case U_LOWERCASE_LETTER:
    case U_TITLECASE_LETTER:
    case U_MODIFIER_LETTER:
    case U_OTHER_LETTER:
      return true;
    default:
      return false;
  }
}

TEST(AlphaWordTest, AgreesWithIcuOnEveryScalar) {
  std::size_t compared = 0;
  for (UChar32 c = 0; c <= 0x10FFFF; ++c) {
    if (c >= 0xD800 && c <= 0xDFFF) continue;
    if (!AssignedByTableVersion(c)) continue;
    ASSERT_EQ(is_letter(static_cast<char32_t>(c)), IcuLetter(c)) << std::hex << c;
    ++compared;
  }
  EXPECT_GT(compared, 140000u);
}

TEST(AlphaWordTest, AgreesWithIcuOnFuzzedTokens) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> plane(0, 9);
  std::uniform_int_distribution<UChar32> latin(0x41, 0x24F);
  std::uniform_int_distribution<UChar32> bmp(0x20, 0xFFFF);
  std::uniform_int_distribution<UChar32> any(0x20, 0x10FFFF);
  int tokens = 0, alpha = 0;
  while (tokens < 10000) {
    std::u32string token;
    bool icu_alpha = true;
    for (int i = len(rng); i > 0;) {
      const int p = plane(rng);
      const UChar32 c = p < 6 ? latin(rng) : p < 9 ? bmp(rng) : any(rng);
      if ((c >= 0xD800 && c <= 0xDFFF) || c == 0x20 || !AssignedByTableVersion(c)) continue;
      token.push_back(static_cast<char32_t>(c));
      icu_alpha = icu_alpha && IcuLetter(c);
      --i;
    }
    ASSERT_EQ(is_alpha_word(to_utf8(token)), icu_alpha) << to_utf8(token);
    ++tokens;
    alpha += icu_alpha ? 1 : 0;
  }
  // Both classes must be exercised.
  EXPECT_GT(alpha, 1000);
  EXPECT_LT(alpha, 9000);
}

#endif  // DIACRITICA_HAVE_ICU

}  // namespace
}  // namespace diacritica
