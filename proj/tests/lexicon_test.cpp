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

#include "diacritica/lexicon.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diacritica/evalkit.hpp"

namespace diacritica {
namespace {

DiacriticTable LoadTable(const std::string& language) {
  return DiacriticTable::load(std::string(DIACRITICA_TABLE_DIR) + "/" + language + ".tsv");
}

// Random Lithuanian-looking corpus.
std::vector<std::string> RandomCorpus(std::mt19937_64& rng, std::size_t sentences) {
  static const std::vector<std::string> words = {
      "ąžuolas", "azuolas", "žąsis",  "zasis", "šala", "sala", "sąla", "čia", "cia",
      "ir",      "bet",     "mūšis",  "musis", "42",   ",",    "ėjo",  "ejo", "į",
      "i",       "kęstas",  "kestas", "ūkis",  "ukis", "x1"};
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> len(0, 12);
  std::vector<std::string> out;
  for (std::size_t s = 0; s < sentences; ++s) {
    std::string line;
    for (int i = len(rng); i > 0; --i) {
      if (!line.empty()) line.push_back(' ');
      line += words[pick(rng)];
    }
    out.push_back(line);
  }
  return out;
}

TEST(LexiconTest, BuildCountsEveryToken) {
  const DiacriticTable french = LoadTable("french");
  const std::vector<std::string> corpus = {"ça ca ça"};
  const UnigramLexicon lex = build_lexicon(corpus, french);
  const auto* c = lex.candidates("ca");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(*c, (std::vector<Candidate>{{"ça", 2}, {"ca", 1}}));
  EXPECT_EQ(lex.restore_word("ca"), "ça");
  EXPECT_EQ(lex.restore_word("zzz"), "zzz");
  EXPECT_EQ(lex.candidate_count("ca"), 2u);
  EXPECT_EQ(lex.candidate_count("zzz"), 0u);
  EXPECT_EQ(lex.key_total("ca"), 3u);

  const std::vector<std::string> numbers = {"1 , 1"};
  EXPECT_EQ(build_lexicon(numbers, french).candidate_count("1"), 1u);
  const std::vector<std::string> empty = {""};
  EXPECT_TRUE(build_lexicon(empty, french).empty());
}

TEST(LexiconTest, TiesBreakLexicographically) {
  const DiacriticTable table = LoadTable("lithuanian");
  const std::vector<std::string> one = {"šala sąla šala sąla šala sąla šala sąla šala sąla"};
  const std::vector<std::string> other = {"sąla sąla sąla sąla sąla", "šala šala šala šala šala"};
  // "sąla" < "šala" in code point order (s < š).
  for (const auto* corpus : {&one, &other}) {
    const UnigramLexicon lex = build_lexicon(*corpus, table);
    EXPECT_EQ(lex.restore_word("sala"), "sąla");
    EXPECT_EQ(*lex.candidates("sala"), (std::vector<Candidate>{{"sąla", 5}, {"šala", 5}}));
  }
}

TEST(LexiconTest, SaveLoadRoundTripAndDeterminism) {
  const DiacriticTable table = LoadTable("lithuanian");
  std::mt19937_64 rng(1);
  const auto corpus = RandomCorpus(rng, 500);
  const UnigramLexicon lex = build_lexicon(corpus, table);
  std::ostringstream out;
  lex.save(out);
  std::istringstream in(out.str());
  const UnigramLexicon back = UnigramLexicon::load(in, table);
  EXPECT_TRUE(back == lex);
  std::ostringstream again;
  back.save(again);
  EXPECT_EQ(again.str(), out.str());

  // Shards merged in any order give the same file.
  UnigramLexicon merged(table.language());
  for (std::size_t start = corpus.size(); start > 0; start -= 100) {
    const std::vector<std::string> shard(corpus.begin() + (start - 100), corpus.begin() + start);
    merged.merge(build_lexicon(shard, table));
  }
  merged.finalize();
  std::ostringstream merged_out;
  merged.save(merged_out);
  EXPECT_EQ(merged_out.str(), out.str());
}

TEST(LexiconTest, LoadRejectsInconsistentFiles) {
  const DiacriticTable czech = LoadTable("czech");
  std::istringstream mismatch("ca\tčb\t3\n");
  EXPECT_THROW(UnigramLexicon::load(mismatch, czech), DataError);
  std::istringstream fields("ca\tca\n");
  EXPECT_THROW(UnigramLexicon::load(fields, czech), DataError);
  std::istringstream count("ca\tca\tx\n");
  EXPECT_THROW(UnigramLexicon::load(count, czech), DataError);
  std::istringstream zero("ca\tca\t0\n");
  EXPECT_THROW(UnigramLexicon::load(zero, czech), DataError);
  std::istringstream dup("ca\tca\t1\nca\tca\t2\n");
  EXPECT_THROW(UnigramLexicon::load(dup, czech), DataError);
  std::istringstream empty("");
  EXPECT_TRUE(UnigramLexicon::load(empty, czech).empty());
  std::istringstream unsorted("cas\tcas\t1\ncas\tčas\t9\n");
  EXPECT_EQ(UnigramLexicon::load(unsorted, czech).restore_word("cas"), "čas");
}

TEST(LexiconTest, RequiresFinalizeBeforeLookup) {
  const DiacriticTable czech = LoadTable("czech");
  UnigramLexicon lex("czech");
  lex.add("čas", czech);
  EXPECT_THROW(lex.candidates("cas"), std::logic_error);
  lex.finalize();
  EXPECT_EQ(lex.restore_word("cas"), "čas");
}

TEST(LexiconTest, InvariantsHoldOnRandomCorpus) {
  const DiacriticTable table = LoadTable("lithuanian");
  std::mt19937_64 rng(2);
  const auto corpus = RandomCorpus(rng, 2000);
  const UnigramLexicon lex = build_lexicon(corpus, table);

  // Oracle: plain hash count of surface words, grouped by stripped key.
  std::map<std::string, std::uint64_t> key_totals;
  std::map<std::string, std::uint64_t> word_counts;
  for (const auto& line : corpus) {
    std::istringstream words(line);
    std::string w;
    while (words >> w) {
      ++word_counts[w];
      ++key_totals[strip_diacritics(w, table)];
    }
  }
  EXPECT_EQ(lex.size(), key_totals.size());
  for (const auto& [key, total] : key_totals) EXPECT_EQ(lex.key_total(key), total) << key;

  for (const auto& [key, cands] : lex.entries()) {
    for (std::size_t i = 0; i < cands.size(); ++i) {
      EXPECT_EQ(strip_diacritics(cands[i].form, table), key);
      EXPECT_EQ(cands[i].count, word_counts.at(cands[i].form));
      if (i > 0) {
        EXPECT_TRUE(candidate_before(cands[i - 1], cands[i]));
      }
    }
    // Strip-stability of restoration.
    EXPECT_EQ(strip_diacritics(lex.restore_word(key), table), key);
  }
  for (const std::string w : {"unseen", "zzz", "42"}) {
    EXPECT_EQ(strip_diacritics(lex.restore_word(w), table), w);
  }
}

TEST(LexiconTest, TrainingSetRestorationBeatsRaw) {
  const DiacriticTable table = LoadTable("lithuanian");
  std::mt19937_64 rng(3);
  const auto gold = RandomCorpus(rng, 3000);
  const UnigramLexicon lex = build_lexicon(gold, table);
  std::vector<std::string> stripped, restored;
  for (const auto& line : gold) {
    stripped.push_back(strip_diacritics(line, table));
    std::string out;
    for (std::string_view tok : split_tokens(stripped.back())) {
      if (!out.empty()) out.push_back(' ');
      out += lex.restore_word(tok);
    }
    restored.push_back(out);
  }
  const EvalReport raw = alpha_word_accuracy(gold, stripped);
  const EvalReport dict = alpha_word_accuracy(gold, restored);
  EXPECT_GE(dict.accuracy(), raw.accuracy());
  EXPECT_LT(raw.accuracy(), 100.0);
}

TEST(FrequencyIndexTest, FromLinesAndLexiconAgree) {
  const DiacriticTable table = LoadTable("lithuanian");
  std::mt19937_64 rng(4);
  const auto corpus = RandomCorpus(rng, 300);
  const FrequencyIndex a = FrequencyIndex::from_lines(corpus);
  const FrequencyIndex b = FrequencyIndex::from_lexicon(build_lexicon(corpus, table));
  EXPECT_EQ(a.counts(), b.counts());
  EXPECT_EQ(a.total(), b.total());
  EXPECT_FALSE(a.contains("never"));
}

}  // namespace
}  // namespace diacritica
