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

#include "diacritica/restore.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "diacritica/evalkit.hpp"

namespace diacritica {
namespace {

DiacriticTable French() {
  return DiacriticTable::load(std::string(DIACRITICA_TABLE_DIR) + "/french.tsv");
}

std::shared_ptr<const UnigramLexicon> Lexicon(const std::vector<std::string>& corpus) {
  return std::make_shared<const UnigramLexicon>(build_lexicon(corpus, French()));
}

// Returns a fixed line for every input.
class FixedBackend final : public RestorationBackend {
 public:
  explicit FixedBackend(std::string line) : line_(std::move(line)) {}
  std::string restore_sentence(std::string_view) override { return line_; }
  std::string name() const override { return "fixed"; }

 private:
  std::string line_;
};

TEST(IdentityBackendTest, ReturnsInput) {
  IdentityBackend identity;
  EXPECT_EQ(identity.restore_sentence("ca va"), "ca va");
  EXPECT_EQ(identity.restore_sentence(""), "");
  EXPECT_EQ(identity.name(), "identity");
}

TEST(DictionaryBackendTest, Examples) {
  DictionaryBackend dict(Lexicon({"ça va"}));
  EXPECT_EQ(dict.restore_sentence("ca va"), "ça va");
  EXPECT_EQ(dict.restore_sentence("xx yy"), "xx yy");
  EXPECT_EQ(dict.restore_sentence(""), "");
  EXPECT_EQ(split_tokens(dict.restore_sentence("ca ca va zz")).size(), 4u);
}

TEST(HybridTest, SingleCandidateWordsOverwriteBackend) {
  const auto lex = Lexicon({"ça", "va", "vá"});
  const HybridOutcome r = merge_hybrid("ca va", "cà và", *lex, {});
  EXPECT_TRUE(r.aligned);
  EXPECT_EQ(r.line, "ça và");
  EXPECT_EQ(r.routes, (std::vector<RouteSource>{RouteSource::kDictionary, RouteSource::kBackend}));

  HybridBackend hybrid(lex, std::make_shared<FixedBackend>("cà va"));
  EXPECT_EQ(hybrid.restore_sentence("ca va"), "ça va");
  EXPECT_EQ(hybrid.name(), "hybrid(fixed)");
}

TEST(HybridTest, MisalignedOutputUsesFallback) {
  const auto lex = Lexicon({"ça va"});
  Diagnostics diag;
  HybridBackend keep_backend(lex, std::make_shared<FixedBackend>("çava"), {}, &diag);
  EXPECT_EQ(keep_backend.restore_sentence("ca va"), "çava");
  EXPECT_EQ(diag.alignment_fallbacks.load(), 1u);

  HybridBackend keep_dict(lex, std::make_shared<FixedBackend>("ça va bien"),
                          {AlignmentFallback::kKeepDictionary}, &diag);
  EXPECT_EQ(keep_dict.restore_sentence("ca va"), "ça va");
  EXPECT_EQ(diag.alignment_fallbacks.load(), 2u);

  EXPECT_FALSE(merge_hybrid("a b", "a", *lex, {}).aligned);
  EXPECT_TRUE(merge_hybrid("a b", "a", *lex, {}).routes.empty());

  EXPECT_EQ(parse_alignment_fallback("keep_dictionary"), AlignmentFallback::kKeepDictionary);
  EXPECT_EQ(parse_alignment_fallback("keep_backend"), AlignmentFallback::kKeepBackend);
  EXPECT_THROW(parse_alignment_fallback("merge"), UsageError);
}

std::vector<std::string> RandomFrenchCorpus(std::mt19937_64& rng, std::size_t n,
                                            const std::vector<std::string>& words) {
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> len(0, 10);
  std::vector<std::string> out;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::string> tokens;
    for (int i = len(rng); i > 0; --i) tokens.push_back(words[pick(rng)]);
    out.push_back(join_tokens(tokens));
  }
  return out;
}

TEST(HybridTest, ReducesToDictionaryWhenEveryWordIsSingleCandidate) {
  std::mt19937_64 rng(1);
  const std::vector<std::string> words = {"ça", "été", "où", "le", "élève", "42", "déjà"};
  const auto gold = RandomFrenchCorpus(rng, 500, words);
  const auto lex = Lexicon(gold);
  HybridBackend hybrid(lex, std::make_shared<IdentityBackend>());
  DictionaryBackend dict(lex);
  for (const auto& line : gold) {
    const std::string input = strip_diacritics(line, French());
    EXPECT_EQ(hybrid.restore_sentence(input), dict.restore_sentence(input));
  }
}

TEST(HybridTest, RoutingPartitionAndTokenCount) {
  std::mt19937_64 rng(2);
  const std::vector<std::string> words = {"ça", "ca", "été", "ete", "où", "ou", "le", "là", "la"};
  const auto gold = RandomFrenchCorpus(rng, 300, words);
  const auto lex = Lexicon(gold);
  std::vector<std::string> inputs, identity_out, hybrid_out;
  for (const auto& line : gold) {
    const std::string input = strip_diacritics(line, French());
    const HybridOutcome r = merge_hybrid(input, input, *lex, {});
    ASSERT_TRUE(r.aligned);
    const auto in_tokens = split_tokens(input);
    ASSERT_EQ(r.routes.size(), in_tokens.size());
    ASSERT_EQ(split_tokens(r.line).size(), in_tokens.size());
    for (std::size_t i = 0; i < in_tokens.size(); ++i) {
      const bool single = lex->candidate_count(in_tokens[i]) == 1;
      EXPECT_EQ(r.routes[i] == RouteSource::kDictionary, single);
    }
    identity_out.push_back(input);
    hybrid_out.push_back(r.line);
  }
  EXPECT_GE(alpha_word_accuracy(gold, hybrid_out).accuracy(),
            alpha_word_accuracy(gold, identity_out).accuracy());
}

// Fails the first `failures` calls for every sentence.
class FlakyBackend final : public RestorationBackend {
 public:
  explicit FlakyBackend(int failures) : failures_(failures) {}
  std::string restore_sentence(std::string_view line) override {
    if (calls_++ < failures_) throw ConnectionError("flaky");
    return std::string(line);
  }
  std::string name() const override { return "flaky"; }
  bool concurrent() const override { return false; }

 private:
  int failures_;
  int calls_ = 0;
};

TEST(RestoreBatchTest, KeepsOrderRetriesAndRecordsFailures) {
  std::vector<std::string> lines;
  for (int i = 0; i < 1000; ++i) lines.push_back("line " + std::to_string(i));
  IdentityBackend identity;
  const BatchResult ok = restore_batch(identity, lines, 8);
  EXPECT_EQ(ok.lines, lines);
  EXPECT_TRUE(ok.failures.empty());

  FlakyBackend flaky(2);
  const BatchResult retried = restore_batch(flaky, lines, 8, 2);
  EXPECT_EQ(retried.lines, lines);
  EXPECT_TRUE(retried.failures.empty());

  FlakyBackend broken(1 << 30);
  const BatchResult failed = restore_batch(broken, {"a", "b"}, 4, 1);
  ASSERT_EQ(failed.failures.size(), 2u);
  EXPECT_EQ(failed.failures[1].index, 1u);
  EXPECT_EQ(failed.lines, (std::vector<std::string>{"", ""}));

  FixedBackend multiline("a\nb");
  const BatchResult bad = restore_batch(multiline, {"x"}, 1);
  ASSERT_EQ(bad.failures.size(), 1u);
}

}  // namespace
}  // namespace diacritica
