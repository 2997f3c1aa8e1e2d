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

// Alpha-word accuracy and error analysis.
//
// Gold and predicted sentences are aligned token by token. A gold alpha-word
// is correct iff the predicted token at the same position is identical;
// gold alpha-words past the end of the prediction are errors. Non-alpha gold
// tokens are ignored.

#ifndef DIACRITICA_EVALKIT_HPP_
#define DIACRITICA_EVALKIT_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "diacritica/error.hpp"
#include "diacritica/lexicon.hpp"
#include "diacritica/structured_text.hpp"
#include "diacritica/textcore.hpp"

namespace diacritica {

// Calls fn(gold_word, correct) for every gold alpha-word of one sentence pair.
template <typename Fn>
void for_each_gold_alpha_word(std::string_view gold_line, std::string_view pred_line, Fn&& fn) {
  const auto gold = split_tokens(gold_line);
  const auto pred = split_tokens(pred_line);
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (!is_alpha_word(gold[i])) continue;
    fn(gold[i], i < pred.size() && pred[i] == gold[i]);
  }
}

template <typename Lines, typename Fn>
void for_each_corpus_alpha_word(const Lines& gold, const Lines& pred, Fn&& fn) {
  if (gold.size() != pred.size()) {
    throw DataError("sentence count mismatch: gold has " + std::to_string(gold.size()) +
                    ", prediction has " + std::to_string(pred.size()));
  }
  for (std::size_t s = 0; s < gold.size(); ++s) {
    for_each_gold_alpha_word(std::string_view(gold[s]), std::string_view(pred[s]), fn);
  }
}

inline double percent(std::uint64_t part, std::uint64_t whole) {
  return whole ? 100.0 * static_cast<double>(part) / static_cast<double>(whole) : 0.0;
}

// Tg, Ts and accuracy = Ts / Tg * 100.
struct EvalReport {
  std::string system;
  std::uint64_t gold_alpha_words = 0;  // Tg
  std::uint64_t correct = 0;           // Ts

  void add(std::string_view gold_line, std::string_view pred_line) {
    for_each_gold_alpha_word(gold_line, pred_line, [&](std::string_view, bool ok) {
      ++gold_alpha_words;
      correct += ok ? 1 : 0;
    });
  }

  void merge(const EvalReport& o) {
    gold_alpha_words += o.gold_alpha_words;
    correct += o.correct;
  }

  bool defined() const noexcept { return gold_alpha_words > 0; }
  double accuracy() const { return percent(correct, gold_alpha_words); }
};

template <typename Lines>
EvalReport alpha_word_accuracy(const Lines& gold, const Lines& pred, std::string system = "") {
  EvalReport r;
  r.system = std::move(system);
  for_each_corpus_alpha_word(gold, pred, [&](std::string_view, bool ok) {
    ++r.gold_alpha_words;
    r.correct += ok ? 1 : 0;
  });
  return r;
}

// --- error ratio by dictionary candidate count -----------------------------

enum class RatioStatus { kDefined, kInfinite, kUndefined };

struct CandidateGroup {
  std::size_t candidates = 0;  // 0 unseen, 1, 2, 3 means three or more
  std::uint64_t words = 0;
  std::uint64_t errors_a = 0;
  std::uint64_t errors_b = 0;

  double error_rate_a() const { return words ? static_cast<double>(errors_a) / words : 0.0; }
  double error_rate_b() const { return words ? static_cast<double>(errors_b) / words : 0.0; }

  // error_rate_a / error_rate_b. kInfinite when only b is error-free,
  // kUndefined when both are (or the group is empty).
  RatioStatus status() const {
    if (errors_b > 0) return RatioStatus::kDefined;
    return errors_a > 0 ? RatioStatus::kInfinite : RatioStatus::kUndefined;
  }
  double ratio() const {
    return errors_b > 0 ? static_cast<double>(errors_a) / static_cast<double>(errors_b) : 0.0;
  }
};

struct CandidateRatioReport {
  std::string system_a;
  std::string system_b;
  std::array<CandidateGroup, 4> groups{{{0}, {1}, {2}, {3}}};

  const CandidateGroup& group(std::size_t candidates) const {
    return groups[std::min<std::size_t>(candidates, 3)];
  }
};

template <typename Lines>
CandidateRatioReport error_ratio_by_candidates(const Lines& gold, const Lines& pred_a,
                                               const Lines& pred_b, const UnigramLexicon& lexicon,
                                               const DiacriticTable& table,
                                               std::string system_a = "a",
                                               std::string system_b = "b") {
  if (gold.size() != pred_a.size() || gold.size() != pred_b.size()) {
    throw DataError("sentence count mismatch between gold and predictions");
  }
  CandidateRatioReport r;
  r.system_a = std::move(system_a);
  r.system_b = std::move(system_b);
  for (std::size_t s = 0; s < gold.size(); ++s) {
    const auto g = split_tokens(gold[s]);
    const auto a = split_tokens(pred_a[s]);
    const auto b = split_tokens(pred_b[s]);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!is_alpha_word(g[i])) continue;
      const std::size_t n = lexicon.candidate_count(strip_diacritics(g[i], table));
      CandidateGroup& grp = r.groups[std::min<std::size_t>(n, 3)];
      ++grp.words;
      grp.errors_a += (i < a.size() && a[i] == g[i]) ? 0 : 1;
      grp.errors_b += (i < b.size() && b[i] == g[i]) ? 0 : 1;
    }
  }
  return r;
}

// --- errors by training frequency -----------------------------------------

enum class FrequencyBucket { kUnseen, k1To100, k101To10000, kAbove10000 };
inline constexpr std::array<std::string_view, 4> kFrequencyBucketNames = {
    "unseen", "1-100", "101-10000", "above-10000"};

inline FrequencyBucket frequency_bucket(std::uint64_t training_count) {
  if (training_count == 0) return FrequencyBucket::kUnseen;
  if (training_count <= 100) return FrequencyBucket::k1To100;
  if (training_count <= 10000) return FrequencyBucket::k101To10000;
  return FrequencyBucket::kAbove10000;
}

struct BucketStats {
  std::uint64_t words = 0;            // gold alpha-words in the bucket
  std::uint64_t errors = 0;
  std::uint64_t training_tokens = 0;  // training alpha-word tokens in the bucket
};

struct FrequencyBuckets {
  std::string system;
  std::array<BucketStats, 4> buckets{};
  std::uint64_t training_tokens = 0;

  std::uint64_t total_words() const {
    std::uint64_t n = 0;
    for (const auto& b : buckets) n += b.words;
    return n;
  }
  std::uint64_t total_errors() const {
    std::uint64_t n = 0;
    for (const auto& b : buckets) n += b.errors;
    return n;
  }
  // True when there are no errors to distribute; shares then read 0.
  bool no_errors() const { return total_errors() == 0; }

  const BucketStats& at(FrequencyBucket b) const { return buckets[static_cast<std::size_t>(b)]; }
  double error_share_pct(FrequencyBucket b) const { return percent(at(b).errors, total_errors()); }
  double accuracy(FrequencyBucket b) const { return percent(at(b).words - at(b).errors, at(b).words); }
  double training_share_pct(FrequencyBucket b) const {
    return percent(at(b).training_tokens, training_tokens);
  }
};

template <typename Lines>
FrequencyBuckets frequency_bucket_report(const Lines& gold, const Lines& pred,
                                         const FrequencyIndex& train, std::string system = "") {
  FrequencyBuckets r;
  r.system = std::move(system);
  for (const auto& [word, count] : train.counts()) {
    if (!is_alpha_word(word)) continue;
    r.buckets[static_cast<std::size_t>(frequency_bucket(count))].training_tokens += count;
    r.training_tokens += count;
  }
  for_each_corpus_alpha_word(gold, pred, [&](std::string_view word, bool ok) {
    auto& b = r.buckets[static_cast<std::size_t>(frequency_bucket(train.count(word)))];
    ++b.words;
    b.errors += ok ? 0 : 1;
  });
  return r;
}

// --- unseen-word confusion ---------------------------------------------------

struct UnseenConfusion {
  std::string system;
  std::uint64_t diacritized_failed = 0;
  std::uint64_t diacritized_restored = 0;
  std::uint64_t plain_failed = 0;
  std::uint64_t plain_left_correct = 0;

  std::uint64_t total_unseen() const {
    return diacritized_failed + diacritized_restored + plain_failed + plain_left_correct;
  }
  bool empty() const { return total_unseen() == 0; }

  double diacritized_failed_pct() const { return percent(diacritized_failed, total_unseen()); }
  double diacritized_restored_pct() const { return percent(diacritized_restored, total_unseen()); }
  double plain_failed_pct() const { return percent(plain_failed, total_unseen()); }
  double plain_left_correct_pct() const { return percent(plain_left_correct, total_unseen()); }
};

// Unseen means the gold surface form never occurs in training.
template <typename Lines>
UnseenConfusion unseen_confusion(const Lines& gold, const Lines& pred, const FrequencyIndex& train,
                                 const DiacriticTable& table, std::string system = "") {
  UnseenConfusion r;
  r.system = std::move(system);
  for_each_corpus_alpha_word(gold, pred, [&](std::string_view word, bool ok) {
    if (train.contains(word)) return;
    if (is_diacritized(word, table)) {
      (ok ? r.diacritized_restored : r.diacritized_failed) += 1;
    } else {
      (ok ? r.plain_left_correct : r.plain_failed) += 1;
    }
  });
  return r;
}

// --- report files --------------------------------------------------------------
//
// Each report is a structured-text document: a human-readable table in `#`
// comment lines followed by machine-readable tables. Percentages carry two
// decimals; column order is fixed.

namespace detail {

inline std::string row(const std::vector<std::string>& cells, const std::vector<int>& widths) {
  std::string out = "#  ";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    char buf[128];
    if (i == 0) {
      std::snprintf(buf, sizeof buf, " %-*s", widths[i], cells[i].c_str());
    } else {
      std::snprintf(buf, sizeof buf, " %*s", widths[i], cells[i].c_str());
    }
    out += buf;
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out + "\n";
}

inline std::string key_of(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-';
    out.push_back(ok ? c : '_');
  }
  return out.empty() ? "system" : out;
}

inline std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline std::string format_accuracy_report(const std::vector<EvalReport>& reports) {
  const std::vector<int> w = {20, 12, 12, 10};
  std::string out = "# alpha-word accuracy\n#\n";
  out += detail::row({"system", "gold_alpha", "correct", "accuracy"}, w);
  for (const auto& r : reports) {
    out += detail::row({r.system, std::to_string(r.gold_alpha_words), std::to_string(r.correct),
                        st::fixed2(r.accuracy())},
                       w);
  }
  for (const auto& r : reports) {
    out += "\n[accuracy." + detail::key_of(r.system) + "]\n";
    out += "system = " + st::quote(r.system) + "\n";
    out += "gold_alpha_words = " + std::to_string(r.gold_alpha_words) + "\n";
    out += "correct = " + std::to_string(r.correct) + "\n";
    out += "accuracy = " + st::fixed2(r.accuracy()) + "\n";
    out += "defined = " + detail::flag(r.defined()) + "\n";
  }
  return out;
}

inline std::string format_candidate_ratio_report(const CandidateRatioReport& r) {
  const std::vector<int> w = {12, 10, 10, 10, 10};
  std::string out = "# alpha-word error ratio " + r.system_a + " / " + r.system_b +
                    " by dictionary candidate count\n#\n";
  out += detail::row({"candidates", "words", "errors_a", "errors_b", "ratio"}, w);
  const auto label = [](std::size_t c) { return c >= 3 ? std::string("3+") : std::to_string(c); };
  const auto ratio_text = [](const CandidateGroup& g) {
    switch (g.status()) {
      case RatioStatus::kDefined: return st::fixed2(g.ratio());
      case RatioStatus::kInfinite: return std::string("inf");
      case RatioStatus::kUndefined: return std::string("n/a");
    }
    return std::string("n/a");
  };
  for (const auto& g : r.groups) {
    out += detail::row({label(g.candidates), std::to_string(g.words), std::to_string(g.errors_a),
                        std::to_string(g.errors_b), ratio_text(g)},
                       w);
  }
  out += "\n[candidate_ratio]\n";
  out += "system_a = " + st::quote(r.system_a) + "\n";
  out += "system_b = " + st::quote(r.system_b) + "\n";
  for (const auto& g : r.groups) {
    out += "\n[candidate_ratio.group_" + (g.candidates >= 3 ? std::string("3plus") : std::to_string(g.candidates)) + "]\n";
    out += "words = " + std::to_string(g.words) + "\n";
    out += "errors_a = " + std::to_string(g.errors_a) + "\n";
    out += "errors_b = " + std::to_string(g.errors_b) + "\n";
    out += "error_rate_a_pct = " + st::fixed2(100.0 * g.error_rate_a()) + "\n";
    out += "error_rate_b_pct = " + st::fixed2(100.0 * g.error_rate_b()) + "\n";
    const char* status = g.status() == RatioStatus::kDefined    ? "defined"
                         : g.status() == RatioStatus::kInfinite ? "infinite"
                                                                : "undefined";
    out += "ratio = " + st::fixed2(g.ratio()) + "\n";
    out += std::string("ratio_status = \"") + status + "\"\n";
  }
  return out;
}

inline std::string format_frequency_report(const FrequencyBuckets& r) {
  const std::vector<int> w = {12, 10, 10, 12, 10, 12};
  std::string out = "# errors by training-set frequency";
  out += r.system.empty() ? "\n#\n" : " (" + r.system + ")\n#\n";
  out += detail::row({"bucket", "words", "errors", "error_share", "accuracy", "train_share"}, w);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto b = static_cast<FrequencyBucket>(k);
    out += detail::row({std::string(kFrequencyBucketNames[k]), std::to_string(r.at(b).words),
                        std::to_string(r.at(b).errors), st::fixed2(r.error_share_pct(b)),
                        st::fixed2(r.accuracy(b)), st::fixed2(r.training_share_pct(b))},
                       w);
  }
  out += "\n[frequency]\n";
  out += "system = " + st::quote(r.system) + "\n";
  out += "words = " + std::to_string(r.total_words()) + "\n";
  out += "errors = " + std::to_string(r.total_errors()) + "\n";
  out += "training_tokens = " + std::to_string(r.training_tokens) + "\n";
  out += "no_errors = " + detail::flag(r.no_errors()) + "\n";
  for (std::size_t k = 0; k < 4; ++k) {
    const auto b = static_cast<FrequencyBucket>(k);
    out += "\n[frequency." + std::string(kFrequencyBucketNames[k]) + "]\n";
    out += "words = " + std::to_string(r.at(b).words) + "\n";
    out += "errors = " + std::to_string(r.at(b).errors) + "\n";
    out += "error_share_pct = " + st::fixed2(r.error_share_pct(b)) + "\n";
    out += "accuracy = " + st::fixed2(r.accuracy(b)) + "\n";
    out += "training_share_pct = " + st::fixed2(r.training_share_pct(b)) + "\n";
  }
  return out;
}

inline std::string format_unseen_report(const UnseenConfusion& r) {
  const std::vector<int> w = {20, 10, 10};
  std::string out = "# unseen-word confusion";
  out += r.system.empty() ? "\n#\n" : " (" + r.system + ")\n#\n";
  out += detail::row({"group", "words", "share"}, w);
  out += detail::row({"diacritics/failed", std::to_string(r.diacritized_failed),
                      st::fixed2(r.diacritized_failed_pct())}, w);
  out += detail::row({"diacritics/restored", std::to_string(r.diacritized_restored),
                      st::fixed2(r.diacritized_restored_pct())}, w);
  out += detail::row({"plain/failed", std::to_string(r.plain_failed),
                      st::fixed2(r.plain_failed_pct())}, w);
  out += detail::row({"plain/left_correct", std::to_string(r.plain_left_correct),
                      st::fixed2(r.plain_left_correct_pct())}, w);
  out += "\n[unseen]\n";
  out += "system = " + st::quote(r.system) + "\n";
  out += "total_unseen = " + std::to_string(r.total_unseen()) + "\n";
  out += "empty = " + detail::flag(r.empty()) + "\n";
  out += "\n[unseen.with_diacritics]\n";
  out += "failed = " + std::to_string(r.diacritized_failed) + "\n";
  out += "restored = " + std::to_string(r.diacritized_restored) + "\n";
  out += "failed_pct = " + st::fixed2(r.diacritized_failed_pct()) + "\n";
  out += "restored_pct = " + st::fixed2(r.diacritized_restored_pct()) + "\n";
  out += "\n[unseen.without_diacritics]\n";
  out += "failed = " + std::to_string(r.plain_failed) + "\n";
  out += "left_correct = " + std::to_string(r.plain_left_correct) + "\n";
  out += "failed_pct = " + st::fixed2(r.plain_failed_pct()) + "\n";
  out += "left_correct_pct = " + st::fixed2(r.plain_left_correct_pct()) + "\n";
  return out;
}

}  // namespace diacritica

#endif  // DIACRITICA_EVALKIT_HPP_
