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

// Keyboard typo model derived from an edit corpus.
//
// An edit record pairs the text as typed (`before`, containing the typo)
// with the corrected text (`after`). Records are aligned character by
// character with the optimal string alignment distance, yielding deletion,
// substitution, insertion and adjacent-transposition patterns relative to
// the corrected text. From those counts:
//
//   P(deletion | c)         = f(c -> _) / f(c)
//   P(substitution | c)     = sum_x f(c -> x) / f(c)
//   P(insertion_after | c)  = sum_x f(c -> cx) / 2f(c)
//   P(insertion_before | c) = sum_x f(c -> xc) / 2f(c)
//   P(transposition | cc')  = f(cc' -> c'c) / f(cc')
//
// with sums over the character set C and conditional outcome distributions
// normalizing the individual counts. Every inserted character is counted
// twice, once after its left neighbour and once before its right one, which
// is what the factor of two compensates for.

#ifndef DIACRITICA_TYPO_MODEL_HPP_
#define DIACRITICA_TYPO_MODEL_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diacritica/error.hpp"
#include "diacritica/io.hpp"
#include "diacritica/keyboard_layout.hpp"
#include "diacritica/structured_text.hpp"
#include "diacritica/unicode.hpp"

namespace diacritica {

struct EditRecord {
  std::string before;  // as typed, with the typo
  std::string after;   // corrected

  friend bool operator==(const EditRecord&, const EditRecord&) = default;
};

enum class EditKind { kDeletion, kSubstitution, kInsertion, kTransposition };

// One aligned edit. `pos` indexes the corrected text: the deleted,
// substituted or first transposed character, or for insertions the gap
// before corrected character `pos`.
struct EditOp {
  EditKind kind;
  std::size_t pos;
  char32_t from = 0;  // corrected character (first of the pair for transpositions)
  char32_t to = 0;    // typed character (inserted or substituted)

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

// Optimal string alignment between the corrected and typed strings. Common
// prefix and suffix are matched directly; ties in the backtrace prefer
// match, transposition, substitution, deletion, insertion in that order.
// Returns an empty vector when the unmatched middle exceeds `max_cells`.
inline std::vector<EditOp> align_edits(std::u32string_view corrected, std::u32string_view typed,
                                       std::size_t max_cells = std::size_t{1} << 22,
                                       bool* skipped = nullptr) {
  if (skipped) *skipped = false;
  std::size_t prefix = 0;
  while (prefix < corrected.size() && prefix < typed.size() && corrected[prefix] == typed[prefix]) {
    ++prefix;
  }
  std::size_t suffix = 0;
  while (suffix < corrected.size() - prefix && suffix < typed.size() - prefix &&
         corrected[corrected.size() - 1 - suffix] == typed[typed.size() - 1 - suffix]) {
    ++suffix;
  }
  const auto a = corrected.substr(prefix, corrected.size() - prefix - suffix);
  const auto b = typed.substr(prefix, typed.size() - prefix - suffix);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<EditOp> ops;
  if (n == 0 && m == 0) return ops;
  if ((n + 1) * (m + 1) > max_cells) {
    if (skipped) *skipped = true;
    return ops;
  }

  const std::size_t w = m + 1;
  std::vector<std::uint32_t> d((n + 1) * w);
  const auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return d[i * w + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  const auto transposable = [&](std::size_t i, std::size_t j) {
    return i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] && a[i - 1] != a[i - 2];
  };
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      std::uint32_t best = at(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
      best = std::min(best, at(i - 1, j) + 1);
      best = std::min(best, at(i, j - 1) + 1);
      if (transposable(i, j)) best = std::min(best, at(i - 2, j - 2) + 1);
      at(i, j) = best;
    }
  }

  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const std::uint32_t cur = at(i, j);
    if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && at(i - 1, j - 1) == cur) {
      --i, --j;
    } else if (transposable(i, j) && at(i - 2, j - 2) + 1 == cur) {
      ops.push_back({EditKind::kTransposition, prefix + i - 2, a[i - 2], a[i - 1]});
      i -= 2, j -= 2;
    } else if (i > 0 && j > 0 && at(i - 1, j - 1) + 1 == cur) {
      ops.push_back({EditKind::kSubstitution, prefix + i - 1, a[i - 1], b[j - 1]});
      --i, --j;
    } else if (i > 0 && at(i - 1, j) + 1 == cur) {
      ops.push_back({EditKind::kDeletion, prefix + i - 1, a[i - 1], 0});
      --i;
    } else {
      ops.push_back({EditKind::kInsertion, prefix + i, 0, b[j - 1]});
      --j;
    }
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

namespace detail {

inline std::uint64_t pair_key(char32_t a, char32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}
inline char32_t pair_first(std::uint64_t k) { return static_cast<char32_t>(k >> 32); }
inline char32_t pair_second(std::uint64_t k) { return static_cast<char32_t>(k & 0xFFFFFFFFu); }

}  // namespace detail

// Occurrence and pattern counts of an edit corpus. Pair-keyed maps use
// detail::pair_key(c, x).
struct EditCounts {
  std::map<char32_t, std::uint64_t> chars;              // f(c)
  std::map<std::uint64_t, std::uint64_t> bigrams;       // f(cc')
  std::map<char32_t, std::uint64_t> deletions;          // f(c -> _)
  std::map<std::uint64_t, std::uint64_t> substitutions; // f(c -> x)
  std::map<std::uint64_t, std::uint64_t> insert_after;  // f(c -> cx)
  std::map<std::uint64_t, std::uint64_t> insert_before; // f(c -> xc)
  std::map<std::uint64_t, std::uint64_t> transpositions;// f(cc' -> c'c)
  std::uint64_t skipped_records = 0;

  friend bool operator==(const EditCounts&, const EditCounts&) = default;
};

inline constexpr std::uint64_t kDefaultMinCharCount = 1000;

class EditCorpus {
 public:
  EditCorpus() = default;

  explicit EditCorpus(std::vector<EditRecord> records,
                      std::uint64_t min_char_count = kDefaultMinCharCount)
      : records_(std::move(records)), min_char_count_(std::max<std::uint64_t>(1, min_char_count)) {
    recount();
  }

  // Reads `before<TAB>after` lines.
  static EditCorpus load(const std::filesystem::path& path,
                         std::uint64_t min_char_count = kDefaultMinCharCount) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open edit corpus " + path.string());
    std::vector<EditRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
        throw DataError(path.string() + " line " + std::to_string(line_no) +
                        ": expected before<TAB>after");
      }
      records.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return EditCorpus(std::move(records), min_char_count);
  }

  const std::vector<EditRecord>& records() const noexcept { return records_; }
  const EditCounts& counts() const noexcept { return counts_; }
  std::uint64_t min_char_count() const noexcept { return min_char_count_; }

  // Characters with f(c) >= threshold, whitespace excluded, ascending.
  std::vector<char32_t> char_set() const {
    std::vector<char32_t> out;
    for (const auto& [c, n] : counts_.chars) {
      if (n >= min_char_count_ && !is_space(c)) out.push_back(c);
    }
    return out;
  }

 private:
  void recount() {
    counts_ = {};
    for (const auto& r : records_) {
      const std::u32string corrected = to_u32(r.after);
      const std::u32string typed = to_u32(r.before);
      for (std::size_t i = 0; i < corrected.size(); ++i) {
        ++counts_.chars[corrected[i]];
        if (i + 1 < corrected.size()) {
          ++counts_.bigrams[detail::pair_key(corrected[i], corrected[i + 1])];
        }
      }
      bool skipped = false;
      for (const EditOp& op : align_edits(corrected, typed, std::size_t{1} << 22, &skipped)) {
        switch (op.kind) {
          case EditKind::kDeletion:
            ++counts_.deletions[op.from];
            break;
          case EditKind::kSubstitution:
            ++counts_.substitutions[detail::pair_key(op.from, op.to)];
            break;
          case EditKind::kTransposition:
            ++counts_.transpositions[detail::pair_key(op.from, op.to)];
            break;
          case EditKind::kInsertion:
            if (op.pos > 0) {
              ++counts_.insert_after[detail::pair_key(corrected[op.pos - 1], op.to)];
            }
            if (op.pos < corrected.size()) {
              ++counts_.insert_before[detail::pair_key(corrected[op.pos], op.to)];
            }
            break;
        }
      }
      if (skipped) ++counts_.skipped_records;
    }
  }

  std::vector<EditRecord> records_;
  std::uint64_t min_char_count_ = kDefaultMinCharCount;
  EditCounts counts_;
};

// Applies the layout to both sides of every record and recounts.
inline EditCorpus remap_layout(const EditCorpus& corpus, const KeyboardLayout& layout) {
  if (layout.is_identity()) return corpus;
  std::vector<EditRecord> records;
  records.reserve(corpus.records().size());
  for (const auto& r : corpus.records()) {
    records.push_back({layout.map(r.before), layout.map(r.after)});
  }
  return EditCorpus(std::move(records), corpus.min_char_count());
}

struct CharProbabilities {
  double deletion = 0;
  double substitution = 0;
  double insertion_after = 0;
  double insertion_before = 0;

  friend bool operator==(const CharProbabilities&, const CharProbabilities&) = default;
};

struct Outcome {
  char32_t ch;
  double p;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

using OutcomeDistribution = std::vector<Outcome>;

// Per-character typo probabilities. Immutable after construction.
class TypoModel {
 public:
  static constexpr int kFormatVersion = 1;

  struct CharEntry {
    char32_t ch = 0;
    CharProbabilities p;
    OutcomeDistribution substitution;      // P(c -> x | c, substitution)
    OutcomeDistribution insertion_after;   // P(c -> cx | c, insertion after)
    OutcomeDistribution insertion_before;  // P(c -> xc | c, insertion before)

    friend bool operator==(const CharEntry&, const CharEntry&) = default;
  };

  TypoModel(std::vector<CharEntry> entries, std::map<std::uint64_t, double> transpositions,
            double scale = 3.0, LayoutFamily layout = LayoutFamily::kQwerty)
      : entries_(std::move(entries)),
        transpositions_(std::move(transpositions)),
        scale_(scale),
        layout_(layout) {
    validate();
    ascii_index_.fill(-1);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].ch < ascii_index_.size()) {
        ascii_index_[entries_[i].ch] = static_cast<int>(i);
      }
    }
    for (const auto& [k, p] : transpositions_) transposition_lookup_.emplace(k, p);
    count_clamps();
  }

  const std::vector<CharEntry>& entries() const noexcept { return entries_; }
  const std::map<std::uint64_t, double>& transpositions() const noexcept { return transpositions_; }
  double scale() const noexcept { return scale_; }
  LayoutFamily layout() const noexcept { return layout_; }

  // Number of (character, error kind) and bigram probabilities whose scaled
  // value exceeded 1 and is clamped.
  std::size_t clamp_count() const noexcept { return clamps_; }

  TypoModel with_scale(double scale) const {
    return TypoModel(entries_, transpositions_, scale, layout_);
  }

  TypoModel with_layout(LayoutFamily layout) const {
    return TypoModel(entries_, transpositions_, scale_, layout);
  }

  const CharEntry* find(char32_t c) const {
    if (c < ascii_index_.size()) {
      const int i = ascii_index_[c];
      return i < 0 ? nullptr : &entries_[static_cast<std::size_t>(i)];
    }
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                                     [](const CharEntry& e, char32_t v) { return e.ch < v; });
    return it != entries_.end() && it->ch == c ? &*it : nullptr;
  }

  bool contains(char32_t c) const { return find(c) != nullptr; }

  double transposition(char32_t a, char32_t b) const {
    const auto it = transposition_lookup_.find(detail::pair_key(a, b));
    return it == transposition_lookup_.end() ? 0.0 : it->second;
  }

  double effective(double p) const { return std::min(1.0, scale_ * p); }

  friend bool operator==(const TypoModel& a, const TypoModel& b) {
    return a.entries_ == b.entries_ && a.transpositions_ == b.transpositions_ &&
           a.scale_ == b.scale_ && a.layout_ == b.layout_;
  }

 private:
  static bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

  void validate() const {
    if (entries_.empty()) throw DataError("typo model: no characters above threshold");
    if (!std::isfinite(scale_) || scale_ < 0) throw DataError("typo model: scale must be >= 0");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      const std::string where = "typo model character " + st::code_point_key(e.ch);
      if (i > 0 && entries_[i - 1].ch >= e.ch) {
        throw DataError("typo model: characters must be unique and ascending");
      }
      for (double p : {e.p.deletion, e.p.substitution, e.p.insertion_after, e.p.insertion_before}) {
        if (!is_probability(p)) throw DataError(where + ": probability out of [0,1]");
      }
      for (const auto* dist : {&e.substitution, &e.insertion_after, &e.insertion_before}) {
        if (dist->empty()) continue;
        double sum = 0;
        for (std::size_t k = 0; k < dist->size(); ++k) {
          const Outcome& o = (*dist)[k];
          if (!is_probability(o.p)) throw DataError(where + ": outcome probability out of [0,1]");
          if (k > 0 && (*dist)[k - 1].ch >= o.ch) {
            throw DataError(where + ": outcomes must be unique and ascending");
          }
          if (!has_char(o.ch)) throw DataError(where + ": outcome outside the character set");
          sum += o.p;
        }
        if (std::abs(sum - 1.0) > 1e-9) throw DataError(where + ": outcomes do not sum to 1");
      }
    }
    for (const auto& [k, p] : transpositions_) {
      if (!is_probability(p)) throw DataError("typo model: transposition probability out of [0,1]");
      if (!has_char(detail::pair_first(k)) || !has_char(detail::pair_second(k))) {
        throw DataError("typo model: transposition outside the character set");
      }
    }
  }

  bool has_char(char32_t c) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                                     [](const CharEntry& e, char32_t v) { return e.ch < v; });
    return it != entries_.end() && it->ch == c;
  }

  void count_clamps() {
    const auto over = [&](double p) { return scale_ * p > 1.0 ? 1u : 0u; };
    clamps_ = 0;
    for (const auto& e : entries_) {
      clamps_ += over(e.p.deletion) + over(e.p.substitution) + over(e.p.insertion_after) +
                 over(e.p.insertion_before);
    }
    for (const auto& [k, p] : transpositions_) clamps_ += over(p);
  }

  std::vector<CharEntry> entries_;
  std::map<std::uint64_t, double> transpositions_;
  double scale_;
  LayoutFamily layout_;
  std::array<int, 128> ascii_index_{};
  std::unordered_map<std::uint64_t, double> transposition_lookup_;
  std::size_t clamps_ = 0;
};

namespace detail {

// Normalized outcome distribution for one source character, restricted to
// the character set. Empty when nothing was observed.
inline OutcomeDistribution outcomes_for(char32_t c,
                                        const std::map<std::uint64_t, std::uint64_t>& counts,
                                        const std::vector<char32_t>& char_set,
                                        std::uint64_t* total_out) {
  OutcomeDistribution out;
  std::uint64_t total = 0;
  for (auto it = counts.lower_bound(pair_key(c, 0));
       it != counts.end() && pair_first(it->first) == c; ++it) {
    const char32_t x = pair_second(it->first);
    if (!std::binary_search(char_set.begin(), char_set.end(), x)) continue;
    out.push_back({x, static_cast<double>(it->second)});
    total += it->second;
  }
  for (auto& o : out) o.p /= static_cast<double>(total);
  *total_out = total;
  return out;
}

}  // namespace detail

// Derives the model. Non-QWERTY layouts remap the corpus first so the
// probabilities follow the physical keys.
inline TypoModel build_typo_model(const EditCorpus& corpus,
                                  const KeyboardLayout& layout = KeyboardLayout(),
                                  double scale = 3.0) {
  if (!layout.is_identity()) {
    return build_typo_model(remap_layout(corpus, layout), KeyboardLayout(), scale)
        .with_layout(layout.family());
  }
  const EditCounts& f = corpus.counts();
  const std::vector<char32_t> chars = corpus.char_set();
  if (chars.empty()) throw DataError("typo model: no characters above threshold");

  std::vector<TypoModel::CharEntry> entries;
  entries.reserve(chars.size());
  for (char32_t c : chars) {
    TypoModel::CharEntry e;
    e.ch = c;
    const double fc = static_cast<double>(f.chars.at(c));
    const auto del = f.deletions.find(c);
    e.p.deletion = del == f.deletions.end() ? 0.0 : static_cast<double>(del->second) / fc;

    std::uint64_t sub_total = 0, after_total = 0, before_total = 0;
    e.substitution = detail::outcomes_for(c, f.substitutions, chars, &sub_total);
    e.insertion_after = detail::outcomes_for(c, f.insert_after, chars, &after_total);
    e.insertion_before = detail::outcomes_for(c, f.insert_before, chars, &before_total);
    e.p.substitution = static_cast<double>(sub_total) / fc;
    e.p.insertion_after = static_cast<double>(after_total) / (2.0 * fc);
    e.p.insertion_before = static_cast<double>(before_total) / (2.0 * fc);
    entries.push_back(std::move(e));
  }

  std::map<std::uint64_t, double> transpositions;
  for (const auto& [k, n] : f.transpositions) {
    const char32_t a = detail::pair_first(k);
    const char32_t b = detail::pair_second(k);
    if (!std::binary_search(chars.begin(), chars.end(), a) ||
        !std::binary_search(chars.begin(), chars.end(), b)) {
      continue;
    }
    transpositions[k] = static_cast<double>(n) / static_cast<double>(f.bigrams.at(k));
  }
  return TypoModel(std::move(entries), std::move(transpositions), scale, LayoutFamily::kQwerty);
}

// ---------------------------------------------------------------------------
// Model file: versioned structured text, see docs in README.

inline std::string serialize_model(const TypoModel& model) {
  std::string out;
  out += "# diacritica typo model\n";
  out += "format = \"diacritica-typo-model\"\n";
  out += "version = " + std::to_string(TypoModel::kFormatVersion) + "\n";
  out += "scale = " + st::exact(model.scale()) + "\n";
  out += "layout = " + st::quote(to_string(model.layout())) + "\n";

  const auto write_dist = [&](const char* name, char32_t c, const OutcomeDistribution& d) {
    if (d.empty()) return;
    out += "\n[" + std::string(name) + "." + st::code_point_key(c) + "]\n";
    for (const auto& o : d) out += st::code_point_key(o.ch) + " = " + st::exact(o.p) + "\n";
  };
  for (const auto& e : model.entries()) {
    out += "\n[characters." + st::code_point_key(e.ch) + "]\n";
    out += "char = " + st::quote(to_utf8(e.ch)) + "\n";
    out += "deletion = " + st::exact(e.p.deletion) + "\n";
    out += "substitution = " + st::exact(e.p.substitution) + "\n";
    out += "insertion_after = " + st::exact(e.p.insertion_after) + "\n";
    out += "insertion_before = " + st::exact(e.p.insertion_before) + "\n";
  }
  for (const auto& e : model.entries()) {
    write_dist("substitution", e.ch, e.substitution);
    write_dist("insertion_after", e.ch, e.insertion_after);
    write_dist("insertion_before", e.ch, e.insertion_before);
  }
  out += "\n[transposition]\n";
  for (const auto& [k, p] : model.transpositions()) {
    out += st::code_point_key(detail::pair_first(k)) + "_" +
           st::code_point_key(detail::pair_second(k)) + " = " + st::exact(p) + "\n";
  }
  return out;
}

inline TypoModel deserialize_model(std::string_view text) {
  const StructuredDoc doc = StructuredDoc::parse(text);
  if (doc.get("", "format").as_string() != "diacritica-typo-model") {
    throw DataError("typo model: not a typo model file");
  }
  const std::int64_t version = doc.get("", "version").as_int();
  if (version != TypoModel::kFormatVersion) {
    throw DataError("typo model: unsupported version " + std::to_string(version));
  }
  const double scale = doc.get("", "scale").as_double();
  const LayoutFamily layout = parse_layout_family(doc.get("", "layout").as_string());

  const auto probability = [](const StructuredValue& v) {
    const double p = v.as_double();
    if (!(p >= 0.0 && p <= 1.0)) throw DataError("typo model: probability out of [0,1]");
    return p;
  };
  const auto code_point = [](std::string_view key) {
    const auto cp = st::parse_code_point_key(key);
    if (!cp) throw DataError("typo model: malformed character key '" + std::string(key) + "'");
    return *cp;
  };

  std::map<char32_t, TypoModel::CharEntry> entries;
  std::map<std::uint64_t, double> transpositions;
  for (const std::string& section : doc.sections()) {
    if (section.empty()) continue;
    const auto dot = section.find('.');
    const std::string group = section.substr(0, dot);
    if (section == "transposition") {
      for (const auto& [key, value] : doc.entries(section)) {
        const auto sep = key.find('_');
        if (sep == std::string::npos) throw DataError("typo model: malformed bigram key " + key);
        transpositions[detail::pair_key(code_point(key.substr(0, sep)),
                                        code_point(key.substr(sep + 1)))] = probability(value);
      }
      continue;
    }
    if (dot == std::string::npos) throw DataError("typo model: unknown table [" + section + "]");
    const char32_t c = code_point(section.substr(dot + 1));
    if (group == "characters") {
      auto& e = entries[c];
      e.ch = c;
      e.p.deletion = probability(doc.get(section, "deletion"));
      e.p.substitution = probability(doc.get(section, "substitution"));
      e.p.insertion_after = probability(doc.get(section, "insertion_after"));
      e.p.insertion_before = probability(doc.get(section, "insertion_before"));
    } else if (group == "substitution" || group == "insertion_after" ||
               group == "insertion_before") {
      if (!entries.contains(c)) {
        throw DataError("typo model: [" + section + "] precedes its [characters] table");
      }
      auto& e = entries[c];
      OutcomeDistribution& d = group == "substitution"      ? e.substitution
                               : group == "insertion_after" ? e.insertion_after
                                                            : e.insertion_before;
      for (const auto& [key, value] : doc.entries(section)) {
        d.push_back({code_point(key), probability(value)});
      }
    } else {
      throw DataError("typo model: unknown table [" + section + "]");
    }
  }
  std::vector<TypoModel::CharEntry> list;
  list.reserve(entries.size());
  for (auto& [c, e] : entries) list.push_back(std::move(e));
  return TypoModel(std::move(list), std::move(transpositions), scale, layout);
}

inline void save_model(const std::filesystem::path& path, const TypoModel& model) {
  write_file(path, serialize_model(model));
}

inline TypoModel load_model(const std::filesystem::path& path) {
  try {
    return deserialize_model(read_file(path));
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

}  // namespace diacritica

#endif  // DIACRITICA_TYPO_MODEL_HPP_
