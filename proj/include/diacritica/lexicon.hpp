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

#ifndef DIACRITICA_LEXICON_HPP_
#define DIACRITICA_LEXICON_HPP_

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diacritica/error.hpp"
#include "diacritica/textcore.hpp"

namespace diacritica {

struct Candidate {
  std::string form;
  std::uint64_t count = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Candidate order: count descending, then form ascending. Byte order of
// UTF-8 equals code point order.
inline bool candidate_before(const Candidate& a, const Candidate& b) {
  if (a.count != b.count) return a.count > b.count;
  return a.form < b.form;
}

// Unigram lexicon: undiacritized key -> observed diacritized forms with
// training counts. Call finalize() after the last add(); lookups require
// sorted candidate lists.
class UnigramLexicon {
 public:
  UnigramLexicon() = default;
  explicit UnigramLexicon(std::string language) : language_(std::move(language)) {}

  const std::string& language() const noexcept { return language_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  void add(std::string_view word, const DiacriticTable& table, std::uint64_t count = 1) {
    add_with_key(strip_diacritics(word, table), word, count);
  }

  void add_line(std::string_view line, const DiacriticTable& table) {
    for (std::string_view tok : split_tokens(line)) add(tok, table);
  }

  // Sums counts of another shard into this one. Order-independent once
  // finalized.
  void merge(const UnigramLexicon& other) {
    for (const auto& [key, cands] : other.entries_) {
      for (const auto& c : cands) add_with_key(key, c.form, c.count);
    }
    sorted_ = false;
  }

  void finalize() {
    for (auto& [key, cands] : entries_) std::sort(cands.begin(), cands.end(), candidate_before);
    sorted_ = true;
  }

  const std::vector<Candidate>* candidates(std::string_view key) const {
    require_sorted();
    const auto it = entries_.find(std::string(key));
    return it == entries_.end() ? nullptr : &it->second;
  }

  // Most frequent form for an undiacritized word; unseen words come back
  // unchanged.
  std::string restore_word(std::string_view word) const {
    const auto* c = candidates(word);
    return c == nullptr ? std::string(word) : c->front().form;
  }

  std::size_t candidate_count(std::string_view word) const {
    const auto* c = candidates(word);
    return c == nullptr ? 0 : c->size();
  }

  std::uint64_t key_total(std::string_view key) const {
    std::uint64_t n = 0;
    if (const auto* c = candidates(key)) {
      for (const auto& cand : *c) n += cand.count;
    }
    return n;
  }

  // Keys in ascending byte order.
  std::vector<std::string_view> sorted_keys() const {
    std::vector<std::string_view> keys;
    keys.reserve(entries_.size());
    for (const auto& [k, v] : entries_) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  // `key<TAB>candidate<TAB>count` lines grouped by key.
  void save(std::ostream& out) const {
    require_sorted();
    for (std::string_view key : sorted_keys()) {
      for (const auto& c : entries_.at(std::string(key))) {
        out << key << '\t' << c.form << '\t' << c.count << '\n';
      }
    }
  }

  void save(const std::filesystem::path& path) const {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write lexicon " + path.string());
    save(out);
    if (!out) throw DataError("write failed for lexicon " + path.string());
  }

  // Every candidate must strip to its key under `table`.
  static UnigramLexicon load(std::istream& in, const DiacriticTable& table) {
    UnigramLexicon lex(table.language());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto fail = [&](const std::string& why) {
        return DataError("lexicon line " + std::to_string(line_no) + ": " + why);
      };
      const auto t1 = line.find('\t');
      const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
      if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
        throw fail("expected key<TAB>candidate<TAB>count");
      }
      const std::string_view view(line);
      const std::string_view key = view.substr(0, t1);
      const std::string_view form = view.substr(t1 + 1, t2 - t1 - 1);
      const std::string_view count_text = view.substr(t2 + 1);
      std::uint64_t count = 0;
      const auto [p, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
      if (ec != std::errc() || p != count_text.data() + count_text.size() || count == 0) {
        throw fail("count must be a positive integer");
      }
      if (key.empty() || form.empty()) throw fail("empty key or candidate");
      if (strip_diacritics(form, table) != key) {
        throw fail("candidate '" + std::string(form) + "' does not strip to key '" +
                   std::string(key) + "'");
      }
      auto& cands = lex.entries_[std::string(key)];
      for (const auto& c : cands) {
        if (c.form == form) throw fail("duplicate candidate '" + std::string(form) + "'");
      }
      cands.push_back({std::string(form), count});
    }
    lex.finalize();
    return lex;
  }

  static UnigramLexicon load(const std::filesystem::path& path, const DiacriticTable& table) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open lexicon " + path.string());
    try {
      return load(in, table);
    } catch (const DataError& e) {
      throw DataError(path.string() + ": " + e.what());
    }
  }

  const std::unordered_map<std::string, std::vector<Candidate>>& entries() const noexcept {
    return entries_;
  }

  friend bool operator==(const UnigramLexicon& a, const UnigramLexicon& b) {
    return a.entries_ == b.entries_;
  }

 private:
  void add_with_key(std::string_view key, std::string_view form, std::uint64_t count) {
    auto& cands = entries_[std::string(key)];
    for (auto& c : cands) {
      if (c.form == form) {
        c.count += count;
        sorted_ = false;
        return;
      }
    }
    cands.push_back({std::string(form), count});
    sorted_ = false;
  }

  void require_sorted() const {
    if (!sorted_) throw std::logic_error("UnigramLexicon used before finalize()");
  }

  std::string language_;
  std::unordered_map<std::string, std::vector<Candidate>> entries_;
  bool sorted_ = true;
};

// Counts every token of every line under its stripped key.
template <typename Lines>
UnigramLexicon build_lexicon(const Lines& lines, const DiacriticTable& table) {
  UnigramLexicon lex(table.language());
  for (const auto& line : lines) lex.add_line(line, table);
  lex.finalize();
  return lex;
}

// Training-set surface frequencies: word -> count.
class FrequencyIndex {
 public:
  FrequencyIndex() = default;

  static FrequencyIndex from_lexicon(const UnigramLexicon& lex) {
    FrequencyIndex idx;
    for (const auto& [key, cands] : lex.entries()) {
      for (const auto& c : cands) {
        idx.counts_[c.form] += c.count;
        idx.total_ += c.count;
      }
    }
    return idx;
  }

  template <typename Lines>
  static FrequencyIndex from_lines(const Lines& lines) {
    FrequencyIndex idx;
    for (const auto& line : lines) {
      for (std::string_view tok : split_tokens(line)) {
        ++idx.counts_[std::string(tok)];
        ++idx.total_;
      }
    }
    return idx;
  }

  std::uint64_t count(std::string_view word) const {
    const auto it = counts_.find(std::string(word));
    return it == counts_.end() ? 0 : it->second;
  }

  bool contains(std::string_view word) const { return count(word) > 0; }
  std::uint64_t total() const noexcept { return total_; }
  const std::unordered_map<std::string, std::uint64_t>& counts() const noexcept { return counts_; }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

}  // namespace diacritica

#endif  // DIACRITICA_LEXICON_HPP_
