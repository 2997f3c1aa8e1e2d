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

// Text primitives: diacritic tables, stripping, tokenization and corpus
// statistics. Corpus lines are lowercase tokens separated by single spaces.

#ifndef DIACRITICA_TEXTCORE_HPP_
#define DIACRITICA_TEXTCORE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diacritica/diagnostics.hpp"
#include "diacritica/error.hpp"
#include "diacritica/unicode.hpp"

namespace diacritica {

struct DiacriticPair {
  char32_t diacritic;
  char32_t base;

  friend bool operator==(const DiacriticPair&, const DiacriticPair&) = default;
};

// Character-to-character mapping from diacritic letters to base letters for
// one language. Immutable after construction.
class DiacriticTable {
 public:
  DiacriticTable() = default;

  DiacriticTable(std::string language, std::vector<DiacriticPair> pairs)
      : language_(std::move(language)), pairs_(std::move(pairs)) {
    low_.assign(kLowLimit, 0);
    for (const auto& p : pairs_) {
      if (p.diacritic == p.base) {
        throw DataError("diacritic table '" + language_ + "': " +
                        to_utf8(p.diacritic) + " maps to itself");
      }
      if (contains(p.diacritic)) {
        throw DataError("diacritic table '" + language_ +
                        "': duplicate entry for " + to_utf8(p.diacritic));
      }
      if (p.diacritic < kLowLimit) {
        low_[p.diacritic] = p.base;
      } else {
        high_.emplace(p.diacritic, p.base);
      }
    }
    for (const auto& p : pairs_) {
      if (contains(p.base)) {
        throw DataError("diacritic table '" + language_ + "': base letter " +
                        to_utf8(p.base) + " is itself a diacritic letter");
      }
    }
  }

  // Parses `diacritic<TAB>base` lines; blank lines and `#` comments skipped.
  static DiacriticTable parse(std::string language, std::istream& in) {
    std::vector<DiacriticPair> pairs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      const auto tab = line.find('\t');
      const auto fail = [&](const std::string& why) {
        return DataError("diacritic table '" + language + "' line " +
                         std::to_string(line_no) + ": " + why);
      };
      if (tab == std::string::npos) throw fail("expected diacritic<TAB>base");
      const std::u32string diacritic = to_u32(std::string_view(line).substr(0, tab));
      const std::u32string base = to_u32(std::string_view(line).substr(tab + 1));
      if (diacritic.size() != 1 || base.size() != 1) {
        throw fail("each side must be exactly one character");
      }
      pairs.push_back({diacritic[0], base[0]});
    }
    return DiacriticTable(std::move(language), std::move(pairs));
  }

  // Language identifier is the file stem (`lithuanian.tsv` -> "lithuanian").
  static DiacriticTable load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open diacritic table " + path.string());
    return parse(path.stem().string(), in);
  }

  const std::string& language() const noexcept { return language_; }
  const std::vector<DiacriticPair>& pairs() const noexcept { return pairs_; }

  bool contains(char32_t cp) const {
    if (cp < kLowLimit) return !low_.empty() && low_[cp] != 0;
    return high_.contains(cp);
  }

  // Base letter for a diacritic letter, or `cp` itself.
  char32_t base_of(char32_t cp) const {
    if (cp < kLowLimit) {
      if (low_.empty()) return cp;
      const char32_t b = low_[cp];
      return b != 0 ? b : cp;
    }
    const auto it = high_.find(cp);
    return it != high_.end() ? it->second : cp;
  }

  // Size of the lowercase diacritic inventory.
  std::size_t lowercase_letter_count() const {
    std::size_t n = 0;
    for (const auto& p : pairs_) n += is_lowercase_letter(p.diacritic) ? 1 : 0;
    return n;
  }

 private:
  static constexpr char32_t kLowLimit = 0x2000;

  std::string language_;
  std::vector<DiacriticPair> pairs_;
  std::vector<char32_t> low_;
  std::unordered_map<char32_t, char32_t> high_;
};

inline std::string strip_diacritics(std::string_view text, const DiacriticTable& table) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const Utf8Char c = decode_utf8(text, pos);
    if (c.valid && table.contains(c.code_point)) {
      append_utf8(out, table.base_of(c.code_point));
    } else {
      out.append(text.substr(pos, c.length));
    }
    pos += c.length;
  }
  return out;
}

inline bool is_diacritized(std::string_view word, const DiacriticTable& table) {
  for (std::size_t pos = 0; pos < word.size();) {
    const Utf8Char c = decode_utf8(word, pos);
    if (c.valid && table.contains(c.code_point)) return true;
    pos += c.length;
  }
  return false;
}

struct Token {
  std::string text;
  bool is_alpha = false;

  explicit Token(std::string t) : text(std::move(t)), is_alpha(is_alpha_word(text)) {}
  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::vector<Token> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  std::string to_line() const {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) out.push_back(' ');
      out += tokens[i].text;
    }
    return out;
  }
};

// Views of the space-separated tokens of `line`. Runs of spaces and leading
// or trailing spaces are a single separator; they bump the diagnostics
// counter once per line.
inline std::vector<std::string_view> split_tokens(std::string_view line,
                                                  Diagnostics* diagnostics = nullptr) {
  std::vector<std::string_view> out;
  bool irregular = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ' ') {
      if (i > start) {
        out.push_back(line.substr(start, i - start));
      } else if (i < line.size()) {
        irregular = true;
      }
      start = i + 1;
    }
  }
  if (!line.empty() && line.back() == ' ') irregular = true;
  if (irregular && diagnostics != nullptr) ++diagnostics->irregular_spacing_lines;
  return out;
}

inline Sentence tokenize(std::string_view line, Diagnostics* diagnostics = nullptr) {
  Sentence s;
  for (std::string_view t : split_tokens(line, diagnostics)) {
    s.tokens.emplace_back(std::string(t));
  }
  return s;
}

inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

// Table-1-style corpus statistics. Percentages are over alpha-words and over
// letters inside alpha-words.
struct CorpusStats {
  std::uint64_t sentences = 0;
  std::uint64_t tokens = 0;
  std::uint64_t alpha_words = 0;
  std::uint64_t diacritized_alpha_words = 0;
  std::uint64_t letters = 0;
  std::uint64_t diacritic_letters = 0;

  void add(std::string_view line, const DiacriticTable& table) {
    ++sentences;
    for (std::string_view tok : split_tokens(line)) {
      ++tokens;
      if (!is_alpha_word(tok)) continue;
      ++alpha_words;
      bool diacritized = false;
      for (std::size_t pos = 0; pos < tok.size();) {
        const Utf8Char c = decode_utf8(tok, pos);
        ++letters;
        if (table.contains(c.code_point)) {
          ++diacritic_letters;
          diacritized = true;
        }
        pos += c.length;
      }
      if (diacritized) ++diacritized_alpha_words;
    }
  }

  void merge(const CorpusStats& o) {
    sentences += o.sentences;
    tokens += o.tokens;
    alpha_words += o.alpha_words;
    diacritized_alpha_words += o.diacritized_alpha_words;
    letters += o.letters;
    diacritic_letters += o.diacritic_letters;
  }

  // False when there are no alpha-words; percentages then read as 0.
  bool defined() const noexcept { return alpha_words > 0; }

  double diacritic_word_pct() const {
    return alpha_words ? 100.0 * static_cast<double>(diacritized_alpha_words) /
                             static_cast<double>(alpha_words)
                       : 0.0;
  }
  double diacritic_letter_pct() const {
    return letters ? 100.0 * static_cast<double>(diacritic_letters) /
                         static_cast<double>(letters)
                   : 0.0;
  }
  double alpha_word_pct() const {
    return tokens ? 100.0 * static_cast<double>(alpha_words) / static_cast<double>(tokens)
                  : 0.0;
  }
};

template <typename Lines>
CorpusStats corpus_stats(const Lines& lines, const DiacriticTable& table) {
  CorpusStats stats;
  for (const auto& line : lines) stats.add(line, table);
  return stats;
}

}  // namespace diacritica

#endif  // DIACRITICA_TEXTCORE_HPP_
