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


// Brute-force counting oracle for typo model derivation, shared by the unit
// tests and the acceptance runner.

#ifndef DIACRITICA_TESTS_SUPPORT_TYPO_ORACLE_HPP_
#define DIACRITICA_TESTS_SUPPORT_TYPO_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "diacritica/typo_model.hpp"

namespace diacritica::oracle {

// Brute-force oracle: every record's typed side is the corrected side with
// at most one edit, chosen so that exactly one single edit explains it.

struct Explanation {
  EditKind kind;
  std::size_t pos;
  char32_t ch;  // substituted or inserted character

  friend bool operator==(const Explanation&, const Explanation&) = default;
};

inline std::vector<Explanation> ExplainSingleEdit(const std::u32string& corrected,
                                           const std::u32string& typed,
                                           const std::u32string& alphabet) {
  std::vector<Explanation> found;
  for (std::size_t i = 0; i < corrected.size(); ++i) {
    std::u32string d = corrected;
    d.erase(i, 1);
    if (d == typed) found.push_back({EditKind::kDeletion, i, 0});
    for (char32_t x : alphabet) {
      if (x == corrected[i]) continue;
      std::u32string s = corrected;
      s[i] = x;
      if (s == typed) found.push_back({EditKind::kSubstitution, i, x});
    }
    if (i + 1 < corrected.size() && corrected[i] != corrected[i + 1]) {
      std::u32string t = corrected;
      std::swap(t[i], t[i + 1]);
      if (t == typed) found.push_back({EditKind::kTransposition, i, 0});
    }
  }
  for (std::size_t gap = 0; gap <= corrected.size(); ++gap) {
    for (char32_t x : alphabet) {
      std::u32string s = corrected;
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(gap), x);
      if (s == typed) found.push_back({EditKind::kInsertion, gap, x});
    }
  }
  return found;
}

struct OracleCounts {
  std::map<char32_t, std::uint64_t> f;
  std::map<std::u32string, std::uint64_t> bigram;
  std::map<char32_t, std::uint64_t> del;
  std::map<std::u32string, std::uint64_t> sub, after, before, trans;
};

inline OracleCounts CountNaively(const std::vector<std::pair<std::u32string, Explanation>>& explained,
                          const std::vector<std::u32string>& clean) {
  OracleCounts o;
  for (const auto& w : clean) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      ++o.f[w[i]];
      for (std::size_t j = i + 1; j < w.size() && j == i + 1; ++j) ++o.bigram[{w[i], w[j]}];
    }
  }
  for (const auto& [w, e] : explained) {
    switch (e.kind) {
      case EditKind::kDeletion: ++o.del[w[e.pos]]; break;
      case EditKind::kSubstitution: ++o.sub[{w[e.pos], e.ch}]; break;
      case EditKind::kTransposition: ++o.trans[{w[e.pos], w[e.pos + 1]}]; break;
      case EditKind::kInsertion:
        if (e.pos > 0) ++o.after[{w[e.pos - 1], e.ch}];
        if (e.pos < w.size()) ++o.before[{w[e.pos], e.ch}];
        break;
    }
  }
  return o;
}

struct ToyCorpus {
  std::vector<EditRecord> records;
  std::vector<std::u32string> clean;
  std::vector<std::pair<std::u32string, Explanation>> explained;
};

inline ToyCorpus MakeToyCorpus(std::size_t n, std::uint64_t seed) {
  const std::u32string alphabet = U"abcdeio";
  const std::u32string rare = U"q";  // stays below the threshold
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(3, 9);
  std::uniform_int_distribution<int> op(0, 4);
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> coin(0, 59);
  ToyCorpus toy;
  while (toy.records.size() < n) {
    std::u32string w;
    for (int i = len(rng); i > 0; --i) w.push_back(coin(rng) == 0 ? rare[0] : alphabet[letter(rng)]);
    std::u32string typed = w;
    std::uniform_int_distribution<std::size_t> at(0, w.size() - 1);
    const std::size_t p = at(rng);
    switch (op(rng)) {
      case 0: typed.erase(p, 1); break;
      case 1: typed[p] = alphabet[letter(rng)]; break;
      case 2: typed.insert(typed.begin() + static_cast<std::ptrdiff_t>(p), alphabet[letter(rng)]); break;
      case 3:
        if (p + 1 < typed.size()) std::swap(typed[p], typed[p + 1]);
        break;
      default: break;  // clean record
    }
    const auto explanations = ExplainSingleEdit(w, typed, alphabet + rare);
    if (typed == w) {
      toy.records.push_back({to_utf8(typed), to_utf8(w)});
      toy.clean.push_back(w);
      continue;
    }
    if (explanations.size() != 1) continue;
    toy.records.push_back({to_utf8(typed), to_utf8(w)});
    toy.clean.push_back(w);
    toy.explained.push_back({w, explanations.front()});
  }
  return toy;
}

inline double Ratio(std::uint64_t a, double b) { return b == 0 ? 0.0 : static_cast<double>(a) / b; }

// Compares a model built with `threshold` against the naive tallies and
// returns one message per mismatch.
inline std::vector<std::string> CompareWithOracle(const ToyCorpus& toy, std::uint64_t threshold,
                                                  const TypoModel& model) {
  std::vector<std::string> bad;
  const auto near = [](double a, double b) {
    return std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b));
  };
  const auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const OracleCounts o = CountNaively(toy.explained, toy.clean);
  std::vector<char32_t> chars;
  for (const auto& [c, n] : o.f) {
    if (n >= threshold) chars.push_back(c);
  }
  const auto in_c = [&](char32_t c) { return std::count(chars.begin(), chars.end(), c) > 0; };
  if (model.entries().size() != chars.size()) {
    bad.push_back("character set size differs");
    return bad;
  }
  for (std::size_t k = 0; k < chars.size(); ++k) {
    const char32_t c = chars[k];
    const auto& e = model.entries()[k];
    const std::string name = to_utf8(c);
    if (e.ch != c) {
      bad.push_back("character set differs at " + name);
      continue;
    }
    const double fc = static_cast<double>(o.f.at(c));
    std::map<char32_t, std::uint64_t> sub, after, before;
    std::uint64_t sub_n = 0, after_n = 0, before_n = 0;
    for (const auto& [key, n] : o.sub) {
      if (key[0] == c && in_c(key[1])) sub[key[1]] += n, sub_n += n;
    }
    for (const auto& [key, n] : o.after) {
      if (key[0] == c && in_c(key[1])) after[key[1]] += n, after_n += n;
    }
    for (const auto& [key, n] : o.before) {
      if (key[0] == c && in_c(key[1])) before[key[1]] += n, before_n += n;
    }
    const auto del = o.del.count(c) ? o.del.at(c) : 0;
    expect(near(e.p.deletion, Ratio(del, fc)), "deletion " + name);
    expect(near(e.p.substitution, Ratio(sub_n, fc)), "substitution " + name);
    expect(near(e.p.insertion_after, Ratio(after_n, 2 * fc)), "insertion_after " + name);
    expect(near(e.p.insertion_before, Ratio(before_n, 2 * fc)), "insertion_before " + name);

    const auto check_dist = [&](const OutcomeDistribution& got,
                                const std::map<char32_t, std::uint64_t>& want, std::uint64_t total,
                                const std::string& what) {
      if (got.size() != want.size()) {
        bad.push_back(what + " outcome count " + name);
        return;
      }
      std::size_t i = 0;
      for (const auto& [x, n] : want) {
        expect(got[i].ch == x && near(got[i].p, Ratio(n, static_cast<double>(total))),
               what + " outcome " + name + "->" + to_utf8(x));
        ++i;
      }
    };
    check_dist(e.substitution, sub, sub_n, "substitution");
    check_dist(e.insertion_after, after, after_n, "insertion_after");
    check_dist(e.insertion_before, before, before_n, "insertion_before");
  }

  std::size_t trans_seen = 0;
  for (const auto& [key, n] : o.trans) {
    if (!in_c(key[0]) || !in_c(key[1])) continue;
    ++trans_seen;
    expect(near(model.transposition(key[0], key[1]), Ratio(n, static_cast<double>(o.bigram.at(key)))),
           "transposition " + to_utf8(key));
  }
  expect(model.transpositions().size() == trans_seen, "transposition count");
  return bad;
}

}  // namespace diacritica::oracle

#endif  // DIACRITICA_TESTS_SUPPORT_TYPO_ORACLE_HPP_
