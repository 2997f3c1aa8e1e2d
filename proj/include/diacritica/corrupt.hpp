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

// Stochastic typo injection.
//
// One left-to-right pass over the characters. At a position holding a
// character of the model's set, the checks run in a fixed order, each with
// probability min(1, scale * P):
//
//   1. transposition of the bigram starting here (consumes both characters)
//   2. deletion
//   3. substitution
//   4. insertion before
//   5. insertion after
//
// The first hit wins, so every source character takes part in at most one
// event. Characters outside the set, whitespace included, are copied.

#ifndef DIACRITICA_CORRUPT_HPP_
#define DIACRITICA_CORRUPT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diacritica/error.hpp"
#include "diacritica/structured_text.hpp"
#include "diacritica/typo_model.hpp"
#include "diacritica/unicode.hpp"

namespace diacritica {

enum class CorruptionKind {
  kDeletion,
  kSubstitution,
  kInsertionAfter,
  kInsertionBefore,
  kTransposition,
};

inline std::string_view to_string(CorruptionKind k) {
  switch (k) {
    case CorruptionKind::kDeletion: return "deletion";
    case CorruptionKind::kSubstitution: return "substitution";
    case CorruptionKind::kInsertionAfter: return "insertion_after";
    case CorruptionKind::kInsertionBefore: return "insertion_before";
    case CorruptionKind::kTransposition: return "transposition";
  }
  return "deletion";
}

struct CorruptionEvent {
  CorruptionKind kind;
  std::size_t position;     // character index in the clean text
  std::string original;     // clean characters consumed
  std::string replacement;  // what was emitted instead

  friend bool operator==(const CorruptionEvent&, const CorruptionEvent&) = default;
};

struct CorruptionResult {
  std::string text;
  std::vector<CorruptionEvent> events;
};

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Per-sentence seed; `epoch` > 0 gives fresh typos on every pass.
inline std::uint64_t derive_seed(std::uint64_t global_seed, std::uint64_t sentence_index,
                                 std::uint64_t epoch = 0) {
  return mix64(mix64(mix64(global_seed) ^ sentence_index) ^ epoch);
}

namespace detail {

class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) from the top 53 bits.
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool hit(double p) { return p > 0.0 && next() < p; }

 private:
  std::mt19937_64 engine_;
};

inline char32_t sample_outcome(const OutcomeDistribution& dist, double u) {
  double acc = 0;
  for (const auto& o : dist) {
    acc += o.p;
    if (u < acc) return o.ch;
  }
  return dist.back().ch;
}

}  // namespace detail

inline CorruptionResult corrupt(std::string_view text, const TypoModel& model, std::uint64_t seed) {
  std::vector<Utf8Char> units;
  std::vector<std::size_t> offsets;
  units.reserve(text.size());
  offsets.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const Utf8Char c = decode_utf8(text, pos);
    units.push_back(c);
    offsets.push_back(pos);
    pos += c.length;
  }
  const auto raw = [&](std::size_t i) { return text.substr(offsets[i], units[i].length); };
  const auto entry_at = [&](std::size_t i) -> const TypoModel::CharEntry* {
    return units[i].valid ? model.find(units[i].code_point) : nullptr;
  };

  CorruptionResult result;
  result.text.reserve(text.size() + 8);
  detail::UniformSource rng(seed);

  for (std::size_t i = 0; i < units.size(); ++i) {
    const TypoModel::CharEntry* e = entry_at(i);
    if (e == nullptr) {
      result.text.append(raw(i));
      continue;
    }
    const char32_t c = e->ch;

    if (i + 1 < units.size() && entry_at(i + 1) != nullptr) {
      const char32_t next = units[i + 1].code_point;
      if (rng.hit(model.effective(model.transposition(c, next)))) {
        std::string original(raw(i));
        original.append(raw(i + 1));
        std::string replacement(raw(i + 1));
        replacement.append(raw(i));
        result.text += replacement;
        result.events.push_back({CorruptionKind::kTransposition, i, std::move(original),
                                 std::move(replacement)});
        ++i;
        continue;
      }
    }
    if (rng.hit(model.effective(e->p.deletion))) {
      result.events.push_back({CorruptionKind::kDeletion, i, std::string(raw(i)), ""});
      continue;
    }
    if (!e->substitution.empty() && rng.hit(model.effective(e->p.substitution))) {
      const std::string replacement = to_utf8(detail::sample_outcome(e->substitution, rng.next()));
      result.text += replacement;
      result.events.push_back({CorruptionKind::kSubstitution, i, std::string(raw(i)), replacement});
      continue;
    }
    if (!e->insertion_before.empty() && rng.hit(model.effective(e->p.insertion_before))) {
      std::string replacement = to_utf8(detail::sample_outcome(e->insertion_before, rng.next()));
      replacement.append(raw(i));
      result.text += replacement;
      result.events.push_back(
          {CorruptionKind::kInsertionBefore, i, std::string(raw(i)), std::move(replacement)});
      continue;
    }
    if (!e->insertion_after.empty() && rng.hit(model.effective(e->p.insertion_after))) {
      std::string replacement(raw(i));
      append_utf8(replacement, detail::sample_outcome(e->insertion_after, rng.next()));
      result.text += replacement;
      result.events.push_back(
          {CorruptionKind::kInsertionAfter, i, std::string(raw(i)), std::move(replacement)});
      continue;
    }
    result.text.append(raw(i));
  }
  return result;
}

// Rebuilds the corrupted text from the clean text and its event log.
inline std::string replay_events(std::string_view clean, std::span<const CorruptionEvent> events) {
  std::string out;
  out.reserve(clean.size() + events.size());
  std::size_t index = 0;
  std::size_t pos = 0;
  for (const auto& ev : events) {
    if (ev.position < index) throw DataError("event log is not ordered by position");
    while (index < ev.position) {
      if (pos >= clean.size()) throw DataError("event position beyond end of text");
      const Utf8Char c = decode_utf8(clean, pos);
      out.append(clean.substr(pos, c.length));
      pos += c.length;
      ++index;
    }
    if (clean.substr(pos, ev.original.size()) != ev.original) {
      throw DataError("event original does not match the clean text at position " +
                      std::to_string(ev.position));
    }
    out += ev.replacement;
    pos += ev.original.size();
    index += char_count(ev.original);
  }
  out.append(clean.substr(std::min(pos, clean.size())));
  return out;
}

// Reporting categories: both insertion kinds merge into one.
enum class ReportCategory { kDeletion, kSubstitution, kInsertion, kTransposition };
inline constexpr std::array<std::string_view, 4> kReportCategoryNames = {
    "deletion", "substitution", "insertion", "transposition"};

inline ReportCategory report_category(CorruptionKind k) {
  switch (k) {
    case CorruptionKind::kDeletion: return ReportCategory::kDeletion;
    case CorruptionKind::kSubstitution: return ReportCategory::kSubstitution;
    case CorruptionKind::kInsertionAfter:
    case CorruptionKind::kInsertionBefore: return ReportCategory::kInsertion;
    case CorruptionKind::kTransposition: return ReportCategory::kTransposition;
  }
  return ReportCategory::kDeletion;
}

// Aggregated event statistics. A corrupted character is a clean character
// consumed by an event; transpositions consume two.
struct CorruptionReport {
  std::uint64_t characters = 0;
  std::uint64_t corrupted_characters = 0;
  std::array<std::uint64_t, 4> events{};

  void add(std::string_view clean, std::span<const CorruptionEvent> evs) {
    characters += char_count(clean);
    add_events(evs);
  }

  void add_events(std::span<const CorruptionEvent> evs) {
    for (const auto& e : evs) {
      ++events[static_cast<std::size_t>(report_category(e.kind))];
      corrupted_characters += char_count(e.original);
    }
  }

  void merge(const CorruptionReport& o) {
    characters += o.characters;
    corrupted_characters += o.corrupted_characters;
    for (std::size_t k = 0; k < events.size(); ++k) events[k] += o.events[k];
  }

  std::uint64_t total_events() const {
    std::uint64_t n = 0;
    for (auto v : events) n += v;
    return n;
  }

  // True when no event was recorded; shares are then all zero.
  bool empty() const { return total_events() == 0; }

  double share_pct(ReportCategory c) const {
    const std::uint64_t total = total_events();
    return total ? 100.0 * static_cast<double>(events[static_cast<std::size_t>(c)]) /
                       static_cast<double>(total)
                 : 0.0;
  }

  double corrupted_pct() const {
    return characters ? 100.0 * static_cast<double>(corrupted_characters) /
                            static_cast<double>(characters)
                      : 0.0;
  }

  std::string to_structured_text() const {
    std::string out = "# typo corruption report\n#\n";
    out += "#   category        events    share %\n";
    for (std::size_t k = 0; k < 4; ++k) {
      char line[96];
      std::snprintf(line, sizeof line, "#   %-14s %9llu %10s\n", kReportCategoryNames[k].data(),
                    static_cast<unsigned long long>(events[k]),
                    st::fixed2(share_pct(static_cast<ReportCategory>(k))).c_str());
      out += line;
    }
    out += "#   corrupted characters: " + std::to_string(corrupted_characters) + " of " +
           std::to_string(characters) + " (" + st::fixed2(corrupted_pct()) + "%)\n\n";
    out += "[corruption]\n";
    out += "characters = " + std::to_string(characters) + "\n";
    out += "corrupted_characters = " + std::to_string(corrupted_characters) + "\n";
    out += "corrupted_pct = " + st::fixed2(corrupted_pct()) + "\n";
    out += "events = " + std::to_string(total_events()) + "\n";
    out += std::string("empty = ") + (empty() ? "true" : "false") + "\n";
    for (std::size_t k = 0; k < 4; ++k) {
      out += "\n[corruption." + std::string(kReportCategoryNames[k]) + "]\n";
      out += "events = " + std::to_string(events[k]) + "\n";
      out += "share_pct = " + st::fixed2(share_pct(static_cast<ReportCategory>(k))) + "\n";
    }
    return out;
  }
};

// Expected event counts and corrupted characters for one text under the
// sampling scheme above. Position i is a start position (not consumed by a
// transposition at i-1) with probability s(i):
//   s(0) = 1,  s(i+1) = 1 - s(i) * t(i)
// where t(i) is the effective transposition probability of bigram (i, i+1).
struct ExpectedCorruption {
  double characters = 0;
  double corrupted_characters = 0;
  std::array<double, 4> events{};

  void merge(const ExpectedCorruption& o) {
    characters += o.characters;
    corrupted_characters += o.corrupted_characters;
    for (std::size_t k = 0; k < 4; ++k) events[k] += o.events[k];
  }

  double share_pct(ReportCategory c) const {
    double total = 0;
    for (double v : events) total += v;
    return total > 0 ? 100.0 * events[static_cast<std::size_t>(c)] / total : 0.0;
  }

  double corrupted_pct() const {
    return characters > 0 ? 100.0 * corrupted_characters / characters : 0.0;
  }
};

inline ExpectedCorruption expected_corruption(std::string_view text, const TypoModel& model) {
  const std::u32string cps = to_u32(text);
  ExpectedCorruption out;
  out.characters = static_cast<double>(cps.size());
  double start = 1.0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const TypoModel::CharEntry* e = model.find(cps[i]);
    double t = 0.0;
    if (e != nullptr) {
      if (i + 1 < cps.size() && model.contains(cps[i + 1])) {
        t = model.effective(model.transposition(cps[i], cps[i + 1]));
      }
      double rest = start * (1.0 - t);
      const double del = model.effective(e->p.deletion);
      const double sub = e->substitution.empty() ? 0.0 : model.effective(e->p.substitution);
      const double ib = e->insertion_before.empty() ? 0.0 : model.effective(e->p.insertion_before);
      const double ia = e->insertion_after.empty() ? 0.0 : model.effective(e->p.insertion_after);

      out.events[static_cast<std::size_t>(ReportCategory::kTransposition)] += start * t;
      out.corrupted_characters += 2.0 * start * t;
      const double p_del = rest * del;
      rest -= p_del;
      const double p_sub = rest * sub;
      rest -= p_sub;
      const double p_ib = rest * ib;
      rest -= p_ib;
      const double p_ia = rest * ia;
      out.events[static_cast<std::size_t>(ReportCategory::kDeletion)] += p_del;
      out.events[static_cast<std::size_t>(ReportCategory::kSubstitution)] += p_sub;
      out.events[static_cast<std::size_t>(ReportCategory::kInsertion)] += p_ib + p_ia;
      out.corrupted_characters += p_del + p_sub + p_ib + p_ia;
    }
    start = 1.0 - start * t;
  }
  return out;
}

}  // namespace diacritica

#endif  // DIACRITICA_CORRUPT_HPP_
