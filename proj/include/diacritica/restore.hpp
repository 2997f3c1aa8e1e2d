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

#ifndef DIACRITICA_RESTORE_HPP_
#define DIACRITICA_RESTORE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diacritica/diagnostics.hpp"
#include "diacritica/error.hpp"
#include "diacritica/lexicon.hpp"
#include "diacritica/parallel.hpp"
#include "diacritica/textcore.hpp"

namespace diacritica {

// Sentence-level restorer. Output must be a single line.
class RestorationBackend {
 public:
  virtual ~RestorationBackend() = default;

  virtual std::string restore_sentence(std::string_view line) = 0;
  virtual std::string name() const = 0;

  // Whether restore_sentence may be called from several threads at once.
  virtual bool concurrent() const { return true; }
};

class IdentityBackend final : public RestorationBackend {
 public:
  std::string restore_sentence(std::string_view line) override { return std::string(line); }
  std::string name() const override { return "identity"; }
};

inline std::string restore_dictionary(std::string_view line, const UnigramLexicon& lexicon) {
  std::string out;
  out.reserve(line.size() + 8);
  bool first = true;
  for (std::string_view tok : split_tokens(line)) {
    if (!first) out.push_back(' ');
    first = false;
    out += lexicon.restore_word(tok);
  }
  return out;
}

class DictionaryBackend final : public RestorationBackend {
 public:
  explicit DictionaryBackend(std::shared_ptr<const UnigramLexicon> lexicon)
      : lexicon_(std::move(lexicon)) {}

  std::string restore_sentence(std::string_view line) override {
    return restore_dictionary(line, *lexicon_);
  }
  std::string name() const override { return "dict"; }

 private:
  std::shared_ptr<const UnigramLexicon> lexicon_;
};

enum class AlignmentFallback { kKeepBackend, kKeepDictionary };

inline AlignmentFallback parse_alignment_fallback(std::string_view s) {
  if (s == "keep_backend" || s == "backend") return AlignmentFallback::kKeepBackend;
  if (s == "keep_dictionary" || s == "dictionary") return AlignmentFallback::kKeepDictionary;
  throw UsageError("unknown alignment fallback '" + std::string(s) +
                   "' (expected keep_backend or keep_dictionary)");
}

// Words with exactly this many dictionary candidates go to the dictionary.
inline constexpr std::size_t kDictionaryRouteThreshold = 1;

struct HybridPolicy {
  AlignmentFallback alignment_fallback = AlignmentFallback::kKeepBackend;
};

// Which source decided each output position of a hybrid restoration.
enum class RouteSource { kDictionary, kBackend };

struct HybridOutcome {
  std::string line;
  bool aligned = true;
  std::vector<RouteSource> routes;  // one per input token when aligned
};

// Merges a backend restoration with dictionary decisions for words that have
// a single candidate. Alignment is positional over space-separated tokens;
// a token-count mismatch applies the fallback to the whole line.
inline HybridOutcome merge_hybrid(std::string_view input, std::string_view backend_line,
                                  const UnigramLexicon& lexicon, const HybridPolicy& policy) {
  const auto in_tokens = split_tokens(input);
  const auto out_tokens = split_tokens(backend_line);
  HybridOutcome result;
  if (in_tokens.size() != out_tokens.size()) {
    result.aligned = false;
    result.line = policy.alignment_fallback == AlignmentFallback::kKeepBackend
                      ? std::string(backend_line)
                      : restore_dictionary(input, lexicon);
    return result;
  }
  result.routes.reserve(in_tokens.size());
  for (std::size_t i = 0; i < in_tokens.size(); ++i) {
    if (i) result.line.push_back(' ');
    const auto* cands = lexicon.candidates(in_tokens[i]);
    if (cands != nullptr && cands->size() == kDictionaryRouteThreshold) {
      result.line += cands->front().form;
      result.routes.push_back(RouteSource::kDictionary);
    } else {
      result.line.append(out_tokens[i]);
      result.routes.push_back(RouteSource::kBackend);
    }
  }
  return result;
}

class HybridBackend final : public RestorationBackend {
 public:
  HybridBackend(std::shared_ptr<const UnigramLexicon> lexicon,
                std::shared_ptr<RestorationBackend> backend, HybridPolicy policy = {},
                Diagnostics* diagnostics = nullptr)
      : lexicon_(std::move(lexicon)),
        backend_(std::move(backend)),
        policy_(policy),
        diagnostics_(diagnostics) {}

  std::string restore_sentence(std::string_view line) override {
    HybridOutcome r = merge_hybrid(line, backend_->restore_sentence(line), *lexicon_, policy_);
    if (!r.aligned && diagnostics_ != nullptr) ++diagnostics_->alignment_fallbacks;
    return std::move(r.line);
  }

  std::string name() const override { return "hybrid(" + backend_->name() + ")"; }
  bool concurrent() const override { return backend_->concurrent(); }

 private:
  std::shared_ptr<const UnigramLexicon> lexicon_;
  std::shared_ptr<RestorationBackend> backend_;
  HybridPolicy policy_;
  Diagnostics* diagnostics_;
};

struct BatchFailure {
  std::size_t index;
  std::string message;
};

struct BatchResult {
  std::vector<std::string> lines;         // in input order
  std::vector<BatchFailure> failures;     // sentences whose backend call failed
};

// Runs a backend over a corpus in input order. Backends that are not
// concurrent run on one thread. Failed sentences are retried `retries` times,
// then recorded and left empty in the output.
inline BatchResult restore_batch(RestorationBackend& backend, const std::vector<std::string>& lines,
                                 unsigned threads = default_thread_count(), unsigned retries = 0) {
  if (!backend.concurrent()) threads = 1;
  struct Item {
    std::string line;
    std::optional<std::string> error;
  };
  auto items = parallel_map(
      lines.size(),
      [&](std::size_t i) {
        Item item;
        for (unsigned attempt = 0;; ++attempt) {
          try {
            item.line = backend.restore_sentence(lines[i]);
            if (item.line.find('\n') != std::string::npos) {
              throw ProtocolError("backend returned a multi-line restoration");
            }
            item.error.reset();
            return item;
          } catch (const BackendError& e) {
            item.line.clear();
            item.error = e.what();
            if (attempt >= retries) return item;
          }
        }
      },
      threads);
  BatchResult result;
  result.lines.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].error) result.failures.push_back({i, *items[i].error});
    result.lines.push_back(std::move(items[i].line));
  }
  return result;
}

}  // namespace diacritica

#endif  // DIACRITICA_RESTORE_HPP_
