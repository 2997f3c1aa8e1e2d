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

#ifndef DIACRITICA_KEYBOARD_LAYOUT_HPP_
#define DIACRITICA_KEYBOARD_LAYOUT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diacritica/error.hpp"
#include "diacritica/unicode.hpp"

namespace diacritica {

enum class LayoutFamily { kQwerty, kQwertz, kAzerty };

inline std::string_view to_string(LayoutFamily f) {
  switch (f) {
    case LayoutFamily::kQwerty: return "qwerty";
    case LayoutFamily::kQwertz: return "qwertz";
    case LayoutFamily::kAzerty: return "azerty";
  }
  return "qwerty";
}

inline LayoutFamily parse_layout_family(std::string_view name) {
  if (name == "qwerty") return LayoutFamily::kQwerty;
  if (name == "qwertz") return LayoutFamily::kQwertz;
  if (name == "azerty") return LayoutFamily::kAzerty;
  throw UsageError("unknown keyboard layout '" + std::string(name) +
                   "' (expected qwerty, qwertz or azerty)");
}

// Keyboard family commonly used for a benchmark language.
inline LayoutFamily layout_for_language(std::string_view language) {
  if (language == "croatian" || language == "hungarian" || language == "slovak") {
    return LayoutFamily::kQwertz;
  }
  if (language == "french") return LayoutFamily::kAzerty;
  return LayoutFamily::kQwerty;
}

// Maps the character produced by a physical key on a US QWERTY keyboard to
// the character the same key produces in the target family. Characters not
// listed map to themselves.
class KeyboardLayout {
 public:
  explicit KeyboardLayout(LayoutFamily family = LayoutFamily::kQwerty) : family_(family) {
    switch (family) {
      case LayoutFamily::kQwerty:
        break;
      case LayoutFamily::kQwertz:
        swap(U'y', U'z');
        break;
      case LayoutFamily::kAzerty:
        swap(U'a', U'q');
        swap(U'z', U'w');
        // m sits right of l on AZERTY; the QWERTY m key types a comma and
        // the QWERTY comma key types a semicolon.
        moves_.push_back({U'm', U','});
        moves_.push_back({U',', U';'});
        moves_.push_back({U';', U'm'});
        break;
    }
  }

  LayoutFamily family() const noexcept { return family_; }
  bool is_identity() const noexcept { return moves_.empty(); }

  char32_t map(char32_t c) const {
    for (const auto& [from, to] : moves_) {
      if (from == c) return to;
    }
    return c;
  }

  std::string map(std::string_view text) const {
    if (is_identity()) return std::string(text);
    std::string out;
    out.reserve(text.size());
    for (std::size_t pos = 0; pos < text.size();) {
      const Utf8Char c = decode_utf8(text, pos);
      if (c.valid) {
        append_utf8(out, map(c.code_point));
      } else {
        out.append(text.substr(pos, c.length));
      }
      pos += c.length;
    }
    return out;
  }

  const std::vector<std::pair<char32_t, char32_t>>& moves() const noexcept { return moves_; }

 private:
  void swap(char32_t a, char32_t b) {
    moves_.push_back({a, b});
    moves_.push_back({b, a});
  }

  LayoutFamily family_;
  std::vector<std::pair<char32_t, char32_t>> moves_;
};

}  // namespace diacritica

#endif  // DIACRITICA_KEYBOARD_LAYOUT_HPP_
