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

// A small TOML subset used for model files, experiment configs and report
// files: `# comments`, `[dotted.table]` headers and `key = value` lines where
// value is a basic string, an integer, a float or a boolean. Arrays, inline
// tables and multi-line strings are not supported.

#ifndef DIACRITICA_STRUCTURED_TEXT_HPP_
#define DIACRITICA_STRUCTURED_TEXT_HPP_

#include <charconv>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "diacritica/error.hpp"
#include "diacritica/unicode.hpp"

namespace diacritica {

class StructuredValue {
 public:
  enum class Kind { kString, kInteger, kFloat, kBool };

  StructuredValue() = default;
  StructuredValue(Kind kind, std::string text) : kind_(kind), text_(std::move(text)) {}

  Kind kind() const noexcept { return kind_; }

  const std::string& as_string() const {
    if (kind_ != Kind::kString) throw DataError("expected a string value, got " + text_);
    return text_;
  }

  std::int64_t as_int() const {
    if (kind_ != Kind::kInteger) throw DataError("expected an integer value, got " + text_);
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(text_.data(), text_.data() + text_.size(), v);
    if (ec != std::errc() || p != text_.data() + text_.size()) {
      throw DataError("integer out of range: " + text_);
    }
    return v;
  }

  std::uint64_t as_uint() const {
    if (kind_ != Kind::kInteger) throw DataError("expected an integer value, got " + text_);
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(text_.data(), text_.data() + text_.size(), v);
    if (ec != std::errc() || p != text_.data() + text_.size()) {
      throw DataError("unsigned integer out of range: " + text_);
    }
    return v;
  }

  double as_double() const {
    if (kind_ != Kind::kFloat && kind_ != Kind::kInteger) {
      throw DataError("expected a number, got " + text_);
    }
    double v = 0;
    const auto [p, ec] = std::from_chars(text_.data(), text_.data() + text_.size(), v);
    if (ec != std::errc() || p != text_.data() + text_.size()) {
      throw DataError("malformed number: " + text_);
    }
    return v;
  }

  bool as_bool() const {
    if (kind_ != Kind::kBool) throw DataError("expected a boolean value, got " + text_);
    return text_ == "true";
  }

 private:
  Kind kind_ = Kind::kString;
  std::string text_;
};

// Parsed document. Sections keep file order, entries keep file order within
// a section. The root section has the empty name.
class StructuredDoc {
 public:
  using Entries = std::vector<std::pair<std::string, StructuredValue>>;

  static StructuredDoc parse(std::string_view text) {
    StructuredDoc doc;
    doc.order_.push_back("");
    doc.sections_[""];
    std::string current;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      const auto fail = [&](const std::string& why) {
        return DataError("line " + std::to_string(line_no) + ": " + why);
      };
      line = trim(line);
      if (line.empty() || line[0] == '#') {
        if (eol == text.size()) break;
        continue;
      }
      if (line[0] == '[') {
        if (line.back() != ']' || line.size() < 3) throw fail("malformed table header");
        current = std::string(trim(line.substr(1, line.size() - 2)));
        if (!valid_key_path(current)) throw fail("malformed table name '" + current + "'");
        if (doc.sections_.contains(current)) throw fail("duplicate table [" + current + "]");
        doc.order_.push_back(current);
        doc.sections_[current];
      } else {
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw fail("expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        if (!valid_key(key)) throw fail("malformed key '" + key + "'");
        auto& entries = doc.sections_[current];
        for (const auto& e : entries) {
          if (e.first == key) throw fail("duplicate key '" + key + "'");
        }
        entries.emplace_back(key, parse_value(trim(line.substr(eq + 1)), fail));
      }
      if (eol == text.size()) break;
    }
    return doc;
  }

  const std::vector<std::string>& sections() const noexcept { return order_; }

  bool has_section(const std::string& name) const { return sections_.contains(name); }

  const Entries& entries(const std::string& section) const {
    static const Entries kEmpty;
    const auto it = sections_.find(section);
    return it == sections_.end() ? kEmpty : it->second;
  }

  const StructuredValue* find(const std::string& section, std::string_view key) const {
    for (const auto& [k, v] : entries(section)) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  const StructuredValue& get(const std::string& section, std::string_view key) const {
    const StructuredValue* v = find(section, key);
    if (v == nullptr) {
      throw DataError("missing key '" + std::string(key) + "'" +
                      (section.empty() ? std::string() : " in [" + section + "]"));
    }
    return *v;
  }

 private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
      s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
      s.remove_suffix(1);
    }
    return s;
  }

  static bool valid_key(std::string_view key) {
    if (key.empty()) return false;
    for (char c : key) {
      const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '_' || c == '-';
      if (!ok) return false;
    }
    return true;
  }

  static bool valid_key_path(std::string_view path) {
    std::size_t start = 0;
    while (true) {
      const auto dot = path.find('.', start);
      if (!valid_key(path.substr(start, dot - start))) return false;
      if (dot == std::string_view::npos) return true;
      start = dot + 1;
    }
  }

  template <typename Fail>
  static StructuredValue parse_value(std::string_view raw, const Fail& fail) {
    if (raw.empty()) throw fail("missing value");
    if (raw[0] == '"') {
      std::string out;
      std::size_t i = 1;
      for (; i < raw.size() && raw[i] != '"'; ++i) {
        if (raw[i] != '\\') {
          out.push_back(raw[i]);
          continue;
        }
        if (++i >= raw.size()) throw fail("dangling escape");
        switch (raw[i]) {
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case 't': out.push_back('\t'); break;
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case 'u': {
            if (i + 4 >= raw.size()) throw fail("short \\u escape");
            unsigned cp = 0;
            const auto [p, ec] = std::from_chars(raw.data() + i + 1, raw.data() + i + 5, cp, 16);
            if (ec != std::errc() || p != raw.data() + i + 5) throw fail("bad \\u escape");
            append_utf8(out, static_cast<char32_t>(cp));
            i += 4;
            break;
          }
          default: throw fail("unknown escape");
        }
      }
      if (i >= raw.size()) throw fail("unterminated string");
      const std::string_view rest = trim(raw.substr(i + 1));
      if (!rest.empty() && rest[0] != '#') throw fail("trailing characters after string");
      return {StructuredValue::Kind::kString, std::move(out)};
    }
    // Strip a trailing comment from bare values.
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = trim(raw.substr(0, hash));
    }
    if (raw == "true" || raw == "false") return {StructuredValue::Kind::kBool, std::string(raw)};
    const bool is_float = raw.find_first_of(".eE") != std::string_view::npos ||
                          raw == "inf" || raw == "nan";
    std::string text(raw);
    if (is_float) {
      double v = 0;
      const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || p != text.data() + text.size()) {
        throw fail("malformed float '" + text + "'");
      }
      return {StructuredValue::Kind::kFloat, std::move(text)};
    }
    std::int64_t iv = 0;
    std::uint64_t uv = 0;
    const char* b = text.data();
    const char* e = text.data() + text.size();
    const auto si = std::from_chars(b, e, iv);
    const auto ui = std::from_chars(b, e, uv);
    if ((si.ec != std::errc() || si.ptr != e) && (ui.ec != std::errc() || ui.ptr != e)) {
      throw fail("malformed value '" + text + "'");
    }
    return {StructuredValue::Kind::kInteger, std::move(text)};
  }

  std::vector<std::string> order_;
  std::map<std::string, Entries> sections_;
};

// Serialization helpers.
namespace st {

inline std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

// 17 significant digits: round-trips every finite double exactly.
inline std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

inline std::string fixed2(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// `u0061` style key for one code point.
inline std::string code_point_key(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "u%04" PRIX32, static_cast<std::uint32_t>(cp));
  return buf;
}

inline std::optional<char32_t> parse_code_point_key(std::string_view key) {
  if (key.size() < 5 || key[0] != 'u') return std::nullopt;
  std::uint32_t cp = 0;
  const auto [p, ec] = std::from_chars(key.data() + 1, key.data() + key.size(), cp, 16);
  if (ec != std::errc() || p != key.data() + key.size() || cp > 0x10FFFF) return std::nullopt;
  return static_cast<char32_t>(cp);
}

}  // namespace st

}  // namespace diacritica

#endif  // DIACRITICA_STRUCTURED_TEXT_HPP_
