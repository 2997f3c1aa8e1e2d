#!/usr/bin/env python3
# Copyright 2026 The Diacritica Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates include/diacritica/detail/unicode_tables.hpp.

Emits sorted, non-overlapping code point ranges for the letter general
categories (Lu, Ll, Lt, Lm, Lo) from Python's unicodedata module.
"""

import sys
import unicodedata

CATEGORIES = ["Lu", "Ll", "Lt", "Lm", "Lo"]


def ranges():
    out = []
    start = None
    current = None
    for cp in range(0x110000):
        cat = unicodedata.category(chr(cp))
        if cat not in CATEGORIES:
            cat = None
        if cat != current:
            if current is not None:
                out.append((start, cp - 1, current))
            start, current = cp, cat
    if current is not None:
        out.append((start, 0x10FFFF, current))
    return out


def main(path):
    rs = ranges()
    with open(path, "w", encoding="utf-8") as f:
        f.write("// Generated by tools/gen_unicode_tables.py from Unicode %s. Do not edit.\n\n"
                % unicodedata.unidata_version)
        f.write("#ifndef DIACRITICA_DETAIL_UNICODE_TABLES_HPP_\n")
        f.write("#define DIACRITICA_DETAIL_UNICODE_TABLES_HPP_\n\n")
        f.write("#include <array>\n#include <cstdint>\n\n")
        f.write("namespace diacritica::detail {\n\n")
        f.write("enum class LetterCategory : std::uint8_t { kNone, Lu, Ll, Lt, Lm, Lo };\n\n")
        f.write("struct LetterRange {\n  char32_t first;\n  char32_t last;\n  LetterCategory category;\n};\n\n")
        f.write('inline constexpr char kUnicodeVersion[] = "%s";\n\n' % unicodedata.unidata_version)
        f.write("inline constexpr std::array<LetterRange, %d> kLetterRanges = {{\n" % len(rs))
        for first, last, cat in rs:
            f.write("    {0x%04X, 0x%04X, LetterCategory::%s},\n" % (first, last, cat))
        f.write("}};\n\n}  // namespace diacritica::detail\n\n")
        f.write("#endif  // DIACRITICA_DETAIL_UNICODE_TABLES_HPP_\n")
    print("wrote %d ranges to %s" % (len(rs), path))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/diacritica/detail/unicode_tables.hpp")
