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

"""Converts GitHub Typo Corpus JSONL into the edit corpus TSV format.

Each output line is `typed<TAB>corrected`. Only edits flagged as typos are
kept; a minimum typo probability and a source language can be required.

  github_typo_to_tsv.py github-typo-corpus.v1.0.0.jsonl.gz -o edits.tsv
"""

import argparse
import gzip
import json
import sys


def open_input(path):
    if path == "-":
        return sys.stdin
    if path.endswith(".gz"):
        return gzip.open(path, "rt", encoding="utf-8")
    return open(path, encoding="utf-8")


def clean(text):
    return " ".join(text.replace("\t", " ").split())


def convert(lines, out, min_prob, lang):
    kept = 0
    for line in lines:
        line = line.strip()
        if not line:
            continue
        record = json.loads(line)
        for edit in record.get("edits", []):
            if not edit.get("is_typo", False):
                continue
            prob = edit.get("prob")
            if min_prob > 0 and (prob is None or prob < min_prob):
                continue
            src, tgt = edit.get("src", {}), edit.get("tgt", {})
            if lang and src.get("lang") != lang:
                continue
            typed, corrected = clean(src.get("text", "")), clean(tgt.get("text", ""))
            if not typed or not corrected or typed == corrected:
                continue
            out.write(f"{typed}\t{corrected}\n")
            kept += 1
    return kept


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("input", help="JSONL or JSONL.gz file, or - for stdin")
    parser.add_argument("-o", "--output", default="-", help="output TSV (default stdout)")
    parser.add_argument("--min-prob", type=float, default=0.0,
                        help="minimum typo probability (default: keep all flagged edits)")
    parser.add_argument("--lang", default="eng", help="source language; empty keeps all")
    args = parser.parse_args()

    out = sys.stdout if args.output == "-" else open(args.output, "w", encoding="utf-8")
    with open_input(args.input) as lines:
        kept = convert(lines, out, args.min_prob, args.lang)
    if out is not sys.stdout:
        out.close()
    print(f"wrote {kept} edits", file=sys.stderr)


if __name__ == "__main__":
    main()
