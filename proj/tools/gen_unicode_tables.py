#!/usr/bin/env python3
"""Regenerates include/rarespan/unicode_tables.hpp from Python's unicodedata.

Emits contiguous codepoint ranges for general categories P*/S* (split as
single-character tokens), Z*/whitespace ranges (token delimiters), and the
simple one-to-one case foldings whose targets fold to themselves, so that
folding stays idempotent.
"""

import sys
import unicodedata

HEADER = """// Copyright 2026 The Rarespan Authors
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

// Generated from the Unicode character database (see tools/gen_unicode_tables.py).
// Do not edit by hand.

#pragma once

#include <array>
#include <cstdint>

namespace rarespan::unicode {

struct Range {
  char32_t lo;
  char32_t hi;
};
"""


def collect_ranges(pred):
    ranges = []
    cur = None
    for cp in range(0x110000):
        if pred(cp):
            if cur is None:
                cur = [cp, cp]
            elif cp == cur[1] + 1:
                cur[1] = cp
            else:
                ranges.append(cur)
                cur = [cp, cp]
        elif cur is not None:
            ranges.append(cur)
            cur = None
    if cur is not None:
        ranges.append(cur)
    return ranges


def emit_ranges(out, name, comment, ranges):
    out.write("// %s\n" % comment)
    out.write("inline constexpr std::array<Range, %d> %s = {{\n" % (len(ranges), name))
    for i in range(0, len(ranges), 4):
        row = ranges[i : i + 4]
        out.write("    " + " ".join("{0x%X, 0x%X}," % (a, b) for a, b in row) + "\n")
    out.write("}};\n\n")


def main(path):
    punct = collect_ranges(
        lambda cp: unicodedata.category(chr(cp))[0] in ("P", "S")
    )
    white = collect_ranges(
        lambda cp: chr(cp).isspace() or unicodedata.category(chr(cp)).startswith("Z")
    )
    folds = []
    for cp in range(0x110000):
        f = chr(cp).casefold()
        if len(f) == 1 and f != chr(cp) and chr(ord(f)).casefold() == f:
            folds.append((cp, ord(f)))

    with open(path, "w") as out:
        out.write(HEADER)
        out.write("\n")
        emit_ranges(out, "kPunctSymbolRanges",
                    "Codepoints in general categories P* and S*.", punct)
        emit_ranges(out, "kWhitespaceRanges",
                    "Codepoints in general category Z* plus ASCII/Unicode whitespace.",
                    white)
        out.write("struct FoldPair {\n  char32_t from;\n  char32_t to;\n};\n\n")
        out.write("// Simple one-to-one case foldings whose targets fold to themselves.\n")
        out.write("inline constexpr std::array<FoldPair, %d> kSimpleFolds = {{\n" % len(folds))
        for i in range(0, len(folds), 4):
            row = folds[i : i + 4]
            out.write("    " + " ".join("{0x%X, 0x%X}," % (a, b) for a, b in row) + "\n")
        out.write("}};\n\n}  // namespace rarespan::unicode\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/rarespan/unicode_tables.hpp")
