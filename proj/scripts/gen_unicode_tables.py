#!/usr/bin/env python3
# Copyright 2026 The forkdiff Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates src/forkdiff/text/unicode_tables.inc.

Emits three sorted tables driving canonical normalization (NFC):
  - combining classes for codepoints with ccc != 0
  - canonical decompositions (1 or 2 codepoints; Hangul is algorithmic)
  - primary composition pairs (exclusions already filtered out)

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE, HANGUL_S_COUNT = 0xAC00, 11172


def canonical_decomposition(cp):
    d = unicodedata.decomposition(chr(cp))
    if not d or d.startswith("<"):
        return None
    parts = [int(p, 16) for p in d.split()]
    assert 1 <= len(parts) <= 2
    return parts


def main():
    ccc = []
    decomp = []
    compose = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = unicodedata.combining(chr(cp))
        if c:
            ccc.append((cp, c))
        if HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT:
            continue
        parts = canonical_decomposition(cp)
        if parts:
            decomp.append((cp, parts))
            if len(parts) == 2:
                a, b = parts
                # A pair composes iff NFC maps the decomposition back, which
                # excludes the composition-exclusion characters.
                if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
                    compose.append((a, b, cp))
    compose.sort(key=lambda t: (t[0], t[1]))

    out = sys.stdout
    out.write("// Generated by scripts/gen_unicode_tables.py "
              "(Unicode %s). Do not edit.\n\n" % unicodedata.unidata_version)
    out.write("struct CccEntry { char32_t cp; uint8_t ccc; };\n")
    out.write("struct DecompEntry { char32_t cp; char32_t a; char32_t b; };\n")
    out.write("struct ComposeEntry { char32_t a; char32_t b; char32_t c; };\n\n")

    out.write("static const CccEntry kCccTable[] = {\n")
    for cp, c in ccc:
        out.write("  {0x%X, %d},\n" % (cp, c))
    out.write("};\n\n")

    out.write("static const DecompEntry kDecompTable[] = {\n")
    for cp, parts in decomp:
        a = parts[0]
        b = parts[1] if len(parts) == 2 else 0
        out.write("  {0x%X, 0x%X, 0x%X},\n" % (cp, a, b))
    out.write("};\n\n")

    out.write("static const ComposeEntry kComposeTable[] = {\n")
    for a, b, c in compose:
        out.write("  {0x%X, 0x%X, 0x%X},\n" % (a, b, c))
    out.write("};\n")


if __name__ == "__main__":
    main()
