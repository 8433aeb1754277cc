#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from Python's unicodedata.

The tokenizer needs three lookups that must behave identically on every
platform: is-letter (categories Lu Ll Lt Lm Lo), is-decimal-digit (Nd),
and a single-codepoint lowercase mapping. Codepoints whose lowercase
form expands to more than one codepoint are left unchanged.

Usage: python3 tools/gen_unicode_tables.py > src/unicode_tables.cpp
"""

import sys
import unicodedata

LETTER_CATS = {"Lu", "Ll", "Lt", "Lm", "Lo"}


def ranges(predicate):
    out = []
    start = None
    prev = None
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = predicate(cp)
        if ok:
            if start is None:
                start = cp
            prev = cp
        elif start is not None:
            out.append((start, prev))
            start = None
    if start is not None:
        out.append((start, prev))
    return out


def main():
    letter = ranges(lambda cp: unicodedata.category(chr(cp)) in LETTER_CATS)
    digit = ranges(lambda cp: unicodedata.category(chr(cp)) == "Nd")

    lower_pairs = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            lower_pairs.append((cp, ord(low)))

    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py -- do not edit by hand.\n")
    w('#include "ordlex/unicode_tables.hpp"\n\n')
    w("namespace ordlex::detail {\n\n")

    def emit_ranges(name, rs):
        w(f"const CodepointRange {name}[] = {{\n")
        for i in range(0, len(rs), 4):
            row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in rs[i:i + 4])
            w(f"    {row},\n")
        w("};\n")
        w(f"const std::size_t {name}_size = {len(rs)};\n\n")

    emit_ranges("kLetterRanges", letter)
    emit_ranges("kDigitRanges", digit)

    w("const LowerPair kLowerPairs[] = {\n")
    for i in range(0, len(lower_pairs), 4):
        row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in lower_pairs[i:i + 4])
        w(f"    {row},\n")
    w("};\n")
    w(f"const std::size_t kLowerPairs_size = {len(lower_pairs)};\n\n")
    w("}  // namespace ordlex::detail\n")


if __name__ == "__main__":
    main()
