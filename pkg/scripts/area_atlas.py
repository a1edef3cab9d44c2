#!/usr/bin/env python3
"""Print an atlas of the double-staircase region at one rank.

For each sign count ``q`` the atlas lists the minimal element and its
reduced word, then every asymptotic cell (with members), and finally the
right-descent fibers with the pair of cells each one fuses.

Example:
    python3 scripts/area_atlas.py --n 3
"""

from __future__ import annotations

import argparse
import sys

from bncells.area import (
    area_decomposition,
    build_words,
    sigma_word,
    upsilon_decomposition,
)
from bncells.descents import XiDescentSet
from bncells.group import length, length_t, right_descents


def window_text(w) -> str:
    return ",".join(str(x) for x in w)


def word_text(word) -> str:
    return " ".join("t" if c == 0 else f"s{c}" for c in word) or "e"


def sort_cell(cell):
    return sorted(cell, key=lambda w: (length(w), w))


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=3, help="rank")
    args = parser.parse_args(argv)
    if args.n < 2:
        parser.error("--n must be at least 2")
    n = args.n

    words = build_words(n)
    cells = area_decomposition(n)
    print(f"rank {n}: {sum(len(c) for c in cells)} region elements, "
          f"{len(cells)} cells, {2 ** (n - 1)} descent fibers")

    for q in range(n + 1):
        sig = words.sigma[q]
        print(f"\nsign count q={q}")
        print(f"  minimal element {window_text(sig.window)}  "
              f"word {word_text(sigma_word(n, q))}")
        for cell in cells:
            members = sort_cell(cell)
            if length_t(members[0]) != q:
                continue
            print(f"  cell ({len(members)}): "
                  + "  ".join(window_text(w) for w in members))

    print("\ndescent fibers (each fuses two cells)")
    for fiber in upsilon_decomposition(n):
        members = sort_cell(fiber)
        label = XiDescentSet(right_descents(members[0])).to_text()
        halves = [
            sort_cell(c)[0] for c in cells if c <= fiber
        ]
        print(f"  rdes {label} ({len(members)}): cells at "
              + " and ".join(window_text(w) for w in sorted(halves)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
