#!/usr/bin/env python3
"""Build the per-rank table of orbit and class counts, with timings.

Unlike ``bncells table`` (which may fall back to counting formulas at
high ranks), this script always computes every entry exactly by running
the cycling maps and the refinement, and it records how long each rank
took.  Output is TSV; use ``--out`` to also write it to a file.

Example:
    python3 scripts/build_orbit_table.py --max-n 6
"""

from __future__ import annotations

import argparse
import sys
import time

from bncells.group import WeightFunction
from bncells.vogan import vogan_classes, xi_orbits


def build_rows(max_n: int) -> list[dict]:
    rows = []
    for n in range(2, max_n + 1):
        start = time.monotonic()
        orbits = xi_orbits(n, WeightFunction(1, n)).num_classes
        dominant = vogan_classes(n, WeightFunction(1, n)).final.num_classes
        boundary = vogan_classes(n, WeightFunction(1, n - 1)).final.num_classes
        rows.append(
            {
                "n": n,
                "boundary": boundary,
                "dominant": dominant,
                "orbits": orbits,
                "seconds": round(time.monotonic() - start, 2),
            }
        )
    return rows


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6, help="largest rank")
    parser.add_argument("--out", type=str, default=None, help="also write TSV here")
    args = parser.parse_args(argv)
    if args.max_n < 2:
        parser.error("--max-n must be at least 2")

    rows = build_rows(args.max_n)
    header = ["n", "boundary", "dominant", "orbits", "seconds"]
    lines = ["\t".join(header)]
    lines += ["\t".join(str(row[key]) for key in header) for row in rows]
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
