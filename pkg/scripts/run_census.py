#!/usr/bin/env python3
"""Run the divide census and print per-level statistics.

Example:

    python3 scripts/run_census.py --max-v 6
    DIVIDE_FORGE_MAX_V=9 python3 scripts/run_census.py --max-v 9 --json out.json
"""

import argparse
import json
import sys
import time
from collections import Counter

from divide_forge.enumeration import enumerate_divides


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-v", type=int, default=8)
    parser.add_argument("--json", default=None, help="write entry summaries to a file")
    args = parser.parse_args()

    start = time.perf_counter()
    entries = enumerate_divides(args.max_v)
    elapsed = time.perf_counter() - start

    by_v = Counter(e.double_points for e in entries)
    by_genus = Counter(e.ambient_genus for e in entries)
    genus_one = [e for e in entries if e.page_genus == 1]

    print(f"{len(entries)} homeomorphism classes with v <= {args.max_v} ({elapsed:.1f}s)")
    print()
    print("v     classes")
    for v in sorted(by_v):
        print(f"{v:<5} {by_v[v]}")
    print()
    print("ambient genus g   classes")
    for g in sorted(by_genus):
        print(f"{g:<17} {by_genus[g]}")
    print()
    print(f"genus-one pages: {len(genus_one)}")
    for e in genus_one:
        tag = e.family or "-"
        print(f"  g={e.ambient_genus} c={e.circles} v={e.double_points} binding={e.binding}  {tag}")

    if args.json:
        rows = [
            {
                "canonical": e.canonical.hex(),
                "g": e.ambient_genus,
                "c": e.circles,
                "v": e.double_points,
                "k": e.binding,
                "h": e.page_genus,
                "family": e.family,
            }
            for e in entries
        ]
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(rows, handle, indent=2)
        print(f"\nwrote {len(rows)} rows to {args.json}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
