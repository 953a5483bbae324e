#!/usr/bin/env python3
"""Tabulate the genus-one open books of unit (co)tangent bundles.

For each ambient genus the three homeomorphism classes of admissible
divides with a genus-one page, with their binding counts, boundary
profiles, and Heegaard data.

    python3 scripts/genus_one_tables.py --genus 1 5
"""

import argparse
import sys

from divide_forge.census import GluingKind, enumerate_genus_one, ribbon_boundary_profile
from divide_forge.divide import Divide
from divide_forge.enumeration import enumerate_divides
from divide_forge.invariants import binding_number_bounds
from divide_forge.surface_map import decode_canonical_form

GLUINGS = {
    "birkhoff-fried": GluingKind.EVEN_SELF,
    "brunella": GluingKind.ODD_A,
    "minimal": GluingKind.EVEN_CROSS,
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--genus", nargs=2, type=int, default=(1, 4), metavar=("LO", "HI"))
    parser.add_argument(
        "--verify-census",
        type=int,
        default=None,
        metavar="MAX_V",
        help="also cross-check against the brute-force census up to MAX_V",
    )
    args = parser.parse_args()
    lo, hi = args.genus

    for g in range(lo, hi + 1):
        print(f"ambient genus {g}")
        if g >= 2:
            low, high = binding_number_bounds(g)
            print(f"  binding number range [{low}, {high}]")
        for entry in enumerate_genus_one(g):
            k = entry.circles
            profile = ribbon_boundary_profile(k, GLUINGS[entry.family])
            print(
                f"  {entry.family:<16} circles {k:>2}  binding {entry.binding:>2}  "
                f"boundary profile {profile}"
            )
        print()

    if args.verify_census is not None:
        entries = enumerate_divides(args.verify_census)
        for g in range(lo, hi + 1):
            chains = {e.canonical for e in enumerate_genus_one(g)}
            found = {
                e.canonical
                for e in entries
                if e.page_genus == 1 and e.ambient_genus == g
            }
            missing = chains - found
            extra = found - chains
            reachable = {
                c
                for c in chains
                if Divide(decode_canonical_form(c[2:])).v <= args.verify_census
            }
            status = "ok" if found == (chains & reachable) and not extra else "MISMATCH"
            print(
                f"census v<={args.verify_census} genus {g}: "
                f"{len(found)} found, {len(missing)} beyond cap, {len(extra)} extra -> {status}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
