#!/usr/bin/env python3
"""Property matrix, probe validation and SI iteration for every catalog space."""

import argparse
import sys

from irrtopo.catalog import CATALOG, catalog_get, validate_catalog
from irrtopo.convergence import location_check
from irrtopo.derived import si_iterate
from irrtopo.errors import FuelExhausted
from irrtopo.irr import FLAGS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fuel", type=int, default=8)
    args = ap.parse_args()

    names = sorted(CATALOG)
    width = max(len(f) for f in FLAGS)
    print(" " * width + "  " + "  ".join(f"{n:>20}" for n in names))
    reports = {n: catalog_get(n).properties().flags() for n in names}
    for f in FLAGS:
        cells = ("yes" if reports[n][f] else "no" for n in names)
        print(f"{f:<{width}}  " + "  ".join(f"{c:>20}" for c in cells))
    print()

    failed = 0
    for n in names:
        space = catalog_get(n)
        rep = validate_catalog(n, args.fuel)
        try:
            gamma = si_iterate(space, args.fuel).gamma
        except FuelExhausted:
            gamma = None
        loc = location_check(space, args.fuel)
        failed += not loc.passed
        lost = [e["set"] for e in loc.entries if e["open"] and not e["induced_open"]]
        print(f"{n}: validated ({sum(rep.counts.values())} probes), gamma={gamma}, "
              f"not SI-open: {sorted(rep.si_failures) or '-'}, open but not induced: {lost or '-'}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
