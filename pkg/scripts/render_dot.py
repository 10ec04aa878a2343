#!/usr/bin/env python3
"""Write a DOT file per catalog space and per isomorphism class of small posets."""

import argparse
import os

from irrtopo.catalog import CATALOG, catalog_get
from irrtopo.core import alexandroff
from irrtopo.dot import catalog_dot, finite_dot
from irrtopo.lab import enumerate_posets


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="dot")
    ap.add_argument("--max-points", type=int, default=3)
    ap.add_argument("--fuel", type=int, default=6)
    args = ap.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)

    written = 0
    for name in sorted(CATALOG):
        with open(os.path.join(args.out_dir, f"{name}.dot"), "w") as fh:
            fh.write(catalog_dot(catalog_get(name), args.fuel))
        written += 1
    for n in range(1, args.max_points + 1):
        for k, p in enumerate(enumerate_posets(n, up_to_iso=True)):
            tag = f"poset{n}_{k}"
            with open(os.path.join(args.out_dir, f"{tag}.dot"), "w") as fh:
                fh.write(finite_dot(alexandroff(p), tag))
            written += 1
    print(f"wrote {written} files to {args.out_dir}")


if __name__ == "__main__":
    main()
