#!/usr/bin/env python3
"""Run the implication suite over every labelled finite space and write a JSON summary."""

import argparse
import json
import sys

from irrtopo.lab import run_implication_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-points", type=int, default=5)
    ap.add_argument("--budget", type=int, default=3)
    ap.add_argument("--out", help="write the JSON report here instead of stdout")
    args = ap.parse_args()

    def progress(n, count):
        print(f"n={n}: {count} spaces", file=sys.stderr)

    res = run_implication_suite(args.max_points, args.budget, progress=progress)
    report = json.dumps(res.to_json(), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report + "\n")
    else:
        print(report)
    print(f"{res.spaces_checked} spaces, {len(res.violations)} violations, "
          f"{res.seconds:.1f}s", file=sys.stderr)
    return 0 if res.passed else 1


if __name__ == "__main__":
    sys.exit(main())
