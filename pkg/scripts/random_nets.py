#!/usr/bin/env python3
"""Random nets over small spaces: tail-class verdicts against direct simulation.

Also counts how often Irr-convergence and topological convergence agree on
the generated nets, which on finite spaces should be always.
"""

import argparse
import random

from irrtopo.convergence import (
    FiniteNet, SequenceNet, eventually_in_simulated, irr_converges, tail_class_of,
    topological_converges,
)
from irrtopo.core import alexandroff
from irrtopo.lab import enumerate_posets


def random_net(rng: random.Random, s):
    if rng.random() < 0.5:
        prefix = [rng.randrange(s.n) for _ in range(rng.randrange(4))]
        cycle = [rng.randrange(s.n) for _ in range(rng.randrange(1, 4))]
        return SequenceNet(s, tuple(prefix), tuple(cycle))
    k = rng.randrange(1, 6)
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j and rng.random() < 0.3]
    pairs += [(i, k - 1) for i in range(k - 1)]
    return FiniteNet.from_pairs(s, [rng.randrange(s.n) for _ in range(k)], pairs)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nets", type=int, default=5000)
    ap.add_argument("--max-points", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    pool = [alexandroff(p) for n in range(1, args.max_points + 1) for p in enumerate_posets(n)]
    checks = mismatches = disagreements = 0
    for _ in range(args.nets):
        s = rng.choice(pool)
        net = random_net(rng, s)
        cof = tail_class_of(net).cofinal_points
        for u in s.opens:
            checks += 1
            mismatches += (cof & ~u == 0) != eventually_in_simulated(net, u)
        for x in range(s.n):
            disagreements += irr_converges(s, net, x) != topological_converges(s, net, x)
    print(f"{args.nets} nets, {checks} net/open checks, {mismatches} tail-class mismatches, "
          f"{disagreements} convergence disagreements")


if __name__ == "__main__":
    main()
