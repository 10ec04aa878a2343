"""Brute-force reference implementations used only by the tests.

Everything here works on plain Python sets and an explicit ``le`` matrix and
imports nothing from the package, so every answer has a second route.
"""

from itertools import combinations, product


def all_subsets(n):
    pts = range(n)
    for r in range(n + 1):
        for c in combinations(pts, r):
            yield frozenset(c)


def posets_bruteforce(n):
    """Every reflexive, antisymmetric, transitive relation on range(n)."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in product((False, True), repeat=len(off)):
        le = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(off, bits):
            le[i][j] = b
        if any(le[i][j] and le[j][i] for i, j in off):
            continue
        if any(le[i][j] and le[j][k] and not le[i][k]
               for i in range(n) for j in range(n) for k in range(n)):
            continue
        yield le


def up(le, x):
    return frozenset(j for j in range(len(le)) if le[x][j])


def upper_sets(le):
    n = len(le)
    return [s for s in all_subsets(n) if all(up(le, x) <= s for x in s)]


def topology_closure(n, gens):
    fam = {frozenset(), frozenset(range(n))} | {frozenset(g) for g in gens}
    changed = True
    while changed:
        changed = False
        for a in list(fam):
            for b in list(fam):
                for c in (a | b, a & b):
                    if c not in fam:
                        fam.add(c)
                        changed = True
    return fam


def irreducible(opens, e):
    meeting = [u for u in opens if u & e]
    return all(u1 & u2 & e for u1 in meeting for u2 in meeting)


def least_upper_bound(le, a):
    n = len(le)
    ubs = [u for u in range(n) if all(le[x][u] for x in a)]
    for u in ubs:
        if all(le[u][v] for v in ubs):
            return u
    return None


def irr_plus(le, opens):
    out = []
    for e in all_subsets(len(le)):
        if e and irreducible(opens, e):
            s = least_upper_bound(le, e)
            if s is not None:
                out.append((e, s))
    return out


def way_below(le, opens, x, y):
    upx = up(le, x)
    return all(e & upx for e, s in irr_plus(le, opens) if le[y][s])


def si_open(le, opens, u):
    return all(e & u for e, s in irr_plus(le, opens) if s in u)


def specialization_from_opens(n, opens):
    """x <= y iff every open containing x contains y."""
    return [[all(y in u for u in opens if x in u) for y in range(n)] for x in range(n)]


def eventually_in_seq(prefix, cycle, u):
    seq = list(prefix) + list(cycle) * 3
    start_max = len(prefix) + len(cycle)
    return any(all(v in u for v in seq[s:]) for s in range(start_max + 1))


def eventually_in_finite(above, values, u):
    """``above[i]`` lists the indices j with i <= j."""
    return any(all(values[j] in u for j in above[i]) for i in range(len(values)))


def preorder_above(k, pairs):
    above = [{i} for i in range(k)]
    for lo, hi in pairs:
        above[lo].add(hi)
    for m in range(k):
        for i in range(k):
            if m in above[i]:
                above[i] |= above[m]
    return above
