"""One test per acceptance criterion.

Each test records ``(passed, detail)`` in ``RESULTS``; conftest prints the
table at the end of the session.
"""

import random
import time

import oracles
from conftest import random_finite_net, random_sequence_net
from irrtopo.catalog import OMEGA_SCOTT, TopSingleton, catalog_get, validate_catalog
from irrtopo.convergence import (
    AXIOMS, TailClass, all_topologies, class_containment_check, induced_topology, irr_class,
    irr_converges, kelley_all, location_check, tail_class_of, topological_converges,
)
from irrtopo.core import alexandroff, bits, nonempty_subsets
from irrtopo.derived import si_derivative, si_iterate
from irrtopo.irr import irreducible_has_greatest_fastpath, is_irreducible
from irrtopo.lab import (
    CATALOG_CLAIMS, count_posets, enumerate_posets, enumerate_spaces, run_implication_suite,
)

RESULTS: dict[int, tuple[bool, str]] = {}

POSET_COUNTS = [1, 3, 19, 219, 4231]
SUITE_SECONDS = 300.0
RANDOM_NETS = 1000
SEED = 20240


def record(k: int, ok: bool, detail: str) -> None:
    RESULTS[k] = (ok, detail)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_1_enumeration_and_suite():
    counts = [count_posets(n) for n in range(1, 6)]
    t0 = time.perf_counter()
    res = run_implication_suite(5)
    elapsed = time.perf_counter() - t0
    ok = counts == POSET_COUNTS and not res.violations and elapsed < SUITE_SECONDS
    record(1, ok, f"counts {counts}; {res.spaces_checked} spaces, "
                  f"{len(res.violations)} violations in {elapsed:.1f}s (limit {SUITE_SECONDS:.0f}s)")


def test_criterion_2_irreducibility_fast_path():
    checked = mismatches = 0
    for s in enumerate_spaces(4):
        for e in nonempty_subsets(s.full):
            checked += 1
            mismatches += is_irreducible(s, e) != irreducible_has_greatest_fastpath(s, e)
    record(2, mismatches == 0, f"{checked} subsets, {mismatches} mismatches")


def test_criterion_3_si_fixpoint_finite():
    spaces = bad = 0
    for s in enumerate_spaces(5):
        spaces += 1
        if si_derivative(s) != s or si_iterate(s, 3).gamma != 0:
            bad += 1
    record(3, bad == 0, f"{spaces} spaces, {bad} with a proper derivative or gamma > 0")


def test_criterion_4_catalog_matrix():
    problems = []
    for name, claims in CATALOG_CLAIMS.items():
        flags = catalog_get(name).properties().flags()
        problems += [f"{name}.{k}" for k, v in claims.items() if flags[k] != v]
        if not validate_catalog(name, 8).passed:
            problems.append(f"{name} validation")
    t = catalog_get("poset-t")
    if t.dd_set("a").finite_members != ("bot",):
        problems.append("poset-t dd(a)")
    omega = catalog_get("omega-plus-one")
    trace = si_iterate(omega, 8)
    if trace.gamma != 1 or not trace.stages[1].same_topology(OMEGA_SCOTT):
        problems.append("omega+1 derivative")
    record(4, not problems, f"{len(CATALOG_CLAIMS)} spaces at fuel 8, gamma(omega+1) = "
                            f"{trace.gamma}, problems: {problems or 'none'}")


def test_criterion_5_convergence_coincidence():
    pairs = disagreements = 0
    induced_bad = 0
    for s in enumerate_spaces(4):
        for c in range(1, s.full + 1):
            t = TailClass(s, c)
            for x in range(s.n):
                pairs += 1
                disagreements += irr_converges(s, t, x) != topological_converges(s, t, x)
        induced_bad += induced_topology(s, irr_class(s)) != s
    ok = disagreements == 0 and induced_bad == 0
    record(5, ok, f"{pairs} tail-class/point pairs, {disagreements} disagreements; "
                  f"{induced_bad} spaces with induced topology != tau")


def test_criterion_6_kelley_axioms():
    failures = []
    replayed_on_4 = {"Divergence": 0, "IteratedLimits": 0}
    spaces = 0
    for s in enumerate_spaces(4):
        spaces += 1
        reps = kelley_all(s, budget=3)
        failures += [(repr(s), a) for a, r in reps.items() if not r.passed]
        if s.n == 4:
            for a in replayed_on_4:
                inst = reps[a].instances
                if inst and all(r["match"] for r in inst):
                    replayed_on_4[a] += 1
    ok = not failures and all(replayed_on_4.values())
    record(6, ok, f"{len(AXIOMS)} axioms on {spaces} spaces at budget 3, {len(failures)} failures; "
                  f"4-point spaces with matching replays: {replayed_on_4}")


def test_criterion_7_location():
    bad = spaces = 0
    for s in enumerate_spaces(5):
        spaces += 1
        rep = location_check(s)
        if not (rep.passed and all(rep.equalities.values())):
            bad += 1
    omega = location_check(catalog_get("omega-plus-one"))
    top = next(e for e in omega.entries if e["set"] == TopSingleton().describe())
    witness = top["witness"] or {}
    omega_ok = (top["open"] and not top["induced_open"] and omega.si_in_induced
                and witness.get("irr_converges_to") == "inf")
    record(7, bad == 0 and omega_ok,
           f"{spaces} finite spaces, {bad} failures; omega+1: {{inf}} open, not induced-open, "
           f"witness {witness.get('net')} -> {witness.get('irr_converges_to')}")


def test_criterion_8_tail_class_soundness():
    rng = random.Random(SEED)
    by_size = {n: [alexandroff(p) for p in enumerate_posets(n)] for n in range(1, 5)}
    checks = mismatches = 0
    for k in range(RANDOM_NETS):
        s = rng.choice(by_size[rng.randint(1, 4)])
        if k % 2:
            net = random_sequence_net(rng, s)
            simulate = lambda m: oracles.eventually_in_seq(net.prefix, net.cycle, m)  # noqa: E731
        else:
            net, pairs = random_finite_net(rng, s)
            above = oracles.preorder_above(net.size, pairs)
            simulate = lambda m: oracles.eventually_in_finite(above, net.values, m)  # noqa: E731
        cof = tail_class_of(net).cofinal_points
        for u in s.opens:
            checks += 1
            mismatches += (cof & ~u == 0) != simulate(set(bits(u)))
    record(8, mismatches == 0, f"{RANDOM_NETS} nets (seed {SEED}), {checks} net/open checks, "
                               f"{mismatches} mismatches")


def test_criterion_9_class_containment():
    tops = all_topologies(3)
    failures = sum(not class_containment_check(a, b, n=3) for a in tops for b in tops)
    record(9, len(tops) == 29 and failures == 0,
           f"{len(tops)} topologies, {len(tops) ** 2} ordered pairs, {failures} failures")

