import os
import sys

import pytest
from hypothesis import settings, strategies as st

from irrtopo.convergence import FiniteNet, SequenceNet
from irrtopo.core import Poset, alexandroff

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def chain3():
    return alexandroff(Poset.chain(["a", "b", "c"]))


@pytest.fixture
def vposet():
    return alexandroff(Poset.from_pairs(["bot", "a", "b"], [("bot", "a"), ("bot", "b")]))


@st.composite
def posets(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pairs = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                         .filter(lambda p: p[0] < p[1]), max_size=n * n))
    perm = draw(st.permutations(range(n)))
    names = [f"p{perm[i]}" for i in range(n)]
    return Poset.from_pairs(names, [(names[i], names[j]) for i, j in pairs])


@st.composite
def spaces(draw, min_n=1, max_n=5):
    return alexandroff(draw(posets(min_n, max_n)))


def random_sequence_net(rng, s):
    prefix = [rng.randrange(s.n) for _ in range(rng.randrange(4))]
    cycle = [rng.randrange(s.n) for _ in range(rng.randrange(1, 4))]
    return SequenceNet(s, tuple(prefix), tuple(cycle))


def random_finite_net(rng, s):
    # the last index sits above every other one, so the preorder is directed
    k = rng.randrange(1, 6)
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j and rng.random() < 0.3]
    pairs += [(i, k - 1) for i in range(k - 1)]
    if rng.random() < 0.5 and k > 1:
        pairs.append((k - 1, rng.randrange(k - 1)))
    values = [rng.randrange(s.n) for _ in range(k)]
    return FiniteNet.from_pairs(s, values, pairs), pairs


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
