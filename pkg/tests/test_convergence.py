import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import random_finite_net, random_sequence_net, spaces
from irrtopo.catalog import TopSingleton, catalog_get
from irrtopo.convergence import (
    AXIOMS, AffineSelector, CatalogNet, ConstantTail, FiniteNet, MapSelector, MonotoneTail,
    SequenceNet, TailClass, all_topologies, class_containment_check, diagonal_net,
    divergence_subnet, eventually_in, induced_topology, irr_class, irr_converges,
    kelley_all, kelley_check, location_check, net_from_json, proof_family, subnet,
    tail_class_of, topological_class, topological_converges, way_below_convergence_char,
)
from irrtopo.core import Poset, alexandroff, bits, from_opens
from irrtopo.errors import BudgetExceeded, FuelExhausted, NotCofinal, UndecidableTail


@pytest.fixture
def rational():
    return catalog_get("rational-scott")


def one_minus(space):
    return CatalogNet(space, (), MonotoneTail("one-minus-one-over-n", Fraction(1)))


def tail(s, labels):
    return TailClass(s, s.mask(labels))


def test_tail_class_examples(chain3, vposet):
    c = chain3.index("c")
    assert tail_class_of(FiniteNet.chain(chain3, [c, c])).labels() == ["c"]
    alt = SequenceNet(vposet, (), (vposet.index("a"), vposet.index("b")))
    assert tail_class_of(alt).labels() == ["a", "b"]
    net = SequenceNet(chain3, (c, c), (chain3.index("a"),))
    assert tail_class_of(net).labels() == ["a"]
    with pytest.raises(ValueError):
        TailClass(chain3, 0)


def test_topological_examples(chain3, rational):
    assert topological_converges(chain3, tail(chain3, "b"), chain3.index("a"))
    assert not topological_converges(chain3, tail(chain3, "a"), chain3.index("c"))
    assert topological_converges(rational, one_minus(rational), Fraction(1))
    assert not topological_converges(rational, one_minus(rational), Fraction(2))


def test_irr_examples(chain3, vposet, rational):
    assert irr_converges(chain3, tail(chain3, "c"), chain3.index("a"))
    assert not irr_converges(vposet, tail(vposet, ["a", "b"]), vposet.index("a"))
    assert irr_converges(vposet, tail(vposet, ["a", "b"]), vposet.index("bot"))
    assert irr_converges(rational, one_minus(rational), Fraction(1))
    assert irr_converges(rational, one_minus(rational), Fraction(1, 2))


def test_omega_witness_net():
    o = catalog_get("omega-plus-one")
    net = CatalogNet(o, (), MonotoneTail("n"))
    assert irr_converges(o, net, "inf")
    assert not eventually_in(o, net, TopSingleton())
    assert not topological_converges(o, net, "inf")


def test_subnet_selectors(chain3, rational):
    a, b = chain3.index("a"), chain3.index("b")
    parent = SequenceNet(chain3, (b,), (a, b))
    even = subnet(parent, AffineSelector(2, 0))
    assert [even.value(k) for k in range(5)] == [parent.value(2 * k) for k in range(5)]
    with pytest.raises(NotCofinal):
        subnet(parent, AffineSelector(0, 3))

    sub = subnet(one_minus(rational), AffineSelector(2, 1))
    assert sub.value(0) == one_minus(rational).value(1)
    assert irr_converges(rational, sub, Fraction(1))

    fin = FiniteNet.chain(chain3, [a, b, a])
    with pytest.raises(NotCofinal):
        subnet(fin, MapSelector((0b1,), (0,)))
    ok = subnet(fin, MapSelector((0b11, 0b10), (1, 2)))
    assert ok.values == (b, a)


def test_divergence_subnet_replay(vposet):
    a, b, bot = (vposet.index(k) for k in ("a", "b", "bot"))
    parent = SequenceNet(vposet, (), (a, b))
    assert not irr_converges(vposet, parent, a)
    j = divergence_subnet(parent, a)
    assert tail_class_of(j).labels() == ["b"]
    assert not irr_converges(vposet, j, a)
    with pytest.raises(NotCofinal):
        divergence_subnet(SequenceNet(vposet, (bot,), (a,)), a)


def test_diagonal_net(chain3):
    a, b, c = (chain3.index(k) for k in "abc")
    outer = FiniteNet.chain(chain3, [b, c])
    inner = [FiniteNet.chain(chain3, [a, b]), FiniteNet.chain(chain3, [b, c])]
    diag = diagonal_net(outer, inner)
    assert diag.size == 8
    assert tail_class_of(diag).labels() == ["c"]
    assert irr_converges(chain3, diag, c)


def test_kelley_examples(chain3, vposet):
    assert kelley_check(chain3, "Constants").passed
    rep = kelley_check(vposet, "Divergence")
    assert rep.passed and rep.witnesses
    with pytest.raises(BudgetExceeded):
        kelley_check(chain3, "Constants", budget=5)
    with pytest.raises(ValueError):
        kelley_check(chain3, "Closure")


def test_kelley_replays_match_on_four_points():
    s = alexandroff(Poset.from_pairs(list("abcd"), [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]))
    reps = kelley_all(s)
    assert set(reps) == set(AXIOMS)
    for name in ("Divergence", "IteratedLimits"):
        assert reps[name].instances
        assert all(r["match"] for r in reps[name].instances)
    assert all(r.passed for r in reps.values())


def test_proof_family(chain3):
    c = chain3.index("c")
    fam = proof_family(chain3, c, 3)
    assert fam[0] == 1 << c and len(fam) <= 3
    assert all(d.bit_count() <= 3 for d in fam)


def test_induced_examples(chain3):
    assert induced_topology(chain3, irr_class(chain3)) == chain3
    assert induced_topology(chain3, topological_class(chain3)) == chain3
    d = from_opens(["0", "1"], [["0"], ["1"]])
    assert induced_topology(d, irr_class(d)) == d


def test_containment_examples(chain3):
    fewer = {0, chain3.mask("c"), chain3.full}
    assert class_containment_check(chain3, fewer)
    assert class_containment_check(fewer, chain3, n=3)
    assert class_containment_check(chain3, chain3)
    discrete = from_opens(["0", "1"], [["0"], ["1"]])
    sierpinski = from_opens(["0", "1"], [["1"]])
    assert class_containment_check(discrete, sierpinski)
    assert len(all_topologies(3)) == 29
    assert len(all_topologies(2)) == 4


def test_location_examples(chain3, rational):
    rep = location_check(chain3)
    assert rep.passed and all(rep.equalities.values())

    o = location_check(catalog_get("omega-plus-one"))
    top = next(e for e in o.entries if e["set"] == TopSingleton().describe())
    assert top["open"] and not top["induced_open"]
    assert top["witness"]["irr_converges_to"] == "inf"
    assert o.si_in_induced

    r = location_check(rational)
    assert r.passed and r.induced_in_tau is True
    assert all(e["open"] == e["induced_open"] for e in r.entries)
    with pytest.raises(FuelExhausted):
        location_check(chain3, 0)


def test_way_below_char_examples(chain3, rational):
    rep = way_below_convergence_char(chain3, chain3.index("a"), chain3.index("c"))
    assert rep.passed and rep.forward_checked > 0
    rep = way_below_convergence_char(rational, Fraction(1, 2), Fraction(1))
    assert rep.passed and rep.forward_checked > 0
    t = catalog_get("poset-t")
    assert way_below_convergence_char(t, "bot", "a").passed


def test_net_from_json(chain3, rational):
    net = net_from_json(chain3, {"index": "nat", "prefix": ["c", "c"],
                                 "tail": {"kind": "constant", "value": "a"}})
    assert tail_class_of(net).labels() == ["a"]
    fin = net_from_json(chain3, {"index": "finite", "values": ["a", "b"], "le": [[0, 1]]})
    assert tail_class_of(fin).labels() == ["b"]
    mono = net_from_json(rational, {"index": "nat", "tail": {
        "kind": "monotone", "values": "one-minus-one-over-n", "limit": "1"}})
    assert irr_converges(rational, mono, Fraction(1))
    with pytest.raises(UndecidableTail):
        net_from_json(rational, {"tail": {"kind": "monotone", "values": "one-minus-one-over-n",
                                          "limit": "2"}})
    with pytest.raises(UndecidableTail):
        net_from_json(chain3, {"tail": {"kind": "random"}})


def test_constant_catalog_net(rational):
    net = CatalogNet(rational, (Fraction(5),), ConstantTail(Fraction(1, 3)))
    assert irr_converges(rational, net, Fraction(1, 4))
    assert not irr_converges(rational, net, Fraction(1, 2))


@given(spaces(max_n=4), st.randoms(use_true_random=False))
def test_tail_class_soundness(s, rng):
    seq = random_sequence_net(rng, s)
    fin, pairs = random_finite_net(rng, s)
    above = oracles.preorder_above(fin.size, pairs)
    for u in s.opens:
        members = set(bits(u))
        tc_seq = tail_class_of(seq).cofinal_points & ~u == 0
        assert tc_seq == oracles.eventually_in_seq(seq.prefix, seq.cycle, members)
        tc_fin = tail_class_of(fin).cofinal_points & ~u == 0
        assert tc_fin == oracles.eventually_in_finite(above, fin.values, members)


@given(spaces(max_n=4))
def test_convergence_closed_forms(s):
    for c in range(1, s.full + 1):
        for x in range(s.n):
            t = TailClass(s, c)
            assert irr_converges(s, t, x) == (c & ~s.up[x] == 0)
            assert topological_converges(s, t, x) == irr_converges(s, t, x)


@given(spaces(max_n=4))
def test_constants_axiom_below(s):
    for x in range(s.n):
        for y in range(s.n):
            t = TailClass(s, 1 << x)
            expected = s.leq(y, x)
            assert irr_converges(s, t, y) == expected
            assert topological_converges(s, t, y) == expected


def test_random_nets_smoke():
    rng = random.Random(3)
    s = alexandroff(Poset.chain(["a", "b", "c"]))
    for _ in range(20):
        net, _ = random_finite_net(rng, s)
        assert tail_class_of(net).cofinal_points
