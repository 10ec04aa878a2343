import json

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import spaces
from irrtopo.core import Poset, alexandroff, bits, closure, from_opens, nonempty_subsets
from irrtopo.errors import EmptySet
from irrtopo.irr import (
    FLAGS, PropertyReport, check_properties, dd_arrow, interpolation_holds, irr_plus,
    irreducible_has_greatest_fastpath, is_directed, is_irreducible, is_irreducible_closed_form,
    m_set, sup, uu_arrow, way_below_irr,
)


def as_oracle(s):
    le = [[s.leq(i, j) for j in range(s.n)] for i in range(s.n)]
    opens = [frozenset(bits(u)) for u in s.opens]
    return le, opens


def test_irreducible_examples(chain3, vposet):
    assert is_irreducible(chain3, chain3.mask("ac"))
    assert not is_irreducible(vposet, vposet.mask(["a", "b"]))
    assert is_irreducible(vposet, vposet.mask(["bot", "a"]))
    with pytest.raises(EmptySet):
        is_irreducible(chain3, 0)


def test_irr_plus_counts(chain3, vposet):
    assert len(irr_plus(chain3)) == 7
    assert len(irr_plus(vposet)) == 5
    assert len(irr_plus(alexandroff(Poset.chain(["x"])))) == 1


def test_way_below_examples(chain3, vposet):
    a, b, c = (chain3.index(k) for k in "abc")
    assert way_below_irr(chain3, a, c)
    assert way_below_irr(chain3, b, b)
    assert not way_below_irr(chain3, c, a)
    bot, va, vb = (vposet.index(k) for k in ("bot", "a", "b"))
    assert way_below_irr(vposet, bot, va)
    assert not way_below_irr(vposet, va, vb)


def test_arrows(chain3, vposet):
    b = chain3.index("b")
    assert chain3.labels(dd_arrow(chain3, b)) == ["a", "b"]
    assert chain3.labels(uu_arrow(chain3, b)) == ["b", "c"]
    assert chain3.labels(m_set(chain3, b)) == ["a", "b"]
    assert vposet.labels(dd_arrow(vposet, vposet.index("a"))) == ["bot", "a"]
    assert interpolation_holds(chain3) and interpolation_holds(vposet)


def test_directed_and_sup(vposet):
    assert is_directed(vposet, vposet.mask(["bot", "a"]))
    assert not is_directed(vposet, vposet.mask(["a", "b"]))
    assert sup(vposet, vposet.mask(["a", "b"])) is None
    assert vposet.names[sup(vposet, 0)] == "bot"
    with pytest.raises(EmptySet):
        is_directed(vposet, 0)


def test_report_from_opens_chain():
    s = from_opens(["0", "1", "2"], [["2"], ["1", "2"]])
    rep = check_properties(s)
    assert rep.sober and rep.irr_continuous and rep.c_space


def test_discrete_report_has_no_witnesses():
    rep = check_properties(from_opens(["0", "1"], [["0"], ["1"]]))
    assert all(rep.flags().values())
    assert rep.witnesses == {}


@given(spaces(max_n=4))
def test_irreducible_agrees_with_oracle(s):
    le, opens = as_oracle(s)
    for e in nonempty_subsets(s.full):
        expected = oracles.irreducible(opens, frozenset(bits(e)))
        assert is_irreducible(s, e) == expected
        assert is_irreducible_closed_form(s, e) == expected
        assert irreducible_has_greatest_fastpath(s, e) == expected


@given(spaces(max_n=4))
def test_irr_plus_and_way_below_agree_with_oracle(s):
    le, opens = as_oracle(s)
    ours = {(frozenset(bits(e)), top) for e, top in irr_plus(s)}
    assert ours == {(frozenset(e), t) for e, t in oracles.irr_plus(le, opens)}
    assert ours == {(frozenset(bits(e)), t) for e, t in irr_plus(s, definitional=True)}
    for x in range(s.n):
        for y in range(s.n):
            assert way_below_irr(s, x, y) == oracles.way_below(le, opens, x, y)


@given(spaces(max_n=5))
def test_directed_iff_irreducible(s):
    for e in nonempty_subsets(s.full):
        assert is_directed(s, e) == is_irreducible(s, e)


@given(spaces(max_n=5))
def test_irreducible_closure_invariant(s):
    for e in nonempty_subsets(s.full):
        assert is_irreducible(s, e) == is_irreducible(s, closure(s, e))


@given(spaces(max_n=5))
def test_way_below_is_order_on_finite(s):
    for x in range(s.n):
        assert uu_arrow(s, x) == s.up[x]
        assert dd_arrow(s, x) == s.down[x]
        assert m_set(s, x) == s.down[x]


@given(spaces(max_n=5))
def test_sobriety_chain(s):
    rep = check_properties(s)
    if rep.sober:
        assert rep.bounded_sober
    if rep.bounded_sober:
        assert rep.sup_sober
    for flag, ok in rep.flags().items():
        assert ok or flag in rep.witnesses


@given(spaces(max_n=4))
def test_report_json_round_trip(s):
    rep = check_properties(s)
    again = PropertyReport.from_json(json.loads(json.dumps(rep.to_json())))
    assert again == rep
    assert set(rep.flags()) == set(FLAGS)


@given(spaces(max_n=4), st.data())
def test_sup_is_least_upper_bound(s, data):
    le, _ = as_oracle(s)
    a = data.draw(st.integers(1, s.full))
    assert sup(s, a) == oracles.least_upper_bound(le, set(bits(a)))
