from fractions import Fraction

import pytest

from irrtopo import catalog as cat
from irrtopo.catalog import (
    CATALOG, PRIMARY_NAMES, CofiniteComplement, RationalRightRay, TopSingleton, UpRay,
    catalog_get, catalog_properties, catalog_way_below, validate_catalog,
)
from irrtopo.errors import NotOpen, UnknownSpace


def test_names():
    assert set(PRIMARY_NAMES) <= set(CATALOG)
    assert catalog_get("PosetT") is catalog_get("poset-t")
    with pytest.raises(UnknownSpace):
        catalog_get("klein-bottle")


@pytest.mark.parametrize("name, expected", [
    ("cofinite-nat", {"irr_continuous": True, "sup_sober": True, "oplus": False, "c_space": False}),
    ("poset-t", {"c_space": True, "irr_continuous": False}),
    ("rational-scott", {"irr_continuous": True, "sup_sober": True, "sober": False, "oplus": True}),
    ("omega-plus-one", {"sup_sober": False, "si_infty": False}),
])
def test_property_rows(name, expected):
    flags = catalog_properties(name).flags()
    assert {k: flags[k] for k in expected} == expected


def test_failed_flags_carry_witnesses():
    for name in CATALOG:
        rep = catalog_properties(name)
        for flag, ok in rep.flags().items():
            assert ok or flag in rep.witnesses, (name, flag)


def test_way_below_examples():
    t = catalog_get("poset-t")
    assert not catalog_way_below(t, 1, "a")
    assert all(catalog_way_below(t, "bot", z) for z in t.sample_points(8))
    assert all(not catalog_way_below(t, z, "a") for z in t.sample_points(8) if z != "bot")

    c = catalog_get("cofinite-nat")
    assert catalog_way_below(c, 3, 3) and not catalog_way_below(c, 3, 4)

    r = catalog_get("rational-scott")
    half, one = Fraction(1, 2), Fraction(1)
    assert catalog_way_below(r, half, one)
    assert not catalog_way_below(r, one, one)

    o = catalog_get("omega-plus-one")
    assert catalog_way_below(o, 2, 5)
    assert not catalog_way_below(o, 5, 2)
    assert not catalog_way_below(o, "inf", "inf")


def test_poset_t_dd_a():
    t = catalog_get("poset-t")
    d = t.dd_set("a")
    assert d.finite_members == ("bot",)
    assert d.sup == "bot"


def test_order_examples():
    t = catalog_get("poset-t")
    assert t.leq("bot", "a") and t.leq(3, "top") and t.leq(1, 2)
    assert not t.leq("a", 1) and not t.leq(1, "a")
    c = catalog_get("cofinite-nat")
    assert c.leq(4, 4) and not c.leq(3, 4)


def test_opens():
    c = catalog_get("cofinite-nat")
    assert c.is_open(CofiniteComplement((1, 2)))
    r = catalog_get("rational-scott")
    assert r.is_open(RationalRightRay(Fraction(1, 3)))
    assert r.mem(Fraction(1, 2), RationalRightRay(Fraction(1, 3)))
    assert not r.mem(Fraction(1, 3), RationalRightRay(Fraction(1, 3)))
    s = catalog_get("omega-plus-one-scott")
    with pytest.raises(NotOpen):
        s.require_open(TopSingleton())


def test_parse_format_round_trip():
    for name in CATALOG:
        sp = catalog_get(name)
        for p in sp.sample_points(6):
            assert sp.parse_point(sp.format_point(p)) == p


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_validate_at_fuel_8(name):
    rep = validate_catalog(name, 8)
    assert rep.passed
    assert rep.to_json()["name"]


def test_validate_details():
    t = validate_catalog("poset-t", 8)
    assert "{bot,a}" in t.killers[("1", "a")]
    c = validate_catalog("cofinite-nat", 8)
    assert c.counts["finite_not_irreducible"] > 0
    o = validate_catalog("omega-plus-one", 8)
    assert set(o.si_failures) == {"{inf}"}


def test_derivative_removes_only_top():
    o = catalog_get("omega-plus-one")
    d = o.si_derivative()
    assert d.name == "OmegaPlusOneScott"
    for u in o.sample_opens(8):
        assert d.is_open(u) == (u != TopSingleton())
    assert cat.validate_catalog(d.cli_name, 8).passed
