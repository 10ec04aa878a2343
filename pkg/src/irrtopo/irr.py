"""Irreducible sets, suprema, the Irr-way-below relation and property checks.

Everything here works on :class:`~irrtopo.core.FiniteSpace` values.  Orders
always mean the specialization order of the space.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from functools import lru_cache
from typing import Optional, Union

from .core import FiniteSpace, PointSet, Poset, bits, interior, nonempty_subsets
from .errors import EmptySet

FLAGS = (
    "sober",
    "bounded_sober",
    "sup_sober",
    "irr_continuous",
    "si_minus_continuous",
    "si_continuous",
    "irr_plus_continuous",
    "oplus",
    "star",
    "c_space",
    "si_infty",
)

Witness = Union[str, list]


@dataclass
class PropertyReport:
    sober: bool
    bounded_sober: bool
    sup_sober: bool
    irr_continuous: bool
    si_minus_continuous: bool
    si_continuous: bool
    irr_plus_continuous: bool
    oplus: bool
    star: bool
    c_space: bool
    si_infty: bool
    witnesses: dict[str, Witness] = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "witnesses"}

    def to_json(self) -> dict:
        out: dict = self.flags()
        out["witnesses"] = dict(self.witnesses)
        return out

    @classmethod
    def from_json(cls, data: dict) -> PropertyReport:
        return cls(**{k: bool(data[k]) for k in FLAGS}, witnesses=dict(data.get("witnesses", {})))


def _require_nonempty(e: PointSet) -> None:
    if e == 0:
        raise EmptySet("irreducibility is only defined for nonempty sets")


def is_irreducible(s: FiniteSpace, e: PointSet) -> bool:
    """Definitional test: any two opens meeting ``e`` meet it jointly."""
    _require_nonempty(e)
    meeting = [u for u in s.opens if u & e]
    for i, u1 in enumerate(meeting):
        for u2 in meeting[i:]:
            if not (u1 & u2 & e):
                return False
    return True


def is_irreducible_closed_form(s: FiniteSpace, e: PointSet) -> bool:
    """Closed-set definition: ``e`` inside A1 u A2 forces it inside one of them."""
    _require_nonempty(e)
    closed = list(s.closed_sets)
    for a1 in closed:
        if e & ~a1 == 0:
            continue
        for a2 in closed:
            if e & ~(a1 | a2) == 0 and e & ~a2:
                return False
    return True


def greatest(s: FiniteSpace, e: PointSet) -> Optional[int]:
    for i in bits(e):
        if e & ~s.down[i] == 0:
            return i
    return None


def irreducible_has_greatest_fastpath(s: FiniteSpace, e: PointSet) -> bool:
    _require_nonempty(e)
    return greatest(s, e) is not None


def upper_bounds(s: FiniteSpace, a: PointSet) -> PointSet:
    ub = s.full
    for i in bits(a):
        ub &= s.up[i]
    return ub


def sup(s: FiniteSpace, a: PointSet) -> Optional[int]:
    """Least upper bound of ``a``; for ``a`` empty this is the least element."""
    ub = upper_bounds(s, a)
    for u in bits(ub):
        if ub & ~s.up[u] == 0:
            return u
    return None


def is_directed(p: Union[Poset, FiniteSpace], d: PointSet) -> bool:
    """Every pair of ``d`` has an upper bound inside ``d``."""
    _require_nonempty(d)
    members = list(bits(d))
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if not (p.up[x] & p.up[y] & d):
                return False
    return True


class SpaceTables:
    """Memoized per-space derived data used by the checkers."""

    def __init__(self, s: FiniteSpace):
        self.s = s
        self._sup: dict[PointSet, Optional[int]] = {}
        self._directed: dict[PointSet, bool] = {}
        self._irr: dict[PointSet, bool] = {}

    def sup(self, a: PointSet) -> Optional[int]:
        try:
            return self._sup[a]
        except KeyError:
            v = self._sup[a] = sup(self.s, a)
            return v

    def directed(self, d: PointSet) -> bool:
        try:
            return self._directed[d]
        except KeyError:
            v = self._directed[d] = is_directed(self.s, d)
            return v

    def irreducible(self, e: PointSet) -> bool:
        try:
            return self._irr[e]
        except KeyError:
            v = self._irr[e] = irreducible_has_greatest_fastpath(self.s, e)
            return v

    @property
    def irr_plus(self) -> list[tuple[PointSet, int]]:
        try:
            return self._irr_plus
        except AttributeError:
            out = []
            for e in nonempty_subsets(self.s.full):
                if self.irreducible(e):
                    top = self.sup(e)
                    if top is not None:
                        out.append((e, top))
            self._irr_plus = out
            return out

    @property
    def uu(self) -> tuple[PointSet, ...]:
        """``uu[x]`` is the set of y with x way-below y."""
        try:
            return self._uu
        except AttributeError:
            s = self.s
            rows = []
            for x in range(s.n):
                killed = 0
                for e, top in self.irr_plus:
                    if not (e & s.up[x]):
                        killed |= s.down[top]
                rows.append(s.full & ~killed)
            self._uu = tuple(rows)
            return self._uu

    @property
    def dd(self) -> tuple[PointSet, ...]:
        try:
            return self._dd
        except AttributeError:
            s = self.s
            self._dd = tuple(
                sum(1 << y for y in range(s.n) if self.uu[y] >> x & 1) for x in range(s.n)
            )
            return self._dd

    def directed_with_sup(self, within: PointSet, target: int) -> Optional[PointSet]:
        for d in nonempty_subsets(within):
            if self.sup(d) == target and self.directed(d):
                return d
        return None


@lru_cache(maxsize=128)
def tables(s: FiniteSpace) -> SpaceTables:
    return SpaceTables(s)


def irr_plus(s: FiniteSpace, definitional: bool = False) -> list[tuple[PointSet, int]]:
    """Irreducible subsets whose supremum exists, paired with that supremum."""
    if not definitional:
        return list(tables(s).irr_plus)
    out = []
    for e in nonempty_subsets(s.full):
        if is_irreducible(s, e):
            top = sup(s, e)
            if top is not None:
                out.append((e, top))
    return out


def way_below_irr(s: FiniteSpace, x: int, y: int) -> bool:
    return bool(tables(s).uu[x] >> y & 1)


def dd_arrow(s: FiniteSpace, x: int) -> PointSet:
    return tables(s).dd[x]


def uu_arrow(s: FiniteSpace, x: int) -> PointSet:
    return tables(s).uu[x]


def m_set(s: FiniteSpace, x: int) -> PointSet:
    dd = tables(s).dd
    out = 0
    for y in bits(dd[x]):
        out |= dd[y]
    return out


def interpolation_holds(s: FiniteSpace) -> bool:
    t = tables(s)
    for x in range(s.n):
        for z in bits(t.dd[x]):
            if not (t.uu[z] & t.dd[x]):
                return False
    return True


def _sobriety_scan(s: FiniteSpace, t: SpaceTables, bounded: bool) -> Optional[PointSet]:
    for c in sorted(s.closed_sets):
        if c == 0 or not t.irreducible(c):
            continue
        if bounded and upper_bounds(s, c) == 0:
            continue
        if c not in s.down:
            return c
    return None


def check_properties(s: FiniteSpace) -> PropertyReport:
    from .derived import si_derivative

    t = tables(s)
    wit: dict[str, Witness] = {}

    def fail(flag: str, w: Witness) -> bool:
        wit.setdefault(flag, w)
        return False

    def first(cands, flag, render):
        for c in cands:
            return fail(flag, render(c))
        return True

    point = lambda i: s.names[i]  # noqa: E731
    subset = lambda m: s.labels(m)  # noqa: E731

    c = _sobriety_scan(s, t, bounded=False)
    sober = True if c is None else fail("sober", subset(c))
    c = _sobriety_scan(s, t, bounded=True)
    bounded_sober = True if c is None else fail("bounded_sober", subset(c))

    sup_sober = first(
        (f for f, top in t.irr_plus if f in s.closed_sets and s.down[top] != f),
        "sup_sober",
        subset,
    )
    irr_continuous = first(
        (x for x in range(s.n)
         if t.dd[x] == 0 or not t.irreducible(t.dd[x]) or t.sup(t.dd[x]) != x),
        "irr_continuous",
        point,
    )
    si_minus = first(
        (x for x in range(s.n) if t.directed_with_sup(t.dd[x], x) is None),
        "si_minus_continuous",
        point,
    )
    oplus = first((x for x in range(s.n) if t.uu[x] not in s.opens), "oplus", point)
    star = first(
        (f for f, top in t.irr_plus
         if t.directed_with_sup(s.lower_closure(f), top) is None),
        "star",
        subset,
    )
    c_space = first(
        (x for u in s.sorted_opens for x in bits(u)
         if not any(interior(s, s.up[y]) >> x & 1 for y in bits(u))),
        "c_space",
        point,
    )
    derived = si_derivative(s)
    si_infty = first(
        (u for u in s.sorted_opens if u not in derived.opens), "si_infty", subset
    )

    si_cont = si_minus and oplus
    irr_plus_cont = irr_continuous and oplus
    if not si_cont:
        wit.setdefault("si_continuous", wit.get("si_minus_continuous") or wit["oplus"])
    if not irr_plus_cont:
        wit.setdefault("irr_plus_continuous", wit.get("irr_continuous") or wit["oplus"])

    return PropertyReport(
        sober=sober,
        bounded_sober=bounded_sober,
        sup_sober=sup_sober,
        irr_continuous=irr_continuous,
        si_minus_continuous=si_minus,
        si_continuous=si_cont,
        irr_plus_continuous=irr_plus_cont,
        oplus=oplus,
        star=star,
        c_space=c_space,
        si_infty=si_infty,
        witnesses=wit,
    )
