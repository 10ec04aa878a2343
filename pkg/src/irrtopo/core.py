"""Finite T0-spaces and finite posets, stored as bitmask set families.

A subset of an ``n``-point carrier is an ``int`` whose bit ``i`` marks point
``i``.  Labels are only used at the edges (construction, JSON, printing).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CarrierTooLarge, NotT0

MAX_POINTS = 16

PointSet = int


def bits(mask: PointSet) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> PointSet:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def subsets(mask: PointSet) -> Iterator[PointSet]:
    """All subsets of ``mask`` including 0, in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def nonempty_subsets(mask: PointSet) -> Iterator[PointSet]:
    it = subsets(mask)
    next(it)
    return it


def _check_labels(names: Sequence[str]) -> tuple[str, ...]:
    names = tuple(str(x) for x in names)
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate point labels in {names}")
    if len(names) > MAX_POINTS:
        raise CarrierTooLarge(f"{len(names)} points exceeds the limit of {MAX_POINTS}")
    return names


@dataclass(frozen=True)
class Poset:
    """A finite partial order; ``le[i][j]`` is true iff point i <= point j."""

    names: tuple[str, ...]
    le: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", _check_labels(self.names))
        n = len(self.names)
        le = tuple(tuple(bool(v) for v in row) for row in self.le)
        object.__setattr__(self, "le", le)
        if len(le) != n or any(len(row) != n for row in le):
            raise ValueError("le must be an n x n matrix")
        for i in range(n):
            if not le[i][i]:
                raise ValueError(f"le is not reflexive at {self.names[i]}")
            for j in range(n):
                if i != j and le[i][j] and le[j][i]:
                    raise ValueError(
                        f"le is not antisymmetric: {self.names[i]}, {self.names[j]}"
                    )
                if le[i][j]:
                    for k in range(n):
                        if le[j][k] and not le[i][k]:
                            raise ValueError("le is not transitive")

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def full(self) -> PointSet:
        return (1 << self.n) - 1

    @cached_property
    def up(self) -> tuple[PointSet, ...]:
        return tuple(
            mask_of(j for j in range(self.n) if self.le[i][j]) for i in range(self.n)
        )

    @cached_property
    def down(self) -> tuple[PointSet, ...]:
        return tuple(
            mask_of(j for j in range(self.n) if self.le[j][i]) for i in range(self.n)
        )

    def index(self, label: str) -> int:
        return self.names.index(str(label))

    def mask(self, labels: Iterable[str]) -> PointSet:
        return mask_of(self.index(x) for x in labels)

    def labels(self, mask: PointSet) -> list[str]:
        return [self.names[i] for i in bits(mask)]

    @classmethod
    def from_pairs(cls, names: Sequence[str], pairs: Iterable[tuple[str, str]]) -> Poset:
        """Reflexive-transitive closure of the given ``(lower, upper)`` pairs."""
        names = _check_labels(names)
        n = len(names)
        pos = {x: i for i, x in enumerate(names)}
        le = [[i == j for j in range(n)] for i in range(n)]
        for lo, hi in pairs:
            le[pos[str(lo)]][pos[str(hi)]] = True
        for k in range(n):
            for i in range(n):
                if le[i][k]:
                    for j in range(n):
                        if le[k][j]:
                            le[i][j] = True
        return cls(names, tuple(map(tuple, le)))

    @classmethod
    def chain(cls, names: Sequence[str]) -> Poset:
        return cls.from_pairs(names, zip(names, names[1:]))

    @classmethod
    def antichain(cls, names: Sequence[str]) -> Poset:
        return cls.from_pairs(names, ())

    def to_json(self) -> dict:
        pairs = [
            [self.names[i], self.names[j]]
            for i in range(self.n)
            for j in range(self.n)
            if i != j and self.le[i][j]
        ]
        return {"points": list(self.names), "le": pairs}

    @classmethod
    def from_json(cls, data: dict) -> Poset:
        return cls.from_pairs(data["points"], [tuple(p) for p in data["le"]])


def _union_closure(generators: Iterable[PointSet]) -> set[PointSet]:
    gens = sorted(set(generators))
    found = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = s | g
                if t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    return found


def _min_nbhds(n: int, opens: Iterable[PointSet]) -> list[PointSet]:
    full = (1 << n) - 1
    up = [full] * n
    for u in opens:
        for i in bits(u):
            up[i] &= u
    return up


@dataclass(frozen=True, eq=True)
class FiniteSpace:
    """A finite T0 topology given by its complete family of open sets."""

    names: tuple[str, ...]
    opens: frozenset[PointSet]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", _check_labels(self.names))
        object.__setattr__(self, "opens", frozenset(self.opens))
        n = len(self.names)
        full = (1 << n) - 1
        if 0 not in self.opens or full not in self.opens:
            raise ValueError("opens must contain the empty set and the carrier")
        if any(u & ~full for u in self.opens):
            raise ValueError("an open set leaves the carrier")
        up = _min_nbhds(n, self.opens)
        # a family closed under unions and intersections is exactly the set
        # of unions of minimal neighbourhoods
        if _union_closure(up) != set(self.opens):
            raise ValueError("opens are not closed under unions and intersections")
        if len(set(up)) != n:
            i, j = next(
                (i, j) for i in range(n) for j in range(i + 1, n) if up[i] == up[j]
            )
            raise NotT0(f"points {self.names[i]!r} and {self.names[j]!r} share all opens")
        object.__setattr__(self, "_up", tuple(up))

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def full(self) -> PointSet:
        return (1 << self.n) - 1

    @property
    def up(self) -> tuple[PointSet, ...]:
        """Minimal open neighbourhood of each point (= its principal up-set)."""
        return self._up  # type: ignore[attr-defined]

    @cached_property
    def down(self) -> tuple[PointSet, ...]:
        return tuple(
            mask_of(j for j in range(self.n) if self.up[j] >> i & 1)
            for i in range(self.n)
        )

    @cached_property
    def closed_sets(self) -> frozenset[PointSet]:
        return frozenset(self.full & ~u for u in self.opens)

    @cached_property
    def sorted_opens(self) -> tuple[PointSet, ...]:
        return tuple(sorted(self.opens, key=lambda u: (u.bit_count(), u)))

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def index(self, label: str) -> int:
        try:
            return self.names.index(str(label))
        except ValueError:
            raise KeyError(f"unknown point {label!r}") from None

    def mask(self, labels: Iterable[str]) -> PointSet:
        return mask_of(self.index(x) for x in labels)

    def labels(self, mask: PointSet) -> list[str]:
        return [self.names[i] for i in bits(mask)]

    def is_open(self, mask: PointSet) -> bool:
        return mask in self.opens

    def is_closed(self, mask: PointSet) -> bool:
        return (self.full & ~mask) in self.opens

    def upper_closure(self, mask: PointSet) -> PointSet:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def lower_closure(self, mask: PointSet) -> PointSet:
        out = 0
        for i in bits(mask):
            out |= self.down[i]
        return out

    def to_json(self) -> dict:
        return {
            "points": list(self.names),
            "opens": [self.labels(u) for u in self.sorted_opens],
        }

    @classmethod
    def from_json(cls, data: dict) -> FiniteSpace:
        return from_opens(data["points"], data["opens"])

    def __repr__(self) -> str:
        opens = ", ".join("{" + ",".join(self.labels(u)) + "}" for u in self.sorted_opens)
        return f"FiniteSpace({list(self.names)}, [{opens}])"


def from_opens(names: Sequence[str], opens: Iterable[Iterable[str]]) -> FiniteSpace:
    """Topology generated by ``opens`` under finite unions and intersections."""
    names = _check_labels(names)
    n = len(names)
    pos = {x: i for i, x in enumerate(names)}
    gens = []
    for u in opens:
        labels = [str(x) for x in u]
        missing = [x for x in labels if x not in pos]
        if missing:
            raise ValueError(f"open set mentions points outside the carrier: {missing}")
        gens.append(mask_of(pos[x] for x in labels))
    full = (1 << n) - 1
    up = _min_nbhds(n, gens + [full])
    topology = _union_closure(up) | {full}
    return FiniteSpace(names, frozenset(topology))


def alexandroff(p: Poset) -> FiniteSpace:
    """All upper sets of ``p``."""
    return FiniteSpace(p.names, frozenset(_union_closure(p.up) | {p.full}))


def upper_topology(p: Poset) -> FiniteSpace:
    """Topology generated by the complements of principal down-sets."""
    gens = [p.labels(p.full & ~p.down[i]) for i in range(p.n)]
    return from_opens(p.names, gens)


def closure(s: FiniteSpace, a: PointSet) -> PointSet:
    return s.full & ~interior(s, s.full & ~a)


def interior(s: FiniteSpace, a: PointSet) -> PointSet:
    return mask_of(i for i in range(s.n) if s.up[i] & ~a == 0)


def specialization(s: FiniteSpace) -> Poset:
    """x <= y iff x lies in the closure of {y}."""
    cl = [closure(s, 1 << j) for j in range(s.n)]
    le = tuple(tuple(bool(cl[j] >> i & 1) for j in range(s.n)) for i in range(s.n))
    return Poset(s.names, le)


def min_open_nbhd(s: FiniteSpace, x: int) -> PointSet:
    return s.up[x]


def load_space(path: str) -> FiniteSpace:
    """Read either JSON format: ``{"points","opens"}`` or ``{"points","le"}``."""
    with open(path) as fh:
        data = json.load(fh)
    if "opens" in data:
        return FiniteSpace.from_json(data)
    if "le" in data:
        return alexandroff(Poset.from_json(data))
    raise ValueError(f"{path}: expected an 'opens' or 'le' key")
