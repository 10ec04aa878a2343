"""The irreducibly-derived (SI) topology and its transfinite iteration.

Finite spaces are handled by exhaustive scans.  Catalog spaces
(:mod:`irrtopo.catalog`) answer through their own symbolic oracles; the
functions here only dispatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .core import FiniteSpace, PointSet, interior
from .errors import FuelExhausted, NotClosed, NotOpen
from .irr import tables


def _is_finite(s: Any) -> bool:
    return isinstance(s, FiniteSpace)


def is_si_open(s, u) -> bool:
    """``u`` is open and every irreducible set with supremum in ``u`` meets ``u``."""
    if not _is_finite(s):
        return s.is_si_open(u)
    if u not in s.opens:
        raise NotOpen(f"{s.labels(u)} is not open")
    for e, top in tables(s).irr_plus:
        if u >> top & 1 and not (e & u):
            return False
    return True


def si_derivative(s):
    """Same carrier, keeping only the SI-open sets."""
    if not _is_finite(s):
        return s.si_derivative()
    kept = frozenset(u for u in s.opens if is_si_open(s, u))
    if kept == s.opens:
        return s
    return FiniteSpace(s.names, kept)


def si_closed_check(s, c) -> bool:
    """A closed ``c`` is SI-closed iff it contains the suprema of its Irr+ subsets."""
    if not _is_finite(s):
        return s.is_si_closed_complement(c)
    if not s.is_closed(c):
        raise NotClosed(f"{s.labels(c)} is not closed")
    for e, top in tables(s).irr_plus:
        if e & ~c == 0 and not (c >> top & 1):
            return False
    return True


def s_set(s: FiniteSpace, x: int) -> PointSet:
    """Points y with x in the SI-interior of the principal up-set of y."""
    d = si_derivative(s)
    out = 0
    for y in range(s.n):
        if interior(d, s.up[y]) >> x & 1:
            out |= 1 << y
    return out


def describe(s) -> dict:
    if _is_finite(s):
        return s.to_json()
    return s.describe()


@dataclass
class DerivedSpaceTrace:
    stages: list
    gamma: Optional[int]
    fixpoint_reached: bool

    @property
    def fixpoint(self):
        return self.stages[-1]

    def to_json(self) -> dict:
        return {
            "stages": [describe(st) for st in self.stages],
            "gamma": self.gamma,
            "fixpoint_reached": self.fixpoint_reached,
        }


def _same_topology(a, b) -> bool:
    if _is_finite(a):
        return a == b
    return a.same_topology(b)


def si_iterate(s, fuel: int) -> DerivedSpaceTrace:
    """Apply the SI derivative until the topology stops shrinking.

    ``gamma`` is the first index k with stage k+1 equal to stage k.  Raises
    :class:`FuelExhausted` (carrying the partial trace) after ``fuel``
    applications without reaching a fixpoint.
    """
    if fuel < 1:
        raise ValueError("fuel must be at least 1")
    stages = [s]
    for k in range(fuel):
        nxt = si_derivative(stages[-1])
        stages.append(nxt)
        if _same_topology(nxt, stages[-2]):
            return DerivedSpaceTrace(stages, k, True)
    partial = DerivedSpaceTrace(stages, None, False)
    raise FuelExhausted(f"no fixpoint after {fuel} applications", partial)
