"""Symbolic oracles for four infinite example spaces.

Each space answers order, open-membership, Irr-way-below and SI-openness
questions from closed forms.  The closed forms are data; ``validate_catalog``
re-derives them by brute force over a finite truncation plus a registered
list of infinite witness classes and reports any disagreement.

Completeness arguments for the witness classes (they cover every member of
Irr+ up to the behaviour that matters for the checks):

* cofinite N: the specialization order is discrete, so only singletons have
  suprema.  Infinite sets are irreducible but have no supremum.
* omega+1: every nonempty subset is a chain.  It has a maximum or is an
  infinite subset of omega with supremum infinity.
* poset T (Alexandroff): irreducible means directed.  A directed set has a
  maximum or is an infinite chain subset, possibly with bottom, with
  supremum top.  In the Scott variant, the chain tail may also carry ``a``.
* rationals: every nonempty subset is irreducible (the opens form a chain).
  A set with supremum s either attains it or approaches s from below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Iterable, Optional

from .errors import NotClosed, NotOpen, OracleMismatch, UndecidableTail, UnknownSpace
from .irr import PropertyReport

Point = Any


# -- symbolic sets ----------------------------------------------------------


@dataclass(frozen=True)
class Empty:
    def describe(self) -> str:
        return "{}"


@dataclass(frozen=True)
class Full:
    def describe(self) -> str:
        return "X"


@dataclass(frozen=True)
class CofiniteComplement:
    excluded: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "excluded", tuple(sorted(set(self.excluded))))

    def describe(self) -> str:
        return "N \\ {" + ",".join(map(str, self.excluded)) + "}"


@dataclass(frozen=True)
class FiniteSet:
    points: tuple

    def describe(self) -> str:
        return "{" + ",".join(map(str, self.points)) + "}"


@dataclass(frozen=True)
class UpRay:
    """``[start, inf]`` inside omega+1."""

    start: int

    def describe(self) -> str:
        return f"[{self.start},inf]"


@dataclass(frozen=True)
class TopSingleton:
    def describe(self) -> str:
        return "{inf}"


@dataclass(frozen=True)
class UpSetOfT:
    """``{top}``, plus ``a`` when ``has_a``, plus ``[tail_start, ...)`` of the chain."""

    has_a: bool
    tail_start: Optional[int]

    def describe(self) -> str:
        parts = ["top"] + (["a"] if self.has_a else [])
        if self.tail_start is not None:
            parts.append(f"{self.tail_start},{self.tail_start + 1},...")
        return "{" + ",".join(parts) + "}"


@dataclass(frozen=True)
class RationalRightRay:
    """Open ray ``(q, inf)`` of rationals."""

    q: Fraction

    def describe(self) -> str:
        return f"({self.q},inf)"


@dataclass(frozen=True)
class ClosedRay:
    """``[q, inf)`` of rationals; an upper set that is not Scott open."""

    q: Fraction

    def describe(self) -> str:
        return f"[{self.q},inf)"


@dataclass(frozen=True)
class Up:
    """Principal upper set of a point, interpreted by the owning space."""

    point: Any

    def describe(self) -> str:
        return f"up({self.point})"


SymbolicSet = Any


@dataclass(frozen=True)
class IrrClass:
    """A family of Irr+ members sharing one supremum.

    ``avoids(target)`` answers: does some member miss the upper set ``target``?
    """

    label: str
    sup: Point
    avoids: Callable[[SymbolicSet], bool] = field(compare=False)
    directed_sup: bool = True


@dataclass(frozen=True)
class Described:
    """A described subset with hand-derived irreducibility and supremum."""

    label: str
    contains: Callable[[Point], bool] = field(compare=False)
    irreducible: bool
    sup: Optional[Point]
    directed_sup: Optional[Point] = None
    finite_members: Optional[tuple] = None


@dataclass(frozen=True)
class ClosedDescription:
    label: str
    complement: SymbolicSet
    contains: Callable[[Point], bool] = field(compare=False)
    bounded: bool
    sup: Optional[Point]
    point_closure_of: Optional[Point]
    finite_members: Optional[tuple] = None


# -- base class -------------------------------------------------------------


class CatalogSpace:
    """Shared machinery; subclasses provide the closed forms."""

    name: str = ""
    cli_name: str = ""
    open_families: tuple[str, ...] = ()
    generators: tuple[str, ...] = ()

    def __repr__(self) -> str:
        return f"<CatalogSpace {self.name}>"

    # points
    def parse_point(self, text: str) -> Point:
        raise NotImplementedError

    def format_point(self, x: Point) -> str:
        return str(x)

    def leq(self, x: Point, y: Point) -> bool:
        raise NotImplementedError

    def mem(self, x: Point, s: SymbolicSet) -> bool:
        if isinstance(s, Empty):
            return False
        if isinstance(s, Full):
            return True
        if isinstance(s, Up):
            return self.leq(s.point, x)
        if isinstance(s, FiniteSet):
            return x in s.points
        return self._mem(x, s)

    def _mem(self, x: Point, s: SymbolicSet) -> bool:
        raise TypeError(f"{self.name} cannot interpret {s!r}")

    def is_open(self, s: SymbolicSet) -> bool:
        raise NotImplementedError

    def require_open(self, s: SymbolicSet) -> None:
        if not self.is_open(s):
            raise NotOpen(f"{s.describe()} is not open in {self.name}")

    # frozen oracles
    def way_below(self, x: Point, y: Point) -> bool:
        raise NotImplementedError

    def _si_open(self, u: SymbolicSet) -> bool:
        raise NotImplementedError

    def is_si_open(self, u: SymbolicSet) -> bool:
        self.require_open(u)
        return self._si_open(u)

    def is_si_closed_complement(self, u: SymbolicSet) -> bool:
        """SI-closedness of the closed set ``X \\ u``.

        Criterion: every Irr+ member inside the closed set has its supremum
        there.  A member lies inside ``X \\ u`` iff it avoids ``u``.
        """
        if not self.is_open(u):
            raise NotClosed(f"complement of {u.describe()} is not closed")
        verdict = not any(
            self.mem(cls.sup, u) and cls.avoids(u) for cls in self.irr_classes(8)
        )
        if verdict != self._si_open(u):
            raise OracleMismatch(f"{self.name}: SI-closed criterion disagrees on {u.describe()}")
        return verdict

    def properties(self) -> PropertyReport:
        raise NotImplementedError

    def derived_space(self) -> CatalogSpace:
        return self

    def si_derivative(self, fuel: int = 8) -> CatalogSpace:
        derived = self.derived_space()
        for u in self.sample_opens(fuel):
            if derived.is_open(u) != self._si_open(u):
                raise OracleMismatch(
                    f"{self.name}: derived space disagrees on {u.describe()}"
                )
        for u in derived.sample_opens(fuel):
            if not self.is_open(u):
                raise OracleMismatch(f"{derived.name}: {u.describe()} is not a base open")
        return derived

    def same_topology(self, other: Any) -> bool:
        return isinstance(other, CatalogSpace) and other.name == self.name

    def describe(self) -> dict:
        return {"name": self.name, "opens": list(self.open_families)}

    # probing hooks
    def sample_points(self, fuel: int) -> list:
        raise NotImplementedError

    def sample_opens(self, fuel: int) -> list:
        raise NotImplementedError

    def probe_opens(self, e: tuple, fuel: int) -> list:
        return self.sample_opens(fuel)

    def finite_irreducible(self, e: tuple) -> bool:
        raise NotImplementedError

    def irr_classes(self, fuel: int) -> list[IrrClass]:
        return []

    def uu_set(self, x: Point) -> SymbolicSet:
        raise NotImplementedError

    def dd_set(self, x: Point) -> Described:
        raise NotImplementedError

    def irreducible_closed(self, fuel: int) -> list[ClosedDescription]:
        raise NotImplementedError

    def interior_up(self, y: Point) -> SymbolicSet:
        raise NotImplementedError

    def witness_points(self, u: SymbolicSet, x: Point) -> list:
        return []

    def location_candidates(self, fuel: int) -> list:
        return []

    def interpolant(self, z: Point, x: Point, pool: list) -> Optional[Point]:
        """Some y with z way-below y way-below x, searched in ``pool`` and the ends."""
        for y in list(pool) + [z, x]:
            if self.way_below(z, y) and self.way_below(y, x):
                return y
        return None

    # nets with a named monotone tail
    def gen_value(self, gen: str, k: int) -> Point:
        raise UndecidableTail(f"{self.name} has no generator {gen!r}")

    def gen_sup(self, gen: str) -> Optional[Point]:
        raise UndecidableTail(f"{self.name} has no generator {gen!r}")

    def gen_eventually_in(self, gen: str, s: SymbolicSet) -> bool:
        raise UndecidableTail(f"{self.name} has no generator {gen!r}")

    def gen_eventual_lb(self, gen: str, e: Point) -> bool:
        raise UndecidableTail(f"{self.name} has no generator {gen!r}")

    def gen_top_converges(self, gen: str, x: Point) -> bool:
        raise UndecidableTail(f"{self.name} has no generator {gen!r}")

    def gen_lower_bounds(self, gen: str) -> Optional[Described]:
        """Eventual lower bounds of the generator, or None when there are none."""
        raise UndecidableTail(f"{self.name} has no generator {gen!r}")

    def meet(self, values: Iterable[Point]) -> Optional[Point]:
        """``g`` with down(g) equal to the intersection of the down-sets, or None if empty."""
        raise NotImplementedError

    def dd_within(self, y: Point, glb: Any = None, below: Any = None) -> Optional[bool]:
        """Is the set of points way-below ``y`` inside a down-set?

        The down-set is ``down(glb)`` or, with ``below``, the points strictly
        below ``below``.  ``None`` when the space has no closed form.
        """
        return None

    def lub_in(self, e: Iterable[Point], pool: list) -> Optional[Point]:
        e = list(e)
        ubs = [u for u in pool if all(self.leq(x, u) for x in e)]
        for u in ubs:
            if all(self.leq(u, v) for v in ubs):
                return u
        return None


# -- cofinite N -------------------------------------------------------------


class CofiniteNat(CatalogSpace):
    name = "CofiniteNat"
    cli_name = "cofinite-nat"
    open_families = ("{}", "N \\ F for finite F")
    generators = ("n",)

    def parse_point(self, text):
        v = int(text)
        if v < 0:
            raise ValueError("points of N are nonnegative integers")
        return v

    def leq(self, x, y):
        return x == y

    def _mem(self, x, s):
        if isinstance(s, CofiniteComplement):
            return x not in s.excluded
        return super()._mem(x, s)

    def is_open(self, s):
        return isinstance(s, (Empty, Full, CofiniteComplement))

    def way_below(self, x, y):
        return x == y

    def _si_open(self, u):
        return True

    def properties(self):
        return PropertyReport(
            sober=False, bounded_sober=True, sup_sober=True, irr_continuous=True,
            si_minus_continuous=True, si_continuous=False, irr_plus_continuous=False,
            oplus=False, star=True, c_space=False, si_infty=True,
            witnesses={
                "sober": "N is irreducible and closed but not a point closure",
                "oplus": "0: the set of points 0 is way-below is {0}, finite hence not open",
                "si_continuous": "0: fails the oplus property",
                "irr_plus_continuous": "0: fails the oplus property",
                "c_space": "0: every int(up y) is empty",
            },
        )

    def sample_points(self, fuel):
        return list(range(fuel))

    def sample_opens(self, fuel):
        out = [Empty(), Full()]
        out += [CofiniteComplement((k,)) for k in range(fuel)]
        out += [CofiniteComplement(tuple(range(k + 1))) for k in range(1, fuel)]
        return out

    def probe_opens(self, e, fuel):
        out = [Empty(), Full()]
        for r in range(1, len(e) + 1):
            out += [CofiniteComplement(c) for c in combinations(e, r)]
        return out

    def finite_irreducible(self, e):
        return len(e) == 1

    def uu_set(self, x):
        return FiniteSet((x,))

    def dd_set(self, x):
        return Described(f"{{{x}}}", lambda z: z == x, True, x, x, (x,))

    def irreducible_closed(self, fuel):
        out = [
            ClosedDescription(f"{{{x}}}", CofiniteComplement((x,)),
                              (lambda z, x=x: z == x), True, x, x, (x,))
            for x in range(fuel)
        ]
        out.append(ClosedDescription("N", Empty(), lambda z: True, False, None, None))
        return out

    def interior_up(self, y):
        return Empty()

    def location_candidates(self, fuel):
        return [FiniteSet((0,))]

    def gen_value(self, gen, k):
        self._gen(gen)
        return k

    def _gen(self, gen):
        if gen != "n":
            raise UndecidableTail(f"{self.name} has no generator {gen!r}")

    def gen_sup(self, gen):
        self._gen(gen)
        return None

    def gen_eventually_in(self, gen, s):
        self._gen(gen)
        return isinstance(s, (Full, CofiniteComplement))

    def gen_eventual_lb(self, gen, e):
        self._gen(gen)
        return False

    def gen_top_converges(self, gen, x):
        self._gen(gen)
        return True

    def gen_lower_bounds(self, gen):
        self._gen(gen)
        return None

    def meet(self, values):
        vals = set(values)
        return next(iter(vals)) if len(vals) == 1 else None

    def dd_within(self, y, glb=None, below=None):
        return below is None and glb == y


# -- omega + 1 --------------------------------------------------------------

INF = "inf"


class OmegaPlusOne(CatalogSpace):
    """The chain 0 < 1 < ... < inf with the Alexandroff or the Scott topology."""

    generators = ("n",)

    def __init__(self, scott: bool = False):
        self.scott = scott
        if scott:
            self.name = "OmegaPlusOneScott"
            self.cli_name = "omega-plus-one-scott"
            self.open_families = ("{}", "[n,inf] for n in omega")
        else:
            self.name = "OmegaPlusOneAlex"
            self.cli_name = "omega-plus-one"
            self.open_families = ("{}", "[n,inf] for n in omega", "{inf}")

    def parse_point(self, text):
        if str(text).lower() in ("inf", "infinity", "∞", "oo"):
            return INF
        v = int(text)
        if v < 0:
            raise ValueError("points of omega are nonnegative integers")
        return v

    def leq(self, x, y):
        return y == INF or (x != INF and x <= y)

    def _mem(self, x, s):
        if isinstance(s, UpRay):
            return x == INF or x >= s.start
        if isinstance(s, TopSingleton):
            return x == INF
        return super()._mem(x, s)

    def is_open(self, s):
        if isinstance(s, (Empty, Full)):
            return True
        if isinstance(s, UpRay):
            return s.start >= 1
        return isinstance(s, TopSingleton) and not self.scott

    def way_below(self, x, y):
        return x != INF and self.leq(x, y)

    def _si_open(self, u):
        return not isinstance(u, TopSingleton)

    def derived_space(self):
        return OMEGA_SCOTT

    def properties(self):
        if self.scott:
            return PropertyReport(
                sober=True, bounded_sober=True, sup_sober=True, irr_continuous=True,
                si_minus_continuous=True, si_continuous=True, irr_plus_continuous=True,
                oplus=True, star=True, c_space=True, si_infty=True,
            )
        return PropertyReport(
            sober=False, bounded_sober=False, sup_sober=False, irr_continuous=True,
            si_minus_continuous=True, si_continuous=True, irr_plus_continuous=True,
            oplus=True, star=True, c_space=True, si_infty=False,
            witnesses={
                "sober": "omega is irreducible and closed but not a point closure",
                "bounded_sober": "omega is bounded by inf but not a point closure",
                "sup_sober": "omega has supremum inf but cl{inf} is all of omega+1",
                "si_infty": "{inf}: omega has supremum inf but misses it",
            },
        )

    def sample_points(self, fuel):
        return list(range(fuel)) + [INF]

    def sample_opens(self, fuel):
        out = [Empty(), Full()] + [UpRay(n) for n in range(1, fuel + 1)]
        if not self.scott:
            out.append(TopSingleton())
        return out

    def finite_irreducible(self, e):
        return True

    def irr_classes(self, fuel):
        return [IrrClass("infinite subsets of omega", INF, self._omega_avoids)]

    def _omega_avoids(self, t):
        if isinstance(t, (Full, UpRay)):
            return False
        if isinstance(t, Up):
            return t.point == INF
        return True

    def uu_set(self, x):
        if x == INF:
            return Empty()
        return Full() if x == 0 else UpRay(x)

    def dd_set(self, x):
        if x == INF:
            return Described("omega", lambda z: z != INF, True, INF, INF)
        members = tuple(range(x + 1))
        return Described(f"[0,{x}]", lambda z: z != INF and z <= x, True, x, x, members)

    def irreducible_closed(self, fuel):
        out = [
            ClosedDescription(f"[0,{n}]", UpRay(n + 1),
                              (lambda z, n=n: z != INF and z <= n), True, n, n,
                              tuple(range(n + 1)))
            for n in range(fuel)
        ]
        if not self.scott:
            out.append(ClosedDescription("omega", TopSingleton(), lambda z: z != INF,
                                         True, INF, None))
        out.append(ClosedDescription("omega+1", Empty(), lambda z: True, True, INF, INF))
        return out

    def interior_up(self, y):
        if y == INF:
            return Empty() if self.scott else TopSingleton()
        return Full() if y == 0 else UpRay(y)

    def witness_points(self, u, x):
        return [u.start] if isinstance(u, UpRay) else []

    def location_candidates(self, fuel):
        return [TopSingleton()] if self.scott else []

    def _gen(self, gen):
        if gen != "n":
            raise UndecidableTail(f"{self.name} has no generator {gen!r}")

    def gen_value(self, gen, k):
        self._gen(gen)
        return k

    def gen_sup(self, gen):
        self._gen(gen)
        return INF

    def gen_eventually_in(self, gen, s):
        self._gen(gen)
        if isinstance(s, (Full, UpRay)):
            return True
        if isinstance(s, Up):
            return s.point != INF
        return False

    def gen_eventual_lb(self, gen, e):
        self._gen(gen)
        return e != INF

    def gen_top_converges(self, gen, x):
        self._gen(gen)
        if self.scott:
            return True
        return x != INF

    def gen_lower_bounds(self, gen):
        self._gen(gen)
        return Described("omega", lambda z: z != INF, True, INF, INF)

    def meet(self, values):
        vals = list(values)
        finite = [v for v in vals if v != INF]
        return min(finite) if finite else INF

    def dd_within(self, y, glb=None, below=None):
        if below is not None:
            return y != INF or below == INF
        if y == INF:
            return glb == INF
        return self.leq(y, glb)


# -- poset T ----------------------------------------------------------------

BOT, TOP, A = "bot", "top", "a"


class PosetT(CatalogSpace):
    """T = {top, bot, a, 1, 2, ...}: bot below everything, top above, a off-chain."""

    generators = ("n",)

    def __init__(self, scott: bool = False):
        self.scott = scott
        if scott:
            self.name = "PosetTScott"
            self.cli_name = "poset-t-scott"
            self.open_families = ("{}", "T", "{top} u [k,...) with or without a")
        else:
            self.name = "PosetT"
            self.cli_name = "poset-t"
            self.open_families = ("{}", "T", "every upper set not containing bot")

    def parse_point(self, text):
        t = str(text)
        alias = {"⊥": BOT, "⊤": TOP, "bottom": BOT}
        t = alias.get(t, t)
        if t in (BOT, TOP, A):
            return t
        v = int(t)
        if v < 1:
            raise ValueError("chain points of T start at 1")
        return v

    def leq(self, x, y):
        if x == y or x == BOT or y == TOP:
            return True
        return isinstance(x, int) and isinstance(y, int) and x <= y

    def _mem(self, x, s):
        if isinstance(s, UpSetOfT):
            if x == TOP:
                return True
            if x == A:
                return s.has_a
            return isinstance(x, int) and s.tail_start is not None and x >= s.tail_start
        return super()._mem(x, s)

    def is_open(self, s):
        if isinstance(s, (Empty, Full)):
            return True
        if isinstance(s, UpSetOfT):
            return not self.scott or s.tail_start is not None
        return False

    def way_below(self, x, y):
        if x == BOT:
            return True
        return isinstance(x, int) and (y == TOP or (isinstance(y, int) and x <= y))

    def _si_open(self, u):
        if isinstance(u, UpSetOfT):
            return u.tail_start is not None
        return True

    def derived_space(self):
        return POSET_T_SCOTT

    def properties(self):
        if self.scott:
            return PropertyReport(
                sober=True, bounded_sober=True, sup_sober=True, irr_continuous=False,
                si_minus_continuous=False, si_continuous=False, irr_plus_continuous=False,
                oplus=True, star=True, c_space=False, si_infty=True,
                witnesses={
                    "irr_continuous": "a: only bot is way-below a",
                    "si_minus_continuous": "a: only bot is way-below a",
                    "si_continuous": "a: only bot is way-below a",
                    "irr_plus_continuous": "a: only bot is way-below a",
                    "c_space": "a: the Scott interior of up(y) misses a for every y",
                },
            )
        return PropertyReport(
            sober=False, bounded_sober=False, sup_sober=False, irr_continuous=False,
            si_minus_continuous=False, si_continuous=False, irr_plus_continuous=False,
            oplus=True, star=True, c_space=True, si_infty=False,
            witnesses={
                "sober": "{bot,1,2,...} is irreducible and closed but not a point closure",
                "bounded_sober": "{bot,1,2,...} is bounded by top but not a point closure",
                "sup_sober": "{bot,1,2,...} has supremum top but cl{top} is all of T",
                "irr_continuous": "a: only bot is way-below a",
                "si_minus_continuous": "a: only bot is way-below a",
                "si_continuous": "a: only bot is way-below a",
                "irr_plus_continuous": "a: only bot is way-below a",
                "si_infty": "{top}: the chain has supremum top but misses it",
            },
        )

    def sample_points(self, fuel):
        return [BOT, A, TOP] + list(range(1, fuel + 1))

    def sample_opens(self, fuel):
        out = [Empty(), Full()]
        for has_a in (False, True):
            for tail in [None] + list(range(1, fuel + 2)):
                u = UpSetOfT(has_a, tail)
                if self.is_open(u):
                    out.append(u)
        return out

    def finite_irreducible(self, e):
        return any(all(self.leq(z, m) for z in e) for m in e)

    def irr_classes(self, fuel):
        out = [
            IrrClass("infinite subsets of the chain", TOP, self._chain_avoids),
            IrrClass("infinite subsets of the chain with bot", TOP, self._chain_bot_avoids),
        ]
        if self.scott:
            out.append(IrrClass("infinite subsets of the chain with a", TOP, self._chain_a_avoids))
        return out

    def _meets_chain_tail(self, t):
        if isinstance(t, Full):
            return True
        if isinstance(t, UpSetOfT):
            return t.tail_start is not None
        if isinstance(t, Up):
            return t.point == BOT or isinstance(t.point, int)
        return False

    def _chain_avoids(self, t):
        return not self._meets_chain_tail(t)

    def _chain_bot_avoids(self, t):
        return not self._meets_chain_tail(t) and not self.mem(BOT, t)

    def _chain_a_avoids(self, t):
        return not self._meets_chain_tail(t) and not self.mem(A, t)

    def uu_set(self, x):
        if x == BOT:
            return Full()
        if isinstance(x, int):
            return UpSetOfT(False, x)
        return Empty()

    def dd_set(self, x):
        if x in (BOT, A):
            return Described("{bot}", lambda z: z == BOT, True, BOT, BOT, (BOT,))
        if x == TOP:
            return Described("{bot,1,2,...}", lambda z: z == BOT or isinstance(z, int),
                             True, TOP, TOP)
        members = (BOT,) + tuple(range(1, x + 1))
        return Described(f"{{bot,1..{x}}}", lambda z: z in members, True, x, x, members)

    def irreducible_closed(self, fuel):
        def down(p):
            return lambda z: self.leq(z, p)

        out = [
            ClosedDescription("{bot}", UpSetOfT(True, 1), down(BOT), True, BOT, BOT, (BOT,)),
            ClosedDescription("{bot,a}", UpSetOfT(False, 1), down(A), True, A, A, (BOT, A)),
        ]
        for n in range(1, fuel + 1):
            members = (BOT,) + tuple(range(1, n + 1))
            out.append(ClosedDescription(f"down({n})", UpSetOfT(True, n + 1), down(n),
                                         True, n, n, members))
        if not self.scott:
            out.append(ClosedDescription(
                "{bot,1,2,...}", UpSetOfT(True, None),
                lambda z: z == BOT or isinstance(z, int), True, TOP, None))
        out.append(ClosedDescription("T", Empty(), lambda z: True, True, TOP, TOP))
        return out

    def interior_up(self, y):
        if y == BOT:
            return Full()
        if isinstance(y, int):
            return UpSetOfT(False, y)
        if self.scott:
            return Empty()
        return UpSetOfT(y == A, None)

    def _gen(self, gen):
        if gen != "n":
            raise UndecidableTail(f"{self.name} has no generator {gen!r}")

    def gen_value(self, gen, k):
        self._gen(gen)
        return k

    def gen_sup(self, gen):
        self._gen(gen)
        return TOP

    def gen_eventually_in(self, gen, s):
        self._gen(gen)
        return self._meets_chain_tail(s)

    def gen_eventual_lb(self, gen, e):
        self._gen(gen)
        return e == BOT or isinstance(e, int)

    def gen_top_converges(self, gen, x):
        self._gen(gen)
        if self.scott:
            return True
        return x == BOT or isinstance(x, int)

    def gen_lower_bounds(self, gen):
        self._gen(gen)
        return Described("{bot,1,2,...}", lambda z: z == BOT or isinstance(z, int),
                         True, TOP, TOP)

    def meet(self, values):
        vals = {v for v in values if v != TOP}
        if not vals:
            return TOP
        if BOT in vals or (A in vals and len(vals) > 1):
            return BOT
        return A if vals == {A} else min(vals)


# -- rationals with the Scott topology -------------------------------------


class RationalScott(CatalogSpace):
    name = "RationalScott"
    cli_name = "rational-scott"
    open_families = ("{}", "Q", "(q,inf) for rational q")
    generators = ("one-minus-one-over-n",)

    def parse_point(self, text):
        return Fraction(str(text))

    def leq(self, x, y):
        return x <= y

    def _mem(self, x, s):
        if isinstance(s, RationalRightRay):
            return x > s.q
        if isinstance(s, ClosedRay):
            return x >= s.q
        return super()._mem(x, s)

    def is_open(self, s):
        return isinstance(s, (Empty, Full, RationalRightRay))

    def way_below(self, x, y):
        return x < y

    def _si_open(self, u):
        return True

    def properties(self):
        return PropertyReport(
            sober=False, bounded_sober=True, sup_sober=True, irr_continuous=True,
            si_minus_continuous=True, si_continuous=True, irr_plus_continuous=True,
            oplus=True, star=True, c_space=True, si_infty=True,
            witnesses={"sober": "Q is irreducible and closed but not a point closure"},
        )

    def sample_points(self, fuel):
        pts = {Fraction(k, 4) for k in range(-2, max(fuel, 7) - 2)}
        pts |= {Fraction(1, 2), Fraction(1)}
        return sorted(pts)

    def sample_opens(self, fuel):
        pts = self.sample_points(fuel)
        qs = sorted(set(pts) | {p + Fraction(1, 8) for p in pts})
        return [Empty(), Full()] + [RationalRightRay(q) for q in qs]

    def finite_irreducible(self, e):
        return True

    def irr_classes(self, fuel):
        return [
            IrrClass(f"sets approaching {s} from below", s,
                     (lambda t, s=s: self._below_avoids(t, s)))
            for s in self.sample_points(fuel)
        ]

    @staticmethod
    def _below_avoids(t, s):
        if isinstance(t, Full):
            return False
        if isinstance(t, (RationalRightRay, ClosedRay)):
            return t.q >= s
        if isinstance(t, Up):
            return t.point >= s
        return True

    def uu_set(self, x):
        return RationalRightRay(x)

    def dd_set(self, x):
        return Described(f"(-inf,{x})", lambda z: z < x, True, x, x)

    def irreducible_closed(self, fuel):
        out = [
            ClosedDescription(f"(-inf,{q}]", RationalRightRay(q),
                              (lambda z, q=q: z <= q), True, q, q)
            for q in self.sample_points(fuel)
        ]
        out.append(ClosedDescription("Q", Empty(), lambda z: True, False, None, None))
        return out

    def interior_up(self, y):
        return RationalRightRay(y)

    def witness_points(self, u, x):
        if isinstance(u, RationalRightRay):
            return [(u.q + x) / 2]
        return [x - 1]

    def location_candidates(self, fuel):
        return [ClosedRay(Fraction(1))]

    def interpolant(self, z, x, pool):
        return (z + x) / 2 if z < x else None

    def _gen(self, gen):
        if gen not in ("one-minus-one-over-n", "1-1/n"):
            raise UndecidableTail(f"{self.name} has no generator {gen!r}")

    def gen_value(self, gen, k):
        self._gen(gen)
        return 1 - Fraction(1, k)

    def gen_sup(self, gen):
        self._gen(gen)
        return Fraction(1)

    def gen_eventually_in(self, gen, s):
        self._gen(gen)
        if isinstance(s, Full):
            return True
        if isinstance(s, (RationalRightRay, ClosedRay)):
            return s.q < 1
        if isinstance(s, Up):
            return s.point < 1
        return False

    def gen_eventual_lb(self, gen, e):
        self._gen(gen)
        return e < 1

    def gen_top_converges(self, gen, x):
        self._gen(gen)
        return x <= 1

    def gen_lower_bounds(self, gen):
        self._gen(gen)
        return Described("(-inf,1)", lambda z: z < 1, True, Fraction(1), Fraction(1))

    def meet(self, values):
        return min(values)

    def dd_within(self, y, glb=None, below=None):
        return y <= (below if below is not None else glb)


OMEGA_SCOTT = OmegaPlusOne(scott=True)
POSET_T_SCOTT = PosetT(scott=True)

CATALOG: dict[str, CatalogSpace] = {
    s.cli_name: s
    for s in (CofiniteNat(), OmegaPlusOne(), PosetT(), RationalScott(), OMEGA_SCOTT,
              POSET_T_SCOTT)
}
PRIMARY_NAMES = ("cofinite-nat", "omega-plus-one", "poset-t", "rational-scott")


def catalog_get(name: str) -> CatalogSpace:
    for space in CATALOG.values():
        if name in (space.cli_name, space.name):
            return space
    raise UnknownSpace(f"unknown catalog space {name!r}; known: {', '.join(CATALOG)}")


def catalog_way_below(space: CatalogSpace, x: Point, y: Point) -> bool:
    return space.way_below(x, y)


def catalog_properties(name: str) -> PropertyReport:
    return catalog_get(name).properties()


# -- validation by probing --------------------------------------------------


@dataclass
class ValidationReport:
    name: str
    fuel: int
    counts: dict[str, int] = field(default_factory=dict)
    killers: dict[tuple[str, str], list[str]] = field(default_factory=dict)
    si_failures: dict[str, str] = field(default_factory=dict)
    probed_flags: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        # any discrepancy raises before a report is returned
        return True

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "fuel": self.fuel,
            "passed": self.passed,
            "counts": dict(self.counts),
            "killers": {f"{x} << {y}": v for (x, y), v in self.killers.items()},
            "si_failures": dict(self.si_failures),
            "probed_flags": dict(self.probed_flags),
        }


@dataclass(frozen=True)
class _Witness:
    label: str
    sup: Point
    avoids: Callable[[SymbolicSet], bool] = field(compare=False)
    directed_sup: bool
    finite: bool


def _finite_candidates(pts: list) -> Iterable[tuple]:
    limit = len(pts) if len(pts) <= 11 else 3
    for r in range(1, limit + 1):
        yield from combinations(pts, r)


def _trace_irreducible(sp: CatalogSpace, e: tuple, fuel: int) -> bool:
    traces = {
        frozenset(z for z in e if sp.mem(z, u)) for u in sp.probe_opens(e, fuel)
    } - {frozenset()}
    return all(a & b for a in traces for b in traces)


def _label(e: Iterable) -> str:
    return "{" + ",".join(map(str, e)) + "}"


def validate_catalog(name: str, fuel: int = 8) -> ValidationReport:
    """Re-derive every frozen answer of a catalog space by definitional probes.

    Raises :class:`OracleMismatch` on the first disagreement.
    """
    if fuel < 1:
        raise ValueError("fuel must be at least 1")
    sp = catalog_get(name)
    rep = ValidationReport(sp.name, fuel)
    pts = sp.sample_points(fuel)
    opens = sp.sample_opens(fuel)

    def mismatch(msg: str):
        raise OracleMismatch(f"{sp.name}: {msg}")

    for x in pts:
        if not sp.leq(x, x):
            mismatch(f"order not reflexive at {x}")
        for y in pts:
            if x != y and sp.leq(x, y) and sp.leq(y, x):
                mismatch(f"order not antisymmetric at {x}, {y}")
            for z in pts:
                if sp.leq(x, y) and sp.leq(y, z) and not sp.leq(x, z):
                    mismatch(f"order not transitive at {x}, {y}, {z}")

    for u in opens:
        if not sp.is_open(u):
            mismatch(f"sampled {u.describe()} is not open")
        for x in pts:
            if sp.mem(x, u) and any(sp.leq(x, y) and not sp.mem(y, u) for y in pts):
                mismatch(f"{u.describe()} is not an upper set")

    witnesses: list[_Witness] = []
    irr_count = red_count = 0
    for e in _finite_candidates(pts):
        irr = _trace_irreducible(sp, e, fuel)
        if irr != sp.finite_irreducible(e):
            mismatch(f"irreducibility of {_label(e)}: probe says {irr}")
        if not irr:
            red_count += 1
            continue
        irr_count += 1
        top = sp.lub_in(e, pts)
        if top is not None:
            witnesses.append(_Witness(
                _label(e), top,
                (lambda t, e=e: not any(sp.mem(z, t) for z in e)),
                any(sp.leq(top, z) for z in e), True,
            ))
    for cls in sp.irr_classes(fuel):
        witnesses.append(_Witness(cls.label, cls.sup, cls.avoids, cls.directed_sup, False))
    rep.counts.update(
        finite_irreducible=irr_count,
        finite_not_irreducible=red_count,
        irr_plus_witnesses=len(witnesses),
    )

    wb = {}
    for x in pts:
        for y in pts:
            kill = [w.label for w in witnesses if sp.leq(y, w.sup) and w.avoids(Up(x))]
            wb[x, y] = not kill
            if kill:
                rep.killers[str(x), str(y)] = kill
            if wb[x, y] != sp.way_below(x, y):
                mismatch(f"way-below({x}, {y}): probe says {wb[x, y]}")
    rep.counts["way_below_pairs"] = len(wb)

    si_all = True
    for u in opens:
        bad = [w.label for w in witnesses if sp.mem(w.sup, u) and w.avoids(u)]
        if bad:
            rep.si_failures[u.describe()] = bad[0]
            si_all = False
        if (not bad) != sp.is_si_open(u):
            mismatch(f"SI-openness of {u.describe()}: probe says {not bad}")
        sp.is_si_closed_complement(u)
    rep.counts["opens_probed"] = len(opens)

    irr_cont = si_minus = oplus = True
    for x in pts:
        uu, dd = sp.uu_set(x), sp.dd_set(x)
        for y in pts:
            if sp.mem(y, uu) != wb[x, y]:
                mismatch(f"uu({x}) = {uu.describe()} disagrees at {y}")
            if dd.contains(y) != wb[y, x]:
                mismatch(f"dd({x}) = {dd.label} disagrees at {y}")
        if dd.finite_members is not None:
            if not set(dd.finite_members) <= set(pts):
                mismatch(f"dd({x}) leaves the sample")
            if _trace_irreducible(sp, dd.finite_members, fuel) != dd.irreducible:
                mismatch(f"dd({x}) irreducibility")
            if sp.lub_in(dd.finite_members, pts) != dd.sup:
                mismatch(f"dd({x}) supremum")
        oplus &= sp.is_open(uu)
        irr_cont &= dd.irreducible and dd.sup == x
        si_minus &= dd.directed_sup == x

    sober = bounded = sup_sober = True
    for c in sp.irreducible_closed(fuel):
        if not sp.is_open(c.complement):
            mismatch(f"{c.label} is not closed")
        for z in pts:
            if c.contains(z) == sp.mem(z, c.complement):
                mismatch(f"{c.label} disagrees with its complement at {z}")
            if c.point_closure_of is not None and c.contains(z) != sp.leq(z, c.point_closure_of):
                mismatch(f"{c.label} is not the closure of {c.point_closure_of}")
        if c.finite_members is not None and not _trace_irreducible(sp, c.finite_members, fuel):
            mismatch(f"{c.label} is not irreducible")
        pc = c.point_closure_of is not None
        sober &= pc
        bounded &= pc or not c.bounded
        sup_sober &= c.sup is None or c.point_closure_of == c.sup

    c_space = True
    for y in pts:
        inner = sp.interior_up(y)
        if not sp.is_open(inner) or any(
            sp.mem(z, inner) and not sp.leq(y, z) for z in pts
        ):
            mismatch(f"interior of up({y}) is not an open inside up({y})")
    for u in opens:
        for x in pts:
            if not sp.mem(x, u):
                continue
            ys = [y for y in pts if sp.mem(y, u)] + sp.witness_points(u, x)
            if not any(sp.mem(y, u) and sp.mem(x, sp.interior_up(y)) for y in ys):
                c_space = False

    star = all(w.directed_sup for w in witnesses)
    probed = dict(
        sober=sober, bounded_sober=bounded, sup_sober=sup_sober,
        irr_continuous=irr_cont, si_minus_continuous=si_minus,
        si_continuous=si_minus and oplus, irr_plus_continuous=irr_cont and oplus,
        oplus=oplus, star=star, c_space=c_space, si_infty=si_all,
    )
    rep.probed_flags = probed
    frozen = sp.properties().flags()
    for flag, value in probed.items():
        if frozen[flag] != value:
            mismatch(f"flag {flag}: frozen {frozen[flag]}, probe {value}")
    return rep
