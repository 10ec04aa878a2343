"""Nets, tail classes, topological and Irr-convergence, Kelley's axioms.

Over a finite space a net only matters through the set of points it visits
cofinally (its :class:`TailClass`): the net is eventually inside an upper
set ``U`` exactly when that set is inside ``U``.  The exhaustive checks run
on tail classes, and concrete nets exist to replay individual instances.

Catalog spaces accept ``N``-indexed nets whose tail is constant, periodic or
a named strictly monotone generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterable, Optional, Sequence, Union

from .catalog import CatalogSpace, Described
from .core import FiniteSpace, PointSet, bits, mask_of, nonempty_subsets, subsets
from .errors import BudgetExceeded, FuelExhausted, NotCofinal, UndecidableTail

MAX_BUDGET = 4


# -- index sets ---------------------------------------------------------------


def _preorder_ups(size: int, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Up-masks of the reflexive-transitive closure of ``pairs``."""
    ups = [1 << i for i in range(size)]
    for lo, hi in pairs:
        ups[lo] |= 1 << hi
    changed = True
    while changed:
        changed = False
        for i in range(size):
            reach = ups[i]
            for j in bits(ups[i]):
                reach |= ups[j]
            if reach != ups[i]:
                ups[i] = reach
                changed = True
    return tuple(ups)


def _kron(a: int, size_a: int, b: int, size_b: int) -> int:
    out = 0
    for i in bits(a):
        out |= b << (i * size_b)
    return out


# -- nets over finite spaces --------------------------------------------------


@dataclass(frozen=True)
class FiniteNet:
    """A net on a finite directed preorder; ``ups[i]`` masks the indices above ``i``."""

    space: FiniteSpace
    ups: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.ups)
        if k == 0 or len(self.values) != k:
            raise ValueError("a net needs one value per index and at least one index")
        for i, u in enumerate(self.ups):
            if not u >> i & 1:
                raise ValueError("index order is not reflexive")
            if any(self.ups[j] & ~u for j in bits(u)):
                raise ValueError("index order is not transitive")
        for i in range(k):
            for j in range(i + 1, k):
                if not self.ups[i] & self.ups[j]:
                    raise ValueError(f"indices {i} and {j} have no common upper bound")
        if any(not 0 <= v < self.space.n for v in self.values):
            raise ValueError("net value outside the carrier")

    @property
    def size(self) -> int:
        return len(self.ups)

    @classmethod
    def from_pairs(cls, space: FiniteSpace, values: Sequence[int],
                   pairs: Iterable[tuple[int, int]]) -> FiniteNet:
        return cls(space, _preorder_ups(len(values), pairs), tuple(values))

    @classmethod
    def chain(cls, space: FiniteSpace, values: Sequence[int]) -> FiniteNet:
        k = len(values)
        ups = tuple(((1 << k) - 1) & ~((1 << i) - 1) for i in range(k))
        return cls(space, ups, tuple(values))

    @classmethod
    def total(cls, space: FiniteSpace, values: Sequence[int]) -> FiniteNet:
        """Every index below every other index."""
        k = len(values)
        return cls(space, ((1 << k) - 1,) * k, tuple(values))

    @classmethod
    def by_values(cls, space: FiniteSpace, values: Sequence[int]) -> FiniteNet:
        """Index order pulled back from the specialization order of the values."""
        k = len(values)
        ups = tuple(
            mask_of(j for j in range(k) if space.leq(values[i], values[j])) for i in range(k)
        )
        return cls(space, ups, tuple(values))

    def value_mask(self, p: int) -> int:
        return mask_of(i for i, v in enumerate(self.values) if v == p)


@dataclass(frozen=True)
class SequenceNet:
    """``N``-indexed net: a finite prefix followed by a repeated cycle."""

    space: FiniteSpace
    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise ValueError("the repeated cycle must be nonempty")
        if any(not 0 <= v < self.space.n for v in self.prefix + self.cycle):
            raise ValueError("net value outside the carrier")

    def value(self, k: int) -> int:
        if k < len(self.prefix):
            return self.prefix[k]
        return self.cycle[(k - len(self.prefix)) % len(self.cycle)]

    def window(self) -> int:
        """Indices past which the value pattern repeats exactly."""
        return len(self.prefix) + len(self.cycle)


@dataclass(frozen=True)
class TailClass:
    space: FiniteSpace
    cofinal_points: PointSet

    def __post_init__(self) -> None:
        if self.cofinal_points == 0:
            raise ValueError("a tail class is nonempty")
        if self.cofinal_points & ~self.space.full:
            raise ValueError("tail class leaves the carrier")

    def labels(self) -> list[str]:
        return self.space.labels(self.cofinal_points)


def tail_class_of(net: Union[FiniteNet, SequenceNet]) -> TailClass:
    """Points p such that every index has a later index with value p."""
    s = net.space
    if isinstance(net, SequenceNet):
        return TailClass(s, mask_of(net.cycle))
    cof = 0
    for p in range(s.n):
        hit = net.value_mask(p)
        if hit and all(u & hit for u in net.ups):
            cof |= 1 << p
    return TailClass(s, cof)


def eventually_in_simulated(net: Union[FiniteNet, SequenceNet], u: PointSet) -> bool:
    """Direct check of: some index beyond which every value lies in ``u``."""
    if isinstance(net, SequenceNet):
        w = net.window()
        horizon = w + len(net.cycle)
        for start in range(w + 1):
            if all(u >> net.value(k) & 1 for k in range(start, horizon)):
                return True
        return False
    inside = mask_of(i for i, v in enumerate(net.values) if u >> v & 1)
    return any(up & ~inside == 0 for up in net.ups)


# -- nets over catalog spaces -------------------------------------------------


@dataclass(frozen=True)
class ConstantTail:
    value: Any


@dataclass(frozen=True)
class PeriodicTail:
    values: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("a periodic tail needs at least one value")


@dataclass(frozen=True)
class MonotoneTail:
    """Values ``gen(stride * k + offset)``; verdicts depend only on the generator."""

    generator: str
    limit: Any = None
    stride: int = 1
    offset: int = 1


Tail = Union[ConstantTail, PeriodicTail, MonotoneTail]


@dataclass(frozen=True)
class CatalogNet:
    space: CatalogSpace
    prefix: tuple
    tail: Tail

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(self.prefix))
        t = self.tail
        if isinstance(t, MonotoneTail):
            lim = self.space.gen_sup(t.generator)
            if t.limit is not None and t.limit != lim:
                raise UndecidableTail(
                    f"declared limit {t.limit} is not the supremum of {t.generator}"
                )

    def cofinal_values(self) -> Optional[tuple]:
        if isinstance(self.tail, ConstantTail):
            return (self.tail.value,)
        if isinstance(self.tail, PeriodicTail):
            return self.tail.values
        return None

    def value(self, k: int) -> Any:
        if k < len(self.prefix):
            return self.prefix[k]
        k -= len(self.prefix)
        t = self.tail
        if isinstance(t, ConstantTail):
            return t.value
        if isinstance(t, PeriodicTail):
            return t.values[k % len(t.values)]
        return self.space.gen_value(t.generator, t.stride * k + t.offset)

    def describe(self) -> str:
        t = self.tail
        if isinstance(t, ConstantTail):
            tail = f"constant {self.space.format_point(t.value)}"
        elif isinstance(t, PeriodicTail):
            tail = "periodic " + ",".join(map(self.space.format_point, t.values))
        else:
            tail = f"monotone {t.generator}"
        head = ",".join(map(self.space.format_point, self.prefix))
        return f"[{head}] then {tail}" if head else tail


Net = Union[FiniteNet, SequenceNet, TailClass, CatalogNet]


def net_from_json(space: Union[FiniteSpace, CatalogSpace], data: dict) -> Net:
    """Parse a net description.

    ``{"index": "nat", "prefix": [...], "tail": {...}}`` with tail kinds
    ``constant`` (``value``), ``periodic`` (``values``) and ``monotone``
    (``values`` naming a generator, optional ``limit``).  Finite spaces also
    accept ``{"index": "finite", "values": [...], "le": [[i, j], ...]}``.
    """
    index = data.get("index", "nat")
    if isinstance(space, FiniteSpace):
        point = space.index
    else:
        point = space.parse_point
    if index == "finite":
        if not isinstance(space, FiniteSpace):
            raise UndecidableTail("finite-index nets are only supported on finite spaces")
        vals = [point(v) for v in data["values"]]
        return FiniteNet.from_pairs(space, vals, [tuple(p) for p in data.get("le", [])])
    if index != "nat":
        raise ValueError(f"unknown index kind {index!r}")
    prefix = [point(v) for v in data.get("prefix", [])]
    tail = data["tail"]
    kind = tail.get("kind")
    if kind == "constant":
        cycle = [point(tail["value"])]
    elif kind == "periodic":
        cycle = [point(v) for v in tail["values"]]
    elif kind == "monotone":
        if isinstance(space, FiniteSpace):
            raise UndecidableTail("a finite space carries no strictly monotone sequence")
        gen = tail["values"]
        lim = tail.get("limit")
        return CatalogNet(space, prefix, MonotoneTail(gen, None if lim is None else point(lim)))
    else:
        raise UndecidableTail(f"unsupported tail rule {kind!r}")
    if isinstance(space, FiniteSpace):
        return SequenceNet(space, tuple(prefix), tuple(cycle))
    if kind == "constant":
        return CatalogNet(space, prefix, ConstantTail(cycle[0]))
    return CatalogNet(space, prefix, PeriodicTail(tuple(cycle)))


# -- convergence --------------------------------------------------------------


def _as_tail(net: Net) -> TailClass:
    return net if isinstance(net, TailClass) else tail_class_of(net)


def eventually_in(space, net: Net, u) -> bool:
    if isinstance(net, CatalogNet):
        vals = net.cofinal_values()
        if vals is not None:
            return all(space.mem(v, u) for v in vals)
        return space.gen_eventually_in(net.tail.generator, u)
    return _as_tail(net).cofinal_points & ~u == 0


def eventual_lower_bound(space, net: Net, e) -> bool:
    """Is ``e`` below the net's values from some index on?"""
    if isinstance(net, CatalogNet):
        vals = net.cofinal_values()
        if vals is not None:
            return all(space.leq(e, v) for v in vals)
        return space.gen_eventual_lb(net.tail.generator, e)
    return _as_tail(net).cofinal_points & ~space.up[e] == 0


def _top_targets(n: int, opens: Iterable[PointSet], c: PointSet) -> PointSet:
    """Points x such that every open containing x contains ``c``."""
    bad = 0
    for u in opens:
        if c & ~u:
            bad |= u
    return ((1 << n) - 1) & ~bad


def topological_converges(space, net: Net, x) -> bool:
    """Eventually inside every open neighbourhood of ``x``."""
    if isinstance(net, CatalogNet):
        vals = net.cofinal_values()
        if vals is not None:
            return all(space.leq(x, v) for v in vals)
        return space.gen_top_converges(net.tail.generator, x)
    c = _as_tail(net).cofinal_points
    return bool(_top_targets(space.n, space.opens, c) >> x & 1)


def _lower_bound_mask(space: FiniteSpace, c: PointSet) -> PointSet:
    lb = space.full
    for p in bits(c):
        lb &= space.down[p]
    return lb


def irr_converges(space, net: Net, y) -> bool:
    """Some Irr+ member with supremum above ``y`` consists of eventual lower bounds."""
    if isinstance(net, CatalogNet):
        vals = net.cofinal_values()
        if vals is not None:
            # the eventual lower bounds are the down-set of the meet: a principal
            # ideal, irreducible with supremum the meet itself
            g = space.meet(vals)
            return g is not None and space.leq(y, g)
        low: Optional[Described] = space.gen_lower_bounds(net.tail.generator)
        if low is None:
            return False
        if not low.irreducible:
            raise UndecidableTail(f"lower bounds {low.label} are not irreducible")
        return low.sup is not None and space.leq(y, low.sup)
    from .irr import tables

    lb = _lower_bound_mask(space, _as_tail(net).cofinal_points)
    return any(e & ~lb == 0 and space.leq(y, top) for e, top in tables(space).irr_plus)


# -- convergence classes on finite spaces ------------------------------------


@dataclass(frozen=True)
class ConvergenceClass:
    """``targets[c]`` masks the points that the tail class ``c`` converges to."""

    space: FiniteSpace
    kind: str
    targets: tuple[PointSet, ...]

    def converges(self, c: PointSet, x: int) -> bool:
        return bool(self.targets[c] >> x & 1)

    def pairs(self) -> frozenset[tuple[PointSet, int]]:
        return frozenset(
            (c, x) for c in range(1, len(self.targets)) for x in bits(self.targets[c])
        )

    def basin(self, x: int) -> PointSet:
        """Union of all tail classes converging to ``x``."""
        out = 0
        for c in range(1, len(self.targets)):
            if self.targets[c] >> x & 1:
                out |= c
        return out


def topological_class(space: FiniteSpace) -> ConvergenceClass:
    opens = tuple(space.opens)
    targets = (0,) + tuple(
        _top_targets(space.n, opens, c) for c in range(1, space.full + 1)
    )
    return ConvergenceClass(space, "topological", targets)


def irr_class(space: FiniteSpace) -> ConvergenceClass:
    from .irr import tables

    irr_plus = tables(space).irr_plus
    reach: dict[PointSet, PointSet] = {}
    targets = [0]
    for c in range(1, space.full + 1):
        lb = _lower_bound_mask(space, c)
        if lb not in reach:
            r = 0
            for e, top in irr_plus:
                if e & ~lb == 0:
                    r |= space.down[top]
            reach[lb] = r
        targets.append(reach[lb])
    return ConvergenceClass(space, "irr", tuple(targets))


def induced_topology(space: FiniteSpace, cls: ConvergenceClass) -> FiniteSpace:
    """Sets U such that every class member converging into U is eventually in U."""
    basins = [cls.basin(x) for x in range(space.n)]
    opens = frozenset(
        u for u in subsets(space.full) if all(basins[x] & ~u == 0 for x in bits(u))
    )
    return FiniteSpace(space.names, opens)


# -- subnets ------------------------------------------------------------------


@dataclass(frozen=True)
class AffineSelector:
    """``j -> a*j + b`` on ``N``."""

    a: int
    b: int = 0


@dataclass(frozen=True)
class MapSelector:
    """Index order of the subnet (up-masks) and the map into the parent index."""

    ups: tuple[int, ...]
    mapping: tuple[int, ...]


Selector = Union[AffineSelector, MapSelector]


def _affine_split(prefix_len: int, sel: AffineSelector) -> int:
    """First subnet index whose image lies past the parent prefix."""
    if sel.a <= 0:
        raise NotCofinal(f"selector j -> {sel.a}*j + {sel.b} is bounded")
    if sel.b < 0:
        raise ValueError("selector offset must be nonnegative")
    return max(0, -(-(prefix_len - sel.b) // sel.a))


def subnet(net: Net, selector: Selector) -> Net:
    """Compose ``net`` with a monotone cofinal selector."""
    if isinstance(net, FiniteNet):
        if not isinstance(selector, MapSelector):
            raise TypeError("finite-index nets take a MapSelector")
        ups, g = selector.ups, selector.mapping
        if len(ups) != len(g) or any(not 0 <= i < net.size for i in g):
            raise ValueError("selector does not map into the parent index")
        for j, u in enumerate(ups):
            for j2 in bits(u):
                if not net.ups[g[j]] >> g[j2] & 1:
                    raise NotCofinal(f"selector is not monotone at {j} <= {j2}")
        for i in range(net.size):
            if not any(net.ups[i] >> gi & 1 for gi in g):
                raise NotCofinal(f"no subnet index lands above parent index {i}")
        return FiniteNet(net.space, ups, tuple(net.values[i] for i in g))
    if not isinstance(selector, AffineSelector):
        raise TypeError("N-indexed nets take an AffineSelector")
    if isinstance(net, SequenceNet):
        j0 = _affine_split(len(net.prefix), selector)
        at = lambda j: net.value(selector.a * j + selector.b)  # noqa: E731
        return SequenceNet(
            net.space,
            tuple(at(j) for j in range(j0)),
            tuple(at(j) for j in range(j0, j0 + len(net.cycle))),
        )
    if isinstance(net, CatalogNet):
        m = len(net.prefix)
        j0 = _affine_split(m, selector)
        a, b = selector.a, selector.b
        head = tuple(net.value(a * j + b) for j in range(j0))
        t = net.tail
        if isinstance(t, ConstantTail):
            return CatalogNet(net.space, head, t)
        if isinstance(t, PeriodicTail):
            cyc = tuple(net.value(a * j + b) for j in range(j0, j0 + len(t.values)))
            return CatalogNet(net.space, head, PeriodicTail(cyc))
        shift = t.offset + t.stride * (a * j0 + b - m)
        return CatalogNet(net.space, head, MonotoneTail(t.generator, t.limit, t.stride * a, shift))
    raise TypeError(f"cannot take a subnet of {type(net).__name__}")


def divergence_subnet(net: Union[FiniteNet, SequenceNet], y: int) -> Union[FiniteNet, SequenceNet]:
    """Restrict ``net`` to the indices whose value is not above ``y``."""
    s = net.space
    keep = lambda v: not s.leq(y, v)  # noqa: E731
    if isinstance(net, SequenceNet):
        cyc = tuple(v for v in net.cycle if keep(v))
        if not cyc:
            raise NotCofinal(f"the net is eventually above {s.names[y]}")
        return SequenceNet(s, tuple(v for v in net.prefix if keep(v)), cyc)
    idx = [i for i, v in enumerate(net.values) if keep(v)]
    jmask = mask_of(idx)
    if any(not u & jmask for u in net.ups):
        raise NotCofinal(f"the net is eventually above {s.names[y]}")
    pos = {i: k for k, i in enumerate(idx)}
    ups = tuple(mask_of(pos[j] for j in bits(net.ups[i] & jmask)) for i in idx)
    return subnet(net, MapSelector(ups, tuple(idx)))


def diagonal_net(outer: FiniteNet, inner: Sequence[FiniteNet]) -> FiniteNet:
    """The net ``(i, f) -> inner[i].values[f(i)]`` on the product order of ``I x prod J(i)``."""
    if len(inner) != outer.size:
        raise ValueError("need one inner net per outer index")
    sizes = [nt.size for nt in inner]
    msize = 1
    for q in sizes:
        msize *= q
    fs = list(product(*(range(q) for q in sizes)))
    mups = []
    for f in fs:
        m, width = 1, 1
        for k, fk in enumerate(f):
            m = _kron(m, width, inner[k].ups[fk], sizes[k])
            width *= sizes[k]
        mups.append(m)
    ups, values = [], []
    for i in range(outer.size):
        for r, f in enumerate(fs):
            ups.append(_kron(outer.ups[i], outer.size, mups[r], msize))
            values.append(inner[i].values[f[i]])
    return FiniteNet(outer.space, tuple(ups), tuple(values))


def _cofinal_indices(ups: Sequence[int]) -> int:
    out = ~0
    for u in ups:
        out &= u
    return out & ((1 << len(ups)) - 1)


# -- Kelley axioms ------------------------------------------------------------

AXIOMS = ("Constants", "Subnets", "Divergence", "IteratedLimits")


@dataclass
class KelleyReport:
    axiom: str
    checked: int = 0
    violations: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    instances: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and all(r["match"] and r["holds"] for r in self.instances)

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "passed": self.passed,
            "checked": self.checked,
            "violations": self.violations,
            "witnesses": self.witnesses,
            "instances": self.instances,
        }


def _axiom_name(axiom: str) -> str:
    key = axiom.replace("-", "").replace("_", "").replace(" ", "").lower()
    for a in AXIOMS:
        if a.lower() == key:
            return a
    raise ValueError(f"unknown axiom {axiom!r}; expected one of {AXIOMS}")


def _class(space: FiniteSpace, kind: str) -> ConvergenceClass:
    if kind == "irr":
        return irr_class(space)
    if kind == "topological":
        return topological_class(space)
    raise ValueError(f"unknown convergence class {kind!r}")


def _conv(space: FiniteSpace, kind: str, net: Net, x: int) -> bool:
    return irr_converges(space, net, x) if kind == "irr" else topological_converges(space, net, x)


def proof_family(space: FiniteSpace, x: int, budget: int) -> list[PointSet]:
    """Directed sets with supremum above ``x``, at most ``budget`` of size at most ``budget``.

    The singleton of ``x`` always comes first.
    """
    from .irr import tables

    t = tables(space)
    fam = [1 << x]
    cands = [
        d for d in nonempty_subsets(space.full)
        if d != 1 << x and d.bit_count() <= budget and t.directed(d)
        and t.sup(d) is not None and space.leq(x, t.sup(d))
    ]
    cands.sort(key=lambda d: (-d.bit_count(), d))
    return fam + cands[: budget - 1]


def _iterated_instances(space: FiniteSpace, x: int, budget: int) -> list[tuple[str, FiniteNet, list]]:
    from .irr import tables

    t = tables(space)
    fam = proof_family(space, x, budget)
    outer = FiniteNet.total(space, [t.sup(d) for d in fam])
    inner = [FiniteNet.by_values(space, list(bits(d))) for d in fam]
    out = [("directed family", outer, inner)]
    n = space.n
    ovals = [(x + i + 1) % n for i in range(budget - 1)] + [x]
    inner2 = []
    for i, z in enumerate(ovals):
        top = max(bits(space.up[z]))
        inner2.append(FiniteNet.chain(space, [(i + j) % n for j in range(budget - 1)] + [top]))
    out.append(("chains", FiniteNet.chain(space, ovals), inner2))
    return out


def kelley_check(space: FiniteSpace, axiom: str, budget: int = 3, kind: str = "irr") -> KelleyReport:
    """Check one Kelley axiom for a convergence class on a finite space.

    Net quantifiers run over tail classes.  Concrete nets replay instances
    whose verdicts must match the tail-class computation.
    """
    if budget > MAX_BUDGET:
        raise BudgetExceeded(f"budget {budget} exceeds {MAX_BUDGET}")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    name = _axiom_name(axiom)
    cls = _class(space, kind)
    rep = KelleyReport(name)
    lab = space.labels
    pt = lambda i: space.names[i]  # noqa: E731

    def instance(desc: str, net: Net, x: int, predicted: PointSet, expect: bool) -> None:
        observed = tail_class_of(net).cofinal_points
        verdict = _conv(space, kind, net, x)
        rep.instances.append({
            "net": desc, "to": pt(x),
            "predicted_tail": lab(predicted), "observed_tail": lab(observed),
            "converges": verdict,
            "match": observed == predicted and verdict == cls.converges(predicted, x),
            "holds": verdict == expect,
        })

    if name == "Constants":
        for x in range(space.n):
            rep.checked += 1
            if not cls.converges(1 << x, x):
                rep.violations.append({"point": pt(x)})
            instance("constant", FiniteNet.chain(space, [x] * budget), x, 1 << x, True)

    elif name == "Subnets":
        for c, x in sorted(cls.pairs()):
            for c2 in nonempty_subsets(c):
                rep.checked += 1
                if not cls.converges(c2, x):
                    rep.violations.append({"tail": lab(c), "subnet_tail": lab(c2), "to": pt(x)})
        for x in range(space.n):
            cyc = tuple(bits(cls.basin(x))) or (x,)
            parent = SequenceNet(space, (), cyc)
            child = subnet(parent, AffineSelector(len(cyc), 0))
            instance("every len-th term", child, x, 1 << cyc[0], cls.converges(mask_of(cyc), x))

    elif name == "Divergence":
        replayed = 0
        for c in range(1, space.full + 1):
            for x in range(space.n):
                if cls.converges(c, x):
                    continue
                rep.checked += 1
                w = c & ~space.up[x]
                if not w or any(cls.converges(c2, x) for c2 in nonempty_subsets(w)):
                    found = next(
                        (d for d in nonempty_subsets(c)
                         if not any(cls.converges(e, x) for e in nonempty_subsets(d))),
                        None,
                    )
                    if found is None:
                        rep.violations.append({"tail": lab(c), "to": pt(x)})
                        continue
                    w = found
                if len(rep.witnesses) < 8:
                    rep.witnesses.append({"tail": lab(c), "to": pt(x), "subnet_tail": lab(w)})
                if replayed < 4 and w == c & ~space.up[x]:
                    replayed += 1
                    parent = SequenceNet(space, (x,), tuple(bits(c)))
                    instance("indices not above target", divergence_subnet(parent, x), x, w, False)

    else:
        basins = [cls.basin(z) for z in range(space.n)]
        for z in range(space.n):
            rep.checked += 1
            if not basins[z] or not cls.converges(basins[z], z):
                rep.violations.append({"basin_of": pt(z)})
        for c, x in sorted(cls.pairs()):
            rep.checked += 1
            u = 0
            for z in bits(c):
                u |= basins[z]
            if not cls.converges(u, x):
                rep.violations.append({"tail": lab(c), "to": pt(x), "diagonal_tail": lab(u)})
        for x in range(space.n):
            for desc, outer, inner in _iterated_instances(space, x, budget):
                diag = diagonal_net(outer, inner)
                predicted = 0
                for i in bits(_cofinal_indices(outer.ups)):
                    predicted |= tail_class_of(inner[i]).cofinal_points
                premise = _conv(space, kind, outer, x) and all(
                    _conv(space, kind, inner[i], outer.values[i]) for i in range(outer.size)
                )
                instance(f"{desc} ({diag.size} indices)", diag, x, predicted,
                         True if premise else _conv(space, kind, diag, x))
    return rep


def kelley_all(space: FiniteSpace, budget: int = 3, kind: str = "irr") -> dict[str, KelleyReport]:
    return {a: kelley_check(space, a, budget, kind) for a in AXIOMS}


# -- comparing topologies through their convergence classes ---------------------


def all_topologies(n: int) -> list[frozenset[PointSet]]:
    """Every topology (T0 or not) on ``n`` labelled points."""
    from .errors import TooLarge

    if n > 4:
        raise TooLarge(f"topologies on {n} points are not enumerated here")
    full = (1 << n) - 1
    middle = [m for m in range(1, full)]
    out = []
    for pick in range(1 << len(middle)):
        fam = {0, full} | {middle[k] for k in range(len(middle)) if pick >> k & 1}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            out.append(frozenset(fam))
    return out


def _family(t) -> frozenset[PointSet]:
    return t.opens if isinstance(t, FiniteSpace) else frozenset(t)


def class_containment_check(s, tau2, n: Optional[int] = None) -> bool:
    """Inclusion of topologies is reverse inclusion of their convergence classes.

    Either argument may be a :class:`FiniteSpace` or a raw family of open
    masks (which need not be T0).  Both directions are tested.
    """
    t1, t2 = _family(s), _family(tau2)
    if n is None:
        n = s.n if isinstance(s, FiniteSpace) else max(t1).bit_length()
    classes = []
    for fam in (t1, t2):
        classes.append(tuple(_top_targets(n, fam, c) for c in range(1, 1 << n)))
    c1, c2 = classes

    def sub(a, b):
        return all(x & ~y == 0 for x, y in zip(a, b))

    return (t1 <= t2) == sub(c2, c1) and (t2 <= t1) == sub(c1, c2)


# -- where the induced topology sits ------------------------------------------


def sample_nets(space: CatalogSpace, fuel: int) -> list[CatalogNet]:
    pts = space.sample_points(fuel)
    nets = [CatalogNet(space, (), ConstantTail(p)) for p in pts]
    nets += [CatalogNet(space, (p,), PeriodicTail((p, q))) for p, q in zip(pts, pts[1:])]
    nets += [CatalogNet(space, (), MonotoneTail(g)) for g in space.generators]
    return nets


@dataclass
class LocationReport:
    space: str
    si_in_induced: bool
    induced_in_tau: Optional[bool]
    equalities: dict = field(default_factory=dict)
    entries: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.si_in_induced and self.induced_in_tau is not False

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "passed": self.passed,
            "si_in_induced": self.si_in_induced,
            "induced_in_tau": self.induced_in_tau,
            "equalities": self.equalities,
            "entries": self.entries,
        }


def location_check(space, fuel: int = 8) -> LocationReport:
    """SI-opens are open for the Irr-convergence class; those are open when the space allows it."""
    from .derived import si_derivative
    from .irr import check_properties

    if fuel < 1:
        raise FuelExhausted("no fuel to sample nets", None)
    if isinstance(space, FiniteSpace):
        tau = space.opens
        tau_si = si_derivative(space).opens
        tau_i = induced_topology(space, irr_class(space)).opens
        props = check_properties(space)
        applies = props.irr_plus_continuous or props.si_continuous
        return LocationReport(
            repr(space), tau_si <= tau_i, (tau_i <= tau) if applies else None,
            {"si_equals_induced": tau_si == tau_i, "induced_equals_tau": tau_i == tau},
        )

    props = space.properties()
    applies = props.irr_plus_continuous or props.si_continuous
    nets = sample_nets(space, fuel)
    pts = space.sample_points(fuel)
    cands = list(space.sample_opens(fuel)) + list(space.location_candidates(fuel))
    si_ok, tau_ok = True, True
    entries = []
    for u in cands:
        in_tau = space.is_open(u)
        si = in_tau and space.is_si_open(u)
        witness = None
        for net in nets:
            for x in pts:
                if space.mem(x, u) and irr_converges(space, net, x) and not eventually_in(space, net, u):
                    witness = (net, x)
                    break
            if witness:
                break
        in_induced = witness is None
        si_ok &= in_induced or not si
        tau_ok &= in_tau or not in_induced
        entries.append({
            "set": u.describe(), "open": in_tau, "si_open": si, "induced_open": in_induced,
            "witness": None if witness is None else {
                "net": witness[0].describe(), "irr_converges_to": space.format_point(witness[1]),
            },
        })
    return LocationReport(space.name, si_ok, tau_ok if applies else None, {}, entries)


# -- the way-below relation seen through convergence ----------------------------


@dataclass
class WayBelowCharReport:
    x: str
    y: str
    way_below: bool
    forward_checked: int = 0
    forward_failures: list = field(default_factory=list)
    converse_applicable: bool = False
    converse_checked: int = 0
    converse_failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.forward_failures and not self.converse_failures

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["passed"] = self.passed
        return out


def _catalog_all_lower(space: CatalogSpace, net: CatalogNet, y) -> bool:
    """Is every point way-below ``y`` an eventual lower bound of ``net``?"""
    vals = net.cofinal_values()
    if vals is not None:
        g = space.meet(vals)
        if g is None:
            return space.dd_set(y).finite_members == ()
        verdict = space.dd_within(y, glb=g)
    else:
        low = space.gen_lower_bounds(net.tail.generator)
        if low is None:
            return space.dd_set(y).finite_members == ()
        pts = space.sample_points(8)
        strict = lambda z: space.leq(z, low.sup) and z != low.sup  # noqa: E731
        if any(low.contains(z) != strict(z) for z in pts):
            raise UndecidableTail(f"lower bounds {low.label} are not a strict down-set")
        verdict = space.dd_within(y, below=low.sup)
    if verdict is None:
        raise UndecidableTail(f"{space.name} cannot compare its way-below set")
    return verdict


def way_below_convergence_char(space, x, y, fuel: int = 8) -> WayBelowCharReport:
    """Irr-limits are eventually above everything way-below them, and conversely
    on Irr-continuous or SI-minus-continuous spaces."""
    if fuel < 1:
        raise FuelExhausted("no fuel to sample nets", None)
    if isinstance(space, FiniteSpace):
        from .irr import check_properties, tables

        t = tables(space)
        cls = irr_class(space)
        props = check_properties(space)
        rep = WayBelowCharReport(space.names[x], space.names[y], bool(t.uu[x] >> y & 1))
        rep.converse_applicable = props.irr_continuous or props.si_minus_continuous
        for c in range(1, space.full + 1):
            if rep.way_below and cls.converges(c, y):
                rep.forward_checked += 1
                if c & ~space.up[x]:
                    rep.forward_failures.append(space.labels(c))
            if rep.converse_applicable:
                rep.converse_checked += 1
                lower = all(c & ~space.up[w] == 0 for w in bits(t.dd[y]))
                if lower and not cls.converges(c, y):
                    rep.converse_failures.append(space.labels(c))
        return rep

    props = space.properties()
    rep = WayBelowCharReport(space.format_point(x), space.format_point(y), space.way_below(x, y))
    rep.converse_applicable = props.irr_continuous or props.si_minus_continuous
    for net in sample_nets(space, fuel):
        if rep.way_below and irr_converges(space, net, y):
            rep.forward_checked += 1
            if not eventual_lower_bound(space, net, x):
                rep.forward_failures.append(net.describe())
        if rep.converse_applicable:
            rep.converse_checked += 1
            if _catalog_all_lower(space, net, y) and not irr_converges(space, net, y):
                rep.converse_failures.append(net.describe())
    return rep
