"""Exhaustive checking of implications between space properties.

Finite T0-spaces are enumerated as posets (each one carries its Alexandroff
topology).  For every space a vocabulary of boolean flags is computed
lazily, and every :class:`ImplicationSpec` is evaluated on it.
"""

from __future__ import annotations

import re
import time
from collections.abc import Mapping
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterator, Optional

from .core import FiniteSpace, Poset, alexandroff, bits, interior
from .errors import BadQuery, OracleMismatch, TooLarge
from .irr import FLAGS, check_properties, tables

MAX_ENUM = 6
LABELS = "abcdefghijklmnop"


# -- enumeration ----------------------------------------------------------------


def _extensions(ups: list[int], downs: list[int], k: int) -> Iterator[tuple[int, int]]:
    """Pairs (below, above) of existing points for a new point k.

    ``below`` is a down-set, ``above`` an up-set, and every point of ``below``
    already lies under every point of ``above``, so transitivity holds.
    """
    full = (1 << k) - 1
    downsets = []
    for b in range(full + 1):
        if all(downs[i] & ~b == 0 for i in bits(b)):
            downsets.append(b)
    upsets = [a for a in range(full + 1) if all(ups[i] & ~a == 0 for i in bits(a))]
    for b in downsets:
        common = full
        for i in bits(b):
            common &= ups[i]
        for a in upsets:
            if a & b == 0 and a & ~common == 0:
                yield b, a


def _labeled(n: int) -> Iterator[tuple[list[int], list[int]]]:
    if n == 0:
        yield [], []
        return
    for ups, downs in _labeled(n - 1):
        k = n - 1
        for below, above in _extensions(ups, downs, k):
            new_ups = [u | (1 << k) if below >> i & 1 else u for i, u in enumerate(ups)]
            new_downs = [d | (1 << k) if above >> i & 1 else d for i, d in enumerate(downs)]
            new_ups.append(above | 1 << k)
            new_downs.append(below | 1 << k)
            yield new_ups, new_downs


def _canonical(ups: list[int]) -> tuple:
    n = len(ups)
    key = [(bin(ups[i]).count("1"), sum(1 for u in ups if u >> i & 1)) for i in range(n)]
    blocks: dict = {}
    for i in range(n):
        blocks.setdefault(key[i], []).append(i)
    order = sorted(blocks)
    best = None

    def rec(pos: int, perm: list[int]):
        nonlocal best
        if pos == len(order):
            inv = {p: r for r, p in enumerate(perm)}
            code = tuple(sorted((inv[i], inv[j]) for i in range(n) for j in bits(ups[i])))
            if best is None or code < best:
                best = code
            return
        for arr in permutations(blocks[order[pos]]):
            rec(pos + 1, perm + list(arr))

    rec(0, [])
    return best


def enumerate_posets(n: int, up_to_iso: bool = False) -> Iterator[Poset]:
    """All partial orders on ``n`` labelled points, or one per isomorphism type."""
    if n > MAX_ENUM:
        raise TooLarge(f"enumeration is limited to {MAX_ENUM} points")
    if n < 0:
        raise ValueError("n must be nonnegative")
    names = tuple(LABELS[:n])
    seen = set()
    for ups, _ in _labeled(n):
        if up_to_iso:
            code = _canonical(ups)
            if code in seen:
                continue
            seen.add(code)
        le = tuple(tuple(bool(ups[i] >> j & 1) for j in range(n)) for i in range(n))
        yield Poset(names, le)


def count_posets(n: int, up_to_iso: bool = False) -> int:
    return sum(1 for _ in enumerate_posets(n, up_to_iso))


def enumerate_spaces(max_n: int, min_n: int = 1) -> Iterator[FiniteSpace]:
    for n in range(min_n, max_n + 1):
        for p in enumerate_posets(n):
            yield alexandroff(p)


# -- expressions ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(<->|↔|->|→|&&|\|\||[()∧∨¬~!&|]|[A-Za-z_][A-Za-z0-9_]*)")
_WORDS = {"and": "&", "or": "|", "not": "!", "implies": "->", "iff": "<->"}
_SYMBOLS = {"∧": "&", "&&": "&", "∨": "|", "||": "|", "¬": "!", "~": "!",
            "→": "->", "↔": "<->"}


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or not m.group(1):
            raise BadQuery(f"cannot parse {text[pos:]!r}")
        tok = m.group(1)
        tok = _SYMBOLS.get(tok, _WORDS.get(tok.lower(), tok))
        out.append(tok)
        pos = m.end()
    return out


@dataclass(frozen=True)
class Expr:
    op: str
    args: tuple = ()
    name: str = ""

    def evaluate(self, flags: Mapping) -> bool:
        if self.op == "var":
            return bool(flags[self.name])
        if self.op == "const":
            return self.name == "true"
        if self.op == "!":
            return not self.args[0].evaluate(flags)
        if self.op == "&":
            return all(a.evaluate(flags) for a in self.args)
        if self.op == "|":
            return any(a.evaluate(flags) for a in self.args)
        a = self.args[0].evaluate(flags)
        if self.op == "->":
            return not a or self.args[1].evaluate(flags)
        return a == self.args[1].evaluate(flags)

    def names(self) -> set[str]:
        if self.op == "var":
            return {self.name}
        out: set[str] = set()
        for a in self.args:
            out |= a.names()
        return out


def parse_expr(text: str, vocabulary=None) -> Expr:
    """Boolean formula over flag names.

    Connectives, loosest first: ``<->``, ``->`` (right associative), ``|``,
    ``&``, ``!``.  Unicode and word spellings are accepted.
    """
    vocab = set(VOCABULARY if vocabulary is None else vocabulary)
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise BadQuery(f"expected {expected or 'a term'} in {text!r}")
        pos += 1
        return tok

    def iff():
        left = imp()
        while peek() == "<->":
            take()
            left = Expr("<->", (left, imp()))
        return left

    def imp():
        left = disj()
        if peek() == "->":
            take()
            return Expr("->", (left, imp()))
        return left

    def disj():
        parts = [conj()]
        while peek() == "|":
            take()
            parts.append(conj())
        return parts[0] if len(parts) == 1 else Expr("|", tuple(parts))

    def conj():
        parts = [unary()]
        while peek() == "&":
            take()
            parts.append(unary())
        return parts[0] if len(parts) == 1 else Expr("&", tuple(parts))

    def unary():
        tok = peek()
        if tok == "!":
            take()
            return Expr("!", (unary(),))
        if tok == "(":
            take()
            e = iff()
            take(")")
            return e
        tok = take()
        if tok.lower() in ("true", "false"):
            return Expr("const", name=tok.lower())
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            raise BadQuery(f"unexpected {tok!r} in {text!r}")
        if tok not in vocab:
            raise BadQuery(f"unknown flag {tok!r}")
        return Expr("var", name=tok)

    if not toks:
        raise BadQuery("empty expression")
    e = iff()
    if pos != len(toks):
        raise BadQuery(f"trailing input {' '.join(toks[pos:])!r} in {text!r}")
    return e


# -- per-space flag vocabulary ----------------------------------------------------

RELATION_FLAGS = (
    "way_below_in_order",
    "way_below_monotone",
    "si_interior_way_below",
    "m_sup",
    "interpolation",
    "dd_irr_approx",
    "si_c_space",
)
CONVERGENCE_FLAGS = (
    "kelley_constants",
    "kelley_subnets",
    "kelley_divergence",
    "kelley_iterated",
    "irr_topological",
    "si_in_induced",
    "induced_in_tau",
    "induced_is_tau",
    "convergence_coincide",
)
VOCABULARY = FLAGS + RELATION_FLAGS + CONVERGENCE_FLAGS


def _relation_flags(s: FiniteSpace) -> dict[str, bool]:
    from .derived import si_derivative

    t = tables(s)
    uu, dd, n = t.uu, t.dd, s.n
    out = {}
    out["way_below_in_order"] = all(uu[x] & ~s.up[x] == 0 for x in range(n))
    # u <= x << y <= z  =>  u << z
    out["way_below_monotone"] = all(
        uu[u] & s.up[y] == s.up[y]
        for x in range(n) for y in bits(uu[x]) for u in bits(s.down[x])
    )
    d = si_derivative(s)
    out["si_interior_way_below"] = all(
        uu[y] >> x & 1 for y in range(n) for x in bits(interior(d, s.up[y]))
    )
    m_sup = True
    for x in range(n):
        m = 0
        for y in bits(dd[x]):
            m |= dd[y]
        m_sup &= m != 0 and t.sup(m) == x
    out["m_sup"] = m_sup
    out["interpolation"] = all(uu[z] & dd[x] for x in range(n) for z in bits(dd[x]))
    out["dd_irr_approx"] = all(
        any(e & ~dd[x] == 0 and s.leq(x, top) for e, top in t.irr_plus) for x in range(n)
    )
    out["si_c_space"] = check_properties(d).c_space if d is not s else check_properties(s).c_space
    return out


def _convergence_flags(s: FiniteSpace, budget: int) -> dict[str, bool]:
    from .convergence import (
        induced_topology, irr_class, kelley_check, location_check, topological_class,
    )

    out = {}
    for axiom, key in (("Constants", "kelley_constants"), ("Subnets", "kelley_subnets"),
                       ("Divergence", "kelley_divergence"), ("IteratedLimits", "kelley_iterated")):
        out[key] = kelley_check(s, axiom, budget).passed
    irr = irr_class(s)
    induced = induced_topology(s, irr)
    out["irr_topological"] = topological_class(induced).targets == irr.targets
    loc = location_check(s)
    out["si_in_induced"] = loc.si_in_induced
    out["induced_in_tau"] = bool(loc.induced_in_tau)
    out["induced_is_tau"] = induced == s
    out["convergence_coincide"] = irr.targets == topological_class(s).targets
    return out


class SpaceFlags(Mapping):
    """Lazily computed flag values for one finite space."""

    def __init__(self, space: FiniteSpace, budget: int = 3):
        self.space = space
        self.budget = budget
        self._values: dict[str, bool] = {}
        self.report = None

    def _load(self, key: str) -> None:
        if key in FLAGS:
            self.report = check_properties(self.space)
            self._values.update(self.report.flags())
        elif key in RELATION_FLAGS:
            self._values.update(_relation_flags(self.space))
        elif key in CONVERGENCE_FLAGS:
            self._values.update(_convergence_flags(self.space, self.budget))
        else:
            raise KeyError(key)

    def __getitem__(self, key: str) -> bool:
        if key not in self._values:
            self._load(key)
        return self._values[key]

    def __iter__(self):
        return iter(VOCABULARY)

    def __len__(self) -> int:
        return len(VOCABULARY)


# -- implications as data -----------------------------------------------------------


@dataclass(frozen=True)
class ImplicationSpec:
    name: str
    hypothesis: str
    conclusion: str
    anchor: str

    def compiled(self) -> tuple[Expr, Expr]:
        return parse_expr(self.hypothesis), parse_expr(self.conclusion)


IMPLICATIONS: tuple[ImplicationSpec, ...] = (
    ImplicationSpec("way-below-below", "true", "way_below_in_order",
                    "Irr-way-below refines the specialization order"),
    ImplicationSpec("way-below-sandwich", "true", "way_below_monotone",
                    "Irr-way-below is stable under enlarging the gap"),
    ImplicationSpec("si-interior-way-below", "true", "si_interior_way_below",
                    "points in the SI-interior of up(y) are Irr-way-above y"),
    ImplicationSpec("sobriety-chain", "sober", "bounded_sober",
                    "sobriety implies bounded sobriety"),
    ImplicationSpec("bounded-sobriety-chain", "bounded_sober", "sup_sober",
                    "bounded sobriety implies sup-sobriety"),
    ImplicationSpec("si-minus-irr", "si_minus_continuous", "irr_continuous",
                    "SI-minus-continuity implies Irr-continuity"),
    ImplicationSpec("approximation-by-m", "irr_continuous", "m_sup",
                    "Irr-continuous points are suprema of their second-order approximants"),
    ImplicationSpec("interpolation-sup-sober", "irr_continuous & sup_sober", "interpolation",
                    "interpolation for Irr-continuous sup-sober spaces"),
    ImplicationSpec("interpolation-si-minus", "si_minus_continuous", "interpolation",
                    "interpolation for SI-minus-continuous spaces"),
    ImplicationSpec("star-gives-si-minus", "irr_continuous & star", "si_minus_continuous",
                    "star property upgrades Irr-continuity to SI-minus-continuity"),
    ImplicationSpec("si-minus-gives-star", "si_minus_continuous & sup_sober", "star",
                    "SI-minus-continuous sup-sober spaces have the star property"),
    ImplicationSpec("si-c-space-irr-plus", "si_c_space", "irr_plus_continuous",
                    "a C-space derived topology forces Irr-plus-continuity"),
    ImplicationSpec("irr-plus-c-space", "irr_plus_continuous & sup_sober", "c_space",
                    "Irr-plus-continuous sup-sober spaces are C-spaces"),
    ImplicationSpec("c-space-equivalence", "sup_sober", "irr_plus_continuous <-> c_space",
                    "under sup-sobriety Irr-plus-continuity is the C-space property"),
    ImplicationSpec("si-continuity-equivalence", "sup_sober",
                    "si_continuous <-> irr_plus_continuous",
                    "under sup-sobriety SI-continuity and Irr-plus-continuity agree"),
    ImplicationSpec("sup-sober-si-infinity", "true", "sup_sober <-> si_infty",
                    "sup-sobriety is stability of the SI derivative"),
    ImplicationSpec("way-below-set-irreducible", "sup_sober & dd_irr_approx", "irr_continuous",
                    "an irreducible approximating subset makes the way-below set irreducible"),
    ImplicationSpec("constants-and-subnets", "true", "kelley_constants & kelley_subnets",
                    "Irr-convergence satisfies the constants and subnets axioms"),
    ImplicationSpec("divergence", "irr_continuous | si_minus_continuous", "kelley_divergence",
                    "Irr-convergence satisfies the divergence axiom under continuity"),
    ImplicationSpec("iterated-limits-irr", "irr_continuous & sup_sober", "kelley_iterated",
                    "Irr-convergence satisfies iterated limits on Irr-continuous sup-sober spaces"),
    ImplicationSpec("iterated-limits-si-minus", "si_minus_continuous", "kelley_iterated",
                    "Irr-convergence satisfies iterated limits on SI-minus-continuous spaces"),
    ImplicationSpec("iterated-limits-continuity", "sup_sober & star & kelley_iterated",
                    "irr_continuous & si_minus_continuous",
                    "iterated limits force both continuity notions"),
    ImplicationSpec("kelley-topological",
                    "kelley_constants & kelley_subnets & kelley_divergence & kelley_iterated",
                    "irr_topological", "the four axioms make a convergence class topological"),
    ImplicationSpec("location-lower", "irr_topological", "si_in_induced",
                    "the induced topology refines the SI topology"),
    ImplicationSpec("location-upper", "irr_topological & (irr_plus_continuous | si_continuous)",
                    "induced_in_tau", "the induced topology is coarser than the original"),
    ImplicationSpec("main-topological", "irr_continuous & sup_sober", "irr_topological",
                    "Irr-continuous sup-sober spaces have topological Irr-convergence"),
    ImplicationSpec("main-recovers-topology", "irr_continuous & sup_sober & oplus",
                    "induced_is_tau", "with the oplus property the original topology is induced"),
    ImplicationSpec("main-converse", "sup_sober & star & irr_topological",
                    "irr_continuous & si_minus_continuous",
                    "topological Irr-convergence plus star gives continuity"),
    ImplicationSpec("main-characterisation", "sup_sober",
                    "si_minus_continuous <-> (star & irr_topological)",
                    "SI-minus-continuity characterised by star and topological convergence"),
    ImplicationSpec("main-characterisation-topology", "sup_sober & si_minus_continuous & oplus",
                    "induced_is_tau", "SI-minus-continuous oplus spaces recover their topology"),
    ImplicationSpec("convergences-coincide", "sup_sober & c_space", "convergence_coincide",
                    "topological and Irr-convergence coincide on sup-sober C-spaces"),
    ImplicationSpec("finite-sober", "true", "sober", "finite spaces are sober"),
    ImplicationSpec("finite-c-space", "true", "c_space", "finite spaces are C-spaces"),
    ImplicationSpec("finite-si-minus", "true", "si_minus_continuous",
                    "finite spaces are SI-minus-continuous"),
    ImplicationSpec("finite-star", "true", "star", "finite spaces have the star property"),
    ImplicationSpec("finite-oplus", "true", "oplus", "finite spaces have the oplus property"),
)


# -- suites ---------------------------------------------------------------------------


@dataclass
class SuiteResult:
    spaces_checked: int = 0
    violations: list = field(default_factory=list)
    per_size: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "spaces_checked": self.spaces_checked,
            "passed": self.passed,
            "violations": self.violations,
            "per_size": {str(k): v for k, v in self.per_size.items()},
            "seconds": round(self.seconds, 3),
        }


def _describe(s: FiniteSpace) -> dict:
    return s.to_json()


def check_space(s: FiniteSpace, specs=IMPLICATIONS, budget: int = 3) -> list[dict]:
    flags = SpaceFlags(s, budget)
    out = []
    for spec in specs:
        hyp, concl = spec.compiled()
        if hyp.evaluate(flags) and not concl.evaluate(flags):
            used = sorted(hyp.names() | concl.names())
            out.append({
                "space": _describe(s),
                "implication": spec.name,
                "anchor": spec.anchor,
                "witness": {k: flags[k] for k in used},
            })
    return out


def run_implication_suite(max_n: int, budget: int = 3,
                          specs=IMPLICATIONS, progress: Optional[Callable] = None) -> SuiteResult:
    """Evaluate every implication on every labelled space with at most ``max_n`` points."""
    start = time.perf_counter()
    res = SuiteResult()
    for n in range(1, max_n + 1):
        count = 0
        for p in enumerate_posets(n):
            s = alexandroff(p)
            res.violations.extend(check_space(s, specs, budget))
            count += 1
        res.per_size[n] = count
        res.spaces_checked += count
        if progress:
            progress(n, count)
    res.seconds = time.perf_counter() - start
    return res


def find_counterexample(query: str, max_n: int, budget: int = 3) -> Optional[FiniteSpace]:
    """First enumerated space on which ``query`` holds."""
    expr = parse_expr(query)
    for s in enumerate_spaces(max_n):
        if expr.evaluate(SpaceFlags(s, budget)):
            return s
    return None


# -- catalog ----------------------------------------------------------------------------

CATALOG_CLAIMS: dict[str, dict[str, bool]] = {
    "cofinite-nat": {"irr_continuous": True, "sup_sober": True, "oplus": False,
                     "c_space": False},
    "poset-t": {"c_space": True, "irr_continuous": False},
    "rational-scott": {"irr_continuous": True, "sup_sober": True, "sober": False},
    "omega-plus-one": {},
}


def catalog_suite(fuel: int = 8) -> SuiteResult:
    """Frozen claims plus validation, location, interpolation and convergence checks."""
    from .catalog import PRIMARY_NAMES, catalog_get, validate_catalog
    from .convergence import (
        irr_converges, location_check, sample_nets, topological_converges,
        way_below_convergence_char,
    )
    from .derived import si_iterate

    start = time.perf_counter()
    res = SuiteResult()

    def fail(name: str, check: str, witness) -> None:
        res.violations.append({"space": name, "implication": check, "anchor": check,
                               "witness": witness})

    for name in PRIMARY_NAMES:
        sp = catalog_get(name)
        res.spaces_checked += 1
        try:
            validate_catalog(name, fuel)
        except OracleMismatch as exc:
            fail(name, "validation", str(exc))
        flags = sp.properties().flags()
        for flag, want in CATALOG_CLAIMS[name].items():
            if flags[flag] != want:
                fail(name, f"claim {flag}", flags[flag])
        if name == "poset-t":
            members = sp.dd_set("a").finite_members
            if members != ("bot",):
                fail(name, "way-below set of a", members)
        if name == "omega-plus-one":
            trace = si_iterate(sp, fuel)
            scott = catalog_get("omega-plus-one-scott")
            if trace.gamma != 1 or not trace.stages[1].same_topology(scott):
                fail(name, "SI derivative is the Scott topology", trace.gamma)
        loc = location_check(sp, fuel)
        if not loc.passed:
            fail(name, "location", loc.to_json())

        pts = sp.sample_points(fuel)
        if (flags["irr_continuous"] and flags["sup_sober"]) or flags["si_minus_continuous"]:
            for x in pts:
                for z in pts:
                    if sp.way_below(z, x):
                        y = sp.interpolant(z, x, pts)
                        if y is None:
                            fail(name, "interpolation", [str(z), str(x)])
        for x in pts:
            for y in pts:
                rep = way_below_convergence_char(sp, x, y, fuel)
                if not rep.passed:
                    fail(name, "way-below through convergence", rep.to_json())
        if flags["sup_sober"] and flags["c_space"]:
            for net in sample_nets(sp, fuel):
                for x in pts:
                    if topological_converges(sp, net, x) != irr_converges(sp, net, x):
                        fail(name, "convergences coincide", [net.describe(), str(x)])
    res.per_size["catalog"] = res.spaces_checked
    res.seconds = time.perf_counter() - start
    return res
