"""Command-line front end.

Exit codes: 0 success, 1 violations (or a forbidden counterexample, or a
failed check), 2 usage errors.  Messages go to standard error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, TextIO

from . import catalog as cat
from .convergence import (
    CatalogNet, TailClass, irr_converges, net_from_json, tail_class_of,
    topological_converges,
)
from .core import FiniteSpace, Poset, alexandroff, from_opens, load_space
from .derived import si_iterate
from .dot import catalog_dot, finite_dot
from .errors import (
    BadQuery, FuelExhausted, NotT0, OracleMismatch, TopologyError, UndecidableTail,
    UnknownSpace,
)
from .irr import check_properties, way_below_irr
from .lab import catalog_suite, count_posets, enumerate_posets, find_counterexample, run_implication_suite

DEFAULT_FUEL = 8

FINITE_EXAMPLES = {
    "chain2": lambda: alexandroff(Poset.chain(["a", "b"])),
    "chain3": lambda: alexandroff(Poset.chain(["a", "b", "c"])),
    "v-poset": lambda: alexandroff(Poset.from_pairs(["bot", "a", "b"], [("bot", "a"), ("bot", "b")])),
    "sierpinski": lambda: from_opens(["0", "1"], [["1"]]),
    "discrete2": lambda: from_opens(["0", "1"], [["0"], ["1"]]),
}


class UsageError(Exception):
    pass


def resolve_space(ref: str):
    """A catalog name, a built-in finite example, or a JSON file."""
    if ref in FINITE_EXAMPLES:
        return FINITE_EXAMPLES[ref]()
    try:
        return cat.catalog_get(ref)
    except UnknownSpace:
        pass
    if os.path.exists(ref):
        try:
            return load_space(ref)
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            raise UsageError(f"{ref}: {exc}") from None
    known = ", ".join(sorted(cat.CATALOG) + sorted(FINITE_EXAMPLES))
    raise UsageError(f"unknown space {ref!r} (known: {known}; or give a JSON file)")


def _point(space, text: str):
    try:
        if isinstance(space, FiniteSpace):
            return space.index(text)
        return space.parse_point(text)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad point {text!r}: {exc}") from None


def _space_name(space) -> str:
    return repr(space) if isinstance(space, FiniteSpace) else space.name


def _dot(space, fuel: int) -> str:
    return finite_dot(space) if isinstance(space, FiniteSpace) else catalog_dot(space, fuel)


def _emit(out: TextIO, fmt: str, data: dict, text: str, space=None, fuel: int = DEFAULT_FUEL) -> None:
    if fmt == "json":
        out.write(json.dumps(data, indent=2, default=str) + "\n")
    elif fmt == "dot":
        if space is None:
            raise UsageError("this command has no graph to render")
        out.write(_dot(space, fuel))
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _flag_text(flags: dict, witnesses: dict) -> str:
    lines = []
    for k, v in flags.items():
        extra = f"   (witness: {witnesses[k]})" if k in witnesses else ""
        lines.append(f"{k}: {'true' if v else 'false'}{extra}")
    return "\n".join(lines)


# -- commands -----------------------------------------------------------------------


def cmd_space_info(a, out) -> int:
    space = resolve_space(a.space)
    rep = check_properties(space) if isinstance(space, FiniteSpace) else space.properties()
    data = rep.to_json()
    data["space"] = space.to_json() if isinstance(space, FiniteSpace) else space.describe()
    _emit(out, a.format, data, f"{_space_name(space)}\n" + _flag_text(rep.flags(), rep.witnesses),
          space, a.fuel)
    return 0


def cmd_check(a, out) -> int:
    space = resolve_space(a.space)
    if isinstance(space, FiniteSpace):
        from .lab import check_space

        violations = check_space(space)
        data = {"space": space.to_json(), "violations": violations, "passed": not violations}
        text = "pass" if not violations else "\n".join(
            f"violated {v['implication']}: {v['anchor']}" for v in violations)
        _emit(out, a.format, data, text, space, a.fuel)
        return 1 if violations else 0
    try:
        rep = cat.validate_catalog(space.cli_name, a.fuel)
    except OracleMismatch as exc:
        _emit(out, a.format, {"space": space.name, "passed": False, "error": str(exc)},
              f"FAIL {exc}", space, a.fuel)
        return 1
    data = rep.to_json()
    lines = [f"{space.name}: pass at fuel {a.fuel}"]
    lines += [f"  {k}: {v}" for k, v in rep.counts.items()]
    lines += [f"  not SI-open: {k} (witness {v})" for k, v in rep.si_failures.items()]
    _emit(out, a.format, data, "\n".join(lines), space, a.fuel)
    return 0


def cmd_derive_si(a, out) -> int:
    space = resolve_space(a.space)
    try:
        trace = si_iterate(space, a.fuel)
        code = 0
    except FuelExhausted as exc:
        trace = exc.partial
        code = 1
        print(f"error: {exc}", file=a.err)
    data = trace.to_json()
    lines = [f"gamma: {trace.gamma}", f"fixpoint reached: {str(trace.fixpoint_reached).lower()}"]
    for k, st in enumerate(trace.stages):
        lines.append(f"stage {k}: {_space_name(st)}")
    _emit(out, a.format, data, "\n".join(lines), trace.fixpoint, a.fuel)
    return code


def cmd_way_below(a, out) -> int:
    space = resolve_space(a.space)
    x, y = _point(space, a.x), _point(space, a.y)
    if isinstance(space, FiniteSpace):
        verdict = way_below_irr(space, x, y)
    else:
        verdict = cat.catalog_way_below(space, x, y)
    data = {"space": _space_name(space), "x": a.x, "y": a.y, "way_below": verdict}
    _emit(out, a.format, data, "true" if verdict else "false", space, a.fuel)
    return 0


def cmd_converge(a, out) -> int:
    space = resolve_space(a.space)
    try:
        with open(a.net) as fh:
            spec = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read net {a.net}: {exc}") from None
    net = net_from_json(space, spec)
    x = _point(space, a.to)
    top = topological_converges(space, net, x)
    irr = irr_converges(space, net, x)
    data = {"space": _space_name(space), "to": a.to, "topological": top, "irr": irr}
    if not isinstance(net, CatalogNet):
        tc = net if isinstance(net, TailClass) else tail_class_of(net)
        data["tail_class"] = tc.labels()
    text = f"topological: {str(top).lower()}\nirr: {str(irr).lower()}"
    _emit(out, a.format, data, text, space, a.fuel)
    return 0


def cmd_enumerate(a, out) -> int:
    counts = {n: count_posets(n, a.up_to_iso) for n in range(1, a.max_points + 1)}
    data: dict = {"up_to_iso": a.up_to_iso, "counts": {str(k): v for k, v in counts.items()}}
    if a.list:
        data["posets"] = [p.to_json() for n in counts for p in enumerate_posets(n, a.up_to_iso)]
    text = "\n".join(f"n={n}: {c}" for n, c in counts.items())
    _emit(out, a.format, data, text)
    return 0


def cmd_suite(a, out) -> int:
    res = catalog_suite(a.fuel) if a.catalog else run_implication_suite(a.max_points)
    data = res.to_json()
    text = f"{res.spaces_checked} spaces, {len(res.violations)} violations"
    for v in res.violations[:20]:
        text += f"\nviolated {v['implication']}: {v['anchor']}"
    _emit(out, a.format, data, text)
    return 0 if res.passed else 1


def cmd_counterexample(a, out) -> int:
    s = find_counterexample(a.query, a.max_points)
    data = {"query": a.query, "found": s is not None, "space": None if s is None else s.to_json()}
    text = "none" if s is None else repr(s)
    if a.format == "dot" and s is None:
        raise UsageError("no space to render")
    _emit(out, a.format, data, text, s, a.fuel)
    return 1 if (s is not None and a.forbid) else 0


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--fuel", type=int, default=DEFAULT_FUEL)

    p = argparse.ArgumentParser(prog="irrtopo", description=__doc__.splitlines()[0],
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("space", parents=[common], help="describe a space")
    ssub = sp.add_subparsers(dest="action", required=True)
    info = ssub.add_parser("info", parents=[common], help="property report")
    info.add_argument("space")
    info.set_defaults(func=cmd_space_info)
    alias = sub.add_parser("space-info", parents=[common], help="same as 'space info'")
    alias.add_argument("space")
    alias.set_defaults(func=cmd_space_info)

    c = sub.add_parser("check", parents=[common], help="validate a catalog space or check a finite one")
    c.add_argument("space")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("derive-si", parents=[common], help="iterate the SI derivative")
    d.add_argument("space")
    d.set_defaults(func=cmd_derive_si)

    w = sub.add_parser("way-below", parents=[common], help="decide x << y")
    w.add_argument("space")
    w.add_argument("x")
    w.add_argument("y")
    w.set_defaults(func=cmd_way_below)

    cv = sub.add_parser("converge", parents=[common], help="both convergence verdicts for a net")
    cv.add_argument("space")
    cv.add_argument("--net", required=True)
    cv.add_argument("--to", required=True)
    cv.set_defaults(func=cmd_converge)

    e = sub.add_parser("enumerate", parents=[common], help="count posets")
    e.add_argument("--max-points", type=int, required=True)
    e.add_argument("--up-to-iso", action="store_true")
    e.add_argument("--list", action="store_true", help="include every poset in JSON output")
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("suite", parents=[common], help="run the implication suite")
    s.add_argument("--max-points", type=int, default=5)
    s.add_argument("--catalog", action="store_true")
    s.set_defaults(func=cmd_suite)

    q = sub.add_parser("counterexample", parents=[common], help="search for a space")
    q.add_argument("--query", required=True)
    q.add_argument("--max-points", type=int, default=4)
    q.add_argument("--forbid", action="store_true", help="exit 1 if a space is found")
    q.set_defaults(func=cmd_counterexample)
    return p


def run(argv: Optional[list[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.fuel < 1:
        print("error: --fuel must be at least 1", file=err)
        return 2
    if getattr(args, "max_points", 1) < 1:
        print("error: --max-points must be at least 1", file=err)
        return 2
    args.err = err
    try:
        return args.func(args, out)
    except (UsageError, UnknownSpace, BadQuery, NotT0, UndecidableTail) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except TopologyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
