"""Graphviz rendering: solid Hasse edges for the order, dashed edges for Irr-way-below."""

from __future__ import annotations

from typing import Callable, Sequence

from .core import FiniteSpace


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render(name: str, labels: Sequence[str], leq: Callable[[int, int], bool],
           way_below: Callable[[int, int], bool]) -> str:
    n = len(labels)
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for lab in labels:
        lines.append(f"  {_quote(lab)};")
    for i in range(n):
        for j in range(n):
            if i == j or not leq(i, j):
                continue
            # Hasse-reduce: skip when some k sits strictly between
            if any(k not in (i, j) and leq(i, k) and leq(k, j) for k in range(n)):
                continue
            lines.append(f'  {_quote(labels[i])} -> {_quote(labels[j])} [style=solid, label="<="];')
    for i in range(n):
        for j in range(n):
            if i != j and way_below(i, j):
                lines.append(
                    f'  {_quote(labels[i])} -> {_quote(labels[j])} '
                    f'[style=dashed, label="<<", constraint=false];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"


def finite_dot(s: FiniteSpace, name: str = "space") -> str:
    from .irr import way_below_irr

    return render(name, s.names, s.leq, lambda i, j: way_below_irr(s, i, j))


def catalog_dot(space, fuel: int = 8) -> str:
    """Graph of the sampled points only."""
    pts = space.sample_points(fuel)
    labels = [space.format_point(p) for p in pts]
    return render(
        space.name, labels,
        lambda i, j: space.leq(pts[i], pts[j]),
        lambda i, j: space.way_below(pts[i], pts[j]),
    )
