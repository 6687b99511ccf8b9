"""JSON graph format and DOT export.

Graph JSON::

    {"directed": bool, "vertices": [str, ...],
     "edges": [{"from": str, "to": str, "labels": [int | [num, den], ...]}]}

Integral labels are written as plain ints, everything else as ``[num, den]``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .core import GraphError, StaticGraph, TemporalGraph, validate_graph


def label_to_json(t: Fraction):
    t = Fraction(t)
    return t.numerator if t.denominator == 1 else [t.numerator, t.denominator]


def graph_to_dict(g: TemporalGraph) -> dict:
    return {
        "directed": g.directed,
        "vertices": list(g.vertices),
        "edges": [
            {"from": e.tail, "to": e.head, "labels": [label_to_json(t) for t in sorted(e.labels)]}
            for e in g.edges
        ],
    }


def graph_from_dict(raw) -> TemporalGraph:
    return validate_graph(raw)


def dumps_graph(g: TemporalGraph, indent: int | None = 2) -> str:
    return json.dumps(graph_to_dict(g), indent=indent)


def loads_graph(text: str) -> TemporalGraph:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError("MALFORMED", f"invalid JSON: {exc}") from None
    return validate_graph(raw)


def load_graph(path) -> TemporalGraph:
    return loads_graph(Path(path).read_text())


def static_to_dict(s: StaticGraph) -> dict:
    """Adjacency output; arcs sorted lexicographically for stable diffs."""
    return {"directed": s.directed, "vertices": list(s.vertices), "arcs": [list(a) for a in s.sorted_arcs()]}


def static_from_dict(raw) -> StaticGraph:
    if not isinstance(raw, dict) or "arcs" not in raw:
        raise GraphError("MALFORMED", "static graph needs an 'arcs' list")
    arcs = []
    for a in raw["arcs"]:
        if not isinstance(a, (list, tuple)) or len(a) != 2:
            raise GraphError("MALFORMED", f"bad arc {a!r}")
        arcs.append((a[0], a[1]))
    vertices = raw.get("vertices")
    if vertices is None:
        vertices = sorted({v for a in arcs for v in a})
    return StaticGraph.build(raw.get("directed", True), vertices, arcs)


def _quote(v: str) -> str:
    return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _fmt_label(t: Fraction) -> str:
    return str(t.numerator) if t.denominator == 1 else f"{t.numerator}/{t.denominator}"


def to_dot(g: TemporalGraph | StaticGraph, name: str = "G") -> str:
    """DOT text; temporal edges are annotated with their label sets."""
    kw, arrow = ("digraph", "->") if g.directed else ("graph", "--")
    lines = [f"{kw} {_quote(name)} {{"]
    lines += [f"  {_quote(v)};" for v in g.vertices]
    if isinstance(g, TemporalGraph):
        for e in g.edges:
            labels = ",".join(_fmt_label(t) for t in sorted(e.labels))
            lines.append(f"  {_quote(e.tail)} {arrow} {_quote(e.head)} [label={_quote(labels)}];")
    else:
        for u, v in g.sorted_arcs():
            lines.append(f"  {_quote(u)} {arrow} {_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
