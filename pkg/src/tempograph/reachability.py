"""Temporal reachability under strict and non-strict semantics."""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import groupby

from .core import GraphError, Semantics, StaticGraph, TemporalGraph

#: arrival "time" of the source, strictly below every (positive) label
BEFORE_ALL = Fraction(0)

DEFAULT_SUPPORT_BOUND = 10


def _label_groups(g: TemporalGraph) -> list[tuple[Fraction, list[tuple[str, str]]]]:
    entries = sorted((t, u, v) for u, v, labels in g.arcs_with_labels() for t in labels)
    return [(t, [(u, v) for _, u, v in grp]) for t, grp in groupby(entries, key=lambda x: x[0])]


def _arrivals(groups, source: str, semantics: Semantics) -> dict[str, Fraction]:
    arrival = {source: BEFORE_ALL}
    strict = semantics is Semantics.STRICT
    for t, arcs in groups:
        if strict:
            fresh = [v for u, v in arcs if u in arrival and arrival[u] < t and v not in arrival]
            for v in fresh:
                arrival[v] = t
            continue
        # non-strict: close over the equal-label arcs until nothing changes
        changed = True
        while changed:
            changed = False
            for u, v in arcs:
                if u in arrival and v not in arrival:
                    arrival[v] = t
                    changed = True
    return arrival


def earliest_arrival(g: TemporalGraph, source: str, semantics=Semantics.STRICT) -> dict[str, Fraction | None]:
    """Earliest arrival label per vertex; ``None`` marks unreachable vertices.

    The source itself maps to :data:`BEFORE_ALL`.
    """
    if source not in g.vertices:
        raise GraphError("UNKNOWN_VERTEX", f"source {source!r}")
    arrival = _arrivals(_label_groups(g), source, Semantics.parse(semantics))
    return {v: arrival.get(v) for v in g.vertices}


def reachability_graph(g: TemporalGraph, semantics=Semantics.STRICT) -> StaticGraph:
    semantics = Semantics.parse(semantics)
    groups = _label_groups(g)
    arcs = set()
    for u in g.vertices:
        arcs.update((u, v) for v in _arrivals(groups, u, semantics) if v != u)
    return StaticGraph(True, g.vertices, frozenset(arcs))


def is_temporally_connected(g: TemporalGraph, semantics=Semantics.STRICT) -> bool:
    n = len(g.vertices)
    return len(reachability_graph(g, semantics).arcs) == n * (n - 1)


def _out_arcs(g: TemporalGraph) -> dict[str, list[tuple[str, list[Fraction]]]]:
    out: dict[str, list] = defaultdict(list)
    for u, v, labels in g.arcs_with_labels():
        out[u].append((v, sorted(labels)))
    for u in out:
        out[u].sort()
    return out


def enumerate_path_supports(g: TemporalGraph, semantics=Semantics.STRICT,
                            max_vertices: int = DEFAULT_SUPPORT_BOUND) -> set[tuple[str, ...]]:
    """All vertex sequences that are the support of some temporal path.

    Paths are vertex-simple.  Along a fixed support the earliest feasible
    label is always the best choice, so one greedy label per step suffices.
    """
    if len(g.vertices) > max_vertices:
        raise GraphError("SIZE_BOUND_EXCEEDED", f"{len(g.vertices)} vertices > {max_vertices}")
    strict = Semantics.parse(semantics) is Semantics.STRICT
    out = _out_arcs(g)
    supports: set[tuple[str, ...]] = set()

    def extend(path: list[str], last: Fraction):
        for v, labels in out.get(path[-1], ()):
            if v in path:
                continue
            t = next((x for x in labels if (x > last if strict else x >= last)), None)
            if t is None:
                continue
            path.append(v)
            supports.add(tuple(path))
            extend(path, t)
            path.pop()

    for u in g.vertices:
        extend([u], BEFORE_ALL)
    return supports


def count_paths_by_support(g: TemporalGraph, semantics=Semantics.STRICT,
                           max_vertices: int = DEFAULT_SUPPORT_BOUND) -> dict[tuple[str, ...], int]:
    """Number of temporal paths (label sequences) realising each support."""
    strict = Semantics.parse(semantics) is Semantics.STRICT
    labels_of = {(u, v): sorted(ls) for u, v, ls in g.arcs_with_labels()}
    counts = {}
    for support in enumerate_path_supports(g, semantics, max_vertices):
        # ways[t] = number of label sequences so far ending with label t
        ways = {BEFORE_ALL: 1}
        for u, v in zip(support, support[1:]):
            nxt = {}
            for t in labels_of[(u, v)]:
                nxt[t] = sum(c for s, c in ways.items() if (s < t if strict else s <= t))
            ways = nxt
        counts[support] = sum(ways.values())
    return counts
