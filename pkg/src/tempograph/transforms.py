"""Equivalence-preserving transformations between temporal graph settings.

* :func:`undirected_to_directed` -- doubling, optionally tilted to stay proper
* :func:`support_dilation` -- non-strict -> proper, same path supports
* :func:`reachability_dilation` -- non-strict -> proper via bidirected spanning trees
* :func:`saturate` -- any directed graph -> strict & simple, labels all 1
* :func:`semaphore` -- strict -> proper & simple with auxiliary vertices
* :func:`to_happy` -- composition of the above into proper & simple
"""
from __future__ import annotations

import heapq
from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from .core import (
    Direction,
    Flavor,
    GraphError,
    ProperMode,
    Semantics,
    SettingClass,
    StaticGraph,
    TemporalGraph,
    in_setting,
    is_proper,
    is_simple,
    make_graph,
    normalize_labels,
    snapshot,
)
from .reachability import reachability_graph


@dataclass(frozen=True)
class Condensation:
    components: list[tuple[str, ...]]  # sorted by smallest vertex
    dag_arcs: frozenset  # (i, j) component indices
    order: list[int]  # topological order over component indices

    def component_of(self) -> dict[str, int]:
        return {v: i for i, comp in enumerate(self.components) for v in comp}


@dataclass(frozen=True)
class ColorMap:
    colors: dict  # arc -> color >= 1
    max_color: int


@dataclass
class TransformOutput:
    method: str
    source: TemporalGraph
    graph: TemporalGraph
    embedding: dict[str, str] = field(default_factory=dict)

    def report(self) -> dict:
        g, h = self.source, self.graph
        return {
            "method": self.method,
            "inputEdges": g.temporal_edge_count,
            "outputEdges": h.temporal_edge_count,
            "inputLifetime": g.lifetime,
            "outputLifetime": h.lifetime,
            "proper": is_proper(h, ProperMode.CLASSIC),
            "simple": is_simple(h),
            "embedding": dict(sorted(self.embedding.items())),
        }

    def normalized(self) -> "TransformOutput":
        return TransformOutput(self.method, self.source, normalize_labels(self.graph), self.embedding)


def _identity(g: TemporalGraph) -> dict[str, str]:
    return {v: v for v in g.vertices}


def _require_directed(g: TemporalGraph):
    if not g.directed:
        raise GraphError("NOT_DIRECTED", "this transformation needs a directed graph")


# -- static helpers -----------------------------------------------------------

def scc_condensation(s: StaticGraph) -> Condensation:
    """SCC condensation with a deterministic topological order.

    Kahn's algorithm; among ready components the one holding the
    lexicographically smallest vertex goes first.
    """
    dg = nx.DiGraph()
    dg.add_nodes_from(s.vertices)
    for u, v in s.arcs:
        dg.add_edge(u, v)
        if not s.directed:
            dg.add_edge(v, u)
    components = sorted(tuple(sorted(c)) for c in nx.strongly_connected_components(dg))
    index = {v: i for i, comp in enumerate(components) for v in comp}
    dag = {(index[u], index[v]) for u, v in dg.edges if index[u] != index[v]}
    indeg = [0] * len(components)
    succ = defaultdict(list)
    for i, j in dag:
        indeg[j] += 1
        succ[i].append(j)
    ready = [(components[i][0], i) for i in range(len(components)) if indeg[i] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        _, i = heapq.heappop(ready)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, (components[j][0], j))
    return Condensation(components, frozenset(dag), order)


def greedy_edge_coloring(s: StaticGraph) -> ColorMap:
    """Proper edge colouring with colours from 1: arcs sharing any endpoint differ.

    Greedy in sorted arc order, so at most 2*maxdeg - 1 colours.
    """
    used = defaultdict(set)
    colors = {}
    for u, v in s.sorted_arcs():
        c = 1
        while c in used[u] or c in used[v]:
            c += 1
        colors[(u, v)] = c
        used[u].add(c)
        used[v].add(c)
    return ColorMap(colors, max(colors.values(), default=0))


def _weak_components(s: StaticGraph) -> list[StaticGraph]:
    """Weakly connected components that carry at least one arc."""
    ug = nx.Graph()
    ug.add_edges_from(s.arcs)
    comps = sorted(tuple(sorted(c)) for c in nx.connected_components(ug))
    out = []
    for comp in comps:
        members = set(comp)
        arcs = frozenset(a for a in s.arcs if a[0] in members)
        out.append(StaticGraph(s.directed, comp, arcs))
    return out


def spanning_tree_labeling(component: StaticGraph, base=0) -> list[tuple[str, str, Fraction]]:
    """Label a bidirected BFS spanning tree so that the root is a pivot.

    The root is the smallest vertex.  Upward arcs are labelled deepest
    first, then downward arcs shallowest first; every label exceeds ``base``
    and all labels are distinct.
    """
    base = Fraction(base)
    verts = list(component.vertices)
    if not verts:
        return []
    nbrs = {v: set() for v in verts}
    for u, v in component.arcs:
        nbrs[u].add(v)
        nbrs[v].add(u)
    root = verts[0]
    depth = {root: 0}
    parent = {}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(nbrs[u]):
            if w not in depth:
                depth[w] = depth[u] + 1
                parent[w] = u
                queue.append(w)
    if len(depth) != len(verts):
        raise GraphError("NOT_CONNECTED", "component is not connected")
    children = sorted(parent, key=lambda w: (depth[w], w))
    arcs = []
    t = base
    for w in reversed(children):
        t += 1
        arcs.append((w, parent[w], t))
    for w in children:
        t += 1
        arcs.append((parent[w], w, t))
    return arcs


# -- transformations ----------------------------------------------------------

def undirected_to_directed(g: TemporalGraph, tilt: bool = False) -> TransformOutput:
    """Replace each undirected edge by two opposing arcs with the same labels.

    With ``tilt`` the arc from the smaller endpoint gets ``t - eps`` and the
    other ``t + eps``; this keeps a proper input proper.  Tilting a
    non-proper graph can create new strict paths, so it is refused.
    """
    if g.directed:
        raise GraphError("NOT_UNDIRECTED", "doubling needs an undirected graph")
    if tilt and not is_proper(g, ProperMode.CLASSIC):
        raise GraphError("TILT_REQUIRES_PROPER", "tilting is only reachability-safe on proper graphs")
    labels = g.labels()
    gaps = [b - a for a, b in zip(labels, labels[1:])]
    eps = min(gaps + labels[:1], default=Fraction(1)) / 3
    edges = []
    for e in g.edges:
        if tilt:
            edges.append((e.tail, e.head, [t - eps for t in e.labels]))
            edges.append((e.head, e.tail, [t + eps for t in e.labels]))
        else:
            edges.append((e.tail, e.head, e.labels))
            edges.append((e.head, e.tail, e.labels))
    h = make_graph(True, g.vertices, edges)
    return TransformOutput("doubling", g, h, _identity(g))


def _snapshot_layout(g: TemporalGraph, place_component):
    """Shared skeleton of both dilations.

    Walks snapshots in label order, weak components in vertex order and SCCs
    in topological order.  Arcs entering a component get fresh distinct
    labels just before the component's own block, which ``place_component``
    fills; returns the output label sets.
    """
    out: dict[tuple[str, str], set[Fraction]] = defaultdict(set)
    pos = Fraction(0)
    for t in g.labels():
        for weak in _weak_components(snapshot(g, t)):
            cond = scc_condensation(weak)
            comp_of = cond.component_of()
            incoming = defaultdict(list)
            for u, v in weak.sorted_arcs():
                if comp_of[u] != comp_of[v]:
                    incoming[comp_of[v]].append((u, v))
            for ci in cond.order:
                for arc in incoming[ci]:
                    pos += 1
                    out[arc].add(pos)
                members = set(cond.components[ci])
                inner = StaticGraph(True, cond.components[ci],
                                    frozenset(a for a in weak.arcs if a[0] in members and a[1] in members))
                if inner.arcs:
                    pos = place_component(inner, pos, out)
    return out


def support_dilation(g: TemporalGraph) -> TransformOutput:
    """Make a directed graph proper while keeping every path support.

    Inside an SCC of size m every arc gets the block ``pos+1 .. pos+m-1``
    (m-1 bounds the longest path), tilted by ``colour * eps``.
    """
    _require_directed(g)

    def dilate(inner: StaticGraph, pos: Fraction, out) -> Fraction:
        k = len(inner.vertices) - 1
        coloring = greedy_edge_coloring(inner)
        eps = Fraction(1, 2 * coloring.max_color + 2)
        for arc in inner.sorted_arcs():
            shift = coloring.colors[arc] * eps
            out[arc].update(pos + i + shift for i in range(1, k + 1))
        return pos + k

    labels = _snapshot_layout(g, dilate)
    h = make_graph(True, g.vertices, [(u, v, ls) for (u, v), ls in labels.items()])
    return TransformOutput("support-dilation", g, h, _identity(g))


def reachability_dilation(g: TemporalGraph) -> TransformOutput:
    """Proper directed graph whose strict reachability equals the non-strict one of ``g``.

    Each SCC of a snapshot (each connected component for undirected input)
    becomes a bidirected spanning tree with one distinct label per arc.
    """
    def tree(inner: StaticGraph, pos: Fraction, out) -> Fraction:
        for u, v, t in spanning_tree_labeling(inner, pos):
            out[(u, v)].add(t)
            pos = t
        return pos

    if g.directed:
        labels = _snapshot_layout(g, tree)
    else:
        labels = defaultdict(set)
        pos = Fraction(0)
        for t in g.labels():
            for comp in _weak_components(snapshot(g, t)):
                pos = tree(comp, pos, labels)
    h = make_graph(True, g.vertices, [(u, v, ls) for (u, v), ls in labels.items()])
    return TransformOutput("reachability-dilation", g, h, _identity(g))


def saturate(g: TemporalGraph, semantics=Semantics.NONSTRICT) -> TransformOutput:
    """Footprint := reachability graph, every arc labelled 1."""
    _require_directed(g)
    r = reachability_graph(g, semantics)
    h = make_graph(True, g.vertices, [(u, v, [1]) for u, v in r.sorted_arcs()])
    return TransformOutput("saturation", g, h, _identity(g))


def _label_unit(g: TemporalGraph) -> Fraction:
    labels = g.labels()
    gaps = [b - a for a, b in zip(labels, labels[1:])]
    return min(gaps + labels[:1], default=Fraction(1))


def _fresh_name(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def semaphore(g: TemporalGraph, epsilon=None) -> TransformOutput:
    """Subdivide every temporal edge ``(u,v,t)`` through a fresh vertex.

    The halves get ``t - c*eps`` and ``t + c*eps`` where ``c`` is the colour
    of the footprint arc.  Interpreted under strict semantics; the result
    is simple and proper, and reachability among the original vertices is
    unchanged.
    """
    _require_directed(g)
    fp = StaticGraph(True, g.vertices, frozenset((e.tail, e.head) for e in g.edges))
    coloring = greedy_edge_coloring(fp)
    unit = _label_unit(g)
    if epsilon is None:
        eps = unit / (2 * coloring.max_color + 2)
    else:
        eps = Fraction(epsilon)
        if not 0 < eps < unit / (2 * max(coloring.max_color, 1)):
            raise GraphError("BAD_EPSILON", f"epsilon must lie in (0, {unit / (2 * max(coloring.max_color, 1))})")
    taken = set(g.vertices)
    vertices = list(g.vertices)
    edges = []
    for u, v, t in g.temporal_edges():
        shift = coloring.colors[(u, v)] * eps
        w = _fresh_name(f"{u}>{v}@{t}", taken)
        vertices.append(w)
        edges.append((u, w, [t - shift]))
        edges.append((w, v, [t + shift]))
    h = make_graph(True, vertices, edges)
    return TransformOutput("semaphore", g, h, _identity(g))


def to_happy(g: TemporalGraph, setting: SettingClass | str) -> TransformOutput:
    """Any graph of ``setting`` -> induced-reachability equivalent proper & simple digraph."""
    if isinstance(setting, str):
        setting = SettingClass.parse(setting)
    if not in_setting(g, setting):
        raise GraphError("NOT_IN_SETTING", f"graph is not in {setting}")
    h = g
    if setting.flavor is Flavor.NONSTRICT:
        h = reachability_dilation(h).graph
    elif setting.direction is Direction.UNDIRECTED:
        h = undirected_to_directed(h).graph
    out = semaphore(h)
    return TransformOutput("to-happy", g, out.graph, _identity(g))


METHODS = {
    "doubling": lambda g, **kw: undirected_to_directed(g, tilt=kw.get("tilt", False)),
    "support-dilation": lambda g, **kw: support_dilation(g),
    "reachability-dilation": lambda g, **kw: reachability_dilation(g),
    "saturation": lambda g, **kw: saturate(g, kw.get("semantics", Semantics.NONSTRICT)),
    "semaphore": lambda g, **kw: semaphore(g, kw.get("epsilon")),
    "to-happy": lambda g, **kw: to_happy(g, kw["setting"]),
}
