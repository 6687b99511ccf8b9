"""Temporal graph data model, setting classes and structural predicates.

Labels are exact :class:`fractions.Fraction` values.  Graphs are immutable;
every constructor goes through :func:`make_graph`, which enforces the
invariants (no self-loops, known endpoints, non-empty positive label sets,
one record per ordered/unordered vertex pair).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = [
    "GraphError",
    "Direction",
    "Flavor",
    "Labeling",
    "Semantics",
    "ProperMode",
    "SettingClass",
    "ALL_SETTINGS",
    "TemporalEdge",
    "TemporalGraph",
    "StaticGraph",
    "parse_label",
    "make_graph",
    "validate_graph",
    "is_simple",
    "is_proper",
    "in_setting",
    "classify",
    "is_subsetting",
    "normalize_labels",
    "snapshot",
    "footprint",
]


class GraphError(ValueError):
    """Error carrying a machine-readable ``code`` (e.g. ``SELF_LOOP``)."""

    def __init__(self, code: str, message: str = ""):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)


class Direction(enum.Enum):
    DIRECTED = "directed"
    UNDIRECTED = "undirected"


class Flavor(enum.Enum):
    STRICT = "strict"
    NONSTRICT = "nonstrict"
    PROPER = "proper"


class Labeling(enum.Enum):
    SIMPLE = "simple"
    MULTI = "multi"


class Semantics(enum.Enum):
    STRICT = "strict"
    NONSTRICT = "nonstrict"

    @classmethod
    def parse(cls, text: "str | Semantics") -> "Semantics":
        if isinstance(text, Semantics):
            return text
        try:
            return cls(text.strip().lower().replace("-", ""))
        except ValueError:
            raise GraphError("BAD_SEMANTICS", f"unknown semantics {text!r}") from None


class ProperMode(enum.Enum):
    # no two distinct edges sharing an endpoint carry a common label
    CLASSIC = "classic"
    # directed only: (u,v,t) and (v,x,t) with x != u may not coexist
    CONSECUTIVE = "consecutive"
    # directed only, literal reading of "x != v": the back-edge (v,u,t) also counts
    CONSECUTIVE_WITH_BACK_EDGE = "consecutive-with-back-edge"


_DIRECTION_ALIASES = {"d": Direction.DIRECTED, "directed": Direction.DIRECTED,
                      "ud": Direction.UNDIRECTED, "u": Direction.UNDIRECTED,
                      "undirected": Direction.UNDIRECTED}


@dataclass(frozen=True)
class SettingClass:
    direction: Direction
    flavor: Flavor
    labeling: Labeling

    @classmethod
    def parse(cls, text: str) -> "SettingClass":
        """Parse ``<direction>.<flavor>.<labeling>``, e.g. ``d.nonstrict.simple``."""
        parts = text.strip().lower().replace("-", "").split(".")
        if len(parts) != 3:
            raise GraphError("BAD_SETTING", f"expected direction.flavor.labeling, got {text!r}")
        try:
            return cls(_DIRECTION_ALIASES[parts[0]], Flavor(parts[1]), Labeling(parts[2]))
        except (KeyError, ValueError):
            raise GraphError("BAD_SETTING", f"unknown setting {text!r}") from None

    @property
    def directed(self) -> bool:
        return self.direction is Direction.DIRECTED

    @property
    def semantics(self) -> Semantics:
        # proper graphs have identical strict and non-strict reachability
        if self.flavor is Flavor.NONSTRICT:
            return Semantics.NONSTRICT
        return Semantics.STRICT

    def __str__(self) -> str:
        return f"{self.direction.value}.{self.flavor.value}.{self.labeling.value}"

    def __lt__(self, other):  # enums are not orderable; sort by text
        return str(self) < str(other)


ALL_SETTINGS: tuple[SettingClass, ...] = tuple(
    SettingClass(d, f, lab) for d in Direction for f in Flavor for lab in Labeling
)


@dataclass(frozen=True)
class TemporalEdge:
    tail: str
    head: str
    labels: frozenset

    def sorted_labels(self) -> list[Fraction]:
        return sorted(self.labels)


@dataclass(frozen=True)
class TemporalGraph:
    directed: bool
    vertices: tuple[str, ...]
    edges: tuple[TemporalEdge, ...]

    def temporal_edges(self) -> Iterator[tuple[str, str, Fraction]]:
        """Yield ``(tail, head, label)`` per stored record (canonical orientation)."""
        for e in self.edges:
            for t in sorted(e.labels):
                yield e.tail, e.head, t

    def arcs_with_labels(self) -> Iterator[tuple[str, str, frozenset]]:
        """Traversable arcs: undirected edges are yielded in both orientations."""
        for e in self.edges:
            yield e.tail, e.head, e.labels
            if not self.directed:
                yield e.head, e.tail, e.labels

    @property
    def temporal_edge_count(self) -> int:
        return sum(len(e.labels) for e in self.edges)

    def labels(self) -> list[Fraction]:
        return sorted({t for e in self.edges for t in e.labels})

    @property
    def lifetime(self) -> int:
        """Number of distinct time labels."""
        return len(self.labels())

    def edge(self, u: str, v: str) -> TemporalEdge | None:
        if not self.directed and v < u:
            u, v = v, u
        for e in self.edges:
            if e.tail == u and e.head == v:
                return e
        return None


@dataclass(frozen=True)
class StaticGraph:
    directed: bool
    vertices: tuple[str, ...]
    arcs: frozenset

    @classmethod
    def build(cls, directed: bool, vertices: Iterable[str], arcs: Iterable[tuple[str, str]]) -> "StaticGraph":
        verts = set(vertices)
        out = set()
        for u, v in arcs:
            if u == v:
                raise GraphError("SELF_LOOP", f"arc ({u},{v})")
            if u not in verts or v not in verts:
                raise GraphError("UNKNOWN_VERTEX", f"arc ({u},{v})")
            if not directed and v < u:
                u, v = v, u
            out.add((u, v))
        return cls(directed, tuple(sorted(verts)), frozenset(out))

    def sorted_arcs(self) -> list[tuple[str, str]]:
        return sorted(self.arcs)

    def successors(self) -> dict[str, set[str]]:
        succ: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.arcs:
            succ[u].add(v)
            if not self.directed:
                succ[v].add(u)
        return succ

    def degree(self) -> dict[str, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for u, v in self.arcs:
            deg[u] += 1
            deg[v] += 1
        return deg


def parse_label(raw) -> Fraction:
    """Accept ``int``, ``Fraction``, ``[num, den]`` or a ``"n/d"`` string."""
    if isinstance(raw, bool):
        raise GraphError("BAD_LABEL", f"boolean label {raw!r}")
    if isinstance(raw, Fraction):
        value = raw
    elif isinstance(raw, int):
        value = Fraction(raw)
    elif isinstance(raw, (list, tuple)) and len(raw) == 2 and all(
        isinstance(x, int) and not isinstance(x, bool) for x in raw
    ):
        if raw[1] == 0:
            raise GraphError("BAD_LABEL", f"zero denominator in {list(raw)}")
        value = Fraction(raw[0], raw[1])
    elif isinstance(raw, str):
        try:
            value = Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise GraphError("BAD_LABEL", f"cannot parse label {raw!r}") from None
    else:
        raise GraphError("BAD_LABEL", f"unsupported label {raw!r}")
    if value <= 0:
        raise GraphError("NONPOSITIVE_LABEL", f"label {value} must be > 0")
    return value


def make_graph(directed: bool, vertices: Iterable[str], edges: Iterable) -> TemporalGraph:
    """Build a validated graph from ``(tail, head, labels)`` triples.

    Duplicate records for the same pair are merged by uniting label sets;
    undirected records are stored with the smaller endpoint as tail.
    """
    verts: list[str] = []
    seen = set()
    for v in vertices:
        if not isinstance(v, str) or not v:
            raise GraphError("BAD_VERTEX", f"vertex ids must be non-empty strings, got {v!r}")
        if v not in seen:
            seen.add(v)
            verts.append(v)
    merged: dict[tuple[str, str], set[Fraction]] = {}
    for tail, head, labels in edges:
        if tail == head:
            raise GraphError("SELF_LOOP", f"edge ({tail},{head})")
        for v in (tail, head):
            if v not in seen:
                raise GraphError("UNKNOWN_VERTEX", f"edge ({tail},{head}) uses unknown vertex {v!r}")
        if isinstance(labels, (int, Fraction, str)) and not isinstance(labels, bool):
            labels = [labels]
        parsed = {parse_label(t) for t in labels}
        if not parsed:
            raise GraphError("EMPTY_LABEL_SET", f"edge ({tail},{head}) has no labels")
        key = (tail, head) if directed or tail < head else (head, tail)
        merged.setdefault(key, set()).update(parsed)
    edges_out = tuple(
        TemporalEdge(u, v, frozenset(ls)) for (u, v), ls in sorted(merged.items())
    )
    return TemporalGraph(bool(directed), tuple(sorted(verts)), edges_out)


def validate_graph(raw: Mapping) -> TemporalGraph:
    """Validate a parsed JSON graph description (see :mod:`tempograph.serialize`)."""
    if not isinstance(raw, Mapping):
        raise GraphError("MALFORMED", "graph description must be an object")
    try:
        directed = raw["directed"]
        vertices = raw["vertices"]
        edges = raw.get("edges", [])
    except KeyError as exc:
        raise GraphError("MALFORMED", f"missing field {exc.args[0]!r}") from None
    if not isinstance(directed, bool) or not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphError("MALFORMED", "expected directed: bool, vertices: list, edges: list")
    triples = []
    for i, rec in enumerate(edges):
        if not isinstance(rec, Mapping) or not {"from", "to", "labels"} <= rec.keys():
            raise GraphError("MALFORMED", f"edge #{i} needs from/to/labels")
        if not isinstance(rec["labels"], list):
            raise GraphError("MALFORMED", f"edge #{i}: labels must be a list")
        triples.append((rec["from"], rec["to"], rec["labels"]))
    return make_graph(directed, vertices, triples)


def is_simple(g: TemporalGraph) -> bool:
    return all(len(e.labels) == 1 for e in g.edges)


def is_proper(g: TemporalGraph, mode: ProperMode = ProperMode.CLASSIC) -> bool:
    mode = ProperMode(mode)
    if mode is ProperMode.CLASSIC:
        seen: dict[tuple[str, Fraction], int] = {}
        for idx, e in enumerate(g.edges):
            for t in e.labels:
                for v in (e.tail, e.head):
                    other = seen.setdefault((v, t), idx)
                    if other != idx:
                        return False
        return True
    if not g.directed:
        raise GraphError("MODE_UNSUPPORTED", f"{mode.value} properness needs a directed graph")
    out_at: dict[tuple[str, Fraction], set[str]] = {}
    for e in g.edges:
        for t in e.labels:
            out_at.setdefault((e.tail, t), set()).add(e.head)
    for e in g.edges:
        for t in e.labels:
            heads = out_at.get((e.head, t), set())
            if mode is ProperMode.CONSECUTIVE:
                heads = heads - {e.tail}
            if heads:
                return False
    return True


def _setting_proper_mode(directed: bool) -> ProperMode:
    return ProperMode.CONSECUTIVE if directed else ProperMode.CLASSIC


def in_setting(g: TemporalGraph, setting: SettingClass, proper_mode: ProperMode | None = None) -> bool:
    """Structural membership: direction, simplicity and (for PROPER) properness."""
    if g.directed != setting.directed:
        return False
    if setting.labeling is Labeling.SIMPLE and not is_simple(g):
        return False
    if setting.flavor is Flavor.PROPER:
        return is_proper(g, proper_mode or _setting_proper_mode(g.directed))
    return True


def classify(g: TemporalGraph) -> set[SettingClass]:
    return {s for s in ALL_SETTINGS if in_setting(g, s)}


def is_subsetting(a: SettingClass, b: SettingClass) -> bool:
    """True iff every graph of class ``a`` is structurally a graph of class ``b``."""
    if a.direction is not b.direction:
        return False
    if a.labeling is Labeling.MULTI and b.labeling is Labeling.SIMPLE:
        return False
    return a.flavor is b.flavor or a.flavor is Flavor.PROPER


def normalize_labels(g: TemporalGraph) -> TemporalGraph:
    """Replace labels by their rank among all distinct labels (1..m)."""
    rank = {t: Fraction(i) for i, t in enumerate(g.labels(), start=1)}
    edges = tuple(
        TemporalEdge(e.tail, e.head, frozenset(rank[t] for t in e.labels)) for e in g.edges
    )
    return TemporalGraph(g.directed, g.vertices, edges)


def snapshot(g: TemporalGraph, t) -> StaticGraph:
    t = Fraction(t)
    arcs = frozenset((e.tail, e.head) for e in g.edges if t in e.labels)
    return StaticGraph(g.directed, g.vertices, arcs)


def footprint(g: TemporalGraph) -> StaticGraph:
    return StaticGraph(g.directed, g.vertices, frozenset((e.tail, e.head) for e in g.edges))
