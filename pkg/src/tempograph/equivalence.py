"""Support, reachability and induced-reachability equivalence checks."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Mapping

from networkx.algorithms.isomorphism import DiGraphMatcher
import networkx as nx

from .core import GraphError, Semantics, StaticGraph, TemporalGraph
from .reachability import DEFAULT_SUPPORT_BOUND, count_paths_by_support, enumerate_path_supports, reachability_graph

ISOMORPHISM_BOUND = 12


class Mode(enum.Enum):
    IDENTITY = "identity"
    ISOMORPHISM = "isomorphism"


@dataclass(frozen=True)
class Verdict:
    """Outcome of an equivalence check.

    Exactly one of ``witness`` (a vertex mapping) and ``counterexample``
    is set.  Counterexamples are tuples: an arc ``(u, v)``, a support
    ``(v1, ..., vk)``, or a tagged tuple such as ``("vertex", v)``.
    """

    equivalent: bool
    witness: dict | None = None
    counterexample: tuple | None = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "equivalent": self.equivalent,
            "witness": self.witness,
            "counterexample": list(self.counterexample) if self.counterexample is not None else None,
            "detail": self.detail,
        }


def _to_nx(d: StaticGraph) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(d.vertices)
    for u, v in d.arcs:
        g.add_edge(u, v)
        if not d.directed:
            g.add_edge(v, u)
    return g


def digraph_isomorphic(d1: StaticGraph, d2: StaticGraph, max_vertices: int = ISOMORPHISM_BOUND) -> dict | None:
    """Arc-preserving bijection ``V(d1) -> V(d2)`` or ``None``."""
    for d in (d1, d2):
        if len(d.vertices) > max_vertices:
            raise GraphError("SIZE_BOUND_EXCEEDED", f"{len(d.vertices)} vertices > {max_vertices}")
    if len(d1.vertices) != len(d2.vertices):
        return None
    matcher = DiGraphMatcher(_to_nx(d1), _to_nx(d2))
    if not matcher.is_isomorphic():
        return None
    return dict(sorted(matcher.mapping.items()))


def _first_diff(a: set, b: set) -> tuple:
    return min(a ^ b, key=lambda x: (len(x), x))


def reachability_equivalent(g1: TemporalGraph, g2: TemporalGraph, s1=Semantics.STRICT, s2=Semantics.STRICT,
                            mode: Mode | str = Mode.IDENTITY) -> Verdict:
    r1, r2 = reachability_graph(g1, s1), reachability_graph(g2, s2)
    mode = Mode(mode)
    if mode is Mode.ISOMORPHISM:
        mapping = digraph_isomorphic(r1, r2)
        if mapping is not None:
            return Verdict(True, witness=mapping)
        return Verdict(False, counterexample=("arc_count", len(r1.arcs), len(r2.arcs)),
                       detail="reachability graphs are not isomorphic")
    if set(r1.vertices) != set(r2.vertices):
        v = min(set(r1.vertices) ^ set(r2.vertices))
        return Verdict(False, counterexample=("vertex", v), detail="vertex sets differ")
    if r1.arcs != r2.arcs:
        arc = _first_diff(set(r1.arcs), set(r2.arcs))
        side = "first" if arc in r1.arcs else "second"
        return Verdict(False, counterexample=arc, detail=f"arc only in the {side} reachability graph")
    return Verdict(True, witness={v: v for v in r1.vertices})


def support_equivalent(g1: TemporalGraph, g2: TemporalGraph, s1=Semantics.STRICT, s2=Semantics.STRICT,
                       count_paths: bool = False, max_vertices: int = DEFAULT_SUPPORT_BOUND) -> Verdict:
    """Same set of path supports; with ``count_paths`` also the same number of
    temporal paths per support (a necessary condition for bijective equivalence)."""
    if set(g1.vertices) != set(g2.vertices):
        v = min(set(g1.vertices) ^ set(g2.vertices))
        return Verdict(False, counterexample=("vertex", v), detail="vertex sets differ")
    if count_paths:
        c1 = count_paths_by_support(g1, s1, max_vertices)
        c2 = count_paths_by_support(g2, s2, max_vertices)
        p1, p2 = set(c1), set(c2)
    else:
        p1 = enumerate_path_supports(g1, s1, max_vertices)
        p2 = enumerate_path_supports(g2, s2, max_vertices)
    if p1 != p2:
        sup = _first_diff(p1, p2)
        side = "first" if sup in p1 else "second"
        return Verdict(False, counterexample=sup, detail=f"support only in the {side} graph")
    if count_paths:
        for sup in sorted(p1, key=lambda x: (len(x), x)):
            if c1[sup] != c2[sup]:
                return Verdict(False, counterexample=sup, detail=f"path counts differ: {c1[sup]} vs {c2[sup]}")
    return Verdict(True, witness={v: v for v in g1.vertices})


def induced_reachability_equivalent(small: TemporalGraph, big: TemporalGraph, s_small=Semantics.STRICT,
                                    s_big=Semantics.STRICT, embedding: Mapping[str, str] | None = None) -> Verdict:
    if embedding is None:
        embedding = {v: v for v in small.vertices}
    embedding = dict(embedding)
    if set(embedding) != set(small.vertices):
        raise GraphError("EMBEDDING_OUT_OF_RANGE", "embedding must be defined on exactly the small graph's vertices")
    if len(set(embedding.values())) != len(embedding):
        raise GraphError("EMBEDDING_NOT_INJECTIVE", "two vertices share an image")
    missing = set(embedding.values()) - set(big.vertices)
    if missing:
        raise GraphError("EMBEDDING_OUT_OF_RANGE", f"images not in the big graph: {sorted(missing)}")
    r_small = reachability_graph(small, s_small).arcs
    r_big = reachability_graph(big, s_big).arcs
    for u in small.vertices:
        for v in small.vertices:
            if u == v:
                continue
            a = (u, v) in r_small
            b = (embedding[u], embedding[v]) in r_big
            if a != b:
                side = "small" if a else "big"
                return Verdict(False, counterexample=(u, v), detail=f"arc only reachable in the {side} graph")
    return Verdict(True, witness=dict(sorted(embedding.items())))
