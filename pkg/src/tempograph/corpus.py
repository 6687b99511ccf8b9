"""Named witness graphs loaded from ``fixtures/<name>/``.

Each fixture directory holds ``graph.json`` (temporal graph),
``expected_r.json`` (its reachability graph) and ``claim.json`` (which
setting it lives in and which one it separates from).  The expected
reachability graph is recomputed and compared on every load.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .core import GraphError, Semantics, SettingClass, StaticGraph, TemporalGraph, in_setting, is_simple, snapshot
from .reachability import reachability_graph
from .serialize import graph_from_dict, static_from_dict

FIXTURE_ROOT = Path(__file__).resolve().parent / "fixtures"
PROVENANCES = ("PAPER_EXACT", "PAPER_RECONSTRUCTED")


@dataclass(frozen=True)
class Claim:
    belongs_to: SettingClass
    separates_from: SettingClass
    notion: str  # support | reach | induced-reach
    exhaustive: bool
    max_labels_per_edge: int = 1
    max_distinct_labels: int | None = None
    node_budget: int = 5_000_000
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "belongsTo": str(self.belongs_to),
            "separatesFrom": str(self.separates_from),
            "notion": self.notion,
            "exhaustive": self.exhaustive,
            "note": self.note,
        }


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: TemporalGraph
    semantics: Semantics
    expected_r: StaticGraph
    claim: Claim
    provenance: str


def _read_json(path: Path):
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise GraphError("UNKNOWN_FIXTURE", f"missing {path.name} for fixture {path.parent.name!r}") from None


def list_fixture_names(root: Path = FIXTURE_ROOT) -> list[str]:
    return sorted(p.name for p in root.iterdir() if (p / "graph.json").is_file())


@lru_cache(maxsize=None)
def get_fixture(name: str, root: Path = FIXTURE_ROOT) -> Fixture:
    d = root / name
    if not re.fullmatch(r"[A-Za-z0-9_]+", name) or not (d / "graph.json").is_file():
        raise GraphError("UNKNOWN_FIXTURE", name)
    graph = graph_from_dict(_read_json(d / "graph.json"))
    expected = static_from_dict(_read_json(d / "expected_r.json"))
    raw = _read_json(d / "claim.json")
    bounds = raw.get("bounds") or {}
    claim = Claim(
        belongs_to=SettingClass.parse(raw["belongsTo"]),
        separates_from=SettingClass.parse(raw["separatesFrom"]),
        notion=raw["notion"],
        exhaustive=bool(raw.get("exhaustive", True)),
        max_labels_per_edge=bounds.get("maxLabelsPerEdge", 1),
        max_distinct_labels=bounds.get("maxDistinctLabels"),
        node_budget=bounds.get("nodeBudget", 5_000_000),
        note=raw.get("note", ""),
    )
    semantics = Semantics.parse(raw["semantics"])
    provenance = raw["provenance"]
    if provenance not in PROVENANCES:
        raise GraphError("MALFORMED", f"unknown provenance {provenance!r}")
    recomputed = reachability_graph(graph, semantics)
    if recomputed.arcs != expected.arcs or set(recomputed.vertices) != set(expected.vertices):
        raise GraphError("FIXTURE_CORRUPT", f"{name}: stored reachability graph does not match the graph")
    if not in_setting(graph, claim.belongs_to):
        raise GraphError("FIXTURE_CORRUPT", f"{name}: graph is not in {claim.belongs_to}")
    return Fixture(name, graph, semantics, expected, claim, provenance)


def list_fixtures(root: Path = FIXTURE_ROOT) -> list[tuple[str, Claim, str]]:
    out = []
    for name in list_fixture_names(root):
        fx = get_fixture(name, root)
        out.append((name, fx.claim, fx.provenance))
    return out


# -- structural checks for fixtures too large to search ------------------------

def _reaches(r: StaticGraph):
    arcs = r.arcs
    return lambda u, v: (u, v) in arcs


def crab_checks(fx: Fixture) -> dict[str, bool]:
    g, r = fx.graph, fx.expected_r
    reach = _reaches(r)
    V = g.vertices
    lam = {frozenset((e.tail, e.head)): min(e.labels) for e in g.edges}

    def L(u, v):
        return lam[frozenset((u, v))]

    others = [e for e in lam if e not in (frozenset(("b", "l1")), frozenset(("c", "r1")))]
    late = [L("b", "l3"), L("c", "r3"), L("b", "l4"), L("c", "r4"), L("b", "l6"), L("c", "r6")]
    fp = {frozenset((e.tail, e.head)) for e in g.edges}
    mutual = {frozenset((u, v)) for u in V for v in V if u < v and reach(u, v) and reach(v, u)}
    return {
        "simple": is_simple(g),
        "only_l1_r1_b_c_reach_a": {u for u in V if u != "a" and reach(u, "a")} == {"l1", "r1", "b", "c"},
        "l3_reaches_l4_not_back": reach("l3", "l4") and not reach("l4", "l3"),
        "r3_reaches_r4_not_back": reach("r3", "r4") and not reach("r4", "r3"),
        "r3_r4_reach_b": reach("r3", "b") and reach("r4", "b"),
        "l3_l4_reach_c": reach("l3", "c") and reach("l4", "c"),
        "l1_reaches_all_but_r1": {v for v in V if reach("l1", v)} == set(V) - {"l1", "r1"},
        "r1_reaches_all_but_l1": {v for v in V if reach("r1", v)} == set(V) - {"l1", "r1"},
        "all_but_r6_reach_l6": {u for u in V if reach(u, "l6")} == set(V) - {"l6", "r6"},
        "all_but_l6_reach_r6": {u for u in V if reach(u, "r6")} == set(V) - {"l6", "r6"},
        "left_right_unrelated": all(not reach(u, v) and not reach(v, u)
                                    for u in ("l3", "l4") for v in ("r3", "r4")),
        "four_extra_mutual_pairs": mutual - fp == {frozenset(p) for p in
                                                   [("c", "l3"), ("c", "l4"), ("b", "r3"), ("b", "r4")]},
        "poset_first_edges": all(L("b", "l1") < lam[e] and L("c", "r1") < lam[e] for e in others),
        "poset_a_edges_before_late": max(L("b", "a"), L("c", "a")) < min(late),
        "poset_3_before_4": L("b", "l3") < L("b", "l4") and L("c", "r3") < L("c", "r4"),
        "poset_4_before_bc": max(L("b", "l4"), L("c", "r4")) < L("b", "c"),
        "poset_6_last": min(L("b", "l6"), L("c", "r6")) > max(
            lam[e] for e in lam if e not in (frozenset(("b", "l6")), frozenset(("c", "r6"))))
    }


def _split_path_vertex(v: str):
    """``h[alpha>beta]`` -> (alpha, beta); the split point is the ``>``
    that leaves balanced brackets on both sides."""
    if not (v.startswith(("h[", "s[")) and v.endswith("]")):
        return None
    inner = v[2:-1]
    depth = 0
    for k, ch in enumerate(inner):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == ">" and depth == 0:
            return inner[:k], inner[k + 1:]
    return None


def alien_checks(fx: Fixture) -> dict[str, bool]:
    g, r = fx.graph, fx.expected_r
    reach = _reaches(r)
    C = ["x", "y", "z"]
    B = [f"b_{i}" for i in C]
    D = [f"d_{i}" for i in C]
    triples = []
    for v in g.vertices:
        split = _split_path_vertex(v)
        if split:
            triples.append((split[0], v, split[1]))

    def strongly_connected(t):
        s = snapshot(g, Fraction(t))
        succ = s.successors()
        for u in C:
            seen, stack = {u}, [u]
            while stack:
                w = stack.pop()
                for x in succ.get(w, ()):
                    if x not in seen:
                        seen.add(x)
                        stack.append(x)
            if not set(C) <= seen:
                return False
        return True

    helpers_ok = all(
        reach(h, beta) and not reach(h, alpha) and reach(alpha, h) and not reach(alpha, beta) and reach(beta, alpha)
        for alpha, h, beta in triples
    )
    return {
        "simple": is_simple(g),
        "helper_count": sum(1 for _, h, _ in triples if h.startswith("h[")) == 42,
        "centers_reach_all_b_d": all(reach(i, v) for i in C for v in B + D),
        "a_reach_centers_b_d": all(reach(f"a_{i}", v) for i in C for v in C + B + D),
        "c_reach_centers_d": all(reach(f"c_{i}", v) for i in C for v in C + D),
        "c_not_reach_b": not any(reach(f"c_{i}", v) for i in C for v in B),
        "helper_triples": helpers_ok,
        "centers_scc_at_2_and_5": strongly_connected(2) and strongly_connected(5),
    }


_CHECKS = {"crab": crab_checks, "alien": alien_checks}


def property_checks(name: str) -> dict[str, bool]:
    fx = get_fixture(name)
    if name not in _CHECKS:
        raise GraphError("UNKNOWN_FIXTURE", f"no structural checks for {name!r}")
    return _CHECKS[name](fx)
