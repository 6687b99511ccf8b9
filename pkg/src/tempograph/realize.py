"""Bounded brute-force realizability of reachability graphs.

Given a static digraph and a setting, search for a temporal graph in that
setting whose reachability graph equals the target.  Three facts keep the
search small and exhaustive:

* every footprint arc is itself a reachability arc, so footprints are
  subsets of the target's arcs; an arc ``(u, v)`` with no ``w`` such that
  ``(u, w)`` and ``(w, v)`` are target arcs must be in the footprint;
* adding arcs or labels never removes reachability, so a partial labelling
  whose reachability already leaves the target is pruned;
* only the relative order of labels matters, so leaves whose used labels
  are not exactly ``1..k`` are skipped (each order type is visited once).

Simple settings are therefore decided exactly; multi-labelled settings are
exact only within the label bounds and reported as such.
"""
from __future__ import annotations

import enum
import itertools
import time
from dataclasses import asdict, dataclass, field
from typing import Any

from .core import (
    Flavor,
    GraphError,
    Labeling,
    ProperMode,
    Semantics,
    SettingClass,
    StaticGraph,
    TemporalGraph,
    in_setting,
    is_proper,
    make_graph,
)
from .reachability import enumerate_path_supports, reachability_graph
from .serialize import graph_to_dict, static_to_dict

MAX_TARGET_VERTICES = 8
DEFAULT_BUDGET = 5_000_000


class ResultKind(enum.Enum):
    REALIZABLE = "REALIZABLE"
    UNREALIZABLE_EXACT = "UNREALIZABLE_EXACT"
    UNREALIZABLE_WITHIN_BOUNDS = "UNREALIZABLE_WITHIN_BOUNDS"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"
    SKIPPED_EXHAUSTIVE = "SKIPPED_EXHAUSTIVE"


@dataclass(frozen=True)
class RealizeBounds:
    max_labels_per_edge: int = 1
    max_distinct_labels: int | None = None  # default: B * number of candidate edges
    node_budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.max_labels_per_edge < 1:
            raise GraphError("BAD_BOUNDS", "max_labels_per_edge must be >= 1")
        if self.max_distinct_labels is not None and self.max_distinct_labels < self.max_labels_per_edge:
            raise GraphError("BAD_BOUNDS", "need max_labels_per_edge <= max_distinct_labels")

    def to_dict(self) -> dict:
        return {"maxLabelsPerEdge": self.max_labels_per_edge,
                "maxDistinctLabels": self.max_distinct_labels,
                "nodeBudget": self.node_budget}


@dataclass
class RealizeResult:
    kind: ResultKind
    witness: TemporalGraph | None
    explored_states: int
    elapsed_ms: float = 0.0
    target: StaticGraph | None = None
    setting: SettingClass | None = None
    bounds: RealizeBounds | None = None

    @property
    def realizable(self) -> bool:
        return self.kind is ResultKind.REALIZABLE

    def to_dict(self) -> dict[str, Any]:
        return {
            "target": static_to_dict(self.target) if self.target is not None else None,
            "setting": str(self.setting) if self.setting is not None else None,
            "bounds": self.bounds.to_dict() if self.bounds is not None else None,
            "kind": self.kind.value,
            "witness": graph_to_dict(self.witness) if self.witness is not None else None,
            "exploredStates": self.explored_states,
            "elapsedMs": round(self.elapsed_ms, 3),
        }


class _BudgetExhausted(Exception):
    pass


def reach_masks(n: int, tedges, strict: bool) -> list[int]:
    """``known[v]``: bitmask of vertices that reach ``v`` (``v`` included).

    ``tedges`` are ``(label, u, v)`` triples over vertex indices, sorted by
    label.  Propagates source sets through label groups; for non-strict
    semantics each group is closed to a fixpoint.
    """
    known = [1 << v for v in range(n)]
    i, m = 0, len(tedges)
    while i < m:
        t = tedges[i][0]
        j = i
        while j < m and tedges[j][0] == t:
            j += 1
        if strict:
            snap = known[:]
            for _, u, v in tedges[i:j]:
                known[v] |= snap[u]
        else:
            changed = True
            while changed:
                changed = False
                for _, u, v in tedges[i:j]:
                    merged = known[v] | known[u]
                    if merged != known[v]:
                        known[v] = merged
                        changed = True
        i = j
    return known


def _is_dense(label_sets) -> bool:
    used = set().union(*label_sets) if label_sets else set()
    return not used or used == set(range(1, max(used) + 1))


class _ProperTracker:
    """Incremental properness bookkeeping for the search."""

    def __init__(self, mode: ProperMode):
        self.mode = mode
        self.at: dict[tuple[int, int], list[int]] = {}  # CLASSIC: (vertex, label) -> slot ids
        self.out_at: dict[tuple[int, int], list[int]] = {}
        self.in_at: dict[tuple[int, int], list[int]] = {}

    def conflicts(self, slot: int, arcs, labels) -> bool:
        for t in labels:
            if self.mode is ProperMode.CLASSIC:
                for u, v in arcs:
                    for x in (u, v):
                        if any(s != slot for s in self.at.get((x, t), ())):
                            return True
            else:
                back_ok = self.mode is ProperMode.CONSECUTIVE
                for u, v in arcs:
                    if any(not (back_ok and x == u) for x in self.out_at.get((v, t), ())):
                        return True
                    if any(not (back_ok and y == v) for y in self.in_at.get((u, t), ())):
                        return True
        return False

    def add(self, slot: int, arcs, labels):
        for t in labels:
            for u, v in arcs:
                if self.mode is ProperMode.CLASSIC:
                    for x in {u, v}:
                        self.at.setdefault((x, t), []).append(slot)
                else:
                    self.out_at.setdefault((u, t), []).append(v)
                    self.in_at.setdefault((v, t), []).append(u)

    def remove(self, slot: int, arcs, labels):
        for t in labels:
            for u, v in arcs:
                if self.mode is ProperMode.CLASSIC:
                    for x in {u, v}:
                        self.at[(x, t)].remove(slot)
                else:
                    self.out_at[(u, t)].remove(v)
                    self.in_at[(v, t)].remove(u)


def _order_slots(slots: list[tuple[tuple[int, int], ...]], mandatory: list[bool]) -> list[int]:
    """Put slots that extend already chosen ones into paths first, so that
    forbidden transitive arcs show up as early as possible."""
    remaining = set(range(len(slots)))
    order: list[int] = []

    def score(i):
        s = 0
        for j in order:
            for (a, b) in slots[i]:
                for (c, d) in slots[j]:
                    if (b == c and a != d) or (d == a and b != c):
                        s += 1
        return s

    while remaining:
        best = max(remaining, key=lambda i: (score(i), mandatory[i], [-x for x in slots[i][0]]))
        order.append(best)
        remaining.remove(best)
    return order


def realize(target: StaticGraph, setting: SettingClass | str, bounds: RealizeBounds | None = None,
            proper_mode: ProperMode | None = None) -> RealizeResult:
    """Search for a temporal graph of ``setting`` whose reachability graph is ``target``."""
    if isinstance(setting, str):
        setting = SettingClass.parse(setting)
    bounds = bounds or RealizeBounds()
    if not target.directed:
        target = StaticGraph(True, target.vertices,
                             frozenset(target.arcs | {(v, u) for u, v in target.arcs}))
    n = len(target.vertices)
    if n > MAX_TARGET_VERTICES:
        raise GraphError("SIZE_BOUND_EXCEEDED", f"{n} vertices > {MAX_TARGET_VERTICES}")
    started = time.perf_counter()
    names = list(target.vertices)
    idx = {v: i for i, v in enumerate(names)}
    tarcs = {(idx[u], idx[v]) for u, v in target.arcs}
    tgt = [1 << v for v in range(n)]
    for u, v in tarcs:
        tgt[v] |= 1 << u

    def has_middle(u, v):
        return any((u, w) in tarcs and (w, v) in tarcs for w in range(n) if w not in (u, v))

    if setting.directed:
        slots = [((u, v),) for u, v in sorted(tarcs)]
    else:
        slots = [((u, v), (v, u)) for u, v in sorted(tarcs) if u < v and (v, u) in tarcs]
    mandatory = [any(not has_middle(u, v) for u, v in s) for s in slots]
    uncovered = [a for a in tarcs if not has_middle(*a) and not any(a in s for s in slots)]

    B = bounds.max_labels_per_edge
    if setting.labeling is Labeling.SIMPLE:
        domain_full = [(t,) for t in range(1, len(slots) + 1)]
        exact = True
    else:
        L = bounds.max_distinct_labels or B * max(len(slots), 1)
        domain_full = [c for k in range(1, B + 1) for c in itertools.combinations(range(1, L + 1), k)]
        exact = not slots
    strict = setting.semantics is Semantics.STRICT
    if setting.flavor is Flavor.PROPER:
        mode = proper_mode or (ProperMode.CONSECUTIVE if setting.directed else ProperMode.CLASSIC)
        if not setting.directed and mode is not ProperMode.CLASSIC:
            raise GraphError("MODE_UNSUPPORTED", f"{mode.value} properness needs a directed setting")
        tracker = _ProperTracker(mode)
    else:
        mode, tracker = None, None

    order = _order_slots(slots, mandatory)
    chosen: dict[int, tuple[int, ...]] = {}
    explored = 0
    found: list = []

    def tedges():
        return sorted((t, u, v) for s, labels in chosen.items() for t in labels for u, v in slots[s])

    def dfs(depth: int) -> bool:
        nonlocal explored
        if depth == len(order):
            label_sets = [set(ls) for ls in chosen.values()]
            if not _is_dense(label_sets):
                return False
            known = reach_masks(n, tedges(), strict)
            if known == tgt:
                found.append(dict(chosen))
                return True
            return False
        s = order[depth]
        domain = domain_full if mandatory[s] else [()] + domain_full
        for labels in domain:
            explored += 1
            if explored > bounds.node_budget:
                raise _BudgetExhausted
            if not labels:
                if dfs(depth + 1):
                    return True
                continue
            if tracker is not None and tracker.conflicts(s, slots[s], labels):
                continue
            chosen[s] = labels
            if tracker is not None:
                tracker.add(s, slots[s], labels)
            known = reach_masks(n, tedges(), strict)
            ok = all(k & ~g == 0 for k, g in zip(known, tgt))
            if ok and dfs(depth + 1):
                return True
            if tracker is not None:
                tracker.remove(s, slots[s], labels)
            del chosen[s]
        return False

    def result(kind, witness=None):
        return RealizeResult(kind, witness, explored, (time.perf_counter() - started) * 1000,
                             target, setting, bounds)

    if uncovered:
        # an arc that must be a footprint edge cannot be one (undirected, one-way arc)
        return result(ResultKind.UNREALIZABLE_EXACT)
    try:
        success = dfs(0)
    except _BudgetExhausted:
        return result(ResultKind.BUDGET_EXHAUSTED)
    if not success:
        return result(ResultKind.UNREALIZABLE_EXACT if exact else ResultKind.UNREALIZABLE_WITHIN_BOUNDS)
    assignment = found[0]
    edges = [(names[slots[s][0][0]], names[slots[s][0][1]], labels) for s, labels in sorted(assignment.items())]
    witness = make_graph(setting.directed, names, edges)
    _verify_witness(witness, target, setting, mode)
    return result(ResultKind.REALIZABLE, witness)


def _verify_witness(witness: TemporalGraph, target: StaticGraph, setting: SettingClass, mode):
    r = reachability_graph(witness, setting.semantics)
    if r.arcs != target.arcs:
        raise AssertionError("witness does not reproduce the target reachability graph")
    if not in_setting(witness, setting, mode):
        raise AssertionError("witness violates the setting's structural constraints")


def realize_supports(target: set[tuple[str, ...]], vertices, setting: SettingClass | str,
                     bounds: RealizeBounds | None = None) -> RealizeResult:
    """Like :func:`realize`, but the target is a set of path supports.

    The footprint is forced: it is exactly the set of length-2 supports.
    """
    if isinstance(setting, str):
        setting = SettingClass.parse(setting)
    bounds = bounds or RealizeBounds()
    started = time.perf_counter()
    target = {tuple(s) for s in target}
    arcs = sorted(s for s in target if len(s) == 2)
    if not setting.directed:
        pairs = sorted({tuple(sorted(a)) for a in arcs})
        if any((b, a) not in target for a, b in pairs):
            return RealizeResult(ResultKind.UNREALIZABLE_EXACT, None, 0,
                                 (time.perf_counter() - started) * 1000, None, setting, bounds)
        arcs = pairs
    if setting.labeling is Labeling.SIMPLE:
        domain = [(t,) for t in range(1, len(arcs) + 1)]
        exact = True
    else:
        L = bounds.max_distinct_labels or bounds.max_labels_per_edge * max(len(arcs), 1)
        domain = [c for k in range(1, bounds.max_labels_per_edge + 1)
                  for c in itertools.combinations(range(1, L + 1), k)]
        exact = not arcs
    explored = 0
    for labeling in itertools.product(domain, repeat=len(arcs)):
        explored += 1
        if explored > bounds.node_budget:
            return RealizeResult(ResultKind.BUDGET_EXHAUSTED, None, explored,
                                 (time.perf_counter() - started) * 1000, None, setting, bounds)
        if not _is_dense([set(ls) for ls in labeling]):
            continue
        g = make_graph(setting.directed, vertices, [(u, v, ls) for (u, v), ls in zip(arcs, labeling)])
        if not in_setting(g, setting):
            continue
        if enumerate_path_supports(g, setting.semantics) == target:
            return RealizeResult(ResultKind.REALIZABLE, g, explored,
                                 (time.perf_counter() - started) * 1000, None, setting, bounds)
    kind = ResultKind.UNREALIZABLE_EXACT if exact else ResultKind.UNREALIZABLE_WITHIN_BOUNDS
    return RealizeResult(kind, None, explored, (time.perf_counter() - started) * 1000, None, setting, bounds)


# -- exhaustive checks ----------------------------------------------------------

@dataclass
class InducedCycleReport:
    n: int
    bounds: RealizeBounds
    candidates: int = 0
    refuted_by_extra_arc: int = 0
    refuted_by_missing_arc: int = 0
    transitive_arcs: list = field(default_factory=list)  # (labelling, extra arc) for full cycles
    realize_kind: ResultKind | None = None
    explored_states: int = 0

    @property
    def unrealizable(self) -> bool:
        return (self.refuted_by_extra_arc + self.refuted_by_missing_arc == self.candidates
                and self.realize_kind in (ResultKind.UNREALIZABLE_EXACT, ResultKind.UNREALIZABLE_WITHIN_BOUNDS))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["bounds"] = self.bounds.to_dict()
        d["realize_kind"] = self.realize_kind.value if self.realize_kind else None
        d["unrealizable"] = self.unrealizable
        d["transitive_arcs"] = [[[list(x) for x in lab], list(arc)] for lab, arc in self.transitive_arcs]
        return d


def directed_cycle(n: int) -> StaticGraph:
    names = [f"v{i}" for i in range(1, n + 1)]
    return StaticGraph.build(True, names, [(names[i], names[(i + 1) % n]) for i in range(n)])


def check_no_induced_cycle(n: int, bounds: RealizeBounds | None = None) -> InducedCycleReport:
    """Confirm that no non-strict directed graph has the directed n-cycle as
    reachability graph, by enumerating every labelling of every sub-footprint
    of the cycle and by running :func:`realize`."""
    if n not in (3, 4, 5):
        raise GraphError("SIZE_BOUND_EXCEEDED", "n must be 3, 4 or 5")
    bounds = bounds or RealizeBounds()
    B = bounds.max_labels_per_edge
    if B == 1:
        setting = SettingClass.parse("directed.nonstrict.simple")
        domain = [(t,) for t in range(1, n + 1)]
    else:
        setting = SettingClass.parse("directed.nonstrict.multi")
        L = bounds.max_distinct_labels or B * n
        domain = [c for k in range(1, B + 1) for c in itertools.combinations(range(1, L + 1), k)]
    target = directed_cycle(n)
    cycle = [(i, (i + 1) % n) for i in range(n)]
    tgt = [1 << v for v in range(n)]
    for u, v in cycle:
        tgt[v] |= 1 << u
    report = InducedCycleReport(n, bounds)
    for mask in range(1 << n):
        fp = [a for i, a in enumerate(cycle) if mask >> i & 1]
        for labeling in itertools.product(domain, repeat=len(fp)):
            report.candidates += 1
            tedges = sorted((t, u, v) for (u, v), ls in zip(fp, labeling) for t in ls)
            known = reach_masks(n, tedges, strict=False)
            extra = sorted((u, v) for v in range(n) for u in range(n)
                           if u != v and known[v] >> u & 1 and not tgt[v] >> u & 1)
            if extra:
                report.refuted_by_extra_arc += 1
                if len(fp) == n:
                    arc = (target.vertices[extra[0][0]], target.vertices[extra[0][1]])
                    report.transitive_arcs.append((labeling, arc))
            elif known != tgt:
                report.refuted_by_missing_arc += 1
    res = realize(target, setting, bounds)
    report.realize_kind = res.kind
    report.explored_states = res.explored_states
    return report


def proper_clique_witness(n: int, k: int, node_budget: int = DEFAULT_BUDGET) -> TemporalGraph | None:
    """A classic-proper directed graph on ``n`` vertices with exactly ``k``
    temporal edges whose reachability graph is complete, or ``None``.

    Enumerates temporal-edge sequences sorted by (label, arc) with dense
    labels; arcs sharing a label must be vertex-disjoint.  Vertex symmetry
    lets the first arc be fixed.  In a proper graph, walking the edges in
    label order and merging the tail's knowledge into the head computes
    strict reachability exactly.
    """
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
    full = (1 << n) - 1
    budget = [node_budget]
    chosen: list[tuple[int, int]] = []  # (label, arc index)

    def dfs(known, label, last_arc, layer_mask):
        budget[0] -= 1
        if budget[0] < 0:
            raise _BudgetExhausted
        left = k - len(chosen)
        if left == 0:
            return all(x == full for x in known)
        if sum(1 for x in known if x != full) > left:
            return False
        options = []
        if chosen:
            options += [(label, a, layer_mask) for a in range(last_arc + 1, len(arcs))
                        if not (layer_mask >> arcs[a][0] & 1 or layer_mask >> arcs[a][1] & 1)]
        first_range = range(1) if not chosen else range(len(arcs))
        options += [(label + 1, a, 0) for a in first_range]
        for t, a, mask in options:
            u, v = arcs[a]
            nxt = known[:]
            nxt[v] |= known[u]
            chosen.append((t, a))
            if dfs(nxt, t, a, mask | 1 << u | 1 << v):
                return True
            chosen.pop()
        return False

    try:
        ok = dfs([1 << v for v in range(n)], 0, -1, 0)
    except _BudgetExhausted:
        raise GraphError("BUDGET_EXHAUSTED", f"clique search for n={n}, k={k} exceeded the node budget") from None
    if not ok:
        return None
    names = [f"v{i}" for i in range(1, n + 1)]
    g = make_graph(True, names, [(names[arcs[a][0]], names[arcs[a][1]], [t]) for t, a in chosen])
    if not is_proper(g, ProperMode.CLASSIC) or len(reachability_graph(g).arcs) != n * (n - 1):
        raise AssertionError("clique witness failed re-verification")
    return g


def min_edges_for_clique(n: int, max_edges: int | None = None, node_budget: int = DEFAULT_BUDGET) -> int | None:
    """Fewest temporal edges of a classic-proper directed graph on ``n``
    vertices that is temporally connected; ``None`` if above ``max_edges``."""
    if n not in (3, 4):
        raise GraphError("SIZE_BOUND_EXCEEDED", "n must be 3 or 4")
    limit = max_edges if max_edges is not None else n * (n - 1) * 2
    for k in range(1, limit + 1):
        if proper_clique_witness(n, k, node_budget) is not None:
            return k
    return None


# -- fixture separations ------------------------------------------------------

def verify_separation(name: str) -> dict:
    """Run the bounded search documented in a fixture's claim."""
    from . import corpus

    fx = corpus.get_fixture(name)
    claim = fx.claim
    report = {
        "name": name,
        "belongsTo": str(claim.belongs_to),
        "separatesFrom": str(claim.separates_from),
        "notion": claim.notion,
        "provenance": fx.provenance,
    }
    if not claim.exhaustive:
        checks = corpus.property_checks(name)
        report.update(kind=ResultKind.SKIPPED_EXHAUSTIVE.value, checks=checks,
                      bounds=None, exploredStates=0, passed=all(checks.values()))
        return report
    bounds = RealizeBounds(claim.max_labels_per_edge, claim.max_distinct_labels, claim.node_budget)
    if claim.notion == "support":
        target = enumerate_path_supports(fx.graph, fx.semantics)
        res = realize_supports(target, fx.graph.vertices, claim.separates_from, bounds)
    else:
        res = realize(fx.expected_r, claim.separates_from, bounds)
    report.update(kind=res.kind.value, bounds=bounds.to_dict(), exploredStates=res.explored_states,
                  elapsedMs=round(res.elapsed_ms, 3),
                  passed=res.kind in (ResultKind.UNREALIZABLE_EXACT, ResultKind.UNREALIZABLE_WITHIN_BOUNDS))
    return report
