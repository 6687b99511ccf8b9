"""Write the fixture corpus to src/tempograph/fixtures.

Run from the repository root:  python3 scripts/make_fixtures.py
Each fixture gets graph.json, expected_r.json (recomputed here) and claim.json.
"""
import json
from fractions import Fraction as F
from pathlib import Path

from tempograph.core import make_graph
from tempograph.reachability import reachability_graph
from tempograph.serialize import graph_to_dict, static_to_dict

OUT = Path(__file__).resolve().parent.parent / "src" / "tempograph" / "fixtures"


def directed_triangle():
    g = make_graph(True, "abc", [("a", "b", [1]), ("b", "c", [1]), ("c", "a", [1])])
    claim = {
        "belongsTo": "directed.strict.simple",
        "separatesFrom": "directed.nonstrict.multi",
        "notion": "reach",
        "semantics": "strict",
        "provenance": "PAPER_EXACT",
        "exhaustive": True,
        "bounds": {"maxLabelsPerEdge": 2, "maxDistinctLabels": 4},
        "note": "three arcs, every label 1; strict reachability is the induced 3-cycle",
    }
    return g, claim


def proper_four_cycle():
    g = make_graph(True, "abcd", [("a", "b", [2]), ("b", "c", [1, 5]), ("c", "d", [4]), ("d", "a", [3])])
    claim = {
        "belongsTo": "directed.proper.multi",
        "separatesFrom": "directed.nonstrict.simple",
        "notion": "reach",
        "semantics": "strict",
        "provenance": "PAPER_RECONSTRUCTED",
        "exhaustive": True,
        "bounds": {"maxLabelsPerEdge": 1},
        "note": "a reaches c via b, b reaches d via c, no other transitive arc",
    }
    return g, claim


def nonstrict_simple_triangle():
    g = make_graph(True, "abc", [("a", "b", [1]), ("b", "c", [1]), ("c", "a", [1])])
    claim = {
        "belongsTo": "directed.nonstrict.simple",
        "separatesFrom": "directed.strict.simple",
        "notion": "support",
        "semantics": "nonstrict",
        "provenance": "PAPER_EXACT",
        "exhaustive": True,
        "bounds": {"maxLabelsPerEdge": 1},
        "note": "every 2- and 3-vertex walk around the triangle is a support",
    }
    return g, claim


def ud_strict_cycle4():
    g = make_graph(False, "abcd", [("a", "b", [1]), ("b", "c", [1]), ("c", "d", [1]), ("a", "d", [1])])
    claim = {
        "belongsTo": "undirected.strict.simple",
        "separatesFrom": "directed.nonstrict.multi",
        "notion": "reach",
        "semantics": "strict",
        "provenance": "PAPER_RECONSTRUCTED",
        "exhaustive": True,
        "bounds": {"maxLabelsPerEdge": 2, "maxDistinctLabels": 6},
        "note": "labels reconstructed: all 1, so R is the bidirected 4-cycle without chords",
    }
    return g, claim


def crab():
    edges = [
        ("b", "l1", 1), ("c", "r1", 1), ("b", "a", 2), ("c", "a", 2),
        ("b", "l3", 3), ("c", "r3", 3), ("b", "l4", 4), ("c", "r4", 4),
        ("b", "c", 5), ("b", "l6", 6), ("c", "r6", 6),
    ]
    g = make_graph(False, ["l1", "r1", "a", "b", "c", "l3", "l4", "r3", "r4", "l6", "r6"],
                   [(u, v, [t]) for u, v, t in edges])
    claim = {
        "belongsTo": "undirected.nonstrict.simple",
        "separatesFrom": "undirected.strict.simple",
        "notion": "reach",
        "semantics": "nonstrict",
        "provenance": "PAPER_RECONSTRUCTED",
        "exhaustive": False,
        "bounds": None,
        "note": ("only edges forced by the proof text; labels are one linear extension of the "
                 "chronological poset; dotted figure edges are not encoded"),
    }
    return g, claim


def alien():
    C = ["x", "y", "z"]
    edges = []
    # centers: a directed triangle at 2 and the reverse triangle at 5
    for i in range(3):
        edges.append((C[i], C[(i + 1) % 3], 2))
        edges.append((C[(i + 1) % 3], C[i], 5))
    for i in C:
        edges += [(f"a_{i}", i, 1), (i, f"b_{i}", 3), (f"c_{i}", i, 4), (i, f"d_{i}", 6)]

    def helper(alpha, beta, t_in, t_out):
        h = f"h[{alpha}>{beta}]"
        edges.extend([(alpha, h, t_in), (h, beta, t_out)])
        return h

    def bridge(alpha, beta, t_in, t_out):
        s = f"s[{alpha}>{beta}]"
        edges.extend([(alpha, s, t_in), (s, beta, t_out)])

    for i in C:
        for j in C:
            if i == j:
                continue
            # E1
            helper(i, f"a_{j}", F(3, 2), F(13, 10))
            helper(i, f"c_{j}", F(9, 2), F(43, 10))
            # E2
            helper(f"b_{j}", i, F(5, 2), F(23, 10))
            helper(f"d_{j}", i, F(11, 2), F(53, 10))
            # E3
            helper(f"b_{j}", f"a_{i}", F(3, 2), F(13, 10))
            helper(f"d_{j}", f"a_{i}", F(3, 2), F(13, 10))
            helper(f"d_{j}", f"c_{i}", F(9, 2), F(43, 10))
    for i in C:
        for j in C:
            if i == j:
                continue
            # E4
            bridge(f"b_{i}", f"h[b_{j}>{i}]", F(27, 10), F(5, 2))
            bridge(f"h[{i}>c_{j}]", f"c_{i}", F(43, 10), F(41, 10))
    vertices = sorted({v for e in edges for v in e[:2]})
    g = make_graph(True, vertices, [(u, v, [t]) for u, v, t in edges])
    claim = {
        "belongsTo": "directed.nonstrict.simple",
        "separatesFrom": "directed.proper.simple",
        "notion": "reach",
        "semantics": "nonstrict",
        "provenance": "PAPER_RECONSTRUCTED",
        "exhaustive": False,
        "bounds": None,
        "note": ("helper paths alpha -> h[alpha>beta] -> beta carry a falling label pair; "
                 "E4 middle vertices are one fresh s[alpha>beta] per path"),
    }
    return g, claim


FIXTURES = [directed_triangle, proper_four_cycle, nonstrict_simple_triangle, ud_strict_cycle4, crab, alien]


def main():
    for build in FIXTURES:
        name = build.__name__
        g, claim = build()
        r = reachability_graph(g, claim["semantics"])
        d = OUT / name
        d.mkdir(parents=True, exist_ok=True)
        (d / "graph.json").write_text(json.dumps(graph_to_dict(g), indent=2) + "\n")
        (d / "expected_r.json").write_text(json.dumps(static_to_dict(r), indent=2) + "\n")
        (d / "claim.json").write_text(json.dumps(claim, indent=2) + "\n")
        print(f"{name}: {len(g.vertices)} vertices, {g.temporal_edge_count} temporal edges, {len(r.arcs)} R arcs")


if __name__ == "__main__":
    main()
