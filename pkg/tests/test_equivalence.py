import pytest
from hypothesis import given, settings

import oracles
from conftest import temporal_graphs, tg
from tempograph.core import GraphError, Semantics, StaticGraph
from tempograph.equivalence import (
    Mode,
    digraph_isomorphic,
    induced_reachability_equivalent,
    reachability_equivalent,
    support_equivalent,
)
from tempograph.reachability import enumerate_path_supports, reachability_graph
from tempograph.transforms import reachability_dilation, saturate, semaphore, support_dilation

TRIANGLE = tg(True, "abc", [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)])
P4C = tg(True, "abcd", [("a", "b", 2), ("b", "c", [1, 5]), ("c", "d", 4), ("d", "a", 3)])
STRICT, NONSTRICT = Semantics.STRICT, Semantics.NONSTRICT


def test_isomorphic_cycles():
    c1 = StaticGraph.build(True, "abc", [("a", "b"), ("b", "c"), ("c", "a")])
    c2 = StaticGraph.build(True, "xyz", [("x", "z"), ("z", "y"), ("y", "x")])
    m = digraph_isomorphic(c1, c2)
    assert m is not None and {(m[u], m[v]) for u, v in c1.arcs} == c2.arcs
    path = StaticGraph.build(True, "abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    assert digraph_isomorphic(c1, path) is None


def test_isomorphic_relabeled_proper_four_cycle():
    r = reachability_graph(P4C)
    ren = dict(zip("abcd", "qrst"))
    r2 = StaticGraph.build(True, "qrst", [(ren[u], ren[v]) for u, v in r.arcs])
    m = digraph_isomorphic(r, r2)
    assert m is not None
    assert oracles.isomorphic(r.vertices, r.arcs, r2.vertices, r2.arcs) is not None


def test_isomorphism_bound():
    big = StaticGraph.build(True, [f"v{i:02}" for i in range(13)], [])
    with pytest.raises(GraphError):
        digraph_isomorphic(big, big)


@settings(max_examples=60, deadline=None)
@given(temporal_graphs(directed=True), temporal_graphs(directed=True))
def test_isomorphism_matches_permutation_oracle(g1, g2):
    r1, r2 = reachability_graph(g1), reachability_graph(g2)
    m = digraph_isomorphic(r1, r2)
    o = oracles.isomorphic(r1.vertices, r1.arcs, r2.vertices, r2.arcs)
    assert (m is None) == (o is None)
    if m is not None:
        assert {(m[u], m[v]) for u, v in r1.arcs} == r2.arcs
        back = digraph_isomorphic(r2, r1)
        assert back is not None
    assert digraph_isomorphic(r1, r1) is not None


def test_triangle_semantics_counterexample():
    v = reachability_equivalent(TRIANGLE, TRIANGLE, STRICT, NONSTRICT)
    assert not v.equivalent and v.counterexample == ("a", "c") and v.witness is None


def test_dilation_and_saturation_reach_equivalent():
    for g in (TRIANGLE, P4C):
        assert reachability_equivalent(g, reachability_dilation(g).graph, NONSTRICT, STRICT).equivalent
        assert reachability_equivalent(g, saturate(g, STRICT).graph, STRICT, STRICT).equivalent


def test_isomorphism_mode():
    ren = tg(True, "xyz", [("x", "y", 1), ("y", "z", 1), ("z", "x", 1)])
    assert not reachability_equivalent(TRIANGLE, ren).equivalent
    v = reachability_equivalent(TRIANGLE, ren, mode=Mode.ISOMORPHISM)
    assert v.equivalent and v.witness is not None
    v = reachability_equivalent(TRIANGLE, ren, STRICT, NONSTRICT, mode="isomorphism")
    assert not v.equivalent and v.counterexample is not None


def test_support_examples():
    assert support_equivalent(P4C, P4C).equivalent
    assert support_equivalent(TRIANGLE, support_dilation(TRIANGLE).graph, NONSTRICT, STRICT).equivalent
    v = support_equivalent(P4C, saturate(P4C, STRICT).graph, STRICT, STRICT)
    assert not v.equivalent
    sup = v.counterexample
    in_a = sup in enumerate_path_supports(P4C)
    in_b = sup in enumerate_path_supports(saturate(P4C, STRICT).graph)
    assert in_a != in_b


def test_count_paths_flag():
    one = tg(True, "ab", [("a", "b", 1)])
    two = tg(True, "ab", [("a", "b", [1, 2])])
    assert support_equivalent(one, two).equivalent
    v = support_equivalent(one, two, count_paths=True)
    assert not v.equivalent and v.counterexample == ("a", "b")


def test_vertex_mismatch():
    v = support_equivalent(tg(True, "ab", []), tg(True, "ac", []))
    assert not v.equivalent and v.counterexample == ("vertex", "b")


def test_induced_semaphore_and_errors():
    out = semaphore(TRIANGLE)
    assert induced_reachability_equivalent(TRIANGLE, out.graph, STRICT, STRICT, out.embedding).equivalent
    with pytest.raises(GraphError) as info:
        induced_reachability_equivalent(TRIANGLE, out.graph, embedding={"a": "a", "b": "a", "c": "c"})
    assert info.value.code == "EMBEDDING_NOT_INJECTIVE"
    with pytest.raises(GraphError) as info:
        induced_reachability_equivalent(TRIANGLE, out.graph, embedding={"a": "a", "b": "b", "c": "zz"})
    assert info.value.code == "EMBEDDING_OUT_OF_RANGE"


def test_induced_disconnected_copy():
    copy = tg(True, "abcxyz", [("x", "y", 1), ("y", "z", 1), ("z", "x", 1)])
    v = induced_reachability_equivalent(TRIANGLE, copy, embedding={"a": "a", "b": "b", "c": "c"})
    assert not v.equivalent and v.counterexample == ("a", "b")


@settings(max_examples=80, deadline=None)
@given(temporal_graphs(directed=True, max_vertices=4), temporal_graphs(directed=True, max_vertices=4))
def test_strength_chain(g1, g2):
    if g1.vertices != g2.vertices:
        return
    for s1 in Semantics:
        for s2 in Semantics:
            sup = support_equivalent(g1, g2, s1, s2).equivalent
            reach = reachability_equivalent(g1, g2, s1, s2).equivalent
            ind = induced_reachability_equivalent(g1, g2, s1, s2).equivalent
            assert not sup or reach
            assert not reach or ind


@settings(max_examples=60, deadline=None)
@given(temporal_graphs(directed=True), temporal_graphs(directed=True))
def test_counterexamples_reverify(g1, g2):
    v = reachability_equivalent(g1, g2)
    if not v.equivalent and v.counterexample[0] != "vertex":
        a = v.counterexample in reachability_graph(g1).arcs
        b = v.counterexample in reachability_graph(g2).arcs
        assert a != b
    assert (v.witness is None) != (v.counterexample is None)
