from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import temporal_graphs, tg
from tempograph.core import (
    ALL_SETTINGS,
    Flavor,
    GraphError,
    Labeling,
    ProperMode,
    Semantics,
    SettingClass,
    classify,
    footprint,
    in_setting,
    is_proper,
    is_simple,
    is_subsetting,
    make_graph,
    normalize_labels,
    parse_label,
    snapshot,
    validate_graph,
)
from tempograph.reachability import reachability_graph

TRIANGLE = tg(True, "abc", [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)])


def test_validate_minimal_directed():
    g = validate_graph({"directed": True, "vertices": ["a", "b"],
                        "edges": [{"from": "a", "to": "b", "labels": [1]}]})
    assert len(g.edges) == 1 and g.edges[0].labels == {Fraction(1)}


@pytest.mark.parametrize("raw, code", [
    ({"directed": True, "vertices": ["a"], "edges": [{"from": "a", "to": "a", "labels": [1]}]}, "SELF_LOOP"),
    ({"directed": True, "vertices": ["a"], "edges": [{"from": "a", "to": "z", "labels": [1]}]}, "UNKNOWN_VERTEX"),
    ({"directed": True, "vertices": ["a", "b"], "edges": [{"from": "a", "to": "b", "labels": []}]},
     "EMPTY_LABEL_SET"),
    ({"directed": True, "vertices": ["a", "b"], "edges": [{"from": "a", "to": "b", "labels": [0]}]},
     "NONPOSITIVE_LABEL"),
    ({"directed": True, "vertices": ["a", "b"], "edges": [{"from": "a", "to": "b", "labels": [[-1, 2]]}]},
     "NONPOSITIVE_LABEL"),
    ({"directed": True, "vertices": ["a", "b"], "edges": [{"from": "a", "to": "b", "labels": ["x"]}]},
     "BAD_LABEL"),
    ({"directed": "yes", "vertices": [], "edges": []}, "MALFORMED"),
    ({"vertices": []}, "MALFORMED"),
    ([], "MALFORMED"),
])
def test_validate_errors(raw, code):
    with pytest.raises(GraphError) as info:
        validate_graph(raw)
    assert info.value.code == code


def test_undirected_canonical_merge():
    g = validate_graph({"directed": False, "vertices": ["a", "b"], "edges": [
        {"from": "b", "to": "a", "labels": [2]}, {"from": "a", "to": "b", "labels": [3]}]})
    assert len(g.edges) == 1
    e = g.edges[0]
    assert (e.tail, e.head) == ("a", "b") and e.labels == {2, 3}


def test_parse_label_forms():
    assert parse_label(3) == 3
    assert parse_label([7, 8]) == Fraction(7, 8)
    assert parse_label("9/8") == Fraction(9, 8)
    with pytest.raises(GraphError):
        parse_label([1, 0])
    with pytest.raises(GraphError):
        parse_label(True)


def test_is_simple():
    assert is_simple(TRIANGLE)
    assert not is_simple(tg(True, "ab", [("a", "b", [1, 5])]))
    assert is_simple(tg(True, "ab", []))


def test_is_proper_examples():
    assert not is_proper(TRIANGLE, ProperMode.CLASSIC)
    two_cycle = tg(True, "ab", [("a", "b", 1), ("b", "a", 2)])
    assert is_proper(two_cycle, ProperMode.CLASSIC)
    opposing = tg(True, "uv", [("u", "v", 3), ("v", "u", 3)])
    assert is_proper(opposing, ProperMode.CONSECUTIVE)
    assert not is_proper(opposing, ProperMode.CLASSIC)
    assert not is_proper(opposing, ProperMode.CONSECUTIVE_WITH_BACK_EDGE)
    chain = tg(True, "abc", [("a", "b", 1), ("b", "c", 1)])
    assert not is_proper(chain, ProperMode.CONSECUTIVE)
    # diverging arcs share the tail only: fine for consecutive, not for classic
    fork = tg(True, "abc", [("a", "b", 1), ("a", "c", 1)])
    assert is_proper(fork, ProperMode.CONSECUTIVE) and not is_proper(fork, ProperMode.CLASSIC)


def test_consecutive_mode_needs_directed():
    with pytest.raises(GraphError) as info:
        is_proper(tg(False, "ab", [("a", "b", 1)]), ProperMode.CONSECUTIVE)
    assert info.value.code == "MODE_UNSUPPORTED"


def test_classify_examples():
    classes = {str(s) for s in classify(TRIANGLE)}
    assert "directed.strict.simple" in classes and "directed.nonstrict.simple" in classes
    assert "directed.proper.simple" not in classes
    path = tg(True, "abcd", [("a", "b", 2), ("b", "c", 3), ("c", "d", 1)])
    assert SettingClass.parse("d.proper.simple") in classify(path)
    multi = tg(True, "ab", [("a", "b", [1, 2])])
    assert all(s.labeling is Labeling.MULTI for s in classify(multi))


def test_setting_parse_and_count():
    assert len(ALL_SETTINGS) == 12
    s = SettingClass.parse("ud.non-strict.multi")
    assert str(s) == "undirected.nonstrict.multi"
    assert s.semantics is Semantics.NONSTRICT
    with pytest.raises(GraphError):
        SettingClass.parse("directed.fast.simple")


def test_subsetting_lattice():
    happy = SettingClass.parse("d.proper.simple")
    for s in ALL_SETTINGS:
        if s.directed:
            assert is_subsetting(happy, s)
        else:
            assert not is_subsetting(happy, s)
    assert not is_subsetting(SettingClass.parse("d.strict.multi"), SettingClass.parse("d.strict.simple"))


@settings(max_examples=80, deadline=None)
@given(temporal_graphs(directed=True))
def test_classify_respects_lattice(g):
    classes = classify(g)
    for a in classes:
        for b in ALL_SETTINGS:
            if is_subsetting(a, b):
                assert b in classes


def test_normalize_examples():
    g = tg(True, "uvwx", [("u", "v", Fraction(7, 8)), ("v", "w", Fraction(9, 8)),
                          ("w", "x", Fraction(14, 8)), ("x", "u", Fraction(18, 8))])
    assert normalize_labels(g).labels() == [1, 2, 3, 4]
    ints = tg(True, "ab", [("a", "b", [1, 2])])
    assert normalize_labels(ints) == ints
    tie = tg(True, "abc", [("a", "b", Fraction(5, 2)), ("b", "c", Fraction(5, 2))])
    n = normalize_labels(tie)
    assert n.edges[0].labels == n.edges[1].labels == {1}


@settings(max_examples=80, deadline=None)
@given(temporal_graphs())
def test_normalize_idempotent_and_reach_preserving(g):
    n = normalize_labels(g)
    assert normalize_labels(n) == n
    for s in Semantics:
        assert reachability_graph(n, s) == reachability_graph(g, s)


def test_snapshot_and_footprint():
    assert snapshot(TRIANGLE, 1).arcs == footprint(TRIANGLE).arcs
    assert snapshot(TRIANGLE, 2).arcs == frozenset()
    mixed = tg(True, "abc", [("a", "b", [1, 2]), ("b", "c", 2)])
    assert snapshot(mixed, 1).arcs == {("a", "b")}
    assert snapshot(mixed, 2).arcs == {("a", "b"), ("b", "c")}
    assert footprint(tg(True, "ab", [])).arcs == frozenset()
    assert footprint(tg(True, "ab", [("a", "b", [1, 4])])).arcs == {("a", "b")}


def test_in_setting_direction_mismatch():
    ud = tg(False, "ab", [("a", "b", 1)])
    assert not in_setting(ud, SettingClass.parse("d.strict.simple"))
    assert in_setting(ud, SettingClass.parse("ud.proper.simple"))


def test_make_graph_rejects_bad_vertex():
    with pytest.raises(GraphError) as info:
        make_graph(True, ["a", ""], [])
    assert info.value.code == "BAD_VERTEX"
    with pytest.raises(GraphError):
        make_graph(True, ["a", 3], [])


def test_flavor_enum_values():
    assert {f.value for f in Flavor} == {"strict", "nonstrict", "proper"}
