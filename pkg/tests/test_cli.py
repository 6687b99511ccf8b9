import json

import pytest

from conftest import FIXTURES, tg
from tempograph.cli import main
from tempograph.serialize import dumps_graph

TRI = str(FIXTURES / "directed_triangle" / "graph.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_reach_strict_triangle(capsys):
    code, out, _ = run(capsys, "reach", TRI, "--semantics", "strict")
    assert code == 0
    assert json.loads(out)["arcs"] == [["a", "b"], ["b", "c"], ["c", "a"]]


def test_reach_dot(capsys, tmp_path):
    dot = tmp_path / "r.dot"
    code, _, _ = run(capsys, "reach", TRI, "--semantics", "nonstrict", "--dot", str(dot))
    assert code == 0 and dot.read_text().count("->") == 6


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", TRI)
    d = json.loads(out)
    assert code == 0 and d["valid"] and "directed.strict.simple" in d["settings"]


def test_validate_bad_file(capsys, tmp_path):
    bad = tmp_path / "g.json"
    bad.write_text('{"directed": true, "vertices": ["a"], "edges": [{"from": "a", "to": "a", "labels": [1]}]}')
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and json.loads(err)["error"] == "SELF_LOOP"
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 2


def test_transform_reachability_dilation(capsys, tmp_path):
    g = tg(True, "abcd", [("a", "b", 2), ("b", "c", [1, 5]), ("c", "d", 4), ("d", "a", 3)])
    path = tmp_path / "g.json"
    path.write_text(dumps_graph(g))
    code, out, _ = run(capsys, "transform", str(path), "--method", "reachability-dilation", "--normalize")
    d = json.loads(out)
    rep = d["report"]
    assert code == 0 and rep["proper"] and rep["outputEdges"] <= 2 * rep["inputEdges"]
    assert all(isinstance(t, int) for e in d["graph"]["edges"] for t in e["labels"])


def test_transform_semaphore_epsilon(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(dumps_graph(tg(True, "uvw", [("u", "v", 1), ("v", "w", 2)])))
    code, out, _ = run(capsys, "transform", str(path), "--method", "semaphore", "--epsilon", "1/8")
    labels = sorted(tuple(t) if isinstance(t, list) else (t, 1)
                    for e in json.loads(out)["graph"]["edges"] for t in e["labels"])
    assert code == 0 and labels == [(7, 4), (7, 8), (9, 4), (9, 8)]


def test_transform_to_happy_needs_setting(capsys):
    code, _, err = run(capsys, "transform", TRI, "--method", "to-happy")
    assert code == 2 and json.loads(err)["error"] == "USAGE"
    code, out, _ = run(capsys, "transform", TRI, "--method", "to-happy", "--setting", "d.strict.simple")
    assert code == 0 and json.loads(out)["report"]["simple"]


def test_equiv_exit_codes(capsys):
    code, out, _ = run(capsys, "equiv", TRI, TRI, "--notion", "reach",
                       "--semantics-a", "nonstrict", "--semantics-b", "strict")
    assert code == 1 and json.loads(out)["counterexample"] == ["a", "c"]
    code, out, _ = run(capsys, "equiv", TRI, TRI, "--notion", "support")
    assert code == 0 and json.loads(out)["equivalent"]
    code, _, _ = run(capsys, "equiv", TRI, TRI, "--notion", "induced-reach")
    assert code == 0


def test_equiv_embedding_file(capsys, tmp_path):
    emb = tmp_path / "e.json"
    emb.write_text('{"a": "a", "b": "a", "c": "c"}')
    code, _, err = run(capsys, "equiv", TRI, TRI, "--notion", "induced-reach", "--embedding", str(emb))
    assert code == 2 and json.loads(err)["error"] == "EMBEDDING_NOT_INJECTIVE"


def test_realize_commands(capsys, tmp_path):
    target = FIXTURES / "directed_triangle" / "expected_r.json"
    code, out, _ = run(capsys, "realize", str(target), "--setting", "d.strict.simple")
    d = json.loads(out)
    assert code == 0 and d["kind"] == "REALIZABLE" and d["witness"]
    code, out, _ = run(capsys, "realize", str(target), "--setting", "d.nonstrict.multi",
                       "--max-labels-per-edge", "2", "--max-distinct-labels", "4")
    assert code == 1 and json.loads(out)["kind"] == "UNREALIZABLE_WITHIN_BOUNDS"


def test_realize_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("TEMPOGRAPH_BUDGET", "3")
    target = FIXTURES / "ud_strict_cycle4" / "expected_r.json"
    code, out, _ = run(capsys, "realize", str(target), "--setting", "d.nonstrict.multi",
                       "--max-labels-per-edge", "2")
    assert code == 1 and json.loads(out)["kind"] == "BUDGET_EXHAUSTED"
    monkeypatch.setenv("TEMPOGRAPH_BUDGET", "lots")
    code, _, _ = run(capsys, "realize", str(target), "--setting", "d.nonstrict.multi")
    assert code == 2


def test_corpus_commands(capsys):
    code, out, _ = run(capsys, "corpus", "list")
    assert code == 0 and len(json.loads(out)) >= 6
    code, out, _ = run(capsys, "corpus", "show", "crab")
    assert code == 0 and json.loads(out)["provenance"] == "PAPER_RECONSTRUCTED"
    code, out, _ = run(capsys, "corpus", "verify", "proper_four_cycle")
    assert code == 0 and json.loads(out)["kind"] == "UNREALIZABLE_EXACT"
    code, _, err = run(capsys, "corpus", "show", "nope")
    assert code == 2 and json.loads(err)["error"] == "UNKNOWN_FIXTURE"


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["reach", TRI, "--semantics", "sideways"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
    code, _, err = run(capsys, "realize", TRI, "--setting", "d.strict.simple")
    assert code == 2
