"""``tempograph`` command line.

Exit codes: 0 success / equivalent / realizable, 1 negative verdict,
2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import corpus
from .core import GraphError, ProperMode, Semantics, SettingClass, classify, parse_label
from .equivalence import Mode, induced_reachability_equivalent, reachability_equivalent, support_equivalent
from .realize import DEFAULT_BUDGET, RealizeBounds, realize, verify_separation
from .reachability import reachability_graph
from .serialize import graph_to_dict, load_graph, static_from_dict, static_to_dict, to_dot
from .transforms import METHODS

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _write_dot(path: str | None, g, name: str) -> None:
    if path:
        Path(path).write_text(to_dot(g, name))


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise GraphError("NO_SUCH_FILE", path) from None
    except json.JSONDecodeError as exc:
        raise GraphError("MALFORMED", f"{path}: {exc}") from None


def _load(path: str):
    if not Path(path).is_file():
        raise GraphError("NO_SUCH_FILE", path)
    return load_graph(path)


def _default_budget() -> int:
    raw = os.environ.get("TEMPOGRAPH_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise GraphError("BAD_BOUNDS", f"TEMPOGRAPH_BUDGET={raw!r} is not an integer") from None


def cmd_validate(args) -> int:
    g = _load(args.graph)
    _emit({
        "valid": True,
        "directed": g.directed,
        "vertices": len(g.vertices),
        "temporalEdges": g.temporal_edge_count,
        "lifetime": g.lifetime,
        "settings": sorted(str(s) for s in classify(g)),
    })
    return EXIT_OK


def cmd_reach(args) -> int:
    g = _load(args.graph)
    r = reachability_graph(g, args.semantics)
    _write_dot(args.dot, r, "R")
    _emit(static_to_dict(r))
    return EXIT_OK


def cmd_transform(args) -> int:
    g = _load(args.graph)
    kw = {"tilt": args.tilt, "semantics": Semantics.parse(args.semantics),
          "epsilon": parse_label(args.epsilon) if args.epsilon else None}
    if args.method == "to-happy":
        if not args.setting:
            raise GraphError("USAGE", "--method to-happy needs --setting")
        kw["setting"] = SettingClass.parse(args.setting)
    out = METHODS[args.method](g, **kw)
    if args.normalize:
        out = out.normalized()
    _write_dot(args.dot, out.graph, args.method)
    _emit({"graph": graph_to_dict(out.graph), "report": out.report()})
    return EXIT_OK


def cmd_equiv(args) -> int:
    a, b = _load(args.graph_a), _load(args.graph_b)
    sa, sb = Semantics.parse(args.semantics_a), Semantics.parse(args.semantics_b)
    if args.notion == "support":
        verdict = support_equivalent(a, b, sa, sb, count_paths=args.count_paths)
    elif args.notion == "reach":
        verdict = reachability_equivalent(a, b, sa, sb, Mode(args.mode))
    else:
        embedding = _read_json(args.embedding) if args.embedding else None
        verdict = induced_reachability_equivalent(a, b, sa, sb, embedding)
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.equivalent else EXIT_NEGATIVE


def cmd_realize(args) -> int:
    target = static_from_dict(_read_json(args.target))
    bounds = RealizeBounds(args.max_labels_per_edge, args.max_distinct_labels,
                           args.budget if args.budget is not None else _default_budget())
    mode = ProperMode(args.proper_mode) if args.proper_mode else None
    res = realize(target, SettingClass.parse(args.setting), bounds, mode)
    if res.witness is not None:
        _write_dot(args.dot, res.witness, "witness")
    _emit(res.to_dict())
    return EXIT_OK if res.realizable else EXIT_NEGATIVE


def cmd_corpus(args) -> int:
    if args.action == "list":
        _emit([{"name": n, "claim": c.to_dict(), "provenance": p} for n, c, p in corpus.list_fixtures()])
        return EXIT_OK
    if not args.name:
        raise GraphError("USAGE", f"corpus {args.action} needs a fixture name")
    if args.action == "show":
        fx = corpus.get_fixture(args.name)
        _write_dot(args.dot, fx.graph, fx.name)
        _emit({"name": fx.name, "semantics": fx.semantics.value, "provenance": fx.provenance,
               "claim": fx.claim.to_dict(), "graph": graph_to_dict(fx.graph),
               "expectedR": static_to_dict(fx.expected_r)})
        return EXIT_OK
    report = verify_separation(args.name)
    _emit(report)
    return EXIT_OK if report["passed"] else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tempograph", description="Temporal graph settings toolkit")
    sub = p.add_subparsers(dest="command", required=True)
    sem = ["strict", "nonstrict"]

    v = sub.add_parser("validate", help="parse a graph and list the settings it belongs to")
    v.add_argument("graph")
    v.set_defaults(func=cmd_validate)

    r = sub.add_parser("reach", help="reachability graph")
    r.add_argument("graph")
    r.add_argument("--semantics", choices=sem, default="strict")
    r.add_argument("--dot", metavar="PATH")
    r.set_defaults(func=cmd_reach)

    t = sub.add_parser("transform", help="apply a setting transformation")
    t.add_argument("graph")
    t.add_argument("--method", required=True, choices=sorted(METHODS))
    t.add_argument("--setting", help="source setting, for to-happy")
    t.add_argument("--semantics", choices=sem, default="nonstrict", help="input semantics, for saturation")
    t.add_argument("--tilt", action="store_true", help="tilted doubling (proper input only)")
    t.add_argument("--epsilon", help="semaphore tilt, e.g. 1/8 (default: derived from label gaps)")
    t.add_argument("--normalize", action="store_true", help="replace labels by ranks 1..m")
    t.add_argument("--dot", metavar="PATH")
    t.set_defaults(func=cmd_transform)

    e = sub.add_parser("equiv", help="compare two graphs")
    e.add_argument("graph_a")
    e.add_argument("graph_b")
    e.add_argument("--notion", choices=["support", "reach", "induced-reach"], default="reach")
    e.add_argument("--semantics-a", choices=sem, default="strict")
    e.add_argument("--semantics-b", choices=sem, default="strict")
    e.add_argument("--mode", choices=[m.value for m in Mode], default="identity")
    e.add_argument("--embedding", metavar="PATH", help="JSON object mapping vertices of A to vertices of B")
    e.add_argument("--count-paths", action="store_true", help="also compare path counts per support")
    e.set_defaults(func=cmd_equiv)

    z = sub.add_parser("realize", help="search for a temporal graph with a given reachability graph")
    z.add_argument("target", help="static graph JSON (as printed by 'reach')")
    z.add_argument("--setting", required=True)
    z.add_argument("--max-labels-per-edge", type=int, default=1)
    z.add_argument("--max-distinct-labels", type=int)
    z.add_argument("--budget", type=int, help="node budget (default: $TEMPOGRAPH_BUDGET)")
    z.add_argument("--proper-mode", choices=[m.value for m in ProperMode])
    z.add_argument("--dot", metavar="PATH")
    z.set_defaults(func=cmd_realize)

    c = sub.add_parser("corpus", help="named fixtures")
    c.add_argument("action", choices=["list", "show", "verify"])
    c.add_argument("name", nargs="?")
    c.add_argument("--dot", metavar="PATH")
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        json.dump({"error": exc.code, "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
