"""Seeded random temporal graphs for property tests and benchmarks.

All generators take a ``random.Random`` so that a printed seed reproduces
the exact suite.
"""
from __future__ import annotations

import random
import string
from typing import Iterator

from .core import (
    ALL_SETTINGS,
    Flavor,
    Labeling,
    ProperMode,
    SettingClass,
    StaticGraph,
    TemporalGraph,
    is_proper,
    make_graph,
)

DEFAULT_SEED = 20240611


def random_graph(rng: random.Random, directed: bool, max_vertices: int = 6, max_edges: int = 8,
                 max_label: int = 3, simple: bool = False, proper: ProperMode | None = None) -> TemporalGraph:
    """At least one temporal edge; ``simple``/``proper`` are enforced by
    rejecting candidate edges that would break them."""
    n = rng.randint(2, max_vertices)
    names = list(string.ascii_lowercase[:n])
    target = rng.randint(1, max_edges)
    labels: dict[tuple[str, str], set[int]] = {}
    tries = 0
    count = 0
    while count < target and tries < 20 * max_edges:
        tries += 1
        u, v = rng.sample(names, 2)
        if not directed and u > v:
            u, v = v, u
        t = rng.randint(1, max_label)
        current = labels.get((u, v), set())
        if t in current or (simple and current):
            continue
        trial = dict(labels)
        trial[(u, v)] = current | {t}
        if proper is not None:
            g = make_graph(directed, names, [(a, b, ls) for (a, b), ls in trial.items()])
            if not is_proper(g, proper):
                continue
        labels = trial
        count += 1
    return make_graph(directed, names, [(a, b, sorted(ls)) for (a, b), ls in sorted(labels.items())])


def random_in_setting(rng: random.Random, setting: SettingClass | str, **kw) -> TemporalGraph:
    if isinstance(setting, str):
        setting = SettingClass.parse(setting)
    proper = None
    if setting.flavor is Flavor.PROPER:
        proper = ProperMode.CONSECUTIVE if setting.directed else ProperMode.CLASSIC
    return random_graph(rng, setting.directed, simple=setting.labeling is Labeling.SIMPLE,
                        proper=proper, **kw)


def suite(directed: bool, count: int, seed: int = DEFAULT_SEED, **kw) -> list[TemporalGraph]:
    rng = random.Random(seed)
    return [random_graph(rng, directed, **kw) for _ in range(count)]


def setting_suites(count: int, seed: int = DEFAULT_SEED) -> Iterator[tuple[SettingClass, list[TemporalGraph]]]:
    for k, setting in enumerate(ALL_SETTINGS):
        rng = random.Random(seed + k)
        yield setting, [random_in_setting(rng, setting) for _ in range(count)]


def random_tree(rng: random.Random, max_vertices: int = 8) -> StaticGraph:
    """Undirected tree; each new vertex hangs off a uniformly chosen earlier one."""
    n = rng.randint(1, max_vertices)
    names = list(string.ascii_lowercase[:n])
    order = names[:]
    rng.shuffle(order)
    arcs = [tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)]
    return StaticGraph.build(False, names, arcs)
