"""Temporal graphs across directed/undirected, strict/non-strict/proper and
simple/multi-labelled settings: reachability, transformations between
settings, equivalence checks and bounded realizability search."""
from .core import (
    ALL_SETTINGS,
    Direction,
    Flavor,
    GraphError,
    Labeling,
    ProperMode,
    Semantics,
    SettingClass,
    StaticGraph,
    TemporalEdge,
    TemporalGraph,
    classify,
    footprint,
    in_setting,
    is_proper,
    is_simple,
    is_subsetting,
    make_graph,
    normalize_labels,
    snapshot,
    validate_graph,
)
from .equivalence import (
    Mode,
    Verdict,
    digraph_isomorphic,
    induced_reachability_equivalent,
    reachability_equivalent,
    support_equivalent,
)
from .reachability import (
    count_paths_by_support,
    earliest_arrival,
    enumerate_path_supports,
    is_temporally_connected,
    reachability_graph,
)
from .realize import (
    RealizeBounds,
    RealizeResult,
    ResultKind,
    check_no_induced_cycle,
    min_edges_for_clique,
    realize,
    verify_separation,
)
from .serialize import dumps_graph, load_graph, loads_graph, to_dot
from .transforms import (
    TransformOutput,
    reachability_dilation,
    saturate,
    semaphore,
    support_dilation,
    to_happy,
    undirected_to_directed,
)

__version__ = "0.1.0"
