"""Minimum consistent subset toolkit for colored graph metrics.

Exact solvers on arbitrary colored graphs, the chain-cover approximation
pipeline on interval graphs, the dominating-set gadget on circle graphs,
and seeded instance generators.
"""

from .approx import AcsResult, approximate_consistent_subset, approximation_report
from .bar_cover import (
    CoverCheck,
    LeafBarCover,
    cover_from_consistent_subset,
    is_leaf_bar_cover,
    optimal_leaf_bar_cover,
)
from .chords import (
    ChordDiagram,
    ChordRecord,
    ReducedInstance,
    ReductionVerdict,
    chords_cross,
    circle_graph,
    reduce_domset_to_mcs,
    verify_reduction_lemma,
)
from .errors import (
    DisconnectedGraphError,
    FormatError,
    GuardExceededError,
    InputError,
    McskitError,
    NoCoverError,
)
from .generators import GenConfig, random_chord_diagram, random_interval_instance
from .graphs import (
    ColoredGraph,
    bfs_distances,
    covering_set,
    exact_mcs,
    exact_min_dominating_set,
    is_consistent_subset,
    nearest_neighbors,
    shortest_path,
)
from .intervals import (
    Bar,
    IntervalInstance,
    IntervalRecord,
    bar_sets,
    is_leaf_bar,
    leaf_bar_matrix,
    normalize,
    overlap_graph,
)
from .useful_cover import QPartition, UsefulCover, partition_q, useful_cover

__version__ = "0.1.0"

__all__ = [
    "AcsResult",
    "Bar",
    "ChordDiagram",
    "ChordRecord",
    "ColoredGraph",
    "CoverCheck",
    "DisconnectedGraphError",
    "FormatError",
    "GenConfig",
    "GuardExceededError",
    "InputError",
    "IntervalInstance",
    "IntervalRecord",
    "LeafBarCover",
    "McskitError",
    "NoCoverError",
    "QPartition",
    "ReducedInstance",
    "ReductionVerdict",
    "UsefulCover",
    "approximate_consistent_subset",
    "approximation_report",
    "bar_sets",
    "bfs_distances",
    "chords_cross",
    "circle_graph",
    "cover_from_consistent_subset",
    "covering_set",
    "exact_mcs",
    "exact_min_dominating_set",
    "is_consistent_subset",
    "is_leaf_bar",
    "is_leaf_bar_cover",
    "leaf_bar_matrix",
    "nearest_neighbors",
    "normalize",
    "optimal_leaf_bar_cover",
    "overlap_graph",
    "partition_q",
    "random_chord_diagram",
    "random_interval_instance",
    "reduce_domset_to_mcs",
    "shortest_path",
    "useful_cover",
    "verify_reduction_lemma",
]
