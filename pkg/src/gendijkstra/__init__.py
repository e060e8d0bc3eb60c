"""Generic Dijkstra for shortest paths with contiguous, continuous resources.

Each edge offers a set of units from ``[0, U)``; a path may only use a
contiguous run of units available on all of its edges. The search returns,
for every vertex, the complete set of efficient (cost, interval) labels.
"""
from ._backend import HAVE_COMPILED
from .generate import GenSpec, fig1_graph, generate
from .graph import Edge, Graph, GraphError, load, load_file, save
from .intervals import (
    Inclusion,
    ResourceInterval,
    UnitSet,
    decompose,
    intersect,
    ri_includes,
    ri_less,
)
from .labels import Dominance, Label, extend, label_dominates, label_less
from .oracle import antichain_bound, check_optimality, label_bound, min_set, oracle_solve
from .search import InvalidSourceError, TentativeStore, generic_dijkstra, relax
from .tree import EfficientPathTree, extract_path

__version__ = "0.1.0"
