"""Active causal structure learning with (possibly imperfect) expert advice."""

from .advice import AdviceQuality, extend_mpdag, min_hop_coverage, psi_full, psi_proxy
from .chordal import half_clique_separator, is_chordal, peo_mcs
from .errors import (
    AdviceError,
    CapExceededError,
    CycleError,
    GraphError,
    InconsistentGraphError,
    NotChordalError,
)
from .graph import Dag, Pdag, UGraph, load_graph, save_graph, skeleton, topological_order, v_structures
from .mec import (
    chickering_sequence,
    covered_edges,
    crg_matching,
    enumerate_mec,
    essential_graph,
    reorder_after_reversal,
    same_mec,
)
from .meek import add_and_close, meek_closure, rule_trace
from .oracle import InterventionSet, Oracle, interventional_essential_graph, residual_dag
from .search import SearchReport, advice_search, advice_search_mpdag, full_search, subset_search
from .verification import nu1, separating_labels, verifying_set_atomic, verifying_set_bounded

__version__ = "0.1.0"
