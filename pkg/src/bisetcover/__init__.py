"""Exact fixed-parameter connectivity augmentation via biset-family covering."""

from .biset import Biset, CandidateEdge, ROOT, co_biset, cap, co_crosses, contains, covers, crosses, cup, intersects, separates
from .graph import (
    FlowNetwork,
    MultiGraph,
    count_internally_disjoint_paths,
    cut_nodes,
    is_k_edge_connected,
    is_k_out_connected,
    max_flow_min_cut,
)
from .oracles import (
    EncaInstance,
    EncaOracle,
    FamilyOracle,
    KocaInstance,
    KocaOracle,
    PromiseError,
    enca_tight_extremes_at,
    find_root_core,
    koca_tight_extremes_at,
)
from .separability import SeparabilityGraph, build_separability_graph
from .solver import (
    Solution,
    brute_force_min_cover,
    solve_enca,
    solve_ibfc,
    solve_koca,
    validate_reduction_properties,
    verify_enca,
    verify_koca,
)
from .steiner import dreyfus_wagner_dst, solve_sscds

__version__ = "0.1.0"
