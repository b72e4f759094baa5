"""End-to-end augmentation pipelines.

Covering an intersecting biset family reduces to a rooted SS-CDS instance on
the separability graph: cores are terminals, candidate edges are weighted
non-terminals and the root has weight zero.  The Steiner DP then runs in
``3^q`` where ``q`` is the number of cores, and ``q <= 2p`` for a solution of
``p`` edges.

Edge weights handed to the DP are ``cost * (m + 1) + 1`` so that among the
cheapest covers the one with fewest edges wins; this gives an exact answer to
the size-bounded decision question.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .biset import CandidateEdge
from .graph import MultiGraph, cut_nodes, is_k_edge_connected, is_k_out_connected
from .oracles import (
    EncaInstance,
    EncaOracle,
    FamilyOracle,
    KocaInstance,
    KocaOracle,
    _locate_root_core,
)
from .separability import SeparabilityGraph, build_separability_graph
from .steiner import DEFAULT_Q_LIMIT, Infeasible, SSCDSInstance, solve_sscds

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
EXCEEDS_PARAMETER = "exceeds_parameter"


@dataclass
class Solution:
    status: str
    edges: tuple[int, ...] = ()
    cost: int = 0
    cores: int = 0
    maxflow_calls: int = 0
    dp_states: int = 0
    millis: int = 0
    graph: Optional[SeparabilityGraph] = field(default=None, repr=False, compare=False)

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def _millis(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


def solve_ibfc(
    oracle: FamilyOracle,
    edges: Sequence[CandidateEdge],
    p: Optional[int] = None,
    q_limit: int = DEFAULT_Q_LIMIT,
) -> Solution:
    """Cheapest subset of ``edges`` covering the oracle's family.

    With ``p`` set, ``exceeds_parameter`` is returned when no cheapest cover
    has at most ``p`` edges (detected early when there are more than ``2p``
    cores, since every edge covers at most two of them).
    """
    t0 = time.perf_counter()
    calls0 = oracle.maxflow_calls
    edges = list(edges)
    cores = oracle.cores()
    q = len(cores)

    def done(status, chosen=(), graph=None, dp_states=0):
        return Solution(
            status,
            tuple(sorted(e.index for e in chosen)) if status == OPTIMAL else (),
            sum(e.cost for e in chosen) if status == OPTIMAL else 0,
            q,
            oracle.maxflow_calls - calls0,
            dp_states,
            _millis(t0),
            graph,
        )

    if q == 0:
        return done(OPTIMAL)
    if p is not None and q > 2 * p:
        return done(EXCEEDS_PARAMETER)

    H = build_separability_graph(oracle, edges, cores)
    m = len(edges)
    weights = [0] * q + [e.cost * (m + 1) + 1 for e in edges] + [0]
    inst = SSCDSInstance(H.adjacency, list(range(q)), H.root_index, weights)
    try:
        sol = solve_sscds(inst, q_limit)
    except Infeasible:
        return done(INFEASIBLE, graph=H)
    chosen = [edges[x - q] for x in sol.nodes if q <= x < q + m]
    if p is not None and len(chosen) > p:
        return done(EXCEEDS_PARAMETER, graph=H, dp_states=sol.dp_states)
    return done(OPTIMAL, chosen, H, sol.dp_states)


def solve_koca(
    inst: KocaInstance,
    edges: Sequence[CandidateEdge],
    p: Optional[int] = None,
    q_limit: int = DEFAULT_Q_LIMIT,
) -> Solution:
    return solve_ibfc(KocaOracle(inst), edges, p, q_limit)


def solve_enca(
    inst: EncaInstance,
    edges: Sequence[CandidateEdge],
    p: Optional[int] = None,
    q_limit: int = DEFAULT_Q_LIMIT,
) -> Solution:
    """Fix a root inside a core of the tight family, then cover what avoids it."""
    t0 = time.perf_counter()
    found, calls = _locate_root_core(inst)
    if found is None:
        return Solution(OPTIMAL, maxflow_calls=calls, millis=_millis(t0))
    root = found[1]
    sol = solve_ibfc(EncaOracle(inst, root), edges, p, q_limit)
    sol.maxflow_calls += calls
    sol.millis = _millis(t0)
    return sol


def _pairs(J) -> list[tuple[int, int]]:
    return [(e.u, e.v) if isinstance(e, CandidateEdge) else (e[0], e[1]) for e in J]


def verify_koca(G0: MultiGraph, k: int, s: int, J) -> bool:
    return is_k_out_connected(G0.with_edges(_pairs(J)), s, k)


def verify_enca(G0: MultiGraph, k: int, Q, J) -> bool:
    g = G0.with_edges(_pairs(J))
    return is_k_edge_connected(g, k) and not (cut_nodes(g) & set(Q))


def brute_force_min_cover(
    verify: Callable[[list[CandidateEdge]], bool],
    edges: Sequence[CandidateEdge],
    p: int,
) -> Solution:
    """Cheapest feasible subset of at most ``p`` edges, by enumeration.

    Subsets are tried by cost, then size, then lexicographic index order, so
    the first feasible one is the answer.  If none fits within ``p`` edges the
    status is ``exceeds_parameter`` when the whole pool is feasible and
    ``infeasible`` otherwise.
    """
    edges = list(edges)
    if p > 12 or len(edges) > 20:
        raise ValueError("brute force is limited to p <= 12 and at most 20 candidates")
    t0 = time.perf_counter()
    subsets = []
    for size in range(min(p, len(edges)) + 1):
        for combo in itertools.combinations(range(len(edges)), size):
            subsets.append((sum(edges[i].cost for i in combo), size, combo))
    subsets.sort()
    for cost, _, combo in subsets:
        chosen = [edges[i] for i in combo]
        if verify(chosen):
            return Solution(
                OPTIMAL, tuple(sorted(e.index for e in chosen)), cost, millis=_millis(t0)
            )
    status = EXCEEDS_PARAMETER if verify(edges) else INFEASIBLE
    return Solution(status, millis=_millis(t0))


@dataclass
class ReductionReport:
    clique_neighborhoods: bool
    few_terminal_neighbors: bool
    independent_terminals: bool
    violations: list[str]


def validate_reduction_properties(H: SeparabilityGraph) -> ReductionReport:
    """Check (A) core neighbourhoods are cliques, (B) every edge-node sees at
    most two cores and (C) no two cores are adjacent."""
    adj = H.adjacency
    q = H.q
    violations = []
    a_ok = True
    for c in range(q):
        nb = H.neighbors(c)
        for x, y in itertools.combinations(nb, 2):
            if not adj[x, y]:
                a_ok = False
                violations.append(f"(A) neighbours {x},{y} of core {c} are not adjacent")
    b_ok = True
    for x in range(q, H.root_index):
        seen = int(adj[x, :q].sum())
        if seen > 2:
            b_ok = False
            violations.append(f"(B) edge-node {x} has {seen} core neighbours")
    c_ok = True
    for c, d in itertools.combinations(range(q), 2):
        if adj[c, d]:
            c_ok = False
            violations.append(f"(C) cores {c},{d} are adjacent")
    return ReductionReport(a_ok, b_ok, c_ok, violations)
