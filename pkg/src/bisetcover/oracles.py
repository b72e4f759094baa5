"""Query access to the two intersecting biset families the solver covers.

Both families are never listed explicitly.  For an edge set ``I`` an oracle
returns the inclusion-minimal and inclusion-maximal family members left
uncovered by ``I``.  For every node ``v`` other than the root one max-flow on a
node-split network of ``G0 + I`` yields the unique smallest and largest such
member with ``v`` in its inner set; the global extremes are filtered from
those ``n - 1`` candidates.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .biset import Biset, CandidateEdge, contains
from .graph import (
    MultiGraph,
    cut_nodes,
    is_k_edge_connected,
    is_k_out_connected,
    max_flow_min_cut,
    mixed_cut_network,
)


class PromiseError(ValueError):
    """The base graph does not meet the connectivity the problem assumes."""


EdgeLike = CandidateEdge | tuple[int, int]


def _pairs(edges: Iterable[EdgeLike]) -> list[tuple[int, int]]:
    out = []
    for e in edges:
        if isinstance(e, CandidateEdge):
            out.append((e.u, e.v))
        else:
            out.append((int(e[0]), int(e[1])))
    return out


def minimal_antichain(bisets: Iterable[Biset]) -> list[Biset]:
    items = sorted(set(bisets))
    return [b for b in items if not any(o != b and contains(o, b) for o in items)]


def maximal_antichain(bisets: Iterable[Biset]) -> list[Biset]:
    items = sorted(set(bisets))
    return [b for b in items if not any(o != b and contains(b, o) for o in items)]


class FamilyOracle(ABC):
    """Uncovered-extremes queries on an intersecting biset family.

    Every member keeps ``root`` in its co-set.
    """

    n: int
    root: int
    maxflow_calls: int = 0

    @abstractmethod
    def uncovered_min(self, I: Iterable[EdgeLike] = ()) -> list[Biset]:
        ...

    @abstractmethod
    def uncovered_max(self, I: Iterable[EdgeLike] = ()) -> list[Biset]:
        ...

    def cores(self) -> list[Biset]:
        return self.uncovered_min(())


def _extremes_from_flow(
    graph: MultiGraph, source: int, sink: int, node_caps: Mapping[int, int], k: int
) -> Optional[tuple[Biset, Biset]]:
    mc = mixed_cut_network(graph, source, sink, node_caps)
    res = max_flow_min_cut(mc.network, limit=k)
    if res.value >= k:
        return None
    n = graph.node_count
    lo_in = lo_out = hi_in = hi_out = 0
    for v in range(n):
        bit = 1 << v
        if mc.out_id[v] in res.src_side:
            lo_in |= bit
        if mc.in_id[v] in res.src_side:
            lo_out |= bit
        if mc.out_id[v] not in res.sink_side:
            hi_in |= bit
        if mc.in_id[v] not in res.sink_side:
            hi_out |= bit
    return Biset(lo_in, lo_out, n), Biset(hi_in, hi_out, n)


class _FlowOracle(FamilyOracle):
    graph: MultiGraph
    k: int

    def _caps(self) -> Mapping[int, int]:
        raise NotImplementedError

    def extremes_at(self, I: Iterable[EdgeLike], v: int) -> Optional[tuple[Biset, Biset]]:
        if v == self.root:
            raise ValueError("v must differ from the root")
        g = self.graph.with_edges(_pairs(I))
        self.maxflow_calls += 1
        return _extremes_from_flow(g, v, self.root, self._caps(), self.k)

    def _all_extremes(self, I: Iterable[EdgeLike]) -> tuple[list[Biset], list[Biset]]:
        I = _pairs(I)
        key = tuple(sorted((min(u, v), max(u, v)) for u, v in I))
        memo = self.__dict__.setdefault("_memo", {})
        if key in memo:
            return memo[key]
        mins, maxs = [], []
        for v in range(self.n):
            if v == self.root:
                continue
            got = self.extremes_at(I, v)
            if got is not None:
                mins.append(got[0])
                maxs.append(got[1])
        memo[key] = (mins, maxs)
        return mins, maxs

    def uncovered_min(self, I: Iterable[EdgeLike] = ()) -> list[Biset]:
        return minimal_antichain(self._all_extremes(I)[0])

    def uncovered_max(self, I: Iterable[EdgeLike] = ()) -> list[Biset]:
        return maximal_antichain(self._all_extremes(I)[1])


@dataclass(frozen=True)
class KocaInstance:
    """A base graph ``G0`` that is ``(k-1)``-out-connected from ``s``."""

    graph: MultiGraph
    k: int
    s: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be positive")
        if not 0 <= self.s < self.graph.node_count:
            raise ValueError("root outside the node range")
        if not is_k_out_connected(self.graph, self.s, self.k - 1):
            raise PromiseError(
                f"promise violated: G0 is not {self.k - 1}-out-connected from node {self.s}"
            )


@dataclass(frozen=True)
class EncaInstance:
    """A ``(k-1)``-edge-connected ``G0`` with protected node set ``Q``."""

    graph: MultiGraph
    k: int
    Q: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "Q", frozenset(int(v) for v in self.Q))
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if any(not 0 <= v < self.graph.node_count for v in self.Q):
            raise ValueError("Q has a node outside the node range")
        if not is_k_edge_connected(self.graph, self.k - 1):
            raise PromiseError(f"promise violated: G0 is not {self.k - 1}-edge-connected")

    def node_capacity(self, v: int) -> Optional[int]:
        """``k-1`` on ``Q``; ``None`` stands for an uncuttable node."""
        return self.k - 1 if v in self.Q else None

    def is_feasible(self) -> bool:
        return is_k_edge_connected(self.graph, self.k) and not (cut_nodes(self.graph) & self.Q)


class KocaOracle(_FlowOracle):
    """Tight bisets of a ``(k-1)``-out-connected graph.

    A proper biset with the root in its co-set is tight when its boundary size
    plus the number of ``G0`` edges covering it equals ``k-1``.
    """

    def __init__(self, inst: KocaInstance):
        self.instance = inst
        self.graph = inst.graph
        self.k = inst.k
        self.n = inst.graph.node_count
        self.root = inst.s
        self.maxflow_calls = 0

    def _caps(self) -> Mapping[int, int]:
        return {v: 1 for v in range(self.n)}


class EncaOracle(_FlowOracle):
    """Tight bisets ``d(A) + q(boundary) = k-1`` that keep ``root`` outside."""

    def __init__(self, inst: EncaInstance, root: int):
        self.instance = inst
        self.graph = inst.graph
        self.k = inst.k
        self.n = inst.graph.node_count
        self.root = root
        self.maxflow_calls = 0

    def _caps(self) -> Mapping[int, int]:
        return {v: self.k - 1 for v in self.instance.Q}


def koca_tight_extremes_at(
    inst: KocaInstance, I: Sequence[EdgeLike], v: int
) -> Optional[tuple[Biset, Biset]]:
    return KocaOracle(inst).extremes_at(I, v)


def enca_tight_extremes_at(
    inst: EncaInstance, s: int, I: Sequence[EdgeLike], v: int
) -> Optional[tuple[Biset, Biset]]:
    return EncaOracle(inst, s).extremes_at(I, v)


def find_root_core(inst: EncaInstance) -> Optional[tuple[Biset, int]]:
    """A tight biset with no tight proper sub-biset, plus a root inside it.

    For a reference node ``r`` the minimal tight bisets avoiding ``r`` are
    computed; the smallest of them is a core of the whole tight family.  When
    ``r`` lies on the boundary of every tight biset the next node is tried.
    ``None`` means the base graph is already feasible.
    """
    return _locate_root_core(inst)[0]


def _locate_root_core(inst: EncaInstance) -> tuple[Optional[tuple[Biset, int]], int]:
    calls = 0
    for r in range(inst.graph.node_count):
        probe = EncaOracle(inst, r)
        found = probe.uncovered_min(())
        calls += probe.maxflow_calls
        if found:
            core = found[0]
            s = (core.inner & -core.inner).bit_length() - 1
            return (core, s), calls
    return None, calls
