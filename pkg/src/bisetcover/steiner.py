"""Rooted SS-CDS -> node-weighted group Steiner tree -> directed Steiner tree.

The last problem is solved exactly with the Dreyfus-Wagner subset dynamic
program.  ``f[v, S]`` is the cheapest arborescence rooted at ``v`` that reaches
every terminal in ``S``.  It is computed for masks in increasing order as

    g[v, S] = min over proper splits S1 | S2 = S of f[v, S1] + f[v, S2]
    f[v, S] = min over u of dist(v, u) + g[u, S]

with ``g[t, {t}] = 0`` for a terminal ``t``.  All costs are integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

DEFAULT_Q_LIMIT = 24


class Infeasible(Exception):
    """No feasible tree exists."""


class UncoverableTerminal(Infeasible):
    """A terminal has no neighbour to dominate it."""


class ParameterTooLarge(ValueError):
    pass


@dataclass
class SSCDSInstance:
    adjacency: np.ndarray
    terminals: list[int]
    root: int
    weights: list[int]

    def __post_init__(self) -> None:
        self.adjacency = np.asarray(self.adjacency, dtype=bool)
        if self.root in self.terminals:
            raise ValueError("the root cannot be a terminal")


@dataclass
class GroupSteinerInstance:
    nodes: list[int]
    edges: list[tuple[int, int]]
    weights: dict[int, int]
    groups: list[list[int]]
    root: int


@dataclass
class DSTInstance:
    node_count: int
    arcs: list[tuple[int, int, int]]
    root: int
    terminals: list[int]
    # DST node -> host node, for nodes that came from the host graph
    origin: dict[int, int] = field(default_factory=dict)


@dataclass
class DSTResult:
    cost: int | None
    arcs: list[tuple[int, int]]
    dp_states: int
    # f[v, S]; entries at or above ``inf`` mean unreachable
    table: np.ndarray | None = field(default=None, repr=False)
    inf: int = 0

    @property
    def feasible(self) -> bool:
        return self.cost is not None


@dataclass
class SSCDSSolution:
    nodes: list[int]
    weight: int
    dp_states: int


def sscds_to_group_steiner(inst: SSCDSInstance) -> GroupSteinerInstance:
    terminals = set(inst.terminals)
    keep = [v for v in range(len(inst.adjacency)) if v not in terminals]
    groups = []
    for r in inst.terminals:
        group = [v for v in np.flatnonzero(inst.adjacency[r]) if int(v) not in terminals]
        if not group:
            raise UncoverableTerminal(f"terminal {r} has no non-terminal neighbour")
        groups.append([int(v) for v in group])
    edges = [
        (u, v) for i, u in enumerate(keep) for v in keep[i + 1:] if inst.adjacency[u, v]
    ]
    weights = {v: (0 if v == inst.root else int(inst.weights[v])) for v in keep}
    return GroupSteinerInstance(keep, edges, weights, groups, inst.root)


def group_steiner_to_dst(gsi: GroupSteinerInstance, root: int | None = None) -> DSTInstance:
    """Entering a node costs its weight; each group gets a zero-cost sink."""
    root = gsi.root if root is None else root
    pos = {v: i for i, v in enumerate(gsi.nodes)}
    w = {v: (0 if v == root else c) for v, c in gsi.weights.items()}
    arcs = []
    for u, v in gsi.edges:
        arcs.append((pos[u], pos[v], w[v]))
        arcs.append((pos[v], pos[u], w[u]))
    terminals = []
    for j, group in enumerate(gsi.groups):
        t = len(gsi.nodes) + j
        terminals.append(t)
        for v in group:
            arcs.append((pos[v], t, 0))
    return DSTInstance(
        len(gsi.nodes) + len(gsi.groups),
        arcs,
        pos[root],
        terminals,
        origin={i: v for i, v in enumerate(gsi.nodes)},
    )


def _all_pairs(node_count: int, arcs: Sequence[tuple[int, int, int]], inf: int):
    dist = np.full((node_count, node_count), inf, dtype=np.int64)
    nxt = np.full((node_count, node_count), -1, dtype=np.int64)
    for t, h, c in arcs:
        if c < dist[t, h]:
            dist[t, h] = c
            nxt[t, h] = h
    idx = np.arange(node_count)
    dist[idx, idx] = 0
    nxt[idx, idx] = idx
    for k in range(node_count):
        via = np.minimum(dist[:, k, None] + dist[None, k, :], inf)
        better = via < dist
        dist = np.where(better, via, dist)
        nxt = np.where(better, nxt[:, k, None], nxt)
    return dist, nxt


def _split_table(q: int) -> list[np.ndarray]:
    """Proper submasks of each mask that contain its lowest bit, ascending."""
    table: list[np.ndarray] = [np.empty(0, dtype=np.int64)] * (1 << q)
    for S in range(1, 1 << q):
        low = S & -S
        rest = S ^ low
        subs = []
        sub = rest
        while True:
            if sub != rest:
                subs.append(sub | low)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        table[S] = np.array(sorted(subs), dtype=np.int64)
    return table


def dreyfus_wagner_dst(dst: DSTInstance, q_limit: int = DEFAULT_Q_LIMIT) -> DSTResult:
    q = len(dst.terminals)
    if q > q_limit:
        raise ParameterTooLarge(
            f"{q} terminals exceed the limit {q_limit} (3^{q} = {3 ** q} subset-split states)"
        )
    N = dst.node_count
    states = N * (1 << q)
    if q == 0:
        return DSTResult(0, [], states)
    max_w = max((c for _, _, c in dst.arcs), default=0)
    inf = (q + 1) * (max_w + 1) * (N + 1)
    dist, nxt = _all_pairs(N, dst.arcs, inf)

    full = (1 << q) - 1
    f = np.full((N, 1 << q), inf, dtype=np.int64)
    move = np.zeros((N, 1 << q), dtype=np.int64)
    split = np.zeros((N, 1 << q), dtype=np.int64)
    for j, t in enumerate(dst.terminals):
        f[:, 1 << j] = dist[:, t]
        move[:, 1 << j] = t

    splits = _split_table(q)
    for S in range(1, full + 1):
        if S & (S - 1) == 0:
            continue
        subs = splits[S]
        merged = f[:, subs] + f[:, S ^ subs]
        best = merged.argmin(axis=1)
        g = np.minimum(merged[np.arange(N), best], inf)
        split[:, S] = subs[best]
        via = dist + g[None, :]
        u = via.argmin(axis=1)
        f[:, S] = np.minimum(via[np.arange(N), u], inf)
        move[:, S] = u

    cost = int(f[dst.root, full])
    if cost >= inf:
        return DSTResult(None, [], states, f, inf)

    arcs: set[tuple[int, int]] = set()
    stack = [(dst.root, full)]
    while stack:
        v, S = stack.pop()
        u = int(move[v, S])
        x = v
        while x != u:
            y = int(nxt[x, u])
            arcs.add((x, y))
            x = y
        if S & (S - 1):
            S1 = int(split[u, S])
            stack.append((u, S1))
            stack.append((u, S ^ S1))
    return DSTResult(cost, sorted(arcs), states, f, inf)


def solve_sscds(inst: SSCDSInstance, q_limit: int = DEFAULT_Q_LIMIT) -> SSCDSSolution:
    """Minimum-weight connected set containing the root that dominates R.

    Raises :class:`Infeasible` when no such set exists.
    """
    gsi = sscds_to_group_steiner(inst)
    dst = group_steiner_to_dst(gsi)
    res = dreyfus_wagner_dst(dst, q_limit)
    if not res.feasible:
        raise Infeasible("some group is unreachable from the root")
    chosen = {inst.root}
    for t, h in res.arcs:
        for x in (t, h):
            if x in dst.origin:
                chosen.add(dst.origin[x])
    weight = sum(int(inst.weights[v]) for v in chosen if v != inst.root)
    return SSCDSSolution(sorted(chosen), weight, res.dp_states)
