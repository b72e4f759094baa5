"""Undirected multigraphs and exact integral max-flow / min-cut.

Node-connectivity questions are answered on a node-split network: a splittable
node ``v`` becomes ``v_in -> v_out`` with an internal capacity, and every
undirected edge ``uv`` becomes the two unit arcs ``u_out -> v_in`` and
``v_out -> u_in``.  A minimum cut of that network is a *mixed cut* made of
edges and capacity-weighted boundary nodes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph on nodes ``0..node_count-1``.

    Parallel edges are allowed and the position of an edge in ``edges`` is its
    identity.  Self-loops are rejected.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.node_count < 1:
            raise ValueError("node_count must be positive")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {self.node_count})")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
        object.__setattr__(self, "edges", edges)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "MultiGraph":
        """Return a new graph with ``extra`` appended to the edge list."""
        return MultiGraph(self.node_count, self.edges + tuple(extra))

    def adjacency(self) -> list[set[int]]:
        """Neighbour sets of the underlying simple graph."""
        adj: list[set[int]] = [set() for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass
class FlowNetwork:
    """Directed network with integral arc capacities."""

    node_count: int
    source: int
    sink: int
    arcs: list[tuple[int, int, int]] = field(default_factory=list)

    def add_arc(self, tail: int, head: int, capacity: int) -> None:
        if capacity < 0:
            raise ValueError("capacities must be non-negative")
        self.arcs.append((tail, head, int(capacity)))


class FlowResult(NamedTuple):
    value: int
    src_side: frozenset[int]
    sink_side: frozenset[int]


def sentinel_capacity(n: int, k: int) -> int:
    """A capacity exceeding every finite cut of interest (``n*k + 1``)."""
    return n * k + 1


def max_flow_min_cut(net: FlowNetwork, limit: int | None = None) -> FlowResult:
    """Exact max flow by shortest augmenting paths.

    ``src_side`` holds the nodes reachable from the source in the final
    residual graph and ``sink_side`` the nodes that can still reach the sink.
    With ``limit`` set, augmentation stops once the flow reaches it; the two
    sides then describe a minimum cut only if ``value < limit``.
    """
    n = net.node_count
    s, t = net.source, net.sink
    head: list[int] = []
    cap: list[int] = []
    adj: list[list[int]] = [[] for _ in range(n)]
    for tail, hd, c in net.arcs:
        adj[tail].append(len(head))
        head.append(hd)
        cap.append(c)
        adj[hd].append(len(head))
        head.append(tail)
        cap.append(0)

    value = 0
    while limit is None or value < limit:
        via = [-1] * n
        seen = [False] * n
        seen[s] = True
        queue = deque([s])
        while queue and not seen[t]:
            x = queue.popleft()
            for a in adj[x]:
                y = head[a]
                if cap[a] > 0 and not seen[y]:
                    seen[y] = True
                    via[y] = a
                    queue.append(y)
        if not seen[t]:
            break
        push = None
        y = t
        while y != s:
            a = via[y]
            push = cap[a] if push is None else min(push, cap[a])
            y = head[a ^ 1]
        if limit is not None:
            push = min(push, limit - value)
        y = t
        while y != s:
            a = via[y]
            cap[a] -= push
            cap[a ^ 1] += push
            y = head[a ^ 1]
        value += push

    src_side = {s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for a in adj[x]:
            if cap[a] > 0 and head[a] not in src_side:
                src_side.add(head[a])
                queue.append(head[a])

    sink_side = {t}
    queue = deque([t])
    while queue:
        x = queue.popleft()
        for a in adj[x]:
            # a is x -> y, so a ^ 1 is the arc y -> x
            y = head[a]
            if cap[a ^ 1] > 0 and y not in sink_side:
                sink_side.add(y)
                queue.append(y)

    return FlowResult(value, frozenset(src_side), frozenset(sink_side))


@dataclass
class MixedCutNetwork:
    """Node-split flow network derived from a :class:`MultiGraph`.

    ``in_id[v]`` / ``out_id[v]`` give the network nodes of ``v``; they
    coincide for nodes that are not split (including source and sink).
    """

    network: FlowNetwork
    in_id: list[int]
    out_id: list[int]


def mixed_cut_network(
    graph: MultiGraph, source: int, sink: int, node_caps: Mapping[int, int]
) -> MixedCutNetwork:
    """Split every node in ``node_caps`` except ``source`` and ``sink``."""
    in_id: list[int] = []
    out_id: list[int] = []
    splits: list[tuple[int, int]] = []
    count = 0
    for v in range(graph.node_count):
        if v in node_caps and v != source and v != sink:
            in_id.append(count)
            out_id.append(count + 1)
            splits.append((v, node_caps[v]))
            count += 2
        else:
            in_id.append(count)
            out_id.append(count)
            count += 1
    net = FlowNetwork(count, in_id[source], in_id[sink])
    for v, c in splits:
        net.add_arc(in_id[v], out_id[v], c)
    for u, v in graph.edges:
        net.add_arc(out_id[u], in_id[v], 1)
        net.add_arc(out_id[v], in_id[u], 1)
    return MixedCutNetwork(net, in_id, out_id)


def count_internally_disjoint_paths(
    graph: MultiGraph, u: int, v: int, limit: int | None = None
) -> int:
    """Maximum number of ``u``-``v`` paths that share no internal node.

    Parallel edges count as distinct paths.  ``limit`` caps the search.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    caps = {w: 1 for w in range(graph.node_count)}
    mc = mixed_cut_network(graph, u, v, caps)
    return max_flow_min_cut(mc.network, limit).value


def _edge_flow(graph: MultiGraph, u: int, v: int, limit: int | None) -> int:
    mc = mixed_cut_network(graph, u, v, {})
    return max_flow_min_cut(mc.network, limit).value


def is_k_out_connected(graph: MultiGraph, s: int, k: int) -> bool:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return True
    return all(
        count_internally_disjoint_paths(graph, s, v, limit=k) >= k
        for v in range(graph.node_count)
        if v != s
    )


def is_k_edge_connected(graph: MultiGraph, k: int) -> bool:
    # Every pair is k-edge-connected iff node 0 reaches every other node k times.
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return True
    return all(_edge_flow(graph, 0, v, k) >= k for v in range(1, graph.node_count))


def cut_nodes(graph: MultiGraph) -> set[int]:
    """Articulation points of the underlying simple graph (iterative Tarjan)."""
    adj = [sorted(nb) for nb in graph.adjacency()]
    n = graph.node_count
    disc = [-1] * n
    low = [0] * n
    result: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            x, parent, i = stack[-1]
            if i < len(adj[x]):
                stack[-1] = (x, parent, i + 1)
                y = adj[x][i]
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, x, 0))
                elif y != parent:
                    low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[x])
                    if parent != root and low[x] >= disc[parent]:
                        result.add(parent)
        if root_children > 1:
            result.add(root)
    return result

