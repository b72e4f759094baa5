"""Separability graph over cores, candidate edges and the root.

Two items are adjacent when no family member separates them.  The three
adjacency tests only need uncovered-maximal queries on the oracle:

* core ``C`` vs edge ``e``: adjacent iff ``e`` has an endpoint in ``C``;
* edge ``e`` vs root: adjacent iff no maximal member has ``e`` inside ``A+``;
* edge ``e`` vs edge ``f``: ``e`` is separable from ``f`` iff some maximal
  member left uncovered by the edges joining ``f``'s endpoints to the root
  has ``e`` inside ``A+``.  The pair is adjacent only when neither direction
  is separable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .biset import Biset, CandidateEdge, nodes_of
from .oracles import FamilyOracle


def core_edge_inseparable(c: Biset, e: CandidateEdge) -> bool:
    return bool(e.mask & c.inner)


def _aux_edges(oracle: FamilyOracle, f: CandidateEdge) -> list[tuple[int, int]]:
    # An endpoint equal to the root would give a self-loop, which covers nothing.
    return [(x, oracle.root) for x in (f.u, f.v) if x != oracle.root]


def _inside_some(mask: int, members: Sequence[Biset]) -> bool:
    return any(not (mask & ~b.outer) for b in members)


def edge_root_inseparable(oracle: FamilyOracle, e: CandidateEdge) -> bool:
    return not _inside_some(e.mask, oracle.uncovered_max(()))


def edge_edge_inseparable(oracle: FamilyOracle, e: CandidateEdge, f: CandidateEdge) -> bool:
    e_from_f = _inside_some(e.mask, oracle.uncovered_max(_aux_edges(oracle, f)))
    f_from_e = _inside_some(f.mask, oracle.uncovered_max(_aux_edges(oracle, e)))
    return not e_from_f and not f_from_e


@dataclass
class SeparabilityGraph:
    """Adjacency matrix over ``cores + edges + [root]`` in that order."""

    cores: list[Biset]
    edges: list[CandidateEdge]
    adjacency: np.ndarray

    @property
    def q(self) -> int:
        return len(self.cores)

    @property
    def root_index(self) -> int:
        return len(self.cores) + len(self.edges)

    def edge_index(self, i: int) -> int:
        return len(self.cores) + i

    @property
    def size(self) -> int:
        return self.root_index + 1

    def neighbors(self, x: int) -> list[int]:
        return [int(y) for y in np.flatnonzero(self.adjacency[x])]

    def restrict(self, edge_positions: Sequence[int]) -> "SeparabilityGraph":
        """Subgraph induced by all cores, the chosen edges and the root."""
        keep = list(range(self.q)) + [self.q + i for i in edge_positions] + [self.root_index]
        sub = self.adjacency[np.ix_(keep, keep)].copy()
        return SeparabilityGraph(list(self.cores), [self.edges[i] for i in edge_positions], sub)

    def to_dot(self) -> str:
        lines = ["graph separability {"]
        for i, c in enumerate(self.cores):
            label = f"({nodes_of(c.inner)}, {nodes_of(c.outer)})"
            lines.append(f'  c{i} [shape=box, label="{label}"];')
        for i, e in enumerate(self.edges):
            lines.append(f'  e{i} [shape=ellipse, label="{e.u}–{e.v}:{e.cost}"];')
        lines.append('  s [shape=diamond, label="s"];')
        names = [f"c{i}" for i in range(self.q)] + [f"e{i}" for i in range(len(self.edges))] + ["s"]
        for x in range(self.size):
            for y in range(x + 1, self.size):
                if self.adjacency[x, y]:
                    lines.append(f"  {names[x]} -- {names[y]};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_separability_graph(
    oracle: FamilyOracle, edges: Sequence[CandidateEdge], cores: Sequence[Biset] | None = None
) -> SeparabilityGraph:
    cores = list(oracle.cores() if cores is None else cores)
    edges = list(edges)
    q, m = len(cores), len(edges)
    size = q + m + 1
    adj = np.zeros((size, size), dtype=bool)
    root = q + m

    for i, c in enumerate(cores):
        for j, e in enumerate(edges):
            if core_edge_inseparable(c, e):
                adj[i, q + j] = adj[q + j, i] = True

    top = oracle.uncovered_max(())
    for j, e in enumerate(edges):
        if not _inside_some(e.mask, top):
            adj[q + j, root] = adj[root, q + j] = True

    # The query for "separable from f" depends only on f's endpoint pair.
    cache: dict[int, list[Biset]] = {}
    for f in edges:
        if f.mask not in cache:
            cache[f.mask] = oracle.uncovered_max(_aux_edges(oracle, f))
    for a in range(m):
        for b in range(a + 1, m):
            e, f = edges[a], edges[b]
            if _inside_some(e.mask, cache[f.mask]) or _inside_some(f.mask, cache[e.mask]):
                continue
            adj[q + a, q + b] = adj[q + b, q + a] = True

    return SeparabilityGraph(cores, edges, adj)
