"""JSON instance / result files and seeded random instance generators."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Optional

from .biset import CandidateEdge
from .graph import MultiGraph, is_k_out_connected
from .oracles import EncaInstance, KocaInstance
from .solver import OPTIMAL, Solution, solve_enca, solve_koca, verify_enca, verify_koca
from .steiner import DEFAULT_Q_LIMIT

PROBLEMS = ("koca", "enca")


class InstanceFormatError(ValueError):
    pass


@dataclass
class InstanceFile:
    problem: str
    n: int
    k: int
    base_edges: list[tuple[int, int]]
    candidates: list[CandidateEdge]
    root: Optional[int] = None
    Q: list[int] = field(default_factory=list)
    p: Optional[int] = None

    def base_graph(self) -> MultiGraph:
        return MultiGraph(self.n, tuple(self.base_edges))

    def koca(self) -> KocaInstance:
        return KocaInstance(self.base_graph(), self.k, self.root)

    def enca(self) -> EncaInstance:
        return EncaInstance(self.base_graph(), self.k, frozenset(self.Q))

    def to_dict(self) -> dict:
        d: dict = {"problem": self.problem, "n": self.n, "k": self.k}
        if self.problem == "koca":
            d["root"] = self.root
        else:
            d["Q"] = sorted(self.Q)
        d["base_edges"] = [[u, v] for u, v in self.base_edges]
        d["candidates"] = [{"u": e.u, "v": e.v, "cost": e.cost} for e in self.candidates]
        if self.p is not None:
            d["p"] = self.p
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _int(d: dict, key: str) -> int:
    x = d.get(key)
    if not isinstance(x, int) or isinstance(x, bool):
        raise InstanceFormatError(f"field {key!r} must be an integer")
    return x


def parse_instance(d: dict) -> InstanceFile:
    """Validate a decoded instance document.  Promise checks happen later."""
    if not isinstance(d, dict):
        raise InstanceFormatError("instance must be a JSON object")
    problem = d.get("problem")
    if problem not in PROBLEMS:
        raise InstanceFormatError(f"problem must be one of {PROBLEMS}")
    n = _int(d, "n")
    k = _int(d, "k")
    if n < 1:
        raise InstanceFormatError("n must be positive")

    def node(x) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
            raise InstanceFormatError(f"node {x!r} outside [0, {n})")
        return x

    base = []
    for pair in d.get("base_edges", []):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InstanceFormatError("base edges must be [u, v] pairs")
        u, v = node(pair[0]), node(pair[1])
        if u == v:
            raise InstanceFormatError(f"self-loop at node {u}")
        base.append((u, v))
    cands = []
    for i, c in enumerate(d.get("candidates", [])):
        if not isinstance(c, dict):
            raise InstanceFormatError("candidates must be objects")
        u, v = node(c.get("u")), node(c.get("v"))
        cost = _int(c, "cost")
        if u == v:
            raise InstanceFormatError(f"candidate {i} is a self-loop")
        if cost < 0:
            raise InstanceFormatError(f"candidate {i} has negative cost")
        cands.append(CandidateEdge(u, v, cost, i))
    root = None
    Q: list[int] = []
    if problem == "koca":
        root = node(d.get("root"))
    else:
        Q = sorted({node(x) for x in d.get("Q", [])})
    p = d.get("p")
    if p is not None and (not isinstance(p, int) or isinstance(p, bool) or p < 0):
        raise InstanceFormatError("p must be a non-negative integer")
    return InstanceFile(problem, n, k, base, cands, root, Q, p)


def loads_instance(text: str) -> InstanceFile:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"malformed JSON: {exc}") from exc
    return parse_instance(d)


def result_dict(sol: Solution, timing: bool = True) -> dict:
    d: dict = {"status": sol.status, "cost": sol.cost}
    if sol.status == OPTIMAL:
        d["edges"] = sorted(sol.edges)
    d["cores"] = sol.cores
    d["maxflow_calls"] = sol.maxflow_calls
    d["dp_states"] = sol.dp_states
    d["millis"] = sol.millis if timing else 0
    return d


def dumps_result(sol: Solution, timing: bool = True) -> str:
    return json.dumps(result_dict(sol, timing), indent=2) + "\n"


def loads_result(text: str) -> Solution:
    d = json.loads(text)
    return Solution(
        d["status"],
        tuple(d.get("edges", ())),
        d.get("cost", 0),
        d.get("cores", 0),
        d.get("maxflow_calls", 0),
        d.get("dp_states", 0),
        d.get("millis", 0),
    )


def _random_tree(rng: random.Random, n: int) -> list[tuple[int, int]]:
    order = list(range(n))
    rng.shuffle(order)
    return [(order[rng.randrange(i)], order[i]) for i in range(1, n)]


def _random_pair(rng: random.Random, n: int) -> tuple[int, int]:
    u, v = rng.sample(range(n), 2)
    return u, v


def _random_candidates(rng, n, m, cost_range) -> list[CandidateEdge]:
    lo, hi = cost_range
    out = []
    for i in range(m):
        u, v = _random_pair(rng, n)
        out.append(CandidateEdge(u, v, rng.randint(lo, hi), i))
    return out


def random_koca(
    rng: random.Random, n: int, k: int, m: int, cost_range=(1, 5)
) -> InstanceFile:
    """Base graph: ``k-1`` random spanning trees, then random edges until it is
    ``(k-1)``-out-connected from the root."""
    if n < 2:
        raise ValueError("need at least two nodes")
    s = rng.randrange(n)
    edges: list[tuple[int, int]] = []
    for _ in range(k - 1):
        edges.extend(_random_tree(rng, n))
    while not is_k_out_connected(MultiGraph(n, tuple(edges)), s, k - 1):
        edges.append(_random_pair(rng, n))
    for _ in range(rng.randint(0, 1 if k > 1 else n - 2)):
        edges.append(_random_pair(rng, n))
    return InstanceFile("koca", n, k, edges, _random_candidates(rng, n, m, cost_range), root=s)


def random_enca(
    rng: random.Random, n: int, k: int, m: int, cost_range=(1, 5), q_prob: float = 0.5
) -> InstanceFile:
    """Base graph: union of ``k-1`` random spanning trees, hence
    ``(k-1)``-edge-connected."""
    if n < 2 or k < 2:
        raise ValueError("need n >= 2 and k >= 2")
    edges: list[tuple[int, int]] = []
    for _ in range(k - 1):
        edges.extend(_random_tree(rng, n))
    for _ in range(rng.randint(0, 1)):
        edges.append(_random_pair(rng, n))
    Q = [v for v in range(n) if rng.random() < q_prob]
    return InstanceFile("enca", n, k, edges, _random_candidates(rng, n, m, cost_range), Q=Q)


def verifier_for(inst: InstanceFile):
    """Feasibility predicate on candidate subsets for this instance."""
    g = inst.base_graph()
    if inst.problem == "koca":
        return lambda J: verify_koca(g, inst.k, inst.root, J)
    Q = set(inst.Q)
    return lambda J: verify_enca(g, inst.k, Q, J)


def solve_instance(
    inst: InstanceFile, p: Optional[int] = None, q_limit: int = DEFAULT_Q_LIMIT
) -> Solution:
    """Dispatch to the matching pipeline; raises PromiseError on a bad base graph."""
    p = inst.p if p is None else p
    if inst.problem == "koca":
        return solve_koca(inst.koca(), inst.candidates, p, q_limit)
    return solve_enca(inst.enca(), inst.candidates, p, q_limit)


def pendant_cycles_koca(cores: int = 12, n: int = 60) -> InstanceFile:
    """A 2-OCA instance with exactly ``cores`` cores on ``n`` nodes.

    The root 0 carries ``cores`` pendant cycles, each attached by one edge
    through its first node, so the rest of each cycle is a core with that
    node as boundary.  Candidates chain neighbouring cycles (cost 1), join
    each cycle to the root (cost 2) and skip one cycle (cost 2).
    """
    if n - 1 < 3 * cores:
        raise ValueError("need at least three nodes per cycle")
    sizes = [(n - 1) // cores + (1 if i < (n - 1) % cores else 0) for i in range(cores)]
    base: list[tuple[int, int]] = []
    cycles = []
    nxt = 1
    for size in sizes:
        nodes = list(range(nxt, nxt + size))
        nxt += size
        cycles.append(nodes)
        base.append((0, nodes[0]))
        base.extend((nodes[i], nodes[(i + 1) % size]) for i in range(size))
    cands: list[tuple[int, int, int]] = []
    for i in range(cores - 1):
        cands.append((cycles[i][2], cycles[i + 1][2], 1))
    for i in range(cores):
        cands.append((cycles[i][2], 0, 2))
    for i in range(cores - 2):
        cands.append((cycles[i][1], cycles[i + 2][-1], 2))
    candidates = [CandidateEdge(u, v, c, i) for i, (u, v, c) in enumerate(cands)]
    return InstanceFile("koca", n, 2, base, candidates, root=0)
