import itertools
import random

import numpy as np
import pytest

from bisetcover.biset import Biset, CandidateEdge, covers
from bisetcover.graph import MultiGraph
from bisetcover.instances import random_koca
from bisetcover.oracles import EncaInstance, EncaOracle, KocaInstance, KocaOracle
from bisetcover.separability import (
    build_separability_graph,
    core_edge_inseparable,
    edge_edge_inseparable,
    edge_root_inseparable,
)

from _brute import EnumeratedOracle, koca_family, random_candidates, subtree_predicate


def edge_set(H, names):
    """Adjacency of H as a set of frozenset name pairs."""
    return {
        frozenset((names[x], names[y]))
        for x in range(H.size)
        for y in range(x + 1, H.size)
        if H.adjacency[x, y]
    }


@pytest.fixture
def example_a():
    s, a, b = 0, 1, 2
    inst = KocaInstance(MultiGraph(3, ((s, a), (s, b))), 2, s)
    edges = [CandidateEdge(a, b, 1, 0), CandidateEdge(s, a, 2, 1), CandidateEdge(s, b, 2, 2)]
    return KocaOracle(inst), edges


@pytest.fixture
def example_b():
    a, b, c = 0, 1, 2
    inst = EncaInstance(MultiGraph(3, ((a, b), (b, c))), 2, {b})
    edges = [CandidateEdge(a, c, 1, 0), CandidateEdge(b, c, 1, 1)]
    return EncaOracle(inst, a), edges


def test_core_edge_rule():
    core = Biset.of([1], [1], 3)
    assert core_edge_inseparable(core, CandidateEdge(1, 2))
    assert not core_edge_inseparable(core, CandidateEdge(0, 2))


def test_edge_root_examples(example_a, example_b):
    oracle, (ab, sa, sb) = example_a
    assert edge_root_inseparable(oracle, ab)
    assert edge_root_inseparable(oracle, sa)
    oracle, (ac, bc) = example_b
    assert not edge_root_inseparable(oracle, bc)


def test_edge_edge_examples(example_a, example_b):
    oracle, (ab, sa, sb) = example_a
    assert edge_edge_inseparable(oracle, sa, sb)
    assert edge_edge_inseparable(oracle, ab, sa)
    oracle, (ac, bc) = example_b
    assert edge_edge_inseparable(oracle, ac, bc)


def test_example_a_graph(example_a):
    H = build_separability_graph(*example_a)
    assert H.q == 2
    names = ["C1", "C2", "ab", "sa", "sb", "s"]
    expected = {
        frozenset(p)
        for p in [
            ("s", "ab"), ("s", "sa"), ("s", "sb"), ("ab", "sa"), ("ab", "sb"),
            ("sa", "sb"), ("C1", "ab"), ("C1", "sa"), ("C2", "ab"), ("C2", "sb"),
        ]
    }
    assert edge_set(H, names) == expected


def test_example_b_graph(example_b):
    H = build_separability_graph(*example_b)
    names = ["C", "ac", "bc", "s"]
    expected = {frozenset(p) for p in [("s", "ac"), ("ac", "bc"), ("C", "ac"), ("C", "bc")]}
    assert edge_set(H, names) == expected


def test_empty_candidate_set(example_b):
    oracle, _ = example_b
    H = build_separability_graph(oracle, [])
    assert H.size == 2 and not H.adjacency.any()


def test_adjacency_is_symmetric_without_loops(example_a):
    H = build_separability_graph(*example_a)
    assert (H.adjacency == H.adjacency.T).all()
    assert not H.adjacency.diagonal().any()


@pytest.mark.parametrize("seed", range(15))
def test_restrict_matches_rebuild(seed):
    rng = random.Random(seed)
    n, k = rng.randint(3, 6), rng.randint(1, 3)
    oracle = KocaOracle(random_koca(rng, n, k, 0).koca())
    if not oracle.cores():
        return
    edges = random_candidates(rng, n, rng.randint(1, 6))
    H = build_separability_graph(oracle, edges)
    pos = sorted(rng.sample(range(len(edges)), rng.randint(0, len(edges))))
    sub = build_separability_graph(oracle, [edges[i] for i in pos])
    assert np.array_equal(H.restrict(pos).adjacency, sub.adjacency)


@pytest.mark.parametrize("seed", range(25))
def test_cover_iff_subtree(seed):
    rng = random.Random(1000 + seed)
    n, k = rng.randint(3, 6), rng.randint(1, 3)
    kinst = random_koca(rng, n, k, 0).koca()
    family = koca_family(n, kinst.graph.edges, k, kinst.s)
    oracle = EnumeratedOracle(family, n, kinst.s)
    if not oracle.cores():
        return
    edges = random_candidates(rng, n, rng.randint(1, 5))
    H = build_separability_graph(oracle, edges)
    for r in range(len(edges) + 1):
        for pos in itertools.combinations(range(len(edges)), r):
            J = [edges[i] for i in pos]
            covered = all(any(covers(e, m) for e in J) for m in family)
            assert covered == subtree_predicate(H, pos)


def test_dot_export(example_a):
    dot = build_separability_graph(*example_a).to_dot()
    assert dot.startswith("graph separability {")
    assert 'c0 [shape=box, label="([1], [1])"]' in dot
    assert 'e0 [shape=ellipse, label="1–2:1"]' in dot
    assert 's [shape=diamond, label="s"]' in dot
    assert dot.count(" -- ") == 10
