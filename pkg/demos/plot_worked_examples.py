"""
Two small augmentation problems, solved end to end
==================================================

A star ``a - s - b`` is only 1-out-connected from ``s``.  Adding the edge
``ab`` (cost 1) makes it 2-out-connected, which is cheaper than the two
spokes ``sa`` and ``sb`` (cost 2 each).

The second instance is the path ``a - b - c`` where the middle node is
protected: it must not remain a cut node, and the graph must become
2-edge-connected.
"""

from bisetcover import (
    CandidateEdge,
    EncaInstance,
    KocaInstance,
    MultiGraph,
    brute_force_min_cover,
    solve_enca,
    solve_koca,
    verify_koca,
)

# node ids: s = 0, a = 1, b = 2
star = MultiGraph(3, ((0, 1), (0, 2)))
candidates = [CandidateEdge(1, 2, 1, 0), CandidateEdge(0, 1, 2, 1), CandidateEdge(0, 2, 2, 2)]

sol = solve_koca(KocaInstance(star, k=2, s=0), candidates)
print("star:", sol.status, "edges", sol.edges, "cost", sol.cost, "cores", sol.cores)

# the exhaustive reference agrees
ref = brute_force_min_cover(lambda J: verify_koca(star, 2, 0, J), candidates, p=3)
print("brute force:", ref.status, ref.edges, ref.cost)

# the same instance with a budget of zero edges cannot cover two cores
print("p = 0:", solve_koca(KocaInstance(star, 2, 0), candidates, p=0).status)

# path a - b - c with b protected; adding bc alone would leave b a cut node
path = MultiGraph(3, ((0, 1), (1, 2)))
sol = solve_enca(EncaInstance(path, 2, {1}), [CandidateEdge(0, 2, 1, 0), CandidateEdge(1, 2, 1, 1)])
print("path:", sol.status, "edges", sol.edges, "cost", sol.cost)
