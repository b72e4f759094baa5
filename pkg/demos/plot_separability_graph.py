"""
Looking inside the reduction: the separability graph
=====================================================

The solver never enumerates the tight family.  It asks a max-flow oracle for
the cores and for maximal uncovered members, and builds a graph whose nodes
are the cores, the candidate edges and the root.  A set of candidates is a
cover exactly when, together with the root, it forms a connected subgraph
that touches every core.
"""

import itertools

from bisetcover import (
    CandidateEdge,
    KocaInstance,
    KocaOracle,
    MultiGraph,
    build_separability_graph,
    verify_koca,
)

star = MultiGraph(3, ((0, 1), (0, 2)))
oracle = KocaOracle(KocaInstance(star, 2, 0))
print("cores:", oracle.cores())
print("maximal members:", oracle.uncovered_max())

edges = [CandidateEdge(1, 2, 1, 0), CandidateEdge(0, 1, 2, 1), CandidateEdge(0, 2, 2, 2)]
H = build_separability_graph(oracle, edges)

# adjacency matrix, nodes ordered as cores, candidate edges, root
print(H.adjacency.astype(int))
print("max-flow calls so far:", oracle.maxflow_calls)

# render with graphviz: ``dot -Tpng h.dot -o h.png``
print(H.to_dot())


def rooted_subtree(positions):
    # the chosen edge-nodes plus the root are connected and see every core
    nodes = [H.edge_index(i) for i in positions] + [H.root_index]
    seen, stack = {nodes[-1]}, [nodes[-1]]
    while stack:
        x = stack.pop()
        for y in H.neighbors(x):
            if y in nodes and y not in seen:
                seen.add(y)
                stack.append(y)
    touches = all(any(H.adjacency[c, x] for x in nodes[:-1]) for c in range(H.q))
    return len(seen) == len(nodes) and touches


# the cover / connectivity equivalence, checked on every subset
for r in range(len(edges) + 1):
    for pos in itertools.combinations(range(len(edges)), r):
        feasible = verify_koca(star, 2, 0, [edges[i] for i in pos])
        print(pos, "feasible" if feasible else "infeasible", "| subtree" if rooted_subtree(pos) else "| no subtree")
