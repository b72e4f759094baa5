"""
The subset dynamic program on its own
=====================================

The last stage of the pipeline is a directed Steiner tree solved by the
Dreyfus-Wagner recursion.  Its table has one row per node and one column per
terminal subset, so memory grows as ``n * 2^q`` while the merge work grows
as ``3^q``.
"""

import time

import numpy as np

from bisetcover.steiner import DSTInstance, dreyfus_wagner_dst

rng = np.random.default_rng(3)

# a random digraph with a handful of terminals
n = 40
arcs = [(int(u), int(v), int(rng.integers(1, 10))) for u, v in rng.integers(0, n, size=(300, 2)) if u != v]
for q in range(2, 11, 2):
    terminals = [int(t) for t in rng.choice(np.arange(1, n), size=q, replace=False)]
    t0 = time.perf_counter()
    res = dreyfus_wagner_dst(DSTInstance(n, arcs, 0, terminals))
    dt = time.perf_counter() - t0
    print(f"q={q:2d}  cost={res.cost}  states={res.dp_states:7d}  arcs={len(res.arcs):2d}  {dt * 1000:7.1f} ms")

# single terminal: the table column is plain shortest-path distance
res = dreyfus_wagner_dst(DSTInstance(4, [(0, 1, 4), (1, 3, 4), (0, 2, 1), (2, 3, 2)], 0, [3]))
print("shortest path:", res.cost, res.arcs)
