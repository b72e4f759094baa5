"""
Where the time goes as the number of cores grows
================================================

Pendant cycles hanging off the root each contribute one core.  The number of
DP states is ``(|E| + 1 + q) * 2^q`` and is independent of the node count,
while the oracle work grows only polynomially with ``n``.
"""

import time

from bisetcover.instances import pendant_cycles_koca, solve_instance

for cores in (4, 6, 8, 10, 12):
    inst = pendant_cycles_koca(cores=cores, n=5 * cores + 1)
    t0 = time.perf_counter()
    sol = solve_instance(inst)
    dt = time.perf_counter() - t0
    print(
        f"q={sol.cores:2d}  n={inst.n:3d}  |E|={len(inst.candidates):2d}  cost={sol.cost:2d}"
        f"  flows={sol.maxflow_calls:5d}  states={sol.dp_states:7d}  {dt:6.2f} s"
    )

# fixed q, growing n: the state count does not move
for n in (40, 60, 80):
    sol = solve_instance(pendant_cycles_koca(cores=8, n=n))
    print(f"n={n:3d}  states={sol.dp_states}  flows={sol.maxflow_calls}")
