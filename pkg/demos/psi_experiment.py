"""Sample advice uniformly from the class of a random chordal skeleton and
tabulate the search cost by advice quality."""

import sys

from causaladvice.experiment import run_experiment
from causaladvice.generators import gen_chordal

n = int(sys.argv[1]) if len(sys.argv) > 1 else 14
m = int(sys.argv[2]) if len(sys.argv) > 2 else 200
skel = gen_chordal("thickened", n, 3)
print(f"skeleton: {n} nodes, {len(skel.edges)} edges; {m} advice DAGs")
res = run_experiment(skel, m, 0.01, seed=1)
print(f"nu1 = {res.rows[0].nu1}, blind search = {res.rows[0].mean_blind:.0f}, eps = {res.rows[0].eps:.3f}")
print(f"{'psi':>4} {'trials':>7} {'mean':>7} {'std':>6} {'ecdf':>6}")
for r in res.rows:
    print(f"{r.psi:>4} {r.trials:>7} {r.mean_advice:>7.2f} {r.std_advice:>6.2f} {r.ecdf:>6.2f}")
