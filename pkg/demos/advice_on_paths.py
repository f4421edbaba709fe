"""How advice quality changes the cost on a 512-node path.

The true source sits at one end.  The advice claims the source sits ``d``
hops away.  Blind search pays about log2(n); good advice pays one.
"""

import math

from causaladvice.advice import psi_proxy
from causaladvice.fixtures import path_dag
from causaladvice.oracle import Oracle
from causaladvice.search import advice_search, full_search
from causaladvice.verification import verifying_set_atomic

N = 512
truth = path_dag(N, 0)
blind = full_search(Oracle(truth)).count
print(f"n = {N}, blind search: {blind} interventions (log2 n = {math.log2(N):.0f})")
print(f"{'d':>5} {'psi':>5} {'used':>5}  rounds")
for d in (0, 1, 3, 7, 31, 127, 511):
    advice = path_dag(N, d)
    psi = psi_proxy(truth, verifying_set_atomic(advice)).psi
    rep = advice_search(Oracle(truth), advice)
    rounds = " ".join(f"r={r.r}" + ("*" if r.forced else "") for r in rep.rounds)
    print(f"{d:>5} {psi:>5} {rep.count:>5}  {rounds or '-'}")
print("(* marks a round where the ball stopped growing and the whole graph was searched)")
