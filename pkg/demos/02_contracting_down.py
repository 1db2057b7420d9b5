"""Contracting a random graph edge by edge and watching the characteristics fall.

Every edge contraction keeps beth1, beth2 and beth3 the same or lowers
them.  The walk below contracts random edges until the graph is complete and
prints the three values at each step.

Run:  python3 demos/02_contracting_down.py [seed]
"""

import random
import sys

from beth import beth1, beth2, beth3, contract_edge, to_graph6
from beth.graph import random_connected_graph

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 3
rng = random.Random(seed)
g = random_connected_graph(9, 0.45, seed)

print(f"start: {to_graph6(g)}  n={g.n} m={g.m}")
print(f"{'step':>4} {'n':>3} {'m':>3} {'beth1':>6} {'beth2':>6} {'beth3':>6}  contracted")
step, last = 0, None
while True:
    vals = (beth1(g), beth2(g), beth3(g))
    if last is not None:
        assert all(a <= b for a, b in zip(vals, last)), "monotonicity violated"
    print(f"{step:>4} {g.n:>3} {g.m:>3} " + " ".join(f"{v:>6}" for v in vals) + f"  {last_edge if step else ''}")
    if g.is_complete():
        break
    last_edge = rng.choice(g.edges())
    g, _ = contract_edge(g, last_edge)
    last, step = vals, step + 1
print(f"reached K{g.n}")
