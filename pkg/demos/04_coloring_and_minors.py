"""Exact chromatic number, complete minors and vertex compression.

The oracles are exhaustive searches with a node budget.  A Hadwiger witness
lists the branch sets and an edge-contraction sequence that turns the graph
into K^h; vertex compression identifies the colour classes of an optimal
colouring inside one closed neighbourhood.

Run:  python3 demos/04_coloring_and_minors.py
"""

from beth import (
    beth2,
    chromatic_number,
    contract_edge,
    cycle_graph,
    hadwiger_number,
    has_complete_minor,
    is_planar_small,
    petersen_graph,
)
from beth.oracles import compress_to_complete, verify_minor_witness
from beth.graph import complete_graph

g = petersen_graph()
chi, col = chromatic_number(g)
print(f"Petersen chi = {chi}, colouring {col.colors}")
h, wit = hadwiger_number(g)
print(f"Petersen h = {h}")
print(f"  branch sets: {[list(b) for b in wit.branch_sets]}")
print(f"  witness valid: {verify_minor_witness(g, complete_graph(h), wit)}")
cur = g
for e in wit.contractions:
    cur, _ = contract_edge(cur, e)
print(f"  after {len(wit.contractions)} contractions: complete on {cur.n} vertices = {cur.is_complete()}")
print(f"  K6 minor: {has_complete_minor(g, 6)}  (K6 needs 16 edges, Petersen has {g.m})")
print(f"  planar: {is_planar_small(g)}")

print()
print("Compressing C5 down to a complete graph; beth2 never rises")
for step, x in enumerate(compress_to_complete(cycle_graph(5), seed=1)):
    print(f"  step {step}: n={x.n} m={x.m} beth2={beth2(x)}")
