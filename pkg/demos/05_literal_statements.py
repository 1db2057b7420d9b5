"""Two printed identities that fail on tiny graphs, and their corrected forms.

1. Identifying two nonadjacent vertices u, v with d common neighbours
   removes one vertex and d edges, so beth1 changes by 1 - d, not by -d.
2. "h(G) <= l(G)" (l = longest cycle length) fails for acyclic graphs: a
   tree has a K2 minor but no cycle.  It holds whenever G has a cycle.

Run:  python3 demos/05_literal_statements.py
"""

from beth import beth1, cycle_graph, hadwiger_number, longest_cycle_length, path_graph, contract_nonedge
from beth.cycles import count_length2_paths

g = cycle_graph(4)
u, v = 0, 2
h, _ = contract_nonedge(g, u, v)
d = count_length2_paths(g, u, v)
print(f"C4, identify {u} and {v}: common neighbours d = {d}")
print(f"  beth1 before {beth1(g)}, after {beth1(h)}, change {beth1(h) - beth1(g)}")
print(f"  -d = {-d},  1 - d = {1 - d}")

print()
for name, t in (("P4", path_graph(4)), ("K1", path_graph(1)), ("C5", cycle_graph(5))):
    print(f"{name}: h = {hadwiger_number(t)[0]}, l = {longest_cycle_length(t)}")
