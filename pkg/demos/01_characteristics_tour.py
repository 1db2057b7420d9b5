"""Counting cells and reading off bounds on chi and h.

beth1 = |E| - |V|, beth2 = |C| - |E| + |V| and beth3 = |S| - |C| + |E| - |V|
are alternating counts of vertices, edges, induced cycles and solids.  Each
one only drops under contraction, so comparing it with the value on K^r
bounds the largest complete graph a graph can be contracted to.

Run:  python3 demos/01_characteristics_tour.py
"""

from beth import beth_complete, complete_graph, octahedron, petersen_graph, report

print("Values on complete graphs")
print(f"{'r':>3} {'beth1':>6} {'beth2':>6} {'beth3':>6}")
for r in range(1, 10):
    print(f"{r:>3} " + " ".join(f"{beth_complete(i, r):>6}" for i in (1, 2, 3)))

print()
print("The octahedron: 6 vertices, 12 edges")
rep = report(octahedron(), with_oracles=True)
faces = rep.m - rep.n + 2
print(f"  induced cycles |C| = {rep.c}  (8 triangles and 3 squares)")
print(f"  solids |S| = {rep.s}  (one pyramid per vertex, over the opposite square)")
print(f"  |S| - |C| + F = {rep.s - rep.c + faces}  with F = {faces} faces")
print(f"  bounds from beth1/2/3: {rep.bound1}, {rep.bound2}, {rep.bound3}")
print(f"  exact: chi = {rep.chi}, h = {rep.hadwiger}, planar = {rep.planar}")

print()
print("The Petersen graph")
rep = report(petersen_graph(), with_oracles=True)
print(f"  beth = ({rep.beth1}, {rep.beth2}, {rep.beth3}), bounds = ({rep.bound1}, {rep.bound2}, {rep.bound3})")
print(f"  exact: chi = {rep.chi}, h = {rep.hadwiger}")

print()
print("Where each bound is tight: K^r itself")
for r in (5, 8):
    rep = report(complete_graph(r))
    print(f"  K{r}: beth = ({rep.beth1}, {rep.beth2}, {rep.beth3}), bounds = ({rep.bound1}, {rep.bound2}, {rep.bound3})")
