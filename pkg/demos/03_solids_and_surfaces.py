"""Solids: the four shapes of induced subgraph that bound a 3-cell.

A pyramid is an induced cycle plus an apex joined to at least three of its
vertices.  A trihedron is three paths of length at least two between two
vertices.  A stamp is a triangle whose corners send three disjoint paths to
one meeting vertex.  A prism is two disjoint triangles joined by three
disjoint paths.  Each is a minimal closed surface made of induced cycles.

Run:  python3 demos/03_solids_and_surfaces.py
"""

from beth import enumerate_minimal_closed_surfaces, enumerate_solids, octahedron
from beth.graph import Graph, complete_bipartite_graph, complete_graph, triangular_prism
from beth.solids import classify_solid, solid_faces

# every leg has length 2; a leg of length 1 would also make it a pyramid
stamp = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (0, 4), (4, 3), (1, 5), (5, 3), (2, 6), (6, 3)])
shapes = {
    "K4 (pyramid over a triangle)": complete_graph(4),
    "K2,3 (trihedron)": complete_bipartite_graph(2, 3),
    "stamp": stamp,
    "triangular prism": triangular_prism(),
}
for name, g in shapes.items():
    kind = classify_solid(g)
    print(f"{name}: classified as {kind.kind}")
    (solid,) = enumerate_solids(g)
    faces = solid_faces(g, solid)
    print(f"  faces: {[c.vertices for c in faces]}")
    print(f"  faces - edges + vertices = {len(faces) - g.m + g.n}")

diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
print()
print(f"diamond (K4 minus an edge): solid? {classify_solid(diamond) is not None}")
print(f"  minimal closed surfaces: {enumerate_minimal_closed_surfaces(diamond)}")

print()
g = octahedron()
solids = [s.vertices for s in enumerate_solids(g)]
surfaces = enumerate_minimal_closed_surfaces(g)
print(f"octahedron solids:   {solids}")
print(f"minimal surfaces:    {surfaces}")
print(f"same vertex sets: {sorted(solids) == sorted(surfaces)}")
