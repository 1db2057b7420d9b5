import random
from functools import lru_cache
from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given, settings

from beth.cycles import InducedCycle, enumerate_induced_cycles
from beth.graph import (
    Graph,
    GraphError,
    complete_bipartite_graph,
    complete_graph,
    cone,
    cycle_graph,
    induced_subgraph,
    mask_of,
    octahedron,
    triangular_prism,
)
from beth.solids import (
    KIND_ORDER,
    ClosedSet,
    classify_solid,
    count_solids,
    decompose_closed_set,
    edge_usage,
    enumerate_minimal_closed_surfaces,
    enumerate_solids,
    enumerate_solids_bruteforce,
    faces_are_closed_and_indecomposable,
    is_closed_set,
    refine_cycle,
    solid_faces,
    strong_minimality_violations,
)

from conftest import connected_graphs, seeded_graphs, to_nx


# --- a catalog of solid graphs built straight from the definitions ----------

def _path_edges(a, b, inner, nxt):
    """Edges of a path a..b through ``inner`` fresh vertices numbered from nxt."""
    chain = [a] + list(range(nxt, nxt + inner)) + [b]
    return list(zip(chain, chain[1:])), nxt + inner


def _pyramids(max_n):
    for k in range(3, max_n):
        for size in range(3, k + 1):
            for sub in combinations(range(k), size):
                edges = [(i, (i + 1) % k) for i in range(k)] + [(k, i) for i in sub]
                yield nx.Graph(edges)


def _trihedra(max_n):
    # all three paths have length >= 2 (see the ledger: a length-1 path adds a chord)
    for a, b, c in product(range(1, max_n), repeat=3):
        if a <= b <= c and a + b + c + 2 <= max_n:
            edges, nxt = [], 2
            for inner in (a, b, c):
                es, nxt = _path_edges(0, 1, inner, nxt)
                edges += es
            yield nx.Graph(edges)


def _stamps(max_n):
    for ls in product(range(0, max_n), repeat=3):
        if 4 + sum(ls) <= max_n:
            edges, nxt = [(0, 1), (1, 2), (0, 2)], 4
            for t, inner in zip((0, 1, 2), ls):
                es, nxt = _path_edges(t, 3, inner, nxt)
                edges += es
            yield nx.Graph(edges)


def _prisms(max_n):
    for ls in product(range(0, max_n), repeat=3):
        if 6 + sum(ls) <= max_n:
            edges, nxt = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], 6
            for t, inner in zip((0, 1, 2), ls):
                es, nxt = _path_edges(t, t + 3, inner, nxt)
                edges += es
            yield nx.Graph(edges)


@lru_cache(maxsize=None)
def catalog(max_n=8):
    out = []  # (nx graph, kind)
    for kind, gen in zip(KIND_ORDER, (_pyramids, _trihedra, _stamps, _prisms)):
        for G in gen(max_n):
            out.append((G, kind))
    return out


def catalog_kinds(G):
    return {kind for H, kind in catalog() if H.number_of_nodes() == G.number_of_nodes()
            and H.number_of_edges() == G.number_of_edges() and nx.is_isomorphic(H, G)}


def from_nx(G):
    G = nx.convert_node_labels_to_integers(G)
    return Graph.from_edges(G.number_of_nodes(), G.edges())


def expected_kind(kinds):
    return next((k for k in KIND_ORDER if k in kinds), None)


def test_classify_examples():
    assert classify_solid(complete_graph(4)).kind == "pyramid"
    k23 = classify_solid(complete_bipartite_graph(2, 3))
    assert k23.kind == "trihedron" and k23.branch == (0, 1)
    assert classify_solid(triangular_prism()).kind == "prism"
    assert classify_solid(cycle_graph(6)) is None


def test_diamond_is_not_a_solid():
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert classify_solid(diamond) is None
    # its outer 4-cycle has a chord, so the triangles alone cannot close up
    assert enumerate_minimal_closed_surfaces(diamond) == []


def test_catalog_members_are_classified():
    for G, _ in catalog():
        g = from_nx(G)
        kinds = catalog_kinds(G)
        got = classify_solid(g)
        assert got is not None and got.kind == expected_kind(kinds), (nx.to_graph6_bytes(G), kinds)


def test_classification_agrees_with_catalog_on_atlas(atlas7):
    for g in atlas7:
        got = classify_solid(g)
        kinds = catalog_kinds(to_nx(g)) if g.n >= 4 else set()
        assert (got.kind if got else None) == expected_kind(kinds)


def test_features_are_consistent():
    for G, _ in catalog():
        g = from_nx(G)
        k = classify_solid(g)
        if k.kind == "pyramid":
            rest, _ = induced_subgraph(g, [v for v in range(g.n) if v != k.apex])
            assert all(rest.degree(v) == 2 for v in range(rest.n))
        elif k.kind == "trihedron":
            x, y = k.branch
            assert g.degree(x) == g.degree(y) == 3 and not g.has_edge(x, y)
        elif k.kind == "stamp":
            a, b, c = k.triangle
            assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
            assert g.degree(k.meeting) == 3 and k.meeting not in k.triangle
        else:
            for t in k.triangles:
                assert all(g.has_edge(u, v) for u, v in combinations(t, 2))
            assert not set(k.triangles[0]) & set(k.triangles[1])


def test_enumeration_examples():
    assert [s.vertices for s in enumerate_solids(complete_graph(4))] == [(0, 1, 2, 3)]
    octa = enumerate_solids(octahedron())
    assert len(octa) == 6 and {s.kind.kind for s in octa} == {"pyramid"}
    k5 = enumerate_solids(complete_graph(5))
    assert [s.vertices for s in k5] == [tuple(c) for c in combinations(range(5), 4)]
    assert enumerate_solids(cycle_graph(6)) == []
    assert enumerate_solids_bruteforce(octahedron()) == octa


def test_bruteforce_limit():
    with pytest.raises(GraphError):
        enumerate_solids_bruteforce(complete_graph(13))


@given(connected_graphs(min_n=4, max_n=9))
@settings(max_examples=80, deadline=None)
def test_enumeration_matches_subset_scan(g):
    assert enumerate_solids(g) == enumerate_solids_bruteforce(g)


def test_solid_invariants_random():
    for g in seeded_graphs(60, 9, seed=41, n_min=4):
        host = set(enumerate_induced_cycles(g))
        for s in enumerate_solids(g):
            h, _ = induced_subgraph(g, s.vertices)
            assert classify_solid(h).kind == s.kind.kind
            faces = solid_faces(g, s)
            assert set(faces) <= host
            # a solid is a sphere: faces - edges + vertices = 2
            assert len(faces) - h.m + h.n == 2
            assert faces_are_closed_and_indecomposable(g, s)


def test_cone_adds_one_solid_per_cycle():
    for g in seeded_graphs(100, 7, seed=42):
        assert count_solids(cone(g)[0]) == count_solids(g) + len(enumerate_induced_cycles(g))


def test_complete_graph_solids_are_k4s():
    from math import comb
    for r in range(1, 9):
        assert count_solids(complete_graph(r)) == comb(r, 4)


# --- closed sets ------------------------------------------------------------

def _cycles(g, *seqs):
    return [InducedCycle.from_sequence(s) for s in seqs]


def test_closed_set_examples():
    k4 = complete_graph(4)
    tris = enumerate_induced_cycles(k4)
    assert is_closed_set(k4, tris)
    assert not is_closed_set(k4, tris[:1])
    prism = triangular_prism()
    assert is_closed_set(prism, enumerate_induced_cycles(prism))
    cs = ClosedSet(tuple(tris))
    assert len(cs.edges) == 6 and set(edge_usage(tris).values()) == {2}


def test_closed_set_rejects_non_induced_member():
    with pytest.raises(GraphError):
        is_closed_set(complete_graph(4), _cycles(complete_graph(4), (0, 1, 2, 3)))


def test_decompose_examples():
    two = Graph.from_edges(8, [e for base in (0, 4) for e in combinations(range(base, base + 4), 2)] + [(3, 4)])
    faces = enumerate_induced_cycles(two)
    parts = decompose_closed_set(two, faces)
    assert len(parts) == 2
    k4 = complete_graph(4)
    assert len(decompose_closed_set(k4, enumerate_induced_cycles(k4))) == 1
    with pytest.raises(GraphError):
        decompose_closed_set(k4, enumerate_induced_cycles(k4)[:2])


def test_decompose_is_order_free_and_edge_disjoint():
    rng = random.Random(43)
    g = Graph.from_edges(9, [e for base in (0, 3) for e in combinations(range(base, base + 4), 2)]
                         + [(7, 8), (6, 7), (6, 8), (5, 6), (5, 7), (5, 8)])
    faces = [c for s in enumerate_solids(g) for c in solid_faces(g, s)]
    faces = sorted(set(faces))
    # keep a closed union of edge-disjoint solids
    chosen = [c for c in faces if c.mask & ~mask_of(range(4)) == 0] + \
             [c for c in faces if c.mask & ~mask_of(range(5, 9)) == 0]
    base = decompose_closed_set(g, chosen)
    for _ in range(10):
        rng.shuffle(chosen)
        assert decompose_closed_set(g, chosen) == base
    used = [set(p.edges) for p in base]
    assert not used[0] & used[1]
    assert sorted(c for p in base for c in p.cycles) == sorted(chosen)


# --- refinement -------------------------------------------------------------

def _check_refinement(g, cyc, parts):
    assert {v for c in parts for v in c.vertices} == set(cyc)
    cyc_edges = {tuple(sorted(e)) for e in zip(cyc, cyc[1:] + cyc[:1])}
    use = edge_usage(parts)
    for e, k in use.items():
        assert k == (1 if e in cyc_edges else 2)
    assert cyc_edges <= set(use)


def test_refine_examples():
    c5 = cycle_graph(5)
    assert refine_cycle(c5, [0, 1, 2, 3, 4]) == [InducedCycle((0, 1, 2, 3, 4))]
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    parts = refine_cycle(diamond, [0, 1, 3, 2])
    assert sorted(p.vertices for p in parts) == [(0, 1, 2), (1, 2, 3)]
    k4 = complete_graph(4)
    parts = refine_cycle(k4, [0, 1, 2, 3])
    assert len(parts) == 2 and all(len(p) == 3 for p in parts)
    _check_refinement(k4, [0, 1, 2, 3], parts)
    with pytest.raises(GraphError):
        refine_cycle(c5, [0, 2, 4])


def test_refine_random_cycles():
    rng = random.Random(44)
    for g in seeded_graphs(80, 9, seed=45, n_min=4):
        G = to_nx(g)
        cycles = [c for c in nx.simple_cycles(G, length_bound=g.n) if len(c) >= 3]
        for cyc in rng.sample(cycles, min(5, len(cycles))):
            _check_refinement(g, cyc, refine_cycle(g, cyc))


# --- minimal closed surfaces ------------------------------------------------

def test_minimal_surface_examples():
    assert enumerate_minimal_closed_surfaces(complete_graph(4)) == [(0, 1, 2, 3)]
    octa = enumerate_minimal_closed_surfaces(octahedron())
    assert octa == [s.vertices for s in enumerate_solids(octahedron())]
    assert len(octa) == 6


def test_minimal_surface_limits():
    with pytest.raises(GraphError):
        enumerate_minimal_closed_surfaces(complete_graph(11))
    from beth.cycles import BudgetExceeded
    with pytest.raises(BudgetExceeded):
        enumerate_minimal_closed_surfaces(complete_graph(4), budget=5)


def test_no_strong_minimality_violations(atlas7):
    # every minimal closed surface is also strongly minimal on the corpus
    for g in atlas7[::4]:
        assert strong_minimality_violations(g) == []
