import networkx as nx
import pytest

from beth.cycles import BudgetExceeded, longest_cycle_length
from beth.graph import (
    Graph,
    GraphError,
    complete_bipartite_graph,
    complete_graph,
    contract_edge,
    contract_nonedge,
    cycle_graph,
    induced_subgraph,
    octahedron,
    path_graph,
    petersen_graph,
)
from beth.oracles import (
    chromatic_number,
    closed_neighborhood,
    compress_to_complete,
    find_minor_model,
    hadwiger_number,
    has_complete_minor,
    has_k_coloring,
    is_planar_small,
    neighborhood_colorings,
    nonedge_preserving_chi,
    optimal_colorings,
    verify_minor_witness,
    vertex_compress,
)

from conftest import brute_chromatic, brute_hadwiger, seeded_graphs, to_nx


# --- chromatic number -------------------------------------------------------

def test_chromatic_examples():
    assert chromatic_number(cycle_graph(5))[0] == 3
    assert chromatic_number(petersen_graph())[0] == 3
    for n in range(1, 9):
        assert chromatic_number(complete_graph(n))[0] == n
    assert chromatic_number(Graph(0, ()))[0] == 0


def test_petersen_not_two_colorable():
    assert not has_k_coloring(petersen_graph(), 2)
    k, col = chromatic_number(petersen_graph())
    assert col.is_proper(petersen_graph()) and col.k == 3


def test_chromatic_matches_partition_oracle(atlas7):
    for g in atlas7:
        k, col = chromatic_number(g)
        assert k == brute_chromatic(g)
        assert col.is_proper(g) and len(set(col.colors)) == k == col.k
        if k > 1:
            assert not has_k_coloring(g, k - 1)


def test_chromatic_is_deterministic():
    g = petersen_graph()
    assert chromatic_number(g) == chromatic_number(g)


def test_chromatic_budget_and_limit():
    with pytest.raises(BudgetExceeded):
        chromatic_number(petersen_graph(), budget=1)
    with pytest.raises(GraphError):
        chromatic_number(Graph(17, (0,) * 17))


def test_optimal_colorings_are_optimal_and_distinct():
    for g in seeded_graphs(40, 7, seed=51):
        chi = chromatic_number(g)[0]
        parts = optimal_colorings(g)
        assert parts
        keys = {tuple(tuple(b) for b in p) for p in parts}
        assert len(keys) == len(parts)
        for p in parts:
            assert len(p) == chi
            assert sorted(v for b in p for v in b) == list(range(g.n))
            for b in p:
                assert not any(g.has_edge(x, y) for x in b for y in b if x < y)


def test_optimal_colorings_count_c5():
    # C5 has 30 proper 3-colorings, i.e. 30 / 3! = 5 partitions
    assert len(optimal_colorings(cycle_graph(5))) == 5


def test_nonedge_contraction_keeps_or_raises_chi(atlas7):
    for g in atlas7[::7]:
        chi = chromatic_number(g)[0]
        for u, v in g.nonedges():
            k = chromatic_number(contract_nonedge(g, u, v)[0])[0]
            assert k in (chi, chi + 1)
        if not g.is_complete():
            u, v = nonedge_preserving_chi(g)
            assert chromatic_number(contract_nonedge(g, u, v)[0])[0] == chi


# --- minors -----------------------------------------------------------------

def test_hadwiger_examples():
    assert hadwiger_number(path_graph(4))[0] == 2
    assert hadwiger_number(cycle_graph(5))[0] == 3
    assert hadwiger_number(complete_graph(1))[0] == 1
    for n in range(2, 8):
        assert hadwiger_number(complete_graph(n))[0] == n


def test_petersen_hadwiger_is_five():
    g = petersen_graph()
    h, w = hadwiger_number(g)
    assert h == 5 and verify_minor_witness(g, complete_graph(5), w)
    assert has_complete_minor(g, 6) is None
    # a K6 model needs 15 edges between branch sets plus one inside a
    # branch set of size >= 2; the Petersen graph has 15 edges in all
    assert g.m == 15


def test_complete_minor_examples():
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert has_complete_minor(diamond, 4) is None
    w = has_complete_minor(octahedron(), 4)
    assert w is not None and verify_minor_witness(octahedron(), complete_graph(4), w)


def test_hadwiger_matches_contraction_closure(atlas7):
    for g in atlas7:
        h, w = hadwiger_number(g)
        assert h == brute_hadwiger(g)
        assert verify_minor_witness(g, complete_graph(h), w)


def test_witness_contractions_reach_complete_graph():
    for g in seeded_graphs(60, 9, seed=52):
        h, w = hadwiger_number(g)
        cur = g
        for e in w.contractions:
            assert cur.has_edge(*e)
            cur, _ = contract_edge(cur, e)
        assert cur == complete_graph(h)


def test_hadwiger_requires_connected():
    with pytest.raises(GraphError):
        hadwiger_number(Graph.from_edges(3, [(0, 1)]))


def test_minor_budget():
    with pytest.raises(BudgetExceeded):
        hadwiger_number(octahedron(), budget=1)
    with pytest.raises(BudgetExceeded):
        is_planar_small(octahedron(), budget=1)


def test_general_pattern_search():
    k33 = complete_bipartite_graph(3, 3)
    w = find_minor_model(petersen_graph(), k33)
    assert w is not None and verify_minor_witness(petersen_graph(), k33, w)
    assert find_minor_model(octahedron(), k33) is None
    with pytest.raises(GraphError):
        find_minor_model(octahedron(), Graph.from_edges(2, []))


def test_planarity_examples():
    assert is_planar_small(octahedron())
    assert not is_planar_small(complete_graph(5))
    assert not is_planar_small(petersen_graph())
    assert not is_planar_small(complete_bipartite_graph(3, 3))


def test_planarity_agrees_with_networkx(atlas7):
    for g in atlas7:
        planar = is_planar_small(g)
        assert planar == nx.check_planarity(to_nx(g))[0]
        if planar:
            assert has_complete_minor(g, 5) is None


def test_planarity_random_larger():
    for g in seeded_graphs(40, 10, seed=53, n_min=8):
        assert is_planar_small(g) == nx.check_planarity(to_nx(g))[0]


def test_hadwiger_at_most_longest_cycle_when_cyclic(atlas7):
    for g in atlas7:
        lg = longest_cycle_length(g)
        if lg:
            assert hadwiger_number(g)[0] <= lg


# --- vertex compression -----------------------------------------------------

def test_compress_examples():
    h, vmap = vertex_compress(path_graph(3), 1)
    assert h == complete_graph(2) and vmap == (0, 1, 0)
    k5 = complete_graph(5)
    assert vertex_compress(k5, 2) == (k5, tuple(range(5)))


def test_compress_makes_neighborhood_complete():
    for g in seeded_graphs(60, 9, seed=54):
        for w in range(g.n):
            local, _ = induced_subgraph(g, closed_neighborhood(g, w))
            chi = chromatic_number(local)[0]
            h, vmap = vertex_compress(g, w)
            image = sorted({vmap[v] for v in closed_neighborhood(g, w)})
            sub, _ = induced_subgraph(h, image)
            assert sub == complete_graph(chi)
            assert h.n == g.n - local.n + chi


def test_compress_supplied_colorings():
    g = cycle_graph(6)
    cols = neighborhood_colorings(g, 0)
    assert cols
    results = {vertex_compress(g, 0, c)[0] for c in cols}
    assert len(results) >= 1
    with pytest.raises(GraphError):
        vertex_compress(g, 0, [[0], [1], [5]])  # three colors, chi of P3 is 2
    with pytest.raises(GraphError):
        vertex_compress(g, 0, [[0, 1], [5]])  # 0-1 is an edge
    with pytest.raises(GraphError):
        vertex_compress(g, 0, [[1, 5]])  # misses 0


def test_compress_rejects_disconnected():
    with pytest.raises(GraphError):
        vertex_compress(Graph.from_edges(3, [(0, 1)]), 0)


def test_compress_to_complete():
    c5 = cycle_graph(5)
    for seed in range(10):
        traj = compress_to_complete(c5, seed)
        assert traj[0] == c5 and traj[-1].is_complete() and traj[-1].n >= 3
    assert compress_to_complete(complete_graph(4), 0) == [complete_graph(4)]
    for g in seeded_graphs(30, 8, seed=55):
        traj = compress_to_complete(g, 1)
        assert traj[-1].is_complete()
        assert traj[-1].n >= chromatic_number(g)[0]
        assert all(a.n > b.n for a, b in zip(traj, traj[1:]))
