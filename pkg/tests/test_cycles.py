from math import comb

import pytest
from hypothesis import given, settings

from beth.cycles import (
    CycleCapExceeded,
    InducedCycle,
    canonical_cycle,
    contraction_cycle_census,
    count_induced_cycles,
    count_induced_odd_cycles,
    count_length2_paths,
    count_triangles_through_edge,
    enumerate_induced_cycles,
    enumerate_induced_cycles_bruteforce,
    is_induced_cycle,
    longest_cycle_length,
)
from beth.graph import (
    GraphError,
    complete_bipartite_graph,
    complete_graph,
    cone,
    contract_edge,
    cycle_graph,
    induced_subgraph,
    octahedron,
    path_graph,
    petersen_graph,
)

from conftest import (
    brute_induced_cycles,
    brute_longest_cycle,
    connected_graphs,
    seeded_graphs,
)


def test_canonical_form():
    # least vertex first, then toward its smaller neighbor
    assert canonical_cycle([3, 1, 4, 2]) == (1, 3, 2, 4)
    assert canonical_cycle([2, 0, 1]) == (0, 1, 2)
    assert InducedCycle.from_sequence([4, 0, 2]) == InducedCycle.from_sequence([0, 4, 2])


def test_enumeration_examples():
    assert [c.vertices for c in enumerate_induced_cycles(cycle_graph(5))] == [(0, 1, 2, 3, 4)]
    assert len(enumerate_induced_cycles(complete_graph(4))) == 4
    cyc = enumerate_induced_cycles(octahedron())
    assert len(cyc) == 11
    assert sorted(len(c) for c in cyc) == [3] * 8 + [4] * 3


def test_output_sorted_and_chordless(atlas7):
    for g in atlas7[::5]:
        cyc = enumerate_induced_cycles(g)
        assert cyc == sorted(cyc)
        for c in cyc:
            assert is_induced_cycle(g, c.vertices)
            assert c.vertices == canonical_cycle(c.vertices)


def test_matches_subset_oracle_and_networkx(atlas7):
    for g in atlas7:
        ours = enumerate_induced_cycles(g)
        assert ours == enumerate_induced_cycles_bruteforce(g)
        assert {frozenset(c.vertices) for c in ours} == brute_induced_cycles(g)
        assert len(ours) == len({frozenset(c.vertices) for c in ours})


@given(connected_graphs(min_n=3, max_n=8))
@settings(max_examples=120, deadline=None)
def test_matches_subset_oracle_random(g):
    assert enumerate_induced_cycles(g) == enumerate_induced_cycles_bruteforce(g)


@pytest.mark.parametrize("r", range(1, 10))
def test_complete_graph_has_only_triangles(r):
    assert count_induced_cycles(complete_graph(r)) == comb(r, 3)


def test_cap_is_reported():
    with pytest.raises(CycleCapExceeded):
        enumerate_induced_cycles(complete_graph(7), cap=10)


def test_triangle_and_path_counts():
    k4 = complete_graph(4)
    assert all(count_triangles_through_edge(k4, e) == 2 for e in k4.edges())
    c5 = cycle_graph(5)
    assert all(count_triangles_through_edge(c5, e) == 0 for e in c5.edges())
    with pytest.raises(GraphError):
        count_triangles_through_edge(c5, (0, 2))
    assert count_length2_paths(cycle_graph(4), 0, 2) == 2
    assert count_length2_paths(complete_graph(2), 0, 1) == 0
    with pytest.raises(GraphError):
        count_length2_paths(c5, 1, 1)


def test_odd_cycles():
    assert count_induced_odd_cycles(complete_bipartite_graph(3, 4)) == 0
    assert count_induced_odd_cycles(complete_graph(4)) == 4
    p = petersen_graph()
    brute = sum(1 for c in enumerate_induced_cycles_bruteforce(p) if len(c) % 2)
    assert count_induced_odd_cycles(p) == brute == 12


def test_longest_cycle_examples():
    assert longest_cycle_length(path_graph(5)) == 0
    assert longest_cycle_length(complete_graph(5)) == 5
    assert longest_cycle_length(petersen_graph()) == 9


def test_longest_cycle_matches_networkx(atlas7):
    for g in atlas7[::3]:
        assert longest_cycle_length(g) == brute_longest_cycle(g)


def test_longest_cycle_edge_contraction_random():
    for g in seeded_graphs(100, 9, seed=31, n_min=2):
        lg = longest_cycle_length(g)
        for e in g.edges():
            assert longest_cycle_length(contract_edge(g, e)[0]) <= lg


def test_census_examples():
    c4 = cycle_graph(4)
    cen = contraction_cycle_census(c4, (0, 1))
    assert (cen.c3, cen.s1, cen.s2) == (0, 0, 0)
    assert cen.cycles_before == cen.cycles_after == 1
    k4 = complete_graph(4)
    cen = contraction_cycle_census(k4, (0, 1))
    assert cen.c3 == 2 and cen.s1 + cen.s2 == 1
    assert cen.cycles_before - cen.cycles_after == 3
    with pytest.raises(GraphError):
        contraction_cycle_census(c4, (0, 2))


def test_census_identity_random():
    for g in seeded_graphs(300, 9, seed=32, n_min=2):
        for e in g.edges():
            cen = contraction_cycle_census(g, e)
            assert min(cen.c3, cen.s1, cen.s2) >= 0
            assert cen.identity_holds, (g, e, cen)
            assert cen.cycles_after == count_induced_cycles(contract_edge(g, e)[0])


def test_cone_adds_one_cycle_per_edge():
    for g in seeded_graphs(200, 8, seed=33):
        assert count_induced_cycles(cone(g)[0]) == count_induced_cycles(g) + g.m


def test_induced_subgraph_cycles_are_host_cycles():
    import random
    rng = random.Random(34)
    for g in seeded_graphs(100, 9, seed=35):
        keep = [v for v in range(g.n) if rng.random() < 0.7]
        h, old = induced_subgraph(g, keep)
        host = {c.vertices for c in enumerate_induced_cycles(g)}
        for c in enumerate_induced_cycles(h):
            assert canonical_cycle([old[v] for v in c.vertices]) in host
