import itertools

import pytest

from cutbench import (GraphError, are_isomorphic, build_graph, complete, components,
                      cycle, delete_vertices, deletion_map, distance_profile,
                      is_independent_set, is_vertex_cut, kss_minus_pm, mask_of, path)
from cutbench.constructions import random_connected
from cutbench.graphs import bits

from oracles import bfs_dist


def test_build_empty_graph():
    g = build_graph(0, [])
    assert g.n == 0 and g.rows == ()


def test_build_cycle_by_hand():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert all(g.degree(v) == 2 for v in range(4))
    assert g.edge_count() == 4


def test_build_duplicates_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count() == 1


def test_k33_minus_matching_is_six_cycle():
    edges = [(i, 3 + j) for i in range(3) for j in range(3) if i != j]
    g = build_graph(6, edges)
    assert are_isomorphic(g, cycle(6))


@pytest.mark.parametrize("n, edges, message", [
    (63, [], "outside"),
    (3, [(1, 1)], "loop"),
    (3, [(0, 5)], "endpoint"),
])
def test_build_errors(n, edges, message):
    with pytest.raises(GraphError, match=message):
        build_graph(n, edges)


def test_delete_antipodal_pair_of_six_cycle():
    rest = delete_vertices(cycle(6), mask_of([0, 3]))
    comps = components(rest)
    assert len(comps) == 2
    assert all(c.bit_count() == 2 for c in comps)
    assert all(rest.degree(v) == 1 for v in range(rest.n))


def test_delete_nothing_is_identity():
    g = kss_minus_pm(4)
    assert delete_vertices(g, 0) == g


def test_delete_from_complete_graph():
    rest = delete_vertices(complete(5), mask_of([0, 1]))
    assert rest.n == 3 and rest.edge_count() == 3


def test_deletion_map_tracks_original_labels():
    g = cycle(6)
    relabel = deletion_map(g, mask_of([1, 4]))
    assert relabel == [0, 2, 3, 5]


def test_components_cycle_connected():
    assert components(cycle(6)) == [mask_of(range(6))]


def test_components_edgeless():
    assert components(build_graph(3, [])) == [1, 2, 4]


def test_components_empty_graph():
    assert components(build_graph(0, [])) == []


def test_vertex_cut_cases():
    c6 = cycle(6)
    assert is_vertex_cut(c6, mask_of([0, 3]))
    assert not is_vertex_cut(c6, mask_of([0, 1]))
    k5 = complete(5)
    for combo in itertools.combinations(range(5), 3):
        assert not is_vertex_cut(k5, mask_of(combo))


def test_vertex_cut_contract_violations():
    with pytest.raises(GraphError):
        is_vertex_cut(build_graph(4, [(0, 1)]), 1)  # disconnected
    with pytest.raises(GraphError):
        is_vertex_cut(cycle(4), mask_of(range(4)))  # s = V(g)


def test_independent_set_cases():
    c6 = cycle(6)
    assert is_independent_set(c6, mask_of([0, 2, 4]))
    assert not is_independent_set(c6, mask_of([0, 1]))
    assert is_independent_set(c6, 0)


def test_distance_profile_path():
    prof = distance_profile(path(5))
    assert prof.diameter == 4
    assert prof.periphery == mask_of([0, 4])


def test_distance_profile_complete():
    prof = distance_profile(complete(6))
    assert prof.diameter == 1
    assert prof.periphery == mask_of(range(6))


def test_distance_profile_cube_diameter():
    # antipodal distance in the 3-cube, confirmed against a plain BFS oracle
    g = kss_minus_pm(4)
    prof = distance_profile(g)
    assert prof.diameter == 3
    for v in range(g.n):
        assert prof.dist[v] == bfs_dist(g, v)


def test_distance_profile_rejects_disconnected():
    with pytest.raises(GraphError, match="diameter undefined"):
        distance_profile(build_graph(4, [(0, 1)]))
    with pytest.raises(GraphError, match="diameter undefined"):
        distance_profile(build_graph(0, []))


def test_deletion_components_partition(connected_graphs_by_n):
    for g in connected_graphs_by_n[6]:
        for s in range(1 << 6):
            if s == (1 << 6) - 1:
                continue
            rest = delete_vertices(g, s)
            comps = components(rest)
            union = 0
            for c in comps:
                assert union & c == 0
                union |= c
            assert union == rest.full_mask()


def test_cut_implies_multiple_components(connected_graphs_by_n):
    for g in connected_graphs_by_n[6]:
        for s in range(1, (1 << 6) - 1):
            if is_vertex_cut(g, s):
                assert len(components(delete_vertices(g, s))) >= 2


def test_distance_metric_properties(connected_graphs_by_n):
    sample = connected_graphs_by_n[6] + [random_connected(10, 0.4, seed) for seed in range(5)]
    for g in sample:
        prof = distance_profile(g)
        d = prof.dist
        for u in range(g.n):
            assert d[u][u] == 0
            for v in range(g.n):
                assert d[u][v] == d[v][u]
        for u, v, w in itertools.combinations(range(g.n), 3):
            assert d[u][w] <= d[u][v] + d[v][w]


def test_periphery_has_at_least_two_vertices(connected_graphs_by_n):
    for n in (2, 3, 4, 5, 6):
        for g in connected_graphs_by_n[n]:
            assert distance_profile(g).periphery.bit_count() >= 2


def test_degree_sum_even(all_graphs_by_n):
    for n, graphs in all_graphs_by_n.items():
        for g in graphs:
            assert sum(g.degree(v) for v in range(g.n)) % 2 == 0
            for v in range(g.n):
                assert not (g.rows[v] >> v) & 1
                for w in bits(g.rows[v]):
                    assert (g.rows[w] >> v) & 1
