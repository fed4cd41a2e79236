from itertools import combinations

from cutbench import (are_isomorphic, build_graph, complete, cycle,
                      find_induced_claw, independence_number,
                      independent_sets_of_size, is_independent_set, kss_minus_pm,
                      line_graph, matching_number, matchings_of_size,
                      random_connected, remove_edges)
from cutbench.graphs import bits, mask_of
from cutbench.subsets import is_matching_of

from oracles import (brute_independence_number, brute_independent_sets,
                     brute_matching_number, brute_matchings)


def claw():
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])


def test_independent_triples_of_six_cycle():
    assert list(independent_sets_of_size(cycle(6), 3)) == \
        [mask_of([0, 2, 4]), mask_of([1, 3, 5])]


def test_independent_pairs_of_complete_graph_empty():
    assert list(independent_sets_of_size(complete(5), 2)) == []


def test_cube_maximum_independent_sets_are_the_parts():
    got = list(independent_sets_of_size(kss_minus_pm(4), 4))
    assert got == [mask_of([0, 1, 2, 3]), mask_of([4, 5, 6, 7])]
    assert got == [mask_of(c) for c in brute_independent_sets(kss_minus_pm(4), 4)]


def test_independent_set_stream_matches_brute_force(all_graphs_by_n):
    for n in range(1, 8):
        for g in all_graphs_by_n[n]:
            for k in range(n + 2):
                got = list(independent_sets_of_size(g, k))
                want = [mask_of(c) for c in brute_independent_sets(g, k)]
                assert got == want
                assert all(is_independent_set(g, s) for s in got)


def test_independence_number_values():
    assert independence_number(cycle(7)) == 3
    assert independence_number(kss_minus_pm(4)) == 4
    assert independence_number(complete(6)) == 1


def test_independence_number_matches_brute_force(all_graphs_by_n):
    for n in range(1, 7):
        for g in all_graphs_by_n[n]:
            alpha = brute_independence_number(g)
            assert independence_number(g) == alpha
            # alpha is the largest k with a nonempty stream
            assert any(True for _ in independent_sets_of_size(g, alpha))
            assert not any(True for _ in independent_sets_of_size(g, alpha + 1))


def test_six_cycle_has_two_perfect_matchings():
    got = list(matchings_of_size(cycle(6), 3))
    assert len(got) == 2
    assert all(is_matching_of(cycle(6), m) for m in got)


def test_matching_number_values():
    assert matching_number(kss_minus_pm(4)) == 4
    assert brute_matching_number(kss_minus_pm(4)) == 4
    assert matching_number(claw()) == 1


def test_matching_stream_matches_brute_force(all_graphs_by_n):
    for n in range(1, 7):
        for g in all_graphs_by_n[n]:
            assert matching_number(g) == brute_matching_number(g)
            for k in range(n):
                got = list(matchings_of_size(g, k))
                assert got == brute_matchings(g, k)
                assert all(is_matching_of(g, m) for m in got)


def test_line_graph_of_claw_is_triangle():
    lg, emap = line_graph(claw())
    assert are_isomorphic(lg, complete(3))
    assert emap == [(0, 1), (0, 2), (0, 3)]


def test_line_graph_of_cycle_is_cycle():
    lg, _ = line_graph(cycle(6))
    assert are_isomorphic(lg, cycle(6))


def test_line_graph_independent_sets_are_matchings(connected_graphs_by_n):
    sample = connected_graphs_by_n[5] + \
        [random_connected(7, 0.4, seed) for seed in range(10)]
    for g in sample:
        lg, emap = line_graph(g)
        for k in (2, 3):
            line_sets = {frozenset(emap[v] for v in bits(s))
                         for s in independent_sets_of_size(lg, k)}
            graph_matchings = {frozenset(m) for m in matchings_of_size(g, k)}
            assert line_sets == graph_matchings


def test_alpha_of_line_graph_equals_matching_number(connected_graphs_by_n):
    sample = connected_graphs_by_n[6][:60] + \
        [random_connected(7, 0.5, seed) for seed in range(10)]
    for g in sample:
        lg, _ = line_graph(g)
        assert independence_number(lg) == matching_number(g)


def test_cube_contains_induced_claw():
    s = find_induced_claw(kss_minus_pm(4))
    assert s is not None
    vs = list(bits(s))
    degs = sorted(kss_minus_pm(4).rows[v] & s for v in vs)
    center = [v for v in vs if (kss_minus_pm(4).rows[v] & s).bit_count() == 3]
    assert len(center) == 1
    leaves = [v for v in vs if v != center[0]]
    assert all(not kss_minus_pm(4).has_edge(a, b) for a, b in combinations(leaves, 2))


def test_line_graphs_are_claw_free():
    for seed in range(50):
        g = random_connected(5 + seed % 4, 0.45, seed)
        lg, _ = line_graph(g)
        assert find_induced_claw(lg) is None


def test_max_degree_two_has_no_claw():
    assert find_induced_claw(cycle(8)) is None


def test_claw_is_lexicographically_smallest(all_graphs_by_n):
    def brute_claws(g):
        out = []
        for quad in combinations(range(g.n), 4):
            for c in quad:
                rest = [v for v in quad if v != c]
                if all(g.has_edge(c, v) for v in rest) and \
                   all(not g.has_edge(a, b) for a, b in combinations(rest, 2)):
                    out.append(quad)
        return sorted(set(out))

    for g in all_graphs_by_n[6]:
        want = brute_claws(g)
        got = find_induced_claw(g)
        if want:
            assert got == mask_of(want[0])
        else:
            assert got is None


def test_remove_edges():
    g = remove_edges(cycle(4), ((0, 1),))
    assert g.edge_count() == 3 and not g.has_edge(0, 1)
