import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutbench import (CanonicalForm, GenFilter, Graph, Graph6Error, GraphError,
                      are_isomorphic, build_graph, canonical_form, canonical_graph,
                      clear_generation_cache, complete, cycle, generate_all,
                      generation_forms, graph6_decode, graph6_encode, kss_minus_pm,
                      path, permute, read_graph6_stream)

from oracles import count_unlabeled_graphs

# sequences A000088 / A001349 (re-derived by the orbit oracle in test_counts)
ALL_COUNTS = [1, 2, 4, 11, 34, 156, 1044]
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]


def random_graph(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    return build_graph(n, edges)


def test_known_encodings():
    assert graph6_encode(complete(4)) == "C~"
    assert graph6_decode("C~") == complete(4)
    assert graph6_encode(build_graph(2, [(0, 1)])) == "A_"
    assert graph6_encode(build_graph(1, [])) == "@"


def test_roundtrip_all_small_graphs(all_graphs_by_n):
    for graphs in all_graphs_by_n.values():
        for g in graphs:
            assert graph6_decode(graph6_encode(g)) == g


def test_roundtrip_larger_orders():
    for n in (15, 30, 62):
        g = random_graph(n, n)
        assert graph6_decode(graph6_encode(g)) == g


@pytest.mark.parametrize("line, message", [
    ("", "empty"),
    ("D", "truncated"),
    ("C~~", "trailing garbage"),
    ("A@", "padding"),
    (chr(130), "outside printable"),
])
def test_decode_rejects_malformed(line, message):
    with pytest.raises(Graph6Error, match=message):
        graph6_decode(line)


def test_stream_reports_line_numbers():
    lines = ["C~", "", "D", "A_"]
    with pytest.raises(Graph6Error, match="line 3"):
        list(read_graph6_stream(lines))


def test_stream_skip_mode():
    lines = ["C~", "D", "A_"]
    out = list(read_graph6_stream(lines, on_error="skip"))
    assert out == [complete(4), build_graph(2, [(0, 1)])]


def test_canonical_form_known_values():
    assert canonical_form(kss_minus_pm(4)).data == b"G?]uf?"
    assert canonical_form(cycle(6)).data == b"EBj?"
    assert canonical_form(cycle(7)).data == b"F@Ue?"
    assert canonical_form(cycle(8)).data == b"G?LTE?"


def test_canonical_form_invariant_under_relabeling(all_graphs_by_n):
    rng = random.Random(7)
    for g in all_graphs_by_n[6] + all_graphs_by_n[7][:200]:
        base = canonical_form(g)
        for _ in range(5):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(permute(g, perm)) == base


def test_canonical_graph_is_idempotent(all_graphs_by_n):
    for g in all_graphs_by_n[6]:
        cg = canonical_graph(g)
        assert canonical_graph(cg) == cg
        assert canonical_form(cg) == canonical_form(g)


def test_canonical_forms_sort_by_order_then_bits():
    forms = sorted(CanonicalForm(f) for n in (3, 4, 5)
                   for f in generation_forms(n))
    orders = [f.data[0] - 63 for f in forms]
    assert orders == sorted(orders)


def test_are_isomorphic_cases():
    g = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not are_isomorphic(g, cycle(6))  # same degrees, different graphs
    assert not are_isomorphic(path(4), build_graph(4, [(0, 1), (0, 2), (0, 3)]))
    assert are_isomorphic(permute(cycle(7), [3, 0, 6, 1, 5, 2, 4]), cycle(7))
    assert not are_isomorphic(cycle(6), cycle(7))


def test_canonical_form_order_limit():
    with pytest.raises(GraphError, match="n <= 12"):
        canonical_form(build_graph(13, []))


def test_generation_counts_match_literature(all_graphs_by_n, connected_graphs_by_n):
    assert [len(all_graphs_by_n[n]) for n in range(1, 8)] == ALL_COUNTS
    assert [len(connected_graphs_by_n[n]) for n in range(1, 8)] == CONNECTED_COUNTS


def test_generation_counts_match_orbit_oracle():
    for n in range(1, 6):
        assert len(generation_forms(n)) == count_unlabeled_graphs(n)


def test_generation_emits_canonical_representatives():
    for g in generate_all(5):
        assert canonical_graph(g) == g


def test_generation_min_degree_filter():
    want = [f for f in generation_forms(6)
            if graph6_decode(f.decode()).min_degree() >= 3]
    assert list(generation_forms(6, GenFilter(min_degree=3))) == want
    assert generation_forms(4, GenFilter(min_degree=4)) == ()


def test_generation_connected_min_degree_combined():
    gf = GenFilter(connected_only=True, min_degree=2)
    got = generation_forms(6, gf)
    for f in got:
        g = graph6_decode(f.decode())
        assert g.min_degree() >= 2
    assert len(got) == 61  # 2-connected-or-better classes plus those with cutvertices


def test_generation_worker_count_irrelevant():
    clear_generation_cache()
    try:
        serial = generation_forms(6)
        clear_generation_cache()
        parallel = generation_forms(6, workers=2)
        assert serial == parallel
    finally:
        clear_generation_cache()


def test_generation_order_limits():
    with pytest.raises(GraphError):
        list(generate_all(0))
    with pytest.raises(GraphError):
        list(generate_all(11))


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=1, max_value=20))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picked = [p for p in pairs if draw(st.booleans())]
    return build_graph(n, picked)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_roundtrip_hypothesis(g):
    assert graph6_decode(graph6_encode(g)) == g


@given(graphs(), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_canonical_invariance_hypothesis(g, rng):
    if g.n > 9:
        g = build_graph(9, [(u, v) for u, v in g.edges() if u < 9 and v < 9])
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert canonical_form(permute(g, perm)) == canonical_form(g)
