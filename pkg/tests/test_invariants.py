from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topoverlap import (
    LinearArrangement,
    SizeLimitError,
    build_complex,
    cheeger_exact,
    cutwidth_bruteforce,
    cutwidth_exact,
    cutwidth_heuristic,
    separation_cut,
    sweep_overlap,
    to1_bounds,
)
from topoverlap.invariants import _index_graph, _suffix_dp_numpy, _suffix_dp_python

from conftest import (
    clique,
    cycle,
    grid,
    oracle_cheeger,
    oracle_cutwidth,
    oracle_separation,
    oracle_sweep,
    path,
    random_graph,
    star,
)


def small_graphs(draw):
    n = draw(st.integers(1, 7))
    edges = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
            max_size=12,
        )
    )
    return build_complex([list(e) for e in edges], extra_vertices=range(n))


graphs = st.composite(small_graphs)()


def test_cutwidth_named_values():
    assert cutwidth_exact(path(4)).width == 1
    assert cutwidth_exact(cycle(4)).width == 2
    assert cutwidth_exact(clique(5)).width == 6
    assert cutwidth_bruteforce(clique(4)).width == 4
    assert cutwidth_bruteforce(star(3)).width == 2
    assert cutwidth_bruteforce(build_complex([[0, 1]])).width == 1


def test_cutwidth_rejects_oversized():
    with pytest.raises(SizeLimitError):
        cutwidth_exact(path(30))
    with pytest.raises(SizeLimitError):
        cutwidth_bruteforce(path(10))


def test_cut_profile_yardsticks():
    arr = cutwidth_exact(path(4))
    assert arr.cut_profile[0] == 0
    assert arr.width == max(arr.cut_profile)
    recomputed = LinearArrangement.from_order(path(4), arr.order)
    assert recomputed == arr


@given(graphs)
@settings(max_examples=60, deadline=None)
def test_dp_matches_bruteforce_and_oracle(g):
    dp = cutwidth_exact(g)
    bf = cutwidth_bruteforce(g)
    assert dp.width == bf.width
    # both search rules return the lexicographically smallest optimum
    assert dp.order == bf.order
    if g.n_vertices <= 6:
        assert dp.width == oracle_cutwidth(g)


def test_numpy_dp_agrees_with_python_dp(rng):
    for n in (10, 12, 14):
        g = random_graph(rng, n, 0.35)
        verts, iedges, adj = _index_graph(g)
        cut_p, b_p = _suffix_dp_python(n, adj)
        cut_n, b_n = _suffix_dp_numpy(n, iedges)
        assert list(map(int, cut_n)) == cut_p
        assert int(b_n[0]) == b_p[0]


def test_numpy_dp_used_above_threshold(rng):
    g = random_graph(rng, 17, 0.2)
    arr = cutwidth_exact(g)
    assert arr.width == max(arr.cut_profile)
    prof = LinearArrangement.from_order(g, arr.order)
    assert prof.width == arr.width


def test_heuristic_finds_path_optimum():
    for seed in range(5):
        assert cutwidth_heuristic(path(4), seed=seed).width == 1


def test_heuristic_is_valid_upper_bound():
    c4 = cutwidth_heuristic(cycle(4), seed=3)
    assert 2 <= c4.width <= 4
    k5 = cutwidth_heuristic(clique(5), seed=1)
    assert k5.width >= 6


def test_heuristic_deterministic():
    a = cutwidth_heuristic(cycle(8), seed=11, budget=500)
    b = cutwidth_heuristic(cycle(8), seed=11, budget=500)
    assert a == b


def test_sweep_named_values():
    p3 = path(3)
    assert sweep_overlap(p3, LinearArrangement.from_order(p3, (0, 1, 2))) == 3
    edge = build_complex([[0, 1]])
    assert sweep_overlap(edge, LinearArrangement.from_order(edge, (0, 1))) == 2
    iso = build_complex([[0], [1]])
    assert sweep_overlap(iso, LinearArrangement.from_order(iso, (0, 1))) == 1


@given(graphs, st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_sweep_matches_level_oracle(g, rnd):
    order = sorted(g.vertices)
    rnd.shuffle(order)
    arr = LinearArrangement.from_order(g, order)
    assert sweep_overlap(g, arr) == oracle_sweep(g, order)


@given(graphs)
@settings(max_examples=40, deadline=None)
def test_sandwich_bounds(g):
    if g.n_vertices == 0:
        return
    b = to1_bounds(g)
    assert b.lower <= b.realized_overlap <= b.upper
    assert b.upper == b.lower + g.degree + 1


def test_to1_named_values():
    assert (to1_bounds(path(4)).lower, to1_bounds(path(4)).upper) == (1, 4)
    assert (to1_bounds(cycle(4)).lower, to1_bounds(cycle(4)).upper) == (2, 5)
    assert (to1_bounds(clique(4)).lower, to1_bounds(clique(4)).upper) == (4, 8)


def test_separation_named_values():
    assert separation_cut(path(5)).separator == (2,)
    assert len(separation_cut(clique(4)).separator) == 2
    assert len(separation_cut(grid(3, 3)).separator) == 3


def test_separation_witness_is_lex_smallest_minimum():
    w = separation_cut(clique(4))
    assert w.separator == (0, 1)
    assert w.max_component == 2


@given(graphs)
@settings(max_examples=30, deadline=None)
def test_separation_matches_oracle(g):
    assert len(separation_cut(g).separator) == oracle_separation(g)


def test_cheeger_named_values():
    assert cheeger_exact(cycle(4)).value == 1
    p4 = cheeger_exact(path(4))
    assert p4.value == Fraction(1, 2)
    assert p4.witness_set == (0, 1)
    assert cheeger_exact(clique(4)).value == 1
    assert cheeger_exact(build_complex([[0]])).is_infinite


@given(graphs)
@settings(max_examples=30, deadline=None)
def test_cheeger_matches_oracle(g):
    got = cheeger_exact(g)
    expected = oracle_cheeger(g)
    if expected is None:
        assert got.is_infinite
    else:
        assert got.value == expected
        # witness reproduces the value exactly
        a = set(got.witness_set)
        adj = {v: set() for v in g.vertices}
        for u, v in g.edges:
            adj[u].add(v)
            adj[v].add(u)
        boundary = set().union(*(adj[v] for v in a)) - a if a else set()
        assert Fraction(len(boundary), len(a)) == got.value


def test_subset_scan_guards():
    with pytest.raises(SizeLimitError):
        cheeger_exact(path(21))
    with pytest.raises(SizeLimitError):
        separation_cut(path(21))
