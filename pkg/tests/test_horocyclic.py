import math

import pytest

from topoverlap import (
    ConstructionError,
    EncodingError,
    MalformedComplexError,
    barycentric_subdivision,
    binary_code,
    build_complex,
    build_D_ell,
    build_H_ell,
    coarse_construct,
    compose,
    identity_construction,
    map_s,
    revalidate_manifest,
    validate_construction,
    words_adjacent,
    write_manifest,
)
from topoverlap.horocyclic import parse_manifest
from topoverlap.reporting import all_passed

from conftest import cycle, path, random_complex


def test_binary_code_worked_example():
    assert binary_code(5, 18, 7, 3) == "000010100001010000"


def test_binary_code_zero_and_repeat():
    assert binary_code(0, 9, 3, 2) == "0" * 9
    assert binary_code(3, 4, 2, 1) == "1111"


def test_binary_code_errors():
    with pytest.raises(EncodingError):
        binary_code(4, 1, 2, 1)
    with pytest.raises(EncodingError):
        binary_code(1, 7, 2, 1)


def test_word_adjacency_rule():
    # symmetric rule: a grows at one coordinate, b grows at another
    assert words_adjacent(("0", "1"), ("00", ""))
    assert words_adjacent(("0", "1"), ("", "10"))
    assert words_adjacent(("0", "1"), ("", "11"))
    assert not words_adjacent(("00", ""), ("", "00"))
    assert not words_adjacent(("0", "1"), ("0", "1"))
    assert not words_adjacent(("0", "1"), ("1", "0"))
    # growth must be a suffix extension
    assert not words_adjacent(("0", "1"), ("10", ""))


def test_H11_twelve_vertices():
    h = build_H_ell(1, 1)
    assert h.complex.n_vertices == 12
    assert h.complex.dimension == 1
    assert h.complex.degree <= 2 * 1 * 2
    profiles = {tuple(len(w) for w in words) for words in h.words}
    assert profiles == {(0, 2), (1, 1), (2, 0)}


@pytest.mark.parametrize("d,ell", [(1, 1), (1, 2), (2, 1)])
def test_H_degree_and_dimension_bounds(d, ell):
    h = build_H_ell(d, ell)
    total = (d + 1) * ell
    assert h.complex.n_vertices == math.comb(total + d, d) * 2**total
    assert h.complex.degree <= 2 * d * (d + 1)
    assert h.complex.dimension <= d


def test_H_explosion_guard():
    with pytest.raises(ConstructionError):
        build_H_ell(2, 5, max_vertices=1000)


def test_D_of_edge_has_five_functions():
    bary, labels = barycentric_subdivision(build_complex([[0, 1]]))
    lattice = build_D_ell(bary, labels, 1, 1, with_higher=True)
    expected = {
        (((0,), 2),),
        (((1,), 2),),
        (((0, 1), 2),),
        (((0,), 1), ((0, 1), 1)),
        (((1,), 1), ((0, 1), 1)),
    }
    assert set(lattice.functions) == expected
    # the refinement of one edge is a path through its midpoint chain
    assert len(lattice.complex.edges) == 4
    assert lattice.complex.dimension == 1


def test_D_single_vertex():
    bary, labels = barycentric_subdivision(build_complex([[0]]))
    lattice = build_D_ell(bary, labels, 1, 0)
    assert lattice.functions == ((((0,), 1),),)


def test_D_triangle_maximal_chain_count():
    bary, labels = barycentric_subdivision(build_complex([[0, 1, 2]]))
    lattice = build_D_ell(bary, labels, 2, 2)
    chain = {frozenset({0}), frozenset({0, 1}), frozenset({0, 1, 2})}
    inside = [fn for fn in lattice.functions if all(frozenset(s) in chain for s, _ in fn)]
    assert len(inside) == 28


def test_D_supports_have_distinct_cardinalities():
    bary, labels = barycentric_subdivision(build_complex([[0, 1, 2], [2, 3]]))
    lattice = build_D_ell(bary, labels, 2, 2)
    for fn in lattice.functions:
        cards = [len(s) for s, _ in fn]
        assert len(set(cards)) == len(cards)


def test_D_dimension_matches_source():
    bary, labels = barycentric_subdivision(build_complex([[0, 1, 2]]))
    lattice = build_D_ell(bary, labels, 1, 2, with_higher=True)
    assert lattice.complex.dimension == 2


def test_map_s_examples():
    assert map_s({(0,): 6}, 2, 2) == ("000000", "", "")
    assert map_s({(0,): 2, (0, 1): 2, (0, 1, 2): 2}, 2, 2) == ("00", "00", "00")
    assert map_s({(1,): 1, (0, 1): 1}, 1, 1) == ("1", "0")


def test_map_s_rejects_bad_functions():
    with pytest.raises(EncodingError):
        map_s({(7,): 1}, 1, 0)  # id does not fit one bit
    with pytest.raises(MalformedComplexError):
        map_s({(0,): 1, (1,): 1}, 1, 1)  # support is not a chain
    with pytest.raises(MalformedComplexError):
        map_s({(0,): 3}, 1, 1)  # wrong total weight


def test_construct_edge_matches_hand_computation():
    cc = coarse_construct(build_complex([[0, 1]]))
    assert cc.volume == 5
    assert cc.measured_k == 2
    assert sorted(cc.target_words.values()) == [
        ("", "00"),
        ("0", "0"),
        ("00", ""),
        ("1", "0"),
        ("11", ""),
    ]


def test_construct_single_vertex():
    cc = coarse_construct(build_complex([[0]]))
    assert cc.volume == 1
    assert cc.measured_k == 1


def test_construct_triangle_interference_bound():
    tri = build_complex([[0, 1, 2]])
    cc = coarse_construct(tri)
    assert cc.measured_k <= 2**tri.degree == 4


def test_construct_respects_vertex_limit():
    with pytest.raises(ConstructionError):
        coarse_construct(cycle(12), max_vertices=10)


def test_validation_report_and_negative_control():
    cc = coarse_construct(build_complex([[0, 1]]))
    rows = validate_construction(cc, 2, 5)
    assert all_passed(rows)
    bad = validate_construction(cc, 0, 5)
    failed = {r.check: r.passed for r in bad}
    assert not failed["measured_k <= claim"]
    assert failed["simplicial"]


def test_volume_counts_distinct_images(rng):
    for _ in range(5):
        cx = random_complex(rng, n_max=10, deg_max=4)
        cc = coarse_construct(cx)
        relabel = {v: i for i, v in enumerate(sorted(cx.vertices))}
        words = {map_s(fn, cc.ell, cc.d, relabel) for fn in cc.functions}
        assert cc.volume == len(words)


def test_compose_identity_is_neutral():
    k2 = build_complex([[0, 1]])
    cc2 = coarse_construct(k2)
    composite = compose(identity_construction(k2), cc2)
    assert composite.measured_k == cc2.measured_k
    assert composite.volume == cc2.volume


def test_compose_identity_neutral_with_triangles():
    # carriers with three vertices exercise the higher-cell trace path
    tri = build_complex([[0, 1, 2]])
    cc2 = coarse_construct(tri)
    composite = compose(identity_construction(tri), cc2)
    assert composite.measured_k == cc2.measured_k
    assert composite.volume == cc2.volume


def test_compose_chained_bounds():
    z = path(3)
    cc1 = coarse_construct(z)
    cc2 = coarse_construct(cc1.target)
    composite = compose(cc1, cc2)
    assert composite.measured_k <= cc1.measured_k * cc2.measured_k
    assert composite.volume <= cc2.volume
    assert composite.source == z
    rows = validate_construction(
        composite, cc1.measured_k * cc2.measured_k, cc2.volume
    )
    assert all_passed(rows)


def test_compose_requires_matching_complexes():
    cc1 = coarse_construct(build_complex([[0, 1]]))
    cc2 = coarse_construct(path(3))
    with pytest.raises(MalformedComplexError):
        compose(cc1, cc2)


def test_manifest_round_trip_and_revalidation():
    cc = coarse_construct(cycle(4))
    text = write_manifest(cc)
    d, ell, n, k, vol, functions, words = parse_manifest(text)
    assert (d, ell, n, k, vol) == (1, 2, 4, cc.measured_k, cc.volume)
    assert len(functions) == cc.n_sub_vertices
    assert all_passed(revalidate_manifest(text))


def test_manifest_revalidation_catches_corruption():
    cc = coarse_construct(build_complex([[0, 1]]))
    text = write_manifest(cc)
    lines = text.splitlines()
    lines[1] = lines[1].rsplit(" -> ", 1)[0] + " -> 11,1"
    rows = revalidate_manifest("\n".join(lines) + "\n")
    assert not all_passed(rows)


def test_volume_scaling_reported_along_growing_paths():
    """volume / (n * log2(1+n)^d) stays bounded along a path family."""
    ratios = []
    for n in (2, 4, 8, 12, 16, 24, 32):
        cc = coarse_construct(path(n))
        ratios.append(cc.volume / (n * math.log2(1 + n) ** cc.d))
    print("volume scaling ratios along paths:", [round(r, 2) for r in ratios])
    assert max(ratios) < 8
