"""Fiber surface, vanishing cycles, twist words, homological monodromy.

The minimal(1) matrices below were frozen from a hand-checked run; the
structural identities (antisymmetry, X = C J C^T, M^T J M = J) guard
them against convention drift.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import divide_from_entry
from divide_forge.census import FAMILY_KINDS, GluingKind, chain_divide, family
from divide_forge.divide import WHITE, Divide, checkerboard
from divide_forge.errors import BasisMismatch, NotAdmissible
from divide_forge.fiber import (
    MonodromyWord,
    build_fiber,
    cycle_coordinates,
    homological_monodromy,
    homology_basis,
    intersection_matrix,
    monodromy_word,
    vanishing_cycles,
)
from divide_forge.invariants import page_invariants
from divide_forge.surface_map import HalfEdgeMap

# minimal(1), ordered cycles (alpha_1, beta_1, beta_2, gamma_1)
MINIMAL_X = np.array(
    [
        [0, -2, -2, -4],
        [2, 0, 0, -2],
        [2, 0, 0, -2],
        [4, 2, 2, 0],
    ]
)

MINIMAL_J = np.array(
    [
        [0, 0, 0, 1, -1],
        [0, 0, 0, 1, -1],
        [0, 0, 0, -1, 1],
        [-1, -1, 1, 0, 0],
        [1, 1, -1, 0, 0],
    ]
)

MINIMAL_M = np.array(
    [
        [5, 4, -4, 0, 0],
        [-2, -1, 2, 0, 0],
        [2, 2, -1, 0, 0],
        [-4, -4, 4, 1, 0],
        [4, 4, -4, 0, 1],
    ]
)


def free_loop():
    return Divide(HalfEdgeMap([]), free_loops=1)


def all_divides():
    yield free_loop()
    yield Divide(HalfEdgeMap([[0, 1, 2, 3]]))  # figure eight
    for g in (1, 2, 3):
        for kind in FAMILY_KINDS:
            yield family(kind, g)


def test_fiber_minimal_one():
    f = build_fiber(family("minimal", 1))
    assert f.euler_char == -4
    assert f.num_boundary == 4
    assert f.genus == 1
    assert len(f.roundabouts) == 2
    assert len(f.bands) == 4


def test_fiber_free_loop_is_annulus():
    f = build_fiber(free_loop())
    assert f.euler_char == 0
    assert f.num_boundary == 2
    assert f.genus == 0
    assert f.roundabouts == ()
    assert f.bands == ()


def test_fiber_birkhoff_fried_two():
    f = build_fiber(family("birkhoff-fried", 2))
    assert f.euler_char == -12
    assert f.num_boundary == 12


def test_fiber_agrees_with_formulas():
    for d in all_divides():
        inv = page_invariants(d)
        f = build_fiber(d)
        assert f.euler_char == inv.euler_char
        assert f.num_boundary == inv.binding_components
        assert f.genus == inv.genus


def test_fiber_rejects_inadmissible():
    with pytest.raises(NotAdmissible):
        build_fiber(Divide(HalfEdgeMap([[0, 1, 2, 3]], [2, 3, 0, 1])))


def test_cycle_counts():
    cyc = vanishing_cycles(family("minimal", 1))
    assert (cyc.m0, cyc.m1, cyc.m2) == (1, 2, 1)
    assert len(cyc.ordered) == 4

    cyc = vanishing_cycles(free_loop())
    assert (cyc.m0, cyc.m1, cyc.m2) == (1, 0, 1)
    assert cyc.alphas == cyc.gammas  # both the annulus core

    cyc = vanishing_cycles(family("birkhoff-fried", 1))
    assert (cyc.m0, cyc.m1, cyc.m2) == (2, 4, 2)
    assert len(cyc.ordered) == 8


def test_cycle_count_identity():
    # m0 - m1 + m2 = chi(Sigma), m1 = v
    for d in all_divides():
        cyc = vanishing_cycles(d)
        inv = page_invariants(d)
        assert cyc.m0 - cyc.m1 + cyc.m2 == 2 - 2 * inv.ambient_genus
        assert cyc.m1 == d.v


def test_betas_are_roundabout_cores():
    d = family("brunella", 2)
    cyc = vanishing_cycles(d)
    for j, cycle in enumerate(d.map.rotations):
        assert cyc.betas[j] == tuple(3 * x + 1 for x in cycle)


def test_cycles_are_closed_paths():
    for d in all_divides():
        cyc = vanishing_cycles(d)
        graph = cyc.fiber.graph
        for path in cyc.ordered:
            for j, e in enumerate(path):
                arrive = graph.pair(path[j - 1])
                assert graph.vertex_of(arrive) == graph.vertex_of(e)


def test_swapped_coloring_swaps_alpha_gamma():
    d = family("brunella", 2)
    col = checkerboard(d)
    plain = vanishing_cycles(d, col)
    flipped = vanishing_cycles(d, col.swapped())
    assert set(plain.alphas) == set(flipped.gammas)
    assert set(plain.gammas) == set(flipped.alphas)
    assert plain.betas == flipped.betas


def test_word_lengths():
    assert len(monodromy_word(free_loop())) == 2
    assert len(monodromy_word(family("minimal", 1))) == 4
    for d in all_divides():
        inv = page_invariants(d)
        word = monodromy_word(d)
        assert len(word) == (2 - 2 * inv.ambient_genus) + 2 * d.v
        assert all(sign == 1 for _, sign in word.letters)
        assert [i for i, _ in word.letters] == list(range(len(word)))


def test_word_length_six_circles(census):
    # twelve twists on the genus-2 example: chi(Sigma_2) + 2*7
    entry = next(
        e
        for e in census
        if e.circles == 6 and e.double_points == 7 and e.ambient_genus == 2
    )
    assert len(monodromy_word(divide_from_entry(entry))) == 12


def test_free_loop_word_is_core_squared():
    word = monodromy_word(free_loop())
    cyc = word.cycles
    paths = [cyc.ordered[i] for i, _ in word.letters]
    assert paths[0] == paths[1]  # same curve twice


def test_negated_word():
    word = monodromy_word(family("minimal", 1), negated=True)
    assert all(sign == -1 for _, sign in word.letters)


def test_intersection_minimal_frozen():
    cyc = vanishing_cycles(family("minimal", 1))
    assert np.array_equal(intersection_matrix(cyc), MINIMAL_X)


def test_alpha_beta_intersection_counts_corners():
    # independent oracle: each corner of the white region on roundabout j
    # is one crossing of alpha_1 with beta_j, all of the same sign
    d = family("minimal", 1)
    cyc = vanishing_cycles(d)
    X = intersection_matrix(cyc)
    m = d.map
    faces = m.faces()
    col = checkerboard(d)
    white = [faces[i] for i in range(len(faces)) if col.colors[i] == WHITE]
    assert len(white) == 1
    for j in range(d.v):
        corners = sum(1 for dart in white[0] if m.vertex_of(dart) == j)
        assert abs(X[0, 1 + j]) == corners
    assert abs(X[0, 1]) == 2


def test_betas_pairwise_disjoint():
    for d in (family("minimal", 2), family("birkhoff-fried", 1)):
        cyc = vanishing_cycles(d)
        X = intersection_matrix(cyc)
        for i in range(cyc.m1):
            for j in range(cyc.m1):
                assert X[cyc.m0 + i, cyc.m0 + j] == 0


def test_intersection_antisymmetry():
    for d in all_divides():
        X = intersection_matrix(vanishing_cycles(d))
        assert np.array_equal(X, -X.T)


def test_intersection_factors_through_homology():
    # <p, q> = coords(p) J coords(q): the path-level count and the
    # homological pairing must agree
    for d in all_divides():
        cyc = vanishing_cycles(d)
        X = intersection_matrix(cyc)
        _, J = homology_basis(cyc.fiber)
        C = np.array([cycle_coordinates(cyc.fiber, p) for p in cyc.ordered])
        assert np.array_equal(X, C @ J @ C.T)


def test_homology_rank():
    for d in all_divides():
        fiber = build_fiber(d)
        paths, J = homology_basis(fiber)
        expected = 2 * d.v + 1 if d.v else 1
        assert len(paths) == expected
        assert J.shape == (expected, expected)


def test_empty_word_is_identity():
    cyc = vanishing_cycles(family("minimal", 1))
    empty = MonodromyWord(cyc, ())
    M = homological_monodromy(cyc.fiber, empty)
    assert np.array_equal(M, np.eye(5, dtype=np.int64))


def test_free_loop_monodromy_trivial_on_homology():
    word = monodromy_word(free_loop())
    M = homological_monodromy(word.cycles.fiber, word)
    assert np.array_equal(M, np.eye(1, dtype=np.int64))


def test_minimal_monodromy_frozen():
    word = monodromy_word(family("minimal", 1))
    fiber = word.cycles.fiber
    _, J = homology_basis(fiber)
    assert np.array_equal(J, MINIMAL_J)
    M = homological_monodromy(fiber, word)
    assert np.array_equal(M, MINIMAL_M)
    assert np.array_equal(M.T @ J @ M, J)


def test_monodromy_preserves_form():
    for d in all_divides():
        word = monodromy_word(d)
        fiber = word.cycles.fiber
        _, J = homology_basis(fiber)
        M = homological_monodromy(fiber, word)
        assert np.array_equal(M.T @ J @ M, J)
        negated = monodromy_word(d, negated=True)
        fiber_n = negated.cycles.fiber
        _, J_n = homology_basis(fiber_n)
        Mn = homological_monodromy(fiber_n, negated)
        assert np.array_equal(Mn.T @ J_n @ Mn, J_n)


def test_word_rejects_foreign_fiber():
    d = family("minimal", 1)
    word = monodromy_word(d)
    other = build_fiber(d)
    with pytest.raises(BasisMismatch):
        homological_monodromy(other, word)


@given(st.integers(2, 7))
@settings(max_examples=12, deadline=None)
def test_chain_fiber_consistency(k):
    kind = GluingKind.EVEN_SELF if k % 2 == 0 else GluingKind.ODD_A
    d = chain_divide(k, kind)
    word = monodromy_word(d)
    f = word.cycles.fiber
    assert f.euler_char == -2 * k
    assert f.num_boundary == 2 * k
    M = homological_monodromy(f, word)
    _, J = homology_basis(f)
    assert np.array_equal(M.T @ J @ M, J)
