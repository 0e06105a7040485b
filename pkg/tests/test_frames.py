import numpy as np
import pytest

from frameorbit import (
    Frame,
    InvalidParams,
    NotAFrame,
    canonical_dual,
    canonical_tight,
    cross_gram,
    diagnostics,
    excess_kernel,
    excess_sum,
    frame_bounds,
    frame_operator,
    gram,
    harmonic_frame,
    synthesis_matrix,
)
from frameorbit.structured import union_onb_frame

R2 = np.sqrt(2)
THREE = Frame.from_vectors([[1, 0], [0, 1], [1 / R2, 1 / R2]])


def test_synthesis_examples():
    assert np.allclose(synthesis_matrix(Frame.from_vectors(np.eye(2))), np.eye(2))
    U = synthesis_matrix(harmonic_frame(2, 3))
    assert U.shape == (2, 3)
    assert np.allclose(U[0], 1 / R2)
    assert np.allclose(np.abs(U[1]), 1 / R2)
    assert synthesis_matrix(Frame.from_vectors([[1, 0]])).shape == (2, 1)


def test_frame_operator_examples():
    assert np.allclose(frame_operator(Frame.from_vectors(np.eye(3))), np.eye(3))
    assert np.allclose(frame_operator(harmonic_frame(2, 3)), 1.5 * np.eye(2))
    assert np.allclose(frame_operator(THREE), [[1.5, 0.5], [0.5, 1.5]])


def test_bounds_examples():
    assert np.allclose(frame_bounds(Frame.from_vectors(np.eye(3))), (1, 1))
    assert np.allclose(frame_bounds(THREE), (1, 2))
    assert np.allclose(frame_bounds(harmonic_frame(2, 3)), (1.5, 1.5))
    assert diagnostics(harmonic_frame(2, 3)).is_tight


def test_not_a_frame():
    with pytest.raises(NotAFrame):
        frame_bounds(Frame.from_vectors([[1, 0], [2, 0]]))


def test_canonical_dual_examples():
    E = Frame.from_vectors(np.eye(3))
    assert np.allclose(canonical_dual(E).vectors, np.eye(3))
    H = harmonic_frame(2, 3)
    assert np.allclose(canonical_dual(H).vectors, H.vectors / 1.5)
    D = canonical_dual(THREE).vectors
    assert np.allclose(D, [[0.75, -0.25], [-0.25, 0.75], [0.5 / R2, 0.5 / R2]])


def test_canonical_tight_examples():
    E = Frame.from_vectors(np.eye(2))
    assert np.allclose(canonical_tight(E).vectors, np.eye(2))
    H = harmonic_frame(2, 4)
    assert np.allclose(canonical_tight(H).vectors, H.vectors / np.sqrt(2))
    assert np.allclose(frame_operator(canonical_tight(THREE)), np.eye(2))


def test_gram_of_onb():
    assert np.allclose(gram(Frame.from_vectors(np.eye(4))), np.eye(4))


def test_cross_gram_convention():
    # linear in the first argument: <f_i, g_j> = sum f_i conj(g_j)
    F = Frame.from_vectors([[1j, 0]])
    G = Frame.from_vectors([[1, 0]])
    assert cross_gram(F, G)[0, 0] == 1j


def test_excess_examples():
    assert excess_kernel(Frame.from_vectors(np.eye(3))) == 0
    assert excess_kernel(THREE) == 1
    assert excess_kernel(harmonic_frame(2, 4)) == 2
    assert abs(excess_sum(Frame.from_vectors(np.eye(3)))) < 1e-12
    assert abs(excess_sum(THREE) - 1) < 1e-12
    assert abs(excess_sum(harmonic_frame(2, 3)) - 1) < 1e-12


def test_diagnostics_flags():
    d = diagnostics(Frame.from_vectors(np.eye(2)))
    assert d.is_linearly_independent and not d.has_duplicates
    assert not diagnostics(THREE).is_linearly_independent
    dup = union_onb_frame([np.eye(2), np.eye(2)])
    dd = diagnostics(dup)
    assert dd.has_duplicates and dd.is_tight and abs(dd.upper_bound - 2) < 1e-12


def test_reorder_is_pure():
    H = harmonic_frame(2, 4)
    G = H.reorder([0, 2, 1, 3])
    assert G.provenance == (0, 2, 1, 3)
    assert np.array_equal(G.vectors[1], H.vectors[2])
    assert not G.vectors.flags.writeable
    with pytest.raises(InvalidParams):
        H.reorder([0, 0, 1, 2])


def test_frame_validation():
    with pytest.raises(InvalidParams):
        Frame.from_vectors(np.zeros((3, 2)))
    with pytest.raises(InvalidParams):
        Frame.from_vectors([[np.nan, 0]])
