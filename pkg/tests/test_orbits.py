import numpy as np
import pytest

from corpora import crandn, random_frame, unitary_orbit
from frameorbit import (
    BandSpec,
    DecompositionReport,
    Frame,
    NoExactSolution,
    NotCyclic,
    SingularOperator,
    WindowedModelUnsupported,
    block_harmonic_frame,
    build_generator,
    circulant_cross_gram_test,
    classify_operator,
    dyadic_band_frame,
    harmonic_frame,
    imprimitivity_obstruction,
    kernel_shift_invariance,
    necessary_conditions,
    orthogonality_components,
    represent,
    verify_orbit,
)
from frameorbit.orbits import gram_circulant_test, orthogonality_graph

W3 = np.exp(2j * np.pi / 3)
SWAPPED = harmonic_frame(2, 4).reorder([0, 2, 1, 3])


def test_kernel_shift_examples():
    rng = np.random.default_rng(0)
    B = Frame.from_vectors(crandn(rng, 3, 3))
    assert kernel_shift_invariance(B).passed
    r = kernel_shift_invariance(harmonic_frame(2, 4))
    assert r.passed and r.kernel_dim == 2
    bad = kernel_shift_invariance(SWAPPED)
    assert not bad.passed
    c = bad.certificate
    assert np.allclose(SWAPPED.vectors.T @ c, 0, atol=1e-12)  # in the kernel
    assert bad.certificate_residual > 1e-3


def test_circulant_examples():
    rng = np.random.default_rng(1)
    assert circulant_cross_gram_test(Frame.from_vectors(crandn(rng, 4, 4))).passed
    assert circulant_cross_gram_test(harmonic_frame(2, 3)).passed
    res = circulant_cross_gram_test(SWAPPED)
    assert not res.passed
    assert (res.violation.i, res.violation.j) == (0, 1)
    # <f0, f2>/2 = 0 against <f2, f1>/2 = (1+i)/4 in the swapped order
    assert abs(res.violation.magnitude - abs(1 + 1j) / 4) < 1e-12


def test_generator_examples():
    T = build_generator(harmonic_frame(2, 3)).T
    assert np.allclose(T, np.diag([1, W3]), atol=1e-12)
    T4 = build_generator(harmonic_frame(3, 4)).T
    assert np.allclose(T4, np.diag(np.exp(2j * np.pi * np.arange(3) / 4)))
    assert np.allclose(np.linalg.matrix_power(T4, 4), np.eye(3))
    S = build_generator(Frame.from_vectors(np.eye(2))).T
    assert np.allclose(S, [[0, 1], [1, 0]])
    with pytest.raises(NoExactSolution) as exc:
        build_generator(SWAPPED)
    assert exc.value.residual > 0.1


def test_verify_orbit_examples():
    rep = verify_orbit(np.eye(1), [2.0], 1)
    assert rep.is_frame
    rep = verify_orbit(np.diag([1, W3]), np.array([1, 1]) / np.sqrt(2), 3)
    assert np.allclose(rep.frame.vectors, harmonic_frame(2, 3).vectors, atol=1e-14)
    with pytest.raises(NotCyclic):
        verify_orbit(np.diag([1, 2]), [1, 1], 4)


def test_classify_examples():
    c = classify_operator(np.diag([1, W3]), 1.5, 1.5, 3)
    assert c.unitary and c.normal and not c.hermitian
    assert np.allclose(c.power_norms, 1)
    s = classify_operator([[0, 1], [1, 0]], 1, 1, 2)
    assert s.unitary and s.hermitian
    j = classify_operator([[1, 1], [0, 1]], 1, 1, 5)
    assert not j.normal and not j.upper_bound_ok
    assert np.all(np.diff(j.power_norms) > 0.5)
    with pytest.raises(SingularOperator):
        classify_operator(np.diag([1, 0]), 1, 1, 2)


def test_represent_verdicts():
    v = represent(harmonic_frame(2, 3))
    assert v.representable and v.consistent
    assert np.allclose(v.generator, np.diag([1, W3]))
    d = v.to_dict()
    assert set(d["criteria"]) == {"kernel_shift", "circulant_gram", "generator_exact"}
    assert d["violation"] is None and d["class"]["unitary"]

    w = represent(SWAPPED)
    assert not w.representable and w.consistent
    assert w.to_dict()["violation"]["i"] == 0 and w.to_dict()["generator"] is None


def test_gram_circulant_iff_unitary():
    rng = np.random.default_rng(3)
    F, _ = unitary_orbit(rng, 3, 5)
    assert gram_circulant_test(F).passed
    B = Frame.from_vectors(crandn(rng, 3, 3))  # orbit of a non-unitary T
    assert circulant_cross_gram_test(B).passed and not gram_circulant_test(B).passed


def test_necessary_conditions():
    nc = necessary_conditions(harmonic_frame(2, 3))
    assert nc.passed and nc.tight and nc.norm_constant
    assert np.allclose(nc.diag_values, 2 / 3)
    rng = np.random.default_rng(4)
    assert not necessary_conditions(random_frame(rng, 2, 5)).passed
    # tight frame in C^2 holding a vector of norm sqrt(B) with M > d
    T = Frame.from_vectors([[np.sqrt(2), 0], [0, 1], [0, 1]])
    ncx = necessary_conditions(T)
    assert ncx.tight and ncx.onb_extremal["applies"] and not ncx.onb_extremal["consistent"]
    assert not ncx.passed


def test_components_examples():
    assert orthogonality_components(harmonic_frame(2, 3)).sizes == (3,)
    H, _ = block_harmonic_frame(4, 2, 2)
    assert orthogonality_components(H).sizes == (4, 4)
    D = dyadic_band_frame(BandSpec((((0, 1), 2), ((2,), 2))), 3)
    rep = orthogonality_components(D)
    assert rep.sizes == (4, 2) and rep.obstruction.fires


def test_obstruction_examples():
    mk = lambda sizes: DecompositionReport(tuple(), tuple(sizes), "cyclic")
    assert imprimitivity_obstruction(mk((4, 2)), "cyclic").verdict == "Fires"
    assert imprimitivity_obstruction(mk((3, 3)), "cyclic").verdict == "Inconclusive"
    assert imprimitivity_obstruction(mk((5,)), "cyclic").verdict == "Inconclusive"
    with pytest.raises(WindowedModelUnsupported):
        imprimitivity_obstruction(mk((3, 3)), "windowed")


def test_successor_is_graph_automorphism():
    rng = np.random.default_rng(5)
    frames = [harmonic_frame(2, 5), block_harmonic_frame(4, 2, 2)[0]]
    frames += [unitary_orbit(rng, 3, 6)[0] for _ in range(5)]
    for F in frames:
        assert circulant_cross_gram_test(F).passed
        A = orthogonality_graph(F)
        assert np.array_equal(A, np.roll(A, (1, 1), axis=(0, 1)))


def test_windowed_model():
    H = harmonic_frame(2, 4).with_model("windowed")
    v = represent(H)
    assert v.model == "windowed" and v.representable
    assert not represent(SWAPPED.with_model("windowed")).representable
    rng = np.random.default_rng(6)
    # truncation of a longer orbit, with the window shorter than the dimension
    T = np.diag(np.exp(2j * np.pi * rng.random(3)))
    f = verify_orbit(T, [1, 1, 1], 2, kind="windowed").frame
    assert f.index_model.kind.value == "windowed"
