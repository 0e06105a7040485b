"""Seeded frame corpora shared by the unit, property and acceptance tests."""
import numpy as np

from frameorbit import Frame, verify_orbit


def crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unitary(rng, d):
    Q, R = np.linalg.qr(crandn(rng, d, d))
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def random_frame(rng, d, M):
    """Gaussian frame; resampled until it spans (it almost always does)."""
    while True:
        V = crandn(rng, M, d)
        if np.linalg.matrix_rank(V) == d:
            return Frame.from_vectors(V)


def unitary_orbit(rng, d, M, tight=False):
    """Orbit of a random unitary with distinct M-th-root eigenvalues, so T^M = I."""
    Q = random_unitary(rng, d)
    ks = rng.choice(M, size=d, replace=False)
    T = Q @ np.diag(np.exp(2j * np.pi * ks / M)) @ Q.conj().T
    if tight:
        c = np.exp(2j * np.pi * rng.random(d))
    else:
        c = (0.3 + rng.random(d)) * np.exp(2j * np.pi * rng.random(d))
    F = verify_orbit(T, Q @ c, M).frame
    return F, T


def similarity_orbit(rng, d, M):
    """Orbit of a non-unitary T = V diag(roots) V^-1 with T^M = I."""
    while True:
        V = crandn(rng, d, d)
        if np.linalg.cond(V) < 50:
            break
    ks = rng.choice(M, size=d, replace=False)
    T = V @ np.diag(np.exp(2j * np.pi * ks / M)) @ np.linalg.inv(V)
    F = verify_orbit(T, V @ (0.5 + rng.random(d)), M).frame
    return F, T


def equivalence_corpus(seed=20240602, n=200):
    """Half genuine unitary orbits (a third of them tight), half Gaussian frames.

    Each entry is (kind, frame, generator or None), d <= 4, M <= 8.
    """
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n // 2):
        d = int(rng.integers(1, 5))
        M = int(rng.integers(max(d, 2), 9))
        F, T = unitary_orbit(rng, d, M, tight=(i % 3 == 0))
        out.append(("orbit", F, T))
    for _ in range(n - n // 2):
        d = int(rng.integers(1, 5))
        M = int(rng.integers(d, 9))
        out.append(("random", random_frame(rng, d, M), None))
    return out
