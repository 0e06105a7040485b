"""Constructors for structured finite frames.

Gabor systems live on Z_d with translation ``(T_a f)(x) = f(x - a)`` and
modulation ``(E_b f)(x) = exp(2 pi i b x / d) f(x)``, both mod d.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import BandsNotCovering, InvalidParams, NotAFrame, NotUnitary, WindowVanishes
from .frames import Frame, IndexKind, IndexModel, canonical_dual, frame_operator, is_frame
from .linalg import DEFAULT_TOL, inv_sqrt_hermitian


def _root(n, k=1):
    """exp(2 pi i k / n), with exact values at the quarter turns."""
    k = k % n
    if (4 * k) % n == 0:
        return (1, 1j, -1, -1j)[(4 * k) // n]
    return np.exp(2j * np.pi * k / n)


def _phases(n, ks):
    return np.array([_root(n, int(k)) for k in ks], dtype=complex)


def translation_op(d, a):
    """Permutation matrix of the cyclic shift by ``a``."""
    if not 0 <= a < d:
        raise InvalidParams(f"need 0 <= a < d, got a={a}, d={d}")
    P = np.zeros((d, d), dtype=complex)
    P[(np.arange(d) + a) % d, np.arange(d)] = 1
    return P


def modulation_op(d, b):
    """diag(exp(2 pi i b k / d))."""
    if not 0 <= b < d:
        raise InvalidParams(f"need 0 <= b < d, got b={b}, d={d}")
    return np.diag(_phases(d, b * np.arange(d)))


def weyl_phase(d, a, b):
    return _root(d, -a * b)


def weyl_phase_check(d, a, b):
    """max |T_a E_b - exp(-2 pi i ab/d) E_b T_a|."""
    Ta, Eb = translation_op(d, a % d), modulation_op(d, b % d)
    return float(np.max(np.abs(Ta @ Eb - weyl_phase(d, a, b) * (Eb @ Ta))))


@dataclass(frozen=True)
class GaborParams:
    d: int
    a: int
    b: int
    window: np.ndarray
    ordering: tuple | str = "raster"

    def __post_init__(self):
        d, a, b = self.d, self.a, self.b
        if d < 1 or a < 1 or b < 1 or d % a or d % b:
            raise InvalidParams(f"need a | d and b | d with a, b >= 1 (d={d}, a={a}, b={b})")
        g = np.asarray(self.window, dtype=complex).ravel()
        if g.size != d:
            raise InvalidParams(f"window has length {g.size}, expected {d}")
        object.__setattr__(self, "window", g)
        if self.ordering != "raster":
            perm = tuple(int(p) for p in self.ordering)
            if sorted(perm) != list(range(self.size)):
                raise InvalidParams("ordering must be 'raster' or a permutation of 0..M-1")
            object.__setattr__(self, "ordering", perm)

    @property
    def n_translations(self):
        return self.d // self.a

    @property
    def n_modulations(self):
        return self.d // self.b

    @property
    def size(self):
        return self.n_translations * self.n_modulations

    def raster_index(self, m, n):
        """Position of g_{m,n} = E_b^m T_a^n g in raster order."""
        return (n % self.n_translations) * self.n_modulations + (m % self.n_modulations)

    def with_window(self, window):
        return GaborParams(self.d, self.a, self.b, window, self.ordering)


def gabor_vectors(p):
    """(M, d) array of E_b^m T_a^n g in raster order (translations outer)."""
    d, a, b, g = p.d, p.a, p.b, p.window
    x = np.arange(d)
    out = np.empty((p.size, d), dtype=complex)
    for n in range(p.n_translations):
        shifted = np.roll(g, n * a)
        for m in range(p.n_modulations):
            out[p.raster_index(m, n)] = _phases(d, m * b * x) * shifted
    return out


def gabor_system(p, tol=DEFAULT_TOL):
    """The frame {E_b^m T_a^n g}; raises NotAFrame if it does not span."""
    V = gabor_vectors(p)
    if p.ordering != "raster":
        V = V[list(p.ordering)]
    if not np.any(V != 0):
        raise NotAFrame("window is zero")
    F = Frame(V, IndexModel(IndexKind.CYCLIC, len(V)), tol)
    if not is_frame(F):
        raise NotAFrame("Gabor system does not span C^d")
    return F


def is_riesz(p):
    return p.size == p.d


def gabor_dual_window(p, tol=DEFAULT_TOL):
    """h = S^{-1} g; the canonical dual is the Gabor system of h."""
    F = gabor_system(p, tol)
    return np.linalg.solve(frame_operator(F), p.window)


def gabor_tight_window(p, tol=DEFAULT_TOL):
    F = gabor_system(p, tol)
    return inv_sqrt_hermitian(frame_operator(F), tol) @ p.window


@dataclass(frozen=True)
class PhaseOrbit:
    m: int
    n: int
    base: complex
    values: np.ndarray
    predicted: np.ndarray
    max_error: float
    distinct: int
    expected_distinct: int


def _count_distinct(values, tol):
    reps = []
    for v in values:
        if not any(abs(v - r) <= tol for r in reps):
            reps.append(v)
    return len(reps)


def phase_orbit(p, m, n, tol=DEFAULT_TOL):
    """Values ``<g_{0,k}, h_{m,n+k}>`` over all translation steps k.

    Commuting T_a^k past E_b^m gives
    ``<g_{0,k}, h_{m,n+k}> = exp(-2 pi i m k a b / d) <g, h_{m,n}>`` for the
    inner product linear in its first slot, so the values run through
    ``d / gcd(d, m a b)`` points on a circle.
    """
    h = gabor_dual_window(p, tol)
    G = gabor_vectors(p)
    H = gabor_vectors(p.with_window(h))
    K = p.n_translations
    base = np.vdot(H[p.raster_index(m, n)], G[p.raster_index(0, 0)])
    ks = np.arange(K)
    values = np.array(
        [np.vdot(H[p.raster_index(m, n + k)], G[p.raster_index(0, k)]) for k in ks]
    )
    predicted = _phases(p.d, -m * ks * p.a * p.b) * base
    scale = abs(base)
    return PhaseOrbit(
        m=m,
        n=n,
        base=complex(base),
        values=values,
        predicted=predicted,
        max_error=float(np.max(np.abs(values - predicted))),
        distinct=_count_distinct(values, 1e-6 * scale) if scale > 0 else 1,
        expected_distinct=p.d // math.gcd(p.d, m * p.a * p.b),
    )


def harmonic_frame(d, M, tol=DEFAULT_TOL):
    """f_n[k] = exp(2 pi i n k / M) / sqrt(d): tight with bound M/d."""
    if d < 1 or M < d:
        raise InvalidParams(f"harmonic frame needs 1 <= d <= M (d={d}, M={M})")
    n = np.arange(M)[:, None]
    k = np.arange(d)[None, :]
    V = _phases(M, (n * k).ravel()).reshape(M, d) / np.sqrt(d)
    return Frame(V, IndexModel(IndexKind.CYCLIC, M), tol)


def harmonic_generator(d, M):
    return np.diag(_phases(M, np.arange(d)))


def exponential_frame(g, N, tol=DEFAULT_TOL):
    """f_m = D^m g with D = diag(exp(2 pi i k / (N d))), m < N d."""
    g = np.asarray(g, dtype=complex).ravel()
    d = g.size
    if N < 1:
        raise InvalidParams("redundancy N must be >= 1")
    scale = np.abs(g).max()
    if scale == 0 or np.abs(g).min() <= tol.zero_tol * scale:
        raise WindowVanishes("window vanishes at some coordinate")
    M = N * d
    m = np.arange(M)[:, None]
    k = np.arange(d)[None, :]
    V = _phases(M, (m * k).ravel()).reshape(M, d) * g
    return Frame(V, IndexModel(IndexKind.CYCLIC, M), tol)


def exponential_generator(d, N):
    return np.diag(_phases(N * d, np.arange(d)))


def block_harmonic_frame(d, K, N, tol=DEFAULT_TOL):
    """Union of K orthogonal block exponential frames, ordered so it is an orbit.

    Block k covers coordinates ``kL .. kL+L-1`` (``L = d/K``) and carries
    ``f_{m,k}[kL + u] = exp(2 pi i m u / (N L))`` for ``m < N L``. The ordering
    is ``f_n = f_{m,k}`` with ``n = m K + k``. The generator moves each block
    to the next one and multiplies the block wrapping into block 0 by
    ``exp(2 pi i u / (N L))``; it is unitary with ``T^{N d} = I``.

    Returns ``(frame, T)``.
    """
    if K < 1 or N < 1 or d % K:
        raise InvalidParams(f"need K | d and N >= 1 (d={d}, K={K}, N={N})")
    L = d // K
    R = N * L
    M = K * R
    u = np.arange(L)
    V = np.zeros((M, d), dtype=complex)
    for m in range(R):
        row = _phases(R, m * u)
        for k in range(K):
            V[m * K + k, k * L:(k + 1) * L] = row
    T = np.zeros((d, d), dtype=complex)
    for k in range(K - 1):
        T[(k + 1) * L + u, k * L + u] = 1
    T[u, (K - 1) * L + u] = _phases(R, u)
    return Frame(V, IndexModel(IndexKind.CYCLIC, M), tol), T


@dataclass(frozen=True)
class BandSpec:
    bands: tuple  # ((frequencies...), redundancy)

    def __post_init__(self):
        seen = set()
        clean = []
        for freqs, red in self.bands:
            freqs = tuple(int(f) for f in freqs)
            if not freqs:
                raise InvalidParams("empty band")
            if red < 1:
                raise InvalidParams("band redundancy must be >= 1")
            if seen & set(freqs) or len(set(freqs)) != len(freqs):
                raise InvalidParams("bands must be pairwise disjoint")
            seen |= set(freqs)
            clean.append((freqs, int(red)))
        object.__setattr__(self, "bands", tuple(clean))

    @property
    def frequencies(self):
        return sorted(f for freqs, _ in self.bands for f in freqs)

    @property
    def expected_component_sizes(self):
        return tuple(len(freqs) * red for freqs, red in self.bands)


def dft_basis(d):
    """Unitary DFT matrix; column f is exp(2 pi i f x / d) / sqrt(d)."""
    x = np.arange(d)
    return _phases(d, np.outer(x, x).ravel()).reshape(d, d) / np.sqrt(d)


def dyadic_band_frame(spec, d, tol=DEFAULT_TOL, allow_subspace=False):
    """Per-band harmonic frames placed in disjoint DFT-frequency subspaces.

    Vectors of different bands are exactly orthogonal. Bands are listed in
    the given order. When the bands do not cover ``0..d-1`` the result
    frames only a subspace: BandsNotCovering is raised unless
    ``allow_subspace`` is set, in which case the frame is returned in the
    orthonormal DFT coordinates of the covered frequencies.
    """
    if len(spec.bands) < 2:
        raise InvalidParams("a band frame needs at least two bands")
    freqs = spec.frequencies
    if freqs[0] < 0 or freqs[-1] >= d:
        raise InvalidParams(f"band frequencies must lie in 0..{d - 1}")
    covering = len(freqs) == d
    if not covering and not allow_subspace:
        raise BandsNotCovering(
            f"bands cover {len(freqs)} of {d} frequencies; the result frames only a subspace"
        )
    W = dft_basis(d)
    rows = []
    for band, red in spec.bands:
        k = len(band)
        coeffs = harmonic_frame(k, red * k).vectors
        if covering:
            rows.append(coeffs @ W[:, list(band)].T)
        else:
            idx = [freqs.index(f) for f in band]
            block = np.zeros((len(coeffs), len(freqs)), dtype=complex)
            block[:, idx] = coeffs
            rows.append(block)
    V = np.vstack(rows)
    return Frame(V, IndexModel(IndexKind.CYCLIC, len(V)), tol)


def union_onb_frame(bases, interleave=False, tol=DEFAULT_TOL):
    """Union of orthonormal bases (columns of unitary matrices).

    Concatenated basis by basis, or interleaved (vector j of basis i at
    position ``j * N + i``). Tight with bound N.
    """
    mats = [np.asarray(B, dtype=complex) for B in bases]
    if not mats:
        raise InvalidParams("need at least one basis")
    d = mats[0].shape[0]
    for i, B in enumerate(mats):
        if B.shape != (d, d):
            raise InvalidParams(f"basis {i} has shape {B.shape}, expected {(d, d)}")
        if np.abs(B.conj().T @ B - np.eye(d)).max() > tol.zero_tol * 10:
            raise NotUnitary(f"basis {i} is not unitary")
    N = len(mats)
    if interleave:
        V = np.stack([B.T for B in mats], axis=1).reshape(N * d, d)
    else:
        V = np.vstack([B.T for B in mats])
    return Frame(V, IndexModel(IndexKind.CYCLIC, N * d), tol)


def named_basis(name, d):
    if name == "identity":
        return np.eye(d, dtype=complex)
    if name == "dft":
        return dft_basis(d)
    raise InvalidParams(f"unknown basis {name!r} (known: identity, dft)")


def gabor_dual_system(p, tol=DEFAULT_TOL):
    """canonical_dual of the Gabor system, for comparison with the dual window."""
    return canonical_dual(gabor_system(p, tol))
