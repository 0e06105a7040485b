"""Finite frames in C^d and their calculus.

A :class:`Frame` is an *ordered* list of vectors: the order is part of its
identity, because representability as an operator orbit depends on it.

Inner products are linear in the first argument, ``<x, y> = sum x_k conj(y_k)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .exceptions import (
    DimensionMismatch,
    InvalidParams,
    NotAFrame,
    NotPositiveDefinite,
    NumericalFailure,
)
from .linalg import DEFAULT_TOL, Tolerance, hermitian_eig, inv_sqrt_hermitian, nullspace


class IndexKind(str, Enum):
    CYCLIC = "cyclic"
    WINDOWED = "windowed"


@dataclass(frozen=True)
class IndexModel:
    """How the indices ``0..size-1`` are read.

    Cyclic indices live in Z_size, so the successor of ``size-1`` is ``0``.
    Windowed indices are a finite segment of a Z-indexed sequence and
    ``size-1`` has no successor.
    """

    kind: IndexKind
    size: int

    def __post_init__(self):
        object.__setattr__(self, "kind", IndexKind(self.kind))
        if self.size < 1:
            raise InvalidParams("index model needs at least one index")

    @property
    def cyclic(self):
        return self.kind is IndexKind.CYCLIC

    def succ(self, n):
        if self.cyclic:
            return (n + 1) % self.size
        if n + 1 >= self.size:
            raise IndexError(f"index {n} has no successor in a window of size {self.size}")
        return n + 1


@dataclass(frozen=True, eq=False)
class Frame:
    """An ordered family of ``M`` vectors in ``C^d``.

    ``vectors`` is stored as a read-only ``(M, d)`` complex array (row n is
    f_n). ``provenance`` records the permutation that produced this frame
    from a parent, if any.
    """

    vectors: np.ndarray
    index_model: IndexModel
    tol: Tolerance = DEFAULT_TOL
    provenance: tuple | None = field(default=None)

    def __post_init__(self):
        V = np.array(self.vectors, dtype=np.complex128)
        if V.ndim != 2 or V.shape[0] < 1 or V.shape[1] < 1:
            raise InvalidParams(f"vectors must form a non-empty (M, d) array, got {V.shape}")
        if not np.all(np.isfinite(V)):
            raise InvalidParams("vectors contain non-finite entries")
        if not np.any(V != 0):
            raise InvalidParams("at least one vector must be nonzero")
        if self.index_model.size != V.shape[0]:
            raise InvalidParams("index model size does not match the number of vectors")
        V.flags.writeable = False
        object.__setattr__(self, "vectors", V)

    @classmethod
    def from_vectors(cls, vectors, kind="cyclic", tol=None):
        V = np.asarray(vectors, dtype=np.complex128)
        if V.ndim == 1:
            V = V.reshape(-1, 1)
        return cls(V, IndexModel(IndexKind(kind), V.shape[0]), tol or DEFAULT_TOL)

    @classmethod
    def from_synthesis(cls, U, kind="cyclic", tol=None):
        """Build from a d x M matrix whose columns are the frame vectors."""
        return cls.from_vectors(np.asarray(U).T, kind, tol)

    @property
    def dim(self):
        return self.vectors.shape[1]

    @property
    def size(self):
        return self.vectors.shape[0]

    @property
    def cyclic(self):
        return self.index_model.cyclic

    def __len__(self):
        return self.size

    def __getitem__(self, n):
        return self.vectors[n]

    def __eq__(self, other):
        if not isinstance(other, Frame):
            return NotImplemented
        return (
            self.index_model == other.index_model
            and self.tol == other.tol
            and np.array_equal(self.vectors, other.vectors)
        )

    __hash__ = None

    def reorder(self, perm):
        """New frame with ``g_n = f_{perm[n]}``."""
        perm = tuple(int(p) for p in perm)
        if sorted(perm) != list(range(self.size)):
            raise InvalidParams(f"not a permutation of 0..{self.size - 1}: {perm}")
        return Frame(self.vectors[list(perm)], self.index_model, self.tol, provenance=perm)

    def with_vectors(self, vectors):
        return Frame(vectors, self.index_model, self.tol)

    def with_model(self, kind):
        return Frame(self.vectors, IndexModel(IndexKind(kind), self.size), self.tol)


def synthesis_matrix(F):
    """d x M matrix U with column n equal to f_n."""
    return F.vectors.T.copy()


def frame_operator(F):
    """S = U U*, i.e. ``S f = sum <f, f_n> f_n``."""
    U = synthesis_matrix(F)
    S = U @ U.conj().T
    return (S + S.conj().T) / 2


def _spectrum(F):
    w, V = hermitian_eig(frame_operator(F), F.tol)
    return w, V


def is_frame(F):
    w, _ = _spectrum(F)
    return bool(w[-1] > 0 and w[0] > F.tol.zero_tol * w[-1])


def frame_bounds(F):
    """Optimal bounds (A, B) = (lambda_min(S), lambda_max(S))."""
    w, _ = _spectrum(F)
    if not (w[-1] > 0 and w[0] > F.tol.zero_tol * w[-1]):
        raise NotAFrame(margin=float(w[0] / w[-1]) if w[-1] > 0 else 0.0)
    return float(w[0]), float(w[-1])


def _inverse_frame_operator(F):
    w, V = _spectrum(F)
    if not (w[-1] > 0 and w[0] > F.tol.zero_tol * w[-1]):
        raise NotAFrame(margin=float(w[0] / w[-1]) if w[-1] > 0 else 0.0)
    Sinv = (V / w) @ V.conj().T
    return (Sinv + Sinv.conj().T) / 2


def canonical_dual(F):
    """{S^{-1} f_n} with the same index model."""
    Sinv = _inverse_frame_operator(F)
    return F.with_vectors((Sinv @ synthesis_matrix(F)).T)


def canonical_tight(F):
    """{S^{-1/2} f_n}, a Parseval frame."""
    try:
        R = inv_sqrt_hermitian(frame_operator(F), F.tol)
    except NotPositiveDefinite as exc:
        raise NotAFrame(margin=exc.margin) from exc
    return F.with_vectors((R @ synthesis_matrix(F)).T)


def cross_gram(F, G):
    """Matrix of ``<f_i, g_j>``."""
    if F.dim != G.dim:
        raise DimensionMismatch(f"ambient dimensions differ: {F.dim} vs {G.dim}")
    if F.size != G.size:
        raise DimensionMismatch(f"frame sizes differ: {F.size} vs {G.size}")
    return F.vectors @ G.vectors.conj().T


def gram(F):
    return cross_gram(F, F)


def dual_cross_gram(F):
    """``<f_i, h_j>`` against the canonical dual; an orthogonal projection of rank d."""
    return cross_gram(F, canonical_dual(F))


def excess_kernel(F):
    """dim N(U) = M - rank U."""
    return nullspace(synthesis_matrix(F), F.tol).shape[1]


def excess_sum(F):
    """sum_n (1 - <f_n, h_n>); equals the excess for a frame."""
    d = np.einsum("nk,nk->n", F.vectors, canonical_dual(F).vectors.conj())
    scale = max(1.0, float(np.max(np.abs(d))))
    if np.max(np.abs(d.imag)) > F.tol.zero_tol * scale:
        raise NumericalFailure("diagonal of the dual cross-Gram is not real")
    return float(np.sum(1.0 - d.real))


def norms(F):
    return np.linalg.norm(F.vectors, axis=1)


def is_norm_constant(F):
    n = norms(F)
    return bool(n.max() - n.min() <= F.tol.zero_tol * n.max())


def duplicate_pairs(F):
    """Index pairs (i < j) with ``||f_i - f_j|| <= zero_tol * max ||f_n||``."""
    V = F.vectors
    thresh = F.tol.zero_tol * norms(F).max()
    diff = np.linalg.norm(V[:, None, :] - V[None, :, :], axis=2)
    i, j = np.nonzero(np.triu(diff <= thresh, k=1))
    return list(zip(i.tolist(), j.tolist()))


@dataclass(frozen=True)
class FrameDiagnostics:
    lower_bound: float
    upper_bound: float
    is_tight: bool
    excess_kernel: int
    excess_sum: float
    is_linearly_independent: bool
    is_norm_constant: bool
    has_duplicates: bool
    dim: int
    size: int
    model: str

    def to_dict(self):
        return {
            "A": self.lower_bound,
            "B": self.upper_bound,
            "is_tight": self.is_tight,
            "excess_kernel": self.excess_kernel,
            "excess_sum": self.excess_sum,
            "is_linearly_independent": self.is_linearly_independent,
            "is_norm_constant": self.is_norm_constant,
            "has_duplicates": self.has_duplicates,
            "dim": self.dim,
            "M": self.size,
            "model": self.model,
        }


def diagnostics(F):
    """Bounds, tightness, excess (two ways) and the structural flags.

    Linear independence is only reported for ``M <= d``; larger families in
    C^d are always dependent.
    """
    A, B = frame_bounds(F)
    k = excess_kernel(F)
    return FrameDiagnostics(
        lower_bound=A,
        upper_bound=B,
        is_tight=bool(B - A <= F.tol.zero_tol * B),
        excess_kernel=k,
        excess_sum=excess_sum(F),
        is_linearly_independent=bool(F.size <= F.dim and k == 0),
        is_norm_constant=is_norm_constant(F),
        has_duplicates=bool(duplicate_pairs(F)),
        dim=F.dim,
        size=F.size,
        model=F.index_model.kind.value,
    )
