"""Dense complex linear algebra shared by every other module.

All zero/rank decisions are relative: they scale with the largest singular
value or the largest matrix magnitude, so a frame and any nonzero multiple of
it get the same verdicts.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    DimensionMismatch,
    InvalidParams,
    NoExactSolution,
    NotHermitian,
    NotPositiveDefinite,
    NumericalFailure,
)

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Tolerance:
    """Relative thresholds used for every "is this zero?" decision.

    ``rank_tol_factor=None`` means ``max(rows, cols)`` of the matrix being
    ranked, the LAPACK-style default.
    """

    zero_tol: float = 1e-9
    rank_tol_factor: float | None = None

    def __post_init__(self):
        if not (self.zero_tol > 0 and np.isfinite(self.zero_tol)):
            raise InvalidParams(f"zero_tol must be positive, got {self.zero_tol!r}")
        if self.rank_tol_factor is not None and not self.rank_tol_factor >= 1:
            raise InvalidParams(
                f"rank_tol_factor must be >= 1, got {self.rank_tol_factor!r}"
            )

    def rank_cutoff(self, shape, sigma_max):
        factor = self.rank_tol_factor or max(shape)
        return factor * EPS * sigma_max


DEFAULT_TOL = Tolerance()


def as_matrix(M, name="matrix"):
    """Validate and convert to a 2-D complex128 array (copy-free when possible)."""
    A = np.asarray(M, dtype=np.complex128)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise DimensionMismatch(f"{name} must be a non-empty 2-D array, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise InvalidParams(f"{name} has non-finite entries")
    return A


def _require_square(A, name):
    if A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {A.shape}")


def hermitian_eig(M, tol=DEFAULT_TOL):
    """Eigenvalues (ascending) and unitary eigenvectors of a Hermitian matrix.

    Raises NotHermitian when ``max|M - M*| > zero_tol * max|M|``.
    """
    A = as_matrix(M)
    _require_square(A, "M")
    scale = np.max(np.abs(A))
    if np.max(np.abs(A - A.conj().T)) > tol.zero_tol * scale:
        raise NotHermitian("matrix is not Hermitian within tolerance")
    try:
        w, V = np.linalg.eigh((A + A.conj().T) / 2)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericalFailure(str(exc)) from exc
    return w, V


def inv_sqrt_hermitian(M, tol=DEFAULT_TOL):
    """R = M^{-1/2} for Hermitian positive definite M."""
    w, V = hermitian_eig(M, tol)
    if not w[-1] > 0 or w[0] <= tol.zero_tol * w[-1]:
        margin = w[0] / w[-1] if w[-1] > 0 else -np.inf
        raise NotPositiveDefinite(
            f"not positive definite: lambda_min/lambda_max = {margin:.3e}", margin=margin
        )
    R = (V / np.sqrt(w)) @ V.conj().T
    return (R + R.conj().T) / 2


def singular_values(M):
    return np.linalg.svd(as_matrix(M), compute_uv=False)


def numerical_rank(M, tol=DEFAULT_TOL):
    A = as_matrix(M)
    s = np.linalg.svd(A, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > tol.rank_cutoff(A.shape, s[0])))


def nullspace(M, tol=DEFAULT_TOL):
    """Orthonormal basis (as columns) of the kernel of M.

    The number of columns is ``cols - rank`` with rank counted from singular
    values above ``rank_tol_factor * eps * sigma_max``.
    """
    A = as_matrix(M)
    _, s, Vh = np.linalg.svd(A, full_matrices=True)
    if s.size == 0 or s[0] == 0:
        rank = 0
    else:
        rank = int(np.sum(s > tol.rank_cutoff(A.shape, s[0])))
    return Vh[rank:].conj().T


def solve_exact_or_reject(A, B, tol=DEFAULT_TOL):
    """Least-squares X for ``A X = B``; raise unless the fit is exact.

    Exact means ``||A X - B||_F <= zero_tol * ||B||_F``. The raised
    NoExactSolution carries the absolute residual.
    """
    A = as_matrix(A, "A")
    B = as_matrix(B, "B")
    if A.shape[0] != B.shape[0]:
        raise DimensionMismatch(f"row counts differ: {A.shape[0]} vs {B.shape[0]}")
    X, *_ = np.linalg.lstsq(A, B, rcond=None)
    residual = float(np.linalg.norm(A @ X - B))
    if residual > tol.zero_tol * np.linalg.norm(B):
        raise NoExactSolution(residual)
    return X


def opnorm(M):
    """Spectral norm (largest singular value)."""
    return float(np.linalg.norm(M, 2))
