"""Representability of an ordered frame as an operator orbit ``f_n = T^n f_0``.

Three independent routes decide the question for a fixed ordering:

* the kernel of the synthesis operator is invariant under the index shift
  (:func:`kernel_shift_invariance`);
* the cross-Gram matrix ``<f_i, h_j>`` against the canonical dual is
  circulant (cyclic) or Toeplitz (windowed) (:func:`circulant_cross_gram_test`);
* the linear system ``T f_n = f_{n+1}`` has an exact solution
  (:func:`build_generator`).

In the cyclic model all three are exactly equivalent; the windowed model
reports them as diagnostics for truncations of Z-indexed frames.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import connected_components

from .exceptions import (
    DimensionMismatch,
    InvalidParams,
    NoExactSolution,
    NotCyclic,
    NumericalFailure,
    SingularGenerator,
    SingularOperator,
    WindowedModelUnsupported,
)
from .frames import (
    Frame,
    IndexKind,
    IndexModel,
    canonical_dual,
    diagnostics,
    dual_cross_gram,
    frame_bounds,
    is_frame,
    norms,
    synthesis_matrix,
)
from .jsonio import matrix_to_json, vector_to_json
from .linalg import DEFAULT_TOL, as_matrix, nullspace, opnorm, solve_exact_or_reject

# slack on the operator-norm bounds 1 <= ||T^n|| <= sqrt(B/A)
NORM_BOUND_TOL = 1e-6


@dataclass(frozen=True)
class KernelShiftResult:
    passed: bool
    residual: float
    certificate: np.ndarray | None = None
    certificate_residual: float = 0.0
    direction: str | None = None
    kernel_dim: int = 0


@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    magnitude: float

    def to_dict(self):
        return {"i": self.i, "j": self.j, "magnitude": self.magnitude}


@dataclass(frozen=True)
class CirculantResult:
    passed: bool
    residual: float
    threshold: float
    violation: Violation | None = None


@dataclass(frozen=True)
class GeneratorResult:
    T: np.ndarray
    residual: float
    extension: str


@dataclass(frozen=True)
class OperatorClass:
    invertible: bool
    unitary: bool
    normal: bool
    hermitian: bool
    norm: float
    inverse_norm: float
    power_norms: tuple
    lower_bound_ok: bool
    upper_bound_ok: bool

    @property
    def max_power_norm(self):
        return max(self.power_norms)

    @property
    def bounds_ok(self):
        return self.lower_bound_ok and self.upper_bound_ok


@dataclass(frozen=True)
class CriterionResult:
    passed: bool
    residual: float

    def to_dict(self):
        return {"pass": self.passed, "residual": self.residual}


@dataclass(frozen=True)
class RepresentabilityVerdict:
    model: str
    criteria: dict
    generator: np.ndarray | None = None
    generator_class: OperatorClass | None = None
    violation: Violation | None = None
    kernel_certificate: np.ndarray | None = None
    extension: str | None = None

    @property
    def representable(self):
        return self.generator is not None

    @property
    def consistent(self):
        """True when all criteria agree (always expected in the cyclic model)."""
        return len({c.passed for c in self.criteria.values()}) == 1

    def to_dict(self):
        c = self.generator_class
        return {
            "model": self.model,
            "criteria": {k: v.to_dict() for k, v in self.criteria.items()},
            "generator": None if self.generator is None else matrix_to_json(self.generator),
            "class": None
            if c is None
            else {"unitary": c.unitary, "normal": c.normal, "hermitian": c.hermitian},
            "norms": None
            if c is None
            else {"T": c.norm, "Tinv": c.inverse_norm, "max_power": c.max_power_norm},
            "violation": None if self.violation is None else self.violation.to_dict(),
            "kernel_certificate": None
            if self.kernel_certificate is None
            else vector_to_json(self.kernel_certificate),
        }


# ----------------------------------------------------------------------------
# shift invariance of the synthesis kernel


def _kernel_vectors_vanishing_at(N, index, tol):
    """Orthonormal basis of the kernel vectors whose coordinate ``index`` is 0."""
    row = N[index]
    if np.linalg.norm(row) <= tol.zero_tol:
        return N
    return N @ nullspace(row.reshape(1, -1), tol)


def _shift_residuals(N, shifted):
    out = shifted - N @ (N.conj().T @ shifted)
    return np.linalg.norm(out, axis=0)


def kernel_shift_invariance(F):
    """Test whether N(U) is mapped into itself by the index shift.

    Cyclic model: the cyclic shift (one direction suffices, the shift is a
    permutation of finite order). Windowed model: both truncating shifts,
    applied to the kernel vectors whose escaping coordinate vanishes.
    On failure the certificate is a kernel vector whose shift leaves the
    kernel, with the out-of-kernel residual.
    """
    N = nullspace(synthesis_matrix(F), F.tol)
    k = N.shape[1]
    M = F.size
    if k == 0:
        return KernelShiftResult(True, 0.0, kernel_dim=0)

    tests = []
    if F.cyclic:
        tests.append(("forward", N, np.roll(N, -1, axis=0)))
    else:
        K0 = _kernel_vectors_vanishing_at(N, 0, F.tol)
        fwd = np.zeros_like(K0)
        fwd[: M - 1] = K0[1:]
        tests.append(("forward", K0, fwd))
        K1 = _kernel_vectors_vanishing_at(N, M - 1, F.tol)
        back = np.zeros_like(K1)
        back[1:] = K1[: M - 1]
        tests.append(("backward", K1, back))

    worst = (0.0, None, None)
    for direction, basis, shifted in tests:
        if basis.shape[1] == 0:
            continue
        res = _shift_residuals(N, shifted)
        j = int(np.argmax(res))
        if res[j] > worst[0]:
            worst = (float(res[j]), basis[:, j].copy(), direction)
    residual, vec, direction = worst
    if residual <= F.tol.zero_tol:
        return KernelShiftResult(True, residual, kernel_dim=k)
    return KernelShiftResult(
        False, residual, certificate=vec, certificate_residual=residual,
        direction=direction, kernel_dim=k,
    )


# ----------------------------------------------------------------------------
# circulant / Toeplitz structure of the dual cross-Gram


def successor_differences(G, cyclic=True):
    """``G[i, j] - G[i+1, j+1]`` over the valid index pairs."""
    if cyclic:
        return G - np.roll(G, (-1, -1), axis=(0, 1))
    return G[:-1, :-1] - G[1:, 1:]


def circulant_test_matrix(G, zero_tol, cyclic=True):
    """Circulant (or Toeplitz) test of an arbitrary square matrix.

    Magnitudes are compared squared, ``|D|^2 > (zero_tol * max|G|)^2``, the
    same expression the ordering-search kernels evaluate. The reported
    violation is the first offending pair in row-major order.
    """
    G = np.asarray(G)
    thresh = zero_tol * float(np.max(np.abs(G)))
    D = successor_differences(G, cyclic)
    mag2 = D.real * D.real + D.imag * D.imag
    bad = mag2 > thresh * thresh
    residual = float(np.sqrt(mag2.max())) if mag2.size else 0.0
    if not bad.any():
        return CirculantResult(True, residual, thresh)
    i, j = np.argwhere(bad)[0]
    return CirculantResult(
        False, residual, thresh, Violation(int(i), int(j), float(np.sqrt(mag2[i, j])))
    )


def circulant_cross_gram_test(F):
    """Is ``<f_i, h_j> = <f_{i+1}, h_{j+1}>`` for every valid pair?"""
    return circulant_test_matrix(dual_cross_gram(F), F.tol.zero_tol, F.cyclic)


def gram_circulant_test(F):
    """Same test on the plain Gram matrix ``<f_i, f_j>`` (unitary generators)."""
    V = F.vectors
    return circulant_test_matrix(V @ V.conj().T, F.tol.zero_tol, F.cyclic)


# ----------------------------------------------------------------------------
# generator construction


def _range_basis(A, tol):
    Uu, s, _ = np.linalg.svd(A, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return Uu[:, :0]
    r = int(np.sum(s > tol.rank_cutoff(A.shape, s[0])))
    return Uu[:, :r]


def build_generator(F):
    """Solve ``T f_n = f_{succ(n)}`` exactly, or raise NoExactSolution.

    Off the span of the source vectors T is the identity. In the cyclic model
    that complement is empty for a frame; in the windowed model it is the
    complement of span(f_0..f_{M-2}).
    """
    U = synthesis_matrix(F)
    d, M = U.shape
    if F.cyclic:
        A, B = U, np.roll(U, -1, axis=1)
    else:
        A, B = U[:, :-1], U[:, 1:]
    if A.shape[1] == 0:
        return GeneratorResult(np.eye(d, dtype=complex), 0.0, "identity (empty window)")

    scale = float(norms(F).max())
    try:
        X = solve_exact_or_reject(A.T, B.T, F.tol)
    except NoExactSolution:
        T_ls = B @ np.linalg.pinv(A)
        res = float(np.linalg.norm(T_ls @ A - B, axis=0).max())
        raise NoExactSolution(res) from None
    T = X.T
    Q = _range_basis(A, F.tol)
    extension = "none (sources span C^d)"
    if Q.shape[1] < d:
        T = T + (np.eye(d) - Q @ Q.conj().T)
        extension = f"identity on the {d - Q.shape[1]}-dimensional complement of the source span"
    res = float(np.linalg.norm(T @ A - B, axis=0).max())
    if res > F.tol.zero_tol * scale:
        raise NoExactSolution(res)

    s = np.linalg.svd(T, compute_uv=False)
    if s[-1] <= F.tol.zero_tol * s[0]:
        if F.cyclic:
            raise NumericalFailure("cyclic generator came out singular")
        raise SingularGenerator(f"windowed generator is singular (sigma_min/sigma_max = {s[-1] / s[0]:.3e})")
    return GeneratorResult(T, res, extension)


@dataclass(frozen=True)
class OrbitReport:
    frame: Frame
    is_frame: bool
    wrap_residual: float | None
    diagnostics: object | None


def orbit_vectors(T, f0, M):
    T = as_matrix(T, "T")
    f = np.asarray(f0, dtype=complex).ravel()
    if T.shape[0] != T.shape[1] or T.shape[0] != f.size:
        raise DimensionMismatch(f"T is {T.shape}, f0 has length {f.size}")
    out = np.empty((M, f.size), dtype=complex)
    cur = f
    for n in range(M):
        out[n] = cur
        cur = T @ cur
    return out, cur


def verify_orbit(T, f0, M, kind="cyclic", tol=DEFAULT_TOL):
    """The family ``{T^n f0}_{n<M}`` with diagnostics.

    In the cyclic model ``T^M f0`` must return to ``f0``; otherwise NotCyclic.
    Failing to be a frame is reported, not raised.
    """
    if M < 1:
        raise InvalidParams("M must be positive")
    V, after = orbit_vectors(T, f0, M)
    model = IndexModel(IndexKind(kind), M)
    wrap = None
    if model.cyclic:
        f = V[0]
        wrap = float(np.linalg.norm(after - f) / np.linalg.norm(f))
        if wrap > tol.zero_tol:
            raise NotCyclic(wrap)
    F = Frame(V, model, tol)
    ok = is_frame(F)
    return OrbitReport(F, ok, wrap, diagnostics(F) if ok else None)


def classify_operator(T, A, B, M, tol=DEFAULT_TOL, bound_tol=NORM_BOUND_TOL):
    """Structural flags and norm data of a frame generator.

    ``||T^n||`` is computed for ``1 <= n <= M``; for a cyclic generator this
    covers every integer power. The bound check is
    ``1 - bound_tol <= ||T^n|| <= sqrt(B/A) + bound_tol``.
    """
    T = as_matrix(T, "T")
    if T.shape[0] != T.shape[1]:
        raise DimensionMismatch("T must be square")
    s = np.linalg.svd(T, compute_uv=False)
    if s[-1] <= tol.zero_tol * s[0]:
        raise SingularOperator("generator is not invertible")
    I = np.eye(T.shape[0])
    TsT = T.conj().T @ T
    nT = float(s[0])
    unitary = opnorm(TsT - I) <= tol.zero_tol
    normal = opnorm(TsT - T @ T.conj().T) <= tol.zero_tol * nT * nT
    hermitian = opnorm(T - T.conj().T) <= tol.zero_tol * nT
    powers = []
    P = np.eye(T.shape[0], dtype=complex)
    for _ in range(M):
        P = P @ T
        powers.append(opnorm(P))
    ceiling = float(np.sqrt(B / A))
    return OperatorClass(
        invertible=True,
        unitary=bool(unitary),
        normal=bool(normal),
        hermitian=bool(hermitian),
        norm=nT,
        inverse_norm=float(1.0 / s[-1]),
        power_norms=tuple(powers),
        lower_bound_ok=bool(min(powers) >= 1 - bound_tol),
        upper_bound_ok=bool(max(powers) <= ceiling + bound_tol),
    )


def represent(F):
    """Run every criterion on the given ordering and assemble a verdict."""
    ks = kernel_shift_invariance(F)
    circ = circulant_cross_gram_test(F)
    criteria = {
        "kernel_shift": CriterionResult(ks.passed, ks.residual),
        "circulant_gram": CriterionResult(circ.passed, circ.residual),
    }
    T = cls = extension = None
    try:
        gen = build_generator(F)
    except NoExactSolution as exc:
        criteria["generator_exact"] = CriterionResult(False, exc.residual)
    except SingularGenerator:
        criteria["generator_exact"] = CriterionResult(False, 0.0)
        extension = "singular"
    else:
        criteria["generator_exact"] = CriterionResult(True, gen.residual)
        T, extension = gen.T, gen.extension
        A, B = frame_bounds(F)
        cls = classify_operator(T, A, B, F.size, F.tol)
    return RepresentabilityVerdict(
        model=F.index_model.kind.value,
        criteria=criteria,
        generator=T,
        generator_class=cls,
        violation=circ.violation,
        kernel_certificate=ks.certificate,
        extension=extension,
    )


# ----------------------------------------------------------------------------
# necessary conditions


def _bucket_sorted(values, q):
    keys = np.stack([np.round(values.real / q), np.round(values.imag / q)], axis=1)
    order = np.lexsort((keys[:, 1], keys[:, 0]))
    return values[order]


@dataclass(frozen=True)
class NecessaryConditions:
    ip_sets: tuple
    ip_invariant: bool
    ip_deviation: float
    diag_values: np.ndarray
    diag_constant: bool
    diag_deviation: float
    tight: bool
    norm_constant: bool | None
    onb_extremal: dict | None

    @property
    def passed(self):
        ok = self.ip_invariant and self.diag_constant
        if self.tight:
            ok = ok and self.norm_constant and self.onb_extremal["consistent"]
        return bool(ok)


def necessary_conditions(F):
    """Ordering-free conditions every orbit-representable frame satisfies.

    * the multiset ``{<f, h> : h in dual}`` is the same for every f;
    * ``<f, S^{-1} f>`` is constant;
    * if tight: the vectors have equal norms, and a vector of norm sqrt(B)
      forces the frame to be a multiple of an orthonormal basis.

    Passing the battery does not imply representability.
    """
    G = dual_cross_gram(F)
    scale = float(np.max(np.abs(G)))
    q = F.tol.zero_tol * scale
    rows = [_bucket_sorted(G[n], q) for n in range(F.size)]
    ip_dev = max(float(np.max(np.abs(r - rows[0]))) for r in rows)
    diag = np.diag(G).copy()
    diag_dev = float(np.max(np.abs(diag - diag[0])))

    A, B = frame_bounds(F)
    tight = bool(B - A <= F.tol.zero_tol * B)
    norm_constant = onb = None
    if tight:
        n = norms(F)
        norm_constant = bool(n.max() - n.min() <= F.tol.zero_tol * n.max())
        extremal = [int(k) for k in np.nonzero(n >= np.sqrt(B) * (1 - F.tol.zero_tol))[0]]
        if extremal:
            V = F.vectors
            Gr = V @ V.conj().T
            off = np.abs(Gr - np.diag(np.diag(Gr))).max() if F.size > 1 else 0.0
            is_onb_multiple = F.size == F.dim and off <= F.tol.zero_tol * B
            onb = {"applies": True, "extremal_indices": extremal, "consistent": bool(is_onb_multiple)}
        else:
            onb = {"applies": False, "extremal_indices": [], "consistent": True}

    return NecessaryConditions(
        ip_sets=tuple(rows),
        ip_invariant=ip_dev <= 10 * q,
        ip_deviation=ip_dev,
        diag_values=diag,
        diag_constant=diag_dev <= q,
        diag_deviation=diag_dev,
        tight=tight,
        norm_constant=norm_constant,
        onb_extremal=onb,
    )


# ----------------------------------------------------------------------------
# orthogonality components and the block-system obstruction


@dataclass(frozen=True)
class Obstruction:
    verdict: str  # "Fires" | "Inconclusive"
    reason: str

    @property
    def fires(self):
        return self.verdict == "Fires"


@dataclass(frozen=True)
class DecompositionReport:
    components: tuple
    sizes: tuple
    model: str
    obstruction: Obstruction | None = field(default=None)


def orthogonality_graph(F):
    """Adjacency ``|<f_i, S^{-1} f_j>| > zero_tol * max|G|`` (diagonal included)."""
    G = dual_cross_gram(F)
    A = np.abs(G)
    return A > F.tol.zero_tol * A.max()


def orthogonality_components(F):
    """Connected components of the orthogonality graph, largest first."""
    adj = orthogonality_graph(F)
    _, labels = connected_components(adj.astype(np.int8), directed=False)
    groups = {}
    for n, lab in enumerate(labels):
        groups.setdefault(int(lab), []).append(n)
    comps = sorted((tuple(g) for g in groups.values()), key=lambda c: (-len(c), c[0]))
    report = DecompositionReport(
        components=tuple(comps),
        sizes=tuple(len(c) for c in comps),
        model=F.index_model.kind.value,
    )
    if F.cyclic:
        report = DecompositionReport(
            report.components, report.sizes, report.model,
            imprimitivity_obstruction(report, F.index_model),
        )
    return report


def imprimitivity_obstruction(report, model):
    """Rule out every cyclic ordering from the component sizes alone.

    If some ordering made the dual cross-Gram circulant, the successor map
    would be a graph automorphism acting transitively on the indices, so it
    would permute the components and they would all have the same size.
    Equal sizes prove nothing: finite unions of orthogonal blocks can be
    orbits.
    """
    if isinstance(model, IndexModel):
        cyclic, M = model.cyclic, model.size
    else:
        cyclic, M = IndexKind(model) is IndexKind.CYCLIC, sum(report.sizes)
    if not cyclic:
        raise WindowedModelUnsupported("the block-system obstruction needs the cyclic model")
    sizes = report.sizes
    if len(set(sizes)) > 1:
        return Obstruction("Fires", f"component sizes {list(sizes)} are not all equal")
    if M % len(sizes):
        return Obstruction("Fires", f"{len(sizes)} components do not divide M = {M}")
    if len(sizes) == 1:
        return Obstruction("Inconclusive", "single orthogonality component")
    return Obstruction(
        "Inconclusive",
        f"{len(sizes)} components of equal size {sizes[0]}; a finite union can still be an orbit",
    )
