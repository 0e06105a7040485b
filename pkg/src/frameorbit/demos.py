"""Named end-to-end scenarios with PASS/FAIL assertions.

Each demo returns a :class:`DemoReport`; ``format_report`` renders the
``PASS|FAIL <id> <detail>`` lines plus the ``OK n/m`` summary.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .frames import Frame, canonical_dual, canonical_tight, frame_bounds, cross_gram, diagnostics
from .linalg import opnorm
from .orbits import (
    build_generator,
    circulant_cross_gram_test,
    classify_operator,
    orthogonality_components,
    orthogonality_graph,
    represent,
    verify_orbit,
)
from .search import ordering_search
from .structured import (
    BandSpec,
    GaborParams,
    block_harmonic_frame,
    dyadic_band_frame,
    exponential_frame,
    gabor_dual_window,
    gabor_system,
    phase_orbit,
)

SEED = 20240601


@dataclass
class DemoReport:
    name: str
    summary: str
    lines: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def check(self, ident, ok, detail=""):
        self.lines.append((ident, bool(ok), detail))
        return ok

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.lines)

    def to_dict(self):
        return {
            "demo": self.name,
            "summary": self.summary,
            "assertions": [{"id": i, "pass": ok, "detail": d} for i, ok, d in self.lines],
            "passed": sum(ok for _, ok, _ in self.lines),
            "total": len(self.lines),
            "data": self.data,
        }


def format_report(report):
    out = [f"# {report.name}: {report.summary}"]
    for ident, ok, detail in report.lines:
        out.append(f"{'PASS' if ok else 'FAIL'} {ident} {detail}".rstrip())
    n = sum(ok for _, ok, _ in report.lines)
    out.append(f"OK {n}/{len(report.lines)}")
    return "\n".join(out) + "\n"


def _crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _random_unitary(rng, d):
    Q, R = np.linalg.qr(_crandn(rng, d, d))
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def riesz_always():
    rep = DemoReport("riesz-always", "a basis is an orbit in every cyclic ordering")
    rng = np.random.default_rng(SEED)
    for d in (2, 3, 4):
        F = Frame.from_vectors(_crandn(rng, d, d))
        res = ordering_search(F, limit=None)
        total = int(np.prod(range(1, d)))
        rep.check(f"basis-d{d}-all-orderings", res.tested == total and res.n_passing == total,
                  f"{res.n_passing}/{res.tested} orderings pass")
        gens_ok = True
        for perm in res.passing:
            T = build_generator(F.reorder(perm)).T
            gens_ok &= np.allclose(np.linalg.matrix_power(T, d), np.eye(d), atol=1e-8)
        rep.check(f"basis-d{d}-generator-period", gens_ok, f"T^{d} = I for every ordering")
    return rep


def tight_unitary():
    rep = DemoReport("tight-unitary", "tight orbits have unitary generators")
    rng = np.random.default_rng(SEED + 1)
    worst = 0.0
    n_tight = 0
    for trial in range(20):
        d = int(rng.integers(2, 5))
        M = int(rng.integers(d, 9))
        Q = _random_unitary(rng, d)
        ks = rng.choice(M, size=d, replace=False)
        T = Q @ np.diag(np.exp(2j * np.pi * ks / M)) @ Q.conj().T
        f0 = Q @ np.exp(2j * np.pi * rng.random(d)) / np.sqrt(d)
        F = verify_orbit(T, f0, M).frame
        if not diagnostics(F).is_tight:
            continue
        n_tight += 1
        Tg = build_generator(F).T
        worst = max(worst, opnorm(Tg.conj().T @ Tg - np.eye(d)))
    rep.check("tight-orbits-built", n_tight == 20, f"{n_tight} tight orbits")
    rep.check("generator-unitary", worst <= 1e-8, f"max ||T*T - I|| = {worst:.2e}")

    # the canonical tight frame of any orbit is again an orbit, of a unitary
    worst_t = 0.0
    for trial in range(20):
        d = int(rng.integers(2, 5))
        M = int(rng.integers(d, 9))
        V = _crandn(rng, d, d)
        ks = rng.choice(M, size=d, replace=False)
        T = V @ np.diag(np.exp(2j * np.pi * ks / M)) @ np.linalg.inv(V)
        F = verify_orbit(T, _crandn(rng, d), M).frame
        Tt = build_generator(canonical_tight(F)).T
        worst_t = max(worst_t, opnorm(Tt.conj().T @ Tt - np.eye(d)))
    rep.check("canonical-tight-unitary", worst_t <= 1e-8, f"max ||T*T - I|| = {worst_t:.2e}")
    rep.data = {"max_unitarity_defect": worst, "max_tight_unitarity_defect": worst_t}
    return rep


def swap_breaks():
    rep = DemoReport(
        "swap-breaks",
        "interchanging two elements from different orthonormal sub-bases breaks the orbit",
    )
    d, N = 2, 3
    F = exponential_frame(np.ones(d), N)
    rep.check("natural-order", represent(F).representable, "exponential frame d=2, N=3 is an orbit")
    bad = []
    swaps = 0
    for i, j in itertools.combinations(range(N * d), 2):
        if (i - j) % N == 0:
            continue
        perm = list(range(N * d))
        perm[i], perm[j] = j, i
        swaps += 1
        v = represent(F.reorder(perm))
        if v.representable or v.violation is None:
            bad.append((i, j))
    rep.check("cross-basis-swaps-fail", not bad, f"{swaps} swaps, {len(bad)} still representable")
    same = []
    for i, j in itertools.combinations(range(N * d), 2):
        if (i - j) % N:
            continue
        perm = list(range(N * d))
        perm[i], perm[j] = j, i
        same.append([i, j, represent(F.reorder(perm)).representable])
    rep.data = {"same_basis_swaps": same}
    return rep


def gabor_compact_support():
    rep = DemoReport(
        "gabor-compact-support",
        "a window supported in a length-a block splits the Gabor frame into translation classes",
    )
    d, a, b = 4, 2, 1
    g = np.array([1.0, 0.5 + 0.5j, 0, 0])
    p = GaborParams(d, a, b, g)
    F = gabor_system(p)
    h = gabor_dual_window(p)
    rep.check("dual-window-support", np.all(np.abs(h[2:]) <= 1e-12), "S^{-1} g vanishes off {0, 1}")
    G = cross_gram(F, canonical_dual(F))
    cls = [n // p.n_modulations for n in range(p.size)]
    off = max(abs(G[i, j]) for i in range(p.size) for j in range(p.size) if cls[i] != cls[j])
    rep.check("cross-class-orthogonal", off <= 1e-12, f"max |<g, h>| across classes = {off:.1e}")
    comps = orthogonality_components(F)
    expected = sorted(tuple(n for n in range(p.size) if cls[n] == c) for c in range(p.n_translations))
    rep.check("components-are-translation-classes", sorted(comps.components) == expected,
              f"components {list(comps.components)}")
    rep.check("obstruction-inconclusive", not comps.obstruction.fires,
              "equal-size finite blocks do not rule out an ordering")
    res = ordering_search(F, limit=None)
    adj = orthogonality_graph(F)
    blocks_ok = True
    for perm in res.passing:
        labels = [cls[x] for x in perm]
        k = len(comps.sizes)
        blocks_ok &= all(labels[n] == labels[n % k] for n in range(len(perm)))
        P = np.array(perm)
        A = adj[np.ix_(P, P)]
        blocks_ok &= np.array_equal(A, np.roll(A, (1, 1), axis=(0, 1)))
    rep.check("passing-orderings-respect-blocks", blocks_ok,
              f"{res.n_passing}/{res.tested} orderings pass; each permutes the classes cyclically")
    rep.data = {"search": res.to_dict(), "components": [list(c) for c in comps.components]}
    return rep


def finite_union_counterexample():
    rep = DemoReport(
        "finite-union-counterexample",
        "finitely many orthogonal blocks can still form a single orbit",
    )
    F, T = block_harmonic_frame(4, 2, 2)
    rep.check("explicit-orbit", np.abs(verify_orbit(T, F[0], F.size).frame.vectors - F.vectors).max() <= 1e-12,
              "T^n f_0 reproduces the frame")
    rep.check("unitary", opnorm(T.conj().T @ T - np.eye(4)) <= 1e-12, "generator is unitary")
    rep.check("period", np.abs(np.linalg.matrix_power(T, 8) - np.eye(4)).max() <= 1e-8, "T^8 = I")
    diag = diagnostics(F)
    rep.check("tight-overcomplete", diag.is_tight and diag.excess_kernel == 4,
              f"A = B = {diag.upper_bound:.6g}, excess {diag.excess_kernel}")
    rep.check("circulant", circulant_cross_gram_test(F).passed, "dual cross-Gram is circulant")
    comps = orthogonality_components(F)
    rep.check("two-components", comps.sizes == (4, 4), f"component sizes {list(comps.sizes)}")
    rep.check("obstruction-inconclusive", not comps.obstruction.fires, comps.obstruction.reason)
    return rep


def dyadic_obstruction():
    rep = DemoReport(
        "dyadic-obstruction",
        "unequal orthogonal blocks exclude every ordering",
    )
    spec = BandSpec((((0, 1), 2), ((2,), 2)))
    F = dyadic_band_frame(spec, 3)
    comps = orthogonality_components(F)
    rep.check("components", comps.sizes == (4, 2), f"component sizes {list(comps.sizes)}")
    rep.check("obstruction-fires", comps.obstruction.fires, comps.obstruction.reason)
    res = ordering_search(F, limit=None)
    rep.check("exhaustive-agrees", res.verdict == "NoOrderingRepresentable" and res.tested == 120,
              f"{res.tested} orderings tested, {res.n_passing} pass")
    rep.data = {"search": res.to_dict()}
    return rep


def phase_orbit_demo():
    rep = DemoReport(
        "phase-orbit",
        "translating both arguments multiplies frame/dual inner products by a fixed phase",
    )
    rng = np.random.default_rng(SEED + 2)
    d, a, b = 6, 2, 1
    p = GaborParams(d, a, b, _crandn(rng, d))
    worst = 0.0
    counts_ok = True
    rows = []
    for m in range(p.n_modulations):
        for n in range(p.n_translations):
            po = phase_orbit(p, m, n)
            if abs(po.base) <= 1e-9:
                continue
            worst = max(worst, po.max_error)
            counts_ok &= po.distinct == po.expected_distinct
            rows.append([m, n, po.distinct, po.expected_distinct])
    rep.check("phase-identity", worst <= 1e-8, f"max error {worst:.1e}")
    rep.check("distinct-values", counts_ok, "count equals d / gcd(d, m a b) for every (m, n)")
    rep.data = {"orbits": rows}
    return rep


DEMOS = {
    "riesz-always": riesz_always,
    "tight-unitary": tight_unitary,
    "swap-breaks": swap_breaks,
    "gabor-compact-support": gabor_compact_support,
    "finite-union-counterexample": finite_union_counterexample,
    "dyadic-obstruction": dyadic_obstruction,
    "phase-orbit": phase_orbit_demo,
}


def run_demo(name):
    return DEMOS[name]()
