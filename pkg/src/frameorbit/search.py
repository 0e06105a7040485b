"""Search over cyclic orderings for one that makes a frame an operator orbit.

Index 0 is pinned (rotating a passing ordering gives another passing one),
so exhaustive mode enumerates ``(M-1)!`` orderings. Reversals are *not*
identified: a reversed orbit belongs to ``T^{-1}`` and is reported on its
own.

The per-ordering test runs in a compiled kernel when ``_search_ext`` is
built, otherwise in the numpy twin ``_search_py``. Set
``FRAMEORBIT_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _search_py
from .exceptions import InvalidParams, TooLarge, WindowedModelUnsupported
from .frames import dual_cross_gram

try:
    from . import _search_ext
except ImportError:  # pragma: no cover - depends on the build
    _search_ext = None

MAX_EXHAUSTIVE = 9
DEFAULT_LIMIT = 100

SOME = "SomeOrderingRepresentable"
NONE_EXHAUSTIVE = "NoOrderingRepresentable"
NONE_SAMPLED = "NoneFoundInSample"


def available_backends():
    return ["compiled", "python"] if _search_ext is not None else ["python"]


def default_backend():
    if _search_ext is None or os.environ.get("FRAMEORBIT_PURE_PYTHON") == "1":
        return "python"
    return "compiled"


def _kernels(backend):
    backend = backend or default_backend()
    if backend == "compiled":
        if _search_ext is None:
            raise InvalidParams("compiled search kernel is not built")
        return _search_ext
    if backend == "python":
        return _search_py
    raise InvalidParams(f"unknown backend {backend!r}")


@dataclass(frozen=True)
class OrderingSearchResult:
    mode: str
    tested: int
    passing: tuple
    n_passing: int
    verdict: str
    samples: int | None = None
    seed: int | None = None

    def to_dict(self):
        out = {"mode": self.mode}
        if self.mode == "random":
            out["samples"] = self.samples
            out["seed"] = self.seed
        out.update(
            tested=self.tested,
            passing=[list(p) for p in self.passing],
            verdict=self.verdict,
        )
        return out


def _split(G, zero_tol):
    re = np.ascontiguousarray(G.real, dtype=np.float64)
    im = np.ascontiguousarray(G.imag, dtype=np.float64)
    thresh = zero_tol * float(np.max(np.abs(G)))
    return re, im, thresh * thresh


def search_matrix(G, zero_tol, mode="exhaustive", limit=DEFAULT_LIMIT, seed=None,
                  samples=1000, workers=1, backend=None):
    """Ordering search on a precomputed cross-Gram matrix ``G``.

    Exhaustive work is split into blocks by the second entry of the ordering;
    blocks are merged in that order, so the result is the same for any
    ``workers`` count.
    """
    G = np.asarray(G, dtype=np.complex128)
    M = G.shape[0]
    if limit is None:
        limit = -1
    kern = _kernels(backend)
    re, im, thresh2 = _split(G, zero_tol)

    if mode == "exhaustive":
        if M > MAX_EXHAUSTIVE:
            raise TooLarge(
                f"exhaustive search is capped at M <= {MAX_EXHAUSTIVE} (got M = {M}); "
                "use random mode"
            )
        prefixes = [[0, v] for v in range(1, M)] if M >= 3 else [[0]]

        def run(prefix):
            return kern.exhaustive_block(re, im, thresh2, prefix, limit)

        if workers > 1 and len(prefixes) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                blocks = list(pool.map(run, prefixes))
        else:
            blocks = [run(p) for p in prefixes]
        tested = sum(b[0] for b in blocks)
        n_pass = sum(b[1] for b in blocks)
        passing = [tuple(int(x) for x in row) for b in blocks for row in b[2]]
        if limit >= 0:
            passing = passing[:limit]
        verdict = SOME if n_pass else NONE_EXHAUSTIVE
        return OrderingSearchResult("exhaustive", tested, tuple(passing), n_pass, verdict)

    if mode == "random":
        if seed is None:
            raise InvalidParams("random mode requires a seed")
        if samples < 1:
            raise InvalidParams("samples must be positive")
        rng = np.random.default_rng(seed)
        tails = rng.permuted(np.tile(np.arange(1, M, dtype=np.int64), (samples, 1)), axis=1)
        perms = np.ascontiguousarray(
            np.hstack([np.zeros((samples, 1), dtype=np.int64), tails])
        )
        ok = kern.test_batch(re, im, thresh2, perms).astype(bool)
        hits = sorted({tuple(int(x) for x in row) for row in perms[ok]})
        n_pass = len(hits)
        if limit >= 0:
            hits = hits[:limit]
        verdict = SOME if n_pass else NONE_SAMPLED
        return OrderingSearchResult("random", samples, tuple(hits), n_pass, verdict, samples, seed)

    raise InvalidParams(f"unknown search mode {mode!r}")


def ordering_search(F, mode="exhaustive", limit=DEFAULT_LIMIT, seed=None, samples=1000,
                    workers=1, backend=None):
    """Find cyclic orderings of ``F`` whose dual cross-Gram is circulant.

    The cross-Gram and dual are computed once; each candidate ordering only
    permutes indices. ``passing`` holds the lexicographically smallest
    ``limit`` hits. An exhaustive search with no hit proves that no ordering
    of ``F`` is an operator orbit.
    """
    if not F.cyclic:
        raise WindowedModelUnsupported("ordering search needs the cyclic model")
    if mode == "exhaustive" and F.size > MAX_EXHAUSTIVE:
        raise TooLarge(
            f"exhaustive search is capped at M <= {MAX_EXHAUSTIVE} (got M = {F.size}); "
            "use random mode"
        )
    return search_matrix(dual_cross_gram(F), F.tol.zero_tol, mode, limit, seed, samples,
                         workers, backend)
