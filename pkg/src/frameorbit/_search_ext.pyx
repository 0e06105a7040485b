# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled ordering-search kernels.

A candidate ordering ``p`` passes when the permuted matrix
``G[p][:, p]`` is circulant, i.e. for all (i, j)

    |G[p[i], p[j]] - G[p[i+1], p[j+1]]|^2 <= thresh2     (indices mod M)

The pure-Python twin lives in ``_search_py``; both evaluate the same
floating-point expression so their verdicts are bit-identical.
"""
import numpy as np

from libc.stdlib cimport malloc, free


cdef inline bint _passes(const double[:, ::1] re, const double[:, ::1] im,
                         const Py_ssize_t* p, const Py_ssize_t* nxt,
                         Py_ssize_t M, double thresh2) noexcept nogil:
    cdef Py_ssize_t i, j, a, a1, b, b1
    cdef double dr, di
    for i in range(M):
        a = p[i]
        a1 = p[nxt[i]]
        for j in range(M):
            b = p[j]
            b1 = p[nxt[j]]
            dr = re[a, b] - re[a1, b1]
            di = im[a, b] - im[a1, b1]
            if dr * dr + di * di > thresh2:
                return False
    return True


cdef inline bint _next_permutation(Py_ssize_t* p, Py_ssize_t lo, Py_ssize_t n) noexcept nogil:
    # lexicographic successor of p[lo:n]; False once the last one was reached
    cdef Py_ssize_t i = n - 2, j, t
    while i >= lo and p[i] >= p[i + 1]:
        i -= 1
    if i < lo:
        return False
    j = n - 1
    while p[j] <= p[i]:
        j -= 1
    t = p[i]; p[i] = p[j]; p[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = p[i]; p[i] = p[j]; p[j] = t
        i += 1
        j -= 1
    return True


def exhaustive_block(const double[:, ::1] re, const double[:, ::1] im,
                     double thresh2, prefix, Py_ssize_t limit):
    """Test every ordering that starts with ``prefix``, in lexicographic order.

    Returns ``(tested, n_passing, passing)`` where ``passing`` is an int64
    array holding the first ``limit`` passing orderings (all of them when
    ``limit < 0``).
    """
    cdef Py_ssize_t M = re.shape[0]
    cdef Py_ssize_t k = len(prefix)
    cdef Py_ssize_t i, tested = 0, n_pass = 0
    cdef Py_ssize_t* p = <Py_ssize_t*> malloc(M * sizeof(Py_ssize_t))
    cdef Py_ssize_t* nxt = <Py_ssize_t*> malloc(M * sizeof(Py_ssize_t))
    cdef bint hit
    cdef list found = []
    if p == NULL or nxt == NULL:
        free(p); free(nxt)
        raise MemoryError()
    try:
        used = set(int(x) for x in prefix)
        rest = sorted(set(range(M)) - used)
        for i, x in enumerate(list(prefix) + rest):
            p[i] = x
        for i in range(M):
            nxt[i] = (i + 1) % M
        while True:
            with nogil:
                hit = False
                while True:
                    tested += 1
                    if _passes(re, im, p, nxt, M, thresh2):
                        hit = True
                        break
                    if not _next_permutation(p, k, M):
                        break
            if not hit:
                break
            n_pass += 1
            if limit < 0 or len(found) < limit:
                found.append([p[i] for i in range(M)])
            if not _next_permutation(p, k, M):
                break
    finally:
        free(p)
        free(nxt)
    out = np.array(found, dtype=np.int64).reshape(len(found), M)
    return tested, n_pass, out


def test_batch(const double[:, ::1] re, const double[:, ::1] im,
               double thresh2, const long long[:, ::1] perms):
    """Pass/fail (uint8) for each row of ``perms``."""
    cdef Py_ssize_t n = perms.shape[0], M = perms.shape[1]
    cdef Py_ssize_t r, i
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] res = out
    cdef Py_ssize_t* p = <Py_ssize_t*> malloc(M * sizeof(Py_ssize_t))
    cdef Py_ssize_t* nxt = <Py_ssize_t*> malloc(M * sizeof(Py_ssize_t))
    if p == NULL or nxt == NULL:
        free(p); free(nxt)
        raise MemoryError()
    try:
        for i in range(M):
            nxt[i] = (i + 1) % M
        with nogil:
            for r in range(n):
                for i in range(M):
                    p[i] = <Py_ssize_t> perms[r, i]
                res[r] = _passes(re, im, p, nxt, M, thresh2)
    finally:
        free(p)
        free(nxt)
    return out
