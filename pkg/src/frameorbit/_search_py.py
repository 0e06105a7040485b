"""numpy fallback for the ordering-search kernels in ``_search_ext``.

Same signatures, same floating-point expression, same verdicts.
"""
from itertools import islice, permutations

import numpy as np

_CHUNK = 4096


def _passes_many(re, im, thresh2, perms):
    M = perms.shape[1]
    nxt = np.roll(np.arange(M), -1)
    a = perms[:, :, None]
    b = perms[:, None, :]
    a1 = perms[:, nxt][:, :, None]
    b1 = perms[:, nxt][:, None, :]
    dr = re[a, b] - re[a1, b1]
    di = im[a, b] - im[a1, b1]
    return ~np.any((dr * dr + di * di > thresh2).reshape(len(perms), -1), axis=1)


def exhaustive_block(re, im, thresh2, prefix, limit):
    re = np.ascontiguousarray(re, dtype=np.float64)
    im = np.ascontiguousarray(im, dtype=np.float64)
    M = re.shape[0]
    prefix = [int(x) for x in prefix]
    rest = sorted(set(range(M)) - set(prefix))
    tails = permutations(rest)
    tested = n_pass = 0
    found = []
    while True:
        chunk = list(islice(tails, _CHUNK))
        if not chunk:
            break
        perms = np.array([prefix + list(t) for t in chunk], dtype=np.int64).reshape(len(chunk), M)
        ok = _passes_many(re, im, thresh2, perms)
        tested += len(chunk)
        n_pass += int(ok.sum())
        if limit < 0 or len(found) < limit:
            hits = perms[ok].tolist()
            found.extend(hits if limit < 0 else hits[: limit - len(found)])
    return tested, n_pass, np.array(found, dtype=np.int64).reshape(len(found), M)


def test_batch(re, im, thresh2, perms):
    re = np.ascontiguousarray(re, dtype=np.float64)
    im = np.ascontiguousarray(im, dtype=np.float64)
    perms = np.asarray(perms, dtype=np.int64)
    out = np.zeros(len(perms), dtype=np.uint8)
    for s in range(0, len(perms), _CHUNK):
        out[s : s + _CHUNK] = _passes_many(re, im, thresh2, perms[s : s + _CHUNK])
    return out
