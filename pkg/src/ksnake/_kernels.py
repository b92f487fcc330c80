"""Hot numeric kernels: jitted with numba, with pure-numpy fallbacks.

The jitted path is used whenever numba imports cleanly.  Set
``KSNAKE_PURE_NUMPY=1`` in the environment to force the numpy fallbacks
(identical results, slower).  ``BACKEND`` records which path is active.

Kernels:
  - walk_codewords: materialize a transition sequence into codeword rows.
  - inversion_counts: inversion count per row (parity checks in bulk).
  - pairwise_min_kendall: minimum Kendall tau distance over all row pairs,
    with a witness pair.  This is the O(M^2 n^2) loop that dominates
    full-distance verification.
"""

from __future__ import annotations

import os

import numpy as np

_FORCE_NUMPY = os.environ.get("KSNAKE_PURE_NUMPY", "") not in ("", "0")

if not _FORCE_NUMPY:
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - depends on environment
        _HAVE_NUMBA = False
else:
    _HAVE_NUMBA = False

BACKEND = "numba" if _HAVE_NUMBA else "numpy"


# -- pure-numpy implementations ------------------------------------------------


def walk_codewords_numpy(start: np.ndarray, transitions: np.ndarray):
    """Apply a push-to-the-top sequence; returns (codewords, closing row).

    codewords[k] is the state before transitions[k]; the closing row is the
    state after the whole sequence (equal to start iff the walk is cyclic).
    """
    cur = list(int(v) for v in start)
    w = len(cur)
    out = np.empty((len(transitions), w), dtype=np.int64)
    for k, i in enumerate(transitions):
        out[k] = cur
        i = int(i)
        cur[:i] = [cur[i - 1]] + cur[: i - 1]
    return out, np.asarray(cur, dtype=np.int64)


def inversion_counts_numpy(perms: np.ndarray) -> np.ndarray:
    m, w = perms.shape
    out = np.zeros(m, dtype=np.int64)
    for a in range(w):
        for b in range(a + 1, w):
            out += perms[:, a] > perms[:, b]
    return out


def pairwise_min_kendall_numpy(perms: np.ndarray):
    """Minimum Kendall distance over all unordered row pairs, with witness.

    Vectorized per anchor row: every later row is read through the anchor's
    value positions and its inversions counted column-pair by column-pair.
    """
    m, w = perms.shape
    if m < 2:
        return -1, -1, -1
    pos = np.argsort(perms, axis=1)  # pos[r, v-1] = 0-based position of value v
    best = np.iinfo(np.int64).max
    bi = bj = -1
    col_pairs = [(a, b) for a in range(w) for b in range(a + 1, w)]
    for i in range(m - 1):
        rel = pos[i + 1 :][:, perms[i] - 1]
        d = np.zeros(m - 1 - i, dtype=np.int64)
        for a, b in col_pairs:
            d += rel[:, a] > rel[:, b]
        j = int(np.argmin(d))
        if d[j] < best:
            best = int(d[j])
            bi, bj = i, i + 1 + j
    return best, bi, bj


# -- numba implementations -----------------------------------------------------

if _HAVE_NUMBA:

    @njit(cache=True)
    def _walk_codewords_jit(start, transitions):
        L = transitions.shape[0]
        w = start.shape[0]
        out = np.empty((L, w), dtype=np.int64)
        cur = start.copy()
        for k in range(L):
            for c in range(w):
                out[k, c] = cur[c]
            i = transitions[k]
            v = cur[i - 1]
            for j in range(i - 1, 0, -1):
                cur[j] = cur[j - 1]
            cur[0] = v
        return out, cur

    @njit(cache=True)
    def _inversion_counts_jit(perms):
        m, w = perms.shape
        out = np.empty(m, dtype=np.int64)
        for r in range(m):
            c = 0
            for a in range(w):
                for b in range(a + 1, w):
                    if perms[r, a] > perms[r, b]:
                        c += 1
            out[r] = c
        return out

    @njit(cache=True)
    def _pairwise_min_kendall_jit(perms):
        m, w = perms.shape
        if m < 2:
            return -1, -1, -1
        pos = np.empty((m, w + 1), dtype=np.int64)
        for r in range(m):
            for p in range(w):
                pos[r, perms[r, p]] = p
        best = np.int64(1) << 62
        bi = -1
        bj = -1
        for i in range(m - 1):
            for j in range(i + 1, m):
                d = 0
                for a in range(w):
                    va = pos[j, perms[i, a]]
                    for b in range(a + 1, w):
                        if va > pos[j, perms[i, b]]:
                            d += 1
                if d < best:
                    best = d
                    bi = i
                    bj = j
        return int(best), bi, bj


# -- dispatch ------------------------------------------------------------------


def _as_array(perms) -> np.ndarray:
    a = np.asarray(perms, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array of permutation rows")
    return a


def walk_codewords(start, transitions):
    s = np.asarray(start, dtype=np.int64)
    t = np.asarray(transitions, dtype=np.int64)
    if _HAVE_NUMBA:
        return _walk_codewords_jit(s, t)
    return walk_codewords_numpy(s, t)


def inversion_counts(perms) -> np.ndarray:
    a = _as_array(perms)
    if _HAVE_NUMBA:
        return _inversion_counts_jit(a)
    return inversion_counts_numpy(a)


def pairwise_min_kendall(perms):
    """Return (min distance, i, j) over all row pairs; (-1, -1, -1) if m < 2."""
    a = _as_array(perms)
    if _HAVE_NUMBA:
        return _pairwise_min_kendall_jit(a)
    return pairwise_min_kendall_numpy(a)


def warmup():
    """Trigger JIT compilation on tiny inputs so later timings are pure work."""
    demo = np.array([[1, 2, 3], [2, 3, 1]], dtype=np.int64)
    walk_codewords(np.array([1, 2, 3]), np.array([2, 2]))
    inversion_counts(demo)
    pairwise_min_kendall(demo)
