import os
import random
import subprocess
import sys

import numpy as np
import pytest

from ksnake import _kernels
from ksnake.perms import apply_transition, inversions, kendall_distance


def _random_rows(rng, m, w):
    return np.array([rng.sample(range(1, w + 1), w) for _ in range(m)], dtype=np.int64)


def test_walk_matches_reference():
    rng = random.Random(3)
    start = tuple(rng.sample(range(1, 8), 7))
    ts = [rng.randint(2, 7) for _ in range(50)]
    rows, closing = _kernels.walk_codewords(start, ts)
    cur = start
    for k, t in enumerate(ts):
        assert tuple(rows[k]) == cur
        cur = apply_transition(cur, t)
    assert tuple(closing) == cur


def test_inversion_counts_match_reference():
    rng = random.Random(5)
    rows = _random_rows(rng, 80, 9)
    counts = _kernels.inversion_counts(rows)
    assert [inversions(tuple(r)) for r in rows] == list(counts)


def test_pairwise_min_matches_reference():
    rng = random.Random(9)
    rows = _random_rows(rng, 40, 6)
    d, i, j = _kernels.pairwise_min_kendall(rows)
    ref = min(
        kendall_distance(tuple(rows[a]), tuple(rows[b]))
        for a in range(len(rows))
        for b in range(a + 1, len(rows))
    )
    assert d == ref
    assert kendall_distance(tuple(rows[i]), tuple(rows[j])) == d


def test_pairwise_degenerate():
    assert _kernels.pairwise_min_kendall(np.array([[1, 2, 3]]))[0] == -1


def test_numpy_fallbacks_agree():
    rng = random.Random(13)
    rows = _random_rows(rng, 60, 7)
    ts = [rng.randint(2, 7) for _ in range(80)]
    start = rows[0]

    jit_rows, jit_close = _kernels.walk_codewords(start, ts)
    np_rows, np_close = _kernels.walk_codewords_numpy(start, np.array(ts))
    assert (jit_rows == np_rows).all() and (jit_close == np_close).all()

    assert (
        _kernels.inversion_counts(rows) == _kernels.inversion_counts_numpy(rows)
    ).all()

    d1, i1, j1 = _kernels.pairwise_min_kendall(rows)
    d2, i2, j2 = _kernels.pairwise_min_kendall_numpy(rows)
    assert d1 == d2
    assert kendall_distance(tuple(rows[i2]), tuple(rows[j2])) == d2


@pytest.mark.skipif(_kernels.BACKEND != "numba", reason="numba unavailable")
def test_env_flag_selects_numpy_backend():
    code = "import ksnake._kernels as k; print(k.BACKEND)"
    env = dict(os.environ, KSNAKE_PURE_NUMPY="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "numpy"
