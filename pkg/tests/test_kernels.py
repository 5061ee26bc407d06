"""Backend parity: the numba kernel and the numpy fallback must agree exactly."""

import numpy as np
from hypothesis import given, settings, strategies as st

from zqu import kernels
from zqu.metrics import weight_table
from zqu.ring import make_ring


def test_backend_selected():
    assert kernels.backend_name() in ("numba", "numpy")


@st.composite
def scan_instance(draw):
    p, s = draw(st.sampled_from([(2, 1), (2, 2), (3, 1), (2, 3)]))
    q = p**s
    n = draw(st.integers(1, 4))
    k = draw(st.integers(1, 4))
    rows = np.array(
        [[draw(st.integers(0, q - 1)) for _ in range(2 * n)] for _ in range(k)],
        dtype=np.int64,
    )
    ranges = np.array(
        [p ** draw(st.integers(1, s)) for _ in range(k)], dtype=np.int64
    )
    total = int(np.prod(ranges))
    start = draw(st.integers(1, total))
    stop = draw(st.integers(start, total))
    return p, s, q, n, rows, ranges, start, stop


@settings(max_examples=120, deadline=None)
@given(scan_instance())
def test_backends_agree(instance):
    p, s, q, n, rows, ranges, start, stop = instance
    params = make_ring(p, s)
    table = weight_table("hamming", params)
    res_numpy = kernels.min_weight_scan(rows, ranges, table, q, n, start, stop, backend="numpy")
    res_ref = _reference_scan(rows, ranges, table, q, n, start, stop)
    assert res_numpy == res_ref
    res_numba = kernels.min_weight_scan(rows, ranges, table, q, n, start, stop, backend="numba")
    assert res_numba == res_ref


def _reference_scan(rows, ranges, table, q, n, start, stop):
    best, best_idx = 1 << 62, -1
    for idx in range(start, stop):
        word = kernels.word_at_index(rows, ranges, q, idx)
        w = int(sum(table[int(word[j]) * q + int(word[n + j])] for j in range(n)))
        if w < best:
            best, best_idx = w, idx
    return best, best_idx, stop - start


def test_word_at_index_walks_mixed_radix():
    rows = np.array([[1, 0], [0, 1]], dtype=np.int64)
    ranges = np.array([2, 2], dtype=np.int64)
    words = [tuple(kernels.word_at_index(rows, ranges, 2, i)) for i in range(4)]
    assert words == [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_partitioned_scans_merge_to_full_scan():
    rng = np.random.default_rng(7)
    q, n, k = 4, 3, 4
    rows = rng.integers(0, q, size=(k, 2 * n)).astype(np.int64)
    ranges = np.array([4, 2, 4, 2], dtype=np.int64)
    table = weight_table("hamming", make_ring(2, 2))
    total = int(np.prod(ranges))
    full = kernels.min_weight_scan(rows, ranges, table, q, n, 1, total)
    mid = total // 2
    left = kernels.min_weight_scan(rows, ranges, table, q, n, 1, mid)
    right = kernels.min_weight_scan(rows, ranges, table, q, n, mid, total)
    assert min((left[0], left[1]), (right[0], right[1])) == (full[0], full[1])
    assert left[2] + right[2] == full[2]


def test_env_flag_rejects_unknown():
    import os
    import subprocess
    import sys

    env = dict(os.environ, ZQU_KERNELS="cuda")
    proc = subprocess.run(
        [sys.executable, "-c", "import zqu.kernels"], env=env, capture_output=True
    )
    assert proc.returncode != 0
    assert b"ZQU_KERNELS" in proc.stderr


def test_env_flag_numpy():
    import os
    import subprocess
    import sys

    env = dict(os.environ, ZQU_KERNELS="numpy")
    proc = subprocess.run(
        [sys.executable, "-c", "from zqu import kernels; print(kernels.backend_name())"],
        env=env,
        capture_output=True,
    )
    assert proc.stdout.strip() == b"numpy"
