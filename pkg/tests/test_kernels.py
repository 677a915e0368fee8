import os
import subprocess
import sys

import numpy as np
import pytest

from trihopf import _kernels as K


@pytest.mark.skipif(not K.HAS_NUMBA, reason="numba unavailable")
def test_numba_and_numpy_paths_agree():
    rng = np.random.default_rng(5)
    for k in range(0, 9):
        for l in range(0, 9):
            assert np.array_equal(K.box_partition_counts_nb(k, l), K.box_partition_counts_np(k, l))
    for _ in range(200):
        n = int(rng.integers(1, 15))
        perm = rng.permutation(n) + 1
        w = rng.integers(0, 6, size=n)
        assert K.weighted_inversions_nb(perm.astype(np.int64), w.astype(np.int64)) == K.weighted_inversions_np(perm, w)
        g = rng.integers(0, 5, size=(int(rng.integers(1, 6)), int(rng.integers(1, 6)))).astype(np.int64)
        assert K.shift_dimension_nb(g) == K.shift_dimension_np(g)
        assert tuple(K.unipotent_dims_nb(g)) == K.unipotent_dims_np(g)


def test_env_flag_selects_numpy_path():
    env = dict(os.environ, TRIHOPF_DISABLE_NUMBA="1")
    code = ("from trihopf import _kernels as K, qcomb;"
            "print(K.BACKEND, qcomb.box_partitions(3, 3).values == qcomb.betti(3, 3).values)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "True"]


def test_large_box_fits_int64():
    counts = K.box_partition_counts(20, 20)
    assert counts.sum() == 137846528820  # C(40, 20)
