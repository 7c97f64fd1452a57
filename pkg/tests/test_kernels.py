import os
import subprocess
import sys

import numpy as np
import pytest

from quivkit import kernels
from quivkit import linalg as la
from quivkit.field import GF


@pytest.mark.parametrize("shape", [(1, 1), (5, 8), (12, 7), (30, 30)])
@pytest.mark.parametrize("p", [2, 3, 101])
def test_numpy_kernel_properties(shape, p):
    rng = np.random.default_rng(shape[0] * 1000 + p)
    a = rng.integers(0, p, size=shape, dtype=np.int64)
    r, piv = kernels.rref_mod_numpy(a.copy(), p)
    assert la.rank(GF(p).array(a), GF(p)) == len(piv)
    for i, c in enumerate(piv):
        assert r[i, c] == 1
        assert np.count_nonzero(r[:, c]) == 1
    assert not r[len(piv):].any()


@pytest.mark.skipif(kernels.rref_mod_numba is None, reason="numba unavailable or disabled")
@pytest.mark.parametrize("seed", range(6))
def test_numba_matches_numpy(seed):
    rng = np.random.default_rng(seed)
    p = int(rng.choice([2, 5, 7, 65521]))
    a = rng.integers(0, p, size=(int(rng.integers(1, 40)), int(rng.integers(1, 40))), dtype=np.int64)
    r1, piv1 = kernels.rref_mod_numpy(a.copy(), p)
    r2, piv2 = kernels.rref_mod_numba(a.copy(), np.int64(p))
    assert np.array_equal(r1, r2) and np.array_equal(piv1, piv2)


def test_env_flag_selects_numpy():
    env = dict(os.environ, QUIVKIT_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from quivkit import kernels; print(kernels.backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
