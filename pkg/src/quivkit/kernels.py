"""Dense GF(p) elimination kernels.

Two interchangeable implementations are provided: a numba ``@njit`` kernel
and a vectorised numpy kernel.  Set ``QUIVKIT_NO_NUMBA=1`` to force the numpy
path (numba is also skipped automatically when it cannot be imported).
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("QUIVKIT_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("numba disabled by QUIVKIT_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env flag
    HAVE_NUMBA = False


def _inv_mod(a, p):
    # Fermat inverse; loops keep it numba-compatible.
    result = 1
    base = a % p
    e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rref_mod_numpy(a: np.ndarray, p: int):
    """Row-reduce ``a`` over GF(p); returns (R, pivot column array)."""
    r = np.array(a, dtype=np.int64) % p
    nrows, ncols = r.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        k = row + nz[0]
        if k != row:
            r[[row, k]] = r[[k, row]]
        r[row] = (r[row] * pow(int(r[row, col]), -1, p)) % p
        factors = r[:, col].copy()
        factors[row] = 0
        mask = factors != 0
        if mask.any():
            r[mask] = (r[mask] - np.outer(factors[mask], r[row])) % p
        pivots.append(col)
        row += 1
    return r, np.array(pivots, dtype=np.int64)


def _rref_mod_loops(a, p):
    r = a.copy()
    nrows, ncols = r.shape
    for i in range(nrows):
        for j in range(ncols):
            r[i, j] = r[i, j] % p
    pivots = np.empty(min(nrows, ncols), dtype=np.int64)
    npiv = 0
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        k = -1
        for i in range(row, nrows):
            if r[i, col] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != row:
            for j in range(ncols):
                t = r[row, j]
                r[row, j] = r[k, j]
                r[k, j] = t
        inv = _inv_mod(r[row, col], p)
        for j in range(col, ncols):
            r[row, j] = (r[row, j] * inv) % p
        for i in range(nrows):
            if i != row:
                f = r[i, col]
                if f != 0:
                    for j in range(col, ncols):
                        r[i, j] = (r[i, j] - f * r[row, j]) % p
        pivots[npiv] = col
        npiv += 1
        row += 1
    return r, pivots[:npiv]


def _matmul_mod_loops(a, b, p):
    n, k = a.shape
    m = b.shape[1]
    out = np.zeros((n, m), dtype=np.int64)
    for i in range(n):
        for t in range(k):
            av = a[i, t]
            if av != 0:
                for j in range(m):
                    out[i, j] = (out[i, j] + av * b[t, j]) % p
    return out


if HAVE_NUMBA:
    _inv_mod = njit(cache=True)(_inv_mod)
    rref_mod_numba = njit(cache=True)(_rref_mod_loops)
    matmul_mod_numba = njit(cache=True)(_matmul_mod_loops)
else:
    rref_mod_numba = None
    matmul_mod_numba = None


def rref_mod(a: np.ndarray, p: int):
    """Dispatch to the numba kernel when available, else numpy."""
    a = np.ascontiguousarray(a, dtype=np.int64)
    if HAVE_NUMBA and a.size:
        r, piv = rref_mod_numba(a, np.int64(p))
        return r, piv
    return rref_mod_numpy(a, p)


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
