"""Exact linear algebra over Q and GF(p).

Sparse work (hom systems, ideal closures, path kernels) goes through
:class:`EchelonBasis`, an incrementally maintained reduced row echelon basis of
``dict`` rows.  Dense helpers accept numpy arrays in the field's dtype; over
GF(p) they call the compiled kernels in :mod:`quivkit.kernels`.
"""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from . import kernels
from .field import Field


class EchelonBasis:
    """Incremental RREF of sparse vectors ``{column: coefficient}``.

    Invariant: each stored row has coefficient 1 at its pivot (its smallest
    column) and no entries in any other pivot column.  With ``track=True`` every
    row also remembers the combination of inserted vectors it came from.
    """

    def __init__(self, field: Field, track: bool = False):
        self.field = field
        self.p = field.characteristic
        self.rows: dict = {}
        self.occ: dict = defaultdict(set)
        self.track = track
        self.combos: dict = {}

    def __len__(self):
        return len(self.rows)

    def _axpy(self, target: dict, f, src: dict, skip=None):
        # target -= f * src
        p = self.p
        for k, v in src.items():
            if k == skip:
                continue
            nv = target.get(k, 0) - f * v
            if p:
                nv %= p
            if nv:
                target[k] = nv
            else:
                target.pop(k, None)

    def reduce(self, vec: dict, combo: dict | None = None):
        res = {k: v for k, v in vec.items() if v}
        hits = [c for c in res if c in self.rows]
        for c in hits:
            f = res.pop(c, 0)
            if not f:
                continue
            self._axpy(res, f, self.rows[c], skip=c)
            if combo is not None:
                self._axpy(combo, f, self.combos[c])
        return res

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def add(self, vec: dict, tag=None):
        """Insert ``vec``; return its reduced residual's pivot or None if dependent.

        In tracking mode a dependent vector returns ``(None, combo)`` where
        ``vec = sum(combo[t] * inserted[t])``.
        """
        combo = {tag: 1} if self.track else None
        res = self.reduce(vec, combo)
        if not res:
            if self.track:
                return None, {k: -v for k, v in combo.items() if k != tag and v}
            return None
        piv = min(res)
        inv = self.field.inv(res[piv])
        if inv != 1:
            res = {k: self._norm(v * inv) for k, v in res.items()}
            if combo is not None:
                combo = {k: self._norm(v * inv) for k, v in combo.items()}
        for rc in list(self.occ.get(piv, ())):
            row = self.rows[rc]
            f = row.get(piv, 0)
            if not f:
                continue
            before = set(row)
            self._axpy(row, f, res)
            if combo is not None:
                self._axpy(self.combos[rc], f, combo)
            for k in before - set(row):
                self.occ[k].discard(rc)
            for k in set(row) - before:
                self.occ[k].add(rc)
        self.occ.pop(piv, None)
        self.rows[piv] = res
        for k in res:
            if k != piv:
                self.occ[k].add(piv)
        if combo is not None:
            self.combos[piv] = combo
        return (piv, None) if self.track else piv

    def _norm(self, v):
        return v % self.p if self.p else v

    def pivots(self):
        return sorted(self.rows)

    def dense(self, ncols: int):
        piv = self.pivots()
        out = self.field.zeros((len(piv), ncols))
        for i, c in enumerate(piv):
            for k, v in self.rows[c].items():
                out[i, k] = v
        return out


def to_sparse_rows(a: np.ndarray):
    rows = []
    for i in range(a.shape[0]):
        nz = np.nonzero(a[i] != 0)[0]
        rows.append({int(j): a[i, j] for j in nz})
    return rows


def rref(a: np.ndarray, field: Field):
    """Return (R, pivots) with R the nonzero rows of the reduced echelon form."""
    a = np.asarray(a)
    if field.characteristic:
        r, piv = kernels.rref_mod(a.astype(np.int64) if a.size else np.zeros(a.shape, np.int64), field.p)
        return r[: len(piv)].copy(), [int(c) for c in piv]
    eb = EchelonBasis(field)
    for row in to_sparse_rows(a):
        eb.add(row)
    return eb.dense(a.shape[1]), eb.pivots()


def rank(a: np.ndarray, field: Field) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, field)[1])


def kernel(a: np.ndarray, field: Field) -> np.ndarray:
    """Columns spanning {x : a x = 0}."""
    n = a.shape[1]
    if a.shape[0] == 0 or a.size == 0:
        return field.eye(n)
    r, piv = rref(a, field)
    free = [j for j in range(n) if j not in set(piv)]
    out = field.zeros((n, len(free)))
    for k, f in enumerate(free):
        out[f, k] = field.one
        for i, c in enumerate(piv):
            if r[i, f] != 0:
                out[c, k] = field.normalize(-r[i, f]) if field.characteristic else -r[i, f]
    return out


def image(a: np.ndarray, field: Field) -> np.ndarray:
    """Columns of ``a`` forming a basis of its column space."""
    if a.size == 0:
        return field.zeros((a.shape[0], 0))
    _, piv = rref(a, field)
    return a[:, piv]


def solve(a: np.ndarray, b: np.ndarray, field: Field):
    """A solution x of ``a x = b`` (b may be a matrix), or None."""
    m, n = a.shape
    if b.ndim == 1:
        b = b.reshape(-1, 1)
        squeeze = True
    else:
        squeeze = False
    k = b.shape[1]
    if m == 0:
        x = field.zeros((n, k))
        return x[:, 0] if squeeze else x
    aug = field.zeros((m, n + k))
    aug[:, :n] = a
    aug[:, n:] = b
    r, piv = rref(aug, field)
    if any(c >= n for c in piv):
        return None
    x = field.zeros((n, k))
    for i, c in enumerate(piv):
        x[c] = r[i, n:]
    return x[:, 0] if squeeze else x


def inverse(a: np.ndarray, field: Field):
    n = a.shape[0]
    if a.shape != (n, n):
        return None
    if n == 0:
        return field.zeros((0, 0))
    x = solve(a, field.eye(n), field)
    if x is None:
        return None
    if not np.array_equal(field.matmul(a, x), field.eye(n)):
        return None
    return x


def is_invertible(a: np.ndarray, field: Field) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, field) == a.shape[0]


def left_inverse(a: np.ndarray, field: Field):
    """x with x a = I for ``a`` of full column rank."""
    n = a.shape[1]
    xt = solve(a.T.copy(), field.eye(n), field)
    return None if xt is None else xt.T.copy()


def complement_columns(basis: np.ndarray, n: int, field: Field):
    """Quotient data for V/W with W spanned by the columns of ``basis``.

    Returns (proj, lift): ``proj`` maps V onto coordinates of V/W and ``lift``
    is the section sending those coordinates to standard basis vectors.
    """
    if basis.shape[1] == 0:
        return field.eye(n), field.eye(n)
    r, piv = rref(basis.T.copy(), field)
    free = [j for j in range(n) if j not in set(piv)]
    proj = field.zeros((len(free), n))
    lift = field.zeros((n, len(free)))
    pos = {c: i for i, c in enumerate(free)}
    for c, i in pos.items():
        proj[i, c] = field.one
        lift[c, i] = field.one
    for ri, c in enumerate(piv):
        for f in free:
            if r[ri, f] != 0:
                v = -r[ri, f]
                proj[pos[f], c] = field.normalize(v) if field.characteristic else v
    return proj, lift


def sparse_kernel(rows, ncols: int, field: Field) -> np.ndarray:
    """Columns spanning the solutions of a sparse homogeneous system."""
    eb = EchelonBasis(field)
    for row in rows:
        if row:
            eb.add(row)
    piv = set(eb.rows)
    free = [j for j in range(ncols) if j not in piv]
    out = field.zeros((ncols, len(free)))
    fpos = {f: k for k, f in enumerate(free)}
    for f, k in fpos.items():
        out[f, k] = field.one
    for c, row in eb.rows.items():
        for j, v in row.items():
            if j != c:
                out[c, fpos[j]] = field.normalize(-v) if field.characteristic else -v
    return out


def stack_columns(field: Field, nrows: int, mats) -> np.ndarray:
    mats = [m for m in mats if m.shape[1]]
    if not mats:
        return field.zeros((nrows, 0))
    return np.concatenate(mats, axis=1)
