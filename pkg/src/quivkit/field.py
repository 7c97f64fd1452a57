"""Exact base fields: the rationals (gmpy2 ``mpq``) and prime fields GF(p).

Matrices over Q are numpy object arrays of ``mpq``; matrices over GF(p) are
``int64`` arrays with entries in ``[0, p)``.  No floating point is used.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from gmpy2 import mpq, is_prime

from .errors import BadField

# p^2 must fit comfortably in int64 accumulations of long dot products.
MAX_PRIME = 46337


class Field:
    """Common interface of the two supported fields."""

    characteristic: int
    dtype: object

    def __call__(self, x):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        raise NotImplementedError

    # -- array helpers -------------------------------------------------
    def zeros(self, shape):
        raise NotImplementedError

    def eye(self, n):
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i] = self.one
        return a

    def array(self, data):
        raise NotImplementedError

    def matmul(self, a, b):
        raise NotImplementedError

    def is_zero_matrix(self, a) -> bool:
        return not np.any(a != 0)


class RationalField(Field):
    characteristic = 0
    dtype = object
    zero = mpq(0)
    one = mpq(1)

    def key(self):
        return "Q"

    def __repr__(self):
        return "QQ"

    def __call__(self, x):
        if isinstance(x, str):
            return mpq(x.strip())
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        return mpq(x)

    def inv(self, x):
        return 1 / x

    def zeros(self, shape):
        return np.full(shape, self.zero, dtype=object)

    def array(self, data):
        arr = np.array(data, dtype=object)
        flat = arr.reshape(-1)
        for i, v in enumerate(flat):
            flat[i] = self(v)
        return arr

    def matmul(self, a, b):
        if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
            return self.zeros((a.shape[0], b.shape[1]))
        return a @ b

    def normalize(self, a):
        return a

    def to_json(self, x):
        return str(x)

    def tag(self):
        return "Q"

    def random(self, rng, bound=3):
        return mpq(int(rng.integers(-bound, bound + 1)))


class PrimeField(Field):
    dtype = np.int64

    def __init__(self, p: int):
        if p > MAX_PRIME or not is_prime(p):
            raise BadField(f"GF({p}) unsupported: need a prime below {MAX_PRIME + 1}")
        self.characteristic = int(p)
        self.p = int(p)
        self.zero = 0
        self.one = 1

    def key(self):
        return ("GF", self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, (Fraction, type(mpq(0)))):
            num, den = int(x.numerator), int(x.denominator)
            if den % self.p == 0:
                raise BadField(f"{x} is not defined in GF({self.p})")
            return num * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        return pow(int(x), -1, self.p)

    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def array(self, data):
        arr = np.array(data, dtype=object)
        out = np.zeros(arr.shape, dtype=np.int64)
        flat_in, flat_out = arr.reshape(-1), out.reshape(-1)
        for i, v in enumerate(flat_in):
            flat_out[i] = self(v)
        return out

    def matmul(self, a, b):
        if a.shape[1] == 0:
            return self.zeros((a.shape[0], b.shape[1]))
        return (a @ b) % self.p

    def normalize(self, a):
        return a % self.p

    def to_json(self, x):
        return int(x)

    def tag(self):
        return {"GF": self.p}

    def random(self, rng, bound=3):
        return int(rng.integers(-bound, bound + 1)) % self.p


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(tag) -> Field:
    if tag in (None, "Q", "QQ"):
        return QQ
    if isinstance(tag, dict) and "GF" in tag:
        return GF(int(tag["GF"]))
    raise BadField(f"unknown field tag {tag!r}")
