"""Small finite fields GF(p^k) and dense linear algebra over them.

Elements are integers in [0, q) packing polynomial coefficients little-endian
in base p.  Multiplication runs through log/antilog tables; addition is
digitwise mod p (plain XOR in characteristic 2).  Vectorized variants cover
whole numpy arrays so exhaustive searches stay cheap.
"""

import json
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import DivisionByZero, UnsupportedField

_SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)
_MAX_ORDER = 65536

# moduli pinned for reproducibility of every example and file
_PINNED_MODULI = {
    (2, 2): 7,    # t^2 + t + 1
    (2, 3): 11,   # t^3 + t + 1
    (2, 4): 19,   # t^4 + t + 1
    (3, 2): 10,   # t^2 + 1
}

_MUL_TABLE_MAX_ORDER = 256


def _digits(x: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(x % p)
        x //= p
    return out


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            f = (c * inv_lead) % p
            for j, mj in enumerate(mod):
                a[i - dm + j] = (a[i - dm + j] - f * mj) % p
    return a[:dm]


def _is_irreducible(poly: list[int], p: int) -> bool:
    deg = len(poly) - 1
    if deg == 1:
        return True
    for ddeg in range(1, deg // 2 + 1):
        for c in range(p ** ddeg, 2 * p ** ddeg):
            div = _digits(c, p, ddeg + 1)
            if any(_poly_rem(poly, div, p)):
                continue
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """GF(p^k) with a fixed irreducible modulus and precomputed tables."""

    def __init__(self, p: int, k: int):
        if p not in _SUPPORTED_PRIMES:
            raise UnsupportedField(f"characteristic {p} not supported")
        if not 1 <= k <= 4 or p ** k > _MAX_ORDER:
            raise UnsupportedField(f"extension degree {k} not supported for p={p}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = self._find_modulus()
        self._mod_coeffs = _digits(self.modulus, p, k + 1)
        self._build_tables()

    def _find_modulus(self) -> int:
        pinned = _PINNED_MODULI.get((self.p, self.k))
        if pinned is not None:
            return pinned
        for c in range(self.q, 2 * self.q):
            if _is_irreducible(_digits(c, self.p, self.k + 1), self.p):
                return c
        raise UnsupportedField(
            f"no irreducible modulus found for GF({self.p}^{self.k})"
        )

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _poly_mul(_digits(a, self.p, self.k), _digits(b, self.p, self.k),
                         self.p)
        rem = _poly_rem(prod, self._mod_coeffs, self.p)
        out = 0
        for c in reversed(rem):
            out = out * self.p + c
        return out

    def _pow_slow(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self._mul_slow(out, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return out

    def _build_tables(self) -> None:
        q = self.q
        factors = _prime_factors(q - 1) if q > 2 else []
        gen = None
        for cand in range(1, q):
            if q == 2 or all(self._pow_slow(cand, (q - 1) // f) != 1
                             for f in factors):
                gen = cand
                break
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._mul_slow(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self.generator = gen
        self._exp = exp
        self._log = log
        self._np_exp = np.array(exp + exp, dtype=np.int32)
        self._np_log = np.array(log, dtype=np.int64)
        self._mul_table = None
        if q <= _MUL_TABLE_MAX_ORDER:
            table = np.zeros((q, q), dtype=np.int32)
            logs = self._np_log
            nz = np.arange(1, q)
            table[1:, 1:] = self._np_exp[logs[nz][:, None] + logs[nz][None, :]]
            self._mul_table = table

    # -- scalar arithmetic ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        out, mul = 0, 1
        for _ in range(self.k):
            out += ((a + b) % self.p) * mul
            a //= self.p
            b //= self.p
            mul *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.k == 1:
            return (-a) % self.p
        out, mul = 0, 1
        for _ in range(self.k):
            out += ((-a) % self.p) * mul
            a //= self.p
            mul *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    # -- vectorized arithmetic ------------------------------------------

    def add_arrays(self, x, y):
        """Elementwise field addition with numpy broadcasting."""
        x = np.asarray(x, dtype=np.int32)
        y = np.asarray(y, dtype=np.int32)
        if self.p == 2:
            return np.bitwise_xor(x, y)
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.int32)
        mul = 1
        for _ in range(self.k):
            out += ((x + y) % self.p) * mul
            x = x // self.p
            y = y // self.p
            mul *= self.p
        return out

    def neg_arrays(self, x):
        x = np.asarray(x, dtype=np.int32)
        if self.p == 2:
            return x.copy()
        out = np.zeros_like(x)
        mul = 1
        for _ in range(self.k):
            out += ((-x) % self.p) * mul
            x = x // self.p
            mul *= self.p
        return out

    def mul_arrays(self, x, y):
        """Elementwise field multiplication with numpy broadcasting."""
        x = np.asarray(x, dtype=np.int32)
        y = np.asarray(y, dtype=np.int32)
        if self._mul_table is not None:
            return self._mul_table[x, y]
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.int32)
        nz = (x != 0) & (y != 0)
        xs, ys = np.broadcast_arrays(x, y)
        out[nz] = self._np_exp[self._np_log[xs[nz]] + self._np_log[ys[nz]]]
        return out

    def scale_array(self, lam: int, x):
        """lam times each entry of x."""
        x = np.asarray(x, dtype=np.int32)
        if lam == 0:
            return np.zeros_like(x)
        if lam == 1:
            return x.copy()
        if self._mul_table is not None:
            return self._mul_table[lam][x]
        return self.mul_arrays(np.int32(lam), x)

    def sum_field(self, x, axis=None):
        """Field sum of an array along an axis."""
        x = np.asarray(x, dtype=np.int32)
        if self.p == 2:
            return np.bitwise_xor.reduce(x, axis=axis)
        out = None
        mul = 1
        v = x
        for _ in range(self.k):
            plane = (v % self.p).sum(axis=axis) % self.p
            term = plane * mul
            out = term if out is None else out + term
            v = v // self.p
            mul *= self.p
        return out

    def dot(self, u, v) -> int:
        """Field inner product of two equal-length vectors."""
        return int(self.sum_field(self.mul_arrays(u, v)))

    def star(self, u, v):
        """Componentwise product of two vectors."""
        return self.mul_arrays(u, v)

    def matmul(self, a, b):
        """Field matrix product of 2-D arrays (r x k) @ (k x n)."""
        a = np.asarray(a, dtype=np.int32)
        b = np.asarray(b, dtype=np.int32)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int32)
        for j in range(a.shape[1]):
            col = a[:, j]
            if not col.any():
                continue
            out = self.add_arrays(out, self.mul_arrays(col[:, None], b[j][None, :]))
        return out

    # -- plumbing -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k})"


@lru_cache(maxsize=None)
def field(p: int, k: int) -> FiniteField:
    """Cached field factory; the canonical way to obtain a field."""
    return FiniteField(p, k)


class FieldMatrix:
    """Dense matrix over a finite field; value-semantic and never mutated."""

    __slots__ = ("field", "data")

    def __init__(self, fld: FiniteField, data):
        arr = np.array(data, dtype=np.int32)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= fld.q):
            raise ValueError(f"entries must lie in [0, {fld.q})")
        self.field = fld
        self.data = arr

    @classmethod
    def from_rows(cls, fld: FiniteField, rows) -> "FieldMatrix":
        rows = list(rows)
        if not rows:
            return cls(fld, np.zeros((0, 0), dtype=np.int32))
        return cls(fld, np.array(rows, dtype=np.int32))

    @classmethod
    def zeros(cls, fld: FiniteField, nrows: int, ncols: int) -> "FieldMatrix":
        return cls(fld, np.zeros((nrows, ncols), dtype=np.int32))

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    def row(self, i: int) -> np.ndarray:
        return self.data[i].copy()

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.data.T.copy())

    def rank(self) -> int:
        return rref(self).rank

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    def __repr__(self):
        return f"FieldMatrix({self.nrows}x{self.ncols} over {self.field!r})"

    def to_json(self) -> dict:
        return {
            "p": self.field.p,
            "k": self.field.k,
            "rows": self.nrows,
            "cols": self.ncols,
            "data": [int(x) for x in self.data.reshape(-1)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FieldMatrix":
        fld = field(int(obj["p"]), int(obj["k"]))
        data = np.array(obj["data"], dtype=np.int32)
        shape = (int(obj["rows"]), int(obj["cols"]))
        if data.size != shape[0] * shape[1]:
            raise ValueError("data length does not match rows*cols")
        return cls(fld, data.reshape(shape))


class RowReduction(NamedTuple):
    matrix: FieldMatrix
    rank: int
    pivots: tuple


def rref(M: FieldMatrix) -> RowReduction:
    """Reduced row-echelon form with deterministic pivoting.

    Pivots are chosen leftmost column first, topmost unused row within the
    column; rows end up ordered by pivot column.
    """
    fld = M.field
    a = M.data.copy()
    nrows, ncols = a.shape
    pivots = []
    prow = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(prow, nrows):
            if a[r, col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != prow:
            a[[prow, pivot_row]] = a[[pivot_row, prow]]
        piv = int(a[prow, col])
        if piv != 1:
            a[prow] = fld.scale_array(fld.inv(piv), a[prow])
        for r in range(nrows):
            if r != prow and a[r, col]:
                factor = fld.neg(int(a[r, col]))
                a[r] = fld.add_arrays(a[r], fld.scale_array(factor, a[prow]))
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    return RowReduction(FieldMatrix(fld, a), len(pivots), tuple(pivots))


def save_matrix(M: FieldMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(M.to_json(), fh)


def load_matrix(path) -> FieldMatrix:
    with open(path, encoding="utf-8") as fh:
        return FieldMatrix.from_json(json.load(fh))
