"""Exact dense linear algebra over the prime field F_p.

Everything downstream (complexes, arrow categories, lifting problems)
reduces to the handful of primitives here: modular matrix products,
Gaussian elimination, kernels, and particular solutions.  Matrices are
dense int64 numpy arrays with entries reduced to [0, p); p may be as
large as 2**31 - 1, so products are accumulated in chunks that cannot
overflow 64-bit arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class FieldMismatch(ValueError):
    """Operands live over different primes."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The prime field F_p with 2 <= p < 2**31, checked by trial division."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not (2 <= self.p < 2**31):
            raise ValueError(f"characteristic out of range: {self.p!r}")
        if not _is_prime(self.p):
            raise ValueError(f"characteristic must be prime: {self.p}")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)


def _as_array(data, rows: int, cols: int, p: int) -> np.ndarray:
    a = np.array(data, dtype=np.int64).reshape(rows, cols) % p
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Matrix:
    """Dense row-major matrix over F_p; immutable after construction."""

    field: Field
    a: np.ndarray

    @staticmethod
    def make(field: Field, data, rows: int | None = None, cols: int | None = None) -> "Matrix":
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and rows is not None and cols is not None:
            arr = arr.reshape(rows, cols)
        if arr.ndim != 2:
            if arr.size == 0:
                arr = arr.reshape(rows or 0, cols or 0)
            else:
                raise DimensionError("matrix data must be two-dimensional")
        return Matrix(field, _as_array(arr, arr.shape[0], arr.shape[1], field.p))

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Matrix":
        return Matrix(field, _as_array(np.zeros((rows, cols), dtype=np.int64), rows, cols, field.p))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        return Matrix(field, _as_array(np.eye(n, dtype=np.int64), n, n, field.p))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def is_zero(self) -> bool:
        return self.a.size == 0 or not self.a.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.a.shape == other.a.shape and np.array_equal(self.a, other.a)

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch(f"F_{self.field.p} vs F_{other.field.p}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"add {self.shape} vs {other.shape}")
        return Matrix(self.field, _as_array(self.a + other.a, *self.shape, self.field.p))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"sub {self.shape} vs {other.shape}")
        return Matrix(self.field, _as_array(self.a - other.a, *self.shape, self.field.p))

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, _as_array(-self.a, *self.shape, self.field.p))

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.field, _as_array(self.a * (c % self.field.p), *self.shape, self.field.p))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionError(f"matmul {self.shape} x {other.shape}")
        return Matrix(self.field, _matmul_mod(self.a, other.a, self.field.p))

    def kron(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        out = np.kron(self.a, other.a) % self.field.p
        out.setflags(write=False)
        return Matrix(self.field, out)

    def transpose(self) -> "Matrix":
        t = self.a.T.copy()
        t.setflags(write=False)
        return Matrix(self.field, t)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.rows != other.rows:
            raise DimensionError("hstack row mismatch")
        out = np.hstack([self.a, other.a])
        out.setflags(write=False)
        return Matrix(self.field, out)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.cols:
            raise DimensionError("vstack col mismatch")
        out = np.vstack([self.a, other.a])
        out.setflags(write=False)
        return Matrix(self.field, out)

    def col(self, j: int) -> "Matrix":
        out = self.a[:, j : j + 1].copy()
        out.setflags(write=False)
        return Matrix(self.field, out)

    def to_lists(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.a]

    def __repr__(self) -> str:
        return f"Matrix(F_{self.field.p}, {self.to_lists()})"


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    m, k = a.shape
    n = b.shape[1]
    if m == 0 or n == 0 or k == 0:
        out = np.zeros((m, n), dtype=np.int64)
        out.setflags(write=False)
        return out
    # Widening guard: each product is < p^2 <= (2^31-1)^2; cap the number of
    # terms accumulated before reducing so sums stay below 2^62.
    chunk = max(1, (1 << 62) // ((p - 1) * (p - 1) + 1))
    if k <= chunk:
        out = (a @ b) % p
    else:
        out = np.zeros((m, n), dtype=np.int64)
        for s in range(0, k, chunk):
            out = (out + a[:, s : s + chunk] @ b[s : s + chunk, :]) % p
    out.setflags(write=False)
    return out


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot column indices."""
    p = m.field.p
    r = m.a.copy()
    nrows, ncols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        i = row + int(nz[0])
        if i != row:
            r[[row, i]] = r[[i, row]]
        inv = pow(int(r[row, col]), p - 2, p)
        r[row] = (r[row] * inv) % p
        others = np.nonzero(r[:, col])[0]
        others = others[others != row]
        if others.size:
            r[others] = (r[others] - np.outer(r[others, col], r[row])) % p
        pivots.append(col)
        row += 1
    r.setflags(write=False)
    return Matrix(m.field, r), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a basis of ker(m); count = cols - rank."""
    red, pivots = rref(m)
    p = m.field.p
    free = [c for c in range(m.cols) if c not in pivots]
    out = np.zeros((m.cols, len(free)), dtype=np.int64)
    for k, c in enumerate(free):
        out[c, k] = 1
        for i, pc in enumerate(pivots):
            out[pc, k] = (-int(red.a[i, c])) % p
    out.setflags(write=False)
    return Matrix(m.field, out)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """A particular X with a @ X = b, or None when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic but
    otherwise arbitrary; callers must not rely on which solution comes back.
    """
    a._check_field(b)
    if a.rows != b.rows:
        raise DimensionError(f"solve {a.shape} vs rhs {b.shape}")
    aug = a.hstack(b)
    red, pivots = rref(aug)
    if any(c >= a.cols for c in pivots):
        return None
    out = np.zeros((a.cols, b.cols), dtype=np.int64)
    for i, pc in enumerate(pivots):
        out[pc, :] = red.a[i, a.cols :]
    out.setflags(write=False)
    return Matrix(a.field, out)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionError("inverse of non-square matrix")
    x = solve(m, Matrix.identity(m.field, m.rows))
    if x is None or rank(m) != m.rows:
        raise np.linalg.LinAlgError("matrix is singular")
    return x


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def image_basis(m: Matrix) -> Matrix:
    """Columns of m (at pivot positions) forming a basis of the column space."""
    _, pivots = rref(m)
    if not pivots:
        return Matrix.zeros(m.field, m.rows, 0)
    out = m.a[:, pivots].copy()
    out.setflags(write=False)
    return Matrix(m.field, out)


def complete_to_basis(b: Matrix) -> Matrix:
    """Standard basis vectors extending the independent columns b to all of F_p^rows.

    Deterministic: elimination pivots decide which coordinate vectors are added.
    """
    n = b.rows
    aug = b.hstack(Matrix.identity(b.field, n))
    _, pivots = rref(aug)
    extra = [c - b.cols for c in pivots if c >= b.cols]
    out = np.zeros((n, len(extra)), dtype=np.int64)
    for k, j in enumerate(extra):
        out[j, k] = 1
    out.setflags(write=False)
    return Matrix(b.field, out)
