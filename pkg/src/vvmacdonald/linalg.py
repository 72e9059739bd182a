"""Sparse matrices over Q(q, t).

Rows are dicts ``{col: Scalar}`` with no stored zeros.  Vectors are row
vectors and act on the left, ``v @ M``, so ``A @ B`` is "first A, then B".
"""
from __future__ import annotations

from .qt_field import ONE, ZERO, Scalar, _coerce


class SingularMatrix(ArithmeticError):
    pass


def vec_add(u: dict, v: dict, c=ONE) -> dict:
    """u + c*v for sparse vectors."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k)
        z = x * c if y is None else y + x * c
        if z.is_zero():
            out.pop(k, None)
        else:
            out[k] = z
    return out


def vec_scale(v: dict, c) -> dict:
    c = _coerce(c)
    if c.is_zero():
        return {}
    if c.is_one():
        return dict(v)
    return {k: x * c for k, x in v.items()}


def vec_mat(v: dict, M: "Matrix") -> dict:
    out: dict = {}
    for i, x in v.items():
        for j, y in M.rows[i].items():
            z = out.get(j)
            z = x * y if z is None else z + x * y
            if z.is_zero():
                out.pop(j, None)
            else:
                out[j] = z
    return out


class Matrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [{} for _ in range(nrows)]
        self.rows = [{j: x for j, x in r.items() if not x.is_zero()} for r in rows]

    @classmethod
    def identity(cls, n: int, c=ONE):
        c = _coerce(c)
        return cls(n, n, [{i: c} for i in range(n)])

    @classmethod
    def diag(cls, values):
        values = [_coerce(v) for v in values]
        return cls(len(values), len(values), [{i: v} for i, v in enumerate(values)])

    @classmethod
    def from_dense(cls, data):
        data = [[_coerce(x) if not isinstance(x, Scalar) else x for x in r] for r in data]
        ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, [dict(enumerate(r)) for r in data])

    def to_dense(self):
        return [[r.get(j, ZERO) for j in range(self.ncols)] for r in self.rows]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, ZERO)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(self.nrows, other.ncols, [vec_mat(r, other) for r in self.rows])

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.nrows, self.ncols,
                      [vec_add(a, b) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        return Matrix(self.nrows, self.ncols, [vec_scale(r, c) for r in self.rows])

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def transpose(self) -> "Matrix":
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                cols[j][i] = x
        return Matrix(self.ncols, self.nrows, cols)

    T = property(transpose)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in enumerate(self.rows))

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def map(self, f) -> list:
        return [[f(x) for x in r] for r in self.to_dense()]

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        if self.is_diagonal():
            try:
                return Matrix.diag([self.rows[i][i].inverse() for i in range(n)])
            except (KeyError, ZeroDivisionError):
                raise SingularMatrix("diagonal matrix has a zero entry") from None
        a = [dict(r) for r in self.rows]
        b = [{i: ONE} for i in range(n)]
        for col in range(n):
            piv = None
            best = None
            for r in range(col, n):
                x = a[r].get(col)
                if x is not None:
                    size = len(a[r])
                    if best is None or size < best:
                        piv, best = r, size
            if piv is None:
                raise SingularMatrix("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            inv = a[col][col].inverse()
            a[col] = vec_scale(a[col], inv)
            b[col] = vec_scale(b[col], inv)
            for r in range(n):
                if r != col:
                    x = a[r].get(col)
                    if x is not None:
                        a[r] = vec_add(a[r], a[col], -x)
                        b[r] = vec_add(b[r], b[col], -x)
        return Matrix(n, n, b)

    def left_nullspace(self) -> list:
        """Basis of {v : v @ self = 0} as sparse dicts."""
        return self.transpose().nullspace()

    def nullspace(self) -> list:
        """Basis of {x : self @ x = 0} (x a column); each vector has a 1 in
        its own free coordinate and 0 in the other free coordinates."""
        a = [dict(r) for r in self.rows]
        n = self.ncols
        pivots = []
        row = 0
        for col in range(n):
            piv = next((r for r in range(row, len(a)) if col in a[r]), None)
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            a[row] = vec_scale(a[row], a[row][col].inverse())
            for r in range(len(a)):
                if r != row and col in a[r]:
                    a[r] = vec_add(a[r], a[row], -a[r][col])
            pivots.append(col)
            row += 1
            if row == len(a):
                break
        free = [c for c in range(n) if c not in set(pivots)]
        basis = []
        for f in free:
            v = {f: ONE}
            for r, pc in enumerate(pivots):
                x = a[r].get(f)
                if x is not None:
                    v[pc] = -x
            basis.append(v)
        return basis

    def rank(self) -> int:
        return self.ncols - len(self.nullspace())

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


__all__ = ["Matrix", "SingularMatrix", "vec_add", "vec_scale", "vec_mat"]
