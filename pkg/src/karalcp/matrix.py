"""Exact rational matrices and the elimination kernels everything else uses.

Entries are `fractions.Fraction`, so ranks, determinants, and solves are
decisions rather than approximations; no tolerances exist anywhere in the
package.  Matrices are immutable by convention (nothing mutates `data`
after construction), which makes the per-instance caches below safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadIndexSetError, DimensionMismatchError, NonSquareError

Rational = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(x) -> Fraction:
    """Coerce an int, Fraction, 'p/q' string, or decimal string to a Fraction.

    Floats are rejected: exactness is a package-wide invariant, and a float
    literal is almost always a sign the caller lost it already.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact Fraction")


def vec(xs: Iterable) -> Vector:
    return tuple(rat(x) for x in xs)


def zeros_vec(n: int) -> Vector:
    return (_ZERO,) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def ones_vec(n: int) -> Vector:
    return (_ONE,) * n


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatchError(f"dot: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), _ZERO)


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Fraction, u: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in u)


def is_zero_vec(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def is_nonneg_vec(u: Sequence[Fraction]) -> bool:
    return all(a >= 0 for a in u)


def is_positive_vec(u: Sequence[Fraction]) -> bool:
    return all(a > 0 for a in u)


def is_unisigned(u: Sequence[Fraction]) -> bool:
    """Nonzero and either entrywise >= 0 or entrywise <= 0."""
    if is_zero_vec(u):
        return False
    return all(a >= 0 for a in u) or all(a <= 0 for a in u)


class RationalMatrix:
    """Dense matrix of Fractions; the universal carrier for the package."""

    __slots__ = ("rows", "cols", "data", "_cache")

    def __init__(self, rows: int, cols: int, data: list[list[Fraction]]):
        if rows < 0 or cols < 0:
            raise DimensionMismatchError("negative dimensions")
        if len(data) != rows or any(len(r) != cols for r in data):
            raise DimensionMismatchError("data shape does not match rows x cols")
        self.rows = rows
        self.cols = cols
        self.data = data
        self._cache: dict = {}

    # -- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RationalMatrix":
        data = [[rat(x) for x in row] for row in rows]
        n = len(data)
        m = len(data[0]) if data else 0
        return cls(n, m, data)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [[_ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]], rows: int | None = None) -> "RationalMatrix":
        if not columns:
            if rows is None:
                raise DimensionMismatchError("from_columns with no columns needs an explicit row count")
            return cls.zeros(rows, 0)
        n = len(columns[0])
        data = [[rat(col[i]) for col in columns] for i in range(n)]
        return cls(n, len(columns), data)

    @classmethod
    def column(cls, v: Sequence[Fraction]) -> "RationalMatrix":
        return cls(len(v), 1, [[rat(x)] for x in v])

    # -- accessors ----------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.data[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def require_square(self, what: str = "operation") -> None:
        if not self.is_square:
            raise NonSquareError(f"{what} needs a square matrix, got {self.rows}x{self.cols}")

    def row_vec(self, i: int) -> Vector:
        return tuple(self.data[i])

    def col_vec(self, j: int) -> Vector:
        return tuple(self.data[i][j] for i in range(self.rows))

    def row_vectors(self) -> list[Vector]:
        return [tuple(r) for r in self.data]

    def col_vectors(self) -> list[Vector]:
        return [self.col_vec(j) for j in range(self.cols)]

    def entries(self) -> Vector:
        """Row-major flattening."""
        return tuple(x for row in self.data for x in row)

    # -- algebra ------------------------------------------------------

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("matrix addition shape mismatch")
        return RationalMatrix(self.rows, self.cols,
                              [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("matrix subtraction shape mismatch")
        return RationalMatrix(self.rows, self.cols,
                              [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __neg__(self) -> "RationalMatrix":
        return self.scale(Fraction(-1))

    def scale(self, c) -> "RationalMatrix":
        c = rat(c)
        return RationalMatrix(self.rows, self.cols, [[c * x for x in row] for row in self.data])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"matmul: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        od = other.data
        out = []
        for i in range(self.rows):
            ri = self.data[i]
            out.append([sum((ri[k] * od[k][j] for k in range(self.cols)), _ZERO)
                        for j in range(other.cols)])
        return RationalMatrix(self.rows, other.cols, out)

    def mul_vec(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError("matrix-vector length mismatch")
        return tuple(sum((row[k] * v[k] for k in range(self.cols)), _ZERO) for row in self.data)

    def trace(self) -> Fraction:
        self.require_square("trace")
        return sum((self.data[i][i] for i in range(self.rows)), _ZERO)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(len(row_idx), len(col_idx),
                              [[self.data[i][j] for j in col_idx] for i in row_idx])

    # -- JSON wire format ----------------------------------------------

    def to_json(self) -> dict:
        """Matrix JSON: entries as ints where possible, else 'p/q' strings."""
        def enc(x: Fraction):
            return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[enc(x) for x in row] for row in self.data]}

    @classmethod
    def from_json(cls, obj) -> "RationalMatrix":
        if not isinstance(obj, dict):
            raise ValueError("matrix JSON must be an object")
        for field in ("rows", "cols", "entries"):
            if field not in obj:
                raise ValueError(f"matrix JSON missing field '{field}'")
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
            raise ValueError("matrix JSON fields 'rows'/'cols' must be nonnegative integers")
        if not isinstance(entries, list) or len(entries) != rows:
            raise ValueError("matrix JSON field 'entries' must list one row per 'rows'")
        data = []
        for i, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != cols:
                raise ValueError(f"matrix JSON field 'entries' row {i} must have {cols} entries")
            out = []
            for j, x in enumerate(row):
                try:
                    out.append(rat(x))
                except (TypeError, ValueError, ZeroDivisionError) as exc:
                    raise ValueError(f"matrix JSON field 'entries' at ({i},{j}): {exc}") from exc
            data.append(out)
        return cls(rows, cols, data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


# -- elimination -------------------------------------------------------


@dataclass(frozen=True)
class RrefResult:
    matrix: RationalMatrix
    rank: int
    pivots: tuple[int, ...]


def rref(m: RationalMatrix) -> RrefResult:
    """Reduced row echelon form; pivoting on first nonzero entry per column."""
    cached = m._cache.get("rref")
    if cached is not None:
        return cached
    a = [row[:] for row in m.data]
    rows, cols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        pv = a[r][c]
        if pv != 1:
            inv = _ONE / pv
            a[r] = [x * inv for x in a[r]]
        arow = a[r]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], arow)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    result = RrefResult(RationalMatrix(rows, cols, a), r, tuple(pivots))
    m._cache["rref"] = result
    return result


def rank(m: RationalMatrix) -> int:
    return rref(m).rank


def determinant(m: RationalMatrix) -> Fraction:
    m.require_square("determinant")
    cached = m._cache.get("det")
    if cached is not None:
        return cached
    n = m.rows
    if n == 0:
        det = _ONE
    elif n == 1:
        det = m.data[0][0]
    elif n == 2:
        d = m.data
        det = d[0][0] * d[1][1] - d[0][1] * d[1][0]
    else:
        det = _det_eliminate([row[:] for row in m.data])
    m._cache["det"] = det
    return det


def _det_eliminate(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    det = _ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pr is None:
            return _ZERO
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            det = -det
        pv = a[c][c]
        det *= pv
        inv = _ONE / pv
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def principal_minor(m: RationalMatrix, index_set: Iterable[int]) -> Fraction:
    m.require_square("principal_minor")
    idx = sorted(set(index_set))
    if not idx or idx[0] < 0 or idx[-1] >= m.rows:
        raise BadIndexSetError(f"index set {idx} invalid for order {m.rows}")
    return determinant(m.submatrix(idx, idx))


def all_principal_minors(m: RationalMatrix) -> list[tuple[tuple[int, ...], Fraction]]:
    """Every nonempty principal minor, in (size, lexicographic) order."""
    m.require_square("principal minors")
    n = m.rows
    out = []
    for k in range(1, n + 1):
        for idx in itertools.combinations(range(n), k):
            out.append((idx, determinant(m.submatrix(idx, idx))))
    return out


def inverse(m: RationalMatrix) -> RationalMatrix | None:
    """Exact inverse, or None when singular."""
    m.require_square("inverse")
    cached = m._cache.get("inv", False)
    if cached is not False:
        return cached
    n = m.rows
    a = [row[:] + [_ONE if i == j else _ZERO for j in range(n)] for i, row in enumerate(m.data)]
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pr is None:
            m._cache["inv"] = None
            return None
        a[c], a[pr] = a[pr], a[c]
        pv = a[c][c]
        if pv != 1:
            inv_p = _ONE / pv
            a[c] = [x * inv_p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    result = RationalMatrix(n, n, [row[n:] for row in a])
    m._cache["inv"] = result
    return result


# -- subspaces ---------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Exact subspace of R^ambient_dim given by a linearly independent basis.

    The empty subspace is an empty basis, never a zero vector.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[Fraction]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector length does not match ambient dimension")
        if not self.basis:
            return is_zero_vec(v)
        stacked = RationalMatrix.from_columns(list(self.basis) + [vec(v)])
        return rank(stacked) == len(self.basis)

    def equals(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        return all(other.contains(b) for b in self.basis)


@dataclass(frozen=True)
class SubspaceBases:
    range: Subspace
    null: Subspace
    row: Subspace
    left_null: Subspace


def null_space_basis(m: RationalMatrix) -> list[Vector]:
    rr = rref(m)
    pivots = set(rr.pivots)
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    rm = rr.matrix.data
    for f in free:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for r, pc in enumerate(rr.pivots):
            v[pc] = -rm[r][f]
        basis.append(tuple(v))
    return basis


def subspace_bases(m: RationalMatrix) -> SubspaceBases:
    """Exact bases for R(A), N(A), R(A^T), N(A^T)."""
    cached = m._cache.get("bases")
    if cached is not None:
        return cached
    rr = rref(m)
    rng = Subspace(m.rows, tuple(m.col_vec(j) for j in rr.pivots))
    row_basis = tuple(tuple(rr.matrix.data[i]) for i in range(rr.rank))
    nul = Subspace(m.cols, tuple(null_space_basis(m)))
    mt = m.transpose()
    left = Subspace(m.rows, tuple(null_space_basis(mt)))
    result = SubspaceBases(range=rng, null=nul, row=Subspace(m.cols, row_basis), left_null=left)
    m._cache["bases"] = result
    return result


def full_rank_factorization(m: RationalMatrix) -> tuple[RationalMatrix, RationalMatrix]:
    """M = F @ G with F of full column rank r and G of full row rank r.

    F takes the pivot columns of M, G the nonzero rows of rref(M); rank 0
    yields empty factors (rows x 0 and 0 x cols) whose product is the zero
    matrix.
    """
    rr = rref(m)
    f = m.submatrix(range(m.rows), rr.pivots)
    g = RationalMatrix(rr.rank, m.cols, [rr.matrix.data[i][:] for i in range(rr.rank)])
    return f, g


@dataclass(frozen=True)
class LinearSolution:
    particular: Vector
    null_basis: tuple[Vector, ...]


def solve_linear(m: RationalMatrix, b: Sequence[Fraction]) -> LinearSolution | None:
    """All exact solutions of M x = b, or None when b is outside R(M)."""
    if len(b) != m.rows:
        raise DimensionMismatchError("rhs length does not match row count")
    aug = RationalMatrix(m.rows, m.cols + 1, [row[:] + [rat(x)] for row, x in zip(m.data, b)])
    rr = rref(aug)
    if m.cols in rr.pivots:
        return None
    x = [_ZERO] * m.cols
    for r, pc in enumerate(rr.pivots):
        x[pc] = rr.matrix.data[r][m.cols]
    return LinearSolution(tuple(x), tuple(null_space_basis(m)))
