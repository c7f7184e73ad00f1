"""Exact dense linear algebra over the rationals.

Scalars are Python ``int`` or :class:`fractions.Fraction`; a Fraction with
denominator 1 is always collapsed to ``int`` so 0/1 adjacency matrices stay
on the fast integer path.  Elimination is done fraction-free on integer rows
(each row is scaled by the lcm of its denominators first, which does not
change its row space), and the reduced form is divided out only at the end.

Vectors are plain tuples of scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]
QVector = tuple

__all__ = [
    "Rational",
    "QVector",
    "QMatrix",
    "SubspaceBasis",
    "q",
    "vector",
    "dot",
    "vadd",
    "vsub",
    "vscale",
    "is_zero",
    "integer_normalize",
    "format_rational",
    "rref",
    "rank",
    "nullspace_basis",
    "column_space_basis",
    "det_bareiss",
    "adjugate",
    "inverse",
    "solve_particular",
    "image_contains",
    "image_contains_by_cokernel",
    "subspace_intersect",
    "subspace_sum",
]


def q(x) -> Rational:
    """Coerce ``x`` to an exact scalar; floats are rejected."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, str):
        return q(Fraction(x.strip()))
    if isinstance(x, _RationalABC):
        return q(Fraction(x.numerator, x.denominator))
    raise TypeError(f"exact rational required, got {type(x).__name__}")


def _frac(num: int, den: int) -> Rational:
    if den == 1:
        return num
    if den == -1:
        return -num
    if num % den == 0:
        return num // den
    return Fraction(num, den)


def vector(values: Iterable) -> QVector:
    return tuple(q(v) for v in values)


def dot(u: Sequence, v: Sequence) -> Rational:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return q(sum(a * b for a, b in zip(u, v)))


def vadd(u: Sequence, v: Sequence) -> QVector:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(q(a + b) for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> QVector:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(q(a - b) for a, b in zip(u, v))


def vscale(c, v: Sequence) -> QVector:
    c = q(c)
    return tuple(q(c * a) for a in v)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def integer_normalize(v: Sequence) -> QVector:
    """Scale ``v`` to coprime integers with its first nonzero entry positive.

    The zero vector is returned unchanged.
    """
    v = vector(v)
    if is_zero(v):
        return v
    den = lcm(*(Fraction(a).denominator for a in v))
    ints = [int(a * den) for a in v]
    g = gcd(*ints)
    first = next(a for a in ints if a != 0)
    if first < 0:
        g = -g
    return tuple(a // g for a in ints)


def format_rational(x) -> str:
    """Render an exact scalar as ``"p"`` or ``"p/q"``."""
    return str(Fraction(q(x)))


class QMatrix:
    """Immutable dense matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable] = (), cols: int | None = None):
        rows = tuple(tuple(q(x) for x in r) for r in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"declared {cols} columns, rows have {width}")
        else:
            width = 0 if cols is None else cols
        if width < 0:
            raise ValueError("negative dimension")
        self.rows = len(rows)
        self.cols = width
        self._data = rows

    @classmethod
    def _wrap(cls, rows: tuple, nrows: int, ncols: int) -> "QMatrix":
        m = cls.__new__(cls)
        m.rows = nrows
        m.cols = ncols
        m._data = rows
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "QMatrix":
        return cls._wrap(tuple((0,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def ones(cls, nrows: int, ncols: int) -> "QMatrix":
        return cls._wrap(tuple((1,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls._wrap(
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n, n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "QMatrix":
        columns = [vector(c) for c in columns]
        if any(len(c) != nrows for c in columns):
            raise ValueError("column length mismatch")
        return cls._wrap(
            tuple(tuple(c[i] for c in columns) for i in range(nrows)),
            nrows,
            len(columns),
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> QVector:
        return self._data[i]

    def col(self, j: int) -> QVector:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Rational]]:
        return [list(r) for r in self._data]

    @property
    def T(self) -> "QMatrix":
        return QMatrix._wrap(
            tuple(zip(*self._data)) if self.rows else tuple(() for _ in range(self.cols)),
            self.cols,
            self.rows,
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "QMatrix":
        d = self._data
        return QMatrix._wrap(
            tuple(tuple(d[i][j] for j in col_idx) for i in row_idx),
            len(row_idx),
            len(col_idx),
        )

    def delete(self, row: int, col: int) -> "QMatrix":
        """Matrix with one row and one column removed."""
        keep_r = [i for i in range(self.rows) if i != row]
        keep_c = [j for j in range(self.cols) if j != col]
        return self.submatrix(keep_r, keep_c)

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return QMatrix._wrap(
            tuple(a + b for a, b in zip(self._data, other._data)),
            self.rows,
            self.cols + other.cols,
        )

    def vstack(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return QMatrix._wrap(self._data + other._data, self.rows + other.rows, self.cols)

    def is_integer(self) -> bool:
        return all(type(x) is int for r in self._data for x in r)

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.T._data
            return QMatrix._wrap(
                tuple(
                    tuple(q(sum(a * b for a, b in zip(r, c))) for c in cols)
                    for r in self._data
                ),
                self.rows,
                other.cols,
            )
        v = tuple(other)
        if len(v) != self.cols:
            raise ValueError(f"shape mismatch {self.shape} @ vector of length {len(v)}")
        return tuple(q(sum(a * b for a, b in zip(r, v))) for r in self._data)

    def _elementwise(self, other: "QMatrix", op) -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return QMatrix._wrap(
            tuple(
                tuple(q(op(a, b)) for a, b in zip(r, s))
                for r, s in zip(self._data, other._data)
            ),
            self.rows,
            self.cols,
        )

    def __add__(self, other: "QMatrix") -> "QMatrix":
        return self._elementwise(other, lambda a, b: a + b)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self._elementwise(other, lambda a, b: a - b)

    def __neg__(self) -> "QMatrix":
        return self.scaled(-1)

    def scaled(self, c) -> "QMatrix":
        c = q(c)
        return QMatrix._wrap(
            tuple(tuple(q(c * x) for x in r) for r in self._data), self.rows, self.cols
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._data
        )
        return f"QMatrix({self.rows}x{self.cols}: [{body}])"


@dataclass(frozen=True)
class SubspaceBasis:
    """A basis (linearly independent list of vectors) of a subspace of Q^n."""

    ambient_dim: int
    vectors: tuple = ()

    def __post_init__(self):
        vecs = tuple(vector(v) for v in self.vectors)
        if any(len(v) != self.ambient_dim for v in vecs):
            raise ValueError("basis vector length differs from ambient dimension")
        object.__setattr__(self, "vectors", vecs)
        if vecs and rank(QMatrix._wrap(vecs, len(vecs), self.ambient_dim)) != len(vecs):
            raise ValueError("basis vectors are linearly dependent")

    @classmethod
    def _trusted(cls, ambient_dim: int, vectors) -> "SubspaceBasis":
        b = cls.__new__(cls)
        object.__setattr__(b, "ambient_dim", ambient_dim)
        object.__setattr__(b, "vectors", tuple(vectors))
        return b

    @classmethod
    def spanned_by(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "SubspaceBasis":
        """Basis of the span of arbitrary (possibly dependent) vectors."""
        vecs = [vector(v) for v in vectors]
        if not vecs:
            return cls._trusted(ambient_dim, ())
        m = QMatrix.from_columns(vecs, ambient_dim)
        return column_space_basis(m)

    @classmethod
    def full(cls, n: int) -> "SubspaceBasis":
        return cls._trusted(n, QMatrix.identity(n)._data)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def as_columns(self) -> QMatrix:
        return QMatrix.from_columns(self.vectors, self.ambient_dim)

    def contains(self, v: Sequence) -> bool:
        v = vector(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector length differs from ambient dimension")
        if not self.vectors:
            return is_zero(v)
        return image_contains(self.as_columns(), v)

    def same_span(self, other: "SubspaceBasis") -> bool:
        return (
            self.ambient_dim == other.ambient_dim
            and self.dim == other.dim
            and all(other.contains(v) for v in self.vectors)
        )


# -- elimination kernels ---------------------------------------------------


def _int_rows(data: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Integer rows spanning the same row space, plus the per-row multipliers."""
    out = []
    scales = []
    for r in data:
        dens = [x.denominator for x in r if type(x) is not int]
        if dens:
            s = lcm(*dens)
            out.append([int(x * s) for x in r])
            scales.append(s)
        else:
            out.append(list(r))
            scales.append(1)
    return out, scales


def _eliminate(rows: list[list[int]], ncols: int, reduce: bool) -> list[int]:
    """Fraction-free Gaussian (or Gauss-Jordan when ``reduce``) elimination in place.

    Returns the pivot columns; the first ``len(pivots)`` rows hold the pivots.
    """
    m = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = r
        while p < m and rows[p][c] == 0:
            p += 1
        if p == m:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        prow = rows[r]
        a = prow[c]
        targets = range(m) if reduce else range(r + 1, m)
        for i in targets:
            if i == r:
                continue
            row = rows[i]
            b = row[c]
            if b == 0:
                continue
            new = [a * x - b * y for x, y in zip(row, prow)]
            g = gcd(*new)
            if g > 1:
                new = [x // g for x in new]
            rows[i] = new
        pivots.append(c)
        r += 1
    return pivots


def rref(M: QMatrix) -> tuple[QMatrix, list[int], int]:
    """Reduced row-echelon form, pivot columns and rank."""
    rows, _ = _int_rows(M._data)
    pivots = _eliminate(rows, M.cols, reduce=True)
    out = []
    for i, row in enumerate(rows):
        if i < len(pivots):
            a = row[pivots[i]]
            out.append(tuple(_frac(x, a) for x in row))
        else:
            out.append((0,) * M.cols)
    return QMatrix._wrap(tuple(out), M.rows, M.cols), pivots, len(pivots)


def rank(M: QMatrix) -> int:
    rows, _ = _int_rows(M._data)
    return len(_eliminate(rows, M.cols, reduce=False))


def nullspace_basis(M: QMatrix) -> SubspaceBasis:
    """Canonical RREF kernel basis: one vector per free column, set to 1 there."""
    rows, _ = _int_rows(M._data)
    pivots = _eliminate(rows, M.cols, reduce=True)
    pivot_set = set(pivots)
    vecs = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        x = [0] * M.cols
        x[f] = 1
        for i, p in enumerate(pivots):
            if rows[i][f]:
                x[p] = _frac(-rows[i][f], rows[i][p])
        vecs.append(tuple(x))
    return SubspaceBasis._trusted(M.cols, vecs)


def column_space_basis(M: QMatrix) -> SubspaceBasis:
    """Basis of im(M) made of the pivot columns of M itself."""
    rows, _ = _int_rows(M._data)
    pivots = _eliminate(rows, M.cols, reduce=False)
    return SubspaceBasis._trusted(M.rows, [M.col(j) for j in pivots])


def _det_int(a: list[list[int]]) -> int:
    """Bareiss elimination on an integer square matrix given as mutable rows."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = k + 1
            while p < n and a[p][k] == 0:
                p += 1
            if p == n:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        rk = a[k]
        akk = rk[k]
        tail = rk[k + 1:]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if aik == 0 and prev == akk:
                continue
            ri[k + 1:] = [(x * akk - aik * y) // prev for x, y in zip(ri[k + 1:], tail)]
        prev = akk
    return sign * a[n - 1][n - 1]


def det_bareiss(M: QMatrix) -> Rational:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not M.is_square():
        raise ValueError(f"determinant of non-square {M.rows}x{M.cols} matrix")
    a, scales = _int_rows(M._data)
    det = _det_int(a)
    den = 1
    for s in scales:
        den *= s
    return _frac(det, den) if den != 1 else det


def inverse(M: QMatrix) -> QMatrix:
    if not M.is_square():
        raise ValueError("inverse of non-square matrix")
    n = M.rows
    if n == 0:
        return QMatrix.zeros(0, 0)
    aug = M.hstack(QMatrix.identity(n))
    rows, _ = _int_rows(aug._data)
    pivots = _eliminate(rows, 2 * n, reduce=True)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise ValueError("matrix is singular")
    return QMatrix._wrap(
        tuple(tuple(_frac(x, rows[i][i]) for x in rows[i][n:]) for i in range(n)), n, n
    )


def adjugate(M: QMatrix) -> QMatrix:
    """Classical adjoint; satisfies ``adjugate(M) @ M == det(M) * I``."""
    if not M.is_square():
        raise ValueError("adjugate of non-square matrix")
    n = M.rows
    if n == 0:
        return QMatrix.zeros(0, 0)
    if n == 1:
        return QMatrix([[1]])
    d = det_bareiss(M)
    if d != 0:
        return inverse(M).scaled(d)
    data = M._data
    if M.is_integer():
        symmetric = all(data[i][j] == data[j][i] for i in range(n) for j in range(i))

        def cofactor(i: int, j: int) -> Rational:
            c = _det_int([list(r[:j] + r[j + 1:]) for r in data[:i] + data[i + 1:]])
            return -c if (i + j) % 2 else c

    else:
        symmetric = False

        def cofactor(i: int, j: int) -> Rational:
            c = det_bareiss(M.delete(i, j))
            return -c if (i + j) % 2 else c

    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i if symmetric else 0, n):
            # adj[i][j] is the (j, i) cofactor
            out[i][j] = cofactor(j, i)
            if symmetric:
                out[j][i] = out[i][j]
    return QMatrix._wrap(tuple(tuple(r) for r in out), n, n)


def solve_particular(M: QMatrix, b: Sequence) -> QVector | None:
    """Some ``x`` with ``M @ x == b`` (free variables set to 0), or None."""
    b = vector(b)
    if len(b) != M.rows:
        raise ValueError(f"rhs length {len(b)} does not match {M.rows} rows")
    aug = QMatrix._wrap(tuple(r + (v,) for r, v in zip(M._data, b)), M.rows, M.cols + 1)
    rows, _ = _int_rows(aug._data)
    pivots = _eliminate(rows, M.cols + 1, reduce=True)
    if pivots and pivots[-1] == M.cols:
        return None
    x = [0] * M.cols
    for i, p in enumerate(pivots):
        x[p] = _frac(rows[i][M.cols], rows[i][p])
    return tuple(x)


def image_contains(M: QMatrix, v: Sequence) -> bool:
    return solve_particular(M, v) is not None


def image_contains_by_cokernel(M: QMatrix, v: Sequence) -> bool:
    """Membership ``v in im(M)`` decided as ``nul(M^t)`` orthogonal to ``v``.

    Independent of :func:`image_contains`; used to cross-check it.
    """
    v = vector(v)
    if len(v) != M.rows:
        raise ValueError(f"vector length {len(v)} does not match {M.rows} rows")
    return all(dot(y, v) == 0 for y in nullspace_basis(M.T).vectors)


def subspace_intersect(A: SubspaceBasis, B: SubspaceBasis) -> SubspaceBasis:
    """Basis of the intersection of two subspaces of the same ambient space."""
    if A.ambient_dim != B.ambient_dim:
        raise ValueError(f"ambient mismatch: {A.ambient_dim} vs {B.ambient_dim}")
    n = A.ambient_dim
    if not A.vectors or not B.vectors:
        return SubspaceBasis._trusted(n, ())
    # Solve A a = B b; the map (a, b) -> A a is injective on the solutions.
    stacked = QMatrix.from_columns(
        list(A.vectors) + [vscale(-1, v) for v in B.vectors], n
    )
    coeffs = nullspace_basis(stacked).vectors
    Acols = A.as_columns()
    return SubspaceBasis._trusted(n, [Acols @ c[: A.dim] for c in coeffs])


def subspace_sum(A: SubspaceBasis, B: SubspaceBasis) -> SubspaceBasis:
    if A.ambient_dim != B.ambient_dim:
        raise ValueError(f"ambient mismatch: {A.ambient_dim} vs {B.ambient_dim}")
    return SubspaceBasis.spanned_by(A.ambient_dim, list(A.vectors) + list(B.vectors))
