"""Exact linear algebra over the rationals.

Everything here works with ``fractions.Fraction`` entries and never rounds.
Matrices are small (desk scale) and usually very sparse, so products skip
zero entries and kernels are computed by a sparse row-echelon engine.

Tensor products use the lexicographic basis order with the left factor
varying slowest: ``e_i (x) f_j`` sits at index ``i * dim(F) + j``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Q = Fraction
Vector = tuple  # tuple of Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def q(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def vec(values: Iterable) -> Vector:
    return tuple(q(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def add_vectors(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub_vectors(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale_vector(c, v: Sequence) -> Vector:
    c = q(c)
    return tuple(c * a for a in v)


def kron_vectors(u: Sequence, v: Sequence) -> Vector:
    return tuple(a * b for a in u for b in v)


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(q(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def _raw(cls, rows: tuple, ncols: int) -> "Matrix":
        m = object.__new__(cls)
        m.nrows = len(rows)
        m.ncols = ncols
        m.rows = rows
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls._raw(((ZERO,) * ncols,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [vec(c) for c in columns]
        for c in cols:
            if len(c) != nrows:
                raise ValueError("column length does not match nrows")
        return cls._raw(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @classmethod
    def from_sparse(cls, nrows: int, ncols: int, entries: Iterable[tuple]) -> "Matrix":
        grid = [[ZERO] * ncols for _ in range(nrows)]
        for i, j, x in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i}, {j}) outside a {nrows}x{ncols} matrix")
            grid[i][j] += q(x)
        return cls._raw(tuple(tuple(r) for r in grid), ncols)

    @classmethod
    def from_function(cls, nrows: int, ncols: int, column) -> "Matrix":
        """Build the matrix whose j-th column is ``column(j)``."""
        return cls.from_columns([column(j) for j in range(ncols)], nrows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        if not self.nrows:
            return Matrix.zeros(self.ncols, 0)
        return Matrix._raw(tuple(zip(*self.rows)), self.nrows)

    def nonzero(self) -> Iterator[tuple[int, int, Fraction]]:
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if x:
                    yield i, j, x

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        n = other.ncols
        orows = other.rows
        out = []
        for r in self.rows:
            acc = [ZERO] * n
            for k, x in enumerate(r):
                if x:
                    ok = orows[k]
                    for j, y in enumerate(ok):
                        if y:
                            acc[j] += x * y
            out.append(tuple(acc))
        return Matrix._raw(tuple(out), n)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for a {self.shape} matrix")
        nz = [(k, x) for k, x in enumerate(v) if x]
        return tuple(sum((r[k] * x for k, x in nz), ZERO) for r in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in subtraction")
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def scale(self, c) -> "Matrix":
        c = q(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(tuple(tuple(self.rows[i][j] for j in cols) for i in rows), len(cols))

    def column_block(self, start: int, width: int) -> "Matrix":
        return Matrix._raw(tuple(r[start:start + width] for r in self.rows), width)

    def row_block(self, start: int, height: int) -> "Matrix":
        return Matrix._raw(self.rows[start:start + height], self.ncols)

    def rank(self) -> int:
        return len(_Echelon.of_rows(self.rows, self.ncols).pivots)


def linear_combination(coeffs: Sequence, mats: Sequence[Matrix], nrows: int, ncols: int) -> Matrix:
    """sum_i coeffs[i] * mats[i]."""
    acc = [[ZERO] * ncols for _ in range(nrows)]
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for i, j, x in m.nonzero():
            acc[i][j] += c * x
    return Matrix._raw(tuple(tuple(r) for r in acc), ncols)


def hstack(mats: Sequence[Matrix], nrows: int | None = None) -> Matrix:
    if not mats:
        return Matrix.zeros(nrows or 0, 0)
    n = mats[0].nrows
    if any(m.nrows != n for m in mats):
        raise ValueError("hstack needs equal row counts")
    return Matrix._raw(tuple(sum((m.rows[i] for m in mats), ()) for i in range(n)),
                       sum(m.ncols for m in mats))


def vstack(mats: Sequence[Matrix], ncols: int | None = None) -> Matrix:
    if not mats:
        return Matrix.zeros(0, ncols or 0)
    c = mats[0].ncols
    if any(m.ncols != c for m in mats):
        raise ValueError("vstack needs equal column counts")
    return Matrix._raw(sum((m.rows for m in mats), ()), c)


def block_diag(mats: Sequence[Matrix]) -> Matrix:
    nrows = sum(m.nrows for m in mats)
    ncols = sum(m.ncols for m in mats)
    entries = []
    r0 = c0 = 0
    for m in mats:
        entries.extend((r0 + i, c0 + j, x) for i, j, x in m.nonzero())
        r0 += m.nrows
        c0 += m.ncols
    return Matrix.from_sparse(nrows, ncols, entries)


def tensor_map(f: Matrix, g: Matrix) -> Matrix:
    """Kronecker product: (f (x) g)(u (x) v) = f(u) (x) g(v)."""
    nrows = f.nrows * g.nrows
    ncols = f.ncols * g.ncols
    gnz = list(g.nonzero())
    entries = [(i * g.nrows + k, j * g.ncols + l, x * y)
               for i, j, x in f.nonzero() for k, l, y in gnz]
    return Matrix.from_sparse(nrows, ncols, entries)


def kron(*mats: Matrix) -> Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = tensor_map(out, m)
    return out


def flip(m: int, n: int) -> Matrix:
    """The flip U (x) V -> V (x) U for dim U = m, dim V = n."""
    return Matrix.from_sparse(m * n, m * n, [(j * m + i, i * n + j, 1)
                                             for i in range(m) for j in range(n)])


def outer(u: Sequence, v: Sequence) -> Matrix:
    """Column vector u times row vector v."""
    return Matrix._raw(tuple(tuple(a * b for b in v) for a in vec(u)), len(v))


def row_matrix(v: Sequence) -> Matrix:
    return Matrix([vec(v)], len(v))


def column_matrix(v: Sequence) -> Matrix:
    return Matrix.from_columns([v], len(v))


def first_difference(lhs: Matrix, rhs: Matrix) -> int | None:
    """Index of the first column where two equally shaped matrices differ."""
    if lhs.shape != rhs.shape:
        raise ValueError(f"cannot compare {lhs.shape} with {rhs.shape}")
    for j in range(lhs.ncols):
        for r, s in zip(lhs.rows, rhs.rows):
            if r[j] != s[j]:
                return j
    return None


# -- sparse echelon engine -------------------------------------------------

class _Echelon:
    """Incrementally maintained reduced row echelon form of sparse rows.

    Rows are dicts {column: nonzero Fraction}. Every stored row has its pivot
    entry equal to 1 and no entries in any other pivot column.
    """

    __slots__ = ("ncols", "pivots")

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Fraction]] = {}

    @classmethod
    def of_rows(cls, rows: Iterable[Sequence], ncols: int) -> "_Echelon":
        e = cls(ncols)
        for r in rows:
            e.add({j: x for j, x in enumerate(r) if x})
        return e

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        for c in [c for c in row if c in self.pivots]:
            x = row.get(c)
            if not x:
                continue
            for k, y in self.pivots[c].items():
                v = row.get(k, ZERO) - x * y
                if v:
                    row[k] = v
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = ONE / row[p]
        row = {k: v * inv for k, v in row.items()}
        for prow in self.pivots.values():
            x = prow.get(p)
            if x:
                for k, y in row.items():
                    v = prow.get(k, ZERO) - x * y
                    if v:
                        prow[k] = v
                    else:
                        del prow[k]
        self.pivots[p] = row
        return True

    def basis(self) -> tuple[Vector, ...]:
        out = []
        for p in sorted(self.pivots):
            r = self.pivots[p]
            out.append(tuple(r.get(j, ZERO) for j in range(self.ncols)))
        return tuple(out)

    def null_basis(self) -> list[Vector]:
        free = [j for j in range(self.ncols) if j not in self.pivots]
        out = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for p, r in self.pivots.items():
                x = r.get(f)
                if x:
                    v[p] = -x
            out.append(tuple(v))
        return out


class Subspace:
    """A subspace of Q^n stored by the reduced row echelon form of a basis.

    Equal subspaces have identical ``basis`` tuples.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        e = _Echelon(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            e.add({j: q(x) for j, x in enumerate(v) if x})
        self.ambient_dim = ambient_dim
        self.basis = e.basis()
        self._pivots = tuple(sorted(e.pivots))

    @classmethod
    def _from_echelon(cls, e: _Echelon) -> "Subspace":
        s = object.__new__(cls)
        s.ambient_dim = e.ncols
        s.basis = e.basis()
        s._pivots = tuple(sorted(e.pivots))
        return s

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, [unit_vector(n, i) for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        vs = ", ".join("(" + ", ".join(fmt(x) for x in b) + ")" for b in self.basis)
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim}: {vs})"

    def coordinates(self, v: Sequence) -> Vector | None:
        """Coordinates of v in ``basis``, or None when v is not in the subspace."""
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        c = tuple(q(v[p]) for p in self._pivots)
        recon = [ZERO] * self.ambient_dim
        for x, b in zip(c, self.basis):
            if x:
                for j, y in enumerate(b):
                    if y:
                        recon[j] += x * y
        if tuple(recon) != tuple(q(x) for x in v):
            return None
        return c

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        _check_same_ambient(self, other)
        return all(self.contains(b) for b in other.basis)

    def embedding(self) -> Matrix:
        """The ambient_dim x dim matrix whose columns are the basis vectors."""
        return Matrix.from_columns(self.basis, self.ambient_dim)

    def coordinate_map(self) -> Matrix:
        """Left inverse of ``embedding``: reads coordinates off the pivot columns."""
        return Matrix.from_sparse(self.dim, self.ambient_dim,
                                  [(i, p, 1) for i, p in enumerate(self._pivots)])

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_same_ambient(self, other)
        return Subspace(self.ambient_dim, self.basis + other.basis)


class DimensionMismatch(ValueError):
    pass


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, vectors)


def kernel_of_rows(rows: Iterable[dict], ncols: int) -> Subspace:
    """Solution space of the homogeneous system given by sparse rows."""
    e = _Echelon(ncols)
    for r in rows:
        if r:
            e.add(r)
    return Subspace(ncols, e.null_basis())


def kernel(m: Matrix) -> Subspace:
    return kernel_of_rows(({j: x for j, x in enumerate(r) if x} for r in m.rows), m.ncols)


def image(m: Matrix) -> Subspace:
    return Subspace(m.nrows, m.columns())


def rank(m: Matrix) -> int:
    return m.rank()


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Largest subspace contained in both a and b."""
    _check_same_ambient(a, b)
    n = a.ambient_dim
    # v = sum x_i a_i = sum y_j b_j  ->  kernel of [A | -B]
    cols = list(a.basis) + [tuple(-x for x in v) for v in b.basis]
    if not cols:
        return Subspace.zero(n)
    sol = kernel(Matrix.from_columns(cols, n))
    out = []
    for s in sol.basis:
        v = [ZERO] * n
        for x, av in zip(s[:a.dim], a.basis):
            if x:
                for j, y in enumerate(av):
                    if y:
                        v[j] += x * y
        out.append(v)
    return Subspace(n, out)


def intersect_all(spaces: Sequence[Subspace], ambient_dim: int) -> Subspace:
    out = Subspace.whole(ambient_dim)
    for s in spaces:
        out = intersect(out, s)
    return out


def quotient(ambient_dim: int, rel: Subspace) -> tuple[int, Matrix, Matrix]:
    """Quotient of Q^ambient_dim by rel.

    Returns (dim, projector, section). Quotient coordinates are the
    non-pivot columns of rel's canonical basis, so the projector reduces a
    vector modulo rel and reads those columns; the section is the
    corresponding coordinate inclusion.
    """
    if rel.ambient_dim != ambient_dim:
        raise DimensionMismatch("relation subspace lives in a different ambient space")
    pivots = set(rel.pivots)
    free = [j for j in range(ambient_dim) if j not in pivots]
    # reducing e_j modulo rel: e_j - sum_p (e_j)_p r_p, only pivot p = j matters
    entries = []
    for j in range(ambient_dim):
        if j in pivots:
            r = rel.basis[rel.pivots.index(j)]
            for qi, f in enumerate(free):
                if r[f]:
                    entries.append((qi, j, -r[f]))
        else:
            entries.append((free.index(j), j, 1))
    projector = Matrix.from_sparse(len(free), ambient_dim, entries)
    section = Matrix.from_sparse(ambient_dim, len(free), [(f, qi, 1) for qi, f in enumerate(free)])
    return len(free), projector, section


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """Some solution x of m x = b, or None if the system is inconsistent."""
    n = m.ncols
    e = _Echelon(n + 1)
    for r, rhs in zip(m.rows, b):
        row = {j: x for j, x in enumerate(r) if x}
        if rhs:
            row[n] = -q(rhs)
        if row:
            e.add(row)
    if n in e.pivots:
        return None
    x = [ZERO] * n
    for p, r in e.pivots.items():
        x[p] = -r.get(n, ZERO)
    return tuple(x)


def inverse(m: Matrix) -> Matrix | None:
    """Exact inverse of a square matrix, or None if it is singular."""
    if m.nrows != m.ncols:
        return None
    n = m.nrows
    e = _Echelon(2 * n)
    for i, r in enumerate(m.rows):
        row = {j: x for j, x in enumerate(r) if x}
        row[n + i] = ONE
        e.add(row)
    if any(i not in e.pivots for i in range(n)):
        return None
    rows = []
    for i in range(n):
        r = e.pivots[i]
        rows.append(tuple(r.get(n + j, ZERO) for j in range(n)))
    return Matrix._raw(tuple(rows), n)
