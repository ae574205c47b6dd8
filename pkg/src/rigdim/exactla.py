"""Exact linear algebra over the rationals and prime fields.

Everything downstream is built on :class:`Matrix`, an immutable dense matrix
whose entries are :class:`fractions.Fraction` (over Q) or ``int`` in
``[0, p)`` (over F_p).  Elimination is plain Gauss-Jordan with deterministic
pivoting: leftmost nonzero column, topmost nonzero entry.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: ``FieldSpec.rational()`` or ``FieldSpec.prime(p)``."""

    kind: str = "rational"
    p: int = 0

    def __post_init__(self):
        if self.kind == "rational":
            if self.p != 0:
                raise ValueError("rational field takes no characteristic")
        elif self.kind == "prime":
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational", 0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"Q"`` or ``"F<p>"`` (e.g. ``"F7"``)."""
        text = text.strip()
        if text in ("Q", "QQ"):
            return cls.rational()
        if text[:1] == "F" and text[1:].isdigit():
            return cls.prime(int(text[1:]))
        raise ValueError(f"cannot parse field {text!r}")

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self) -> str:
        return "Q" if self.kind == "rational" else f"F{self.p}"

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction or exact string like ``"-3/2"``)."""
        if isinstance(x, float):
            raise TypeError("floating point scalars are not allowed")
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p == 0:
            return Fraction(x)
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"{x} is not defined over F{self.p}")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / x
        return pow(x, -1, self.p)


QQ = FieldSpec.rational()


# -- elimination kernels on mutable row lists ------------------------------

def _rref_inplace(rows: list, ncols: int, field: FieldSpec) -> list:
    """Row-reduce ``rows`` in place; return pivot columns."""
    p = field.p
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = field.inv(prow[c])
        if p:
            prow = [x * inv % p for x in prow]
        else:
            prow = [x * inv for x in prow]
        rows[r] = prow
        nz = [j for j in range(c, ncols) if prow[j] != 0]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f == 0:
                continue
            if p:
                for j in nz:
                    row[j] = (row[j] - f * prow[j]) % p
            else:
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


class Matrix:
    """Immutable dense matrix over a :class:`FieldSpec`."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldSpec, rows: Iterable[Sequence], ncols: Optional[int] = None, *, _trusted=False):
        self.field = field
        if _trusted:
            self.rows = rows
        else:
            self.rows = tuple(tuple(field(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            if self.nrows == 0:
                raise ValueError("ncols required for a matrix without rows")
            ncols = len(self.rows[0])
        self.ncols = ncols
        for row in self.rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")

    # -- constructors
    @classmethod
    def _wrap(cls, field, rows, ncols):
        return cls(field, tuple(tuple(r) for r in rows), ncols, _trusted=True)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls._wrap(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._wrap(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        if not columns:
            return cls.zeros(field, nrows, 0)
        return cls._wrap(field, [[col[i] for col in columns] for i in range(nrows)], len(columns))

    # -- basic protocol
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix<{self.field}>({self.nrows}x{self.ncols})[{body}]"

    def tolist(self) -> list:
        return [list(r) for r in self.rows]

    def column(self, j: int) -> list:
        return [row[j] for row in self.rows]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    @property
    def T(self) -> "Matrix":
        return Matrix._wrap(self.field, [list(c) for c in zip(*self.rows)] if self.nrows else [[] for _ in range(self.ncols)], self.nrows)

    # -- arithmetic
    def _check(self, other):
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("dimension mismatch")
        p = self.field.p
        rows = [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        if p:
            rows = [[x % p for x in r] for r in rows]
        return Matrix._wrap(self.field, rows, self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        p = self.field.p
        if p:
            rows = [[x * c % p for x in r] for r in self.rows]
        else:
            rows = [[x * c for x in r] for r in self.rows]
        return Matrix._wrap(self.field, rows, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"dimension mismatch {self.shape} @ {other.shape}")
        p = self.field.p
        z = self.field.zero
        cols = other.ncols
        orows = other.rows
        out = []
        for row in self.rows:
            acc = [z] * cols
            for k, a in enumerate(row):
                if a == 0:
                    continue
                brow = orows[k]
                for j in range(cols):
                    b = brow[j]
                    if b != 0:
                        acc[j] += a * b
            if p:
                acc = [x % p for x in acc]
            out.append(acc)
        return Matrix._wrap(self.field, out, cols)

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product as a plain list."""
        p = self.field.p
        out = []
        for row in self.rows:
            s = self.field.zero
            for a, b in zip(row, vec):
                if a != 0 and b != 0:
                    s += a * b
            out.append(s % p if p else s)
        return out

    # -- block helpers
    def hstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.nrows != other.nrows:
            raise ValueError("dimension mismatch")
        return Matrix._wrap(self.field, [r + s for r, s in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.ncols:
            raise ValueError("dimension mismatch")
        return Matrix._wrap(self.field, list(self.rows) + list(other.rows), self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._wrap(self.field, [[self.rows[i][j] for j in cols] for i in rows], len(cols))

    # -- linear algebra
    def rank(self) -> int:
        return reduce(self).rank

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("not square")
        x = solve(self, Matrix.identity(self.field, self.nrows))
        if x is None or self.rank() != self.nrows:
            raise ZeroDivisionError("singular matrix")
        return x


def block_diag(field: FieldSpec, blocks: Sequence[Matrix]) -> Matrix:
    nrows = sum(b.nrows for b in blocks)
    ncols = sum(b.ncols for b in blocks)
    z = field.zero
    out = [[z] * ncols for _ in range(nrows)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b.rows):
            out[r0 + i][c0:c0 + b.ncols] = row
        r0 += b.nrows
        c0 += b.ncols
    return Matrix._wrap(field, out, ncols)


@dataclass(frozen=True)
class Reduction:
    rref: Matrix
    rank: int
    pivots: tuple


def reduce(m: Matrix) -> Reduction:
    """Reduced row echelon form, rank and pivot columns of ``m``."""
    rows = [list(r) for r in m.rows]
    pivots = _rref_inplace(rows, m.ncols, m.field)
    return Reduction(Matrix._wrap(m.field, rows, m.ncols), len(pivots), tuple(pivots))


def kernel(m: Matrix) -> Matrix:
    """Matrix whose columns form a basis of the null space of ``m``."""
    red = reduce(m)
    field = m.field
    pivset = set(red.pivots)
    free = [j for j in range(m.ncols) if j not in pivset]
    cols = []
    p = field.p
    for f in free:
        v = [field.zero] * m.ncols
        v[f] = field.one
        for r, pc in enumerate(red.pivots):
            x = -red.rref.rows[r][f]
            v[pc] = x % p if p else x
        cols.append(v)
    return Matrix.from_columns(field, cols, m.ncols)


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some ``x`` with ``a @ x == b``, or ``None`` when inconsistent."""
    if a.nrows != b.nrows:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    if a.field != b.field:
        raise ValueError("field mismatch")
    field = a.field
    aug = [list(r) + list(s) for r, s in zip(a.rows, b.rows)]
    pivots = _rref_inplace(aug, a.ncols + b.ncols, field)
    if any(pc >= a.ncols for pc in pivots):
        return None
    z = field.zero
    x = [[z] * b.ncols for _ in range(a.ncols)]
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][a.ncols:]
    return Matrix._wrap(field, x, b.ncols)


def rank_of_columns(field: FieldSpec, columns: Sequence[Sequence], length: int) -> int:
    if not columns:
        return 0
    return Matrix.from_columns(field, columns, length).rank()


def row_space_basis(field: FieldSpec, vectors: Sequence[Sequence], length: int) -> list:
    """Nonzero rows of the rref of ``vectors``: a canonical basis of their span."""
    if not vectors:
        return []
    rows = [list(v) for v in vectors]
    piv = _rref_inplace(rows, length, field)
    return rows[: len(piv)]


def complement_basis(field: FieldSpec, vectors: Sequence[Sequence], length: int) -> list:
    """Indices of standard basis vectors extending span(vectors) to the whole space.

    Greedy in index order, so the choice is deterministic.
    """
    rows = row_space_basis(field, vectors, length)
    red = [list(r) for r in rows]
    pivots = set()
    if red:
        pivots = set(_rref_inplace(red, length, field))
    return [j for j in range(length) if j not in pivots]


class Coordinates:
    """Fast coordinates of vectors with respect to a fixed linearly independent list.

    Picks rows where the basis is invertible and inverts once.
    """

    def __init__(self, field: FieldSpec, basis: Sequence[Sequence], length: int):
        self.field = field
        self.length = length
        self.size = len(basis)
        if self.size == 0:
            self._rows = ()
            self._inv = None
            self._basis = Matrix.zeros(field, length, 0)
            return
        bmat = Matrix.from_columns(field, basis, length)
        red = reduce(bmat.T)
        if red.rank != self.size:
            raise ValueError("basis vectors are linearly dependent")
        self._rows = red.pivots
        self._inv = bmat.submatrix(red.pivots, range(self.size)).inverse()
        self._basis = bmat

    def __call__(self, vec: Sequence, check: bool = True) -> list:
        if self.size == 0:
            if check and any(x != 0 for x in vec):
                raise ValueError("vector not in span")
            return []
        coords = self._inv.apply([vec[i] for i in self._rows])
        if check:
            back = self._basis.apply(coords)
            if any(x != y for x, y in zip(back, vec)):
                raise ValueError("vector not in span")
        return coords
