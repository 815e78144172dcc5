"""Exact scalars, dense matrices and subspaces over Q and GF(p).

Scalars over Q are :class:`fractions.Fraction`; scalars over GF(p) are plain
ints in ``[0, p)``.  Matrices and subspaces are immutable.  A subspace is
stored by its reduced row echelon basis, so two subspaces are equal exactly
when their stored bases are equal.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import kernels
from .errors import DimensionError, ParseError, RingMismatchError


class RationalField:
    characteristic = 0
    name = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (_rational_field, ())

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool) or isinstance(x, float):
            raise TypeError(f"refusing inexact or boolean scalar {x!r}")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def parse(self, text: str) -> Fraction:
        s = text.strip()
        try:
            num, _, den = s.partition("/")
            if not den:
                return Fraction(int(num))
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {text!r}") from None

    def format(self, x: Fraction) -> str:
        return str(x)

    def inv(self, x):
        return 1 / x

    def random_element(self, rng: random.Random, bound: int = 1000) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    # dense kernels; rows are sequences of Fractions

    def _scaled(self, rows):
        out = []
        for row in rows:
            den = 1
            for x in row:
                if x.denominator != 1:
                    den = den * x.denominator // math.gcd(den, x.denominator)
            out.append([int(x * den) for x in row])
        return out

    def rref(self, rows, ncols):
        ints, pivots, denom = kernels.rref_int(self._scaled(rows), ncols)
        red = [tuple(Fraction(x, denom) for x in r) for r in ints]
        return red, pivots

    def rank(self, rows, ncols):
        return kernels.rank_int(self._scaled(rows), ncols)

    def matmul(self, a, b):
        da = _common_den(a)
        db = _common_den(b)
        ia = [[int(x * da) for x in r] for r in a]
        ib = [[int(x * db) for x in r] for r in b]
        d = da * db
        return [tuple(Fraction(x, d) for x in r) for r in kernels.matmul_int(ia, ib)]


def _common_den(rows):
    den = 1
    for row in rows:
        for x in row:
            if x.denominator != 1:
                den = den * x.denominator // math.gcd(den, x.denominator)
    return den


QQ = RationalField()


def _rational_field():
    return QQ


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or p >= 2**31 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
            raise ValueError(f"GF(p) needs a prime p < 2**31, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p,))

    def coerce(self, x) -> int:
        if isinstance(x, bool) or isinstance(x, float):
            raise TypeError(f"refusing inexact or boolean scalar {x!r}")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def parse(self, text: str) -> int:
        return self.coerce(QQ.parse(text))

    def format(self, x: int) -> str:
        return str(x)

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def random_element(self, rng: random.Random, bound: int = 1000) -> int:
        return rng.randrange(self.p)

    def rref(self, rows, ncols):
        red, pivots = kernels.rref_modp(rows, ncols, self.p)
        return [tuple(r) for r in red], pivots

    def rank(self, rows, ncols):
        return kernels.rank_modp(rows, ncols, self.p)

    def matmul(self, a, b):
        return [tuple(r) for r in kernels.matmul_modp(a, b, self.p)]


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


Field = RationalField | PrimeField


def field_from_spec(spec) -> Field:
    """Field from the description-file notation: ``"Q"`` or ``{"Fp": p}``."""
    if spec in ("Q", "QQ", None):
        return QQ
    if isinstance(spec, dict) and set(spec) == {"Fp"}:
        return GF(int(spec["Fp"]))
    raise ParseError(f"unknown field {spec!r}")


def field_to_spec(field: Field):
    return "Q" if field.characteristic == 0 else {"Fp": field.p}


class Matrix:
    """Dense exact matrix.  Acts on column vectors: ``M.apply(v) = M v``."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_rank")

    def __init__(self, field: Field, rows: Iterable[Sequence], ncols: int | None = None, *, _trusted=False):
        self.field = field
        if _trusted:
            self.rows = rows
        else:
            c = field.coerce
            self.rows = tuple(tuple(c(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise DimensionError("ragged matrix rows")
            if ncols is not None and ncols != self.ncols:
                raise DimensionError("column count mismatch")
        else:
            self.ncols = ncols or 0
        self._rank = None

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        z = field.zero
        return cls(field, tuple((z,) * ncols for _ in range(nrows)), ncols, _trusted=True)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        z, o = field.zero, field.one
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n, _trusted=True)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int) -> Matrix:
        if not columns:
            return cls.zeros(field, nrows, 0)
        return cls(field, zip(*columns), len(columns))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __repr__(self):
        return f"Matrix({self.field!r}, {[list(r) for r in self.rows]!r})"

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field is other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: Matrix):
        if self.field is not other.field:
            raise RingMismatchError("matrices over different fields")

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in addition")
        f = self.field
        if f.characteristic:
            p = f.p
            rows = tuple(tuple((a + b) % p for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        else:
            rows = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return Matrix(f, rows, self.ncols, _trusted=True)

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        f = self.field
        c = f.coerce(c)
        if f.characteristic:
            p = f.p
            rows = tuple(tuple(a * c % p for a in r) for r in self.rows)
        else:
            rows = tuple(tuple(a * c for a in r) for r in self.rows)
        return Matrix(f, rows, self.ncols, _trusted=True)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        if not self.nrows or not other.ncols or not self.ncols:
            return Matrix.zeros(self.field, self.nrows, other.ncols)
        rows = tuple(self.field.matmul(self.rows, other.rows))
        return Matrix(self.field, rows, other.ncols, _trusted=True)

    def __pow__(self, k: int) -> Matrix:
        if self.nrows != self.ncols:
            raise DimensionError("power of a non-square matrix")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise DimensionError("vector length mismatch")
        f = self.field
        z = f.zero
        nz = [(j, x) for j, x in enumerate(v) if x]
        if f.characteristic:
            p = f.p
            return tuple(sum(r[j] * x for j, x in nz) % p for r in self.rows)
        return tuple(sum((r[j] * x for j, x in nz), z) for r in self.rows)

    def transpose(self) -> Matrix:
        if not self.nrows:
            return Matrix.zeros(self.field, self.ncols, 0)
        return Matrix(self.field, tuple(zip(*self.rows)), self.nrows, _trusted=True)

    T = property(transpose)

    def columns(self) -> list[tuple]:
        return list(zip(*self.rows)) if self.nrows else [() for _ in range(self.ncols)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> Matrix:
        rows = tuple(tuple(self.rows[i][j] for j in col_idx) for i in row_idx)
        return Matrix(self.field, rows, len(col_idx), _trusted=True)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def rank(self) -> int:
        if self._rank is None:
            self._rank = self.field.rank(self.rows, self.ncols) if self.nrows and self.ncols else 0
        return self._rank

    def rref(self) -> tuple[Matrix, list[int]]:
        red, pivots = _rref(self.field, self.rows, self.ncols)
        return Matrix(self.field, tuple(red), self.ncols, _trusted=True), pivots

    def kernel(self) -> Subspace:
        return kernel(self)

    def image(self) -> Subspace:
        return Subspace(self.field, self.nrows, self.columns())

    def determinant(self):
        if not self.is_square():
            raise DimensionError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return self.field.one
        if self.rank() < n:
            return self.field.zero
        # the pivot product of a Gaussian elimination
        f = self.field
        m = [list(r) for r in self.rows]
        det = f.one
        for c in range(n):
            piv = next(i for i in range(c, n) if m[i][c])
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            pv = m[c][c]
            det = det * pv
            inv = f.inv(pv)
            for i in range(c + 1, n):
                if m[i][c]:
                    g = m[i][c] * inv
                    m[i] = [a - g * b for a, b in zip(m[i], m[c])]
                    if f.characteristic:
                        m[i] = [a % f.p for a in m[i]]
        return f.coerce(det)

    def is_nilpotent(self) -> bool:
        return self.is_square() and (self ** self.nrows).is_zero()

    def hstack(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.nrows != other.nrows:
            raise DimensionError("row count mismatch in hstack")
        rows = tuple(r + s for r, s in zip(self.rows, other.rows))
        return Matrix(self.field, rows, self.ncols + other.ncols, _trusted=True)

    def vstack(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.ncols != other.ncols:
            raise DimensionError("column count mismatch in vstack")
        return Matrix(self.field, self.rows + other.rows, self.ncols, _trusted=True)


def _rref(field, rows, ncols):
    if not rows or not ncols:
        return [], []
    return field.rref(rows, ncols)


def rank(M: Matrix) -> int:
    return M.rank()


def kernel(M: Matrix) -> Subspace:
    """Right null space ``{v : M v = 0}`` in canonical form."""
    f = M.field
    red, pivots = _rref(f, M.rows, M.ncols)
    pivset = set(pivots)
    z, o = f.zero, f.one
    vecs = []
    for c in range(M.ncols):
        if c in pivset:
            continue
        v = [z] * M.ncols
        v[c] = o
        for row, pc in zip(red, pivots):
            if row[c]:
                v[pc] = f.coerce(-row[c])
        vecs.append(tuple(v))
    return Subspace(f, M.ncols, vecs)


def solve(M: Matrix, b: Sequence):
    """Some ``x`` with ``M x = b``, or ``None`` when the system is inconsistent."""
    f = M.field
    if len(b) != M.nrows:
        raise DimensionError("right-hand side length mismatch")
    aug = tuple(tuple(r) + (f.coerce(bi),) for r, bi in zip(M.rows, b))
    red, pivots = _rref(f, aug, M.ncols + 1)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = [f.zero] * M.ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[-1]
    return tuple(x)


class Subspace:
    """A linear subspace of ``field**ambient_dim`` held in reduced echelon form."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, vectors: Iterable[Sequence] = (), *, _reduced=False):
        self.field = field
        self.ambient_dim = ambient_dim
        if _reduced:
            self.basis, self.pivots = vectors
            return
        c = field.coerce
        rows = [tuple(c(x) for x in v) for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise DimensionError("vector length differs from ambient dimension")
        red, pivots = _rref(field, [r for r in rows if any(r)], ambient_dim)
        self.basis = tuple(red)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, field: Field, n: int) -> Subspace:
        return cls(field, n, ((), ()), _reduced=True)

    @classmethod
    def full(cls, field: Field, n: int) -> Subspace:
        I = Matrix.identity(field, n)
        return cls(field, n, (I.rows, tuple(range(n))), _reduced=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field is other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def _check(self, other: Subspace):
        if self.field is not other.field:
            raise RingMismatchError("subspaces over different fields")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("subspaces live in different ambient spaces")

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient_dim, _trusted=True)

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        if not other.dim:
            return self
        if not self.dim:
            return other
        return Subspace(self.field, self.ambient_dim, self.basis + other.basis)

    def span_with(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace(self.field, self.ambient_dim, self.basis + tuple(tuple(v) for v in vectors))

    def equations(self) -> Matrix:
        """A matrix whose kernel is exactly this subspace."""
        ann = kernel(self.matrix())
        return Matrix(self.field, ann.basis, self.ambient_dim, _trusted=True)

    def __and__(self, other: Subspace) -> Subspace:
        self._check(other)
        if not self.dim or not other.dim:
            return Subspace.zero(self.field, self.ambient_dim)
        if self.dim == self.ambient_dim:
            return other
        if other.dim == self.ambient_dim:
            return self
        return kernel(self.equations().vstack(other.equations()))

    intersection = __and__

    def reduce(self, v: Sequence) -> tuple:
        """Canonical representative of ``v`` modulo this subspace (zero on pivots)."""
        f = self.field
        w = [f.coerce(x) for x in v]
        for row, pc in zip(self.basis, self.pivots):
            c = w[pc]
            if c:
                w = [a - c * b for a, b in zip(w, row)]
                if f.characteristic:
                    w = [a % f.p for a in w]
        return tuple(w)

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of ``v`` in the echelon basis; ``v`` must lie in the subspace."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(self.field.coerce(v[pc]) for pc in self.pivots)

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return all(v in other for v in self.basis)

    def __ge__(self, other: Subspace) -> bool:
        return other <= self

    def image(self, M: Matrix) -> Subspace:
        if M.ncols != self.ambient_dim:
            raise DimensionError("matrix does not act on this ambient space")
        return Subspace(self.field, M.nrows, (M.apply(v) for v in self.basis))

    def preimage(self, M: Matrix) -> Subspace:
        """``{v : M v in self}``."""
        if M.nrows != self.ambient_dim:
            raise DimensionError("matrix does not map into this ambient space")
        if self.dim == self.ambient_dim:
            return Subspace.full(self.field, M.ncols)
        return kernel(self.equations() @ M)

    def quotient_dim(self, other: Subspace) -> int:
        """``dim self - dim(self & other)``; ``other`` need not be contained in self."""
        return self.dim - (self & other).dim

    def complement_basis(self, sub: Subspace) -> Subspace:
        """Vectors of self completing a basis of ``sub & self`` to one of self."""
        self._check(sub)
        inner = self & sub
        return Subspace(self.field, self.ambient_dim, (inner.reduce(v) for v in self.basis))


class SparseEchelon:
    """Incremental row echelon form over sparse rows ``{column: scalar}``.

    Rows are inserted one at a time and reduced against the stored ones;
    each stored row has leading coefficient 1 at its pivot, which is its
    smallest column.  Used to span large, very sparse ideal images.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: dict[int, dict[int, object]] = {}

    def __len__(self):
        return len(self.rows)

    def insert(self, row: dict) -> bool:
        """Add a row; return whether it was independent of the stored ones."""
        f = self.field
        p = f.characteristic
        row = {k: v for k, v in row.items() if v}
        while row:
            c = min(row)
            stored = self.rows.get(c)
            if stored is None:
                inv = f.inv(row[c])
                if p:
                    row = {k: v * inv % p for k, v in row.items()}
                else:
                    row = {k: v * inv for k, v in row.items()}
                self.rows[c] = row
                return True
            g = row[c]
            for k, v in stored.items():
                nv = row.get(k, 0) - g * v
                if p:
                    nv %= p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return False

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def normal_forms(self, free: list[int]) -> dict[int, dict[int, object]]:
        """Express every column modulo the row space through the free columns.

        Returns ``{column: {free column: coefficient}}`` for all columns.
        """
        f = self.field
        p = f.characteristic
        out: dict[int, dict[int, object]] = {c: {c: f.one} for c in free}
        for c in sorted(self.rows, reverse=True):
            acc: dict[int, object] = {}
            for k, v in self.rows[c].items():
                if k == c:
                    continue
                for fc, w in out[k].items():
                    nv = acc.get(fc, 0) - v * w
                    if p:
                        nv %= p
                    acc[fc] = nv
            out[c] = {k: v for k, v in acc.items() if v}
        return out
