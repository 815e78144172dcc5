"""Artinian quotient algebras as exact multiplication matrices.

An :class:`ArtinianAlgebra` of dimension ``n`` is stored as one ``n x n``
matrix per variable; column ``c`` of ``mult[k]`` holds the coordinates of
``x_k * b_c``.  Coordinate 0 is always the unit.  When the algebra carries
monomial ``labels``, basis vector ``c`` is the class of the monomial
``labels[c]``; every constructor in this module produces such labels.

Construction never uses Groebner bases.  Everything happens in the finite
truncation ``R/m^N`` whose monomials are ordered by degree and then by
graded reverse lexicographic order.  Leading terms are taken at the lowest
degree, which is a local ordering, so the standard monomials of an ideal
form an order ideal and, counted by degree, give the Hilbert function of the
associated graded algebra.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DimensionError,
    NotAnIdealError,
    NotArtinianError,
    NotGradedError,
    NotNilpotentError,
    RingMismatchError,
    UnsupportedError,
)
from .linalg import Matrix, SparseEchelon, Subspace, kernel
from .partition import HilbertFunction
from .poly import (
    ACTIONS,
    Exponent,
    PolyRing,
    Polynomial,
    monomial_index,
    monomial_sort_key,
    monomials_below,
    monomials_of_degree,
)


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: ArtinianAlgebra, coords: Sequence):
        if len(coords) != algebra.dim:
            raise DimensionError("coordinate vector has the wrong length")
        self.algebra = algebra
        self.coords = tuple(algebra.field.coerce(c) for c in coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        f = self.algebra.field
        return AlgebraElement(self.algebra, [f.coerce(a + b) for a, b in zip(self.coords, other.coords)])

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return AlgebraElement(self.algebra, self.algebra.mult_operator(self).apply(other.coords))
        f = self.algebra.field
        c = f.coerce(other)
        return AlgebraElement(self.algebra, [f.coerce(a * c) for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def polynomial(self) -> Polynomial:
        return self.algebra.to_polynomial(self.coords)

    def __repr__(self):
        return f"AlgebraElement({self.polynomial()})"


class IdealSubspace:
    """A subspace of an algebra that is closed under multiplication."""

    __slots__ = ("algebra", "space")

    def __init__(self, algebra: ArtinianAlgebra, space: Subspace, *, check: bool = True):
        if space.ambient_dim != algebra.dim:
            raise DimensionError("subspace does not live in this algebra")
        if check:
            for M in algebra.mult:
                if not space.image(M) <= space:
                    raise NotAnIdealError("subspace is not closed under multiplication")
        self.algebra = algebra
        self.space = space

    @property
    def dim(self) -> int:
        return self.space.dim

    def __and__(self, other: IdealSubspace) -> IdealSubspace:
        return IdealSubspace(self.algebra, self.space & other.space, check=False)

    def __add__(self, other: IdealSubspace) -> IdealSubspace:
        return IdealSubspace(self.algebra, self.space + other.space, check=False)

    def __le__(self, other: IdealSubspace) -> bool:
        return self.space <= other.space

    def __eq__(self, other):
        return isinstance(other, IdealSubspace) and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"IdealSubspace(dim={self.dim})"


class ArtinianAlgebra:
    def __init__(
        self,
        ring: PolyRing,
        mult: Sequence[Matrix],
        labels: Sequence[Exponent] | None = None,
        graded: bool = False,
        *,
        check: bool = True,
    ):
        if ring.dual:
            ring = ring.primal_ring()
        if len(mult) != ring.nvars:
            raise DimensionError("need one multiplication matrix per variable")
        self.ring = ring
        self.field = ring.field
        self.mult = tuple(mult)
        self.dim = self.mult[0].nrows if self.mult else 0
        if not self.mult:
            raise DimensionError("an algebra needs at least one variable")
        self.labels = tuple(tuple(e) for e in labels) if labels is not None else None
        self.graded = graded
        self._monomial_vectors: dict[Exponent, tuple] = {}
        if self.dim:
            self._monomial_vectors[(0,) * ring.nvars] = tuple(
                self.field.one if i == 0 else self.field.zero for i in range(self.dim)
            )
        if graded and self.labels is None:
            raise NotGradedError("a graded algebra needs monomial labels")
        if check:
            self._validate()

    # -- validation ------------------------------------------------------
    def _validate(self):
        n = self.dim
        for M in self.mult:
            if M.shape != (n, n) or M.field is not self.field:
                raise DimensionError("multiplication matrices must be square over the ring's field")
        for a, Ma in enumerate(self.mult):
            if not Ma.is_nilpotent():
                raise NotNilpotentError(f"multiplication by {self.ring.names[a]} is not nilpotent")
            for Mb in self.mult[a + 1 :]:
                if Ma @ Mb != Mb @ Ma:
                    raise ValueError("multiplication matrices do not commute")
        if n and self.ideal([self.ring.one()]).dim != n:
            raise ValueError("basis vector 0 does not generate the algebra")
        if self.labels is not None:
            if len(self.labels) != n:
                raise DimensionError("one label per basis vector is required")
            for c, e in enumerate(self.labels):
                v = self.monomial_vector(e)
                if any(x for i, x in enumerate(v) if i != c) or v[c] != self.field.one:
                    raise ValueError(f"basis vector {c} is not the class of its label")
        if self.graded:
            deg = self.degrees
            for M in self.mult:
                for c in range(n):
                    for r, x in enumerate(M.rows):
                        if x[c] and deg[r] != deg[c] + 1:
                            raise NotGradedError("multiplication does not raise degree by one")

    # -- basic data ------------------------------------------------------
    def __repr__(self):
        kind = "graded" if self.graded else "local"
        return f"<ArtinianAlgebra {kind} dim={self.dim} H={self.hilbert_function}>"

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        if self.labels is None:
            raise NotGradedError("algebra has no monomial labels")
        return tuple(sum(e) for e in self.labels)

    def basis_polynomials(self) -> list[Polynomial]:
        if self.labels is None:
            raise UnsupportedError("algebra has no monomial labels")
        return [self.ring.monomial(e) for e in self.labels]

    def graded_piece(self, i: int) -> list[int]:
        """Coordinates of the degree-``i`` basis vectors (graded algebras only)."""
        self.require_graded()
        return [c for c, d in enumerate(self.degrees) if d == i]

    def require_graded(self):
        if not self.graded:
            raise NotGradedError("this operation needs a graded algebra")

    @cached_property
    def hilbert_function(self) -> HilbertFunction:
        if not self.dim:
            return HilbertFunction()
        vals = []
        i = 0
        while True:
            a = self.power_ideal(i).dim
            if a == 0:
                break
            vals.append(a - self.power_ideal(i + 1).dim)
            i += 1
        return HilbertFunction(vals)

    @property
    def socle_degree(self) -> int:
        return self.hilbert_function.socle_degree

    @property
    def sperner_number(self) -> int:
        return self.hilbert_function.sperner

    def socle(self) -> IdealSubspace:
        return self.loewy_ideal(1)

    def is_gorenstein(self) -> bool:
        return self.dim > 0 and self.socle().dim == 1

    # -- elements ----------------------------------------------------------
    def monomial_vector(self, e: Exponent) -> tuple:
        e = tuple(e)
        v = self._monomial_vectors.get(e)
        if v is not None:
            return v
        if not self.dim:
            return ()
        k = next(i for i, x in enumerate(e) if x)
        prev = list(e)
        prev[k] -= 1
        v = self.mult[k].apply(self.monomial_vector(tuple(prev)))
        self._monomial_vectors[e] = v
        return v

    def _coerce_poly(self, f) -> Polynomial:
        if isinstance(f, str):
            return self.ring.parse(f)
        if isinstance(f, Polynomial):
            if not f.ring.compatible(self.ring) or f.ring.dual:
                raise RingMismatchError("polynomial does not belong to this algebra's ring")
            return f.map_ring(self.ring) if f.ring != self.ring else f
        return self.ring.constant(f)

    def element(self, f) -> AlgebraElement:
        if isinstance(f, AlgebraElement):
            if f.algebra is not self:
                raise RingMismatchError("element of another algebra")
            return f
        f = self._coerce_poly(f)
        fld = self.field
        acc = [fld.zero] * self.dim
        for e, c in f.terms.items():
            for i, x in enumerate(self.monomial_vector(e)):
                if x:
                    acc[i] += c * x
        return AlgebraElement(self, acc)

    def to_polynomial(self, coords: Sequence) -> Polynomial:
        if self.labels is None:
            raise UnsupportedError("algebra has no monomial labels")
        return Polynomial(self.ring, {e: c for e, c in zip(self.labels, coords) if c})

    def monomial_matrix(self, e: Exponent) -> Matrix:
        cols = [self.monomial_vector(tuple(a + b for a, b in zip(e, lab))) for lab in self.labels]
        return Matrix.from_columns(self.field, cols, self.dim)

    def mult_operator(self, e) -> Matrix:
        """Matrix of multiplication by ``e`` (element, polynomial or text)."""
        if isinstance(e, AlgebraElement):
            if e.algebra is not self:
                raise RingMismatchError("element of another algebra")
            if self.labels is None:
                raise UnsupportedError("algebra has no monomial labels")
            v = e.coords
            # column b is x^{label_b} * v
            cols = []
            for lab in self.labels:
                w = v
                for k, a in enumerate(lab):
                    for _ in range(a):
                        w = self.mult[k].apply(w)
                cols.append(w)
            return Matrix.from_columns(self.field, cols, self.dim)
        f = self._coerce_poly(e)
        if self.labels is not None:
            return self.mult_operator(self.element(f))
        total = Matrix.zeros(self.field, self.dim, self.dim)
        for mono, c in f.terms.items():
            M = Matrix.identity(self.field, self.dim)
            for k, a in enumerate(mono):
                for _ in range(a):
                    M = self.mult[k] @ M
            total = total + M.scale(c)
        return total

    # -- ideals ------------------------------------------------------------
    def power_ideal(self, i: int) -> IdealSubspace:
        if i < 0:
            raise ValueError("power must be non-negative")
        cache = self.__dict__.setdefault("_powers", {})
        if i in cache:
            return cache[i]
        if i == 0:
            sub = Subspace.full(self.field, self.dim)
        else:
            prev = self.power_ideal(i - 1).space
            sub = Subspace.zero(self.field, self.dim)
            for M in self.mult:
                sub = sub + prev.image(M)
        cache[i] = IdealSubspace(self, sub, check=False)
        return cache[i]

    def loewy_ideal(self, k: int) -> IdealSubspace:
        """The annihilator ``(0 : m^k)``."""
        if k < 0:
            raise ValueError("order must be non-negative")
        cache = self.__dict__.setdefault("_loewy", {})
        if k in cache:
            return cache[k]
        if k == 0:
            sub = Subspace.zero(self.field, self.dim)
        else:
            prev = self.loewy_ideal(k - 1).space
            if prev.dim == self.dim:
                sub = prev
            else:
                eq = prev.equations()
                stacked = None
                for M in self.mult:
                    block = eq @ M
                    stacked = block if stacked is None else stacked.vstack(block)
                sub = kernel(stacked)
        cache[k] = IdealSubspace(self, sub, check=False)
        return cache[k]

    def ideal(self, generators: Iterable) -> IdealSubspace:
        """Ideal generated by the given elements."""
        vecs = [self.element(g).coords for g in generators]
        sub = Subspace(self.field, self.dim, vecs)
        while True:
            grown = sub
            for M in self.mult:
                grown = grown + sub.image(M)
            if grown == sub:
                return IdealSubspace(self, sub, check=False)
            sub = grown

    def ideal_subspace(self, space: Subspace) -> IdealSubspace:
        return IdealSubspace(self, space)

    # -- presentation -----------------------------------------------------
    def same_presentation(self, other: ArtinianAlgebra) -> bool:
        """Identical ring, basis labels and multiplication matrices."""
        return (
            self.ring == other.ring
            and self.labels == other.labels
            and all(a == b for a, b in zip(self.mult, other.mult))
        )

    def is_isomorphic_presentation(self, other: ArtinianAlgebra) -> bool:
        """Same quotient of the same polynomial ring (the defining ideals agree).

        Both algebras must be monomial-labelled.  The ideal of ``self`` is
        tested against ``other`` by checking that every relation of ``self``
        in degree at most ``j + 1`` also holds in ``other`` and the dimensions
        agree.
        """
        if self.ring != other.ring or self.dim != other.dim:
            return False
        j = max(self.socle_degree, other.socle_degree)
        mons = monomials_below(self.nvars, j + 2)
        mine = Matrix.from_columns(self.field, [self.monomial_vector(u) for u in mons], self.dim)
        theirs = Matrix.from_columns(self.field, [other.monomial_vector(u) for u in mons], other.dim)
        return kernel(mine) == kernel(theirs)

    def ideal_generators(self) -> list[Polynomial]:
        """Minimal homogeneous generators of the defining ideal (graded algebras)."""
        self.require_graded()
        j = self.socle_degree
        gens: list[Polynomial] = []
        prev_basis: list[dict] = []
        for d in range(1, j + 2):
            mons = monomials_of_degree(self.nvars, d)
            idx = {u: i for i, u in enumerate(mons)}
            M = Matrix.from_columns(self.field, [self.monomial_vector(u) for u in mons], self.dim)
            K = kernel(M)
            products = []
            for vec in prev_basis:
                for k in range(self.nvars):
                    row = [self.field.zero] * len(mons)
                    for u, c in vec.items():
                        w = list(u)
                        w[k] += 1
                        row[idx[tuple(w)]] = c
                    products.append(row)
            P = Subspace(self.field, len(mons), products)
            new = K.complement_basis(P)
            for v in new.basis:
                gens.append(Polynomial(self.ring, {u: c for u, c in zip(mons, v) if c}))
            prev_basis = [{u: c for u, c in zip(mons, v) if c} for v in K.basis]
        return gens


# -- construction ------------------------------------------------------------

def _monomial_multiple(g: Polynomial, u: Exponent, index: dict, n: int) -> dict:
    row = {}
    for e, c in g.terms.items():
        m = tuple(a + b for a, b in zip(e, u))
        if sum(m) < n:
            row[index[m]] = c
    return row


def _standard_data(ring: PolyRing, echelon: SparseEchelon, n: int):
    mons = monomials_below(ring.nvars, n)
    pivots = set(echelon.rows)
    free = [c for c in range(len(mons)) if c not in pivots]
    return mons, free


def _hf_of(mons, cols) -> HilbertFunction:
    counts: dict[int, int] = {}
    for c in cols:
        d = sum(mons[c])
        counts[d] = counts.get(d, 0) + 1
    top = max(counts, default=-1)
    return HilbertFunction(counts.get(d, 0) for d in range(top + 1))


def _assemble(ring: PolyRing, mons, free, nf: dict, n: int, graded: bool) -> ArtinianAlgebra:
    """Multiplication matrices on the standard monomials ``free``."""
    fld = ring.field
    std_pos = {c: i for i, c in enumerate(free)}
    index = monomial_index(ring.nvars, n)
    dim = len(free)
    mats = []
    for k in range(ring.nvars):
        cols = []
        for c in free:
            u = list(mons[c])
            u[k] += 1
            u = tuple(u)
            col = [fld.zero] * dim
            if sum(u) < n:
                for fc, v in nf[index[u]].items():
                    col[std_pos[fc]] = v
            cols.append(col)
        mats.append(Matrix.from_columns(fld, cols, dim) if dim else Matrix.zeros(fld, 0, 0))
    labels = [mons[c] for c in free]
    return ArtinianAlgebra(ring, mats, labels, graded)


def _truncated_ideal(ring: PolyRing, gens: list[Polynomial], n: int) -> SparseEchelon:
    index = monomial_index(ring.nvars, n)
    ech = SparseEchelon(ring.field, len(index))
    for d in range(n):
        for g in gens:
            if g.order() + d >= n:
                continue
            for u in monomials_of_degree(ring.nvars, d):
                ech.insert(_monomial_multiple(g, u, index, n))
    return ech


def from_ideal(
    generators: Iterable,
    ring: PolyRing | None = None,
    mode: str | None = None,
    n_max: int = 30,
) -> ArtinianAlgebra:
    """Quotient ``R/I`` of a polynomial ring (graded) or a local ring (local).

    ``generators`` are polynomials (or strings, in which case ``ring`` is
    required).  The ideal is spanned inside ``R/m^N`` by all monomial
    multiples of the generators; ``N`` grows until two consecutive values give
    the same Hilbert function and degree ``N-1`` is already inside the ideal.
    """
    gens = []
    for g in generators:
        if isinstance(g, str):
            if ring is None:
                raise ValueError("a ring is needed to parse text generators")
            g = ring.parse(g)
        gens.append(g)
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    if ring.dual:
        raise RingMismatchError("ideal generators must live in the polynomial ring, not its dual")
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators live in different rings")
    gens = [g for g in gens if not g.is_zero()]
    homogeneous = all(g.is_homogeneous() for g in gens)
    if mode is None:
        mode = "graded" if homogeneous else "local"
    if mode not in ("graded", "local"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "graded" and not homogeneous:
        raise NotGradedError("graded mode needs homogeneous generators")
    if any(g.order() == 0 for g in gens):
        # the ideal is the whole ring
        zero = Matrix.zeros(ring.field, 0, 0)
        return ArtinianAlgebra(ring, [zero] * ring.nvars, [], mode == "graded", check=False)

    start = max((g.degree() for g in gens), default=0) + 2
    prev = None
    for n in range(max(start, 2), n_max + 1):
        ech = _truncated_ideal(ring, gens, n)
        mons, free = _standard_data(ring, ech, n)
        hf = _hf_of(mons, free)
        if prev is not None and hf == prev and len(hf) < n:
            nf = ech.normal_forms(free)
            return _assemble(ring, mons, free, nf, n, mode == "graded")
        prev = hf
    raise NotArtinianError(f"quotient did not stabilise below N = {n_max}; is the ideal m-primary?")


def from_dual_generator(
    F: Polynomial | str,
    ring: PolyRing | None = None,
    mode: str | None = None,
    action: str = "contraction",
) -> ArtinianAlgebra:
    """``R/Ann F`` for a dual generator ``F``.

    ``action`` selects contraction (default) or differentiation.  Standard
    monomials are chosen greedily from the highest monomial down, so that the
    annihilator's leading terms are its lowest-degree terms.
    """
    if isinstance(F, str):
        if ring is None:
            raise ValueError("a ring is needed to parse a text dual generator")
        F = ring.dual_ring().parse(F)
    if F.is_zero():
        raise ValueError("the dual generator must be nonzero")
    act = ACTIONS[action]
    prim = F.ring.primal_ring()
    homogeneous = F.is_homogeneous()
    if mode is None:
        mode = "graded" if homogeneous else "local"
    if mode == "graded" and not homogeneous:
        raise NotGradedError("graded mode needs a homogeneous dual generator")
    d = F.degree()
    n = d + 1
    mons = monomials_below(prim.nvars, n)
    dual_index = monomial_index(prim.nvars, n)

    def image(u):
        return act(prim.monomial(u), F)

    def dual_row(g: Polynomial) -> dict:
        return {dual_index[e]: c for e, c in g.terms.items()}

    # greedy from the top: pivots of the reversed column order
    ech = SparseEchelon(prim.field, len(dual_index))
    std = []
    images = {}
    for c in range(len(mons) - 1, -1, -1):
        img = image(mons[c])
        if img.is_zero():
            continue
        if ech.insert(dual_row(img)):
            std.append(c)
            images[c] = img
    std.sort()
    # coordinates of each needed image (x_k * s) o F in terms of s o F
    dim = len(std)
    used_rows = sorted({r for c in std for r in dual_row(images[c])})
    row_pos = {r: i for i, r in enumerate(used_rows)}
    targets = []
    for c in std:
        for k in range(prim.nvars):
            u = list(mons[c])
            u[k] += 1
            targets.append(tuple(u))
    columns = [dual_row(images[c]) for c in std] + [dual_row(image(u)) if sum(u) < n else {} for u in targets]
    rows = [[prim.field.zero] * len(columns) for _ in used_rows]
    for j, col in enumerate(columns):
        for r, v in col.items():
            rows[row_pos[r]][j] = v
    red, pivots = Matrix(prim.field, rows, len(columns)).rref()
    if list(pivots[:dim]) != list(range(dim)) or (len(pivots) > dim):
        raise AssertionError("dual images failed to span their own multiples")
    fld = prim.field
    mats = []
    for k in range(prim.nvars):
        cols = []
        for s in range(dim):
            j = dim + s * prim.nvars + k
            cols.append([red.rows[i][j] for i in range(dim)])
        mats.append(Matrix.from_columns(fld, cols, dim))
    labels = [mons[c] for c in std]
    return ArtinianAlgebra(prim, mats, labels, mode == "graded")


def quotient_algebra(A: ArtinianAlgebra, J: IdealSubspace | Subspace) -> ArtinianAlgebra:
    """``A/J`` with a basis made of the lowest coordinates not eliminated by ``J``."""
    if isinstance(J, Subspace):
        J = IdealSubspace(A, J)
    elif J.algebra is not A:
        raise RingMismatchError("ideal belongs to another algebra")
    n = A.dim
    fld = A.field
    rev = Subspace(fld, n, [tuple(reversed(v)) for v in J.space.basis])
    piv = {n - 1 - p for p in rev.pivots}
    keep = [c for c in range(n) if c not in piv]

    def reduce(v):
        w = rev.reduce(tuple(reversed(v)))
        w = tuple(reversed(w))
        return [w[c] for c in keep]

    mats = []
    for M in A.mult:
        cols = [reduce(M.apply(_unit(fld, n, c))) for c in keep]
        mats.append(Matrix.from_columns(fld, cols, len(keep)) if keep else Matrix.zeros(fld, 0, 0))
    labels = [A.labels[c] for c in keep] if A.labels is not None else None
    graded = A.graded and _is_homogeneous_subspace(A, J.space)
    return ArtinianAlgebra(A.ring, mats, labels, graded)


def _unit(fld, n, c):
    return tuple(fld.one if i == c else fld.zero for i in range(n))


def _is_homogeneous_subspace(A: ArtinianAlgebra, S: Subspace) -> bool:
    total = 0
    for d in set(A.degrees):
        coords = A.graded_piece(d)
        piece = Subspace(A.field, A.dim, [_unit(A.field, A.dim, c) for c in coords])
        total += (S & piece).dim
    return total == S.dim


def associated_graded(A: ArtinianAlgebra) -> ArtinianAlgebra:
    """``A* = m^0/m^1 + m^1/m^2 + ...`` on monomial representatives.

    In each degree the monomials are scanned from the smallest in grevlex,
    so a graded input comes back with its own standard basis.
    """
    fld = A.field
    n = A.dim
    if not n:
        return ArtinianAlgebra(A.ring, list(A.mult), [], True, check=False)
    j = A.socle_degree
    chosen: list[Exponent] = []
    vecs: list[tuple] = []
    for i in range(j + 1):
        lower = A.power_ideal(i + 1).space
        span = lower
        picked = []
        for u in reversed(monomials_of_degree(A.nvars, i)):
            v = A.monomial_vector(u)
            if v not in span:
                span = span.span_with([v])
                picked.append(u)
        picked.sort(key=monomial_sort_key)
        chosen.extend(picked)
        vecs.extend(A.monomial_vector(u) for u in picked)
    if len(chosen) != n:
        raise AssertionError("filtration-adapted basis has the wrong size")
    T = Matrix.from_columns(fld, vecs, n)
    # coordinates in the adapted basis: solve T c = w via one elimination
    Tinv = _inverse(T)
    deg = [sum(u) for u in chosen]
    mats = []
    for M in A.mult:
        C = Tinv @ M @ T
        rows = [
            [C.rows[r][c] if deg[r] == deg[c] + 1 else fld.zero for c in range(n)]
            for r in range(n)
        ]
        mats.append(Matrix(fld, rows, n))
    return ArtinianAlgebra(A.ring, mats, chosen, True)


def _inverse(T: Matrix) -> Matrix:
    n = T.nrows
    aug = T.hstack(Matrix.identity(T.field, n))
    red, pivots = aug.rref()
    if list(pivots) != list(range(n)):
        raise AssertionError("matrix is singular")
    return red.submatrix(range(n), range(n, 2 * n))


def zero_algebra(ring: PolyRing) -> ArtinianAlgebra:
    z = Matrix.zeros(ring.field, 0, 0)
    return ArtinianAlgebra(ring, [z] * ring.nvars, [], True, check=False)


def from_description(desc: dict, params: dict | None = None) -> ArtinianAlgebra:
    """Build an algebra from the JSON description format."""
    from .linalg import field_from_spec

    fld = field_from_spec(desc.get("field", "Q"))
    names = desc.get("vars")
    if not names:
        raise ValueError("description needs a non-empty 'vars' list")
    ring = PolyRing(fld, tuple(names))
    merged = dict(desc.get("params", {}))
    merged.update(params or {})
    mode = desc.get("mode")
    action = desc.get("action", "contraction")
    if "dual" in desc and "ideal" in desc:
        raise ValueError("description has both 'dual' and 'ideal'")
    if "dual" in desc:
        F = ring.dual_ring().parse(desc["dual"], merged)
        return from_dual_generator(F, mode=mode, action=action)
    if "ideal" in desc:
        gens = [ring.parse(g, merged) for g in desc["ideal"]]
        return from_ideal(gens, ring, mode=mode, n_max=int(desc.get("n_max", 30)))
    raise ValueError("description needs 'dual' or 'ideal'")
