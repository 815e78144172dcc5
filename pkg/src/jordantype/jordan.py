"""Jordan type and its refinements for multiplication maps on Artinian algebras.

The Jordan type of a nilpotent operator ``L`` on an ``n``-dimensional space
is read off the ranks of its powers: with ``delta_i = rank L^(i-1) - rank L^i``
the partition is the conjugate of ``(delta_1, delta_2, ...)``.  The Weyr route
(kernel dimensions of ``L^i`` computed as iterated preimages) is kept as an
independent oracle.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import AlgebraElement, ArtinianAlgebra, quotient_algebra
from .errors import (
    AmbiguousGenericError,
    InvariantViolation,
    NotGradedError,
    NotNilpotentError,
    UnsupportedError,
)
from .linalg import Matrix, Subspace, solve
from .partition import (
    Comparison,
    JordanDegreeType,
    Partition,
    conjugate,
    dominates,
    hf_conjugate,
    jdt_symmetry_check,
)
from .poly import Polynomial, monomials_of_degree

DEFAULT_SEED = 20240607


# -- operators -----------------------------------------------------------------

def _powers_until_zero(L: Matrix) -> list[Matrix]:
    """``[L^0, L^1, ..., L^k]`` with ``L^k = 0``; raises if ``L`` is not nilpotent."""
    n = L.nrows
    pows = [Matrix.identity(L.field, n)]
    while not pows[-1].is_zero():
        if len(pows) > n:
            raise NotNilpotentError("multiplication operator is not nilpotent")
        pows.append(pows[-1] @ L)
    return pows


def jordan_type_of_operator(L: Matrix) -> Partition:
    """Rank-difference route."""
    ranks = [P.rank() for P in _powers_until_zero(L)]
    deltas = [a - b for a, b in zip(ranks, ranks[1:])]
    return conjugate(deltas)


def weyr_jordan_type(L: Matrix) -> Partition:
    """Kernel-filtration route: ``ker L^i`` as the preimage of ``ker L^(i-1)``."""
    n = L.nrows
    if n and not (L ** n).is_zero():
        raise NotNilpotentError("multiplication operator is not nilpotent")
    K = Subspace.zero(L.field, n)
    weyr = []
    while K.dim < n:
        nxt = K.preimage(L)
        weyr.append(nxt.dim - K.dim)
        K = nxt
    return conjugate(weyr)


def _operator(A: ArtinianAlgebra, ell) -> Matrix:
    if isinstance(ell, Matrix):
        return ell
    return A.mult_operator(ell)


def _ell_polynomial(A: ArtinianAlgebra, ell) -> Polynomial:
    if isinstance(ell, AlgebraElement):
        return ell.polynomial()
    return A._coerce_poly(ell)


def jordan_type(A: ArtinianAlgebra, ell) -> Partition:
    """Jordan type of multiplication by ``ell`` on ``A``."""
    if not A.dim:
        return Partition()
    return jordan_type_of_operator(_operator(A, ell))


# -- string bases ----------------------------------------------------------------

@dataclass
class JordanString:
    generator: tuple
    length: int
    beads: list[tuple] = field(default_factory=list)
    degree: int | None = None


@dataclass
class JordanStringBasis:
    algebra: ArtinianAlgebra
    operator: Matrix
    strings: list[JordanString]
    full: bool

    def lengths(self) -> Partition:
        return Partition(s.length for s in self.strings)

    def beads(self) -> list[tuple]:
        return [b for s in self.strings for b in s.beads]

    def is_basis(self) -> bool:
        beads = self.beads()
        return len(beads) == self.algebra.dim and Subspace(self.algebra.field, self.algebra.dim, beads).dim == len(beads)

    def is_jordan(self) -> bool:
        L = self.operator
        return all(not any(L.apply(s.beads[-1])) for s in self.strings)

    def generators(self) -> list[Polynomial]:
        return [self.algebra.to_polynomial(s.generator) for s in self.strings]


def _string_beads(L: Matrix, z: tuple, p: int) -> list[tuple]:
    beads = [z]
    for _ in range(p - 1):
        beads.append(L.apply(beads[-1]))
    return beads


def jordan_string_basis(A: ArtinianAlgebra, ell, full: bool = False) -> JordanStringBasis:
    """A pre-Jordan (``full=False``) or Jordan basis of ``A`` for ``ell``.

    Generators are picked among the basis vectors of ``A`` in basis order,
    longest strings first.  For ``full=True`` each generator ``z_k`` is then
    corrected by beads of longer strings so that ``ell^(p_k) z_k = 0``.
    """
    L = _operator(A, ell)
    n = A.dim
    fld = A.field
    if not n:
        return JordanStringBasis(A, L, [], full)
    pows = _powers_until_zero(L)
    top = len(pows) - 1
    units = [tuple(fld.one if i == c else fld.zero for i in range(n)) for c in range(n)]
    chosen: list[tuple[int, tuple]] = []  # (length, generator)
    for a in range(top - 1, -1, -1):
        U = pows[a + 1].image() + Subspace(fld, n, [pows[a].apply(z) for _, z in chosen])
        for e in units:
            v = pows[a].apply(e)
            if v not in U:
                chosen.append((a + 1, e))
                U = U.span_with([v])
    strings = [JordanString(z, p, _string_beads(L, z, p)) for p, z in chosen]
    if full:
        strings = _correct(L, strings)
    if A.graded:
        for s in strings:
            s.degree = _vector_degree(A, s.generator)
    return JordanStringBasis(A, L, strings, full)


def _correct(L: Matrix, strings: list[JordanString]) -> list[JordanString]:
    fld = L.field
    done: list[JordanString] = []
    for s in strings:
        p = s.length
        target = L.apply(s.beads[-1])
        z = s.generator
        if any(target):
            # columns: l^a z_i for earlier strings with a >= p
            cols, meta = [], []
            for i, t in enumerate(done):
                for a in range(p, t.length):
                    cols.append(t.beads[a])
                    meta.append((i, a))
            M = Matrix.from_columns(fld, cols, L.nrows)
            c = solve(M, target)
            if c is None:
                raise InvariantViolation("string correction failed: target outside the deeper beads")
            z = list(z)
            for coef, (i, a) in zip(c, meta):
                if coef:
                    shift = done[i].beads[a - p]
                    z = [fld.coerce(x - coef * y) for x, y in zip(z, shift)]
            z = tuple(z)
        done.append(JordanString(z, p, _string_beads(L, z, p)))
    return done


def _vector_degree(A: ArtinianAlgebra, v) -> int:
    degs = {A.degrees[c] for c, x in enumerate(v) if x}
    if len(degs) != 1:
        raise InvariantViolation("string generator is not homogeneous")
    return degs.pop()


# -- generic Jordan type ---------------------------------------------------------

def random_element_coefficients(A: ArtinianAlgebra, rng: random.Random, bound: int = 10**6) -> list:
    fld = A.field
    return [fld.coerce(rng.randint(-bound, bound)) if fld.characteristic == 0 else rng.randrange(1, fld.p) for _ in range(A.nvars)]


def sample_generic_elements(
    A: ArtinianAlgebra,
    trials: int = 8,
    seed: int = DEFAULT_SEED,
    quadratic_tail: bool = False,
) -> list[Polynomial]:
    """Seeded random elements of ``m``: linear forms, optionally plus a quadratic tail.

    Trial ``t`` draws from its own stream seeded by ``(seed, t)``, so the
    samples do not depend on how many trials are requested.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    out = []
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        ell = A.ring.linear_form(random_element_coefficients(A, rng))
        if quadratic_tail and not A.graded:
            for u in monomials_of_degree(A.nvars, 2):
                ell = ell + A.ring.monomial(u, random_element_coefficients(A, rng)[0])
        out.append(ell)
    return out


def _dominance_max(types: Sequence[Partition]) -> Partition:
    distinct = list(dict.fromkeys(types))
    tops = [P for P in distinct if all(dominates(P, Q) in (Comparison.GREATER_EQUAL, Comparison.EQUAL) for Q in distinct)]
    if len(tops) != 1:
        maximal = [
            P for P in distinct
            if not any(dominates(Q, P) is Comparison.GREATER_EQUAL for Q in distinct if Q != P)
        ]
        raise AmbiguousGenericError(
            "sampled Jordan types have no dominance maximum: " + ", ".join(map(str, maximal)),
            maximal,
        )
    return tops[0]


def generic_element(A: ArtinianAlgebra, trials: int = 8, seed: int = DEFAULT_SEED, quadratic_tail: bool = False) -> Polynomial:
    """The first sampled element that attains the generic Jordan type."""
    ells = sample_generic_elements(A, trials, seed, quadratic_tail)
    types = [jordan_type(A, e) for e in ells]
    best = _dominance_max(types)
    return ells[types.index(best)]


def generic_jordan_type(A: ArtinianAlgebra, trials: int = 8, seed: int = DEFAULT_SEED, quadratic_tail: bool = False) -> Partition:
    if not A.dim:
        return Partition()
    ells = sample_generic_elements(A, trials, seed, quadratic_tail)
    return _dominance_max([jordan_type(A, e) for e in ells])


# -- Lefschetz properties ----------------------------------------------------------

def _require_linear(A: ArtinianAlgebra, ell) -> Polynomial:
    A.require_graded()
    f = _ell_polynomial(A, ell)
    if not f.is_zero() and f.homogeneous_degree() != 1:
        raise UnsupportedError("this needs a linear form (homogeneous of degree 1)")
    return f


def graded_rank(A: ArtinianAlgebra, L: Matrix, source: int, target: int) -> int:
    """Rank of the block of ``L`` from ``A_source`` to ``A_target``."""
    rows = A.graded_piece(target)
    cols = A.graded_piece(source)
    if not rows or not cols:
        return 0
    return L.submatrix(rows, cols).rank()


def is_strong_lefschetz(A: ArtinianAlgebra, ell) -> bool:
    _require_linear(A, ell)
    return jordan_type(A, ell) == hf_conjugate(A.hilbert_function)


def is_weak_lefschetz(A: ArtinianAlgebra, ell) -> bool:
    """Maximal rank of every ``x ell: A_i -> A_(i+1)``.

    For unimodal Hilbert functions the answer is cross-checked against the
    number of Jordan blocks, which must then equal the Sperner number.
    """
    _require_linear(A, ell)
    L = _operator(A, ell)
    H = A.hilbert_function
    wl = all(graded_rank(A, L, i, i + 1) == min(H[i], H[i + 1]) for i in range(len(H) - 1))
    if H.is_unimodal():
        by_parts = len(jordan_type(A, L)) == H.sperner
        if by_parts != wl:
            raise InvariantViolation("weak Lefschetz rank test disagrees with the Jordan type part count")
    return wl


# -- Jordan degree type ----------------------------------------------------------

class _RankTable:
    def __init__(self, A: ArtinianAlgebra, L: Matrix):
        self.A = A
        self.H = A.hilbert_function
        self.pows = [Matrix.identity(A.field, A.dim), L]
        self.cache: dict[tuple[int, int], int] = {}

    def __call__(self, e: int, a: int) -> int:
        """rank of ``ell^e : A_a -> A_(a+e)``."""
        j = len(self.H) - 1
        if a < 0 or a > j or a + e > j or e < 0:
            return 0
        if e == 0:
            return self.H[a]
        key = (e, a)
        if key not in self.cache:
            while len(self.pows) <= e:
                self.pows.append(self.pows[-1] @ self.pows[1])
            self.cache[key] = graded_rank(self.A, self.pows[e], a, a + e)
        return self.cache[key]


def jordan_degree_type(A: ArtinianAlgebra, ell) -> JordanDegreeType:
    """JDT from the ranks of the graded pieces of powers of ``ell``."""
    _require_linear(A, ell)
    L = _operator(A, ell)
    r = _RankTable(A, L)
    j = A.socle_degree
    pairs = []
    for p in range(1, j + 2):
        for nu in range(0, j + 2 - p):
            eta = r(p - 1, nu) - (r(p, nu - 1) + r(p, nu) - r(p + 1, nu - 1))
            if eta < 0:
                raise InvariantViolation(f"negative string count at ({p},{nu})")
            pairs.extend([(p, nu)] * eta)
    S = JordanDegreeType(pairs)
    if sum(p for p, _ in S) != A.dim:
        raise InvariantViolation("string lengths do not add up to the dimension")
    return S


def jdt_from_strings(A: ArtinianAlgebra, ell) -> JordanDegreeType:
    """JDT read off a homogeneous Jordan basis (independent of the rank formula)."""
    _require_linear(A, ell)
    basis = jordan_string_basis(A, ell, full=True)
    return JordanDegreeType((s.length, s.degree) for s in basis.strings)


# -- sequential invariants -----------------------------------------------------

def _quotient_type(A: ArtinianAlgebra, ell_poly: Polynomial, J) -> Partition:
    Q = quotient_algebra(A, J)
    if not Q.dim:
        return Partition()
    return jordan_type(Q, ell_poly)


def sjt(A: ArtinianAlgebra, ell) -> list[Partition]:
    """Jordan types on ``A/m^i`` for ``i = 1, ..., j+1``; the last is the full type."""
    f = _ell_polynomial(A, ell)
    return [_quotient_type(A, f, A.power_ideal(i)) for i in range(1, A.socle_degree + 2)]


def lsjt(A: ArtinianAlgebra, ell) -> list[Partition]:
    """Jordan types on ``A/(0:m^(j-k))`` for ``k = 0, ..., j``; the last is the full type."""
    f = _ell_polynomial(A, ell)
    j = A.socle_degree
    return [_quotient_type(A, f, A.loewy_ideal(j - k)) for k in range(0, j + 1)]


@dataclass
class DSJTTable:
    j: int
    entries: dict[tuple[int, int], Partition]
    corner: Partition

    def row(self, a: int) -> list[Partition]:
        return [self.entries[(a, i)] for i in range(0, self.j + 2 - a)]

    def column(self, i: int) -> list[Partition]:
        return [self.entries[(a, i)] for a in range(0, self.j + 1) if (a, i) in self.entries]

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "entries": [[a, i, list(P)] for (a, i), P in sorted(self.entries.items())],
            "corner": list(self.corner),
        }

    def text(self) -> str:
        lines = [f"j = {self.j}"]
        for a in range(self.j + 1):
            cells = [str(P) if P else "()" for P in self.row(a)]
            lines.append(f"a={a}: " + " ".join(cells))
        lines.append(f"corner: {self.corner}")
        return "\n".join(lines)


def dsjt(A: ArtinianAlgebra, ell) -> DSJTTable:
    f = _ell_polynomial(A, ell)
    j = A.socle_degree
    entries = {}
    for a in range(0, j + 1):
        for i in range(0, j + 2 - a):
            J = A.power_ideal(i) & A.loewy_ideal(j + 1 - a - i)
            entries[(a, i)] = _quotient_type(A, f, J)
    return DSJTTable(j, entries, jordan_type(A, f))


def jdt_from_sequential(seq: Sequence[Sequence[int]]) -> JordanDegreeType:
    """Rebuild a JDT from the Jordan types of the truncations ``A/m^(i+1)``.

    ``seq[i]`` is the partition of the strings cut off above degree ``i``.
    From ``seq[i-1]`` to ``seq[i]`` every open string either grows by one
    bead or closes, and new strings of length one may start.  A string
    started in degree ``s`` that grows shows up as a part ``i-s+1``; one that
    closes leaves a part ``i-s``, which collides only with growing strings
    started in degree ``s+1``.  Solving from the oldest start upwards fixes
    every count.
    """
    closed: list[tuple[int, int]] = []
    alive: dict[int, int] = {}  # start degree -> number of open strings
    for i, P in enumerate(seq):
        residual = Counter(Partition(P))
        for p, _ in closed:
            residual[p] -= 1
        grow: dict[int, int] = {}
        for s in sorted(alive):
            closing_prev = alive[s - 1] - grow[s - 1] if s - 1 in alive else 0
            grow[s] = residual[i - s + 1] - closing_prev
            if not 0 <= grow[s] <= alive[s]:
                raise InvariantViolation("sequence is not a chain of truncations")
        closing_last = alive[i - 1] - grow[i - 1] if i - 1 in alive else 0
        new = residual[1] - closing_last
        if new < 0:
            raise InvariantViolation("sequence is not a chain of truncations")
        expected = Counter()
        for s, cnt in alive.items():
            expected[i - s + 1] += grow[s]
            expected[i - s] += cnt - grow[s]
            closed.extend([(i - s, s)] * (cnt - grow[s]))
        expected[1] += new
        if +expected != +residual:
            raise InvariantViolation("sequence is not a chain of truncations")
        alive = {s: g for s, g in grow.items() if g}
        if new:
            alive[i] = new
    last = len(seq) - 1
    for s, cnt in alive.items():
        closed.extend([(last - s + 1, s)] * cnt)
    return JordanDegreeType(closed)


# -- consistency reports -------------------------------------------------------

@dataclass
class CheckReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append((name, bool(ok), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[str]:
        return [f"{n}: {d}" for n, ok, d in self.checks if not ok]

    def text(self) -> str:
        return "\n".join(f"{'PASS' if ok else 'FAIL'} {n}" + (f" ({d})" if d and not ok else "") for n, ok, d in self.checks)


def _ge(P, Q) -> bool:
    return dominates(P, Q) in (Comparison.GREATER_EQUAL, Comparison.EQUAL)


def dominance_refinement_check(A: ArtinianAlgebra, ell) -> CheckReport:
    """Consistency between JT, SJT, LSJT and the DSJT table."""
    rep = CheckReport()
    f = _ell_polynomial(A, ell)
    P = jordan_type(A, f)
    if not A.dim:
        rep.add("empty algebra", P == Partition())
        return rep
    j = A.socle_degree
    table = dsjt(A, f)
    S = sjt(A, f)
    LS = lsjt(A, f)
    rep.add("corner is the Jordan type", table.corner == P)
    rep.add("row a=0 is the SJT", [table.entries[(0, i)] for i in range(1, j + 2)] == S)
    rep.add("column i=0 is the LSJT", [table.entries[(a, 0)] for a in range(1, j + 1)] + [P] == LS)
    rep.add("a+i=j+1 entries equal the corner", all(table.entries[(a, j + 1 - a)] == P for a in range(j + 1)))
    if A.is_gorenstein() and j >= 1:
        diag = {table.entries[(a, j - a)] for a in range(j + 1)}
        rep.add("a+i=j diagonal constant (Gorenstein)", len(diag) == 1, str(diag))
    sizes_ok = all(
        entry.size == A.dim - (A.power_ideal(i) & A.loewy_ideal(j + 1 - a - i)).dim
        for (a, i), entry in table.entries.items()
    )
    rep.add("entry sizes match quotient dimensions", sizes_ok)
    # A dominates the union of the Jordan types of J and A/J for every ideal J
    dom_ok = True
    for (a, i), entry in table.entries.items():
        J = A.power_ideal(i) & A.loewy_ideal(j + 1 - a - i)
        sub = _restricted_type(A, f, J.space)
        if not _ge(P, Partition(tuple(entry) + tuple(sub))):
            dom_ok = False
    rep.add("Jordan type dominates every sub/quotient splitting", dom_ok)
    return rep


def _restricted_type(A: ArtinianAlgebra, f: Polynomial, J: Subspace) -> Partition:
    """Jordan type of ``f`` restricted to the ideal ``J``."""
    if not J.dim:
        return Partition()
    L = A.mult_operator(f)
    cols = [J.coordinates(L.apply(v)) for v in J.basis]
    return jordan_type_of_operator(Matrix.from_columns(A.field, cols, J.dim))


def local_dominates_associated_graded(A: ArtinianAlgebra, ell) -> tuple[Partition, Partition, bool]:
    """Compare ``P_(ell, A)`` with ``P_(ell*, A*)`` for the initial form ``ell*``."""
    from .algebra import associated_graded

    f = _ell_polynomial(A, ell)
    G = associated_graded(A)
    P = jordan_type(A, f)
    Q = jordan_type(G, f.initial_form())
    return P, Q, _ge(P, Q)


def jdt_symmetry_holds(A: ArtinianAlgebra, ell) -> bool:
    return jdt_symmetry_check(jordan_degree_type(A, ell), A.socle_degree)


def require_graded(A: ArtinianAlgebra):
    if not A.graded:
        raise NotGradedError("this operation needs a graded algebra")
