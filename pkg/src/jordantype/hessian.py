"""Higher and mixed Hessians of a homogeneous dual generator.

All Hessians use the differentiation action.  Row and column bases are the
monomial labels of the graded pieces of ``R/Ann F`` as built by
:func:`jordantype.algebra.from_dual_generator`.

For ``F`` of degree ``j`` and a linear form ``ell`` with coefficient vector
``P``, the pairing ``(alpha, beta) -> alpha * beta * ell^(u-k) o F`` on
``A_k x A_(j-u)`` has the same rank as ``ell^(u-k): A_k -> A_u``; since
``ell^e o G = e! * G(P)`` for ``G`` of degree ``e``, that pairing is the
mixed Hessian of order ``(k, j-u)`` evaluated at ``P``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import ArtinianAlgebra, from_dual_generator
from .errors import DimensionError, InvariantViolation, NotGradedError, UnsupportedError
from .jordan import DEFAULT_SEED, graded_rank, jordan_type
from .linalg import Matrix
from .partition import HilbertFunction, Partition, hf_conjugate
from .poly import Polynomial, differentiate

SYMBOLIC_LIMIT = 8


@lru_cache(maxsize=64)
def hessian_algebra(F: Polynomial) -> ArtinianAlgebra:
    """Graded ``R/Ann F`` under differentiation, the source of Hessian bases."""
    if not F.ring.dual:
        raise UnsupportedError("a dual generator lives in the divided-power (uppercase) ring")
    if not F.is_homogeneous():
        raise NotGradedError("Hessians need a homogeneous dual generator")
    return from_dual_generator(F, mode="graded", action="differentiation")


@dataclass(frozen=True)
class HessianMatrix:
    F: Polynomial
    order: tuple[int, int]
    row_basis: tuple
    column_basis: tuple
    entries: tuple[tuple[Polynomial, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_basis), len(self.column_basis)

    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def is_symmetric(self) -> bool:
        n, m = self.shape
        return n == m and all(self.entries[a][b] == self.entries[b][a] for a in range(n) for b in range(a))

    def evaluate(self, point) -> Matrix:
        fld = self.F.ring.field
        pt = [fld.coerce(c) for c in point]
        if len(pt) != self.F.ring.nvars:
            raise DimensionError(f"point needs {self.F.ring.nvars} coordinates")
        return Matrix(fld, [[e.evaluate(pt) for e in row] for row in self.entries], self.shape[1])

    def determinant(self) -> Polynomial:
        """Symbolic determinant by expansion over column subsets (no division)."""
        if not self.is_square():
            raise DimensionError("determinant of a non-square Hessian")
        return polynomial_determinant(self.entries, self.F.ring)

    def to_json(self) -> dict:
        names = self.F.ring.primal_ring()
        return {
            "order": list(self.order),
            "rows": [str(names.monomial(e)) for e in self.row_basis],
            "columns": [str(names.monomial(e)) for e in self.column_basis],
            "entries": [[str(e) for e in row] for row in self.entries],
        }

    def text(self) -> str:
        data = self.to_json()
        lines = [f"order {tuple(self.order)}; rows {', '.join(data['rows'])}; columns {', '.join(data['columns'])}"]
        lines += ["[" + ", ".join(row) + "]" for row in data["entries"]]
        return "\n".join(lines)


def polynomial_determinant(entries, ring) -> Polynomial:
    n = len(entries)
    if n == 0:
        return ring.one()
    # level[S] = determinant of the first |S| rows restricted to columns S
    level = {0: ring.one()}
    for r in range(n):
        nxt: dict[int, Polynomial] = {}
        for S, d in level.items():
            if d.is_zero():
                continue
            above = 0
            for c in range(n - 1, -1, -1):
                if S >> c & 1:
                    above += 1
                    continue
                e = entries[r][c]
                if e.is_zero():
                    continue
                term = d * e
                if above % 2:
                    term = -term
                key = S | 1 << c
                nxt[key] = nxt[key] + term if key in nxt else term
        level = nxt
    return level.get((1 << n) - 1, ring.zero())


@lru_cache(maxsize=512)
def mixed_hessian(F: Polynomial, k: int, u: int) -> HessianMatrix:
    """Matrix of ``(alpha_a * beta_b) o F`` over bases of ``A_k`` and ``A_u``."""
    A = hessian_algebra(F)
    j = A.socle_degree
    if not (0 <= k <= j and 0 <= u <= j):
        raise DimensionError(f"Hessian order ({k},{u}) is outside 0..{j}")
    prim = A.ring
    rows = tuple(A.labels[c] for c in A.graded_piece(k))
    cols = tuple(A.labels[c] for c in A.graded_piece(u))
    entries = tuple(
        tuple(differentiate(prim.monomial(tuple(x + y for x, y in zip(a, b))), F) for b in cols)
        for a in rows
    )
    return HessianMatrix(F, (k, u), rows, cols, entries)


def hessian(F: Polynomial, k: int) -> HessianMatrix:
    return mixed_hessian(F, k, k)


def hessian_rank_at(Hm: HessianMatrix, point) -> int:
    return Hm.evaluate(point).rank()


@dataclass(frozen=True)
class RankTheoremReport:
    k: int
    u: int
    point: tuple
    hessian_rank: int
    multiplication_rank: int

    @property
    def passed(self) -> bool:
        return self.hessian_rank == self.multiplication_rank

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "u": self.u,
            "hessian_rank": self.hessian_rank,
            "multiplication_rank": self.multiplication_rank,
            "passed": self.passed,
        }


def rank_theorem_check(F: Polynomial, k: int, u: int, ell) -> RankTheoremReport:
    """Compare ``rank ell^(u-k): A_k -> A_u`` with the evaluated mixed Hessian."""
    A = hessian_algebra(F)
    j = A.socle_degree
    if not 0 <= k <= u <= j:
        raise DimensionError(f"need 0 <= k <= u <= {j}, got k={k}, u={u}")
    point = tuple(A.field.coerce(c) for c in ell)
    if len(point) != A.nvars:
        raise DimensionError(f"linear form needs {A.nvars} coefficients")
    hrank = hessian_rank_at(mixed_hessian(F, k, j - u), point)
    L = A.mult_operator(A.ring.linear_form(point))
    mrank = graded_rank(A, L ** (u - k), k, u)
    return RankTheoremReport(k, u, point, hrank, mrank)


def rank_theorem_table(F: Polynomial, ell) -> list[RankTheoremReport]:
    j = hessian_algebra(F).socle_degree
    return [rank_theorem_check(F, k, u, ell) for k in range(j + 1) for u in range(k, j + 1)]


@dataclass
class SLPCertificate:
    is_slp: bool | None
    witness: tuple | None
    vanishing_orders: list[int] = field(default_factory=list)
    undetermined_orders: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "is_slp": self.is_slp,
            "witness": None if self.witness is None else [str(c) for c in self.witness],
            "vanishing_orders": self.vanishing_orders,
            "undetermined_orders": self.undetermined_orders,
        }

    def text(self) -> str:
        if self.is_slp:
            return "SLP: yes" + (f", witness ({','.join(map(str, self.witness))})" if self.witness else "")
        if self.is_slp is False:
            return "SLP: no, det Hess^k vanishes identically for k in " + ",".join(map(str, self.vanishing_orders))
        return "SLP: undetermined (no witness found; determinants too large to expand for k in " + ",".join(
            map(str, self.undetermined_orders)
        ) + ")"


def slp_certificate(F: Polynomial, trials: int = 16, seed: int = DEFAULT_SEED) -> SLPCertificate:
    """Search for a point where every ``det Hess^k``, ``k <= j/2``, is nonzero.

    The all-ones point is tried first, then ``trials`` seeded random points.
    Without a witness, ``is_slp`` is false only when some determinant is the
    zero polynomial; otherwise it stays ``None``.
    """
    A = hessian_algebra(F)
    j = A.socle_degree
    fld = A.field
    hessians = [hessian(F, k) for k in range(j // 2 + 1)]
    rng = random.Random(f"slp:{seed}")
    candidates = [tuple(fld.one for _ in range(A.nvars))]
    candidates += [tuple(fld.random_element(rng, 50) for _ in range(A.nvars)) for _ in range(trials)]
    for pt in candidates:
        if all(hessian_rank_at(Hm, pt) == Hm.shape[0] for Hm in hessians):
            P = jordan_type(A, A.ring.linear_form(pt))
            if P != hf_conjugate(A.hilbert_function):
                raise InvariantViolation(f"nonvanishing Hessians at {pt} but Jordan type {P}")
            return SLPCertificate(True, pt)
    vanishing, undetermined = [], []
    for k, Hm in enumerate(hessians):
        if Hm.shape[0] > SYMBOLIC_LIMIT:
            undetermined.append(k)
        elif Hm.determinant().is_zero():
            vanishing.append(k)
    if vanishing:
        return SLPCertificate(False, None, vanishing, undetermined)
    return SLPCertificate(None, None, [], undetermined)


def _cod2_shape(H) -> tuple[int, int]:
    H = HilbertFunction(H)
    d = H.sperner
    k = H.count(d)
    expected = tuple(range(1, d)) + (d,) * k + tuple(range(d - 1, 0, -1))
    if d < 2 or tuple(H) != expected:
        raise UnsupportedError(f"{H} is not of the shape (1,2,...,d^k,...,2,1) with d >= 2")
    return d, k


def compositions(n: int):
    """Ordered partitions of ``n`` into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def cod2_jordan_types(H) -> list[Partition]:
    """Jordan types of linear forms on codimension-two complete intersections with this H."""
    d, k = _cod2_shape(H)
    size = sum(HilbertFunction(H))
    top = d if k > 1 else d - 1
    out = []
    for n in range(top + 1):
        for comp in compositions(n):
            parts = []
            before = 0
            for ni in comp:
                parts += [k - 1 + 2 * d - ni - 2 * before] * ni
                before += ni
            parts += [d - n] * (d - n + k - 1)
            P = Partition(parts)
            if P.size != size:
                raise InvariantViolation(f"{P} does not partition {size}")
            out.append(P)
    if len(set(out)) != len(out):
        raise InvariantViolation("the enumeration produced a repeated partition")
    if hf_conjugate(H) not in out:
        raise InvariantViolation("the strong Lefschetz type is missing from the enumeration")
    return sorted(out, reverse=True)
