"""Symmetric decomposition of the Hilbert function of a local Gorenstein algebra.

Everything is computed from the lattice table
``T(i, b) = dim(m^i  ∩  (0 : m^b))``.  With ``j`` the socle degree,

    dim C(a)_i = T(i, j+1-a-i) - T(i+1, j+1-a-i)

and ``H(a)_i = dim C(a)_i - dim C(a+1)_i`` for ``0 <= i <= j-a``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ArtinianAlgebra, from_dual_generator
from .errors import InvariantViolation, NotGorensteinError
from .partition import HilbertFunction, sum_hilbert_functions
from .poly import Polynomial


class LatticeTable:
    """Memoized ``dim(m^i ∩ (0:m^b))``."""

    def __init__(self, A: ArtinianAlgebra):
        self.A = A
        self.cache: dict[tuple[int, int], int] = {}

    def __call__(self, i: int, b: int) -> int:
        if b <= 0:
            return 0
        if (i, b) not in self.cache:
            self.cache[i, b] = (self.A.power_ideal(i) & self.A.loewy_ideal(b)).dim
        return self.cache[i, b]


def require_gorenstein(A: ArtinianAlgebra):
    if not A.dim or not A.is_gorenstein():
        raise NotGorensteinError("the symmetric decomposition needs a Gorenstein algebra (one-dimensional socle)")


def c_filtration_dims(A: ArtinianAlgebra) -> list[tuple[int, ...]]:
    """Row ``a`` (``0 <= a <= j``) lists ``dim C(a)_i`` for ``0 <= i <= j``."""
    require_gorenstein(A)
    T = LatticeTable(A)
    j = A.socle_degree
    return [tuple(T(i, j + 1 - a - i) - T(i + 1, j + 1 - a - i) for i in range(j + 1)) for a in range(j + 1)]


@dataclass(frozen=True)
class SymmetricDecomposition:
    socle_degree: int
    components: tuple[tuple[int, ...], ...]
    c_dims: tuple[tuple[int, ...], ...]

    def component(self, a: int) -> tuple[int, ...]:
        return self.components[a]

    def nonzero(self) -> dict[int, tuple[int, ...]]:
        return {a: h for a, h in enumerate(self.components) if any(h)}

    def to_json(self) -> dict:
        return {"j": self.socle_degree, "components": [list(h) for h in self.components]}

    def text(self) -> str:
        return "\n".join(f"H({a}) = ({','.join(map(str, h))})" for a, h in enumerate(self.components))


def symmetric_decomposition(A: ArtinianAlgebra) -> SymmetricDecomposition:
    C = c_filtration_dims(A)
    j = A.socle_degree
    comps = []
    for a in range(j + 1):
        nxt = C[a + 1] if a < j else (0,) * (j + 1)
        diff = [x - y for x, y in zip(C[a], nxt)]
        if any(diff[j - a + 1 :]) or min(diff) < 0:
            raise InvariantViolation(f"component {a} has support outside 0..{j - a}: {diff}")
        comps.append(tuple(diff[: j - a + 1]))
    keep = max(j - 1, 1)
    if any(any(h) for h in comps[keep:]):
        raise InvariantViolation(f"components beyond {keep - 1} should vanish")
    comps = comps[:keep]
    if sum_hilbert_functions(comps) != A.hilbert_function:
        raise InvariantViolation("the components do not add up to the Hilbert function")
    for a, h in enumerate(comps):
        if h != h[::-1]:
            raise InvariantViolation(f"component {a} is not symmetric about {j - a}/2: {h}")
    if comps[0][0] != 1 or comps[0][j] != 1:
        raise InvariantViolation("component 0 must start and end with 1")
    return SymmetricDecomposition(j, tuple(comps), tuple(C))


def n_invariant(A: ArtinianAlgebra, i: int, b: int) -> int:
    """``dim m^i - dim(m^i ∩ (0:m^b))``."""
    if i < 0 or b < 0:
        raise ValueError("i and b must be non-negative")
    return A.power_ideal(i).dim - LatticeTable(A)(i, b)


def top_form_hilbert_function(F: Polynomial, action: str = "contraction") -> HilbertFunction:
    """Hilbert function of the graded algebra of the top-degree form of ``F``."""
    return from_dual_generator(F.leading_form(), mode="graded", action=action).hilbert_function
