"""Multivariate polynomials, the contraction and differentiation actions, parsing.

A :class:`PolyRing` carries the field and the variable names.  The same
:class:`Polynomial` type represents ring elements ``h`` and elements ``F`` of
the dual space; a dual ring prints its variables in upper case.

Monomials are exponent tuples.  Within one degree they are ordered by graded
reverse lexicographic order with ``x1 > x2 > ... > xr``; across degrees the
basis order used for truncated spaces is by increasing degree.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import prod
from typing import Mapping

from .errors import ParseError, RingMismatchError, UnsupportedCharacteristicError
from .linalg import QQ, Field

Exponent = tuple[int, ...]


def grevlex_key(e: Exponent):
    """Sort key placing larger monomials first within a fixed degree."""
    return tuple(reversed(e))


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple[Exponent, ...]:
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(sorted(out, key=grevlex_key))


@lru_cache(maxsize=None)
def monomials_below(nvars: int, n: int) -> tuple[Exponent, ...]:
    """All monomials of degree ``< n``: by degree, then grevlex descending."""
    return tuple(e for d in range(n) for e in monomials_of_degree(nvars, d))


@lru_cache(maxsize=None)
def monomial_index(nvars: int, n: int) -> dict[Exponent, int]:
    return {e: i for i, e in enumerate(monomials_below(nvars, n))}


def monomial_sort_key(e: Exponent):
    """Ascending basis order: degree first, then grevlex descending."""
    return (sum(e), grevlex_key(e))


@dataclass(frozen=True)
class PolyRing:
    field: Field
    names: tuple[str, ...]
    dual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError("repeated variable name")
        for n in self.names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", n):
                raise ValueError(f"bad variable name {n!r}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def dual_ring(self) -> PolyRing:
        if self.dual:
            return self
        return PolyRing(self.field, tuple(n.upper() for n in self.names), True)

    def primal_ring(self) -> PolyRing:
        if not self.dual:
            return self
        return PolyRing(self.field, tuple(n.lower() for n in self.names), False)

    def compatible(self, other: PolyRing) -> bool:
        return self.field is other.field and self.nvars == other.nvars

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, e: Exponent, c=1) -> Polynomial:
        return Polynomial(self, {tuple(e): c})

    def gens(self) -> list[Polynomial]:
        return [self.monomial(tuple(int(i == k) for i in range(self.nvars))) for k in range(self.nvars)]

    def gen(self, name: str) -> Polynomial:
        return self.gens()[self.names.index(name)]

    def linear_form(self, coeffs) -> Polynomial:
        if len(coeffs) != self.nvars:
            raise ValueError("need one coefficient per variable")
        return sum((c * g for c, g in zip(coeffs, self.gens())), self.zero())

    def parse(self, text: str, params: Mapping[str, object] | None = None) -> Polynomial:
        return parse(text, self, params)

    def __repr__(self):
        kind = "dual " if self.dual else ""
        return f"<{kind}PolyRing {self.field!r}[{','.join(self.names)}]>"


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponent, object] = (), *, _clean=False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            c = ring.field.coerce
            t = {}
            for e, v in dict(terms).items():
                e = tuple(e)
                if len(e) != ring.nvars or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent {e} for {ring!r}")
                v = c(v)
                if v:
                    t[e] = v
            self.terms = t
        self._hash = None

    # -- basic queries ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, e: Exponent):
        return self.terms.get(tuple(e), self.ring.field.zero)

    def monomials(self) -> list[Exponent]:
        """Support in printing order (highest degree first)."""
        return sorted(self.terms, key=lambda e: (-sum(e), grevlex_key(e)))

    def degree(self) -> int:
        """Top degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def order(self) -> int:
        """Lowest degree of a term; -1 for the zero polynomial."""
        return min((sum(e) for e in self.terms), default=-1)

    def homogeneous_degree(self) -> int | None:
        degs = {sum(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return not self.terms or self.homogeneous_degree() is not None

    def homogeneous_component(self, d: int) -> Polynomial:
        return Polynomial(self.ring, {e: v for e, v in self.terms.items() if sum(e) == d}, _clean=True)

    def leading_form(self) -> Polynomial:
        """Top-degree form."""
        return self.homogeneous_component(self.degree())

    def initial_form(self) -> Polynomial:
        """Lowest-degree form (the leading form in the local sense)."""
        return self.homogeneous_component(self.order())

    def truncate(self, n: int) -> Polynomial:
        """Drop every term of degree ``>= n``."""
        return Polynomial(self.ring, {e: v for e, v in self.terms.items() if sum(e) < n}, _clean=True)

    def evaluate(self, point):
        f = self.ring.field
        pt = [f.coerce(x) for x in point]
        if len(pt) != self.ring.nvars:
            raise ValueError("point length differs from variable count")
        total = f.zero
        for e, v in self.terms.items():
            total += v * prod((x**k for x, k in zip(pt, e)), start=f.one)
        return f.coerce(total % f.p) if f.characteristic else total

    def map_ring(self, ring: PolyRing) -> Polynomial:
        if not self.ring.compatible(ring):
            raise RingMismatchError("incompatible rings")
        return Polynomial(ring, self.terms, _clean=True)

    # -- arithmetic ------------------------------------------------------
    def _coerce_other(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{other.ring!r} vs {self.ring!r}")
            return other
        return self.ring.constant(other)

    def _norm(self, v):
        f = self.ring.field
        return v % f.p if f.characteristic else v

    def __add__(self, other) -> Polynomial:
        try:
            other = self._coerce_other(other)
        except TypeError:
            return NotImplemented
        t = dict(self.terms)
        for e, v in other.terms.items():
            s = self._norm(t.get(e, 0) + v)
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return Polynomial(self.ring, t, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {e: self._norm(-v) for e, v in self.terms.items()}, _clean=True)

    def __sub__(self, other) -> Polynomial:
        try:
            other = self._coerce_other(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            try:
                c = self.ring.field.coerce(other)
            except TypeError:
                return NotImplemented
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {e: self._norm(v * c) for e, v in self.terms.items()}, _clean=True)
        other = self._coerce_other(other)
        t: dict = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + v1 * v2
        return Polynomial(self.ring, {e: self._norm(v) for e, v in t.items() if self._norm(v)}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)


def _check_action(h: Polynomial, F: Polynomial):
    if not h.ring.compatible(F.ring):
        raise RingMismatchError("h and F must have the same field and variable count")


def contract(h: Polynomial, F: Polynomial) -> Polynomial:
    """Contraction ``h o F``: exponents subtract, no multinomial factors."""
    _check_action(h, F)
    t: dict = {}
    for a, ha in h.terms.items():
        for b, fb in F.terms.items():
            if all(x <= y for x, y in zip(a, b)):
                e = tuple(y - x for x, y in zip(a, b))
                t[e] = t.get(e, 0) + ha * fb
    return Polynomial(F.ring, t)


def _falling(n: int, k: int) -> int:
    return prod(range(n - k + 1, n + 1), start=1)


def differentiate(h: Polynomial, F: Polynomial) -> Polynomial:
    """``h(d/dX1, ..., d/dXr)`` applied to ``F``."""
    _check_action(h, F)
    p = F.ring.field.characteristic
    if p and p <= F.degree():
        raise UnsupportedCharacteristicError(
            f"differentiation needs characteristic 0 or > {F.degree()}, got {p}"
        )
    t: dict = {}
    for a, ha in h.terms.items():
        for b, fb in F.terms.items():
            if all(x <= y for x, y in zip(a, b)):
                e = tuple(y - x for x, y in zip(a, b))
                c = prod((_falling(y, x) for x, y in zip(a, b)), start=1)
                t[e] = t.get(e, 0) + ha * fb * c
    return Polynomial(F.ring, t)


ACTIONS = {"contraction": contract, "differentiation": differentiate}


# -- printing --------------------------------------------------------------

def format_monomial(e: Exponent, names) -> str:
    parts = []
    for n, k in zip(names, e):
        if k == 1:
            parts.append(n)
        elif k > 1:
            parts.append(f"{n}^{k}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    field = f.ring.field
    out = []
    for e in f.monomials():
        v = f.terms[e]
        neg = field.characteristic == 0 and v < 0
        a = -v if neg else v
        mono = format_monomial(e, f.ring.names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("id", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(3))
            toks.append((ch, ch, m.start(3)))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, ring, params):
        self.text = text
        self.ring = ring
        self.params = {k: ring.field.coerce(_as_scalar(v)) for k, v in (params or {}).items()}
        self.toks = _tokenize(text)
        self.i = 0
        self.vars = {n: g for n, g in zip(ring.names, ring.gens())}

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected {want}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.factor()
            if op == "*":
                acc = acc * rhs
            else:
                d = rhs.homogeneous_degree()
                if rhs.is_zero() or d != 0 or len(rhs.terms) != 1:
                    raise ParseError("can only divide by a nonzero scalar", self.text, pos)
                acc = acc * self.ring.field.inv(next(iter(rhs.terms.values())))
        return acc

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                raise ParseError("exponent must be a non-negative integer", self.text, tok[2])
            self.take()
            base = base ** tok[1]
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return self.ring.constant(val)
        if kind == "id":
            self.take()
            if val in self.vars:
                return self.vars[val]
            if val in self.params:
                return self.ring.constant(self.params[val])
            raise ParseError(f"unknown identifier {val!r}", self.text, pos)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", self.text, pos)


def _as_scalar(v):
    if isinstance(v, str):
        return QQ.parse(v)
    return v


def parse(text: str, ring: PolyRing, params: Mapping[str, object] | None = None) -> Polynomial:
    """Parse ``text`` into ``ring``.

    Accepts sums of products of integers, rationals ``a/b``, variables with
    ``^`` exponents and parenthesised subexpressions.  Names in ``params``
    are substituted as scalars.
    """
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    p = _Parser(text, ring, params)
    out = p.expr()
    p.take("end")
    return out


def random_polynomial(
    ring: PolyRing,
    degree: int,
    rng: random.Random,
    *,
    homogeneous: bool = True,
    min_degree: int = 0,
    density: float = 0.6,
    bound: int = 5,
) -> Polynomial:
    """A random polynomial whose top form has degree exactly ``degree``."""
    f = ring.field
    degs = [degree] if homogeneous else range(min_degree, degree + 1)
    while True:
        terms = {}
        for d in degs:
            for e in monomials_of_degree(ring.nvars, d):
                if rng.random() < density:
                    terms[e] = f.coerce(rng.randint(-bound, bound))
        poly = Polynomial(ring, terms)
        if poly.degree() == degree:
            return poly
