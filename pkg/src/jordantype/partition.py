"""Partitions, Hilbert functions and Jordan degree types.

Pure combinatorics: nothing here touches an algebra.

A Jordan degree type (JDT) is a multiset of strings ``(p, nu)``: a string of
length ``p`` whose first bead sits in degree ``nu``.  It is stored sorted by
decreasing length and, for equal lengths, increasing initial degree.

Text forms::

    partition   "5,3,1"   "(5,3,1)"   "3^2,2^2"
    JDT         "5_0 3_1 2_1"   and the run form "3^_1..3" for 3_1 3_2 3_3
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from itertools import accumulate, zip_longest
from typing import Iterable

from .errors import HilbertFunctionMismatchError, ParseError, SizeMismatchError, UnsupportedError


class Comparison(enum.Enum):
    GREATER_EQUAL = "≥"
    LESS_EQUAL = "≤"
    EQUAL = "="
    INCOMPARABLE = "incomparable"

    def __str__(self):
        return self.value

    @property
    def ascii(self) -> str:
        return {"≥": ">=", "≤": "<=", "=": "=", "incomparable": "incomparable"}[self.value]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be non-negative")
        return super().__new__(cls, sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self):
        return f"Partition({str(self)})"

    def text(self, exponents: bool = False) -> str:
        if not exponents:
            return ",".join(map(str, self))
        out = []
        for p, m in _runs(self):
            out.append(str(p) if m == 1 else f"{p}^{m}")
        return ",".join(out)

    @classmethod
    def parse(cls, text: str) -> Partition:
        return cls(_parse_int_list(text))


def _runs(seq):
    out = []
    for x in seq:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [tuple(r) for r in out]


def conjugate(P: Iterable[int]) -> Partition:
    P = Partition(P)
    if not P:
        return Partition()
    return Partition(sum(1 for p in P if p > i) for i in range(P[0]))


def dominates(P: Iterable[int], Q: Iterable[int]) -> Comparison:
    """Compare two partitions of the same number in dominance order."""
    P, Q = Partition(P), Partition(Q)
    if P.size != Q.size:
        raise SizeMismatchError(f"{P} and {Q} partition different numbers")
    ge = le = True
    for a, b in zip(accumulate(_pad(P, Q)), accumulate(_pad(Q, P))):
        if a < b:
            ge = False
        elif a > b:
            le = False
    return _combine(ge, le)


def _pad(P, Q):
    return list(P) + [0] * max(0, len(Q) - len(P))


def _combine(ge: bool, le: bool) -> Comparison:
    if ge and le:
        return Comparison.EQUAL
    if ge:
        return Comparison.GREATER_EQUAL
    if le:
        return Comparison.LESS_EQUAL
    return Comparison.INCOMPARABLE


def is_dominated_by(P, Q) -> bool:
    """True when ``P <= Q``."""
    return dominates(P, Q) in (Comparison.LESS_EQUAL, Comparison.EQUAL)


class HilbertFunction(tuple):
    """``(h_0, ..., h_j)`` with trailing zeros removed."""

    def __new__(cls, values: Iterable[int] = ()):
        vals = [int(v) for v in values]
        if any(v < 0 for v in vals):
            raise ValueError("Hilbert function values must be non-negative")
        while vals and vals[-1] == 0:
            vals.pop()
        return super().__new__(cls, vals)

    @property
    def sperner(self) -> int:
        return max(self, default=0)

    @property
    def socle_degree(self) -> int:
        return len(self) - 1

    @property
    def total(self) -> int:
        return sum(self)

    def is_unimodal(self) -> bool:
        i = 0
        n = len(self)
        while i + 1 < n and self[i] <= self[i + 1]:
            i += 1
        while i + 1 < n and self[i] >= self[i + 1]:
            i += 1
        return i >= n - 1

    def is_symmetric(self) -> bool:
        return tuple(self) == tuple(reversed(self))

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self):
        return f"HilbertFunction({str(self)})"

    @classmethod
    def parse(cls, text: str) -> HilbertFunction:
        return cls(_parse_int_list(text))


def _parse_int_list(text: str) -> list[int]:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s.strip():
        return []
    out = []
    for item in s.split(","):
        m = re.fullmatch(r"\s*(\d+)(?:\^(\d+))?\s*", item)
        if not m:
            raise ParseError(f"bad entry {item!r} in {text!r}")
        out.extend([int(m.group(1))] * int(m.group(2) or 1))
    return out


def hf_to_partition(H: Iterable[int]) -> Partition:
    return Partition(H)


def hf_conjugate(H: Iterable[int]) -> Partition:
    return conjugate(hf_to_partition(H))


class JordanDegreeType(tuple):
    """Normalized multiset of ``(length, initial degree)`` pairs."""

    def __new__(cls, pairs: Iterable[Iterable[int]] = ()):
        norm = []
        for pair in pairs:
            p, nu = (int(x) for x in pair)
            if p < 1 or nu < 0:
                raise ValueError(f"bad string ({p},{nu})")
            norm.append((p, nu))
        norm.sort(key=lambda t: (-t[0], t[1]))
        return super().__new__(cls, norm)

    def partition(self) -> Partition:
        return Partition(p for p, _ in self)

    def hilbert_function(self) -> HilbertFunction:
        return jdt_hilbert_function(self)

    def multiplicity(self, p: int, nu: int) -> int:
        return sum(1 for s in self if s == (p, nu))

    def truncate(self, i: int) -> JordanDegreeType:
        return jdt_truncate(self, i)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"JordanDegreeType({self.text()!r})"

    def text(self, compact: bool = False) -> str:
        if not self:
            return "()"
        if not compact:
            return " ".join(f"{p}_{nu}" for p, nu in self)
        out = []
        for p, start, stop in _compact_runs(self):
            out.append(f"{p}_{start}" if start == stop else f"{p}^_{start}..{stop}")
        return " ".join(out)

    @classmethod
    def parse(cls, text: str) -> JordanDegreeType:
        s = text.strip()
        if s in ("", "()"):
            return cls()
        pairs = []
        for item in re.split(r"[\s,]+", s):
            if not item:
                continue
            m = re.fullmatch(r"(\d+)\^_(\d+)\.\.(\d+)", item)
            if m:
                p, a, b = map(int, m.groups())
                if b < a:
                    raise ParseError(f"empty run {item!r}")
                pairs.extend((p, nu) for nu in range(a, b + 1))
                continue
            m = re.fullmatch(r"(\d+)_(\d+)", item)
            if not m:
                raise ParseError(f"bad JDT entry {item!r} in {text!r}")
            pairs.append((int(m.group(1)), int(m.group(2))))
        return cls(pairs)


def _compact_runs(S):
    """Greedy split of each length class into runs of consecutive degrees."""
    runs = []
    by_len: dict[int, Counter] = {}
    for p, nu in S:
        by_len.setdefault(p, Counter())[nu] += 1
    for p in sorted(by_len, reverse=True):
        c = by_len[p]
        while c:
            start = min(c)
            stop = start
            while c.get(stop + 1):
                stop += 1
            for nu in range(start, stop + 1):
                c[nu] -= 1
                if not c[nu]:
                    del c[nu]
            runs.append((p, start, stop))
    runs.sort(key=lambda r: (-r[0], r[1], r[2]))
    return runs


def jdt_hilbert_function(S: Iterable) -> HilbertFunction:
    S = JordanDegreeType(S)
    top = max((nu + p for p, nu in S), default=0)
    h = [0] * top
    for p, nu in S:
        for i in range(nu, nu + p):
            h[i] += 1
    return HilbertFunction(h)


def jdt_truncate(S: Iterable, i: int) -> JordanDegreeType:
    if i < 0:
        raise ValueError("truncation degree must be non-negative")
    return JordanDegreeType((min(p, i + 1 - nu), nu) for p, nu in JordanDegreeType(S) if nu <= i)


def jdt_dominates(S: Iterable, T: Iterable) -> Comparison:
    S, T = JordanDegreeType(S), JordanDegreeType(T)
    HS, HT = jdt_hilbert_function(S), jdt_hilbert_function(T)
    if HS != HT:
        raise HilbertFunctionMismatchError(f"Hilbert functions differ: {HS} vs {HT}")
    ge = le = True
    for i in range(len(HS)):
        c = dominates(jdt_truncate(S, i).partition(), jdt_truncate(T, i).partition())
        if c is Comparison.INCOMPARABLE:
            return c
        if c is Comparison.GREATER_EQUAL:
            le = False
        elif c is Comparison.LESS_EQUAL:
            ge = False
    return _combine(ge, le)


def _concatenations(S: JordanDegreeType):
    items = list(S)
    seen = set()
    for a in range(len(items)):
        for b in range(len(items)):
            if a == b:
                continue
            (p, nu), (q, mu) = items[a], items[b]
            if mu == nu + p and (items[a], items[b]) not in seen:
                seen.add((items[a], items[b]))
                rest = [s for k, s in enumerate(items) if k not in (a, b)]
                yield JordanDegreeType(rest + [(p + q, nu)])


def jdt_concat_reachable(S: Iterable, T: Iterable) -> bool:
    """True when ``S`` arises from ``T`` by a sequence of concatenations."""
    S, T = JordanDegreeType(S), JordanDegreeType(T)
    if jdt_hilbert_function(S) != jdt_hilbert_function(T):
        raise HilbertFunctionMismatchError("Hilbert functions differ")
    if len(S) > len(T):
        return False
    frontier = [T]
    seen = {T}
    while frontier:
        nxt = []
        for cur in frontier:
            if cur == S:
                return True
            if len(cur) <= len(S):
                continue
            for new in _concatenations(cur):
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return False


def jdt_of_hilbert_function(H: Iterable[int]) -> JordanDegreeType:
    """Read the rows of the bar graph of ``H`` as strings."""
    H = HilbertFunction(H)
    pairs = []
    for m in range(1, H.sperner + 1):
        level = [i for i, h in enumerate(H) if h >= m]
        if level[-1] - level[0] + 1 != len(level):
            raise UnsupportedError(f"row {m} of {H} is not contiguous (H is not unimodal)")
        pairs.append((len(level), level[0]))
    return JordanDegreeType(pairs)


def jdt_symmetry_check(S: Iterable, j: int) -> bool:
    """Multiplicity of ``(p, nu)`` equals that of ``(p, j+1-nu-p)`` for all strings."""
    c = Counter(JordanDegreeType(S))
    return all(c[(p, nu)] == c.get((p, j + 1 - nu - p), 0) for p, nu in c)


def jdt_dual_reflection(S: Iterable, inverse: bool = False) -> JordanDegreeType:
    """Relabel each string by its last bead's degree (``nu + p - 1``).

    With ``inverse=True`` the map goes back from end degrees to start degrees.
    """
    step = -1 if inverse else 1
    out = []
    for p, nu in JordanDegreeType(S):
        new = nu + step * (p - 1)
        if new < 0:
            raise ValueError(f"string ({p},{nu}) cannot end before degree {p - 1}")
        out.append((p, new))
    return JordanDegreeType(out)


def sum_hilbert_functions(parts: Iterable[Iterable[int]]) -> HilbertFunction:
    return HilbertFunction(sum(col) for col in zip_longest(*parts, fillvalue=0))
