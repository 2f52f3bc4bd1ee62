"""Buchberger's algorithm over GF(p) in graded reverse-lexicographic order.

Monomials are packed into integers, one byte per variable with the last
variable in the most significant byte, so that within a degree the packed
value is *anti*-monotone with the revlex order: products are integer
additions and divisibility is a two-operation guard-bit test.

Pair handling follows Gebauer-Moeller (coprime and chain criteria), the
selection strategy is normal (minimal lcm degree, ties by generator index).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from heapq import heappop, heappush
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .exceptions import InputFormatError, PipelineInvariantError, ZeroIdealError
from .field import PrimeField
from .hilbert import hilbert_series
from .ideal import MonomialIdeal, minimalize
from .monomial import Monomial, format_monomial

ORDER_TAG = "graded reverse lexicographic"

_MAX_PACKED_EXPONENT = 100


def degrevlex_max_key(m: Monomial):
    return (m.degree, tuple(-e for e in reversed(m.exps)))


class FieldPolynomial:
    """Sparse polynomial over a prime field; no zero coefficients stored."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: PrimeField, terms: dict):
        cleaned = {}
        for m, c in terms.items():
            if m.n != n:
                raise InputFormatError(f"monomial in {m.n} variables inside ambient {n}")
            c %= field.p
            if c:
                cleaned[m] = c
        self.n = n
        self.field = field
        self.terms = cleaned

    @classmethod
    def zero(cls, n: int, field: PrimeField) -> "FieldPolynomial":
        return cls(n, field, {})

    @classmethod
    def from_monomial(cls, m: Monomial, field: PrimeField, coeff: int = 1) -> "FieldPolynomial":
        return cls(m.n, field, {m: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_homogeneous(self) -> bool:
        degrees = {m.degree for m in self.terms}
        return len(degrees) <= 1

    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=-1)

    @property
    def leading_monomial(self) -> Monomial:
        if self.is_zero:
            raise ZeroIdealError("zero polynomial has no leading monomial")
        return max(self.terms, key=degrevlex_max_key)

    @property
    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial]

    def monic(self) -> "FieldPolynomial":
        if self.is_zero:
            return self
        inv = self.field.inv(self.leading_coefficient)
        return FieldPolynomial(self.n, self.field, {m: c * inv for m, c in self.terms.items()})

    def scale(self, c: int) -> "FieldPolynomial":
        return FieldPolynomial(self.n, self.field, {m: v * c for m, v in self.terms.items()})

    def __add__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        self._check_compatible(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return FieldPolynomial(self.n, self.field, out)

    def __sub__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        return self + other.scale(self.field.p - 1)

    def __mul__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        self._check_compatible(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return FieldPolynomial(self.n, self.field, out)

    def _check_compatible(self, other: "FieldPolynomial"):
        if self.n != other.n or self.field.p != other.field.p:
            raise InputFormatError("polynomials live in different rings")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldPolynomial)
            and self.n == other.n
            and self.field.p == other.field.p
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"FieldPolynomial({format_polynomial(self)!r} mod {self.field.p})"


def format_polynomial(f: FieldPolynomial) -> str:
    if f.is_zero:
        return "0"
    parts = []
    for m in sorted(f.terms, key=degrevlex_max_key, reverse=True):
        c = f.terms[m]
        if m.is_one:
            parts.append(str(c))
        elif c == 1:
            parts.append(format_monomial(m))
        else:
            parts.append(f"{c}*{format_monomial(m)}")
    return " + ".join(parts)


_TERM_COEFF = re.compile(r"^(\d+)\s*\*?\s*(.*)$")


def parse_polynomial(text: str, n: int, field: PrimeField) -> FieldPolynomial:
    """Parse `[coeff*]x<i>[^e] [x<j>[^e] ...]` terms joined by + and -."""
    body = text.split("#", 1)[0].strip()
    if not body:
        raise InputFormatError("empty polynomial")
    pieces = body.replace("-", "+-").split("+")
    terms: dict = {}
    seen_any = False
    for piece in pieces:
        piece = piece.strip()
        if not piece:
            continue
        seen_any = True
        sign = 1
        if piece.startswith("-"):
            sign = -1
            piece = piece[1:].strip()
        coeff = 1
        match = _TERM_COEFF.match(piece)
        if match:
            coeff = int(match.group(1))
            piece = match.group(2).strip()
        if piece:
            from .monomial import parse_monomial

            mono = parse_monomial(piece, n)
        else:
            mono = Monomial.one(n)
        terms[mono] = terms.get(mono, 0) + sign * coeff
    if not seen_any:
        raise InputFormatError(f"no terms in polynomial {text!r}")
    return FieldPolynomial(n, field, terms)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, pairwise tail-irreducible, sorted."""

    n: int
    field: PrimeField
    basis: tuple
    order: str = ORDER_TAG

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


class _Ring:
    """Packed-monomial kernel for one (n, p) pair."""

    __slots__ = ("n", "p", "guard")

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.guard = sum(0x80 << (8 * i) for i in range(n))

    def pack(self, m: Monomial) -> int:
        packed = 0
        for i, e in enumerate(m.exps):
            if e > _MAX_PACKED_EXPONENT:
                raise InputFormatError(f"exponent {e} too large for the packed kernel")
            packed |= e << (8 * i)
        return packed

    def unpack(self, packed: int) -> Monomial:
        return Monomial(packed.to_bytes(self.n, "little"))

    def deg(self, packed: int) -> int:
        return sum(packed.to_bytes(self.n, "little"))

    def divides(self, g: int, m: int) -> bool:
        return ((m | self.guard) - g) & self.guard == self.guard

    def lcm(self, a: int, b: int) -> int:
        t = (a | self.guard) - b
        fields = ((t & self.guard) >> 7) * 0x7F
        return b + (t & fields)


class _Entry:
    """One basis element: packed lead + tail triples (mono, deg, coeff)."""

    __slots__ = ("lm", "lmdeg", "tail")

    def __init__(self, lm: int, lmdeg: int, tail: tuple):
        self.lm = lm
        self.lmdeg = lmdeg
        self.tail = tail

    @property
    def is_monomial(self) -> bool:
        return not self.tail


class _Reducer:
    """Full normal-form reduction against a growing entry list.

    Resolved reducer lookups are cached; negative answers are flushed
    whenever the basis grows.
    """

    __slots__ = ("ring", "mono_entries", "poly_entries", "pos_cache", "neg_cache")

    def __init__(self, ring: _Ring):
        self.ring = ring
        self.mono_entries: list = []
        self.poly_entries: list = []
        self.pos_cache: dict = {}
        self.neg_cache: set = set()

    def add(self, entry: _Entry):
        if entry.is_monomial:
            self.mono_entries.append(entry)
        else:
            self.poly_entries.append(entry)
        self.neg_cache = set()

    def find(self, m: int):
        entry = self.pos_cache.get(m)
        if entry is not None:
            return entry
        if m in self.neg_cache:
            return None
        divides = self.ring.divides
        for entry in self.mono_entries:
            if divides(entry.lm, m):
                self.pos_cache[m] = entry
                return entry
        for entry in self.poly_entries:
            if divides(entry.lm, m):
                self.pos_cache[m] = entry
                return entry
        self.neg_cache.add(m)
        return None

    def reduce(self, items: Iterable[tuple]) -> list:
        """Normal form of sum(c * mono); returns triples sorted lead-first."""
        p = self.ring.p
        work: dict = {}
        degs: dict = {}
        heap: list = []
        for m, d, c in items:
            if m in work:
                work[m] = (work[m] + c) % p
            else:
                work[m] = c % p
                degs[m] = d
                heappush(heap, (-d, m))
        out: list = []
        while heap:
            negd, m = heappop(heap)
            c = work.pop(m, 0)
            if c == 0:
                continue
            entry = self.find(m)
            if entry is None:
                out.append((m, -negd, c))
                continue
            if not entry.tail:
                continue
            q = m - entry.lm
            qdeg = -negd - entry.lmdeg
            for tm, td, tc in entry.tail:
                mm = tm + q
                prev = work.get(mm)
                if prev is None:
                    work[mm] = (-c * tc) % p
                    degs[mm] = td + qdeg
                    heappush(heap, (-(td + qdeg), mm))
                else:
                    work[mm] = (prev - c * tc) % p
        return out


def _to_items(ring: _Ring, f: FieldPolynomial) -> list:
    return [(ring.pack(m), m.degree, c) for m, c in f.terms.items()]


def _make_entry(ring: _Ring, triples: list) -> _Entry:
    """Monic entry from reduced triples (already sorted lead-first)."""
    lm, lmdeg, lc = triples[0]
    p = ring.p
    if lc != 1:
        inv = pow(lc, p - 2, p)
        triples = [(m, d, c * inv % p) for m, d, c in triples]
    return _Entry(lm, lmdeg, tuple(triples[1:]))


class _PairQueue:
    """Gebauer-Moeller managed S-pair queue with normal selection."""

    def __init__(self, ring: _Ring):
        self.ring = ring
        self.pairs: dict = {}
        self.heap: list = []

    def add_element(self, entries: list, t: int):
        ring = self.ring
        lm_t = entries[t].lm
        # chain criterion against surviving old pairs
        for (i, j) in list(self.pairs):
            lcm_ij = self.pairs[(i, j)]
            if (
                ring.divides(lm_t, lcm_ij)
                and ring.lcm(entries[i].lm, lm_t) != lcm_ij
                and ring.lcm(entries[j].lm, lm_t) != lcm_ij
            ):
                del self.pairs[(i, j)]
        new = []
        for i in range(t):
            new.append((ring.lcm(entries[i].lm, lm_t), i))
        # M criterion: drop pairs whose lcm is a proper multiple of another new lcm
        keep = []
        for lcm_i, i in new:
            dominated = False
            for lcm_j, j in new:
                if j == i:
                    continue
                if lcm_j == lcm_i:
                    if j < i:
                        dominated = True  # F criterion: first index wins
                        break
                elif ring.divides(lcm_j, lcm_i):
                    dominated = True
                    break
            if not dominated:
                keep.append((lcm_i, i))
        for lcm_i, i in keep:
            # coprime criterion
            if lcm_i == entries[i].lm + lm_t:
                continue
            self.pairs[(i, t)] = lcm_i
            heappush(self.heap, (self.ring.deg(lcm_i), i, t))

    def pop(self):
        while self.heap:
            deg, i, j = heappop(self.heap)
            lcm_ij = self.pairs.pop((i, j), None)
            if lcm_ij is not None:
                return i, j, lcm_ij
        return None


def _spoly_items(ring: _Ring, e1: _Entry, e2: _Entry, lcm_val: int) -> list:
    lcm_deg = ring.deg(lcm_val)
    q1, q1deg = lcm_val - e1.lm, lcm_deg - e1.lmdeg
    q2, q2deg = lcm_val - e2.lm, lcm_deg - e2.lmdeg
    items = [(tm + q1, td + q1deg, tc) for tm, td, tc in e1.tail]
    items.extend((tm + q2, td + q2deg, -tc) for tm, td, tc in e2.tail)
    return items


def buchberger(gens: Sequence[FieldPolynomial]) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if not gens:
        raise ZeroIdealError("empty generator list")
    n, fld = gens[0].n, gens[0].field
    for g in gens:
        if g.n != n or g.field.p != fld.p:
            raise InputFormatError("mixed ambient rings in generator list")
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ZeroIdealError("all generators are zero")

    ring = _Ring(n, fld.p)
    reducer = _Reducer(ring)
    entries: list = []
    queue = _PairQueue(ring)

    def incorporate(triples: list):
        entry = _make_entry(ring, triples)
        entries.append(entry)
        queue.add_element(entries, len(entries) - 1)
        reducer.add(entry)

    for g in gens:
        reduced = reducer.reduce(_to_items(ring, g))
        if reduced:
            incorporate(reduced)
    while True:
        popped = queue.pop()
        if popped is None:
            break
        i, j, lcm_val = popped
        if entries[i].is_monomial and entries[j].is_monomial:
            continue
        reduced = reducer.reduce(_spoly_items(ring, entries[i], entries[j], lcm_val))
        if reduced:
            incorporate(reduced)

    basis = _reduce_basis(ring, entries)
    polys = tuple(_entry_to_poly(ring, fld, e) for e in basis)
    gb = GroebnerBasis(n, fld, polys)
    for g in gens:
        if not normal_form(g, list(polys)).is_zero:
            raise PipelineInvariantError("input generator does not reduce to zero")
    return gb


def _reduce_basis(ring: _Ring, entries: list) -> list:
    """Minimal lead monomials, then full tail reduction: the reduced basis."""
    ordered = sorted(entries, key=lambda e: (e.lmdeg, e.lm))
    minimal: list = []
    for e in ordered:
        if not any(ring.divides(kept.lm, e.lm) for kept in minimal):
            minimal.append(e)
    final = []
    for idx, e in enumerate(minimal):
        other = _Reducer(ring)
        for k, o in enumerate(minimal):
            if k != idx:
                other.add(o)
        items = [(e.lm, e.lmdeg, 1)] + list(e.tail)
        reduced = other.reduce(items)
        if not reduced or reduced[0][0] != e.lm:
            raise PipelineInvariantError("minimal basis element lost its lead in tail reduction")
        final.append(_make_entry(ring, reduced))
    return final


def _entry_to_poly(ring: _Ring, fld: PrimeField, e: _Entry) -> FieldPolynomial:
    terms = {ring.unpack(e.lm): 1}
    for tm, _td, tc in e.tail:
        terms[ring.unpack(tm)] = tc
    return FieldPolynomial(ring.n, fld, terms)


def normal_form(f: FieldPolynomial, basis: Sequence[FieldPolynomial]) -> FieldPolynomial:
    """Remainder of multivariate division: no term divisible by any lead of
    ``basis``.  The reducer is the first matching element in list order."""
    basis = list(basis)
    if not basis:
        return f
    n, fld = f.n, f.field
    for g in basis:
        if g.n != n or g.field.p != fld.p:
            raise InputFormatError("mixed ambient rings between polynomial and basis")
    ring = _Ring(n, fld.p)
    reducer = _Reducer(ring)
    for g in basis:
        if g.is_zero:
            continue
        triples = sorted(_to_items(ring, g), key=lambda item: (-item[1], item[0]))
        # everything goes in one list so the first divisor in *list order* wins
        reducer.poly_entries.append(_make_entry(ring, triples))
    reduced = reducer.reduce(_to_items(ring, f))
    terms = {ring.unpack(m): c for m, _d, c in reduced}
    return FieldPolynomial(n, fld, terms)


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    """Leading monomials of the reduced basis, minimalized."""
    return minimalize([g.leading_monomial for g in gb.basis], gb.n)


def quotient_length(gb: GroebnerBasis):
    """Vector-space dimension of the quotient, or math.inf when not artinian."""
    ring = _Ring(gb.n, gb.field.p)
    lms = [ring.pack(g.leading_monomial) for g in gb.basis]
    for i in range(gb.n):
        field_mask = 0xFF << (8 * i)
        if not any(lm and lm & ~field_mask == 0 for lm in lms):
            return math.inf
    seen = {0}
    stack = [0]
    steps = [1 << (8 * i) for i in range(gb.n)]
    while stack:
        m = stack.pop()
        for step in steps:
            m2 = m + step
            if m2 in seen:
                continue
            if any(ring.divides(lm, m2) for lm in lms):
                continue
            seen.add(m2)
            stack.append(m2)
    return len(seen)


def _graded_dimension(gens: Sequence[FieldPolynomial], k: int) -> int:
    """dim_K (S/I)_k by linear algebra on the degree-k span of the input."""
    import numpy as np

    from .linalg import rank_mod_p

    n, p = gens[0].n, gens[0].field.p
    monos_k = list(combinations_with_replacement(range(n), k))
    index = {}
    for combo in monos_k:
        exps = [0] * n
        for v in combo:
            exps[v] += 1
        index[tuple(exps)] = len(index)
    rows = []
    for g in gens:
        dg = g.degree
        if dg > k:
            continue
        for combo in combinations_with_replacement(range(n), k - dg):
            exps = [0] * n
            for v in combo:
                exps[v] += 1
            row = [0] * len(index)
            for m, c in g.terms.items():
                shifted = tuple(a + b for a, b in zip(m.exps, exps))
                row[index[shifted]] = c
            rows.append(row)
    if not rows:
        return len(index)
    rank = rank_mod_p(np.array(rows, dtype=np.int64), p)
    return len(index) - rank


def hilbert_consistency(gens: Sequence[FieldPolynomial], bound: int = 8) -> bool:
    """Macaulay cross-check: the Hilbert function of the initial ideal must
    match direct graded dimension counts up to ``bound``."""
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ZeroIdealError("all generators are zero")
    if not all(g.is_homogeneous for g in gens):
        raise InputFormatError("hilbert_consistency needs homogeneous generators")
    gb = buchberger(gens)
    hs = hilbert_series(initial_ideal(gb))
    expected = hs.coefficients(bound)
    numerator_degree = len(hs.numerator) - 1
    for k in range(bound + 1):
        direct = _graded_dimension(gens, k)
        if direct != expected[k]:
            return False
        if hs.pole_order == 0 and k >= numerator_degree:
            break  # artinian quotient: all higher degrees vanish
    return True
