"""Simplicial complexes: Stanley-Reisner ideals, skeletons, the face-sum
(universal) sop, the d!*e Cohen-Macaulay test and skeleton-based depth.

``e`` is always read off combinatorially as the number of top-dimensional
facets, never from a Hilbert series; agreement of the two is a test elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .exceptions import InputFormatError, PipelineInvariantError
from .field import PrimeField
from .groebner import FieldPolynomial, buchberger, quotient_length
from .ideal import MonomialIdeal, minimalize, zero_ideal
from .monomial import Monomial


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet list on vertex set 1..n; no facet contains another."""

    n: int
    facets: tuple

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def d(self) -> int:
        """dim + 1: the number of sop elements and the Krull dimension."""
        return self.dim + 1

    def faces_of_size(self, k: int) -> list:
        if k == 0:
            return [frozenset()]
        out = set()
        for facet in self.facets:
            out.update(frozenset(c) for c in combinations(sorted(facet), k))
        return sorted(out, key=sorted)

    def all_faces(self) -> list:
        """Every face including the empty one."""
        out = {frozenset()}
        for facet in self.facets:
            items = sorted(facet)
            for k in range(1, len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return sorted(out, key=lambda f: (len(f), sorted(f)))

    def contains_face(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(face <= facet for facet in self.facets)

    @property
    def used_vertices(self) -> frozenset:
        out: set = set()
        for facet in self.facets:
            out.update(facet)
        return frozenset(out)

    def __repr__(self) -> str:
        shown = [sorted(f) for f in self.facets]
        return f"SimplicialComplex(n={self.n}, facets={shown})"


def from_facets(n: int, facets: Sequence[Iterable[int]]) -> SimplicialComplex:
    """Keep inclusion-maximal faces; the void complex (no facets) is rejected."""
    if n < 0:
        raise InputFormatError("vertex count must be non-negative")
    raw = []
    for facet in facets:
        fset = frozenset(int(v) for v in facet)
        if any(v < 1 or v > n for v in fset):
            raise InputFormatError(f"facet {sorted(fset)} outside vertex range 1..{n}")
        raw.append(fset)
    if not raw:
        raise InputFormatError("empty facet list: the void complex is out of scope")
    maximal = [f for f in set(raw) if not any(f < g for g in raw)]
    return SimplicialComplex(n, tuple(sorted(maximal, key=lambda f: (len(f), sorted(f)))))


def stanley_reisner_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal of the minimal non-faces (sizes 1..d+1)."""
    n = complex_.n
    nonfaces: list = []
    is_face_cache = {frozenset(): True}

    def is_face(face: frozenset) -> bool:
        got = is_face_cache.get(face)
        if got is None:
            got = complex_.contains_face(face)
            is_face_cache[face] = got
        return got

    for size in range(1, complex_.d + 2):
        for combo in combinations(range(1, n + 1), size):
            face = frozenset(combo)
            if is_face(face):
                continue
            if all(is_face(face - {v}) for v in combo):
                nonfaces.append(Monomial(tuple(1 if i + 1 in face else 0 for i in range(n))))
    if not nonfaces:
        return zero_ideal(n)
    return minimalize(nonfaces, n)


def skeleton(complex_: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by all faces with exactly ``i`` vertices."""
    if not 1 <= i <= complex_.d:
        raise InputFormatError(f"skeleton index {i} outside 1..{complex_.d}")
    return from_facets(complex_.n, complex_.faces_of_size(i))


def downward_skeleton(complex_: SimplicialComplex, i: int) -> SimplicialComplex:
    """All faces with at most ``i`` vertices (smaller facets survive).

    On pure complexes this equals :func:`skeleton`; the depth formula needs
    this version, since dropping the small facets of a non-pure complex can
    turn a skeleton Cohen-Macaulay without raising the depth.
    """
    if not 1 <= i <= complex_.d:
        raise InputFormatError(f"skeleton index {i} outside 1..{complex_.d}")
    faces = complex_.faces_of_size(i) + [f for f in complex_.facets if len(f) < i]
    return from_facets(complex_.n, faces)


def top_facet_count(complex_: SimplicialComplex) -> int:
    """Number of facets of maximum size; this is the multiplicity e."""
    top = complex_.d
    return sum(1 for f in complex_.facets if len(f) == top)


def universal_sop(complex_: SimplicialComplex, field: PrimeField) -> list:
    """Face-sum forms: the i-th sums the squarefree monomials of all
    i-vertex faces, for i = 1..d.  They always cut the quotient to dimension 0."""
    if complex_.d < 1:
        raise InputFormatError("universal sop needs a complex with at least one vertex")
    n = complex_.n
    sop = []
    for i in range(1, complex_.d + 1):
        terms = {}
        for face in complex_.faces_of_size(i):
            terms[Monomial(tuple(1 if v + 1 in face else 0 for v in range(n)))] = 1
        sop.append(FieldPolynomial(n, field, terms))
    return sop


@dataclass(frozen=True)
class CmReport:
    """Outcome of the length-versus-d!e Cohen-Macaulay test."""

    dimension_d: int
    top_facet_count: int
    degree_product: int
    length: int
    verdict: bool
    field_char: int

    def to_json(self) -> dict:
        return {
            "d": self.dimension_d,
            "e": self.top_facet_count,
            "degree_product": self.degree_product,
            "length": self.length,
            "cm": self.verdict,
            "p": self.field_char,
        }


def cm_test_universal(complex_: SimplicialComplex, field: PrimeField) -> CmReport:
    """K[complex] is Cohen-Macaulay iff the artinian quotient by the face-sum
    sop has length exactly d! * e."""
    sop = universal_sop(complex_, field)
    ideal = stanley_reisner_ideal(complex_)
    gens = [FieldPolynomial.from_monomial(g, field) for g in ideal.gens]
    gb = buchberger(gens + sop)
    length = quotient_length(gb)
    if length is math.inf:
        raise PipelineInvariantError("face-sum sop failed to cut dimension to zero")
    d = complex_.d
    e = top_facet_count(complex_)
    bound = math.factorial(d) * e
    if length < bound:
        raise PipelineInvariantError(f"length {length} below the multiplicity bound {bound}")
    return CmReport(d, e, math.factorial(d), int(length), length == bound, field.p)


def skeleton_cm_profile(complex_: SimplicialComplex, field: PrimeField) -> list:
    """CM verdicts for every downward skeleton, top dimension first."""
    return [
        (i, cm_test_universal(downward_skeleton(complex_, i), field))
        for i in range(complex_.d, 0, -1)
    ]


def depth_via_skeletons(complex_: SimplicialComplex, field: PrimeField) -> int:
    """Largest i whose i-skeleton is Cohen-Macaulay (the skeleton depth
    formula); equals d exactly when the complex itself is Cohen-Macaulay."""
    for i in range(complex_.d, 0, -1):
        if cm_test_universal(downward_skeleton(complex_, i), field).verdict:
            return i
    raise PipelineInvariantError("the 1-skeleton must test Cohen-Macaulay")


def chessboard_complex(n: int) -> SimplicialComplex:
    """Non-attacking rook placements on the n x n board.

    Cell (row, col) is vertex (row-1)*n + col; facets are the n! permutations.
    """
    if n < 1:
        raise InputFormatError("board size must be >= 1")
    facets = []
    for perm in permutations(range(1, n + 1)):
        facets.append(frozenset((r - 1) * n + perm[r - 1] for r in range(1, n + 1)))
    return from_facets(n * n, facets)


def independence_complex(n: int, edges: Sequence) -> SimplicialComplex:
    """Faces are the independent vertex sets of the graph."""
    from . import bitsets

    neighbors = [0] * n
    for a, b in edges:
        neighbors[a - 1] |= 1 << (b - 1)
        neighbors[b - 1] |= 1 << (a - 1)
    masks = bitsets.maximal_independent_sets(neighbors)
    facets = [[i + 1 for i in bitsets.iter_bits(mask)] for mask in masks]
    return from_facets(n, facets)


def parse_facet_lines(lines: Sequence[str], n: int | None = None) -> SimplicialComplex:
    """One facet per line: whitespace-separated 1-based vertex indices."""
    facets = []
    for line in lines:
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            facets.append([int(tok) for tok in body.split()])
        except ValueError as exc:
            raise InputFormatError(f"bad facet line {body!r}") from exc
    if not facets:
        raise InputFormatError("no facets in input")
    size = max((max(f) for f in facets if f), default=0)
    if n is None:
        n = size
    return from_facets(n, facets)


def format_facet_lines(complex_: SimplicialComplex) -> str:
    return "\n".join(" ".join(str(v) for v in sorted(f)) for f in complex_.facets) + "\n"
