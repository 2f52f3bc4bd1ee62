"""Monomial ideals: minimal generators, height, monomial grade, variable
identification, standard monomials, socle and polarization.

Height is the minimum transversal of the generator supports, the monomial
grade the largest pairwise support-disjoint generator subset; both are
computed by exact branch-and-bound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import bitsets
from .exceptions import (
    InconsistentIdentificationError,
    NonArtinianIdealError,
    UnitIdealError,
    ZeroIdealError,
)
from .monomial import Monomial, extend_to, format_monomial, monomials_sorted


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its unique minimal generating set.

    Build through :func:`minimalize`; the constructor trusts its input.
    """

    n: int
    gens: tuple

    @property
    def mu(self) -> int:
        """Number of minimal generators."""
        return len(self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @property
    def is_artinian(self) -> bool:
        """True when every ambient variable has a pure power among the generators."""
        pure = {g.support[0] for g in self.gens if g.is_pure_power}
        return len(pure) == self.n

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def max_exponent(self, i: int) -> int:
        return max((g.exponent(i) for g in self.gens), default=0)

    def __repr__(self) -> str:
        inner = ", ".join(format_monomial(g) for g in self.gens)
        return f"MonomialIdeal(n={self.n}, ({inner}))"


def minimalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Divisibility-reduce a generating set; rejects the unit ideal."""
    gens = [extend_to(g, n) for g in gens]
    if any(g.n != n for g in gens):
        raise ZeroIdealError(f"generator ambient mismatch with n={n}")
    if any(g.is_one for g in gens):
        raise UnitIdealError("1 among the generators: unit ideal")
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=Monomial.sort_key):
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return MonomialIdeal(n, monomials_sorted(kept))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def _require_proper_nonzero(ideal: MonomialIdeal):
    if ideal.is_zero:
        raise ZeroIdealError("operation undefined for the zero ideal")


def height(ideal: MonomialIdeal) -> int:
    """Minimum size of a variable set meeting every generator support."""
    _require_proper_nonzero(ideal)
    return bitsets.min_transversal_size([g.support_mask for g in ideal.gens])


def mgrade(ideal: MonomialIdeal) -> int:
    """Maximum size of a pairwise support-disjoint subset of the generators.

    Monomials form a regular sequence exactly when their supports are
    disjoint, and a maximal monomial regular sequence may be taken inside
    the minimal generating set.
    """
    _require_proper_nonzero(ideal)
    masks = [g.support_mask for g in ideal.gens]
    conflict = [0] * len(masks)
    for i, mi in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if mi & masks[j]:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    return bitsets.max_independent_set_size(conflict)


def koenig_type(ideal: MonomialIdeal) -> bool:
    """True when mgrade equals height."""
    return mgrade(ideal) == height(ideal)


def krull_dimension(ideal: MonomialIdeal) -> int:
    """dim S/I = n - height(I); the zero ideal has dimension n."""
    if ideal.is_zero:
        return ideal.n
    return ideal.n - height(ideal)


@dataclass(frozen=True)
class IdentificationSop:
    """Ordered difference forms x_i - x_j, stored as index pairs (i, j)."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple((int(i), int(j)) for i, j in self.pairs)
        if any(i == j for i, j in pairs):
            raise InconsistentIdentificationError("identification pair with i == j")
        if any(i < 1 or j < 1 for i, j in pairs):
            raise InconsistentIdentificationError("variable indices are 1-based")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def matching_pairs(self) -> tuple:
        """The pairs that merged two previously untouched variables.

        Replaying the construction order, these form a matching; for the
        sops built from graphs it is a maximum matching.
        """
        touched: set[int] = set()
        matched = []
        for i, j in self.pairs:
            if i not in touched and j not in touched:
                matched.append((i, j))
            touched.update((i, j))
        return tuple(matched)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        if ri > rj:
            ri, rj = rj, ri
        self.parent[rj] = ri  # representative = lowest index
        return True


@dataclass(frozen=True)
class IdentifiedIdeal:
    """Image of a monomial ideal under variable identifications.

    ``ideal`` keeps the original ambient (only representative variables
    occur); ``compact`` renames the representatives to x1..xm.
    """

    ideal: MonomialIdeal
    representatives: tuple
    rep_map: tuple  # rep_map[i-1] = representative of x_i
    compact: MonomialIdeal

    @property
    def effective_count(self) -> int:
        return len(self.representatives)


def identify_variables(ideal: MonomialIdeal, sop: IdentificationSop) -> IdentifiedIdeal:
    """Substitute every variable by its identification-class representative.

    Each pair must merge two distinct classes; pairs forming a cycle encode
    linearly dependent difference forms and are rejected.
    """
    n = ideal.n
    uf = _UnionFind(n)
    for i, j in sop.pairs:
        if i > n or j > n:
            raise InconsistentIdentificationError(f"pair ({i},{j}) outside ambient 1..{n}")
        if not uf.union(i, j):
            raise InconsistentIdentificationError(
                f"pair ({i},{j}) merges an already-identified class"
            )
    rep_map = tuple(uf.find(i) for i in range(1, n + 1))
    reps = tuple(sorted(set(rep_map)))
    new_gens = []
    for g in ideal.gens:
        exps = [0] * n
        for i, e in enumerate(g.exps, start=1):
            if e:
                exps[rep_map[i - 1] - 1] += e
        new_gens.append(Monomial(exps))
    full = minimalize(new_gens, n) if new_gens else zero_ideal(n)
    index_of = {r: k + 1 for k, r in enumerate(reps)}
    compact_gens = []
    for g in full.gens:
        exps = [0] * len(reps)
        for i, e in enumerate(g.exps, start=1):
            if e:
                exps[index_of[i] - 1] = e
        compact_gens.append(Monomial(exps))
    compact = (
        minimalize(compact_gens, len(reps)) if compact_gens else zero_ideal(len(reps))
    )
    return IdentifiedIdeal(full, reps, rep_map, compact)


def verify_identification_sop(ideal: MonomialIdeal, sop: IdentificationSop) -> bool:
    """True when the differences are a sop: the pair count equals dim S/I and
    the identified ideal is artinian in the representative variables."""
    _require_proper_nonzero(ideal)
    if len(sop) != krull_dimension(ideal):
        return False
    try:
        identified = identify_variables(ideal, sop)
    except InconsistentIdentificationError:
        return False
    return identified.compact.is_artinian


def standard_monomials(ideal: MonomialIdeal) -> frozenset:
    """All monomials outside the ideal; the count is the quotient length."""
    if not ideal.is_artinian:
        raise NonArtinianIdealError("infinite length: quotient is not artinian")
    one = Monomial.one(ideal.n)
    seen = {one}
    queue = deque([one])
    while queue:
        m = queue.popleft()
        for i in range(1, ideal.n + 1):
            m2 = m * Monomial.variable(i, ideal.n)
            if m2 in seen or ideal.contains(m2):
                continue
            seen.add(m2)
            queue.append(m2)
    return frozenset(seen)


def quotient_length_of(ideal: MonomialIdeal) -> int:
    return len(standard_monomials(ideal))


def socle_dimension(ideal: MonomialIdeal) -> int:
    """Number of standard monomials killed by every variable.

    Dimension 1 certifies that the artinian quotient is Gorenstein.
    """
    std = standard_monomials(ideal)
    variables = [Monomial.variable(i, ideal.n) for i in range(1, ideal.n + 1)]
    return sum(1 for m in std if all(m * x not in std for x in variables))


def polarize(ideal: MonomialIdeal) -> tuple:
    """Standard polarization: x_i^a becomes x_{i,0}...x_{i,a-1}.

    Returns (squarefree ideal, names) where names[k] = (original variable,
    copy index) for the (k+1)-st new variable.  Unused variables keep one copy.
    """
    copies = [max(1, ideal.max_exponent(i)) for i in range(1, ideal.n + 1)]
    names = []
    slot = {}
    for i, c in enumerate(copies, start=1):
        for k in range(c):
            slot[(i, k)] = len(names) + 1
            names.append((i, k))
    total = len(names)
    gens = []
    for g in ideal.gens:
        exps = [0] * total
        for i, e in enumerate(g.exps, start=1):
            for k in range(e):
                exps[slot[(i, k)] - 1] = 1
        gens.append(Monomial(exps))
    out = minimalize(gens, total) if gens else zero_ideal(total)
    return out, tuple(names)


def edge_ideal(n: int, edges: Sequence) -> MonomialIdeal:
    """Squarefree ideal generated by x_a x_b over the given vertex pairs."""
    gens = []
    for a, b in edges:
        gens.append(Monomial.variable(a, n) * Monomial.variable(b, n))
    if not gens:
        return zero_ideal(n)
    return minimalize(gens, n)
