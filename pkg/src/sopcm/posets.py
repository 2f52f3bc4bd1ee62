"""Two-chain posets: order complexes, diagonal conditions, the explicit
shelling order, and CM / linear-resolution verdicts checked two ways.

Vertices of the order complex: x_i is vertex i, y_j is vertex n + j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import bitsets
from .complexes import SimplicialComplex, cm_test_universal, from_facets, stanley_reisner_ideal
from .exceptions import InputFormatError, InvalidPosetError, ShellingVerificationError
from .field import PrimeField
from .homology import reg_of_squarefree_quotient


@dataclass(frozen=True)
class TwoChainPoset:
    """Disjoint chains x_1<...<x_n and y_1<...<y_n, both maximal, plus the
    declared cross covers.  ``up[a]`` is the strict up-set bitmask of element
    a (0-based: x_i -> i-1, y_j -> n+j-1)."""

    n: int
    covers_xy: tuple  # (i, j): x_i covered by y_j
    covers_yx: tuple  # (i, j): y_i covered by x_j
    up: tuple

    def x(self, i: int) -> int:
        return i - 1

    def y(self, j: int) -> int:
        return self.n + j - 1

    def less(self, a: int, b: int) -> bool:
        return bool((self.up[a] >> b) & 1)

    def comparable(self, a: int, b: int) -> bool:
        return a == b or self.less(a, b) or self.less(b, a)

    def element_name(self, a: int) -> str:
        return f"x{a + 1}" if a < self.n else f"y{a - self.n + 1}"


def build_poset(n: int, covers_xy: Sequence, covers_yx: Sequence) -> TwoChainPoset:
    """Close the declared covers and validate the two-chain axioms, rejecting
    cycles, non-maximal chains and declared covers that are not covers."""
    if n < 1:
        raise InputFormatError("chain length must be >= 1")
    covers_xy = tuple(sorted({(int(i), int(j)) for i, j in covers_xy}))
    covers_yx = tuple(sorted({(int(i), int(j)) for i, j in covers_yx}))
    for i, j in covers_xy + covers_yx:
        if not (1 <= i <= n and 1 <= j <= n):
            raise InputFormatError(f"cover ({i},{j}) outside 1..{n}")
    m = 2 * n
    succ = [0] * m
    for i in range(n - 1):
        succ[i] |= 1 << (i + 1)
        succ[n + i] |= 1 << (n + i + 1)
    for i, j in covers_xy:
        succ[i - 1] |= 1 << (n + j - 1)
    for i, j in covers_yx:
        succ[n + i - 1] |= 1 << (j - 1)
    up = list(succ)
    changed = True
    while changed:
        changed = False
        for a in range(m):
            extended = up[a]
            for b in bitsets.iter_bits(up[a]):
                extended |= up[b]
            if extended != up[a]:
                up[a] = extended
                changed = True
    poset = TwoChainPoset(n, covers_xy, covers_yx, tuple(up))
    for a in range(m):
        if (up[a] >> a) & 1:
            raise InvalidPosetError(f"cycle through {poset.element_name(a)}")
    # both chains must be maximal: every opposite element incomparable somewhere
    for j in range(1, n + 1):
        if all(poset.comparable(poset.x(i), poset.y(j)) for i in range(1, n + 1)):
            raise InvalidPosetError(f"chain x1..x{n} not maximal: y{j} fits inside it")
    for i in range(1, n + 1):
        if all(poset.comparable(poset.y(j), poset.x(i)) for j in range(1, n + 1)):
            raise InvalidPosetError(f"chain y1..y{n} not maximal: x{i} fits inside it")
    for (i, j), (a, b) in [((i, j), (poset.x(i), poset.y(j))) for i, j in covers_xy] + [
        ((i, j), (poset.y(i), poset.x(j))) for i, j in covers_yx
    ]:
        between = up[a] & ~(1 << b)
        if any((up[z] >> b) & 1 for z in bitsets.iter_bits(between)):
            raise InvalidPosetError(
                f"declared cover {poset.element_name(a)} < {poset.element_name(b)}"
                " is implied transitively"
            )
    return poset


def order_complex(poset: TwoChainPoset) -> SimplicialComplex:
    """Faces are the chains; facets the maximal chains."""
    m = 2 * poset.n
    incomparable = [0] * m
    for a in range(m):
        for b in range(a + 1, m):
            if not poset.comparable(a, b):
                incomparable[a] |= 1 << b
                incomparable[b] |= 1 << a
    masks = bitsets.maximal_independent_sets(incomparable)
    return from_facets(m, [[v + 1 for v in bitsets.iter_bits(mask)] for mask in masks])


def diagonal_conditions(poset: TwoChainPoset) -> bool:
    """(1) every cross cover steps exactly one level up; (2) of the two
    diagonal pairs at each level, at least one is a chain."""
    for i, j in poset.covers_xy + poset.covers_yx:
        if j != i + 1:
            return False
    for i in range(1, poset.n):
        if not (
            poset.comparable(poset.x(i), poset.y(i + 1))
            or poset.comparable(poset.x(i + 1), poset.y(i))
        ):
            return False
    return True


def _facet_bitstring(poset: TwoChainPoset, facet: frozenset) -> tuple:
    n = poset.n
    pattern = []
    for i in range(1, n + 1):
        has_x = (i) in facet
        has_y = (n + i) in facet
        if has_x == has_y:
            raise ShellingVerificationError(
                f"facet {sorted(facet)} does not pick exactly one of x{i}, y{i}"
            )
        pattern.append(1 if has_y else 0)
    return tuple(pattern)


def shelling_order(poset: TwoChainPoset):
    """Facets of the order complex in the proof's order (compare the first
    level where the facets differ; the facet taking y there comes later),
    verified to be an actual shelling.  None when the diagonal conditions fail.
    """
    if not diagonal_conditions(poset):
        return None
    complex_ = order_complex(poset)
    n = poset.n
    for facet in complex_.facets:
        if len(facet) != n:
            raise ShellingVerificationError(
                f"facet {sorted(facet)} has size {len(facet)}, expected {n}"
            )
    ordered = sorted(complex_.facets, key=lambda f: _facet_bitstring(poset, f))
    for j in range(1, len(ordered)):
        fj = ordered[j]
        for i in range(j):
            meet = ordered[i] & fj
            if not any(
                len(ordered[k] & fj) == n - 1 and meet <= (ordered[k] & fj)
                for k in range(j)
            ):
                raise ShellingVerificationError(
                    f"facet {sorted(fj)} meets {sorted(ordered[i])} outside the"
                    " codimension-one shadow"
                )
    return [tuple(sorted(f)) for f in ordered]


@dataclass(frozen=True)
class PosetCmVerdict:
    by_conditions: bool
    by_universal_sop: bool
    field_char: int

    @property
    def agree(self) -> bool:
        return self.by_conditions == self.by_universal_sop

    def to_json(self) -> dict:
        return {
            "by_conditions": self.by_conditions,
            "by_universal_sop": self.by_universal_sop,
            "agree": self.agree,
            "p": self.field_char,
        }


def poset_cm_verdict(poset: TwoChainPoset, field: PrimeField) -> PosetCmVerdict:
    by_cond = diagonal_conditions(poset)
    by_sop = cm_test_universal(order_complex(poset), field).verdict
    return PosetCmVerdict(by_cond, by_sop, field.p)


@dataclass(frozen=True)
class LinearResolutionVerdict:
    by_condition: bool
    by_regularity: bool
    field_char: int

    @property
    def agree(self) -> bool:
        return self.by_condition == self.by_regularity

    def to_json(self) -> dict:
        return {
            "by_condition": self.by_condition,
            "by_regularity": self.by_regularity,
            "agree": self.agree,
            "p": self.field_char,
        }


def linear_resolution_test(poset: TwoChainPoset, field: PrimeField) -> LinearResolutionVerdict:
    """Cross-pair comparability condition against reg(S/I) == 1."""
    n = poset.n
    cross = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if poset.comparable(poset.x(i), poset.y(j))
    ]
    by_cond = all(
        poset.comparable(poset.x(i), poset.y(s)) or poset.comparable(poset.x(r), poset.y(j))
        for i, j in cross
        for r, s in cross
    )
    ideal = stanley_reisner_ideal(order_complex(poset))
    by_reg = reg_of_squarefree_quotient(ideal, field) == 1
    return LinearResolutionVerdict(by_cond, by_reg, field.p)


def parse_poset_lines(lines: Sequence[str]) -> TwoChainPoset:
    """First line n, then `x i j` for x_i covered by y_j and `y i j` for
    y_i covered by x_j."""
    body = []
    for line in lines:
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            body.append(stripped)
    if not body:
        raise InputFormatError("empty poset file")
    try:
        n = int(body[0])
    except ValueError as exc:
        raise InputFormatError(f"first line must be the chain length, got {body[0]!r}") from exc
    covers_xy, covers_yx = [], []
    for line in body[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("x", "y"):
            raise InputFormatError(f"bad poset line {line!r}")
        i, j = int(parts[1]), int(parts[2])
        (covers_xy if parts[0] == "x" else covers_yx).append((i, j))
    return build_poset(n, covers_xy, covers_yx)
