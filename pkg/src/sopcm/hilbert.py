"""Hilbert series of monomial quotients by the pivot recursion.

The numerator is accumulated over (1-t)^n and then fully reduced, so the
pole order is the Krull dimension and the numerator value at 1 the
multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .exceptions import PipelineInvariantError, UnitIdealError
from .ideal import MonomialIdeal


def poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return poly_trim(out)


def poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for j, bj in enumerate(b):
        out[j] += bj
    return poly_trim(out)


def poly_sub(a: list[int], b: list[int]) -> list[int]:
    return poly_add(a, [-x for x in b])


def poly_shift(a: list[int], k: int) -> list[int]:
    return [0] * k + a if a else []


def divide_by_one_minus_t(q: list[int]) -> list[int]:
    """Exact division by (1-t); requires q(1) == 0."""
    acc = 0
    out = []
    for c in q:
        acc += c
        out.append(acc)
    if out and out[-1] != 0:
        raise PipelineInvariantError("polynomial not divisible by (1-t)")
    return poly_trim(out[:-1])


@dataclass(frozen=True)
class HilbertSeries:
    """Reduced form Q(t)/(1-t)^d with (1-t) not dividing Q and Q(1) > 0."""

    numerator: tuple
    pole_order: int

    @property
    def dimension(self) -> int:
        return self.pole_order

    @property
    def multiplicity(self) -> int:
        return sum(self.numerator)

    def coefficients(self, upto: int) -> list[int]:
        """Hilbert function values in degrees 0..upto."""
        coeffs = list(self.numerator) + [0] * max(0, upto + 1 - len(self.numerator))
        coeffs = coeffs[: upto + 1]
        for _ in range(self.pole_order):
            acc = 0
            for i, c in enumerate(coeffs):
                acc += c
                coeffs[i] = acc
        return coeffs


def _minimalize_raw(gens: list[tuple]) -> list[tuple]:
    kept: list[tuple] = []
    for g in sorted(set(gens), key=lambda e: (sum(e), e)):
        if not any(all(h[i] <= g[i] for i in range(len(g))) for h in kept):
            kept.append(g)
    return kept


def _disjoint_supports(gens: list[tuple]) -> bool:
    seen = 0
    for g in gens:
        mask = 0
        for i, e in enumerate(g):
            if e:
                mask |= 1 << i
        if mask & seen:
            return False
        seen |= mask
    return True


def _k_numerator(gens: tuple, memo: dict) -> list[int]:
    """Numerator of Hilb over (1-t)^n for a minimal generating set."""
    if not gens:
        return [1]
    key = frozenset(gens)
    got = memo.get(key)
    if got is not None:
        return got
    gens_list = list(gens)
    if _disjoint_supports(gens_list):
        factors = []
        for g in gens_list:
            f = [1] + [0] * (sum(g) - 1) + [-1]
            factors.append(f)
        result = reduce(poly_mul, factors, [1])
    else:
        n = len(gens_list[0])
        counts = [0] * n
        for g in gens_list:
            for i, e in enumerate(g):
                if e:
                    counts[i] += 1
        v = max(range(n), key=lambda i: (counts[i], -i))
        plus = [g for g in gens_list if g[v] == 0]
        pivot = tuple(1 if i == v else 0 for i in range(n))
        plus.append(pivot)
        colon = _minimalize_raw(
            [tuple(e - 1 if i == v and e else e for i, e in enumerate(g)) for g in gens_list]
        )
        result = poly_add(
            _k_numerator(tuple(plus), memo),
            poly_shift(_k_numerator(tuple(colon), memo), 1),
        )
    memo[key] = result
    return result


def hilbert_series(ideal: MonomialIdeal) -> HilbertSeries:
    """Hilbert series of S/I; the zero ideal gives the free series."""
    if any(g.is_one for g in ideal.gens):
        raise UnitIdealError("unit ideal has no Hilbert series")
    numerator = _k_numerator(tuple(g.exps for g in ideal.gens), {})
    pole = ideal.n
    while numerator and sum(numerator) == 0:
        numerator = divide_by_one_minus_t(numerator)
        pole -= 1
    if not numerator or sum(numerator) <= 0:
        raise PipelineInvariantError("reduced Hilbert numerator must be positive at t=1")
    return HilbertSeries(tuple(numerator), pole)
