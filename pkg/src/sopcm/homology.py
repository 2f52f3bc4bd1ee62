"""Reduced simplicial homology over GF(p) and Hochster Betti tables.

The Betti scan walks every vertex subset W and sums restricted homology;
vertices lying in no face are factored out combinatorially (their effect on
the table is a binomial lift), which keeps the scan at 2^(effective vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from .bitsets import iter_bits
from .complexes import SimplicialComplex, from_facets
from .exceptions import InputFormatError, PipelineInvariantError, SubsetScanBoundError
from .field import PrimeField
from .ideal import MonomialIdeal
from .linalg import rank_mod_p

DEFAULT_SUBSET_SCAN_BOUND = 16


def _faces_as_masks(complex_: SimplicialComplex) -> list:
    out = set()
    for face in complex_.all_faces():
        mask = 0
        for v in face:
            mask |= 1 << (v - 1)
        out.add(mask)
    return sorted(out)


def _homology_dims_from_masks(faces: Sequence[int], p: int) -> list:
    """Reduced homology dimensions; entry t is dim of degree t-1 homology.

    ``faces`` must be downward closed and contain 0 (the empty face).
    """
    by_size: dict = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    top = max(by_size)
    index = {s: {f: i for i, f in enumerate(sorted(fs))} for s, fs in by_size.items()}

    def boundary_rank(s: int) -> int:
        if s == 0 or s not in by_size:
            return 0
        rows = len(by_size[s - 1])
        cols = len(by_size[s])
        matrix = np.zeros((rows, cols), dtype=np.int64)
        for f, col in index[s].items():
            sign = 1
            for v in iter_bits(f):
                sub = f & ~(1 << v)
                matrix[index[s - 1][sub], col] = sign
                sign = -sign
        return rank_mod_p(matrix, p)

    ranks = {s: boundary_rank(s) for s in range(top + 2)}
    dims = []
    for s in range(top + 1):
        count = len(by_size.get(s, ()))
        dims.append(count - ranks[s] - ranks.get(s + 1, 0))
    return dims


def reduced_homology_dims(complex_: SimplicialComplex, field: PrimeField) -> tuple:
    """Reduced homology over GF(p); entry t is the dimension in degree t-1,
    so the tuple covers degrees -1 .. dim."""
    return tuple(_homology_dims_from_masks(_faces_as_masks(complex_), field.p))


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of the Stanley-Reisner quotient."""

    entries: dict
    n: int
    field_char: int

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def depth(self) -> int:
        """Auslander-Buchsbaum: depth = n - projective dimension."""
        return self.n - self.pd

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def to_json(self) -> dict:
        beta = [[i, j, v] for (i, j), v in sorted(self.entries.items())]
        return {
            "p": self.field_char,
            "beta": beta,
            "pd": self.pd,
            "reg": self.reg,
            "depth": self.depth,
        }


def hochster_betti_table(
    complex_: SimplicialComplex,
    field: PrimeField,
    bound: int = DEFAULT_SUBSET_SCAN_BOUND,
) -> BettiTable:
    """beta_{i,j} of S/I as a sum of restricted reduced homology over all
    j-vertex subsets.  Refuses vertex counts above ``bound``."""
    n = complex_.n
    if n > bound:
        raise SubsetScanBoundError(
            f"{n} vertices exceed the subset-scan bound {bound}; raise the bound explicitly"
        )
    faces = _faces_as_masks(complex_)
    effective = 0
    for f in faces:
        effective |= f
    isolated = n - effective.bit_count()
    entries: dict = {}
    sub = effective
    while True:
        restricted = [f for f in faces if f & ~sub == 0]
        dims = _homology_dims_from_masks(restricted, field.p)
        w = sub.bit_count()
        for t, h in enumerate(dims):
            if h <= 0:
                continue
            for extra in range(isolated + 1):
                j = w + extra
                weight = comb(isolated, extra)
                entries[(j - t, j)] = entries.get((j - t, j), 0) + h * weight
        if sub == 0:
            break
        sub = (sub - 1) & effective
    if entries.get((0, 0)) != 1:
        raise PipelineInvariantError("Betti table lost its (0,0) entry")
    return BettiTable(entries, n, field.p)


def _complex_of_squarefree_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the subsets containing no generator support."""
    n = ideal.n
    size = 1 << n
    nonface = bytearray(size)
    for g in ideal.gens:
        nonface[g.support_mask] = 1
    for mask in range(size):
        if nonface[mask]:
            rest = ~mask & (size - 1)
            for v in iter_bits(rest):
                nonface[mask | (1 << v)] = 1
    facets = []
    for mask in range(size):
        if nonface[mask]:
            continue
        rest = ~mask & (size - 1)
        if all(nonface[mask | (1 << v)] for v in iter_bits(rest)):
            facets.append([v + 1 for v in iter_bits(mask)])
    return from_facets(n, facets)


def reg_of_squarefree_quotient(
    ideal: MonomialIdeal,
    field: PrimeField,
    bound: int = DEFAULT_SUBSET_SCAN_BOUND,
) -> int:
    """Castelnuovo-Mumford regularity of S/I for squarefree I."""
    if not ideal.is_squarefree:
        raise InputFormatError("ideal is not squarefree: polarize first")
    if ideal.is_zero:
        return 0
    complex_ = _complex_of_squarefree_ideal(ideal)
    return hochster_betti_table(complex_, field, bound).reg
