"""Bitmask search kernels: exact covers, independent sets, clique enumeration.

Everything here is exhaustive or branch-and-bound and meant for desk-scale
instances (a few dozen vertices / generators).  All searches are deterministic.
"""

from __future__ import annotations


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_independent_set_size(neighbors: list[int], universe: int | None = None) -> int:
    """Size of a maximum independent set; `neighbors[v]` is a bitmask, loops ignored."""
    m = len(neighbors)
    if universe is None:
        universe = (1 << m) - 1
    best = 0

    def grow(cand: int, size: int):
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            # branch on the candidate with most candidate-neighbors
            pivot = max(iter_bits(cand), key=lambda v: ((neighbors[v] & cand).bit_count(), -v))
            if (neighbors[pivot] & cand) == 0:
                # isolated inside cand: always take it
                size += 1
                best = max(best, size)
                cand &= ~(1 << pivot)
                continue
            # include pivot
            grow(cand & ~(neighbors[pivot] | (1 << pivot)), size + 1)
            # exclude pivot
            cand &= ~(1 << pivot)
        best = max(best, size)

    grow(universe, 0)
    return best


def count_independent_sets(neighbors: list[int], universe: int | None = None) -> int:
    """Number of independent sets (the empty set included)."""
    if universe is None:
        universe = (1 << len(neighbors)) - 1
    memo: dict[int, int] = {}

    def count(cand: int) -> int:
        if cand == 0:
            return 1
        got = memo.get(cand)
        if got is not None:
            return got
        v = (cand & -cand).bit_length() - 1
        result = count(cand & ~(1 << v)) + count(cand & ~(neighbors[v] | (1 << v)))
        memo[cand] = result
        return result

    return count(universe)


def maximal_independent_sets(neighbors: list[int], universe: int | None = None) -> list[int]:
    """All maximal independent sets as bitmasks (Bron-Kerbosch with pivoting
    on the complement graph), sorted for reproducibility."""
    m = len(neighbors)
    if universe is None:
        universe = (1 << m) - 1
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot_pool = p | x
        # pivot with most independent-compatible candidates removed
        pivot = max(
            iter_bits(pivot_pool),
            key=lambda v: ((p & ~(neighbors[v] | (1 << v))).bit_count(), -v),
        )
        ext = p & (neighbors[pivot] | (1 << pivot))
        for v in iter_bits(ext):
            bit = 1 << v
            compatible = ~(neighbors[v] | bit)
            expand(r | bit, p & compatible, x & compatible)
            p &= ~bit
            x |= bit

    expand(0, universe, 0)
    return sorted(out)


def min_transversal_size(supports: list[int]) -> int:
    """Minimum number of ground elements meeting every support bitmask.

    Branch and bound with a greedy upper bound and a disjoint-support
    (matching) lower bound.
    """
    supports = [s for s in supports if s]
    if not supports:
        return 0

    def greedy_upper(rem: list[int]) -> int:
        picked = 0
        while rem:
            counts: dict[int, int] = {}
            for s in rem:
                for v in iter_bits(s):
                    counts[v] = counts.get(v, 0) + 1
            v = max(sorted(counts), key=lambda k: counts[k])
            picked += 1
            rem = [s for s in rem if not (s >> v) & 1]
        return picked

    def disjoint_lower(rem: list[int]) -> int:
        used = 0
        lb = 0
        for s in rem:
            if s & used == 0:
                lb += 1
                used |= s
        return lb

    best = greedy_upper(supports)

    def bb(rem: list[int], chosen: int):
        nonlocal best
        if not rem:
            best = min(best, chosen)
            return
        if chosen + disjoint_lower(rem) >= best:
            return
        pivot = min(rem, key=lambda s: (s.bit_count(), s))
        for v in iter_bits(pivot):
            bb([s for s in rem if not (s >> v) & 1], chosen + 1)

    bb(supports, 0)
    return best
