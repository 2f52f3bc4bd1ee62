"""Dense linear algebra over GF(p) (ranks of boundary and graded-piece matrices)."""

from __future__ import annotations

import numpy as np


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by row elimination.

    Entries stay below p**2 < 2**63 between reductions, so int64 is safe.
    """
    if matrix.size == 0:
        return 0
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = None
        for r in range(rank, rows):
            if a[r, col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank, col:] = a[rank, col:] * inv % p
        below = a[rank + 1 :, col]
        nz = np.nonzero(below)[0]
        if nz.size:
            factors = below[nz].reshape(-1, 1)
            block = a[rank + 1 :, col:]
            block[nz] = (block[nz] - factors * a[rank, col:]) % p
        rank += 1
    return rank
