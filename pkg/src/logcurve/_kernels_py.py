"""Pure-Python implementations of the elimination kernels.

Same contracts as the compiled module ``logcurve._speedups``; the compiled
version is preferred at import time when available.  Exact echelon reduction
uses the Bareiss single-step fraction-free scheme, which keeps intermediate
entries bounded by minors of the input.  Rank modulo a prime is delegated to
numpy (vectorized row operations on int64).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def echelon_int(rows: list[list[int]], ncols: int):
    """Fraction-free row echelon form of an integer matrix.

    Returns (echelon_rows, pivot_cols).  Pivot selection is deterministic:
    leftmost nonzero column, first row.  Rows of the result are the nonzero
    echelon rows in pivot order; entries are exact integers scaled by
    leading minors (Bareiss).
    """
    mat = [list(r) for r in rows]
    nrows = len(mat)
    piv: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if mat[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        prow = mat[r]
        pv = prow[c]
        for i in range(r + 1, nrows):
            row = mat[i]
            fi = row[c]
            if fi:
                for j in range(c + 1, ncols):
                    row[j] = (row[j] * pv - fi * prow[j]) // prev
                row[c] = 0
            elif pv != prev:
                # Bareiss scales every remaining row, zero pivot entry or not
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (row[j] * pv) // prev
        piv.append(c)
        prev = pv
        r += 1
        if r == nrows:
            break
    return [mat[i] for i in range(r)], piv


def modp_rank(rows, ncols: int, p: int) -> int:
    """Rank of an integer matrix modulo the prime p.

    Always a lower bound for the rational rank.
    """
    if not len(rows):
        return 0
    m = np.asarray(rows, dtype=object) % p
    m = m.astype(np.int64)
    nrows = m.shape[0]
    rank = 0
    for c in range(ncols):
        nz = np.nonzero(m[rank:, c])[0]
        if nz.size == 0:
            continue
        pr = rank + int(nz[0])
        if pr != rank:
            m[[rank, pr]] = m[[pr, rank]]
        inv = pow(int(m[rank, c]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        below = m[rank + 1 :, c]
        mask = below != 0
        if mask.any():
            m[rank + 1 :][mask] = (
                m[rank + 1 :][mask] - np.outer(below[mask], m[rank])
            ) % p
        rank += 1
        if rank == nrows:
            break
    return rank
