# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels.

Mirrors the pure implementations in ``logcurve._kernels_py``: Bareiss
fraction-free integer echelon (arbitrary-precision entries stay Python ints;
the win is the compiled loop structure) and rank modulo a word-sized prime
on C int64 arithmetic.
"""

import numpy as np

BACKEND = "compiled"


def echelon_int(rows, Py_ssize_t ncols):
    """Fraction-free row echelon form; see the python backend docstring."""
    cdef list mat = [list(input_row) for input_row in rows]
    cdef Py_ssize_t nrows = len(mat)
    cdef list piv = []
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef list row, prow
    prev = 1
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if (<list>mat[i])[c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        prow = <list>mat[r]
        pv = prow[c]
        for i in range(r + 1, nrows):
            row = <list>mat[i]
            fi = row[c]
            if fi != 0:
                for j in range(c + 1, ncols):
                    row[j] = (row[j] * pv - fi * prow[j]) // prev
                row[c] = 0
            elif pv != prev:
                # Bareiss scales every remaining row, zero pivot entry or not
                for j in range(c + 1, ncols):
                    if row[j] != 0:
                        row[j] = (row[j] * pv) // prev
        piv.append(c)
        prev = pv
        r += 1
        if r == nrows:
            break
    return [mat[i] for i in range(r)], piv


def modp_rank(rows, Py_ssize_t ncols, long long p):
    """Rank of an integer matrix modulo the prime p (lower bound for the
    rational rank)."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    m_obj = np.asarray(rows, dtype=object) % int(p)
    cdef long long[:, :] m = m_obj.astype(np.int64)
    cdef Py_ssize_t rank = 0, c, i, j, pr
    cdef long long pv, inv, fi, tmp
    for c in range(ncols):
        pr = -1
        for i in range(rank, nrows):
            if m[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != rank:
            for j in range(ncols):
                tmp = m[rank, j]
                m[rank, j] = m[pr, j]
                m[pr, j] = tmp
        pv = m[rank, c]
        inv = _invmod(pv, p)
        for j in range(c, ncols):
            m[rank, j] = (m[rank, j] * inv) % p
        for i in range(rank + 1, nrows):
            fi = m[i, c]
            if fi != 0:
                for j in range(c, ncols):
                    m[i, j] = (m[i, j] - fi * m[rank, j]) % p
                    if m[i, j] < 0:
                        m[i, j] += p
        rank += 1
        if rank == nrows:
            break
    return rank


cdef long long _invmod(long long a, long long p):
    cdef long long result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result
