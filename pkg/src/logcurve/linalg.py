"""Exact linear algebra over the rationals on top of the elimination kernels.

Row reduction is fraction-free (Bareiss) on denominator-cleared integer
rows; kernels and reduced forms are recovered exactly.  Pivot choice is
deterministic (leftmost nonzero column, first row), so every basis this
module produces is reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from . import kernels


def _int_rows(rows) -> list[list[int]]:
    """Clear denominators row by row (preserves row space and kernel)."""
    out = []
    for row in rows:
        den = 1
        for c in row:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        if den == 1:
            out.append([int(c) for c in row])
        else:
            out.append([int(c * den) for c in row])
    return out


def _primitive(vec: list[Fraction]) -> list[Fraction]:
    """Scale a rational vector to integer entries, content 1, first nonzero
    entry positive."""
    den = 1
    for c in vec:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return [Fraction(0)] * len(vec)
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    return [Fraction(v, g) for v in ints]


class RatMatrix:
    """Immutable rational matrix with cached echelon data."""

    def __init__(self, rows, ncols: int | None = None):
        rows = [list(r) for r in rows]  # entries: int or Fraction
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._echelon: tuple[list[list[int]], list[int]] | None = None

    def echelon(self) -> tuple[list[list[int]], list[int]]:
        if self._echelon is None:
            self._echelon = kernels.echelon_int(_int_rows(self.rows), self.ncols)
        return self._echelon

    def rank(self) -> int:
        return len(self.echelon()[1])

    def rank_lower_bound_modp(self) -> int:
        """Certified lower bound for rank() via elimination mod a prime."""
        if self.nrows == 0:
            return 0
        ints = _int_rows(self.rows)
        best = 0
        for p in kernels.RANK_PRIMES:
            best = max(best, kernels.modp_rank(ints, self.ncols, p))
            if best == min(self.nrows, self.ncols):
                break
        return best

    def kernel_basis(self) -> list[list[Fraction]]:
        """Canonical kernel basis: one vector per free column, with that
        free coordinate equal to 1 and all other free coordinates 0."""
        ech, piv = self.echelon()
        pivset = set(piv)
        free = [j for j in range(self.ncols) if j not in pivset]
        r = len(piv)
        basis = []
        for j in free:
            v = [Fraction(0)] * self.ncols
            v[j] = Fraction(1)
            for i in range(r - 1, -1, -1):
                if piv[i] > j:
                    continue
                row = ech[i]
                s = Fraction(row[j])
                for m in range(i + 1, r):
                    vm = v[piv[m]]
                    if vm and row[piv[m]]:
                        s += row[piv[m]] * vm
                v[piv[i]] = -s / row[piv[i]]
            basis.append(v)
        return basis

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Unit-pivot reduced row echelon form (exact)."""
        ech, piv = self.echelon()
        rows = [[Fraction(x) for x in row] for row in ech]
        r = len(piv)
        for i in range(r):
            pv = rows[i][piv[i]]
            rows[i] = [x / pv for x in rows[i]]
        for i in range(r - 1, -1, -1):
            for m in range(i):
                f = rows[m][piv[i]]
                if f:
                    rows[m] = [a - f * b for a, b in zip(rows[m], rows[i])]
        return rows, piv


def solve_homogeneous(m: RatMatrix) -> list[list[Fraction]]:
    """Basis of the kernel of m (deterministic, exact)."""
    return m.kernel_basis()


def rank(m: RatMatrix) -> int:
    return m.rank()


class EchelonAccumulator:
    """Incremental reduced echelon form for rank/membership/extension tests.

    Rows are unit-pivot, fully reduced; insertion order determines nothing
    about the final span but representatives extracted by callers stay
    deterministic because all inputs arrive in deterministic order.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list[Fraction]:
        v = [Fraction(c) for c in vec]
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                for j in range(p, self.ncols):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def contains(self, vec) -> bool:
        return all(c == 0 for c in self.reduce(vec))

    def insert(self, vec) -> bool:
        """Add vec to the span; returns True when the rank grew."""
        v = self.reduce(vec)
        p = next((j for j, c in enumerate(v) if c), None)
        if p is None:
            return False
        pv = v[p]
        v = [c / pv for c in v]
        for row in self.rows:
            f = row[p]
            if f:
                for j in range(p, self.ncols):
                    if v[j]:
                        row[j] -= f * v[j]
        at = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, p)
        return True

    def basis(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def span_accumulator(vectors, ncols: int) -> EchelonAccumulator:
    acc = EchelonAccumulator(ncols)
    for v in vectors:
        acc.insert(v)
    return acc


def span_rank(vectors, ncols: int) -> int:
    if not vectors:
        return 0
    return RatMatrix(vectors, ncols).rank()


def subspace_intersect_conditions(
    acc: EchelonAccumulator, images: list[list[Fraction]]
) -> list[list[Fraction]]:
    """Linear conditions on coefficients (c_i) for sum(c_i * images[i]) to lie
    in the span held by acc.

    Returns the condition matrix rows (one per ambient coordinate; many may
    be zero).  Used by the section-space saturation descent.
    """
    residuals = [acc.reduce(img) for img in images]
    n = acc.ncols
    conditions = []
    for t in range(n):
        row = [res[t] for res in residuals]
        if any(row):
            conditions.append(row)
    return conditions
