"""Chern polynomial bookkeeping for the rank-2 bundle attached to a curve.

All arithmetic is on integers; the first Chern number of the bundle of a
degree-n curve is 1 - n, the second comes from the classification (product
of the exponents in the free case, the plus-one-generated closed form
otherwise).  The quotient term of a deletion-restriction sequence is a line
bundle supported on the deleted line; its Chern numbers are derived from
the one-step resolution of a line in the plane rather than hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .logmod import Classification, Free, PlusOneGenerated


class ChernError(ValueError):
    pass


@dataclass(frozen=True)
class ChernData:
    rank: int
    c1: int
    c2: int

    def as_dict(self):
        return {"rank": self.rank, "c1": self.c1, "c2": self.c2}


@dataclass(frozen=True, order=True)
class SplittingType:
    """Ordered pair (a, b), a <= b, with a + b = deg - 1 on every line."""

    a: int
    b: int

    def __post_init__(self):
        if self.a > self.b:
            raise ChernError("splitting type must be normalized a <= b")

    @classmethod
    def of(cls, a: int, b: int) -> "SplittingType":
        return cls(min(a, b), max(a, b))

    def as_tuple(self):
        return (self.a, self.b)

    def __str__(self):
        return f"({self.a}, {self.b})"


def chern_of_classification(cls: Classification, n: int) -> ChernData:
    """Rank-2 Chern data of the bundle of a degree-n curve from its
    classification.  Rejects 'other' (no in-scope c2 formula)."""
    if isinstance(cls, Free):
        d2, d3 = cls.exponents
        return ChernData(rank=2, c1=1 - n, c2=d2 * d3)
    if isinstance(cls, PlusOneGenerated):
        d2, d3 = cls.exponents
        d = cls.level
        return ChernData(rank=2, c1=1 - n, c2=d2 * (d3 - 1) + d - d3 + 1)
    raise ChernError(
        "second Chern number is only available for free or plus-one generated curves"
    )


def twist_minus_one(cd: ChernData) -> ChernData:
    """Chern data of E(-1) for rank-2 E."""
    if cd.rank != 2:
        raise ChernError("twist formula applies to rank-2 data")
    return ChernData(rank=2, c1=cd.c1 - 2, c2=cd.c2 - cd.c1 + 1)


def twist_plus_one(cd: ChernData) -> ChernData:
    """Inverse of twist_minus_one."""
    if cd.rank != 2:
        raise ChernError("twist formula applies to rank-2 data")
    return ChernData(rank=2, c1=cd.c1 + 2, c2=cd.c2 + cd.c1 + 1)


def chern_of_line_quotient(k: int) -> ChernData:
    """Chern data of the degree-k line bundle on a line, as a sheaf on the
    plane: from 0 -> O(k-1) -> O(k) -> O_L(k) -> 0 the Chern polynomial is
    (1 + k t) / (1 + (k-1) t) = 1 + t + (1-k) t^2 (mod t^3)."""
    return ChernData(rank=0, c1=1, c2=1 - k)


@dataclass(frozen=True)
class TripleChernReport:
    holds: bool
    residual: int
    c1_holds: bool
    lhs_c2: int
    rhs_c2: int


def triple_c2_identity(
    cd_c: ChernData, cd_cprime: ChernData, card_cpp: int, eps: int
) -> TripleChernReport:
    """Whitney check across the deletion-restriction sheaf sequence.

    With G the line-supported quotient of twist parameter 1 - |C''| - eps:
    c2(E_C) should equal c2(E_C'(-1)) + c1(E_C'(-1)) * c1(G) + c2(G), and
    c1(E_C) should equal c1(E_C'(-1)) + c1(G).  A failed identity is a
    legitimate verification outcome, reported with its residual.
    """
    if cd_c.rank != 2 or cd_cprime.rank != 2:
        raise ChernError("both curve bundles must have rank 2")
    if card_cpp < 1:
        raise ChernError("|C''| must be at least 1")
    twisted = twist_minus_one(cd_cprime)
    quotient = chern_of_line_quotient(1 - card_cpp - eps)
    rhs = twisted.c2 + twisted.c1 * quotient.c1 + quotient.c2
    residual = cd_c.c2 - rhs
    c1_holds = cd_c.c1 == twisted.c1 + quotient.c1
    return TripleChernReport(
        holds=(residual == 0 and c1_holds),
        residual=residual,
        c1_holds=c1_holds,
        lhs_c2=cd_c.c2,
        rhs_c2=rhs,
    )
