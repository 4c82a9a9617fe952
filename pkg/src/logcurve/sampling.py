"""Seeded line sampling, linear-component detection, and singular points.

Random lines use small integer coefficients and a caller-supplied seed so
every scan is reproducible.  Singular-point enumeration is exact and
complete for line arrangements (pairwise intersections); for other curves
only rational points found by a bounded search are returned and the result
carries an explicit completeness flag.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .poly import HomoPoly, LinearForm, restrict_to_line

LINE_COEFF_RANGE = 9


def is_component(f: HomoPoly, line: LinearForm) -> bool:
    return restrict_to_line(f, line).is_zero


def sample_lines(
    f: HomoPoly, count: int, seed: int, exclude_components: bool = True
) -> list[LinearForm]:
    """Deterministic pseudo-random lines with coefficients in [-9, 9];
    lines dividing f are resampled when excluded."""
    rng = random.Random(seed)
    out: list[LinearForm] = []
    seen: set = set()
    while len(out) < count:
        coeffs = tuple(
            rng.randint(-LINE_COEFF_RANGE, LINE_COEFF_RANGE) for _ in range(3)
        )
        if coeffs == (0, 0, 0):
            continue
        line = LinearForm(*coeffs)
        if line.coeffs in seen:
            continue
        if exclude_components and is_component(f, line):
            continue
        seen.add(line.coeffs)
        out.append(line)
    return out


def linear_components(f: HomoPoly, search_bound: int = 9) -> list[LinearForm]:
    """Linear factors of f with coefficients in a small integer box.

    Complete for arrangements built from such lines; larger-coefficient
    components are not searched for.
    """
    out = []
    seen = set()
    rng = range(-search_bound, search_bound + 1)
    for a, b, c in itertools.product(rng, repeat=3):
        if (a, b, c) == (0, 0, 0):
            continue
        if next(t for t in (a, b, c) if t) < 0:
            continue  # canonical representative only
        line = LinearForm(a, b, c)
        if line.coeffs in seen:
            continue
        seen.add(line.coeffs)
        if is_component(f, line):
            out.append(line)
    return out


def _normalize_point(p) -> tuple[Fraction, Fraction, Fraction]:
    lead = next((t for t in p if t != 0), None)
    if lead is None:
        raise ValueError("zero vector is not a projective point")
    return tuple(Fraction(t) / lead for t in p)  # type: ignore[return-value]


def intersect_lines(l1: LinearForm, l2: LinearForm):
    """Projective intersection point of two distinct lines (cross product)."""
    a1, b1, c1 = l1.coeffs
    a2, b2, c2 = l2.coeffs
    p = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)
    if all(t == 0 for t in p):
        raise ValueError("lines coincide")
    return _normalize_point(p)


def line_through(p, q) -> LinearForm:
    """The line through two distinct projective points."""
    a = p[1] * q[2] - p[2] * q[1]
    b = p[2] * q[0] - p[0] * q[2]
    c = p[0] * q[1] - p[1] * q[0]
    return LinearForm(a, b, c)


@dataclass(frozen=True)
class SingularPoints:
    points: tuple[tuple[Fraction, Fraction, Fraction], ...]
    complete: bool


def singular_points(
    f: HomoPoly, lines: list[LinearForm] | None = None, search_bound: int = 3
) -> SingularPoints:
    """Singular points of the curve f = 0.

    With the component list of an arrangement this is exact (pairwise
    intersections).  Otherwise a bounded search over small-coordinate
    rational points is used and ``complete`` is False unless the curve is
    smooth in that box and of degree <= 2 (a conic's singularities would be
    rational).
    """
    if lines is not None:
        pts = set()
        for l1, l2 in itertools.combinations(lines, 2):
            try:
                pts.add(intersect_lines(l1, l2))
            except ValueError:
                continue
        return SingularPoints(tuple(sorted(pts)), complete=True)
    partials = [f.partial(v) for v in range(3)]
    found = set()
    rng = range(-search_bound, search_bound + 1)
    for p in itertools.product(rng, repeat=3):
        if p == (0, 0, 0):
            continue
        if next(t for t in p if t) < 0:
            continue
        if all(g.is_zero or g.evaluate(p) == 0 for g in partials):
            found.add(_normalize_point(p))
    return SingularPoints(tuple(sorted(found)), complete=False)


def lines_through_singular_pairs(points) -> list[LinearForm]:
    """All lines spanned by pairs of the given points, deduplicated."""
    out = []
    seen = set()
    for p, q in itertools.combinations(points, 2):
        line = line_through(p, q)
        if line.coeffs not in seen:
            seen.add(line.coeffs)
            out.append(line)
    return out
