"""Exact polynomial substrate: homogeneous polynomials in x, y, z over the
rationals, linear forms, and binary forms on a line.

Everything is immutable after construction and safe to share between
threads.  Coefficients are ``fractions.Fraction`` throughout; monomials of a
fixed degree are ordered by descending lexicographic exponent triple, which
fixes the coordinate vectors used by the linear algebra layer.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

VARS = ("x", "y", "z")

Exponent = tuple[int, int, int]


class PolyError(ValueError):
    """Malformed polynomial input (syntax, homogeneity, zero curve)."""


@functools.lru_cache(maxsize=None)
def monomials(degree: int) -> tuple[Exponent, ...]:
    """All exponent triples of the given total degree, descending lex."""
    if degree < 0:
        return ()
    out = []
    for i in range(degree, -1, -1):
        for j in range(degree - i, -1, -1):
            out.append((i, j, degree - i - j))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def monomial_index(degree: int) -> dict[Exponent, int]:
    return {m: i for i, m in enumerate(monomials(degree))}


def space_dim(degree: int) -> int:
    """dim of the degree-k piece of Q[x,y,z]: (k+1)(k+2)/2, 0 for k < 0."""
    if degree < 0:
        return 0
    return (degree + 1) * (degree + 2) // 2


class HomoPoly:
    """Homogeneous polynomial of a fixed degree.

    The zero polynomial still carries a degree; only nonzero coefficients
    are stored.
    """

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: dict[Exponent, Fraction] | None = None):
        if degree < 0:
            raise PolyError(f"negative degree {degree}")
        clean: dict[Exponent, Fraction] = {}
        for expo, c in (coeffs or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if sum(expo) != degree or min(expo) < 0:
                raise PolyError(f"exponent {expo} does not have degree {degree}")
            clean[expo] = c
        self.degree = degree
        self._coeffs = clean

    @classmethod
    def zero(cls, degree: int) -> "HomoPoly":
        return cls(degree, {})

    @classmethod
    def monomial(cls, expo: Exponent, coeff=1) -> "HomoPoly":
        return cls(sum(expo), {expo: Fraction(coeff)})

    @classmethod
    def variable(cls, idx: int) -> "HomoPoly":
        e = [0, 0, 0]
        e[idx] = 1
        return cls(1, {tuple(e): Fraction(1)})

    def coeff(self, expo: Exponent) -> Fraction:
        return self._coeffs.get(expo, Fraction(0))

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Coefficients in canonical monomial order."""
        for m in monomials(self.degree):
            c = self._coeffs.get(m)
            if c is not None:
                yield m, c

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomoPoly)
            and self.degree == other.degree
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self._coeffs.items())))

    def __add__(self, other: "HomoPoly") -> "HomoPoly":
        if self.degree != other.degree:
            raise PolyError("degree mismatch in addition")
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return HomoPoly(self.degree, out)

    def __sub__(self, other: "HomoPoly") -> "HomoPoly":
        return self + (-other)

    def __neg__(self) -> "HomoPoly":
        return HomoPoly(self.degree, {e: -c for e, c in self._coeffs.items()})

    def scale(self, k) -> "HomoPoly":
        k = Fraction(k)
        if k == 0:
            return HomoPoly.zero(self.degree)
        return HomoPoly(self.degree, {e: c * k for e, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return HomoPoly(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomoPoly":
        if n < 0:
            raise PolyError("negative power")
        result = HomoPoly(0, {(0, 0, 0): Fraction(1)})
        for _ in range(n):
            result = result * self
        return result

    def partial(self, var: int) -> "HomoPoly":
        """Formal partial derivative; degree drops by one (may be zero)."""
        if self.degree == 0:
            raise PolyError("cannot differentiate a degree-0 form")
        out: dict[Exponent, Fraction] = {}
        for e, c in self._coeffs.items():
            if e[var] == 0:
                continue
            ne = list(e)
            ne[var] -= 1
            out[tuple(ne)] = c * e[var]
        return HomoPoly(self.degree - 1, out)

    def coeff_vector(self) -> list[Fraction]:
        """Coefficients in canonical monomial order (dense)."""
        return [self._coeffs.get(m, Fraction(0)) for m in monomials(self.degree)]

    @classmethod
    def from_vector(cls, degree: int, vec: Iterable) -> "HomoPoly":
        coeffs = {}
        for m, c in zip(monomials(degree), vec):
            c = Fraction(c)
            if c:
                coeffs[m] = c
        return cls(degree, coeffs)

    def primitive(self) -> "HomoPoly":
        """Integer-scaled copy: content 1, first nonzero coefficient > 0."""
        if self.is_zero:
            return self
        den = 1
        for c in self._coeffs.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ints = {e: int(c * den) for e, c in self._coeffs.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        lead = next(c for _, c in sorted(ints.items(), reverse=True) if c)
        if lead < 0:
            g = -g
        return HomoPoly(self.degree, {e: Fraction(v, g) for e, v in ints.items()})

    def evaluate(self, point) -> Fraction:
        x, y, z = (Fraction(t) for t in point)
        total = Fraction(0)
        for (i, j, k), c in self._coeffs.items():
            total += c * x**i * y**j * z**k
        return total

    def __repr__(self):
        return f"HomoPoly({self})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                v if p == 1 else f"{v}^{p}" for v, p in zip(VARS, e) if p
            )
            if not mono:
                term = str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def euler_check(f: HomoPoly) -> bool:
    """x*f_x + y*f_y + z*f_z == deg(f)*f, exactly."""
    if f.degree == 0:
        return True
    total = HomoPoly.zero(f.degree)
    for v in range(3):
        total = total + HomoPoly.variable(v) * f.partial(v)
    return total == f.scale(f.degree)


# ---------------------------------------------------------------------------
# expression parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[xyz]|\*\*|[-+*/^()])")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolyError(f"syntax error at position {pos}: {text[pos:pos+10]!r}")
        tok = m.group(1)
        tokens.append("^" if tok == "**" else tok)
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent parser producing a (possibly inhomogeneous) dict."""

    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok):
        got = self.take()
        if got != tok:
            raise PolyError(f"expected {tok!r}, got {got!r}")

    def parse(self) -> dict[Exponent, Fraction]:
        result = self.expr()
        if self.peek() is not None:
            raise PolyError(f"trailing input {self.peek()!r}")
        return result

    def expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        result = _scale(self.term(), sign)
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            result = _add(result, _scale(rhs, -1 if op == "-" else 1))
        return result

    def term(self):
        result = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op == "*":
                result = _mul(result, rhs)
            else:
                if list(rhs.keys()) != [(0, 0, 0)]:
                    raise PolyError("division only by nonzero constants")
                result = _scale(result, 1 / rhs[(0, 0, 0)])
        return result

    def factor(self):
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            return _scale(self.factor(), sign)
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp_tok = self.take()
            if exp_tok is None or not exp_tok.isdigit():
                raise PolyError("exponent must be a nonnegative integer")
            result = {(0, 0, 0): Fraction(1)}
            for _ in range(int(exp_tok)):
                result = _mul(result, base)
            return result
        return base

    def atom(self):
        tok = self.take()
        if tok is None:
            raise PolyError("unexpected end of expression")
        if tok == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if tok in VARS:
            e = [0, 0, 0]
            e[VARS.index(tok)] = 1
            return {tuple(e): Fraction(1)}
        if tok.isdigit():
            return {(0, 0, 0): Fraction(int(tok))}
        raise PolyError(f"unexpected token {tok!r}")


def _add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, Fraction(0)) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _scale(a, k):
    k = Fraction(k)
    return {e: c * k for e, c in a.items()} if k else {}


def _mul(a, b):
    out: dict[Exponent, Fraction] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            s = out.get(e, Fraction(0)) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def parse_poly(text: str) -> HomoPoly:
    """Parse an expression in x, y, z into a homogeneous polynomial.

    Raises PolyError on syntax errors, inhomogeneous input, or the zero
    polynomial (a curve equation is expected).
    """
    raw = _Parser(_tokenize(text)).parse()
    raw = {e: c for e, c in raw.items() if c}
    if not raw:
        raise PolyError("zero polynomial is not a curve equation")
    degrees = {sum(e) for e in raw}
    if len(degrees) > 1:
        raise PolyError(f"not homogeneous: found degrees {sorted(degrees)}")
    return HomoPoly(degrees.pop(), raw)


# ---------------------------------------------------------------------------
# linear forms and restriction to a line
# ---------------------------------------------------------------------------


class LinearForm:
    """A projective line a*x + b*y + c*z = 0, scaled so that the first
    nonzero coefficient is 1."""

    __slots__ = ("coeffs", "pivot")

    def __init__(self, a, b, c):
        v = (Fraction(a), Fraction(b), Fraction(c))
        pivot = next((i for i, t in enumerate(v) if t != 0), None)
        if pivot is None:
            raise PolyError("zero linear form")
        lead = v[pivot]
        self.coeffs = tuple(t / lead for t in v)
        self.pivot = pivot

    @classmethod
    def from_poly(cls, f: HomoPoly) -> "LinearForm":
        if f.degree != 1:
            raise PolyError("not a linear form")
        return cls(f.coeff((1, 0, 0)), f.coeff((0, 1, 0)), f.coeff((0, 0, 1)))

    def poly(self) -> HomoPoly:
        return HomoPoly(
            1,
            {
                (1, 0, 0): self.coeffs[0],
                (0, 1, 0): self.coeffs[1],
                (0, 0, 1): self.coeffs[2],
            },
        )

    def params(self) -> tuple[int, int]:
        """Indices of the two variables used as line coordinates (u, v)."""
        return tuple(i for i in range(3) if i != self.pivot)  # type: ignore

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return str(self.poly())

    def __repr__(self):
        return f"LinearForm({self})"


class BinaryForm:
    """Homogeneous form in the line coordinates (u, v).

    ``coeffs[i]`` is the coefficient of u^i v^(degree-i).  The zero form of
    any degree is allowed.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Iterable):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != degree + 1:
            raise PolyError("coefficient list does not match degree")
        self.degree = degree
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, [0] * (degree + 1))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise PolyError("degree mismatch")
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + other.scale(-1)

    def scale(self, k) -> "BinaryForm":
        k = Fraction(k)
        return BinaryForm(self.degree, [c * k for c in self.coeffs])

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return BinaryForm(self.degree + other.degree, out)

    def mul_u(self) -> "BinaryForm":
        return BinaryForm(self.degree + 1, [Fraction(0), *self.coeffs])

    def mul_v(self) -> "BinaryForm":
        return BinaryForm(self.degree + 1, [*self.coeffs, Fraction(0)])

    def partial_u(self) -> "BinaryForm":
        return BinaryForm(
            self.degree - 1, [i * self.coeffs[i] for i in range(1, self.degree + 1)]
        )

    def partial_v(self) -> "BinaryForm":
        return BinaryForm(
            self.degree - 1,
            [(self.degree - i) * self.coeffs[i] for i in range(self.degree)],
        )

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            j = self.degree - i
            mono = "*".join(
                s if p == 1 else f"{s}^{p}" for s, p in (("u", i), ("v", j)) if p
            )
            if not mono:
                term = str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", term))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self):
        return f"BinaryForm({self})"


@functools.lru_cache(maxsize=262144)
def _restricted_monomial(line: LinearForm, expo: Exponent) -> BinaryForm:
    """Restriction of a single monomial to the line (memoized per line)."""
    p = line.pivot
    j1, j2 = line.params()
    if expo == (0, 0, 0):
        return BinaryForm(0, [Fraction(1)])
    e = list(expo)
    if e[j1]:
        e[j1] -= 1
        return _restricted_monomial(line, tuple(e)).mul_u()
    if e[j2]:
        e[j2] -= 1
        return _restricted_monomial(line, tuple(e)).mul_v()
    e[p] -= 1
    # on the line: var_p = -(c_{j1} u + c_{j2} v)
    sub = BinaryForm(1, [-line.coeffs[j1], -line.coeffs[j2]])
    return _restricted_monomial(line, tuple(e)) * sub


def restrict_to_line(f: HomoPoly, line: LinearForm) -> BinaryForm:
    """Restrict f to the line.

    The parametrization is deterministic: the line equation is solved for
    the variable of its leading coefficient and the two remaining variables,
    in (x, y, z) order, become (u, v).  A zero result signals that the line
    divides f.
    """
    out = [Fraction(0)] * (f.degree + 1)
    for e, c in f.items():
        for i, t in enumerate(_restricted_monomial(line, e).coeffs):
            if t:
                out[i] += c * t
    return BinaryForm(f.degree, out)


# ---------------------------------------------------------------------------
# univariate helpers (dense Fraction lists, ascending powers of t)
# ---------------------------------------------------------------------------


def _uni_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _uni_deg(p: list[Fraction]) -> int:
    return len(p) - 1


def _uni_divmod(a: list[Fraction], b: list[Fraction]):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        k = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = k
        for i, bc in enumerate(b):
            a[d + i] -= k * bc
        _uni_trim(a)
    return q, a


def _uni_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _uni_trim(list(a)), _uni_trim(list(b))
    while b:
        _, r = _uni_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def binary_gcd(g: BinaryForm, h: BinaryForm) -> BinaryForm:
    """gcd of two binary forms (monic-normalized); either may be zero."""
    if g.is_zero:
        return h
    if h.is_zero:
        return g
    G = _uni_trim(list(g.coeffs))
    eg = g.degree - _uni_deg(G)
    H = _uni_trim(list(h.coeffs))
    eh = h.degree - _uni_deg(H)
    D = _uni_gcd(G, H)
    e = min(eg, eh)
    deg = _uni_deg(D) + e
    coeffs = [Fraction(0)] * (deg + 1)
    for i, c in enumerate(D):
        coeffs[i] = c
    return BinaryForm(deg, coeffs)


def binary_divmod(g: BinaryForm, h: BinaryForm) -> tuple[BinaryForm | None, bool]:
    """Exact division of binary forms: returns (quotient, True) if h | g,
    else (None, False).  g may be zero (then quotient is zero)."""
    if h.is_zero:
        raise ZeroDivisionError("division by zero form")
    if g.is_zero:
        if g.degree < h.degree:
            return None, False
        return BinaryForm.zero(g.degree - h.degree), True
    G = _uni_trim(list(g.coeffs))
    eg = g.degree - _uni_deg(G)
    H = _uni_trim(list(h.coeffs))
    eh = h.degree - _uni_deg(H)
    if eh > eg or h.degree > g.degree:
        return None, False
    q, r = _uni_divmod(G, H)
    if r:
        return None, False
    deg = g.degree - h.degree
    coeffs = [Fraction(0)] * (deg + 1)
    for i, c in enumerate(q):
        coeffs[i] = c
    return BinaryForm(deg, coeffs), True


def binary_divides(h: BinaryForm, g: BinaryForm) -> bool:
    _, ok = binary_divmod(g, h)
    return ok


def squarefree_part(g: BinaryForm) -> BinaryForm:
    """Product of the distinct linear factors of g (monic-normalized)."""
    if g.is_zero:
        raise PolyError("zero form has no squarefree part")
    G = _uni_trim(list(g.coeffs))
    e = g.degree - _uni_deg(G)
    if _uni_deg(G) > 0:
        d = _uni_gcd(G, _uni_trim([i * G[i] for i in range(1, len(G))]))
        S, r = _uni_divmod(G, d)
        assert not r
        lead = S[-1]
        S = [c / lead for c in S]
    else:
        S = [Fraction(1)]
    deg = _uni_deg(S) + (1 if e else 0)
    coeffs = [Fraction(0)] * (deg + 1)
    for i, c in enumerate(S):
        coeffs[i] = c
    return BinaryForm(deg, coeffs)


def distinct_root_count(g: BinaryForm) -> int:
    """Number of distinct projective roots of g over the complex numbers.

    Computed through the squarefree degree: roots of g(t,1) counted via
    deg - deg gcd(G, G'), plus the root at infinity when v | g.
    """
    if g.is_zero:
        raise PolyError("root count of the zero form")
    G = _uni_trim(list(g.coeffs))
    at_infinity = 1 if _uni_deg(G) < g.degree else 0
    if _uni_deg(G) == 0:
        return at_infinity
    deriv = _uni_trim([i * G[i] for i in range(1, len(G))])
    d = _uni_gcd(G, deriv)
    return _uni_deg(G) - _uni_deg(d) + at_infinity
