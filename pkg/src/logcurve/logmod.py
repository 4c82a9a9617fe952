"""Graded pieces of the module of derivations killing a curve equation,
minimal generators and relations, and the freeness classifier.

For a reduced curve f = 0 of degree n the module computed here is the
syzygy module of the Jacobian partials,

    AR(f)_k = { (a, b, c) in S_k^3 : a*f_x + b*f_y + c*f_z = 0 },

which coincides with the degree-k part of the Euler-complement summand of
the full derivation module.  The Euler derivation is adjoined only where a
determinant or a full-module basis is required.

Classification outcomes carry complete certificates: a ``Free`` verdict is
backed by an exact determinant identity, a ``PlusOneGenerated`` verdict by
the exact generator/relation pattern plus a Hilbert-function check across
the whole degree window.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import kernels
from .linalg import EchelonAccumulator, RatMatrix, _int_rows, _primitive
from .poly import (
    HomoPoly,
    LinearForm,
    PolyError,
    monomials,
    restrict_to_line,
    space_dim,
    squarefree_part,
)


class NonReducedError(PolyError):
    """Curve equation has a repeated factor."""

    def __init__(self, square_degree: int):
        super().__init__(
            f"polynomial is not squarefree (repeated factor of degree ~{square_degree})"
        )
        self.square_degree = square_degree


class Derivation:
    """Polynomial derivation a*dx + b*dy + c*dz, all components homogeneous
    of the same degree."""

    __slots__ = ("degree", "comps")

    def __init__(self, a: HomoPoly, b: HomoPoly, c: HomoPoly):
        if not (a.degree == b.degree == c.degree):
            raise PolyError("derivation components must share a degree")
        self.degree = a.degree
        self.comps = (a, b, c)

    @classmethod
    def euler(cls) -> "Derivation":
        return cls(HomoPoly.variable(0), HomoPoly.variable(1), HomoPoly.variable(2))

    @classmethod
    def from_vector(cls, degree: int, vec) -> "Derivation":
        d = space_dim(degree)
        return cls(
            HomoPoly.from_vector(degree, vec[:d]),
            HomoPoly.from_vector(degree, vec[d : 2 * d]),
            HomoPoly.from_vector(degree, vec[2 * d :]),
        )

    def vector(self) -> list[Fraction]:
        out = []
        for comp in self.comps:
            out.extend(comp.coeff_vector())
        return out

    def primitive(self) -> "Derivation":
        return Derivation.from_vector(self.degree, _primitive(self.vector()))

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.comps)

    def apply(self, g: HomoPoly) -> HomoPoly:
        """theta(g) = a*g_x + b*g_y + c*g_z."""
        out = HomoPoly.zero(self.degree + g.degree - 1)
        for var, comp in enumerate(self.comps):
            if not comp.is_zero:
                out = out + comp * g.partial(var)
        return out

    def mul_var(self, var: int) -> "Derivation":
        v = HomoPoly.variable(var)
        return Derivation(*(v * comp for comp in self.comps))

    def mul_poly(self, g: HomoPoly) -> "Derivation":
        return Derivation(*(g * comp for comp in self.comps))

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(*(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation(*(a - b for a, b in zip(self.comps, other.comps)))

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __str__(self):
        parts = []
        for comp, name in zip(self.comps, ("dx", "dy", "dz")):
            if comp.is_zero:
                continue
            text = str(comp)
            if " " in text or text.startswith("-"):
                parts.append(f"({text})*{name}")
            elif text == "1":
                parts.append(name)
            else:
                parts.append(f"{text}*{name}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Derivation({self})"


# ---------------------------------------------------------------------------
# reducedness certificate
# ---------------------------------------------------------------------------

_FIRST_LINES = (
    (0, 0, 1),
    (0, 1, 0),
    (1, 0, 0),
    (1, 1, 0),
    (1, 0, 1),
    (0, 1, 1),
    (1, 1, 1),
    (1, 2, 3),
    (1, -1, 2),
)


def _squarefree_certificate(f: HomoPoly) -> Optional[int]:
    """None when f is certified squarefree, otherwise the degree of the
    repeated part seen on the best sampled line.

    A line on which f restricts to a nonzero squarefree binary form proves
    squarefree-ness: a repeated factor of f survives restriction to every
    line that does not kill f.  Conversely, for squarefree f the lines that
    fail the test lie on a dual curve of degree at most 2*deg(f)^2, so a
    full integer grid of side 2*deg(f)^2 + 1 cannot consist of failures;
    exhausting it proves a repeated factor.
    """
    n = f.degree
    if n == 1:
        return None
    bound = 2 * n * n
    best: Optional[int] = None

    def defect(a, b, c) -> Optional[int]:
        g = restrict_to_line(f, LinearForm(a, b, c))
        if g.is_zero:
            return None
        return g.degree - squarefree_part(g).degree

    for coeffs in _FIRST_LINES:
        d = defect(*coeffs)
        if d == 0:
            return None
        if d is not None:
            best = d if best is None else min(best, d)
    for s in range(bound + 1):
        for t in range(bound + 1):
            d = defect(1, s, t)
            if d == 0:
                return None
            if d is not None:
                best = d if best is None else min(best, d)
    return best if best is not None else n


# ---------------------------------------------------------------------------
# per-curve computation cache
# ---------------------------------------------------------------------------


class SyzygyModule:
    """All graded data attached to one reduced curve equation.

    Exact bases are cached per degree.  Rank bounds modulo word-sized primes
    (always valid bounds for the rational rank) are used only where an upper
    and a lower exact argument pin a dimension, so every reported dimension
    is exact.
    """

    def __init__(self, f: HomoPoly):
        if f.degree < 1:
            raise PolyError("curve equation must have degree >= 1")
        if f.is_zero:
            raise PolyError("zero polynomial is not a curve equation")
        square = _squarefree_certificate(f)
        if square is not None:
            raise NonReducedError(square)
        self.f = f
        self.f_int = f.primitive()
        self.degree = f.degree
        self.partials = tuple(self.f_int.partial(v) for v in range(3))
        self._bases: dict[int, list[list[Fraction]]] = {}
        self._dims: dict[int, int] = {}
        self._s1_ranks: dict[int, int] = {}
        self._classification: dict[int, "Classification"] = {}
        self._pog_certified_upto = -1

    # -- matrices ------------------------------------------------------------

    def syzygy_matrix_rows(self, k: int) -> tuple[list[list[int]], int]:
        """Integer matrix of (a,b,c) -> a f_x + b f_y + c f_z on degree-k
        triples; kernel vectors are the degree-k syzygies."""
        n = self.degree
        target = monomials(k + n - 1)
        index = {m: i for i, m in enumerate(target)}
        per_block = space_dim(k)
        ncols = 3 * per_block
        rows = [[0] * ncols for _ in target]
        for block, part in enumerate(self.partials):
            items = [(e, int(c)) for e, c in part.items()]
            for ci, m in enumerate(monomials(k)):
                col = block * per_block + ci
                for e, c in items:
                    t = (m[0] + e[0], m[1] + e[1], m[2] + e[2])
                    rows[index[t]][col] = c
        return rows, ncols

    def syzygy_rank_modp(self, k: int) -> int:
        """Certified lower bound for the rational rank of the degree-k
        syzygy matrix."""
        rows, ncols = self.syzygy_matrix_rows(k)
        best = 0
        for p in kernels.RANK_PRIMES:
            best = max(best, kernels.modp_rank(rows, ncols, p))
            if best == min(len(rows), ncols):
                break
        return best

    # -- exact graded data -----------------------------------------------------

    def dim(self, k: int) -> int:
        """Exact dimension of AR(f)_k."""
        if k < 0:
            return 0
        if k in self._bases:
            return len(self._bases[k])
        if k not in self._dims:
            rows, ncols = self.syzygy_matrix_rows(k)
            _, piv = kernels.echelon_int(rows, ncols)
            self._dims[k] = ncols - len(piv)
        return self._dims[k]

    def basis(self, k: int) -> list[list[Fraction]]:
        """Exact canonical basis of AR(f)_k as coefficient vectors."""
        if k < 0:
            return []
        if k not in self._bases:
            rows, ncols = self.syzygy_matrix_rows(k)
            self._bases[k] = RatMatrix(rows, ncols).kernel_basis()
            self._dims[k] = len(self._bases[k])
        return self._bases[k]

    def derivations(self, k: int) -> list[Derivation]:
        return [Derivation.from_vector(k, v).primitive() for v in self.basis(k)]

    def jacobian_dim(self, m: int) -> int:
        """Exact dimension of the degree-m piece of the Jacobian ideal."""
        k = m - self.degree + 1
        if k < 0:
            return 0
        return 3 * space_dim(k) - self.dim(k)

    def mdr(self) -> int:
        for k in range(0, self.degree):
            if self.dim(k) > 0:
                return k
        raise AssertionError(
            "no syzygy through degree deg(f)-1; the Koszul bound is violated"
        )

    # -- minimal generators ------------------------------------------------------

    def _s1_multiple_vectors(self, k: int) -> list[list[Fraction]]:
        out = []
        for vec in self.basis(k - 1):
            theta = Derivation.from_vector(k - 1, vec)
            for var in range(3):
                out.append(theta.mul_var(var).vector())
        return out

    def s1_rank(self, k: int) -> int:
        """Rank of S_1 * AR(f)_{k-1} inside degree k."""
        if k <= 0:
            return 0
        if k not in self._s1_ranks:
            vecs = self._s1_multiple_vectors(k)
            if not vecs:
                self._s1_ranks[k] = 0
            else:
                self._s1_ranks[k] = RatMatrix(vecs, 3 * space_dim(k)).rank()
        return self._s1_ranks[k]

    def new_generator_count(self, k: int) -> int:
        d = self.dim(k)
        if d == 0:
            return 0
        return d - self.s1_rank(k)

    def new_generators(self, k: int) -> list[Derivation]:
        """Deterministic representatives of minimal generators in degree k
        (kernel-basis order, reduced against S_1 times the lower part)."""
        if self.new_generator_count(k) == 0:
            return []
        acc = EchelonAccumulator(3 * space_dim(k))
        for vec in self._s1_multiple_vectors(k):
            acc.insert(vec)
        out = []
        for vec in self.basis(k):
            if acc.insert(vec):
                out.append(Derivation.from_vector(k, vec).primitive())
        return out


@functools.lru_cache(maxsize=32)
def _module_cache(f: HomoPoly) -> SyzygyModule:
    return SyzygyModule(f)


def as_module(f) -> SyzygyModule:
    if isinstance(f, SyzygyModule):
        return f
    return _module_cache(f)


# ---------------------------------------------------------------------------
# public graded operations
# ---------------------------------------------------------------------------


def syzygy_space(f, k: int) -> list[Derivation]:
    """Exact basis of AR(f)_k.  Rejects non-reduced f."""
    if k < 0:
        raise PolyError("negative degree")
    return as_module(f).derivations(k)


def syzygy_dims(f, upto: int) -> dict[int, int]:
    mod = as_module(f)
    return {k: mod.dim(k) for k in range(upto + 1)}


def mdr(f) -> int:
    """Minimal degree of a nonzero syzygy of the Jacobian partials."""
    return as_module(f).mdr()


def minimal_generators(f, bound: int | None = None) -> list[tuple[int, Derivation]]:
    """Minimal generator degrees and representatives through the bound,
    ascending."""
    mod = as_module(f)
    if bound is None:
        bound = 2 * mod.degree
    out = []
    for k in range(bound + 1):
        for theta in mod.new_generators(k):
            out.append((k, theta))
    return out


@dataclass(frozen=True)
class JacobianData:
    f: HomoPoly
    partials: tuple[HomoPoly, HomoPoly, HomoPoly]
    dims: dict[int, int]


def jacobian_data(f, upto: int) -> JacobianData:
    mod = as_module(f)
    return JacobianData(
        f=mod.f,
        partials=mod.partials,  # type: ignore[arg-type]
        dims={m: mod.jacobian_dim(m) for m in range(upto + 1)},
    )


# ---------------------------------------------------------------------------
# relations among chosen generators
# ---------------------------------------------------------------------------


def _relation_matrix_rows(
    gens: list[tuple[int, Derivation]], t: int
) -> tuple[list[list[int]], int]:
    """Matrix of the evaluation map (+) S(-d_i) -> S^3 in degree t; its
    kernel is the degree-t relation space of the generators."""
    dim_t = space_dim(t)
    offsets = []
    total = 0
    for d, _ in gens:
        offsets.append(total)
        total += space_dim(t - d)
    rows = [[0] * total for _ in range(3 * dim_t)]
    index = {m: i for i, m in enumerate(monomials(t))}
    for gi, (d, theta) in enumerate(gens):
        for mi, m in enumerate(monomials(t - d)):
            col = offsets[gi] + mi
            for comp_idx, comp in enumerate(theta.comps):
                base = comp_idx * dim_t
                for e, c in comp.items():
                    tgt = (m[0] + e[0], m[1] + e[1], m[2] + e[2])
                    rows[base + index[tgt]][col] = int(c)
    return rows, total


def _relation_kernel(gens, t) -> list[list[Fraction]]:
    rows, ncols = _relation_matrix_rows(gens, t)
    if ncols == 0:
        return []
    return RatMatrix(rows, ncols).kernel_basis()


def _relation_rank_modp(gens, t) -> int:
    rows, ncols = _relation_matrix_rows(gens, t)
    if ncols == 0:
        return 0
    best = 0
    for p in kernels.RANK_PRIMES:
        best = max(best, kernels.modp_rank(rows, ncols, p))
        if best == min(len(rows), ncols):
            break
    return best


def _relation_rank_exact(gens, t) -> int:
    rows, ncols = _relation_matrix_rows(gens, t)
    if ncols == 0:
        return 0
    _, piv = kernels.echelon_int(rows, ncols)
    return len(piv)


def _split_relation_vector(
    gens: list[tuple[int, Derivation]], t: int, vec
) -> list[HomoPoly]:
    out = []
    pos = 0
    for d, _ in gens:
        deg = t - d
        if deg < 0:
            out.append(HomoPoly.zero(0))
            continue
        size = space_dim(deg)
        out.append(HomoPoly.from_vector(deg, vec[pos : pos + size]))
        pos += size
    return out


def _shift_relation_vector(gens, t_prev: int, vec, var: int) -> list[Fraction]:
    """Multiply a degree-t_prev relation vector by a variable, re-indexed in
    the degree-(t_prev + 1) block coordinates."""
    polys = _split_relation_vector(gens, t_prev, vec)
    out: list[Fraction] = []
    for (d, _), h in zip(gens, polys):
        tgt = t_prev + 1 - d
        if tgt < 0:
            continue
        if t_prev - d < 0:
            out.extend([Fraction(0)] * space_dim(tgt))
        else:
            out.extend((HomoPoly.variable(var) * h).coeff_vector())
    return out


def relation_degrees(
    f, gens: list[tuple[int, Derivation]], bound: int | None = None
) -> list[tuple[int, list[HomoPoly]]]:
    """Minimal relations among the given generators through the bound.

    Asserts that the generators span AR(f) degreewise up to the bound;
    returns (degree, coefficient polynomials) per new minimal relation.
    """
    mod = as_module(f)
    if bound is None:
        bound = 2 * mod.degree
    for d, theta in gens:
        if theta.degree != d:
            raise AssertionError("generator degree mismatch")
        if not theta.apply(mod.f_int).is_zero:
            raise AssertionError("generator is not a syzygy of the partials")
    for k in range(bound + 1):
        rows, ncols = _relation_matrix_rows(gens, k)
        rank_k = len(kernels.echelon_int(rows, ncols)[1]) if ncols else 0
        if rank_k != mod.dim(k):
            raise AssertionError(f"generators do not span AR(f) in degree {k}")

    min_deg = min((d for d, _ in gens), default=0)
    found: list[tuple[int, list[HomoPoly]]] = []
    prev_kernel: list[list[Fraction]] = []
    for t in range(min_deg, bound + 1):
        kern = _relation_kernel(gens, t)
        ncols = sum(space_dim(t - d) for d, _ in gens)
        acc = EchelonAccumulator(ncols)
        for v in prev_kernel:
            for var in range(3):
                acc.insert(_shift_relation_vector(gens, t - 1, v, var))
        for v in kern:
            if acc.insert(v):
                found.append((t, _split_relation_vector(gens, t, _primitive(v))))
        prev_kernel = kern
    return found


# ---------------------------------------------------------------------------
# Saito determinant certificate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SaitoResult:
    passed: bool
    constant: Optional[Fraction]
    reason: str = ""


def saito_check(f: HomoPoly, theta2: Derivation, theta3: Derivation) -> SaitoResult:
    """Determinant test: rows (Euler, theta2, theta3) against c * f.

    Both derivations must kill f exactly; a degree-sum mismatch is an
    automatic fail with a reason rather than an error.
    """
    mod = as_module(f)
    for theta in (theta2, theta3):
        if not theta.apply(mod.f_int).is_zero:
            raise PolyError("derivation does not annihilate the curve equation")
    if theta2.degree + theta3.degree != f.degree - 1:
        return SaitoResult(False, None, "degree sum of the pair is not deg(f)-1")
    a2, b2, c2 = theta2.comps
    a3, b3, c3 = theta3.comps
    det = (
        HomoPoly.variable(0) * (b2 * c3 - c2 * b3)
        - HomoPoly.variable(1) * (a2 * c3 - c2 * a3)
        + HomoPoly.variable(2) * (a2 * b3 - b2 * a3)
    )
    if det.is_zero:
        return SaitoResult(False, None, "determinant vanishes identically")
    expo, cf = next(iter(f.items()))
    const = det.coeff(expo) / cf
    if const != 0 and det == f.scale(const):
        return SaitoResult(True, const)
    return SaitoResult(False, None, "determinant is not a constant multiple of f")


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Free:
    exponents: tuple[int, int]
    basis: tuple[Derivation, Derivation]
    saito_constant: Fraction
    mdr: int

    kind = "free"

    def __str__(self):
        return f"Free{self.exponents}"


@dataclass(frozen=True)
class PlusOneGenerated:
    exponents: tuple[int, int]
    level: int
    nu: int
    generators: tuple[Derivation, Derivation, Derivation]
    relation: tuple[HomoPoly, HomoPoly, HomoPoly]
    mdr: int

    kind = "plus_one_generated"

    def __str__(self):
        return f"POG{self.exponents}, level {self.level}, nu {self.nu}"


@dataclass(frozen=True)
class Other:
    mdr: int
    generator_degrees: tuple[int, ...]
    bound: int
    diagnostic: str = ""

    kind = "other"

    def __str__(self):
        degrees = list(self.generator_degrees)
        return f"Other(mdr {self.mdr}, generator degrees {degrees} through {self.bound})"


Classification = Free | PlusOneGenerated | Other


def _predicted_pog_dim(k: int, degs, rel_degree: int) -> int:
    return sum(space_dim(k - d) for d in degs) - space_dim(k - rel_degree)


def _window_degree_ok(mod, gens, rel_degree, k, predicted) -> bool:
    """Certify dim AR(f)_k == predicted for a plus-one-generated candidate.

    Upper bound: a rank lower bound for the syzygy matrix caps the kernel
    at the predicted dimension.  Lower bound: the span of the generators
    has dimension (block sum) - dim Rel_k, and Rel_k contains the variable
    shifts of the verified unique relation, so capping rank of the relation
    matrix from below pins dim Rel_k and hence the span.  Rank bounds mod a
    prime are always valid over Q; exact elimination is the fallback when a
    prime is unlucky.
    """
    target_syz = 3 * space_dim(k) - predicted
    if k in mod._bases or k in mod._dims:
        if mod.dim(k) != predicted:
            return False
    elif mod.syzygy_rank_modp(k) < target_syz:
        if mod.dim(k) != predicted:
            return False
    domain = sum(space_dim(k - d) for d, _ in gens)
    target_rel = domain - space_dim(k - rel_degree)
    if _relation_rank_modp(gens, k) < target_rel:
        if _relation_rank_exact(gens, k) < target_rel:
            return False
    return True


def _try_pog(mod, gens: list[tuple[int, Derivation]], bound: int):
    """Plus-one-generated certificate for exactly three found generators;
    None when the pattern does not match."""
    n = mod.degree
    ordered = sorted(gens, key=lambda t: t[0])
    e1, e2, e3 = (d for d, _ in ordered)
    if e1 + e2 != n or e3 > n - 1 or e3 < e2:
        return None
    for t in range(e1, e3 + 1):
        if _relation_kernel(ordered, t):
            return None
    rel_degree = e3 + 1
    kern = _relation_kernel(ordered, rel_degree)
    if len(kern) != 1:
        return None
    rel_vec = _primitive(kern[0])
    rel_polys = _split_relation_vector(ordered, rel_degree, rel_vec)
    # level generator: degree e3, nonzero linear relation coefficient, and
    # the remaining pair of degrees sums to n
    psi_index = None
    for i in (2, 1, 0):
        if ordered[i][0] != e3:
            continue
        if sum(ordered[j][0] for j in range(3) if j != i) != n:
            continue
        if not rel_polys[i].is_zero:
            psi_index = i
            break
    if psi_index is None:
        return None
    # Hilbert function must match the rank-2 resolution on the whole window
    degs = (e1, e2, e3)
    for k in range(bound + 1):
        predicted = _predicted_pog_dim(k, degs, rel_degree)
        if k <= e3:
            if mod.dim(k) != predicted:
                return None
        elif not _window_degree_ok(mod, ordered, rel_degree, k, predicted):
            return None
    rest = [j for j in range(3) if j != psi_index]
    d2, d3 = ordered[rest[0]][0], ordered[rest[1]][0]
    level = e3
    return PlusOneGenerated(
        exponents=(d2, d3),
        level=level,
        nu=level - d3 + 1,
        generators=(ordered[rest[0]][1], ordered[rest[1]][1], ordered[psi_index][1]),
        relation=(rel_polys[rest[0]], rel_polys[rest[1]], rel_polys[psi_index]),
        mdr=d2,
    )


def pog_generation_window(mod: SyzygyModule, cls: "PlusOneGenerated", upto: int) -> bool:
    """Extend the certified window of a plus-one-generated classification:
    check that the three generators span AR(f) degreewise up to ``upto``.

    Uses the same pinch as the classifier; the result is exact.  The highest
    certified bound is remembered on the module.
    """
    rel_degree = cls.level + 1
    ordered = sorted(
        [(theta.degree, theta) for theta in cls.generators], key=lambda t: t[0]
    )
    degs = tuple(d for d, _ in ordered)
    start = getattr(mod, "_pog_certified_upto", -1) + 1
    for k in range(start, upto + 1):
        predicted = _predicted_pog_dim(k, degs, rel_degree)
        if k <= cls.level:
            if mod.dim(k) != predicted:
                return False
        elif not _window_degree_ok(mod, ordered, rel_degree, k, predicted):
            return False
    mod._pog_certified_upto = max(getattr(mod, "_pog_certified_upto", -1), upto)
    return True


def classify(f, bound: int | None = None) -> Classification:
    """Classify a reduced curve as free, plus-one generated, or other.

    Free verdicts carry an exact Saito determinant certificate and are
    final.  Plus-one-generated verdicts require the exact generator and
    relation pattern plus Hilbert-function agreement with the rank-2
    resolution for every degree up to the bound.  Anything else is reported
    relative to the bound, never guessed.
    """
    mod = as_module(f)
    n = mod.degree
    if bound is None:
        bound = 2 * n
    if bound < n:
        raise ValueError("bound must be at least deg(f)")
    cached = mod._classification.get(bound)
    if cached is None:
        cached = _classify_impl(mod, bound)
        mod._classification[bound] = cached
        if isinstance(cached, PlusOneGenerated):
            mod._pog_certified_upto = max(
                getattr(mod, "_pog_certified_upto", -1), bound
            )
    return cached


def _classify_impl(mod: SyzygyModule, bound: int) -> Classification:
    n = mod.degree
    gens: list[tuple[int, Derivation]] = []
    for k in range(bound + 1):
        new = mod.new_generators(k)
        if not new:
            continue
        gens.extend((k, theta) for theta in new)
        if len(gens) == 2 and gens[0][0] + gens[1][0] == n - 1:
            saito = saito_check(mod.f, gens[0][1], gens[1][1])
            if saito.passed:
                pair = sorted(gens, key=lambda t: t[0])
                return Free(
                    exponents=(pair[0][0], pair[1][0]),
                    basis=(pair[0][1], pair[1][1]),
                    saito_constant=saito.constant,  # type: ignore[arg-type]
                    mdr=pair[0][0],
                )
        if len(gens) == 3:
            pog = _try_pog(mod, gens, bound)
            if pog is not None:
                return pog
    degrees = tuple(sorted(d for d, _ in gens))
    diagnostic = ""
    if len(gens) < 2 or degrees[-1] >= bound - 1:
        diagnostic = "generator pattern still open at the bound; rerun with a larger bound"
    return Other(
        mdr=degrees[0] if degrees else mod.mdr(),
        generator_degrees=degrees,
        bound=bound,
        diagnostic=diagnostic,
    )
