"""Fat-point interpolation: monomial bases, vanishing systems, initial degrees.

A form of degree d vanishes to order >= k at a point P exactly when all its
partial derivatives of total order k-1 vanish there (for homogeneous forms
of degree >= k-1 the lower orders follow by the Euler relation).  Stacking
one row per point per order-(k-1) derivative multi-index gives the
vanishing system; its kernel is the degree-d graded piece of the k-th
symbolic power of the point ideal, and the first degree with a nonzero
kernel is the initial degree alpha.

All monomials and derivative multi-indices are ordered graded-
lexicographically with x0 > x1 > ... > xn, fixed globally, so matrices,
kernels and forms are bit-identical across runs.

The alpha search certifies every answer in rational arithmetic.  Two
shortcuts are used, both one-sided and therefore sound:

* full column rank modulo a fixed large prime certifies full rational
  column rank (reduction mod p can only lower the rank), closing out the
  degrees below alpha cheaply;
* a degree-d kernel is certified nonzero for free when the system has
  more columns than rows, or when d reaches alpha(k-1) + alpha(1), where a
  product of two kernel forms of the lower orders lives.

Everything else falls back to fraction-free integer elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, lcm, perm
from typing import Optional, Sequence

from .exactalg import (
    RATIONAL,
    Matrix,
    as_scalar,
    bareiss_kernel,
    bareiss_rank,
    rank_mod,
)
from .geometry import EmptyPointSet, Hyperplane, PointSet, ProjPoint

#: Fixed modulus for the full-rank prefilter (2^31 - 1, prime, > 2^30).
CERT_PRIME = 2_147_483_647


class InterpolationError(Exception):
    """Base class for interpolation input errors."""


class ZeroForm(InterpolationError):
    """An operation that needs a nonzero form received the zero form."""


class ZeroDirection(InterpolationError):
    """Directional derivative along the zero vector."""


class InternalInvariantError(Exception):
    """The alpha search ran past a theorem-guaranteed bound; this indicates
    an arithmetic bug, not bad input."""


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialBasis:
    """All exponent vectors of a fixed total degree, graded-lex ordered."""

    num_vars: int
    degree: int
    exponents: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.exponents)


def _graded_exponents(num_vars: int, total: int):
    if num_vars == 1:
        yield (total,)
        return
    for e in range(total, -1, -1):
        for rest in _graded_exponents(num_vars - 1, total - e):
            yield (e,) + rest


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> MonomialBasis:
    """Degree-d monomials in the n+1 coordinates of P^n; count C(n+d, n)."""
    if n < 1:
        raise ValueError("ambient dimension must be at least 1")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    exps = tuple(_graded_exponents(n + 1, d))
    assert len(exps) == comb(n + d, n)
    return MonomialBasis(n + 1, d, exps)


@dataclass(frozen=True)
class Form:
    """Homogeneous form: a coefficient vector over a monomial basis."""

    basis: MonomialBasis
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.basis.size:
            raise ValueError("coefficient count does not match basis size")

    @property
    def degree(self) -> int:
        return self.basis.degree

    @property
    def num_vars(self) -> int:
        return self.basis.num_vars

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return {e: c for e, c in zip(self.basis.exponents, self.coeffs) if c}


def form_from_terms(n: int, d: int, terms: dict[tuple[int, ...], Fraction]) -> Form:
    """Assemble a Form from an exponent -> coefficient mapping."""
    basis = monomial_basis(n, d)
    index = _basis_index(n, d)
    coeffs = [Fraction(0)] * basis.size
    for e, c in terms.items():
        coeffs[index[e]] = Fraction(c)
    return Form(basis, tuple(coeffs))


@lru_cache(maxsize=None)
def _basis_index(n: int, d: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(monomial_basis(n, d).exponents)}


def evaluate(f: Form, point: ProjPoint) -> Fraction:
    """Value of f at the normalized coordinates of the point."""
    return _eval_derivative(f, (0,) * f.num_vars, point.coords)


def multiply(f: Form, g: Form) -> Form:
    """Exact product of two forms in the same number of variables."""
    if f.num_vars != g.num_vars:
        raise ValueError("forms live in different polynomial rings")
    out: dict[tuple[int, ...], Fraction] = {}
    for ef, cf in f.terms().items():
        for eg, cg in g.terms().items():
            key = tuple(a + b for a, b in zip(ef, eg))
            out[key] = out.get(key, Fraction(0)) + cf * cg
    out = {e: c for e, c in out.items() if c}
    return form_from_terms(f.num_vars - 1, f.degree + g.degree, out)


def linear_form(h: Hyperplane) -> Form:
    """The degree-1 form cutting out a hyperplane."""
    n = h.dim
    terms = {}
    for i, c in enumerate(h.covector):
        if c:
            e = [0] * (n + 1)
            e[i] = 1
            terms[tuple(e)] = c
    return form_from_terms(n, 1, terms)


# ---------------------------------------------------------------------------
# Vanishing conditions
# ---------------------------------------------------------------------------

def condition_row(mono_basis: MonomialBasis, point: ProjPoint,
                  deriv: Sequence[int]) -> tuple[Fraction, ...]:
    """Row of derivative-evaluations: entry j is the deriv-th partial of
    monomial j at the point.

    Differentiation of a monomial is pure exponent arithmetic: the
    coefficient is a product of falling factorials.
    """
    deriv = tuple(deriv)
    if len(deriv) != mono_basis.num_vars:
        raise ValueError("derivative multi-index has wrong length")
    if point.dim + 1 != mono_basis.num_vars:
        raise ValueError("point dimension does not match the basis")
    coords = point.coords
    row = []
    for a in mono_basis.exponents:
        row.append(_derivative_value(a, deriv, coords))
    return tuple(row)


def _derivative_value(expo: tuple[int, ...], deriv: tuple[int, ...],
                      coords: Sequence) -> Fraction:
    c = 1
    for ai, mi in zip(expo, deriv):
        if ai < mi:
            return Fraction(0)
        if mi:
            c *= perm(ai, mi)
    val = Fraction(c)
    for x, ai, mi in zip(coords, expo, deriv):
        e = ai - mi
        if e:
            if x == 0:
                return Fraction(0)
            val *= x ** e
    return val


def _eval_derivative(f: Form, deriv: tuple[int, ...], coords) -> Fraction:
    total = Fraction(0)
    for e, c in zip(f.basis.exponents, f.coeffs):
        if c:
            total += c * _derivative_value(e, deriv, coords)
    return total


@dataclass(frozen=True)
class VanishingSystem:
    """The order-k vanishing conditions of a point set on degree-d forms.

    Rows are grouped by point, then by derivative multi-index in graded-lex
    order; there are ``|Z| * C(n+k-1, n)`` rows (multi-indices of total
    order k-1) and ``C(n+d, n)`` columns.  The kernel is the degree-d piece
    of the k-th symbolic power whenever d >= k-1.
    """

    point_set: PointSet
    degree: int
    order: int
    matrix: Matrix
    rank: int


@lru_cache(maxsize=None)
def _int_coords(point: ProjPoint) -> tuple[int, ...]:
    """Primitive integer representative of a normalized point."""
    den = 1
    for c in point.coords:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in point.coords]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


@lru_cache(maxsize=None)
def _int_rows(z: PointSet, d: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Integer vanishing-condition rows (points scaled to integer coords).

    Each row differs from the exact row at the normalized point by the
    overall factor scale**(d-k+1), so rank and kernel are unchanged.
    """
    n = z.dim
    exps = monomial_basis(n, d).exponents
    minds = monomial_basis(n, k - 1).exponents
    rows = []
    for point in z.points:
        ic = _int_coords(point)
        pows = []
        for c in ic:
            col = [1] * (d + 1)
            for e in range(1, d + 1):
                col[e] = col[e - 1] * c
            pows.append(col)
        for m in minds:
            row = []
            for a in exps:
                coeff = 1
                for ai, mi in zip(a, m):
                    if ai < mi:
                        coeff = 0
                        break
                    if mi:
                        coeff *= perm(ai, mi)
                if coeff:
                    for i in range(n + 1):
                        coeff *= pows[i][a[i] - m[i]]
                row.append(coeff)
            rows.append(tuple(row))
    return tuple(rows)


def vanishing_system(z: PointSet, d: int, k: int) -> VanishingSystem:
    """Build the exact vanishing system and its rational rank."""
    _check_degree_order(d, k)
    n = z.dim
    basis = monomial_basis(n, d)
    minds = monomial_basis(n, k - 1).exponents
    rows = [condition_row(basis, p, m) for p in z.points for m in minds]
    mat = Matrix.from_rows(rows, cols=basis.size)
    return VanishingSystem(z, d, k, mat, bareiss_rank(_int_rows(z, d, k)))


def _check_degree_order(d: int, k: int) -> None:
    if k < 1:
        raise ValueError("vanishing order must be at least 1")
    if d < 0:
        raise ValueError("degree must be nonnegative")


def graded_dim(z: PointSet, d: int, k: int, field: int | None = RATIONAL) -> int:
    """dim of the degree-d graded piece of the k-th symbolic power.

    Equals C(n+d, n) minus the rank of the vanishing system.  Degrees below
    k-1 carry no nonzero forms of multiplicity >= k at all, so the answer
    there is 0 without building a system.
    """
    _check_degree_order(d, k)
    if d < k - 1:
        return 0
    n = z.dim
    cols = comb(n + d, n)
    rows = _int_rows(z, d, k)
    if not rows:
        return cols
    if field is RATIONAL:
        return cols - bareiss_rank(rows)
    return cols - rank_mod(rows, field)


def _kernel_is_zero_certified(z: PointSet, d: int, k: int) -> bool:
    """Rationally certified test for graded_dim == 0.

    Full column rank mod CERT_PRIME implies full rational column rank;
    anything short of that is decided by exact integer elimination.
    """
    n = z.dim
    cols = comb(n + d, n)
    n_rows = len(z.points) * comb(n + k - 1, n)
    if cols > n_rows:
        return False
    rows = _int_rows(z, d, k)
    if rank_mod(rows, CERT_PRIME) == cols:
        return True
    return bareiss_rank(rows) == cols


def alpha(z: PointSet, k: int, field: int | None = RATIONAL) -> int:
    """Initial degree of the k-th symbolic power: the least d with a
    nonzero degree-d form vanishing to order >= k on all of Z.

    The search scans upward from max(k, alpha(k-1)+1); each step of the
    symbolic-power ladder raises alpha by at least 1, so the lower bound is
    sharp.  It must terminate by alpha(k-1) + alpha(1), where a product of
    minimal forms of orders k-1 and 1 provides a kernel element; running
    past that bound raises InternalInvariantError.
    """
    if not z.points:
        raise EmptyPointSet("alpha needs a nonempty point set")
    if k < 1:
        raise ValueError("symbolic power must be at least 1")
    return _alpha_cached(z, k, field)


@lru_cache(maxsize=None)
def _alpha_cached(z: PointSet, k: int, field: int | None) -> int:
    if k == 0:
        return 0
    prev = _alpha_cached(z, k - 1, field)
    lower = max(k, prev + 1)
    if k == 1:
        # a product of one hyperplane through each point vanishes on Z
        upper = len(z.points)
    else:
        upper = prev + _alpha_cached(z, 1, field)
    for d in range(lower, upper + 1):
        if d == upper:
            return d
        if field is RATIONAL:
            if not _kernel_is_zero_certified(z, d, k):
                return d
        else:
            n = z.dim
            cols = comb(n + d, n)
            if cols > len(z.points) * comb(n + k - 1, n):
                return d
            if rank_mod(_int_rows(z, d, k), field) < cols:
                return d
    raise InternalInvariantError(
        "no kernel found up to the guaranteed bound %d for order %d" % (upper, k))


def forms_basis(z: PointSet, d: int, k: int) -> list[Form]:
    """Canonical basis of the degree-d piece of the k-th symbolic power."""
    _check_degree_order(d, k)
    if d < k - 1:
        return []
    basis = monomial_basis(z.dim, d)
    vectors = bareiss_kernel(_int_rows(z, d, k), basis.size)
    return [Form(basis, v) for v in vectors]


# ---------------------------------------------------------------------------
# Form-level operations
# ---------------------------------------------------------------------------

def directional_derivative(f: Form, direction: Sequence) -> Form:
    """The form sum_i v_i * df/dx_i, of degree one less.

    May be the zero form (e.g. when f does not involve the direction's
    variables at all).
    """
    if f.is_zero():
        raise ZeroForm("directional derivative of the zero form")
    if f.degree < 1:
        raise ValueError("cannot differentiate a constant form")
    v = [as_scalar(x) for x in direction]
    if len(v) != f.num_vars:
        raise ValueError("direction has wrong length")
    if all(x == 0 for x in v):
        raise ZeroDirection("directional derivative along the zero vector")
    out: dict[tuple[int, ...], Fraction] = {}
    for e, c in f.terms().items():
        for i, vi in enumerate(v):
            if vi and e[i]:
                key = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[key] = out.get(key, Fraction(0)) + c * e[i] * vi
    return form_from_terms(f.num_vars - 1, f.degree - 1, out)


def mult_at(f: Form, point: ProjPoint) -> int:
    """Multiplicity of f at a point: the largest m such that every partial
    derivative of order below m vanishes there.  At most deg f for a
    nonzero form; 0 when f does not vanish at the point."""
    if f.is_zero():
        raise ZeroForm("multiplicity of the zero form is undefined")
    if point.dim + 1 != f.num_vars:
        raise ValueError("point dimension does not match the form")
    n = f.num_vars - 1
    coords = point.coords
    for order in range(f.degree + 1):
        for m in monomial_basis(n, order).exponents:
            if _eval_derivative(f, m, coords) != 0:
                return order
    raise AssertionError("nonzero form with all derivatives vanishing")


def divide_by_linear(f: Form, h: Hyperplane) -> Optional[Form]:
    """Exact quotient f / (linear form of h), or None when it does not divide.

    Coefficient-matching long division against the covector's leading
    variable; the loop maintains f == quotient * linear + remainder, so an
    empty remainder certifies quotient * linear == f exactly.
    """
    if f.is_zero():
        raise ZeroForm("cannot divide the zero form")
    if f.degree < 1:
        raise ValueError("cannot divide a constant form")
    if h.dim + 1 != f.num_vars:
        raise ValueError("hyperplane dimension does not match the form")
    cov = h.covector
    j = next(i for i, c in enumerate(cov) if c)  # leading coeff is 1
    work = dict(f.terms())
    quotient: dict[tuple[int, ...], Fraction] = {}
    while work:
        lead = max(work)
        if lead[j] == 0:
            return None
        c = work.pop(lead)
        qe = lead[:j] + (lead[j] - 1,) + lead[j + 1:]
        quotient[qe] = c
        for i, ci in enumerate(cov):
            if i == j or not ci:
                continue
            key = qe[:i] + (qe[i] + 1,) + qe[i + 1:]
            nxt = work.get(key, Fraction(0)) - c * ci
            if nxt:
                work[key] = nxt
            elif key in work:
                del work[key]
    return form_from_terms(f.num_vars - 1, f.degree - 1, quotient)
