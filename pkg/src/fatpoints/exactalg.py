"""Exact dense linear algebra over the rationals and over prime fields.

Rational scalars are `fractions.Fraction` values, which the Fraction type
itself keeps in lowest terms with a positive denominator.  Prime-field
scalars are plain ints in ``[0, p)`` with the modulus carried by the
containing matrix, never by the scalar.

Rank and kernel computations are fraction-free: rational rows are scaled
to primitive integer vectors (which changes neither rank nor kernel) and
eliminated with the Bareiss scheme, so every intermediate entry is an
integer minor of the input and the coefficient blowup of naive rational
pivoting never occurs.  Pivots are chosen deterministically: first nonzero
entry scanning rows top-to-bottom within a column, columns left-to-right.

Prime moduli must lie in ``(MIN_PRIME, MAX_PRIME)`` so that modular
elimination can run on int64 arrays without overflow.  All functions are
pure and safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Matrix",
    "RATIONAL",
    "MIN_PRIME",
    "MAX_PRIME",
    "as_scalar",
    "rank",
    "kernel_basis",
    "bareiss_rank",
    "bareiss_kernel",
    "rank_mod",
    "kernel_mod",
    "residue",
    "is_probable_prime",
]

#: Field tag for the rationals (prime fields are tagged by the prime itself).
RATIONAL = None

#: Prime-field moduli must exceed this (spec of the scalar type).
MIN_PRIME = 2**30
#: ... and must satisfy (p-1)^2 < 2^63 so int64 modular elimination is exact.
MAX_PRIME = isqrt(2**63 - 1)


def as_scalar(value) -> Fraction:
    """Coerce ints, rational strings like ``"2/3"`` or Fractions to a Fraction.

    Floats are rejected: exactness is the whole point of this module.
    """
    if isinstance(value, float):
        raise TypeError("refusing to coerce float %r to an exact rational" % (value,))
    return Fraction(value)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix whose entries all live in one exact field.

    ``field`` is ``RATIONAL`` (entries are Fractions) or a prime ``p``
    (entries are ints in ``[0, p)``).
    """

    rows: int
    cols: int
    entries: tuple
    field: int | None = RATIONAL

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                "entry count %d does not match %d x %d"
                % (len(self.entries), self.rows, self.cols)
            )
        if self.field is not RATIONAL:
            _check_modulus(self.field)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], field: int | None = RATIONAL,
                  cols: int | None = None) -> "Matrix":
        """Build a matrix from an iterable of rows, coercing entries."""
        rows = [list(r) for r in rows]
        n_rows = len(rows)
        if n_rows:
            n_cols = len(rows[0])
            if any(len(r) != n_cols for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != n_cols:
                raise ValueError("explicit cols does not match row length")
        else:
            n_cols = 0 if cols is None else cols
        if field is RATIONAL:
            entries = tuple(as_scalar(x) for r in rows for x in r)
        else:
            _check_modulus(field)
            entries = tuple(int(x) % field for r in rows for x in r)
        return cls(n_rows, n_cols, entries, field)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]


def rank(m: Matrix) -> int:
    """Exact rank; deterministic and independent of row order."""
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.field is RATIONAL:
        return bareiss_rank(_integer_rows(m))
    return rank_mod(m.row_lists(), m.field)


def kernel_basis(m: Matrix) -> list[tuple]:
    """Canonical basis of the right kernel, ``cols - rank`` vectors.

    The basis is the one read off the reduced row echelon form: one vector
    per free column (ordered by column), with entry 1 in its own free
    column and 0 in every other free column.  Stacked as rows the basis is
    itself in reduced echelon form.
    """
    if m.cols == 0:
        return []
    if m.field is RATIONAL:
        if m.rows == 0:
            return bareiss_kernel([], m.cols)
        return bareiss_kernel(_integer_rows(m), m.cols)
    return kernel_mod(m.row_lists(), m.cols, m.field)


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Scale each rational row to a primitive integer vector."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        ints = [int(x * den) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


# ---------------------------------------------------------------------------
# Fraction-free (Bareiss) elimination over the integers
# ---------------------------------------------------------------------------

def _bareiss_echelon(m: list[list[int]]) -> tuple[int, list[int], list[list[int]]]:
    """In-place fraction-free row echelon; returns (rank, pivot cols, pivot rows).

    One-step Bareiss update: every produced entry is a minor of the input
    (Sylvester's identity), so the division by the previous pivot is exact.
    Rows whose leading entry is already zero still get rescaled, which keeps
    the minor invariant alive for later steps.
    """
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    piv_cols: list[int] = []
    pr = 0
    prev = 1
    for pc in range(n_cols):
        if pr == n_rows:
            break
        pivot_at = -1
        for i in range(pr, n_rows):
            if m[i][pc]:
                pivot_at = i
                break
        if pivot_at < 0:
            continue
        if pivot_at != pr:
            m[pr], m[pivot_at] = m[pivot_at], m[pr]
        piv = m[pr][pc]
        top = m[pr]
        for i in range(pr + 1, n_rows):
            row = m[i]
            f = row[pc]
            if f:
                for j in range(pc + 1, n_cols):
                    row[j] = (piv * row[j] - f * top[j]) // prev
            elif piv != prev:
                for j in range(pc + 1, n_cols):
                    if row[j]:
                        row[j] = piv * row[j] // prev
            row[pc] = 0
        prev = piv
        piv_cols.append(pc)
        pr += 1
    return pr, piv_cols, m[:pr]


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix via fraction-free elimination."""
    if not rows:
        return 0
    rank_, _, _ = _bareiss_echelon([list(r) for r in rows])
    return rank_


def bareiss_kernel(rows: Sequence[Sequence[int]], n_cols: int) -> list[tuple[Fraction, ...]]:
    """Canonical rational kernel basis of an integer matrix.

    Echelonizes fraction-free, then back-substitutes one vector per free
    column.  The result is exactly the reduced-echelon null basis, so it
    depends only on the row space of the input.
    """
    if not rows:
        piv_cols: list[int] = []
        ech: list[list[int]] = []
    else:
        _, piv_cols, ech = _bareiss_echelon([list(r) for r in rows])
    piv_set = set(piv_cols)
    basis = []
    for free in range(n_cols):
        if free in piv_set:
            continue
        v: list[Fraction] = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        for i in reversed(range(len(piv_cols))):
            pc = piv_cols[i]
            row = ech[i]
            s = Fraction(0)
            for j in range(pc + 1, n_cols):
                vj = v[j]
                if vj:
                    s += row[j] * vj
            if s:
                v[pc] = Fraction(-s, row[pc])
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# Modular elimination (int64, vectorized)
# ---------------------------------------------------------------------------

def _check_modulus(p) -> None:
    if not isinstance(p, int):
        raise TypeError("prime modulus must be an int")
    if not (MIN_PRIME < p <= MAX_PRIME):
        raise ValueError("prime modulus must lie in (2^30, %d]" % MAX_PRIME)


def residue(x, p: int) -> int:
    """Image of an int or Fraction in F_p."""
    if isinstance(x, Fraction):
        den = x.denominator % p
        if den == 0:
            raise ZeroDivisionError("denominator divisible by the modulus")
        return (x.numerator % p) * pow(den, p - 2, p) % p
    return int(x) % p


def _mod_array(rows: Sequence[Sequence], p: int) -> np.ndarray:
    try:
        a = np.array(rows, dtype=np.int64)
    except (OverflowError, TypeError):
        a = np.array([[residue(x, p) for x in row] for row in rows], dtype=np.int64)
    return a % p


def _echelon_mod(a: np.ndarray, p: int, reduce_above: bool) -> tuple[int, list[int], np.ndarray]:
    """Row echelon (optionally reduced) over F_p on an int64 array.

    Entries stay in [0, p) between steps; since p^2 < 2^63 the intermediate
    products are exact in int64.
    """
    n_rows, n_cols = a.shape
    piv_cols: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = a[r, c:] * inv % p
        factors = a[r + 1:, c]
        nzb = np.nonzero(factors)[0]
        if nzb.size:
            idx = nzb + r + 1
            a[idx, c:] = (a[idx, c:] - a[idx, c][:, None] * a[r, c:]) % p
        piv_cols.append(c)
        r += 1
    if reduce_above:
        for t in reversed(range(len(piv_cols))):
            c = piv_cols[t]
            nz = np.nonzero(a[:t, c])[0]
            if nz.size:
                a[nz, c:] = (a[nz, c:] - a[nz, c][:, None] * a[t, c:]) % p
    return r, piv_cols, a


def rank_mod(rows: Sequence[Sequence], p: int) -> int:
    """Rank over F_p.  Never exceeds the rational rank of an integer matrix."""
    _check_modulus(p)
    if not rows or not len(rows[0]):
        return 0
    a = _mod_array(rows, p)
    r, _, _ = _echelon_mod(a, p, reduce_above=False)
    return r


def kernel_mod(rows: Sequence[Sequence], n_cols: int, p: int) -> list[tuple[int, ...]]:
    """Canonical kernel basis over F_p (same construction as the rational one)."""
    _check_modulus(p)
    if not rows:
        piv_cols: list[int] = []
        a = np.zeros((0, n_cols), dtype=np.int64)
    else:
        a = _mod_array(rows, p)
        _, piv_cols, a = _echelon_mod(a, p, reduce_above=True)
    piv_set = set(piv_cols)
    basis = []
    for free in range(n_cols):
        if free in piv_set:
            continue
        v = [0] * n_cols
        v[free] = 1
        for i, pc in enumerate(piv_cols):
            v[pc] = int(-a[i, free]) % p
        basis.append(tuple(v))
    return basis


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set; deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
