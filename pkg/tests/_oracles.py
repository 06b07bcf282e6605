"""Independent brute-force oracles used to pin expected values in tests.

These deliberately avoid the library's elimination code paths: determinants
come from cofactor expansion, ranks from exhaustive minor search, and
kernels from a plain Gauss-Jordan over Fraction.  They are exponential or
cubic-with-fractions and must only ever see small matrices.
"""

from fractions import Fraction
from itertools import combinations


def det_cofactor(rows):
    """Determinant by recursive cofactor expansion along the first row."""
    n = len(rows)
    assert all(len(r) == n for r in rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        minor = [[r[c] for c in range(n) if c != j] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(x) * det_cofactor(minor)
    return total


def minor_rank(rows):
    """Rank as the size of the largest nonsingular square submatrix."""
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    for r in range(min(n_rows, n_cols), 0, -1):
        for rsel in combinations(range(n_rows), r):
            for csel in combinations(range(n_cols), r):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                if det_cofactor(sub) != 0:
                    return r
    return 0


def gauss_jordan_kernel(rows, n_cols):
    """Canonical null basis from a plain Fraction Gauss-Jordan RREF."""
    m = [[Fraction(x) for x in row] for row in rows]
    n_rows = len(m)
    piv_cols = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    piv_set = set(piv_cols)
    basis = []
    for free in range(n_cols):
        if free in piv_set:
            continue
        v = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        for i, pc in enumerate(piv_cols):
            v[pc] = -m[i][free]
        basis.append(tuple(v))
    return basis
