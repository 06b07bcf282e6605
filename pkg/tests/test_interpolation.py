from fractions import Fraction
from math import comb

import pytest

from fatpoints.geometry import EmptyPointSet, Hyperplane, PointSet, ProjPoint
from fatpoints.interpolation import (
    Form,
    ZeroDirection,
    ZeroForm,
    alpha,
    condition_row,
    directional_derivative,
    divide_by_linear,
    evaluate,
    form_from_terms,
    forms_basis,
    graded_dim,
    linear_form,
    monomial_basis,
    mult_at,
    multiply,
    vanishing_system,
)
from fatpoints.configurations import SplitMix64, random_points

from _oracles import minor_rank


def pt(*coords):
    return ProjPoint(tuple(coords))


def hp(*covector):
    return Hyperplane(tuple(covector))


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------

def test_monomial_basis_counts():
    assert monomial_basis(3, 1).size == 4
    assert monomial_basis(3, 2).size == 10
    assert monomial_basis(2, 3).size == 10


def test_monomial_basis_graded_lex_order():
    b = monomial_basis(2, 3)
    assert b.exponents[0] == (3, 0, 0)
    assert b.exponents[-1] == (0, 0, 3)
    for a, b2 in zip(b.exponents, b.exponents[1:]):
        assert a > b2  # strictly decreasing lexicographically


@pytest.mark.parametrize("n,d", [(1, 4), (2, 5), (3, 6), (4, 3)])
def test_monomial_basis_size_formula(n, d):
    b = monomial_basis(n, d)
    assert b.size == comb(n + d, n)
    assert all(sum(e) == d and len(e) == n + 1 for e in b.exponents)


# ---------------------------------------------------------------------------
# Condition rows
# ---------------------------------------------------------------------------

def test_condition_row_plain_evaluation():
    b = monomial_basis(2, 2)
    p = pt(1, 2, 3)
    row = condition_row(b, p, (0, 0, 0))
    for value, e in zip(row, b.exponents):
        assert value == 1 ** e[0] * 2 ** e[1] * 3 ** e[2]


def test_condition_row_first_partial_at_binary_point():
    b = monomial_basis(1, 2)  # x0^2, x0 x1, x1^2
    assert condition_row(b, pt(1, 0), (0, 1)) == (0, 1, 0)
    assert condition_row(b, pt(1, 2), (1, 0)) == (2, 2, 0)


# ---------------------------------------------------------------------------
# Vanishing systems and graded dimensions
# ---------------------------------------------------------------------------

def test_vanishing_system_shape_and_rank_general_points():
    z = random_points(3, 4, seed=77)
    vs = vanishing_system(z, 2, 1)
    assert vs.matrix.rows == 4 and vs.matrix.cols == 10
    rows = vs.matrix.row_lists()
    assert vs.rank == minor_rank(rows) == 4


def test_vanishing_system_double_point_on_lines():
    z = PointSet(3, (pt(1, 2, 3, 4),))
    vs = vanishing_system(z, 1, 2)
    assert vs.matrix.rows == 4 and vs.matrix.cols == 4
    assert vs.rank == 4  # no hyperplane is double at a point


def test_vanishing_system_single_point_single_condition():
    z = PointSet(3, (pt(1, 0, 0, 0),))
    vs = vanishing_system(z, 2, 1)
    assert vs.matrix.rows == 1 and vs.matrix.cols == 10
    assert vs.rank == 1


def triangle():
    return PointSet(2, (pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)))


def test_graded_dim_examples():
    z = triangle()
    assert graded_dim(z, 1, 1) == 0
    assert graded_dim(z, 2, 1) == 3


def test_graded_dim_star4_triple_points():
    z = PointSet(3, (pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0),
                     pt(0, 0, 0, 1)))
    assert graded_dim(z, 2, 3) == 0


def test_graded_dim_degrees_below_order():
    z = PointSet(3, (pt(1, 2, 3, 4),))
    assert graded_dim(z, 0, 2) == 0
    assert graded_dim(z, 1, 3) == 0


def test_graded_dim_positive_is_monotone_in_degree():
    rng = SplitMix64(13)
    for _ in range(8):
        n = 2 + rng.below(2)
        z = random_points(n, 2 + rng.below(5), seed=rng.next_u64())
        k = 1 + rng.below(2)
        a = alpha(z, k)
        for d in range(a, a + 3):
            assert graded_dim(z, d, k) > 0


def test_graded_dim_prime_field_agrees():
    z = random_points(3, 5, seed=3)
    p = 2_147_483_647
    for (d, k) in [(1, 1), (2, 1), (3, 2), (4, 2)]:
        assert graded_dim(z, d, k, field=p) == graded_dim(z, d, k)


# ---------------------------------------------------------------------------
# alpha
# ---------------------------------------------------------------------------

def test_alpha_paper_examples(five_points, concurrent, coplanar5):
    assert [alpha(five_points, k) for k in (1, 2, 3)] == [2, 4, 5]
    assert [alpha(concurrent, k) for k in (1, 2)] == [2, 3]
    assert alpha(coplanar5, 1) == 1


def test_alpha_validates_input():
    with pytest.raises(EmptyPointSet):
        alpha(PointSet(3, ()), 1)
    with pytest.raises(ValueError):
        alpha(triangle(), 0)


def test_alpha_jump_and_subadditivity_small():
    rng = SplitMix64(17)
    for _ in range(10):
        n = 2 + rng.below(2)
        z = random_points(n, 1 + rng.below(7), seed=rng.next_u64())
        a1 = alpha(z, 1)
        prev = a1
        for k in (2, 3):
            a = alpha(z, k)
            assert a >= prev + 1
            assert a <= k * a1
            prev = a


def test_alpha_single_point_is_k():
    z = PointSet(3, (pt(1, 2, 3, 4),))
    assert [alpha(z, k) for k in (1, 2, 3, 4)] == [1, 2, 3, 4]


# ---------------------------------------------------------------------------
# forms_basis
# ---------------------------------------------------------------------------

def test_forms_basis_empty_when_no_kernel():
    assert forms_basis(triangle(), 1, 1) == []


def test_forms_basis_single_point_linear_forms():
    z = PointSet(3, (pt(1, 0, 0, 0),))
    forms = forms_basis(z, 1, 1)
    assert len(forms) == 3
    for f in forms:
        assert evaluate(f, z.points[0]) == 0


def test_forms_basis_star5_unique_form_is_product_of_planes(star5):
    forms = forms_basis(star5.points, 5, 3)
    assert len(forms) == 1
    product = linear_form(star5.arrangement.hyperplanes[0])
    for h in star5.arrangement.hyperplanes[1:]:
        product = multiply(product, linear_form(h))
    got, want = forms[0].coeffs, product.coeffs
    # proportionality via cross-multiplication
    i = next(j for j, c in enumerate(want) if c)
    assert all(got[j] * want[i] == want[j] * got[i] for j in range(len(got)))


def test_forms_basis_members_vanish_to_order(jump_configs):
    rng = SplitMix64(19)
    for z in jump_configs[:6]:
        k = 1 + rng.below(2)
        d = alpha(z, k)
        for f in forms_basis(z, d, k):
            for p in z.points:
                assert mult_at(f, p) >= k


# ---------------------------------------------------------------------------
# Form calculus
# ---------------------------------------------------------------------------

def x_power_form(d):
    return form_from_terms(3, d, {(d, 0, 0, 0): Fraction(1)})


def test_directional_derivative_power():
    f = x_power_form(4)
    df = directional_derivative(f, (1, 0, 0, 0))
    assert df.terms() == {(3, 0, 0, 0): Fraction(4)}
    assert df.degree == 3


def test_directional_derivative_vanishes():
    f = form_from_terms(3, 3, {(0, 1, 1, 1): Fraction(1)})  # x1 x2 x3
    df = directional_derivative(f, (1, 0, 0, 0))
    assert df.is_zero()


def test_directional_derivative_errors():
    f = x_power_form(2)
    with pytest.raises(ZeroDirection):
        directional_derivative(f, (0, 0, 0, 0))
    zero = form_from_terms(3, 2, {})
    with pytest.raises(ZeroForm):
        directional_derivative(zero, (1, 0, 0, 0))


def random_form_with_multiplicity(rng, d, m):
    """x0^(d-m) g_m + x0^(d-m-1) g_{m+1} + ... with g_m nonzero: multiplicity
    exactly m at (1:0:0:0)."""
    terms = {}
    for i in range(m, d + 1):
        for e in monomial_basis(2, i).exponents:
            c = rng.int_in(-4, 4)
            if i == m and not any(terms):
                c = c or 1
            if c:
                terms[(d - i,) + e] = Fraction(c)
    return form_from_terms(3, d, terms)


def test_directional_derivative_keeps_multiplicity():
    origin = pt(1, 0, 0, 0)
    rng = SplitMix64(29)
    for _ in range(10):
        d = 4 + rng.below(2)
        m = 2 + rng.below(d - 3) if d > 3 else 2
        f = random_form_with_multiplicity(rng, d, m)
        assert 2 <= mult_at(f, origin) < d
        m_actual = mult_at(f, origin)
        found = False
        for i in range(4):
            v = [0, 0, 0, 0]
            v[i] = 1
            df = directional_derivative(f, tuple(v))
            if df.is_zero():
                continue
            assert df.degree == f.degree - 1
            if mult_at(df, origin) == m_actual:
                found = True
        assert found


def test_mult_at_examples():
    f = form_from_terms(3, 3, {(0, 1, 1, 1): Fraction(1)})  # x1 x2 x3
    assert mult_at(f, pt(1, 0, 0, 0)) == 3
    g = form_from_terms(3, 2, {(0, 2, 0, 0): Fraction(1),
                               (0, 0, 1, 1): Fraction(1)})  # x1^2 + x2 x3
    assert mult_at(g, pt(1, 0, 0, 0)) == 2
    assert mult_at(g, pt(0, 1, 0, 0)) == 0
    with pytest.raises(ZeroForm):
        mult_at(form_from_terms(3, 2, {}), pt(1, 0, 0, 0))


def test_mult_at_star5_form_is_three_everywhere(star5):
    f = forms_basis(star5.points, 5, 3)[0]
    for p in star5.points.points:
        assert mult_at(f, p) == 3


def test_divide_by_linear_basic():
    f = form_from_terms(3, 2, {(1, 1, 0, 0): Fraction(1)})  # x0 x1
    q = divide_by_linear(f, hp(1, 0, 0, 0))
    assert q is not None and q.terms() == {(0, 1, 0, 0): Fraction(1)}
    g = form_from_terms(3, 2, {(2, 0, 0, 0): Fraction(1),
                               (0, 2, 0, 0): Fraction(1)})  # x0^2 + x1^2
    assert divide_by_linear(g, hp(1, 0, 0, 0)) is None


def test_divide_by_linear_random_products():
    rng = SplitMix64(37)
    for _ in range(15):
        cov = tuple(rng.int_in(-3, 3) for _ in range(4))
        if not any(cov):
            continue
        h = Hyperplane(cov)
        terms = {}
        for e in monomial_basis(3, 2).exponents:
            c = rng.int_in(-3, 3)
            if c:
                terms[e] = Fraction(c)
        if not terms:
            continue
        q0 = form_from_terms(3, 2, terms)
        f = multiply(q0, linear_form(h))
        q = divide_by_linear(f, h)
        assert q is not None
        assert multiply(q, linear_form(h)).coeffs == f.coeffs


def test_divide_chain_reduces_star_form_to_constant(star5):
    f = forms_basis(star5.points, 5, 3)[0]
    for h in star5.arrangement.hyperplanes:
        f = divide_by_linear(f, h)
        assert f is not None
    assert f.degree == 0 and not f.is_zero()
