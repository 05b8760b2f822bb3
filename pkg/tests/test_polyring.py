import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcpc.galois import Field
from qcpc.polyring import (
    NEG_INFINITY,
    Polynomial,
    PolyMatrix,
    PolynomialError,
    poly_gcd,
    poly_xgcd,
    substitute_power,
    upper_det,
)

GF2 = Field(2, modulus=(0, 1))
GF3 = Field(3, modulus=(0, 1))


def coeff_lists(q: int, max_len: int = 12):
    return st.lists(st.integers(min_value=0, max_value=q - 1), max_size=max_len)


def test_zero_polynomial_degree_marker():
    zero = Polynomial.zero(GF2)
    assert zero.is_zero
    assert zero.degree == NEG_INFINITY
    assert zero.degree < 0
    assert Polynomial(GF2, (0, 0, 0)).is_zero


def test_basic_identities():
    f = Polynomial(GF2, (1, 1, 0, 1))
    assert f * Polynomial.one(GF2) == f
    assert f + Polynomial.zero(GF2) == f
    # characteristic-2 square
    x_plus_1 = Polynomial(GF2, (1, 1))
    assert x_plus_1 * x_plus_1 == Polynomial(GF2, (1, 0, 1))


@given(coeff_lists(2), coeff_lists(2))
@settings(max_examples=120, deadline=None)
def test_xgcd_bezout_exact_gf2(fc, gc):
    f, g = Polynomial(GF2, fc), Polynomial(GF2, gc)
    if f.is_zero and g.is_zero:
        with pytest.raises(PolynomialError):
            poly_xgcd(f, g)
        return
    d, u, v = poly_xgcd(f, g)
    assert u * f + v * g == d
    assert d.leading_coefficient == 1
    if not f.is_zero:
        assert (f % d).is_zero
    if not g.is_zero:
        assert (g % d).is_zero


@given(coeff_lists(3), coeff_lists(3))
@settings(max_examples=120, deadline=None)
def test_xgcd_bezout_exact_gf3(fc, gc):
    f, g = Polynomial(GF3, fc), Polynomial(GF3, gc)
    if f.is_zero and g.is_zero:
        return
    d, u, v = poly_xgcd(f, g)
    assert u * f + v * g == d
    assert d.leading_coefficient == 1


def test_xgcd_degenerate_cases():
    f = Polynomial(GF3, (2, 1))
    d, u, v = poly_xgcd(f, Polynomial.zero(GF3))
    assert d == f.monic()
    assert u * f == d and v.is_zero
    xm1 = Polynomial.x_pow_minus_one(GF2, 7)
    assert poly_gcd(xm1, xm1) == xm1


def test_divmod_contract():
    rng = random.Random(5)
    for field in (GF2, GF3):
        for _ in range(150):
            f = Polynomial(field, [rng.randrange(field.order) for _ in range(rng.randrange(0, 14))])
            g = Polynomial(field, [rng.randrange(field.order) for _ in range(rng.randrange(1, 8))])
            if g.is_zero:
                continue
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.degree < g.degree
    with pytest.raises(PolynomialError):
        divmod(Polynomial.one(GF2), Polynomial.zero(GF2))


@given(coeff_lists(2, 10), coeff_lists(2, 10), st.integers(-20, 20), st.integers(2, 9))
@settings(max_examples=120, deadline=None)
def test_substitute_power_is_ring_hom(fc, gc, e, m):
    f, g = Polynomial(GF2, fc), Polynomial(GF2, gc)
    lhs_add = substitute_power(f + g, e, m)
    rhs_add = substitute_power(f, e, m) + substitute_power(g, e, m)
    assert lhs_add == rhs_add
    lhs_mul = substitute_power(f.mul_mod(g, m), e, m)
    rhs_mul = substitute_power(f, e, m).mul_mod(substitute_power(g, e, m), m)
    assert lhs_mul == rhs_mul


@given(coeff_lists(3, 10), st.integers(-15, 15), st.integers(-15, 15), st.integers(2, 9))
@settings(max_examples=120, deadline=None)
def test_substitute_power_composition(fc, e1, e2, m):
    f = Polynomial(GF3, fc)
    twice = substitute_power(substitute_power(f, e1, m), e2, m)
    once = substitute_power(f, (e1 * e2) % m, m)
    assert twice == once


def test_substitute_power_identity_and_negative():
    f = Polynomial(GF2, (1, 0, 0, 1, 1))
    assert substitute_power(f, 1, 3) == f.reduce_mod_xm1(3)
    # X at exponent -a*m folds like the diagonal shift factors
    x = Polynomial(GF2, (0, 1))
    assert substitute_power(x, -63, 105) == Polynomial.monomial(GF2, 42)


def test_times_x_power_wraps():
    f = Polynomial(GF3, (1, 2))
    assert f.times_x_power(4, 5) == Polynomial(GF3, (2, 0, 0, 0, 1))
    assert f.times_x_power(-1, 5) == Polynomial(GF3, (2, 0, 0, 0, 1))
    assert f.times_x_power(0, 5) == f


def test_evaluation_matches_horner():
    field = Field(2, 12)
    f = Polynomial(GF2, (1, 1, 0, 1))
    x = field.element(37)
    expected = field.one + x + x**3
    assert f(x) == expected


def test_matrix_row_ops_preserve_module():
    from qcpc.oracle import module_equal

    rng = random.Random(6)
    m, ell = 5, 2
    for _ in range(25):
        rows = [
            [Polynomial(GF2, [rng.randrange(2) for _ in range(m)]) for _ in range(ell)]
            for _ in range(2)
        ]
        mat = PolyMatrix(rows)
        variant = mat.swap_rows(0, 1)
        variant = variant.add_multiple(0, 1, Polynomial(GF2, [rng.randrange(2) for _ in range(3)]))
        variant = variant.scale_row(1, 1)
        assert module_equal(mat, variant, GF2, ell, m)


def test_add_multiple_of_zero_is_identity():
    mat = PolyMatrix([
        [Polynomial(GF2, (1, 1)), Polynomial.one(GF2)],
        [Polynomial.zero(GF2), Polynomial(GF2, (1, 0, 1))],
    ])
    assert mat.add_multiple(0, 1, Polynomial.zero(GF2)) == mat


def test_matrix_rowop_errors():
    mat = PolyMatrix([[Polynomial.one(GF2), Polynomial.zero(GF2)]])
    with pytest.raises(PolynomialError):
        mat.scale_row(0, 0)
    two = mat.stack(PolyMatrix([[Polynomial.zero(GF2), Polynomial.one(GF2)]]))
    with pytest.raises(PolynomialError):
        two.add_multiple(0, 0, Polynomial.one(GF2))
    assert two.delete_row(0).nrows == 1
    zero_row = PolyMatrix([[Polynomial.zero(GF2)], [Polynomial.one(GF2)]])
    assert zero_row.drop_zero_rows().nrows == 1


def test_upper_det():
    one = Polynomial.one(GF2)
    f = Polynomial(GF2, (1, 1))
    g = Polynomial(GF2, (1, 0, 1, 1))
    identity = PolyMatrix([[one, Polynomial.zero(GF2)], [Polynomial.zero(GF2), one]])
    assert upper_det(identity) == one
    upper = PolyMatrix([[f, g], [Polynomial.zero(GF2), g]])
    assert upper_det(upper) == f * g
    lower = PolyMatrix([[f, Polynomial.zero(GF2)], [g, g]])
    with pytest.raises(PolynomialError):
        upper_det(lower)
    with pytest.raises(PolynomialError):
        upper_det(PolyMatrix([[f, g]]))


def test_upper_det_degree_matches_dimension_formula(code_a):
    det = upper_det(code_a.rgb_pot)
    assert det.degree == code_a.ell * code_a.m - code_a.dimension


def test_upper_det_example_generators(code_a, alpha21, ext_field):
    from qcpc.galois import minimal_polynomial

    gf2 = ext_field.prime_subfield
    minpoly = {i: minimal_polynomial(alpha21, i, 21) for i in (1, 3, 7, 9)}
    g00 = minpoly[1] * minpoly[3] * minpoly[7]
    expected = g00 * (g00 * minpoly[9])
    assert upper_det(code_a.rgb_pot) == expected


def test_mixed_field_matrix_rejected():
    with pytest.raises(PolynomialError):
        PolyMatrix([[Polynomial.one(GF2), Polynomial.one(GF3)]])
