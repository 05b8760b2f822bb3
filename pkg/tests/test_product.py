import random
from math import gcd

import pytest

from qcpc.galois import Field, coset_representatives, cyclotomic_coset, spans_equal
from qcpc.polyring import Polynomial
from qcpc.qcc import QuasiCyclicCode, vec_to_univariate
from qcpc import product as pr
from qcpc.oracle import fq_span_of_rows, module_equal
from qcpc.spectral import defining_set

from conftest import random_code

GF2 = Field(2, modulus=(0, 1))
GF3 = Field(3, modulus=(0, 1))

# Example-4 polynomials, transcribed exponent sets.
GBAR01_EXPONENTS = {
    95, 92, 91, 90, 89, 86, 85, 84, 82, 80, 75, 72, 71, 69, 67, 62, 61, 59, 57,
    52, 51, 49, 47, 45, 30, 27, 26, 24, 22, 20, 15, 12, 11, 10, 9, 6, 5, 4, 2, 0,
}
G01_REDUCED_EXPONENTS = {
    75, 72, 71, 69, 67, 62, 61, 59, 57, 55, 40, 37, 36, 35, 34, 31, 30, 29, 27,
    25, 20, 17, 16, 14, 12, 10,
}
PRINTED_G00_COSETS = [0, 1, 3, 5, 7, 9, 11, 15, 21, 25, 35, 45]
DERIVED_G00_COSETS = [0, 1, 3, 5, 7, 11, 15, 25, 35, 45, 49]


def poly_from_exponents(field, exponents):
    coeffs = [0] * (max(exponents) + 1)
    for e in exponents:
        coeffs[e] = 1
    return Polynomial(field, coeffs)


def small_spec(rng, allow_lb=True):
    q = rng.choice([2, 3])
    field = GF2 if q == 2 else GF3
    shapes = [(1, 1), (2, 1), (3, 1), (1, 2), (2, 3), (3, 2)] if allow_lb else [(1, 1), (2, 1), (3, 1)]
    while True:
        l_a, l_b = rng.choice(shapes)
        m_a = rng.choice([3, 5, 7] if q == 2 else [2, 4, 5, 7])
        m_b = rng.choice([3, 5, 7] if q == 2 else [2, 4, 5, 7])
        if gcd(l_a * m_a, l_b * m_b) == 1:
            break
    code_a = random_code(field, l_a, m_a, rng)
    code_b = random_code(field, l_b, m_b, rng)
    return pr.ProductSpec.create(code_a, code_b)


def test_bezout_pairs():
    assert pr.bezout_pair(10, 9) == (1, -1)
    assert pr.bezout_pair(42, 5) == (3, -25)
    assert pr.bezout_pair(1, 7) == (1, 0)
    with pytest.raises(pr.ProductError):
        pr.bezout_pair(6, 9)


def test_bezout_override_accepted(code_a, code_b):
    spec = pr.ProductSpec.create(code_a, code_b, a=-2, b=17)
    assert (spec.a, spec.b) == (-2, 17)
    with pytest.raises(pr.ProductError):
        pr.ProductSpec.create(code_a, code_b, a=1, b=1)


@pytest.fixture(scope="module")
def example1_spec():
    code_a = QuasiCyclicCode(GF2, 2, 5, [])
    code_b = QuasiCyclicCode(GF2, 3, 3, [])
    return pr.ProductSpec.create(code_a, code_b)


def test_index_map_example_values(example1_spec):
    spec = example1_spec
    assert (spec.a, spec.b) == (1, -1)
    assert pr.index_map(spec, 2, 2) == 76
    assert pr.index_map(spec, 0, 0) == 0
    assert pr.shift_term(spec, 2, 0) == 6
    assert pr.submatrix_map(spec, 0, 1) == 6
    assert pr.shift_term(spec, 0, 0) == 0
    assert pr.submatrix_map(spec, 0, 0) == 0
    for g in range(15):
        assert pr.submatrix_map(spec, g, g) == g % 15


def test_index_map_bijective_and_shift_law(example1_spec):
    spec = example1_spec
    image = {pr.index_map(spec, i, j) for i in range(9) for j in range(10)}
    assert image == set(range(90))
    for i in range(9):
        for j in range(10):
            shifted = pr.index_map(spec, (i + 3) % 9, (j + 2) % 10)
            assert shifted == (pr.index_map(spec, i, j) + 6) % 90


def test_serialization_roundtrips_random():
    rng = random.Random(21)
    for _ in range(30):
        spec = small_spec(rng)
        row_word = spec.row_code.random_codeword(rng)
        col_word = spec.col_code.random_codeword(rng)
        comps = pr.product_codeword(spec, row_word, col_word)
        a_serial = vec_to_univariate(row_word, spec.l_a)
        b_serial = vec_to_univariate(col_word, spec.l_b)
        array = [
            [spec.field.mul(b_serial.coefficient(i), a_serial.coefficient(j)) for j in range(spec.n_a)]
            for i in range(spec.n_b)
        ]
        assert pr.matrix_to_polys(spec, array) == comps
        assert pr.polys_to_matrix(spec, comps) == array
        u_by_components = pr.polys_to_univariate(spec, comps)
        u_by_mu = pr.matrix_to_univariate(spec, array)
        assert u_by_components == u_by_mu
        assert pr.univariate_to_polys(spec, u_by_components) == comps
        assert pr.univariate_to_matrix(spec, u_by_mu) == array


def test_zero_array_maps_to_zero(example1_spec):
    spec = example1_spec
    zeros = [[0] * 10 for _ in range(9)]
    assert all(p.is_zero for p in pr.matrix_to_polys(spec, zeros))


def test_example1_six_submatrix_roundtrip(example1_spec):
    """The 9x10 layout splits into six 3x5 submatrices and back, losslessly."""
    rng = random.Random(28)
    spec = example1_spec
    array = [[rng.randrange(2) for _ in range(10)] for _ in range(9)]
    polys = pr.matrix_to_polys(spec, array)
    assert len(polys) == 6
    assert all(p.degree < 15 for p in polys if not p.is_zero)
    assert pr.polys_to_matrix(spec, polys) == array
    # the entry singled out in the worked example: m_{2,2} is coefficient 12 of c_{2,0}
    component = polys[2 + 0 * 3]
    assert component.coefficient(12) == array[2][2]


def test_unreduced_zero_pattern_matches_kronecker():
    # 2-QC times 3-QC: the upper block should vanish exactly where the
    # Kronecker product of the component matrices does.
    rng = random.Random(22)
    field = GF2
    code_a = random_code(field, 2, 5, rng, nrows=2)
    code_b = random_code(field, 3, 3, rng, nrows=3)
    spec = pr.ProductSpec.create(code_a, code_b)
    parts = pr.unreduced_parts(spec)
    g_a, g_b = code_a.rgb_pot, code_b.rgb_pot
    for r in range(6):
        g, h = r % 3, r // 3
        for c in range(6):
            gp, hp = c % 3, c // 3
            kron_zero = hp < h or gp < g or g_a.at(h, hp).is_zero or g_b.at(g, gp).is_zero
            assert parts.core.at(r, c).is_zero == kron_zero


def test_product_membership_and_dimension():
    rng = random.Random(23)
    for _ in range(20):
        spec = small_spec(rng)
        code = pr.unreduced_parts(spec).code()
        assert code.dimension == spec.row_code.dimension * spec.col_code.dimension
        for _ in range(3):
            comps = pr.product_codeword(
                spec, spec.row_code.random_codeword(rng), spec.col_code.random_codeword(rng)
            )
            assert code.is_member(comps)


def test_kronecker_rowspace_crosscheck():
    from qcpc.oracle import scalar_generator_rows

    rng = random.Random(24)
    for _ in range(8):
        spec = small_spec(rng)
        if spec.row_code.dimension * spec.col_code.dimension == 0:
            continue
        # span of mu-serialized outer products of scalar basis codewords
        rows_a = scalar_generator_rows(spec.row_code)
        rows_b = scalar_generator_rows(spec.col_code)
        outer_rows = []
        for vb in rows_b:
            for va in rows_a:
                array = [[spec.field.mul(bi, aj) for aj in va] for bi in vb]
                serial = pr.matrix_to_univariate(spec, array)
                outer_rows.append([serial.coefficient(e) for e in range(spec.n)])
        # span of the constructed product basis, serialized the same way
        # (fq_span_of_rows interleaves: component t sits at positions i*ell + t)
        basis_rows = []
        for word_rows in fq_span_of_rows(
            pr.unreduced_parts(spec).matrix, spec.field, spec.ell, spec.m
        ):
            comps = tuple(
                Polynomial(spec.field, [word_rows[i * spec.ell + t] for i in range(spec.m)])
                for t in range(spec.ell)
            )
            serial = pr.polys_to_univariate(spec, comps)
            basis_rows.append([serial.coefficient(e) for e in range(spec.n)])
        assert spans_equal(spec.field, outer_rows, basis_rows)


def test_thm2_matches_unreduced_on_randoms():
    rng = random.Random(25)
    count = 0
    while count < 15:
        q = rng.choice([2, 3])
        field = GF2 if q == 2 else GF3
        m_a = rng.choice([3, 5, 7] if q == 2 else [2, 4, 5, 7])
        m_b = rng.choice([3, 5, 7] if q == 2 else [2, 4, 5, 7])
        if gcd(2 * m_a, m_b) != 1:
            continue
        spec = pr.ProductSpec.create(random_code(field, 2, m_a, rng), random_code(field, 1, m_b, rng))
        parts = pr.pre_rgb_2qc_parts(spec)
        assert pr.module_matches_unreduced(spec, parts)
        count += 1


def test_thm2_trivial_column_code(code_a):
    # B with generator 1 (rate 1): diagonals reduce to gcd(X^m-1, g^A_ii(X^{b n_B})).
    from qcpc.polyring import poly_gcd, substitute_power

    rate1 = QuasiCyclicCode(GF2, 1, 5, [[Polynomial.one(GF2)]])
    spec = pr.ProductSpec.create(code_a, rate1)
    parts = pr.pre_rgb_2qc_parts(spec)
    xm1 = Polynomial.x_pow_minus_one(GF2, 105)
    for i in range(2):
        expected = poly_gcd(xm1, substitute_power(code_a.rgb_pot.at(i, i), spec.b * spec.n_b, 105))
        assert parts.core.at(i, i) == expected


def test_thm3_one_level_construction():
    rng = random.Random(26)
    count = 0
    while count < 12:
        q = rng.choice([2, 3])
        field = GF2 if q == 2 else GF3
        ell = rng.choice([2, 3])
        m_a = rng.choice([3, 5, 7] if q == 2 else [2, 4, 5, 7])
        m_b = rng.choice([3, 5, 7] if q == 2 else [2, 4, 5, 7])
        if gcd(ell * m_a, m_b) != 1:
            continue
        # Corollary-shaped one-row code: (g, g f_1, ..., g f_{ell-1})
        xm1 = Polynomial.x_pow_minus_one(field, m_a)
        g = Polynomial(field, (field.neg(1), 1))  # X - 1 divides X^m - 1
        row = [g]
        for _ in range(ell - 1):
            row.append(g.mul_mod(Polynomial(field, [rng.randrange(q) for _ in range(m_a)]), m_a))
        code_a_local = QuasiCyclicCode(field, ell, m_a, [row])
        if code_a_local.level != 1:
            continue
        spec = pr.ProductSpec.create(code_a_local, random_code(field, 1, m_b, rng))
        parts = pr.rgb_1level_parts(spec)
        assert pr.module_matches_unreduced(spec, parts)
        assert parts.code().level == 1
        count += 1


def test_thm3_rejects_higher_level(code_a, code_b):
    spec = pr.ProductSpec.create(code_a, code_b)
    with pytest.raises(pr.ProductError):
        pr.rgb_1level_parts(spec)


def test_thm3_zero_factors_embed_cyclic_product():
    # A = (g, 0, 0): the product is the cyclic product code in coordinate 0.
    g = Polynomial(GF2, (1, 1))
    zero = Polynomial.zero(GF2)
    code_a_local = QuasiCyclicCode(GF2, 3, 5, [[g, zero, zero]])
    code_b_local = QuasiCyclicCode(GF2, 1, 7, [[Polynomial(GF2, (1, 1, 0, 1))]])
    spec = pr.ProductSpec.create(code_a_local, code_b_local)
    parts = pr.rgb_1level_parts(spec)
    assert parts.core.at(0, 1).is_zero and parts.core.at(0, 2).is_zero
    assert pr.module_matches_unreduced(spec, parts)
    assert parts.code().dimension == 4 * 4


def test_conjecture_coincides_with_thm3_on_one_level():
    rng = random.Random(29)
    g = Polynomial(GF2, (1, 1))
    row = [g, g.mul_mod(Polynomial(GF2, (0, 1, 1)), 5), g.mul_mod(Polynomial(GF2, (1, 1, 1)), 5)]
    code_a_local = QuasiCyclicCode(GF2, 3, 5, [row])
    assert code_a_local.level == 1
    code_b_local = QuasiCyclicCode(GF2, 1, 7, [[Polynomial(GF2, (1, 1, 0, 1))]])
    spec = pr.ProductSpec.create(code_a_local, code_b_local)
    conj, verified = pr.conjecture_parts(spec)
    assert verified
    thm3 = pr.rgb_1level_parts(spec)
    assert conj.core.rows[0] == thm3.core.rows[0]
    assert conj.shifts == thm3.shifts
    xm1 = Polynomial.x_pow_minus_one(GF2, 35)
    for i in range(1, 3):
        assert conj.core.at(i, i) == xm1


def test_conjecture_specializes_to_proven_cases(code_a, code_b):
    spec = pr.ProductSpec.create(code_a, code_b)
    conj, verified = pr.conjecture_parts(spec)
    assert verified
    thm2 = pr.pre_rgb_2qc_parts(spec)
    assert conj.core == thm2.core
    assert conj.shifts == thm2.shifts


def test_conjecture_verified_on_sweep():
    rng = random.Random(27)
    for _ in range(20):
        spec = small_spec(rng)
        _, verified = pr.conjecture_parts(spec)
        assert verified


def test_burton_weldon_degeneration():
    # l_A = l_B = 1: single row g^A(X^{b n_B}) g^B(X^{a n_A}) mod X^m-1.
    from qcpc.polyring import substitute_power

    g_a = Polynomial(GF2, (1, 1, 0, 1))  # deg-3 divisor of X^7-1
    g_b = Polynomial(GF2, (1, 1))  # X+1 | X^5-1
    code_a_local = QuasiCyclicCode(GF2, 1, 7, [[g_a]])
    code_b_local = QuasiCyclicCode(GF2, 1, 5, [[g_b]])
    spec = pr.ProductSpec.create(code_a_local, code_b_local)
    parts = pr.unreduced_parts(spec)
    expected = substitute_power(g_a, spec.b * spec.n_b, 35).mul_mod(
        substitute_power(g_b, spec.a * spec.n_a, 35), 35
    )
    assert parts.core.at(0, 0) == expected
    # and the reduced product code is the classical cyclic product code
    code = parts.code()
    assert code.dimension == 4 * 4
    gen = code.rgb_pot.at(0, 0)
    assert gen.degree == 35 - 16


def test_example4_reconstruction(product_spec, ext_field, alpha21, beta5):
    spec = product_spec
    assert (spec.a, spec.b) == (3, -25)
    parts = pr.pre_rgb_2qc_parts(spec)
    g00, gbar01, g11 = parts.core.at(0, 0), parts.core.at(0, 1), parts.core.at(1, 1)
    assert g00.degree == 65
    assert g11.degree == 77
    xm1 = Polynomial.x_pow_minus_one(GF2, 105)
    assert (xm1 % g00).is_zero and (xm1 % g11).is_zero
    assert int(g00.degree + g11.degree) == 2 * 105 - 68
    assert gbar01 == poly_from_exponents(GF2, GBAR01_EXPONENTS)
    assert parts.shifts == (0, (-3 * 21) % 105)
    # g11 = g00 * M_gamma^9
    from qcpc.galois import minimal_polynomial

    gamma = alpha21 * beta5
    assert g11 == g00 * minimal_polynomial(gamma, 9, 105)
    # RGB/POT reduction of the factored core reproduces the printed g01
    reduced = parts.reduced_core()
    assert reduced.at(0, 0) == g00
    assert reduced.at(1, 1) == g11
    assert reduced.at(0, 1) == poly_from_exponents(GF2, G01_REDUCED_EXPONENTS)
    # dimension through the full (shifted) generator matrix
    assert parts.code().dimension == 68
    assert pr.module_matches_unreduced(spec, parts)


def test_example4_root_coset_discrepancy(product_spec, alpha21, beta5, ext_field):
    """The printed root-index set of g00 is internally inconsistent; the
    derived set differs in cosets {9, 21, 49} and is what the gcd produces."""
    spec = product_spec
    parts = pr.pre_rgb_2qc_parts(spec)
    gamma = alpha21 * beta5
    roots = defining_set(parts.core.at(0, 0), gamma, 105)
    reps = []
    remaining = set(roots)
    for rep in coset_representatives(105, 2):
        members = set(cyclotomic_coset(rep, 105, 2).members)
        if members <= remaining:
            reps.append(rep)
            remaining -= members
    assert not remaining
    assert reps == DERIVED_G00_COSETS
    assert reps != PRINTED_G00_COSETS
    printed_size = sum(cyclotomic_coset(r, 105, 2).size for r in PRINTED_G00_COSETS)
    assert printed_size == 77  # inconsistent with deg g00 = 65 and k = 68
