"""Shared fixtures: the flagship binary pair used across the worked examples.

A is the [2*21, 17, 8] 2-quasi-cyclic code built from minimal polynomials of a
21st root of unity in GF(2^12); B is the [5, 4, 2] single-parity cyclic code.
"""

from __future__ import annotations

import random

import pytest

from qcpc.galois import Field, field_extend, minimal_polynomial, root_of_unity
from qcpc.polyring import Polynomial
from qcpc.qcc import QuasiCyclicCode
from qcpc.decoder import DecoderSetup
from qcpc.product import ProductSpec
from qcpc.spectral import analyze, search_bound_params


@pytest.fixture(scope="session")
def ext_field():
    return field_extend(2, 105)


@pytest.fixture(scope="session")
def gf2(ext_field):
    return ext_field.prime_subfield


@pytest.fixture(scope="session")
def alpha21(ext_field):
    return root_of_unity(ext_field, 21)


@pytest.fixture(scope="session")
def beta5(ext_field):
    return root_of_unity(ext_field, 5)


@pytest.fixture(scope="session")
def code_a(gf2, alpha21):
    minpoly = {i: minimal_polynomial(alpha21, i, 21) for i in (1, 3, 7, 9)}
    g00 = minpoly[1] * minpoly[3] * minpoly[7]
    g01 = g00 * Polynomial(gf2, (1, 0, 1))
    g11 = g00 * minpoly[9]
    return QuasiCyclicCode(gf2, 2, 21, [[g00, g01], [Polynomial.zero(gf2), g11]])


@pytest.fixture(scope="session")
def code_b(gf2):
    return QuasiCyclicCode(gf2, 1, 5, [[Polynomial(gf2, (1, 1))]])


@pytest.fixture(scope="session")
def product_spec(code_a, code_b):
    return ProductSpec.create(code_a, code_b)


@pytest.fixture(scope="session")
def report_a(code_a, alpha21):
    return analyze(code_a.rgb_pot, alpha21, 21)


@pytest.fixture(scope="session")
def embed_certificate(report_a, code_b, beta5):
    return search_bound_params(report_a, code_b, beta5, 20)


@pytest.fixture(scope="session")
def decoder_setup(code_a, code_b, alpha21, beta5, embed_certificate):
    return DecoderSetup(code_a, code_b, alpha21, beta5, embed_certificate)


def random_code(field: Field, ell: int, m: int, rng: random.Random, nrows: int | None = None):
    """A random quasi-cyclic code from nrows random generator rows."""
    if nrows is None:
        nrows = rng.randrange(1, ell + 1)
    rows = []
    for _ in range(nrows):
        rows.append(
            [Polynomial(field, [rng.randrange(field.order) for _ in range(m)]) for _ in range(ell)]
        )
    return QuasiCyclicCode(field, ell, m, rows)
