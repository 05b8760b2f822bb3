"""Quasi-cyclic product codes: exact construction, spectral distance bounds,
and phased-burst decoding."""

from .galois import (
    CyclotomicCoset,
    Field,
    FieldElement,
    FieldError,
    cyclotomic_coset,
    field_extend,
    minimal_polynomial,
    root_of_unity,
    subfield_coordinates,
)
from .polyring import Polynomial, PolyMatrix, PolynomialError, poly_gcd, poly_xgcd, substitute_power, upper_det
from .qcc import CodeError, QuasiCyclicCode, reduce_rgb_pot, univariate_to_vec, vec_to_univariate
from .product import (
    ProductBasis,
    ProductError,
    ProductSpec,
    bezout_pair,
    conjecture_parts,
    conjecture_pre_rgb,
    index_map,
    matrix_to_polys,
    polys_to_univariate,
    pre_rgb_2qc,
    pre_rgb_2qc_parts,
    rgb_1level,
    rgb_1level_parts,
    shift_term,
    submatrix_map,
    unreduced_basis,
    unreduced_parts,
)
from .spectral import (
    BoundCertificate,
    Eigencode,
    NoCertificate,
    SpectralReport,
    analyze,
    best_st_bound,
    eigencode,
    generalized_bound,
    product_eigen_sets,
    search_bound_params,
    st_bound,
)
from .decoder import DecodeResult, DecoderError, DecoderSetup, build_setup
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    SweepResult,
    brute_min_distance,
    exhaustive_burst_sweep,
    module_equal,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
