"""Spectral analysis of quasi-cyclic generator matrices.

An eigenvalue of an upper-triangular generator matrix G(X) is a root of the
diagonal product; its geometric multiplicity is the right-kernel dimension of
G evaluated there.  For matrices whose diagonals divide X^m-1 (RGB/POT and
Pre-RGB/POT forms) the two multiplicities coincide, which the property suite
asserts.  Bounds: the BCH-like eigenvalue-run bound on one code, and the
embedding bound through a product with an auxiliary cyclic code.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from math import gcd, inf

from .galois import Field, FieldElement, kernel_basis
from .polyring import Polynomial, PolyMatrix
from .qcc import QuasiCyclicCode


class SpectralError(ValueError):
    pass


class NoCertificate(SpectralError):
    """Raised when the requested bound parameters admit no certificate."""


@dataclass(frozen=True)
class EigenRecord:
    exponent: int
    algebraic: int
    geometric: int
    kernel: tuple[tuple[int, ...], ...]


class SpectralReport:
    """Per-exponent eigenvalue data of G(X) at the powers of a root of unity."""

    def __init__(self, matrix: PolyMatrix, alpha: FieldElement, m: int, records: list[EigenRecord]):
        self.matrix = matrix
        self.alpha = alpha
        self.m = m
        self.records = records
        self._eval_cache: dict[int, list[list[int]]] = {}

    @property
    def ext_field(self) -> Field:
        return self.alpha.field

    @property
    def ell(self) -> int:
        return self.matrix.ncols

    def record(self, z: int) -> EigenRecord:
        return self.records[z % self.m]

    def eigenspace(self, z: int) -> tuple[tuple[int, ...], ...]:
        return self.record(z).kernel

    @property
    def eigenvalue_exponents(self) -> frozenset[int]:
        return frozenset(r.exponent for r in self.records if r.geometric > 0)

    def multiplicity_sets(self) -> dict[int, tuple[int, ...]]:
        """Exponent sets A^(r) keyed by geometric multiplicity r."""
        out: dict[int, list[int]] = {}
        for r in self.records:
            out.setdefault(r.geometric, []).append(r.exponent)
        return {k: tuple(v) for k, v in out.items()}

    def evaluated(self, z: int) -> list[list[int]]:
        z %= self.m
        if z not in self._eval_cache:
            point = self.ext_field.pow(self.alpha.value, z)
            self._eval_cache[z] = self.matrix.evaluate(point, self.ext_field)
        return self._eval_cache[z]


def analyze(matrix: PolyMatrix, alpha: FieldElement, m: int | None = None) -> SpectralReport:
    """Spectral report of an upper-triangular matrix at all powers of alpha.

    The algebraic multiplicity counts vanishing diagonal entries, which equals
    the root multiplicity in det G because the diagonals divide X^m-1 (single
    roots) for every matrix this is used on.
    """
    if matrix.nrows != matrix.ncols:
        raise SpectralError("spectral analysis requires a square matrix")
    if not matrix.is_upper_triangular():
        raise SpectralError("spectral analysis requires an upper-triangular matrix")
    ext = alpha.field
    if m is None:
        m = alpha.order()
    elif ext.pow(alpha.value, m) != 1:
        raise SpectralError("alpha does not have the stated order")
    ell = matrix.nrows
    records = []
    for z in range(m):
        point = ext.pow(alpha.value, z)
        rows = matrix.evaluate(point, ext)
        algebraic = sum(1 for j in range(ell) if rows[j][j] == 0)
        kernel = tuple(kernel_basis(ext, rows, ell))
        records.append(EigenRecord(z, algebraic, len(kernel), kernel))
    return SpectralReport(matrix, alpha, m, records)


# -- eigencode -----------------------------------------------------------------


@dataclass(frozen=True)
class Eigencode:
    ell: int
    field: Field
    basis: tuple[tuple[int, ...], ...]
    d_ec: int | float

    @property
    def dimension(self) -> int:
        return len(self.basis)


def eigencode(vectors, ell: int, ext_field: Field) -> Eigencode:
    """Words over the base field orthogonal to every given eigenvector.

    Each extension-field equation v . c = 0 expands into s base-field
    equations through the polynomial-basis coordinates of the entries of v.
    The minimum distance is found by exhausting the (small) kernel; it is
    +infinity exactly when the eigencode is trivial.
    """
    base = ext_field.prime_subfield
    rows = []
    for v in vectors:
        digit_rows = [ext_field.digits(x) for x in v]
        for t in range(ext_field.s):
            rows.append([digit_rows[j][t] for j in range(ell)])
    basis = tuple(kernel_basis(base, rows, ell))
    if not basis:
        return Eigencode(ell, base, basis, inf)
    q = base.order
    best = ell + 1
    for combo in iter_product(range(q), repeat=len(basis)):
        if not any(combo):
            continue
        word = [0] * ell
        for c, vec in zip(combo, basis):
            if c:
                for j in range(ell):
                    word[j] = base.add(word[j], base.mul(c, vec[j]))
        best = min(best, sum(1 for x in word if x))
    return Eigencode(ell, base, basis, best)


# -- eigenvalue transfer to the product code -------------------------------------


def product_eigen_sets(
    a_sets: dict[int, tuple[int, ...]],
    b_defining: frozenset[int] | set[int],
    m_a: int,
    m_b: int,
    ell: int,
) -> dict[int, tuple[int, ...]]:
    """Exponent sets C^(r) of A (x) B from A's sets A^(r) and B's defining set.

    Multiplicity ell collects all shifted copies of A^(ell) and of B's zeros;
    each lower multiplicity keeps its shifted copies of A^(r) minus the shifted
    zeros of B.  Eigenvectors at those exponents transfer from A unchanged.
    """
    m = m_a * m_b
    b_ext = {(z + t * m_b) % m for z in b_defining for t in range(m_a)}
    out: dict[int, set[int]] = {}
    for r in range(ell + 1):
        a_ext = {(z + t * m_a) % m for z in a_sets.get(r, ()) for t in range(m_b)}
        if r == ell:
            out[r] = a_ext | b_ext
        else:
            out[r] = a_ext - b_ext
    return {r: tuple(sorted(v)) for r, v in out.items()}


def defining_set(poly: Polynomial, root: FieldElement, m: int) -> frozenset[int]:
    """Exponents z in [m) with poly(root^z) = 0."""
    ext = root.field
    return frozenset(z for z in range(m) if poly.eval_enc(ext.pow(root.value, z), ext) == 0)


# -- distance bounds --------------------------------------------------------------


@dataclass(frozen=True)
class BoundCertificate:
    kind: str
    f1: int
    z1: int
    delta: int
    d_set: tuple[int, ...]
    eigen_basis: tuple[tuple[int, ...], ...]
    d_ec: int | float
    d_star: int
    f2: int | None = None
    z2: int | None = None
    d_b: int = 1

    @property
    def bound(self) -> int:
        return self.d_star


def _reject_zero_code(report: SpectralReport) -> None:
    if all(r.geometric == report.ell for r in report.records):
        raise NoCertificate("the zero code has no distance to bound")


def _intersection_basis(report: SpectralReport, exponents) -> tuple[tuple[int, ...], ...]:
    stacked: list[list[int]] = []
    for z in exponents:
        stacked.extend(report.evaluated(z))
    if not stacked:
        # Empty constraint set: the intersection is the full ambient space.
        ell = report.ell
        return tuple(tuple(1 if j == i else 0 for j in range(ell)) for i in range(ell))
    return tuple(kernel_basis(report.ext_field, stacked, report.ell))


def st_bound(report: SpectralReport, f: int, z: int, delta: int) -> BoundCertificate:
    """BCH-like bound min(delta, d^ec) from a run of eigenvalue exponents."""
    m = report.m
    if gcd(z, m) != 1:
        raise SpectralError(f"gcd(z={z}, m={m}) != 1")
    if delta < 2:
        raise SpectralError("delta must be at least 2")
    _reject_zero_code(report)
    exponents = [(f + i * z) % m for i in range(delta - 1)]
    eigen = report.eigenvalue_exponents
    for e in exponents:
        if e not in eigen:
            raise NoCertificate(f"exponent {e} is not an eigenvalue")
    basis = _intersection_basis(report, sorted(set(exponents)))
    if not basis:
        raise NoCertificate("trivial eigenspace intersection")
    ec = eigencode(basis, report.ell, report.ext_field)
    bound = min(delta, ec.d_ec)
    return BoundCertificate(
        kind="st",
        f1=f,
        z1=z,
        delta=delta,
        d_set=tuple(exponents),
        eigen_basis=basis,
        d_ec=ec.d_ec,
        d_star=int(bound),
    )


def column_defining_set(b_code: QuasiCyclicCode, beta: FieldElement) -> frozenset[int]:
    if b_code.ell != 1:
        raise SpectralError("column code must be cyclic")
    return defining_set(b_code.rgb_pot.at(0, 0), beta, b_code.m)


def _column_distance(b_code: QuasiCyclicCode, d_b: int | None) -> int:
    if d_b is not None:
        return d_b
    from .oracle import brute_min_distance

    return brute_min_distance(b_code)


def generalized_bound(
    report: SpectralReport,
    b_code: QuasiCyclicCode,
    beta: FieldElement,
    f1: int,
    f2: int,
    z1: int,
    z2: int,
    delta: int,
    d_b: int | None = None,
) -> BoundCertificate:
    """Embedding bound d* = ceil(min(delta, d^ec) / d_B) on the row code.

    Every syndrome index i < delta-1 must be covered: either the column-code
    position f2 + i z2 is a zero of B, or f1 + i z1 is an eigenvalue exponent
    of A (those indices form D and their eigenspaces are intersected).
    """
    m_a, m_b = report.m, b_code.m
    if gcd(z1, m_a) != 1 or gcd(z2, m_b) != 1:
        raise SpectralError("step sizes must be coprime to the component co-indices")
    if gcd(m_a, m_b) != 1:
        raise SpectralError("component co-indices must be coprime")
    if delta < 2:
        raise SpectralError("delta must be at least 2")
    _reject_zero_code(report)
    b_def = column_defining_set(b_code, beta)
    eigen = report.eigenvalue_exponents
    d_list: list[int] = []
    seen: set[int] = set()
    for i in range(delta - 1):
        e2 = (f2 + i * z2) % m_b
        if e2 in b_def:
            continue
        e1 = (f1 + i * z1) % m_a
        if e1 not in eigen:
            raise NoCertificate(f"index {i}: {e2} is not a zero of B and {e1} is not an eigenvalue of A")
        if e1 not in seen:
            seen.add(e1)
            d_list.append(e1)
    basis = _intersection_basis(report, d_list)
    if not basis:
        raise NoCertificate("trivial eigenspace intersection")
    ec = eigencode(basis, report.ell, report.ext_field)
    d_col = _column_distance(b_code, d_b)
    numerator = delta if ec.d_ec == inf else min(delta, ec.d_ec)
    d_star = -(-numerator // d_col)
    return BoundCertificate(
        kind="generalized",
        f1=f1,
        z1=z1,
        f2=f2,
        z2=z2,
        delta=delta,
        d_set=tuple(sorted(d_list)),
        eigen_basis=basis,
        d_ec=ec.d_ec,
        d_b=d_col,
        d_star=d_star,
    )


def _coprime_steps(m: int) -> list[int]:
    return [z for z in range(1, m) if gcd(z, m) == 1] or [1]


def search_bound_params(
    report: SpectralReport,
    b_code: QuasiCyclicCode,
    beta: FieldElement,
    delta_max: int,
    d_b: int | None = None,
) -> BoundCertificate:
    """Exhaustive parameter scan maximizing (d*, delta).

    Ties beyond (d*, delta) go to the smallest (f1, f2, z1, z2).  The larger
    delta is preferred among equal bounds because the decoder's syndrome
    length is delta - 1.
    """
    if delta_max < 3:
        raise SpectralError("delta_max must be at least 3")
    _reject_zero_code(report)
    m_a, m_b = report.m, b_code.m
    b_def = column_defining_set(b_code, beta)
    eigen = report.eigenvalue_exponents
    d_col = _column_distance(b_code, d_b)
    ext = report.ext_field
    best: tuple[int, int] | None = None
    best_params: tuple[int, int, int, int, int] | None = None
    for f1 in range(m_a):
        for f2 in range(m_b):
            for z1 in _coprime_steps(m_a):
                for z2 in _coprime_steps(m_b):
                    stacked: list[list[int]] = []
                    seen: set[int] = set()
                    d_ec: int | float = inf
                    for i in range(delta_max - 1):
                        e2 = (f2 + i * z2) % m_b
                        if e2 not in b_def:
                            e1 = (f1 + i * z1) % m_a
                            if e1 not in eigen:
                                break
                            if e1 not in seen:
                                seen.add(e1)
                                stacked.extend(report.evaluated(e1))
                                basis = kernel_basis(ext, stacked, report.ell)
                                if not basis:
                                    break
                                d_ec = eigencode(basis, report.ell, ext).d_ec
                        delta = i + 2
                        if delta < 3:
                            continue
                        numerator = delta if d_ec == inf else min(delta, d_ec)
                        d_star = -(-numerator // d_col)
                        key = (d_star, delta)
                        if best is None or key > best:
                            best = key
                            best_params = (f1, f2, z1, z2, delta)
    if best_params is None:
        raise NoCertificate("no parameter choice admits a certificate")
    f1, f2, z1, z2, delta = best_params
    return generalized_bound(report, b_code, beta, f1, f2, z1, z2, delta, d_b=d_col)


def best_st_bound(report: SpectralReport, delta_max: int) -> BoundCertificate:
    """Strongest BCH-like bound over all (f, z, delta <= delta_max)."""
    best_cert: BoundCertificate | None = None
    for f in range(report.m):
        for z in _coprime_steps(report.m):
            for delta in range(2, delta_max + 1):
                try:
                    cert = st_bound(report, f, z, delta)
                except NoCertificate:
                    break
                if best_cert is None or cert.d_star > best_cert.d_star:
                    best_cert = cert
    if best_cert is None:
        raise NoCertificate("no eigenvalue run of the requested length")
    return best_cert
