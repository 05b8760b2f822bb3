"""Syndrome-based decoding of phased burst errors up to floor((d*-1)/2).

A decoder setup packages the row code, a bound certificate with an
eigenvector whose entries are independent over the base field, a lowest
weight codeword b(X) of the auxiliary cyclic code, and the precomputed
root-finding table gamma_i = beta^(-j z2) alpha^(-i z1).

Decoding: syndrome polynomial from the received word, key equation
Lambda * S = Omega mod X^(delta-1) via the extended Euclidean algorithm,
Chien-style root scan over the gamma table, then one exact linear solve over
the base field for the per-position error columns.  Any inconsistency at any
stage is a decoding failure; a non-codeword is never returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .galois import Field, FieldElement, solve_right
from .polyring import Polynomial
from .qcc import CodeError, QuasiCyclicCode
from .spectral import BoundCertificate


class DecoderError(CodeError):
    pass


@dataclass(frozen=True)
class DecodeResult:
    success: bool
    positions: tuple[int, ...] = ()
    error_columns: tuple[tuple[int, ...], ...] = ()
    codeword: tuple[Polynomial, ...] | None = None
    reason: str | None = None

    @classmethod
    def failure(cls, reason: str) -> "DecodeResult":
        return cls(False, reason=reason)


def _independent_over_base(ext: Field, vector: tuple[int, ...]) -> bool:
    from .galois import span_dimension

    base = ext.prime_subfield
    rows = [list(ext.digits(x)) for x in vector]
    return span_dimension(base, rows) == len(vector)


def _pick_eigenvector(ext: Field, basis) -> tuple[int, ...]:
    """An intersection-eigenspace vector with base-field-independent entries.

    Basis vectors are tried first (the usual case is a one-dimensional
    intersection); then deterministic extension-field combinations.
    """
    import random

    for v in basis:
        if _independent_over_base(ext, v):
            return tuple(v)
    if basis:
        rng = random.Random(0)
        for _ in range(256):
            combo = [rng.randrange(ext.order) for _ in basis]
            if not any(combo):
                continue
            vec = [0] * len(basis[0])
            for c, bv in zip(combo, basis):
                if c:
                    for j in range(len(vec)):
                        vec[j] = ext.add(vec[j], ext.mul(c, bv[j]))
            if _independent_over_base(ext, tuple(vec)):
                return tuple(vec)
    raise DecoderError("no eigenvector with base-field-independent entries")


def _lowest_weight_codeword(b_code: QuasiCyclicCode) -> Polynomial:
    """Minimum-weight nonzero codeword, ties broken by lowest degree."""
    best: tuple[int, int, tuple[int, ...]] | None = None
    for word in b_code.iter_codewords():
        poly = word[0]
        if poly.is_zero:
            continue
        key = (sum(1 for c in poly.coeffs if c), int(poly.degree), poly.coeffs)
        if best is None or key < best:
            best = key
    if best is None:
        raise DecoderError("column code has no nonzero codeword")
    return Polynomial(b_code.field, best[2])


class DecoderSetup:
    """Immutable decoding context; each decode call is independent."""

    def __init__(
        self,
        code: QuasiCyclicCode,
        b_code: QuasiCyclicCode,
        alpha: FieldElement,
        beta: FieldElement,
        certificate: BoundCertificate,
    ):
        if certificate.kind != "generalized" or certificate.f2 is None:
            raise DecoderError("decoder needs a generalized-bound certificate")
        if alpha.field != beta.field:
            raise DecoderError("alpha and beta must live in one extension field")
        self.code = code
        self.b_code = b_code
        self.alpha = alpha
        self.beta = beta
        self.certificate = certificate
        self.ext: Field = alpha.field
        self.f1, self.z1 = certificate.f1, certificate.z1
        self.f2, self.z2 = certificate.f2, certificate.z2
        self.delta = certificate.delta
        self.d_b = certificate.d_b
        self.d_star = certificate.d_star
        self.tau = (self.d_star - 1) // 2
        self.eigenvector = _pick_eigenvector(self.ext, certificate.eigen_basis)

        b_poly = _lowest_weight_codeword(b_code)
        self.b_support = tuple(i for i, c in enumerate(b_poly.coeffs) if c)
        if len(self.b_support) != self.d_b:
            raise DecoderError("stored column codeword weight disagrees with d_B")
        self.b_word = b_poly

        ext = self.ext
        m_a = code.m
        # Syndrome evaluation points alpha^(f1 + i z1) and scalars b(beta^(f2 + i z2)).
        self.alpha_points = tuple(
            ext.pow(alpha.value, (self.f1 + i * self.z1)) for i in range(self.delta - 1)
        )
        self.b_values = tuple(
            b_poly.eval_enc(ext.pow(beta.value, (self.f2 + i * self.z2)), ext)
            for i in range(self.delta - 1)
        )
        j = min(self.b_support)
        self.gammas = tuple(
            ext.mul(ext.pow(beta.value, -j * self.z2), ext.pow(alpha.value, -i * self.z1))
            for i in range(m_a)
        )

    # -- pipeline stages ----------------------------------------------------

    def syndrome(self, received) -> Polynomial:
        """S_i = sum_j r_j(alpha^(f1+i z1)) b(beta^(f2+i z2)) v_j, i < delta-1."""
        ext = self.ext
        polys = self._as_words(received)
        coeffs = []
        for i in range(self.delta - 1):
            b_val = self.b_values[i]
            if b_val == 0:
                coeffs.append(0)
                continue
            point = self.alpha_points[i]
            acc = 0
            for j, r_j in enumerate(polys):
                if r_j.is_zero:
                    continue
                term = ext.mul(r_j.eval_enc(point, ext), self.eigenvector[j])
                acc = ext.add(acc, term)
            coeffs.append(ext.mul(acc, b_val))
        return Polynomial(ext, coeffs)

    def solve_key_equation(self, syndrome: Polynomial) -> tuple[Polynomial, Polynomial] | None:
        """EEA on (X^(delta-1), S) stopped at the first remainder of degree
        below (delta-1)/2; returns (Lambda, Omega) with Lambda(0) = 1."""
        ext = self.ext
        if syndrome.is_zero:
            return Polynomial.one(ext), Polynomial.zero(ext)
        bound = (self.delta - 1) / 2
        r_prev = Polynomial.monomial(ext, self.delta - 1)
        r_cur = syndrome
        t_prev, t_cur = Polynomial.zero(ext), Polynomial.one(ext)
        while r_cur.degree >= bound:
            q, r = divmod(r_prev, r_cur)
            r_prev, r_cur = r_cur, r
            t_prev, t_cur = t_cur, t_prev - q * t_cur
        lam, omega = t_cur, r_cur
        const = lam.coefficient(0)
        if const == 0:
            return None
        inv = ext.inv(const)
        return lam.scale(inv), omega.scale(inv)

    def find_positions(self, locator: Polynomial) -> tuple[int, ...]:
        """Chien-like scan of the precomputed gamma table."""
        ext = self.ext
        return tuple(i for i, g in enumerate(self.gammas) if locator.eval_enc(g, ext) == 0)

    def evaluate_errors(
        self, syndrome: Polynomial, positions: tuple[int, ...]
    ) -> tuple[tuple[int, ...], ...] | None:
        """Solve the syndrome equations for the base-field error columns.

        Unknowns e_{j,p} over F_q, one per (code row, burst position); each of
        the delta-1 extension-field equations expands into s base-field rows.
        Uniqueness comes from the independence of the eigenvector entries; an
        inconsistent or underdetermined system reports failure.
        """
        ext = self.ext
        base = ext.prime_subfield
        ell = self.code.ell
        unknowns = [(p, j) for p in positions for j in range(ell)]
        rows: list[list[int]] = []
        rhs: list[int] = []
        for i in range(self.delta - 1):
            b_val = self.b_values[i]
            coeffs_ext = []
            for p, j in unknowns:
                if b_val == 0:
                    coeffs_ext.append(0)
                    continue
                c = ext.mul(self.eigenvector[j], ext.pow(self.alpha_points[i], p))
                coeffs_ext.append(ext.mul(c, b_val))
            s_digits = ext.digits(syndrome.coefficient(i))
            digit_cols = [ext.digits(c) for c in coeffs_ext]
            for t in range(ext.s):
                rows.append([dc[t] for dc in digit_cols])
                rhs.append(s_digits[t])
        solved = solve_right(base, rows, rhs)
        if solved is None or solved[1] > 0:
            return None
        flat = solved[0]
        return tuple(
            tuple(flat[idx * ell + j] for j in range(ell)) for idx in range(len(positions))
        )

    def decode(self, received) -> DecodeResult:
        """Full pipeline; returns a member of the code or a structured failure."""
        polys = self._as_words(received)
        syndrome = self.syndrome(polys)
        solved = self.solve_key_equation(syndrome)
        if solved is None:
            return DecodeResult.failure("locator has a vanishing constant term")
        locator, _ = solved
        positions = self.find_positions(locator)
        if len(positions) * self.d_b != locator.degree:
            return DecodeResult.failure(
                f"{len(positions)} roots disagree with locator degree {locator.degree}"
            )
        if positions:
            columns = self.evaluate_errors(syndrome, positions)
            if columns is None:
                return DecodeResult.failure("inconsistent error-value system")
        else:
            columns = ()
        corrected = self._subtract_errors(polys, positions, columns)
        if not self.code.is_member(corrected):
            return DecodeResult.failure("corrected word is not a codeword")
        return DecodeResult(True, positions, columns, corrected)

    # -- helpers -------------------------------------------------------------

    def _as_words(self, received) -> tuple[Polynomial, ...]:
        base = self.code.field
        polys = []
        for entry in received:
            p = entry if isinstance(entry, Polynomial) else Polynomial(base, entry)
            if p.degree >= self.code.m:
                raise DecoderError("received entry degree exceeds m")
            polys.append(p)
        if len(polys) != self.code.ell:
            raise DecoderError("received word must have ell entries")
        return tuple(polys)

    def _subtract_errors(self, polys, positions, columns) -> tuple[Polynomial, ...]:
        base = self.code.field
        m = self.code.m
        rows = [list(p.coeffs) + [0] * (m - len(p.coeffs)) for p in polys]
        for pos, col in zip(positions, columns):
            for j in range(self.code.ell):
                if col[j]:
                    rows[j][pos] = base.sub(rows[j][pos], col[j])
        return tuple(Polynomial(base, r) for r in rows)


def build_setup(
    code: QuasiCyclicCode,
    b_code: QuasiCyclicCode,
    alpha: FieldElement,
    beta: FieldElement,
    certificate: BoundCertificate,
) -> DecoderSetup:
    return DecoderSetup(code, b_code, alpha, beta, certificate)
