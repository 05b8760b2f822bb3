"""Quasi-cyclic codes as F_q[X]-submodules of F_q[X]^ell containing
<(X^m-1)e_j>: basis management, RGB/POT reduction, encoding, membership.

The reduced Groebner basis under the position-over-term order is the
Hermite-style canonical form: an upper-triangular ell x ell matrix whose
diagonal entries divide X^m-1 (C1-C4).  The reduction below assembles each
column pivot as a gcd of leading entries (the adjoined (X^m-1)e_j rows make
C3 automatic), then enforces C4 and the off-diagonal degree bound C2.
"""

from __future__ import annotations

from collections import deque
from math import gcd
from typing import Sequence

from .galois import Field
from .polyring import Polynomial, PolyMatrix, poly_xgcd

Row = tuple[Polynomial, ...]
CodewordVec = tuple[Polynomial, ...]


class CodeError(ValueError):
    pass


def _lead(row: Row) -> int | None:
    for j, p in enumerate(row):
        if not p.is_zero:
            return j
    return None


def _sub_scaled(row_a: Row, factor: Polynomial, row_b: Row, m: int, exact_col: int) -> Row:
    """row_a - factor*row_b, entries right of exact_col folded mod X^m-1."""
    out = []
    for t, (a, b) in enumerate(zip(row_a, row_b)):
        entry = a - factor * b
        if t > exact_col:
            entry = entry.reduce_mod_xm1(m)
        out.append(entry)
    return tuple(out)


def reduce_rgb_pot(field: Field, ell: int, m: int, rows: Sequence[Row]) -> PolyMatrix:
    """Canonical RGB/POT form of the module spanned by ``rows`` and (X^m-1)e_j."""
    xm1 = Polynomial.x_pow_minus_one(field, m)
    zero = Polynomial.zero(field)

    queue: deque[Row] = deque()
    for row in rows:
        queue.append(tuple(p.reduce_mod_xm1(m) for p in row))
    for j in range(ell):
        queue.append(tuple(xm1 if t == j else zero for t in range(ell)))

    pivots: list[Row | None] = [None] * ell
    while queue:
        row = queue.popleft()
        while True:
            j = _lead(row)
            if j is None:
                break
            pivot = pivots[j]
            if pivot is None:
                lc = row[j].leading_coefficient
                if lc != 1:
                    row = tuple(p.scale(field.inv(lc)) for p in row)
                pivots[j] = row
                break
            d, u, v = poly_xgcd(pivot[j], row[j])
            if d == pivot[j]:
                row = _sub_scaled(row, row[j] // pivot[j], pivot, m, j)
                continue
            # Merge: the new pivot entry is the gcd; both displaced rows
            # cancel exactly at column j and move strictly right.
            merged = []
            for t, (a, b) in enumerate(zip(pivot, row)):
                entry = u * a + v * b
                if t > j:
                    entry = entry.reduce_mod_xm1(m)
                merged.append(entry)
            new_pivot = tuple(merged)
            displaced = _sub_scaled(pivot, pivot[j] // d, new_pivot, m, j)
            pivots[j] = new_pivot
            queue.append(displaced)
            row = _sub_scaled(row, row[j] // d, new_pivot, m, j)

    result: list[Row] = []
    for j in range(ell):
        pivot = pivots[j]
        if pivot is None:  # pragma: no cover - K rows guarantee a pivot
            raise CodeError("missing pivot; adjoined rows were not processed")
        if not (xm1 % pivot[j]).is_zero:  # pragma: no cover - structural invariant
            raise CodeError("pivot does not divide X^m-1")
        if pivot[j] == xm1:
            pivot = tuple(xm1 if t == j else zero for t in range(ell))
        result.append(pivot)

    # C2: reduce each entry above a diagonal modulo that diagonal.
    for i in range(ell):
        row = result[i]
        for c in range(i + 1, ell):
            q = row[c] // result[c][c]
            if not q.is_zero:
                row = _sub_scaled(row, q, result[c], m, c - 1)
        result[i] = row
    return PolyMatrix(result)


def _as_polynomial(field: Field, entry) -> Polynomial:
    if isinstance(entry, Polynomial):
        if entry.field != field:
            raise CodeError("row entry over a different field")
        return entry
    return Polynomial(field, entry)


class QuasiCyclicCode:
    """An ell-quasi-cyclic code of length ell*m over GF(q), q = p prime power.

    The stored basis is the user generating set with the rows (X^m-1)e_j
    adjoined; the RGB/POT form, dimension and per-row degrees are cached on
    first use.  Instances are immutable after construction.
    """

    def __init__(self, field: Field, ell: int, m: int, rows: Sequence[Sequence] = ()):
        if ell < 1 or m < 1:
            raise CodeError("need ell >= 1 and m >= 1")
        if gcd(m, field.p) != 1:
            raise CodeError(f"gcd({m}, char {field.p}) != 1: repeated-root regime is unsupported")
        self.field = field
        self.ell = ell
        self.m = m
        user_rows: list[Row] = []
        for row in rows:
            row = tuple(_as_polynomial(field, p) for p in row)
            if len(row) != ell:
                raise CodeError("generator row width != ell")
            user_rows.append(row)
        xm1 = Polynomial.x_pow_minus_one(field, m)
        zero = Polynomial.zero(field)
        kernel_rows = [tuple(xm1 if t == j else zero for t in range(ell)) for j in range(ell)]
        self.basis: tuple[Row, ...] = tuple(user_rows) + tuple(kernel_rows)
        self._rgb: PolyMatrix | None = None

    @property
    def n(self) -> int:
        return self.ell * self.m

    @property
    def rgb_pot(self) -> PolyMatrix:
        if self._rgb is None:
            self._rgb = reduce_rgb_pot(self.field, self.ell, self.m, self.basis)
        return self._rgb

    @property
    def diagonal(self) -> tuple[Polynomial, ...]:
        g = self.rgb_pot
        return tuple(g.at(j, j) for j in range(self.ell))

    @property
    def row_degrees(self) -> tuple[int, ...]:
        """k_j = m - deg g_{j,j}: message length feeding row j."""
        return tuple(self.m - int(g.degree) for g in self.diagonal)

    @property
    def dimension(self) -> int:
        return sum(self.row_degrees)

    @property
    def level(self) -> int:
        """Number of leading rows whose diagonal is a proper divisor of X^m-1."""
        xm1 = Polynomial.x_pow_minus_one(self.field, self.m)
        r = self.ell
        for g in reversed(self.diagonal):
            if g != xm1:
                break
            r -= 1
        return r

    def encode(self, message: Sequence) -> CodewordVec:
        """c = i(X) G(X) entry-wise mod X^m-1; deg i_j < k_j required."""
        g = self.rgb_pot
        degrees = self.row_degrees
        msg = [_as_polynomial(self.field, p) for p in message]
        if len(msg) != self.ell:
            raise CodeError("message must have ell entries")
        for p, k in zip(msg, degrees):
            if p.degree >= k:
                raise CodeError(f"message degree {p.degree} exceeds bound {k}")
        out = []
        for j in range(self.ell):
            acc = Polynomial.zero(self.field)
            for i in range(self.ell):
                if not msg[i].is_zero and not g.at(i, j).is_zero:
                    acc = acc + msg[i].mul_mod(g.at(i, j), self.m)
            out.append(acc)
        return tuple(out)

    def is_member(self, word: Sequence) -> bool:
        """POT division of the word against the RGB/POT basis."""
        g = self.rgb_pot
        entries = [_as_polynomial(self.field, p) for p in word]
        if len(entries) != self.ell:
            raise CodeError("word must have ell entries")
        if any(p.degree >= self.m for p in entries):
            raise CodeError("word entries must have degree < m")
        for j in range(self.ell):
            if entries[j].is_zero:
                continue
            quotient, remainder = divmod(entries[j], g.at(j, j))
            if not remainder.is_zero:
                return False
            for t in range(j, self.ell):
                entries[t] = (entries[t] - quotient * g.at(j, t)).reduce_mod_xm1(self.m)
        return True

    def shift(self, word: Sequence) -> CodewordVec:
        """Multiply each entry by X mod X^m-1 (one quasi-cyclic shift)."""
        return tuple(_as_polynomial(self.field, p).times_x_power(1, self.m) for p in word)

    def random_codeword(self, rng) -> CodewordVec:
        msg = []
        for k in self.row_degrees:
            msg.append(Polynomial(self.field, [rng.randrange(self.field.order) for _ in range(k)]))
        return self.encode(msg)

    def iter_codewords(self):
        """All q^k codewords, messages enumerated in lexicographic coefficient order."""
        from itertools import product

        q = self.field.order
        degrees = self.row_degrees
        slots = [(j, t) for j, k in enumerate(degrees) for t in range(k)]
        for combo in product(range(q), repeat=len(slots)):
            msg = [[0] * k for k in degrees]
            for (j, t), c in zip(slots, combo):
                msg[j][t] = c
            yield self.encode([Polynomial(self.field, row) for row in msg])

    def __repr__(self) -> str:
        return f"QuasiCyclicCode(q={self.field.order}, ell={self.ell}, m={self.m})"


def vec_to_univariate(word: Sequence[Polynomial], ell: int) -> Polynomial:
    """c(X) = sum_j c_j(X^ell) X^j: the serialized codeword polynomial."""
    if len(word) != ell:
        raise CodeError("word width != ell")
    field = word[0].field
    coeffs: dict[int, int] = {}
    for j, p in enumerate(word):
        for i, c in enumerate(p.coeffs):
            if c:
                coeffs[i * ell + j] = c
    if not coeffs:
        return Polynomial.zero(field)
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return Polynomial(field, out)


def univariate_to_vec(poly: Polynomial, ell: int, m: int) -> CodewordVec:
    """Inverse of :func:`vec_to_univariate`; coefficient i*ell+j lands in c_j[i]."""
    if poly.degree >= ell * m:
        raise CodeError(f"degree {poly.degree} >= ell*m = {ell * m}")
    rows = [[0] * m for _ in range(ell)]
    for e, c in enumerate(poly.coeffs):
        if c:
            rows[e % ell][e // ell] = c
    return tuple(Polynomial(poly.field, row) for row in rows)
