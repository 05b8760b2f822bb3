"""Product codes of two quasi-cyclic component codes with coprime lengths:
index maps between the array and serialized forms, the unreduced basis, the
proven reduced forms (2-QC x cyclic, 1-level x cyclic), and the conjectured
general reduced form with mandatory verification.

All generator constructions come in a factored form: a core matrix over
F_q[X] plus one monomial shift exponent per column.  The core is what the
closed-form expressions produce; materializing multiplies column j by
X^shift[j] mod (X^m - 1), which is a unit scaling and generates the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .galois import Field
from .polyring import Polynomial, PolyMatrix, poly_xgcd
from .qcc import CodeError, QuasiCyclicCode, reduce_rgb_pot, univariate_to_vec


class ProductError(CodeError):
    pass


def bezout_pair(n_a: int, n_b: int) -> tuple[int, int]:
    """(a, b) with a*n_a + b*n_b = 1, normalized to 0 < a < n_b (so |a| < n_b)."""
    if gcd(n_a, n_b) != 1:
        raise ProductError(f"component lengths {n_a}, {n_b} are not coprime")
    old_r, r = n_a, n_b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    a = old_s % n_b if n_b > 1 else 0
    return a, (1 - a * n_a) // n_b


@dataclass(frozen=True)
class ProductSpec:
    """Row code A, column code B, and the Bezout pair tying their lengths."""

    row_code: QuasiCyclicCode
    col_code: QuasiCyclicCode
    a: int
    b: int

    def __post_init__(self):
        if self.row_code.field != self.col_code.field:
            raise ProductError("component codes over different fields")
        if gcd(self.n_a, self.n_b) != 1:
            raise ProductError(f"component lengths {self.n_a}, {self.n_b} are not coprime")
        if self.a * self.n_a + self.b * self.n_b != 1:
            raise ProductError("a*n_A + b*n_B != 1")

    @classmethod
    def create(
        cls,
        row_code: QuasiCyclicCode,
        col_code: QuasiCyclicCode,
        a: int | None = None,
        b: int | None = None,
    ) -> "ProductSpec":
        if a is None and b is None:
            a, b = bezout_pair(row_code.n, col_code.n)
        elif a is None or b is None:
            raise ProductError("give both of a, b or neither")
        return cls(row_code, col_code, a, b)

    @property
    def field(self) -> Field:
        return self.row_code.field

    @property
    def l_a(self) -> int:
        return self.row_code.ell

    @property
    def l_b(self) -> int:
        return self.col_code.ell

    @property
    def m_a(self) -> int:
        return self.row_code.m

    @property
    def m_b(self) -> int:
        return self.col_code.m

    @property
    def n_a(self) -> int:
        return self.row_code.n

    @property
    def n_b(self) -> int:
        return self.col_code.n

    @property
    def ell(self) -> int:
        return self.l_a * self.l_b

    @property
    def m(self) -> int:
        return self.m_a * self.m_b

    @property
    def n(self) -> int:
        return self.n_a * self.n_b


# -- index maps ---------------------------------------------------------------


def index_map(spec: ProductSpec, i: int, j: int) -> int:
    """mu(i, j): position of array entry (i, j) in the serialized codeword."""
    return (i * spec.a * spec.n_a * spec.l_a + j * spec.b * spec.n_b * spec.l_b) % spec.n


def submatrix_map(spec: ProductSpec, i: int, j: int) -> int:
    """theta(i, j) = i*a*n_A + j*b*n_B mod m: the cyclic-product submatrix map."""
    return (i * spec.a * spec.n_a + j * spec.b * spec.n_b) % spec.m


def shift_term(spec: ProductSpec, g: int, h: int) -> int:
    """s(g, h) = g(-b m_B) + h(-a m_A) mod m: per-component codeword shift."""
    return (g * (-spec.b * spec.m_b) + h * (-spec.a * spec.m_a)) % spec.m


def _component_index(spec: ProductSpec, g: int, h: int) -> int:
    return g + h * spec.l_b


def _component_pair(spec: ProductSpec, t: int) -> tuple[int, int]:
    return t % spec.l_b, t // spec.l_b


# -- serialization between representations --------------------------------------


def matrix_to_polys(spec: ProductSpec, array) -> tuple[Polynomial, ...]:
    """The ell component polynomials c_{g,h} of an n_B x n_A product array.

    Component t = g + h*l_B holds c_{g,h}(X) = X^s(g,h) * sum m_{i l_B + g, j l_A + h}
    X^theta(i,j) mod (X^m - 1).
    """
    field = spec.field
    out = []
    for t in range(spec.ell):
        g, h = _component_pair(spec, t)
        coeffs = [0] * spec.m
        base = shift_term(spec, g, h)
        for i in range(spec.m_b):
            row = array[i * spec.l_b + g]
            for j in range(spec.m_a):
                c = row[j * spec.l_a + h]
                if c:
                    e = (base + submatrix_map(spec, i, j)) % spec.m
                    coeffs[e] = field.add(coeffs[e], c)
        out.append(Polynomial(field, coeffs))
    return tuple(out)


def polys_to_matrix(spec: ProductSpec, polys) -> list[list[int]]:
    """Inverse of :func:`matrix_to_polys`."""
    array = [[0] * spec.n_a for _ in range(spec.n_b)]
    for t in range(spec.ell):
        g, h = _component_pair(spec, t)
        base = shift_term(spec, g, h)
        poly = polys[t]
        for i in range(spec.m_b):
            for j in range(spec.m_a):
                e = (base + submatrix_map(spec, i, j)) % spec.m
                array[i * spec.l_b + g][j * spec.l_a + h] = poly.coefficient(e)
    return array


def polys_to_univariate(spec: ProductSpec, polys) -> Polynomial:
    """c(X) = sum_{g,h} c_{g,h}(X^ell) X^{g l_A + h l_B} mod (X^n - 1)."""
    field = spec.field
    coeffs = [0] * spec.n
    for t in range(spec.ell):
        g, h = _component_pair(spec, t)
        offset = g * spec.l_a + h * spec.l_b
        for i, c in enumerate(polys[t].coeffs):
            if c:
                e = (offset + i * spec.ell) % spec.n
                coeffs[e] = field.add(coeffs[e], c)
    return Polynomial(field, coeffs)


def univariate_to_polys(spec: ProductSpec, poly: Polynomial) -> tuple[Polynomial, ...]:
    """Inverse of :func:`polys_to_univariate`."""
    if poly.degree >= spec.n:
        raise ProductError("serialized codeword degree exceeds n")
    inv_la = pow(spec.l_a, -1, spec.l_b) if spec.l_b > 1 else 0
    inv_lb = pow(spec.l_b, -1, spec.l_a) if spec.l_a > 1 else 0
    rows = [[0] * spec.m for _ in range(spec.ell)]
    for e, c in enumerate(poly.coeffs):
        if not c:
            continue
        r = e % spec.ell
        g = (r * inv_la) % spec.l_b
        h = (r * inv_lb) % spec.l_a
        i = ((e - g * spec.l_a - h * spec.l_b) // spec.ell) % spec.m
        rows[_component_index(spec, g, h)][i] = c
    return tuple(Polynomial(spec.field, row) for row in rows)


def matrix_to_univariate(spec: ProductSpec, array) -> Polynomial:
    """Direct serialization of the product array through mu (one polynomial)."""
    field = spec.field
    coeffs = [0] * spec.n
    for i in range(spec.n_b):
        for j in range(spec.n_a):
            c = array[i][j]
            if c:
                e = index_map(spec, i, j)
                coeffs[e] = field.add(coeffs[e], c)
    return Polynomial(field, coeffs)


def univariate_to_matrix(spec: ProductSpec, poly: Polynomial) -> list[list[int]]:
    if poly.degree >= spec.n:
        raise ProductError("serialized codeword degree exceeds n")
    return [
        [poly.coefficient(index_map(spec, i, j)) for j in range(spec.n_a)]
        for i in range(spec.n_b)
    ]


# -- generator constructions -----------------------------------------------------


@dataclass(frozen=True)
class ProductBasis:
    """A generator construction in factored form (core times column shifts)."""

    spec: ProductSpec
    kind: str
    core: PolyMatrix
    shifts: tuple[int, ...]

    @property
    def matrix(self) -> PolyMatrix:
        """Core with column j multiplied by X^shifts[j] mod (X^m - 1)."""
        m = self.spec.m
        rows = []
        for row in self.core.rows:
            rows.append([p.times_x_power(s, m) if not p.is_zero else p for p, s in zip(row, self.shifts)])
        return PolyMatrix(rows)

    def code(self) -> QuasiCyclicCode:
        return QuasiCyclicCode(self.spec.field, self.spec.ell, self.spec.m, self.matrix.rows)

    def reduced_core(self) -> PolyMatrix:
        """RGB/POT form of the core module (shift factor left out, as printed)."""
        return reduce_rgb_pot(self.spec.field, self.spec.ell, self.spec.m, self.core.rows)


def _substituted_generators(spec: ProductSpec):
    """Component generator entries after the Bezout power substitutions."""
    from .polyring import substitute_power

    m = spec.m
    g_a = spec.row_code.rgb_pot
    g_b = spec.col_code.rgb_pot
    sub_a = [
        [substitute_power(g_a.at(h, hp), spec.b * spec.n_b, m) for hp in range(spec.l_a)]
        for h in range(spec.l_a)
    ]
    sub_b = [
        [substitute_power(g_b.at(g, gp), spec.a * spec.n_a, m) for gp in range(spec.l_b)]
        for g in range(spec.l_b)
    ]
    return sub_a, sub_b


def _column_shifts(spec: ProductSpec) -> tuple[int, ...]:
    return tuple(shift_term(spec, *_component_pair(spec, t)) for t in range(spec.ell))


def unreduced_parts(spec: ProductSpec) -> ProductBasis:
    """Factored form of the upper block of the unreduced product basis."""
    sub_a, sub_b = _substituted_generators(spec)
    zero = Polynomial.zero(spec.field)
    rows = []
    for r in range(spec.ell):
        g, h = _component_pair(spec, r)
        row = []
        for c in range(spec.ell):
            gp, hp = _component_pair(spec, c)
            if gp < g or hp < h:
                row.append(zero)
            else:
                row.append(sub_a[h][hp].mul_mod(sub_b[g][gp], spec.m))
        rows.append(row)
    return ProductBasis(spec, "unreduced", PolyMatrix(rows), _column_shifts(spec))


def unreduced_basis(spec: ProductSpec) -> PolyMatrix:
    """Unreduced generating set of A (x) B: shifted upper block over (X^m-1)I."""
    parts = unreduced_parts(spec)
    xm1 = Polynomial.x_pow_minus_one(spec.field, spec.m)
    zero = Polynomial.zero(spec.field)
    kernel = [[xm1 if t == j else zero for t in range(spec.ell)] for j in range(spec.ell)]
    return parts.matrix.stack(PolyMatrix(kernel))


def pre_rgb_2qc_parts(spec: ProductSpec) -> ProductBasis:
    """2-QC row code times cyclic column code, reduced to two generating rows.

    Diagonal entries are gcd(X^m-1, g^A_hh(X^{b n_B}) g^B(X^{a n_A})); the
    surviving off-diagonal entry is the Bezout cofactor of the first gcd times
    the substituted g^A_01 g^B product.
    """
    if spec.l_a != 2 or spec.l_b != 1:
        raise ProductError("construction requires a 2-quasi-cyclic row code and a cyclic column code")
    sub_a, sub_b = _substituted_generators(spec)
    m = spec.m
    xm1 = Polynomial.x_pow_minus_one(spec.field, m)
    g00, _, v0 = poly_xgcd(xm1, sub_a[0][0].mul_mod(sub_b[0][0], m))
    g11, _, _ = poly_xgcd(xm1, sub_a[1][1].mul_mod(sub_b[0][0], m))
    gbar01 = v0.mul_mod(sub_a[0][1], m).mul_mod(sub_b[0][0], m)
    zero = Polynomial.zero(spec.field)
    core = PolyMatrix([[g00, gbar01], [zero, g11]])
    return ProductBasis(spec, "thm2", core, _column_shifts(spec))


def pre_rgb_2qc(spec: ProductSpec) -> PolyMatrix:
    return pre_rgb_2qc_parts(spec).matrix


def rgb_1level_parts(spec: ProductSpec) -> ProductBasis:
    """1-level row code times cyclic column code: a single generating row."""
    if spec.l_b != 1:
        raise ProductError("construction requires a cyclic column code")
    if spec.row_code.level != 1:
        raise ProductError("row code is not 1-level")
    from .polyring import substitute_power

    m = spec.m
    g_a_row = spec.row_code.rgb_pot.rows[0]
    g_a = g_a_row[0]
    factors = []
    for entry in g_a_row[1:]:
        f, rem = divmod(entry, g_a)
        if not rem.is_zero:  # pragma: no cover - RGB/POT of a 1-level code factors
            raise ProductError("1-level generator row does not factor through its pivot")
        factors.append(f)
    sub_b = substitute_power(spec.col_code.rgb_pot.at(0, 0), spec.a * spec.n_a, m)
    sub_ga = substitute_power(g_a, spec.b * spec.n_b, m)
    xm1 = Polynomial.x_pow_minus_one(spec.field, m)
    g, _, _ = poly_xgcd(xm1, sub_ga.mul_mod(sub_b, m))
    row = [g]
    for f in factors:
        row.append(g.mul_mod(substitute_power(f, spec.b * spec.n_b, m), m))
    return ProductBasis(spec, "thm3", PolyMatrix([row]), _column_shifts(spec))


def rgb_1level(spec: ProductSpec) -> PolyMatrix:
    return rgb_1level_parts(spec).matrix


def conjecture_parts(spec: ProductSpec) -> tuple[ProductBasis, bool]:
    """Conjectured reduced form for arbitrary (l_A, l_B), with verification.

    Diagonals are the pairwise gcds; off-diagonal (g+h l_B, g'+h' l_B) entries
    multiply the diagonal's Bezout cofactor onto the substituted component
    entries.  The construction is conjectural, so module equality against the
    unreduced basis is always checked and reported.
    """
    sub_a, sub_b = _substituted_generators(spec)
    m = spec.m
    xm1 = Polynomial.x_pow_minus_one(spec.field, m)
    zero = Polynomial.zero(spec.field)
    cofactors: list[Polynomial] = []
    diagonals: list[Polynomial] = []
    for r in range(spec.ell):
        g, h = _component_pair(spec, r)
        d, _, v = poly_xgcd(xm1, sub_a[h][h].mul_mod(sub_b[g][g], m))
        diagonals.append(d)
        cofactors.append(v)
    rows = []
    for r in range(spec.ell):
        g, h = _component_pair(spec, r)
        row = []
        for c in range(spec.ell):
            gp, hp = _component_pair(spec, c)
            if c == r:
                row.append(diagonals[r])
            elif gp < g or hp < h:
                row.append(zero)
            else:
                entry = cofactors[r].mul_mod(sub_a[h][hp], m).mul_mod(sub_b[g][gp], m)
                row.append(entry)
        rows.append(row)
    basis = ProductBasis(spec, "conjecture", PolyMatrix(rows), _column_shifts(spec))
    verified = module_matches_unreduced(spec, basis)
    return basis, verified


def conjecture_pre_rgb(spec: ProductSpec) -> tuple[PolyMatrix, bool]:
    basis, verified = conjecture_parts(spec)
    return basis.matrix, verified


def module_matches_unreduced(spec: ProductSpec, basis: ProductBasis) -> bool:
    """Canonical-form equality of a construction against the Thm-1 basis."""
    reference = reduce_rgb_pot(spec.field, spec.ell, spec.m, unreduced_parts(spec).matrix.rows)
    candidate = reduce_rgb_pot(spec.field, spec.ell, spec.m, basis.matrix.rows)
    return reference == candidate


def product_codeword(spec: ProductSpec, row_word, col_word) -> tuple[Polynomial, ...]:
    """Component polynomials of the rank-one array (outer product of b and a)."""
    from .qcc import vec_to_univariate

    a_vec = vec_to_univariate(row_word, spec.l_a)
    b_vec = vec_to_univariate(col_word, spec.l_b)
    array = [[0] * spec.n_a for _ in range(spec.n_b)]
    field = spec.field
    for i in range(spec.n_b):
        bi = b_vec.coefficient(i)
        if not bi:
            continue
        for j in range(spec.n_a):
            aj = a_vec.coefficient(j)
            if aj:
                array[i][j] = field.mul(bi, aj)
    return matrix_to_polys(spec, array)
