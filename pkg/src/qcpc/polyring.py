"""Dense univariate polynomials over a finite field, and matrices of them.

Coefficients are stored as the integer encodings used by :class:`qcpc.galois.Field`
(ascending powers, no trailing zeros).  The zero polynomial has an empty
coefficient tuple and degree ``-inf``.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .galois import Field, FieldElement

NEG_INFINITY = float("-inf")


class PolynomialError(ValueError):
    pass


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Immutable dense polynomial over a :class:`~qcpc.galois.Field`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "Field", coeffs: Iterable[int | "FieldElement"]):
        encoded: list[int] = []
        for c in coeffs:
            encoded.append(c if isinstance(c, int) else c.value)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _trim(encoded))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: "Field") -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: "Field") -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: "Field", exponent: int, coeff: int = 1) -> "Polynomial":
        if exponent < 0:
            raise PolynomialError("monomial exponent must be nonnegative")
        return cls(field, (0,) * exponent + (coeff,))

    @classmethod
    def x_pow_minus_one(cls, field: "Field", m: int) -> "Polynomial":
        """X^m - 1 over the given field."""
        coeffs = [0] * (m + 1)
        coeffs[0] = field.neg(1)
        coeffs[m] = 1
        return cls(field, coeffs)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        if not self.coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c) if c != 1 else "1")
            else:
                x = "X" if e == 1 else f"X^{e}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms)

    # -- ring operations ---------------------------------------------------

    def _check_same_field(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise PolynomialError("polynomials over different fields")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_same_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Polynomial(f, out)

    def __neg__(self) -> "Polynomial":
        f = self.field
        return Polynomial(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_same_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(f)
        out = [0] * (len(a) + len(b) - 1)
        mul, add = f.mul, f.add
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = add(out[i + j], mul(ca, cb))
        return Polynomial(f, out)

    def scale(self, c: int | "FieldElement") -> "Polynomial":
        f = self.field
        cv = c if isinstance(c, int) else c.value
        if cv == 0:
            return Polynomial.zero(f)
        return Polynomial(f, [f.mul(cv, x) for x in self.coeffs])

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._check_same_field(other)
        if other.is_zero:
            raise PolynomialError("division by zero polynomial")
        f = self.field
        rem = list(self.coeffs)
        d = other.degree
        if self.degree < d:
            return Polynomial.zero(f), self
        inv_lc = f.inv(other.leading_coefficient)
        quot = [0] * (len(rem) - d)
        mul, sub = f.mul, f.sub
        oc = other.coeffs
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = mul(c, inv_lc)
            quot[i - d] = q
            for j in range(d + 1):
                rem[i - d + j] = sub(rem[i - d + j], mul(q, oc[j]))
        return Polynomial(f, quot), Polynomial(f, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.leading_coefficient
        if lc == 1:
            return self
        return self.scale(self.field.inv(lc))

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise PolynomialError("negative polynomial power")
        out = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- evaluation --------------------------------------------------------

    def eval_enc(self, x: int, field: "Field" | None = None) -> int:
        """Horner evaluation at an encoded point, optionally in an extension field.

        The coefficients must embed in ``field`` (base-field coefficients into a
        prime extension share encodings, which is the only cross-field case used).
        """
        f = field if field is not None else self.field
        acc = 0
        mul, add = f.mul, f.add
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x), c)
        return acc

    def __call__(self, x: "FieldElement") -> "FieldElement":
        return x.field.element(self.eval_enc(x.value, x.field))

    # -- modular helpers ---------------------------------------------------

    def mul_mod(self, other: "Polynomial", m: int) -> "Polynomial":
        """Product reduced modulo X^m - 1 (exponents folded mod m)."""
        self._check_same_field(other)
        f = self.field
        out = [0] * m
        mul, add = f.mul, f.add
        for i, ca in enumerate(self.coeffs):
            if ca == 0:
                continue
            for j, cb in enumerate(other.coeffs):
                if cb:
                    k = (i + j) % m
                    out[k] = add(out[k], mul(ca, cb))
        return Polynomial(f, out)

    def reduce_mod_xm1(self, m: int) -> "Polynomial":
        if self.degree < m:
            return self
        f = self.field
        out = [0] * m
        for i, c in enumerate(self.coeffs):
            if c:
                out[i % m] = f.add(out[i % m], c)
        return Polynomial(f, out)

    def times_x_power(self, e: int, m: int) -> "Polynomial":
        """Multiply by X^e modulo X^m - 1; e may be negative."""
        e %= m
        f = self.field
        out = [0] * m
        for i, c in enumerate(self.coeffs):
            if c:
                k = (i + e) % m
                out[k] = f.add(out[k], c)
        return Polynomial(f, out)


def substitute_power(poly: Polynomial, e: int, m: int) -> Polynomial:
    """f(X^e) reduced modulo X^m - 1, for any integer exponent e.

    Each term c*X^u maps to c*X^(u*e mod m); colliding exponents are summed.
    """
    if m < 1:
        raise PolynomialError("m must be positive")
    eb = e % m
    f = poly.field
    out = [0] * m
    for u, c in enumerate(poly.coeffs):
        if c:
            k = (u * eb) % m
            out[k] = f.add(out[k], c)
    return Polynomial(f, out)


def poly_xgcd(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Extended gcd: returns monic d and (u, v) with u*f + v*g = d exactly."""
    if f.is_zero and g.is_zero:
        raise PolynomialError("gcd of two zero polynomials")
    field = f.field
    zero, one = Polynomial.zero(field), Polynomial.one(field)
    r0, r1 = f, g
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lc = r0.leading_coefficient
    if lc != 1:
        inv = field.inv(lc)
        r0, u0, v0 = r0.scale(inv), u0.scale(inv), v0.scale(inv)
    return r0, u0, v0


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


class PolyMatrix:
    """Immutable matrix over F_q[X]; all entries share one field."""

    __slots__ = ("field", "rows")

    def __init__(self, rows: Sequence[Sequence[Polynomial]]):
        if not rows or not rows[0]:
            raise PolynomialError("empty matrix")
        field = rows[0][0].field
        width = len(rows[0])
        frozen = []
        for row in rows:
            if len(row) != width:
                raise PolynomialError("ragged matrix")
            for entry in row:
                if entry.field != field:
                    raise PolynomialError("mixed fields in matrix")
            frozen.append(tuple(row))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", tuple(frozen))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("PolyMatrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def at(self, i: int, j: int) -> Polynomial:
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = ";\n ".join(", ".join(repr(p) for p in row) for row in self.rows)
        return f"PolyMatrix[\n {body}\n]"

    # -- row operations (each returns a new matrix, row module preserved) ---

    def swap_rows(self, i: int, j: int) -> "PolyMatrix":
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return PolyMatrix(rows)

    def scale_row(self, i: int, c: int | "FieldElement") -> "PolyMatrix":
        cv = c if isinstance(c, int) else c.value
        if cv == 0:
            raise PolynomialError("row scaling by a non-unit")
        rows = list(self.rows)
        rows[i] = tuple(p.scale(cv) for p in rows[i])
        return PolyMatrix(rows)

    def add_multiple(self, i: int, j: int, factor: Polynomial) -> "PolyMatrix":
        """Row i += factor * row j."""
        if i == j:
            raise PolynomialError("cannot add a row onto itself")
        rows = list(self.rows)
        rows[i] = tuple(a + factor * b for a, b in zip(rows[i], rows[j]))
        return PolyMatrix(rows)

    def delete_row(self, i: int) -> "PolyMatrix":
        rows = [row for k, row in enumerate(self.rows) if k != i]
        return PolyMatrix(rows)

    def drop_zero_rows(self) -> "PolyMatrix":
        rows = [row for row in self.rows if any(not p.is_zero for p in row)]
        if not rows:
            raise PolynomialError("matrix has no nonzero rows")
        return PolyMatrix(rows)

    # -- whole-matrix helpers ------------------------------------------------

    def stack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.ncols:
            raise PolynomialError("column count mismatch")
        return PolyMatrix(list(self.rows) + list(other.rows))

    def evaluate(self, x: int, field: "Field" | None = None) -> list[list[int]]:
        """Evaluate every entry at an encoded point of ``field``."""
        return [[p.eval_enc(x, field) for p in row] for row in self.rows]

    def is_upper_triangular(self) -> bool:
        return all(
            self.rows[i][j].is_zero for i in range(self.nrows) for j in range(min(i, self.ncols))
        )

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(p) for p in row] for row in self.rows])


def upper_det(matrix: PolyMatrix) -> Polynomial:
    """Determinant of a square upper-triangular matrix (diagonal product)."""
    if matrix.nrows != matrix.ncols:
        raise PolynomialError("determinant requires a square matrix")
    if not matrix.is_upper_triangular():
        raise PolynomialError("upper_det requires an upper-triangular matrix")
    out = Polynomial.one(matrix.field)
    for i in range(matrix.nrows):
        out = out * matrix.at(i, i)
    return out
