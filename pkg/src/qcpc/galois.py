"""Exact arithmetic in GF(p^s): fields, roots of unity, cyclotomic cosets,
minimal polynomials, and small dense linear algebra over field encodings.

Elements are encoded as integers: the base-p digits of the encoding are the
coefficients of the representing polynomial, ascending powers.  For p = 2 the
encoding is the usual bitmask.  Fields with at most ``_TABLE_LIMIT`` elements
get discrete-log tables; above that a generic multiply-and-reduce path is used
(the semantics are identical).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from .polyring import Polynomial

_TABLE_LIMIT_BINARY = 1 << 16
_TABLE_LIMIT_GENERIC = 1 << 14

# Modulus of F_{2^12} used throughout the worked binary examples:
# X^12 + X^7 + X^6 + X^5 + X^3 + X + 1.
_DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 12): (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1),
}


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def factorize(n: int) -> list[int]:
    """Distinct prime factors by trial division (desk-scale inputs only)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(q: int, n: int) -> int:
    """Order of q in (Z/nZ)*; requires gcd(q, n) = 1."""
    if n == 1:
        return 1
    if gcd(q, n) != 1:
        raise FieldError(f"gcd({q}, {n}) != 1: no multiplicative order")
    s, acc = 1, q % n
    while acc != 1:
        acc = (acc * q) % n
        s += 1
    return s


class Field:
    """GF(p^s) represented as F_p[x] modulo a monic irreducible polynomial."""

    def __init__(self, p: int, s: int | None = None, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if modulus is None:
            if s is None:
                raise FieldError("need either s or an explicit modulus")
            modulus = _default_modulus(p, s)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree >= 1")
        if s is not None and len(modulus) != s + 1:
            raise FieldError("modulus degree does not match s")
        self.p = p
        self.s = len(modulus) - 1
        self.modulus = modulus
        self.order = p**self.s
        if self.s > 1 and not _is_irreducible(p, modulus):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._primitive: int | None = None
        self._prime_subfield: "Field" | None = None
        self._mod_mask = sum(c << i for i, c in enumerate(self.modulus)) if p == 2 else 0
        limit = _TABLE_LIMIT_BINARY if p == 2 else _TABLE_LIMIT_GENERIC
        self._use_tables = self.order <= limit

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.p == other.p and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.s})" if self.s > 1 else f"GF({self.p})"

    # -- encodings -----------------------------------------------------------

    def digits(self, value: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.s):
            value, d = divmod(value, self.p)
            out.append(d)
        return tuple(out)

    def from_digits(self, digits: Iterable[int]) -> int:
        value = 0
        for d in reversed(list(digits)):
            value = value * self.p + (d % self.p)
        if value >= self.order:
            raise FieldError("coefficient sequence longer than extension degree")
        return value

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.order:
            raise FieldError(f"encoding {value} out of range for {self!r}")
        return FieldElement(self, value)

    def from_coefficients(self, coeffs: Iterable[int]) -> "FieldElement":
        return FieldElement(self, self.from_digits(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    @property
    def prime_subfield(self) -> "Field":
        if self.s == 1:
            return self
        if self._prime_subfield is None:
            self._prime_subfield = Field(self.p, modulus=(0, 1))
        return self._prime_subfield

    # -- arithmetic on encodings ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.s == 1:
            return (a + b) % self.p
        p, out, mult = self.p, 0, 1
        for _ in range(self.s):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.s == 1:
            return (-a) % self.p
        p, out, mult = self.p, 0, 1
        for _ in range(self.s):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._use_tables:
            if self._exp is None:
                self._build_tables()
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self._use_tables:
            if self._exp is None:
                self._build_tables()
            return self._exp[self.order - 1 - self._log[a]]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("negative power of zero field element")
        e %= self.order - 1
        if self._use_tables:
            if self._exp is None:
                self._build_tables()
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        out, base = 1, a
        while e:
            if e & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a * b) % self.p
        if self.p == 2:
            top = 1 << self.s
            out = 0
            while b:
                if b & 1:
                    out ^= a
                a <<= 1
                if a & top:
                    a ^= self._mod_mask
                b >>= 1
            return out
        p = self.p
        da, db = list(self.digits(a)), list(self.digits(b))
        prod = [0] * (2 * self.s - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        mod = self.modulus
        for i in range(len(prod) - 1, self.s - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.s):
                    prod[i - self.s + j] = (prod[i - self.s + j] - c * mod[j]) % p
        value = 0
        for d in reversed(prod[: self.s]):
            value = value * p + d
        return value

    def _build_tables(self) -> None:
        g = self.primitive_encoding
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        val = 1
        for i in range(n):
            exp[i] = val
            exp[i + n] = val
            log[val] = i
            val = self._mul_raw(val, g)
        self._exp, self._log = exp, log

    # -- primitive element ------------------------------------------------------

    @property
    def primitive_encoding(self) -> int:
        if self._primitive is None:
            self._primitive = self._find_primitive()
        return self._primitive

    @property
    def primitive_element(self) -> "FieldElement":
        return FieldElement(self, self.primitive_encoding)

    def _find_primitive(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        primes = factorize(n)
        # x itself (encoding p) is primitive for the hard-coded moduli; scan
        # from it first so representations match the worked examples.
        candidates = list(range(self.p, self.order)) + list(range(2, self.p))
        for g in candidates:
            if all(self._pow_raw(g, n // r) != 1 for r in primes):
                return g
        raise FieldError("no primitive element found (inconsistent field)")

    def _pow_raw(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return out

    def element_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        o = self.order - 1
        for r in factorize(o):
            while o % r == 0 and self.pow(a, o // r) == 1:
                o //= r
        return o

    # -- serialization -----------------------------------------------------------

    def descriptor(self) -> dict:
        return {"p": self.p, "s": self.s, "modulus": list(self.modulus)}


class FieldElement:
    """An element of a :class:`Field`, immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("FieldElement is immutable")

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def order(self) -> int:
        return self.field.element_order(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands from different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.value, v))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p and self.value < self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return f"{self.field!r}:{list(self.coefficients)}"


# -- field construction ------------------------------------------------------


def _default_modulus(p: int, s: int) -> tuple[int, ...]:
    if (p, s) in _DEFAULT_MODULI:
        return _DEFAULT_MODULI[(p, s)]
    if s == 1:
        return (0, 1)
    # Smallest irreducible in ascending little-endian encoding order.
    for t in range(p**s):
        coeffs = []
        tt = t
        for _ in range(s):
            tt, d = divmod(tt, p)
            coeffs.append(d)
        coeffs.append(1)
        if _is_irreducible(p, tuple(coeffs)):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {s} over GF({p})")  # pragma: no cover


def _is_irreducible(p: int, coeffs: tuple[int, ...]) -> bool:
    """Trial division by every monic polynomial of degree up to deg/2."""
    gfp = Field(p, modulus=(0, 1))
    poly = Polynomial(gfp, coeffs)
    s = len(coeffs) - 1
    if coeffs[0] == 0:
        return s == 1
    for d in range(1, s // 2 + 1):
        for t in range(p**d):
            cand = []
            tt = t
            for _ in range(d):
                tt, dig = divmod(tt, p)
                cand.append(dig)
            cand.append(1)
            if (poly % Polynomial(gfp, cand)).is_zero:
                return False
    return True


def field_extend(q: int, n: int) -> Field:
    """Smallest extension GF(q^s) whose multiplicative group has an order-n element.

    The base q must be prime; s is the multiplicative order of q modulo n.
    """
    if not is_prime(q):
        raise FieldError(f"base field order {q} is not prime")
    if n < 1:
        raise FieldError("element order must be positive")
    if gcd(n, q) != 1:
        raise FieldError(f"gcd({n}, {q}) != 1: repeated-root regime is unsupported")
    s = multiplicative_order(q, n)
    return Field(q, s=s)


def root_of_unity(field: Field, n: int) -> FieldElement:
    """Deterministic element of multiplicative order exactly n."""
    group = field.order - 1
    if n < 1 or group % n != 0:
        raise FieldError(f"{n} does not divide the group order {group}")
    return field.primitive_element ** (group // n)


# -- cyclotomic cosets and minimal polynomials ---------------------------------


@dataclass(frozen=True)
class CyclotomicCoset:
    representative: int
    m: int
    q: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def cyclotomic_coset(i: int, m: int, q: int) -> CyclotomicCoset:
    """Orbit of i under multiplication by q modulo m."""
    if not 0 <= i < m:
        raise FieldError("coset representative out of range")
    if gcd(m, q) != 1:
        raise FieldError(f"gcd({m}, {q}) != 1")
    members = []
    j = i
    while True:
        members.append(j)
        j = (j * q) % m
        if j == i:
            break
    return CyclotomicCoset(i, m, q, tuple(sorted(members)))


def coset_representatives(m: int, q: int) -> list[int]:
    """Minimal representatives of all q-cyclotomic cosets modulo m, sorted."""
    seen: set[int] = set()
    reps = []
    for i in range(m):
        if i in seen:
            continue
        coset = cyclotomic_coset(i, m, q)
        reps.append(i)
        seen.update(coset.members)
    return reps


def minimal_polynomial(alpha: FieldElement, i: int, m: int | None = None) -> Polynomial:
    """Minimal polynomial of alpha^i over the prime subfield.

    alpha must have multiplicative order m; the result is the monic product
    over the q-cyclotomic coset of i, with coefficients collapsing into GF(q).
    """
    field = alpha.field
    if m is None:
        m = alpha.order()
    coset = cyclotomic_coset(i % m, m, field.p)
    out = Polynomial.one(field)
    for j in coset.members:
        root = field.pow(alpha.value, j)
        out = out * Polynomial(field, (field.neg(root), 1))
    base = field.prime_subfield
    coeffs = []
    for c in out.coeffs:
        if c >= field.p:
            raise FieldError("minimal polynomial coefficients do not lie in the base field")
        coeffs.append(c)
    return Polynomial(base, coeffs)


def subfield_coordinates(x: FieldElement, basis: Sequence[FieldElement]) -> tuple[int, ...]:
    """Coordinates of x over the prime subfield with respect to ``basis``."""
    field = x.field
    if len(basis) != field.s:
        raise FieldError("basis must have one element per extension degree")
    gfp = field.prime_subfield
    columns = [field.digits(b.value) for b in basis]
    rows = [[columns[j][t] for j in range(field.s)] for t in range(field.s)]
    rhs = list(field.digits(x.value))
    solution = solve_right(gfp, rows, rhs)
    if solution is None or solution[1] > 0:
        raise FieldError("singular basis")
    return solution[0]


# -- dense linear algebra over field encodings ---------------------------------


def rref(field: Field, rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def kernel_basis(field: Field, rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Basis of the right kernel {v : rows @ v = 0} over ``field``.

    Each basis vector is scaled so its first nonzero coordinate is 1.
    """
    reduced, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(reduced[r][fc])
        lead = next(v for v in vec if v != 0)
        if lead != 1:
            inv = field.inv(lead)
            vec = [field.mul(inv, v) for v in vec]
        basis.append(tuple(vec))
    return basis


def solve_right(
    field: Field, rows: Sequence[Sequence[int]], rhs: Sequence[int]
) -> tuple[tuple[int, ...], int] | None:
    """Solve rows @ x = rhs.  Returns (solution, free variable count) or None."""
    if len(rows) != len(rhs):
        raise FieldError("dimension mismatch")
    if not rows:
        return (), 0
    ncols = len(rows[0])
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(field, augmented)
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
    solution = [0] * ncols
    for r, pc in enumerate(pivots):
        solution[pc] = reduced[r][ncols]
    return tuple(solution), ncols - len(pivots)


def span_dimension(field: Field, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(field, rows)[0])


def spans_equal(field: Field, rows_a: Sequence[Sequence[int]], rows_b: Sequence[Sequence[int]]) -> bool:
    """Row-span equality via canonical reduced echelon forms."""
    ra, _ = rref(field, rows_a)
    rb, _ = rref(field, rows_b)
    return ra == rb
