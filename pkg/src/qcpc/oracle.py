"""Independent brute-force ground truth: exact minimum distances by
enumeration, basis/module equality, and exhaustive burst-error sweeps.

Everything here is deliberately dumb and bounded: enumeration is refused,
never silently truncated, once a budget is exceeded (the sweep downgrades to
stratified sampling with a fixed seed, and says so in its result).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations, product
from typing import Sequence

from .galois import Field
from .polyring import Polynomial, PolyMatrix
from .qcc import CodeError, QuasiCyclicCode, vec_to_univariate


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    """Enumeration limits: q^k may not exceed 2^max_dimension words."""

    max_dimension: int = 20
    max_length: int = 4096
    max_sweep: int = 2_000_000

    def check_enumeration(self, q: int, k: int, n: int) -> None:
        if q**k > 2**self.max_dimension:
            raise BudgetExceeded(f"{q}^{k} codewords exceed the 2^{self.max_dimension} budget")
        if n > self.max_length:
            raise BudgetExceeded(f"length {n} exceeds budget {self.max_length}")


DEFAULT_BUDGET = OracleBudget()


def scalar_generator_rows(code: QuasiCyclicCode) -> list[list[int]]:
    """A k x n generator matrix over F_q (serialized per the vector layout)."""
    rows = []
    g = code.rgb_pot
    for j, k_j in enumerate(code.row_degrees):
        for t in range(k_j):
            shifted = tuple(p.times_x_power(t, code.m) for p in g.rows[j])
            serial = vec_to_univariate(shifted, code.ell)
            rows.append([serial.coefficient(e) for e in range(code.n)])
    return rows


def brute_min_distance(code: QuasiCyclicCode, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact minimum Hamming weight over all q^k - 1 nonzero codewords."""
    k = code.dimension
    if k == 0:
        raise CodeError("zero code: minimum distance undefined")
    q = code.field.order
    budget.check_enumeration(q, k, code.n)
    rows = scalar_generator_rows(code)
    if q == 2:
        masks = [sum(c << e for e, c in enumerate(row)) for row in rows]
        current = 0
        best = code.n + 1
        for i in range(1, 1 << k):
            current ^= masks[(i & -i).bit_length() - 1]
            w = current.bit_count()
            if w < best:
                best = w
        return best
    import numpy as np

    gen = np.array(rows, dtype=np.int64)
    best = code.n + 1
    total = q**k
    chunk = 1 << 12
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = np.empty((len(idx), k), dtype=np.int64)
        rest = idx.copy()
        for col in range(k):
            msgs[:, col] = rest % q
            rest //= q
        words = (msgs @ gen) % q
        weights = np.count_nonzero(words, axis=1)
        best = min(best, int(weights.min()))
    return best


def _rows_of(basis) -> Sequence:
    return basis.rows if isinstance(basis, PolyMatrix) else basis


def module_equal(basis_a, basis_b, field: Field, ell: int, m: int) -> bool:
    """Bidirectional row membership between two bases of ell-wide modules."""
    code_a = QuasiCyclicCode(field, ell, m, _rows_of(basis_a))
    code_b = QuasiCyclicCode(field, ell, m, _rows_of(basis_b))
    for source, target in ((basis_a, code_b), (basis_b, code_a)):
        for row in _rows_of(source):
            reduced = [p.reduce_mod_xm1(m) if isinstance(p, Polynomial) else Polynomial(field, p).reduce_mod_xm1(m) for p in row]
            if not target.is_member(reduced):
                return False
    return True


def fq_rowspace_equal(field: Field, vectors_a: Sequence[Sequence[int]], vectors_b: Sequence[Sequence[int]]) -> bool:
    """Row-span equality over F_q, the linear-algebra cross-check for modules."""
    from .galois import spans_equal

    return spans_equal(field, vectors_a, vectors_b)


def fq_span_of_rows(code_rows, field: Field, ell: int, m: int) -> list[list[int]]:
    """All serialized X^t shifts of the given module rows (spans the code)."""
    out = []
    for row in _rows_of(code_rows):
        polys = [p if isinstance(p, Polynomial) else Polynomial(field, p) for p in row]
        polys = [p.reduce_mod_xm1(m) for p in polys]
        if all(p.is_zero for p in polys):
            continue
        for t in range(m):
            shifted = tuple(p.times_x_power(t, m) for p in polys)
            serial = vec_to_univariate(shifted, ell)
            out.append([serial.coefficient(e) for e in range(ell * m)])
    return out


@dataclass(frozen=True)
class SweepResult:
    total: int
    successes: int
    stratified: bool
    failures: tuple[dict, ...] = dataclass_field(default_factory=tuple)

    @property
    def ratio(self) -> float:
        return self.successes / self.total if self.total else 1.0


def _nonzero_columns(q: int, ell: int) -> list[tuple[int, ...]]:
    return [cols for cols in product(range(q), repeat=ell) if any(cols)]


def exhaustive_burst_sweep(
    setup,
    tau: int,
    budget: OracleBudget = DEFAULT_BUDGET,
    seed: int = 0,
    max_failures: int = 32,
) -> SweepResult:
    """Decode every burst pattern with up to tau corrupted positions.

    Patterns are (position set, per-position nonzero column) pairs applied to
    the zero codeword; the syndrome map is codeword-independent, which the
    property suite checks separately.  Above the sweep budget, each stratum is
    sampled with a fixed-seed generator and the result is labeled stratified.
    """
    code = setup.code
    q = code.field.order
    ell, m = code.ell, code.m
    columns = _nonzero_columns(q, ell)
    stratum_sizes = []
    total = 0
    for e in range(tau + 1):
        size = _ncr(m, e) * len(columns) ** e
        stratum_sizes.append(size)
        total += size
    stratified = total > budget.max_sweep
    rng = random.Random(seed)
    per_stratum = budget.max_sweep // (tau + 1) if stratified else None

    zero_word = tuple(Polynomial.zero(code.field) for _ in range(ell))
    successes = 0
    tried = 0
    failures: list[dict] = []

    def run_pattern(positions: tuple[int, ...], cols: tuple[tuple[int, ...], ...]) -> None:
        nonlocal successes, tried
        tried += 1
        received = _apply_burst(code, zero_word, positions, cols)
        result = setup.decode(received)
        if result.success and result.codeword == zero_word:
            successes += 1
        elif len(failures) < max_failures:
            failures.append({"positions": list(positions), "columns": [list(c) for c in cols]})

    for e in range(tau + 1):
        if e == 0:
            run_pattern((), ())
            continue
        if not stratified:
            for positions in combinations(range(m), e):
                for cols in product(columns, repeat=e):
                    run_pattern(positions, cols)
        else:
            for _ in range(min(per_stratum, stratum_sizes[e])):
                positions = tuple(sorted(rng.sample(range(m), e)))
                cols = tuple(rng.choice(columns) for _ in range(e))
                run_pattern(positions, cols)

    return SweepResult(tried, successes, stratified, tuple(failures))


def _apply_burst(code: QuasiCyclicCode, word, positions, cols):
    field = code.field
    rows = [list(p.coeffs) + [0] * (code.m - len(p.coeffs)) for p in word]
    for pos, col in zip(positions, cols):
        for j in range(code.ell):
            if col[j]:
                rows[j][pos] = field.add(rows[j][pos], col[j])
    return tuple(Polynomial(field, r) for r in rows)


def _ncr(n: int, r: int) -> int:
    from math import comb

    return comb(n, r)
