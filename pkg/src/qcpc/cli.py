"""Command-line front end.  Every successful run prints one JSON document on
stdout; diagnostics go to stderr as machine-readable error objects.

Exit codes: 0 success, 1 usage error (bad flags, malformed input), 2
construction or verification failure (including a false conjecture verdict
and exceeded budgets), 3 decoding failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from math import gcd

from .galois import Field, FieldError, field_extend, root_of_unity
from .polyring import Polynomial, PolynomialError
from .qcc import CodeError, QuasiCyclicCode
from . import jsonio, product, report
from .decoder import DecoderError, DecoderSetup
from .oracle import BudgetExceeded, OracleBudget, brute_min_distance
from .spectral import NoCertificate, SpectralError, analyze, generalized_bound, search_bound_params, st_bound

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_DECODE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse from sys.exit(2)
        raise UsageError(message)


def _emit(doc: dict) -> None:
    sys.stdout.write(jsonio.dumps(doc) + "\n")


def _error(kind: str, message: str) -> None:
    sys.stderr.write(jsonio.dumps({"error": {"type": kind, "message": message}}) + "\n")


def _load_json(path: str) -> dict:
    with open(path, "r") as handle:
        return json.load(handle)


def _budget(args) -> OracleBudget:
    if args.budget_dim is None:
        return OracleBudget()
    return OracleBudget(max_dimension=args.budget_dim)


# -- shared construction helpers ---------------------------------------------------


def _extension_for(row: QuasiCyclicCode, col: QuasiCyclicCode):
    m = row.m * col.m
    ext = field_extend(row.field.p, m)
    alpha = root_of_unity(ext, row.m)
    beta = root_of_unity(ext, col.m)
    return ext, alpha, beta


def _setup_from_doc(doc: dict, budget: OracleBudget) -> DecoderSetup:
    row = jsonio.code_from_json(doc["row"])
    col = jsonio.code_from_json(doc["col"])
    _, alpha, beta = _extension_for(row, col)
    rep = analyze(row.rgb_pot, alpha, row.m)
    d_b = brute_min_distance(col, budget)
    if "params" in doc:
        p = doc["params"]
        cert = generalized_bound(
            rep, col, beta,
            int(p["f1"]), int(p["f2"]), int(p["z1"]), int(p["z2"]), int(p["delta"]),
            d_b=d_b,
        )
    else:
        cert = search_bound_params(rep, col, beta, int(doc.get("delta_max", 16)), d_b=d_b)
    return DecoderSetup(row, col, alpha, beta, cert)


def _random_burst(rng: random.Random, code: QuasiCyclicCode, bursts: int):
    positions = tuple(sorted(rng.sample(range(code.m), bursts)))
    q, ell = code.field.order, code.ell
    columns = []
    for _ in positions:
        col = [0] * ell
        while not any(col):
            col = [rng.randrange(q) for _ in range(ell)]
        columns.append(tuple(col))
    return positions, tuple(columns)


def _corrupt(code: QuasiCyclicCode, word, positions, columns):
    field = code.field
    rows = [list(p.coeffs) + [0] * (code.m - len(p.coeffs)) for p in word]
    for pos, col in zip(positions, columns):
        for j in range(code.ell):
            if col[j]:
                rows[j][pos] = field.add(rows[j][pos], col[j])
    return tuple(Polynomial(field, r) for r in rows)


# -- subcommands --------------------------------------------------------------------


def cmd_field(args) -> int:
    ext = field_extend(args.q, args.order)
    doc = jsonio.field_to_json(ext)
    doc["order"] = args.order
    doc["root_exponent"] = (ext.order - 1) // args.order if args.order > 0 else None
    _emit(doc)
    return EXIT_OK


def cmd_code(args) -> int:
    code = jsonio.code_from_json(_load_json(args.code))
    if args.action == "reduce":
        _emit(jsonio.code_to_json(code, reduced=True))
        return EXIT_OK
    doc = {
        "q": code.field.order,
        "ell": code.ell,
        "m": code.m,
        "n": code.n,
        "k": code.dimension,
        "level": code.level,
        "row_degrees": list(code.row_degrees),
        "diagonal_degrees": [int(g.degree) for g in code.diagonal],
    }
    _emit(doc)
    return EXIT_OK


def cmd_product(args) -> int:
    row = jsonio.code_from_json(_load_json(args.row))
    col = jsonio.code_from_json(_load_json(args.col))
    spec = product.ProductSpec.create(row, col, args.a, args.b)
    verified = None
    if args.method == "unreduced":
        basis = product.unreduced_parts(spec)
    elif args.method == "thm2":
        basis = product.pre_rgb_2qc_parts(spec)
    elif args.method == "thm3":
        basis = product.rgb_1level_parts(spec)
    else:
        basis, verified = product.conjecture_parts(spec)
    code = basis.code()
    doc = {
        "construction": {
            "method": args.method,
            "a": spec.a,
            "b": spec.b,
            "shifts": list(basis.shifts),
            "core": jsonio.matrix_to_json(basis.core),
        },
        "code": jsonio.code_to_json(code),
    }
    if verified is not None:
        doc["construction"]["verified"] = verified
    _emit(doc)
    if verified is False:
        _error("conjecture", "conjectured basis does not match the unreduced module")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_bound_st(args) -> int:
    code = jsonio.code_from_json(_load_json(args.code))
    ext = field_extend(code.field.p, code.m)
    alpha = root_of_unity(ext, code.m)
    rep = analyze(code.rgb_pot, alpha, code.m)
    cert = st_bound(rep, args.f, args.z, args.delta)
    _emit(jsonio.certificate_to_json(cert, ext))
    return EXIT_OK


def cmd_bound_embed(args) -> int:
    row = jsonio.code_from_json(_load_json(args.row))
    col = jsonio.code_from_json(_load_json(args.col))
    _, alpha, beta = _extension_for(row, col)
    rep = analyze(row.rgb_pot, alpha, row.m)
    d_b = brute_min_distance(col, _budget(args))
    cert = search_bound_params(rep, col, beta, args.delta_max, d_b=d_b)
    _emit(jsonio.certificate_to_json(cert, alpha.field))
    return EXIT_OK


def cmd_decode(args) -> int:
    budget = _budget(args)
    setup = _setup_from_doc(_load_json(args.setup), budget)
    rx = _load_json(args.received)
    word = jsonio.word_from_json(setup.code.field, rx, setup.code.ell, setup.code.m)
    result = setup.decode(word)
    doc = {
        "outcome": "corrected" if result.success else "failure",
        "d_star": setup.d_star,
        "tau": setup.tau,
    }
    if result.success:
        doc["positions"] = list(result.positions)
        doc["error_columns"] = [list(c) for c in result.error_columns]
        doc["corrected"] = jsonio.word_to_json(result.codeword)
    else:
        doc["reason"] = result.reason
    _emit(doc)
    return EXIT_OK if result.success else EXIT_DECODE


def cmd_simulate(args) -> int:
    budget = _budget(args)
    setup = _setup_from_doc(_load_json(args.setup), budget)
    seed = args.seed if args.seed is not None else 0
    rng = random.Random(seed)
    code = setup.code
    rows = []
    for bursts in range(args.bursts + 1):
        successes = 0
        for _ in range(args.trials):
            word = code.random_codeword(rng)
            positions, columns = _random_burst(rng, code, bursts) if bursts else ((), ())
            received = _corrupt(code, word, positions, columns)
            result = setup.decode(received)
            if result.success and result.codeword == word:
                successes += 1
        rows.append(
            {
                "bursts": bursts,
                "trials": args.trials,
                "successes": successes,
                "ratio": successes / args.trials if args.trials else 1.0,
            }
        )
    if args.csv:
        report.write_sweep_csv(args.csv, rows)
    if args.plot:
        report.render_sweep_plot(
            args.plot, rows, title=f"[{code.ell}*{code.m}, {code.dimension}] tau={setup.tau}"
        )
    _emit(
        {
            "seed": seed,
            "tau": setup.tau,
            "d_star": setup.d_star,
            "results": rows,
            "csv": args.csv,
            "plot": args.plot,
        }
    )
    return EXIT_OK


def cmd_mindist(args) -> int:
    code = jsonio.code_from_json(_load_json(args.code))
    d = brute_min_distance(code, _budget(args))
    _emit(
        {
            "q": code.field.order,
            "ell": code.ell,
            "m": code.m,
            "k": code.dimension,
            "min_distance": d,
        }
    )
    return EXIT_OK


def _random_instance(rng: random.Random, args):
    field = Field(args.q, modulus=(0, 1))
    while True:
        m_a = rng.randrange(2, args.mA_max + 1)
        m_b = rng.randrange(2, args.mB_max + 1)
        if gcd(m_a, args.q) != 1 or gcd(m_b, args.q) != 1:
            continue
        if gcd(args.lA * m_a, args.lB * m_b) != 1:
            continue
        break
    def random_code(ell, m):
        rows = []
        for _ in range(rng.randrange(1, ell + 1)):
            rows.append([Polynomial(field, [rng.randrange(args.q) for _ in range(m)]) for _ in range(ell)])
        return QuasiCyclicCode(field, ell, m, rows)

    return product.ProductSpec.create(random_code(args.lA, m_a), random_code(args.lB, m_b))


def cmd_verify_conjecture(args) -> int:
    if gcd(args.lA, args.lB) != 1:
        raise UsageError("component indices lA, lB must be coprime")
    rng = random.Random(args.seed)
    instances = []
    all_verified = True
    for _ in range(args.trials):
        spec = _random_instance(rng, args)
        _, verified = product.conjecture_parts(spec)
        instances.append(
            {
                "mA": spec.m_a,
                "mB": spec.m_b,
                "kA": spec.row_code.dimension,
                "kB": spec.col_code.dimension,
                "verified": verified,
            }
        )
        if not verified:
            all_verified = False
    _emit(
        {
            "lA": args.lA,
            "lB": args.lB,
            "q": args.q,
            "trials": args.trials,
            "seed": args.seed,
            "verified": all_verified,
            "instances": instances,
        }
    )
    if not all_verified:
        _error("conjecture", "counterexample found; see instances for parameters")
        return EXIT_VERIFY
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="qcpc", description="Quasi-cyclic product codes toolkit")
    parser.add_argument("--budget-dim", type=int, default=None, help="enumeration budget: q^k <= 2^N")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized commands")
    parser.add_argument("--threads", type=int, default=1,
                        help="reserved; computations are deterministic and single-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="smallest extension field hosting an order-n element")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(handler=cmd_field)

    p = sub.add_parser("code", help="inspect or reduce a code descriptor")
    p.add_argument("action", choices=["reduce", "info"])
    p.add_argument("--code", required=True)
    p.set_defaults(handler=cmd_code)

    p = sub.add_parser("product", help="build a product-code generator matrix")
    p.add_argument("action", choices=["build"])
    p.add_argument("--row", required=True)
    p.add_argument("--col", required=True)
    p.add_argument("--method", choices=["unreduced", "thm2", "thm3", "conjecture"], default="conjecture")
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.set_defaults(handler=cmd_product)

    p = sub.add_parser("bound", help="minimum-distance lower bounds")
    bound_sub = p.add_subparsers(dest="bound_kind", required=True)
    ps = bound_sub.add_parser("st", help="BCH-like eigenvalue-run bound")
    ps.add_argument("--code", required=True)
    ps.add_argument("--f", type=int, required=True)
    ps.add_argument("--z", type=int, required=True)
    ps.add_argument("--delta", type=int, required=True)
    ps.set_defaults(handler=cmd_bound_st)
    pe = bound_sub.add_parser("embed", help="product-embedding bound (parameter search)")
    pe.add_argument("--row", required=True)
    pe.add_argument("--col", required=True)
    pe.add_argument("--delta-max", type=int, default=16)
    pe.set_defaults(handler=cmd_bound_embed)

    p = sub.add_parser("decode", help="decode a received word")
    p.add_argument("--setup", required=True)
    p.add_argument("--received", required=True)
    p.set_defaults(handler=cmd_decode)

    p = sub.add_parser("simulate", help="randomized burst sweeps with report output")
    p.add_argument("--setup", required=True)
    p.add_argument("--bursts", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--csv", default=None, help="write the per-burst-count table here")
    p.add_argument("--plot", default=None, help="render the success-ratio figure here")
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("mindist", help="exact minimum distance by enumeration")
    p.add_argument("--code", required=True)
    p.set_defaults(handler=cmd_mindist)

    p = sub.add_parser("verify-conjecture", help="randomized verification sweep")
    p.add_argument("--lA", type=int, required=True)
    p.add_argument("--lB", type=int, required=True)
    p.add_argument("--mA-max", type=int, required=True)
    p.add_argument("--mB-max", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_verify_conjecture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        _error("usage", str(exc))
        return EXIT_USAGE
    except (jsonio.FormatError, json.JSONDecodeError, OSError, KeyError) as exc:
        _error("input", f"{exc}")
        return EXIT_USAGE
    except (BudgetExceeded, NoCertificate) as exc:
        _error(type(exc).__name__, str(exc))
        return EXIT_VERIFY
    except (FieldError, PolynomialError, CodeError, SpectralError, DecoderError) as exc:
        _error(type(exc).__name__, str(exc))
        return EXIT_VERIFY


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
