"""JSON serialization: field descriptors, code descriptors, certificates.

Field elements are serialized as ascending coefficient sequences over the
prime field, never as discrete logs.  Polynomials over a prime field use a
flat coefficient list; over an extension field each coefficient is itself a
digit list.  Emitted documents are byte-stable (sorted keys).
"""

from __future__ import annotations

import json
from math import inf

from .galois import Field
from .polyring import Polynomial, PolyMatrix
from .qcc import QuasiCyclicCode


class FormatError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1)


# -- fields ---------------------------------------------------------------------


def field_to_json(field: Field) -> dict:
    return field.descriptor()


def field_from_json(obj: dict) -> Field:
    try:
        return Field(int(obj["p"]), modulus=[int(c) for c in obj["modulus"]])
    except KeyError as missing:
        raise FormatError(f"field descriptor missing {missing}") from None


def element_to_json(field: Field, value: int) -> list[int]:
    return list(field.digits(value))


def element_from_json(field: Field, obj) -> int:
    if isinstance(obj, int):
        return obj % field.p if field.s == 1 else obj
    return field.from_digits(int(c) for c in obj)


# -- polynomials -----------------------------------------------------------------


def poly_to_json(poly: Polynomial) -> list:
    if poly.field.s == 1:
        return list(poly.coeffs)
    return [element_to_json(poly.field, c) for c in poly.coeffs]


def poly_from_json(field: Field, obj) -> Polynomial:
    if not isinstance(obj, list):
        raise FormatError("polynomial must be a coefficient array")
    return Polynomial(field, [element_from_json(field, c) for c in obj])


# -- codes -----------------------------------------------------------------------


def code_to_json(code: QuasiCyclicCode, reduced: bool = False) -> dict:
    if reduced:
        rows = code.rgb_pot.rows
    else:
        rows = code.basis[: len(code.basis) - code.ell]  # user rows, without (X^m-1)e_j
    doc = {
        "q": code.field.order,
        "ell": code.ell,
        "m": code.m,
        "rows": [[poly_to_json(p) for p in row] for row in rows],
    }
    if reduced:
        doc["rgb_pot"] = True
    return doc


def code_from_json(obj: dict) -> QuasiCyclicCode:
    try:
        q = int(obj["q"])
        ell = int(obj["ell"])
        m = int(obj["m"])
        rows = obj["rows"]
    except KeyError as missing:
        raise FormatError(f"code descriptor missing {missing}") from None
    field = Field(q, modulus=(0, 1))
    parsed = [[poly_from_json(field, p) for p in row] for row in rows]
    return QuasiCyclicCode(field, ell, m, parsed)


def matrix_to_json(matrix: PolyMatrix) -> list:
    return [[poly_to_json(p) for p in row] for row in matrix.rows]


# -- certificates ------------------------------------------------------------------


def certificate_to_json(cert, ext_field: Field) -> dict:
    d_ec = "inf" if cert.d_ec == inf else int(cert.d_ec)
    return {
        "kind": cert.kind,
        "f1": cert.f1,
        "z1": cert.z1,
        "f2": cert.f2,
        "z2": cert.z2,
        "delta": cert.delta,
        "D": list(cert.d_set),
        "d_ec": d_ec,
        "d_b": cert.d_b,
        "d_star": cert.d_star,
        "eigenvectors": [
            [element_to_json(ext_field, x) for x in v] for v in cert.eigen_basis
        ],
        "field": field_to_json(ext_field),
    }


def word_to_json(word) -> list:
    return [poly_to_json(p) for p in word]


def word_from_json(field: Field, obj, ell: int, m: int):
    if not isinstance(obj, list) or len(obj) != ell:
        raise FormatError(f"received word must be a list of {ell} coefficient arrays")
    polys = []
    for entry in obj:
        p = poly_from_json(field, entry)
        if p.degree >= m:
            raise FormatError("received entry degree exceeds m")
        polys.append(p)
    return tuple(polys)
