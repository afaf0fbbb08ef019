"""JSON fixtures for codes and matrices.

Schema: {"field": {"p": int, "h": int, "modulus": [ints, ascending]},
"k": int, "eval": [point encodings], "matrix": [[row], ...]} where a
line point encodes as its integer index or the string "inf".  "h" and
"modulus" are optional (prime field / auto-selected modulus), and
exactly one of "eval"+"k" or "matrix" carries the payload; both may be
present, in which case the matrix must match the built code's G.
"""

from __future__ import annotations

import json
from typing import Optional, Tuple

from .codes import CodeError, GrsCode, code_make
from .field import GF, FieldError, field
from .projective import INF


class FixtureError(ValueError):
    pass


def _point_from_json(value):
    if value == "inf":
        return INF
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    raise FixtureError(f"bad point encoding {value!r} (int or \"inf\")")


def point_to_json(x):
    return "inf" if x is INF else x


def load_field(spec: dict) -> GF:
    if not isinstance(spec, dict) or "p" not in spec:
        raise FixtureError("field spec must be an object with \"p\"")
    try:
        return field(spec["p"], spec.get("h", 1),
                      tuple(spec["modulus"]) if "modulus" in spec else None)
    except (FieldError, TypeError) as e:
        raise FixtureError(f"bad field spec: {e}") from e


def load_fixture(path: str) -> Tuple[GF, Optional[GrsCode], Optional[tuple]]:
    """Returns (field, code or None, matrix or None) from a fixture file."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise FixtureError(f"{path}: {e}") from e
    if not isinstance(data, dict) or "field" not in data:
        raise FixtureError(f"{path}: missing \"field\"")
    F = load_field(data["field"])

    matrix = None
    if "matrix" in data:
        rows = data["matrix"]
        if (not isinstance(rows, list) or not rows
                or len({len(r) for r in rows}) != 1):
            raise FixtureError(f"{path}: \"matrix\" must be a rectangular "
                               "list of rows")
        for r in rows:
            for e in r:
                if not isinstance(e, int) or not 0 <= e < F.q:
                    raise FixtureError(f"{path}: matrix entry {e!r} is not "
                                       f"an element index of GF({F.q})")
        matrix = tuple(tuple(r) for r in rows)

    code = None
    if "eval" in data:
        if "k" not in data:
            raise FixtureError(f"{path}: \"eval\" requires \"k\"")
        points = tuple(_point_from_json(v) for v in data["eval"])
        try:
            code = code_make(F, data["k"], points)
        except CodeError as e:
            raise FixtureError(f"{path}: {e}") from e
        if matrix is not None and matrix != code.G:
            raise FixtureError(f"{path}: matrix does not equal the "
                               "generator matrix of the declared code")
    return F, code, matrix
