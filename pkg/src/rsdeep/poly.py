"""Univariate polynomials over a GF instance.

A polynomial is a list/tuple of element indices in ascending degree with
no trailing zeros; the zero polynomial is the empty tuple and its degree
is the distinguished marker NEG_INF.
"""

from __future__ import annotations

from typing import Sequence

from .field import GF

NEG_INF = float("-inf")


def trim(coeffs: Sequence[int]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(poly: Sequence[int]):
    poly = trim(poly)
    return len(poly) - 1 if poly else NEG_INF


def add(F: GF, a: Sequence[int], b: Sequence[int]) -> tuple:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out.append(F.add(ai, bi))
    return trim(out)


def sub(F: GF, a: Sequence[int], b: Sequence[int]) -> tuple:
    return add(F, a, scale(F, b, F.neg(1)))


def scale(F: GF, a: Sequence[int], c: int) -> tuple:
    return trim(F.mul(ai, c) for ai in a)


def mul(F: GF, a: Sequence[int], b: Sequence[int]) -> tuple:
    a, b = trim(a), trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return trim(out)


def evaluate(F: GF, poly: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(trim(poly)):
        acc = F.add(F.mul(acc, x), c)
    return acc


def monic(F: GF, poly: Sequence[int]) -> tuple:
    poly = trim(poly)
    if not poly:
        return ()
    return scale(F, poly, F.inv(poly[-1]))


def x_power(k: int, coeff: int = 1) -> tuple:
    return (0,) * k + (coeff,)


def to_string(poly: Sequence[int]) -> str:
    poly = trim(poly)
    if not poly:
        return "0"
    terms = []
    for i in range(len(poly) - 1, -1, -1):
        c = poly[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*X" if c != 1 else "X")
        else:
            terms.append(f"{c}*X^{i}" if c != 1 else f"X^{i}")
    return " + ".join(terms)
