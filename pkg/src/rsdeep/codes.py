"""Evaluation sets, RS/GRS generator-parity pairs, syndromes and the
generating-polynomial formulas.

Conventions: an evaluation set is an ordered tuple of distinct points of
PG(1,q); INF is allowed only for the full projective line (n = q+1) and
must then come last.  Received words, matrix rows and syndromes are
tuples of field element indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from typing import Optional, Sequence, Tuple

from . import linalg, poly
from .field import GF, FieldError
from .projective import INF, line_points, moment_vector, normalize


class CodeError(ValueError):
    pass


class EvaluationSet:
    """Ordered distinct points with the derived coefficients s_j and nu_j.

    s_j are the coefficients of prod(X - x_i) over the finite points
    (s_0 = 1); nu_j = prod_{i != j} (x_j - x_i)^{-1} and is only defined
    when every point is finite.
    """

    def __init__(self, F: GF, points: Sequence):
        points = tuple(points)
        if len(set(points)) != len(points):
            raise CodeError("duplicate evaluation points")
        if not 2 <= len(points) <= F.q + 1:
            raise CodeError(f"need 2 <= n <= q+1 points, got {len(points)}")
        if INF in points:
            if len(points) != F.q + 1:
                raise CodeError("INF is only allowed in the full projective line")
            if points[-1] is not INF:
                raise CodeError("INF must be the last evaluation point")
        for x in points:
            if x is not INF:
                F._check(x)
        self.F = F
        self.points = points
        self.n = len(points)
        self.finite = tuple(x for x in points if x is not INF)

        # prod (X - x_i) over finite points, ascending-degree coefficients.
        prod = (1,)
        for x in self.finite:
            prod = poly.mul(F, prod, (F.neg(x), 1))
        nf = len(self.finite)
        # s_j is the coefficient of X^{n_f - j}.
        self.s = tuple(prod[nf - j] for j in range(nf + 1))

        if nf == self.n:
            nu = []
            for j, xj in enumerate(points):
                acc = 1
                for i, xi in enumerate(points):
                    if i != j:
                        acc = F.mul(acc, F.sub(xj, xi))
                nu.append(F.inv(acc))
            self.nu = tuple(nu)
        else:
            self.nu = None

    @property
    def has_infinity(self) -> bool:
        return self.nu is None

    def __repr__(self):
        return f"EvaluationSet({self.F!r}, {list(self.points)})"


def lower_toeplitz(es: EvaluationSet, size: int) -> tuple:
    """size x size lower-triangular matrix L with L[i][j] = s_{i-j}."""
    s = es.s
    return tuple(
        tuple(s[i - j] if 0 <= i - j < len(s) else 0 for j in range(size))
        for i in range(size)
    )


@dataclass(frozen=True)
class GrsCode:
    F: GF
    k: int
    eval_set: EvaluationSet
    G: tuple  # k x n generator
    H: tuple  # (n-k) x n parity check

    @property
    def n(self) -> int:
        return self.eval_set.n

    @property
    def m(self) -> int:
        return self.n - self.k

    def h_columns(self) -> list:
        return [tuple(self.H[r][j] for r in range(self.m)) for j in range(self.n)]

    def g_columns(self) -> list:
        return [tuple(self.G[r][j] for r in range(self.k)) for j in range(self.n)]


def generator_columns(F: GF, k: int, points: Sequence) -> list:
    return [moment_vector(F, k, x) for x in points]


def code_make(F: GF, k: int, points: Sequence, check: bool = True) -> GrsCode:
    """RS code over the evaluation set, with the moment-vector generator
    matrix and its scaled parity mate; k+2 <= n <= q+1, 2 <= k <= q-1."""
    es = points if isinstance(points, EvaluationSet) else EvaluationSet(F, points)
    n = es.n
    if not 2 <= k <= F.q - 1:
        raise CodeError(f"dimension k={k} outside [2, q-1]")
    if not k + 2 <= n <= F.q + 1:
        raise CodeError(f"length n={n} outside [k+2, q+1]")
    m = n - k
    gcols = generator_columns(F, k, es.points)
    if es.has_infinity:
        hcols = generator_columns(F, m, es.points)
    else:
        hcols = [tuple(F.mul(es.nu[i], c) for c in moment_vector(F, m, x))
                 for i, x in enumerate(es.points)]
    G = tuple(tuple(col[r] for col in gcols) for r in range(k))
    H = tuple(tuple(col[r] for col in hcols) for r in range(m))
    code = GrsCode(F, k, es, G, H)
    if check:
        _verify(code)
    return code


def _verify(code: GrsCode) -> None:
    F = code.F
    prod = linalg.mat_mul(F, code.G, list(zip(*code.H)))
    if any(any(row) for row in prod):
        raise CodeError("G . H^T != 0: internal construction bug")
    # MDS of G and H are equivalent by duality; check the cheaper side.
    side = code.G if code.k <= code.m else code.H
    if not linalg.is_mds(F, side):
        raise CodeError("constructed matrix is not MDS")


def syndrome(code: GrsCode, u: Sequence[int]) -> tuple:
    if len(u) != code.n:
        raise CodeError(f"word length {len(u)} != n={code.n}")
    F = code.F
    return tuple(
        _dot(F, row, u) for row in code.H
    )


def projective_syndrome(code: GrsCode, u: Sequence[int]) -> Optional[tuple]:
    s = syndrome(code, u)
    if not any(s):
        return None
    return normalize(code.F, s)


def _dot(F: GF, a, b) -> int:
    acc = 0
    for x, y in zip(a, b):
        acc = F.add(acc, F.mul(x, y))
    return acc


def lagrange_interpolate(F: GF, xs: Sequence[int], ys: Sequence[int]) -> tuple:
    out = ()
    for j, (xj, yj) in enumerate(zip(xs, ys)):
        if yj == 0:
            continue
        term = (yj,)
        for i, xi in enumerate(xs):
            if i == j:
                continue
            term = poly.mul(F, term, (F.neg(xi), 1))
            term = poly.scale(F, term, F.inv(F.sub(xj, xi)))
        out = poly.add(F, out, term)
    return out


def generating_polynomial(es: EvaluationSet, u: Sequence[int]) -> tuple:
    """Unique degree <= n-1 interpolant of (x_i, u_i).

    Computed both directly (Lagrange) and through the lower-Toeplitz
    matrix formula; the two must agree, which is asserted here.
    """
    if es.has_infinity:
        raise CodeError("generating polynomial requires a finite evaluation set")
    F = es.F
    direct = lagrange_interpolate(F, es.points, u)
    via_matrix = _generating_polynomial_matrix(es, u)
    if direct != via_matrix:
        raise AssertionError("interpolation formula mismatch (internal bug)")
    return direct


def _generating_polynomial_matrix(es: EvaluationSet, u: Sequence[int]) -> tuple:
    F = es.F
    n = es.n
    cols = [tuple(F.mul(es.nu[i], c) for c in moment_vector(F, n, x))
            for i, x in enumerate(es.points)]
    v = tuple(_dot(F, [col[r] for col in cols], u) for r in range(n))
    w = linalg.mat_mul(F, lower_toeplitz(es, n), [(c,) for c in v])
    # Row r of the product multiplies X^{n-1-r}.
    return poly.trim([w[n - 1 - d][0] for d in range(n)])


def leading_part(code: GrsCode, u: Sequence[int]) -> tuple:
    """The monomials of degree >= k of the generating polynomial, straight
    from the syndrome (no interpolation)."""
    es = code.eval_set
    if es.has_infinity:
        raise CodeError("leading part requires a finite evaluation set")
    F = code.F
    m = code.m
    s = syndrome(code, u)
    w = linalg.mat_mul(F, lower_toeplitz(es, m), [(c,) for c in s])
    # Row r multiplies X^{n-1-r}; rows cover degrees n-1 down to k.
    coeffs = [0] * code.n
    for r in range(m):
        coeffs[code.n - 1 - r] = w[r][0]
    return poly.trim(coeffs)


def delta_word(es: EvaluationSet, delta: int) -> tuple:
    """The word (1/(x_1-delta), ..., 1/(x_n-delta)) for delta outside D."""
    if es.has_infinity:
        raise CodeError("delta word requires a finite evaluation set")
    F = es.F
    F._check(delta)
    if delta in es.points:
        raise CodeError("delta must lie outside the evaluation set")
    return tuple(F.inv(F.sub(x, delta)) for x in es.points)


def delta_leading_part(code: GrsCode, delta) -> tuple:
    """Leading part of the delta word; for delta = INF this is X^k."""
    if delta is INF:
        return poly.x_power(code.k)
    return leading_part(code, delta_word(code.eval_set, delta))
