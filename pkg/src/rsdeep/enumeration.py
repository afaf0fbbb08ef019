"""Exhaustive sweeps over projective syndrome spaces.

The workhorse is the MDS-extension filter: a point [v] extends a set of
columns to an MDS matrix iff det([S | v]) != 0 for every (m-1)-subset S,
i.e. iff v avoids one linear form per subset (the cofactor expansion of
the determinant along the v column).  Points are swept as numpy arrays
of normalized coordinate vectors and killed hyperplane by hyperplane,
which shrinks the candidate set geometrically.

Everything here is deterministic: points are generated in a fixed order
and results are returned in that order.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, Sequence, Tuple

import numpy as np

from . import linalg
from .field import GF, BudgetExceeded

DEFAULT_BUDGET = 10 ** 8


def projective_point_count(q: int, m: int) -> int:
    return (q ** m - 1) // (q - 1)


def projective_points(F: GF, m: int, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """All points of PG(m-1,q) as normalized rows, fixed order: grouped by
    the position of the leading 1, remaining coordinates counting up in
    base q (most significant first)."""
    q = F.q
    if projective_point_count(q, m) * m > budget:
        raise BudgetExceeded(f"PG({m-1},{q}) sweep of {projective_point_count(q, m)} points")
    dtype = np.uint8 if q <= 256 else np.uint16
    blocks = []
    for lead in range(m):
        free = m - lead - 1
        rows = q ** free
        block = np.zeros((rows, m), dtype=dtype)
        block[:, lead] = 1
        if free:
            idx = np.arange(rows)
            for j in range(free):
                block[:, lead + 1 + j] = (idx // q ** (free - 1 - j)) % q
        blocks.append(block)
    return np.concatenate(blocks) if len(blocks) > 1 else blocks[0]


def extension_form(F: GF, subset_cols: Sequence[Sequence[int]]) -> tuple:
    """Linear form w with w . v = det([subset_cols | v]) (cofactors)."""
    m = len(subset_cols[0])
    if len(subset_cols) != m - 1:
        raise ValueError("need exactly m-1 columns")
    rows = list(zip(*subset_cols))  # m rows of length m-1
    w = []
    for i in range(m):
        minor = [rows[r] for r in range(m) if r != i]
        d = linalg.det(F, minor)
        # cofactor sign (-1)^{i+m} with 0-based i and the v column last
        if (i + m - 1) % 2:
            d = F.neg(d)
        w.append(d)
    return tuple(w)


def _eval_forms_table(F: GF, pts: np.ndarray, form: Sequence[int]) -> np.ndarray:
    add = F.add_table
    mul = F.mul_table
    acc = np.zeros(len(pts), dtype=add.dtype)
    for i, wi in enumerate(form):
        if wi:
            acc = add[acc, mul[:, wi][pts[:, i]]]
    return acc


def filter_nonvanishing(F: GF, pts: np.ndarray, forms: Sequence[Sequence[int]]) -> np.ndarray:
    """Keep the points on which every linear form is nonzero."""
    if F.h == 1:
        # prime field: plain integer dot products mod p (dot < m*p^2 << 2^15)
        alive = pts.astype(np.int16)
        for form in forms:
            if not len(alive):
                break
            vals = (alive @ np.asarray(form, dtype=np.int16)) % F.p
            alive = alive[vals != 0]
        return alive.astype(pts.dtype)
    alive = pts
    for form in forms:
        if not len(alive):
            break
        vals = _eval_forms_table(F, alive, form)
        alive = alive[vals != 0]
    return alive


def mds_extension_points(F: GF, columns: Sequence[Sequence[int]],
                         budget: int = DEFAULT_BUDGET) -> List[tuple]:
    """All [v] in PG(m-1,q) with [columns | v] MDS, in sweep order.

    The given columns must already form an MDS matrix (every m of them
    independent), which holds for all callers (GRS parity/generator
    matrices and RNC point sets).
    """
    m = len(columns[0])
    forms = [extension_form(F, sub) for sub in combinations(columns, m - 1)]
    pts = projective_points(F, m, budget=budget)
    alive = filter_nonvanishing(F, pts, forms)
    return [tuple(int(c) for c in row) for row in alive]


def _field_matmul_rows(F: GF, A: np.ndarray, B: Sequence[Sequence[int]]) -> np.ndarray:
    """A (N x t) times B (t x m) over the field, via lookup tables."""
    add = F.add_table
    mul = F.mul_table
    n_rows = len(A)
    m = len(B[0])
    out = np.zeros((n_rows, m), dtype=add.dtype)
    for kk in range(A.shape[1]):
        col = A[:, kk]
        for j in range(m):
            b = B[kk][j]
            if b:
                out[:, j] = add[out[:, j], mul[:, b][col]]
    return out


def normalize_rows(F: GF, V: np.ndarray) -> np.ndarray:
    """Row-wise projective normalization (first nonzero scaled to 1)."""
    lead = (V != 0).argmax(axis=1)
    pivots = V[np.arange(len(V)), lead]
    scale = F.inv_table[pivots]
    return F.mul_table[V, scale[:, None]]


def points_avoiding_spans(F: GF, columns: Sequence[Sequence[int]], t: int,
                          budget: int = DEFAULT_BUDGET) -> List[tuple]:
    """All points of PG(m-1,q) outside the span of every t-subset of the
    given columns.  For t = m-1 this is the fast hyperplane filter; for
    smaller t the spans are enumerated and marked explicitly."""
    m = len(columns[0])
    if t >= m:
        raise ValueError("t must be < m")
    if t == m - 1:
        return mds_extension_points(F, columns, budget=budget)
    pts = projective_points(F, m, budget=budget)
    if t == 0:
        return [tuple(int(c) for c in row) for row in pts]
    n = len(columns)
    span_size = projective_point_count(F.q, t)
    n_subsets = 1
    for i in range(t):
        n_subsets = n_subsets * (n - i) // (i + 1)
    if n_subsets * span_size * m > budget:
        raise BudgetExceeded(f"{n_subsets} spans of {span_size} points each")
    coeffs = projective_points(F, t)
    marked = set()
    for sub in combinations(columns, t):
        vecs = _field_matmul_rows(F, coeffs, list(sub))
        for row in normalize_rows(F, vecs):
            marked.add(tuple(int(c) for c in row))
    return [p for p in (tuple(int(c) for c in row) for row in pts)
            if p not in marked]
