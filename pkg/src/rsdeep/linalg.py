"""Dense linear algebra over a GF instance (small matrices only)."""

from __future__ import annotations

from itertools import combinations
from typing import List, Sequence

from .field import GF


def det(F: GF, M: Sequence[Sequence[int]]) -> int:
    """Determinant by Gaussian elimination."""
    n = len(M)
    A = [list(row) for row in M]
    sign_neg = False
    result = 1
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if A[r][col]:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != col:
            A[col], A[pivot] = A[pivot], A[col]
            sign_neg = not sign_neg
        pv = A[col][col]
        result = F.mul(result, pv)
        inv_pv = F.inv(pv)
        for r in range(col + 1, n):
            f = A[r][col]
            if f:
                f = F.mul(f, inv_pv)
                for c in range(col, n):
                    A[r][c] = F.sub(A[r][c], F.mul(f, A[col][c]))
    return F.neg(result) if sign_neg else result


def rank(F: GF, M: Sequence[Sequence[int]]) -> int:
    A = [list(row) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    r = 0
    for col in range(cols):
        pivot = None
        for i in range(r, rows):
            if A[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv_pv = F.inv(A[r][col])
        for i in range(r + 1, rows):
            f = A[i][col]
            if f:
                f = F.mul(f, inv_pv)
                for c in range(col, cols):
                    A[i][c] = F.sub(A[i][c], F.mul(f, A[r][c]))
        r += 1
        if r == rows:
            break
    return r


def solve(F: GF, M: Sequence[Sequence[int]], b: Sequence[int]) -> List[int]:
    """One solution of M x = b (free variables set to 0); raises if none."""
    rows = len(M)
    cols = len(M[0])
    A = [list(row) + [bv] for row, bv in zip(M, b)]
    pivots = []
    r = 0
    for col in range(cols):
        pivot = None
        for i in range(r, rows):
            if A[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv_pv = F.inv(A[r][col])
        A[r] = [F.mul(v, inv_pv) for v in A[r]]
        for i in range(rows):
            if i != r and A[i][col]:
                f = A[i][col]
                A[i] = [F.sub(vi, F.mul(f, vr)) for vi, vr in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if A[i][cols]:
            raise ValueError("inconsistent linear system")
    x = [0] * cols
    for i, col in enumerate(pivots):
        x[col] = A[i][cols]
    return x


def mat_mul(F: GF, A, B) -> tuple:
    cols = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in cols:
            acc = 0
            for a, b in zip(row, col):
                acc = F.add(acc, F.mul(a, b))
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def is_mds(F: GF, M: Sequence[Sequence[int]]) -> bool:
    """True iff every maximal (r x r) minor of the r x c matrix is nonzero.

    Column subsets are scanned in lexicographic order with early exit, so a
    failure is reproducible.
    """
    r = len(M)
    c = len(M[0])
    if r > c:
        raise ValueError("is_mds expects a wide matrix (rows <= cols)")
    for subset in combinations(range(c), r):
        sub = [[M[i][j] for j in subset] for i in range(r)]
        if det(F, sub) == 0:
            return False
    return True


def first_zero_minor(F: GF, M: Sequence[Sequence[int]]):
    """The lexicographically first vanishing maximal minor, or None."""
    r = len(M)
    for subset in combinations(range(len(M[0])), r):
        sub = [[M[i][j] for j in subset] for i in range(r)]
        if det(F, sub) == 0:
            return subset
    return None
