"""Projective spaces PG(m-1,q), the PGL(2,q) action and the rational
normal curve.

Points of PG(1,q) are field element indices plus the INF sentinel.
Points of PG(m-1,q) are normalized coordinate tuples: the first nonzero
coordinate is scaled to 1, so tuple equality is projective equality.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

from .field import GF, FieldError


class _Infinity:
    """The point at infinity of PG(1,q); a singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __deepcopy__(self, memo):
        return self


INF = _Infinity()

NUCLEUS3 = (0, 1, 0)


def line_points(F: GF) -> list:
    """PG(1,q) in canonical order: field elements by index, then INF."""
    return list(range(F.q)) + [INF]


def moment_vector(F: GF, m: int, x) -> tuple:
    """(1, x, ..., x^{m-1}) for finite x, (0,...,0,1) for INF."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if x is INF:
        return (0,) * (m - 1) + (1,)
    F._check(x)
    out = [1]
    for _ in range(m - 1):
        out.append(F.mul(out[-1], x))
    return tuple(out)


def normalize(F: GF, vec: Sequence[int]) -> tuple:
    """Scale so the first nonzero coordinate is 1."""
    for v in vec:
        if v:
            s = F.inv(v)
            return tuple(F.mul(s, w) for w in vec)
    raise ValueError("cannot normalize the zero vector")


class Mobius:
    """An element of PGL(2,q) acting on PG(1,q) by x -> (c+dx)/(a+bx).

    Stored as (a,b,c,d) with ad-bc != 0, normalized so the first nonzero
    entry is 1, which makes instances canonical coset representatives.
    """

    __slots__ = ("F", "a", "b", "c", "d")

    def __init__(self, F: GF, a: int, b: int, c: int, d: int):
        det = F.sub(F.mul(a, d), F.mul(b, c))
        if det == 0:
            raise ValueError("singular matrix is not a Mobius transform")
        self.F = F
        self.a, self.b, self.c, self.d = normalize(F, (a, b, c, d))

    @classmethod
    def identity(cls, F: GF) -> "Mobius":
        return cls(F, 1, 0, 0, 1)

    def key(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def det(self) -> int:
        F = self.F
        return F.sub(F.mul(self.a, self.d), F.mul(self.b, self.c))

    def apply(self, x):
        F = self.F
        if x is INF:
            if self.b == 0:
                return INF
            return F.div(self.d, self.b)
        num = F.add(self.c, F.mul(self.d, x))
        den = F.add(self.a, F.mul(self.b, x))
        if den == 0:
            return INF
        return F.div(num, den)

    def compose(self, other: "Mobius") -> "Mobius":
        """Matrix product self @ other (apply other's matrix first)."""
        F = self.F
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Mobius(F,
                      F.add(F.mul(a1, a2), F.mul(b1, c2)),
                      F.add(F.mul(a1, b2), F.mul(b1, d2)),
                      F.add(F.mul(c1, a2), F.mul(d1, c2)),
                      F.add(F.mul(c1, b2), F.mul(d1, d2)))

    def inverse(self) -> "Mobius":
        F = self.F
        return Mobius(F, self.d, F.neg(self.b), F.neg(self.c), self.a)

    def sym2(self) -> tuple:
        """3x3 matrix of the induced action on PG(2,q)."""
        F = self.F
        a, b, c, d = self.a, self.b, self.c, self.d
        two = F.add(1, 1)
        return (
            (F.mul(a, a), F.mul(two, F.mul(a, b)), F.mul(b, b)),
            (F.mul(a, c), F.add(F.mul(a, d), F.mul(c, b)), F.mul(b, d)),
            (F.mul(c, c), F.mul(two, F.mul(c, d)), F.mul(d, d)),
        )

    def __eq__(self, other):
        return isinstance(other, Mobius) and self.F == other.F and self.key() == other.key()

    def __hash__(self):
        return hash((self.F, self.key()))

    def __repr__(self):
        return f"Mobius{self.key()}"


def mat_vec(F: GF, M: Sequence[Sequence[int]], v: Sequence[int]) -> tuple:
    out = []
    for row in M:
        acc = 0
        for mij, vj in zip(row, v):
            acc = F.add(acc, F.mul(mij, vj))
        out.append(acc)
    return tuple(out)


def mat_mul(F: GF, A, B) -> tuple:
    cols = list(zip(*B))
    return tuple(tuple(_dot(F, row, col) for col in cols) for row in A)


def _dot(F: GF, u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


def sym2_apply(F: GF, g: Mobius, point: Sequence[int]) -> tuple:
    return normalize(F, mat_vec(F, g.sym2(), point))


@functools.lru_cache(maxsize=None)
def pgl2(F: GF) -> tuple:
    """All q(q^2-1) elements of PGL(2,q) in a fixed deterministic order."""
    out = []
    q = F.q
    for a, b, c, d in _normalized_quadruples(q):
        if F.sub(F.mul(a, d), F.mul(b, c)) != 0:
            out.append(Mobius(F, a, b, c, d))
    return tuple(out)


def _normalized_quadruples(q: int):
    for b in range(q):
        for c in range(q):
            for d in range(q):
                yield (1, b, c, d)
    for c in range(q):
        for d in range(q):
            yield (0, 1, c, d)
    for d in range(q):
        yield (0, 0, 1, d)
    yield (0, 0, 0, 1)


def rnc_points(F: GF, m: int) -> list:
    """The q+1 points of the standard rational normal curve in PG(m-1,q)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return [moment_vector(F, m, x) for x in line_points(F)]


def rnc_delta(F: GF, m: int, point: Sequence[int]):
    """Return the curve parameter of a point on the standard RNC, else None."""
    point = tuple(point)
    if point == moment_vector(F, m, INF):
        return INF
    if point[0] == 1 and point == moment_vector(F, m, point[1]):
        return point[1]
    return None


def nucleus3() -> tuple:
    return NUCLEUS3
