"""Arithmetic in GF(p^h) with a fixed total order on elements.

Elements are plain integers in [0, q).  The integer encodes the base-p
digit vector of the element's polynomial coefficient representation
(coefficient of x^i is digit i), so index 0 is the additive identity and
index 1 the multiplicative identity.  All arithmetic goes through a GF
instance; multiplication and inversion use precomputed exp/log tables
built from a generator of the (cyclic) multiplicative group.

For extension fields the reduction modulus is a monic irreducible
polynomial over GF(p); when none is supplied the lexicographically least
monic irreducible of the right degree (in element-index order of the
non-leading coefficients) is selected, so fields are reproducible across
runs.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Optional, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 1 << 16

# numpy add/mul/inv tables are only built for fields small enough that a
# q x q table is cheap; everything in this package runs far below this.
_TABLE_LIMIT = 4096


class FieldError(ValueError):
    """Invalid field construction or illegal field operation."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed the configured budget."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), used only for field construction.
# Polys are tuples of ints mod p, ascending degree, no trailing zeros.


def _ptrim(c: Sequence[int]) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> tuple:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mi) % p
        a.pop()
    return _ptrim(a)


def _irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            div = tuple(low) + (1,)
            if not _pmod(m, div, p):
                return False
    return True


def _least_irreducible(p: int, h: int) -> tuple:
    for idx in range(p ** h):
        low = tuple((idx // p ** i) % p for i in range(h))
        cand = low + (1,)
        if _irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {h} over GF({p})")


class GF:
    """The finite field GF(p^h).  Immutable after construction."""

    def __init__(self, p: int, h: int = 1,
                 modulus: Optional[Sequence[int]] = None,
                 max_order: int = DEFAULT_MAX_ORDER):
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if h < 1:
            raise FieldError(f"h={h} must be >= 1")
        q = p ** h
        if q > max_order:
            raise FieldError(f"field size {q} exceeds the limit {max_order}")
        self.p = p
        self.h = h
        self.q = q
        if modulus is None:
            modulus = _least_irreducible(p, h)
        else:
            modulus = _ptrim(int(c) % p for c in modulus)
            if len(modulus) != h + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree h")
            if h > 1 and not _irreducible(modulus, p):
                raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.modulus = modulus
        self._build_tables()

    # -- element encoding ---------------------------------------------------

    def coeffs(self, a: int) -> tuple:
        """Base-p digit vector (length h) of the element index."""
        return tuple((a // self.p ** i) % self.p for i in range(self.h))

    def element(self, coeffs: Iterable[int]) -> int:
        c = list(coeffs)
        if len(c) > self.h:
            raise FieldError("too many coefficients")
        return sum((ci % self.p) * self.p ** i for i, ci in enumerate(c))

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element index of GF({self.q})")
        return a

    # -- table construction -------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        if self.h == 1:
            return (a * b) % self.p
        prod = _pmod(_pmul(self.coeffs(a), self.coeffs(b), self.p),
                     self.modulus, self.p)
        return self.element(prod)

    def _build_tables(self) -> None:
        q = self.q
        exp = None
        for g in range(2, q):
            seq = [1]
            x = g
            while x != 1:
                seq.append(x)
                x = self._mul_raw(x, g)
            if len(seq) == q - 1:
                exp = seq
                break
        if exp is None:  # q == 2
            exp = [1]
        self._exp = exp + exp  # doubled so index sums need no reduction
        self._log = [0] * q
        for i, v in enumerate(exp):
            self._log[v] = i

        if q <= _TABLE_LIMIT:
            dtype = np.uint8 if q <= 256 else np.uint16
            add = np.zeros((q, q), dtype=dtype)
            mul = np.zeros((q, q), dtype=dtype)
            for a in range(q):
                for b in range(a, q):
                    s = self.add(a, b)
                    add[a, b] = add[b, a] = s
                    m = self.mul(a, b)
                    mul[a, b] = mul[b, a] = m
            self.add_table = add
            self.mul_table = mul
            self.neg_table = np.array([self.neg(a) for a in range(q)], dtype=dtype)
            self.inv_table = np.array([0] + [self.inv(a) for a in range(1, q)],
                                      dtype=dtype)
        else:
            self.add_table = self.mul_table = None
            self.neg_table = self.inv_table = None

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.h == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        pw = 1
        for _ in range(self.h):
            out += ((a + b) % p) * pw
            a //= p
            b //= p
            pw *= p
        return out

    def neg(self, a: int) -> int:
        if self.h == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        pw = 1
        for _ in range(self.h):
            out += ((-a) % p) * pw
            a //= p
            pw *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inversion of zero")
        return self._exp[self.q - 1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise FieldError("zero to a negative power")
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    # -- derived data ---------------------------------------------------------

    def nonsquare(self) -> int:
        """Least-index element of GF(q)* that is not a square (q odd)."""
        if self.q % 2 == 0:
            raise FieldError("q is even: every element is a square")
        squares = {self.mul(a, a) for a in range(1, self.q)}
        for a in range(1, self.q):
            if a not in squares:
                return a
        raise AssertionError("unreachable for q odd")

    def sums_of_distinct(self, k: int, budget: int = 10 ** 7) -> set:
        """All values expressible as a sum of k distinct field elements."""
        if not 0 <= k <= self.q:
            raise FieldError(f"k={k} out of range [0, {self.q}]")
        n_subsets = 1
        for i in range(k):
            n_subsets = n_subsets * (self.q - i) // (i + 1)
        if n_subsets * max(k, 1) > budget:
            raise BudgetExceeded(f"{n_subsets} subsets of size {k}")
        out = set()
        for combo in itertools.combinations(range(self.q), k):
            acc = 0
            for x in combo:
                acc = self.add(acc, x)
            out.add(acc)
        return out

    # -- plumbing --------------------------------------------------------------

    def serialize(self) -> dict:
        return {"p": self.p, "h": self.h, "modulus": list(self.modulus)}

    def __eq__(self, other) -> bool:
        return (isinstance(other, GF)
                and (self.p, self.h, self.modulus) == (other.p, other.h, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.h, self.modulus))

    def __repr__(self) -> str:
        if self.h == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.h})"


@functools.lru_cache(maxsize=None)
def field(p: int, h: int = 1, modulus: Optional[tuple] = None,
          max_order: int = DEFAULT_MAX_ORDER) -> GF:
    """Cached field constructor; modulus given as a tuple of ints or None."""
    return GF(p, h, modulus, max_order)
