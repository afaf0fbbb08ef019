"""Deep holes of RS codes: coset distances, covering radius, brute-force
and theorem-predicted deep-hole classes, MDS-extension oracles and the
small-q conjecture checkers.

A deep-hole equivalence class is identified with its projective syndrome
in PG(n-k-1,q); the witness tag records whether the syndrome lies on the
standard rational normal curve (with its curve parameter), is the nucleus
(q even), or is neither.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from . import enumeration, linalg, poly
from .codes import (CodeError, EvaluationSet, GrsCode, code_make,
                    delta_leading_part, leading_part, projective_syndrome,
                    syndrome)
from .enumeration import DEFAULT_BUDGET
from .field import GF, BudgetExceeded
from .projective import INF, NUCLEUS3, line_points, moment_vector, normalize, rnc_delta


@dataclass(frozen=True)
class DeepHoleClass:
    syndrome: tuple          # normalized, in PG(n-k-1,q)
    witness: str             # "rnc" | "nucleus" | "other"
    delta: object = None     # curve parameter for witness == "rnc"

    def serialize(self) -> dict:
        out = {"syndrome": list(self.syndrome), "witness": {"type": self.witness}}
        if self.witness == "rnc":
            out["witness"]["delta"] = "inf" if self.delta is INF else self.delta
        return out


def tag_class(F: GF, m: int, point: Sequence[int]) -> DeepHoleClass:
    point = tuple(point)
    delta = rnc_delta(F, m, point)
    if delta is not None or point == moment_vector(F, m, INF):
        return DeepHoleClass(point, "rnc", delta if delta is not None else INF)
    if m == 3 and point == NUCLEUS3 and F.q % 2 == 0:
        return DeepHoleClass(point, "nucleus")
    return DeepHoleClass(point, "other")


# ---------------------------------------------------------------------------
# coset distance / covering radius


def coset_distance(code: GrsCode, s: Sequence[int], budget: int = DEFAULT_BUDGET) -> int:
    """Least r such that s lies in the span of r columns of H (exhaustive
    over column subsets of increasing size)."""
    F = code.F
    s = tuple(s)
    if not any(s):
        return 0
    hcols = code.h_columns()
    ops = 0
    for r in range(1, code.m + 1):
        for sub in combinations(hcols, r):
            ops += (r + 1) ** 3
            if ops > budget:
                raise BudgetExceeded("coset distance subset search")
            M = list(zip(*sub))
            if linalg.rank(F, M) == linalg.rank(F, [row + (sv,) for row, sv in zip(M, s)]):
                return r
    raise AssertionError("syndrome outside the column space (H not full rank?)")


def covering_radius(code: GrsCode, budget: int = DEFAULT_BUDGET) -> int:
    """Max coset distance over the whole syndrome space, computed as the
    largest r for which some projective syndrome avoids the span of every
    (r-1)-subset of H's columns."""
    hcols = code.h_columns()
    for r in range(code.m, 0, -1):
        if enumeration.points_avoiding_spans(code.F, hcols, r - 1, budget=budget):
            return r
    return 0


def is_deep_hole(code: GrsCode, u: Sequence[int], rho: Optional[int] = None) -> bool:
    """Deep-hole test via the MDS-extension criterion; requires the
    covering radius to equal n-k (automatic for n <= q, otherwise pass or
    compute rho)."""
    if code.n == code.F.q + 1:
        if rho is None:
            rho = covering_radius(code)
        if rho != code.m:
            raise CodeError("MDS-extension criterion needs rho = n-k")
    s = syndrome(code, u)
    if not any(s):
        return False
    aug = tuple(row + (sv,) for row, sv in zip(code.H, s))
    return linalg.is_mds(code.F, aug)


# ---------------------------------------------------------------------------
# enumeration and prediction


@dataclass(frozen=True)
class DeepHoleSet:
    rho: int
    classes: Tuple[DeepHoleClass, ...]

    def points(self) -> set:
        return {c.syndrome for c in self.classes}


def enumerate_deep_holes(code: GrsCode, budget: int = DEFAULT_BUDGET) -> DeepHoleSet:
    """All deep-hole classes by exhaustive sweep: the projective syndromes
    at coset distance exactly rho (rho is established on the way: the
    sweep at level r is nonempty iff rho >= r)."""
    F = code.F
    hcols = code.h_columns()
    for r in range(code.m, 0, -1):
        pts = enumeration.points_avoiding_spans(F, hcols, r - 1, budget=budget)
        if pts:
            classes = tuple(tag_class(F, code.m, p) for p in pts)
            return DeepHoleSet(r, classes)
    raise AssertionError("no deep holes found; unreachable for n > k")


def predicted_deep_holes(code: GrsCode, rho: Optional[int] = None) -> DeepHoleSet:
    """Deep-hole classes predicted by the RNC/nucleus classification for
    k >= floor((q-1)/2); raises when outside the validity range."""
    F = code.F
    q = F.q
    if code.k < (q - 1) // 2:
        raise CodeError(f"prediction requires k >= {(q - 1) // 2}")
    if code.n == q + 1:
        if rho is None:
            rho = covering_radius(code)
        if rho != code.m:
            raise CodeError("prediction requires rho = n-k")
    else:
        rho = code.m
    used = set(code.eval_set.points)
    classes = [tag_class(F, code.m, moment_vector(F, code.m, d))
               for d in line_points(F) if d not in used]
    if q % 2 == 0 and code.m == 3:
        classes.append(DeepHoleClass(NUCLEUS3, "nucleus"))
    classes.sort(key=lambda c: c.syndrome)
    return DeepHoleSet(rho, tuple(classes))


# ---------------------------------------------------------------------------
# generating-polynomial classification (deep holes, finite D)


@dataclass(frozen=True)
class PolyForm:
    form: str                # "x^k" | "delta" | "nucleus"
    delta: object            # INF, a field element, or None
    canonical: tuple         # X^k * P_u(X) with P_u monic


def classify_generating_polynomial(code: GrsCode, u: Sequence[int]) -> PolyForm:
    F = code.F
    if code.eval_set.has_infinity:
        raise CodeError("classification requires a finite evaluation set")
    if not is_deep_hole(code, u):
        raise CodeError("word is not a deep hole")
    s = projective_syndrome(code, u)
    cls = tag_class(F, code.m, s)
    u1 = leading_part(code, u)
    canonical = poly.monic(F, u1)

    if cls.witness == "rnc":
        expected = delta_leading_part(code, cls.delta)
        form = "x^k" if cls.delta is INF else "delta"
    elif cls.witness == "nucleus":
        s1 = code.eval_set.s[1]
        expected = poly.add(F, poly.x_power(code.k + 1), poly.x_power(code.k, s1))
        form = "nucleus"
    else:
        raise CodeError(f"syndrome {s} is neither on the RNC nor the nucleus")
    if canonical != poly.monic(F, expected):
        raise AssertionError("leading part disagrees with the classified form")
    return PolyForm(form, cls.delta, canonical)


# ---------------------------------------------------------------------------
# Roth-Seroussi extension oracle and RNC completeness


@dataclass(frozen=True)
class ExtensionSets:
    brute: frozenset         # all [g] with [G_l(D) | g] MDS
    predicted: Optional[frozenset]  # RNC tails + nucleus, when the theorem applies


def roth_seroussi_extensions(F: GF, ell: int, points: Sequence,
                             budget: int = DEFAULT_BUDGET) -> ExtensionSets:
    es = points if isinstance(points, EvaluationSet) else EvaluationSet(F, points)
    if ell < 2 or ell > es.n:
        raise CodeError(f"need 2 <= ell <= n, got ell={ell}")
    cols = [moment_vector(F, ell, x) for x in es.points]
    brute = frozenset(enumeration.mds_extension_points(F, cols, budget=budget))
    predicted = None
    if ell <= es.n - (F.q - 1) // 2:
        used = set(es.points)
        pred = {moment_vector(F, ell, d) for d in line_points(F) if d not in used}
        if F.q % 2 == 0 and ell == 3:
            pred.add(NUCLEUS3)
        predicted = frozenset(pred)
    return ExtensionSets(brute, predicted)


def rnc_completeness(F: GF, m: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the standard RNC in PG(m-1,q) is a complete arc (no point
    extends the q+1 curve points to a (q+2)-arc)."""
    from .projective import rnc_points
    cols = rnc_points(F, m)
    return not enumeration.mds_extension_points(F, cols, budget=budget)


# ---------------------------------------------------------------------------
# length q+1 classifications


@dataclass(frozen=True)
class GdrsClassification:
    case: str                            # "even-high" | "odd-high" | "even-low"
    rho: int
    classes: Tuple[DeepHoleClass, ...]
    hyperoval_matrices: Optional[tuple] = None  # one 3x(q+2) matrix per class (q even, k=2)


def gdrs_deep_holes(F: GF, k: int, budget: int = DEFAULT_BUDGET) -> GdrsClassification:
    """Deep-hole classification of the full-line [q+1,k] RS code in the
    three settled parameter cases."""
    q = F.q
    even = q % 2 == 0
    if even and k == 2:
        case = "even-low"
    elif even and k == q - 2:
        case = "even-high"
    elif not even and k == q - 2:
        case = "odd-high"
    else:
        raise CodeError("open problem: only q even k in {2, q-2} and q odd "
                        "k = q-2 are classified")
    code = code_make(F, k, line_points(F))
    found = enumerate_deep_holes(code, budget=budget)
    matrices = None
    if case == "even-high":
        assert found.rho == 3 and found.points() == {NUCLEUS3}
    elif case == "odd-high":
        assert found.rho == 2 and len(found.classes) == q * q
    else:
        assert found.rho == q - 1
        matrices = tuple(hyperoval_matrix(code, normalized_representative(code, c.syndrome))
                         for c in found.classes)
    return GdrsClassification(case, found.rho, found.classes, matrices)


def normalized_representative(code: GrsCode, s: Sequence[int]) -> tuple:
    """The unique word with syndrome proportional to s satisfying u=0 at
    the points 0 and infinity and u=1 at the point 1 (full-line k=2)."""
    F = code.F
    if code.k != 2 or code.n != F.q + 1:
        raise CodeError("normalized representative is defined for full-line k=2")
    u = linalg.solve(F, [list(r) for r in code.H], list(s))
    # D order is 0, 1, ..., q-1, INF; subtract the codeword (a + b*x, b).
    b = u[-1]
    u = [F.sub(ui, F.mul(b, xi)) for ui, xi in zip(u, list(range(F.q)) + [0])]
    u = [F.sub(ui, u[0]) for ui in u]
    u[-1] = 0
    if u[1] == 0:
        raise CodeError("representative cannot be normalized (u(1) = 0)")
    scale = F.inv(u[1])
    return tuple(F.mul(scale, ui) for ui in u)


def hyperoval_matrix(code: GrsCode, u: Sequence[int]) -> tuple:
    """3x(q+2) ordered-hyperoval generator matrix attached to a deep hole
    of the full-line k=2 code (q even)."""
    F = code.F
    q = F.q
    row0 = tuple([1] * q + [0, 0])
    row1 = tuple(list(range(q)) + [1, 0])
    row2 = tuple(list(u[:q]) + [u[q], 1])
    M = (row0, row1, row2)
    if not linalg.is_mds(F, M):
        raise AssertionError("hyperoval matrix is not MDS")
    return M


def enumerate_ordered_hyperoval_classes(F: GF) -> List[tuple]:
    """Ordered-hyperoval classes of PG(2,q) via the pinned normal form:
    u = 0 at the points 0 and infinity, u = 1 at the point 1, remaining
    q-2 entries free; one MDS matrix per projective equivalence class.
    Independent of the syndrome sweep."""
    q = F.q
    if q % 2:
        raise CodeError("hyperovals exist only for q even")
    code = code_make(F, 2, line_points(F))
    out = []
    free = [x for x in range(q) if x not in (0, 1)]
    for idx in range(q ** len(free)):
        u = [0] * (q + 1)
        u[1] = 1
        rem = idx
        for pos in free:
            u[pos] = rem % q
            rem //= q
        M = (tuple([1] * q + [0, 0]),
             tuple(list(range(q)) + [1, 0]),
             tuple(u[:q] + [u[q], 1]))
        if linalg.is_mds(F, M):
            out.append(M)
    return out


# ---------------------------------------------------------------------------
# conjecture checkers


@dataclass(frozen=True)
class ConjectureResult:
    holds: bool
    witness: Optional[DeepHoleClass] = None


def conjecture1_check(F: GF, k: int, budget: int = DEFAULT_BUDGET) -> ConjectureResult:
    """For D = GF(q): every deep hole of the [q,k] RS code has syndrome on
    the infinity point of the RNC (degree-k generating polynomial)."""
    code = code_make(F, k, tuple(range(F.q)))
    found = enumerate_deep_holes(code, budget=budget)
    target = moment_vector(F, code.m, INF)
    for cls in found.classes:
        if cls.syndrome != target:
            return ConjectureResult(False, cls)
    return ConjectureResult(True)
