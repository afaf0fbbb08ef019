"""PGL(2,q) orbit structure of PG(2,q) and the redundancy-3 machinery:
the correspondence with binary symmetric bilinear forms, stabilizers,
admissibility sets attached to an evaluation set, the redundancy-3
syndrome classification, canonical forms of non-GRS MDS extensions, and
the counting formulas with enumeration oracles.

Fixed conventions: epsilon is the least non-square of GF(q) (q odd); the
orbit base points are (0:1:0), (1:0:-eps) and (1:0:1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from . import linalg
from .field import GF
from .projective import (INF, Mobius, NUCLEUS3, line_points, mat_mul, mat_vec,
                         moment_vector, normalize, pgl2, rnc_delta, sym2_apply)

O1_RNC = "O1_RNC"
O1_NUCLEUS = "O1_NUCLEUS"
O2 = "O2"
O3 = "O3"
O4 = "O4"


class OrbitError(ValueError):
    pass


def phi(F: GF, point: Sequence[int]) -> tuple:
    """Matrix of the symmetric bilinear form attached to (M:N:P), namely
    ((P,-N),(-N,M)); evaluates to MXY - N(X+Y) + P on ((1,X),(1,Y))."""
    M, N, P = point
    return ((P, F.neg(N)), (F.neg(N), M))


def phi_value(F: GF, form: Sequence[Sequence[int]], v: Sequence[int],
              w: Sequence[int]) -> int:
    return F.add(
        F.mul(v[0], F.add(F.mul(form[0][0], w[0]), F.mul(form[0][1], w[1]))),
        F.mul(v[1], F.add(F.mul(form[1][0], w[0]), F.mul(form[1][1], w[1]))))


def is_degenerate(F: GF, point: Sequence[int]) -> bool:
    M, N, P = point
    return F.sub(F.mul(M, P), F.mul(N, N)) == 0


def orbit_label(F: GF, point: Sequence[int]) -> str:
    """Orbit of a PG(2,q) point under the symmetric-square PGL(2,q)
    action: the RNC, the nucleus (q even), and one or two open orbits
    separated by whether the attached form has an isotropic vector."""
    point = normalize(F, point)
    if is_degenerate(F, point):
        return O1_RNC
    if F.q % 2 == 0:
        return O1_NUCLEUS if point == NUCLEUS3 else O4
    form = phi(F, point)
    for v in [(0, 1)] + [(1, t) for t in range(F.q)]:
        if phi_value(F, form, v, v) == 0:
            return O2
    return O3


def base_point(F: GF, label: str) -> tuple:
    if label in (O2, O1_NUCLEUS):
        return NUCLEUS3
    if label == O3:
        return (1, 0, F.neg(F.nonsquare()))
    if label == O4:
        return (1, 0, 1)
    raise OrbitError(f"no base point for label {label}")


def orbit_decomposition(F: GF) -> Dict[str, Set[tuple]]:
    """Exhaustive labeling of all q^2+q+1 points of PG(2,q)."""
    from .enumeration import projective_points
    out: Dict[str, Set[tuple]] = {}
    for row in projective_points(F, 3):
        pt = tuple(int(v) for v in row)
        out.setdefault(orbit_label(F, pt), set()).add(pt)
    return out


def stabilizer(F: GF, label: str) -> List[Mobius]:
    """All elements of PGL(2,q) fixing the label's base point under the
    symmetric-square action (brute enumeration)."""
    if label == O1_RNC:
        raise OrbitError("RNC point stabilizers are not provided")
    if label in (O2, O3) and F.q % 2 == 0:
        raise OrbitError(f"{label} requires q odd")
    if label in (O4, O1_NUCLEUS) and F.q % 2 == 1:
        raise OrbitError(f"{label} requires q even")
    base = normalize(F, base_point(F, label))
    return [g for g in pgl2(F)
            if normalize(F, sym2_apply(F, g, base)) == base]


# ---------------------------------------------------------------------------
# admissibility sets O_i(D)

# partner maps defining the forbidden pairings, as index maps on the line
# 0..q-1, q (= the infinite point)


def _line_index(F: GF, x) -> int:
    return F.q if x is INF else x


def _partner_indices(F: GF, i: int) -> tuple:
    q = F.q
    out = [0] * (q + 1)
    if i == 2:
        for x in range(q):
            out[x] = F.neg(x)
        out[q] = q
    elif i == 3:
        eps = F.nonsquare()
        for x in range(1, q):
            out[x] = F.mul(eps, F.inv(x))
        out[0] = q
        out[q] = 0
    elif i == 4:
        for x in range(1, q):
            out[x] = F.inv(x)
        out[0] = q
        out[q] = 0
    else:
        raise OrbitError(f"no pairing for O_{i}")
    return tuple(out)


@lru_cache(maxsize=None)
def _inverse_line_perms(F: GF) -> np.ndarray:
    """Row g: the permutation x -> g^{-1} . x of PG(1,q) as line indices."""
    q = F.q
    pts = line_points(F)
    perms = np.empty((len(pgl2(F)), q + 1), dtype=np.int16)
    for gi, g in enumerate(pgl2(F)):
        h = g.inverse()
        perms[gi] = [_line_index(F, h.apply(x)) for x in pts]
    return perms


@lru_cache(maxsize=None)
def _orbit_sweep(F: GF, label: str) -> tuple:
    """For each g in PGL(2,q), the point g . base (normalized)."""
    base = normalize(F, base_point(F, label))
    return tuple(normalize(F, sym2_apply(F, g, base)) for g in pgl2(F))


def admissible_set(F: GF, points: Sequence, i: int) -> Set[tuple]:
    """The subset O_i(D) of PG(2,q) attached to an evaluation set D.

    For i = 1 these are the RNC points off D (plus the nucleus, q even).
    For i in {2,3,4} a point g.base is admissible when g^{-1}.D contains
    no pair related by the orbit's forbidden pairing (x = -y, x = eps/y,
    x = 1/y respectively); this is well defined on cosets of the base
    point's stabilizer.
    """
    q = F.q
    if i == 1:
        used = set(points)
        out = {moment_vector(F, 3, d) for d in line_points(F) if d not in used}
        if q % 2 == 0:
            out.add(NUCLEUS3)
        return out
    if i in (2, 3) and q % 2 == 0:
        raise OrbitError(f"O_{i}(D) requires q odd")
    if i == 4 and q % 2 == 1:
        raise OrbitError("O_4(D) requires q even")
    label = {2: O2, 3: O3, 4: O4}[i]
    idx = np.array([_line_index(F, x) for x in points], dtype=np.int64)
    perms = _inverse_line_perms(F)
    moved = perms[:, idx]                          # g^{-1} . D, per row
    partner = np.array(_partner_indices(F, i), dtype=np.int16)
    partnered = partner[moved]
    ngroup = moved.shape[0]
    mask = np.zeros((ngroup, q + 1), dtype=bool)
    mask[np.arange(ngroup)[:, None], moved] = True
    hit = mask[np.arange(ngroup)[:, None], partnered] & (partnered != moved)
    good = ~hit.any(axis=1)
    sweep = _orbit_sweep(F, label)
    return {sweep[gi] for gi in np.nonzero(good)[0]}


# ---------------------------------------------------------------------------
# redundancy-3 classification


def red3_classify(code) -> Set[tuple]:
    """Possible projective syndromes of deep holes of a redundancy-3 RS
    code, by the settled case analysis on k."""
    F = code.F
    q = F.q
    k = code.k
    if code.n != k + 3:
        raise OrbitError("classification requires redundancy n-k = 3")
    if not 2 <= k <= q - 2:
        raise OrbitError("requires 2 <= k <= q-2")
    D = code.eval_set.points
    if k == q - 2:
        if q % 2 == 0:
            return {NUCLEUS3}
        from .enumeration import projective_points
        return {pt for row in projective_points(F, 3)
                for pt in [tuple(int(v) for v in row)]
                if not is_degenerate(F, pt)}
    if k >= (q - 1) // 2:
        return admissible_set(F, D, 1)
    if q % 2 == 0:
        return admissible_set(F, D, 1) | admissible_set(F, D, 4)
    if k == (q - 3) // 2:
        return admissible_set(F, D, 1) | admissible_set(F, D, 2)
    return (admissible_set(F, D, 1) | admissible_set(F, D, 2)
            | admissible_set(F, D, 3))


# ---------------------------------------------------------------------------
# canonical forms of non-GRS MDS extensions


@dataclass(frozen=True)
class CanonicalExtension:
    family: str              # "M1" | "M2" | "M3"
    points: tuple            # transformed evaluation points y_1..y_n
    matrix: tuple            # the canonical 3 x (n+1) matrix
    P: tuple                 # 3x3 transform
    Q: tuple                 # n+1 column scalars (diagonal)


def _family_for_label(F: GF, label: str) -> str:
    if label in (O2, O1_NUCLEUS):
        return "M1"
    if label == O3:
        return "M2"
    if label == O4:
        return "M3"
    raise OrbitError("extension column lies on the RNC: the extended code "
                     "is GRS and has no canonical non-GRS form")


def _last_column(F: GF, family: str) -> tuple:
    if family == "M1":
        return NUCLEUS3
    if family == "M2":
        return (1, 0, F.neg(F.nonsquare()))
    return (1, 0, 1)


def canonical_form(F: GF, G: Sequence[Sequence[int]],
                   v: Sequence[int]) -> CanonicalExtension:
    """Canonical shape of the non-GRS MDS code generated by [G | v],
    where G's columns are (scaled) points of the standard RNC in PG(2,q)
    and v is the extending column.

    Returns the family, the moved evaluation set, the canonical matrix C
    and a pair (P, Q) with P . [G|v] . diag(Q) = C exactly.
    """
    n = len(G[0])
    if n < 5:
        raise OrbitError("canonical forms require n >= 5")
    cols = [tuple(row[j] for row in G) for j in range(n)]
    ts = []
    for c in cols:
        t = rnc_delta(F, 3, normalize(F, c))
        if t is None:
            raise OrbitError("G has a column off the standard RNC")
        ts.append(t)
    vpt = normalize(F, v)
    label = orbit_label(F, vpt)
    family = _family_for_label(F, label)
    aug = tuple(tuple(row) + (v[ri],) for ri, row in enumerate(G))
    if not linalg.is_mds(F, aug):
        raise OrbitError("[G | v] is not MDS")

    base = normalize(F, base_point(F, label)) if label != O1_NUCLEUS else NUCLEUS3
    gmap = None
    for g in pgl2(F):
        if normalize(F, sym2_apply(F, g, vpt)) == base:
            gmap = g
            break
    assert gmap is not None, "PGL(2,q) is transitive on each orbit"
    P = gmap.sym2()
    ys = [gmap.apply(t) for t in ts]
    moved = [mat_vec(F, P, c) for c in cols] + [mat_vec(F, P, tuple(v))]
    targets = [moment_vector(F, 3, y) for y in ys] + [_last_column(F, family)]
    Q = []
    for col, tgt in zip(moved, targets):
        lead = next(j for j, e in enumerate(tgt) if e)
        scale = F.div(tgt[lead], col[lead])
        Q.append(scale)
        if tuple(F.mul(scale, e) for e in col) != tgt:
            raise AssertionError("column is not proportional to its target")
    matrix = tuple(tuple(tgt[r] for tgt in targets) for r in range(3))
    return CanonicalExtension(family, tuple(ys), matrix, P, tuple(Q))


# ---------------------------------------------------------------------------
# counting formulas and enumeration oracles


def _term(num: int, den_arg: int) -> int:
    # the (-m)! = infinity convention: such a denominator kills the term
    if den_arg < 0:
        return 0
    d = math.factorial(den_arg)
    assert num % d == 0
    return num // d


def _check_family(F: GF, family: str) -> None:
    if family not in ("M1", "M2", "M3"):
        raise OrbitError(f"unknown family {family}")
    if family == "M2" and F.q % 2 == 0:
        raise OrbitError("M2 requires q odd")
    if family == "M3" and F.q % 2 == 1:
        raise OrbitError("M3 requires q even")


def count_family(F: GF, n: int, family: str) -> int:
    """Closed-form number of ordered n-tuples defining a matrix of the
    family (the set M_i of ordered arcs)."""
    _check_family(F, family)
    q = F.q
    if n < 5:
        raise OrbitError("families are defined for n >= 5")
    if family == "M1":
        if q % 2 == 0:
            return _term(math.factorial(q + 1), q + 1 - n)
        h = (q - 1) // 2
        fh = math.factorial(h)
        return (_term(fh * 2 ** n, h - n)
                + _term(fh * 2 ** n * n, h + 1 - n)
                + _term(fh * 2 ** (n - 2) * n * (n - 1), h + 2 - n))
    if family == "M2":
        h = (q + 1) // 2
        return _term(math.factorial(h) * 2 ** n, h - n)
    h = q // 2
    fh = math.factorial(h)
    return (_term(fh * 2 ** n, h - n)
            + _term(fh * 2 ** (n - 1) * n, h + 1 - n))


def stabilizer_order(F: GF, family: str) -> int:
    q = F.q
    if family == "M1":
        return q * (q * q - 1) if q % 2 == 0 else 2 * (q - 1)
    if family == "M2":
        return 2 * (q + 1)
    return q


def count_arc_pairs(F: GF, n: int, family: str) -> int:
    """Closed-form number of projective classes of ordered arc pairs of
    the family; equals count_family / stabilizer order (free action)."""
    _check_family(F, family)
    q = F.q
    if n < 5:
        raise OrbitError("families are defined for n >= 5")
    if family == "M1":
        if q % 2 == 0:
            return _term(math.factorial(q - 2), q + 1 - n)
        h = (q - 3) // 2
        num = (math.factorial(h) * 2 ** (n - 4)
               * ((q + 1) * (q + 3 - 2 * n) + n * (n - 1)))
        return _term(num, (q + 3 - 2 * n) // 2) if (q + 3 - 2 * n) % 2 == 0 \
            else 0
    if family == "M2":
        return _term(math.factorial((q - 1) // 2) * 2 ** (n - 2),
                     (q + 1 - 2 * n) // 2)
    return _term(math.factorial((q - 2) // 2) * 2 ** (n - 2) * (q + 2 - n),
                 (q + 2 - 2 * n) // 2)


def _family_partner(F: GF, family: str) -> tuple:
    if family == "M1":
        if F.q % 2 == 0:
            # x = -x, so the pairing forbids nothing beyond distinctness
            return tuple(range(F.q + 1))
        return _partner_indices(F, 2)
    return _partner_indices(F, 3 if family == "M2" else 4)


def family_tuples(F: GF, n: int, family: str) -> List[tuple]:
    """All ordered n-tuples of distinct line points with no two entries
    related by the family's pairing (entries as line indices, q = the
    infinite point)."""
    _check_family(F, family)
    partner = _family_partner(F, family)
    q = F.q
    out: List[tuple] = []
    chosen: List[int] = []
    blocked = [0] * (q + 1)

    def rec():
        if len(chosen) == n:
            out.append(tuple(chosen))
            return
        for z in range(q + 1):
            if not blocked[z]:
                chosen.append(z)
                pz = partner[z]
                blocked[z] += 1
                if pz != z:
                    blocked[pz] += 1
                rec()
                blocked[z] -= 1
                if pz != z:
                    blocked[pz] -= 1
                chosen.pop()

    rec()
    return out


def enumerate_family(F: GF, n: int, family: str) -> int:
    return len(family_tuples(F, n, family))


@lru_cache(maxsize=None)
def _frame_transform_index(F: GF) -> dict:
    """Map  (g.0, g.1, g.inf) -> index of g  over PGL(2,q); the key triple
    determines g uniquely (sharp 3-transitivity)."""
    out = {}
    for gi, g in enumerate(pgl2(F)):
        key = tuple(_line_index(F, g.apply(x)) for x in (0, 1, INF))
        out[key] = gi
    return out


def enumerate_arc_pairs(F: GF, n: int, family: str) -> int:
    """Number of orbits of the family tuples under the stabilizer of the
    extending point, by explicit canonicalization of every tuple."""
    tuples = family_tuples(F, n, family)
    if family == "M1" and F.q % 2 == 0:
        # stabilizer is all of PGL(2,q): send the first three entries to
        # the standard frame and count the distinct remainders
        frames = _frame_transform_index(F)
        perms = _inverse_line_perms(F)
        seen = set()
        for z in tuples:
            gi = frames[z[:3]]
            seen.add(tuple(perms[gi][list(z)]))
        return len(seen)
    label = {"M1": O2, "M2": O3, "M3": O4}[family]
    group = stabilizer(F, label)
    gperms = []
    pts = line_points(F)
    for g in group:
        gperms.append(tuple(_line_index(F, g.apply(x)) for x in pts))
    seen = set()
    count = 0
    for z in tuples:
        if z in seen:
            continue
        count += 1
        for perm in gperms:
            seen.add(tuple(perm[x] for x in z))
    return count
