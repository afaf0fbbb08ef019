import pytest

from rsdeep.field import field
from rsdeep.projective import (INF, Mobius, NUCLEUS3, line_points,
                               moment_vector, normalize, pgl2, rnc_delta,
                               rnc_points, sym2_apply)


def test_line_points():
    F = field(5)
    pts = line_points(F)
    assert len(pts) == 6
    assert pts[-1] is INF


def test_moment_vector():
    F = field(5)
    assert moment_vector(F, 3, 2) == (1, 2, 4)
    assert moment_vector(F, 3, INF) == (0, 0, 1)
    assert moment_vector(F, 2, INF) == (0, 1)


def test_normalize():
    F = field(5)
    assert normalize(F, (2, 4, 0)) == (1, 2, 0)
    assert normalize(F, (0, 3, 1)) == (0, 1, 2)
    with pytest.raises(ValueError):
        normalize(F, (0, 0, 0))


def test_mobius_apply_and_inverse():
    F = field(7)
    g = Mobius(F, 1, 2, 3, 4)   # x -> (3 + 4x) / (1 + 2x)
    seen = set()
    for x in line_points(F):
        y = g.apply(x)
        assert g.inverse().apply(y) == x or (y is INF and
                                             g.inverse().apply(y) is x)
        seen.add(F.q if y is INF else y)
    assert len(seen) == F.q + 1   # a bijection of the line


def test_pgl2_order():
    for p, h in [(5, 1), (7, 1), (2, 2)]:
        F = field(p, h)
        q = F.q
        assert len(pgl2(F)) == q * (q * q - 1)
        assert len(set(pgl2(F))) == q * (q * q - 1)


def test_sym2_equivariance():
    # g . [c3(x)] = [c3(g . x)] for the symmetric square action
    F = field(5)
    for g in pgl2(F)[:40]:
        for x in line_points(F):
            lhs = normalize(F, sym2_apply(F, g, moment_vector(F, 3, x)))
            rhs = normalize(F, moment_vector(F, 3, g.apply(x)))
            assert lhs == rhs


def test_compose_matches_apply():
    F = field(7)
    gs = pgl2(F)
    for g in gs[:10]:
        for k in gs[50:60]:
            gk = g.compose(k)
            for x in line_points(F):
                assert gk.apply(x) == g.apply(k.apply(x))


def test_rnc_points_and_delta():
    F = field(5)
    pts = rnc_points(F, 3)
    assert len(pts) == 6
    for x, pt in zip(line_points(F), pts):
        d = rnc_delta(F, 3, pt)
        assert d == x or (d is INF and x is INF)
    assert rnc_delta(F, 3, (0, 1, 0)) is None
    assert NUCLEUS3 == (0, 1, 0)


def test_singular_mobius_rejected():
    F = field(5)
    with pytest.raises(ValueError):
        Mobius(F, 1, 2, 2, 4)   # determinant 0
