import pytest

from rsdeep.field import GF, FieldError, field, is_prime


def test_prime_field_arithmetic():
    F = field(5)
    assert F.q == 5
    assert F.add(3, 4) == 2
    assert F.sub(1, 3) == 3
    assert F.mul(3, 4) == 2
    assert F.inv(2) == 3
    assert F.div(1, 4) == 4
    assert F.neg(2) == 3


def test_gf4_modulus_and_tables():
    F = field(2, 2)
    # least irreducible monic quadratic over GF(2) is x^2 + x + 1
    assert F.modulus == (1, 1, 1)
    # every nonzero element has order dividing 3
    for a in range(1, 4):
        assert F.pow(a, 3) == 1


def test_gf9_explicit_modulus():
    F = field(3, 2, (1, 0, 1))   # x^2 + 1
    assert F.q == 9
    i = F.element((0, 1))
    assert F.mul(i, i) == F.neg(1)


def test_field_axioms_exhaustive():
    for p, h in [(2, 2), (3, 1), (3, 2), (7, 1)]:
        F = field(p, h)
        for a in range(F.q):
            for b in range(F.q):
                assert F.add(a, b) == F.add(b, a)
                assert F.mul(a, b) == F.mul(b, a)
                assert F.sub(F.add(a, b), b) == a
                if b != 0:
                    assert F.mul(F.div(a, b), b) == a


def test_distributivity_sampled():
    F = field(2, 3)
    for a in range(8):
        for b in range(8):
            for c in range(8):
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b),
                                                      F.mul(a, c))


def test_inverse_of_zero_rejected():
    F = field(7)
    with pytest.raises(FieldError):
        F.inv(0)


def test_nonsquare():
    assert field(5).nonsquare() == 2
    assert field(7).nonsquare() == 3
    F9 = field(3, 2)
    eps = F9.nonsquare()
    squares = {F9.mul(a, a) for a in range(9)}
    assert eps not in squares
    with pytest.raises(FieldError):
        field(2, 2).nonsquare()


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        field(2, 2, (1, 0, 1))   # x^2 + 1 = (x+1)^2 over GF(2)


def test_bad_characteristic_rejected():
    with pytest.raises(FieldError):
        field(6)
    assert is_prime(13) and not is_prime(9)


def test_element_coeff_roundtrip():
    F = field(3, 2)
    for a in range(9):
        assert F.element(F.coeffs(a)) == a


def test_sums_of_distinct():
    F = field(5)
    # pairs of distinct elements realize every sum
    assert F.sums_of_distinct(2) == set(range(5))


def test_serialize():
    F = field(3, 2)
    s = F.serialize()
    assert s["p"] == 3 and s["h"] == 2
    assert field(s["p"], s["h"], tuple(s["modulus"])) == F
