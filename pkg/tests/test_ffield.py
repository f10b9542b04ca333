"""Finite field construction and arithmetic."""

import pytest
from hypothesis import given, settings, strategies as st

from pqhopf.ffield import (make_field, required_degree, primitive_qth_root,
                           element_order, in_prime_subfield, embed_int,
                           FieldElement)


def test_prime_field_basics():
    F = make_field(5, 1)
    assert F.size == 5
    a, b = F.embed(3), F.embed(4)
    assert (a + b).val == 2
    assert (a * b).val == 2
    assert (a - b).val == 4
    assert (a / b).val == (3 * 4) % 5  # 4^{-1} = 4 mod 5
    assert (-a).val == 2
    assert a ** 0 == F.one
    assert a ** -1 == a.inverse()


def test_gf4_modulus_and_root():
    # smallest irreducible quadratic over GF(2) is X^2 + X + 1
    F = make_field(2, 2)
    assert F.modulus == (1, 1, 1)
    xi = primitive_qth_root(F, 3)
    assert xi.val == 2           # the class of X, first in value order
    assert xi ** 3 == F.one
    assert xi != F.one
    assert element_order(xi) == 3


def test_gf9_modulus():
    # X^2 + 1 is the first irreducible quadratic over GF(3)
    F = make_field(3, 2)
    assert F.modulus == (1, 0, 1)


def test_required_degree():
    assert required_degree(2, 3) == 2
    assert required_degree(3, 2) == 1
    assert required_degree(2, 5) == 4
    assert required_degree(5, 2) == 1
    assert required_degree(3, 5) == 4
    assert required_degree(5, 3) == 2
    assert required_degree(3, 7) == 6
    assert required_degree(7, 3) == 1


def test_embed_int_and_prime_subfield():
    F = make_field(2, 2)
    assert embed_int(F, 7) == F.one
    assert in_prime_subfield(F.one) == 1
    assert in_prime_subfield(F.zero) == 0
    xi = primitive_qth_root(F, 3)
    assert in_prime_subfield(xi) is None


def test_serialization_round_trip():
    from pqhopf.ffield import FieldSpec
    F = make_field(3, 2)
    G = FieldSpec.from_dict(F.to_dict())
    assert G.p == 3 and G.k == 2 and G.modulus == F.modulus


def test_coeffs_encoding():
    F = make_field(3, 2)
    e = FieldElement(F, 5)       # 5 = 2 + 1*3, coefficients (2, 1)
    assert e.coeffs == [2, 1]


def test_mixed_field_arithmetic_rejected():
    F, G = make_field(2, 1), make_field(3, 1)
    with pytest.raises((ValueError, AssertionError)):
        F.one + G.one


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (3, 2), (5, 2)])
def test_field_axioms_exhaustive(p, k):
    F = make_field(p, k)
    elems = list(F.elements())
    assert len(elems) == p ** k
    for a in elems:
        assert a + F.zero == a
        assert a * F.one == a
        assert a + (-a) == F.zero
        if a.val:
            assert a * a.inverse() == F.one
            assert element_order(a) in [d for d in range(1, F.size)
                                        if (F.size - 1) % d == 0]
    # Frobenius is additive
    for a in elems[:6]:
        for b in elems[:6]:
            assert (a + b) ** p == a ** p + b ** p


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 3 ** 4 - 1), st.integers(0, 3 ** 4 - 1),
       st.integers(0, 3 ** 4 - 1))
def test_field_axioms_random_gf81(x, y, z):
    F = make_field(3, 4)
    a, b, c = FieldElement(F, x), FieldElement(F, y), FieldElement(F, z)
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + b == b + a


def test_primitive_root_lives_in_required_degree():
    for (p, q) in [(2, 3), (3, 5), (5, 3), (2, 5), (3, 7)]:
        k = required_degree(p, q)
        F = make_field(p, k)
        xi = primitive_qth_root(F, q)
        assert element_order(xi) == q
