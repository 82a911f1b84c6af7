import pytest
from hypothesis import given, strategies as st

from bridgepass.polynomial import LaurentPolynomial as P

polys = st.dictionaries(st.integers(-12, 12), st.integers(-5, 5), max_size=5).map(P)


def test_zero_coefficients_dropped():
    assert P({2: 0, 3: 1}).coefficients == {3: 1}
    assert not P({1: 0})


def test_str_descending():
    assert str(P({-4: 1, 12: 1, 16: -1})) == "-A^16 + A^12 + A^-4"
    assert str(P({0: 1})) == "1"
    assert str(P()) == "0"
    assert str(P({2: -3})) == "-3*A^2"


@given(polys)
def test_parse_inverts_str(p):
    assert P.parse(str(p)) == p


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == 0


def test_unit_monomial_inverse():
    m = P({3: -1})
    assert m ** -2 * m ** 2 == 1
    with pytest.raises(ValueError):
        P({1: 1, 2: 1}) ** -1


def test_invert_variable():
    assert P({3: 2, -1: 1}).invert_variable() == P({-3: 2, 1: 1})


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        P.parse("A^^2")
