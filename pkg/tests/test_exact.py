from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from quasiwreath.exact import (
    Cyclotomic,
    coerce,
    cyclo_add,
    cyclo_eq,
    cyclo_mul,
    cyclo_neg,
    cyclotomic_polynomial,
    root_of_unity,
)


def _sympy_phi(m):
    z = sympy.Symbol("z")
    coeffs = sympy.Poly(sympy.cyclotomic_poly(m, z), z).all_coeffs()
    return [int(c) for c in reversed(coeffs)]


def _int_poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_small_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]


@pytest.mark.parametrize("m", range(1, 31))
def test_cyclotomic_matches_sympy(m):
    assert cyclotomic_polynomial(m) == _sympy_phi(m)


@pytest.mark.parametrize("m", range(1, 13))
def test_product_over_divisors_is_z_m_minus_1(m):
    prod = [1]
    for d in range(1, m + 1):
        if m % d == 0:
            prod = _int_poly_mul(prod, cyclotomic_polynomial(d))
    assert prod == [-1] + [0] * (m - 1) + [1]


def test_cyclotomic_rejects_zero():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


def test_roots_of_unity_examples():
    assert root_of_unity(3, 0) == 1
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(3, 1) ** 3 == 1
    assert root_of_unity(3, 1) ** 2 == root_of_unity(3, 2)
    assert root_of_unity(5, -1) == root_of_unity(5, 4)


def test_cyclotomic_relations():
    z3 = root_of_unity(3, 1)
    assert 1 + z3 + z3 * z3 == 0
    z2 = root_of_unity(2, 1)
    assert z2 * z2 == 1
    z4 = root_of_unity(4, 1)
    # (1 + i)(1 - i) = 1 - i^2 = 2
    assert (1 + z4) * (1 - z4) == 2


@pytest.mark.parametrize("m", range(1, 9))
def test_root_multiplication_table(m):
    for k in range(m):
        for j in range(m):
            assert root_of_unity(m, k) * root_of_unity(m, j) == root_of_unity(m, k + j)


@pytest.mark.parametrize("m", range(2, 16))
def test_sum_of_roots_vanishes(m):
    total = Cyclotomic(m)
    for k in range(m):
        total = total + root_of_unity(m, k)
    assert total.is_zero()


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        cyclo_add(root_of_unity(3, 1), root_of_unity(4, 1))
    with pytest.raises(ValueError):
        cyclo_eq(root_of_unity(3, 1), root_of_unity(4, 1))


def test_function_aliases():
    a, b = root_of_unity(6, 1), root_of_unity(6, 2)
    assert cyclo_mul(a, a) == b
    assert cyclo_add(a, cyclo_neg(a)).is_zero()
    assert cyclo_eq(cyclo_mul(a, b), root_of_unity(6, 3))
    assert root_of_unity(6, 3) == -1


def test_inverse_and_division():
    for m in (3, 5, 8, 12):
        x = Cyclotomic(m, [1, 2, Fraction(-1, 3)])
        assert x * x.inverse() == 1
        assert (x / x) == 1
        assert root_of_unity(m, 1) ** -1 == root_of_unity(m, m - 1)


def test_m1_specializes_to_rationals():
    assert coerce(root_of_unity(1, 5), 1) == Fraction(1)
    assert isinstance(coerce(root_of_unity(1, 5), 1), Fraction)


def test_text_form():
    assert str(root_of_unity(3, 2)) == "z^2"
    assert str(-root_of_unity(5, 1)) == "-z"
    assert str(Cyclotomic(5, [1, 1])) == "z + 1"


fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)


@given(fractions, fractions)
def test_rational_round_trips(a, b):
    assert (a + b) - b == a
    if b != 0:
        assert (a * b) / b == a


@given(
    st.integers(min_value=2, max_value=9),
    st.lists(fractions, min_size=1, max_size=8),
    st.lists(fractions, min_size=1, max_size=8),
    st.lists(fractions, min_size=1, max_size=8),
)
def test_field_axioms(m, ca, cb, cc):
    a, b, c = Cyclotomic(m, ca), Cyclotomic(m, cb), Cyclotomic(m, cc)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - b) + b == a
