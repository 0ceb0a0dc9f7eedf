from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from reesgamma.tpoly import (NotSymmetricError, ONE, T, TPoly, from_gamma, gamma_basis,
                             gamma_expand, one_plus_t_power)

coeff_lists = st.lists(st.integers(-20, 20), max_size=8)


def test_basic_arithmetic():
    f = TPoly((1, 2))
    assert f * f == TPoly((1, 4, 4))
    assert f - f == TPoly()
    assert (T ** 3).degree == 3
    assert TPoly().degree == -1
    assert str(TPoly((1, 3, 1))) == "1 + 3*t + t^2"
    assert f(2) == 5


def test_floats_rejected():
    with pytest.raises(TypeError):
        TPoly((1.0,))


def test_div_one_minus_t():
    assert (TPoly((1, 0, -1))).div_one_minus_t() == TPoly((1, 1))
    with pytest.raises(ValueError):
        TPoly((1, 1)).div_one_minus_t()


def test_reverse_and_symmetry():
    f = TPoly((0, 1, 2))
    assert f.reverse(3) == TPoly((0, 2, 1))
    assert one_plus_t_power(4).is_symmetric(4)
    assert not TPoly((1, 2)).is_symmetric(1)


def test_gamma_expand_known():
    assert gamma_expand(TPoly((1, 6, 1)), 2) == [1, 4]
    with pytest.raises(NotSymmetricError):
        gamma_expand(TPoly((1, 2)), 1)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5), st.integers(0, 3))
def test_gamma_roundtrip(gammas, extra):
    m = 2 * (len(gammas) - 1) + extra
    f = from_gamma(gammas, m)
    assert gamma_expand(f, m)[:len(gammas)] == gammas


@given(coeff_lists, coeff_lists)
def test_divmod_identity(a, b):
    f, g = TPoly(a), TPoly(b)
    if not g:
        return
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(coeff_lists)
def test_one_minus_t_roundtrip(a):
    f = TPoly(a)
    assert (f * (ONE - T)).div_one_minus_t() == f


def test_fraction_coefficients_normalize():
    assert TPoly((Fraction(2, 2),)) == ONE
    assert gamma_basis(3, 1) == TPoly((0, 1, 1))
