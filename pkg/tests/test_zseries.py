import pytest
from hypothesis import given, strategies as st

from reesgamma import zseries as zs
from reesgamma.symfunc import SymF, sym_e, sym_s, to_schur
from reesgamma.tpoly import ONE, T, TPoly


def schur(f):
    return {k: v for k, v in to_schur(f).items()}


def test_e_times_h_of_minus_z_is_one():
    prod = zs.E_series("x", 8) * zs.H_series("x", 8).scale_z(-1)
    assert prod == zs.ZSeries.one(8)


def test_reciprocal():
    E = zs.E_series("x", 6)
    assert E * E.reciprocal() == zs.ZSeries.one(6)


def test_z_degree_invariant():
    with pytest.raises(ValueError):
        zs.ZSeries([SymF.one(), SymF.one()])


def test_xi_series_degree_four():
    f = zs.xi_series(4)[4]
    assert f == sym_e(4) * TPoly((0, 1, 1, 1)) + sym_e(2) * sym_e(2) * TPoly((0, 0, 1))
    assert schur(f)[((2, 2), ())] == TPoly((0, 0, 1))


def test_gamma_series_degree_four():
    f = zs.gamma_series(4)[4]
    assert schur(f)[((2, 2), ())] == TPoly((0, 0, 1, 1))
    assert schur(f)[((1, 1, 1, 1), ())] == TPoly((0, 1, 3, 3, 1))


def test_typeB_degree_two():
    assert zs.xi_minus_series(2)[2] == sym_s((1, 1)) * (ONE + T)
    assert zs.xi_plus_series(2)[2] == (sym_s((1,)) * sym_s((1,), "y") + sym_s((1, 1), "y")) * T


def test_combined_series_is_sum():
    assert zs.xi_combined_series(5) == zs.xi_plus_series(5) + zs.xi_minus_series(5)


def test_quotient_rejects_bad_constant():
    E = zs.E_series("x", 3)
    with pytest.raises(ValueError):
        zs.quotient(E, E.scale(2))


@given(st.lists(st.integers(-9, 9), max_size=6), st.integers(5, 7))
def test_gamma_split_properties(coeffs, n):
    f = TPoly(coeffs)
    plus, minus = zs.gamma_split(f, n)
    assert plus + minus == f
    assert plus.is_symmetric(n)
    assert minus.is_symmetric(n - 1)


def test_gamma_split_degree_guard():
    with pytest.raises(ValueError):
        zs.gamma_split(TPoly((0, 0, 0, 1)), 2)


def test_builders_are_cached():
    assert zs.gamma_plus_series(4) is zs.gamma_plus_series(4)
