from math import factorial

import pytest
from hypothesis import given, strategies as st

from reesgamma import combinat as cb

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1))))
signed = st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.permutations(list(range(1, n + 1))),
                        st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
).map(lambda ps: tuple(s * v for v, s in zip(*ps)))


def test_partition_counts():
    assert [len(cb.partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(cb.bipartitions(2)) == 5
    assert cb.partitions(3) == ((3,), (2, 1), (1, 1, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_sum_of_squares_of_syt_counts(n):
    assert sum(cb.num_syt(lam) ** 2 for lam in cb.partitions(n)) == factorial(n)
    assert all(cb.num_syt(lam) == len(list(cb.syt(lam))) for lam in cb.partitions(n))


def test_z_lambda_class_equation():
    for n in range(1, 7):
        assert sum(factorial(n) // cb.z_lambda(lam) for lam in cb.partitions(n)) == factorial(n)
        assert sum(cb.order_B(n) // cb.z_bipartition(a, b) for a, b in cb.bipartitions(n)) == cb.order_B(n)


def test_stable_subsets():
    assert set(cb.stable_subsets(1, 3)) == {frozenset(), frozenset({1}), frozenset({2}),
                                            frozenset({3}), frozenset({1, 3})}
    assert cb.stable_subsets(2, 0) == [frozenset()]
    for n in range(0, 10):
        assert len(cb.stable_subsets(1, n)) == cb.fibonacci(n + 2)


def test_phi_psi():
    assert cb.phi_t({1, 3}) == cb.q_int(2) * cb.q_int(3)
    assert cb.psi_t({1, 3}) == cb.q_int(3)
    assert cb.phi_t(set()) == cb.psi_t(set()) == cb.q_int(1)
    with pytest.raises(ValueError):
        cb.q_int(0)


@pytest.mark.parametrize("n", range(1, 6))
def test_class_representatives(n):
    for lam in cb.partitions(n):
        assert cb.cycle_type(cb.class_rep_S(lam)) == lam
    for a, b in cb.bipartitions(n):
        assert cb.signed_cycle_type(cb.class_rep_B(a, b)) == (a, b)


def test_signed_descents():
    sd = cb.signed_descent((-2, -1))
    assert sd.des == frozenset({1}) and sd.signs == (-1, -1)
    assert cb.des_B((1, 2)) == frozenset({2})
    assert cb.asc_B((-1, -2)) == frozenset({1, 2})


@pytest.mark.parametrize("n", range(1, 7))
def test_rsk_bijection_and_descents(n):
    seen = set()
    for w in cb.permutations(n):
        P, Q = cb.rsk(w)
        assert P.shape == Q.shape and P.is_standard() and Q.is_standard()
        assert cb.descents(w) == cb.tableau_descents(Q)
        assert cb.descents(cb.inverse(w)) == cb.tableau_descents(P)
        seen.add((P, Q))
    assert len(seen) == factorial(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_rsk_b_bijection_and_signed_descents(n):
    seen = set()
    for w in cb.signed_permutations(n):
        P, Q = cb.rsk_B(w)
        assert P.shape == Q.shape
        assert cb.signed_descent(w) == cb.sdes_tableau(Q)
        assert cb.signed_descent(cb.inverse(w)) == cb.sdes_tableau(P)
        assert cb.des_B(w) == cb.des_B_tableau(Q)
        seen.add((P, Q))
    assert len(seen) == cb.order_B(n)


@given(perms)
def test_rsk_inverse_swaps_tableaux(w):
    P, Q = cb.rsk(tuple(w))
    P2, Q2 = cb.rsk(cb.inverse(tuple(w)))
    assert (P2, Q2) == (Q, P)


@given(signed)
def test_signed_inverse_and_cycle_type(w):
    assert cb.compose(w, cb.inverse(w)) == tuple(range(1, len(w) + 1))
    a, b = cb.signed_cycle_type(w)
    assert sum(a) + sum(b) == len(w)


def test_mn_character_values():
    assert cb.mn_character((2, 1), (1, 1, 1)) == 2
    assert cb.mn_character((2, 1), (3,)) == -1
    assert cb.mn_character((2, 1), (2, 1)) == 0
    with pytest.raises(ValueError):
        cb.mn_character((2,), (1,))


def test_derangements():
    assert [cb.derangements(n) for n in range(6)] == [1, 0, 1, 2, 9, 44]
