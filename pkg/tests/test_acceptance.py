"""Acceptance suite: one test per criterion, all comparisons exact.

The terminal summary prints one ``criterion k: PASS/FAIL`` line for each.
"""

import time
from math import factorial

import pytest

from reesgamma import combinat as cb
from reesgamma import posets as ps
from reesgamma import verify as vf
from reesgamma import zseries as zs
from reesgamma.symfunc import (VirtualCharacter, frobenius_ch_B, induced_character, irreducible_S,
                               negative_sign_B, sym_h)


def assert_all_pass(reports):
    bad = [r for r in reports if not r.passed]
    assert not bad, "\n".join(f"{r.name}: {r.status}: expected {r.expected}; actual {r.actual}" for r in bad)


@pytest.mark.criterion(1)
def test_alternating_sums_match_closed_forms():
    start = time.perf_counter()
    assert_all_pass([vf.check_lemma32(n) for n in range(1, 9)])
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(2)
def test_stable_subset_formulas_for_rees_products():
    start = time.perf_counter()
    reports = [vf.check_main_theorem("boolean", n, t) for n in range(1, 5) for t in (1, 2, 3)]
    reports += [vf.check_main_theorem("signed", n, t) for n in range(1, 4) for t in (1, 2)]
    assert len(reports) == 18
    assert_all_pass(reports)
    assert time.perf_counter() - start < 300


@pytest.mark.criterion(3)
def test_derangement_benchmark():
    for n, expected in ((3, 2), (4, 9)):
        X = ps.rees_product(ps.remove_bottom(ps.boolean_poset(n)), ps.tree_poset(1, n - 1))
        betti = ps.homology_ranks(X)
        assert betti == [0] * (len(betti) - 1) + [expected]
        assert ps.homology_character(X, n - 1).dim() == expected == cb.derangements(n)


@pytest.mark.criterion(4)
def test_type_A_gamma_expansions():
    assert_all_pass([vf.check_gessel(8)])
    xi = dict(_table_rows("xi", 4))
    assert {lam: c[1] for lam, c in xi.items() if c.get(1)} == {(2, 1, 1): 1, (2, 2): 1}
    gamma = dict(_table_rows("gamma", 4))
    assert {lam: c[1] for lam, c in gamma.items() if c.get(1)} == {(2, 1, 1): 2, (2, 2): 1}


def _table_rows(which, n):
    from reesgamma.cli import coefficient_table
    return [(lam, {k: v for k, v in coeffs.items()}) for (lam, _), coeffs in coefficient_table(which, n)]


@pytest.mark.criterion(5)
def test_type_B_gamma_expansions():
    assert_all_pass([vf.check_typeB_xi(6), vf.check_typeB_gamma(6)])


@pytest.mark.criterion(6)
def test_signed_rees_homology_and_ideals():
    reports = [vf.check_prop43(n, t) for n in range(1, 4) for t in (1, 2)]
    reports += [vf.check_prop46(n, t) for n in range(1, 4) for t in (1, 2)]
    reports += [vf.check_ij(n) for n in (1, 2, 3)]
    assert_all_pass(reports)


@pytest.mark.criterion(7)
def test_Kn_h_polynomial_and_local_gamma_positivity():
    reports = [vf.check_Kn(n) for n in range(1, 5)]
    reports += [vf.check_bplus(n, 12) for n in range(1, 7)]
    assert_all_pass(reports)


@pytest.mark.criterion(8)
def test_toric_type_B_gamma_positivity():
    assert_all_pass([vf.check_toric(n) for n in range(1, 5)])
    for n in range(1, 5):
        counts = [0] * (n + 1)
        for w in cb.signed_permutations(n):
            counts[len(cb.des_B(w))] += 1
        assert list(ps.b_eulerian(n).coeffs) + [0] * (n + 1 - len(ps.b_eulerian(n).coeffs)) == counts


@pytest.mark.criterion(9)
def test_property_suites():
    start = time.perf_counter()
    for n in range(1, 7):
        seen = set()
        for w in cb.permutations(n):
            P, Q = cb.rsk(w)
            assert cb.descents(w) == cb.tableau_descents(Q)
            seen.add((P, Q))
        assert len(seen) == factorial(n)
    for n in range(1, 5):
        seen = set()
        for w in cb.signed_permutations(n):
            P, Q = cb.rsk_B(w)
            assert cb.signed_descent(w) == cb.sdes_tableau(Q)
            seen.add((P, Q))
        assert len(seen) == cb.order_B(n)
    for n in range(1, 8):
        chars = [irreducible_S(lam) for lam in cb.partitions(n)]
        for i, a in enumerate(chars):
            for j, b in enumerate(chars):
                assert a.inner(b) == (i == j)
    for n in range(1, 5):
        assert frobenius_ch_B(VirtualCharacter.trivial("B", n)) == sym_h(n, "x")
        assert frobenius_ch_B(negative_sign_B(n)) == sym_h(n, "y")
        induced = induced_character(VirtualCharacter.trivial("S", n), "S<B", n)
        assert frobenius_ch_B(induced) == sym_h(n, "xy")
    assert zs.E_series("x", 8) * zs.H_series("x", 8).scale_z(-1) == zs.ZSeries.one(8)
    for n in range(1, 5):
        for P in (ps.add_bounds(ps.boolean_poset(n), bottom=False),
                  ps.add_bounds(ps.signed_boolean(n), bottom=False)):
            alpha, beta = ps.flag_characters(P)
            for S in alpha:
                assert ps.alpha_from_beta(beta, S) == alpha[S]
                assert ps.beta_from_alpha(alpha, S) == beta[S]
    assert time.perf_counter() - start < 300
