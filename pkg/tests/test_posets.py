import itertools

import pytest

from reesgamma import combinat as cb
from reesgamma import posets as ps
from reesgamma.symfunc import (VirtualCharacter, frobenius_ch, frobenius_ch_B, group_classes,
                               class_representative, is_schur_positive, sym_s, to_schur)


def b_top(n):
    return ps.add_bounds(ps.boolean_poset(n), bottom=False)


def sb_top(n):
    return ps.add_bounds(ps.signed_boolean(n), bottom=False)


def all_max_chains(P):
    """Explicit enumeration of the maximal chains of a bounded poset."""
    chains = [[P.levels[0][0]]]
    for _ in range(P.max_rank):
        chains = [c + [u] for c in chains for u in P.up[c[-1]]]
    return chains


def test_zoo_sizes():
    B3 = ps.boolean_poset(3)
    assert (len(B3), B3.max_rank) == (8, 3)
    assert len(ps.signed_boolean(2)) == 9
    assert len(ps.tree_poset(2, 2)) == 7
    for n in range(7):
        assert len(ps.signed_boolean(n)) == 3 ** n
    assert ps.chain_poset(4).max_rank == 3


def test_rees_product_basics():
    B3 = ps.boolean_poset(3)
    point = ps.chain_poset(1)
    assert len(ps.rees_product(B3, point)) == len(B3)
    X = ps.rees_product(ps.remove_bottom(B3), ps.tree_poset(2, 2))
    for lab, r in zip(X.labels, X.rank):
        assert r == len(lab[0]) - 1
    P = ps.bounded(ps.remove_bottom(ps.boolean_poset(2)))
    C = ps.chain_poset(2)
    R = ps.rees_product(P, C)
    brute = sum(1 for p in range(len(P)) for q in range(len(C)) if P.rank[p] >= C.rank[q])
    layered = sum(len(P.levels[r]) * sum(len(C.levels[s]) for s in range(min(r, C.max_rank) + 1))
                  for r in range(P.max_rank + 1))
    assert len(R) == brute == layered


def test_bounds_round_trip():
    X = ps.rees_product(ps.remove_bottom(ps.boolean_poset(3)), ps.tree_poset(1, 2))
    assert not X.has_bottom and not X.has_top
    Y = ps.remove_both(ps.bounded(X))
    assert Y.labels == X.labels and Y.covers() == X.covers()
    assert ps.bounded(X).max_rank == 4
    assert len(ps.remove_both(ps.boolean_poset(4))) == 2 ** 4 - 2
    with pytest.raises(ValueError):
        ps.remove_top(X)


def test_rank_selection():
    P = b_top(3)
    assert ps.rank_select(P, [1, 2, 3]).covers() == P.covers()
    assert len(ps.rank_select(P, [])) == 2
    assert ps.count_max_chains(ps.rank_select(P, [1])) == 3
    assert ps.count_max_chains(ps.boolean_poset(3)) == 6


def test_fixed_chain_example():
    assert ps.count_max_chains_fixed(b_top(3), {1}, (2, 1, 3)) == 1


@pytest.mark.parametrize("make", [b_top, sb_top, ps.boolean_poset])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_setwise_fixed_chains_are_pointwise_fixed(make, n):
    P = make(n)
    r = P.max_rank - 1
    for c in P.action.classes():
        g = P.action.representative(c)
        perm = P.permutation(g)
        for S in cb.subsets(range(1, r + 1)):
            Q = ps.rank_select(P, S)
            idx = [P.index[lab] for lab in Q.labels]
            setwise = 0
            for chain in all_max_chains(Q):
                elems = {idx[i] for i in chain}
                setwise += {perm[e] for e in elems} == elems
            assert setwise == ps.count_max_chains_fixed(P, S, g)


def test_order_ideals():
    for j in range(2):
        I = ps.order_ideal_Ij(2, j)
        R = ps.rees_product(ps.remove_bottom(ps.boolean_poset(2)), ps.chain_poset(2))
        top = ((1, 2), j)
        filtered = [lab for lab in R.labels if lab != top and R.leq(lab, top)]
        assert sorted(I.labels) == sorted(filtered)
    I0 = ps.order_ideal_Ij(3, 0)
    assert all(lab[1] == 0 for lab in I0.labels)
    assert [len(lvl) for lvl in I0.levels] == [3, 3]
    for n in range(1, 5):
        for j in range(n):
            ps.check_action(ps.order_ideal_Ij(n, j))


def test_action_check_rejects_non_automorphism():
    bad = ps.GroupAction("S", 2, lambda g, s: s if len(s) != 1 else (1,))
    with pytest.raises(ValueError):
        ps.GradedPoset(*_boolean_parts(2), action=bad)


def _boolean_parts(n):
    B = ps.boolean_poset(n)
    return B.labels, B.rank, B.covers()


def test_alpha_beta_examples():
    assert ps.alpha_character(b_top(3), {1}).dim() == 3
    beta = ps.beta_character(ps.boolean_poset(3), {1})
    assert beta.dim() == 2
    assert frobenius_ch(beta) == sym_s((2, 1))


@pytest.mark.parametrize("P", [b_top(n) for n in range(1, 5)] + [ps.boolean_poset(n) for n in range(2, 5)]
                         + [sb_top(n) for n in range(1, 5)],
                         ids=lambda P: repr(P))
def test_flag_round_trip_and_positivity(P):
    alpha, beta = ps.flag_characters(P)
    ch = frobenius_ch if P.action.group == "S" else frobenius_ch_B
    for T_ in alpha:
        assert ps.alpha_from_beta(beta, T_) == alpha[T_]
        assert beta[T_].dim() >= 0
        assert is_schur_positive(ch(beta[T_]))


def test_beta_of_boolean_counts_descents():
    n = 4
    _, beta = ps.flag_characters(b_top(n))
    for S, chi in beta.items():
        if max(S, default=0) < n:
            assert chi.dim() == sum(1 for w in cb.permutations(n) if cb.descents(w) == S)


@pytest.mark.parametrize("P", [ps.boolean_poset(3), b_top(2), sb_top(2),
                               ps.bounded(ps.tree_poset(2, 2)), ps.bounded(ps.chain_poset(3))],
                         ids=repr)
def test_lefschetz_of_bounded_poset_vanishes(P):
    chi = ps.lefschetz_character(P)
    assert all(v == 0 for v in chi.values.values())


def test_reduced_euler_small_cases():
    assert ps.reduced_euler(ps.GradedPoset([], [], [])) == -1
    assert ps.reduced_euler(ps.chain_poset(1)) == 0
    antichain = ps.GradedPoset(["a", "b"], [0, 0], [])
    assert ps.reduced_euler(antichain) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hopf_trace_matches_direct_homology(n):
    X = ps.rees_product(ps.remove_bottom(ps.boolean_poset(n)), ps.tree_poset(1, n - 1))
    betti = ps.homology_ranks(X)
    assert betti[:-1] == [0] * (len(betti) - 1)
    assert ps.homology_character(X, n - 1).dim() == betti[-1] == cb.derangements(n)
    for c in X.action.classes():
        g = X.action.representative(c)
        mask = X.fixed_mask(g)
        b = ps.homology_ranks(X, mask)
        assert ps.reduced_euler(X, mask) == sum((-1) ** (i - 1) * v for i, v in enumerate(b))


def test_multichain_counts_match_phi_and_psi():
    for t in range(1, 4):
        for S in cb.subsets(range(1, 6)):
            if not S:
                continue
            assert ps.count_tree_multichains(t, S) == cb.phi_t(S)(t)
            assert ps.count_tree_multichains(t, S, first_offset=1) == cb.psi_t(S)(t)


@pytest.mark.parametrize("family,nmax,tmax", [("boolean", 4, 3), ("signed", 3, 2)])
def test_lemma_alpha_factorization(family, nmax, tmax):
    make = b_top if family == "boolean" else sb_top
    base = ps.boolean_poset if family == "boolean" else ps.signed_boolean
    for n in range(1, nmax + 1):
        P = make(n)
        alpha_P, _ = ps.flag_characters(P)
        for t in range(1, tmax + 1):
            Q = ps.add_bounds(ps.remove_bottom(ps.rees_product(base(n), ps.tree_poset(t, n))))
            R = ps.add_bounds(ps.rees_product(ps.remove_both(P), ps.tree_poset(t, n - 1)))
            for S in alpha_P:
                assert ps.alpha_character(Q, S) == alpha_P[S] * cb.phi_t(S)(t)
                assert ps.alpha_character(R, S) == alpha_P[S] * cb.psi_t(S)(t)


def test_Kn_small():
    K2 = ps.build_Kn(2)
    assert K2.f_vector() == [1, 5, 4]
    assert str(ps.h_polynomial(K2)) == "1 + 3*t"
    assert ps.b_plus_eulerian(2) == ps.h_polynomial(K2)
    assert ps.h_polynomial(ps.build_Kn(1)) == 1
    with pytest.raises(ValueError):
        ps.build_Kn(6)


def test_fixed_complex_of_transposition():
    K3 = ps.build_Kn(3)
    assert K3.fixed((2, 1, 3)).f_vector() == ps.build_Kn(2).f_vector()
    faces = K3.fixed((2, 1, 3)).faces(1)
    assert len(faces) == 4


def test_faces_agree_with_f_vector():
    K = ps.build_Kn(3)
    f = K.f_vector()
    for d in range(-1, K.dimension + 1):
        assert len(K.faces(d)) == f[d + 1]
    assert K.reduced_euler() == 0


def test_stembridge_small():
    from reesgamma.symfunc import sym_p
    assert ps.stembridge_equivariant_h(1) == sym_p((1,))


def test_edge_export_is_deterministic():
    text = ps.export_edges(ps.boolean_poset(2))
    assert text == "0\t()\t(1)\n0\t()\t(2)\n1\t(1)\t(1,2)\n1\t(2)\t(1,2)\n"
    assert ps.export_edges(ps.tree_poset(2, 3)) == ps.export_edges(ps.tree_poset(2, 3))
