"""Named checks comparing independently computed objects for exact equality.

Each check returns a :class:`CheckReport`. A failing report names the
first mismatch: a conjugacy class for characters, or
``(n, lam, mu, t-degree)`` for symmetric-function series.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from . import combinat as cb
from . import posets as ps
from . import zseries as zs
from .symfunc import (SchurExpansion, SymF, frobenius_ch, frobenius_ch_B, fundamental_multiset_check,
                      gamma_components,
                      is_schur_gamma_positive, merge_y_into_x, omega, set_x_zero, swap_xy,
                      sym_e, to_schur)
from .tpoly import NotSymmetricError, ONE, T, TPoly, gamma_basis

LIMITS = {
    "lemma32": 8,
    "main-theorem-boolean": (4, 3),
    "main-theorem-signed": (3, 2),
    "gessel": 8,
    "typeB": 6,
    "prop": (3, 2),
    "ij": 4,
    "kn": (4, 5),
    "bplus": 6,
    "toric": (6, 6),
}
MULTISET_LIMIT_A = 7
MULTISET_LIMIT_B = 4
BPLUS_TERMS = 12


@dataclass(frozen=True)
class CheckReport:
    suite: str
    name: str
    params: dict
    status: str
    expected: str
    actual: str
    elapsed_ms: float | None = field(default=None, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "params": dict(sorted(self.params.items())),
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
        }


class _Run:
    """Collects comparisons for one check and turns them into a report."""

    def __init__(self, suite: str, name: str, params: dict):
        self.suite, self.name, self.params = suite, name, params
        self.failures = []
        self.count = 0
        self.notes = []
        self.start = time.perf_counter()

    def eq(self, where: str, expected, actual) -> bool:
        self.count += 1
        if expected != actual:
            self.failures.append((where, str(expected), str(actual)))
            return False
        return True

    def true(self, where: str, ok: bool, detail: str = "") -> bool:
        return self.eq(where, "True", "True" if ok else f"False ({detail})" if detail else "False")

    def characters(self, where: str, expected, actual) -> bool:
        self.count += 1
        bad = expected.mismatches(actual)
        if bad:
            c = bad[0]
            self.failures.append((f"{where}, class {c}", str(expected[c]), str(actual[c])))
            return False
        return True

    def symf(self, where: str, n: int, expected: SymF, actual: SymF) -> bool:
        self.count += 1
        if expected == actual:
            return True
        diff = to_schur(expected - actual)
        (lam, mu), poly = diff.items()[0]
        deg = poly.low_degree
        e, a = to_schur(expected)[(lam, mu)], to_schur(actual)[(lam, mu)]
        self.failures.append((f"{where}: n={n}, lambda={cb.format_partition(lam)}, "
                              f"mu={cb.format_partition(mu)}, t^{deg}",
                              str(e.coeff(deg)), str(a.coeff(deg))))
        return False

    def schur(self, where: str, n: int, expected: SchurExpansion, actual: SchurExpansion) -> bool:
        return self.symf(where, n, expected.to_symf(), actual.to_symf())

    def report(self) -> CheckReport:
        elapsed = (time.perf_counter() - self.start) * 1000
        note = "; ".join(self.notes)
        if self.failures:
            where, e, a = self.failures[0]
            more = f" (+{len(self.failures) - 1} more)" if len(self.failures) > 1 else ""
            return CheckReport(self.suite, self.name, self.params, "fail",
                               f"{where}: {e}", f"{where}: {a}{more}", elapsed)
        summary = f"{self.count} exact comparisons equal"
        return CheckReport(self.suite, self.name, self.params, "pass", summary,
                           summary + (f"; {note}" if note else ""), elapsed)


def _name(base: str, params: dict) -> str:
    inner = ",".join(f"{k}={v}" for k, v in params.items())
    return f"{base}[{inner}]"


def _skipped(suite: str, params: dict, reason: str) -> CheckReport:
    return CheckReport(suite, _name(suite, params), params, "skipped", "", reason, 0.0)


# ------------------------------------------------------- alternating sums

def phi_alternating_sum(S: frozenset, n: int) -> TPoly:
    """``sum_{S <= T <= [n]} (-1)^(n-|T|) phi_t(T)`` by brute force."""
    rest = [i for i in range(1, n + 1) if i not in S]
    total = TPoly()
    for extra in cb.subsets(rest):
        T_ = S | extra
        term = cb.phi_t(T_)
        total = total + (term if (n - len(T_)) % 2 == 0 else -term)
    return total


def psi_alternating_sum(S: frozenset, n: int) -> TPoly:
    rest = [i for i in range(1, n + 1) if i not in S]
    total = TPoly()
    for extra in cb.subsets(rest):
        T_ = S | extra
        term = cb.psi_t(T_)
        total = total + (term if (n - len(T_)) % 2 == 0 else -term)
    return total


def phi_sum_closed(S: frozenset, n: int) -> TPoly:
    complement = set(range(1, n + 1)) - S
    if not cb.is_stable(complement):
        return TPoly()
    r = n - len(S)
    return gamma_basis(n if n in S else n + 1, r)


def psi_sum_closed(S: frozenset, n: int) -> TPoly:
    complement = set(range(1, n + 1)) - S
    if 1 not in S or not cb.is_stable(complement):
        return TPoly()
    r = n - len(S)
    return gamma_basis(n - 1 if n in S else n, r)


def chi_single(m: int) -> TPoly:
    """Alternating sum over ``T`` with ``m in T subset [m]``."""
    return phi_alternating_sum(frozenset({m}), m)


def omega_single(m: int) -> TPoly:
    return phi_alternating_sum(frozenset(), m) if m else ONE


def check_lemma32(n: int) -> CheckReport:
    params = {"n": n}
    if not 1 <= n <= LIMITS["lemma32"]:
        return _skipped("lemma32", params, f"n must lie in [1, {LIMITS['lemma32']}]")
    run = _Run("lemma32", _name("lemma32", params), params)
    for S in cb.subsets(range(1, n + 1)):
        where = f"S={sorted(S)}"
        run.eq(f"phi sum {where}", phi_sum_closed(S, n), phi_alternating_sum(S, n))
        run.eq(f"psi sum {where}", psi_sum_closed(S, n), psi_alternating_sum(S, n))
    table_chi = {1: ONE + T, 2: T}
    table_omega = {0: ONE, 1: T}
    for m in range(1, n + 1):
        run.eq(f"chi_t({m})", table_chi.get(m, TPoly()), chi_single(m))
    for m in range(0, n + 1):
        run.eq(f"omega_t({m})", table_omega.get(m, TPoly()), omega_single(m))
        if m >= 1:
            run.eq(f"omega recurrence at {m}", omega_single(m), chi_single(m) - omega_single(m - 1))
    return run.report()


# ------------------------------------------------- Rees product flag characters

def _family_poset(family: str, n: int) -> ps.GradedPoset:
    if family == "boolean":
        return ps.boolean_poset(n)
    if family == "signed":
        return ps.signed_boolean(n)
    raise ValueError(f"unknown family {family!r}")


def theorem_posets(family: str, n: int, t: int) -> dict:
    """``P`` (with ``P^-`` the family member), ``Q-bar``, ``R-bar`` and their bounded versions."""
    Pminus = _family_poset(family, n)
    P = ps.add_bounds(Pminus, bottom=False)
    Qbar = ps.remove_bottom(ps.rees_product(Pminus, ps.tree_poset(t, n)))
    Rbar = ps.rees_product(ps.remove_both(P), ps.tree_poset(t, n - 1))
    return {"P": P, "Qbar": Qbar, "Rbar": Rbar, "Q": ps.add_bounds(Qbar), "R": ps.add_bounds(Rbar)}


def main_theorem_rhs(beta_P: dict, n: int, t: int) -> tuple:
    """Stable-subset sums for ``beta(Q-bar)`` and ``beta(R-bar)`` at integer ``t``.

    For ``n = 1`` the first sum of the second formula is empty: its terms
    come from sets that contain ``n`` and lie in ``[2, n]``.
    """
    full = frozenset(range(1, n + 1))
    below = frozenset(range(1, n))

    q_side = 0
    for S in cb.stable_subsets(1, n - 1):
        q_side = beta_P[full - S] * gamma_basis(n, len(S))(t) + q_side
    for S in cb.stable_subsets(1, n - 2):
        q_side = beta_P[below - S] * gamma_basis(n + 1, len(S) + 1)(t) + q_side
    r_side = 0
    if n >= 2:
        for S in cb.stable_subsets(2, n - 2):
            r_side = beta_P[below - S] * gamma_basis(n, len(S) + 1)(t) + r_side
    for S in cb.stable_subsets(2, n - 1):
        r_side = beta_P[full - S] * gamma_basis(n - 1, len(S))(t) + r_side
    return q_side, r_side


def check_main_theorem(family: str, n: int, t: int) -> CheckReport:
    params = {"family": family, "n": n, "t": t}
    suite = "main-theorem"
    lim = LIMITS.get(f"main-theorem-{family}")
    if lim is None:
        return _skipped(suite, params, f"unknown family {family!r}")
    if not (1 <= n <= lim[0] and 1 <= t <= lim[1]):
        return _skipped(suite, params, f"{family}: limits n <= {lim[0]}, t <= {lim[1]}")
    run = _Run(suite, _name(suite, params), params)
    X = theorem_posets(family, n, t)
    alpha_P, beta_P = ps.flag_characters(X["P"])
    alpha_Q, beta_Q = ps.flag_characters(X["Q"])
    alpha_R, beta_R = ps.flag_characters(X["R"])
    for S in alpha_P:
        run.characters(f"alpha_Q({sorted(S)}) = phi_t alpha_P", alpha_P[S] * cb.phi_t(S)(t), alpha_Q[S])
        run.characters(f"alpha_R({sorted(S)}) = psi_t alpha_P", alpha_P[S] * cb.psi_t(S)(t), alpha_R[S])
    full = frozenset(range(1, n + 1))
    q_rhs, r_rhs = main_theorem_rhs(beta_P, n, t)
    run.characters("beta(Q-bar) vs first formula", q_rhs, beta_Q[full])
    run.characters("beta(R-bar) vs second formula", r_rhs, beta_R[full])
    # the same sums written through the closed forms of the alternating sums
    q_alt = sum((beta_P[S] * phi_sum_closed(S, n)(t) for S in beta_P), 0)
    r_alt = sum((beta_P[S] * psi_sum_closed(S, n)(t) for S in beta_P), 0)
    run.characters("beta(Q-bar) vs alternating-sum form", q_alt, beta_Q[full])
    run.characters("beta(R-bar) vs alternating-sum form", r_alt, beta_R[full])
    run.characters("beta(Q-bar) vs top homology", ps.homology_character(X["Qbar"], n - 1), beta_Q[full])
    run.characters("beta(R-bar) vs top homology", ps.homology_character(X["Rbar"], n - 1), beta_R[full])
    run.notes.append(f"dim beta(Q-bar)={beta_Q[full].dim()}, dim beta(R-bar)={beta_R[full].dim()}")
    return run.report()


# ------------------------------------------------------ Schur coefficient counts

def _expansion_from_counts(counts: dict, degree: int) -> SchurExpansion:
    return SchurExpansion({k: TPoly.const(v) for k, v in counts.items() if v}, degree)


def tableau_counts_A(n: int, lo: int, k: int) -> SchurExpansion:
    """``sum_lam #{P in SYT(lam): Asc(P) in stab([lo, n-2]), |Asc(P)| = k} s_lam``."""
    counts = {}
    for lam in cb.partitions(n):
        c = 0
        for P in cb.syt(lam):
            asc = frozenset(range(1, n)) - cb.tableau_descents(P)
            if len(asc) == k and cb.is_stable(asc) and all(lo <= a <= n - 2 for a in asc):
                c += 1
        counts[(lam, ())] = c
    return _expansion_from_counts(counts, n)


def bitableau_counts(n: int, lo: int, k: int, contains_n: bool) -> SchurExpansion:
    """Bitableaux with ``Asc_B(P) in stab([lo, n])`` of size ``k``, containing
    ``n`` or not, as a ``s_lam(x) s_mu(y)`` expansion."""
    counts = {}
    for lam, mu in cb.bipartitions(n):
        c = 0
        for P in cb.bitableaux(lam, mu):
            asc = cb.asc_B_tableau(P)
            if (len(asc) == k and cb.is_stable(asc) and all(a >= lo for a in asc)
                    and (n in asc) == contains_n):
                c += 1
        counts[(lam, mu)] = c
    return _expansion_from_counts(counts, n)


def _components(run: _Run, where: str, f: SymF, m: int):
    try:
        return gamma_components(f, m)
    except NotSymmetricError as exc:
        run.eq(f"{where} symmetric about {m}/2", "symmetric", str(exc))
        return None


def _asc_in(lo: int, hi: int, k: int | None = None, contains: int | None = None, excludes: int | None = None):
    def pred(asc):
        return (cb.is_stable(asc) and all(lo <= a <= hi for a in asc)
                and (k is None or len(asc) == k)
                and (contains is None or contains in asc)
                and (excludes is None or excludes not in asc))
    return pred


def gessel_tables(N: int) -> tuple:
    """``xi[n][k]`` and ``gamma[n][k]`` as t-free SymF, extracted from the series."""
    xi_s, ga_s = zs.xi_series(N), zs.gamma_series(N)
    xi, ga = {}, {}
    for n in range(1, N + 1):
        xi[n] = gamma_components(xi_s[n], n)[1:]
        ga[n] = gamma_components(ga_s[n], n + 1)[1:]
    return xi, ga


def check_gessel(N: int) -> CheckReport:
    params = {"N": N}
    if not 1 <= N <= LIMITS["gessel"]:
        return _skipped("gessel", params, f"N must lie in [1, {LIMITS['gessel']}]")
    run = _Run("gessel", _name("gessel", params), params)
    xi_s, ga_s = zs.xi_series(N), zs.gamma_series(N)
    run.symf("z^1 of xi series", 1, SymF.zero(1), xi_s[1])
    for n in range(1, N + 1):
        xc = _components(run, "xi", xi_s[n], n)
        gc = _components(run, "gamma", ga_s[n], n + 1)
        if xc is None or gc is None:
            continue
        run.symf("xi gamma_0 vanishes", n, SymF.zero(n), xc[0])
        run.symf("gamma gamma_0 vanishes", n, SymF.zero(n), gc[0])
        if n >= 2:
            for k in range((n - 2) // 2 + 1):
                run.schur(f"xi_{n},{k} vs SYT count", n, tableau_counts_A(n, 2, k), to_schur(xc[k + 1]))
            for extra in xc[(n - 2) // 2 + 2:]:
                run.symf("xi beyond k range", n, SymF.zero(n), extra)
        for k in range((n - 1) // 2 + 1):
            run.schur(f"gamma_{n},{k} vs SYT count", n, tableau_counts_A(n, 1, k), to_schur(gc[k + 1]))
        for extra in gc[(n - 1) // 2 + 2:]:
            run.symf("gamma beyond k range", n, SymF.zero(n), extra)
        if n <= MULTISET_LIMIT_A:
            for k in range(n // 2 + 1):
                for lo, tag in ((2, "xi"), (1, "gamma")):
                    if tag == "xi" and n < 2:
                        continue
                    pred = _asc_in(lo, n - 2, k)
                    ok = fundamental_multiset_check(n, lambda d, p=pred, n=n: p(frozenset(range(1, n)) - d), "Des")
                    run.true(f"{tag} fundamental expansion n={n} k={k}", ok)
    if N >= 4:
        x4, g4 = gessel_tables(4)
        s = lambda lam: SchurExpansion({(lam, ()): ONE}, 4)
        run.schur("xi_4,0", 4, s((1, 1, 1, 1)), to_schur(x4[4][0]))
        run.schur("xi_4,1", 4, SchurExpansion({((2, 1, 1), ()): ONE, ((2, 2), ()): ONE}, 4), to_schur(x4[4][1]))
        run.schur("gamma_4,0", 4, s((1, 1, 1, 1)), to_schur(g4[4][0]))
        run.schur("gamma_4,1", 4, SchurExpansion({((2, 1, 1), ()): TPoly.const(2), ((2, 2), ()): ONE}, 4),
                  to_schur(g4[4][1]))
        e = sym_e
        run.symf("z^4 of xi series in e-basis", 4,
                 e(4) * TPoly((0, 1, 1, 1)) + e(2) * e(2) * TPoly((0, 0, 1)), xi_s[4])
    return run.report()


# ---------------------------------------------------------- type B tables

def typeB_tables(N: int) -> dict:
    """Gamma components of the four type B series, keyed by family and ``n``.

    Lists are indexed by ``k``; ``gamma-minus`` has a zero entry at ``k = 0``.
    """
    out = {"xi-plus": {}, "xi-minus": {}, "gamma-plus": {}, "gamma-minus": {}}
    xp, xm = zs.xi_plus_series(N), zs.xi_minus_series(N)
    gp, gm = zs.gamma_plus_series(N), zs.gamma_minus_series(N)
    for n in range(1, N + 1):
        out["xi-plus"][n] = gamma_components(xp[n], n)
        out["xi-minus"][n] = gamma_components(xm[n], n - 1)
        out["gamma-plus"][n] = gamma_components(gp[n], n)
        out["gamma-minus"][n] = gamma_components(gm[n], n + 1)
    return out


def _pair(lam, mu) -> tuple:
    return (tuple(lam), tuple(mu))


def _expansion(terms: dict, n: int) -> SchurExpansion:
    return SchurExpansion({_pair(*k): TPoly.const(v) for k, v in terms.items()}, n)


def check_typeB_xi(N: int) -> CheckReport:
    params = {"N": N}
    if not 1 <= N <= LIMITS["typeB"]:
        return _skipped("typeB-xi", params, f"N must lie in [1, {LIMITS['typeB']}]")
    run = _Run("typeB-xi", _name("typeB-xi", params), params)
    xp, xm, xc = zs.xi_plus_series(N), zs.xi_minus_series(N), zs.xi_combined_series(N)
    run.symf("constant term of xi-plus", 0, SymF.one(), xp[0])
    run.symf("constant term of xi-minus", 0, SymF.zero(0), xm[0])
    for n in range(1, N + 1):
        pc = _components(run, "xi-plus", xp[n], n)
        mc = _components(run, "xi-minus", xm[n], n - 1)
        if pc is not None:
            for k, comp in enumerate(pc):
                run.schur(f"xi+_{n},{k} vs bitableau count", n,
                          bitableau_counts(n, 2, k, True), to_schur(comp))
        if mc is not None:
            for k, comp in enumerate(mc):
                run.schur(f"xi-_{n},{k} vs bitableau count", n,
                          bitableau_counts(n, 2, k, False), to_schur(comp))
        plus, minus = zs.gamma_split(xc[n], n)
        run.symf("split of combined series, plus part", n, xp[n], plus)
        run.symf("split of combined series, minus part", n, xm[n], minus)
        if n <= MULTISET_LIMIT_B:
            for k in range(n // 2 + 1):
                for tag, has in (("xi+", True), ("xi-", False)):
                    pred = _asc_in(2, n, k, contains=n if has else None, excludes=None if has else n)
                    ok = fundamental_multiset_check(n, lambda sd, p=pred: p(sd.asc_B()), "sDes")
                    run.true(f"{tag} fundamental expansion n={n} k={k}", ok)
    xi_A = zs.xi_series(N)
    for n in range(N + 1):
        run.symf("xi-plus at x=0 equals xi in y", n, swap_xy(xi_A[n]), set_x_zero(xp[n]))
    if N >= 2:
        t2 = typeB_tables(2)
        run.symf("xi+_2,0", 2, SymF.zero(2), t2["xi-plus"][2][0])
        run.schur("xi+_2,1", 2, _expansion({((1,), (1,)): 1, ((), (1, 1)): 1}, 2),
                  to_schur(t2["xi-plus"][2][1]))
        run.schur("xi-_2,0", 2, _expansion({((1, 1), ()): 1}, 2), to_schur(t2["xi-minus"][2][0]))
    return run.report()


def check_typeB_gamma(N: int) -> CheckReport:
    params = {"N": N}
    if not 1 <= N <= LIMITS["typeB"]:
        return _skipped("typeB-gamma", params, f"N must lie in [1, {LIMITS['typeB']}]")
    run = _Run("typeB-gamma", _name("typeB-gamma", params), params)
    gp, gm = zs.gamma_plus_series(N), zs.gamma_minus_series(N)
    run.symf("constant term of gamma-plus", 0, SymF.one(), gp[0])
    run.symf("constant term of gamma-minus", 0, SymF.zero(0), gm[0])
    vanishing_top = []
    for n in range(1, N + 1):
        pc = _components(run, "gamma-plus", gp[n], n)
        mc = _components(run, "gamma-minus", gm[n], n + 1)
        if pc is not None:
            for k, comp in enumerate(pc):
                run.schur(f"gamma+_{n},{k} vs bitableau count", n,
                          bitableau_counts(n, 1, k, False), to_schur(comp))
        if mc is not None:
            run.symf("gamma-_n,0 vanishes", n, SymF.zero(n), mc[0])
            for k in range(1, len(mc)):
                run.schur(f"gamma-_{n},{k} vs bitableau count", n,
                          bitableau_counts(n, 1, k, True), to_schur(mc[k]))
            if not mc[-1]:
                vanishing_top.append(n)
        if n <= MULTISET_LIMIT_B:
            for k in range(n // 2 + 2):
                for tag, has in (("gamma+", False), ("gamma-", True)):
                    pred = _asc_in(1, n, k, contains=n if has else None, excludes=None if has else n)
                    ok = fundamental_multiset_check(n, lambda sd, p=pred: p(sd.asc_B()), "sDes")
                    run.true(f"{tag} fundamental expansion n={n} k={k}", ok)
    ga_A = zs.gamma_series(N)
    for n in range(N + 1):
        run.symf("gamma-plus + gamma-minus at x=0 equals gamma in y", n,
                 swap_xy(ga_A[n]), set_x_zero(gp[n] + gm[n]))
    if N >= 2:
        t2 = typeB_tables(2)
        run.schur("gamma+_2,0", 2, _expansion({((1, 1), ()): 1}, 2), to_schur(t2["gamma-plus"][2][0]))
        run.schur("gamma+_2,1", 2, _expansion({((2,), ()): 1, ((1,), (1,)): 1}, 2),
                  to_schur(t2["gamma-plus"][2][1]))
        # the worked expansion e_1(x)e_1(y)(t+t^2) + e_2(y)(t+t^2) forces s_(1,1)(y) here
        run.schur("gamma-_2,1", 2, _expansion({((1,), (1,)): 1, ((), (1, 1)): 1}, 2),
                  to_schur(t2["gamma-minus"][2][1]))
        e = sym_e
        run.symf("z^2 of gamma-plus in e-basis", 2,
                 e(2) * TPoly((1, 1, 1)) + e(1) * e(1) * T + e(1) * e(1, "y") * T, gp[2])
        run.symf("z^2 of gamma-minus in e-basis", 2,
                 (e(1) * e(1, "y") + e(2, "y")) * TPoly((0, 1, 1)), gm[2])
    run.notes.append("top gamma-minus coefficient vanishes at n in "
                     f"{vanishing_top}" if vanishing_top else "no vanishing top gamma-minus coefficient")
    return run.report()


# ------------------------------------------------ signed Rees product homology

def signed_rees_poset(n: int, t: int, top: bool) -> ps.GradedPoset:
    """``(sB_n - {0}) * T_{t,n-1}`` or, with ``top``, ``(sB_n * T_{t,n})_-``."""
    if top:
        return ps.remove_bottom(ps.rees_product(ps.signed_boolean(n), ps.tree_poset(t, n)))
    return ps.rees_product(ps.remove_bottom(ps.signed_boolean(n)), ps.tree_poset(t, n - 1))


def ij_homology_sum(n: int) -> SymF:
    """``sum_j t^j ch H_{n-2}(I_j(B_n))``."""
    total = SymF.zero(n)
    for j in range(n):
        chi = ps.homology_character(ps.order_ideal_Ij(n, j), n - 2)
        total = total + frobenius_ch(chi) * TPoly.monomial(j)
    return total


def _check_prop(suite: str, top: bool, n: int, t: int, N: int, ij_max: int | None) -> CheckReport:
    params = {"n": n, "t": t, "N": N}
    lim = LIMITS["prop"]
    if not (1 <= n <= lim[0] and 1 <= t <= lim[1]):
        return _skipped(suite, params, f"limits n <= {lim[0]}, t <= {lim[1]}")
    if N < n or N > LIMITS["typeB"]:
        return _skipped(suite, params, f"need n <= N <= {LIMITS['typeB']}")
    run = _Run(suite, _name(suite, params), params)
    X = signed_rees_poset(n, t, top)
    direct = frobenius_ch_B(ps.homology_character(X, n - 1))
    series = zs.signed_rees_top_series(N) if top else zs.signed_rees_series(N)
    run.symf("ch_B of top homology vs series coefficient at t", n, series[n].evaluate_t(t), direct)
    if ij_max:
        ij = zs.ij_series(max(ij_max, 1))
        for m in range(1, ij_max + 1):
            run.symf("ideal homology sum vs series coefficient", m, ij[m], ij_homology_sum(m))
    return run.report()


def check_prop43(n: int, t: int, N: int = zs.DEFAULT_BOUND_B, ij_max: int | None = None) -> CheckReport:
    """``ij_max`` also verifies the ideal-homology identity for ``n <= ij_max``."""
    if ij_max is not None and ij_max > LIMITS["ij"]:
        return _skipped("prop43", {"n": n, "t": t, "N": N}, f"ij_max must be <= {LIMITS['ij']}")
    return _check_prop("prop43", False, n, t, N, ij_max)


def check_prop46(n: int, t: int, N: int = zs.DEFAULT_BOUND_B) -> CheckReport:
    return _check_prop("prop46", True, n, t, N, None)


def check_ij(n: int) -> CheckReport:
    params = {"n": n}
    if not 1 <= n <= LIMITS["ij"]:
        return _skipped("prop43", params, f"n must lie in [1, {LIMITS['ij']}]")
    run = _Run("prop43", _name("ideal-homology", params), params)
    run.symf("ideal homology sum vs series coefficient", n, zs.ij_series(n)[n], ij_homology_sum(n))
    return run.report()


# ------------------------------------------------------------------ K_n

def local_kn_from_xi_plus(n: int, N: int | None = None) -> SymF:
    """``sum_k omega xi+_{n,k}(x, x) t^k (1+t)^(n-2k)``."""
    comps = gamma_components(zs.xi_plus_series(N or n)[n], n)
    total = SymF.zero(n)
    for k, c in enumerate(comps):
        total = total + omega(merge_y_into_x(c), "x") * gamma_basis(n, k)
    return total


def check_Kn(n: int, N: int = 5) -> CheckReport:
    params = {"n": n, "N": N}
    lim = LIMITS["kn"]
    if not (1 <= n <= lim[0] and n <= N <= lim[1]):
        return _skipped("kn", params, f"limits n <= {lim[0]}, n <= N <= {lim[1]}")
    run = _Run("kn", _name("kn", params), params)
    K = ps.build_Kn(n)
    run.eq("h(K_n) vs half B_n-Eulerian", ps.b_plus_eulerian(n), ps.h_polynomial(K))
    kn, local = zs.kn_series(N), zs.local_kn_series(N)
    run.symf("Stembridge sum vs closed form", n, kn[n], ps.stembridge_equivariant_h(n))
    convolved = zs.E_series("x", N).scale_z(-1) * kn
    for d in range(N + 1):
        run.symf("E(x;-z) times K_n series vs local closed form", d, local[d], convolved[d])
    certificate = local_kn_from_xi_plus(n, N)
    run.symf("local series vs omega xi-plus(x,x) expansion", n, certificate, local[n])
    res = is_schur_gamma_positive(local[n], Fraction(n, 2))
    run.true("local coefficient Schur gamma-positive", bool(res), res.reason)
    comps = gamma_components(zs.xi_plus_series(N)[n], n)
    for k, c in enumerate(comps):
        exp = {key: v[k] for key, v in res.table.items() if k < len(v) and v[k]}
        got = {key: c0.coeff(0) for key, c0 in to_schur(omega(merge_y_into_x(c), "x")).items()}
        run.eq(f"gamma certificate k={k}", dict(sorted(got.items())), dict(sorted(exp.items())))
    return run.report()


def bplus_series(n: int, terms: int = BPLUS_TERMS) -> list:
    """First ``terms`` coefficients of ``B_n^+(t) / (1-t)^n``."""
    poly = ps.b_plus_eulerian(n)
    inv = [comb(n - 1 + k, k) for k in range(terms)]
    return [sum(poly.coeff(i) * inv[k - i] for i in range(k + 1)) for k in range(terms)]


def check_bplus(n: int, terms: int = BPLUS_TERMS) -> CheckReport:
    params = {"n": n, "terms": terms}
    if not 1 <= n <= LIMITS["bplus"]:
        return _skipped("kn", params, f"n must lie in [1, {LIMITS['bplus']}]")
    run = _Run("kn", _name("bplus-series", params), params)
    closed = [(2 * k + 1) ** n - (2 * k) ** n for k in range(terms)]
    run.eq("B_n^+(t)/(1-t)^n coefficients", closed, bplus_series(n, terms))
    return run.report()


# ---------------------------------------------------------------- toric

def toric_gamma(n: int, N: int | None = None) -> list:
    return gamma_components(zs.toric_B_series(N or n)[n], n)


def check_toric(n: int, N: int = zs.DEFAULT_BOUND_B) -> CheckReport:
    params = {"n": n, "N": N}
    lim = LIMITS["toric"]
    if not (1 <= n <= lim[0] and n <= N <= lim[1]):
        return _skipped("toric", params, f"limits n <= {lim[0]}, n <= N <= {lim[1]}")
    run = _Run("toric", _name("toric", params), params)
    series = zs.toric_B_series(N)
    comps = _components(run, "toric", series[n], n)
    if comps is None:
        return run.report()
    for i, c in enumerate(comps):
        e = to_schur(c)
        run.true(f"gamma^B_{n},{i} Schur-positive and integral", e.is_positive() and e.is_integral(), str(e))
    product = zs.gamma_plus_series(N) * zs.xi_series(N).map(swap_xy)
    omega_series = series.map(lambda f: omega(f, "both"))
    for d in range(N + 1):
        run.symf("omega of toric series vs gamma-plus times xi(y)", d, product[d], omega_series[d])
    gp = {k: gamma_components(zs.gamma_plus_series(N)[k], k) for k in range(n + 1)}
    xi = {l: gamma_components(zs.xi_series(N)[l], l) for l in range(n + 1)}
    for i in range(len(comps)):
        conv = SymF.zero(n)
        for k in range(n + 1):
            l = n - k
            for i1, g in enumerate(gp[k]):
                j = i - i1
                if j < 0 or j >= len(xi[l]) or not g:
                    continue
                # xi[l][j] is the coefficient of t^j (1+t)^(l-2j); j = 0 only for l = 0
                x = xi[l][j]
                if x:
                    conv = conv + g * swap_xy(x)
        run.symf(f"gamma^B_{n},{i} vs convolution", n, omega(conv, "both"), comps[i])
    dim = TPoly()
    for i, c in enumerate(comps):
        for (lam, mu), coef in to_schur(c).items():
            d = comb(n, sum(lam)) * cb.num_syt(lam) * cb.num_syt(mu)
            dim = dim + gamma_basis(n, i) * (coef.coeff(0) * d)
    run.eq("B_n(t) from gamma^B dimensions vs Des_B enumeration", ps.b_eulerian(n), dim)
    return run.report()


# ---------------------------------------------------------------- suites

SUITES = ("lemma32", "main-theorem", "gessel", "typeB-xi", "typeB-gamma",
          "prop43", "prop46", "kn", "toric")

CHECKS = {
    "lemma32": check_lemma32,
    "main-theorem": check_main_theorem,
    "gessel": check_gessel,
    "typeB-xi": check_typeB_xi,
    "typeB-gamma": check_typeB_gamma,
    "prop43": check_prop43,
    "prop46": check_prop46,
    "kn": check_Kn,
    "bplus": check_bplus,
    "ij": check_ij,
    "toric": check_toric,
}


def suite_jobs(suite: str, n: int | None = None, t: int | None = None,
               degree: int | None = None) -> list:
    """``(check name, kwargs)`` pairs for a suite, filtered by ``n``/``t``/``degree``."""
    if suite == "all":
        return [job for s in SUITES for job in suite_jobs(s, n, t, degree)]
    if suite not in SUITES:
        raise KeyError(suite)
    ns = lambda default: [n] if n is not None else default
    ts = lambda default: [t] if t is not None else default
    jobs = []
    if suite == "lemma32":
        jobs = [("lemma32", {"n": k}) for k in ns(range(1, 9))]
    elif suite == "main-theorem":
        for fam, nmax, tmax in (("boolean", 4, 3), ("signed", 3, 2)):
            jobs += [("main-theorem", {"family": fam, "n": a, "t": b})
                     for a in ns(range(1, nmax + 1)) for b in ts(range(1, tmax + 1))]
    elif suite == "gessel":
        jobs = [("gessel", {"N": degree or 8})]
    elif suite in ("typeB-xi", "typeB-gamma"):
        jobs = [(suite, {"N": degree or 6})]
    elif suite in ("prop43", "prop46"):
        for a in ns(range(1, 4)):
            for b in ts(range(1, 3)):
                jobs.append((suite, {"n": a, "t": b, "N": degree or zs.DEFAULT_BOUND_B}))
        if suite == "prop43":
            jobs = [j for j in jobs if j[1]["n"] <= LIMITS["prop"][0]]
            jobs += [("ij", {"n": a}) for a in ns(range(1, LIMITS["ij"] + 1))]
    elif suite == "kn":
        jobs = [("kn", {"n": a, "N": degree or 5}) for a in ns(range(1, 5)) if a <= LIMITS["kn"][0]]
        jobs += [("bplus", {"n": a}) for a in ns(range(1, 7))]
    elif suite == "toric":
        jobs = [("toric", {"n": a, "N": degree or zs.DEFAULT_BOUND_B}) for a in ns(range(1, 7))]
    return jobs


SUITE_LIMITS = {
    # suite: (n range, t range, degree range)
    "lemma32": ((1, 8), None, None),
    "main-theorem": ((1, 4), (1, 3), None),
    "gessel": (None, None, (1, 8)),
    "typeB-xi": (None, None, (1, 6)),
    "typeB-gamma": (None, None, (1, 6)),
    "prop43": ((1, 4), (1, 2), (1, 6)),
    "prop46": ((1, 3), (1, 2), (1, 6)),
    "kn": ((1, 6), None, (1, 5)),
    "toric": ((1, 6), None, (1, 6)),
}


def validate(suite: str, n: int | None = None, t: int | None = None, degree: int | None = None):
    """Raise ``ValueError`` when an explicit bound is outside the suite's limits."""
    if suite == "all":
        return
    if suite not in SUITE_LIMITS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    for label, value, rng in zip(("--n", "--t", "--degree"), (n, t, degree), SUITE_LIMITS[suite]):
        if value is None:
            continue
        if rng is None:
            raise ValueError(f"suite {suite} does not take {label}")
        if not rng[0] <= value <= rng[1]:
            raise ValueError(f"{label} for suite {suite} must lie in [{rng[0]}, {rng[1]}]")


def run_job(job) -> CheckReport:
    name, kwargs = job
    return CHECKS[name](**kwargs)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("REESGAMMA_JOBS", "1")))
    except ValueError:
        return 1


def run_suite(suite: str, n: int | None = None, t: int | None = None, degree: int | None = None,
              jobs: int | None = None):
    """Yield reports in job order; with ``jobs > 1`` checks run in worker processes."""
    work = suite_jobs(suite, n, t, degree)
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(work) <= 1:
        for job in work:
            yield run_job(job)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(run_job, work)


# -------------------------------------------------------------- rendering

def render_json(report: CheckReport, timing: bool = False) -> str:
    return json.dumps(report.to_dict(timing), sort_keys=False)


def render_markdown(reports, timing: bool = False) -> str:
    head = "| suite | name | status | expected | actual |"
    sep = "|---|---|---|---|---|"
    if timing:
        head, sep = head + " elapsed_ms |", sep + "---|"
    lines = [head, sep]
    for r in reports:
        cells = [r.suite, r.name, r.status, r.expected, r.actual]
        if timing:
            cells.append(f"{r.elapsed_ms:.1f}" if r.elapsed_ms is not None else "")
        lines.append("| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |")
    return "\n".join(lines)
