"""Symmetric functions in two variable sets with polynomial-in-t coefficients.

Everything is stored in the tensor power-sum basis ``p_lam(x) p_mu(y)``,
so a product is concatenation of partitions and no Littlewood-Richardson
machinery is needed. Schur expansions go through Murnaghan-Nakayama.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Callable, Iterable, Mapping

from . import combinat as cb
from .tpoly import ONE, TPoly, gamma_expand, NotSymmetricError

VARS = ("x", "y", "xy")
Key = tuple  # (lam, mu): p_lam(x) p_mu(y)


class DegreeMismatch(TypeError):
    """Homogeneous components of different degree were combined."""


class SymF:
    """Homogeneous element ``sum c_{lam,mu}(t) p_lam(x) p_mu(y)``."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping[Key, object] | None = None, degree: int | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            c = TPoly.coerce(c)
            if c:
                clean[key] = c
        degrees = {sum(lam) + sum(mu) for lam, mu in clean}
        if len(degrees) > 1:
            raise DegreeMismatch(f"inhomogeneous terms: degrees {sorted(degrees)}")
        if degree is None:
            if not degrees:
                raise ValueError("degree must be given for the zero function")
            degree = degrees.pop()
        elif degrees and degrees.pop() != degree:
            raise DegreeMismatch(f"terms do not have declared degree {degree}")
        self.terms = clean
        self.degree = degree

    @classmethod
    def zero(cls, degree: int) -> "SymF":
        return cls({}, degree)

    @classmethod
    def one(cls) -> "SymF":
        return cls({((), ()): ONE}, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, lam, mu=()) -> TPoly:
        return self.terms.get((tuple(lam), tuple(mu)), TPoly())

    def __eq__(self, other) -> bool:
        if isinstance(other, SymF):
            return self.degree == other.degree and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def _check(self, other: "SymF"):
        if self.degree != other.degree:
            raise DegreeMismatch(f"cannot add degree {self.degree} and {other.degree}")

    def __add__(self, other) -> "SymF":
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, SymF):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return SymF(out, self.degree)

    __radd__ = __add__

    def __neg__(self) -> "SymF":
        return SymF({k: -c for k, c in self.terms.items()}, self.degree)

    def __sub__(self, other) -> "SymF":
        if not isinstance(other, SymF):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "SymF":
        if isinstance(other, (TPoly, Rational)):
            return self.scale(other)
        if not isinstance(other, SymF):
            return NotImplemented
        out = defaultdict(TPoly)
        for (a, b), c in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (cb.merge_partitions(a, a2), cb.merge_partitions(b, b2))
                out[key] = out[key] + c * c2
        return SymF(out, self.degree + other.degree)

    def __rmul__(self, other) -> "SymF":
        if isinstance(other, (TPoly, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "SymF":
        result = SymF.one()
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "SymF":
        c = TPoly.coerce(c)
        return SymF({k: v * c for k, v in self.terms.items()}, self.degree)

    def map_coeffs(self, f: Callable[[TPoly], TPoly]) -> "SymF":
        return SymF({k: f(v) for k, v in self.terms.items()}, self.degree)

    def evaluate_t(self, value) -> "SymF":
        """Specialize ``t`` to an exact number."""
        return SymF({k: TPoly.const(v(value)) for k, v in self.terms.items()}, self.degree)

    def t_degree(self) -> int:
        return max((c.degree for c in self.terms.values()), default=-1)

    def __repr__(self) -> str:
        return f"SymF(degree={self.degree}, terms={len(self.terms)})"

    def __str__(self) -> str:
        return format_expansion(self.terms, "p") if self.terms else "0"


# --------------------------------------------------------------- generators

def _xy_key(lam, which: str) -> Key:
    return (tuple(lam), ()) if which == "x" else ((), tuple(lam))


@lru_cache(maxsize=None)
def sym_p(lam: tuple, vars: str = "x") -> SymF:
    """Power sum ``p_lam`` in ``x``, ``y`` or the merged alphabet ``(x, y)``."""
    lam = tuple(lam)
    if vars in ("x", "y"):
        return SymF({_xy_key(lam, vars): ONE}, sum(lam))
    if vars != "xy":
        raise ValueError(f"unknown variable set {vars!r}")
    result = SymF.one()
    for r in lam:
        result = result * SymF({((r,), ()): ONE, ((), (r,)): ONE}, r)
    return result


def _from_class_sum(n: int, weight: Callable[[tuple], Fraction], vars: str) -> SymF:
    total = SymF.zero(n)
    for mu in cb.partitions(n):
        w = weight(mu)
        if w:
            total = total + sym_p(mu, vars) * w
    return total


@lru_cache(maxsize=None)
def sym_e(n: int, vars: str = "x") -> SymF:
    return _from_class_sum(
        n, lambda mu: Fraction((-1) ** (n - len(mu)), cb.z_lambda(mu)), vars)


@lru_cache(maxsize=None)
def sym_h(n: int, vars: str = "x") -> SymF:
    return _from_class_sum(n, lambda mu: Fraction(1, cb.z_lambda(mu)), vars)


@lru_cache(maxsize=None)
def sym_s(lam: tuple, vars: str = "x") -> SymF:
    lam = tuple(lam)
    return _from_class_sum(
        sum(lam), lambda mu: Fraction(cb.mn_character(lam, mu), cb.z_lambda(mu)), vars)


def schur_pair(lam, mu) -> SymF:
    """``s_lam(x) s_mu(y)``."""
    return sym_s(tuple(lam), "x") * sym_s(tuple(mu), "y")


def mul(f: SymF, g: SymF) -> SymF:
    return f * g


def add(f: SymF, g: SymF) -> SymF:
    return f + g


def scale(f: SymF, c) -> SymF:
    return f.scale(c)


# ---------------------------------------------------------- transformations

def _sign(lam) -> int:
    return (-1) ** (sum(lam) - len(lam))


def omega(f: SymF, which: str = "both") -> SymF:
    """The involution ``p_r -> (-1)^(r-1) p_r`` on the chosen alphabet(s)."""
    if which not in ("x", "y", "both"):
        raise ValueError(f"unknown alphabet {which!r}")
    out = {}
    for (lam, mu), c in f.terms.items():
        s = 1
        if which in ("x", "both"):
            s *= _sign(lam)
        if which in ("y", "both"):
            s *= _sign(mu)
        out[(lam, mu)] = c * s
    return SymF(out, f.degree)


def swap_xy(f: SymF) -> SymF:
    return SymF({(mu, lam): c for (lam, mu), c in f.terms.items()}, f.degree)


def set_y_zero(f: SymF) -> SymF:
    return SymF({k: c for k, c in f.terms.items() if not k[1]}, f.degree)


def set_x_zero(f: SymF) -> SymF:
    return SymF({k: c for k, c in f.terms.items() if not k[0]}, f.degree)


def merge_y_into_x(f: SymF) -> SymF:
    """Substitute ``p_r(y) -> p_r(x)``: the specialization ``y = x``."""
    out = defaultdict(TPoly)
    for (lam, mu), c in f.terms.items():
        key = (cb.merge_partitions(lam, mu), ())
        out[key] = out[key] + c
    return SymF(out, f.degree)


# ---------------------------------------------------------- Schur expansion

@dataclass
class SchurExpansion:
    """Coefficients in the ``s_lam(x) s_mu(y)`` basis."""

    coeffs: dict
    degree: int

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __getitem__(self, key) -> TPoly:
        lam, mu = key
        return self.coeffs.get((tuple(lam), tuple(mu)), TPoly())

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: _key_order(kv[0]))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for v in self.coeffs.values() for c in v.coeffs)

    def is_positive(self) -> bool:
        return all(c >= 0 for v in self.coeffs.values() for c in v.coeffs)

    def to_symf(self) -> SymF:
        total = SymF.zero(self.degree)
        for (lam, mu), c in self.coeffs.items():
            total = total + schur_pair(lam, mu) * c
        return total

    def __str__(self) -> str:
        return format_expansion(self.coeffs, "s") if self.coeffs else "0"


def _key_order(key):
    lam, mu = key
    return (-sum(lam), tuple(-p for p in lam), tuple(-p for p in mu))


def to_schur(f: SymF) -> SchurExpansion:
    """Expand in Schur functions using ``p_a = sum_lam chi^lam(a) s_lam``."""
    by_sizes = defaultdict(list)
    for (a, b), c in f.terms.items():
        by_sizes[(sum(a), sum(b))].append((a, b, c))
    out = {}
    for (i, j), terms in by_sizes.items():
        for lam in cb.partitions(i):
            for mu in cb.partitions(j):
                acc = TPoly()
                for a, b, c in terms:
                    chi = cb.mn_character(lam, a) * cb.mn_character(mu, b)
                    if chi:
                        acc = acc + c * chi
                if acc:
                    out[(lam, mu)] = acc
    return SchurExpansion(out, f.degree)


def is_schur_positive(f: SymF) -> bool:
    return to_schur(f).is_positive()


@dataclass
class GammaResult:
    """Outcome of a Schur gamma-positivity test.

    ``table`` maps each ``(lam, mu)`` to its list of gamma coefficients
    and doubles as the positivity certificate.
    """

    positive: bool
    symmetric: bool
    m: int
    table: dict = field(default_factory=dict)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.positive


def is_schur_gamma_positive(f: SymF, center) -> GammaResult:
    m = Fraction(center) * 2
    if m.denominator != 1:
        raise ValueError(f"center {center} is not a half-integer")
    m = int(m)
    table = {}
    for key, poly in to_schur(f).items():
        try:
            table[key] = gamma_expand(poly, m)
        except NotSymmetricError:
            return GammaResult(False, False, m, table,
                               f"not centrally symmetric: coefficient of {key} is {poly}")
    for key, gam in table.items():
        for i, g in enumerate(gam):
            if g < 0:
                return GammaResult(False, True, m, table,
                                   f"not gamma-positive: gamma_{i} of {key} is {g}")
    return GammaResult(True, True, m, table)


def gamma_components(f: SymF, m: int) -> list:
    """Split ``f = sum_i g_i t^i (1+t)^(m-2i)`` with ``t``-free ``g_i``.

    Works coefficientwise in the power-sum basis (the expansion is linear
    and the change to Schur basis does not involve ``t``).
    """
    comps = [defaultdict(TPoly) for _ in range(m // 2 + 1)]
    for key, poly in f.terms.items():
        for i, g in enumerate(gamma_expand(poly, m)):
            if g:
                comps[i][key] = TPoly.const(g)
    return [SymF(c, f.degree) for c in comps]


def format_expansion(coeffs: Mapping, basis: str) -> str:
    parts = []
    for (lam, mu), c in sorted(coeffs.items(), key=lambda kv: _key_order(kv[0])):
        name = []
        if lam:
            name.append(f"{basis}{cb.format_partition(lam)}(x)")
        if mu:
            name.append(f"{basis}{cb.format_partition(mu)}(y)")
        mono = "*".join(name) or "1"
        parts.append(f"[{c}]*{mono}")
    return " + ".join(parts)


# --------------------------------------------------------------- characters

def group_classes(group: str, n: int) -> tuple:
    if group == "S":
        return cb.partitions(n)
    if group == "B":
        return cb.bipartitions(n)
    raise ValueError(f"unknown group {group!r}")


def class_size(group: str, label) -> int:
    if group == "S":
        n = sum(label)
        return cb.order_S(n) // cb.z_lambda(label)
    n = sum(label[0]) + sum(label[1])
    return cb.order_B(n) // cb.z_bipartition(*label)


def class_representative(group: str, label) -> tuple:
    return cb.class_rep_S(label) if group == "S" else cb.class_rep_B(*label)


def identity_class(group: str, n: int):
    return (1,) * n if group == "S" else ((1,) * n, ())


@dataclass(frozen=True)
class VirtualCharacter:
    """Integer (or rational) class function on S_n or B_n."""

    group: str
    n: int
    values: Mapping

    def __post_init__(self):
        classes = set(group_classes(self.group, self.n))
        if set(self.values) != classes:
            missing = classes - set(self.values)
            raise ValueError(f"character must have one value per class; missing {sorted(missing)}")

    @classmethod
    def from_function(cls, group: str, n: int, f: Callable) -> "VirtualCharacter":
        """Evaluate ``f(label, representative)`` on every class."""
        return cls(group, n, {c: f(c, class_representative(group, c))
                              for c in group_classes(group, n)})

    @classmethod
    def trivial(cls, group: str, n: int) -> "VirtualCharacter":
        return cls(group, n, {c: 1 for c in group_classes(group, n)})

    @classmethod
    def zero(cls, group: str, n: int) -> "VirtualCharacter":
        return cls(group, n, {c: 0 for c in group_classes(group, n)})

    def __getitem__(self, label):
        return self.values[label]

    def dim(self):
        return self.values[identity_class(self.group, self.n)]

    def _same(self, other):
        if (self.group, self.n) != (other.group, other.n):
            raise ValueError("characters of different groups")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._same(other)
        return VirtualCharacter(self.group, self.n,
                                {c: v + other.values[c] for c, v in self.values.items()})

    __radd__ = __add__

    def __sub__(self, other):
        self._same(other)
        return VirtualCharacter(self.group, self.n,
                                {c: v - other.values[c] for c, v in self.values.items()})

    def __neg__(self):
        return VirtualCharacter(self.group, self.n, {c: -v for c, v in self.values.items()})

    def __mul__(self, k):
        if isinstance(k, VirtualCharacter):
            self._same(k)
            return VirtualCharacter(self.group, self.n,
                                    {c: v * k.values[c] for c, v in self.values.items()})
        return VirtualCharacter(self.group, self.n, {c: v * k for c, v in self.values.items()})

    __rmul__ = __mul__

    def inner(self, other) -> Fraction:
        self._same(other)
        order = cb.order_S(self.n) if self.group == "S" else cb.order_B(self.n)
        return Fraction(sum(class_size(self.group, c) * v * other.values[c]
                            for c, v in self.values.items()), order)

    def mismatches(self, other) -> list:
        """Class labels where two characters differ."""
        self._same(other)
        return [c for c in group_classes(self.group, self.n)
                if self.values[c] != other.values[c]]


def irreducible_S(lam) -> VirtualCharacter:
    lam = tuple(lam)
    n = sum(lam)
    return VirtualCharacter("S", n, {mu: cb.mn_character(lam, mu) for mu in cb.partitions(n)})


def sign_S(n: int) -> VirtualCharacter:
    return VirtualCharacter("S", n, {mu: (-1) ** (n - len(mu)) for mu in cb.partitions(n)})


def negative_sign_B(n: int) -> VirtualCharacter:
    """``w -> (-1)^(number of negative entries)``, which is ``(-1)^l(beta)`` on classes."""
    return VirtualCharacter("B", n, {c: (-1) ** len(c[1]) for c in cb.bipartitions(n)})


def regular_character(group: str, n: int) -> VirtualCharacter:
    order = cb.order_S(n) if group == "S" else cb.order_B(n)
    ident = identity_class(group, n)
    return VirtualCharacter(group, n, {c: (order if c == ident else 0)
                                       for c in group_classes(group, n)})


def frobenius_ch(chi: VirtualCharacter) -> SymF:
    """``sum_mu chi(mu) p_mu(x) / z_mu``."""
    if chi.group != "S":
        raise ValueError("frobenius_ch expects an S_n character")
    total = SymF.zero(chi.n)
    for mu, v in chi.values.items():
        if v:
            total = total + sym_p(mu, "x") * Fraction(v, cb.z_lambda(mu))
    return total


@lru_cache(maxsize=None)
def _signed_power_sum(alpha: tuple, beta: tuple) -> SymF:
    """``prod p_a(x)+p_a(y)  prod p_b(x)-p_b(y)``."""
    result = SymF.one()
    for a in alpha:
        result = result * SymF({((a,), ()): ONE, ((), (a,)): ONE}, a)
    for b in beta:
        result = result * SymF({((b,), ()): ONE, ((), (b,)): -ONE}, b)
    return result


def frobenius_ch_B(chi: VirtualCharacter) -> SymF:
    """Type B characteristic: positive cycles contribute ``p_r(x) + p_r(y)``,
    negative cycles ``p_r(x) - p_r(y)``; weight ``1 / z_{alpha,beta}``."""
    if chi.group != "B":
        raise ValueError("frobenius_ch_B expects a B_n character")
    total = SymF.zero(chi.n)
    for (alpha, beta), v in chi.values.items():
        if v:
            total = total + _signed_power_sum(alpha, beta) * Fraction(
                v, cb.z_bipartition(alpha, beta))
    return total


def character_of(f: SymF, group: str) -> VirtualCharacter:
    """Inverse characteristic map: the class function with ``ch = f``."""
    n = f.degree
    if any(c.degree > 0 for c in f.terms.values()):
        raise ValueError("character_of needs t-free coefficients")
    if group == "S":
        if any(mu for _, mu in f.terms):
            raise ValueError("S_n characteristic must not involve y")
        vals = {lam: f.coefficient(lam).coeff(0) * cb.z_lambda(lam) for lam in cb.partitions(n)}
        return VirtualCharacter("S", n, _integral(vals))
    # p_r(x) = (p+ + p-)/2, p_r(y) = (p+ - p-)/2
    acc = defaultdict(Fraction)
    for (lam, mu), c in f.terms.items():
        c = c.coeff(0)
        parts = [(r, 1) for r in lam] + [(r, -1) for r in mu]
        for choice in itertools.product((0, 1), repeat=len(parts)):
            coeff = Fraction(c, 2 ** len(parts))
            alpha, beta = [], []
            for (r, s), ch in zip(parts, choice):
                if ch == 0:
                    alpha.append(r)
                else:
                    beta.append(r)
                    coeff *= s
            key = (tuple(sorted(alpha, reverse=True)), tuple(sorted(beta, reverse=True)))
            acc[key] += coeff
    vals = {c: acc.get(c, 0) * cb.z_bipartition(*c) for c in cb.bipartitions(n)}
    return VirtualCharacter("B", n, _integral(vals))


def _integral(vals: dict) -> dict:
    return {k: (int(v) if Fraction(v).denominator == 1 else Fraction(v)) for k, v in vals.items()}


def irreducible_B(lam, mu) -> VirtualCharacter:
    """The irreducible character whose characteristic is ``s_lam(x) s_mu(y)``."""
    return character_of(schur_pair(lam, mu), "B")


# ------------------------------------------------------- induced characters

INDUCTION_LIMITS = {"S": 6, "B": 4}


def _group_elements(group: str, n: int):
    return cb.permutations(n) if group == "S" else cb.signed_permutations(n)


def _restricted(w: tuple, lo: int, hi: int) -> tuple:
    """Restriction of ``w`` to the block ``lo+1..hi`` relabelled to ``1..hi-lo``."""
    return tuple((abs(x) - lo) * (1 if x > 0 else -1) for x in w[lo:hi])


def induced_character(chi, subgroup: str, n: int, k: int | None = None) -> VirtualCharacter:
    """Induce a character from a subgroup by averaging over the whole group.

    ``subgroup`` is one of

    * ``"SxS"``: ``S_k x S_(n-k)`` in ``S_n``, ``chi = (sigma, tau)``;
    * ``"BxB"``: ``B_k x B_(n-k)`` in ``B_n``, ``chi = (sigma, tau)``;
    * ``"S<B"``: ``S_n`` in ``B_n``, ``chi`` an S_n character.

    Only meant as a brute-force oracle; large groups are refused.
    """
    big = "S" if subgroup == "SxS" else "B"
    if subgroup not in ("SxS", "BxB", "S<B"):
        raise ValueError(f"unknown subgroup {subgroup!r}")
    if n > INDUCTION_LIMITS[big]:
        raise ValueError(f"group {big}_{n} too large for brute-force induction "
                         f"(limit n <= {INDUCTION_LIMITS[big]})")
    if subgroup == "S<B":
        h_order = cb.order_S(n)

        def value(h):
            if any(x < 0 for x in h):
                return None
            return chi[cb.cycle_type(h)]
    else:
        sigma, tau = chi
        if k is None or sigma.n != k or tau.n != n - k:
            raise ValueError("factor characters must have sizes k and n-k")
        label = cb.cycle_type if big == "S" else cb.signed_cycle_type
        h_order = ((cb.order_S(k) * cb.order_S(n - k)) if big == "S"
                   else (cb.order_B(k) * cb.order_B(n - k)))

        def value(h):
            if any(abs(x) > k for x in h[:k]):
                return None
            return sigma[label(_restricted(h, 0, k))] * tau[label(_restricted(h, k, n))]

    elements = list(_group_elements(big, n))
    inverses = [cb.inverse(x) for x in elements]
    values = {}
    for c in group_classes(big, n):
        g = class_representative(big, c)
        acc = 0
        for x, xi in zip(elements, inverses):
            v = value(cb.compose(cb.compose(x, g), xi))
            if v is not None:
                acc += v
        values[c] = Fraction(acc, h_order)
    return VirtualCharacter(big, n, _integral(values))


# ------------------------------------------------- descent multiset checks

def _multiset_sides(n: int, constraint: Callable, statistic: str):
    """Both sides of the RSK-transported fundamental expansion."""
    lhs, rhs = Counter(), Counter()
    if statistic == "Des":
        for w in cb.permutations(n):
            if constraint(cb.descents(cb.inverse(w))):
                lhs[cb.descents(w)] += 1
        for lam in cb.partitions(n):
            tabs = list(cb.syt(lam))
            weight = sum(1 for p in tabs if constraint(cb.tableau_descents(p)))
            if weight:
                for q in tabs:
                    rhs[cb.tableau_descents(q)] += weight
    elif statistic == "sDes":
        for w in cb.signed_permutations(n):
            if constraint(cb.signed_descent(cb.inverse(w))):
                lhs[cb.signed_descent(w)] += 1
        for lam, mu in cb.bipartitions(n):
            tabs = list(cb.bitableaux(lam, mu))
            weight = sum(1 for p in tabs if constraint(cb.sdes_tableau(p)))
            if weight:
                for q in tabs:
                    rhs[cb.sdes_tableau(q)] += weight
    else:
        raise ValueError(f"unknown statistic {statistic!r}")
    return lhs, rhs


def fundamental_multiset_check(n: int, constraint: Callable, statistic: str = "Des") -> bool:
    """Compare ``{stat(w) : constraint(stat(w^-1))}`` with the multiset union
    over shapes of ``#{P : constraint(stat(P))}`` copies of ``{stat(Q)}``.

    ``constraint`` receives a descent set (``"Des"``) or a
    :class:`~reesgamma.combinat.SignedDescent` (``"sDes"``).
    """
    lhs, rhs = _multiset_sides(n, constraint, statistic)
    return lhs == rhs
