"""Finite graded posets with group actions, Rees products and flag characters.

A poset stores its elements in a fixed order (the construction order),
so every derived quantity and every export is deterministic. Elements
are addressed by index internally; labels are arbitrary hashables.

Group actions are given on labels and are only ever evaluated on one
representative per conjugacy class. A maximal chain of a rank-selected
subposet is fixed setwise by a rank-preserving automorphism exactly when
it is fixed pointwise, so fixed chains are the chains of the fixed
subposet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence

from . import combinat as cb
from .symfunc import (SymF, VirtualCharacter, class_representative, group_classes,
                      sym_p)
from .tpoly import ONE, TPoly

BOTTOM = "0^"
TOP = "1^"


@dataclass(frozen=True)
class GroupAction:
    """Action of S_n or B_n on poset labels via ``act(g, label)``."""

    group: str
    n: int
    act: Callable

    def __call__(self, g, label):
        if label == BOTTOM or label == TOP:
            return label
        return self.act(g, label)

    def classes(self) -> tuple:
        return group_classes(self.group, self.n)

    def representative(self, label) -> tuple:
        return class_representative(self.group, label)


TRIVIAL_ACTION = GroupAction("S", 0, lambda g, x: x)


def _subset_act(w, s):
    return tuple(sorted(cb.apply_signed(w, i) for i in s))


def _interval_act(w, iv):
    return (_subset_act(w, iv[0]), _subset_act(w, iv[1]))


def rees_action(action: GroupAction) -> GroupAction:
    """``g . (p, q) = (g . p, q)``."""
    return GroupAction(action.group, action.n, lambda g, pq: (action(g, pq[0]), pq[1]))


class GradedPoset:
    """Graded poset given by its cover relations.

    ``covers`` are pairs ``(lower, upper)`` of labels. Ranks must start at
    0 and every cover must raise the rank by exactly one.
    """

    def __init__(self, labels: Sequence[Hashable], ranks: Sequence[int],
                 covers: Iterable[tuple], action: GroupAction | None = None,
                 check: bool = True):
        self.labels = list(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate labels")
        self.rank = list(ranks)
        n = len(self.labels)
        self.up = [[] for _ in range(n)]
        self.down = [[] for _ in range(n)]
        for a, b in covers:
            i, j = self.index[a], self.index[b]
            if self.rank[j] != self.rank[i] + 1:
                raise ValueError(f"cover {a!r} < {b!r} does not raise rank by one")
            self.up[i].append(j)
            self.down[j].append(i)
        top = max(self.rank, default=-1)
        self.levels = [[] for _ in range(top + 1)]
        for i, r in enumerate(self.rank):
            self.levels[r].append(i)
        if check and any(not lvl for lvl in self.levels):
            raise ValueError("rank function is not onto an interval starting at 0")
        if check:
            for i in range(n):
                if self.rank[i] > 0 and not self.down[i]:
                    raise ValueError(f"element {self.labels[i]!r} of positive rank covers nothing")
        self.action = action if action is not None else TRIVIAL_ACTION
        self._pairs = {}
        self._fixed = {}
        if check and action is not None:
            check_action(self)

    # ---------------------------------------------------------- structure

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def max_rank(self) -> int:
        return len(self.levels) - 1

    @property
    def has_bottom(self) -> bool:
        return len(self.levels) > 0 and len(self.levels[0]) == 1 and all(
            self.rank[i] == 0 or self.down[i] for i in range(len(self)))

    @property
    def has_top(self) -> bool:
        return len(self.levels) > 0 and len(self.levels[-1]) == 1 and all(
            self.rank[i] == self.max_rank or self.up[i] for i in range(len(self)))

    @property
    def is_bounded(self) -> bool:
        return self.has_bottom and self.has_top

    def covers(self) -> list:
        return [(self.labels[i], self.labels[j]) for i in range(len(self)) for j in self.up[i]]

    @cached_property
    def below(self) -> list:
        """Strict down-sets as bitmasks over element indices."""
        masks = [0] * len(self)
        for lvl in self.levels:
            for j in lvl:
                m = 0
                for i in self.down[j]:
                    m |= masks[i] | (1 << i)
                masks[j] = m
        return masks

    def leq(self, a, b) -> bool:
        i, j = self.index[a], self.index[b]
        return i == j or bool(self.below[j] >> i & 1)

    def comparable_pairs(self, a: int, b: int) -> list:
        """For ranks ``a < b``: per element ``y`` of rank ``b``, the elements
        of rank ``a`` strictly below it."""
        key = (a, b)
        if key not in self._pairs:
            low = self.levels[a]
            self._pairs[key] = [(y, [x for x in low if self.below[y] >> x & 1])
                                for y in self.levels[b]]
        return self._pairs[key]

    # --------------------------------------------------------- fixed points

    def fixed_mask(self, g) -> int:
        key = tuple(g)
        if key not in self._fixed:
            m = 0
            for i, lab in enumerate(self.labels):
                if self.action(g, lab) == lab:
                    m |= 1 << i
            self._fixed[key] = m
        return self._fixed[key]

    def permutation(self, g) -> list:
        return [self.index[self.action(g, lab)] for lab in self.labels]

    def __repr__(self) -> str:
        return f"GradedPoset(size={len(self)}, rank={self.max_rank})"


def check_action(P: GradedPoset):
    """Every class representative must act as a rank-preserving automorphism."""
    cover_set = {(i, j) for i in range(len(P)) for j in P.up[i]}
    for c in P.action.classes():
        g = P.action.representative(c)
        try:
            perm = P.permutation(g)
        except KeyError as exc:
            raise ValueError(f"class {c}: image {exc} is not an element") from None
        if sorted(perm) != list(range(len(P))):
            raise ValueError(f"class {c} does not act bijectively")
        if any(P.rank[perm[i]] != P.rank[i] for i in range(len(P))):
            raise ValueError(f"class {c} does not preserve rank")
        if {(perm[i], perm[j]) for i, j in cover_set} != cover_set:
            raise ValueError(f"class {c} does not preserve covers")


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


# ------------------------------------------------------------------ zoo

def boolean_poset(n: int) -> GradedPoset:
    """Subsets of ``[n]`` with the natural S_n action."""
    labels = [s for k in range(n + 1) for s in itertools.combinations(range(1, n + 1), k)]
    covers = [(s, tuple(sorted(s + (i,)))) for s in labels for i in range(1, n + 1) if i not in s]
    return GradedPoset(labels, [len(s) for s in labels], covers,
                       GroupAction("S", n, _subset_act))


def signed_boolean(n: int) -> GradedPoset:
    """Subsets of ``+-[n]`` containing no pair ``{i, -i}``, with B_n acting."""
    labels = []
    for k in range(n + 1):
        for support in itertools.combinations(range(1, n + 1), k):
            for signs in itertools.product((1, -1), repeat=k):
                labels.append(tuple(sorted(s * i for s, i in zip(signs, support))))
    covers = []
    for s in labels:
        used = {abs(i) for i in s}
        for i in range(1, n + 1):
            if i not in used:
                for x in (i, -i):
                    covers.append((s, tuple(sorted(s + (x,)))))
    return GradedPoset(labels, [len(s) for s in labels], covers,
                       GroupAction("B", n, _subset_act))


def tree_poset(t: int, n: int) -> GradedPoset:
    """Complete ``t``-ary tree of height ``n`` rooted at the minimum (words
    over ``[t]`` of length at most ``n``, prefix order)."""
    labels = [w for k in range(n + 1) for w in itertools.product(range(1, t + 1), repeat=k)]
    covers = [(w[:-1], w) for w in labels if w]
    return GradedPoset(labels, [len(w) for w in labels], covers)


def chain_poset(n: int) -> GradedPoset:
    """The ``n``-element chain ``0 < 1 < ... < n-1``."""
    return GradedPoset(list(range(n)), list(range(n)), [(i, i + 1) for i in range(n - 1)])


def rees_product(P: GradedPoset, Q: GradedPoset) -> GradedPoset:
    """Pairs ``(p, q)`` with ``rank p >= rank q``; ``(p, q)`` is covered by
    ``(p', q')`` iff ``p < p'`` is a cover and ``q' = q`` or covers ``q``."""
    elems = [(i, j) for i in range(len(P)) for j in range(len(Q)) if P.rank[i] >= Q.rank[j]]
    present = set(elems)
    labels = [(P.labels[i], Q.labels[j]) for i, j in elems]
    covers = []
    for i, j in elems:
        for i2 in P.up[i]:
            for j2 in [j] + Q.up[j]:
                if (i2, j2) in present:
                    covers.append(((P.labels[i], Q.labels[j]), (P.labels[i2], Q.labels[j2])))
    action = rees_action(P.action) if P.action is not TRIVIAL_ACTION else None
    return GradedPoset(labels, [P.rank[i] for i, _ in elems], covers, action)


def _subposet(P: GradedPoset, keep: Sequence[int], rank_shift: int = 0,
              extra_bottom: bool = False, extra_top: bool = False) -> GradedPoset:
    keep_set = set(keep)
    labels = [P.labels[i] for i in keep]
    ranks = [P.rank[i] + rank_shift for i in keep]
    covers = [(P.labels[i], P.labels[j]) for i in keep for j in P.up[i] if j in keep_set]
    if extra_bottom:
        if BOTTOM in P.index:
            raise ValueError("poset already has a label for an adjoined minimum")
        minimal = [P.labels[i] for i in keep if not any(d in keep_set for d in P.down[i])]
        covers += [(BOTTOM, m) for m in minimal]
        labels.insert(0, BOTTOM)
        ranks = [0] + [r + 1 for r in ranks]
    if extra_top:
        if TOP in P.index:
            raise ValueError("poset already has a label for an adjoined maximum")
        maximal = [P.labels[i] for i in keep if not any(u in keep_set for u in P.up[i])]
        covers += [(m, TOP) for m in maximal]
        top_rank = max(ranks, default=-1) + 1
        if not maximal and extra_bottom:
            covers.append((BOTTOM, TOP))
        labels.append(TOP)
        ranks.append(top_rank)
        if any(ranks[labels.index(m)] != top_rank - 1 for m in maximal):
            raise ValueError("maximal elements do not share a rank; cannot adjoin a graded top")
    action = P.action if P.action is not TRIVIAL_ACTION else None
    return GradedPoset(labels, ranks, covers, action)


def remove_top(P: GradedPoset) -> GradedPoset:
    """``P^-``."""
    if not P.has_top:
        raise ValueError("poset has no unique maximum")
    return _subposet(P, [i for i in range(len(P)) if i not in P.levels[-1]])


def remove_bottom(P: GradedPoset) -> GradedPoset:
    """``P_-``, with ranks shifted to start at 0."""
    if not P.has_bottom:
        raise ValueError("poset has no unique minimum")
    return _subposet(P, [i for i in range(len(P)) if P.rank[i] > 0], rank_shift=-1)


def remove_both(P: GradedPoset) -> GradedPoset:
    """``P-bar``: drop minimum and maximum."""
    return remove_bottom(remove_top(P))


def add_bounds(P: GradedPoset, bottom: bool = True, top: bool = True) -> GradedPoset:
    """Always adjoin a new minimum and/or maximum."""
    return _subposet(P, list(range(len(P))), rank_shift=0, extra_bottom=bottom, extra_top=top)


def bounded(P: GradedPoset) -> GradedPoset:
    """Adjoin a minimum and/or maximum only where missing."""
    if len(P) == 0:
        return add_bounds(P)
    return add_bounds(P, bottom=not P.has_bottom, top=not P.has_top)


def rank_select(P: GradedPoset, S: Iterable[int]) -> GradedPoset:
    """``P_S``: elements with rank in ``S`` plus the minimum and maximum of
    the bounded poset ``P``; induced order, ranks renumbered."""
    if not P.is_bounded:
        raise ValueError("rank selection needs a bounded poset")
    n = P.max_rank - 1
    sel = sorted(set(S))
    if any(s < 1 or s > n for s in sel):
        raise ValueError(f"rank set {sel} not inside [1, {n}]")
    chain = [0] + sel + [n + 1]
    labels, ranks, covers = [], [], []
    for new_rank, r in enumerate(chain):
        for i in P.levels[r]:
            labels.append(P.labels[i])
            ranks.append(new_rank)
    for a, b in zip(chain, chain[1:]):
        for y, xs in P.comparable_pairs(a, b):
            covers += [(P.labels[x], P.labels[y]) for x in xs]
    action = P.action if P.action is not TRIVIAL_ACTION else None
    return GradedPoset(labels, ranks, covers, action)


def order_ideal_Ij(n: int, j: int) -> GradedPoset:
    """Elements of ``(B_n - {0}) * C_n`` strictly below ``([n], j)``."""
    if not 0 <= j <= n - 1:
        raise ValueError(f"need 0 <= j <= n-1, got j={j}, n={n}")
    R = rees_product(remove_bottom(boolean_poset(n)), chain_poset(n))
    top = R.index[(tuple(range(1, n + 1)), j)]
    keep = [i for i in range(len(R)) if R.below[top] >> i & 1]
    return _subposet(R, keep)


# ------------------------------------------------------------ chain counts

def _count_through(P: GradedPoset, ranks: Sequence[int], mask: int | None) -> int:
    """Chains ``x_1 < ... < x_k`` with ``rank(x_i) = ranks[i]`` inside ``mask``."""
    if not ranks:
        return 1
    allowed = (lambda i: True) if mask is None else (lambda i: mask >> i & 1)
    counts = {i: 1 for i in P.levels[ranks[0]] if allowed(i)}
    for a, b in zip(ranks, ranks[1:]):
        nxt = {}
        for y, xs in P.comparable_pairs(a, b):
            if allowed(y):
                c = sum(counts.get(x, 0) for x in xs)
                if c:
                    nxt[y] = c
        counts = nxt
        if not counts:
            return 0
    return sum(counts.values())


def count_max_chains(P: GradedPoset) -> int:
    """Maximal chains of a bounded graded poset (layered transfer counts)."""
    if not P.is_bounded:
        P = bounded(P)
    return _count_through(P, list(range(P.max_rank + 1)), None)


def count_max_chains_fixed(P: GradedPoset, S: Iterable[int], g) -> int:
    """Maximal chains of ``P_S`` fixed by the group element ``g``."""
    return _count_through(P, sorted(set(S)), P.fixed_mask(g))


def _bounded_rank(P: GradedPoset) -> int:
    if not P.is_bounded:
        raise ValueError("flag characters need a bounded poset")
    return P.max_rank - 1


def alpha_character(P: GradedPoset, S: Iterable[int]) -> VirtualCharacter:
    """Permutation character on maximal chains of ``P_S``."""
    _bounded_rank(P)
    S = sorted(set(S))
    A = P.action
    return VirtualCharacter.from_function(
        A.group, A.n, lambda c, g: _count_through(P, S, P.fixed_mask(g)))


def flag_characters(P: GradedPoset) -> tuple:
    """``(alpha, beta)`` dicts over all ``S subset [n]`` of a bounded ``P``."""
    n = _bounded_rank(P)
    alpha = {S: alpha_character(P, S) for S in cb.subsets(range(1, n + 1))}
    beta = {S: beta_from_alpha(alpha, S) for S in alpha}
    return alpha, beta


def beta_from_alpha(alpha: dict, S: frozenset) -> VirtualCharacter:
    """``sum_{T subset S} (-1)^|S - T| alpha(T)``."""
    total = 0
    for T in cb.subsets(sorted(S)):
        term = alpha[T] if (len(S) - len(T)) % 2 == 0 else -alpha[T]
        total = term + total
    return total


def alpha_from_beta(beta: dict, T: frozenset) -> VirtualCharacter:
    total = 0
    for S in cb.subsets(sorted(T)):
        total = beta[S] + total
    return total


def beta_character(P: GradedPoset, S: Iterable[int]) -> VirtualCharacter:
    S = frozenset(S)
    alpha = {T: alpha_character(P, T) for T in cb.subsets(sorted(S))}
    return beta_from_alpha(alpha, S)


# ------------------------------------------------------- Euler characteristics

def reduced_euler(P: GradedPoset, mask: int | None = None) -> int:
    """Reduced Euler characteristic of the order complex of ``P`` (restricted
    to ``mask``), computed as the Moebius number of ``P`` with bounds adjoined."""
    allowed = (1 << len(P)) - 1 if mask is None else mask
    mu = {}
    total = 0
    for lvl in P.levels:
        for x in lvl:
            if allowed >> x & 1:
                m = -1 - sum(mu[y] for y in _bits(P.below[x] & allowed))
                mu[x] = m
                total += m
    return -1 - total


def lefschetz_character(P: GradedPoset) -> VirtualCharacter:
    """Lefschetz character, classwise the reduced Euler characteristic of the
    fixed subposet (Hopf trace)."""
    A = P.action
    return VirtualCharacter.from_function(
        A.group, A.n, lambda c, g: reduced_euler(P, P.fixed_mask(g)))


def homology_character(P: GradedPoset, r: int) -> VirtualCharacter:
    """Character of the top homology ``H_r`` of a Cohen-Macaulay poset."""
    return lefschetz_character(P) * (-1 if r % 2 else 1)


# --------------------------------------------------------- order complexes

class SimplicialComplex:
    """Order complex of a graded poset: faces are chains of elements in
    ``mask``, vertices are the poset elements."""

    def __init__(self, poset: GradedPoset, mask: int | None = None):
        self.poset = poset
        self.mask = (1 << len(poset)) - 1 if mask is None else mask

    @property
    def action(self) -> GroupAction:
        return self.poset.action

    def vertices(self) -> list:
        return [self.poset.labels[i] for i in _bits(self.mask)]

    @cached_property
    def _chain_counts(self) -> list:
        P, mask = self.poset, self.mask
        per = {}
        f = [1]
        for lvl in P.levels:
            for x in lvl:
                if not mask >> x & 1:
                    continue
                row = [0, 1]
                for y in _bits(P.below[x] & mask):
                    for k, c in enumerate(per[y]):
                        if k:
                            while len(row) <= k + 1:
                                row.append(0)
                            row[k + 1] += c
                per[x] = row
                for k, c in enumerate(row):
                    if c:
                        while len(f) <= k:
                            f.append(0)
                        f[k] += c
        return f

    def f_vector(self) -> list:
        """``[f_-1, f_0, f_1, ...]`` (``f_-1 = 1`` for the empty face)."""
        return list(self._chain_counts)

    @property
    def dimension(self) -> int:
        return len(self._chain_counts) - 2

    def faces(self, dim: int) -> list:
        """All faces of dimension ``dim``, as tuples of element indices."""
        P, mask = self.poset, self.mask
        out = []

        def extend(chain):
            if len(chain) == dim + 1:
                out.append(tuple(chain))
                return
            last = chain[-1]
            for lvl in P.levels[P.rank[last] + 1:]:
                for x in lvl:
                    if mask >> x & 1 and P.below[x] >> last & 1:
                        extend(chain + [x])

        if dim == -1:
            return [()]
        for x in _bits(mask):
            extend([x])
        return sorted(out)

    def fixed(self, g) -> "SimplicialComplex":
        return SimplicialComplex(self.poset, self.mask & self.poset.fixed_mask(g))

    def reduced_euler(self) -> int:
        return sum((-1) ** (k - 1) * c for k, c in enumerate(self._chain_counts))


def h_polynomial(complex_: SimplicialComplex) -> TPoly:
    """``sum_i f_(i-1) t^i (1-t)^(d-i)`` with ``d = dim + 1``."""
    f = complex_.f_vector()
    d = complex_.dimension + 1
    total = TPoly()
    for i in range(d + 1):
        total = total + TPoly.monomial(i, f[i]) * TPoly((1, -1)) ** (d - i)
    return total


def interval_poset(n: int) -> GradedPoset:
    """Nonempty closed intervals ``[a, b]`` of ``B_n - {0}`` ordered by
    containment; its order complex is the triangulation ``K_n``."""
    subsets = [s for k in range(1, n + 1) for s in itertools.combinations(range(1, n + 1), k)]
    labels = [(a, b) for d in range(n) for a in subsets for b in subsets
              if len(b) - len(a) == d and set(a) <= set(b)]
    covers = []
    for a, b in labels:
        for i in range(1, n + 1):
            if i not in b:
                covers.append(((a, b), (a, tuple(sorted(b + (i,))))))
            if i in a and len(a) > 1:
                covers.append(((a, b), (tuple(x for x in a if x != i), b)))
    return GradedPoset(labels, [len(b) - len(a) for a, b in labels], covers,
                       GroupAction("S", n, _interval_act))


KN_LIMIT = 5


def build_Kn(n: int) -> SimplicialComplex:
    if not 1 <= n <= KN_LIMIT:
        raise ValueError(f"K_n is only built for 1 <= n <= {KN_LIMIT}")
    return SimplicialComplex(interval_poset(n))


def b_eulerian(n: int, negative_first: bool = False) -> TPoly:
    """``sum t^|Des_B(w)|`` over ``B_n`` (or over ``w(1) < 0`` only)."""
    coeffs = [0] * (n + 2)
    for w in cb.signed_permutations(n):
        if negative_first and w[0] > 0:
            continue
        coeffs[len(cb.des_B(w))] += 1
    return TPoly(coeffs)


def b_plus_eulerian(n: int) -> TPoly:
    return b_eulerian(n, negative_first=True)


def stembridge_equivariant_h(n: int) -> SymF:
    """``sum_lam z_lam^-1 h(K_n^w, t) / (1-t)^(1+dim) prod (1 - t^lam_i) p_lam``.

    Uses the fixed subcomplex of a class representative directly.
    """
    K = build_Kn(n)
    total = SymF.zero(n)
    for lam in cb.partitions(n):
        fixed = K.fixed(cb.class_rep_S(lam))
        numer = h_polynomial(fixed)
        for part in lam:
            numer = numer * (ONE - TPoly.monomial(part))
        for _ in range(fixed.dimension + 1):
            numer = numer.div_one_minus_t()
        total = total + sym_p(lam, "x") * (numer * Fraction(1, cb.z_lambda(lam)))
    return total


# ---------------------------------------------------------------- oracles

def count_tree_multichains(t: int, S: Iterable[int], first_offset: int = 0) -> int:
    """Brute count of multichains ``tau_1 <= ... <= tau_k`` in ``T_{t,n}`` with
    ``rank(tau_1) <= s_1 - first_offset`` and rank jumps bounded by the gaps
    of ``S``; the words are enumerated explicitly."""
    s = sorted(S)
    if not s:
        return 1
    n = s[-1]
    words = [w for k in range(n + 1) for w in itertools.product(range(1, t + 1), repeat=k)]

    def extend(prev, j):
        if j == len(s):
            return 1
        limit = s[j] - s[j - 1]
        total = 0
        for w in words:
            if len(w) >= len(prev) and w[:len(prev)] == prev and len(w) - len(prev) <= limit:
                total += extend(w, j + 1)
        return total

    return sum(extend(w, 1) for w in words if len(w) <= s[0] - first_offset)


def _rank_fraction_free(rows: list) -> int:
    """Rank of a sparse integer matrix (rows as dicts) by fraction-free
    elimination; rows are divided by their content to keep entries small."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        pivot_row = rows.pop()
        col = min(pivot_row)
        p = pivot_row[col]
        rank += 1
        rest = []
        for r in rows:
            c = r.get(col)
            if c:
                new = {}
                for k in set(r) | set(pivot_row):
                    v = r.get(k, 0) * p - pivot_row.get(k, 0) * c
                    if v:
                        new[k] = v
                if new:
                    g = 0
                    for v in new.values():
                        g = gcd(g, v)
                    if g > 1:
                        new = {k: v // g for k, v in new.items()}
                    rest.append(new)
            else:
                rest.append(r)
        rows = rest
    return rank


def homology_ranks(P: GradedPoset, mask: int | None = None) -> list:
    """Reduced Betti numbers over Q of the order complex, by boundary ranks.

    Independent of :func:`reduced_euler`; meant for small posets only.
    """
    K = SimplicialComplex(P, mask)
    top = K.dimension
    faces = {d: K.faces(d) for d in range(-1, top + 1)}
    index = {d: {f: i for i, f in enumerate(faces[d])} for d in faces}
    ranks = {}
    for d in range(0, top + 1):
        rows = []
        for face in faces[d]:
            row = {}
            for i in range(len(face)):
                row[index[d - 1][face[:i] + face[i + 1:]]] = (-1) ** i
            rows.append(row)
        ranks[d] = _rank_fraction_free(rows)
    betti = []
    for d in range(-1, top + 1):
        betti.append(len(faces[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return betti


# ------------------------------------------------------------------- export

def render_label(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(render_label(x) for x in label) + ")"
    return str(label)


def export_edges(P: GradedPoset) -> str:
    """One cover per line: ``rank<TAB>from<TAB>to``, in element order."""
    lines = []
    for i in range(len(P)):
        for j in sorted(P.up[i]):
            lines.append(f"{P.rank[i]}\t{render_label(P.labels[i])}\t{render_label(P.labels[j])}")
    return "\n".join(lines) + ("\n" if lines else "")
