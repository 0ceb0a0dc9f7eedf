"""Partitions, (signed) permutations, standard Young (bi)tableaux and RSK.

Conventions used throughout the package:

* a partition is a weakly decreasing tuple of positive ints, ``()`` for the
  empty partition;
* a bipartition is a pair ``(pos, neg)`` of partitions;
* a permutation ``w`` of ``[n]`` is the tuple ``(w(1), ..., w(n))``; a signed
  permutation allows negative entries, ``w(-i) = -w(i)``;
* rank sets are ``frozenset`` of ints.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterator, NamedTuple, Sequence

from .tpoly import ONE, TPoly

Partition = tuple
Bipartition = tuple
RankSet = frozenset


# ---------------------------------------------------------------- partitions

@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def bipartitions(n: int) -> tuple:
    """All bipartitions ``(lam, mu)`` with ``|lam| + |mu| = n``."""
    out = []
    for k in range(n, -1, -1):
        for lam in partitions(k):
            for mu in partitions(n - k):
                out.append((lam, mu))
    return tuple(out)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def z_lambda(lam: Partition) -> int:
    """Centralizer order in S_n of a permutation of cycle type ``lam``."""
    out = 1
    for part, group in itertools.groupby(lam):
        m = len(list(group))
        out *= part ** m * factorial(m)
    return out


def z_bipartition(alpha: Partition, beta: Partition) -> int:
    """Centralizer order in B_n of the class with positive cycles ``alpha``
    and negative cycles ``beta``."""
    return 2 ** (len(alpha) + len(beta)) * z_lambda(alpha) * z_lambda(beta)


@lru_cache(maxsize=None)
def num_syt(lam: Partition) -> int:
    """``f^lam`` via the hook length formula."""
    n = sum(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return factorial(n) // hooks


def num_bitableaux(lam: Partition, mu: Partition) -> int:
    n = sum(lam) + sum(mu)
    return comb(n, sum(lam)) * num_syt(lam) * num_syt(mu)


def merge_partitions(a: Partition, b: Partition) -> Partition:
    """Union of parts (multiset), kept sorted."""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def format_partition(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def format_bipartition(bp: Bipartition) -> str:
    return "(" + format_partition(bp[0]) + "," + format_partition(bp[1]) + ")"


# ---------------------------------------------------------- rank sets, q-ints

def stable_subsets(a: int, b: int) -> list:
    """Subsets of ``[a, b]`` with no two consecutive integers.

    An empty interval (``b < a``) has the single stable subset ``{}``.
    """
    if b < a:
        return [frozenset()]
    out = []

    def grow(start: int, chosen: tuple):
        out.append(frozenset(chosen))
        for i in range(start, b + 1):
            grow(i + 2, chosen + (i,))

    grow(a, ())
    return out


def is_stable(s) -> bool:
    return all(i + 1 not in s for i in s)


def subsets(ground: Sequence[int]) -> Iterator[frozenset]:
    ground = list(ground)
    for k in range(len(ground) + 1):
        for c in itertools.combinations(ground, k):
            yield frozenset(c)


def q_int(m: int) -> TPoly:
    """``[m]_t = 1 + t + ... + t^(m-1)``."""
    if m <= 0:
        raise ValueError(f"q-integer needs a positive argument, got {m}")
    return TPoly((1,) * m)


def _gap_product(s, first_offset: int) -> TPoly:
    elems = sorted(s)
    if not elems:
        return ONE
    result = q_int(elems[0] + first_offset)
    for a, b in zip(elems, elems[1:]):
        result = result * q_int(b - a + 1)
    return result


def phi_t(s) -> TPoly:
    """``[s1+1]_t [s2-s1+1]_t ... [sk-s(k-1)+1]_t``; 1 for the empty set."""
    return _gap_product(s, 1)


def psi_t(s) -> TPoly:
    """Like :func:`phi_t` with first factor ``[s1]_t``; 1 for the empty set."""
    return _gap_product(s, 0)


# -------------------------------------------------------------- permutations

def permutations(n: int) -> Iterator[tuple]:
    return itertools.permutations(range(1, n + 1))


def signed_permutations(n: int) -> Iterator[tuple]:
    for w in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, w))


def apply_signed(w: Sequence[int], i: int) -> int:
    """Image of ``i`` in ``+-[n]`` under the signed permutation ``w``."""
    return w[i - 1] if i > 0 else -w[-i - 1]


def compose(u: Sequence[int], v: Sequence[int]) -> tuple:
    """``u o v`` for (signed) permutations."""
    return tuple(apply_signed(u, x) for x in v)


def inverse(w: Sequence[int]) -> tuple:
    """Inverse of a permutation or signed permutation."""
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[abs(x) - 1] = i if x > 0 else -i
    return tuple(out)


def cycle_type(w: Sequence[int]) -> Partition:
    n = len(w)
    seen = [False] * (n + 1)
    lengths = []
    for i in range(1, n + 1):
        if not seen[i]:
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = w[j - 1]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def signed_cycle_type(w: Sequence[int]) -> Bipartition:
    """Class label ``(alpha, beta)`` of a signed permutation: cycles of
    ``|w|`` split by the product of signs along them."""
    n = len(w)
    seen = [False] * (n + 1)
    pos, neg = [], []
    for i in range(1, n + 1):
        if seen[i]:
            continue
        length, sign, j = 0, 1, i
        while not seen[j]:
            seen[j] = True
            x = w[j - 1]
            sign *= 1 if x > 0 else -1
            j = abs(x)
            length += 1
        (pos if sign > 0 else neg).append(length)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def class_rep_S(lam: Partition) -> tuple:
    """Permutation of cycle type ``lam`` with cycles on consecutive blocks."""
    w, start = [], 1
    for part in lam:
        w.extend(range(start + 1, start + part))
        w.append(start)
        start += part
    return tuple(w)


def class_rep_B(alpha: Partition, beta: Partition) -> tuple:
    """Signed permutation with positive cycles ``alpha`` then negative
    cycles ``beta`` on consecutive blocks."""
    w, start = [], 1
    for part, sign in [(p, 1) for p in alpha] + [(p, -1) for p in beta]:
        w.extend(range(start + 1, start + part))
        w.append(sign * start)
        start += part
    return tuple(w)


def descents(w: Sequence[int]) -> RankSet:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def ascents(w: Sequence[int]) -> RankSet:
    return frozenset(range(1, len(w))) - descents(w)


class SignedDescent(NamedTuple):
    des: frozenset
    signs: tuple  # entries +1 / -1

    @property
    def n(self) -> int:
        return len(self.signs)

    def des_B(self) -> RankSet:
        n = self.n
        if n and self.signs[-1] > 0:
            return self.des | {n}
        return self.des

    def asc_B(self) -> RankSet:
        return frozenset(range(1, self.n + 1)) - self.des_B()


def _sdes(signs: Sequence[int], decreasing: Callable[[int], bool]) -> SignedDescent:
    n = len(signs)
    des = set()
    for i in range(1, n):
        a, b = signs[i - 1], signs[i]
        if (a > 0 and b < 0) or (a == b and decreasing(i)):
            des.add(i)
    return SignedDescent(frozenset(des), tuple(signs))


def signed_descent(w: Sequence[int]) -> SignedDescent:
    """``sDes(w)``: sign vector plus positions ``i`` where either the sign
    drops from + to -, or the sign repeats and ``|w(i)| > |w(i+1)|``."""
    signs = tuple(1 if x > 0 else -1 for x in w)
    return _sdes(signs, lambda i: abs(w[i - 1]) > abs(w[i]))


def des_B(w: Sequence[int]) -> RankSet:
    return signed_descent(w).des_B()


def asc_B(w: Sequence[int]) -> RankSet:
    return signed_descent(w).asc_B()


# ------------------------------------------------------------------ tableaux

@dataclass(frozen=True)
class Tableau:
    """Standard (or partial) Young tableau stored row by row."""

    rows: tuple
    _row_of: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if r))
        object.__setattr__(self, "_row_of",
                           {v: i for i, r in enumerate(self.rows) for v in r})

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> set:
        return set(self._row_of)

    def row_of(self, value: int) -> int:
        return self._row_of[value]

    def is_standard(self) -> bool:
        if sorted(self._row_of) != list(range(1, self.n + 1)):
            return False
        return self.is_increasing()

    def is_increasing(self) -> bool:
        rows = self.rows
        for i, r in enumerate(rows):
            if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
                return False
            if i and any(rows[i - 1][j] >= r[j] for j in range(len(r))):
                return False
        return is_partition(self.shape)

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows) or "."


def tableau_descents(q: Tableau) -> RankSet:
    """Entries ``i`` such that ``i + 1`` sits in a strictly lower row."""
    return frozenset(i for i in range(1, q.n) if q.row_of(i + 1) > q.row_of(i))


def syt(lam: Partition) -> Iterator[Tableau]:
    """Standard Young tableaux of shape ``lam``."""
    lam = tuple(lam)
    n = sum(lam)

    def fill(shape: list, k: int):
        # place k in a removable corner, then fill the rest with 1..k-1
        if k == 0:
            yield [[] for _ in lam]
            return
        for i, row in enumerate(shape):
            if row and (i + 1 == len(shape) or shape[i + 1] < row):
                shape[i] -= 1
                for rows in fill(shape, k - 1):
                    rows[i].append(k)
                    yield rows
                shape[i] += 1

    for rows in fill(list(lam), n):
        yield Tableau(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class Bitableau:
    plus: Tableau
    minus: Tableau

    @property
    def n(self) -> int:
        return self.plus.n + self.minus.n

    @property
    def shape(self) -> Bipartition:
        return self.plus.shape, self.minus.shape

    def signs(self) -> tuple:
        plus = self.plus.entries()
        return tuple(1 if i in plus else -1 for i in range(1, self.n + 1))

    def is_standard(self) -> bool:
        entries = sorted(self.plus.entries() | self.minus.entries())
        return (entries == list(range(1, self.n + 1))
                and self.plus.is_increasing() and self.minus.is_increasing())

    def __str__(self) -> str:
        return f"[{self.plus} | {self.minus}]"


def _relabel(t: Tableau, values: Sequence[int]) -> Tableau:
    return Tableau(tuple(tuple(values[v - 1] for v in r) for r in t.rows))


def bitableaux(lam: Partition, mu: Partition) -> Iterator[Bitableau]:
    """Standard Young bitableaux of shape ``(lam, mu)``."""
    k, n = sum(lam), sum(lam) + sum(mu)
    plus_shapes = list(syt(lam))
    minus_shapes = list(syt(mu))
    for chosen in itertools.combinations(range(1, n + 1), k):
        rest = [i for i in range(1, n + 1) if i not in set(chosen)]
        for p in plus_shapes:
            for m in minus_shapes:
                yield Bitableau(_relabel(p, chosen), _relabel(m, rest))


def sdes_tableau(q: Bitableau) -> SignedDescent:
    row = {}
    for part in (q.plus, q.minus):
        row.update({v: part.row_of(v) for v in part.entries()})
    return _sdes(q.signs(), lambda i: row[i + 1] > row[i])


def des_B_tableau(q: Bitableau) -> RankSet:
    return sdes_tableau(q).des_B()


def asc_B_tableau(q: Bitableau) -> RankSet:
    return sdes_tableau(q).asc_B()


# ----------------------------------------------------------------------- RSK

def _insert(rows: list, value: int) -> int:
    """Row-insert ``value``; return the index of the row that grew."""
    for i, row in enumerate(rows):
        j = bisect.bisect_right(row, value)
        if j == len(row):
            row.append(value)
            return i
        row[j], value = value, row[j]
    rows.append([value])
    return len(rows) - 1


def _rsk_words(pairs) -> tuple:
    p_rows, q_rows = [], []
    for position, value in pairs:
        i = _insert(p_rows, value)
        if i == len(q_rows):
            q_rows.append([])
        q_rows[i].append(position)
    return Tableau(tuple(map(tuple, p_rows))), Tableau(tuple(map(tuple, q_rows)))


def rsk(w: Sequence[int]) -> tuple:
    """Robinson-Schensted: ``w -> (P, Q)`` (insertion, recording)."""
    return _rsk_words(enumerate(w, start=1))


def rsk_B(w: Sequence[int]) -> tuple:
    """Type B Robinson-Schensted.

    Positions carrying positive values are inserted (by absolute value)
    into the plus parts, the others into the minus parts.
    """
    pos = [(i, x) for i, x in enumerate(w, start=1) if x > 0]
    neg = [(i, -x) for i, x in enumerate(w, start=1) if x < 0]
    p_plus, q_plus = _rsk_words(pos)
    p_minus, q_minus = _rsk_words(neg)
    return Bitableau(p_plus, p_minus), Bitableau(q_plus, q_minus)


# ------------------------------------------------------ Murnaghan-Nakayama

@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character ``chi^lam`` of S_n at cycle type ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in occupied:
            continue
        height = sum(1 for x in beta if c < x < b)
        new_beta = sorted((occupied - {b}) | {c}, reverse=True)
        new_lam = tuple(x - (length - 1 - i) for i, x in enumerate(new_beta))
        new_lam = tuple(p for p in new_lam if p > 0)
        total += (-1) ** height * mn_character(new_lam, rest)
    return total


def order_S(n: int) -> int:
    return factorial(n)


def order_B(n: int) -> int:
    return 2 ** n * factorial(n)


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def derangements(n: int) -> int:
    return sum((-1) ** k * factorial(n) // factorial(k) for k in range(n + 1))

