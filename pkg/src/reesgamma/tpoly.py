"""Polynomials in a single variable ``t`` with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Number = Union[int, Fraction]


def _strip(coeffs: Iterable[Number]) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c
                 for c in out)


class TPoly:
    """Immutable dense polynomial ``c_0 + c_1 t + ... + c_d t^d``.

    Coefficients are ``int`` or ``Fraction``; floats are rejected so that
    nothing inexact can leak into a verification.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Number] = ()):
        coeffs = tuple(coeffs)
        for c in coeffs:
            if not isinstance(c, Rational):
                raise TypeError(f"TPoly coefficients must be exact, got {c!r}")
        self.coeffs = _strip(coeffs)
        self._hash = None

    @classmethod
    def const(cls, c: Number) -> "TPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> "TPoly":
        if degree < 0:
            raise ValueError("negative degree")
        return cls((0,) * degree + (c,))

    @classmethod
    def coerce(cls, other) -> "TPoly":
        if isinstance(other, TPoly):
            return other
        if isinstance(other, Rational):
            return cls((other,))
        raise TypeError(f"cannot coerce {other!r} to TPoly")

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def coeff(self, i: int) -> Number:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __add__(self, other) -> "TPoly":
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "TPoly":
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TPoly":
        return TPoly.coerce(other) - self

    def __mul__(self, other) -> "TPoly":
        if isinstance(other, Rational):
            if other == 0:
                return ZERO
            return TPoly(c * other for c in self.coeffs)
        if not isinstance(other, TPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, k: int) -> "TPoly":
        """Multiply by ``t^k``; negative ``k`` requires divisibility."""
        if k >= 0:
            return TPoly((0,) * k + self.coeffs)
        if any(self.coeffs[:-k]):
            raise ValueError(f"{self} is not divisible by t^{-k}")
        return TPoly(self.coeffs[-k:])

    def reverse(self, m: int) -> "TPoly":
        """Return ``t^m f(1/t)``; requires ``deg f <= m``."""
        if self.degree > m:
            raise ValueError(f"degree {self.degree} exceeds reversal bound {m}")
        padded = self.coeffs + (0,) * (m + 1 - len(self.coeffs))
        return TPoly(reversed(padded))

    def is_symmetric(self, m: int) -> bool:
        """True if the coefficients are palindromic about ``m/2``."""
        if self.degree > m:
            return False
        return self.reverse(m) == self

    def divmod(self, other: "TPoly") -> tuple["TPoly", "TPoly"]:
        other = TPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return ZERO, self
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1]
            if c:
                q = Fraction(c, lead) if isinstance(c, int) and isinstance(lead, int) else c / lead
                quot[k] = q
                for j, d in enumerate(other.coeffs):
                    rem[k + j] -= q * d
        return TPoly(quot), TPoly(rem)

    def divexact(self, other) -> "TPoly":
        q, r = self.divmod(other)
        if r:
            raise ValueError(f"{self} is not divisible by {other}")
        return q

    def div_one_minus_t(self) -> "TPoly":
        """Exact division by ``1 - t`` (synthetic division at ``t = 1``)."""
        # f = (1 - t) g  <=>  g_k = sum_{i <= k} f_i, and the full sum vanishes
        out, acc = [], 0
        for c in self.coeffs:
            acc += c
            out.append(acc)
        if acc != 0:
            raise ValueError(f"{self} is not divisible by (1 - t)")
        return TPoly(out[:-1])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            else:
                cs = str(c)
                if mono and "/" in cs:
                    cs = f"({cs})"
                term = cs + ("*" + mono if mono else "")
            parts.append(term)
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TPoly({str(self)!r})"


ZERO = TPoly()
ONE = TPoly((1,))
T = TPoly((0, 1))
ONE_MINUS_T = TPoly((1, -1))


def one_plus_t_power(k: int) -> TPoly:
    """``(1 + t)^k`` for ``k >= 0``."""
    return TPoly((1, 1)) ** k


def gamma_basis(m: int, i: int) -> TPoly:
    """The binomial ``t^i (1 + t)^(m - 2i)``."""
    if i < 0 or m - 2 * i < 0:
        raise ValueError(f"no gamma basis element for m={m}, i={i}")
    return one_plus_t_power(m - 2 * i).shift(i)


class NotSymmetricError(ValueError):
    """Raised when a gamma expansion is requested for a non-palindromic polynomial."""


def gamma_expand(f: TPoly, m: int) -> list:
    """Coefficients ``g_i`` with ``f = sum_i g_i t^i (1+t)^(m-2i)``.

    Peels the lowest coefficient off at each step. Raises
    ``NotSymmetricError`` if ``f`` is not symmetric about ``m/2``.
    """
    f = TPoly.coerce(f)
    if not f.is_symmetric(m):
        raise NotSymmetricError(f"{f} is not centrally symmetric about {m}/2")
    out = []
    rest = f
    for i in range(m // 2 + 1):
        g = rest.coeff(i)
        out.append(g)
        if g:
            rest = rest - gamma_basis(m, i) * g
    if rest:  # cannot happen for a symmetric input
        raise NotSymmetricError(f"{f} left remainder {rest}")
    return out


def from_gamma(coeffs, m: int) -> TPoly:
    total = ZERO
    for i, g in enumerate(coeffs):
        if g:
            total = total + gamma_basis(m, i) * g
    return total
