"""Truncated power series in ``z`` with :class:`SymF` coefficients.

The coefficient of ``z^d`` is kept homogeneous of degree ``d``; every
generating function built here has that property. Quotients whose
denominator has constant term ``1 - t`` are formed after dividing
numerator and denominator by ``1 - t`` so arithmetic stays polynomial.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

from .symfunc import SymF, sym_e, sym_h
from .tpoly import ONE, T, TPoly

DEFAULT_BOUND_A = 8
DEFAULT_BOUND_B = 6


class ZSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[SymF]):
        coeffs = tuple(coeffs)
        for d, c in enumerate(coeffs):
            if c.degree != d:
                raise ValueError(f"coefficient of z^{d} has degree {c.degree}")
        self.coeffs = coeffs

    @property
    def bound(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, bound: int) -> "ZSeries":
        return cls([SymF.one()] + [SymF.zero(d) for d in range(1, bound + 1)])

    @classmethod
    def from_function(cls, bound: int, f: Callable[[int], SymF]) -> "ZSeries":
        return cls([f(d) for d in range(bound + 1)])

    def __getitem__(self, d: int) -> SymF:
        return self.coeffs[d]

    def coefficient(self, d: int) -> SymF:
        return self.coeffs[d]

    def truncate(self, bound: int) -> "ZSeries":
        if bound > self.bound:
            raise ValueError("cannot extend a truncated series")
        return ZSeries(self.coeffs[: bound + 1])

    def _align(self, other: "ZSeries"):
        n = min(self.bound, other.bound)
        return self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZSeries):
            return NotImplemented
        a, b = self._align(other)
        return a == b

    def __add__(self, other: "ZSeries") -> "ZSeries":
        a, b = self._align(other)
        return ZSeries([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "ZSeries":
        return ZSeries([-c for c in self.coeffs])

    def __sub__(self, other: "ZSeries") -> "ZSeries":
        return self + (-other)

    def __mul__(self, other) -> "ZSeries":
        if isinstance(other, ZSeries):
            a, b = self._align(other)
            out = []
            for d in range(len(a)):
                acc = SymF.zero(d)
                for i in range(d + 1):
                    if a[i] and b[d - i]:
                        acc = acc + a[i] * b[d - i]
                out.append(acc)
            return ZSeries(out)
        return self.scale(other)

    def __rmul__(self, other) -> "ZSeries":
        return self.scale(other)

    def scale(self, c) -> "ZSeries":
        """Multiply every coefficient by a ``t``-polynomial or number."""
        return ZSeries([x.scale(c) for x in self.coeffs])

    def scale_z(self, c) -> "ZSeries":
        """Substitute ``z -> c z``: the ``z^d`` coefficient gets ``c^d``."""
        c = TPoly.coerce(c)
        out, power = [], ONE
        for x in self.coeffs:
            out.append(x.scale(power))
            power = power * c
        return ZSeries(out)

    def reciprocal(self) -> "ZSeries":
        if self.coeffs[0] != SymF.one():
            raise ValueError("reciprocal needs constant term 1")
        inv = [SymF.one()]
        for d in range(1, self.bound + 1):
            acc = SymF.zero(d)
            for i in range(1, d + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * inv[d - i]
            inv.append(-acc)
        return ZSeries(inv)

    def map(self, f: Callable[[SymF], SymF]) -> "ZSeries":
        return ZSeries([f(c) for c in self.coeffs])

    def div_one_minus_t(self) -> "ZSeries":
        return self.map(lambda c: c.map_coeffs(TPoly.div_one_minus_t))

    def __truediv__(self, other: "ZSeries") -> "ZSeries":
        return quotient(self, other)

    def __repr__(self) -> str:
        return f"ZSeries(bound={self.bound})"


def quotient(num: ZSeries, den: ZSeries) -> ZSeries:
    """``num / den`` where ``den`` has constant term 1 or ``1 - t``."""
    const = den[0].coefficient((), ())
    if den[0] != SymF.one():
        if const != TPoly((1, -1)) or len(den[0].terms) != 1:
            raise ValueError(f"unsupported constant term {const} in denominator")
        num, den = num.div_one_minus_t(), den.div_one_minus_t()
    return num * den.reciprocal()


@lru_cache(maxsize=None)
def E_series(vars: str, bound: int) -> ZSeries:
    """``E(vars; z) = sum_n e_n z^n``."""
    return ZSeries([sym_e(d, vars) for d in range(bound + 1)])


@lru_cache(maxsize=None)
def H_series(vars: str, bound: int) -> ZSeries:
    return ZSeries([sym_h(d, vars) for d in range(bound + 1)])


def constant(c, bound: int) -> ZSeries:
    return ZSeries.one(bound).scale(c)


def mul(a: ZSeries, b: ZSeries) -> ZSeries:
    return a * b


def add(a: ZSeries, b: ZSeries) -> ZSeries:
    return a + b


def reciprocal(a: ZSeries) -> ZSeries:
    return a.reciprocal()


def scale_z(a: ZSeries, c) -> ZSeries:
    return a.scale_z(c)


# ---------------------------------------------------------- symmetric split

def gamma_split(f, n: int):
    """Unique ``f = f_plus + f_minus`` with ``f_plus`` palindromic about
    ``n/2`` and ``f_minus`` palindromic about ``(n-1)/2``.

    With ``g = t^n f(1/t) = f_plus + t f_minus`` one gets
    ``f_minus = (f - g) / (1 - t)``. Accepts a ``TPoly`` or a ``SymF``.
    """
    if isinstance(f, SymF):
        plus, minus = {}, {}
        for key, poly in f.terms.items():
            plus[key], minus[key] = gamma_split(poly, n)
        return SymF(plus, f.degree), SymF(minus, f.degree)
    f = TPoly.coerce(f)
    if f.degree > n:
        raise ValueError(f"t-degree {f.degree} too large for a split with centers {n}/2, ({n}-1)/2")
    minus = (f - f.reverse(n)).div_one_minus_t()
    return f - minus, minus


# ------------------------------------------------------- generating functions
#
# Denominators shared by the type A and type B identities.

def _rees_denominator(E: ZSeries) -> ZSeries:
    """``E(tz) - t E(z)``."""
    return E.scale_z(T) - E.scale(T)


@lru_cache(maxsize=None)
def xi_series(bound: int = DEFAULT_BOUND_A) -> ZSeries:
    """``(1 - t) / (E(x;tz) - t E(x;z))``."""
    E = E_series("x", bound)
    return quotient(constant(1 - T, bound), _rees_denominator(E))


@lru_cache(maxsize=None)
def gamma_series(bound: int = DEFAULT_BOUND_A) -> ZSeries:
    """``(1 - t) E(x;tz) / (E(x;tz) - t E(x;z))``."""
    E = E_series("x", bound)
    return quotient(E.scale_z(T).scale(1 - T), _rees_denominator(E))


@lru_cache(maxsize=None)
def ij_series(bound: int = DEFAULT_BOUND_A) -> ZSeries:
    """``(1 - t) E(x;z) / (E(x;tz) - t E(x;z))``: homology of the ideals ``I_j(B_n)``."""
    E = E_series("x", bound)
    return quotient(E.scale(1 - T), _rees_denominator(E))


def _typeB_parts(bound: int):
    Ex, Ey = E_series("x", bound), E_series("y", bound)
    Exy = Ex * Ey
    return Ex, Ey, _rees_denominator(Exy)


@lru_cache(maxsize=None)
def xi_plus_series(bound: int = DEFAULT_BOUND_B) -> ZSeries:
    """``(E(x;tz) - t E(x;z)) / (E(x;tz)E(y;tz) - t E(x;z)E(y;z))``."""
    Ex, _, den = _typeB_parts(bound)
    return quotient(_rees_denominator(Ex), den)


@lru_cache(maxsize=None)
def xi_minus_series(bound: int = DEFAULT_BOUND_B) -> ZSeries:
    """``(E(x;z) - E(x;tz)) / (E(x;tz)E(y;tz) - t E(x;z)E(y;z))``."""
    Ex, _, den = _typeB_parts(bound)
    return quotient(Ex - Ex.scale_z(T), den)


@lru_cache(maxsize=None)
def xi_combined_series(bound: int = DEFAULT_BOUND_B) -> ZSeries:
    """``(1 - t) E(x;z) / (E(x;tz)E(y;tz) - t E(x;z)E(y;z))``."""
    Ex, _, den = _typeB_parts(bound)
    return quotient(Ex.scale(1 - T), den)


@lru_cache(maxsize=None)
def gamma_plus_series(bound: int = DEFAULT_BOUND_B) -> ZSeries:
    """``E(x;z)E(x;tz)(E(y;tz) - t E(y;z)) / den``."""
    Ex, Ey, den = _typeB_parts(bound)
    return quotient(Ex * Ex.scale_z(T) * _rees_denominator(Ey), den)


@lru_cache(maxsize=None)
def gamma_minus_series(bound: int = DEFAULT_BOUND_B) -> ZSeries:
    """``t E(x;z)E(x;tz)(E(y;z) - E(y;tz)) / den``."""
    Ex, Ey, den = _typeB_parts(bound)
    return quotient((Ex * Ex.scale_z(T) * (Ey - Ey.scale_z(T))).scale(T), den)


@lru_cache(maxsize=None)
def signed_rees_series(bound: int = DEFAULT_BOUND_B) -> ZSeries:
    """``(1 - t) E(y;z) / den``: homology of ``(sB_n - {0}) * T_{t,n-1}``."""
    _, Ey, den = _typeB_parts(bound)
    return quotient(Ey.scale(1 - T), den)


@lru_cache(maxsize=None)
def signed_rees_top_series(bound: int = DEFAULT_BOUND_B) -> ZSeries:
    """``(1 - t) E(y;z)E(x;tz)E(y;tz) / den``: homology of ``(sB_n * T_{t,n})_-``."""
    Ex, Ey, den = _typeB_parts(bound)
    return quotient((Ey * (Ex * Ey).scale_z(T)).scale(1 - T), den)


@lru_cache(maxsize=None)
def kn_series(bound: int = DEFAULT_BOUND_A) -> ZSeries:
    """``H(z)(H(tz) - t H(z)) / (H(tz)^2 - t H(z)^2)`` in ``x``."""
    H = H_series("x", bound)
    Ht = H.scale_z(T)
    return quotient(H * (Ht - H.scale(T)), Ht * Ht - (H * H).scale(T))


@lru_cache(maxsize=None)
def local_kn_series(bound: int = DEFAULT_BOUND_A) -> ZSeries:
    """``(H(tz) - t H(z)) / (H(tz)^2 - t H(z)^2)`` in ``x``."""
    H = H_series("x", bound)
    Ht = H.scale_z(T)
    return quotient(Ht - H.scale(T), Ht * Ht - (H * H).scale(T))


@lru_cache(maxsize=None)
def toric_B_series(bound: int = DEFAULT_BOUND_B) -> ZSeries:
    """``(1 - t) H(x;z) H(x;tz) / (H(x,y;tz) - t H(x,y;z))``."""
    Hx, Hxy = H_series("x", bound), H_series("xy", bound)
    return quotient((Hx * Hx.scale_z(T)).scale(1 - T), _rees_denominator(Hxy))
