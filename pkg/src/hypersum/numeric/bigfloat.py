"""Binary floating point with precision carried on every value.

Thin immutable wrapper over mpmath's raw ``libmp`` routines, which take
the precision and rounding mode as explicit arguments.  There is no
ambient context: a binary operation rounds to the larger precision of its
operands, and plain ints or Fractions adopt the precision of the BigFloat
they meet.
"""
from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache

from mpmath import libmp

from ..exact import ExactValue

__all__ = ["BigFloat", "NumericValue", "bf_pi", "bf_sqrt2", "ev_to_numeric", "GUARD_BITS", "bits_to_digits"]

_RND = libmp.round_nearest

#: extra bits carried by series summation and acceleration
GUARD_BITS = 32


def bits_to_digits(bits: int) -> int:
    return max(1, int(bits * math.log10(2)))


class BigFloat:
    __slots__ = ("_mpf", "prec")

    def __init__(self, value=0, prec: int = 53):
        if prec < 2:
            raise ValueError("precision must be at least 2 bits")
        self.prec = int(prec)
        if isinstance(value, BigFloat):
            self._mpf = libmp.mpf_pos(value._mpf, self.prec, _RND)
        elif isinstance(value, tuple):
            self._mpf = libmp.mpf_pos(value, self.prec, _RND)
        elif isinstance(value, bool):
            raise TypeError("bool is not a number here")
        elif isinstance(value, int):
            self._mpf = libmp.from_int(value, self.prec, _RND)
        elif isinstance(value, Fraction):
            self._mpf = libmp.from_rational(value.numerator, value.denominator, self.prec, _RND)
        elif isinstance(value, float):
            self._mpf = libmp.from_float(value, self.prec, _RND)
        elif isinstance(value, str):
            self._mpf = libmp.from_str(value.strip(), self.prec, _RND)
        else:
            raise TypeError(f"cannot make a BigFloat from {type(value).__name__}")

    @classmethod
    def _raw(cls, mpf, prec):
        obj = cls.__new__(cls)
        obj._mpf = mpf
        obj.prec = prec
        return obj

    @classmethod
    def from_fixed(cls, man: int, shift: int, prec: int) -> "BigFloat":
        """The value ``man * 2**(-shift)`` rounded to ``prec`` bits."""
        return cls._raw(libmp.from_man_exp(man, -shift, prec, _RND), prec)

    def with_prec(self, prec: int) -> "BigFloat":
        return BigFloat(self, prec)

    # coercion -------------------------------------------------------------
    def _other(self, other):
        if isinstance(other, BigFloat):
            return other._mpf, max(self.prec, other.prec)
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            return BigFloat(other, self.prec)._mpf, self.prec
        return None, None

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        o, p = self._other(other)
        if o is None:
            return NotImplemented
        return BigFloat._raw(libmp.mpf_add(self._mpf, o, p, _RND), p)

    __radd__ = __add__

    def __sub__(self, other):
        o, p = self._other(other)
        if o is None:
            return NotImplemented
        return BigFloat._raw(libmp.mpf_sub(self._mpf, o, p, _RND), p)

    def __rsub__(self, other):
        o, p = self._other(other)
        if o is None:
            return NotImplemented
        return BigFloat._raw(libmp.mpf_sub(o, self._mpf, p, _RND), p)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return BigFloat._raw(libmp.mpf_mul_int(self._mpf, other, self.prec, _RND), self.prec)
        o, p = self._other(other)
        if o is None:
            return NotImplemented
        return BigFloat._raw(libmp.mpf_mul(self._mpf, o, p, _RND), p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o, p = self._other(other)
        if o is None:
            return NotImplemented
        if o == libmp.fzero:
            raise ZeroDivisionError("BigFloat division by zero")
        return BigFloat._raw(libmp.mpf_div(self._mpf, o, p, _RND), p)

    def __rtruediv__(self, other):
        o, p = self._other(other)
        if o is None:
            return NotImplemented
        if self._mpf == libmp.fzero:
            raise ZeroDivisionError("BigFloat division by zero")
        return BigFloat._raw(libmp.mpf_div(o, self._mpf, p, _RND), p)

    def __pow__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return BigFloat._raw(libmp.mpf_pow_int(self._mpf, other, self.prec, _RND), self.prec)
        o, p = self._other(other)
        if o is None:
            return NotImplemented
        return BigFloat._raw(libmp.mpf_pow(self._mpf, o, p, _RND), p)

    def __neg__(self):
        return BigFloat._raw(libmp.mpf_neg(self._mpf), self.prec)

    def __pos__(self):
        return self

    def __abs__(self):
        return BigFloat._raw(libmp.mpf_abs(self._mpf), self.prec)

    def ldexp(self, n: int) -> "BigFloat":
        return BigFloat._raw(libmp.mpf_shift(self._mpf, n), self.prec)

    def sqrt(self) -> "BigFloat":
        return BigFloat._raw(libmp.mpf_sqrt(self._mpf, self.prec, _RND), self.prec)

    def exp(self) -> "BigFloat":
        return BigFloat._raw(libmp.mpf_exp(self._mpf, self.prec, _RND), self.prec)

    def log(self) -> "BigFloat":
        return BigFloat._raw(libmp.mpf_log(self._mpf, self.prec, _RND), self.prec)

    # comparison -------------------------------------------------------------
    def _cmp(self, other):
        o, _ = self._other(other)
        if o is None:
            return NotImplemented
        return libmp.mpf_cmp(self._mpf, o)

    def __eq__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __hash__(self):
        return libmp.mpf_hash(self._mpf)

    def __bool__(self):
        return self._mpf != libmp.fzero

    def is_zero(self) -> bool:
        return self._mpf == libmp.fzero

    def sign(self) -> int:
        return libmp.mpf_sign(self._mpf)

    def mag(self) -> int:
        """An integer ``e`` with ``|x| < 2**e`` (minus infinity-ish for 0)."""
        if self._mpf == libmp.fzero:
            return -(10**9)
        sign, man, exp, bc = self._mpf
        return exp + bc

    # conversion -------------------------------------------------------------
    def __float__(self):
        return libmp.to_float(self._mpf)

    def __int__(self):
        return int(libmp.to_int(self._mpf))

    def nint(self) -> int:
        return int(libmp.to_int(libmp.mpf_nint(self._mpf, self.prec, _RND)))

    def to_fraction(self) -> Fraction:
        sign, man, exp, _ = self._mpf
        man = -int(man) if sign else int(man)
        return Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2 ** (-exp))

    def to_fixed(self, shift: int) -> int:
        """Nearest integer to ``x * 2**shift``."""
        return int(libmp.to_int(libmp.mpf_nint(libmp.mpf_shift(self._mpf, shift), self.prec + shift + 8, _RND)))

    def to_decimal(self, digits: int | None = None) -> str:
        """Decimal string with ``digits`` significant digits."""
        if digits is None:
            digits = bits_to_digits(self.prec)
        return libmp.to_str(self._mpf, digits)

    def __str__(self):
        return self.to_decimal()

    def __repr__(self):
        return f"BigFloat('{self.to_decimal()}', prec={self.prec})"

    def __reduce__(self):
        return (BigFloat._raw, (self._mpf, self.prec))


@lru_cache(maxsize=64)
def _pi_mpf(prec: int):
    return libmp.mpf_pi(prec, _RND)


def bf_pi(prec: int) -> BigFloat:
    return BigFloat._raw(_pi_mpf(prec), prec)


def bf_sqrt2(prec: int) -> BigFloat:
    return BigFloat(2, prec).sqrt()


def ev_to_numeric(x: ExactValue, precision: int) -> BigFloat:
    """Evaluate an exact value, working with guard bits and rounding once."""
    wp = precision + GUARD_BITS
    pi = bf_pi(wp)
    sqrt2 = bf_sqrt2(wp)
    sqrt_pi = pi.sqrt()
    total = BigFloat(0, wp)
    for (s, h), c in x.items():
        term = BigFloat(c, wp)
        if s:
            term = term * sqrt2
        k, odd = divmod(h, 2)
        if k:
            term = term * pi**k
        if odd:
            term = term * sqrt_pi
        total = total + term
    return total.with_prec(precision)


@dataclass(frozen=True)
class NumericValue:
    """A numeric estimate together with an absolute error estimate.

    For ``method == "terminating"`` the value came from an exact rational
    sum (kept in ``exact``) and ``error_bound`` is zero.  For accelerated
    sums the bound is an order-difference heuristic, not a guarantee.
    """

    estimate: BigFloat
    error_bound: BigFloat
    terms_used: int
    method: str
    exact: Fraction | None = None
    detail: str = ""

    def __post_init__(self):
        if self.error_bound < 0:
            raise ValueError("error bound must be non-negative")
        if self.method == "terminating" and not self.error_bound.is_zero():
            raise ValueError("terminating sums carry no error")
