"""Gamma function at arbitrary precision via Spouge's approximation.

    Gamma(z+1) = (z+a)**(z+1/2) * exp(-(z+a)) * (c0 + sum_k c_k/(z+k) + eps)

with c0 = sqrt(2 pi), c_k = (-1)**(k-1) (a-k)**(k-1/2) exp(a-k) / (k-1)!
for k = 1..a-1, and relative error |eps| <= a**(-1/2) (2 pi)**(-(a+1/2))
for z >= 0.  The parameter ``a`` is picked from the target precision, so
the error bound scales with it; the alternating coefficients cancel badly,
which is paid for with extra working bits.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import PoleError
from .bigfloat import BigFloat, bf_pi

__all__ = ["num_gamma", "spouge_parameter", "spouge_error_bound_log2"]


def spouge_parameter(precision: int) -> int:
    """Smallest ``a`` whose error bound is below ``2**-(precision + 10)``."""
    a = 2
    while spouge_error_bound_log2(a) > -(precision + 10):
        a += 1
    return a


def spouge_error_bound_log2(a: int) -> float:
    return -0.5 * math.log2(a) - (a + 0.5) * math.log2(2 * math.pi)


def _working_bits(precision: int, a: int) -> int:
    # the largest |c_k| is about exp(a) (2 pi)**-1/2 ... sqrt(a); cancellation
    # in the sum costs roughly a*log2(e) bits on top of the target
    return precision + int(a * math.log2(math.e)) + 40


@lru_cache(maxsize=32)
def _spouge_coefficients(a: int, wp: int) -> tuple:
    pi = bf_pi(wp)
    coeffs = [(2 * pi).sqrt()]
    fact = 1
    for k in range(1, a):
        if k > 1:
            fact *= k - 1
        base = BigFloat(a - k, wp)
        c = base ** BigFloat(Fraction(2 * k - 1, 2), wp) * BigFloat(a - k, wp).exp() / fact
        coeffs.append(c if k % 2 else -c)
    return tuple(coeffs)


def _as_bigfloat(x, wp: int) -> BigFloat:
    if isinstance(x, BigFloat):
        return x.with_prec(max(wp, x.prec))
    return BigFloat(x if not isinstance(x, str) else Fraction(x), wp)


def num_gamma(x, precision: int) -> BigFloat:
    """Gamma(x) rounded to ``precision`` bits.

    ``x`` may be a BigFloat, int or Fraction.  Arguments left of 1 are moved
    right with Gamma(x) = Gamma(x+n) / (x (x+1) ... (x+n-1)).
    """
    if precision < 8:
        raise ValueError("precision too small")
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        q = Fraction(x)
        if q.denominator == 1 and q <= 0:
            raise PoleError(f"gamma has a pole at {q}")
    a = spouge_parameter(precision)
    wp = _working_bits(precision, a)
    xv = _as_bigfloat(x, wp)
    nearest = xv.nint()
    if nearest <= 0:
        dist = abs(xv - nearest)
        # within half an ulp of the input's own precision
        in_prec = x.prec if isinstance(x, BigFloat) else wp
        if dist.is_zero() or dist.mag() <= -in_prec + max(1, abs(nearest).bit_length()) - 1:
            raise PoleError(f"gamma argument {xv.to_decimal(20)} is at a pole")

    shift_div = BigFloat(1, wp)
    if xv < 1:
        n = 1 - int(xv) if xv < 0 else 1
        n = max(n, 1)
        while xv + n < 1:
            n += 1
        for i in range(n):
            shift_div = shift_div * (xv + i)
        xv = xv + n

    z = xv - 1
    coeffs = _spouge_coefficients(a, wp)
    acc = coeffs[0]
    for k in range(1, a):
        acc = acc + coeffs[k] / (z + k)
    za = z + a
    half = BigFloat(Fraction(1, 2), wp)
    result = za ** (z + half) * (-za).exp() * acc / shift_div
    return result.with_prec(precision)
