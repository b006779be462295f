"""Generalized hypergeometric series: specification, classification, evaluation."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

from ..errors import BudgetExceededError, DivergentError, DomainError, NumericalBreakdownError
from ..exact import to_rational
from .accel import METHODS, best_order, levin_u_table, wynn_epsilon_table
from .bigfloat import GUARD_BITS, BigFloat, NumericValue

__all__ = [
    "SeriesSpec",
    "ConvergenceClass",
    "convergence_class",
    "pfq_exact_sum",
    "pfq_eval",
    "partial_sums",
]

# extra fixed-point bits so that per-term truncation (up to ~k**2 ulps
# after k terms) stays below the working precision
_FIXED_EXTRA = 32


def _nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def _fmt(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class SeriesSpec:
    """``pFq(numerator; denominator; argument)`` with rational data."""

    numerator: tuple
    denominator: tuple
    argument: Fraction

    def __init__(self, numerator: Iterable, denominator: Iterable, argument=1):
        object.__setattr__(self, "numerator", tuple(to_rational(a) for a in numerator))
        object.__setattr__(self, "denominator", tuple(to_rational(b) for b in denominator))
        object.__setattr__(self, "argument", to_rational(argument))
        self._validate()

    def _validate(self):
        n = self.terminating_index
        for b in self.denominator:
            if _nonpositive_int(b):
                # (b)_k vanishes from k = -b + 1 on; the series must stop first
                if n is None or n > -b:
                    raise DomainError(f"denominator parameter {b} is a non-positive integer")
        if n is None and self.p > self.q + 1:
            raise DomainError(f"p={self.p} > q+1={self.q + 1}: series diverges for z != 0")

    @property
    def p(self) -> int:
        return len(self.numerator)

    @property
    def q(self) -> int:
        return len(self.denominator)

    @property
    def omega(self) -> Fraction:
        """Sum of denominator parameters minus sum of numerator parameters."""
        return sum(self.denominator, Fraction(0)) - sum(self.numerator, Fraction(0))

    @property
    def terminating_index(self) -> int | None:
        """Index of the last non-zero term when the series is a polynomial."""
        stops = [-a for a in self.numerator if _nonpositive_int(a)]
        if self.argument == 0:
            stops.append(Fraction(0))
        return int(min(stops)) if stops else None

    def normalized(self) -> "SeriesSpec":
        """Cancel parameters that appear both upstairs and downstairs.

        Non-positive integers are left alone: cancelling them would change
        where the series terminates.
        """
        num = Counter(a for a in self.numerator)
        den = Counter(b for b in self.denominator)
        common = Counter({k: v for k, v in (num & den).items() if not _nonpositive_int(k)})
        kept_num, kept_den = [], []
        drop = Counter(common)
        for a in self.numerator:
            if drop[a]:
                drop[a] -= 1
            else:
                kept_num.append(a)
        drop = Counter(common)
        for b in self.denominator:
            if drop[b]:
                drop[b] -= 1
            else:
                kept_den.append(b)
        return SeriesSpec(kept_num, kept_den, self.argument)

    def term_ratio(self, k: int) -> Fraction:
        """t_{k+1} / t_k."""
        r = self.argument / (k + 1)
        for a in self.numerator:
            r *= a + k
        for b in self.denominator:
            r /= b + k
        return r

    def __str__(self) -> str:
        num = ", ".join(_fmt(a) for a in self.numerator)
        den = ", ".join(_fmt(b) for b in self.denominator)
        return f"{self.p}F{self.q}({num}; {den}; {_fmt(self.argument)})"

    def to_json(self) -> dict:
        return {
            "numerator": [_fmt(a) for a in self.numerator],
            "denominator": [_fmt(b) for b in self.denominator],
            "argument": _fmt(self.argument),
        }


class ConvergenceClass(str, Enum):
    TERMINATING = "terminating"
    GEOMETRIC = "geometric"
    UNITY_CONVERGENT = "unity_convergent"
    DIVERGENT = "divergent"

    def __str__(self):
        return self.value


def convergence_class(spec: SeriesSpec) -> ConvergenceClass:
    if spec.terminating_index is not None:
        return ConvergenceClass.TERMINATING
    z = abs(spec.argument)
    if spec.p <= spec.q or z < 1:
        return ConvergenceClass.GEOMETRIC
    if z == 1 and spec.omega > 0:
        return ConvergenceClass.UNITY_CONVERGENT
    return ConvergenceClass.DIVERGENT


def pfq_exact_sum(spec: SeriesSpec) -> Fraction:
    """Exact value of a terminating series."""
    n = spec.terminating_index
    if n is None:
        raise DomainError(f"{spec} does not terminate")
    total = Fraction(0)
    t = Fraction(1)
    for k in range(n + 1):
        total += t
        t *= spec.term_ratio(k)
    return total


class _FixedPointTerms:
    """Terms and partial sums as integers scaled by ``2**bits``.

    The term ratio is a ratio of integer polynomials in k, so each step is
    one multiplication and one truncating division.
    """

    def __init__(self, spec: SeriesSpec, bits: int):
        self.bits = bits
        self.num_params = [(a.numerator, a.denominator) for a in spec.numerator]
        self.den_params = [(b.numerator, b.denominator) for b in spec.denominator]
        c_num, c_den = spec.argument.numerator, spec.argument.denominator
        for _, d in self.den_params:
            c_num *= d
        for _, b in self.num_params:
            c_den *= b
        self.c_num, self.c_den = c_num, c_den
        self.k = 0
        self.term = 1 << bits
        self.total = 0
        # rounding error of the current term and of the running sum, in ulps
        self.term_err = 0.0
        self.sum_err = 0.0

    def step(self) -> int:
        """Add the current term to the sum, advance, return the new sum."""
        k = self.k
        self.total += self.term
        self.sum_err += self.term_err
        num = self.c_num
        for a, b in self.num_params:
            num *= a + k * b
        den = self.c_den * (k + 1)
        for c, d in self.den_params:
            den *= c + k * d
        if den < 0:
            num, den = -num, -den
        prod = self.term * num
        q = abs(prod) // den
        self.term = q if prod >= 0 else -q
        ratio = abs(num) / den
        self.term_err = self.term_err * ratio + 1.0
        self.k += 1
        return self.total


def partial_sums(spec: SeriesSpec, count: int, precision: int) -> list[BigFloat]:
    """The first ``count`` partial sums s_0..s_{count-1} at ``precision`` bits."""
    fx = _FixedPointTerms(spec, precision + _FIXED_EXTRA)
    return [BigFloat.from_fixed(fx.step(), fx.bits, precision) for _ in range(count)]


def _ratio_bound(spec: SeriesSpec, k: int) -> float | None:
    """Upper bound on |t_{j+1}/t_j| valid for every j >= k.

    Each numerator parameter is paired with a denominator parameter (the
    factorial counts as one with value 1); for j past every parameter's
    sign change, (a+j)/(b+j) is monotone in j and bounded by
    max(1, (a+k)/(b+k)).  Leftover denominator factors only shrink.
    """
    params = list(spec.numerator) + list(spec.denominator)
    if any(k + x <= 0 for x in params):
        return None
    nums = sorted(spec.numerator, reverse=True)
    dens = sorted(list(spec.denominator) + [Fraction(1)], reverse=True)
    bound = abs(float(spec.argument))
    for i, b in enumerate(dens):
        if i < len(nums):
            a = nums[i]
            if a > b:
                bound *= float((a + k) / (b + k))
        else:
            bound /= float(b + k)
    return bound


def _mag2(v: int) -> int:
    return v.bit_length() if v else 0


def _sum_geometric(spec, precision, max_terms, target_log2) -> NumericValue:
    wp = precision + GUARD_BITS
    bits = wp + _FIXED_EXTRA
    fx = _FixedPointTerms(spec, bits)
    for _ in range(max_terms):
        fx.step()
        rho = _ratio_bound(spec, fx.k)
        if rho is None or rho >= 1:
            continue
        # |tail| <= |t_k| / (1 - rho), bounded in log2 units of an ulp
        t_ulps = max(abs(fx.term), 1) + fx.term_err
        tail_log2 = math.log2(t_ulps) - math.log2(1 - rho)
        scale_log2 = _mag2(abs(fx.total)) if fx.total else 0
        if tail_log2 <= scale_log2 + target_log2 - 1:
            tail = BigFloat(t_ulps, wp).ldexp(-bits) / BigFloat(1 - rho, wp)
            return _finish_direct(fx, tail, precision, "direct")
    tail = None
    rho = _ratio_bound(spec, fx.k)
    if rho is not None and rho < 1:
        tail = BigFloat(max(abs(fx.term), 1) + fx.term_err, wp).ldexp(-bits) / BigFloat(1 - rho, wp)
    best = _finish_direct(fx, tail, precision, "direct") if tail is not None else None
    raise BudgetExceededError(f"{spec}: {max_terms} terms do not reach the requested accuracy", best=best)


def _finish_direct(fx, tail, precision, method) -> NumericValue:
    wp = precision + GUARD_BITS
    est = BigFloat.from_fixed(fx.total, fx.bits, wp)
    rounding = BigFloat(fx.sum_err + 1, wp).ldexp(-fx.bits)
    err = tail + rounding + abs(est).ldexp(-precision)
    return NumericValue(est.with_prec(precision), err.with_prec(precision), fx.k, method)


def _sample_indices(limit: int) -> list[int]:
    out, i = [], 1
    while i <= limit:
        out.append(i - 1)
        i *= 2
    return out


def _sum_unity(spec, precision, max_terms, accel, target_log2) -> NumericValue:
    wp = precision + GUARD_BITS
    target_rel = BigFloat(2, wp) ** BigFloat(target_log2, wp)
    fx = _FixedPointTerms(spec, wp + _FIXED_EXTRA)
    fixed: list[int] = []

    def extend(n):
        while len(fixed) < n:
            fixed.append(fx.step())

    def as_floats(indices):
        return [BigFloat.from_fixed(fixed[i], fx.bits, wp) for i in indices]

    def result(entry, used, label):
        order, est, err = entry
        err = err + abs(est).ldexp(-precision)
        return NumericValue(
            est.with_prec(precision), err.with_prec(precision), used, "accelerated",
            detail=f"{label} order {order}",
        )

    if accel == "wynn_epsilon":
        # geometric sampling turns an algebraic tail into a linear one
        idx = _sample_indices(max_terms)
        if len(idx) < 8:
            raise BudgetExceededError(f"{spec}: max_terms={max_terms} too small for sampled epsilon")
        extend(idx[-1] + 1)
        table = wynn_epsilon_table(as_floats(idx), wp)
        i = best_order(table)
        if i is None:
            raise NumericalBreakdownError(f"{spec}: epsilon table broke down")
        best = result(table[i], idx[-1] + 1, "wynn_epsilon")
        if table[i][2] <= abs(table[i][1]) * target_rel:
            return best
        raise BudgetExceededError(
            f"{spec}: wynn_epsilon error estimate {float(best.error_bound):.3g} after {max_terms} terms",
            best=best,
        )

    n = min(64, max_terms)
    while True:
        if n < 8:
            raise BudgetExceededError(f"{spec}: max_terms={max_terms} below the 8 sums acceleration needs")
        extend(n)
        table = levin_u_table(as_floats(range(n)), wp)
        i = best_order(table)
        if i is None:
            raise NumericalBreakdownError(f"{spec}: every Levin order broke down")
        order, est, err = table[i]
        best = result(table[i], order + 1, "levin_u")
        # stop at the target, or once higher orders only add rounding noise
        if err <= abs(est) * target_rel or order <= table[-1][0] - 10:
            return best
        if n >= max_terms:
            raise BudgetExceededError(
                f"{spec}: Levin estimate still improving after {max_terms} terms", best=best
            )
        n = min(2 * n, max_terms)


def pfq_eval(
    spec: SeriesSpec,
    precision: int = 384,
    max_terms: int = 5000,
    accel: str = "levin_u",
    tolerance=None,
) -> NumericValue:
    """Numerically evaluate a convergent or terminating series.

    * terminating: exact rational sum, rounded once (error bound 0);
    * geometric: direct fixed-point summation until a rigorous tail bound
      falls below the target;
    * unity_convergent: partial sums extrapolated with ``accel``; returns
      when the estimated error meets the target or when the transform has
      stopped improving at this precision.

    The target is a relative error of ``tolerance`` if given, otherwise
    ``2**-precision``.
    """
    if accel not in METHODS:
        raise ValueError(f"unknown acceleration method {accel!r}")
    if max_terms < 1:
        raise ValueError("max_terms must be positive")
    if tolerance is not None:
        if not float(tolerance) > 0:
            raise ValueError("tolerance must be positive")
        target_log2 = math.log2(float(tolerance))
    else:
        target_log2 = -precision
    cls = convergence_class(spec)
    if cls is ConvergenceClass.DIVERGENT:
        raise DivergentError(f"{spec} diverges (omega={spec.omega}, z={spec.argument})")
    if cls is ConvergenceClass.TERMINATING:
        exact = pfq_exact_sum(spec)
        return NumericValue(
            BigFloat(exact, precision),
            BigFloat(0, precision),
            spec.terminating_index + 1,
            "terminating",
            exact=exact,
        )
    if cls is ConvergenceClass.GEOMETRIC:
        return _sum_geometric(spec, precision, max_terms, max(target_log2, -(precision + GUARD_BITS)))
    return _sum_unity(spec, precision, max_terms, accel, target_log2)
