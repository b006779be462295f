"""Closed-form evaluations of the classical summation theorems and their
one-parameter extensions.

Each theorem is written once as a short sum of terms

    coeff * 2**pow2 * prod Gamma(upper) / prod Gamma(lower)

(:class:`GammaTerm`).  The exact path turns the sum into an
:class:`~hypersum.exact.ExactValue`; :func:`closed_form_numeric` evaluates
the same terms with the numeric gamma function, which also covers
rational parameters that leave the exact ring.

Theorems and the series they sum:

=================  ==============================================
gauss              2F1(a, b; c; 1)
gauss_ext          3F2(a, b, d+1; c+1, d; 1)
gauss_second       2F1(a, b; (a+b+1)/2; 1/2)
gauss_second_ext   3F2(a, b, d+1; (a+b+3)/2, d; 1/2)
bailey             2F1(a, 1-a; c; 1/2)
bailey_ext         3F2(a, 1-a, d+1; c+1, d; 1/2)
watson             3F2(a, b, c; (a+b+1)/2, 2c; 1)
watson_ext         4F3(a, b, c, d+1; (a+b+1)/2, 2c+1, d; 1)
=================  ==============================================
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import DomainError, PoleError
from .exact import ZERO, ExactValue, as_half_integer, gamma_ratio, to_rational, two_power
from .numeric.bigfloat import GUARD_BITS, BigFloat
from .numeric.gamma import num_gamma
from .numeric.series import SeriesSpec

__all__ = [
    "GammaTerm",
    "gauss",
    "gauss_ext",
    "gauss_second",
    "gauss_second_ext",
    "bailey",
    "bailey_ext",
    "watson",
    "watson_ext",
    "bailey_half_gamma_variant",
    "THEOREMS",
    "closed_form",
    "closed_form_numeric",
    "theorem_series",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GammaTerm:
    coeff: Fraction
    upper: tuple
    lower: tuple
    pow2: Fraction = Fraction(0)


def _check_singular(terms) -> None:
    # A pole upstairs makes the formula a limit, even when it cancels
    # against an equal argument downstairs (the two vary at different
    # rates in the parameters) or sits in a term with zero coefficient.
    for t in terms:
        for a in t.upper:
            if _is_pole(a):
                raise PoleError(f"formula is singular here: gamma has a pole at {a}")


def _terms_to_exact(terms) -> ExactValue:
    _check_singular(terms)
    total = ZERO
    for t in terms:
        if not t.coeff:
            continue
        total = total + t.coeff * two_power(t.pow2) * gamma_ratio(t.upper, t.lower)
    return total


def _is_pole(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def _terms_to_numeric(terms, precision: int) -> BigFloat:
    _check_singular(terms)
    wp = precision + GUARD_BITS
    total = BigFloat(0, wp)
    for t in terms:
        if not t.coeff:
            continue
        up = Counter(t.upper)
        low = Counter(t.lower)
        common = up & low
        up -= common
        low -= common
        if any(_is_pole(b) for b in low):
            continue
        val = BigFloat(t.coeff, wp) * BigFloat(2, wp) ** BigFloat(t.pow2, wp)
        for a, k in up.items():
            val = val * num_gamma(a, wp) ** k
        for b, k in low.items():
            val = val / num_gamma(b, wp) ** k
        total = total + val
    return total.with_prec(precision)


def _positive_d(d) -> Fraction:
    d = to_rational(d)
    if d <= 0:
        raise DomainError(f"extension parameter d must be positive, got {d}")
    return d


# --------------------------------------------------------------------------
# term builders; parameters are Fractions


def _gauss_terms(a, b, c):
    if c - a - b <= 0:
        raise DomainError(f"Gauss sum needs c-a-b > 0, got {c - a - b}")
    return [GammaTerm(Fraction(1), (c, c - a - b), (c - a, c - b))]


def _gauss_ext_terms(a, b, c, d):
    d = _positive_d(d)
    if c - a - b <= 0:
        raise DomainError(f"extended Gauss sum needs c-a-b > 0, got {c - a - b}")
    coeff = (c - a - b) + a * b / d
    return [GammaTerm(coeff, (c + 1, c - a - b), (c - a + 1, c - b + 1))]


def _gauss_second_terms(a, b):
    return [GammaTerm(Fraction(1), (HALF, (a + b + 1) / 2), ((a + 1) / 2, (b + 1) / 2))]


def _gauss_second_ext_terms(a, b, d):
    d = _positive_d(d)
    pre = (HALF, (a + b + 3) / 2, (a - b - 1) / 2)
    pre_low = ((a - b + 3) / 2,)
    return [
        GammaTerm((a + b - 1) / 2 - a * b / d, pre, pre_low + ((a + 1) / 2, (b + 1) / 2)),
        GammaTerm((a + b + 1) / d - 2, pre, pre_low + (a / 2, b / 2)),
    ]


def _bailey_terms(a, c):
    return [GammaTerm(Fraction(1), (c / 2, (c + 1) / 2), ((a + c) / 2, (c - a + 1) / 2))]


def _bailey_variant_terms(a, c):
    return [GammaTerm(Fraction(1), (HALF, (c + 1) / 2), ((a + c) / 2, (c - a + 1) / 2))]


def _bailey_ext_terms(a, c, d):
    d = _positive_d(d)
    pre = (HALF, c + 1)
    return [
        GammaTerm(2 / d, pre, ((a + c) / 2, (c - a + 1) / 2), -c),
        GammaTerm(1 - c / d, pre, ((a + c + 1) / 2, (c - a) / 2 + 1), -c),
    ]


def _watson_check(a, b, c):
    if 2 * c - a - b <= -1:
        raise DomainError(f"Watson sum needs 2c-a-b > -1, got {2 * c - a - b}")


def _watson_terms(a, b, c):
    _watson_check(a, b, c)
    upper = (HALF, c + HALF, (a + b + 1) / 2, c - (a + b) / 2 + HALF)
    lower = ((a + 1) / 2, (b + 1) / 2, c - a / 2 + HALF, c - b / 2 + HALF)
    return [GammaTerm(Fraction(1), upper, lower)]


def _watson_ext_terms(a, b, c, d):
    d = _positive_d(d)
    _watson_check(a, b, c)
    pre = (c + HALF, (a + b + 1) / 2, c - (a + b) / 2 + HALF)
    pre_low = (HALF, a, b)
    p2 = a + b - 2
    return [
        GammaTerm(Fraction(1), pre + (a / 2, b / 2), pre_low + (c - a / 2 + HALF, c - b / 2 + HALF), p2),
        GammaTerm((2 * c - d) / d, pre + ((a + 1) / 2, (b + 1) / 2), pre_low + (c - a / 2 + 1, c - b / 2 + 1), p2),
    ]


# --------------------------------------------------------------------------
# public exact evaluators


def _half(*xs):
    return [as_half_integer(x) for x in xs]


def gauss(a, b, c) -> ExactValue:
    """Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)), for c-a-b > 0."""
    return _terms_to_exact(_gauss_terms(*_half(a, b, c)))


def gauss_ext(a, b, c, d) -> ExactValue:
    return _terms_to_exact(_gauss_ext_terms(*_half(a, b, c), d))


def gauss_second(a, b) -> ExactValue:
    return _terms_to_exact(_gauss_second_terms(*_half(a, b)))


def gauss_second_ext(a, b, d) -> ExactValue:
    """Two-bracket sum; the second bracket carries 1/(Gamma(a/2) Gamma(b/2)).

    Singular (0 times a pole) when |a - b| = 1.
    """
    return _terms_to_exact(_gauss_second_ext_terms(*_half(a, b), d))


def bailey(a, c) -> ExactValue:
    """Gamma(c/2) Gamma((c+1)/2) / (Gamma((c+a)/2) Gamma((c-a+1)/2)).

    The quarter-integer arguments that half-integer ``c`` produces are
    paired through Gamma(1/4) Gamma(3/4) = pi sqrt2; combinations that do
    not pair raise :class:`DomainError`.
    """
    return _terms_to_exact(_bailey_terms(*_half(a, c)))


def bailey_ext(a, c, d) -> ExactValue:
    return _terms_to_exact(_bailey_ext_terms(*_half(a, c), d))


def watson(a, b, c) -> ExactValue:
    return _terms_to_exact(_watson_terms(*_half(a, b, c)))


def watson_ext(a, b, c, d) -> ExactValue:
    return _terms_to_exact(_watson_ext_terms(*_half(a, b, c), d))


def bailey_half_gamma_variant(a, c, precision: int = 256) -> BigFloat:
    """Bailey's quotient with Gamma(1/2) in place of Gamma(c/2) upstairs.

    This form does not agree with the series 2F1(a, 1-a; c; 1/2); it is
    kept, numerically only, so the disagreement stays under test.
    """
    a, c = to_rational(a), to_rational(c)
    return _terms_to_numeric(_bailey_variant_terms(a, c), precision)


# --------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Theorem:
    name: str
    params: tuple
    terms: Callable
    series: Callable

    def exact(self, **kw) -> ExactValue:
        return THEOREM_FUNCS[self.name](*(kw[p] for p in self.params))


def _series_gauss(a, b, c):
    return SeriesSpec([a, b], [c], 1)


def _series_gauss_ext(a, b, c, d):
    return SeriesSpec([a, b, d + 1], [c + 1, d], 1)


def _series_gauss_second(a, b):
    return SeriesSpec([a, b], [(a + b + 1) / 2], HALF)


def _series_gauss_second_ext(a, b, d):
    return SeriesSpec([a, b, d + 1], [(a + b + 3) / 2, d], HALF)


def _series_bailey(a, c):
    return SeriesSpec([a, 1 - a], [c], HALF)


def _series_bailey_ext(a, c, d):
    return SeriesSpec([a, 1 - a, d + 1], [c + 1, d], HALF)


def _series_watson(a, b, c):
    return SeriesSpec([a, b, c], [(a + b + 1) / 2, 2 * c], 1)


def _series_watson_ext(a, b, c, d):
    return SeriesSpec([a, b, c, d + 1], [(a + b + 1) / 2, 2 * c + 1, d], 1)


THEOREMS = {
    t.name: t
    for t in [
        Theorem("gauss", ("a", "b", "c"), _gauss_terms, _series_gauss),
        Theorem("gauss_ext", ("a", "b", "c", "d"), _gauss_ext_terms, _series_gauss_ext),
        Theorem("gauss_second", ("a", "b"), _gauss_second_terms, _series_gauss_second),
        Theorem("gauss_second_ext", ("a", "b", "d"), _gauss_second_ext_terms, _series_gauss_second_ext),
        Theorem("bailey", ("a", "c"), _bailey_terms, _series_bailey),
        Theorem("bailey_ext", ("a", "c", "d"), _bailey_ext_terms, _series_bailey_ext),
        Theorem("watson", ("a", "b", "c"), _watson_terms, _series_watson),
        Theorem("watson_ext", ("a", "b", "c", "d"), _watson_ext_terms, _series_watson_ext),
    ]
}

THEOREM_FUNCS = {
    "gauss": gauss,
    "gauss_ext": gauss_ext,
    "gauss_second": gauss_second,
    "gauss_second_ext": gauss_second_ext,
    "bailey": bailey,
    "bailey_ext": bailey_ext,
    "watson": watson,
    "watson_ext": watson_ext,
}


def _lookup(name: str) -> Theorem:
    try:
        return THEOREMS[name]
    except KeyError:
        raise ValueError(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}") from None


def _collect(th: Theorem, params: dict) -> list[Fraction]:
    missing = [p for p in th.params if params.get(p) is None]
    if missing:
        raise ValueError(f"{th.name} needs parameter(s) {', '.join(missing)}")
    extra = sorted(k for k, v in params.items() if v is not None and k not in th.params)
    if extra:
        raise ValueError(f"{th.name} takes no parameter(s) {', '.join(extra)}")
    return [to_rational(params[p]) for p in th.params]


def closed_form(name: str, **params) -> ExactValue:
    """Exact closed form of theorem ``name``, e.g. ``closed_form("gauss", a=..)``."""
    th = _lookup(name)
    return THEOREM_FUNCS[name](*_collect(th, params))


def closed_form_numeric(name: str, precision: int = 384, **params) -> BigFloat:
    """The same closed form through the numeric gamma function.

    Accepts any rational parameters the formula is defined for, including
    ones whose gamma values fall outside the exact ring.
    """
    th = _lookup(name)
    return _terms_to_numeric(th.terms(*_collect(th, params)), precision)


def theorem_series(name: str, **params) -> SeriesSpec:
    """The hypergeometric series that theorem ``name`` sums."""
    th = _lookup(name)
    return th.series(*_collect(th, params))
