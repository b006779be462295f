"""Infinite families of summation identities with explicit right-hand sides.

Each generator returns an :class:`Identity` whose right side is computed
from the family's own closed formula (products of Pochhammer symbols and
factorials times powers of pi and sqrt2), not by evaluating the general
theorem.  ``Identity.theorem`` names the theorem and parameters the family
specialises, so the two routes can be compared.

Family ids: ``T2.1`` .. ``T2.5``, with aliases ``gauss``, ``gauss_ext``,
``gauss_second_ext``, ``bailey_ext`` and ``watson_ext``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import DomainError
from .exact import PI, ExactValue, pochhammer, to_rational, two_power
from .numeric.series import SeriesSpec

__all__ = [
    "Identity",
    "family_gauss",
    "family_gauss_ext",
    "family_gauss_second_ext",
    "family_bailey_ext",
    "family_watson_ext",
    "FAMILIES",
    "generate",
    "MAX_INDEX",
]

HALF = Fraction(1, 2)

#: default cap on m, n, s; larger indices need ``max_index=`` explicitly
MAX_INDEX = 64


@dataclass(frozen=True)
class Identity:
    lhs: SeriesSpec
    rhs: ExactValue
    family: str
    params: tuple
    theorem: tuple = field(default=(), compare=False)

    @property
    def param_dict(self) -> dict:
        return dict(self.params)

    @property
    def source(self) -> str:
        return f"{self.family}(" + ", ".join(f"{k}={v}" for k, v in self.params) + ")"

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


def _index(name, value, cap):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an int, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")
    if value > cap:
        raise DomainError(f"{name}={value} exceeds the cap {cap}")
    return value


def _d(d):
    d = to_rational(d)
    if d <= 0:
        raise DomainError(f"d must be positive, got {d}")
    return d


def family_gauss(m: int, *, max_index: int = MAX_INDEX) -> Identity:
    """2F1(1/2+m, 1/2-m; 3/2+m; 1) = pi (3/2)_m / (2**(2m+1) m!)."""
    m = _index("m", m, max_index)
    lhs = SeriesSpec([HALF + m, HALF - m], [Fraction(3, 2) + m], 1)
    rhs = PI * (pochhammer(Fraction(3, 2), m) / (2 ** (2 * m + 1) * factorial(m)))
    th = ("gauss", {"a": HALF + m, "b": HALF - m, "c": Fraction(3, 2) + m})
    return Identity(lhs, rhs, "T2.1", (("m", m),), th)


def family_gauss_ext(m: int, d, *, max_index: int = MAX_INDEX) -> Identity:
    m = _index("m", m, max_index)
    d = _d(d)
    lhs = SeriesSpec([HALF + m, HALF - m, d + 1], [Fraction(5, 2) + m, d], 1)
    coeff = (1 + (1 - 2 * m) / (2 * d)) * 3 * pochhammer(Fraction(5, 2), m) / (2 ** (2 * m + 3) * factorial(m))
    th = ("gauss_ext", {"a": HALF + m, "b": HALF - m, "c": Fraction(3, 2) + m, "d": d})
    return Identity(lhs, PI * coeff, "T2.2", (("m", m), ("d", d)), th)


def family_gauss_second_ext(m: int, n: int, d, *, max_index: int = MAX_INDEX) -> Identity:
    """3F2(1+2m, 1+2n, d+1; 5/2+m+n, d; 1/2).

    The factor 1/((2m-2n+1)(2m-2n-1)) never vanishes for integer m, n,
    unlike the parent theorem, which is singular at |a-b| = 1.
    """
    m = _index("m", m, max_index)
    n = _index("n", n, max_index)
    d = _d(d)
    a, b = 1 + 2 * m, 1 + 2 * n
    lhs = SeriesSpec([a, b, d + 1], [Fraction(5, 2) + m + n, d], Fraction(1, 2))
    pre = 2 * pochhammer(Fraction(3, 2), m + n + 1) / ((2 * m - 2 * n + 1) * (2 * m - 2 * n - 1))
    first = (m + n + HALF - Fraction((2 * m + 1) * (2 * n + 1)) / d) / (factorial(m) * factorial(n))
    second = ((2 * m + 2 * n + 3) / d - 2) / (pochhammer(HALF, m) * pochhammer(HALF, n))
    rhs = PI * (pre * first) + ExactValue.rational(pre * second)
    th = ("gauss_second_ext", {"a": Fraction(a), "b": Fraction(b), "d": d})
    return Identity(lhs, rhs, "T2.3", (("m", m), ("n", n), ("d", d)), th)


def family_bailey_ext(m: int, n: int, d, *, max_index: int = MAX_INDEX) -> Identity:
    """3F2(1/2+m, 1/2-m, d+1; 5/2+m+2n, d; 1/2)."""
    m = _index("m", m, max_index)
    n = _index("n", n, max_index)
    d = _d(d)
    c = Fraction(3, 2) + m + 2 * n
    lhs = SeriesSpec([HALF + m, HALF - m, d + 1], [c + 1, d], HALF)
    scale = two_power(-(Fraction(5, 2) + m + 2 * n)) * pochhammer(Fraction(3, 2), m + 2 * n + 1)
    first = (2 / d) / (factorial(m + n) * factorial(n))
    second = (1 - c / d) / (pochhammer(HALF, m + n + 1) * pochhammer(HALF, n + 1))
    rhs = scale * (PI * first + ExactValue.rational(second))
    th = ("bailey_ext", {"a": HALF + m, "c": c, "d": d})
    return Identity(lhs, rhs, "T2.4", (("m", m), ("n", n), ("d", d)), th)


def family_watson_ext(m: int, n: int, s: int, d, *, max_index: int = MAX_INDEX) -> Identity:
    """4F3(1+2m, 1+2n, 1+m+n+s, d+1; 3/2+m+n, 3+2m+2n+2s, d; 1)."""
    m = _index("m", m, max_index)
    n = _index("n", n, max_index)
    s = _index("s", s, max_index)
    d = _d(d)
    a, b, c = 1 + 2 * m, 1 + 2 * n, 1 + m + n + s
    lhs = SeriesSpec([a, b, c, d + 1], [Fraction(3, 2) + m + n, 3 + 2 * m + 2 * n + 2 * s, d], 1)
    h = HALF
    pre = (
        pochhammer(Fraction(3, 2), m + n + s)
        * pochhammer(Fraction(3, 2), m + n)
        * pochhammer(h, s)
        / (4 * pochhammer(h, m) * pochhammer(h, n) * factorial(m) * factorial(n))
    )
    first = pochhammer(h, m) * pochhammer(h, n) / (factorial(m + s) * factorial(n + s))
    k = (2 + 2 * m + 2 * n + 2 * s) / d - 1
    second = k * factorial(m) * factorial(n) / (pochhammer(h, m + s + 1) * pochhammer(h, n + s + 1))
    rhs = PI * PI * (pre * first) + ExactValue.rational(pre * second)
    th = ("watson_ext", {"a": Fraction(a), "b": Fraction(b), "c": Fraction(c), "d": d})
    return Identity(lhs, rhs, "T2.5", (("m", m), ("n", n), ("s", s), ("d", d)), th)


FAMILIES = {
    "T2.1": (family_gauss, ("m",)),
    "T2.2": (family_gauss_ext, ("m", "d")),
    "T2.3": (family_gauss_second_ext, ("m", "n", "d")),
    "T2.4": (family_bailey_ext, ("m", "n", "d")),
    "T2.5": (family_watson_ext, ("m", "n", "s", "d")),
}
_ALIASES = {
    "gauss": "T2.1",
    "gauss_ext": "T2.2",
    "gauss_second_ext": "T2.3",
    "bailey_ext": "T2.4",
    "watson_ext": "T2.5",
}


def resolve_family(name: str) -> str:
    key = _ALIASES.get(name, name)
    if key not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(list(FAMILIES) + list(_ALIASES))}")
    return key


def generate(family: str, **params) -> Identity:
    """Build a member of ``family`` from keyword parameters.

    Index parameters default to 0 when omitted; ``d`` is required where
    the family has one.
    """
    key = resolve_family(family)
    func, names = FAMILIES[key]
    args = []
    for p in names:
        v = params.get(p)
        if v is None:
            if p == "d":
                raise ValueError(f"family {key} needs d")
            v = 0
        args.append(v)
    return func(*args)
