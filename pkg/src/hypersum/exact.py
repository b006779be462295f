"""Exact arithmetic: rationals, Pochhammer symbols and the ring Q[sqrt2, sqrt(pi)].

Every closed form handled by the package is a finite rational combination
of monomials ``sqrt2**s * sqrt(pi)**h`` with ``s`` in {0, 1} and integer
``h``.  :class:`ExactValue` stores such a combination canonically so that
equality is plain structural equality.

Rationals are :class:`fractions.Fraction` throughout; half-integers are
Fractions whose denominator divides 2.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .errors import DomainError, NonInvertibleError, PoleError

__all__ = [
    "ExactValue",
    "to_rational",
    "as_half_integer",
    "pochhammer",
    "factorial",
    "exact_gamma",
    "gamma_ratio",
    "two_power",
    "ev_arith",
    "ZERO",
    "ONE",
    "PI",
    "SQRT2",
    "SQRT_PI",
]


def to_rational(x) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: a binary float is almost never the rational the
    caller meant.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational parameter")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {x!r}") from exc
    raise TypeError(f"expected a rational, got {type(x).__name__}")


def as_half_integer(x) -> Fraction:
    """Return ``x`` as a Fraction, checking that ``2*x`` is an integer."""
    q = to_rational(x)
    if 2 % q.denominator:
        raise DomainError(f"{q} is not an integer or half-integer")
    return q


def pochhammer(lam, n: int) -> Fraction:
    """Rising factorial ``lam (lam+1) ... (lam+n-1)``; 1 when ``n == 0``."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    lam = to_rational(lam)
    num, den = 1, 1
    p, q = lam.numerator, lam.denominator
    for i in range(n):
        num *= p + i * q
        den *= q
    return Fraction(num, den)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


class ExactValue:
    """Immutable element of Q[sqrt2, sqrt(pi)].

    ``terms`` maps ``(s, h)`` to a non-zero Fraction, the monomial being
    ``sqrt2**s * sqrt(pi)**h``.  ``pi`` itself is ``h == 2``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        acc: dict[tuple[int, int], Fraction] = {}
        for (s, h), c in (terms or {}).items():
            c = to_rational(c)
            s, h = int(s), int(h)
            # fold sqrt2**2 into the coefficient
            c *= Fraction(2) ** (s // 2)
            s %= 2
            acc[(s, h)] = acc.get((s, h), Fraction(0)) + c
        self._terms = {k: v for k, v in sorted(acc.items(), key=_key_order) if v}
        self._hash = None

    # constructors ---------------------------------------------------------
    @classmethod
    def rational(cls, q) -> "ExactValue":
        return cls({(0, 0): to_rational(q)})

    @classmethod
    def monomial(cls, coeff=1, sqrt2: int = 0, sqrtpi: int = 0) -> "ExactValue":
        return cls({(sqrt2, sqrtpi): coeff})

    @classmethod
    def pi_power(cls, k: int, coeff=1) -> "ExactValue":
        return cls({(0, 2 * k): coeff})

    # inspection -------------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_rational(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic -------------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "ExactValue":
        if isinstance(other, ExactValue):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ExactValue.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return ExactValue(merged)

    __radd__ = __add__

    def __neg__(self):
        return ExactValue({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Fraction] = {}
        for (s1, h1), c1 in self._terms.items():
            for (s2, h2), c2 in other._terms.items():
                s, c = s1 + s2, c1 * c2
                if s == 2:
                    s, c = 0, 2 * c
                key = (s, h1 + h2)
                out[key] = out.get(key, Fraction(0)) + c
        return ExactValue(out)

    __rmul__ = __mul__

    def inverse(self) -> "ExactValue":
        if len(self._terms) != 1:
            raise NonInvertibleError(
                f"only single-monomial values can be inverted, got {self}"
            )
        ((s, h), c), = self._terms.items()
        # 1/sqrt2 = sqrt2/2
        if s:
            return ExactValue({(1, -h): 1 / (2 * c)})
        return ExactValue({(0, -h): 1 / c})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = ONE
        for _ in range(abs(k)):
            out = out * base
        return out

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # rendering --------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        # highest power of pi first, the way closed forms are usually written
        ordered = sorted(self._terms.items(), key=lambda kv: (-kv[0][1], kv[0][0]))
        pieces = []
        for i, ((s, h), c) in enumerate(ordered):
            body = _render_term(abs(c), s, h)
            if i == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"ExactValue({str(self)!r})"

    def to_json(self) -> list[dict]:
        """Term list ordered by ``(h, s)`` ascending."""
        return [
            {"coeff": f"{c.numerator}/{c.denominator}", "sqrt2": s, "sqrtpi_pow": h}
            for (s, h), c in self._terms.items()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "ExactValue":
        return cls({(int(t["sqrt2"]), int(t["sqrtpi_pow"])): Fraction(t["coeff"]) for t in data})

    def __reduce__(self):
        return (ExactValue, (self._terms,))


def _key_order(kv):
    (s, h), _ = kv
    return (h, s)


def _render_term(c: Fraction, s: int, h: int) -> str:
    factors = []
    if s:
        factors.append("sqrt2")
    if h % 2:
        factors.append("sqrt(pi)")
    k = h // 2
    if k == 1:
        factors.append("pi")
    elif k:
        factors.append(f"pi^{k}")
    if not factors:
        return str(c)
    head = "" if c.numerator == 1 else f"{c.numerator}*"
    tail = "" if c.denominator == 1 else f"/{c.denominator}"
    return head + "*".join(factors) + tail


ZERO = ExactValue()
ONE = ExactValue.rational(1)
PI = ExactValue.pi_power(1)
SQRT2 = ExactValue.monomial(1, sqrt2=1)
SQRT_PI = ExactValue.monomial(1, sqrtpi=1)


def ev_arith(kind: str, x: ExactValue, y: ExactValue) -> ExactValue:
    ops = {
        "add": lambda: x + y,
        "sub": lambda: x - y,
        "mul": lambda: x * y,
        "div": lambda: x / y,
    }
    try:
        return ops[kind]()
    except KeyError:
        raise ValueError(f"unknown operation {kind!r}") from None


def two_power(e) -> ExactValue:
    """``2**e`` for a half-integer ``e``; the half part becomes sqrt2."""
    e = as_half_integer(e)
    whole = e.numerator // e.denominator  # floor, also for negatives
    coeff = Fraction(2) ** whole
    if e.denominator == 2:
        return ExactValue({(1, 0): coeff})
    return ExactValue.rational(coeff)


def _is_pole(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def exact_gamma(x) -> ExactValue:
    """Gamma at an integer or half-integer argument.

    >>> str(exact_gamma(Fraction(-3, 2)))
    '4*sqrt(pi)/3'
    """
    x = as_half_integer(x)
    if _is_pole(x):
        raise PoleError(f"gamma has a pole at {x}")
    if x.denominator == 1:
        return ExactValue.rational(factorial(x.numerator - 1))
    # upward/downward recursion from Gamma(1/2) = sqrt(pi)
    half = Fraction(1, 2)
    steps = int(x - half)
    coeff = pochhammer(half, steps) if steps >= 0 else 1 / pochhammer(x, -steps)
    return ExactValue({(0, 1): coeff})


class _GammaAccumulator:
    """Collects a product of gamma values at quarter-integer arguments.

    Gamma(1/4) and Gamma(3/4) are kept symbolic; they only combine into
    the ring through Gamma(1/4) Gamma(3/4) = pi sqrt2.
    """

    _BASES = {Fraction(1): None, Fraction(1, 2): "h", Fraction(1, 4): "q1", Fraction(3, 4): "q3"}

    def __init__(self):
        self.coeff = Fraction(1)
        self.h = 0
        self.q1 = 0
        self.q3 = 0

    def push(self, x: Fraction, sign: int):
        frac = x - (x.numerator // x.denominator)
        base = frac if frac else Fraction(1)
        if base not in self._BASES:
            raise DomainError(f"gamma({x}) lies outside the exact ring")
        k = int(x - base)
        factor = pochhammer(base, k) if k >= 0 else 1 / pochhammer(x, -k)
        self.coeff *= factor if sign > 0 else 1 / factor
        slot = self._BASES[base]
        if slot:
            setattr(self, slot, getattr(self, slot) + sign)

    def value(self) -> ExactValue:
        if self.q1 != self.q3:
            raise DomainError("gamma quotient leaves an unpaired Gamma(1/4) or Gamma(3/4)")
        e = self.q1
        # (pi sqrt2)**e
        two_part = Fraction(2) ** (e // 2)
        return ExactValue({(e % 2, self.h + 2 * e): self.coeff * two_part})


def gamma_ratio(numerator: Iterable, denominator: Iterable = ()) -> ExactValue:
    """Exact ``prod Gamma(numerator) / prod Gamma(denominator)``.

    Arguments must be multiples of 1/4.  Identical arguments cancel first.
    A pole upstairs raises :class:`PoleError`; a pole downstairs makes the
    quotient zero (1/Gamma is entire).  Quarter-integer arguments are
    accepted when they pair up into Gamma(1/4) Gamma(3/4) = pi sqrt2, and
    raise :class:`DomainError` otherwise.
    """
    num = Counter(to_rational(a) for a in numerator)
    den = Counter(to_rational(a) for a in denominator)
    common = num & den
    num -= common
    den -= common
    for a in list(num) + list(den):
        if 4 % a.denominator:
            raise DomainError(f"gamma({a}) lies outside the exact ring")
    for a in num:
        if _is_pole(a):
            raise PoleError(f"gamma has a pole at {a}")
    if any(_is_pole(a) for a in den):
        return ZERO
    acc = _GammaAccumulator()
    for a, mult in num.items():
        for _ in range(mult):
            acc.push(a, +1)
    for a, mult in den.items():
        for _ in range(mult):
            acc.push(a, -1)
    return acc.value()
