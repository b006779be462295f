"""Recognise high-precision constants as elements of Q[sqrt2, sqrt(pi)].

An integer relation ``r . (x, b_1, ..., b_k) = 0`` between the input and a
basis of known constants is searched with PSLQ; dividing by the
coefficient of ``x`` gives ``x`` as a rational combination of the basis.

The PSLQ iteration runs in binary fixed point on Python integers.  The
parameter gamma is 2/sqrt(3) + 1/1024, just above the admissible minimum;
the iteration stops when some entry of ``y`` drops below
``2**(-3*precision/4)`` (a relation), when the lower bound on the norm of
any relation exceeds ``coeff_bound`` (no relation), or after
``maxsteps`` iterations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import PrecisionTooLowError
from .exact import ONE, PI, SQRT2, ZERO, ExactValue
from .numeric.bigfloat import BigFloat, ev_to_numeric

__all__ = [
    "RelationResult",
    "find_relation",
    "recognize",
    "recognize_detailed",
    "DEFAULT_BASIS",
    "MAX_STEPS",
    "SLACK_BITS",
]

#: 1, pi, pi^2, sqrt2, sqrt2*pi
DEFAULT_BASIS = (ONE, PI, PI * PI, SQRT2, SQRT2 * PI)

MAX_STEPS = 10000

#: precision a confirmed relation must leave unexplained by its size
SLACK_BITS = 32

CONFIRMED = "confirmed"
TENTATIVE = "tentative"
NONE = "none"


@dataclass(frozen=True)
class RelationResult:
    coefficients: tuple
    residual: BigFloat | None
    confidence: str

    @property
    def found(self) -> bool:
        return self.confidence != NONE


def _round_div(a: int, b: int) -> int:
    return (2 * a + b) // (2 * b)


def _pslq(xs: list[int], prec: int, tol: int, max_coeff: int, maxsteps: int):
    """Integer relation for fixed-point ``xs`` (scale ``2**prec``) or None."""
    n = len(xs)
    one = 1 << prec

    def mul(a, b):
        return (a * b) >> prec

    def div(a, b):
        return (a << prec) // b

    for i, v in enumerate(xs):
        if abs(v) < tol:
            return [int(i == j) for j in range(n)]

    g = isqrt((4 << (2 * prec)) // 3) + (one >> 10)
    gpow = [g]
    for _ in range(n - 2):
        gpow.append(mul(gpow[-1], g))

    s = [0] * n
    acc = 0
    for k in range(n - 1, -1, -1):
        acc += xs[k] * xs[k]
        s[k] = isqrt(acc)
    t = s[0]
    y = [div(v, t) for v in xs]
    s = [div(v, t) for v in s]

    H = [[0] * (n - 1) for _ in range(n)]
    for i in range(n):
        for j in range(min(i + 1, n - 1)):
            if i == j:
                H[i][j] = div(s[j + 1], s[j])
            else:
                H[i][j] = -div(mul(y[i], y[j]), mul(s[j], s[j + 1]))
    A = [[int(i == j) for j in range(n)] for i in range(n)]
    B = [[int(i == j) for j in range(n)] for i in range(n)]

    def reduce_row(i, jmax):
        for j in range(jmax, -1, -1):
            if not H[j][j]:
                continue
            q = _round_div(H[i][j], H[j][j])
            if not q:
                continue
            y[j] += q * y[i]
            Hi, Hj = H[i], H[j]
            for k in range(j + 1):
                Hi[k] -= q * Hj[k]
            Ai, Aj = A[i], A[j]
            for k in range(n):
                Ai[k] -= q * Aj[k]
                B[k][j] += q * B[k][i]

    for i in range(1, n):
        reduce_row(i, i - 1)

    for _ in range(maxsteps):
        m, best = 0, -1
        for i in range(n - 1):
            v = abs(H[i][i]) * gpow[i]
            if v > best:
                m, best = i, v
        y[m], y[m + 1] = y[m + 1], y[m]
        A[m], A[m + 1] = A[m + 1], A[m]
        H[m], H[m + 1] = H[m + 1], H[m]
        for row in B:
            row[m], row[m + 1] = row[m + 1], row[m]
        if m <= n - 3:
            t0 = isqrt(H[m][m] ** 2 + H[m][m + 1] ** 2)
            if not t0:
                return None
            t1, t2 = div(H[m][m], t0), div(H[m][m + 1], t0)
            for i in range(m, n):
                t3, t4 = H[i][m], H[i][m + 1]
                H[i][m] = mul(t1, t3) + mul(t2, t4)
                H[i][m + 1] = mul(t1, t4) - mul(t2, t3)
        for i in range(m + 1, n):
            reduce_row(i, min(i - 1, m + 1))

        for i in range(n):
            if abs(y[i]) < tol:
                rel = [B[j][i] for j in range(n)]
                if max(abs(c) for c in rel) <= max_coeff:
                    return rel
        big = max(abs(H[i][i]) for i in range(n - 1))
        if not big:
            return None
        # every relation has norm at least 1/max|H_ii|
        if one // big > max_coeff:
            return None
        if max(abs(a) for row in A for a in row) > one:
            return None
    return None


def _normalise(rel: list[int]) -> tuple:
    g = 0
    for c in rel:
        g = gcd(g, c)
    rel = [c // g for c in rel] if g > 1 else list(rel)
    for c in rel:
        if c:
            if c < 0:
                rel = [-v for v in rel]
            break
    return tuple(rel)


def find_relation(values, precision: int, coeff_bound: int = 2**20, maxsteps: int = MAX_STEPS) -> RelationResult:
    """Integer relation among ``values`` with coefficients up to ``coeff_bound``.

    ``values`` should be accurate to about ``precision`` bits.  The
    returned vector has its first non-zero entry positive and no common
    factor.  It is confirmed when the residual is below
    ``2**(-precision/2)`` and ``len(values) * log2(max|r|)`` stays
    ``SLACK_BITS`` below ``precision``; otherwise it is tentative.
    """
    values = [v if isinstance(v, BigFloat) else BigFloat(v, precision) for v in values]
    n = len(values)
    if n < 2:
        raise ValueError("need at least two values")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be positive")
    if precision < 128:
        raise PrecisionTooLowError(f"precision {precision} below the 128-bit minimum")
    if n * math.log2(coeff_bound) > precision:
        raise PrecisionTooLowError(
            f"{precision} bits cannot certify relations among {n} values with coefficients up to {coeff_bound}"
        )
    xs = [v.to_fixed(precision) for v in values]
    tol = 1 << (precision // 4)
    rel = _pslq(xs, precision, tol, coeff_bound, maxsteps)
    if rel is None:
        return RelationResult((), None, NONE)
    rel = _normalise(rel)
    wp = precision + 16
    residual = abs(sum((v.with_prec(wp) * c for v, c in zip(values, rel)), BigFloat(0, wp)))
    biggest = max(abs(c) for c in rel)
    ok = (
        residual < BigFloat(1, wp).ldexp(-(precision // 2))
        and biggest <= coeff_bound
        # chance relations among n values appear once n*log2(max|r|) nears
        # the precision; a genuine one leaves SLACK_BITS unused
        and n * math.log2(biggest) <= precision - SLACK_BITS
    )
    return RelationResult(rel, residual.with_prec(precision), CONFIRMED if ok else TENTATIVE)


def recognize_detailed(x, precision: int = 384, coeff_bound: int = 2**20, basis=None):
    """Like :func:`recognize` but also returns the :class:`RelationResult`.

    With a caller-supplied ``basis`` the relation is reported as tentative
    even when it passes every check, since only the default basis has
    been validated.
    """
    if precision < 128:
        raise PrecisionTooLowError(f"precision {precision} below the 128-bit minimum")
    xv = x.with_prec(precision) if isinstance(x, BigFloat) else BigFloat(x, precision)
    custom = basis is not None
    basis = DEFAULT_BASIS if basis is None else tuple(basis)
    values = [xv] + [ev_to_numeric(b, precision) for b in basis]
    try:
        rel = find_relation(values, precision, coeff_bound)
    except PrecisionTooLowError:
        return None, RelationResult((), None, NONE)
    if rel.confidence != CONFIRMED or rel.coefficients[0] == 0:
        return None, rel
    r0 = rel.coefficients[0]
    value = ZERO
    for c, b in zip(rel.coefficients[1:], basis):
        if c:
            value = value + b * Fraction(-c, r0)
    check = ev_to_numeric(value, precision + 64)
    limit = BigFloat(1, precision + 64).ldexp(-precision + 16) * max(BigFloat(1, precision), abs(xv))
    if abs(check - xv) > limit:
        return None, RelationResult(rel.coefficients, rel.residual, TENTATIVE)
    if custom:
        return value, RelationResult(rel.coefficients, rel.residual, TENTATIVE)
    return value, rel


def recognize(x, precision: int = 384, coeff_bound: int = 2**20, basis=None) -> ExactValue | None:
    """Exact form of ``x`` over 1, pi, pi^2, sqrt2, sqrt2*pi, or None.

    ``x`` is a BigFloat (or anything BigFloat accepts, e.g. a decimal
    string) accurate to about ``precision`` bits.  A relation is accepted
    only if its residual is below ``2**(-precision/2)`` and the
    reconstructed value, evaluated at ``precision + 64`` bits, agrees
    with ``x`` to ``2**(-precision+16)`` (relative once ``|x| > 1``).
    """
    return recognize_detailed(x, precision, coeff_bound, basis)[0]
