"""Extrapolation of slowly convergent partial sums.

Two transforms are provided:

``levin_u``
    Levin's u transform with beta = 1, started at the first partial sum.
    The remainder estimate is omega_j = (j+1) a_j with a_j the j-th term,
    which models algebraic tails a_j ~ j**(-s) well.  Order k uses
    s_0..s_k; the order with the smallest estimated error is returned.

``wynn_epsilon``
    Wynn's epsilon algorithm (Shanks transforms in the even columns).
    Effective on linearly convergent or alternating sequences; on an
    algebraic tail it should be fed geometrically sampled partial sums.

Error estimates are heuristics: the larger distance to the neighbouring
extrapolation orders plus a propagated rounding term.
"""
from __future__ import annotations

from math import comb
from typing import Sequence

from ..errors import NumericalBreakdownError
from .bigfloat import GUARD_BITS, BigFloat, NumericValue

__all__ = ["accelerate", "levin_u_table", "wynn_epsilon_table", "best_order", "METHODS"]

METHODS = ("levin_u", "wynn_epsilon")


def _as_wp(values: Sequence, wp: int) -> list[BigFloat]:
    return [v.with_prec(wp) if isinstance(v, BigFloat) else BigFloat(v, wp) for v in values]


def levin_u_table(sums: Sequence[BigFloat], wp: int) -> list[tuple[int, BigFloat, BigFloat | None]]:
    """Levin u estimates for every order ``k = 1 .. len(sums)-1``.

    Returns ``(k, estimate, error)`` triples; ``error`` is ``None`` for the
    first order (there is nothing to compare with) and for orders whose
    denominator vanished.
    """
    s = _as_wp(sums, wp)
    n = len(s)
    terms = [s[0]] + [s[j] - s[j - 1] for j in range(1, n)]
    x, y = [], []
    for j, a in enumerate(terms):
        if a.is_zero():
            raise NumericalBreakdownError(f"term {j} is zero; u transform undefined")
        inv = 1 / (a * (j + 1))
        y.append(inv)
        x.append(s[j] * inv)
    ax = [abs(v) for v in x]
    ay = [abs(v) for v in y]
    eps = BigFloat(1, wp).ldexp(-wp)

    rows = []  # (k, estimate, rounding) or (k, fallback, None)
    prev = None
    # powers[j] holds (j+1)**(k-1) for the current order k
    powers = [1] * n
    for k in range(1, n):
        if k >= 2:
            for j in range(n):
                powers[j] *= j + 1
        num = BigFloat(0, wp)
        den = BigFloat(0, wp)
        anum = BigFloat(0, wp)
        aden = BigFloat(0, wp)
        for j in range(k + 1):
            w = comb(k, j) * powers[j]
            if j % 2:
                num = num - x[j] * w
                den = den - y[j] * w
            else:
                num = num + x[j] * w
                den = den + y[j] * w
            anum = anum + ax[j] * w
            aden = aden + ay[j] * w
        if den.is_zero() or den.mag() < aden.mag() - wp + 4:
            rows.append((k, prev if prev is not None else s[k], None))
            continue
        est = num / den
        rows.append((k, est, (anum + abs(est) * aden) / abs(den) * eps * (k + 1)))
        prev = est

    # |L_k - L_(k-1)| measures the error of L_(k-1) at least as much as that
    # of L_k, so take the larger of the backward and forward differences,
    # doubled: near stagnation the true error is often just above either.
    good = [i for i, r in enumerate(rows) if r[2] is not None]
    errs = {}
    for pos, i in enumerate(good):
        if pos == 0:
            continue
        est = rows[i][1]
        diff = abs(est - rows[good[pos - 1]][1])
        if pos + 1 < len(good):
            diff = max(diff, abs(rows[good[pos + 1]][1] - est))
        errs[i] = diff * 2 + rows[i][2]
    return [(k, est, errs.get(i)) for i, (k, est, _) in enumerate(rows)]


def wynn_epsilon_table(sums: Sequence[BigFloat], wp: int) -> list[tuple[int, BigFloat, BigFloat | None]]:
    """Estimates from the even epsilon columns, last entry of each column.

    Returns ``(column, estimate, error)`` triples for columns 2, 4, ...;
    the error is the largest of the change along the column and the
    changes to the neighbouring even columns.  A column with a single
    entry gets ``None``: there is nothing to check it against.
    """
    s = _as_wp(sums, wp)
    eps = BigFloat(1, wp).ldexp(-wp)
    older = [BigFloat(0, wp)] * (len(s) + 1)
    cur = list(s)
    evens = {0: cur}
    col = 0
    while len(cur) >= 2:
        new = []
        for i in range(len(cur) - 1):
            d = cur[i + 1] - cur[i]
            if d.is_zero() or d.mag() < max(cur[i].mag(), cur[i + 1].mag()) - wp + 2:
                break
            new.append(older[i + 1] + 1 / d)
        if not new:
            break
        older, cur = cur, new
        col += 1
        if col % 2 == 0:
            evens[col] = cur
        if len(new) < len(older) - 1:
            # the column broke down part way; later columns would be garbage
            break

    out = []
    cols = sorted(evens)
    for c in cols:
        if c == 0:
            continue
        column = evens[c]
        last = column[-1]
        if len(column) < 2:
            # a single entry cannot be checked along its column
            out.append((c, last, None))
            continue
        diffs = [abs(last - evens[c - 2][-1]), abs(last - column[-2])]
        if c + 2 in evens:
            diffs.append(abs(evens[c + 2][-1] - last))
        err = max(diffs) + abs(last) * eps * 16
        out.append((c, last, err))
    return out


def best_order(table):
    """Index into ``table`` of the entry with the smallest error, or None."""
    best = None
    for i, (_, _, err) in enumerate(table):
        if err is None:
            continue
        if best is None or err < table[best][2]:
            best = i
    return best


def accelerate(partial_sums: Sequence, method: str = "levin_u", precision: int = 256) -> NumericValue:
    """Extrapolate the limit of ``partial_sums``.

    Works with ``precision + GUARD_BITS`` bits and rounds once at the end.
    Raises :class:`NumericalBreakdownError` when no order of the transform
    could be formed.
    """
    if len(partial_sums) < 8:
        raise ValueError("acceleration needs at least 8 partial sums")
    if method not in METHODS:
        raise ValueError(f"unknown acceleration method {method!r}")
    wp = precision + GUARD_BITS
    if method == "levin_u":
        table = levin_u_table(partial_sums, wp)
    else:
        table = wynn_epsilon_table(partial_sums, wp)
    i = best_order(table)
    if i is None:
        raise NumericalBreakdownError(f"{method}: every order broke down")
    order, est, err = table[i]
    used = order + 1 if method == "levin_u" else len(partial_sums)
    final_round = abs(est).ldexp(-precision)
    return NumericValue(
        estimate=est.with_prec(precision),
        error_bound=(err + final_round).with_prec(precision),
        terms_used=used,
        method="accelerated",
        detail=f"{method} order {order}",
    )
