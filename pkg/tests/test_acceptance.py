"""Acceptance suite: one test per criterion, each recorded as a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v`` (the lines appear
in the "acceptance criteria" summary section) or ``python tests/test_acceptance.py``.
"""
from fractions import Fraction as F
import functools
import random
import sys
import time

import mpmath
import pytest

from hypersum.catalog import catalog, get_entry
from hypersum.closed_forms import (
    bailey, bailey_ext, bailey_half_gamma_variant, gauss, gauss_ext, gauss_second, gauss_second_ext,
    theorem_series, watson, watson_ext,
)
from hypersum.errors import HypersumError
from hypersum.exact import PI, SQRT2, ExactValue, exact_gamma
from hypersum.numeric.bigfloat import BigFloat, ev_to_numeric
from hypersum.numeric.gamma import num_gamma
from hypersum.numeric.series import SeriesSpec, pfq_eval, pfq_exact_sum
from hypersum.recognition import recognize
from hypersum.verify import dumps, verify_all

RESULTS = {}


def criterion(n, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*a, **kw):
            t0 = time.perf_counter()
            try:
                detail = fn(*a, **kw)
            except BaseException as exc:
                RESULTS[n] = f"criterion {n}: FAIL  {title} ({time.perf_counter() - t0:.1f}s) {type(exc).__name__}"
                print(RESULTS[n])
                raise
            RESULTS[n] = f"criterion {n}: PASS  {title} ({time.perf_counter() - t0:.1f}s){' ' + detail if detail else ''}"
            print(RESULTS[n])

        return run

    return wrap


@criterion(1, "golden catalog exactness")
def test_1_catalog_exactness():
    t0 = time.perf_counter()
    entries = catalog()
    for e in entries:
        assert e.identity.rhs == e.expected, e.id
    assert get_entry("2.1/m=4").expected == PI * F(315, 65536)
    assert get_entry("2.4/m=3/d=9/2").expected == SQRT2 * PI * F(35, 512)
    assert get_entry("2.5/m=2/d=7").expected == PI * PI * F(225, 256) - ExactValue.rational(F(5, 7))
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    return f"{len(entries)} entries"


@criterion(2, "numeric verification at 384 bits")
def test_2_numeric_verification():
    t0 = time.perf_counter()
    reports, summary = verify_all(384, 1e-15, max_terms=5000, accel="levin_u")
    elapsed = time.perf_counter() - t0
    assert summary.failed == 0 and summary.passed == len(catalog())
    assert elapsed < 60
    # z = 1/2 entries: geometric convergence to 1e-30 inside 300 terms
    half = [e for e in catalog() if e.identity.lhs.argument == F(1, 2)]
    assert half
    for e in half:
        v = pfq_eval(e.identity.lhs.normalized(), 384, max_terms=300, tolerance=1e-30)
        exact = ev_to_numeric(e.expected, 384)
        assert v.terms_used <= 300
        assert abs(v.estimate - exact) <= abs(exact) * 1e-30, e.id
    return f"{summary.passed}/{summary.total}, verify_all {elapsed:.1f}s"


def _random_tuples(rng, n, lo, hi, count, condition):
    out = []
    while len(out) < count:
        t = tuple(F(rng.randint(lo, hi), 2) for _ in range(n))
        if condition(*t):
            out.append(t)
    return out


def _check_reduction(rng, n_args, cond, lhs, rhs, want=200):
    n = 0
    tried = 0
    while n < want:
        tried += 1
        assert tried < 50 * want
        (t,) = _random_tuples(rng, n_args, -9, 25, 1, cond)
        try:
            expected = rhs(*t)
            got = lhs(*t)
        except HypersumError:
            # pole or unpaired quarter gamma: precondition not met
            continue
        assert got == expected, t
        n += 1
    return n


@criterion(3, "reduction identities on 200 random tuples each")
def test_3_reductions():
    rng = random.Random(20240601)
    counts = [
        _check_reduction(rng, 3, lambda a, b, c: c - a - b > 0, lambda a, b, c: gauss_ext(a, b, c, c), gauss),
        _check_reduction(rng, 2, lambda a, b: a + b + 1 > 0,
                         lambda a, b: gauss_second_ext(a, b, (a + b + 1) / 2), gauss_second),
        _check_reduction(rng, 2, lambda a, c: c > 0, lambda a, c: bailey_ext(a, c, c), bailey),
        _check_reduction(rng, 3, lambda a, b, c: c > 0 and 2 * c - a - b > -1,
                         lambda a, b, c: watson_ext(a, b, c, 2 * c), watson),
    ]
    assert counts == [200] * 4
    return "gauss, gauss second, bailey, watson"


@criterion(4, "numeric gamma vs exact gamma at 256 bits")
def test_4_gamma():
    worst = 0.0
    n = 0
    for k in range(-19, 42):
        x = F(k, 2)
        if x.denominator == 1 and x <= 0:
            continue
        exact = ev_to_numeric(exact_gamma(x), 256)
        num = num_gamma(x, 256)
        rel = abs(num - exact) / abs(exact)
        assert rel <= BigFloat(1, 256).ldexp(-248), x
        worst = max(worst, float(rel))
        n += 1
    return f"{n} points, worst {worst:.2e}"


def _brute(num, den, z, n):
    total, term = F(0), F(1)
    for k in range(n + 1):
        total += term
        r = F(z)
        for a in num:
            r *= a + k
        for b in den:
            r /= b + k
        term *= r / (k + 1)
    return total


@criterion(5, "terminating series oracle")
def test_5_terminating():
    s = SeriesSpec([-3, 2], [4], 1)
    assert pfq_exact_sum(s) == F(1, 5)
    assert pfq_eval(s).exact == F(1, 5)
    assert gauss(-3, 2, 4) == ExactValue.rational(F(1, 5))
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(0, 15)
        num = [F(-n)] + [F(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(rng.randint(0, 3))]
        den = [F(rng.randint(1, 30), rng.randint(1, 6)) for _ in range(rng.randint(0, 3))]
        z = F(rng.randint(-9, 9), rng.randint(1, 9))
        assert pfq_eval(SeriesSpec(num, den, z)).exact == _brute(num, den, z, n)
    return "50 random instances"


@criterion(6, "Bailey discrepancy regression")
def test_6_bailey():
    h = F(1, 2)
    corrected = bailey(h, 3 * h)
    assert corrected == SQRT2 * PI * F(1, 4)
    series = pfq_eval(theorem_series("bailey", a=h, c=3 * h), 256).estimate
    c_num = ev_to_numeric(corrected, 256)
    assert abs(series - c_num) <= 1e-15
    variant = bailey_half_gamma_variant(h, 3 * h, 256)
    with mpmath.workprec(300):
        oracle = mpmath.sqrt(mpmath.pi) * mpmath.gamma(mpmath.mpf(5) / 4)
        assert abs(mpmath.mpf(variant._mpf) - oracle) < mpmath.mpf(2) ** -240
    assert abs(variant - series) > 0.4
    return f"typeset form {variant.to_decimal(6)}, off by {abs(variant - series).to_decimal(3)}"


@criterion(7, "recognition round-trip from 200-digit decimals")
def test_7_recognition():
    prec = 665  # just above 200 decimal digits
    hits = 0
    entries = catalog()
    for e in entries:
        dec = ev_to_numeric(e.expected, prec + 32).to_decimal(200)
        if recognize(BigFloat(dec, prec), prec, coeff_bound=2**20) == e.expected:
            hits += 1
    assert hits >= 38
    with mpmath.workdps(210):
        ln2 = mpmath.nstr(mpmath.log(2), 200)
    assert recognize(BigFloat(ln2, prec), prec, coeff_bound=2**20) is None
    return f"{hits}/{len(entries)} recovered, ln 2 rejected"


@criterion(8, "determinism of parallel verification")
def test_8_determinism():
    reference = dumps(*verify_all(384, 1e-15))
    for _ in range(5):
        assert dumps(*verify_all(384, 1e-15, parallel=True)) == reference
        assert dumps(*verify_all(384, 1e-15)) == reference
    return "5 runs"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-p", "no:cacheprovider"]))
