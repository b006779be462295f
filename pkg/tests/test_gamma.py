from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, strategies as st

from hypersum.errors import PoleError
from hypersum.exact import exact_gamma
from hypersum.numeric.bigfloat import BigFloat, bf_pi, ev_to_numeric
from hypersum.numeric.gamma import num_gamma, spouge_error_bound_log2, spouge_parameter

from conftest import to_mpf

NON_POLES = [F(k, 2) for k in range(-19, 42) if not (k % 2 == 0 and k <= 0)]


def rel_err(a: BigFloat, b: BigFloat):
    return abs(a - b) / abs(b)


def test_examples():
    p = 256
    assert rel_err(num_gamma(F(1, 2), p), bf_pi(p).sqrt()) <= BigFloat(1, p).ldexp(-p + 8)
    assert rel_err(num_gamma(F(5, 2), p), bf_pi(p).sqrt() * F(3, 4)) <= BigFloat(1, p).ldexp(-p + 8)
    assert num_gamma(4, p) == 6 or rel_err(num_gamma(4, p), BigFloat(6, p)) <= BigFloat(1, p).ldexp(-p + 8)


@pytest.mark.parametrize("prec", [128, 256, 384])
@pytest.mark.parametrize("x", NON_POLES)
def test_half_integers_match_exact_gamma(x, prec):
    got = num_gamma(x, prec)
    ref = ev_to_numeric(exact_gamma(x), prec + 64)
    assert rel_err(got, ref) <= BigFloat(1, prec + 64).ldexp(-prec + 8)


@given(st.fractions(min_value=F(-30), max_value=F(60), max_denominator=97).filter(lambda q: not (q.denominator == 1 and q <= 0)))
def test_rationals_match_mpmath(x):
    mpmath.mp.prec = 500
    got = num_gamma(x, 256)
    ref = mpmath.gamma(mpmath.mpf(x.numerator) / x.denominator)
    assert abs(to_mpf(got) - ref) <= abs(ref) * mpmath.mpf(2) ** -248


@given(st.floats(min_value=0.01, max_value=40))
def test_recursion(x):
    p = 192
    xv = BigFloat(x, p)
    assert rel_err(num_gamma(xv + 1, p), num_gamma(xv, p) * xv) <= BigFloat(1, p).ldexp(-p + 10)


@pytest.mark.parametrize("x", [0, -1, -5, F(-12)])
def test_poles(x):
    with pytest.raises(PoleError):
        num_gamma(x, 128)


def test_pole_detected_for_bigfloat_argument():
    with pytest.raises(PoleError):
        num_gamma(BigFloat(-3, 128), 128)
    # well away from the pole is fine
    num_gamma(BigFloat("-2.999", 128), 128)


def test_spouge_parameter_meets_bound():
    for prec in (53, 128, 256, 384, 700):
        a = spouge_parameter(prec)
        assert spouge_error_bound_log2(a) <= -(prec + 10)
        assert spouge_error_bound_log2(a - 1) > -(prec + 10)
