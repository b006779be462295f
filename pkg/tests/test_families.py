from fractions import Fraction as F
import itertools

import pytest

from hypersum.closed_forms import closed_form
from hypersum.errors import DomainError
from hypersum.exact import PI, SQRT2, ExactValue
from hypersum.families import (
    FAMILIES, MAX_INDEX, Identity, family_bailey_ext, family_gauss, family_gauss_ext,
    family_gauss_second_ext, family_watson_ext, generate, resolve_family,
)
from hypersum.numeric.bigfloat import ev_to_numeric
from hypersum.numeric.series import ConvergenceClass, convergence_class, pfq_eval

h = F(1, 2)
R = ExactValue.rational


@pytest.mark.parametrize(
    "ident,expected",
    [
        (family_gauss(0), PI * h),
        (family_gauss(3), PI * F(35, 2048)),
        (family_gauss(4), PI * F(315, 65536)),
        (family_gauss_ext(0, 3), PI * F(7, 16)),
        (family_gauss_ext(1, 2), PI * F(45, 256)),
        (family_gauss_ext(2, 4), PI * F(525, 8192)),
        (family_gauss_second_ext(0, 0, 2), R(F(3, 2))),
        (family_gauss_second_ext(1, 1, F(7, 2)), PI * F(15, 8)),
        (family_gauss_second_ext(2, 0, 2), R(F(7, 2))),
        (family_bailey_ext(0, 0, F(3, 2)), SQRT2 * PI * F(1, 4)),
        (family_bailey_ext(2, 0, F(7, 2)), SQRT2 * PI * F(15, 128)),
        (family_bailey_ext(3, 0, F(9, 2)), SQRT2 * PI * F(35, 512)),
        (family_watson_ext(0, 0, 0, 2), PI * PI * F(1, 4)),
        (family_watson_ext(1, 0, 0, 5), PI * PI * F(9, 16) - R(F(3, 5))),
        (family_watson_ext(2, 0, 0, 7), PI * PI * F(225, 256) - R(F(5, 7))),
    ],
)
def test_examples(ident, expected):
    assert ident.rhs == expected


# The printed one-parameter specialisations, as functions of d, transcribed
# independently of the generators.
PRINTED = [
    ("T2.2", {"m": 0}, lambda d: PI * (F(3, 8) * (1 + 1 / (2 * d)))),
    ("T2.2", {"m": 1}, lambda d: PI * (F(15, 64) * (1 - 1 / (2 * d)))),
    ("T2.2", {"m": 2}, lambda d: PI * (F(105, 1024) * (1 - 3 / (2 * d)))),
    ("T2.3", {"m": 0, "n": 0}, lambda d: PI * (3 * (1 / d - h)) - R(3 * (3 / d - 2))),
    ("T2.3", {"m": 1, "n": 0}, lambda d: PI * (F(5, 2) * 3 * (h - 1 / d)) + R(5 * (5 / d - 2))),
    ("T2.3", {"m": 1, "n": 1}, lambda d: PI * (F(105, 4) * (9 / d - F(5, 2))) - R(105 * (7 / d - 2))),
    ("T2.3", {"m": 2, "n": 0}, lambda d: PI * (F(7, 4) * F(5, 2) * (h - 1 / d)) + R(F(7, 3) * (7 / d - 2))),
    ("T2.4", {"m": 0, "n": 0}, lambda d: SQRT2 * PI * (F(3, 8) / d) + SQRT2 * (F(3, 4) * (1 - F(3, 2) / d))),
    ("T2.4", {"m": 1, "n": 0}, lambda d: SQRT2 * PI * (F(15, 32) / d) + SQRT2 * (F(5, 8) * (1 - F(5, 2) / d))),
    ("T2.4", {"m": 2, "n": 0}, lambda d: SQRT2 * PI * (F(105, 256) / d) + SQRT2 * (F(7, 16) * (1 - F(7, 2) / d))),
    ("T2.4", {"m": 3, "n": 0}, lambda d: SQRT2 * PI * (F(315, 1024) / d) + SQRT2 * (F(9, 32) * (1 - F(9, 2) / d))),
    ("T2.5", {"m": 0}, lambda d: PI * PI * F(1, 4) + R(2 / d - 1)),
    ("T2.5", {"m": 1}, lambda d: PI * PI * F(9, 16) + R(3 * (4 / d - 1))),
    ("T2.5", {"m": 2}, lambda d: PI * PI * F(225, 256) + R(5 * (6 / d - 1))),
]

DS = [h, F(1), F(3, 2), F(2), F(3), F(7, 2), F(5), F(17, 3)]


@pytest.mark.parametrize("family,params,formula", PRINTED, ids=lambda x: str(x) if not callable(x) else "")
def test_printed_specialisations(family, params, formula):
    for d in DS:
        assert generate(family, d=d, **params).rhs == formula(d), d


# -- family rhs against the general theorem -------------------------------------------

CONSISTENCY_DS = [h, 1, F(3, 2), 2, 3, F(7, 2), 5]
R6 = range(7)


def _theorem_rhs(ident: Identity) -> ExactValue:
    name, params = ident.theorem
    return closed_form(name, **params)


def test_gauss_family_matches_theorem():
    for m in R6:
        assert family_gauss(m).rhs == _theorem_rhs(family_gauss(m))


def test_gauss_ext_family_matches_theorem():
    for m, d in itertools.product(R6, CONSISTENCY_DS):
        ident = family_gauss_ext(m, d)
        assert ident.rhs == _theorem_rhs(ident), (m, d)


def test_gauss_second_ext_family_matches_theorem():
    for m, n, d in itertools.product(R6, R6, CONSISTENCY_DS):
        ident = family_gauss_second_ext(m, n, d)
        assert ident.rhs == _theorem_rhs(ident), (m, n, d)


def test_bailey_ext_family_matches_theorem():
    for m, n, d in itertools.product(R6, R6, CONSISTENCY_DS):
        ident = family_bailey_ext(m, n, d)
        assert ident.rhs == _theorem_rhs(ident), (m, n, d)


def test_watson_ext_family_matches_theorem():
    for m, n, s, d in itertools.product(R6, R6, R6, CONSISTENCY_DS):
        ident = family_watson_ext(m, n, s, d)
        assert ident.rhs == _theorem_rhs(ident), (m, n, s, d)


def test_theorem_parameters_reproduce_the_series():
    from hypersum.closed_forms import theorem_series

    for ident in [family_gauss(2), family_gauss_ext(1, 3), family_gauss_second_ext(1, 2, F(5, 3)),
                  family_bailey_ext(2, 1, 4), family_watson_ext(1, 2, 1, F(3, 2))]:
        name, params = ident.theorem
        assert theorem_series(name, **params) == ident.lhs


# -- structure ----------------------------------------------------------------

def test_lhs_shapes_are_uncancelled():
    ident = family_gauss_ext(0, F(3, 2))
    assert ident.lhs.numerator == (h, h, F(5, 2)) and ident.lhs.denominator == (F(5, 2), F(3, 2))
    assert ident.lhs.normalized().numerator == (h, h)
    w = family_watson_ext(0, 0, 0, 2)
    assert w.lhs.numerator == (1, 1, 1, 3) and w.lhs.denominator == (F(3, 2), 3, 2)


def test_rhs_monomials():
    for ident in [family_gauss(5), family_gauss_ext(3, F(2, 7)), family_gauss_second_ext(4, 1, 6),
                  family_bailey_ext(3, 2, F(1, 3)), family_watson_ext(2, 3, 1, 9)]:
        for (s, hexp) in ident.rhs.terms:
            assert s in (0, 1) and hexp in (0, 2, 4)


@pytest.mark.parametrize(
    "ident",
    [family_gauss(3), family_gauss_ext(2, F(7, 3)), family_gauss_second_ext(2, 1, 3),
     family_bailey_ext(1, 1, F(9, 4)), family_watson_ext(1, 1, 1, F(5, 2))],
    ids=lambda i: i.source,
)
def test_convergence_class_and_numeric(ident):
    cls = convergence_class(ident.lhs.normalized())
    assert cls in (ConvergenceClass.GEOMETRIC, ConvergenceClass.UNITY_CONVERGENT, ConvergenceClass.TERMINATING)
    v = pfq_eval(ident.lhs.normalized(), 256)
    exact = ev_to_numeric(ident.rhs, 256)
    assert abs(v.estimate - exact) <= v.error_bound + abs(exact) * 2.0**-250
    assert abs(v.estimate - exact) <= abs(exact) * 1e-50


@pytest.mark.parametrize("m", range(4))
def test_cancellation_when_d_plus_one_meets_a_lower_parameter(m):
    ident = family_gauss_ext(m, F(3, 2) + m)
    norm = ident.lhs.normalized()
    assert norm.p == 2 and norm.q == 1
    assert convergence_class(norm) is ConvergenceClass.UNITY_CONVERGENT
    assert ident.rhs == family_gauss(m).rhs
    v = pfq_eval(norm, 256)
    assert abs(v.estimate - ev_to_numeric(ident.rhs, 256)) <= v.error_bound

    b = family_bailey_ext(m, 0, F(3, 2) + m)
    assert convergence_class(b.lhs.normalized()) is ConvergenceClass.GEOMETRIC
    assert abs(pfq_eval(b.lhs.normalized(), 256).estimate - ev_to_numeric(b.rhs, 256)) < 1e-60


# -- arguments ----------------------------------------------------------------

@pytest.mark.parametrize(
    "call",
    [
        lambda: family_gauss(-1),
        lambda: family_gauss(MAX_INDEX + 1),
        lambda: family_gauss(1.0),
        lambda: family_gauss(True),
        lambda: family_gauss_ext(0, 0),
        lambda: family_gauss_ext(0, F(-1, 2)),
        lambda: family_gauss_second_ext(0, -2, 1),
        lambda: family_bailey_ext(0, 0, -3),
        lambda: family_watson_ext(0, 0, 65, 1),
    ],
)
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_cap_is_configurable():
    ident = family_gauss(70, max_index=100)
    assert ident.rhs == _theorem_rhs(ident)


def test_generate_and_aliases():
    assert set(FAMILIES) == {"T2.1", "T2.2", "T2.3", "T2.4", "T2.5"}
    assert generate("watson_ext", m=1, d=5) == family_watson_ext(1, 0, 0, 5)
    assert generate("T2.1", m=2) == family_gauss(2)
    assert resolve_family("bailey_ext") == "T2.4"
    with pytest.raises(ValueError):
        generate("T2.2", m=1)
    with pytest.raises(ValueError):
        generate("kummer", m=1)


def test_identity_strings():
    ident = family_watson_ext(0, 0, 0, 1)
    assert ident.source == "T2.5(m=0, n=0, s=0, d=1)"
    assert str(ident) == "4F3(1, 1, 1, 2; 3/2, 3, 1; 1) = pi^2/4 + 1"
    assert ident.param_dict == {"m": 0, "n": 0, "s": 0, "d": 1}
