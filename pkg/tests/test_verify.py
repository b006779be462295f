from dataclasses import replace
from fractions import Fraction as F
import json

import mpmath
import pytest

from hypersum.catalog import catalog, get_entry
from hypersum.exact import PI
from hypersum.verify import Summary, dumps, render_text, reports_to_json, verify, verify_all

from schemas import validate


def test_simple_rational_entry():
    r = verify(get_entry("2.3/m=0/d=2"), 256, 1e-15)
    assert r.passed and r.reason == ""
    assert r.numeric_rhs == "1.5"
    assert abs(float(r.numeric_lhs) - 1.5) < 1e-15
    assert r.method == "direct"


def test_watson_entry_against_oracle():
    r = verify(get_entry("2.5/m=0/d=1"), 384, 1e-15)
    assert r.passed
    with mpmath.workdps(120):
        oracle = mpmath.pi**2 / 4 + 1
        assert abs(mpmath.mpf(r.numeric_lhs) - oracle) < mpmath.mpf(10) ** -70
        assert abs(mpmath.mpf(r.numeric_rhs) - oracle) < mpmath.mpf(10) ** -110
    assert r.numeric_rhs.startswith("3.467401100")


def test_perturbed_expected_value_fails():
    entry = get_entry("2.1/m=1")
    bad = replace(entry, expected=PI * F(3, 17))
    r = verify(bad, 384, 1e-15)
    assert not r.passed
    assert r.reason.startswith("mismatch:")
    assert float(r.rel_error) > 0.05


def test_typo_entry_reports_typeset_error():
    r = verify(get_entry("2.2/m=1/d=3"), 256)
    assert r.passed
    assert r.typeset_rel_error == "0.18125"


def test_series_errors_become_failed_reports():
    r = verify(get_entry("2.5/m=2/d=7"), 128, 1e-15, max_terms=6)
    assert not r.passed and r.method == "failed"
    assert r.reason.startswith("budget_exceeded:")


@pytest.mark.parametrize("kw", [{"precision": 32}, {"tolerance": 0}, {"tolerance": -1e-3}])
def test_bad_arguments(kw):
    with pytest.raises(ValueError):
        verify(get_entry("2.1/m=0"), **kw)


def test_all_pass_at_384_bits():
    reports, summary = verify_all(384, 1e-15)
    assert summary == Summary(40, 40, 0, 384, 1e-15)
    assert all(r.passed for r in reports)
    assert [r.id for r in reports] == [e.id for e in catalog()]
    validate({"command": "verify", **reports_to_json(reports, summary)}, "verify")


def test_some_fail_at_64_bits():
    reports, summary = verify_all(64, 1e-15)
    assert 0 < summary.failed < summary.total
    for r in reports:
        if not r.passed:
            assert r.reason.startswith(("insufficient_precision:", "budget_exceeded:"))


def test_parallel_is_byte_identical():
    entries = catalog()[::4]
    seq = verify_all(256, 1e-15, entries=entries)
    par = verify_all(256, 1e-15, parallel=True, entries=entries, workers=2)
    assert dumps(*seq) == dumps(*par)
    assert render_text(*seq) == render_text(*par)


def test_deterministic():
    a = verify(get_entry("2.4/m=2/d=7/2"), 256)
    b = verify(get_entry("2.4/m=2/d=7/2"), 256)
    assert a == b


def test_pass_matches_rel_error():
    reports, _ = verify_all(96, 1e-20, entries=catalog()[:12])
    for r in reports:
        if r.rel_error:
            assert r.passed == (float(r.rel_error) <= 1e-20)


def test_render_text():
    reports, summary = verify_all(256, 1e-15, entries=[get_entry("2.1/m=0"), get_entry("2.2/m=1/d=3")])
    text = render_text(reports, summary)
    lines = text.splitlines()
    assert lines[0].startswith("PASS  2.1/m=0")
    assert "lhs=1.57079632679489661923132169164" in lines[0]
    assert "typeset form: relative error 0.18125" in text
    assert lines[-1] == "2/2 passed at 256 bits, tolerance 1e-15"


def test_json_field_names():
    d = verify(get_entry("2.1/m=0"), 256).to_json()
    assert "pass" in d and "passed" not in d
    assert json.loads(json.dumps(d)) == d
