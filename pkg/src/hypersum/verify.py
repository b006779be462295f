"""Numerical verification of the catalog.

For each entry the left side is summed with :func:`pfq_eval` and the right
side is the exact value rounded to the same precision.  The relative error
between the two decides pass/fail; the acceleration error estimate is
reported but never used for the decision.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .catalog import SUSPECTED_TYPO, CatalogEntry, catalog
from .errors import HypersumError
from .numeric.bigfloat import BigFloat, bits_to_digits, ev_to_numeric
from .numeric.series import pfq_eval

__all__ = ["VerifyReport", "Summary", "verify", "verify_all", "reports_to_json", "render_text", "dumps", "TEXT_DIGITS"]

#: significant digits shown in the text table
TEXT_DIGITS = 30


@dataclass(frozen=True)
class VerifyReport:
    id: str
    exact_rendered: str
    numeric_lhs: str
    numeric_rhs: str
    abs_error: str
    rel_error: str
    terms_used: int
    method: str
    passed: bool
    reason: str = ""
    error_estimate: str = ""
    typeset_rel_error: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


@dataclass(frozen=True)
class Summary:
    total: int
    passed: int
    failed: int
    precision_bits: int
    tolerance: float

    def to_json(self) -> dict:
        return asdict(self)


def _fmt(x: BigFloat, digits: int) -> str:
    return x.to_decimal(digits)


def _rel(a: BigFloat, b: BigFloat) -> BigFloat:
    diff = abs(a - b)
    return diff / abs(b) if not b.is_zero() else diff


def verify(
    entry: CatalogEntry,
    precision: int = 384,
    tolerance: float = 1e-15,
    max_terms: int = 5000,
    accel: str = "levin_u",
) -> VerifyReport:
    """Compare the summed series of ``entry`` with its exact value.

    Series errors (budget, breakdown, divergence) become a failed report
    whose ``reason`` starts with the error kind.
    """
    if precision < 64:
        raise ValueError("precision must be at least 64 bits")
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    digits = bits_to_digits(precision)
    rhs = ev_to_numeric(entry.expected, precision)
    base = dict(id=entry.id, exact_rendered=str(entry.expected), numeric_rhs=_fmt(rhs, digits))

    typeset = ""
    if SUSPECTED_TYPO in entry.flags:
        try:
            t = pfq_eval(entry.typeset_lhs.normalized(), precision, max_terms, accel)
            typeset = _fmt(_rel(t.estimate, rhs), 6)
        except HypersumError as exc:
            typeset = f"{exc.kind}"

    try:
        val = pfq_eval(entry.identity.lhs.normalized(), precision, max_terms, accel)
    except HypersumError as exc:
        best = getattr(exc, "best", None)
        lhs_str, abs_s, rel_s = "", "", ""
        if isinstance(best, BigFloat):
            lhs_str = _fmt(best, digits)
            abs_s = _fmt(abs(best - rhs), 6)
            rel_s = _fmt(_rel(best, rhs), 6)
        return VerifyReport(
            **base,
            numeric_lhs=lhs_str,
            abs_error=abs_s,
            rel_error=rel_s,
            terms_used=0,
            method="failed",
            passed=False,
            reason=f"{exc.kind}: {exc}",
            typeset_rel_error=typeset,
        )

    diff = abs(val.estimate - rhs)
    rel = _rel(val.estimate, rhs)
    ok = rel <= tolerance
    reason = ""
    if not ok:
        if val.error_bound > abs(rhs) * tolerance:
            reason = f"insufficient_precision: error estimate {_fmt(val.error_bound, 3)} exceeds tolerance"
        else:
            reason = f"mismatch: relative error {_fmt(rel, 6)} exceeds {tolerance:g}"
    method = val.method if not val.detail else f"{val.method} ({val.detail})"
    return VerifyReport(
        **base,
        numeric_lhs=_fmt(val.estimate, digits),
        abs_error=_fmt(diff, 6),
        rel_error=_fmt(rel, 6),
        terms_used=val.terms_used,
        method=method,
        passed=bool(ok),
        reason=reason,
        error_estimate=_fmt(val.error_bound, 6),
        typeset_rel_error=typeset,
    )


def _verify_args(args):
    entry, precision, tolerance, max_terms, accel = args
    return verify(entry, precision, tolerance, max_terms, accel)


def verify_all(
    precision: int = 384,
    tolerance: float = 1e-15,
    parallel: bool = False,
    max_terms: int = 5000,
    accel: str = "levin_u",
    entries=None,
    workers: int | None = None,
) -> tuple[list[VerifyReport], Summary]:
    """Verify every entry (or ``entries``); reports keep catalog order.

    With ``parallel`` the entries fan out over a process pool; each worker
    is a pure function of its inputs, so the output does not depend on
    scheduling.
    """
    entries = catalog() if entries is None else list(entries)
    jobs = [(e, precision, tolerance, max_terms, accel) for e in entries]
    if parallel and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_verify_args, jobs))
    else:
        reports = [_verify_args(j) for j in jobs]
    n_pass = sum(r.passed for r in reports)
    summary = Summary(len(reports), n_pass, len(reports) - n_pass, precision, tolerance)
    return reports, summary


def reports_to_json(reports, summary: Summary) -> dict:
    return {"summary": summary.to_json(), "reports": [r.to_json() for r in reports]}


def _short(s: str, digits: int) -> str:
    if not s:
        return "-"
    try:
        return BigFloat(s, 4 * digits + 16).to_decimal(digits)
    except ValueError:
        return s


def render_text(reports, summary: Summary, digits: int = TEXT_DIGITS) -> str:
    lines = []
    w = max([len(r.id) for r in reports] + [2])
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{status}  {r.id:<{w}}  {r.exact_rendered:<26}  lhs={_short(r.numeric_lhs, digits)}"
            f"  rel={r.rel_error or '-'}  terms={r.terms_used}  {r.method}"
        )
        if r.reason:
            lines.append(f"      reason: {r.reason}")
        if r.typeset_rel_error:
            lines.append(f"      typeset form: relative error {r.typeset_rel_error}")
    lines.append(
        f"{summary.passed}/{summary.total} passed at {summary.precision_bits} bits, tolerance {summary.tolerance:g}"
    )
    return "\n".join(lines)


def dumps(reports, summary: Summary) -> str:
    return json.dumps(reports_to_json(reports, summary), indent=2)
