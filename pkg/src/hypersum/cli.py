"""Command line front end.

Exit codes: 0 success, 1 verification failure (or a numeric target that
could not be met, or no relation found by ``recognize``), 2 usage error,
3 domain, pole or divergence error.  Every error writes one line
``error: <kind>: <message>`` to stderr; with ``--output json`` an
``{"error": ...}`` document also goes to stdout.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from fractions import Fraction

from .catalog import catalog, get_entry
from .closed_forms import THEOREMS, closed_form, closed_form_numeric, theorem_series
from .errors import BudgetExceededError, HypersumError, NumericalBreakdownError
from .families import FAMILIES, generate
from .numeric.bigfloat import BigFloat, bits_to_digits, ev_to_numeric
from .numeric.series import SeriesSpec, convergence_class, pfq_eval
from .recognition import recognize_detailed
from .verify import TEXT_DIGITS, render_text, reports_to_json, verify, verify_all, Summary

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

DEFAULT_PRECISION = 384
PRECISION_ENV = "HYPERSUM_PRECISION"
MIN_PRECISION = 64

ACCEL = {"levin": "levin_u", "wynn": "wynn_epsilon"}

# options whose value may legitimately start with '-'
_VALUE_OPTS = {"--num", "--den", "--z", "--a", "--b", "--c", "--d", "--value"}
_NEGATIVE = re.compile(r"^-[0-9./,\-eE+]*[0-9][0-9./,\-eE+]*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _rational_list(text: str) -> list[Fraction]:
    text = text.strip()
    if not text:
        return []
    return [_rational(t) for t in text.split(",")]


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return v


def _precision(text: str) -> int:
    v = _positive_int(text)
    if v < MIN_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must be at least {MIN_PRECISION} bits")
    return v


def _tolerance(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError("tolerance must be positive and finite")
    return v


def _index(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return v


def _add_common(p, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--precision", type=_precision, default=d(None), help="working precision in bits (default 384)")
    p.add_argument("--max-terms", type=_positive_int, default=d(5000), help="term budget per series")
    p.add_argument("--tolerance", type=_tolerance, default=d(1e-15), help="relative tolerance")
    p.add_argument("--accel", choices=sorted(ACCEL), default=d("levin"), help="acceleration for z = +-1")
    p.add_argument("--output", choices=["text", "json"], default=d("text"))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypersum", description="Hypergeometric summation identities: evaluate, derive, verify.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("eval", help="numeric value of a pFq series")
    p.add_argument("--num", type=_rational_list, required=True, help="numerator parameters, e.g. 1/2,1/2")
    p.add_argument("--den", type=_rational_list, required=True, help="denominator parameters")
    p.add_argument("--z", type=_rational, default=Fraction(1), help="argument (default 1)")
    _add_common(p, suppress=True)

    p = sub.add_parser("closed", help="closed form of a summation theorem")
    p.add_argument("--theorem", required=True, choices=list(THEOREMS))
    for name in "abcd":
        p.add_argument(f"--{name}", type=_rational)
    _add_common(p, suppress=True)

    p = sub.add_parser("identity", help="member of an identity family")
    p.add_argument("--family", required=True, help="T2.1 .. T2.5 or an alias")
    for name in "mns":
        p.add_argument(f"--{name}", type=_index)
    p.add_argument("--d", type=_rational)
    _add_common(p, suppress=True)

    p = sub.add_parser("verify", help="verify catalog entries numerically")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", help="every entry (the default)")
    g.add_argument("--id", help="a single entry id, e.g. 2.2/m=0/d=1")
    p.add_argument("--parallel", action="store_true", help="use a process pool")
    p.add_argument("--workers", type=_positive_int)
    _add_common(p, suppress=True)

    p = sub.add_parser("catalog", help="list the catalog")
    p.add_argument("--format", choices=["text", "json"])
    _add_common(p, suppress=True)

    p = sub.add_parser("recognize", help="recover an exact form from a decimal")
    p.add_argument("--value", required=True)
    p.add_argument("--coeff-bound", type=_positive_int, default=2**20)
    _add_common(p, suppress=True)
    return parser


def _join_negative(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_OPTS and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def _default_precision() -> int:
    env = os.environ.get(PRECISION_ENV)
    if env is None or not env.strip():
        return DEFAULT_PRECISION
    try:
        return _precision(env)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"{PRECISION_ENV}: {exc}") from None


def _digits_text(x: BigFloat) -> str:
    return x.to_decimal(TEXT_DIGITS)


def _digits_full(x: BigFloat) -> str:
    return x.to_decimal(bits_to_digits(x.prec))


def _params_json(params: dict) -> dict:
    return {k: str(v) for k, v in params.items()}


# --------------------------------------------------------------------------
# subcommands; each returns (exit code, text, json document)


def _cmd_eval(args, prec):
    spec = SeriesSpec(args.num, args.den, args.z)
    val = pfq_eval(spec, prec, args.max_terms, ACCEL[args.accel], args.tolerance)
    doc = {
        "command": "eval",
        "series": spec.to_json(),
        "class": str(convergence_class(spec)),
        "precision_bits": prec,
        "value": _digits_full(val.estimate),
        "error_estimate": _digits_full(val.error_bound),
        "terms_used": val.terms_used,
        "method": val.method,
        "detail": val.detail,
        "exact": None if val.exact is None else str(val.exact),
    }
    lines = [
        f"series: {spec}",
        f"class: {doc['class']}",
        f"value: {_digits_text(val.estimate)}",
        f"error_estimate: {val.error_bound.to_decimal(6)}",
        f"terms_used: {val.terms_used}",
        f"method: {val.method}" + (f" ({val.detail})" if val.detail else ""),
    ]
    if val.exact is not None:
        lines.append(f"exact: {val.exact}")
    return EXIT_OK, "\n".join(lines), doc


def _cmd_closed(args, prec):
    th = THEOREMS[args.theorem]
    params = {p: getattr(args, p) for p in th.params}
    missing = [p for p, v in params.items() if v is None]
    if missing:
        raise UsageError(f"theorem {th.name} needs --{' --'.join(missing)}")
    extra = [p for p in "abcd" if p not in th.params and getattr(args, p) is not None]
    if extra:
        raise UsageError(f"theorem {th.name} takes no --{' --'.join(extra)}")
    half = all((2 * v).denominator == 1 for p, v in params.items() if p != "d")
    exact = closed_form(th.name, **params) if half else None
    value = ev_to_numeric(exact, prec) if exact is not None else closed_form_numeric(th.name, prec, **params)
    spec = theorem_series(th.name, **params)
    doc = {
        "command": "closed",
        "theorem": th.name,
        "params": _params_json(params),
        "series": spec.to_json(),
        "exact": None if exact is None else str(exact),
        "exact_terms": None if exact is None else exact.to_json(),
        "precision_bits": prec,
        "value": _digits_full(value),
    }
    lines = [str(exact) if exact is not None else "(no exact form: parameters are not half-integers)", _digits_text(value)]
    return EXIT_OK, "\n".join(lines), doc


def _cmd_identity(args, prec):
    params = {k: getattr(args, k) for k in ("m", "n", "s", "d") if getattr(args, k) is not None}
    try:
        ident = generate(args.family, **params)
    except ValueError as exc:
        if isinstance(exc, HypersumError):
            raise
        raise UsageError(str(exc)) from None
    used = set(FAMILIES[ident.family][1])
    extra = sorted(set(params) - used)
    if extra:
        raise UsageError(f"family {ident.family} takes no --{' --'.join(extra)}")
    value = ev_to_numeric(ident.rhs, prec)
    lhs_norm = ident.lhs.normalized()
    doc = {
        "command": "identity",
        "family": ident.family,
        "params": _params_json(dict(ident.params)),
        "lhs": ident.lhs.to_json(),
        "lhs_reduced": lhs_norm.to_json(),
        "rhs": str(ident.rhs),
        "rhs_terms": ident.rhs.to_json(),
        "precision_bits": prec,
        "value": _digits_full(value),
    }
    lines = [f"family: {ident.source}", f"lhs: {ident.lhs}"]
    if lhs_norm != ident.lhs:
        lines.append(f"lhs (reduced): {lhs_norm}")
    lines += [f"rhs: {ident.rhs}", f"value: {_digits_text(value)}"]
    return EXIT_OK, "\n".join(lines), doc


def _cmd_verify(args, prec):
    accel = ACCEL[args.accel]
    if args.id is not None:
        try:
            entry = get_entry(args.id)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        reports = [verify(entry, prec, args.tolerance, args.max_terms, accel)]
        ok = sum(r.passed for r in reports)
        summary = Summary(1, ok, 1 - ok, prec, args.tolerance)
    else:
        reports, summary = verify_all(prec, args.tolerance, args.parallel, args.max_terms, accel, workers=args.workers)
    doc = {"command": "verify", **reports_to_json(reports, summary)}
    code = EXIT_OK if summary.failed == 0 else EXIT_FAIL
    return code, render_text(reports, summary), doc


def _cmd_catalog(args, prec):
    entries = catalog()
    doc = {"command": "catalog", "count": len(entries), "entries": [e.to_json() for e in entries]}
    w = max(len(e.id) for e in entries)
    lines = []
    for e in entries:
        flags = f"  [{', '.join(sorted(e.flags))}]" if e.flags else ""
        lines.append(f"{e.id:<{w}}  {e.identity.lhs.normalized()} = {e.expected}{flags}")
    fmt = args.format or args.output
    if fmt == "json":
        args.output = "json"
    return EXIT_OK, "\n".join(lines), doc


def _value_precision(text: str) -> int:
    mantissa = re.split(r"[eE]", text)[0].lstrip("+-").replace(".", "").lstrip("0")
    bits = int(len(mantissa) * math.log2(10))
    if bits < 128:
        raise UsageError(f"value carries about {bits} bits; recognition needs at least 39 significant digits")
    return bits


def _cmd_recognize(args, prec, explicit_prec: bool):
    text = args.value.strip()
    if not explicit_prec:
        prec = _value_precision(text)
    try:
        x = BigFloat(text, prec)
    except ValueError:
        raise UsageError(f"not a decimal number: {args.value!r}") from None
    value, rel = recognize_detailed(x, prec, args.coeff_bound)
    doc = {
        "command": "recognize",
        "input": text,
        "precision_bits": prec,
        "recognized": value is not None,
        "exact": None if value is None else str(value),
        "exact_terms": None if value is None else value.to_json(),
        "relation": list(rel.coefficients),
        "confidence": rel.confidence,
    }
    if value is None:
        return EXIT_FAIL, "none", doc
    return EXIT_OK, str(value), doc


def _emit_error(kind: str, message: str, output: str, out, err):
    message = " ".join(str(message).split())
    print(f"error: {kind}: {message}", file=err)
    if output == "json":
        print(json.dumps({"error": {"kind": kind, "message": message}}, indent=2), file=out)


def run(argv=None, out=None, err=None) -> int:
    """Run the command line and return the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    output = "json" if "--output=json" in argv or _after(argv, "--output") == "json" else "text"
    try:
        args = parser.parse_args(_join_negative(argv))
        if args.command is None:
            raise UsageError("a subcommand is required")
        explicit = args.precision is not None or bool(os.environ.get(PRECISION_ENV, "").strip())
        prec = args.precision if args.precision is not None else _default_precision()
        output = args.output
        handler = {
            "eval": _cmd_eval,
            "closed": _cmd_closed,
            "identity": _cmd_identity,
            "verify": _cmd_verify,
            "catalog": _cmd_catalog,
        }.get(args.command)
        if handler is None:
            code, text, doc = _cmd_recognize(args, prec, explicit)
        else:
            code, text, doc = handler(args, prec)
        output = args.output
    except UsageError as exc:
        _emit_error("usage", exc, output, out, err)
        print(parser.format_usage().strip(), file=err)
        return EXIT_USAGE
    except (BudgetExceededError, NumericalBreakdownError) as exc:
        _emit_error(exc.kind, exc, output, out, err)
        return EXIT_FAIL
    except HypersumError as exc:
        _emit_error(exc.kind, exc, output, out, err)
        return EXIT_DOMAIN
    if output == "json":
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(text, file=out)
    return code


def _after(argv, flag):
    try:
        return argv[argv.index(flag) + 1]
    except (ValueError, IndexError):
        return None


def main() -> None:
    sys.exit(run())
