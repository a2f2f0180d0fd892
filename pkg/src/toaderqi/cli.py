"""Command-line front end: eval, verify, constants, series, table, probe.

Exit status: 0 on success, 1 when a theorem case (or a sharpness probe)
fails, 2 on usage errors. Output goes to stdout as JSON (floats with 17
significant digits) or CSV.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import means, registry, sequences, sharp, special
from .errors import DomainError, NoSharpnessData, UnknownCase, UnknownSequence, UnsupportedKind

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_LAMBDA_P = (0.9, 0.95)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output


def _json_value(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, float):
        return "%.17g" % v if math.isfinite(v) else "null"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return json.dumps(f"{v.numerator}/{v.denominator}")
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json_value(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    raise TypeError(f"cannot serialise {type(v).__name__}")


def dumps(obj) -> str:
    return _json_value(obj) + "\n"


def _csv_cell(v):
    if isinstance(v, float):
        return "%.17g" % v
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return " ".join(_csv_cell(x) for x in v)
    if v is None:
        return ""
    return str(v)


def csv_rows(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_csv_cell(x) for x in r])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands


def _number(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    return v


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def cmd_eval(args) -> tuple[str, int]:
    kind = means.MeanKind.parse(args.kind)
    cfg = special.DEFAULT_QUAD
    if args.tolerance is not None:
        cfg = special.QuadratureConfig(tolerance=args.tolerance)
    value = means.evaluate(kind, (args.a, args.b), cfg)
    if args.format == "csv":
        return csv_rows(["mean", "a", "b", "value"], [[str(kind), args.a, args.b, value]]), EXIT_OK
    return dumps({"mean": str(kind), "a": args.a, "b": args.b, "value": value}), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    ids = args.ids or None
    reports = registry.verify_all(ids, samples=args.samples, seed=args.seed, workers=args.jobs)
    failed = [r.id for r in reports if not r.passed]
    code = EXIT_FAIL if failed else EXIT_OK
    if args.format == "csv":
        rows = [[r.id, r.status, r.samples, r.seed, r.min_margin, r.min_location, r.min_link,
                 r.violation_count, r.fatal_count, str(r.passed).lower()] for r in reports]
        return csv_rows(["id", "status", "samples", "seed", "min_margin", "min_location",
                         "min_link", "violation_count", "fatal_count", "passed"], rows), code
    return dumps({"cases": [r.to_json() for r in reports], "failed": failed}), code


def cmd_constants(args) -> tuple[str, int]:
    tol = args.tolerance if args.tolerance is not None else 1e-10
    res = sharp.find_t0_delta0(tol)
    lam = [(p, sharp.find_lambda0(p, tol)) for p in (args.p or DEFAULT_LAMBDA_P)]
    if args.format == "csv":
        rows = [["t0", "", res.location, res.value]]
        rows += [["lambda0", p, r.location, r.value] for p, r in lam]
        return csv_rows(["constant", "p", "t", "value"], rows), EXIT_OK
    return dumps({
        "t0": res.location,
        "delta0": res.value,
        "lambda0": [{"p": p, "t": r.location, "value": r.value} for p, r in lam],
    }), EXIT_OK


def cmd_series(args) -> tuple[str, int]:
    if args.kind not in special.COEFF_TABLES:
        raise UsageError(f"unknown series {args.kind!r}; choose from {', '.join(special.COEFF_TABLES)}")
    table = special.COEFF_TABLES[args.kind](args.n_max)
    rows = list(enumerate(table.coefficients))
    if args.format == "csv":
        return csv_rows(["n", "value"], rows), EXIT_OK
    return dumps({"series": args.kind, "coefficients": [{"n": n, "value": c} for n, c in rows]}), EXIT_OK


def emit_table(name: str, n_max: int, fmt: str = "json") -> str:
    values = sequences.sequence_values(name, n_max)
    if fmt == "csv":
        return csv_rows(["n", "value"], [[v.n, v.value] for v in values])
    return dumps({"sequence": name, "rows": [{"n": v.n, "value": v.value} for v in values]})


def cmd_table(args) -> tuple[str, int]:
    return emit_table(args.sequence, args.n_max, args.format), EXIT_OK


def cmd_probe(args) -> tuple[str, int]:
    results = registry.sharpness_probe(args.id)
    code = EXIT_OK if all(p.ok for p in results) else EXIT_FAIL
    if args.format == "csv":
        rows = [[args.id, p.label, p.endpoint, p.t, p.value, p.expected, p.tolerance,
                 str(p.ok).lower()] for p in results]
        return csv_rows(["id", "label", "endpoint", "t", "value", "expected", "tolerance", "ok"],
                        rows), code
    return dumps({"id": args.id, "probes": [p.to_json() for p in results]}), code


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--tolerance", type=float, default=None,
                        help="quadrature tolerance for eval, solver tolerance for constants")

    parser = _Parser(prog="toaderqi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate a mean")
    p.add_argument("kind")
    p.add_argument("a", type=_number)
    p.add_argument("b", type=_number)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="sample-verify registry cases")
    p.add_argument("ids", nargs="*")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("constants", parents=[common], help="t0, delta0 and lambda0(p)")
    p.add_argument("--p", type=float, action="append")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("series", parents=[common], help="exact power-series coefficients")
    p.add_argument("kind")
    p.add_argument("n_max", type=_nonneg_int)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("table", parents=[common], help="sequence values")
    p.add_argument("sequence")
    p.add_argument("n_max", type=_nonneg_int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("probe", parents=[common], help="sharpness probes of a case")
    p.add_argument("id")
    p.set_defaults(func=cmd_probe)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "samples", 1) < 1:
            raise UsageError("--samples must be >= 1")
        text, code = args.func(args)
    except (UsageError, DomainError, UnsupportedKind, UnknownCase, UnknownSequence,
            NoSharpnessData) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"error: {type(exc).__name__}: {msg}\n")
        return EXIT_USAGE
    except SystemExit as exc:   # --help
        return int(exc.code or 0)
    except ArithmeticError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL
    out.write(text)
    return code


def main() -> None:
    sys.exit(run())
