"""Command-line front end: subcommand dispatch, JSON ingestion, and
canonical text/JSON reports.

Exit codes: 0 success, 1 mathematical check failure, 2 input/output
error, 3 validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, jets, k0, projspace, stringy
from .expr import ExprError, parse_expr

EXIT_OK = 0
EXIT_MATH = 1
EXIT_IO = 2
EXIT_VALIDATION = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def emit_table(rows, header=None) -> str:
    """Aligned fixed-width columns with a stable row order."""
    rows = [[str(c) for c in row] for row in rows]
    all_rows = ([list(header)] if header else []) + rows
    if not all_rows:
        return ""
    widths = [max(len(r[i]) for r in all_rows)
              for i in range(len(all_rows[0]))]
    lines = []
    if header:
        lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _emit(args, text_value, json_value):
    if args.output == "json":
        print(json.dumps(json_value, indent=2, sort_keys=True))
    else:
        print(text_value)


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON in {path}: {exc}", EXIT_VALIDATION) from exc


def _parse_class(text: str) -> k0.K0Class:
    poly = parse_expr(text, variables=("L",))
    return k0.poly_to_class(poly, {"L": k0.LEFSCHETZ})


# ---------------------------------------------------------------------
# subcommands


def cmd_genus(args) -> int:
    order = max(args.order, args.n)
    series = catalog.builtin_series(args.series, order=order)
    value = catalog.genus_on_projective(series, args.n)
    _emit(args, str(value),
          {"series": args.series, "n": args.n, "value": str(value)})
    return EXIT_OK


def cmd_hrr(args) -> int:
    lhs, rhs, equal = projspace.hrr_check(args.n, args.d)
    text = emit_table([[args.n, args.d, lhs, rhs, equal]],
                      header=("n", "d", "sections", "integral", "equal"))
    _emit(args, text, {"n": args.n, "d": args.d, "sections": str(lhs),
                       "integral": str(rhs), "equal": equal})
    return EXIT_OK if equal else EXIT_MATH


def cmd_ty(args) -> int:
    value = projspace.ty_class_degree(args.n)
    _emit(args, str(value), {"n": args.n, "value": str(value)})
    return EXIT_OK


def cmd_k0(args) -> int:
    if args.action in ("eval", "chiy", "euler"):
        cls = _parse_class(args.arg)
        if args.action == "eval":
            value = cls
        elif args.action == "chiy":
            value = k0.chi_y_of_class(cls)
        else:
            value = k0.euler_of_class(cls)
        _emit(args, str(value), {"action": args.action, "class": args.arg,
                                 "value": str(value)})
        return EXIT_OK
    if args.action == "blowup-check":
        data = _load_json(args.arg)
        try:
            parts = {key: _parse_class(data[key])
                     for key in ("x", "y", "bl", "exc")}
        except KeyError as exc:
            raise CliError(f"blow-up datum misses key {exc}", EXIT_VALIDATION)
        ok = k0.blowup_relation_check(parts["x"], parts["y"],
                                      parts["bl"], parts["exc"])
        _emit(args, f"blow-up relation: {'holds' if ok else 'fails'}",
              {"action": "blowup-check", "holds": ok})
        return EXIT_OK if ok else EXIT_MATH
    if args.action == "pro":
        return _run_pro(args, _load_json(args.arg))
    raise CliError(f"unknown k0 action {args.action!r}", EXIT_VALIDATION)


def _run_pro(args, data: dict) -> int:
    mode = data.get("mode")
    if mode == "euler":
        tower = k0.TowerDatum(eulers=tuple(int(e) for e in data["eulers"]))
        value = k0.pro_euler(tower, int(data["level"]), int(data["chi"]))
        _emit(args, str(value), {"mode": "euler", "value": str(value)})
        return EXIT_OK
    if mode == "class":
        gamma = _parse_class(data["gamma"])
        tower = k0.TowerDatum(gamma=gamma)
        num, left = k0.pro_grothendieck(tower, int(data["level"]),
                                        _parse_class(data["value"]))
        text = str(num) if left == 0 else f"({num}) / ({gamma})^{left}"
        _emit(args, text, {"mode": "class", "numerator": str(num),
                           "denominator_power": left})
        return EXIT_OK
    raise CliError("tower mode must be 'euler' or 'class'", EXIT_VALIDATION)


def cmd_pro(args) -> int:
    return _run_pro(args, _load_json(args.file))


def cmd_stringy(args) -> int:
    datum = stringy.load_datum(args.file)
    if args.action == "compare":
        if not args.file2:
            raise CliError("compare needs a second datum file", EXIT_VALIDATION)
        other = stringy.load_datum(args.file2)
        report = stringy.invariance_check(datum, other)
        rows = [(label, v1, v2, flag) for label, (v1, v2, flag) in (
            ("integral", report.integral), ("E-function", report.e_function),
            ("chi_y", report.chi_y), ("euler", report.euler))]
        text = emit_table(rows, header=("invariant", "first", "second", "equal"))
        _emit(args, text, {
            label: {"first": str(v1), "second": str(v2), "equal": flag}
            for label, v1, v2, flag in rows})
        return EXIT_OK if report.all_equal else EXIT_MATH
    if args.action == "integral":
        if args.relative:
            rows = []
            names = [n for n, _ in datum.components]
            for subset in datum.subsets():
                label = "{" + ", ".join(names[i] for i in sorted(subset)) + "}"
                rows.append((label, datum.open_stratum(subset)))
            text = emit_table(rows, header=("stratum", "class"))
            _emit(args, text,
                  {label: str(cls) for label, cls in rows})
            return EXIT_OK
        value = stringy.motivic_integral(datum)
    elif args.action == "efun":
        value = stringy.stringy_E(datum)
    elif args.action == "chiy":
        value = stringy.stringy_chi_y(datum)
    elif args.action == "euler":
        value = stringy.stringy_euler(datum)
    else:
        raise CliError(f"unknown stringy action {args.action!r}",
                       EXIT_VALIDATION)
    _emit(args, str(value), {"action": args.action, "value": str(value)})
    return EXIT_OK


def cmd_jets(args) -> int:
    if args.action != "oracle":
        raise CliError(f"unknown jets action {args.action!r}", EXIT_VALIDATION)
    try:
        exponents = tuple(int(a) for a in args.exponents.split(","))
    except ValueError as exc:
        raise CliError(f"bad exponent list {args.exponents!r}",
                       EXIT_VALIDATION) from exc
    spec = jets.JetSpec(args.dim, exponents, level=max(args.pmax, 1))
    partial, closed, verdict = jets.oracle_integral(spec, args.pmax)
    text = emit_table(
        [["partial", partial], ["closed", closed], ["verdict", verdict]])
    _emit(args, text, {"partial": str(partial), "closed": str(closed),
                       "verdict": verdict})
    return EXIT_OK if verdict else EXIT_MATH


# ---------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genera",
        description="Exact computation of genera, Grothendieck-ring "
                    "classes, and stringy invariants.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=16,
                        help="series truncation order (default 16)")
    common.add_argument("--output", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genus", parents=[common],
                       help="genus of a projective space")
    p.add_argument("--series", required=True, choices=catalog.SERIES_NAMES)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("hrr", parents=[common],
                       help="Euler characteristic of O(d) two ways")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_hrr)

    p = sub.add_parser("ty", parents=[common],
                       help="degree of the modified Todd class")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_ty)

    p = sub.add_parser("k0", parents=[common],
                       help="Grothendieck-ring calculations")
    p.add_argument("action",
                   choices=("eval", "chiy", "euler", "blowup-check", "pro"))
    p.add_argument("arg", help="class expression in L, or a JSON file")
    p.set_defaults(func=cmd_k0)

    p = sub.add_parser("stringy", parents=[common],
                       help="stringy invariants of resolution data")
    p.add_argument("action",
                   choices=("integral", "efun", "chiy", "euler", "compare"))
    p.add_argument("file")
    p.add_argument("file2", nargs="?")
    p.add_argument("--relative", action="store_true",
                   help="keep per-stratum labels instead of pushing to a point")
    p.set_defaults(func=cmd_stringy)

    p = sub.add_parser("jets", parents=[common],
                       help="jet-space oracle for monomial divisors")
    p.add_argument("action", choices=("oracle",))
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--exponents", required=True,
                   help="comma-separated nonnegative integers")
    p.add_argument("--pmax", type=int, default=24)
    p.set_defaults(func=cmd_jets)

    p = sub.add_parser("pro", parents=[common],
                       help="proalgebraic tower quotients")
    p.add_argument("file")
    p.set_defaults(func=cmd_pro)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.order < 1:
        print("error: --order must be >= 1", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (stringy.ValidationError, k0.ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except stringy.ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_MATH
    except OSError as exc:
        print(f"error: cannot read {getattr(exc, 'filename', None) or exc}: "
              f"{exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
