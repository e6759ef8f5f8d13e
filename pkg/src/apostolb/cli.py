"""Command line: ``table``, ``eval`` and ``verify``.

Exit codes: 0 success, 1 failing verdicts, 2 usage error, 3 mathematical
domain error (for example a pole of a closed form).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .errors import ApostolError, UnboundVariableError
from .exactq import DEFAULT_RING, GaussRational, MultiPoly, parse_rational
from .families import (
    APPELL_CHOICES,
    U_NAMES,
    FamilySpec,
    apostol_bernoulli_number_closed,
    apostol_genocchi,
    bernoulli_number,
    canonical_u_name,
    closed_form_latex,
    closed_form_numerator,
    cs_closed_form,
    family_poly,
    u_factory,
)
from .fps import KernelSpec
from .report import SCHEMA_VERSION
from .theorems import SELECTORS, run_suite, traceability

FAMILIES = (
    "bernoulli-number",
    "bernoulli-poly",
    "apostol-bernoulli-number",
    "apostol-bernoulli-closed",
    "param",
    "param-c",
    "param-s",
    "genocchi",
    "cosine",
    "sine",
    "t-poly",
)
FORMATS = ("plain", "csv", "json", "latex")
RATIONAL_FLAGS = ("--lambda", "--mu", "--x", "--y", "--z")
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
_DEFAULT_M = {"gould-hopper": 2, "trunc-exp": 2, "miller-lee": 1}


class UsageError(Exception):
    pass


def _rational(text: str) -> GaussRational:
    try:
        return GaussRational(parse_rational(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _join_negative_values(argv: list) -> list:
    # argparse takes "-1/2" for an option; glue it to its flag instead
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in RATIONAL_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--v", type=_nonneg, default=1, help="kernel order")
    p.add_argument("--lambda", dest="lam", type=_rational, default=None, metavar="P/Q")
    p.add_argument("--mu", type=_rational, default=GaussRational(-1), metavar="P/Q")
    p.add_argument("--u", default="one", help=f"U factory: {', '.join(U_NAMES)}")
    p.add_argument("--m-param", type=_nonneg, default=None, help="parameter m of the U factory")
    p.add_argument("--appell", choices=APPELL_CHOICES, default=None)
    p.add_argument("--reciprocal", action="store_true", help="use 1/(1-t)^(m+1) for miller-lee")
    p.add_argument("--alpha", type=_nonneg, default=0, help="extra order added to --v")
    p.add_argument("--delta", type=_nonneg, default=0, help="order removed from --v")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apostolb",
        description="Exact tables, evaluation and identity checks for parametric "
                    "Apostol-Bernoulli type polynomial families.")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="emit members 0..N of a family")
    _add_family_flags(t)
    t.add_argument("--n", type=_nonneg, required=True, help="largest index")
    t.add_argument("--format", choices=FORMATS, default="plain")

    e = sub.add_parser("eval", help="evaluate member n at a point")
    _add_family_flags(e)
    e.add_argument("--n", type=_nonneg, required=True)
    for name in ("x", "y", "z"):
        e.add_argument(f"--{name}", type=_rational, default=None, metavar="P/Q")
    e.add_argument("--format", choices=FORMATS, default="plain")

    v = sub.add_parser("verify", help="run the identity suite")
    v.add_argument("--suite", default="all", help=f"one of {', '.join(SELECTORS)}")
    v.add_argument("--max-n", type=_nonneg, default=8)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--v", type=_nonneg, default=2, help="largest kernel order in the grid")
    v.add_argument("--alpha", type=_nonneg, default=2, help="largest secondary order")
    v.add_argument("--delta", type=_nonneg, default=2, help="largest split order")
    v.add_argument("--m-param", type=_nonneg, default=2, help="largest derivative order")
    v.add_argument("--format", choices=("json",), default="json")
    return parser


# -- families -----------------------------------------------------------


def _u_from_args(args):
    try:
        name = canonical_u_name(args.u)
        m = _DEFAULT_M.get(name) if args.m_param is None else args.m_param
        return u_factory(name, m, args.appell, args.reciprocal)
    except ApostolError as exc:
        raise UsageError(str(exc)) from None


def _order(args) -> int:
    v = args.v + args.alpha - args.delta
    if v < 0:
        raise UsageError("--v + --alpha - --delta must be >= 0")
    return v


def _lam(args, default=None) -> GaussRational:
    if args.lam is not None:
        return args.lam
    if default is None:
        raise UsageError(f"--lambda is required for family {args.family}")
    return GaussRational(default)


def _family_spec(args) -> FamilySpec | None:
    trig = {"param": "none", "param-c": "cos", "param-s": "sin"}.get(args.family)
    if trig is not None:
        return FamilySpec(KernelSpec(_order(args), _lam(args, 1), args.mu), _u_from_args(args), trig)
    if args.family == "t-poly":
        return FamilySpec(KernelSpec(0, 1, -1), _u_from_args(args))
    if args.family == "bernoulli-poly":
        return FamilySpec(KernelSpec(1, 1, -1))
    return None


def _member(args, n: int):
    """Member ``n`` as a MultiPoly, or a GaussRational for number families."""
    fam = args.family
    spec = _family_spec(args)
    if spec is not None:
        return family_poly(spec, n)
    if fam == "bernoulli-number":
        return bernoulli_number(n)
    if fam == "apostol-bernoulli-number":
        spec = FamilySpec(KernelSpec(_order(args), _lam(args), args.mu))
        return family_poly(spec, n).constant_term()
    if fam == "apostol-bernoulli-closed":
        if n > 5:
            raise UsageError("closed forms are tabulated for n <= 5")
        if args.lam is None:
            return _ClosedForm(n)
        return apostol_bernoulli_number_closed(n, args.lam)
    if fam == "genocchi":
        return apostol_genocchi(n, _order(args), _lam(args, 1), args.mu)
    if fam in ("cosine", "sine"):
        return cs_closed_form(n)[0 if fam == "cosine" else 1]
    raise UsageError(f"unknown family {fam!r}")


class _ClosedForm:
    """Symbolic closed form ``numerator(lam) / (lam - 1)^n``."""

    def __init__(self, n: int):
        self.n = n

    def text(self) -> str:
        num = closed_form_numerator(self.n)
        if num.is_zero():
            return "0"
        if self.n == 0:
            return num.to_text()
        return f"({num.to_text()})/(lam - 1)^{self.n}"

    def latex(self) -> str:
        return closed_form_latex(self.n)


def _text(value) -> str:
    if isinstance(value, MultiPoly):
        return value.to_text()
    if isinstance(value, _ClosedForm):
        return value.text()
    return str(value)


def _latex(value) -> str:
    if isinstance(value, MultiPoly):
        return value.to_latex()
    if isinstance(value, _ClosedForm):
        return value.latex()
    return MultiPoly.const(DEFAULT_RING, value).to_latex()


def _describe(args) -> dict:
    out = {"family": args.family}
    if args.family in ("param", "param-c", "param-s", "genocchi", "apostol-bernoulli-number"):
        out.update({"v": str(_order(args)), "lambda": str(_lam(args, 1) if args.family != "apostol-bernoulli-number"
                                                          else _lam(args)), "mu": str(args.mu)})
    if args.family == "apostol-bernoulli-closed" and args.lam is not None:
        out["lambda"] = str(args.lam)
    spec = _family_spec(args)
    if spec is not None and args.family not in ("bernoulli-poly",):
        out["U"] = spec.u.label
    return out


# -- output -------------------------------------------------------------


def _format_table(args, rows: list) -> str:
    if args.format == "plain":
        return "".join(f"{n}\t{_text(v)}\n" for n, v in rows)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        for n, v in rows:
            w.writerow([n, _text(v)])
        return buf.getvalue()
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "params": _describe(args),
               "rows": [{"n": n, "value": _text(v)} for n, v in rows]}
        return json.dumps(doc, indent=2) + "\n"
    lines = [r"\begin{tabular}{r|l}", r"$n$ & value \\", r"\hline"]
    lines += [f"{n} & ${_latex(v)}$ \\\\" for n, v in rows]
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def cmd_table(args, out) -> int:
    rows = [(n, _member(args, n)) for n in range(args.n + 1)]
    out.write(_format_table(args, rows))
    return EXIT_OK


def cmd_eval(args, out) -> int:
    if args.family == "apostol-bernoulli-closed" and args.lam is None:
        raise UsageError("eval of a closed form needs --lambda")
    value = _member(args, args.n)
    point = {k: getattr(args, k) for k in ("x", "y", "z") if getattr(args, k) is not None}
    if isinstance(value, MultiPoly):
        spec = _family_spec(args)
        needed = set(spec.variables()) if spec is not None else value.variables()
        if args.family == "genocchi":
            needed = {"x"}
        elif args.family in ("cosine", "sine"):
            needed = {"x", "y"}
        missing = sorted(needed - set(point))
        if missing:
            raise UsageError(f"missing value for {', '.join(missing)}")
        value = value.eval(point)
    if args.format == "json":
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, "params": _describe(args), "n": args.n,
                              "point": {k: str(v) for k, v in point.items()}, "value": str(value)}) + "\n")
    elif args.format == "latex":
        out.write(f"${_latex(value)}$\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    if args.suite not in SELECTORS:
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(SELECTORS)}")
    start = time.perf_counter()
    reports = run_suite(args.suite, args.max_n, args.seed, max_m=args.m_param, max_v=args.v,
                        max_alpha=args.alpha, max_delta=args.delta)
    elapsed = time.perf_counter() - start
    failing = [r for r in reports if not r.passed]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "suite": args.suite,
        "max_n": args.max_n,
        "seed": args.seed,
        "passed": not failing,
        "total": len(reports),
        "failed": len(failing),
        "traceability": traceability(),
        "verdicts": [r.to_dict() for r in (failing or reports)],
    }
    out.write(json.dumps(doc, indent=1) + "\n")
    err.write(f"{len(reports)} verdicts, {len(failing)} failing, {elapsed:.1f} s wall clock\n")
    return EXIT_FAIL if failing else EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "eval":
            return cmd_eval(args, out)
        return cmd_verify(args, out, err)
    except (UsageError, UnboundVariableError) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ApostolError as exc:
        err.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
