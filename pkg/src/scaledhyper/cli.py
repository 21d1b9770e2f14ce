"""Command-line interface: ``scaledhyper {eval,spectrum,moments,sweep,verify}``.

Exit codes: 0 success, 1 domain error, 2 parse error, 3 verification failure.

CSV columns
  eval:     a_re, a_im, b_re, b_im
  spectrum: t, x, R, value, conjugate, spectral_class, algebraic_class,
            similarity_residual
  moments:  word, oracle_re, oracle_im, closed, gap
  sweep:    t, det, algebraic_class, R, spectral_class, self_adjoint,
            projection, normal, unitary, error
  verify:   invariant, module, checked, failures, max_residual, passed
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Sequence

from . import freeprob, ring, spectral, textio
from .errors import HypercomplexError, ParseError
from .freeprob import StarWord
from .ring import DEFAULT_TOL, Hypercomplex
from .textio import DEFAULT_PRECISION, render_complex, render_hypercomplex
from .verify import INVARIANT_NAMES, run_verify

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_VERIFY = 3

REFUSED = "n/a (similarity not established)"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-t", "--scale", type=float, default=-1.0, help="scale t (default -1)")
    p.add_argument("--format", choices=("human", "json", "csv"), default=None)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                   help="significant digits for human and csv output (default 12)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="classification tolerance")
    p.add_argument("--seed", type=int, default=0, help="random seed (verify)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(
        prog="scaledhyper",
        description="Arithmetic, spectra and free moments of t-scaled hypercomplex numbers.",
        epilog=__doc__.split("\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression in H_t")
    p.add_argument("expr", help='e.g. "(0,1)*(0,1)", "inv((2i,5))", "(1,0)+(0,0)"')

    p = sub.add_parser("spectrum", parents=[common], help="spectral value and classes")
    p.add_argument("x", help='element "(a,b)", e.g. "(1+3i,-1+1i)"')

    p = sub.add_parser("moments", parents=[common], help="free moments of star words")
    p.add_argument("x")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--words", help='comma-separated words over {1,*}, e.g. "11,1*"')
    g.add_argument("--nmax", type=int, help="moments of T, T^2, ..., T^nmax")

    p = sub.add_parser("sweep", parents=[common], help="tabulate classes across a range of t")
    p.add_argument("x")
    p.add_argument("--from", dest="t_from", type=float, required=True)
    p.add_argument("--to", dest="t_to", type=float, required=True)
    p.add_argument("--step", type=float, required=True)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--only", help="comma-separated invariant names: " + ", ".join(INVARIANT_NAMES))
    return parser


# ---- formatting helpers ---------------------------------------------------

def _num(v: float, precision: int) -> str:
    s = f"{v:.{precision}g}"
    return "0" if s == "-0" else s


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


# ---- commands -------------------------------------------------------------

def cmd_eval(args) -> str:
    t = ring.check_scale(args.scale)
    tree = textio.parse_expression(args.expr)
    x = textio.evaluate_expression(t, tree, args.tol)
    fmt = args.format or "human"
    if fmt == "json":
        return _json({"t": t, "result": textio.hypercomplex_to_json(x)})
    if fmt == "csv":
        p = args.precision
        return _csv([["a_re", "a_im", "b_re", "b_im"],
                     [_num(v, p) for v in (x.a.real, x.a.imag, x.b.real, x.b.imag)]])
    return render_hypercomplex(x, args.precision) + "\n"


def cmd_spectrum(args) -> str:
    t = ring.check_scale(args.scale)
    x = textio.parse_hypercomplex(args.x)
    s = spectral.spectralize(t, x)
    w, wc = s.value(), s.symbolic_conjugate().value()
    scls = spectral.classify_spectral(t, x, args.tol)
    acls = ring.classify_algebraic(t, x, args.tol)
    resid = spectral.similarity_residual(t, x) if t < 0 else None
    fmt = args.format or "human"
    p = args.precision
    if fmt == "json":
        return _json({
            "t": t,
            "x": textio.hypercomplex_to_json(x),
            "spectral_value": s.to_json(),
            "spectral_class": str(scls),
            "algebraic_class": str(acls),
            "similarity_residual": resid,
        })
    if fmt == "csv":
        return _csv([
            ["t", "x", "R", "value", "conjugate", "spectral_class", "algebraic_class", "similarity_residual"],
            [_num(t, p), render_hypercomplex(x, p), _num(s.R, p), render_complex(w, p),
             render_complex(wc, p), str(scls), str(acls), "" if resid is None else _num(resid, p)],
        ])
    lines = [
        f"t                    {_num(t, p)}",
        f"x                    {render_hypercomplex(x, p)}",
        f"radicand R           {_num(s.R, p)}",
        f"spectral value       {render_complex(w, p)}",
        f"symbolic conjugate   {render_complex(wc, p)}",
        f"spectral class       {scls}",
        f"algebraic class      {acls}",
    ]
    if resid is not None:
        lines.append(f"similarity residual  {resid:.3g}")
    return "\n".join(lines) + "\n"


def _parse_words(text: str) -> list[StarWord]:
    words = [StarWord.parse(w) for w in text.split(",") if w.strip()]
    if not words:
        raise ParseError("no words given")
    return words


def cmd_moments(args) -> str:
    t = ring.check_scale(args.scale)
    x = textio.parse_hypercomplex(args.x)
    if args.words is not None:
        words = _parse_words(args.words)
    else:
        if args.nmax < 1:
            raise ValueError("--nmax must be >= 1")
        words = [StarWord("1" * k) for k in range(1, args.nmax + 1)]
    rows = freeprob.word_moments(t, x, words)
    fmt = args.format or "human"
    p = args.precision
    if fmt == "json":
        return _json({
            "t": t,
            "x": textio.hypercomplex_to_json(x),
            "moments": [
                {
                    "word": str(w),
                    "oracle": [o.real, o.imag],
                    "closed": c,
                    "gap": None if c is None else abs(c - o.real),
                }
                for w, o, c in rows
            ],
        })
    table = [["word", "oracle_re", "oracle_im", "closed", "gap"]]
    for w, o, c in rows:
        closed = REFUSED if c is None else _num(c, p)
        gap = "" if c is None else _num(abs(c - o.real), p)
        table.append([str(w), _num(o.real, p), _num(o.imag, p), closed, gap])
    if fmt == "csv":
        return _csv(table)
    widths = [max(len(r[k]) for r in table) for k in range(5)]
    return "".join(
        "  ".join(cell.ljust(wd) for cell, wd in zip(r, widths)).rstrip() + "\n" for r in table
    )


def sweep_scales(t_from: float, t_to: float, step: float) -> list[float]:
    """``t_from + k*step`` up to ``t_to``; the endpoint is kept despite rounding."""
    if not (math.isfinite(t_from) and math.isfinite(t_to) and math.isfinite(step)):
        raise ValueError("sweep range must be finite")
    if step <= 0:
        raise ValueError("--step must be > 0")
    if t_to < t_from:
        raise ValueError("--to must be >= --from")
    count = int(math.floor((t_to - t_from) / step + 1e-9))
    return [t_from + k * step for k in range(count + 1)]


SWEEP_COLUMNS = ["t", "det", "algebraic_class", "R", "spectral_class",
                 "self_adjoint", "projection", "normal", "unitary", "error"]


def sweep_rows(x: Hypercomplex, scales: Sequence[float], tol: float) -> list[dict]:
    rows = []
    for t in scales:
        row = {
            "t": t,
            "det": ring.det(t, x),
            "algebraic_class": str(ring.classify_algebraic(t, x, tol)),
            "R": spectral.radicand(t, x),
            "spectral_class": str(spectral.classify_spectral(t, x, tol)),
            "error": "",
        }
        try:
            flags = freeprob.classify_operator(t, x, tol).as_dict()
        except HypercomplexError as exc:
            flags = dict.fromkeys(("self_adjoint", "projection", "normal", "unitary"), "")
            row["error"] = f"{type(exc).__name__}: {exc}"
        row.update(flags)
        rows.append(row)
    return rows


def cmd_sweep(args) -> str:
    x = textio.parse_hypercomplex(args.x)
    rows = sweep_rows(x, sweep_scales(args.t_from, args.t_to, args.step), args.tol)
    fmt = args.format or "csv"
    if fmt == "json":
        return _json({"x": textio.hypercomplex_to_json(x), "rows": rows})
    p = args.precision

    def cell(v):
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, float):
            return _num(v, p)
        return v

    table = [SWEEP_COLUMNS] + [[cell(r[c]) for c in SWEEP_COLUMNS] for r in rows]
    if fmt == "csv":
        return _csv(table)
    widths = [max(len(r[k]) for r in table) for k in range(len(SWEEP_COLUMNS))]
    return "".join(
        "  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip() + "\n" for r in table
    )


def cmd_verify(args) -> tuple[str, int]:
    if args.samples < 1:
        raise ValueError("--samples must be >= 1")
    only = [s.strip() for s in args.only.split(",")] if args.only else None
    report = run_verify(args.seed, args.samples, only)
    code = EXIT_OK if report.passed else EXIT_VERIFY
    if not report.passed:
        print("verification failed: " + ", ".join(report.failing), file=sys.stderr)
    fmt = args.format or "human"
    if fmt == "json":
        return _json({
            "seed": report.seed,
            "samples": report.samples,
            "passed": report.passed,
            "failing": report.failing,
            "invariants": [
                {"name": r.name, "module": r.module, "checked": r.checked, "failures": r.failures,
                 "max_residual": r.max_residual, "first_failure": r.first_failure}
                for r in report.results
            ],
        }), code
    if fmt == "csv":
        rows = [["invariant", "module", "checked", "failures", "max_residual", "passed"]]
        rows += [[r.name, r.module, r.checked, r.failures, f"{r.max_residual:.3g}",
                  "true" if r.passed else "false"] for r in report.results]
        return _csv(rows), code
    lines = [f"verify seed={report.seed} samples={report.samples}"]
    for r in report.results:
        status = "ok  " if r.passed else "FAIL"
        lines.append(f"{status} {r.name:32s} checked={r.checked:<7d} max_residual={r.max_residual:.3g}")
        if not r.passed:
            lines.append(f"     {r.failures} failure(s); first: {r.first_failure}")
    lines.append("all invariants passed" if report.passed
                 else "failing invariants: " + ", ".join(report.failing))
    return "\n".join(lines) + "\n", code


COMMANDS = {
    "eval": cmd_eval,
    "spectrum": cmd_spectrum,
    "moments": cmd_moments,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (HypercomplexError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    code = EXIT_OK
    if isinstance(out, tuple):
        out, code = out
    sys.stdout.write(out)
    return code
