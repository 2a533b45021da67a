"""Command-line front end.

Subcommands: solve (iteration table and root), trace (rule table and word
generations), construct (SVG of the final division), scan (roots over a box
of shifts), bench (words engine vs counts engine).

Exit codes: 0 on success/CONVERGED, 2 when an iteration did not converge or a
construction is impossible, 1 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .construction import (
    ZeroDenominator,
    evaluate_trace,
    plan_quotient_construction,
    render_svg,
)
from .gaussian import GaussInt, gauss_divide, gauss_to_text, to_float
from .iteration import (
    RootEstimate,
    ShiftParams,
    SolveOptions,
    SolveStatus,
    solve,
    scan_shifts,
    step_counts,
)
from .matrices import ZeroBeta, companion, complexify, shift
from .polynomial import (
    DegreeZero,
    LeadingZero,
    ParseError,
    parse_gauss_literal,
    parse_polynomial,
)
from .rewriting import (
    CapExceeded,
    Word,
    cancel_conjugates,
    count,
    derive_rules,
    iterate_words,
    rewrite_word,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_CONVERGED = 2

_INPUT_ERRORS = (ParseError, DegreeZero, LeadingZero, ZeroBeta, ValueError)


def format_complex4(z: complex) -> str:
    """Fixed 4-decimal display, "0.7071 + 0.7071 i" style."""
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.4f} {sign} {abs(z.imag):.4f} i"


def build_report(poly_text: str, alpha: GaussInt, beta: GaussInt, engine: str,
                 result: RootEstimate) -> dict:
    """JSON-ready run report; counts and rationals as decimal strings."""
    iterations = []
    for rec in result.records:
        entry: dict = {"k": rec.k, "counts": [str(c) for c in rec.counts]}
        if rec.estimate is None:
            entry["estimate"] = None
            entry["float"] = None
        else:
            q = rec.estimate
            fz = to_float(q)
            entry["estimate"] = {
                "num_re": str(q.num.re),
                "num_im": str(q.num.im),
                "den": str(q.den),
            }
            entry["float"] = {"re": fz.real, "im": fz.imag}
        iterations.append(entry)
    final = None
    if result.float_value is not None:
        final = {"re": result.float_value.real, "im": result.float_value.imag}
    return {
        "polynomial": poly_text,
        "alpha": gauss_to_text(alpha),
        "beta": gauss_to_text(beta),
        "engine": engine,
        "iterations": iterations,
        "result": {
            "status": result.status.value,
            "float": final,
            "residual": result.residual,
            "iterations": result.iterations,
        },
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def parse_report(text: str) -> dict:
    return json.loads(text)


def _ratio_text(rec) -> str:
    if rec.estimate is None:
        return "inf"
    return format_complex4(to_float(rec.estimate))


def format_table(result: RootEstimate) -> str:
    """Iteration table in the count-columns-then-ratio layout."""
    dim = len(result.records[0].counts) if result.records else 0
    header = ["k"] + [f"n({i})" for i in range(dim)] + ["ratio"]
    rows = []
    for rec in result.records:
        rows.append([str(rec.k)] + [str(c) for c in rec.counts] + [_ratio_text(rec)])
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row[:-1]):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.rjust(widths[i]) for i, h in enumerate(header[:-1])) + "  " + header[-1]]
    for row in rows:
        lines.append("  ".join(c.rjust(widths[i]) for i, c in enumerate(row[:-1])) + "  " + row[-1])
    return "\n".join(lines) + "\n"


def format_summary(poly_text: str, alpha: GaussInt, beta: GaussInt, engine: str,
                   result: RootEstimate) -> str:
    lines = [
        f"polynomial: {poly_text}",
        f"alpha: {gauss_to_text(alpha)}  beta: {gauss_to_text(beta)}  engine: {engine}",
        f"status: {result.status.value}",
        f"iterations: {result.iterations}",
    ]
    if result.value is not None:
        lines.append(f"estimate: {format_complex4(result.float_value)}")
        lines.append(f"exact: {result.value}")
        lines.append(f"residual: {result.residual:.3e}")
    else:
        lines.append("estimate: none (no defined ratio)")
    return "\n".join(lines) + "\n"


def format_csv(result: RootEstimate) -> str:
    dim = len(result.records[0].counts) if result.records else 0
    lines = [",".join(["k"] + [f"n({i})" for i in range(dim)] + ["estimate_re", "estimate_im"])]
    for rec in result.records:
        cells = [str(rec.k)] + [str(c) for c in rec.counts]
        if rec.estimate is None:
            cells += ["", ""]
        else:
            fz = to_float(rec.estimate)
            cells += [repr(fz.real), repr(fz.imag)]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _options_from_args(args: argparse.Namespace) -> SolveOptions:
    return SolveOptions(
        tol=args.tol,
        stable_steps=args.stable_steps,
        residual_tol=args.residual_tol,
        max_iter=args.max_iter,
        dedupe_tol=args.dedupe_tol,
        engine=args.engine,
        exact_iters=args.iters,
        length_cap=args.length_cap,
    )


def _run_solve(args: argparse.Namespace):
    p = parse_polynomial(args.polynomial)
    alpha = parse_gauss_literal(args.alpha)
    beta = parse_gauss_literal(args.beta)
    result = solve(p, ShiftParams(alpha, beta), _options_from_args(args))
    return p, alpha, beta, result


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        _, alpha, beta, result = _run_solve(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    if args.format == "json":
        out = report_to_json(build_report(args.polynomial, alpha, beta, args.engine, result))
    elif args.format == "csv":
        out = format_csv(result)
    else:
        out = format_table(result)
        out += "\n" + format_summary(args.polynomial, alpha, beta, args.engine, result)
    _write(out, args.output)
    return EXIT_OK if result.status is SolveStatus.CONVERGED else EXIT_NOT_CONVERGED


def cmd_trace(args: argparse.Namespace) -> int:
    try:
        p = parse_polynomial(args.polynomial)
        alpha = parse_gauss_literal(args.alpha)
        beta = parse_gauss_literal(args.beta)
        matrix = complexify(shift(companion(p), alpha, beta))
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rules = derive_rules(matrix)
    lines = ["rules:"] + rules.display_lines() + ["", "words:"]
    start = Word(p.degree, (0,))
    code = EXIT_OK
    try:
        words = iterate_words(rules, start, args.generations, args.length_cap)
    except CapExceeded as exc:
        words = exc.words
        print(f"stopped early: {exc}", file=sys.stderr)
        code = EXIT_NOT_CONVERGED
    lines += [w.display() for w in words]
    _write("\n".join(lines) + "\n", args.output)
    return code


def _trace_to_json(trace, point, quotient) -> str:
    fq = to_float(quotient)
    doc = {
        "point": {"x": point.x, "y": point.y},
        "quotient": {
            "num_re": str(quotient.num.re),
            "num_im": str(quotient.num.im),
            "den": str(quotient.den),
            "float": {"re": fq.real, "im": fq.imag},
        },
        "steps": [
            {
                "kind": s.kind.value,
                "inputs": list(s.inputs),
                "output": s.output,
                "color": s.color,
                "amount": s.amount,
            }
            for s in trace.steps
        ],
        "result_label": trace.result_label,
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_construct(args: argparse.Namespace) -> int:
    if args.counts:
        try:
            parts = [int(x) for x in args.counts.split(",")]
        except ValueError:
            print("error: --counts expects four comma-separated integers", file=sys.stderr)
            return EXIT_USAGE
        if len(parts) != 4:
            print("error: --counts expects exactly four integers", file=sys.stderr)
            return EXIT_USAGE
        u1, v1, u2, v2 = parts
    elif args.polynomial:
        try:
            p, _, _, result = _run_solve(args)
        except _INPUT_ERRORS as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except CapExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NOT_CONVERGED
        if not result.records or len(result.records[-1].counts) < 4:
            print("error: construction needs a degree >= 2 iteration", file=sys.stderr)
            return EXIT_USAGE
        u1, v1, u2, v2 = result.records[-1].counts[:4]
    else:
        print("error: give a polynomial or --counts", file=sys.stderr)
        return EXIT_USAGE
    try:
        trace = plan_quotient_construction(u1, v1, u2, v2)
    except ZeroDenominator as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    point = evaluate_trace(trace)
    quotient = gauss_divide(GaussInt(u1, -v1), GaussInt(u2, -v2))
    fq = to_float(quotient)
    if args.format == "json":
        _write(_trace_to_json(trace, point, quotient), None)
    else:
        sys.stdout.write(f"counts: ({u1}, {v1}, {u2}, {v2})\n")
        sys.stdout.write(f"constructed point:  ({point.x:.9f}, {point.y:.9f})\n")
        sys.stdout.write(
            f"algebraic quotient: ({fq.real:.9f}, {fq.imag:.9f})  = {quotient}\n"
        )
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(render_svg(trace))
        sys.stdout.write(f"svg written to {args.output}\n")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        p = parse_polynomial(args.polynomial)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    hits = scan_shifts(p, args.radius, _options_from_args(args))
    if args.format == "json":
        doc = {
            "polynomial": args.polynomial,
            "radius": args.radius,
            "roots": [
                {
                    "float": {
                        "re": h.estimate.float_value.real,
                        "im": h.estimate.float_value.imag,
                    },
                    "exact": str(h.estimate.value),
                    "residual": h.estimate.residual,
                    "alpha": gauss_to_text(h.shift.alpha),
                    "iterations": h.estimate.iterations,
                }
                for h in hits
            ],
        }
        _write(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [f"polynomial: {args.polynomial}   shifts tried: alpha in box radius {args.radius}"]
        for h in hits:
            z = h.estimate.float_value
            lines.append(
                f"root: {z.real:+.10f} {'+' if z.imag >= 0 else '-'} {abs(z.imag):.10f} i"
                f"   residual: {h.estimate.residual:.3e}"
                f"   alpha: {gauss_to_text(h.shift.alpha)}"
                f"   iterations: {h.estimate.iterations}"
            )
        if not hits:
            lines.append("no converged roots in the scanned box")
        _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        p = parse_polynomial(args.polynomial)
        alpha = parse_gauss_literal(args.alpha)
        beta = parse_gauss_literal(args.beta)
        matrix = complexify(shift(companion(p), alpha, beta))
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    finals: dict[str, tuple] = {}
    dim = 2 * p.degree
    for engine in engines:
        if engine not in ("counts", "words"):
            print(f"error: unknown engine '{engine}'", file=sys.stderr)
            return EXIT_USAGE
        t0 = time.perf_counter()
        if engine == "counts":
            v = (1,) + (0,) * (dim - 1)
            for _ in range(args.generations):
                v = step_counts(matrix, v)
            elapsed = time.perf_counter() - t0
            digits = max(len(str(abs(c))) for c in v)
            sys.stdout.write(
                f"counts engine: k={args.generations}  total {elapsed:.6f}s  "
                f"per-step {elapsed / max(1, args.generations):.6f}s  max count digits {digits}\n"
            )
        else:
            rules = derive_rules(matrix)
            word = Word(p.degree, (0,))
            peak = len(word)
            try:
                for _ in range(args.generations):
                    nxt = sum(len(rules.images[s]) for s in word.symbols)
                    if nxt > args.length_cap:
                        raise CapExceeded([word], nxt, args.length_cap)
                    word = cancel_conjugates(rewrite_word(rules, word))
                    peak = max(peak, len(word))
            except CapExceeded as exc:
                print(f"words engine stopped early: {exc}", file=sys.stderr)
                return EXIT_NOT_CONVERGED
            elapsed = time.perf_counter() - t0
            v = count(word)
            sys.stdout.write(
                f"words engine: k={args.generations}  total {elapsed:.6f}s  "
                f"per-step {elapsed / max(1, args.generations):.6f}s  peak word length {peak}\n"
            )
        finals[engine] = v
    if len(finals) > 1:
        values = list(finals.values())
        agree = all(v == values[0] for v in values)
        sys.stdout.write(
            f"engines agree at k={args.generations}: {'yes' if agree else 'NO'}\n"
        )
        if not agree:
            return EXIT_NOT_CONVERGED
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_solve_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--alpha", default="0", help="shift alpha, a Gaussian integer literal")
    sp.add_argument("--beta", default="1", help="shift beta, a Gaussian integer literal")
    sp.add_argument("--iters", type=int, default=None, help="run exactly this many iterations")
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--stable-steps", type=int, default=3, dest="stable_steps")
    sp.add_argument("--residual-tol", type=float, default=1e-8, dest="residual_tol")
    sp.add_argument("--max-iter", type=int, default=200, dest="max_iter")
    sp.add_argument("--dedupe-tol", type=float, default=1e-6, dest="dedupe_tol")
    sp.add_argument("--engine", choices=("counts", "words"), default="counts")
    sp.add_argument("--length-cap", type=int, default=1_000_000, dest="length_cap")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.add_argument("-o", "--output", default=None, help="write output to FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="seqroots",
        description="Polynomial roots by sequence replacement and symbol counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="iterate and report the dominant root")
    sp.add_argument("polynomial")
    _add_solve_flags(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("trace", help="print the rule table and word generations")
    sp.add_argument("polynomial")
    sp.add_argument("-k", "--generations", type=int, default=4)
    sp.add_argument("--alpha", default="0")
    sp.add_argument("--beta", default="1")
    sp.add_argument("--length-cap", type=int, default=1_000_000, dest="length_cap")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("construct", help="render the final division as SVG")
    sp.add_argument("polynomial", nargs="?")
    sp.add_argument("--counts", default=None, help="four comma-separated integers u1,v1,u2,v2")
    _add_solve_flags(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("scan", help="find every root reachable from a box of shifts")
    sp.add_argument("polynomial")
    sp.add_argument("--radius", type=int, default=2)
    _add_solve_flags(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("bench", help="time the words engine against the counts engine")
    sp.add_argument("polynomial")
    sp.add_argument("-k", "--generations", type=int, default=13)
    sp.add_argument("--engines", default="counts,words")
    sp.add_argument("--alpha", default="0")
    sp.add_argument("--beta", default="1")
    sp.add_argument("--length-cap", type=int, default=1_000_000, dest="length_cap")
    sp.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
