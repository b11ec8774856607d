"""Command-line front end.

Every subcommand writes one table to stdout, as CSV (header row, LF line
endings) or as a single JSON object carrying ``schema_version``.  Diagnostics
go to stderr.  Exit codes: 0 ok, 2 usage, 3 numeric failure, 4 budget.
"""
import argparse
import csv
from fractions import Fraction
import io
import json
import math
import sys

import numpy as np

from . import asymptotics, beta_solver, boltzmann, exact_count, lemmas
from .errors import BudgetExceeded, ConvergenceError, DomainError
from .special_functions import floor_and_frac

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_BUDGET = 4


class UsageError(Exception):
    pass


def parse_t(text):
    """``p/q`` and integers parse exactly; anything else is a float."""
    text = text.strip()
    if "/" in text or text.lstrip("+-").isdigit():
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"bad rational t: {text!r}")
    else:
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad t: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError("t must be positive")
    return value


def parse_n_list(text):
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n list: {text!r}")
    if any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("n values must be >= 1")
    return vals


def _t_label(t):
    return str(t) if isinstance(t, Fraction) else repr(float(t))


def _require_analytic(t):
    if float(t) < beta_solver.T_MIN:
        raise UsageError(
            f"t must be >= sqrt(2) + 1e-3 = {beta_solver.T_MIN:.6f} for this subcommand")


def _n_values(args):
    if args.n_list:
        return args.n_list
    if args.n is not None:
        return [args.n]
    raise UsageError("give --n or --n-list")


def cmd_count(args):
    cols = ["t", "n", "L", "frac", "d_t"]
    rows = []
    for n in _n_values(args):
        L, frac = floor_and_frac(args.t, n)
        count = exact_count.build_table(L, n, budget=args.budget)[n] if L >= 1 else 0
        rows.append([_t_label(args.t), n, L, frac, count])
    return cols, rows


def cmd_estimate(args):
    _require_analytic(args.t)
    cols = ["t", "n", "L", "frac", "log_estimate", "estimate"]
    rows = []
    for n in _n_values(args):
        e = asymptotics.estimate_dt(n, args.t)
        rows.append([_t_label(args.t), n, e.L, e.frac_part, e.log_estimate, e.estimate])
    return cols, rows


def cmd_compare(args):
    _require_analytic(args.t)
    cols = ["t", "n", "L", "frac", "d_t_exact_digits", "log_exact", "log_estimate", "ratio"]
    rows = []
    failures = []
    for e in asymptotics.compare_sweep(args.t, _n_values(args), budget=args.budget):
        if e.error:
            failures.append(e.error)
        rows.append([_t_label(args.t), e.n, e.L, e.frac_part, e.exact_digits,
                     e.log_exact, e.log_estimate, e.ratio_to_exact])
    if failures and len(failures) == len(rows):
        raise BudgetExceeded("; ".join(failures))
    for msg in failures:
        print(f"warning: {msg}", file=sys.stderr)
    return cols, rows


def cmd_sample(args):
    _require_analytic(args.t)
    if args.n is None:
        raise UsageError("sample needs --n")
    model = boltzmann.build_model(args.t, args.n)
    rng = np.random.Generator(np.random.PCG64(args.seed))
    cols = ["seed", "index", "size", "num_parts", "largest_part"]
    rows = []
    for i in range(args.count):
        part = boltzmann.parts_from_uniforms(model.p, rng.random(model.L))
        rows.append([args.seed, i, part.size, len(part), part.largest])
    return cols, rows


def cmd_limit_shape(args):
    _require_analytic(args.t)
    if args.points < 2:
        raise UsageError("--points must be >= 2")
    cols = ["t", "x", "y"]
    rows = [[_t_label(args.t), x, y]
            for x, y in asymptotics.limit_shape_curve(args.t, args.points)]
    return cols, rows


def cmd_beta_table(args):
    if args.t_list:
        ts = args.t_list
    else:
        if args.t_min is None or args.t_max is None:
            raise UsageError("give --t-list or --t-min/--t-max")
        ts = list(np.linspace(args.t_min, args.t_max, args.steps))
    cols = ["t", "beta", "beta_prime", "B", "A", "residual", "iterations"]
    rows = []
    for t in ts:
        _require_analytic(t)
        s = beta_solver.solve_beta(t)
        rows.append([_t_label(t), s.beta, s.beta_prime, s.B, s.A, s.residual, s.iterations])
    return cols, rows


def _verify_lemmas():
    xs, ss = lemmas.canonical_lemma1_grid()
    checks = [
        ("lemma1_max_ratio", lemmas.lemma1_max_ratio(xs, ss), lemmas.LEMMA1_CONSTANT, "<="),
        ("lemma1_small_s_ratio", lemmas.lemma1_small_s_max(xs, ss),
         lemmas.SMALL_S_CONSTANT, "<="),
    ]
    for n in (10, 50, 100, 500):
        _, value = lemmas.lemma2_min(n, 0.5)
        checks.append((f"lemma2_min_over_n[n={n}]", value / n, lemmas.LEMMA2_CONSTANT, ">="))
    return checks


def _verify_beta():
    s2 = beta_solver.solve_beta(2)
    s30 = beta_solver.solve_beta(30)
    return [
        ("abs_beta_2", abs(s2.beta), 1e-12, "<="),
        ("beta_prime_2_error", abs(s2.beta_prime - 1.5), 1e-9, "<="),
        ("beta_30_error", abs(s30.beta - math.pi / (2 * math.sqrt(3))), 1e-8, "<="),
        ("B_30_error", abs(s30.B - math.pi / math.sqrt(3)), 1e-8, "<="),
        ("A_30_error", abs(s30.A - 1 / (4 * 3 ** 0.25)), 1e-6, "<="),
    ]


def _verify_counts():
    checks = [("d_unrestricted_5", exact_count.d_unrestricted(5), 3, "=="),
              ("build_table_5_5", exact_count.build_table(5, 5)[5], 3, "==")]
    T = exact_count.build_table(20, 210)
    checks.append(("total_subsets_L20", sum(T.counts), 2 ** 20, "=="))
    return checks


SUITES = {"lemmas": _verify_lemmas, "beta": _verify_beta, "counts": _verify_counts}


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cols = ["suite", "check", "value", "bound", "relation", "passed"]
    rows = []
    for name in names:
        for check, value, bound, rel in SUITES[name]():
            ok = {"<=": value <= bound, ">=": value >= bound, "==": value == bound}[rel]
            rows.append([name, check, value, bound, rel, bool(ok)])
    return cols, rows


def _fmt(v, precision):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if precision is None:
            return repr(v)
        return f"{v:.{precision}g}"
    return str(v)


def _plain(v):
    if isinstance(v, np.floating):
        return float(v)
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, float) and not math.isfinite(v):
        return None if math.isnan(v) else ("inf" if v > 0 else "-inf")
    return v


def render(cols, rows, fmt, precision, subcommand):
    if fmt == "json":
        payload = {"schema_version": SCHEMA_VERSION, "subcommand": subcommand,
                   "columns": cols,
                   "rows": [dict(zip(cols, (_plain(v) for v in r))) for r in rows]}
        return json.dumps(payload) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_fmt(v, precision) for v in r])
    return buf.getvalue()


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--precision", type=int, default=None,
                        help="significant digits for CSV floats (default: round-trip)")
    common.add_argument("--budget", type=int, default=None,
                        help=f"work budget; defaults to ${exact_count.BUDGET_ENV} or 2^31")

    p = argparse.ArgumentParser(prog="dtpart",
                                description="Distinct-parts partitions with largest part <= t sqrt(n).")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def with_tn(sp, t_required=True):
        sp.add_argument("--t", type=parse_t, required=t_required)
        sp.add_argument("--n", type=int)
        sp.add_argument("--n-list", type=parse_n_list)

    with_tn(sub.add_parser("count", parents=[common], help="exact d_t(n)"))
    with_tn(sub.add_parser("estimate", parents=[common], help="asymptotic estimate"))
    with_tn(sub.add_parser("compare", parents=[common], help="exact vs estimate"))
    sp = sub.add_parser("sample", parents=[common], help="Boltzmann samples")
    with_tn(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=10)
    sp = sub.add_parser("limit-shape", parents=[common], help="limit-shape curve")
    sp.add_argument("--t", type=parse_t, required=True)
    sp.add_argument("--points", type=int, default=101)
    sp = sub.add_parser("verify", parents=[common], help="numerical certificates")
    sp.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    sp = sub.add_parser("beta-table", parents=[common], help="beta, B, A over t")
    sp.add_argument("--t-list", type=lambda s: [parse_t(v) for v in s.split(",")])
    sp.add_argument("--t-min", type=float)
    sp.add_argument("--t-max", type=float)
    sp.add_argument("--steps", type=int, default=11)
    return p


COMMANDS = {"count": cmd_count, "estimate": cmd_estimate, "compare": cmd_compare,
            "sample": cmd_sample, "limit-shape": cmd_limit_shape,
            "verify": cmd_verify, "beta-table": cmd_beta_table}


def main(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cols, rows = COMMANDS[args.subcommand](args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_BUDGET
    except (ConvergenceError, ArithmeticError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NUMERIC
    stdout.write(render(cols, rows, args.format, args.precision, args.subcommand))
    if args.subcommand == "verify" and not all(r[-1] for r in rows):
        return EXIT_NUMERIC
    return EXIT_OK


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
