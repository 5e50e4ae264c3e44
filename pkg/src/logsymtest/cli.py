"""Command-line interface.

Subcommands:

    test       bootstrap-calibrated log-symmetry test on one dataset (JSON)
    simulate   regenerate type-I-error / power tables (CSV + Markdown)
    bench      per-evaluation timing of the statistics (CSV + Markdown)
    summarize  five-number summary, histogram, ECDF (JSON, plot-data CSVs)

Exit codes: 0 success, 1 user error, 2 internal error.  The statistical
decision of `test` is reported in the JSON output, never via exit status.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback

from .calibration import bootstrap_pvalue
from .datasets import builtin_dataset, load_dataset, summarize
from .distributions import parse_distribution
from .errors import LogSymTestError
from .experiments import SimulationPlan, run_benchmark, run_rate_table
from .registry import make_test, parse_test
from .sample import PositiveSample


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on bad usage, not argparse's 2
        raise _UsageError(f"{self.prog}: {message}")


def _split_outside_parens(text: str) -> list[str]:
    """Split a comma list, ignoring commas inside parentheses."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p.strip() for p in parts if p.strip()]


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--data", metavar="PATH", help="read observations from a file")
    src.add_argument(
        "--builtin",
        metavar="NAME",
        help="use a built-in dataset (insulating-fluid, repair-times)",
    )
    parser.add_argument(
        "--format",
        choices=("auto", "csv", "whitespace"),
        default="auto",
        help="input file format (default: auto)",
    )


def _load_input(args) -> tuple[PositiveSample, str]:
    if args.builtin is not None:
        return builtin_dataset(args.builtin), args.builtin
    return load_dataset(args.data, args.format), args.data


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="logsymtest", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_test = sub.add_parser("test", help="test one dataset for log-symmetry")
    _add_input_flags(p_test)
    p_test.add_argument(
        "--test",
        default="t1",
        help="statistic: t1, t2, pwm, ratio, minmax, optionally with tuning "
        "as kind:value (default: t1)",
    )
    p_test.add_argument(
        "--a",
        type=float,
        default=None,
        help="tuning parameter for t1/t2 (default: 1.0)",
    )
    p_test.add_argument(
        "--null",
        default="loglogistic(0,1)",
        help="bootstrap null distribution (default: loglogistic(0,1))",
    )
    p_test.add_argument("--B", type=int, default=1000, help="bootstrap replications (default: 1000)")
    p_test.add_argument("--alpha", type=float, default=0.05, help="significance level (default: 0.05)")
    p_test.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    p_test.add_argument(
        "--rescale-geometric-mean",
        action="store_true",
        help="divide observations by their geometric mean before testing (default: off)",
    )

    p_sim = sub.add_parser("simulate", help="run a Monte Carlo rate table")
    p_sim.add_argument("--mode", choices=("type1", "power"), required=True)
    p_sim.add_argument(
        "--tests",
        required=True,
        help="comma list of test specs, e.g. t1:0.5,t1:1,t2:1,pwm,ratio,minmax",
    )
    p_sim.add_argument("--n", required=True, help="comma list of sample sizes, e.g. 10,25,50")
    p_sim.add_argument("--alpha", default="0.05,0.01", help="comma list of levels (default: 0.05,0.01)")
    p_sim.add_argument(
        "--dist",
        required=True,
        help='comma list of distributions, e.g. "lognormal(0,1),pareto(1)"',
    )
    p_sim.add_argument("--mc", type=int, default=10000, help="Monte Carlo replications (default: 10000)")
    p_sim.add_argument("--seed", type=int, default=0, help="master seed (default: 0)")
    p_sim.add_argument("--out", default="rates", help="output path prefix (default: rates)")
    p_sim.add_argument(
        "--threads",
        type=int,
        default=0,
        help="worker threads for table cells (default: machine parallelism)",
    )

    p_bench = sub.add_parser("bench", help="time statistic evaluations")
    p_bench.add_argument("--tests", default="t1:1,t2:1,pwm,ratio,minmax", help="comma list of test specs")
    p_bench.add_argument("--n", type=int, default=50, help="sample size (default: 50)")
    p_bench.add_argument("--repetitions", type=int, default=30, help="timed evaluations per test (default: 30)")
    p_bench.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    p_bench.add_argument("--out", default="bench", help="output path prefix (default: bench)")

    p_sum = sub.add_parser("summarize", help="summarize a dataset")
    _add_input_flags(p_sum)
    p_sum.add_argument(
        "--overlay",
        default=None,
        help='distribution whose CDF to overlay on the ECDF, e.g. "loglogistic(0,1)"',
    )
    p_sum.add_argument("--bins", type=int, default=None, help="histogram bins (default: ceil(sqrt(n)))")
    p_sum.add_argument(
        "--out",
        default=None,
        metavar="DIR",
        help="directory for plot-data files ecdf.csv and hist.csv (default: not written)",
    )
    return parser


def _cmd_test(args) -> int:
    data, source = _load_input(args)
    test = parse_test(args.test)
    if args.a is not None:
        if test.kind not in ("t1", "t2"):
            raise _UsageError("--a applies to the t1 and t2 statistics only")
        test = make_test(test.kind, args.a)
    if args.rescale_geometric_mean:
        data = data.rescaled_by_geometric_mean()
    result = bootstrap_pvalue(
        data,
        test,
        parse_distribution(args.null),
        B=args.B,
        seed=args.seed,
        alpha=args.alpha,
        side=test.rejection_side,
        test_name=test.kind,
        tuning=test.tuning,
    )
    payload = result.to_dict()
    payload["dataset"] = source
    payload["rescaled_by_geometric_mean"] = bool(args.rescale_geometric_mean)
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_simulate(args) -> int:
    plan = SimulationPlan(
        tests=tuple(parse_test(t) for t in _split_outside_parens(args.tests)),
        sample_sizes=tuple(int(tok) for tok in _split_outside_parens(args.n)),
        alphas=tuple(float(tok) for tok in _split_outside_parens(args.alpha)),
        distributions=tuple(
            parse_distribution(tok) for tok in _split_outside_parens(args.dist)
        ),
        mc_replications=args.mc,
        master_seed=args.seed,
    )
    table = run_rate_table(plan, args.mode, threads=args.threads or None)
    csv_path, md_path = table.write(args.out)
    for err in table.errors:
        print(f"cell failed: {err}", file=sys.stderr)
    print(f"wrote {csv_path} and {md_path}")
    return 0


def _cmd_bench(args) -> int:
    tests = tuple(parse_test(t) for t in _split_outside_parens(args.tests))
    table = run_benchmark(tests, n=args.n, repetitions=args.repetitions, seed=args.seed)
    csv_path, md_path = table.write(args.out)
    print(f"wrote {csv_path} and {md_path}")
    return 0


def _cmd_summarize(args) -> int:
    data, source = _load_input(args)
    overlay = parse_distribution(args.overlay) if args.overlay else None
    summary = summarize(data, overlay=overlay, bins=args.bins)
    payload = summary.to_dict()
    payload["dataset"] = source
    print(json.dumps(payload, indent=2))
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        ecdf_path = os.path.join(args.out, "ecdf.csv")
        hist_path = os.path.join(args.out, "hist.csv")
        with open(ecdf_path, "w") as fh:
            fh.write(summary.ecdf_csv())
        with open(hist_path, "w") as fh:
            fh.write(summary.hist_csv())
        print(f"wrote {ecdf_path} and {hist_path}", file=sys.stderr)
    return 0


_COMMANDS = {
    "test": _cmd_test,
    "simulate": _cmd_simulate,
    "bench": _cmd_bench,
    "summarize": _cmd_summarize,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (LogSymTestError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception:  # pragma: no cover - internal failure path
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
