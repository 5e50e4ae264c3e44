"""Monte Carlo study orchestration: rate tables and timing benchmarks.

Each (distribution, n, test) cell runs an independent warp-speed
calibration under a seed derived by stable hash from the master seed and
the cell labels, so tables are reproducible and insensitive to plan order
or worker-pool scheduling.  Tables are emitted as CSV (schema
``distribution,family_params,n,alpha,test,a,rate_or_seconds,mc,seed``) and
aligned Markdown.
"""

from __future__ import annotations

import hashlib
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .calibration import CalibrationConfig, warp_speed_rate
from .distributions import STANDARD_LOGNORMAL, DistributionSpec, RngStream, sample
from .errors import ConfigurationError, LogSymTestError
from .registry import TestSpec

CSV_HEADER = "distribution,family_params,n,alpha,test,a,rate_or_seconds,mc,seed"

MODES = ("type1", "power")


@dataclass(frozen=True)
class SimulationPlan:
    tests: tuple[TestSpec, ...]
    sample_sizes: tuple[int, ...]
    alphas: tuple[float, ...]
    distributions: tuple[DistributionSpec, ...]
    mc_replications: int = 10_000
    master_seed: int = 0

    def __post_init__(self):
        if not self.tests:
            raise ConfigurationError("plan needs at least one test")
        if not self.sample_sizes:
            raise ConfigurationError("plan needs at least one sample size")
        if not self.distributions:
            raise ConfigurationError("plan needs at least one distribution")
        for n in self.sample_sizes:
            if n < 2:
                raise ConfigurationError(f"sample size must be >= 2, got {n}")
        # delegate alpha/mc validation
        CalibrationConfig(mc_replications=self.mc_replications, alpha_levels=self.alphas)


@dataclass(frozen=True)
class ResultRow:
    distribution: str
    family_params: str
    n: int
    alpha: float | None
    test: str
    tuning: float | int | None
    value: float
    mc: int
    seed: int

    def csv_fields(self) -> list[str]:
        return [
            self.distribution,
            self.family_params,
            str(self.n),
            "" if self.alpha is None else f"{self.alpha:g}",
            self.test,
            "" if self.tuning is None else f"{self.tuning:g}",
            "nan" if math.isnan(self.value) else f"{self.value:.10g}",
            str(self.mc),
            str(self.seed),
        ]


@dataclass
class ResultTable:
    rows: list[ResultRow]
    provenance: dict = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        lines += [",".join(row.csv_fields()) for row in self.rows]
        return "\n".join(lines) + "\n"

    def to_markdown(self) -> str:
        header = CSV_HEADER.split(",")
        cells = [row.csv_fields() for row in self.rows]
        widths = [
            max(len(header[c]), *(len(r[c]) for r in cells)) if cells else len(header[c])
            for c in range(len(header))
        ]
        def fmt(fields):
            return "| " + " | ".join(f.ljust(w) for f, w in zip(fields, widths)) + " |"
        lines = [fmt(header), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
        lines += [fmt(r) for r in cells]
        if self.provenance:
            lines.append("")
            lines += [f"- {k}: {v}" for k, v in sorted(self.provenance.items())]
        return "\n".join(lines) + "\n"

    def write(self, prefix: str) -> tuple[str, str]:
        csv_path = f"{prefix}.csv"
        md_path = f"{prefix}.md"
        with open(csv_path, "w") as fh:
            fh.write(self.to_csv())
        with open(md_path, "w") as fh:
            fh.write(self.to_markdown())
        return csv_path, md_path


def _cell_seed(master_seed: int, *labels) -> int:
    key = "|".join([str(master_seed), *map(str, labels)]).encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big") >> 1


def _params_str(spec: DistributionSpec) -> str:
    return ";".join(f"{p:g}" for p in spec.params)


def run_rate_table(
    plan: SimulationPlan, mode: str, threads: int | None = None
) -> ResultTable:
    """Type-I-error or power table over the full plan grid.

    mode "type1" bootstraps each cell from its own distribution; mode
    "power" bootstraps every cell from the standard log-normal null.
    Failed cells are recorded as NaN rows instead of aborting the table.
    """
    if mode not in MODES:
        raise ConfigurationError(f"mode must be one of {MODES}, got {mode!r}")
    cells = [
        (dist, n, test)
        for dist in plan.distributions
        for n in plan.sample_sizes
        for test in plan.tests
    ]

    def run_cell(cell):
        dist, n, test = cell
        seed = _cell_seed(plan.master_seed, dist.label, n, test.label)
        null_source = dist if mode == "type1" else STANDARD_LOGNORMAL
        config = CalibrationConfig(
            mc_replications=plan.mc_replications,
            alpha_levels=plan.alphas,
            rejection_side=test.rejection_side,
        )
        try:
            rates = warp_speed_rate(dist, null_source, test, n, config, seed)
            return seed, rates, None
        except LogSymTestError as exc:
            return seed, {alpha: math.nan for alpha in plan.alphas}, str(exc)

    max_workers = threads if threads and threads > 0 else None
    if max_workers == 1:
        outcomes = [run_cell(c) for c in cells]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            outcomes = list(pool.map(run_cell, cells))

    rows: list[ResultRow] = []
    errors: list[str] = []
    for (dist, n, test), (seed, rates, err) in zip(cells, outcomes):
        if err is not None:
            errors.append(f"{dist.label} n={n} {test.label}: {err}")
        for alpha in plan.alphas:
            rows.append(
                ResultRow(
                    distribution=dist.family,
                    family_params=_params_str(dist),
                    n=n,
                    alpha=alpha,
                    test=test.kind,
                    tuning=test.tuning,
                    value=rates[alpha],
                    mc=plan.mc_replications,
                    seed=seed,
                )
            )
    provenance = {
        "master_seed": plan.master_seed,
        "mc_replications": plan.mc_replications,
        "mode": mode,
        "rejection_sides": {
            t.label: t.rejection_side.value for t in plan.tests
        },
        "software_version": __version__,
    }
    return ResultTable(rows=rows, provenance=provenance, errors=errors)


def run_benchmark(
    tests: tuple[TestSpec, ...],
    n: int = 50,
    repetitions: int = 30,
    seed: int = 0,
    warmup: int = 3,
    min_window_seconds: float = 0.02,
) -> ResultTable:
    """Mean seconds per statistic evaluation on fresh log-normal samples.

    Samples are drawn before any clock starts, so only the statistic
    evaluation is timed.  Each repetition times one wall-clock window of
    enough back-to-back evaluations (cycling through the sample pool) to
    span ``min_window_seconds``, which keeps per-call timer noise out of
    the fast statistics.  Reported value is the mean seconds per single
    evaluation across windows; window-level standard deviations go into
    the provenance block.  Runs single-threaded.
    """
    if repetitions < 10:
        raise ConfigurationError(f"need at least 10 repetitions, got {repetitions}")
    if not tests:
        raise ConfigurationError("need at least one test to benchmark")
    pool = [
        sample(STANDARD_LOGNORMAL, n, RngStream(seed, r))
        for r in range(max(warmup, 8))
    ]
    rows: list[ResultRow] = []
    stdevs: dict[str, float] = {}
    for test in tests:
        single = math.inf
        for s in pool[:warmup]:
            start = time.perf_counter()
            test(s)
            single = min(single, time.perf_counter() - start)
        inner = max(1, math.ceil(min_window_seconds / max(single, 1e-9)))
        per_eval = np.empty(repetitions)
        pos = 0
        for r in range(repetitions):
            start = time.perf_counter()
            for _ in range(inner):
                test(pool[pos])
                pos = (pos + 1) % len(pool)
            per_eval[r] = (time.perf_counter() - start) / inner
        rows.append(
            ResultRow(
                distribution=STANDARD_LOGNORMAL.family,
                family_params=_params_str(STANDARD_LOGNORMAL),
                n=n,
                alpha=None,
                test=test.kind,
                tuning=test.tuning,
                value=float(per_eval.mean()),
                mc=repetitions,
                seed=seed,
            )
        )
        stdevs[test.label] = float(per_eval.std(ddof=1))
    provenance = {
        "master_seed": seed,
        "repetitions": repetitions,
        "warmup": warmup,
        "software_version": __version__,
        "stdev_seconds": stdevs,
    }
    return ResultTable(rows=rows, provenance=provenance)
