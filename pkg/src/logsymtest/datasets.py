"""Dataset ingestion, built-in example data, and plot-ready summaries."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import DistributionSpec, log_logistic_cdf
from .errors import DataFormatError, InvalidSampleError, ParameterError
from .sample import PositiveSample

# Time to breakdown of an insulating fluid (n = 19).
INSULATING_FLUID = (
    0.96, 4.15, 0.19, 0.78, 8.01, 31.75, 7.35, 6.50, 8.27, 33.91,
    32.52, 3.16, 4.85, 2.78, 4.67, 1.31, 12.06, 36.71, 72.89,
)

# Active repair times in hours for an airborne communication transceiver (n = 45).
REPAIR_TIMES = (
    0.2, 0.3, 0.5, 0.5, 0.5, 0.5, 0.6, 0.6, 0.7, 0.7, 0.7, 0.8,
    0.8, 1.0, 1.0, 1.0, 1.0, 1.1, 1.3, 1.5, 1.5, 1.5, 1.5, 2.0,
    2.0, 2.2, 2.5, 3.0, 3.0, 3.3, 3.3, 4.0, 4.0, 4.5, 4.7, 5.0,
    5.4, 5.4, 7.0, 7.5, 8.8, 9.0, 10.3, 22.0, 24.5,
)

_BUILTIN = {
    "insulating-fluid": INSULATING_FLUID,
    "repair-times": REPAIR_TIMES,
}


def builtin_dataset(name: str) -> PositiveSample:
    """One of the built-in example datasets, by name."""
    key = name.strip().lower()
    if key not in _BUILTIN:
        raise DataFormatError(
            f"unknown dataset {name!r}; valid names: {', '.join(sorted(_BUILTIN))}"
        )
    return PositiveSample.from_values(_BUILTIN[key])


def _tokenize(line: str, fmt: str) -> list[str]:
    if fmt == "csv":
        return [tok.strip() for tok in line.split(",")]
    return line.split()


def load_dataset(path: str, fmt: str = "auto") -> PositiveSample:
    """Parse a text file of positive numbers into a sample.

    ``fmt`` is "csv" (comma-separated or one value per row), "whitespace",
    or "auto" (csv when a comma appears anywhere in the file).  Parse and
    positivity errors name the offending line and field.
    """
    if fmt not in ("auto", "csv", "whitespace"):
        raise DataFormatError(f"unknown format {fmt!r}")
    with open(path) as fh:
        text = fh.read()
    if fmt == "auto":
        fmt = "csv" if "," in text else "whitespace"
    values: list[float] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        for colno, tok in enumerate(_tokenize(line, fmt), start=1):
            if not tok:
                continue
            try:
                value = float(tok)
            except ValueError:
                raise DataFormatError(
                    f"{path}: line {lineno}, field {colno}: not a number: {tok!r}"
                ) from None
            if not math.isfinite(value) or value <= 0.0:
                raise DataFormatError(
                    f"{path}: line {lineno}, field {colno}: "
                    f"observations must be finite and > 0, got {tok!r}"
                )
            values.append(value)
    if len(values) < 2:
        raise InvalidSampleError(
            f"{path}: need at least 2 observations, found {len(values)}"
        )
    return PositiveSample.from_values(values)


def save_csv(sample: PositiveSample, path: str) -> None:
    """Write one observation per line with full round-trip precision."""
    with open(path, "w") as fh:
        for v in sample.values:
            fh.write(repr(float(v)) + "\n")


@dataclass(frozen=True)
class DatasetSummary:
    n: int
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float
    hist_edges: tuple[float, ...]
    hist_counts: tuple[int, ...]
    ecdf_x: tuple[float, ...]
    ecdf_f: tuple[float, ...]
    overlay_label: str | None
    overlay_f: tuple[float, ...] | None
    ks_distance: float | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "min": self.minimum,
            "q1": self.q1,
            "median": self.median,
            "q3": self.q3,
            "max": self.maximum,
            "histogram": {
                "edges": list(self.hist_edges),
                "counts": list(self.hist_counts),
            },
            "ecdf": {"x": list(self.ecdf_x), "F": list(self.ecdf_f)},
            "overlay": None
            if self.overlay_label is None
            else {
                "distribution": self.overlay_label,
                "F": list(self.overlay_f),
                "ks_distance": self.ks_distance,
            },
        }

    def ecdf_csv(self) -> str:
        lines = ["x,F"]
        lines += [f"{x:.10g},{f:.10g}" for x, f in zip(self.ecdf_x, self.ecdf_f)]
        return "\n".join(lines) + "\n"

    def hist_csv(self) -> str:
        lines = ["left,right,count"]
        lines += [
            f"{self.hist_edges[i]:.10g},{self.hist_edges[i + 1]:.10g},{c}"
            for i, c in enumerate(self.hist_counts)
        ]
        return "\n".join(lines) + "\n"


def _overlay_cdf(spec: DistributionSpec, x: np.ndarray) -> np.ndarray:
    if spec.family != "loglogistic":
        raise ParameterError(
            f"overlay CDF is implemented for loglogistic only, got {spec.label}"
        )
    return log_logistic_cdf(x, *spec.params)


def summarize(
    sample: PositiveSample,
    overlay: DistributionSpec | None = None,
    bins: int | None = None,
) -> DatasetSummary:
    """Five-number summary, equal-width histogram, ECDF, optional CDF overlay.

    The overlay CDF is evaluated at the data points and the maximum
    |ECDF - F| step discrepancy is reported as a Kolmogorov-Smirnov-style
    distance.
    """
    x = sample.values
    n = sample.n
    if bins is None:
        bins = math.ceil(math.sqrt(n))
    if bins < 1:
        raise ParameterError(f"bins must be >= 1, got {bins}")
    q0, q1, q2, q3, q4 = np.quantile(x, [0.0, 0.25, 0.5, 0.75, 1.0])
    counts, edges = np.histogram(x, bins=bins, range=(x[0], x[-1]))
    ecdf_f = np.arange(1, n + 1) / n
    overlay_label = None
    overlay_f = None
    ks = None
    if overlay is not None:
        overlay_label = overlay.label
        fvals = _overlay_cdf(overlay, x)
        overlay_f = tuple(float(v) for v in fvals)
        ks = float(
            np.maximum(np.abs(ecdf_f - fvals), np.abs(ecdf_f - 1.0 / n - fvals)).max()
        )
    return DatasetSummary(
        n=n,
        minimum=float(q0),
        q1=float(q1),
        median=float(q2),
        q3=float(q3),
        maximum=float(q4),
        hist_edges=tuple(float(e) for e in edges),
        hist_counts=tuple(int(c) for c in counts),
        ecdf_x=tuple(float(v) for v in x),
        ecdf_f=tuple(float(v) for v in ecdf_f),
        overlay_label=overlay_label,
        overlay_f=overlay_f,
        ks_distance=ks,
    )
