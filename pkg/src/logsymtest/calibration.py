"""Bootstrap calibration: warp-speed rejection rates and single-dataset p-values.

The warp-speed scheme draws one bootstrap statistic per Monte Carlo
replication and pools them: the critical value at level alpha is the
empirical (1 - alpha) quantile of the pooled bootstrap statistics, and the
rejection rate is the fraction of data statistics exceeding it.  Single
datasets get a parametric-bootstrap p-value with the add-one estimator
(1 + #{T* >= T_obs}) / (B + 1).

Statistics whose large values indicate departure use upper-tail rejection;
sign-valued statistics (the competitor contrasts) use two-sided rejection
on absolute values.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .distributions import DistributionSpec, RngStream, sample
from .errors import ConfigurationError
from .sample import PositiveSample


class RejectionSide(enum.Enum):
    UPPER_TAIL = "upper-tail"
    TWO_SIDED_ABSOLUTE = "two-sided-absolute"


@dataclass(frozen=True)
class CalibrationConfig:
    mc_replications: int = 10_000
    alpha_levels: tuple[float, ...] = (0.05, 0.01)
    rejection_side: RejectionSide = RejectionSide.UPPER_TAIL
    bootstrap_null: DistributionSpec | None = None

    def __post_init__(self):
        if self.mc_replications < 100:
            raise ConfigurationError(
                f"need at least 100 Monte Carlo replications, got {self.mc_replications}"
            )
        if not self.alpha_levels:
            raise ConfigurationError("need at least one significance level")
        for alpha in self.alpha_levels:
            if not (0.0 < alpha < 1.0):
                raise ConfigurationError(f"significance level must be in (0,1), got {alpha}")
            if self.mc_replications * alpha < 5.0:
                raise ConfigurationError(
                    f"{self.mc_replications} replications cannot resolve the "
                    f"{alpha} quantile (MC * alpha < 5)"
                )


@dataclass(frozen=True)
class TestResult:
    """Outcome of one calibrated test on one dataset."""

    test_name: str
    tuning: float | None
    n: int
    statistic: float
    p_value: float
    critical_value: float
    alpha: float
    reject: bool
    null_label: str
    bootstrap_replications: int
    seed: int

    @property
    def decision(self) -> str:
        return "reject" if self.reject else "fail-to-reject"

    def to_dict(self) -> dict:
        return {
            "test": self.test_name,
            "tuning": self.tuning,
            "n": self.n,
            "statistic": self.statistic,
            "p_value": self.p_value,
            "critical_value": self.critical_value,
            "alpha": self.alpha,
            "decision": self.decision,
            "null": self.null_label,
            "B": self.bootstrap_replications,
            "seed": self.seed,
        }


def empirical_quantile(values, q: float) -> float:
    """Type-1 (ceiling-index) order-statistic quantile.

    Returns the ceil(q * M)-th smallest element (1-based).  The product is
    rounded at the 9th decimal before the ceiling so binary representation
    of q cannot push an exact integer index up by one.
    """
    arr = np.sort(np.asarray(values, dtype=np.float64))
    m = arr.size
    if m == 0:
        raise ConfigurationError("cannot take a quantile of an empty list")
    if not (0.0 < q < 1.0):
        raise ConfigurationError(f"quantile level must be in (0,1), got {q}")
    k = math.ceil(round(q * m, 9))
    k = min(max(k, 1), m)
    return float(arr[k - 1])


def warp_speed_rate(
    data_source: DistributionSpec,
    null_source: DistributionSpec,
    statistic,
    n: int,
    config: CalibrationConfig,
    seed: int,
) -> dict[float, float]:
    """Warp-speed rejection rate per significance level.

    Replication j draws one sample of size n from ``data_source`` and one
    bootstrap sample from ``null_source`` (streams 2j and 2j+1 of ``seed``),
    evaluates ``statistic`` on both, and pools the bootstrap values for the
    critical quantile.  With ``data_source == null_source`` this estimates
    the type-I error rate; with a null ``null_source`` and alternative
    ``data_source`` it estimates power.
    """
    mc = config.mc_replications
    t_data = np.empty(mc)
    t_boot = np.empty(mc)
    for j in range(mc):
        s = sample(data_source, n, RngStream(seed, 2 * j))
        t_data[j] = statistic(s)
        b = sample(null_source, n, RngStream(seed, 2 * j + 1))
        t_boot[j] = statistic(b)
    if config.rejection_side is RejectionSide.TWO_SIDED_ABSOLUTE:
        t_data = np.abs(t_data)
        t_boot = np.abs(t_boot)
    rates: dict[float, float] = {}
    for alpha in config.alpha_levels:
        crit = empirical_quantile(t_boot, 1.0 - alpha)
        rates[alpha] = float(np.mean(t_data > crit))
    return rates


def bootstrap_pvalue(
    data: PositiveSample,
    statistic,
    null_source: DistributionSpec,
    B: int = 1000,
    seed: int = 0,
    alpha: float = 0.05,
    side: RejectionSide = RejectionSide.UPPER_TAIL,
    test_name: str = "statistic",
    tuning: float | None = None,
) -> TestResult:
    """Parametric-bootstrap p-value for one observed sample.

    Draws B samples of size n from ``null_source``, evaluates ``statistic``
    on each, and reports p = (1 + #{T* >= T_obs}) / (B + 1).  The decision
    compares the observed statistic against the empirical (1 - alpha)
    bootstrap quantile.
    """
    if B < 100:
        raise ConfigurationError(f"need at least 100 bootstrap replications, got {B}")
    if not (0.0 < alpha < 1.0):
        raise ConfigurationError(f"significance level must be in (0,1), got {alpha}")
    t_obs = float(statistic(data))
    t_boot = np.empty(B)
    for b in range(B):
        t_boot[b] = statistic(sample(null_source, data.n, RngStream(seed, b)))
    if side is RejectionSide.TWO_SIDED_ABSOLUTE:
        t_obs_cmp = abs(t_obs)
        t_boot_cmp = np.abs(t_boot)
    else:
        t_obs_cmp = t_obs
        t_boot_cmp = t_boot
    p = (1.0 + int(np.sum(t_boot_cmp >= t_obs_cmp))) / (B + 1.0)
    crit = empirical_quantile(t_boot_cmp, 1.0 - alpha)
    return TestResult(
        test_name=test_name,
        tuning=tuning,
        n=data.n,
        statistic=t_obs,
        p_value=p,
        critical_value=crit,
        alpha=alpha,
        reject=bool(t_obs_cmp > crit),
        null_label=null_source.label,
        bootstrap_replications=B,
        seed=seed,
    )
