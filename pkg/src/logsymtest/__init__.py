"""Goodness-of-fit tests for log-symmetric distributions.

Closed-form weighted-L2 characteristic-function statistics, competitor
U-statistics, warp-speed bootstrap calibration, seedable heavy-tailed
variate generation, and a Monte Carlo study harness with a CLI.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: F401
    ConfigurationError,
    DataFormatError,
    InvalidSampleError,
    LogSymTestError,
    ParameterError,
    QuadratureError,
)
from .sample import PositiveSample, as_sample  # noqa: F401
from .statistics import (  # noqa: F401
    KernelFamily,
    KernelSpec,
    QuadratureSettings,
    ecf_difference,
    kernel_integral,
    ordered_weights,
    statistic_quadrature,
    statistic_t1,
    statistic_t2,
)
from .competitors import stat_minmax_u, stat_pwm, stat_ratio_u  # noqa: F401
from .distributions import (  # noqa: F401
    DistributionSpec,
    RngStream,
    STANDARD_LOGNORMAL,
    log_logistic_cdf,
    make_spec,
    parse_distribution,
    sample,
)
from .calibration import (  # noqa: F401
    CalibrationConfig,
    RejectionSide,
    TestResult,
    bootstrap_pvalue,
    empirical_quantile,
    warp_speed_rate,
)
from .registry import TestSpec, make_test, parse_test  # noqa: F401
from .experiments import (  # noqa: F401
    ResultRow,
    ResultTable,
    SimulationPlan,
    run_benchmark,
    run_rate_table,
)
from .datasets import (  # noqa: F401
    DatasetSummary,
    builtin_dataset,
    load_dataset,
    save_csv,
    summarize,
)
