"""Named test statistics, as used by the CLI and the simulation harness.

A test spec is "kind" plus one tuning value:

    t1:A      Laplace-weight CF statistic with tuning a = A (default 1)
    t2:A      Gaussian-weight CF statistic with tuning a = A (default 1)
    pwm:B     probability-weighted-moment contrast, subset order B (default 3)
    ratio     consecutive-ratio U-statistic (no tuning)
    minmax:K  min/max U-statistic with kernel size K (default 3)
"""

from __future__ import annotations

from dataclasses import dataclass

from . import competitors, statistics
from .calibration import RejectionSide
from .errors import ParameterError
from .sample import PositiveSample

KINDS = ("t1", "t2", "pwm", "ratio", "minmax")

_DEFAULT_TUNING = {"t1": 1.0, "t2": 1.0, "pwm": 3, "ratio": None, "minmax": 3}


@dataclass(frozen=True)
class TestSpec:
    kind: str
    tuning: float | int | None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(
                f"unknown test {self.kind!r}; valid: {', '.join(KINDS)}"
            )
        if self.kind in ("t1", "t2"):
            statistics._check_tuning(self.tuning)
        elif self.kind == "pwm":
            if not isinstance(self.tuning, int) or self.tuning < 1:
                raise ParameterError(f"pwm order must be an integer >= 1, got {self.tuning!r}")
        elif self.kind == "minmax":
            if not isinstance(self.tuning, int) or self.tuning < 2:
                raise ParameterError(f"minmax k must be an integer >= 2, got {self.tuning!r}")
        elif self.tuning is not None:
            raise ParameterError("the ratio test takes no tuning parameter")

    @property
    def label(self) -> str:
        if self.tuning is None:
            return self.kind
        return f"{self.kind}:{self.tuning:g}"

    @property
    def rejection_side(self) -> RejectionSide:
        if self.kind in ("t1", "t2"):
            return RejectionSide.UPPER_TAIL
        return RejectionSide.TWO_SIDED_ABSOLUTE

    def __call__(self, s: PositiveSample) -> float:
        if self.kind == "t1":
            return statistics.statistic_t1(s, self.tuning)
        if self.kind == "t2":
            return statistics.statistic_t2(s, self.tuning)
        if self.kind == "pwm":
            return competitors.stat_pwm(s, self.tuning)
        if self.kind == "ratio":
            return competitors.stat_ratio_u(s)
        return competitors.stat_minmax_u(s, self.tuning)


def make_test(kind: str, tuning=None) -> TestSpec:
    kind = kind.strip().lower()
    if kind not in KINDS:
        raise ParameterError(f"unknown test {kind!r}; valid: {', '.join(KINDS)}")
    if tuning is None:
        tuning = _DEFAULT_TUNING[kind]
    elif kind in ("pwm", "minmax"):
        if float(tuning) != int(float(tuning)):
            raise ParameterError(f"{kind} tuning must be an integer, got {tuning!r}")
        tuning = int(float(tuning))
    else:
        tuning = float(tuning)
    return TestSpec(kind=kind, tuning=tuning)


def parse_test(text: str) -> TestSpec:
    """Parse "kind" or "kind:tuning" (e.g. "t1:0.5", "minmax:3")."""
    s = text.strip().lower()
    if ":" in s:
        kind, _, value = s.partition(":")
        try:
            return make_test(kind, float(value))
        except ValueError:
            raise ParameterError(f"malformed test spec {text!r}") from None
    return make_test(s)
