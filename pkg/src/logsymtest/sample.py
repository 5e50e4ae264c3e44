"""Validated positive samples.

Every statistic in this package operates on a :class:`PositiveSample`: a
sorted vector of strictly positive, finite observations with at least two
entries (the order-statistic weights are undefined for n = 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSampleError


@dataclass(frozen=True)
class PositiveSample:
    """Sorted, strictly positive observations.

    Instances are expected to come from :meth:`from_values`, which validates
    and sorts the data. ``values`` is a read-only float64 array in
    nondecreasing order.
    """

    values: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @classmethod
    def from_values(cls, values, *, copy: bool = True) -> "PositiveSample":
        arr = np.array(values, dtype=np.float64, copy=copy).reshape(-1)
        if arr.size < 2:
            raise InvalidSampleError(
                f"need at least 2 observations, got {arr.size}"
            )
        if not np.all(np.isfinite(arr)):
            raise InvalidSampleError("sample contains non-finite values")
        if np.any(arr <= 0.0):
            raise InvalidSampleError("sample contains non-positive values")
        arr = np.sort(arr, kind="stable")
        arr.flags.writeable = False
        return cls(values=arr)

    def rescaled_by_geometric_mean(self) -> "PositiveSample":
        """Divide every observation by the sample geometric mean."""
        gmean = float(np.exp(np.mean(np.log(self.values))))
        return PositiveSample.from_values(self.values / gmean)

    def reciprocal(self) -> "PositiveSample":
        """The sample of reciprocals 1/x, re-sorted."""
        return PositiveSample.from_values(1.0 / self.values)


def as_sample(data) -> PositiveSample:
    """Coerce raw data (array-like or PositiveSample) to a PositiveSample."""
    if isinstance(data, PositiveSample):
        return data
    return PositiveSample.from_values(data)
