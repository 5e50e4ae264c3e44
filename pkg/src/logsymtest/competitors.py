"""Point statistics of the competing log-symmetry tests.

Three families used as baselines in the power and timing comparisons:

* `stat_pwm` - probability-weighted-moment contrast over (beta+1)-subsets,
  evaluated through its O(n) order-statistic form.
* `stat_ratio_u` - indicator contrast of consecutive order-statistic ratios
  of each triple against the fourth sample value, averaged over all
  C(n, 4) index quadruples i<j<k<l of the sorted sample.
* `stat_minmax_u` - U-statistic of a symmetrized min/max indicator kernel
  over all (k+1)-subsets; symmetrization reduces to averaging over the
  k+1 choices of held-out element within each subset.

Tie comparisons use <= and >= exactly as written; no randomized breaking.
The ratio and min/max statistics deliberately keep the full per-quadruple
enumeration work, since their computational cost relative to the
closed-form tests is part of what the benchmark harness measures.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .errors import InvalidSampleError, ParameterError
from .sample import PositiveSample


@lru_cache(maxsize=64)
def _pwm_coefficients(n: int, beta_order: int) -> tuple[np.ndarray, np.ndarray]:
    norm = math.comb(n, beta_order + 1) * (beta_order + 1)
    c_up = np.array(
        [math.comb(i - 1, beta_order) / norm for i in range(1, n + 1)]
    )
    c_down = np.array(
        [math.comb(n - i, beta_order) / norm for i in range(1, n + 1)]
    )
    c_up.flags.writeable = False
    c_down.flags.writeable = False
    return c_up, c_down


def stat_pwm(sample: PositiveSample, beta_order: int = 3) -> float:
    """Probability-weighted-moment statistic with subset size beta_order + 1.

    Antisymmetric under reciprocal reversal: negates exactly when the sample
    is replaced by its sorted reciprocals.  Requires n >= beta_order + 1.
    """
    if not isinstance(beta_order, (int, np.integer)) or beta_order < 1:
        raise ParameterError(f"beta order must be an integer >= 1, got {beta_order!r}")
    n = sample.n
    if n < beta_order + 1:
        raise InvalidSampleError(
            f"need n >= {beta_order + 1} for beta order {beta_order}, got n={n}"
        )
    c_up, c_down = _pwm_coefficients(n, int(beta_order))
    x = sample.values
    return float(c_up @ x - c_down @ (1.0 / x))


@lru_cache(maxsize=32)
def _pair_grid(n: int):
    """Index machinery for quadruple enumeration split into two sorted pairs.

    Rows enumerate the lower pair (i<j), columns the upper pair (k<l); a
    quadruple i<j<k<l corresponds to a (row, col) cell with j < k.
    """
    first, second = np.triu_indices(n, k=1)
    mask = second[:, None] < first[None, :]
    row_counts = mask.sum(axis=1)
    col_counts = mask.sum(axis=0)
    return first, second, mask, row_counts, col_counts


def stat_ratio_u(sample: PositiveSample) -> float:
    """Consecutive-ratio indicator statistic over all C(n,4) quadruples.

    For each i<j<k<l of the sorted sample the kernel compares the ratios
    x_j/x_i and x_k/x_j against x_l; the statistic is the average kernel
    value, always in [-1, 1].  The enumeration is literal: every triple
    (i, j, k) is visited and scored against every later l, so the cost
    grows as n^4.  Requires n >= 4.
    """
    n = sample.n
    if n < 4:
        raise InvalidSampleError(f"need n >= 4, got n={n}")
    x = sample.values
    total = 0
    for i, j, k in itertools.combinations(range(n - 1), 3):
        tail = x[k + 1 :]
        low = x[j] / x[i]
        high = x[k] / x[j]
        total += np.count_nonzero(low <= tail) - np.count_nonzero(high <= tail)
    return float(total / math.comb(n, 4))


def _minmax_quadruple_fast(sample: PositiveSample) -> float:
    # Reduced kernel for k = 3 on the (pair x pair) enumeration grid.
    # For a sorted quadruple (a, b, c, d) the held-out sum is
    #   [I(b<=a) - I(d>=1/a)] + [1 - I(d>=1/b)] + [1 - I(d>=1/c)] + [1 - I(c>=1/d)]
    n = sample.n
    x = sample.values
    i_lo, j_lo, mask, row_counts, col_counts = _pair_grid(n)
    a, b = x[i_lo], x[j_lo]
    c, d = a, b  # columns interpret the same pair arrays as (k, l)
    tie_row = (b <= a).astype(np.int64)
    m_inv_a = (1.0 / a)[:, None] <= d[None, :]
    m_inv_b = (1.0 / b)[:, None] <= d[None, :]
    col_c = (d >= 1.0 / c).astype(np.int64)
    col_d = (c >= 1.0 / d).astype(np.int64)
    n_quads = math.comb(n, 4)
    total = (
        3 * mask.sum()
        + tie_row @ row_counts
        - np.count_nonzero(m_inv_a & mask)
        - np.count_nonzero(m_inv_b & mask)
        - col_c @ col_counts
        - col_d @ col_counts
    )
    return float(total / 4.0 / n_quads)


def stat_minmax_u(sample: PositiveSample, k: int = 3) -> float:
    """Symmetrized min/max indicator U-statistic over (k+1)-subsets.

    The kernel averages, over the k+1 choices of held-out element h,
    I(min(rest) <= h) - I(max(rest) >= 1/h).  Always in [-1, 1].
    Requires n >= k + 1.
    """
    if not isinstance(k, (int, np.integer)) or k < 2:
        raise ParameterError(f"k must be an integer >= 2, got {k!r}")
    n = sample.n
    if n < k + 1:
        raise InvalidSampleError(f"need n >= {k + 1} for k={k}, got n={n}")
    if k == 3:
        return _minmax_quadruple_fast(sample)
    x = sample.values
    total = 0
    for subset in itertools.combinations(range(n), k + 1):
        v = [x[idx] for idx in subset]  # ascending: sample is sorted
        lo0, lo1 = v[0], v[1]
        hi0, hi1 = v[k], v[k - 1]
        for h_pos, h in enumerate(v):
            min_rest = lo1 if h_pos == 0 else lo0
            max_rest = hi1 if h_pos == k else hi0
            total += int(min_rest <= h) - int(max_rest >= 1.0 / h)
    return total / (k + 1) / math.comb(n, k + 1)
