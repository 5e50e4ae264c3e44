import itertools
import math

import numpy as np
import pytest

from logsymtest import (
    InvalidSampleError,
    ParameterError,
    PositiveSample,
    stat_minmax_u,
    stat_pwm,
    stat_ratio_u,
)

from conftest import random_positive_values


def pwm_subset_oracle(values, beta_order):
    """U-statistic form: average of (max - 1/min)/(beta+1) over subsets."""
    n = len(values)
    total = 0.0
    for subset in itertools.combinations(values, beta_order + 1):
        total += max(subset) - 1.0 / min(subset)
    return total / math.comb(n, beta_order + 1) / (beta_order + 1)


def ratio_quadruple_oracle(values):
    """Direct enumeration, written independently of the main implementation."""
    vals = sorted(values)
    n = len(vals)
    total = 0
    for i, j, k, l in itertools.combinations(range(n), 4):
        triple = sorted((vals[i], vals[j], vals[k]))
        xl = vals[l]
        total += int(triple[1] / triple[0] <= xl) - int(triple[2] / triple[1] <= xl)
    return total / math.comb(n, 4)


def minmax_permutation_oracle(values, k):
    """Full (k+1)!-permutation symmetrization of the min/max kernel."""
    vals = sorted(values)
    n = len(vals)
    total = 0.0
    for subset in itertools.combinations(vals, k + 1):
        acc = 0
        for perm in itertools.permutations(subset):
            acc += int(min(perm[:k]) <= perm[k]) - int(max(perm[:k]) >= 1.0 / perm[k])
        total += acc / math.factorial(k + 1)
    return total / math.comb(n, k + 1)


class TestPwm:
    def test_reciprocal_symmetric_is_zero(self):
        s = PositiveSample.from_values([0.25, 0.5, 2.0, 4.0])
        assert stat_pwm(s, 3) == 0.0

    def test_hand_case(self):
        s = PositiveSample.from_values([0.5, 1.0, 2.0, 4.0])
        assert stat_pwm(s, 3) == pytest.approx(0.5, abs=1e-15)

    def test_matches_subset_enumeration(self, rng):
        values = random_positive_values(rng, n=20)
        s = PositiveSample.from_values(values)
        want = pwm_subset_oracle(values, 3)
        assert stat_pwm(s, 3) == pytest.approx(want, rel=1e-12, abs=1e-12)

    @pytest.mark.parametrize("beta_order", [1, 2, 4])
    def test_matches_subset_enumeration_other_orders(self, rng, beta_order):
        values = random_positive_values(rng, n=12)
        s = PositiveSample.from_values(values)
        want = pwm_subset_oracle(values, beta_order)
        assert stat_pwm(s, beta_order) == pytest.approx(want, rel=1e-12, abs=1e-12)

    def test_reciprocal_antisymmetry(self, rng):
        for _ in range(100):
            s = PositiveSample.from_values(random_positive_values(rng, n_min=5, n_max=25))
            assert abs(stat_pwm(s, 3) + stat_pwm(s.reciprocal(), 3)) < 1e-12

    def test_sample_too_small(self):
        with pytest.raises(InvalidSampleError):
            stat_pwm(PositiveSample.from_values([1.0, 2.0, 3.0]), 3)

    def test_bad_order(self):
        with pytest.raises(ParameterError):
            stat_pwm(PositiveSample.from_values([1.0, 2.0, 3.0, 4.0]), 0)


class TestRatioU:
    def test_all_equal_is_zero(self):
        assert stat_ratio_u(PositiveSample.from_values([1.0] * 4)) == 0.0

    def test_single_quadruple_hand_case(self):
        # triple {1,2,4}: ratios 2 and 2, compared against 8 -> kernel 0
        assert stat_ratio_u(PositiveSample.from_values([1.0, 2.0, 4.0, 8.0])) == 0.0

    def test_matches_independent_enumerator(self, rng):
        for _ in range(10):
            values = random_positive_values(rng, n=12)
            s = PositiveSample.from_values(values)
            assert stat_ratio_u(s) == pytest.approx(
                ratio_quadruple_oracle(values), abs=1e-15
            )

    def test_bounded(self, rng):
        for _ in range(50):
            s = PositiveSample.from_values(random_positive_values(rng, n_min=4, n_max=15))
            assert -1.0 <= stat_ratio_u(s) <= 1.0

    def test_sample_too_small(self):
        with pytest.raises(InvalidSampleError):
            stat_ratio_u(PositiveSample.from_values([1.0, 2.0, 3.0]))


class TestMinMaxU:
    def test_all_equal_is_zero(self):
        assert stat_minmax_u(PositiveSample.from_values([1.0] * 4), 3) == 0.0

    def test_reduction_matches_full_permutation_oracle(self, rng):
        for _ in range(60):
            n = int(rng.integers(5, 9))
            k = int(rng.integers(2, min(n, 6)))
            values = random_positive_values(rng, n=n)
            s = PositiveSample.from_values(values)
            want = minmax_permutation_oracle(values, k)
            assert stat_minmax_u(s, k) == pytest.approx(want, abs=1e-12)

    def test_fast_k3_path_matches_oracle_with_ties(self, rng):
        for _ in range(40):
            n = int(rng.integers(4, 12))
            values = np.round(rng.uniform(0.1, 5.0, n), 1)  # coarse grid forces ties
            s = PositiveSample.from_values(values)
            want = minmax_permutation_oracle(values, 3)
            assert stat_minmax_u(s, 3) == pytest.approx(want, abs=1e-12)

    def test_bounded(self, rng):
        for _ in range(50):
            s = PositiveSample.from_values(random_positive_values(rng, n_min=5, n_max=15))
            assert -1.0 <= stat_minmax_u(s, 3) <= 1.0

    def test_sample_too_small(self):
        with pytest.raises(InvalidSampleError):
            stat_minmax_u(PositiveSample.from_values([1.0, 2.0, 3.0]), 3)

    def test_bad_k(self):
        with pytest.raises(ParameterError):
            stat_minmax_u(PositiveSample.from_values([1.0, 2.0, 3.0, 4.0]), 1)
