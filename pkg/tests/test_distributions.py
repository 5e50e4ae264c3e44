import math

import numpy as np
import pytest

from logsymtest import (
    DistributionSpec,
    ParameterError,
    RngStream,
    log_logistic_cdf,
    make_spec,
    parse_distribution,
    sample,
)
from logsymtest.distributions import LOG_SYMMETRIC_FAMILIES, _FAMILIES

ALL_FAMILIES = tuple(_FAMILIES)


def ks_two_sample(x, y):
    xs, ys = np.sort(x), np.sort(y)
    grid = np.concatenate([xs, ys])
    fx = np.searchsorted(xs, grid, side="right") / xs.size
    fy = np.searchsorted(ys, grid, side="right") / ys.size
    return float(np.abs(fx - fy).max())


class TestSpecParsing:
    def test_parse_with_params(self):
        spec = parse_distribution("Pareto(1)")
        assert spec.family == "pareto" and spec.params == (1.0,)

    def test_parse_case_insensitive_two_params(self):
        spec = parse_distribution("LogNormal(0,1)")
        assert spec.family == "lognormal" and spec.params == (0.0, 1.0)

    def test_parse_aliases(self):
        assert parse_distribution("chisquare(3)").family == "chisq"
        assert parse_distribution("inverse-gamma(2,1)").family == "invgamma"
        assert parse_distribution("inversebeta(0.6,1)").family == "invbeta"

    def test_defaults_applied_without_parens(self):
        assert parse_distribution("logt").params == (5.0,)
        assert parse_distribution("benini").params == (1.0, 0.1)

    def test_label_round_trip(self):
        for family in ALL_FAMILIES:
            spec = make_spec(family)
            assert parse_distribution(spec.label) == spec

    def test_unknown_family(self):
        with pytest.raises(ParameterError):
            parse_distribution("cauchy(0,1)")

    def test_wrong_arity(self):
        with pytest.raises(ParameterError):
            make_spec("pareto", 1.0, 2.0)

    def test_nonpositive_scale_rejected(self):
        with pytest.raises(ParameterError):
            make_spec("lognormal", 0.0, -1.0)
        with pytest.raises(ParameterError):
            make_spec("gamma", 0.0, 1.0)

    def test_malformed_text(self):
        with pytest.raises(ParameterError):
            parse_distribution("pareto(1")
        with pytest.raises(ParameterError):
            parse_distribution("pareto(one)")


class TestSampling:
    def test_lognormal_median_near_one(self):
        s = sample(make_spec("lognormal"), 100_000, RngStream(12345, 0))
        assert 0.98 <= float(np.median(s.values)) <= 1.02

    def test_pareto_survival_at_two(self):
        s = sample(make_spec("pareto", 1.0), 100_000, RngStream(12345, 1))
        assert np.mean(s.values > 2.0) == pytest.approx(0.5, abs=0.01)

    def test_logcauchy_mass_below_one(self):
        s = sample(make_spec("logcauchy"), 100_000, RngStream(12345, 2))
        assert np.mean(s.values < 1.0) == pytest.approx(0.5, abs=0.01)

    def test_invbeta_support_above_one(self):
        s = sample(make_spec("invbeta"), 50_000, RngStream(12345, 3))
        assert float(s.values[0]) >= 1.0

    @pytest.mark.parametrize("family", ALL_FAMILIES)
    def test_positive_finite_and_invertible(self, family):
        s = sample(make_spec(family), 50_000, RngStream(5, ALL_FAMILIES.index(family)))
        v = s.values
        assert np.all(v > 0.0)
        assert np.all(np.isfinite(v))
        assert np.all(np.isfinite(1.0 / v))

    @pytest.mark.parametrize("family", LOG_SYMMETRIC_FAMILIES)
    def test_null_families_reciprocal_invariant(self, family):
        # two-sample KS distance between X and 1/X below the 1% critical value
        stream = LOG_SYMMETRIC_FAMILIES.index(family)
        v = sample(make_spec(family), 100_000, RngStream(999, stream)).values
        with np.errstate(over="ignore"):
            inv = 1.0 / v
        d = ks_two_sample(v, inv)
        crit = math.sqrt(-math.log(0.005) / 2.0) * math.sqrt(2.0 / 100_000)
        assert d < crit, f"{family}: KS={d:.5f} >= {crit:.5f}"

    def test_bitwise_determinism(self):
        a = sample(make_spec("levy"), 1000, RngStream(42, 7)).values
        b = sample(make_spec("levy"), 1000, RngStream(42, 7)).values
        assert np.array_equal(a, b)

    def test_distinct_streams_differ(self):
        a = sample(make_spec("lognormal"), 100, RngStream(42, 0)).values
        b = sample(make_spec("lognormal"), 100, RngStream(42, 1)).values
        assert not np.array_equal(a, b)

    def test_rejects_tiny_n(self):
        with pytest.raises(ParameterError):
            sample(make_spec("lognormal"), 1, RngStream(0, 0))


class TestLogLogisticCdf:
    def test_median(self):
        for mu in (-1.0, 0.0, 2.5):
            assert log_logistic_cdf(math.exp(mu), mu, 1.0) == pytest.approx(0.5, abs=1e-12)

    def test_value_at_e(self):
        assert log_logistic_cdf(math.e) == pytest.approx(math.e / (1 + math.e), abs=1e-12)

    def test_log_symmetry_identity(self, rng):
        for mu in (0.0, 1.3):
            for x in rng.uniform(0.05, 20.0, 20):
                left = log_logistic_cdf(x, mu, 1.0)
                right = 1.0 - log_logistic_cdf(math.exp(2 * mu) / x, mu, 1.0)
                assert left == pytest.approx(right, abs=1e-12)

    def test_strictly_increasing(self):
        xs = np.linspace(0.01, 50.0, 200)
        fs = log_logistic_cdf(xs)
        assert np.all(np.diff(fs) > 0)

    def test_domain_errors(self):
        with pytest.raises(ParameterError):
            log_logistic_cdf(0.0)
        with pytest.raises(ParameterError):
            log_logistic_cdf(-3.0)
        with pytest.raises(ParameterError):
            log_logistic_cdf(1.0, 0.0, 0.0)
