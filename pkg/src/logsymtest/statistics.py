"""Weighted-L2 characteristic-function statistics for log-symmetry.

The test compares the empirical characteristic function of the sample
minimum against that of the reciprocal of the sample maximum.  With order
statistics x_(1) <= ... <= x_(n) and weights

    beta_m  = ((n - m) / (n - 1)) ** (n - 1),
    gamma_m = ((m - 1) / (n - 1)) ** (n - 1),

the contrast is

    D_n(t) = (1/n) sum_m beta_m  exp(i t x_(m))
           - (1/n) sum_l gamma_l exp(i t / x_(l)),

and the statistic is T = n * integral_0^inf |D_n(t)|^2 w_a(t) dt for an
exponential weight w_a.  Expanding |D_n|^2 and integrating termwise gives a
closed double-sum form; `statistic_quadrature` evaluates the defining
integral numerically and serves as an independent cross-check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

from .errors import ParameterError, QuadratureError
from .sample import PositiveSample


class KernelFamily(enum.Enum):
    LAPLACE = "laplace"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class KernelSpec:
    """Weight-function family and tuning parameter a > 0.

    LAPLACE means w_a(t) = exp(-a |t|); GAUSSIAN means w_a(t) = exp(-a t^2).
    """

    family: KernelFamily
    a: float

    def __post_init__(self):
        _check_tuning(self.a)


@dataclass(frozen=True)
class QuadratureSettings:
    """Tolerances and truncation rule for the reference integration."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    max_subdivisions: int = 500


def _check_tuning(a: float) -> None:
    if not (isinstance(a, (int, float)) and math.isfinite(a) and a > 0):
        raise ParameterError(f"tuning parameter a must be finite and > 0, got {a!r}")


@lru_cache(maxsize=256)
def _cached_weights(n: int) -> tuple[np.ndarray, np.ndarray]:
    m = np.arange(1, n + 1, dtype=np.float64)
    beta = ((n - m) / (n - 1)) ** (n - 1)
    gamma = ((m - 1) / (n - 1)) ** (n - 1)
    beta.flags.writeable = False
    gamma.flags.writeable = False
    return beta, gamma


def ordered_weights(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Order-statistic weight vectors (beta, gamma) of length n.

    beta decays from 1 at the minimum, gamma mirrors it from the maximum:
    beta[m-1] == gamma[n-m] for every m.  Requires n >= 2.
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ParameterError(f"sample size must be an integer >= 2, got {n!r}")
    return _cached_weights(int(n))


def kernel_integral(kernel: KernelSpec, b: float) -> float:
    """integral_0^inf cos(b t) w_a(t) dt in closed form.

    Laplace weight: a / (a^2 + b^2).
    Gaussian weight: (1/2) sqrt(pi/a) exp(-b^2 / (4a)).
    Even in b, strictly positive, maximized at b = 0.
    """
    b_arr = np.asarray(b, dtype=np.float64)
    if not np.all(np.isfinite(b_arr)):
        raise ParameterError(f"frequency offset b must be finite, got {b!r}")
    a = kernel.a
    if kernel.family is KernelFamily.LAPLACE:
        out = a / (a * a + b_arr * b_arr)
    else:
        out = 0.5 * math.sqrt(math.pi / a) * np.exp(-(b_arr * b_arr) / (4.0 * a))
    return float(out) if np.isscalar(b) or b_arr.ndim == 0 else out


def ecf_difference(sample: PositiveSample, t: float) -> complex:
    """D_n(t): weighted ECF of the data minus weighted ECF of reciprocals."""
    if not math.isfinite(t):
        raise ParameterError(f"t must be finite, got {t!r}")
    x = sample.values
    beta, gamma = ordered_weights(sample.n)
    a_n = (beta @ np.exp(1j * t * x)) / sample.n
    b_n = (gamma @ np.exp(1j * t / x)) / sample.n
    return complex(a_n - b_n)


@lru_cache(maxsize=256)
def _signed_coefficients(n: int) -> np.ndarray:
    beta, gamma = _cached_weights(n)
    c = np.concatenate([beta, -gamma])
    c.flags.writeable = False
    return c


def _weighted_quadratic_form(sample: PositiveSample, transform) -> float:
    """c' K c / n for c = (beta, -gamma) over z = (x, 1/x).

    The single quadratic form expands to the three kernel blocks
    sum beta beta K(x-x') + sum gamma gamma K(1/x-1/x')
    - 2 sum beta gamma K(x-1/x').  ``transform`` turns the matrix of
    squared pairwise differences into kernel values in place.
    """
    x = sample.values
    n = sample.n
    c = _signed_coefficients(n)
    z = np.empty(2 * n)
    z[:n] = x
    np.divide(1.0, x, out=z[n:])
    d2 = z[:, None] - z[None, :]
    np.multiply(d2, d2, out=d2)
    k = transform(d2)
    return float(c @ (k @ c)) / n


def statistic_t1(sample: PositiveSample, a: float) -> float:
    """Closed-form statistic for the Laplace weight exp(-a |t|).

    Equals n * integral |D_n|^2 w_a up to floating-point rounding; O(n^2).
    """
    _check_tuning(a)

    def transform(d2):
        d2 += a * a
        np.divide(a, d2, out=d2)
        return d2

    return _weighted_quadratic_form(sample, transform)


def statistic_t2(sample: PositiveSample, a: float) -> float:
    """Closed-form statistic for the Gaussian weight exp(-a t^2).

    Carries the kernel integral's (1/2) sqrt(pi/a) constant so that the
    value agrees with the defining integral (and with
    `statistic_quadrature`); O(n^2).
    """
    _check_tuning(a)

    def transform(d2):
        d2 *= -1.0 / (4.0 * a)
        np.exp(d2, out=d2)
        return d2

    return 0.5 * math.sqrt(math.pi / a) * _weighted_quadratic_form(sample, transform)


def _truncation_point(kernel: KernelSpec, n: int, abs_tol: float) -> float:
    # |D_n|^2 <= 4, so the discarded tail is at most n * 4 * int_T^inf w_a.
    a = kernel.a
    if kernel.family is KernelFamily.LAPLACE:
        # tail integral = exp(-a T) / a
        t_max = math.log(max(4.0 * n / (a * abs_tol), 2.0)) / a
    else:
        # tail integral <= (1/2) sqrt(pi/a) exp(-a T^2)
        arg = max(2.0 * n * math.sqrt(math.pi / a) / abs_tol, 2.0)
        t_max = math.sqrt(math.log(arg) / a)
    return max(t_max, 1.0)


def statistic_quadrature(
    sample: PositiveSample,
    kernel: KernelSpec,
    settings: QuadratureSettings | None = None,
) -> float:
    """Reference value of n * integral_0^inf |D_n(t)|^2 w_a(t) dt.

    Adaptive quadrature on (0, T_max), with T_max chosen from the analytic
    weight-tail bound so the truncated mass is below ``abs_tol``.  Raises
    :class:`QuadratureError` if the integrator cannot certify the requested
    tolerance.
    """
    if settings is None:
        settings = QuadratureSettings()
    n = sample.n
    x = sample.values
    inv = 1.0 / x
    beta, gamma = ordered_weights(n)
    a = kernel.a
    gaussian = kernel.family is KernelFamily.GAUSSIAN

    def integrand(t: float) -> float:
        d = (beta @ np.exp(1j * t * x) - gamma @ np.exp(1j * t * inv)) / n
        w = math.exp(-a * t * t) if gaussian else math.exp(-a * t)
        return n * (d.real * d.real + d.imag * d.imag) * w

    t_max = _truncation_point(kernel, n, settings.abs_tol)
    out = integrate.quad(
        integrand,
        0.0,
        t_max,
        epsabs=settings.abs_tol,
        epsrel=settings.rel_tol,
        limit=settings.max_subdivisions,
        full_output=1,
    )
    value, abserr = out[0], out[1]
    if len(out) > 3:
        raise QuadratureError(
            f"quadrature did not converge: {out[3]} (error estimate {abserr:.3e})",
            achieved_error=abserr,
        )
    return float(value)
