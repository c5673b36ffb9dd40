"""Modified Bessel functions I0 and K0 to near machine precision.

K0 supplies the attractive part of the planar massive-photon potential;
I0 is needed by the small-argument series for K0. Both are evaluated in
two regimes:

* ``x <= 2`` (K0) / ``x <= 40`` (I0): ascending power series. For K0 the
  standard combination ``-(ln(x/2) + gamma) I0(x) + sum_k H_k (x^2/4)^k/(k!)^2``
  is used; the cancellation against the log term loses at most one digit
  at the seam.
* large ``x``: for K0 a Chebyshev fit of ``sqrt(x) exp(x) K0(x)`` in the
  variable ``t = 4/x - 1`` (regenerate with ``tools/gen_k0_chebyshev.py``);
  for I0 the optimally truncated asymptotic series of
  ``sqrt(2 pi x) exp(-x) I0(x)``.

Arguments above ``X_MAX`` underflow: ``exp(-x)`` is below the smallest
normal double long before the tail matters physically, so K0 returns an
exact 0 tagged with ``underflow=True`` instead of raising.

All functions are pure and stateless; they are safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Euler-Mascheroni constant, full double precision.
EULER_GAMMA = 0.5772156649015329

# Beyond this argument exp(-x) underflows for any practical purpose and
# K0 is returned as exact zero with the underflow flag set.
X_MAX = 700.0

# Series/large-argument switch points.
_K0_SWITCH = 2.0
_I0_SWITCH = 40.0

# Chebyshev coefficients for sqrt(x)*exp(x)*K0(x), t = 4/x - 1, x in [2, inf).
# Generated by tools/gen_k0_chebyshev.py (max relative error 2.8e-20).
_K0_CHEB = (
    2.4403030820659554547,
    -0.031448101311964500543,
    0.0015698838857300533749,
    -0.00012849549581627802638,
    0.000013949813718876499364,
    -1.8317555227191194848e-6,
    2.7668136394450150761e-7,
    -4.6604898976879476656e-8,
    8.5740340174142260858e-9,
    -1.6975345093890615156e-9,
    3.5773972814003284472e-10,
    -7.9574892444773970377e-11,
    1.855949114954926555e-11,
    -4.5145978833745191751e-12,
    1.1403405882073442347e-12,
    -2.9800969231481783548e-13,
    8.0328907750683743694e-14,
    -2.2275133267462963604e-14,
    6.3400764762766459661e-15,
    -1.8485933779209071694e-15,
    5.5120559994043333649e-16,
    -1.6782311257549006383e-16,
    5.2103917776435541125e-17,
    -1.6475805939842632815e-17,
    5.3004337711773357703e-18,
    -1.7331712005821000263e-18,
    5.7551092028827293467e-19,
    -1.9390956053183553946e-19,
    6.624610534536145467e-20,
)

# Number of ascending-series terms; at the switch points the next term is
# below 1e-19 relative.
_K0_SERIES_TERMS = 20
_I0_SERIES_TERMS = 120
_I0_ASYMPTOTIC_TERMS = 18


@dataclass(frozen=True)
class BesselEval:
    """One K0 evaluation together with the regime that produced it.

    ``regime`` is ``"series"`` for the ascending series (x <= 2) and
    ``"asymptotic"`` for the large-argument fit. ``underflow`` marks
    arguments beyond ``X_MAX`` where the value is an exact 0.
    """

    x: float
    value: float
    regime: str
    underflow: bool = False


def _check_positive(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"{name} requires a positive finite argument, got {x!r}")
    return x


def _i0_series_scalar(x: float) -> float:
    q = 0.25 * x * x
    term = 1.0
    acc = 1.0
    for k in range(1, _I0_SERIES_TERMS + 1):
        term *= q / (k * k)
        acc += term
        if term < 1e-18 * acc:
            break
    return acc


def _i0_asymptotic_scalar(x: float) -> float:
    # I0(x) ~ exp(x)/sqrt(2 pi x) * sum_k a_k / x^k, a_k = ((2k-1)!!)^2/(k! 8^k)
    acc = 1.0
    term = 1.0
    for k in range(1, _I0_ASYMPTOTIC_TERMS + 1):
        term *= (2 * k - 1) ** 2 / (8.0 * k * x)
        acc += term
    return math.exp(x) / math.sqrt(2.0 * math.pi * x) * acc


def bessel_i0(x: float) -> float:
    """Modified Bessel function of the first kind, order zero.

    Parameters
    ----------
    x : float
        Argument, ``x >= 0`` and below the overflow threshold (~709.7).

    Returns
    -------
    float
        I0(x), relative error below 1e-13 over the supported range.
    """
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise ValueError(f"bessel_i0 requires a finite x >= 0, got {x!r}")
    if x > 709.7:
        raise ValueError(f"bessel_i0 overflows for x = {x!r} (limit 709.7)")
    if x <= _I0_SWITCH:
        return _i0_series_scalar(x)
    return _i0_asymptotic_scalar(x)


def _k0_series_array(x: np.ndarray) -> np.ndarray:
    """Ascending series for K0, vectorized, valid for 0 < x <= 2."""
    q = 0.25 * x * x
    i0 = np.ones_like(x)
    acc = np.zeros_like(x)
    term = np.ones_like(x)
    harmonic = 0.0
    for k in range(1, _K0_SERIES_TERMS + 1):
        term = term * q / (k * k)
        harmonic += 1.0 / k
        i0 += term
        acc += term * harmonic
    return -(np.log(0.5 * x) + EULER_GAMMA) * i0 + acc


def _k0_scaled_large_array(x: np.ndarray) -> np.ndarray:
    """sqrt(x)*exp(x)*K0(x) via the Chebyshev fit, valid for x >= 2."""
    t = 4.0 / x - 1.0
    b1 = np.zeros_like(x)
    b2 = np.zeros_like(x)
    for c in _K0_CHEB[:0:-1]:
        b1, b2 = 2.0 * t * b1 - b2 + c, b1
    return t * b1 - b2 + 0.5 * _K0_CHEB[0]


def _k0_large_array(x: np.ndarray) -> np.ndarray:
    return _k0_scaled_large_array(x) * np.exp(-x) / np.sqrt(x)


def bessel_k0_array(x: np.ndarray) -> np.ndarray:
    """Vectorized K0 over an array of positive arguments.

    Entries beyond ``X_MAX`` yield exact 0 (underflow regime); any
    non-positive or non-finite entry raises.
    """
    x = np.asarray(x, dtype=float)
    if x.size and (not np.all(np.isfinite(x)) or np.any(x <= 0.0)):
        raise ValueError("bessel_k0 requires positive finite arguments")
    out = np.zeros_like(x)
    small = x <= _K0_SWITCH
    large = ~small & (x <= X_MAX)
    if np.any(small):
        out[small] = _k0_series_array(x[small])
    if np.any(large):
        out[large] = _k0_large_array(x[large])
    return out


def bessel_k0_eval(x: float) -> BesselEval:
    """Evaluate K0(x) and report the regime used."""
    x = _check_positive(x, "bessel_k0")
    if x > X_MAX:
        return BesselEval(x=x, value=0.0, regime="asymptotic", underflow=True)
    arr = np.array([x])
    if x <= _K0_SWITCH:
        return BesselEval(x=x, value=float(_k0_series_array(arr)[0]), regime="series")
    return BesselEval(x=x, value=float(_k0_large_array(arr)[0]), regime="asymptotic")


def bessel_k0(x: float) -> float:
    """Modified Bessel function of the second kind, order zero.

    Parameters
    ----------
    x : float
        Argument, ``x > 0``. Values above ``X_MAX`` return exact 0
        (see ``bessel_k0_eval`` for the underflow flag).

    Returns
    -------
    float
        K0(x), relative error below 1e-12 against the integral
        representation over [1e-6, 50].
    """
    return bessel_k0_eval(x).value
