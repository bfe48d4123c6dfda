"""Bivariate means on the positive half-line.

A mean is a positive function M(x, y) with min(x, y) <= M(x, y) <= max(x, y).
This module provides the classical catalog (arithmetic, geometric, harmonic,
logarithmic, min, max, the two coordinate projections, and the power family),
the two-parameter difference means ``stolarsky(r, s)``, and trace functions
f(x) = M(x, 1) for homogeneous means.

Every evaluator is numpy-universal: it accepts floats or arrays and
broadcasts elementwise, so grid scans stay vectorized end to end.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, InvalidMeanSpec, ParameterError

__all__ = [
    "NEAR_DIAGONAL_RTOL",
    "CLASSICAL_NAMES",
    "Mean",
    "TraceFn",
    "classical",
    "power_mean",
    "stolarsky",
    "trace_of",
]

# Relative gap |x - y| / max(x, y) below which quotient-form evaluators
# switch to a second-order series around the midpoint; the direct quotient
# degenerates to 0/0 on the diagonal.
NEAR_DIAGONAL_RTOL = 1e-8


@dataclass(frozen=True)
class Mean:
    """A positive bivariate function together with declared property flags.

    The flags are claims, not proofs: ``symmetric`` (invariant under argument
    swap), ``homogeneous`` (degree-1 under positive scaling), ``monotone``
    (nondecreasing in each argument), ``strict`` (strictly between min and
    max off the diagonal).  ``verify.check_flags`` samples declared flags and
    reports the first one that fails.

    ``spec`` is the machine-readable constructor string for this mean when
    one exists in the textual grammar, otherwise None.
    """

    fn: Callable[[np.ndarray, np.ndarray], np.ndarray]
    label: str
    symmetric: bool = False
    homogeneous: bool = False
    monotone: bool = False
    strict: bool = False
    spec: str | None = None

    def __call__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if not (np.all(x > 0.0) and np.all(y > 0.0)):
            raise DomainError(f"{self.label}: arguments must be positive reals")
        out = self.fn(x, y)
        if np.ndim(out) == 0:
            return float(out)
        return out

    def __repr__(self) -> str:
        return f"Mean({self.label})"


def _pow(x, t: float):
    """x**t computed as exp(t*log x), uniform over the positive range."""
    if t == 0.0:
        return np.ones_like(np.asarray(x, dtype=float))
    if t == 1.0:
        return np.asarray(x, dtype=float)
    return np.exp(t * np.log(x))


def _gap_log(hi, lo, d, near):
    """log(hi/lo) with log1p accuracy when the relative gap is small.

    Wide gaps (d > lo) go through plain log subtraction, where cancellation
    is harmless and d/lo could overflow.  Lanes marked near return 0.0 and
    are expected to be discarded by the caller.
    """
    wide = d > lo
    skip = near | wide
    small = np.log1p(np.where(skip, 0.0, d) / np.where(skip, 1.0, lo))
    return np.where(wide, np.log(hi) - np.log(lo), small)


def _logmean(x, y):
    # (x - y)/(log x - log y), extended by continuity across the diagonal.
    # The quotient runs on log1p of the relative gap, which keeps it fully
    # accurate for nearby arguments; inside NEAR_DIAGONAL_RTOL a
    # second-order midpoint series takes over.
    hi = np.maximum(x, y)
    lo = np.minimum(x, y)
    d = hi - lo
    near = d <= NEAR_DIAGONAL_RTOL * hi
    m = 0.5 * (hi + lo)
    u = d / (2.0 * m)
    series = m * (1.0 - u * u / 3.0)
    w = _gap_log(hi, lo, d, near)
    return np.where(near, series, d / np.where(near, 1.0, w))


def _pow_diff_ratio(x, y, t: float):
    """t*(x - y)/(x**t - y**t), extended by continuity across the diagonal.

    Written over (hi, lo) so the result is exactly symmetric, with the
    denominator expressed through expm1 of a nonpositive argument, which
    cannot overflow and loses no precision for nearby inputs.
    """
    hi = np.maximum(x, y)
    lo = np.minimum(x, y)
    d = hi - lo
    near = d <= NEAR_DIAGONAL_RTOL * hi
    m = 0.5 * (hi + lo)
    u = d / (2.0 * m)
    series = _pow(m, 1.0 - t) * (1.0 - (t - 1.0) * (t - 2.0) * (u * u) / 6.0)
    w = _gap_log(hi, lo, d, near)
    den = _pow(hi, t) * (-np.expm1(-t * w))
    return np.where(near, series, t * d / np.where(near, 1.0, den))


def _arithmetic_fn(x, y):
    return 0.5 * (x + y)


def _geometric_fn(x, y):
    # factored square roots: no overflow when the product of the arguments
    # would leave the float range
    return np.sqrt(x) * np.sqrt(y)


def _harmonic_fn(x, y):
    # reciprocal form for the same overflow reason
    return 2.0 / (1.0 / x + 1.0 / y)


def _proj1_fn(x, y):
    return np.broadcast_arrays(x, y)[0]


def _proj2_fn(x, y):
    return np.broadcast_arrays(x, y)[1]


def _power_fn(p: float):
    def fn(x, y):
        # factor out one argument so the powers stay in (0, 1]
        b = np.maximum(x, y) if p > 0 else np.minimum(x, y)
        rx = _pow(x / b, p)
        ry = _pow(y / b, p)
        return b * _pow(0.5 * (rx + ry), 1.0 / p)

    return fn


def power_mean(p: float) -> Mean:
    """Power mean ((x**p + y**p)/2)**(1/p); p = 0 is aliased to geometric."""
    p = float(p)
    if p == 0.0:
        return _REGISTRY["geometric"]
    name = f"power:{p!r}"
    return Mean(
        _power_fn(p),
        label=name,
        symmetric=True,
        homogeneous=True,
        monotone=True,
        strict=True,
        spec=name,
    )


def stolarsky(r: float, s: float) -> Mean:
    """Difference mean ((s/r)*(x**r - y**r)/(x**s - y**s))**(1/(r - s)).

    Requires r != s and r, s both nonzero.  Special cases worth knowing:
    (2, 1) is the arithmetic mean, (1, -1) the geometric mean, and
    (3/2, 1/2) the Heronian mean (x + sqrt(x*y) + y)/3.
    """
    r = float(r)
    s = float(s)
    if r == s:
        raise ParameterError("stolarsky mean requires r != s")
    if r == 0.0 or s == 0.0:
        raise ParameterError("stolarsky mean requires nonzero r and s")
    q = 1.0 / (r - s)
    coeff = s / r

    def fn(x, y):
        hi = np.maximum(x, y)
        lo = np.minimum(x, y)
        d = hi - lo
        near = d <= NEAR_DIAGONAL_RTOL * hi
        m = 0.5 * (hi + lo)
        u = d / (2.0 * m)
        series = m * (1.0 + (r + s - 3.0) * (u * u) / 6.0)
        w = _gap_log(hi, lo, d, near)
        core = coeff * np.expm1(-r * w) / np.where(near, 1.0, np.expm1(-s * w))
        return np.where(near, series, hi * _pow(np.where(near, 1.0, core), q))

    name = f"stolarsky:{r!r}:{s!r}"
    return Mean(
        fn,
        label=name,
        symmetric=True,
        homogeneous=True,
        monotone=True,
        strict=True,
        spec=name,
    )


_REGISTRY: dict[str, Mean] = {
    "arithmetic": Mean(
        _arithmetic_fn, "arithmetic",
        symmetric=True, homogeneous=True, monotone=True, strict=True,
        spec="arithmetic",
    ),
    "geometric": Mean(
        _geometric_fn, "geometric",
        symmetric=True, homogeneous=True, monotone=True, strict=True,
        spec="geometric",
    ),
    "harmonic": Mean(
        _harmonic_fn, "harmonic",
        symmetric=True, homogeneous=True, monotone=True, strict=True,
        spec="harmonic",
    ),
    "logarithmic": Mean(
        _logmean, "logarithmic",
        symmetric=True, homogeneous=True, monotone=True, strict=True,
        spec="logarithmic",
    ),
    "min": Mean(
        np.minimum, "min",
        symmetric=True, homogeneous=True, monotone=True, strict=False,
        spec="min",
    ),
    "max": Mean(
        np.maximum, "max",
        symmetric=True, homogeneous=True, monotone=True, strict=False,
        spec="max",
    ),
    "proj1": Mean(
        _proj1_fn, "proj1",
        symmetric=False, homogeneous=True, monotone=True, strict=False,
        spec="proj1",
    ),
    "proj2": Mean(
        _proj2_fn, "proj2",
        symmetric=False, homogeneous=True, monotone=True, strict=False,
        spec="proj2",
    ),
}

# Catalog identifiers accepted by classical(), in a stable iteration order.
CLASSICAL_NAMES: tuple[str, ...] = tuple(_REGISTRY)


def classical(name: str) -> Mean:
    """Look up a catalog mean by identifier.

    Accepts the names in CLASSICAL_NAMES plus the parameterized form
    "power:p" with a decimal literal p.
    """
    if name in _REGISTRY:
        return _REGISTRY[name]
    if name.startswith("power:"):
        text = name[len("power:"):]
        try:
            p = float(text)
        except ValueError:
            raise InvalidMeanSpec(
                f"power mean needs a numeric exponent, got {text!r}",
                position=len("power:"),
            ) from None
        return power_mean(p)
    raise InvalidMeanSpec(f"unknown mean identifier {name!r}", position=0)


@dataclass(frozen=True)
class TraceFn:
    """One-variable restriction f(x) = M(x, 1) of a homogeneous mean.

    For homogeneous M the trace determines the mean: M(x, y) = y*f(x/y).
    """

    mean: Mean

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return self.mean(x, np.ones_like(x))


def trace_of(M: Mean) -> TraceFn:
    """Trace of a homogeneous mean; raises DomainError otherwise."""
    if not M.homogeneous:
        raise DomainError(f"{M.label}: trace requires the homogeneous flag")
    return TraceFn(M)
