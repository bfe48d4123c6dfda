"""Constructions of complementary mean pairs (K, L) with M(K, L) = M.

Three families on the positive half-line:

* ``log_pair``: the pair t*P^t*(x-y)/(x^t-y^t) complementary to the
  logarithmic mean, parameterized by a selection set.
* ``self_complement_base`` / ``xy_pair``: the kernel
  M_t = (M/M(x^t, y^t))^(1/(1-t)) and the pair (P^t*M_t^(1-t),
  P'^t*M_t^(1-t)) complementary to M itself.
* ``general_base`` / ``general_pair``: the kernel with arbitrary means
  C, D in place of the coordinates.  The kernel need not be a mean; the
  pair (C^t*N^(1-t), D^t*N^(1-t)) always is, and always satisfies the
  invariance equation.

A fourth family lives on the whole real line: ``translative_conjugate``
transports a homogeneous mean through exp/log to a translative one, and
``translative_pair`` builds the additive analogue of the xy construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, ParameterError
from .means import Mean, _pow, _pow_diff_ratio, classical
from .projective import (
    _COMPLEMENT_NAME,
    ConeSet,
    builtin_cone,
    complement_cone,
    projective_mean,
)

__all__ = [
    "MeanPair",
    "log_pair",
    "self_complement_base",
    "xy_pair",
    "general_base",
    "general_pair",
    "RealMean",
    "RealMeanPair",
    "TRANSLATIVE_ARG_LIMIT",
    "translative_conjugate",
    "ARITHMETIC_ON_REALS",
    "translative_pair",
]


@dataclass(frozen=True)
class MeanPair:
    """Ordered pair (K, L) tagged with the mean it claims to leave invariant.

    ``t`` is the construction parameter when one exists (None for ad-hoc
    pairs such as (arithmetic, harmonic) around geometric).  ``spec`` is
    the parseable pair expression when every ingredient has one.
    """

    K: Mean
    L: Mean
    target: Mean
    t: float | None = None
    spec: str | None = None


def _wrap(s: str) -> str:
    return f"({s})" if ":" in s else s


def _pair_spec(head: str, specs: tuple[str | None, ...], t: float) -> str | None:
    if any(s is None for s in specs):
        return None
    body = ":".join(_wrap(s) for s in specs)
    return f"{head}:{body}:{t!r}"


def log_pair(t: float, A: ConeSet | None = None) -> MeanPair:
    """Pair complementary to the logarithmic mean, split by a selection set.

    K = P_A^t * t*(x-y)/(x^t - y^t) and L uses the complementary set.
    Defined for t in [-1, 1] excluding 0; at t = 1 the quotient collapses
    to 1 and the pair degenerates to the two coordinate selections, at
    t = -1 it collapses to xy and the selections swap.  Negating t swaps
    K and L.
    """
    t = float(t)
    if not (-1.0 <= t <= 1.0) or t == 0.0:
        raise ParameterError("log pair requires t in [-1, 1] with t != 0")
    if A is None:
        A = builtin_cone("full")
    P = projective_mean(A)
    Q = projective_mean(complement_cone(A))

    def make(sel: Mean) -> Callable:
        def fn(x, y):
            return _pow(sel.fn(x, y), t) * _pow_diff_ratio(x, y, t)

        return fn

    sym = A.declared_asymmetric
    hom = A.declared_cone
    set_name = A.name or "<set>"
    K = Mean(make(P), f"logpair.K(t={t!r}, {set_name})",
             symmetric=sym, homogeneous=hom)
    L = Mean(make(Q), f"logpair.L(t={t!r}, {set_name})",
             symmetric=sym, homogeneous=hom)
    spec = None
    if 0.0 < t < 1.0 and A.name in _COMPLEMENT_NAME:
        spec = _pair_spec(
            "pair",
            ("logarithmic", f"proj:{A.name}", f"proj:{_COMPLEMENT_NAME[A.name]}"),
            t,
        )
    return MeanPair(K, L, target=classical("logarithmic"), t=t, spec=spec)


def self_complement_base(M: Mean, t: float) -> Mean:
    """The kernel M_t = (M / M(x^t, y^t))^(1/(1-t)) for t in (-1, 1).

    Symmetric and homogeneous whenever M is (required); a mean exactly
    when M is also monotone, which is not required here: the monotone
    and strict flags stay False and mean-ness is left to an explicit
    verify call.  M_0 = M and geometric reproduces itself for every t.
    """
    t = float(t)
    if not (-1.0 < t < 1.0):
        raise ParameterError("self-complementary base requires -1 < t < 1")
    if not (M.symmetric and M.homogeneous):
        raise DomainError(
            f"{M.label}: base construction requires symmetric and homogeneous flags"
        )
    q = 1.0 / (1.0 - t)

    def fn(x, y):
        return _pow(M.fn(x, y) / M.fn(_pow(x, t), _pow(y, t)), q)

    spec = f"mt:{_wrap(M.spec)}:{t!r}" if M.spec else None
    return Mean(
        fn,
        label=spec or f"mt({M.label}, t={t!r})",
        symmetric=True,
        homogeneous=True,
        monotone=False,
        strict=False,
        spec=spec,
    )


def xy_pair(M: Mean, t: float, A: ConeSet | None = None) -> MeanPair:
    """Pair (P_A^t * M_t^(1-t), P_{A'}^t * M_t^(1-t)) complementary to M.

    Requires M symmetric, homogeneous, and monotone, and t in (-1, 1).
    The product P^t * M_t^(1-t) is evaluated as P^t * M / M(x^t, y^t),
    avoiding the 1/(1-t) exponent round trip.  K and L are symmetric when
    the selection set is asymmetric (or t = 0, where both collapse to M)
    and homogeneous when it is a cone; they are not monotone in general,
    which check_monotone_trace exposes for the plain arithmetic case.
    """
    t = float(t)
    if not (-1.0 < t < 1.0):
        raise ParameterError("xy pair requires -1 < t < 1")
    if not (M.symmetric and M.homogeneous and M.monotone):
        raise DomainError(
            f"{M.label}: xy pair requires symmetric, homogeneous, monotone flags"
        )
    if A is None:
        A = builtin_cone("full")
    P = projective_mean(A)
    Q = projective_mean(complement_cone(A))

    def make(sel: Mean) -> Callable:
        def fn(x, y):
            ratio = M.fn(x, y) / M.fn(_pow(x, t), _pow(y, t))
            return _pow(sel.fn(x, y), t) * ratio

        return fn

    sym = A.declared_asymmetric or t == 0.0
    hom = A.declared_cone
    set_name = A.name or "<set>"
    K = Mean(make(P), f"xypair.K({M.label}, t={t!r}, {set_name})",
             symmetric=sym, homogeneous=hom)
    L = Mean(make(Q), f"xypair.L({M.label}, t={t!r}, {set_name})",
             symmetric=sym, homogeneous=hom)
    spec = None
    if 0.0 < t < 1.0 and A.name in _COMPLEMENT_NAME and M.spec:
        spec = _pair_spec(
            "pair",
            (M.spec, f"proj:{A.name}", f"proj:{_COMPLEMENT_NAME[A.name]}"),
            t,
        )
    return MeanPair(K, L, target=M, t=t, spec=spec)


def _require_pair_inputs(M: Mean, t: float, what: str) -> float:
    t = float(t)
    if not (0.0 < t < 1.0):
        raise ParameterError(f"{what} requires 0 < t < 1")
    if not (M.symmetric and M.homogeneous and M.monotone):
        raise DomainError(
            f"{M.label}: {what} requires symmetric, homogeneous, monotone flags"
        )
    return t


def general_base(M: Mean, C: Mean, D: Mean, t: float) -> Mean:
    """The kernel N = (M / M(C^t, D^t))^(1/(1-t)) for arbitrary means C, D.

    Requires M symmetric, homogeneous, monotone and t in (0, 1); C and D
    are unconstrained.  The output is NOT guaranteed to be a mean: with
    M = C = arithmetic and D = harmonic its trace overshoots the identity
    by a factor approaching 2^(t/(1-t)).  Run check_meanness when
    mean-ness matters.
    """
    t = _require_pair_inputs(M, t, "general base")
    q = 1.0 / (1.0 - t)

    def fn(x, y):
        ct = _pow(C.fn(x, y), t)
        dt = _pow(D.fn(x, y), t)
        return _pow(M.fn(x, y) / M.fn(ct, dt), q)

    spec = None
    if M.spec and C.spec and D.spec:
        spec = f"nt:{_wrap(M.spec)}:{_wrap(C.spec)}:{_wrap(D.spec)}:{t!r}"
    return Mean(
        fn,
        label=spec or f"nt({M.label}; {C.label}, {D.label}; t={t!r})",
        symmetric=C.symmetric and D.symmetric,
        homogeneous=C.homogeneous and D.homogeneous,
        monotone=False,
        strict=False,
        spec=spec,
    )


def general_pair(M: Mean, C: Mean, D: Mean, t: float) -> MeanPair:
    """Pair (C^t * N^(1-t), D^t * N^(1-t)) with N the general base.

    Both components are always means and always satisfy M(K, L) = M,
    whether or not N itself is a mean.  N^(1-t) is folded to
    M / M(C^t, D^t) so no lossy exponent round trip occurs.
    """
    t = _require_pair_inputs(M, t, "general pair")

    def k_fn(x, y):
        ct = _pow(C.fn(x, y), t)
        dt = _pow(D.fn(x, y), t)
        return ct * (M.fn(x, y) / M.fn(ct, dt))

    def l_fn(x, y):
        ct = _pow(C.fn(x, y), t)
        dt = _pow(D.fn(x, y), t)
        return dt * (M.fn(x, y) / M.fn(ct, dt))

    sym = C.symmetric and D.symmetric
    hom = C.homogeneous and D.homogeneous
    K = Mean(k_fn, f"pair.K({M.label}; {C.label}, {D.label}; t={t!r})",
             symmetric=sym, homogeneous=hom)
    L = Mean(l_fn, f"pair.L({M.label}; {C.label}, {D.label}; t={t!r})",
             symmetric=sym, homogeneous=hom)
    spec = _pair_spec("pair", (M.spec, C.spec, D.spec), t)
    return MeanPair(K, L, target=M, t=t, spec=spec)


@dataclass(frozen=True)
class RealMean:
    """Mean on the whole real line; no positivity constraint on arguments.

    ``translative`` claims N(x + c, y + c) = N(x, y) + c; like every flag
    it is a declaration, testable by sampling.
    """

    fn: Callable[[np.ndarray, np.ndarray], np.ndarray]
    label: str
    symmetric: bool = False
    monotone: bool = False
    translative: bool = False
    strict: bool = False

    def __call__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        out = self.fn(x, y)
        if np.ndim(out) == 0:
            return float(out)
        return out

    def __repr__(self) -> str:
        return f"RealMean({self.label})"


@dataclass(frozen=True)
class RealMeanPair:
    K: RealMean
    L: RealMean
    target: RealMean
    t: float | None = None


# exp overflows just above 709; stay a little inside
TRANSLATIVE_ARG_LIMIT = 700.0


def translative_conjugate(M: Mean) -> RealMean:
    """Transport M through exp/log: N(x, y) = log M(e^x, e^y).

    N is translative exactly when M is homogeneous (declared accordingly).
    Arguments beyond |x| <= 700 raise OverflowError before exp runs.
    """

    def fn(x, y):
        if np.any(np.abs(x) > TRANSLATIVE_ARG_LIMIT) or np.any(
            np.abs(y) > TRANSLATIVE_ARG_LIMIT
        ):
            raise OverflowError(
                f"conjugate of {M.label}: arguments must satisfy "
                f"|x| <= {TRANSLATIVE_ARG_LIMIT:g}"
            )
        return np.log(M.fn(np.exp(x), np.exp(y)))

    return RealMean(
        fn,
        label=f"conj({M.label})",
        symmetric=M.symmetric,
        monotone=M.monotone,
        translative=M.homogeneous,
        strict=M.strict,
    )


def _real_arith_fn(x, y):
    return 0.5 * (x + y)


ARITHMETIC_ON_REALS = RealMean(
    _real_arith_fn,
    "arithmetic-on-reals",
    symmetric=True,
    monotone=True,
    translative=True,
    strict=True,
)


def translative_pair(N: RealMean, t: float) -> RealMeanPair:
    """Additive pair (tx + (1-t)N_t, ty + (1-t)N_t) complementary to N.

    N_t = (N(x,y) - N(tx,ty))/(1-t); the components fold the 1-t factor,
    K = tx + N(x,y) - N(tx,ty), which is the same expression with two
    fewer roundings.  Requires N symmetric, monotone, and translative,
    and t in (-1, 1).  For the arithmetic mean this is exactly the family
    of weighted arithmetic pairs with weights (1+t)/2 and (1-t)/2.
    """
    t = float(t)
    if not (-1.0 < t < 1.0):
        raise ParameterError("translative pair requires -1 < t < 1")
    if not (N.symmetric and N.monotone and N.translative):
        raise DomainError(
            f"{N.label}: translative pair requires symmetric, monotone, "
            "translative flags"
        )

    def k_fn(x, y):
        return t * x + (N.fn(x, y) - N.fn(t * x, t * y))

    def l_fn(x, y):
        return t * y + (N.fn(x, y) - N.fn(t * x, t * y))

    sym = t == 0.0
    K = RealMean(k_fn, f"transpair.K({N.label}, t={t!r})",
                 symmetric=sym, monotone=False, translative=True)
    L = RealMean(l_fn, f"transpair.L({N.label}, t={t!r})",
                 symmetric=sym, monotone=False, translative=True)
    return RealMeanPair(K, L, target=N, t=t)
