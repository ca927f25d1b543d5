"""Numerical integration robust to algebraic endpoint singularities and to
semi-infinite domains with declared algebraic or exponential decay.

The finite-interval engine is a tanh-sinh (double-exponential) transformed
trapezoid rule.  Abscissas never include the endpoints, and points near an
endpoint are generated as offsets from that endpoint so that integrands like
t**(-5/6) keep full precision at x = a + offset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .numerics import (DEFAULT_CTX, MACHINE_EPS, ConvergenceError, DomainError,
                       PrecisionContext)

# Beyond |t| = 5 the transformed weights are below 1e-100 even against a
# (x-a)**(-5/6) endpoint blow-up, so nothing integrable contributes.
_T_MAX = 5.0


class QuadratureError(ConvergenceError):
    """Level cap reached without the levels agreeing."""


@dataclass(frozen=True)
class ExponentialDecay:
    """f(t) ~ exp(-rate*t) for large t."""
    rate: float


@dataclass(frozen=True)
class AlgebraicDecay:
    """f(t) ~ t**(-p) for large t; needs p > 1 to converge."""
    p: float


def _nodes(h: float, odd_only: bool):
    """Yield (abscissa x in (-1,1), offset from the nearer endpoint of
    (-1,1), weight) for t = j*h, skipping even j when refining."""
    j = 1 if odd_only else 0
    step = 2 if odd_only else 1
    while True:
        t = j * h
        if t > _T_MAX:
            return
        u = 0.5 * math.pi * math.sinh(t)
        w = 0.5 * math.pi * math.cosh(t) / math.cosh(u) ** 2
        x = math.tanh(u)
        off = 2.0 / (1.0 + math.exp(2.0 * u))   # 1 - x, computed stably
        yield x, off, w
        j += step


def integrate_finite(f: Callable[[float], float], a: float, b: float,
                     ctx: PrecisionContext = DEFAULT_CTX,
                     singular_at_a: bool = False,
                     singular_at_b: bool = False) -> float:
    """Integrate f over (a, b) with tanh-sinh levels until two successive
    levels agree within eps_rel*|I| + eps_abs.

    The singular flags assert that an endpoint blow-up is expected and
    integrable; a non-finite sample elsewhere is a DomainError.  Level-cap
    exhaustion raises QuadratureError carrying the best estimate and gap.
    """
    if not (a < b):
        raise DomainError(f"need a < b, got [{a}, {b}]")
    half = 0.5 * (b - a)

    def sample(x: float, off: float, sign: int) -> float:
        # sign +1: node on the b side, -1: mirrored onto the a side.
        if sign > 0:
            point = b - half * off
            near_singular = singular_at_b
        else:
            point = a + half * off
            near_singular = singular_at_a
        if point <= a or point >= b:
            return 0.0  # offset lost to rounding; weight there is negligible
        v = f(point)
        if not math.isfinite(v):
            if near_singular and off < 1e-12:
                return 0.0
            raise DomainError(f"integrand not finite at x={point!r}")
        return v

    def level_sum(h: float, odd_only: bool) -> float:
        s = 0.0
        for x, off, w in _nodes(h, odd_only):
            contrib = w * sample(x, off, +1)
            if x != 0.0:
                contrib += w * sample(x, off, -1)
            s += contrib
        return s

    h = 1.0
    total = h * level_sum(h, odd_only=False)
    prev = math.inf
    for level in range(1, ctx.max_quad_levels + 1):
        h *= 0.5
        total = 0.5 * total + h * level_sum(h, odd_only=True)
        gap = abs(total - prev)
        prev = total
        if level >= 3 and gap <= ctx.tol(total):
            return half * total
    raise QuadratureError(
        f"quadrature level cap ({ctx.max_quad_levels}) reached on [{a}, {b}]",
        best=half * total, gap=half * gap)


def integrate_to_infinity(f: Callable[[float], float], a: float,
                          decay: ExponentialDecay | AlgebraicDecay,
                          ctx: PrecisionContext = DEFAULT_CTX,
                          singular_at_a: bool = False) -> float:
    """Integrate f over (a, inf) given its declared tail behaviour.

    Exponential decay: truncate at T with rate*(T-a) >= ln(1/eps_abs) plus a
    margin, then integrate the finite piece.  Algebraic decay t**(-p), p > 1:
    map t = a + (1-s)/s onto s in (0, 1]; the image integrand has an
    s**(p-2) endpoint singularity which tanh-sinh absorbs.
    """
    if isinstance(decay, ExponentialDecay):
        if decay.rate <= 0.0:
            raise DomainError("exponential decay rate must be positive")
        cut = a + (math.log(1.0 / ctx.eps_abs) + 10.0) / decay.rate
        return integrate_finite(f, a, cut, ctx, singular_at_a=singular_at_a)
    if isinstance(decay, AlgebraicDecay):
        if decay.p <= 1.0:
            raise DomainError(f"algebraic decay p={decay.p} <= 1 diverges")

        def mapped(s: float) -> float:
            return f(a + (1.0 - s) / s) / (s * s)

        return integrate_finite(mapped, 0.0, 1.0, ctx,
                                singular_at_a=True, singular_at_b=singular_at_a)
    raise DomainError(f"unknown decay declaration: {decay!r}")


def integrate_complex(f: Callable[[float], complex], a: float, b: float,
                      ctx: PrecisionContext = DEFAULT_CTX,
                      singular_at_a: bool = False,
                      singular_at_b: bool = False) -> complex:
    """Complex-valued finite integral: real and imaginary parts separately."""
    re = integrate_finite(lambda t: f(t).real, a, b, ctx, singular_at_a, singular_at_b)
    im = integrate_finite(lambda t: f(t).imag, a, b, ctx, singular_at_a, singular_at_b)
    return complex(re, im)
