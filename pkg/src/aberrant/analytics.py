"""Closed-form aberration analytics: equivalent simplex, two-sided bounds,
cell-region shifts, and the smooth surface approximation of the corner cut
polytope boundary.

Everything here is a function of (n, d, w) alone; no design is involved.
d-th roots force floating point, with an error budget around 1e-12 per
operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import WeightVector, ModelBasis, aberration


def _gmean(w: WeightVector) -> float:
    return math.exp(sum(math.log(float(x)) for x in w.w) / w.dimension)


def _check(n: int, d: int, w: WeightVector):
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    if w.dimension != d:
        raise ValueError("weight/dimension mismatch")
    return w


def simplex_constant(n: int, d: int, w: WeightVector) -> float:
    """Hyperplane constant c making the simplex below {w.x = c} have volume n."""
    w = _check(n, d, w)
    return (n * math.factorial(d)) ** (1.0 / d) * _gmean(w)


def equivalent_simplex_aberration(n: int, d: int, w: WeightVector) -> float:
    """Mean weighted coordinate of a uniform draw over the volume-n simplex."""
    w = _check(n, d, w)
    return (n * math.factorial(d)) ** (1.0 / d) * (d / (d + 1.0)) * _gmean(w)


def aberration_bounds(n: int, d: int, w: WeightVector) -> tuple[float, float]:
    """(lower, upper) bracket of width exactly 2 around the simplex value."""
    a_s = equivalent_simplex_aberration(n, d, w)
    return (a_s - 1.0, a_s + 1.0)


def cell_region_aberration(L: ModelBasis, w: WeightVector, which: str):
    """Aberration of the unit-cell region over L: the upper cells shift the
    model value by +1/2, the lower cells by -1/2 (weights sum to one)."""
    base = aberration(w, L)
    half = type(base)(1) / 2 if not isinstance(base, float) else 0.5
    if which == "upper":
        return base + half
    if which == "lower":
        return base - half
    raise ValueError("which must be 'upper' or 'lower'")


@dataclass(frozen=True)
class ApproxSurface:
    """Parameters of the surface prod(x_i + a) = b approximating the lower
    boundary of the corner cut polytope."""

    a: float
    b: float
    n: int
    d: int
    mode: str  # "exact-d2" | "truncated-general"


def approx_surface_params(n: int, d: int) -> ApproxSurface:
    """Fit (a, b) from the axis intersection at C(n, 2) and the interpolated
    polytope tip; closed form for d = 2, truncated expansion otherwise."""
    if n < 2:
        raise ValueError("need n >= 2")
    if d < 2:
        raise ValueError("need d >= 2")
    if d == 2:
        r = math.sqrt(1 + 8 * n)
        a = (5 - 3 * r + 4 * n) / (3 * (3 - 2 * r + 3 * n))
        b = a * ((n - 1) / 2 + a)
        return ApproxSurface(a, b, n, d, "exact-d2")
    a = (2 * math.factorial(d) * n / ((d + 1) ** d * (n - 1))) ** (1.0 / (d - 1))
    b = math.factorial(d) * n / (d + 1) ** d
    return ApproxSurface(a, b, n, d, "truncated-general")


def approx_min_aberration(n: int, d: int, w: WeightVector, surface: ApproxSurface | None = None) -> float:
    """Smooth approximation of the minimal aberration: the w-value of the
    tangency point on the fitted surface."""
    w = _check(n, d, w)
    s = surface if surface is not None else approx_surface_params(n, d)
    return d * s.b ** (1.0 / d) * _gmean(w) - s.a * float(sum(w.w))


def _binom_gamma(x: float, k: int) -> float:
    """Gamma-extended binomial coefficient C(x, k) for real x > k - 1."""
    return math.exp(
        math.lgamma(x + 1) - math.lgamma(k + 1) - math.lgamma(x - k + 1)
    )


def interpolated_tip(n: int, d: int) -> float:
    """Scaled tip coordinate of the corner cut polytope, interpolated through
    the pointed sizes n = C(k+d-1, d) by the gamma extension of binomials."""
    if n < 2:
        raise ValueError("need n >= 2")
    lo, hi = 1.0, 2.0
    while _binom_gamma(hi + d - 1, d) < n:
        lo, hi = hi, hi * 2
    for _ in range(200):
        mid = (lo + hi) / 2
        if _binom_gamma(mid + d - 1, d) < n:
            lo = mid
        else:
            hi = mid
    k = (lo + hi) / 2
    return _binom_gamma(k + d - 1, d + 1) / n
