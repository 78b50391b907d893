"""Identifiability services: design matrices and incremental rank testing.

A model basis L is identifiable by a design D (|L| = |D|) when the evaluation
matrix [x^alpha] is invertible.  Exact designs get exact decisions; float
designs use a relative residual threshold.

Exact rank decisions run modulo a set of 30-bit primes sized from a Hadamard
bound, which certifies both acceptances (a nonzero minor mod p is nonzero over
Q) and rejections (a minor vanishing modulo a product larger than its absolute
bound is zero).  This keeps the hot scans in machine integers; a fraction-free
eliminator over Fractions backs the incremental accumulator at small sizes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import kernels
from .model import (
    Design,
    DimensionMismatch,
    ModelBasis,
    MultiIndex,
    canonical_key,
)


class SizeMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# primes for the modular eliminations

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1)
def _prime_pool(count: int = 512) -> tuple[int, ...]:
    out = []
    candidate = (1 << 30) - 1
    while len(out) < count:
        if _is_prime(candidate):
            out.append(candidate)
        candidate -= 2
    return tuple(out)


# ---------------------------------------------------------------------------
# design matrix

def _power(base, e: int):
    return base ** e if e else base ** 0


def design_matrix(design: Design, L: ModelBasis):
    """Evaluation matrix with rows per design point and columns per exponent
    (canonical order).  0**0 evaluates to 1."""
    if not isinstance(L, ModelBasis):
        L = ModelBasis(L)
    if L.dimension != design.dimension:
        raise DimensionMismatch("design/model dimension mismatch")
    return [
        [math.prod(_power(x, a) for x, a in zip(point, alpha)) for alpha in L.exponents]
        for point in design.points
    ]


# ---------------------------------------------------------------------------
# exact scalar context: integer scaling + modular scans

@lru_cache(maxsize=128)
def _exact_context(design: Design) -> "_ExactContext":
    return _ExactContext(design)


class _ExactContext:
    """Integer-scaled view of an exact design for modular rank scans.

    Scaling coordinate i by the lcm of its denominators multiplies each
    matrix column by a positive scalar, so rank questions are unchanged.
    """

    def __init__(self, design: Design):
        if not design.is_exact:
            raise ValueError("exact context needs an exact design")
        self.design = design
        d = design.dimension
        self.levels: list[list[int]] = []
        for i in range(d):
            coords = [Fraction(p[i]) for p in design.points]
            denom = math.lcm(*(c.denominator for c in coords))
            self.levels.append([int(c * denom) for c in coords])
        self._tables: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}

    def prime_count(self, maxdeg: int) -> int:
        n = self.design.size
        log_e = sum(
            maxdeg * math.log2(max(max(abs(v) for v in lv), 2)) for lv in self.levels
        )
        log_bound = n * (0.5 * math.log2(n) + log_e) + 2
        return max(2, math.ceil(log_bound / 29))

    def tables(self, maxdeg: int, attempt: int = 0):
        """Per-prime power tables pows[q, d, maxdeg+1, n] and the primes."""
        key = (maxdeg, attempt)
        if key in self._tables:
            return self._tables[key]
        q = self.prime_count(maxdeg)
        primes = _prime_pool()[attempt * q:(attempt + 1) * q]
        if len(primes) < q:
            raise RuntimeError("prime pool exhausted")
        d = self.design.dimension
        n = self.design.size
        pows = np.empty((q, d, maxdeg + 1, n), dtype=np.int64)
        for pi, p in enumerate(primes):
            for i in range(d):
                row = np.array([v % p for v in self.levels[i]], dtype=np.int64)
                acc = np.ones(n, dtype=np.int64)
                for k in range(maxdeg + 1):
                    pows[pi, i, k, :] = acc
                    acc = (acc * row) % p
        result = (pows, np.array(primes, dtype=np.int64))
        self._tables[key] = result
        return result

    def scan(self, exponents: list[MultiIndex], target: int) -> list[int]:
        """Indices of the greedily accepted (independent) columns."""
        if not exponents:
            return []
        maxdeg = max(max(a) for a in exponents)
        cands = np.array(exponents, dtype=np.int64)
        for attempt in range(4):
            pows, primes = self.tables(maxdeg, attempt)
            accepted, ok = kernels.scan_columns(pows, primes, cands, target)
            if ok:
                return list(accepted)
        raise RuntimeError("modular rank scan failed on four prime sets")


# ---------------------------------------------------------------------------
# incremental accumulators

class FractionEliminator:
    """Row-reduced basis of accepted columns over exact rationals."""

    def __init__(self):
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def try_add(self, col) -> bool:
        r = [Fraction(c) for c in col]
        for row, piv in zip(self.rows, self.pivots):
            f = r[piv]
            if f:
                r = [a - f * b for a, b in zip(r, row)]
        piv = next((i for i, a in enumerate(r) if a), None)
        if piv is None:
            return False
        inv = r[piv]
        self.rows.append([a / inv for a in r])
        self.pivots.append(piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


class FloatEliminator:
    """Orthonormal basis of accepted columns with a relative residual test.

    Each candidate column is normalized to unit length before a two-pass
    Gram-Schmidt projection; it is accepted when the residual norm exceeds the
    tolerance.  Normalizing first keeps the test scale-free per column, which
    columns of wildly different magnitude (high powers next to linear terms)
    require.
    """

    def __init__(self, tolerance: float):
        self.tolerance = float(tolerance)
        self.basis: list[np.ndarray] = []

    def try_add(self, col) -> bool:
        c = np.asarray(col, dtype=float)
        norm = np.linalg.norm(c)
        if norm == 0.0:
            return False
        r = c / norm
        for q in self.basis:
            r = r - (q @ r) * q
        for q in self.basis:
            r = r - (q @ r) * q
        res = np.linalg.norm(r)
        if res > self.tolerance:
            self.basis.append(r / res)
            return True
        return False

    @property
    def rank(self) -> int:
        return len(self.basis)


class RankAccumulator:
    """Incrementally extended independent column set over a fixed design."""

    def __init__(self, design: Design):
        self.design = design
        self.accepted: list[MultiIndex] = []
        if design.is_exact:
            self._elim = FractionEliminator()
        else:
            self._elim = FloatEliminator(design.tolerance)

    def _column(self, alpha: MultiIndex):
        return [
            math.prod(_power(x, a) for x, a in zip(point, alpha))
            for point in self.design.points
        ]

    def try_extend(self, alpha) -> bool:
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.design.dimension:
            raise DimensionMismatch("exponent dimension mismatch")
        if self._elim.try_add(self._column(alpha)):
            self.accepted.append(alpha)
            return True
        return False

    @property
    def rank(self) -> int:
        return self._elim.rank


def extends_independently(acc: RankAccumulator, design: Design, alpha) -> bool:
    """True iff appending column design^alpha strictly increases acc's rank;
    updates acc on success."""
    if acc.design is not design and acc.design != design:
        raise ValueError("accumulator was built over a different design")
    return acc.try_extend(alpha)


# ---------------------------------------------------------------------------
# identifiability

def accepted_columns(design: Design, exponents: list[MultiIndex], target: int) -> list[int]:
    """Greedy independent-column scan over `exponents` in the given order.

    Returns indices of accepted columns, stopping after `target` acceptances.
    Exact designs use the certified modular scan, float designs the relative
    residual test.
    """
    if design.is_exact:
        return _exact_context(design).scan(exponents, target)
    pts = np.array(design.points, dtype=float)
    n, d = pts.shape
    maxdeg = max((max(a) for a in exponents), default=0)
    pows = np.ones((d, maxdeg + 1, n))
    for i in range(d):
        for k in range(1, maxdeg + 1):
            pows[i, k, :] = pows[i, k - 1, :] * pts[:, i]
    elim = FloatEliminator(design.tolerance)
    out = []
    for idx, alpha in enumerate(exponents):
        col = pows[0, alpha[0], :].copy()
        for i in range(1, d):
            col *= pows[i, alpha[i], :]
        if elim.try_add(col):
            out.append(idx)
            if len(out) == target:
                break
    return out


def is_identifiable(design: Design, L: ModelBasis) -> bool:
    """True iff the design/model evaluation matrix is invertible (|D| = |L|)."""
    if not isinstance(L, ModelBasis):
        L = ModelBasis(L)
    if L.dimension != design.dimension:
        raise DimensionMismatch("design/model dimension mismatch")
    if L.size != design.size:
        raise SizeMismatch(f"|L| = {L.size} but |D| = {design.size}")
    exps = sorted(L.exponents, key=canonical_key)
    return len(accepted_columns(design, exps, len(exps))) == len(exps)
