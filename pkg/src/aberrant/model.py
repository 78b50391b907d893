"""Core types: multi-indices, staircase model bases, designs, weights, aberration.

A monomial model is identified with its finite set of exponent vectors
(multi-indices).  Aberration of a model under a normalized positive weight
vector is the average weighted degree of its terms.  All types here are
immutable values; exact designs carry Fraction coordinates, float designs
carry a rank tolerance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

MultiIndex = tuple[int, ...]

DEFAULT_FLOAT_TOLERANCE = 1e-9


class DimensionMismatch(ValueError):
    pass


class EmptyModel(ValueError):
    pass


def canonical_key(alpha: MultiIndex):
    """Sort key of the canonical exponent order: total degree, then
    reverse-colex (lexicographic on the reversed tuple)."""
    return (sum(alpha), tuple(reversed(alpha)))


def tie_key(alpha: MultiIndex):
    """Tie-break key used whenever two exponents have equal weight.

    Reverse-colex alone.  Breaking weight ties this way is equivalent to
    perturbing the weight vector by +(eps^d, ..., eps^2, eps), which stays in
    the open positive orthant, so every tie-broken selection is realized by a
    strictly positive weight.
    """
    return tuple(reversed(alpha))


def validate_multi_index(alpha: Sequence[int], d: int | None = None) -> MultiIndex:
    t = tuple(int(a) for a in alpha)
    if any(a < 0 for a in t):
        raise ValueError(f"negative exponent in {t}")
    if d is not None and len(t) != d:
        raise DimensionMismatch(f"expected dimension {d}, got {len(t)}")
    return t


@dataclass(frozen=True)
class ModelBasis:
    """A finite set of distinct exponent vectors, all of one dimension.

    Exponents are stored sorted in the canonical order so equal sets compare
    and hash equal and serialize identically.
    """

    exponents: tuple[MultiIndex, ...]

    def __init__(self, exponents: Iterable[Sequence[int]]):
        exps = [validate_multi_index(a) for a in exponents]
        if not exps:
            raise EmptyModel("a model basis needs at least one exponent")
        d = len(exps[0])
        for a in exps:
            if len(a) != d:
                raise DimensionMismatch("mixed exponent dimensions")
        uniq = sorted(set(exps), key=canonical_key)
        if len(uniq) != len(exps):
            raise ValueError("duplicate exponents in model basis")
        object.__setattr__(self, "exponents", tuple(uniq))

    @property
    def dimension(self) -> int:
        return len(self.exponents[0])

    @property
    def size(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __contains__(self, alpha) -> bool:
        return tuple(alpha) in set(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)


Scalar = Fraction | float


def parse_exact(value) -> Fraction:
    """Parse an exact coordinate: int, Fraction, or a 'p/q' string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(f"float {value!r} not allowed in exact mode; use 'p/q' or float mode")
    raise TypeError(f"cannot read exact scalar from {value!r}")


@dataclass(frozen=True)
class Design:
    """A finite list of points in R^d.

    scalar_mode 'exact' keeps Fraction coordinates and all rank decisions are
    exact; 'float' keeps float64 coordinates and rank decisions use the
    relative tolerance stored on the design.
    """

    points: tuple[tuple[Scalar, ...], ...]
    scalar_mode: str = "exact"
    tolerance: float = DEFAULT_FLOAT_TOLERANCE

    def __init__(self, points, scalar_mode="exact", tolerance=DEFAULT_FLOAT_TOLERANCE):
        pts = [tuple(p) for p in points]
        if not pts:
            raise ValueError("a design needs at least one point")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise DimensionMismatch("mixed point dimensions")
        if scalar_mode == "exact":
            pts = [tuple(parse_exact(c) for c in p) for p in pts]
        elif scalar_mode == "float":
            pts = [tuple(float(c) for c in p) for p in pts]
        else:
            raise ValueError(f"unknown scalar mode {scalar_mode!r}")
        if tolerance <= 0:
            raise ValueError("tolerance must be positive")
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "scalar_mode", scalar_mode)
        object.__setattr__(self, "tolerance", float(tolerance))

    @property
    def dimension(self) -> int:
        return len(self.points[0])

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def is_exact(self) -> bool:
        return self.scalar_mode == "exact"

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class WeightVector:
    """Strictly positive weights normalized to sum 1.

    Exact inputs (ints, Fractions, 'p/q' strings) keep Fraction components;
    any float input makes the whole vector float.
    """

    w: tuple[Scalar, ...]

    def __init__(self, values: Sequence):
        vals = list(values)
        if not vals:
            raise ValueError("empty weight vector")
        if any(isinstance(v, float) for v in vals):
            fv = [float(v) for v in vals]
            if any(v <= 0 for v in fv):
                raise ValueError("weights must be strictly positive")
            total = sum(fv)
            object.__setattr__(self, "w", tuple(v / total for v in fv))
        else:
            qv = [parse_exact(v) for v in vals]
            if any(v <= 0 for v in qv):
                raise ValueError("weights must be strictly positive")
            total = sum(qv)
            object.__setattr__(self, "w", tuple(v / total for v in qv))

    @property
    def dimension(self) -> int:
        return len(self.w)

    @property
    def is_exact(self) -> bool:
        return not any(isinstance(v, float) for v in self.w)

    def dot(self, alpha: Sequence) -> Scalar:
        if len(alpha) != len(self.w):
            raise DimensionMismatch("weight/exponent dimension mismatch")
        return sum(wi * ai for wi, ai in zip(self.w, alpha))

    def __iter__(self):
        return iter(self.w)


def candidate_exponents(n: int, d: int) -> list[MultiIndex]:
    """All exponents alpha >= 0 with prod(alpha_i + 1) <= n, canonically sorted.

    Every staircase of size n is a subset of this set, so it is the search
    space for all size-n model selection.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    out: list[MultiIndex] = []

    def rec(prefix: list[int], budget: int, k: int):
        if k == d:
            out.append(tuple(prefix))
            return
        a = 0
        while (a + 1) <= budget:
            prefix.append(a)
            rec(prefix, budget // (a + 1), k + 1)
            prefix.pop()
            a += 1

    rec([], n, 0)
    out.sort(key=canonical_key)
    return out


def is_staircase(L: ModelBasis | Iterable[Sequence[int]]) -> bool:
    """True iff the exponent set is closed under componentwise domination."""
    exps = set(tuple(a) for a in L)
    if not exps:
        return True
    for alpha in exps:
        for i, ai in enumerate(alpha):
            if ai > 0:
                below = alpha[:i] + (ai - 1,) + alpha[i + 1:]
                if below not in exps:
                    return False
    return True


def exponent_sum(L: ModelBasis) -> MultiIndex:
    """Componentwise sum of the exponents of L."""
    if isinstance(L, ModelBasis):
        exps = L.exponents
    else:
        exps = [tuple(a) for a in L]
        if not exps:
            raise EmptyModel("exponent_sum of an empty model")
    d = len(exps[0])
    return tuple(sum(a[i] for a in exps) for i in range(d))


def aberration(w: WeightVector, L: ModelBasis) -> Scalar:
    """Average weighted degree (w . exponent_sum(L)) / |L|.

    Exact when both the weights and the model are exact objects (they always
    are; exponents are integers), float when the weight vector is float.
    """
    if not isinstance(L, ModelBasis):
        L = ModelBasis(L)
    if w.dimension != L.dimension:
        raise DimensionMismatch("weight/model dimension mismatch")
    s = exponent_sum(L)
    return w.dot(s) / L.size


def concave_aberration(f: Callable, L: ModelBasis) -> Scalar:
    """Evaluate a caller-supplied concave function at exponent_sum(L).

    Concavity is the caller's obligation; it is not checked here.
    """
    if not isinstance(L, ModelBasis):
        L = ModelBasis(L)
    return f(*exponent_sum(L))


def staircase_from_partition(parts: Sequence[int]) -> ModelBasis:
    """Bidimensional staircase from a weakly decreasing row-length sequence."""
    rows = [int(p) for p in parts if int(p) > 0]
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise ValueError("row lengths must be weakly decreasing")
    return ModelBasis([(i, j) for j, r in enumerate(rows) for i in range(r)])


def tensor_model(degrees: Sequence[int]) -> ModelBasis:
    """Full tensor-product model with per-coordinate maximum degrees."""
    ranges = [range(int(k) + 1) for k in degrees]
    return ModelBasis(itertools.product(*ranges))
