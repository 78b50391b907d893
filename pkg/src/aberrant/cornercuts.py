"""Corner cut models: the design-free oracle, separability, enumeration,
the corner cut polytope, and genericity diagnostics.

A corner cut is a staircase separable from its complement by a hyperplane
with strictly positive normal.  For every positive weight the first n
candidates in weight order form one, and for generic designs these are
exactly the fan models.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .greedy import ordered_candidates
from .hull import BudgetExceeded, Polytope, enumerate_lower_vertices, interior_witness
from .identify import is_identifiable
from .model import (
    Design,
    ModelBasis,
    MultiIndex,
    WeightVector,
    candidate_exponents,
    exponent_sum,
    is_staircase,
)
from .parallel import map_maybe_parallel


@dataclass(frozen=True)
class CornerCut:
    model: ModelBasis
    witness: WeightVector


# enumeration guards; configuration, not physics
MAX_N_D2 = 200
MAX_N_D3 = 40
ORACLE_BUDGET_FACTOR = 10


def corner_cut(n: int, d: int, w: WeightVector) -> CornerCut:
    """The n cheapest exponents under w (ties by the perturbation order)."""
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    if w.dimension != d:
        raise ValueError("weight/dimension mismatch")
    cands = ordered_candidates(n, d, w.w)
    return CornerCut(ModelBasis(cands[:n]), w)


def _corner_prefix(n: int, d: int, weights) -> ModelBasis:
    return ModelBasis(ordered_candidates(n, d, weights)[:n])


def maximal_elements(L: ModelBasis) -> list[MultiIndex]:
    exps = set(L.exponents)
    out = []
    for a in exps:
        if not any(
            b != a and all(x >= y for x, y in zip(b, a)) for b in exps
        ):
            out.append(a)
    return sorted(out)


def outer_corners(L: ModelBasis) -> list[MultiIndex]:
    """Minimal elements of the complement of a staircase (finite set)."""
    exps = set(L.exponents)
    d = L.dimension
    candidates = set()
    for a in exps:
        for i in range(d):
            up = a[:i] + (a[i] + 1,) + a[i + 1:]
            if up not in exps:
                candidates.add(up)
    out = []
    for b in candidates:
        below_all_in = all(
            b[i] == 0 or (b[:i] + (b[i] - 1,) + b[i + 1:]) in exps for i in range(d)
        )
        if below_all_in:
            out.append(b)
    return sorted(out)


def separating_weight(L: ModelBasis):
    """A strictly positive weight separating L from its complement, or None.

    Solved as exact LP feasibility on w >= 1 with a unit gap between the
    maximal elements of L and the minimal elements of the complement.
    """
    if not is_staircase(L):
        raise ValueError("separability is defined for staircases")
    mx = maximal_elements(L)
    mn = outer_corners(L)
    d = L.dimension
    # u = w - 1 >= 0;  u.(b - a) >= 1 - sum(b - a)  for all pairs
    A, rhs = [], []
    for a in mx:
        for b in mn:
            diff = [b[i] - a[i] for i in range(d)]
            A.append([Fraction(-x) for x in diff])
            rhs.append(Fraction(sum(diff) - 1))
    if not A:
        return WeightVector([Fraction(1)] * d)
    point = lp.feasible_point(A, rhs)
    if point is None:
        return None
    return WeightVector([x + 1 for x in point])


def is_corner_cut(L: ModelBasis) -> bool:
    return separating_weight(L) is not None


def _enumerate_d2(n: int) -> list[CornerCut]:
    gamma = candidate_exponents(n, 2)
    slopes = set()
    for i, a in enumerate(gamma):
        for b in gamma[i + 1:]:
            dx = a[0] - b[0]
            dy = b[1] - a[1]
            if dx and dy and (dy > 0) == (dx > 0):
                slopes.add(Fraction(dy, dx))
    crit = sorted(slopes)
    samples = []
    if not crit:
        samples.append(Fraction(1))
    else:
        samples.append(crit[0] / 2)
        for s, t in zip(crit, crit[1:]):
            samples.append((s + t) / 2)
        samples.append(crit[-1] + 1)
    cuts = {}
    for s in samples:
        w = WeightVector([s.numerator, s.denominator])
        model = _corner_prefix(n, 2, w.w)
        cuts.setdefault(model.exponents, CornerCut(model, w))
    return sorted(cuts.values(), key=lambda c: exponent_sum(c.model))


def _enumerate_engine(n: int, d: int, max_oracle_calls=None) -> list[CornerCut]:
    def oracle(weights):
        model = _corner_prefix(n, d, weights)
        return exponent_sum(model), model

    if max_oracle_calls is None:
        max_oracle_calls = math.ceil(
            ORACLE_BUDGET_FACTOR * (n * math.log(max(n, 2))) ** (d - 1)
        ) + 8 * d
    bias = 4 * d * (n * (n - 1) // 2) + 1
    initial = [tuple(Fraction(1) for _ in range(d))]
    for i in range(d):
        w = [Fraction(1)] * d
        w[i] = Fraction(bias)
        initial.append(tuple(w))
    vertices, facets = enumerate_lower_vertices(
        oracle, d, initial, max_oracle_calls=max_oracle_calls
    )
    cuts = []
    for v, model in vertices.items():
        witness = WeightVector([Fraction(x) for x in interior_witness(v, facets)])
        cuts.append(CornerCut(model, witness))
    return sorted(cuts, key=lambda c: exponent_sum(c.model))


def enumerate_corner_cuts(n: int, d: int, max_oracle_calls=None) -> list[CornerCut]:
    """Every corner cut of size n in d dimensions, each with a witness."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if d == 1:
        return [CornerCut(ModelBasis((i,) for i in range(n)), WeightVector([1]))]
    if d == 2:
        if n > MAX_N_D2:
            raise BudgetExceeded(f"two-factor enumeration capped at n = {MAX_N_D2}")
        return _enumerate_d2(n)
    if d == 3 and n > MAX_N_D3:
        raise BudgetExceeded(f"three-factor enumeration capped at n = {MAX_N_D3}")
    return _enumerate_engine(n, d, max_oracle_calls)


def corner_cut_polytope(n: int, d: int) -> Polytope:
    cuts = enumerate_corner_cuts(n, d)
    return Polytope([exponent_sum(c.model) for c in cuts], d, recession=False)


def find_nonidentifiable_corner_cut(design: Design, threads=None):
    """The first corner cut the design fails to identify, or None."""
    cuts = enumerate_corner_cuts(design.size, design.dimension)
    flags = map_maybe_parallel(
        lambda c: is_identifiable(design, c.model), cuts, threads
    )
    for cut, ok in zip(cuts, flags):
        if not ok:
            return cut
    return None


def is_generic(design: Design, threads=None) -> bool:
    """True iff every corner cut of size |D| is identifiable by the design."""
    return find_nonidentifiable_corner_cut(design, threads) is None


def enumerate_staircases(n: int, d: int) -> list[ModelBasis]:
    """All order ideals of size n in d dimensions (guarded small sizes)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if d == 2 and n > 40:
        raise BudgetExceeded("two-factor staircase enumeration capped at n = 40")
    if d == 3 and n > 12:
        raise BudgetExceeded("three-factor staircase enumeration capped at n = 12")
    if d > 3 and n > 10:
        raise BudgetExceeded("staircase enumeration for d > 3 capped at n = 10")

    def stairs(nn: int, dd: int) -> list[frozenset]:
        if dd == 1:
            return [frozenset((i,) for i in range(nn))]
        out = []

        def sub_stairs_within(container: frozenset, size: int) -> list[frozenset]:
            return [S for S in stairs_all_sizes[size] if S <= container]

        stairs_all_sizes = {k: stairs(k, dd - 1) for k in range(1, nn + 1)}

        def rec(prev: frozenset | None, remaining: int, layer: int, acc: list):
            if remaining == 0:
                out.append(
                    frozenset(pt + (z,) for (pts, z) in acc for pt in pts)
                )
                return
            top = remaining if prev is None else min(remaining, len(prev))
            for size in range(top, 0, -1):
                if prev is None:
                    options = stairs_all_sizes[size]
                else:
                    options = sub_stairs_within(prev, size)
                for S in options:
                    rec(S, remaining - size, layer + 1, acc + [(S, layer)])

        rec(None, nn, 0, [])
        return out

    return sorted(
        (ModelBasis(s) for s in stairs(n, d)),
        key=lambda m: m.exponents,
    )


def is_maximal_fan(design: Design, threads=None) -> bool:
    """True iff every size-n staircase is identifiable by the design."""
    models = enumerate_staircases(design.size, design.dimension)
    flags = map_maybe_parallel(
        lambda m: is_identifiable(design, m), models, threads
    )
    return all(flags)
