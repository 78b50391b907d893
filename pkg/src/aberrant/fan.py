"""Algebraic fan and state polytope of a design.

The fan is the set of models reachable by the greedy selection as the weight
vector ranges over the open positive orthant; its exponent sums are the
vertices of the state polytope.  Two engines: an exact breakpoint sweep for
d = 2 and the oracle-driven hull enumeration for d >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .greedy import greedy_raw
from .hull import (
    BudgetExceeded,
    Polytope,
    enumerate_lower_vertices,
    interior_witness,
    point_in_polyhedron,
)
from .model import Design, ModelBasis, WeightVector, exponent_sum


@dataclass(frozen=True)
class FanEntry:
    """A fan model, its state-polytope vertex, and a weight selecting it."""

    model: ModelBasis
    vertex: tuple[int, ...]
    witness: WeightVector


@dataclass(frozen=True)
class AberrationCurve:
    """Piecewise-affine minimal aberration for d = 2, parameterized by w1.

    Segment k is active on [breakpoints[k], breakpoints[k+1]] and carries
    entries[k]; the curve value there is (w1*v1 + (1-w1)*v2)/n.
    """

    n: int
    breakpoints: tuple[Fraction, ...]
    entries: tuple[FanEntry, ...]

    def value(self, w1):
        t = Fraction(w1) if not isinstance(w1, float) else w1
        if not 0 <= t <= 1:
            raise ValueError("w1 must lie in [0, 1]")
        for k, entry in enumerate(self.entries):
            if t <= self.breakpoints[k + 1] or k == len(self.entries) - 1:
                v1, v2 = entry.vertex
                return (t * v1 + (1 - t) * v2) / self.n
        raise AssertionError("unreachable")

    @property
    def segment_count(self) -> int:
        return len(self.entries)


def _sweep_two_factor(design: Design, max_oracle_calls=None):
    """Exact parametric sweep over w = (t, 1-t) for two-factor designs.

    Returns fan vertices in curve order (t increasing) with exact breakpoint
    fractions.  Rank decisions follow the design's scalar mode; breakpoint
    arithmetic is exact either way because vertices are integer vectors.
    """
    calls = 0
    found: dict[tuple[int, int], ModelBasis] = {}

    def oracle(t: Fraction):
        nonlocal calls
        if max_oracle_calls is not None and calls >= max_oracle_calls:
            raise BudgetExceeded("sweep oracle budget exhausted", partial=dict(found))
        calls += 1
        model = greedy_raw(design, (t, 1 - t))
        v = exponent_sum(model)
        found.setdefault(v, model)
        return v

    lo = oracle(Fraction(0))
    hi = oracle(Fraction(1))

    def refine(t1: Fraction, v1, t2: Fraction, v2):
        if v1 == v2:
            return
        num = v2[1] - v1[1]
        den = (v2[1] - v1[1]) - (v2[0] - v1[0])
        tstar = Fraction(num, den)
        z = oracle(tstar)
        if tstar * z[0] + (1 - tstar) * z[1] < tstar * v1[0] + (1 - tstar) * v1[1]:
            refine(t1, v1, tstar, z)
            refine(tstar, z, t2, v2)

    refine(Fraction(0), lo, Fraction(1), hi)

    ordered = sorted(found, key=lambda v: v[1])  # increasing v2 = increasing w1 range
    breakpoints = [Fraction(0)]
    for u, v in zip(ordered, ordered[1:]):
        ts = Fraction(v[1] - u[1], (v[1] - u[1]) + (u[0] - v[0]))
        breakpoints.append(ts)
    breakpoints.append(Fraction(1))
    return ordered, breakpoints, found


def algebraic_fan(design: Design, max_oracle_calls=None) -> tuple[FanEntry, ...]:
    """All fan entries of the design, each with an interior witness weight.

    Exact designs give a certified complete fan; float designs are best
    effort at the design's rank tolerance.
    """
    d = design.dimension
    n = design.size
    if d == 1:
        model = greedy_raw(design, (Fraction(1),))
        return (
            FanEntry(model, exponent_sum(model), WeightVector([Fraction(1)])),
        )
    if d == 2:
        ordered, breakpoints, found = _sweep_two_factor(design, max_oracle_calls)
        entries = []
        for k, v in enumerate(ordered):
            mid = (breakpoints[k] + breakpoints[k + 1]) / 2
            entries.append(
                FanEntry(found[v], v, WeightVector([mid, 1 - mid]))
            )
        return tuple(sorted(entries, key=lambda e: e.vertex))

    def oracle(weights):
        model = greedy_raw(design, weights)
        return exponent_sum(model), model

    bias = 4 * d * (n * (n - 1) // 2) + 1
    initial = [tuple(Fraction(1) for _ in range(d))]
    for i in range(d):
        w = [Fraction(1)] * d
        w[i] = Fraction(bias)
        initial.append(tuple(w))
    vertices, facets = enumerate_lower_vertices(
        oracle, d, initial, max_oracle_calls=max_oracle_calls
    )
    entries = []
    for v, model in vertices.items():
        witness = WeightVector([Fraction(x) for x in interior_witness(v, facets)])
        entries.append(FanEntry(model, v, witness))
    return tuple(sorted(entries, key=lambda e: e.vertex))


def state_polytope(design: Design, max_oracle_calls=None) -> Polytope:
    fan = algebraic_fan(design, max_oracle_calls)
    return Polytope([e.vertex for e in fan], design.dimension, recession=False)


def state_polyhedron(design: Design, max_oracle_calls=None) -> Polytope:
    fan = algebraic_fan(design, max_oracle_calls)
    return Polytope([e.vertex for e in fan], design.dimension, recession=True)


def polyhedron_nested(inner: Polytope, outer: Polytope) -> bool:
    """True iff inner + orthant lies inside outer + orthant (exact test)."""
    if inner.dimension != outer.dimension:
        raise ValueError("dimension mismatch")
    if not (inner.recession and outer.recession):
        raise ValueError("nesting is defined for state polyhedra (recession flag set)")
    return all(point_in_polyhedron(v, outer.vertices) for v in inner.vertices)


def min_aberration_curve(design: Design, max_oracle_calls=None) -> AberrationCurve:
    """Exact piecewise-affine lower envelope of the fan aberrations (d = 2)."""
    if design.dimension != 2:
        raise ValueError("aberration curves are two-factor only")
    ordered, breakpoints, found = _sweep_two_factor(design, max_oracle_calls)
    entries = []
    for k, v in enumerate(ordered):
        mid = (breakpoints[k] + breakpoints[k + 1]) / 2
        entries.append(FanEntry(found[v], v, WeightVector([mid, 1 - mid])))
    return AberrationCurve(design.size, tuple(breakpoints), tuple(entries))


def vertex_for_weight(fan, w: WeightVector, all_ties: bool = False):
    """The fan entry minimizing w . vertex; with all_ties=True every
    minimizer is returned (boundary weights give several)."""
    entries = list(fan)
    if not entries:
        raise ValueError("empty fan")
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    values = [w.dot(e.vertex) for e in entries]
    best = min(values)
    winners = [e for e, val in zip(entries, values) if val == best]
    if all_ties:
        return winners
    return winners[0]
