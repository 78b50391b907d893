"""Greedy minimal-aberration model selection.

Candidates are every exponent that could appear in a size-n staircase,
ordered by their weight under w; columns are accreted while they stay
linearly independent over the design.  The first n accepted exponents form
the minimal-aberration model, which is a staircase and a member of the
design's algebraic fan.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .identify import accepted_columns
from .model import (
    Design,
    DimensionMismatch,
    ModelBasis,
    MultiIndex,
    WeightVector,
    aberration,
    candidate_exponents,
    concave_aberration,  # noqa: F401  (re-exported: it applies to greedy output)
    tie_key,
)


class RankDeficient(ValueError):
    """The design cannot identify any size-n model (e.g. repeated points)."""

    def __init__(self, rank: int, needed: int):
        self.rank = rank
        self.needed = needed
        super().__init__(
            f"design identifies only {rank} independent columns, {needed} needed"
        )


def _ordering_weights(weights) -> tuple:
    """Scale-free integer (or float) ordering coefficients from a weight tuple."""
    ws = tuple(weights)
    if any(isinstance(v, float) for v in ws):
        return tuple(float(v) for v in ws)
    ws = tuple(Fraction(v) for v in ws)
    denom = math.lcm(*(v.denominator for v in ws))
    return tuple(int(v * denom) for v in ws)


def ordered_candidates(n: int, d: int, weights) -> list[MultiIndex]:
    """candidate_exponents(n, d) sorted ascending by w . alpha, ties by the
    reverse-colex perturbation order.  `weights` may contain zeros; the tie
    break acts as a strictly positive lexicographic perturbation."""
    coeff = _ordering_weights(weights)
    if len(coeff) != d:
        raise DimensionMismatch("weight/dimension mismatch")
    cands = candidate_exponents(n, d)
    cands.sort(key=lambda a: (sum(c * x for c, x in zip(coeff, a)), tie_key(a)))
    return cands


def weight_order(n: int, d: int, w: WeightVector):
    """The ordered candidate list with each exponent's weight omega = (w.alpha)/n."""
    if w.dimension != d:
        raise DimensionMismatch("weight/dimension mismatch")
    cands = ordered_candidates(n, d, w.w)
    return [(alpha, w.dot(alpha) / n) for alpha in cands]


def greedy_raw(design: Design, weights) -> ModelBasis:
    """Greedy selection under a raw weight tuple (zeros allowed).

    Internal entry point used by the fan sweeps; the public API enforces
    strictly positive weights.
    """
    n = design.size
    cands = ordered_candidates(n, design.dimension, weights)
    accepted = accepted_columns(design, cands, n)
    if len(accepted) < n:
        raise RankDeficient(len(accepted), n)
    return ModelBasis(cands[i] for i in accepted)


def greedy_model(design: Design, w: WeightVector) -> ModelBasis:
    """The minimal-aberration model of the design under w (w > 0)."""
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    if w.dimension != design.dimension:
        raise DimensionMismatch("weight/design dimension mismatch")
    return greedy_raw(design, w.w)


def minimal_aberration(design: Design, w: WeightVector):
    """(model, aberration value) for the greedy minimal-aberration model."""
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    L = greedy_model(design, w)
    return L, aberration(w, L)
