"""Minimal-aberration polynomial models for experimental designs.

Given a finite point set, compute the model of least average weighted degree
it can identify, the full algebraic fan and state polytope, corner cut
models and their polytope, genericity diagnostics, and closed-form bounds
and approximations for the minimal aberration.
"""

from .analytics import (
    ApproxSurface,
    aberration_bounds,
    approx_min_aberration,
    approx_surface_params,
    cell_region_aberration,
    equivalent_simplex_aberration,
    interpolated_tip,
    simplex_constant,
)
from .cornercuts import (
    CornerCut,
    corner_cut,
    corner_cut_polytope,
    enumerate_corner_cuts,
    enumerate_staircases,
    find_nonidentifiable_corner_cut,
    is_corner_cut,
    is_generic,
    is_maximal_fan,
    separating_weight,
)
from .designs import (
    CensusResult,
    DefiningWord,
    LatinHypercubeSpec,
    central_composite,
    degree_histogram,
    f3_design,
    full_factorial,
    latin_hypercube,
    lh_genericity_census,
    load_design,
    min_total_degree,
    save_design,
    two_level_fraction,
)
from .fan import (
    AberrationCurve,
    FanEntry,
    algebraic_fan,
    min_aberration_curve,
    polyhedron_nested,
    state_polyhedron,
    state_polytope,
    vertex_for_weight,
)
from .greedy import (
    RankDeficient,
    greedy_model,
    minimal_aberration,
    weight_order,
)
from .hull import BudgetExceeded, Polytope
from .identify import (
    RankAccumulator,
    SizeMismatch,
    design_matrix,
    extends_independently,
    is_identifiable,
)
from .kernels import IMPL as kernel_impl
from .model import (
    Design,
    DimensionMismatch,
    EmptyModel,
    ModelBasis,
    MultiIndex,
    WeightVector,
    aberration,
    candidate_exponents,
    concave_aberration,
    exponent_sum,
    is_staircase,
    staircase_from_partition,
    tensor_model,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxSurface",
    "AberrationCurve",
    "BudgetExceeded",
    "CensusResult",
    "CornerCut",
    "DefiningWord",
    "Design",
    "DimensionMismatch",
    "EmptyModel",
    "FanEntry",
    "LatinHypercubeSpec",
    "ModelBasis",
    "MultiIndex",
    "Polytope",
    "RankAccumulator",
    "RankDeficient",
    "SizeMismatch",
    "WeightVector",
    "aberration",
    "aberration_bounds",
    "algebraic_fan",
    "approx_min_aberration",
    "approx_surface_params",
    "candidate_exponents",
    "cell_region_aberration",
    "central_composite",
    "concave_aberration",
    "corner_cut",
    "corner_cut_polytope",
    "degree_histogram",
    "design_matrix",
    "enumerate_corner_cuts",
    "enumerate_staircases",
    "equivalent_simplex_aberration",
    "exponent_sum",
    "extends_independently",
    "f3_design",
    "find_nonidentifiable_corner_cut",
    "full_factorial",
    "greedy_model",
    "interpolated_tip",
    "is_corner_cut",
    "is_generic",
    "is_identifiable",
    "is_maximal_fan",
    "is_staircase",
    "kernel_impl",
    "latin_hypercube",
    "lh_genericity_census",
    "load_design",
    "min_aberration_curve",
    "min_total_degree",
    "minimal_aberration",
    "polyhedron_nested",
    "save_design",
    "separating_weight",
    "simplex_constant",
    "staircase_from_partition",
    "state_polyhedron",
    "state_polytope",
    "tensor_model",
    "two_level_fraction",
    "vertex_for_weight",
    "weight_order",
]
