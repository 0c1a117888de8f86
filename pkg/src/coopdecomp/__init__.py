"""Exact cooperative game theory: games, classes, polyhedra, solutions and their decompositions."""
from .classes import (
    ClassReport,
    almost_positive_coeffs,
    classify,
    is_balanced,
    is_exact,
    is_supermodular,
    is_totally_balanced,
    is_totally_monotone,
    jordan_decompose_tm,
    supermodular0_cone,
    tm0_cone,
)
from .decomposition import (
    FactorizationRecord,
    cone_setup,
    core_ws,
    factor_cone,
    factor_linear,
    factor_nucleolus,
    factor_probabilistic,
    factor_selectope,
    factor_weber,
    game_vB,
    marginal_games,
    max_decompose,
    nestohedron_core,
    verify_core_intersection,
)
from .errors import CoopError, DomainError, InputError
from .game import (
    Game,
    MobiusCoeffs,
    coalition,
    coalitions,
    embed_additive,
    game_inf,
    game_sup,
    linear_combine,
    make_game,
    mobius,
    mobius_inverse,
    restrict_additive,
    subgame,
    unanimity,
    zero_game,
    zero_normalize,
)
from .lp import lp_solve
from .polyhedra import (
    HPolytope,
    PointedCone,
    SimplicialFan,
    VPolytope,
    conic_coordinates,
    extreme_rays,
    hull,
    intersect,
    minkowski_sum,
    polytope_equal,
    triangulate_cone,
    vertices,
)
from .solutions import (
    ProbabilisticWeights,
    core_h,
    excess_profile,
    imputations,
    marginal_vector,
    nucleolus,
    probabilistic_value,
    selectope,
    selector_value,
    shapley,
    weber,
)

__version__ = "0.1.0"

__all__ = [
    "ClassReport",
    "almost_positive_coeffs",
    "classify",
    "is_balanced",
    "is_exact",
    "is_supermodular",
    "is_totally_balanced",
    "is_totally_monotone",
    "jordan_decompose_tm",
    "supermodular0_cone",
    "tm0_cone",
    "FactorizationRecord",
    "cone_setup",
    "core_ws",
    "factor_cone",
    "factor_linear",
    "factor_nucleolus",
    "factor_probabilistic",
    "factor_selectope",
    "factor_weber",
    "game_vB",
    "marginal_games",
    "max_decompose",
    "nestohedron_core",
    "verify_core_intersection",
    "CoopError",
    "DomainError",
    "InputError",
    "Game",
    "MobiusCoeffs",
    "coalition",
    "coalitions",
    "embed_additive",
    "game_inf",
    "game_sup",
    "linear_combine",
    "make_game",
    "mobius",
    "mobius_inverse",
    "restrict_additive",
    "subgame",
    "unanimity",
    "zero_game",
    "zero_normalize",
    "lp_solve",
    "HPolytope",
    "PointedCone",
    "SimplicialFan",
    "VPolytope",
    "conic_coordinates",
    "extreme_rays",
    "hull",
    "intersect",
    "minkowski_sum",
    "polytope_equal",
    "triangulate_cone",
    "vertices",
    "ProbabilisticWeights",
    "core_h",
    "excess_profile",
    "imputations",
    "marginal_vector",
    "nucleolus",
    "probabilistic_value",
    "selectope",
    "selector_value",
    "shapley",
    "weber",
]
