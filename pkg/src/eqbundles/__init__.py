"""Filtrations, Klyachko data and equivariant bundles in exact arithmetic."""

from .exact_linalg import (
    IntegerMatrix,
    RationalMatrix,
    Subspace,
    smith_normal_form,
    solve_linear,
    subspace_intersect,
    subspace_sum,
)
from .fan import Cone, Fan, Lattice, Ray, character_lift, dual_cone_contains, is_smooth_cone, primitive_generator
from .filtration import (
    FailureReport,
    Filtration,
    Grading,
    MultiFiltration,
    check_condition_K,
    filtration_level,
    tensor_filtration,
    verify_grading,
)
from .klyachko_bundle import (
    ChartData,
    TransitionData,
    build_charts,
    build_transitions,
    check_cocycle,
    check_regularity,
    global_sections,
)
from .rees import (
    GradedFreeModule,
    GradedModuleMap,
    fiber_at_one,
    fiber_at_zero,
    filtered_hom_dim,
    graded_hom_dim,
    rees,
    tensor_module,
)
from .spherical import (
    FilteredRep,
    LatticeInclusion,
    LieFiltrationData,
    category_hom,
    check_condition_C,
    is_neutralizable,
    pgl2_preset,
)

__version__ = "0.1.0"
