"""Nash blowups of affine toric varieties over arbitrary characteristic,
computed combinatorially from semigroup data."""

from .errors import (
    CharacteristicError,
    DimensionError,
    FormatError,
    MalformedInputError,
    NotFullDimensionalError,
    NotFullLatticeError,
    NotPointedError,
    NotSaturatedError,
    ToricError,
)
from .linalg import (
    det,
    det_mod,
    group_is_full_lattice,
    invariant_factors,
    kernel_basis,
    smith_normal_form,
    validate_characteristic,
)
from .lp import rational_feasible
from .cones import (
    Cone,
    HilbertBasis,
    dual_cone,
    hilbert_basis,
    interior_point,
    is_pointed,
    parallelepiped_points,
    polyhedron_vertices,
    triangulate,
)
from .semigroups import (
    AffineSemigroup,
    SurfaceProfile,
    boundary_generators_crosscheck,
    surface_profile,
)
from .blowup import (
    BlowupChart,
    MonomialIdealExponents,
    NewtonPolyhedron,
    blowup_charts,
    is_trivial_step,
    log_jacobian_ideal,
    newton_polyhedron,
)
from .resolve import (
    DEPTH_CAPPED,
    EXPANDED,
    SMOOTH_LEAF,
    TRIVIAL_STALL,
    CharacteristicComparison,
    ResolutionNode,
    ResolutionTree,
    SuiteSummary,
    compare_characteristics,
    resolve,
    surface_termination_suite,
)
from .io import ProblemSpec, parse_input, serialize

__version__ = "0.1.0"

__all__ = [
    "ToricError",
    "MalformedInputError",
    "DimensionError",
    "CharacteristicError",
    "NotPointedError",
    "NotFullDimensionalError",
    "NotFullLatticeError",
    "NotSaturatedError",
    "FormatError",
    "det",
    "det_mod",
    "smith_normal_form",
    "invariant_factors",
    "kernel_basis",
    "group_is_full_lattice",
    "validate_characteristic",
    "rational_feasible",
    "Cone",
    "HilbertBasis",
    "dual_cone",
    "is_pointed",
    "interior_point",
    "triangulate",
    "parallelepiped_points",
    "hilbert_basis",
    "polyhedron_vertices",
    "AffineSemigroup",
    "SurfaceProfile",
    "surface_profile",
    "boundary_generators_crosscheck",
    "MonomialIdealExponents",
    "log_jacobian_ideal",
    "NewtonPolyhedron",
    "newton_polyhedron",
    "BlowupChart",
    "blowup_charts",
    "is_trivial_step",
    "SMOOTH_LEAF",
    "EXPANDED",
    "TRIVIAL_STALL",
    "DEPTH_CAPPED",
    "ResolutionNode",
    "ResolutionTree",
    "resolve",
    "CharacteristicComparison",
    "compare_characteristics",
    "SuiteSummary",
    "surface_termination_suite",
    "ProblemSpec",
    "parse_input",
    "serialize",
    "__version__",
]
