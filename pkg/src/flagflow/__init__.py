"""Exact invariant geometry of torus bundles over complex flag manifolds.

Root systems and flag manifolds, Picard lattices and their degree-zero
sublattices, and the explicit Chern-Ricci, t-Gauduchon and pluriclosed flow
solutions on principal torus bundles built from line bundles, together with
their Ricci-flat times, balanced/Calabi-Yau checks and collapsed limits.
All arithmetic is exact (``fractions.Fraction``).
"""

__version__ = "0.1.0"

from .errors import (
    DomainError,
    FiberDegreeError,
    FlagflowError,
    FlowIntervalError,
    InvalidTypeError,
    PicardHypothesisError,
    ShapeError,
)
from .root_system import (
    Root,
    RootSystem,
    SimpleType,
    Weight,
    build_root_system,
    cartan_matrix,
    fundamental_weight,
    pairing,
    simple_root_as_weight,
)
from .flag_manifold import FlagManifold, build_flag, delta_p, fano_index
from .invariant_geometry import (
    InvariantForm,
    InvariantMetric,
    KEData,
    ke_metric,
    lambda_of_anticanonical_curvature,
    lambda_trace,
    ricci_weight,
)
from .picard import (
    DegreeFunctional,
    LineBundle,
    anticanonical_root,
    degree_functional,
    dual,
    line_bundle,
    pic0_basis,
    tensor,
)
from .bundle_flow import (
    TorusBundleConfig,
    build_theorem_a,
    build_theorem_b,
    calabi_yau_integrality,
    flat_time,
    flow_state,
    gauduchon_ricci,
    is_balanced,
    pluriclosed_flow_report,
    t_flat_parameter,
    verify_flow_ode,
)
from .holonomy import HolonomyReport, gh_limit, holonomy_matrix, holonomy_rank
