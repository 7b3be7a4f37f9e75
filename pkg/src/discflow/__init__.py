"""Exact Poincare-disc analysis of a cubic planar family.

Symbolic layers (polynomials, compactification, blow-ups, classification,
oracles) are exact over the rationals; the numerical layer verifies orbit
periodicity and renders portraits.
"""

from .poly import DegreeTooLow, NotDivisible, Poly2, Rational, VectorField, rat
from .compactify import (
    ChartField,
    ChartId,
    InfinityReport,
    chart_field,
    infinite_equilibria,
    jacobian_at,
    rescale_infinity_line,
)
from .desing import (
    BlowupChain,
    BlowupStep,
    ChainTooDeep,
    CharacteristicPoly,
    NotEquilibrium,
    ZeroAlpha,
    characteristic_directions,
    choose_shear_beta,
    run_chain,
    shear,
    time_rescale,
    translate,
    twist,
    vertical_blowup,
)
from .classify import (
    EquilibriumClass,
    NotSemiHyperbolic,
    PointType,
    Spectrum,
    classify_from_jacobian,
    classify_point,
    refine_semihyperbolic,
    spectrum_of,
)
from .family import (
    CenterReport,
    FamilyParams,
    GlobalReport,
    HypothesesViolated,
    build_system,
    center_cases,
    from_complex,
    global_cases,
    normal_form,
)
from .flow import (
    GlobalVerdict,
    IntegratorConfig,
    NotConserved,
    OrbitVerdict,
    StepUnderflow,
    conserved_quantity,
    finite_equilibria,
    first_integral_check,
    global_center_verdict,
    integrate,
    orbit_verdict,
    return_map_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "BlowupChain",
    "BlowupStep",
    "CenterReport",
    "ChainTooDeep",
    "CharacteristicPoly",
    "ChartField",
    "ChartId",
    "DegreeTooLow",
    "EquilibriumClass",
    "FamilyParams",
    "GlobalReport",
    "GlobalVerdict",
    "HypothesesViolated",
    "InfinityReport",
    "IntegratorConfig",
    "NotConserved",
    "NotDivisible",
    "NotEquilibrium",
    "NotSemiHyperbolic",
    "OrbitVerdict",
    "PointType",
    "Poly2",
    "Rational",
    "Spectrum",
    "StepUnderflow",
    "VectorField",
    "ZeroAlpha",
    "build_system",
    "center_cases",
    "chart_field",
    "characteristic_directions",
    "choose_shear_beta",
    "classify_from_jacobian",
    "classify_point",
    "conserved_quantity",
    "finite_equilibria",
    "first_integral_check",
    "from_complex",
    "global_cases",
    "global_center_verdict",
    "infinite_equilibria",
    "integrate",
    "jacobian_at",
    "normal_form",
    "orbit_verdict",
    "rat",
    "refine_semihyperbolic",
    "rescale_infinity_line",
    "return_map_verdict",
    "run_chain",
    "shear",
    "spectrum_of",
    "time_rescale",
    "translate",
    "twist",
    "vertical_blowup",
]
