"""Visibility and dimension experiments on planar fractal curves."""

from .fractals import (
    CurveApprox,
    CurveSpec,
    DiscreteMeasure,
    cantor_cross,
    circle,
    curve_from_json,
    curve_to_json,
    from_segments,
    generate,
    koch_generalized,
    polyline,
    quasicircle,
    read_curve,
    uniform_measure,
    write_curve,
)
from .harness import (
    BoundReport,
    ExperimentConfig,
    EstimatorPlan,
    ViewpointPlan,
    bound_value,
    exceptional_bound,
    run_sweep,
    verify_bound,
)
from .measurelab import (
    DimEstimate,
    box_dimension,
    energy_dimension,
    frostman_exponent,
    mass_bound_constants,
    riesz_energy,
    sector_mass_check,
)
from .visibility import (
    SegmentIndex,
    VisiblePiece,
    VisibleSet,
    build_index,
    find_segment_crossings,
    first_hit,
    sample_visible,
    visible_oracle,
    visible_set,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CurveApprox",
    "CurveSpec",
    "DimEstimate",
    "DiscreteMeasure",
    "EstimatorPlan",
    "ExperimentConfig",
    "SegmentIndex",
    "ViewpointPlan",
    "VisiblePiece",
    "VisibleSet",
    "bound_value",
    "box_dimension",
    "build_index",
    "cantor_cross",
    "circle",
    "curve_from_json",
    "curve_to_json",
    "energy_dimension",
    "exceptional_bound",
    "find_segment_crossings",
    "first_hit",
    "from_segments",
    "frostman_exponent",
    "generate",
    "koch_generalized",
    "mass_bound_constants",
    "polyline",
    "quasicircle",
    "read_curve",
    "riesz_energy",
    "run_sweep",
    "sample_visible",
    "sector_mass_check",
    "uniform_measure",
    "verify_bound",
    "visible_oracle",
    "visible_set",
    "write_curve",
]
