"""Two-qubit entangled channels between uniformly accelerated observers.

A library for constructing two-qubit states in the Bloch (vector + dyadic)
parameterization, pushing them through the Unruh mode-mixing transformation,
reducing to any pair of Rindler wedges, and quantifying the resulting channels
(concurrence, overlap fidelity, teleportation usefulness).
"""

from .states import (
    BlochForm,
    Bell,
    Explicit,
    GeneralizedWerner,
    GenericPure,
    InvariantViolation,
    ValidationReport,
    Werner,
    bloch_to_density,
    density_to_bloch,
    is_self_transposed,
    make_state,
    random_density,
    validate_density,
)
from .channel import (
    R_MAX,
    AccelerationPair,
    RegionSelector,
    REGION_LABELS,
    channel,
    dilate,
    project_region,
    unruh_isometry,
)
from .closed_forms import (
    ClosedFormReport,
    closed_form_region,
    printed_fidelity_pure,
    printed_fidelity_self_transposed,
    printed_region_matrix,
)
from .measures import (
    MeasureReport,
    concurrence,
    concurrence_self_transposed,
    measure_report,
    overlap_fidelity,
    purity,
    separability_self_transposed,
    teleportation_criterion,
)
from .sweep import (
    AxisSpec,
    SweepConfig,
    SweepRow,
    acceleration_grid,
    discrepancy_report,
    emit_csv,
    figure_config,
    render_figure,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AccelerationPair",
    "AxisSpec",
    "Bell",
    "BlochForm",
    "ClosedFormReport",
    "Explicit",
    "GeneralizedWerner",
    "GenericPure",
    "InvariantViolation",
    "MeasureReport",
    "R_MAX",
    "REGION_LABELS",
    "RegionSelector",
    "SweepConfig",
    "SweepRow",
    "ValidationReport",
    "Werner",
    "acceleration_grid",
    "bloch_to_density",
    "channel",
    "closed_form_region",
    "concurrence",
    "concurrence_self_transposed",
    "density_to_bloch",
    "dilate",
    "discrepancy_report",
    "emit_csv",
    "figure_config",
    "is_self_transposed",
    "make_state",
    "measure_report",
    "overlap_fidelity",
    "printed_fidelity_pure",
    "printed_fidelity_self_transposed",
    "printed_region_matrix",
    "project_region",
    "purity",
    "random_density",
    "render_figure",
    "run_sweep",
    "separability_self_transposed",
    "teleportation_criterion",
    "unruh_isometry",
    "validate_density",
]
