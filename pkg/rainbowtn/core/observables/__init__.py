from .color import (
    ColorOperatorSpec,
    correlation_G,
    correlation_records,
    expectation_C,
    exponent_fit,
    log_matched_probability,
    matched_probability,
)
from .deficit import (
    centered_site,
    deficit_envelope,
    deficit_law,
    deficit_law_check,
    max_area_deficit,
)
from .sweeps import entropy_sweep, sweep_grid, write_sweep_csv
from .truncation import truncated_state, truncation_fidelity, window_areas

__all__ = [
    "ColorOperatorSpec",
    "expectation_C",
    "correlation_G",
    "matched_probability",
    "log_matched_probability",
    "correlation_records",
    "exponent_fit",
    "max_area_deficit",
    "deficit_envelope",
    "centered_site",
    "deficit_law",
    "deficit_law_check",
    "truncated_state",
    "truncation_fidelity",
    "window_areas",
    "entropy_sweep",
    "sweep_grid",
    "write_sweep_csv",
]
