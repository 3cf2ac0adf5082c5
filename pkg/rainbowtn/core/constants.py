# Runtime caps (overridable through RuntimeLimits / RAINBOWTN_* variables)
DEFAULT_MAX_WALKS = 2_000_000
DEFAULT_MAX_DIMENSION = 1_000_000  # dense vectors and Hamiltonians
DEFAULT_MAX_FRONTIER = 2_000_000  # (bond, prefix) pairs held by a contraction
DEFAULT_MAX_TILING_N = 4  # exhaustive tiling enumeration
DEFAULT_DENSE_EIGENSOLVER_DIM = 4096

ENV_PREFIX = "RAINBOWTN_"

# Numerical tolerances
KERNEL_THRESHOLD = 1e-9
FRUSTRATION_TOLERANCE = 1e-10
NORMALIZATION_TOLERANCE = 1e-12

DEFICIT_BRUTE_FORCE_MAX_LENGTH = 12

# Output formats
JSON_SCHEMA_VERSION = 1
SWEEP_CSV_COLUMNS = ("model", "n", "j", "t", "cut", "quantity", "value", "mode")
FLOAT_FORMAT = ".15g"

MAX_SWEEP_WORKERS = 8

SUBCOMMANDS = (
    "walks",
    "state",
    "contract",
    "verify",
    "hamiltonian",
    "entropy",
    "correlate",
    "truncate",
    "render",
)

# SVG styling
SVG_UNIT = 40
SVG_MARGIN = 20
SVG_STROKE = 3
COLOR_PALETTE = (
    "#d62728",  # red
    "#1f77b4",  # blue
    "#2ca02c",  # green
    "#9467bd",  # purple
    "#ff7f0e",  # orange
    "#8c564b",  # brown
)
FLAT_STROKE = "#555555"
GRID_STROKE = "#bbbbbb"
