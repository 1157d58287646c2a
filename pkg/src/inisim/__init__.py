"""inisim: link-level simulator of inter-numerology interference (INI).

Two CP-OFDM numerologies with SCS ratio 2**k share one composite frame;
the package measures the per-subcarrier interference each leaks into the
other as a function of guard band, scaling factor and CP overhead, by
Monte Carlo and by an exact linear coupling oracle.
"""

from .analysis import (
    FLOOR_DB,
    CouplingMatrix,
    IniReport,
    coupling_matrix,
    expected_ini,
    min_guard_search,
    run_monte_carlo,
    summarize,
)
from .errors import (
    InisimError,
    InvalidGuard,
    InvalidScenario,
    LengthMismatch,
    ScenarioMismatch,
    ShapeMismatch,
    TargetUnreachable,
    UnknownNumerology,
)
from .numerology import (
    CATALOG,
    NORMAL_CP_RATIO,
    FreqRange,
    MixedScenario,
    Numerology,
    NumerologyEntry,
    build_scenario,
    catalog_lookup,
    guard_split,
)
from .rxchain import error_vector, recv_num1, recv_num2
from .txchain import (
    add_cp,
    allocate_bins,
    build_frame,
    forward_transform,
    inverse_transform,
    map_bpsk,
    num1_branch,
    num2_branch,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "FLOOR_DB",
    "NORMAL_CP_RATIO",
    "CouplingMatrix",
    "FreqRange",
    "IniReport",
    "InisimError",
    "InvalidGuard",
    "InvalidScenario",
    "LengthMismatch",
    "MixedScenario",
    "Numerology",
    "NumerologyEntry",
    "ScenarioMismatch",
    "ShapeMismatch",
    "TargetUnreachable",
    "UnknownNumerology",
    "add_cp",
    "allocate_bins",
    "build_frame",
    "build_scenario",
    "catalog_lookup",
    "coupling_matrix",
    "error_vector",
    "expected_ini",
    "forward_transform",
    "guard_split",
    "inverse_transform",
    "map_bpsk",
    "min_guard_search",
    "num1_branch",
    "num2_branch",
    "recv_num1",
    "recv_num2",
    "run_monte_carlo",
    "summarize",
]
