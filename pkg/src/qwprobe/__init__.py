"""Quantum-walk phase probing: simulation and Fisher-information analysis.

A walker on a labeled graph carries a D-level coin; each step applies a
rotation coin C(theta) = exp(-i theta T_axis) and a conditional shift.
The package evolves states together with their exact theta derivative
and reports how much information about theta the walk accumulates,
both the quantum Fisher information and the part a plain position
measurement can extract.
"""
from .coinspace import (
    AXES,
    CoinOperator,
    basis_change,
    coin_derivative,
    coin_labels,
    coin_matrix,
    extremal_eigenstates,
    generator,
    make_coin,
    spin_generators,
)
from .errors import (
    ConfigError,
    DimensionMismatch,
    DuplicateEdge,
    HorizonExceeded,
    IndexOutOfRange,
    InvalidDimension,
    InvalidSigma,
    InvalidSize,
    LabelOutOfRange,
    NonFiniteParameter,
    NonInjectiveLabelMap,
    NonPositiveFisher,
    NotNormalized,
    ParseError,
    QwprobeError,
    TooLargeForDense,
    UnnormalizedProfile,
)
from .evolution import EvolvedPair, WalkConfig, evolve_with_derivative, ring_size, step, trajectory
from .experiments import (
    CHECK_TOL,
    CSV_HEADER,
    CheckOutcome,
    ExperimentConfig,
    ResultRow,
    build_config,
    format_rows,
    load_config,
    parse_config_text,
    read_csv,
    run_closed_form_check,
    run_enhanced_table,
    run_line_sweep,
    worker_count,
    write_csv,
)
from .metrology import (
    FisherReport,
    closed_form_enhanced,
    closed_form_line_z,
    cramer_rao,
    enhanced_max,
    max_qfi_line_xy,
    position_fi,
    qfi_pure,
    qudit_reference_qfi,
    sld_pure,
)
from .probes import (
    custom_probe,
    gaussian_probe,
    localized_coin_probe,
    localized_probe,
    optimal_coin_state,
    uniform_probe,
)
from .state import WalkerState, inner_product, position_distribution
from .topology import (
    Graph,
    ShiftOperator,
    enhanced_graph,
    line_graph,
    parse_graph,
    serialize_graph,
    shift_from_graph,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
