"""revq: reversible adder synthesis, simulation, and resource analysis."""

from .circuit import Circuit, CircuitError, Gate, WireRole, make_gate
from .sim import (
    Assignment,
    BatchAssignment,
    SimulationError,
    Verdict,
    apply_gate,
    check_equivalence,
    run,
    run_batch,
    truth_table,
)
from .ladders import (
    LadderLayout,
    ancilla_offset,
    generalized_ladder,
    hamming_weight,
    ladder1_linear,
    ladder1_log,
    ladder1_oracle,
    ladder1_values,
    ladder2_carrylog,
    ladder2_linear,
    ladder2_oracle,
    ladder2_polylog,
    ladder2_values,
)
from .adders import (
    AdderConfig,
    add_values,
    adder_oracle,
    build_adder,
    build_adder_optimized,
    build_adder_original,
    identity_fixtures,
    verify_adder,
)
from .analysis import (
    ConformanceReport,
    DependencyDag,
    Metrics,
    build_dag,
    class_depth,
    depth_by_class,
    formula_check,
    metrics,
)
from .formats import ParseError, export_qasm3, parse, serialize

__version__ = "0.1.0"

__all__ = [
    "AdderConfig",
    "Assignment",
    "BatchAssignment",
    "Circuit",
    "CircuitError",
    "ConformanceReport",
    "DependencyDag",
    "Gate",
    "LadderLayout",
    "Metrics",
    "ParseError",
    "SimulationError",
    "Verdict",
    "WireRole",
    "add_values",
    "adder_oracle",
    "ancilla_offset",
    "apply_gate",
    "build_adder",
    "build_adder_optimized",
    "build_adder_original",
    "build_dag",
    "check_equivalence",
    "class_depth",
    "depth_by_class",
    "export_qasm3",
    "formula_check",
    "generalized_ladder",
    "hamming_weight",
    "identity_fixtures",
    "ladder1_linear",
    "ladder1_log",
    "ladder1_oracle",
    "ladder1_values",
    "ladder2_carrylog",
    "ladder2_linear",
    "ladder2_oracle",
    "ladder2_polylog",
    "ladder2_values",
    "make_gate",
    "metrics",
    "parse",
    "run",
    "run_batch",
    "serialize",
    "truth_table",
    "verify_adder",
]
