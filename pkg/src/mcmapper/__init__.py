"""Time-sliced qubit-to-core mapping for multi-core quantum architectures."""

from .benchmarks import gen_cuccaro, gen_draper_adder, gen_qft, gen_random
from .circuit import Circuit, Gate, GateKind, decompose_to_2q, validate_circuit
from .oracle import OracleResult, optimal_migrations
from .partitioner import (
    Architecture,
    Assignment,
    MappingTrace,
    RoeeParams,
    count_migrations,
    greedy_valid_fallback,
    initial_assignment,
    is_valid,
    map_circuit,
    roee_refine,
)
from .qasm import QasmError, emit_qasm, parse_qasm
from .slicing import (
    InteractionGraph,
    LookaheadParams,
    TimeSlice,
    build_lookahead_graph,
    slice_circuit,
)

__all__ = [
    "Architecture",
    "Assignment",
    "Circuit",
    "Gate",
    "GateKind",
    "InteractionGraph",
    "LookaheadParams",
    "MappingTrace",
    "OracleResult",
    "QasmError",
    "RoeeParams",
    "TimeSlice",
    "build_lookahead_graph",
    "count_migrations",
    "decompose_to_2q",
    "emit_qasm",
    "gen_cuccaro",
    "gen_draper_adder",
    "gen_qft",
    "gen_random",
    "greedy_valid_fallback",
    "initial_assignment",
    "is_valid",
    "map_circuit",
    "optimal_migrations",
    "parse_qasm",
    "roee_refine",
    "slice_circuit",
    "validate_circuit",
]
