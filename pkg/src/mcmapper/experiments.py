"""Architectural scalability experiments over the benchmark generators.

Four experiment kinds:
  fixed    - 10 cores x 10 qubits per core regardless of circuit width
  variable - 10 cores, smallest even qubits-per-core that fits the width
  weak     - fixed total physical qubits split across varying core counts
  strong   - fixed qubits per core, core count grown to a total-qubit budget

Each sweep point maps the benchmark and records both communication metrics
plus the median assignment runtime over repeated runs.
"""

from __future__ import annotations

import csv
import logging
import statistics
from dataclasses import dataclass, field
from pathlib import Path

from .benchmarks import generate_width
from .circuit import decompose_to_2q
from .partitioner import Architecture, RoeeParams, map_circuit
from .slicing import slice_circuit

logger = logging.getLogger(__name__)

KINDS = ("fixed", "variable", "weak", "strong")

CSV_HEADER = [
    "benchmark",
    "width",
    "cores",
    "qubits_per_core",
    "total_qubits",
    "slices",
    "twoq_gates",
    "migrations",
    "paired_swaps",
    "runtime_ms",
    "params",
]


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    benchmark: str
    widths: tuple[int, ...] = ()
    repetitions: int = 3
    params: RoeeParams = field(default_factory=RoeeParams)
    weak_total: int = 100
    weak_cores: tuple[int, ...] = (2, 5, 10, 25, 50)
    strong_qpc: tuple[int, ...] = (4, 6, 8, 10)
    strong_total: int = 100
    seed: int = 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown experiment kind {self.kind!r}")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if any(w <= 0 for w in self.widths) or list(self.widths) != sorted(self.widths):
            raise ValueError("widths must be positive and ascending")


@dataclass(frozen=True)
class ExperimentRecord:
    benchmark: str
    width: int
    cores: int
    qubits_per_core: int
    total_qubits: int
    slices: int
    twoq_gates: int
    migrations: int
    paired_swaps: int
    runtime_ms: float
    params: str


def derive_architecture(kind: str, width: int, **knobs) -> Architecture:
    """Architecture for one sweep point, per experiment kind."""
    if kind == "fixed":
        arch = Architecture(10, 10)
        if width > arch.total_qubits:
            raise ValueError(f"width {width} exceeds fixed 10x10 capacity")
        return arch
    if kind == "variable":
        qpc = max(2, -(-width // 10))
        if qpc % 2:
            qpc += 1
        return Architecture(10, qpc)
    if kind == "weak":
        total, cores = knobs["total"], knobs["cores"]
        if total % cores:
            raise ValueError(f"{cores} cores do not divide {total} qubits")
        qpc = total // cores
        if qpc % 2:
            raise ValueError(f"qubits per core {qpc} is odd")
        return Architecture(cores, qpc)
    if kind == "strong":
        return Architecture(knobs["cores"], knobs["qpc"])
    raise ValueError(f"unknown experiment kind {kind!r}")


def _points(cfg: ExperimentConfig) -> list[tuple[int, Architecture]]:
    """(width, architecture) sweep points, in record order."""
    pts: list[tuple[int, Architecture]] = []
    if cfg.kind in ("fixed", "variable"):
        widths = cfg.widths or tuple(range(8, 101, 8))
        for w in widths:
            try:
                pts.append((w, derive_architecture(cfg.kind, w)))
            except ValueError as exc:
                logger.warning("skipping infeasible point width=%d: %s", w, exc)
    elif cfg.kind == "weak":
        widths = cfg.widths or (80,)
        for w in widths:
            for cores in cfg.weak_cores:
                pts.append((w, derive_architecture("weak", w, total=cfg.weak_total, cores=cores)))
    else:  # strong: width grows with the machine
        for qpc in cfg.strong_qpc:
            cores = 2
            while cores * qpc <= cfg.strong_total:
                pts.append((cores * qpc, derive_architecture("strong", 0, cores=cores, qpc=qpc)))
                cores += 1
    return pts


def _params_echo(cfg: ExperimentConfig) -> str:
    la = cfg.params.lookahead
    horizon = "inf" if la.horizon is None else la.horizon
    return (
        f"decay={la.decay_base};horizon={horizon};"
        f"max_passes={cfg.params.max_passes};reps={cfg.repetitions};seed={cfg.seed}"
    )


def run_experiment(cfg: ExperimentConfig) -> list[ExperimentRecord]:
    """Map the benchmark at every sweep point; infeasible points are skipped."""
    records: list[ExperimentRecord] = []
    echo = _params_echo(cfg)
    for width, arch in _points(cfg):
        try:
            circuit = decompose_to_2q(generate_width(cfg.benchmark, width, seed=cfg.seed))
            if circuit.num_qubits > arch.total_qubits:
                raise ValueError(f"width {width} exceeds {arch.total_qubits}-qubit machine")
        except ValueError as exc:
            logger.warning("skipping infeasible point width=%d: %s", width, exc)
            continue
        runtimes = []
        trace = None
        for _ in range(cfg.repetitions):
            trace = map_circuit(circuit, arch, cfg.params)
            runtimes.append(trace.runtime_ms)
        assert trace is not None
        records.append(
            ExperimentRecord(
                benchmark=cfg.benchmark,
                width=width,
                cores=arch.num_cores,
                qubits_per_core=arch.qubits_per_core,
                total_qubits=arch.total_qubits,
                slices=len(slice_circuit(circuit)),
                twoq_gates=circuit.two_qubit_count(),
                migrations=trace.total_migrations,
                paired_swaps=trace.total_paired_swaps,
                runtime_ms=statistics.median(runtimes),
                params=echo,
            )
        )
    records.sort(key=lambda r: (r.benchmark, r.width, r.cores))
    return records


def write_csv(records: list[ExperimentRecord], destination: str | Path) -> None:
    """Persist records with the fixed column set; stable row order."""
    with open(destination, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow(
                [
                    r.benchmark,
                    r.width,
                    r.cores,
                    r.qubits_per_core,
                    r.total_qubits,
                    r.slices,
                    r.twoq_gates,
                    r.migrations,
                    r.paired_swaps,
                    f"{r.runtime_ms:.3f}",
                    r.params,
                ]
            )
