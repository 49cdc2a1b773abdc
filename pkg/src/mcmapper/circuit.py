"""Circuit intermediate representation.

A circuit is an ordered list of gates over 0-based virtual qubit indices.
Gate names are opaque labels except for arity: 1-qubit gates never constrain
the mapper, 2-qubit gates define interactions, and the only supported
3-qubit gate is the Toffoli (which must be decomposed before mapping).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum


class GateKind(Enum):
    ONE_QUBIT = 1
    TWO_QUBIT = 2
    TOFFOLI = 3


@dataclass(frozen=True)
class Gate:
    """A single gate application: opaque name, operand qubits, float params."""

    name: str
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()

    @property
    def kind(self) -> GateKind:
        return GateKind(len(self.qubits))

    def __post_init__(self) -> None:
        if len(self.qubits) not in (1, 2, 3):
            raise ValueError(f"unsupported operand count {len(self.qubits)}")
        if len(self.qubits) == 3 and self.name != "ccx":
            raise ValueError(f"3-qubit gate must be ccx, got {self.name!r}")


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list over ``num_qubits`` virtual qubits."""

    num_qubits: int
    gates: tuple[Gate, ...]
    name: str = "circuit"

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be >= 1")
        object.__setattr__(self, "gates", tuple(self.gates))

    def two_qubit_count(self) -> int:
        return sum(1 for g in self.gates if g.kind is GateKind.TWO_QUBIT)

    def count(self, kind: GateKind) -> int:
        return sum(1 for g in self.gates if g.kind is kind)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...] = ()


def validate_circuit(c: Circuit) -> ValidationReport:
    """Check all structural invariants; violations name the offending gate."""
    violations: list[str] = []
    for i, g in enumerate(c.gates):
        if len(set(g.qubits)) != len(g.qubits):
            violations.append(f"duplicate operand at gate {i}")
        for q in g.qubits:
            if not 0 <= q < c.num_qubits:
                violations.append(f"operand {q} out of range at gate {i}")
        for p in g.params:
            if not math.isfinite(p):
                violations.append(f"non-finite parameter at gate {i}")
    return ValidationReport(ok=not violations, violations=tuple(violations))


def _toffoli_network(a: int, b: int, c: int) -> list[Gate]:
    """Canonical 6-CNOT / 9 one-qubit-gate Toffoli network on (a, b, c)."""
    return [
        Gate("h", (c,)),
        Gate("cx", (b, c)),
        Gate("tdg", (c,)),
        Gate("cx", (a, c)),
        Gate("t", (c,)),
        Gate("cx", (b, c)),
        Gate("tdg", (c,)),
        Gate("cx", (a, c)),
        Gate("t", (b,)),
        Gate("t", (c,)),
        Gate("h", (c,)),
        Gate("cx", (a, b)),
        Gate("t", (a,)),
        Gate("tdg", (b,)),
        Gate("cx", (a, b)),
    ]


def decompose_to_2q(c: Circuit) -> Circuit:
    """Replace every Toffoli with its canonical two-qubit network.

    One- and two-qubit gates pass through unchanged, in order.
    Idempotent on its own output.
    """
    out: list[Gate] = []
    for g in c.gates:
        if g.kind is GateKind.TOFFOLI:
            out.extend(_toffoli_network(*g.qubits))
        else:
            out.append(g)
    return Circuit(c.num_qubits, tuple(out), c.name)
