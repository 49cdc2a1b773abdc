"""Time slicing and lookahead-weighted interaction graphs.

A time slice is a set of qubit-disjoint two-qubit interactions that can run
in parallel. One-qubit gates never constrain the core assignment (all-to-all
intra-core connectivity) and are transparent to slicing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .circuit import Circuit, GateKind

Pair = tuple[int, int]  # always stored as (min, max)

# decay_base**-dt below this contributes nothing at double precision
_WEIGHT_EPS = 1e-12


@dataclass(frozen=True)
class TimeSlice:
    index: int
    pairs: frozenset[Pair]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for u, v in self.pairs:
            if u in seen or v in seen:
                raise ValueError(f"qubit reused within slice {self.index}")
            seen.update((u, v))


@dataclass(frozen=True)
class LookaheadParams:
    """Exponential decay of future-slice edge weights."""

    decay_base: float = 2.0
    horizon: int | None = None  # None = unbounded

    def __post_init__(self) -> None:
        if self.decay_base <= 1:
            raise ValueError("decay_base must be > 1")
        if self.horizon is not None and self.horizon < 0:
            raise ValueError("horizon must be >= 0")


@dataclass(frozen=True)
class InteractionGraph:
    """Current-slice hard edges plus decayed lookahead soft edges.

    hard_weight dominates the total soft weight so that any exchange
    co-locating a hard pair has positive gain.
    """

    num_qubits: int
    hard_edges: frozenset[Pair]
    soft_edges: dict[Pair, float] = field(default_factory=dict)
    hard_weight: float = 1.0


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def slice_circuit(c: Circuit) -> list[TimeSlice]:
    """Greedy ASAP layering of the circuit's two-qubit gates.

    One-qubit gates are dropped and advance no clock; Toffolis must be
    decomposed first.
    """
    next_free: dict[int, int] = {}
    layers: list[set[Pair]] = []
    for i, g in enumerate(c.gates):
        if g.kind is GateKind.TOFFOLI:
            raise ValueError(f"decompose first: toffoli at gate {i}")
        if g.kind is not GateKind.TWO_QUBIT:
            continue
        u, v = g.qubits
        t = max(next_free.get(u, 0), next_free.get(v, 0))
        while len(layers) <= t:
            layers.append(set())
        layers[t].add(_pair(u, v))
        next_free[u] = next_free[v] = t + 1
    return [TimeSlice(i, frozenset(p)) for i, p in enumerate(layers)]


def build_lookahead_graph(
    slices: list[TimeSlice],
    t: int,
    p: LookaheadParams = LookaheadParams(),
    num_qubits: int | None = None,
) -> InteractionGraph:
    """Interaction graph for slice t: hard edges now, decayed soft edges ahead."""
    if not 0 <= t < len(slices):
        raise IndexError(f"slice index {t} out of range [0, {len(slices)})")
    if num_qubits is None:
        num_qubits = 1 + max((q for s in slices for pr in s.pairs for q in pr), default=0)
    hard = frozenset(slices[t].pairs)

    acc: dict[Pair, float] = {}
    max_dt = int(math.ceil(-math.log(_WEIGHT_EPS) / math.log(p.decay_base)))
    if p.horizon is not None:
        max_dt = min(max_dt, p.horizon)
    max_dt = min(max_dt, len(slices) - 1 - t)
    for dt in range(1, max_dt + 1):
        w = p.decay_base ** -dt
        for pr in slices[t + dt].pairs:
            acc[pr] = acc.get(pr, 0.0) + w
    soft = dict(sorted(acc.items()))

    hard_weight = 1.0 + sum(soft.values())
    return InteractionGraph(num_qubits, hard, soft, hard_weight)
