"""Per-slice qubit-to-core assignment via relaxed gain-driven exchanges.

The refinement engine runs Kernighan-Lin-style passes over *all* physical
slots of the machine: the circuit's virtual qubits plus uninformative filler
qubits padding each core to capacity. Every executed exchange is followed by
a validity check and the first valid assignment is returned (the relaxation).
A constructive fallback guarantees termination when passes stall.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .circuit import Circuit
from .slicing import (
    InteractionGraph,
    LookaheadParams,
    TimeSlice,
    build_lookahead_graph,
    slice_circuit,
)


@dataclass(frozen=True)
class Architecture:
    """Multi-core machine: all-to-all connected cores of uniform even capacity."""

    num_cores: int
    qubits_per_core: int

    def __post_init__(self) -> None:
        if self.num_cores < 1:
            raise ValueError("num_cores must be >= 1")
        if self.qubits_per_core < 2 or self.qubits_per_core % 2:
            raise ValueError("qubits_per_core must be even and >= 2")

    @property
    def total_qubits(self) -> int:
        return self.num_cores * self.qubits_per_core


@dataclass(frozen=True)
class Assignment:
    """Map from virtual qubit index to core index."""

    core_of: tuple[int, ...]

    def core_loads(self, num_cores: int) -> list[int]:
        loads = [0] * num_cores
        for c in self.core_of:
            loads[c] += 1
        return loads


@dataclass(frozen=True)
class RoeeParams:
    lookahead: LookaheadParams = field(default_factory=LookaheadParams)
    max_passes: int = 8

    def __post_init__(self) -> None:
        if self.max_passes < 1:
            raise ValueError("max_passes must be >= 1")


@dataclass(frozen=True)
class MappingTrace:
    assignments: tuple[Assignment, ...]
    per_slice_migrations: tuple[int, ...]
    per_slice_paired_swaps: tuple[int, ...]
    runtime_ms: float

    @property
    def total_migrations(self) -> int:
        return sum(self.per_slice_migrations)

    @property
    def total_paired_swaps(self) -> int:
        return sum(self.per_slice_paired_swaps)


def is_valid(a: Assignment, s: TimeSlice, arch: Architecture) -> bool:
    """True iff capacities hold and every slice pair is co-located."""
    if any(load > arch.qubits_per_core for load in a.core_loads(arch.num_cores)):
        return False
    return all(a.core_of[u] == a.core_of[v] for u, v in s.pairs)


def _check_capacity(num_qubits: int, arch: Architecture) -> None:
    if num_qubits > arch.total_qubits:
        raise ValueError(
            f"insufficient capacity: {num_qubits} qubits on {arch.num_cores}x"
            f"{arch.qubits_per_core} architecture"
        )


def _pad_to_machine(a: Assignment, arch: Architecture) -> np.ndarray:
    """Full slot occupancy: virtual qubits first, filler packed into free slots."""
    core = np.empty(arch.total_qubits, dtype=np.int64)
    nq = len(a.core_of)
    core[:nq] = a.core_of
    free = [arch.qubits_per_core] * arch.num_cores
    for c in a.core_of:
        free[c] -= 1
    slot = nq
    for c in range(arch.num_cores):
        for _ in range(free[c]):
            core[slot] = c
            slot += 1
    return core


def _weight_matrix(g: InteractionGraph, total: int) -> np.ndarray:
    w = np.zeros((total, total))
    for (u, v), sw in g.soft_edges.items():
        w[u, v] = w[v, u] = sw
    for u, v in g.hard_edges:
        w[u, v] = w[v, u] = g.hard_weight
    return w


def _exchange_pass(
    core: np.ndarray, w: np.ndarray, hard: list[tuple[int, int]]
) -> bool:
    """One pass of gain-maximizing exchanges; mutates ``core``.

    Each iteration refreshes the gain structure over all physical slots and
    then tests the stopping conditions: validity first (the relaxation —
    co-location of every hard pair, checked before any further exchange),
    then gain exhaustion. Stopping at non-positive gain avoids the zero-gain
    churn a lock-exhaustion pass would record as migrations. Returns True on
    validity, False when no unlocked positive-gain exchange remains.
    """
    total = len(core)
    num_cores = int(core.max()) + 1  # every core is padded, so all appear
    idx = np.arange(total)
    locked = np.zeros(total, dtype=bool)
    while True:
        strength = w @ (core[:, None] == np.arange(num_cores)[None, :])
        d = strength - strength[idx, core][:, None]
        a = d[:, core]  # a[u, v] = d[u, core_of(v)]
        gain = a + a.T - 2.0 * w
        if all(core[x] == core[y] for x, y in hard):
            return True
        blocked = (core[:, None] == core[None, :]) | locked[:, None] | locked[None, :]
        gain[blocked] = -np.inf
        flat = int(np.argmax(gain))
        u, v = divmod(flat, total)
        if not gain[u, v] > 0:
            return False
        core[u], core[v] = core[v], core[u]
        locked[u] = locked[v] = True


def roee_refine(
    prev: Assignment,
    g: InteractionGraph,
    s: TimeSlice,
    arch: Architecture,
    p: RoeeParams = RoeeParams(),
) -> Assignment:
    """Refine ``prev`` into an assignment valid for slice ``s``.

    Gain-driven pairwise exchanges over physical slots; returns at the first
    valid assignment (an already-valid input comes back unchanged). A pass
    that completes without newly co-locating any hard pair (or exhausting
    max_passes) falls back to direct construction. The exchange structures
    are initialized over the full machine on every call, so refinement cost
    scales with the architecture's physical qubit count.
    """
    nq = len(prev.core_of)
    _check_capacity(nq, arch)

    core = _pad_to_machine(prev, arch)
    # ignore the (physically impossible) case of hard edges beyond nq
    w = _weight_matrix(g, arch.total_qubits)
    hard = sorted(s.pairs)

    for _ in range(p.max_passes):
        sat_before = {pr for pr in hard if core[pr[0]] == core[pr[1]]}
        if _exchange_pass(core, w, hard):
            new = tuple(int(c) for c in core[:nq])
            return prev if new == prev.core_of else Assignment(new)
        sat_after = {pr for pr in hard if core[pr[0]] == core[pr[1]]}
        if not sat_after - sat_before:
            break
    return greedy_valid_fallback(prev, s, arch)


def initial_assignment(
    g: InteractionGraph, arch: Architecture, p: RoeeParams = RoeeParams()
) -> Assignment:
    """Sequential fill refined against slice 0 until valid."""
    _check_capacity(g.num_qubits, arch)
    seq = Assignment(tuple(i // arch.qubits_per_core for i in range(g.num_qubits)))
    slice0 = TimeSlice(0, frozenset(g.hard_edges))
    return roee_refine(seq, g, slice0, arch, p)


def greedy_valid_fallback(prev: Assignment, s: TimeSlice, arch: Architecture) -> Assignment:
    """Direct construction of a valid assignment near ``prev``.

    Pins already-co-located pairs, places the rest atomically (preferring a
    core that held an endpoint), then fills singles. Per-core free counts stay
    even while pairs are placed, which guarantees success.
    """
    nq = len(prev.core_of)
    _check_capacity(nq, arch)
    if 2 * len(s.pairs) > arch.total_qubits:
        raise ValueError("slice wider than machine")

    new: list[int | None] = [None] * nq
    free = [arch.qubits_per_core] * arch.num_cores
    loose: list[tuple[int, int]] = []
    for u, v in sorted(s.pairs):
        if prev.core_of[u] == prev.core_of[v]:
            c = prev.core_of[u]
            new[u] = new[v] = c
            free[c] -= 2
        else:
            loose.append((u, v))

    for u, v in loose:
        sticky = [c for c in sorted({prev.core_of[u], prev.core_of[v]}) if free[c] >= 2]
        if sticky:
            c = sticky[0]
        else:
            c = max(range(arch.num_cores), key=lambda i: (free[i], -i))
        new[u] = new[v] = c
        free[c] -= 2

    for q in range(nq):
        if new[q] is not None:
            continue
        c = prev.core_of[q]
        if free[c] < 1:
            c = next(i for i in range(arch.num_cores) if free[i] >= 1)
        new[q] = c
        free[c] -= 1
    return Assignment(tuple(new))  # type: ignore[arg-type]


def count_migrations(prev: Assignment, nxt: Assignment) -> tuple[int, int]:
    """(qubits that changed core, SWAPs after pairing reciprocal moves)."""
    if len(prev.core_of) != len(nxt.core_of):
        raise ValueError("assignments cover different qubit domains")
    moved: dict[tuple[int, int], int] = {}
    migrations = 0
    for a, b in zip(prev.core_of, nxt.core_of):
        if a != b:
            migrations += 1
            moved[(a, b)] = moved.get((a, b), 0) + 1
    paired = 0
    for (a, b), n_ab in moved.items():
        if a < b:
            paired += max(n_ab, moved.get((b, a), 0))
        elif (b, a) not in moved:
            paired += n_ab
    return migrations, paired


def map_circuit(
    c: Circuit, arch: Architecture, p: RoeeParams = RoeeParams()
) -> MappingTrace:
    """Slice the circuit and compute one valid assignment per slice.

    Runtime covers the assignment computation (slicing through the last
    refinement); circuit generation and parsing are excluded. CPU time is
    reported rather than wall time so measurements are stable under host
    load. The refinement step is evaluated for every slice — including
    already-valid ones, where it returns the previous assignment — so the
    cost per slice tracks the machine's physical qubit count.
    """
    _check_capacity(c.num_qubits, arch)
    start = time.process_time()
    slices = slice_circuit(c)
    if not slices:
        return MappingTrace((), (), (), (time.process_time() - start) * 1000.0)

    g0 = build_lookahead_graph(slices, 0, p.lookahead, num_qubits=c.num_qubits)
    assignments = [initial_assignment(g0, arch, p)]
    migrations = [0]
    paired = [0]
    for t in range(1, len(slices)):
        prev = assignments[-1]
        g = build_lookahead_graph(slices, t, p.lookahead, num_qubits=c.num_qubits)
        nxt = roee_refine(prev, g, slices[t], arch, p)
        m, sw = count_migrations(prev, nxt)
        assignments.append(nxt)
        migrations.append(m)
        paired.append(sw)
    runtime_ms = (time.process_time() - start) * 1000.0
    return MappingTrace(tuple(assignments), tuple(migrations), tuple(paired), runtime_ms)
