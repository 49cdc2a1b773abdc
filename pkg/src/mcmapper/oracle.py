"""Exhaustive reference for optimal migration counts on tiny instances.

Enumerates every capacity- and slice-valid assignment per slice and runs a
shortest-path dynamic program across slices; edge cost is the migration
count (or paired-SWAP count) between consecutive assignments. Bounded to
desk-size instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .partitioner import Architecture, Assignment, count_migrations
from .slicing import TimeSlice

MAX_QUBITS = 8
MAX_SLICES = 8
MAX_CORES = 3


@dataclass(frozen=True)
class OracleResult:
    min_total_migrations: int
    witness: tuple[Assignment, ...]


def _valid_states(num_qubits: int, s: TimeSlice, arch: Architecture) -> np.ndarray:
    """All assignments (rows) valid for slice s, as core-index vectors."""
    pairs = sorted(s.pairs)
    in_pair = {q for pr in pairs for q in pr}
    singles = [q for q in range(num_qubits) if q not in in_pair]
    blocks = pairs + [(q,) for q in singles]  # each block shares one core

    states = []
    cap = arch.qubits_per_core
    for combo in product(range(arch.num_cores), repeat=len(blocks)):
        loads = [0] * arch.num_cores
        ok = True
        for block, c in zip(blocks, combo):
            loads[c] += len(block)
            if loads[c] > cap:
                ok = False
                break
        if not ok:
            continue
        state = [0] * num_qubits
        for block, c in zip(blocks, combo):
            for q in block:
                state[q] = c
        states.append(state)
    return np.array(states, dtype=np.int8).reshape(len(states), num_qubits)


def optimal_migrations(
    slices: list[TimeSlice],
    arch: Architecture,
    initial: Assignment | str = "free",
    cost: str = "migrations",
) -> OracleResult:
    """Exact minimum total migrations over all valid assignment sequences.

    ``initial="free"`` makes the first slice's assignment free of charge;
    otherwise migrations from ``initial`` into slice 0 are counted.
    ``cost`` selects the edge metric: "migrations" or "paired_swaps".
    """
    if cost not in ("migrations", "paired_swaps"):
        raise ValueError(f"unknown cost metric {cost!r}")
    num_qubits = 1 + max((q for s in slices for pr in s.pairs for q in pr), default=0)
    if isinstance(initial, Assignment):
        num_qubits = max(num_qubits, len(initial.core_of))
    if num_qubits > MAX_QUBITS or len(slices) > MAX_SLICES or arch.num_cores > MAX_CORES:
        raise ValueError("instance exceeds oracle safety bound")
    if not slices:
        base = initial if isinstance(initial, Assignment) else Assignment(
            tuple(i // arch.qubits_per_core for i in range(num_qubits))
        )
        return OracleResult(0, (base,))

    layers = [_valid_states(num_qubits, s, arch) for s in slices]
    for s, layer in zip(slices, layers):
        if len(layer) == 0:
            raise ValueError(f"slice {s.index} is infeasible on this architecture")

    def edge_cost(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Cost matrix between all rows of a and all rows of b."""
        if cost == "migrations":
            out = np.empty((len(a), len(b)), dtype=np.int64)
            for i0 in range(0, len(a), 256):  # chunked to bound peak memory
                chunk = a[i0 : i0 + 256]
                out[i0 : i0 + 256] = (chunk[:, None, :] != b[None, :, :]).sum(axis=2)
            return out
        out = np.empty((len(a), len(b)), dtype=np.int64)
        for i, av in enumerate(a):
            pa = Assignment(tuple(int(x) for x in av))
            for j, bv in enumerate(b):
                out[i, j] = count_migrations(pa, Assignment(tuple(int(x) for x in bv)))[1]
        return out

    if isinstance(initial, Assignment):
        init = np.array(initial.core_of, dtype=np.int8)
        dp = (layers[0] != init[None, :]).sum(axis=1) if cost == "migrations" else edge_cost(
            init.reshape(1, -1), layers[0]
        )[0]
    else:
        dp = np.zeros(len(layers[0]), dtype=np.int64)

    back: list[np.ndarray] = []
    for t in range(1, len(layers)):
        c = edge_cost(layers[t - 1], layers[t])
        totals = dp[:, None] + c
        back.append(np.argmin(totals, axis=0))
        dp = np.min(totals, axis=0)

    best_end = int(np.argmin(dp))
    best = int(dp[best_end])
    path = [best_end]
    for bk in reversed(back):
        path.append(int(bk[path[-1]]))
    path.reverse()
    witness = tuple(
        Assignment(tuple(int(x) for x in layers[t][i])) for t, i in enumerate(path)
    )
    return OracleResult(best, witness)
