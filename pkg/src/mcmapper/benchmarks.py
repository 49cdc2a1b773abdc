"""Parameterized benchmark circuit generators.

Families: Cuccaro ripple-carry adder (MAJ/UMA, 2-CNOT + Toffoli form),
textbook QFT, Draper QFT adder, and seeded random two-qubit circuits for
property tests.
"""

from __future__ import annotations

import math
import random

from .circuit import Circuit, Gate

FAMILIES = ("cuccaro", "qft", "qftadd", "random")


def gen_cuccaro(n_bits: int) -> Circuit:
    """Cuccaro ripple-carry adder on 2*n_bits + 2 qubits.

    Qubit layout: 0 = carry-in, 1..n = a register, n+1..2n = b register,
    2n+1 = carry-out. Before decomposition: 4n+1 CNOTs and 2n Toffolis.
    """
    if n_bits < 1:
        raise ValueError("n_bits must be >= 1")
    n = n_bits
    cin = 0
    a = [1 + i for i in range(n)]
    b = [1 + n + i for i in range(n)]
    cout = 2 * n + 1

    gates: list[Gate] = []

    def maj(c: int, y: int, x: int) -> None:
        gates.append(Gate("cx", (x, y)))
        gates.append(Gate("cx", (x, c)))
        gates.append(Gate("ccx", (c, y, x)))

    def uma(c: int, y: int, x: int) -> None:
        gates.append(Gate("ccx", (c, y, x)))
        gates.append(Gate("cx", (x, c)))
        gates.append(Gate("cx", (c, y)))

    chain = [cin] + a[:-1]
    for i in range(n):
        maj(chain[i], b[i], a[i])
    gates.append(Gate("cx", (a[-1], cout)))
    for i in reversed(range(n)):
        uma(chain[i], b[i], a[i])

    return Circuit(2 * n + 2, tuple(gates), f"cuccaro_{n}")


def _qft_gates(qubits: list[int], inverse: bool = False) -> list[Gate]:
    """Standard QFT gate sequence on the given qubits (no final swaps)."""
    n = len(qubits)
    gates: list[Gate] = []
    for i in range(n):
        gates.append(Gate("h", (qubits[i],)))
        for j in range(i + 1, n):
            angle = math.pi / 2 ** (j - i)
            gates.append(Gate("cp", (qubits[j], qubits[i]), (angle,)))
    if inverse:
        gates = [Gate(g.name, g.qubits, tuple(-p for p in g.params)) for g in reversed(gates)]
    return gates


def gen_qft(n: int) -> Circuit:
    """Quantum Fourier transform: n Hadamards and n(n-1)/2 controlled phases."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Circuit(n, tuple(_qft_gates(list(range(n)))), f"qft_{n}")


def gen_draper_adder(n_bits: int) -> Circuit:
    """Draper adder on 2*n_bits qubits: QFT(b), phase additions from a, QFT⁻¹(b).

    Two-qubit gate count: n(n-1) + n(n+1)/2.
    """
    if n_bits < 1:
        raise ValueError("n_bits must be >= 1")
    n = n_bits
    a = list(range(n))
    b = list(range(n, 2 * n))
    gates = _qft_gates(b)
    for i in range(n - 1, -1, -1):  # b[i] accumulates phases from a[0..i]
        for j in range(i, -1, -1):
            angle = math.pi / 2 ** (i - j)
            gates.append(Gate("cp", (a[j], b[i]), (angle,)))
    gates += _qft_gates(b, inverse=True)
    return Circuit(2 * n, tuple(gates), f"qftadd_{n}")


def gen_random(n: int, m: int, seed: int) -> Circuit:
    """m two-qubit gates over uniformly drawn distinct pairs; deterministic in seed."""
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = random.Random(seed)
    gates = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        gates.append(Gate("cx", (u, v)))
    return Circuit(n, tuple(gates), f"random_{n}_{m}_{seed}")


def generate(family: str, size: int, seed: int | None = None, gates: int | None = None) -> Circuit:
    """Dispatch by family name. ``size`` is bits for adders, qubits otherwise."""
    if family == "cuccaro":
        return gen_cuccaro(size)
    if family == "qft":
        return gen_qft(size)
    if family == "qftadd":
        return gen_draper_adder(size)
    if family == "random":
        if seed is None:
            raise ValueError("random family requires a seed")
        return gen_random(size, gates if gates is not None else 4 * size, seed)
    raise ValueError(f"unknown family {family!r}")


def generate_width(family: str, width: int, seed: int | None = None) -> Circuit:
    """Generate a benchmark with exactly ``width`` qubits.

    cuccaro requires even width >= 4 (width = 2*bits + 2); qftadd requires
    even width (width = 2*bits).
    """
    if family == "cuccaro":
        if width < 4 or width % 2:
            raise ValueError(f"cuccaro width must be even and >= 4, got {width}")
        return gen_cuccaro((width - 2) // 2)
    if family == "qftadd":
        if width < 2 or width % 2:
            raise ValueError(f"qftadd width must be even and >= 2, got {width}")
        return gen_draper_adder(width // 2)
    if family == "qft":
        return gen_qft(width)
    if family == "random":
        if seed is None:
            raise ValueError("random family requires a seed")
        return gen_random(width, 4 * width, seed)
    raise ValueError(f"unknown family {family!r}")
