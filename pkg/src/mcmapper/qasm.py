"""Reader/writer for the QASM subset used for circuit interchange.

Supported statements: optional ``OPENQASM 2.0`` header, ``include`` (skipped),
``qreg``, and applications of h, x, t, tdg, s, sdg, rz(t), cx, cp(t)/cu1(t),
ccx. ``creg``, ``barrier`` and ``measure`` are skipped. ``//`` starts a
comment. Registers are flattened in declaration order onto one 0-based
index space.
"""

from __future__ import annotations

import re

from .circuit import Circuit, Gate

ONE_QUBIT_GATES = {"h", "x", "t", "tdg", "s", "sdg", "rz"}
TWO_QUBIT_GATES = {"cx", "cp", "cu1"}
PARAMETRIC_GATES = {"rz", "cp", "cu1"}


class QasmError(ValueError):
    """Syntax or semantic error in QASM input, with source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


_STMT_RE = re.compile(
    r"""^(?P<name>[A-Za-z_][A-Za-z0-9_]*)
        \s*(?:\(\s*(?P<params>[^)]*)\s*\))?
        \s*(?P<args>.*)$""",
    re.VERBOSE | re.DOTALL,
)
_ARG_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*\[\s*(\d+)\s*\]$")


def _statements(text: str):
    """Yield (statement, line, col) with comments stripped."""
    # strip // comments, keeping newlines for position accounting
    clean = re.sub(r"//[^\n]*", lambda m: " " * len(m.group()), text)
    buf: list[str] = []
    start = None  # (line, col) of first non-space char
    line, col = 1, 1
    for ch in clean:
        if ch == ";":
            if buf and start is not None:
                yield "".join(buf).strip(), start[0], start[1]
            buf, start = [], None
        else:
            if not ch.isspace() and start is None:
                start = (line, col)
            if start is not None:
                buf.append(ch)
        if ch == "\n":
            line, col = line + 1, 1
        else:
            col += 1
    if buf and start is not None:
        yield "".join(buf).strip(), start[0], start[1]


def parse_qasm(text: str, name: str = "circuit") -> Circuit:
    """Parse the supported QASM subset into a Circuit."""
    registers: dict[str, int] = {}  # register name -> base offset
    sizes: dict[str, int] = {}
    total = 0
    gates: list[Gate] = []

    def resolve(arg: str, line: int, col: int) -> int:
        m = _ARG_RE.match(arg.strip())
        if not m:
            raise QasmError(f"malformed operand {arg.strip()!r}", line, col)
        reg, idx = m.group(1), int(m.group(2))
        if reg not in registers:
            raise QasmError(f"unknown register {reg!r}", line, col)
        if idx >= sizes[reg]:
            raise QasmError(f"index {idx} out of range for {reg}[{sizes[reg]}]", line, col)
        return registers[reg] + idx

    for stmt, line, col in _statements(text):
        m = _STMT_RE.match(stmt)
        if not m:
            raise QasmError(f"unparseable statement {stmt!r}", line, col)
        head = m.group("name")
        if head == "OPENQASM":
            continue
        if head in ("include", "creg", "barrier", "measure"):
            continue
        if head == "qreg":
            dm = _ARG_RE.match(m.group("args").strip() if m.group("args") else "")
            # qreg syntax is "qreg name[N]"; the regex puts "name[N]" in args
            if m.group("params") is not None or not dm:
                raise QasmError(f"malformed qreg {stmt!r}", line, col)
            reg, n = dm.group(1), int(dm.group(2))
            if reg in registers:
                raise QasmError(f"register {reg!r} redeclared", line, col)
            if n < 1:
                raise QasmError(f"register size must be >= 1, got {n}", line, col)
            registers[reg] = total
            sizes[reg] = n
            total += n
            continue

        gate = head.lower()
        if gate not in ONE_QUBIT_GATES | TWO_QUBIT_GATES | {"ccx"}:
            raise QasmError(f"unknown gate {gate!r}", line, col)
        params: tuple[float, ...] = ()
        if m.group("params") is not None:
            if gate not in PARAMETRIC_GATES:
                raise QasmError(f"gate {gate!r} takes no parameters", line, col)
            try:
                params = tuple(float(p) for p in m.group("params").split(","))
            except ValueError:
                raise QasmError(f"non-numeric parameter in {stmt!r}", line, col) from None
        elif gate in PARAMETRIC_GATES:
            raise QasmError(f"gate {gate!r} requires a parameter", line, col)
        args = [a for a in m.group("args").split(",") if a.strip()]
        arity = 1 if gate in ONE_QUBIT_GATES else (3 if gate == "ccx" else 2)
        if len(args) != arity:
            raise QasmError(f"gate {gate!r} expects {arity} operands, got {len(args)}", line, col)
        operands = tuple(resolve(a, line, col) for a in args)
        if len(set(operands)) != len(operands):
            raise QasmError(f"duplicate operand in {stmt!r}", line, col)
        gates.append(Gate(gate, operands, params))

    if total == 0:
        raise QasmError("no qreg declared", 1, 1)
    return Circuit(total, tuple(gates), name)


def emit_qasm(c: Circuit) -> str:
    """Serialize a Circuit; parse_qasm(emit_qasm(c)) == c up to register naming."""
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"qreg q[{c.num_qubits}];",
    ]
    for g in c.gates:
        head = g.name
        if g.params:
            head += "(" + ",".join(repr(p) for p in g.params) + ")"
        args = ",".join(f"q[{q}]" for q in g.qubits)
        lines.append(f"{head} {args};")
    return "\n".join(lines) + "\n"
