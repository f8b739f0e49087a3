"""Circuit serialization: the revq text format and an OpenQASM 3 export.

revq is the native interchange format, line-oriented and lossless for
wires and gates (``parse(serialize(c))`` reproduces the circuit gate for
gate; free-form metadata travels as comments and is not read back)::

    # optional comments
    wires K
    wire <index> <label> <role>        # role: data | ancilla | carryout
    x <t>
    cx <c> <t>
    ccx <c1> <c2> <t>
    mcx <c1> ... <ck> <t>

Fields are space-separated, indices decimal, one wire line per index.
The OpenQASM 3 export is one-way (no QASM import); multi-controlled X
gates are emitted as ``ctrl(k) @ x``.
"""
from __future__ import annotations

from .circuit import Circuit, CircuitError, WireRole

_ROLE_TOKEN = {
    WireRole.DATA: "data",
    WireRole.ANCILLA: "ancilla",
    WireRole.CARRY_OUT: "carryout",
}
_TOKEN_ROLE = {v: k for k, v in _ROLE_TOKEN.items()}


class ParseError(ValueError):
    """Malformed revq text; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def serialize(circuit: Circuit) -> str:
    """Render a circuit as revq text (meta entries become comments)."""
    lines = []
    for key in ("name", "structure", "ladder", "n", "source"):
        if key in circuit.meta:
            lines.append(f"# {key}: {circuit.meta[key]}")
    lines.append(f"wires {circuit.n_wires}")
    for i, (label, role) in enumerate(circuit.wire_specs):
        lines.append(f"wire {i} {label} {_ROLE_TOKEN[role]}")
    for cs, t in circuit.gates:
        if len(cs) == 0:
            lines.append(f"x {t}")
        elif len(cs) == 1:
            lines.append(f"cx {cs[0]} {t}")
        elif len(cs) == 2:
            lines.append(f"ccx {cs[0]} {cs[1]} {t}")
        else:
            lines.append("mcx " + " ".join(str(c) for c in cs) + f" {t}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> Circuit:
    """Parse revq text; raises `ParseError` naming the offending line."""
    n_wires: int | None = None
    specs: list[tuple[str, WireRole] | None] = []
    seen_wires = 0
    circuit: Circuit | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n_wires is None:
            if fields[0] != "wires" or len(fields) != 2:
                raise ParseError(line_no, "expected header 'wires K'")
            try:
                n_wires = int(fields[1])
            except ValueError:
                raise ParseError(line_no, f"bad wire count {fields[1]!r}") from None
            if n_wires < 0:
                raise ParseError(line_no, "negative wire count")
            specs = [None] * n_wires
            continue
        if fields[0] == "wire":
            if circuit is not None:
                raise ParseError(line_no, "wire line after gate lines")
            if len(fields) != 4:
                raise ParseError(line_no, "expected 'wire <index> <label> <role>'")
            try:
                idx = int(fields[1])
            except ValueError:
                raise ParseError(line_no, f"bad wire index {fields[1]!r}") from None
            if not 0 <= idx < n_wires:
                raise ParseError(line_no, f"wire index {idx} out of range")
            if specs[idx] is not None:
                raise ParseError(line_no, f"wire {idx} declared twice")
            role = _TOKEN_ROLE.get(fields[3])
            if role is None:
                raise ParseError(line_no, f"unknown wire role {fields[3]!r}")
            specs[idx] = (fields[2], role)
            seen_wires += 1
            continue
        # first gate line: wire declarations must be complete
        if circuit is None:
            if seen_wires != n_wires:
                raise ParseError(line_no, f"{n_wires - seen_wires} wire lines missing")
            try:
                circuit = Circuit([s for s in specs if s is not None])
            except CircuitError as exc:
                raise ParseError(line_no, str(exc)) from None
        if fields[0] not in ("x", "cx", "ccx", "mcx"):
            raise ParseError(line_no, f"unknown gate {fields[0]!r}")
        try:
            wires = [int(f) for f in fields[1:]]
        except ValueError:
            raise ParseError(line_no, "gate wires must be integers") from None
        expected = {"x": 1, "cx": 2, "ccx": 3}.get(fields[0])
        if expected is not None and len(wires) != expected:
            raise ParseError(line_no, f"'{fields[0]}' takes {expected} wire(s)")
        if fields[0] == "mcx" and len(wires) < 4:
            raise ParseError(line_no, "'mcx' needs at least 3 controls and a target")
        try:
            circuit.append(wires[:-1], wires[-1])
        except CircuitError as exc:
            raise ParseError(line_no, str(exc)) from None
    if n_wires is None:
        raise ParseError(1, "empty document")
    if circuit is None:
        if seen_wires != n_wires:
            raise ParseError(1, f"{n_wires - seen_wires} wire lines missing")
        circuit = Circuit([s for s in specs if s is not None])
    return circuit


def export_qasm3(circuit: Circuit) -> str:
    """Render as an OpenQASM 3 subset; header comments carry the metadata."""
    lines = []
    for key in ("name", "structure", "ladder", "n", "source"):
        if key in circuit.meta:
            lines.append(f"// {key}: {circuit.meta[key]}")
    lines.append("OPENQASM 3.0;")
    lines.append('include "stdgates.inc";')
    lines.append(f"qubit[{circuit.n_wires}] q;")
    for cs, t in circuit.gates:
        if len(cs) == 0:
            lines.append(f"x q[{t}];")
        elif len(cs) == 1:
            lines.append(f"cx q[{cs[0]}], q[{t}];")
        elif len(cs) == 2:
            lines.append(f"ccx q[{cs[0]}], q[{cs[1]}], q[{t}];")
        else:
            args = ", ".join(f"q[{c}]" for c in cs)
            lines.append(f"ctrl({len(cs)}) @ x {args}, q[{t}];")
    return "\n".join(lines) + "\n"
