import random

import pytest

from conftest import random_circuit
from revq import Circuit, Gate, ParseError, WireRole, export_qasm3, parse, serialize
from revq.adders import AdderConfig, build_adder
from revq.ladders import ladder2_polylog


def test_roundtrip_single_toffoli():
    circ = Circuit([(f"w{i}", WireRole.DATA) for i in range(3)])
    circ.ccx(0, 1, 2)
    again = parse(serialize(circ))
    assert again == circ


def test_roundtrip_all_roles_and_kinds():
    circ = Circuit(
        [("a", WireRole.DATA), ("b", WireRole.ANCILLA), ("z", WireRole.CARRY_OUT),
         ("c", WireRole.DATA), ("d", WireRole.DATA)]
    )
    circ.x(0)
    circ.cx(0, 1)
    circ.ccx(0, 1, 2)
    circ.mcx((0, 1, 2, 3), 4)
    assert parse(serialize(circ)) == circ


def test_roundtrip_random_circuits():
    rng = random.Random(41)
    for _ in range(1000):
        circ = random_circuit(rng, varied_roles=True)
        assert parse(serialize(circ)) == circ


def test_fig2_document_shape():
    text = serialize(ladder2_polylog(7))
    lines = [l for l in text.splitlines() if l and not l.startswith("#")]
    assert lines[0] == "wires 15"
    assert sum(1 for l in lines if l.startswith("wire ")) == 15
    assert len(lines) - 16 == 11  # one line per gate


def test_duplicate_control_rejected_with_line_number():
    text = "wires 2\nwire 0 a data\nwire 1 b data\nccx 0 0 1\n"
    with pytest.raises(ParseError, match="line 4"):
        parse(text)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty"),
        ("wires x\n", "bad wire count"),
        ("nope 3\n", "header"),
        ("wires 1\nwire 0 a data\nwire 0 b data\nx 0\n", "declared twice"),
        ("wires 2\nwire 0 a data\nx 0\n", "missing"),
        ("wires 1\nwire 0 a qubit\n", "role"),
        ("wires 1\nwire 0 a data\nh 0\n", "unknown gate"),
        ("wires 1\nwire 0 a data\ncx 0\n", "takes 2"),
        ("wires 2\nwire 0 a data\nwire 1 b data\nmcx 0 1\n", "mcx"),
        ("wires 1\nwire 0 a data\nx 4\n", "out of range"),
        ("wires 1\nwire 0 a data\nx 0\nwire 0 a data\n", "after gate"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse(text)


def test_parse_ignores_comments_and_blank_lines():
    text = "# hello\n\nwires 1\n# mid\nwire 0 a data\n\nx 0  # trailing\n"
    circ = parse(text)
    assert circ.gates == [Gate((), 0)]


def test_empty_wireless_document():
    circ = Circuit([])
    assert parse(serialize(circ)) == circ


def test_qasm3_gate_lines():
    circ = Circuit([(f"w{i}", WireRole.DATA) for i in range(6)])
    circ.x(0)
    circ.ccx(0, 1, 2)
    circ.mcx((0, 1, 2, 3, 4), 5)
    text = export_qasm3(circ)
    assert "OPENQASM 3.0;" in text
    assert "x q[0];" in text
    assert "ccx q[0], q[1], q[2];" in text
    assert "ctrl(5) @ x q[0], q[1], q[2], q[3], q[4], q[5];" in text


def test_qasm3_header_carries_config():
    circ = build_adder(AdderConfig(8, "optimized", "carrylog"))
    head = export_qasm3(circ).splitlines()[:6]
    assert any("structure: optimized" in l for l in head)
    assert any("ladder: carrylog" in l for l in head)
    assert any("source:" in l for l in head)
