import random

import pytest
from hypothesis import given, strategies as st

from conftest import random_bits, random_circuit
from revq import Circuit, CircuitError, Gate, WireRole, make_gate, run


def test_empty_single_wire_circuit():
    circ = Circuit([("x0", WireRole.DATA)])
    assert circ.n_wires == 1
    assert len(circ) == 0
    circ.validate()


def test_lookahead_ladder_wire_shell():
    # the 19-wire layout of the width-8 lookahead ladder
    specs = (
        [(f"x{i}", WireRole.DATA) for i in range(8)]
        + [(f"y{i}", WireRole.DATA) for i in range(7)]
        + [(f"A{i}", WireRole.ANCILLA) for i in range(4)]
    )
    circ = Circuit(specs)
    assert circ.n_wires == 19
    assert circ.ancillas() == (15, 16, 17, 18)


def test_duplicate_label_rejected():
    with pytest.raises(CircuitError, match="duplicate wire label"):
        Circuit([("a0", WireRole.DATA), ("a0", WireRole.DATA)])


def test_append_infers_kind():
    circ = Circuit([(f"w{i}", WireRole.DATA) for i in range(4)])
    circ.append({0, 1}, 2)
    circ.append((), 0)
    circ.cx(3, 1)
    circ.mcx((0, 1, 2), 3)
    assert [g.kind() for g in circ.gates] == ["ccx", "x", "cx", "mcx"]


def test_append_rejects_self_target():
    circ = Circuit([(f"w{i}", WireRole.DATA) for i in range(3)])
    with pytest.raises(CircuitError, match="also a control"):
        circ.append({2}, 2)


def test_append_rejects_out_of_range():
    circ = Circuit([(f"w{i}", WireRole.DATA) for i in range(3)])
    with pytest.raises(CircuitError, match="out of range"):
        circ.append({0}, 3)
    with pytest.raises(CircuitError, match="out of range"):
        circ.append({5}, 1)


def test_make_gate_canonicalizes_controls():
    assert make_gate((3, 1, 2), 0) == Gate((1, 2, 3), 0)
    assert make_gate([2, 1], 0) == make_gate([1, 2], 0)
    with pytest.raises(CircuitError, match="duplicate control"):
        make_gate((1, 1), 0)


def test_dagger_empty():
    circ = Circuit([("w0", WireRole.DATA)])
    assert circ.dagger().gates == []


def test_dagger_reverses_gates():
    circ = Circuit([(f"w{i}", WireRole.DATA) for i in range(3)])
    circ.ccx(0, 1, 2)
    circ.cx(0, 1)
    inv = circ.dagger()
    assert inv.gates == [Gate((0,), 1), Gate((0, 1), 2)]
    assert inv.dagger() == circ


def test_dagger_reverses_slice_tags():
    circ = Circuit([(f"w{i}", WireRole.DATA) for i in range(3)])
    circ.cx(0, 1)
    circ.cx(1, 2)
    circ.slice_tags = [1, 2]
    assert circ.dagger().slice_tags == [2, 1]


def test_embed_identity_map_concatenates():
    sub = Circuit([("a", WireRole.DATA), ("b", WireRole.DATA)])
    sub.cx(0, 1)
    parent = Circuit([("a", WireRole.DATA), ("b", WireRole.DATA)])
    parent.x(0)
    parent.embed(sub, [0, 1])
    assert parent.gates == [Gate((), 0), Gate((0,), 1)]


def test_embed_rejects_non_injective_map():
    sub = Circuit([("a", WireRole.DATA), ("b", WireRole.DATA)])
    parent = Circuit([(f"w{i}", WireRole.DATA) for i in range(3)])
    with pytest.raises(CircuitError, match="injective"):
        parent.embed(sub, [1, 1])


def test_embed_rejects_out_of_range_image():
    sub = Circuit([("a", WireRole.DATA)])
    sub.x(0)
    parent = Circuit([("w0", WireRole.DATA)])
    with pytest.raises(CircuitError, match="wire range"):
        parent.embed(sub, [1])


def test_embed_resorts_controls_under_reversing_map():
    sub = Circuit([(f"w{i}", WireRole.DATA) for i in range(3)])
    sub.ccx(0, 1, 2)
    parent = Circuit([(f"p{i}", WireRole.DATA) for i in range(3)])
    parent.embed(sub, [2, 1, 0])
    assert parent.gates == [Gate((1, 2), 0)]


def test_embed_preserves_semantics():
    rng = random.Random(11)
    for _ in range(50):
        sub = random_circuit(rng, n_wires=4, n_gates=rng.randint(1, 12))
        parent = Circuit([(f"p{i}", WireRole.DATA) for i in range(7)])
        wire_map = rng.sample(range(7), 4)
        parent.embed(sub, wire_map)
        bits = random_bits(rng, 7)
        got = run(parent, bits)
        sub_out = run(sub, [bits[wire_map[i]] for i in range(4)])
        expected = list(bits)
        for i, w in enumerate(wire_map):
            expected[w] = sub_out[i]
        assert got == expected


def test_validate_catches_corrupted_gate():
    circ = Circuit([(f"w{i}", WireRole.DATA) for i in range(3)])
    circ.cx(0, 1)
    circ.gates.append(Gate((2,), 2))  # bypass append checks
    with pytest.raises(CircuitError, match="gate 1"):
        circ.validate()


def test_validate_checks_slice_tag_length():
    circ = Circuit([("w0", WireRole.DATA), ("w1", WireRole.DATA)])
    circ.cx(0, 1)
    circ.slice_tags = [1, 2]
    with pytest.raises(CircuitError, match="slice tags"):
        circ.validate()


def test_equality_ignores_meta():
    a = Circuit([("w0", WireRole.DATA)], meta={"name": "a"})
    b = Circuit([("w0", WireRole.DATA)], meta={"name": "b"})
    assert a == b
    b.x(0)
    assert a != b


@given(st.data())
def test_every_gate_is_an_involution(data):
    n_wires = data.draw(st.integers(2, 8))
    arity = data.draw(st.integers(0, n_wires - 1))
    wires = data.draw(
        st.lists(st.integers(0, n_wires - 1), min_size=arity + 1,
                 max_size=arity + 1, unique=True)
    )
    gate = make_gate(wires[:-1], wires[-1])
    bits = data.draw(st.lists(st.integers(0, 1), min_size=n_wires, max_size=n_wires))
    circ = Circuit([(f"w{i}", WireRole.DATA) for i in range(n_wires)])
    circ.append(gate.controls, gate.target)
    circ.append(gate.controls, gate.target)
    assert run(circ, bits) == bits
