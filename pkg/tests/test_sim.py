import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_bits, random_circuit
from revq import (
    BatchAssignment,
    Circuit,
    Gate,
    SimulationError,
    WireRole,
    apply_gate,
    check_equivalence,
    run,
    run_batch,
    truth_table,
)
from revq.ladders import ladder2_linear, ladder2_oracle, ladder2_values
from revq.sim import enumeration_batch, enumeration_word


def _wires(k):
    return [(f"w{i}", WireRole.DATA) for i in range(k)]


def test_apply_gate_toffoli_truth_table():
    assert apply_gate([1, 1, 0], Gate((0, 1), 2)) == [1, 1, 1]
    assert apply_gate([1, 0, 1], Gate((0, 1), 2)) == [1, 0, 1]


def test_apply_gate_mcx_one_control_low():
    state = [1, 1, 1, 0, 1]
    assert apply_gate(state, Gate((0, 1, 2, 3), 4)) == [1, 1, 1, 0, 1]
    state[3] = 1
    assert apply_gate(state, Gate((0, 1, 2, 3), 4)) == [1, 1, 1, 1, 0]


def test_apply_gate_x():
    assert apply_gate([0], Gate((), 0)) == [1]


def test_apply_gate_batch_dispatch():
    batch = BatchAssignment.from_lanes([[1, 1, 0], [1, 0, 0]])
    out = apply_gate(batch, Gate((0, 1), 2))
    assert out.lanes() == [[1, 1, 1], [1, 0, 0]]
    assert batch.lanes() == [[1, 1, 0], [1, 0, 0]]  # input untouched


def test_run_empty_circuit_is_identity():
    circ = Circuit(_wires(3))
    bits = [1, 0, 1]
    assert run(circ, bits) == bits


def test_run_is_pure():
    circ = Circuit(_wires(2))
    circ.x(0)
    bits = [0, 0]
    out = run(circ, bits)
    assert bits == [0, 0] and out == [1, 0]


def test_run_rejects_wire_mismatch():
    circ = Circuit(_wires(2))
    with pytest.raises(SimulationError, match="2 wires"):
        run(circ, [0, 0, 0])


def test_linear_toffoli_ladder_matches_recurrence():
    # all-ones input through the width-7 Toffoli chain
    circ = ladder2_linear(7)
    x, y = [1] * 8, [1] * 7
    out = run(circ, x + y)
    assert out == ladder2_values(x, y) + y
    assert out[:8] == [1, 0, 0, 0, 0, 0, 0, 0]  # every rung fires once


def test_run_then_dagger_restores_input():
    circ = ladder2_linear(5)
    rng = random.Random(3)
    inv = circ.dagger()
    for _ in range(20):
        bits = random_bits(rng, circ.n_wires)
        assert run(inv, run(circ, bits)) == bits


def test_batch_matches_scalar_on_random_lanes():
    rng = random.Random(7)
    circ = random_circuit(rng, n_wires=9, n_gates=30)
    batch = BatchAssignment.random(9, 64, rng)
    out = run_batch(circ, batch)
    for i in range(64):
        assert out.lane(i) == run(circ, batch.lane(i))


def test_zero_lanes_stay_zero_through_any_ladder():
    circ = ladder2_linear(6)
    out = run_batch(circ, BatchAssignment.zeros(circ.n_wires, 32))
    assert all(w == 0 for w in out.words)


def test_single_lane_batch_equals_scalar():
    rng = random.Random(9)
    circ = random_circuit(rng, n_wires=6, n_gates=15)
    bits = random_bits(rng, 6)
    out = run_batch(circ, BatchAssignment.from_lanes([bits]))
    assert out.lane(0) == run(circ, bits)


@settings(max_examples=60)
@given(st.integers(0, 2**31), st.integers(1, 8), st.integers(0, 25))
def test_batch_agrees_with_scalar(seed, n_wires, n_gates):
    rng = random.Random(seed)
    circ = random_circuit(rng, n_wires=n_wires, n_gates=n_gates)
    batch = BatchAssignment.random(n_wires, 16, rng)
    out = run_batch(circ, batch)
    for i in range(16):
        assert out.lane(i) == run(circ, batch.lane(i))


def test_enumeration_word_patterns():
    assert enumeration_word(0, 4) == 0b1010
    assert enumeration_word(1, 4) == 0b1100
    assert enumeration_word(2, 8) == 0b11110000


def test_enumeration_batch_lane_is_input_index():
    batch = enumeration_batch(4, [0, 2, 3])
    for lane in range(8):
        bits = batch.lane(lane)
        assert bits[1] == 0
        assert bits[0] == (lane >> 0) & 1
        assert bits[2] == (lane >> 1) & 1
        assert bits[3] == (lane >> 2) & 1


def test_truth_table_single_x_swaps():
    circ = Circuit(_wires(1))
    circ.x(0)
    assert truth_table(circ) == [1, 0]


def test_truth_table_is_permutation():
    rng = random.Random(13)
    for _ in range(20):
        circ = random_circuit(rng, n_wires=rng.randint(1, 6))
        table = truth_table(circ)
        assert sorted(table) == list(range(2 ** circ.n_wires))


def test_truth_table_wire_cap():
    circ = Circuit(_wires(23))
    with pytest.raises(SimulationError, match="cap"):
        truth_table(circ)


def test_check_equivalence_exhaustive_on_ladder():
    circ = ladder2_linear(4)
    scalar, batch = ladder2_oracle(4, circ.n_wires)
    verdict = check_equivalence(circ, scalar, oracle_batch=batch)
    assert verdict.equivalent and verdict.cases_checked == 512
    # the per-lane scalar path must agree with the packed oracle path
    verdict2 = check_equivalence(circ, scalar)
    assert verdict2.equivalent and verdict2.cases_checked == 512


def test_check_equivalence_finds_mutation():
    circ = ladder2_linear(4)
    del circ.gates[2]
    scalar, batch = ladder2_oracle(4, circ.n_wires)
    verdict = check_equivalence(circ, scalar, oracle_batch=batch)
    assert not verdict.equivalent
    ce = verdict.counterexample
    assert ce is not None
    assert run(circ, ce) != scalar(ce)  # genuinely distinguishing
    # deterministic and lowest-input-index-first
    again = check_equivalence(circ, scalar, oracle_batch=batch)
    assert again.counterexample == ce
    free = list(range(circ.n_wires))
    for lane in range(verdict.cases_checked):
        bits = [(lane >> j) & 1 for j in free]
        if run(circ, bits) != scalar(bits):
            assert bits == ce
            break


def test_check_equivalence_identity_oracle():
    circ = Circuit(_wires(3))
    verdict = check_equivalence(circ, lambda bits: bits)
    assert verdict.equivalent and verdict.cases_checked == 8


def test_check_equivalence_pins_ancillas():
    specs = [("d", WireRole.DATA), ("anc", WireRole.ANCILLA)]
    circ = Circuit(specs)
    circ.cx(1, 0)  # acts only when the ancilla is dirty
    verdict = check_equivalence(circ, lambda bits: bits)
    assert verdict.equivalent and verdict.cases_checked == 2


def test_check_equivalence_custom_free_wires():
    circ = Circuit(_wires(3))
    circ.cx(2, 0)
    # wire 2 pinned: the CNOT never fires, so the circuit looks like identity
    verdict = check_equivalence(circ, lambda bits: bits, free_wires=[0, 1])
    assert verdict.equivalent and verdict.cases_checked == 4
    full = check_equivalence(circ, lambda bits: bits)
    assert not full.equivalent
    assert full.counterexample == [0, 0, 1]  # lowest distinguishing input


def test_check_equivalence_exhaustive_cap():
    circ = Circuit(_wires(25))
    with pytest.raises(SimulationError, match="random mode"):
        check_equivalence(circ, lambda bits: bits)


def test_check_equivalence_random_reproducible():
    circ = ladder2_linear(16)
    scalar, batch = ladder2_oracle(16, circ.n_wires)
    v1 = check_equivalence(circ, scalar, mode="random", samples=500, seed=42, oracle_batch=batch)
    v2 = check_equivalence(circ, scalar, mode="random", samples=500, seed=42, oracle_batch=batch)
    assert v1 == v2
    assert v1.equivalent and v1.cases_checked == 500 and v1.seed == 42


def test_check_equivalence_unknown_mode():
    circ = Circuit(_wires(2))
    with pytest.raises(ValueError, match="mode"):
        check_equivalence(circ, lambda bits: bits, mode="fuzz")
