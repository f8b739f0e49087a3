"""Bit-exact simulation and equivalence checking for reversible circuits.

The gate set is classical-reversible, so simulation over basis states is
exact; no amplitudes are involved.  Two execution modes are provided:

* scalar - one assignment, a plain list of 0/1 ints, one bit per wire;
* bit-sliced - a `BatchAssignment` packs W independent lanes into one
  Python int per wire, so ``word[t] ^= word[c1] & ... & word[ck]``
  applies the scalar rule to all W lanes in one pass over the gate list.
  Exhaustive sweeps over k free wires run as a single 2**k-lane batch.

Equivalence against a reference function enumerates either the full
input space of the free wires or a seeded random sample; non-free wires
(ancillas, by default) are pinned to 0, matching the contract that
ancillas start clean.  Behaviour on dirty ancillas is unspecified and
deliberately not checked.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .circuit import Circuit, Gate, WireRole

Assignment = list[int]

EXHAUSTIVE_WIRE_CAP = 24
TRUTH_TABLE_WIRE_CAP = 22


class SimulationError(ValueError):
    """Raised for wire-count mismatches and enumeration-cap violations."""


def apply_gate(state, gate: Gate):
    """Apply one gate; returns a new object of the same type as ``state``."""
    if isinstance(state, BatchAssignment):
        out = state.copy()
        _apply_words(out.words, gate, out.full_mask())
        return out
    bits = list(state)
    if all(bits[c] for c in gate.controls):
        bits[gate.target] ^= 1
    return bits


def run(circuit: Circuit, bits: Sequence[int]) -> Assignment:
    """Fold the gate list over a scalar assignment; the input is unchanged."""
    if len(bits) != circuit.n_wires:
        raise SimulationError(
            f"assignment has {len(bits)} bits, circuit has {circuit.n_wires} wires"
        )
    out = list(bits)
    for cs, t in circuit.gates:
        for c in cs:
            if not out[c]:
                break
        else:
            out[t] ^= 1
    return out


@dataclass
class BatchAssignment:
    """W independent assignments, one W-bit word per wire (lane i = bit i)."""

    words: list[int]
    n_lanes: int

    @classmethod
    def zeros(cls, n_wires: int, n_lanes: int) -> "BatchAssignment":
        return cls([0] * n_wires, n_lanes)

    @classmethod
    def from_lanes(cls, lanes: Sequence[Sequence[int]]) -> "BatchAssignment":
        if not lanes:
            raise SimulationError("empty batch")
        n_wires = len(lanes[0])
        words = [0] * n_wires
        for i, lane in enumerate(lanes):
            if len(lane) != n_wires:
                raise SimulationError("lanes of unequal width")
            for w, bit in enumerate(lane):
                if bit:
                    words[w] |= 1 << i
        return cls(words, len(lanes))

    @classmethod
    def random(
        cls,
        n_wires: int,
        n_lanes: int,
        rng: random.Random,
        pinned: Iterable[int] = (),
    ) -> "BatchAssignment":
        """Uniform random lanes; wires in ``pinned`` stay 0 in every lane."""
        skip = set(pinned)
        words = [0 if w in skip else rng.getrandbits(n_lanes) for w in range(n_wires)]
        return cls(words, n_lanes)

    def full_mask(self) -> int:
        return (1 << self.n_lanes) - 1

    def lane(self, i: int) -> Assignment:
        return [(w >> i) & 1 for w in self.words]

    def lanes(self) -> list[Assignment]:
        return [self.lane(i) for i in range(self.n_lanes)]

    def copy(self) -> "BatchAssignment":
        return BatchAssignment(list(self.words), self.n_lanes)


def _apply_words(words: list[int], gate: Gate, full: int) -> None:
    cs = gate.controls
    if cs:
        acc = words[cs[0]]
        for c in cs[1:]:
            acc &= words[c]
        words[gate.target] ^= acc
    else:
        words[gate.target] ^= full


def run_batch(circuit: Circuit, batch: BatchAssignment) -> BatchAssignment:
    """Lane-wise identical to `run`, one pass for all lanes."""
    if len(batch.words) != circuit.n_wires:
        raise SimulationError(
            f"batch has {len(batch.words)} wires, circuit has {circuit.n_wires}"
        )
    words = list(batch.words)
    full = batch.full_mask()
    for cs, t in circuit.gates:
        if cs:
            acc = words[cs[0]]
            for c in cs[1:]:
                acc &= words[c]
            words[t] ^= acc
        else:
            words[t] ^= full
    return BatchAssignment(words, batch.n_lanes)


def enumeration_word(bit: int, n_lanes: int) -> int:
    """Word whose lane L holds bit ``bit`` of L (``n_lanes`` a power of two)."""
    period = 2 << bit
    if period > n_lanes:
        raise SimulationError("enumeration bit outside lane index range")
    ones = (1 << (1 << bit)) - 1
    repunit = ((1 << n_lanes) - 1) // ((1 << period) - 1)
    return repunit * (ones << (1 << bit))


def enumeration_batch(n_wires: int, free: Sequence[int]) -> BatchAssignment:
    """Batch enumerating all assignments of ``free`` wires; the rest pinned 0.

    Lane L assigns bit j of L to the j-th free wire, so the lane index is
    the input index.
    """
    n_lanes = 1 << len(free)
    words = [0] * n_wires
    for j, w in enumerate(free):
        words[w] = enumeration_word(j, n_lanes)
    return BatchAssignment(words, n_lanes)


def truth_table(circuit: Circuit) -> list[int]:
    """Full input -> output map as a list indexed by input (wire j = bit j).

    The map of any valid circuit is a permutation of ``range(2**K)``.
    """
    k = circuit.n_wires
    if k > TRUTH_TABLE_WIRE_CAP:
        raise SimulationError(
            f"truth table over {k} wires exceeds the {TRUTH_TABLE_WIRE_CAP}-wire cap"
        )
    batch = enumeration_batch(k, range(k))
    out = run_batch(circuit, batch)
    table = [0] * batch.n_lanes
    for w, word in enumerate(out.words):
        for i in range(batch.n_lanes):
            if (word >> i) & 1:
                table[i] |= 1 << w
    return table


@dataclass
class Verdict:
    """Outcome of an equivalence check.

    When ``equivalent`` is False, ``counterexample`` is the input
    assignment (all wires, pinned wires at 0) with the lowest input index
    on which circuit and reference disagree.
    """

    equivalent: bool
    counterexample: Assignment | None
    cases_checked: int
    mode: str
    seed: int | None = None


def check_equivalence(
    circuit: Circuit,
    oracle: Callable[[Assignment], Assignment],
    *,
    mode: str = "exhaustive",
    samples: int = 1000,
    seed: int = 0,
    free_wires: Sequence[int] | None = None,
    oracle_batch: Callable[[list[int], int], list[int]] | None = None,
) -> Verdict:
    """Compare ``circuit`` against a reference function over its input space.

    ``free_wires`` defaults to every non-ancilla wire; the rest are pinned
    to 0.  ``oracle`` maps a full input assignment to the expected full
    output.  ``oracle_batch``, when given, does the same on packed words
    (``(words, n_lanes) -> words``) and avoids the per-lane loop; both
    views of the reference must agree, which the test suite checks
    separately.  Results are deterministic for a fixed mode and seed.
    """
    if free_wires is None:
        free = [i for i, r in enumerate(circuit.roles) if r is not WireRole.ANCILLA]
    else:
        free = sorted(free_wires)
    if mode == "exhaustive":
        if len(free) > EXHAUSTIVE_WIRE_CAP:
            raise SimulationError(
                f"{len(free)} free wires exceed the exhaustive cap of "
                f"{EXHAUSTIVE_WIRE_CAP}; use random mode"
            )
        batch = enumeration_batch(circuit.n_wires, free)
        used_seed = None
    elif mode == "random":
        rng = random.Random(seed)
        words = [0] * circuit.n_wires
        for w in free:
            words[w] = rng.getrandbits(samples)
        batch = BatchAssignment(words, samples)
        used_seed = seed
    else:
        raise ValueError(f"unknown mode {mode!r}")

    got = run_batch(circuit, batch)
    if oracle_batch is not None:
        expected = oracle_batch(list(batch.words), batch.n_lanes)
    else:
        expected = [0] * circuit.n_wires
        for i in range(batch.n_lanes):
            out = oracle(batch.lane(i))
            for w, bit in enumerate(out):
                if bit:
                    expected[w] |= 1 << i
    diff = 0
    for w in range(circuit.n_wires):
        diff |= got.words[w] ^ expected[w]
    if diff == 0:
        return Verdict(True, None, batch.n_lanes, mode, used_seed)
    first = (diff & -diff).bit_length() - 1
    return Verdict(False, batch.lane(first), batch.n_lanes, mode, used_seed)
