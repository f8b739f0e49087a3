"""Builders for CNOT and Toffoli ladder circuits.

A ladder acts on a chain of wires x_0..x_m with one control set Y_i per
rung: it maps x_{i+1} to x_{i+1} XOR (x_i AND all of Y_i), where every
product reads the chain values *before* the circuit ran.  With empty
control sets this is the CNOT ladder (``ladder1``); with singleton sets
it is the Toffoli ladder (``ladder2``) that carries the ripple in
in-place adders.  x_0 and all control wires are left unchanged.

Three interchangeable implementations of the Toffoli ladder:

* `ladder2_linear`   - n Toffolis in a chain; depth n, no ancilla.
* `ladder2_polylog`  - ancilla-free halving recursion; O(n log n) gate
  endpoints, multi-controlled gates, O(log n) gate layers whose widest
  gates themselves need O(log n) depth to lower.
* `ladder2_carrylog` - carry-lookahead style: compute pair products into
  an ancilla bank, fan carries through a tree, uncompute.  Logarithmic
  Toffoli depth, ancilla bank of n - popcount(n) - floor(log2 n).

`ladder1_log` is the log-depth CNOT ladder (the same recursion with
empty control sets); `ladder1_linear` is its naive chain form.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .circuit import Circuit, CircuitError, Gate, WireRole


# -- index helpers ------------------------------------------------------


def hamming_weight(k: int) -> int:
    """Number of 1-bits in ``k`` (k >= 0)."""
    return k.bit_count()


def floor_log2(k: int) -> int:
    """Largest e with 2**e <= k (k >= 1)."""
    return k.bit_length() - 1


def ancilla_offset(n: int, i: int) -> int:
    """Offset of the level-``i`` product block inside the lookahead ancilla bank.

    Defined as ``n - i - 2*floor(n / 2**i) - popcount(n mod 2**i)``; may be
    negative for small ``i``, but every bank index derived from it inside
    the `ladder2_carrylog` loops lands in range (checked at build time).
    """
    return n - i - 2 * (n >> i) - (n & ((1 << i) - 1)).bit_count()


# -- reference semantics -------------------------------------------------


def ladder1_values(x: Sequence[int]) -> list[int]:
    """Expected CNOT-ladder output: x_i XOR x_{i-1} over original values."""
    return [x[0]] + [x[i] ^ x[i - 1] for i in range(1, len(x))]


def ladder2_values(x: Sequence[int], y: Sequence[int]) -> list[int]:
    """Expected Toffoli-ladder output chain: x_{i+1} XOR x_i*y_i, originals."""
    if len(x) != len(y) + 1:
        raise ValueError("chain must be one longer than the control list")
    return [x[0]] + [x[i + 1] ^ (x[i] & y[i]) for i in range(len(y))]


def ladder1_words(x: Sequence[int]) -> list[int]:
    """`ladder1_values` applied lane-wise to packed words."""
    return [x[0]] + [x[i] ^ x[i - 1] for i in range(1, len(x))]


def ladder2_words(x: Sequence[int], y: Sequence[int]) -> list[int]:
    """`ladder2_values` applied lane-wise to packed words."""
    return [x[0]] + [x[i + 1] ^ (x[i] & y[i]) for i in range(len(y))]


def ladder1_oracle(m: int, n_wires: int):
    """(scalar, batch) reference pair for a circuit whose chain is wires 0..m."""

    def scalar(bits):
        return ladder1_values(bits[: m + 1]) + list(bits[m + 1 :])

    def batch(words, n_lanes):
        return ladder1_words(words[: m + 1]) + list(words[m + 1 :])

    return scalar, batch


def ladder2_oracle(m: int, n_wires: int):
    """(scalar, batch) reference pair: chain = wires 0..m, controls = m+1..2m.

    Wires past 2m (ancillas) are passed through unchanged, which on a
    clean start doubles as the restored-to-zero check.
    """

    def scalar(bits):
        return ladder2_values(bits[: m + 1], bits[m + 1 : 2 * m + 1]) + list(bits[m + 1 :])

    def batch(words, n_lanes):
        return ladder2_words(words[: m + 1], words[m + 1 : 2 * m + 1]) + list(words[m + 1 :])

    return scalar, batch


# -- generalized ladder (halving recursion) ------------------------------


@dataclass(frozen=True)
class LadderLayout:
    """Wire assignment for a generalized ladder.

    ``x`` is the chain (length m+1); ``y_sets`` holds the extra controls
    of each rung (length m; entries may be empty); ``ancilla`` lists wires
    to register with the ancilla role (none are used by the recursion
    itself).  All wires must be pairwise distinct.
    """

    x: tuple[int, ...]
    y_sets: tuple[tuple[int, ...], ...]
    ancilla: tuple[int, ...] = ()

    def validate(self) -> None:
        if len(self.x) != len(self.y_sets) + 1:
            raise CircuitError("layout needs one control set per chain link")
        seen: set[int] = set()
        for w in self.x:
            if w in seen:
                raise CircuitError(f"wire {w} appears twice in the layout")
            seen.add(w)
        for ys in self.y_sets:
            for w in ys:
                if w in seen:
                    raise CircuitError(f"wire {w} appears twice in the layout")
                seen.add(w)
        for w in self.ancilla:
            if w in seen:
                raise CircuitError(f"wire {w} appears twice in the layout")
            seen.add(w)


def _ladder_layers(
    x: Sequence[int], y_sets: Sequence[tuple[int, ...]]
) -> list[list[Gate]]:
    """Gate layers of the halving recursion.

    Odd rungs fire first, then the recursion on the odd-indexed subchain
    with pairwise-merged control sets, then the even rungs.  The merged
    rung (x_{k-1} -> x_{k+1}) and the late even rung (x_k -> x_{k+1},
    with x_k already XORed by x_{k-1}*Y_{k-1}) together reproduce exactly
    x_k*Y_k on original values: the cross terms cancel.
    """
    m = len(x) - 1
    if m <= 0:
        return []
    if m == 1:
        return [[Gate(tuple(sorted((x[0],) + y_sets[0])), x[1])]]
    odd = [Gate(tuple(sorted((x[k],) + y_sets[k])), x[k + 1]) for k in range(1, m, 2)]
    sub_x = list(x[1::2])
    sub_y = [y_sets[2 * j + 1] + y_sets[2 * j + 2] for j in range((m - 1) // 2)]
    even = [Gate(tuple(sorted((x[k],) + y_sets[k])), x[k + 1]) for k in range(0, m, 2)]
    return [odd] + _ladder_layers(sub_x, sub_y) + [even]


def generalized_ladder(
    layout: LadderLayout,
    wire_specs: Sequence[tuple[str, WireRole]] | None = None,
) -> Circuit:
    """Build the halving-recursion ladder over an explicit wire layout.

    Within every emitted layer the gates touch pairwise-disjoint wires,
    so the layer count is an achievable schedule depth; ``slice_tags``
    records the layer of each gate.
    """
    layout.validate()
    referenced = set(layout.x) | set(layout.ancilla)
    for ys in layout.y_sets:
        referenced.update(ys)
    if wire_specs is None:
        top = max(referenced) + 1 if referenced else 0
        anc = set(layout.ancilla)
        wire_specs = [
            (f"w{i}", WireRole.ANCILLA if i in anc else WireRole.DATA)
            for i in range(top)
        ]
    circ = Circuit(wire_specs, meta={"name": "generalized-ladder"})
    if referenced and max(referenced) >= circ.n_wires:
        raise CircuitError("layout references wires beyond the circuit")
    tags: list[int] = []
    for layer_no, layer in enumerate(_ladder_layers(layout.x, layout.y_sets)):
        circ.gates.extend(layer)
        tags.extend([layer_no] * len(layer))
    circ.slice_tags = tags
    return circ


# -- ladder1 (CNOT ladder) ------------------------------------------------


def _chain_specs(n: int) -> list[tuple[str, WireRole]]:
    return [(f"x{i}", WireRole.DATA) for i in range(n + 1)]


def ladder1_linear(n: int) -> Circuit:
    """Naive CNOT ladder on x_0..x_n: n CNOTs, depth n, top rung first."""
    if n < 0:
        raise CircuitError("ladder size must be non-negative")
    circ = Circuit(_chain_specs(n), meta={"name": f"ladder1-linear({n})"})
    for i in range(n, 0, -1):
        circ.gates.append(Gate((i - 1,), i))
    circ.slice_tags = list(range(n))
    return circ


def ladder1_log(n: int) -> Circuit:
    """Log-depth CNOT ladder on x_0..x_n.

    At most 2n+2 CNOTs in at most 2*ceil(log2 n)+2 disjoint layers.
    """
    if n < 0:
        raise CircuitError("ladder size must be non-negative")
    layout = LadderLayout(tuple(range(n + 1)), ((),) * n)
    circ = generalized_ladder(layout, _chain_specs(n))
    circ.meta["name"] = f"ladder1-log({n})"
    return circ


# -- ladder2 (Toffoli ladder) ---------------------------------------------


def _ladder2_specs(n: int) -> list[tuple[str, WireRole]]:
    return [(f"x{i}", WireRole.DATA) for i in range(n + 1)] + [
        (f"y{i}", WireRole.DATA) for i in range(n)
    ]


def ladder2_linear(n: int) -> Circuit:
    """Chain of n Toffolis on x_0..x_n / y_0..y_{n-1}, top rung first.

    Wires: 2n+1, no ancilla.  Toffoli count and Toffoli depth are both
    exactly n (consecutive gates share a chain wire).
    """
    if n < 0:
        raise CircuitError("ladder size must be non-negative")
    circ = Circuit(_ladder2_specs(n), meta={"name": f"ladder2-linear({n})"})
    for i in range(n - 1, -1, -1):
        circ.gates.append(Gate((i, n + 1 + i), i + 1))
    circ.slice_tags = list(range(n))
    return circ


def ladder2_polylog(n: int) -> Circuit:
    """Ancilla-free Toffoli ladder via the halving recursion.

    Wires: exactly 2n+1.  Gates are Toffolis plus multi-controlled X of
    growing arity; the layer count stays within 2*ceil(log2 n)+1 and the
    total control endpoints within n*ceil(log2 n) + 4n.
    """
    if n < 0:
        raise CircuitError("ladder size must be non-negative")
    layout = LadderLayout(
        tuple(range(n + 1)), tuple((n + 1 + i,) for i in range(n))
    )
    circ = generalized_ladder(layout, _ladder2_specs(n))
    circ.meta["name"] = f"ladder2-polylog({n})"
    return circ


def ladder2_carrylog(n: int) -> Circuit:
    """Log-depth Toffoli ladder with an ancilla bank (carry-lookahead form).

    Acts on a chain of ``n`` wires x_0..x_{n-1} with controls y_0..y_{n-2},
    i.e. the same action as ``ladder2_linear(n - 1)``, using a bank of
    ``n - popcount(n) - floor(log2 n)`` ancillas that start and end at 0.
    Exactly ``4n - 3*popcount(n) - 3*floor(log2 n) - 1`` Toffolis in four
    blocks: pair products into the bank, forward carry sweep, backward
    sweep, uncompute (block 1 reversed).  ``slice_tags`` numbers the
    blocks 1..4.
    """
    if n < 2:
        raise CircuitError("lookahead ladder needs a chain of at least 2 wires")
    n_anc = n - hamming_weight(n) - floor_log2(n)
    specs = (
        [(f"x{i}", WireRole.DATA) for i in range(n)]
        + [(f"y{i}", WireRole.DATA) for i in range(n - 1)]
        + [(f"A{i}", WireRole.ANCILLA) for i in range(n_anc)]
    )
    circ = Circuit(specs, meta={"name": f"ladder2-carrylog({n})"})
    a0 = 2 * n - 1  # ancilla bank base

    def bank(idx: int) -> int:
        if not 0 <= idx < n_anc:
            raise CircuitError(f"ancilla bank index {idx} outside 0..{n_anc - 1}")
        return a0 + idx

    gates = circ.gates
    tags: list[int] = []

    def mark(block: int) -> None:
        tags.extend([block] * (len(gates) - len(tags)))

    # block 1: products of control pairs into the bank, then pair the pairs
    for j in range(1, n // 2):
        gates.append(Gate((n + 2 * j - 1, n + 2 * j), bank(j - 1)))
    for i in range(2, floor_log2(n)):
        s_prev, s_cur = ancilla_offset(n, i - 1), ancilla_offset(n, i)
        for j in range(1, n >> i):
            gates.append(
                Gate((bank(2 * j + s_prev), bank(2 * j + 1 + s_prev)), bank(j + s_cur))
            )
    block1 = list(gates)
    mark(1)

    # block 2: forward carry sweep over the chain
    for j in range(1, (n - 1) // 2 + 1):
        gates.append(Gate((2 * j - 1, n + 2 * j - 1), 2 * j))
    for i in range(2, floor_log2((2 * n) // 3) + 1):
        s_prev = ancilla_offset(n, i - 1)
        step, half = 1 << i, 1 << (i - 1)
        for j in range(1, (n - half) // step + 1):
            gates.append(
                Gate(tuple(sorted((step * j - 1, bank(2 * j + s_prev)))), step * j + half - 1)
            )
    mark(2)

    # block 3: backward sweep, then the even rungs of the chain
    for i in range(floor_log2(n), 1, -1):
        s_prev = ancilla_offset(n, i - 1)
        step, half = 1 << i, 1 << (i - 1)
        for j in range(1, (n >> i) + 1):
            gates.append(
                Gate(tuple(sorted((step * j - half - 1, bank(2 * j - 1 + s_prev)))), step * j - 1)
            )
    for j in range(1, n // 2 + 1):
        gates.append(Gate((2 * j - 2, n + 2 * j - 2), 2 * j - 1))
    mark(3)

    # block 4: uncompute block 1
    gates.extend(reversed(block1))
    mark(4)
    circ.slice_tags = tags
    return circ
