"""Core representation of reversible circuits.

Circuits are gate lists over the involutory gate set {X, CNOT, Toffoli,
MCX}: every gate flips its target wire iff all of its control wires are 1,
so applying any gate twice is the identity and the inverse of a circuit is
simply its gate list reversed.

Wires are labelled and carry a role (data / ancilla / carry-out).  Roles
do not affect gate semantics; they tell the simulator which wires must
start at 0 and be restored, and the analyzer which wires count as
workspace.
"""
from __future__ import annotations

from enum import Enum
from typing import Iterable, Mapping, NamedTuple, Sequence


class CircuitError(ValueError):
    """Raised for malformed gates, wire sets, or wire maps."""


class WireRole(Enum):
    DATA = "data"
    ANCILLA = "ancilla"
    CARRY_OUT = "carryout"


_KIND_BY_ARITY = {0: "x", 1: "cx", 2: "ccx"}


class Gate(NamedTuple):
    """One primitive: flip ``target`` iff every wire in ``controls`` is 1.

    The kind is implied by the number of controls (0 = X, 1 = CNOT,
    2 = Toffoli, 3+ = MCX).  Controls are stored sorted, so gates compare
    equal regardless of the order their controls were given in.
    """

    controls: tuple[int, ...]
    target: int

    def kind(self) -> str:
        return _KIND_BY_ARITY.get(len(self.controls), "mcx")

    def wires(self) -> tuple[int, ...]:
        return self.controls + (self.target,)


def make_gate(controls: Iterable[int], target: int, n_wires: int | None = None) -> Gate:
    """Build a canonical `Gate`, validating the wire set.

    Raises `CircuitError` if the target is also a control, controls repeat,
    or (when ``n_wires`` is given) any wire index is out of range.
    """
    cs = tuple(sorted(controls))
    for i in range(1, len(cs)):
        if cs[i] == cs[i - 1]:
            raise CircuitError(f"duplicate control wire {cs[i]}")
    if target in cs:
        raise CircuitError(f"target wire {target} is also a control")
    if n_wires is not None:
        if not 0 <= target < n_wires:
            raise CircuitError(f"target wire {target} out of range 0..{n_wires - 1}")
        if cs and not (0 <= cs[0] and cs[-1] < n_wires):
            raise CircuitError(f"control wires {cs} out of range 0..{n_wires - 1}")
    return Gate(cs, target)


class Circuit:
    """Ordered gate list over a fixed set of labelled wires.

    Construction (``append`` / ``embed``) is single-owner; once built, a
    circuit is treated as immutable and may be shared freely across
    concurrent verification workers.

    ``slice_tags``, when set, assigns one block number per gate purely as
    documentation of how the circuit was assembled; semantics come from
    gate order alone.  ``meta`` holds free-form string annotations
    (builder name, configuration, source key).
    """

    __slots__ = ("labels", "roles", "gates", "slice_tags", "meta")

    def __init__(
        self,
        wire_specs: Iterable[tuple[str, WireRole]],
        meta: Mapping[str, str] | None = None,
    ):
        labels: list[str] = []
        roles: list[WireRole] = []
        seen: set[str] = set()
        for label, role in wire_specs:
            if label in seen:
                raise CircuitError(f"duplicate wire label {label!r}")
            seen.add(label)
            labels.append(label)
            roles.append(role)
        self.labels = labels
        self.roles = roles
        self.gates: list[Gate] = []
        self.slice_tags: list[int] | None = None
        self.meta: dict[str, str] = dict(meta or {})

    @property
    def n_wires(self) -> int:
        return len(self.labels)

    @property
    def wire_specs(self) -> list[tuple[str, WireRole]]:
        return list(zip(self.labels, self.roles))

    def wires_with_role(self, role: WireRole) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roles) if r is role)

    def ancillas(self) -> tuple[int, ...]:
        return self.wires_with_role(WireRole.ANCILLA)

    # -- construction -------------------------------------------------

    def append(self, controls: Iterable[int], target: int) -> None:
        """Append one gate; its kind follows from the control count."""
        self.gates.append(make_gate(controls, target, self.n_wires))

    def x(self, target: int) -> None:
        self.append((), target)

    def cx(self, control: int, target: int) -> None:
        self.append((control,), target)

    def ccx(self, c1: int, c2: int, target: int) -> None:
        self.append((c1, c2), target)

    def mcx(self, controls: Iterable[int], target: int) -> None:
        self.append(controls, target)

    def embed(self, sub: "Circuit", wire_map: Sequence[int] | Mapping[int, int]) -> None:
        """Append every gate of ``sub`` with wires remapped into this circuit.

        ``wire_map`` maps each sub-circuit wire index to a wire of this
        circuit (a sequence indexed by sub wire, or an explicit mapping).
        The map must be injective and stay within this circuit's wires.
        """
        if isinstance(wire_map, Mapping):
            try:
                table = [wire_map[i] for i in range(sub.n_wires)]
            except KeyError as missing:
                raise CircuitError(f"wire map misses subcircuit wire {missing}") from None
        else:
            table = list(wire_map)
            if len(table) != sub.n_wires:
                raise CircuitError(
                    f"wire map covers {len(table)} wires, subcircuit has {sub.n_wires}"
                )
        if len(set(table)) != len(table):
            raise CircuitError("wire map is not injective")
        n = self.n_wires
        if any(not 0 <= w < n for w in table):
            raise CircuitError("wire map leaves the parent circuit's wire range")
        gates = self.gates
        for cs, t in sub.gates:
            gates.append(Gate(tuple(sorted(table[c] for c in cs)), table[t]))

    # -- derived circuits ---------------------------------------------

    def dagger(self) -> "Circuit":
        """Inverse circuit: the same gates in reverse order.

        Every primitive is an involution, so reversal alone inverts the
        circuit; ``c.dagger().dagger()`` equals ``c`` gate for gate.
        """
        inv = Circuit(self.wire_specs, meta=self.meta)
        inv.gates = list(reversed(self.gates))
        if self.slice_tags is not None:
            inv.slice_tags = list(reversed(self.slice_tags))
        return inv

    def copy(self) -> "Circuit":
        dup = Circuit(self.wire_specs, meta=self.meta)
        dup.gates = list(self.gates)
        dup.slice_tags = None if self.slice_tags is None else list(self.slice_tags)
        return dup

    # -- checking ------------------------------------------------------

    def validate(self) -> None:
        """Re-check every structural invariant; raise naming the first offender."""
        n = self.n_wires
        for idx, (cs, t) in enumerate(self.gates):
            if not 0 <= t < n:
                raise CircuitError(f"gate {idx}: target {t} out of range")
            prev = -1
            for c in cs:
                if not 0 <= c < n:
                    raise CircuitError(f"gate {idx}: control {c} out of range")
                if c == t:
                    raise CircuitError(f"gate {idx}: target {t} is also a control")
                if c <= prev:
                    raise CircuitError(f"gate {idx}: controls not sorted/distinct")
                prev = c
        if self.slice_tags is not None and len(self.slice_tags) != len(self.gates):
            raise CircuitError(
                f"slice tags cover {len(self.slice_tags)} gates, circuit has {len(self.gates)}"
            )

    # -- dunder --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.gates)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.roles == other.roles
            and self.gates == other.gates
        )

    def __repr__(self) -> str:
        name = self.meta.get("name", "")
        tag = f" {name!r}" if name else ""
        return f"<Circuit{tag}: {self.n_wires} wires, {len(self.gates)} gates>"
