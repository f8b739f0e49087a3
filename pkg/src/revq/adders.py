"""In-place reversible adders assembled from ladder subcircuits.

All adders compute |a>|b>|z> -> |a>|a+b mod 2^n>|z XOR carry_n> on the
wire layout a_0..a_{n-1}, b_0..b_{n-1}, z, then any ancillas, LSB first.

Two structures are provided.  The *original* structure keeps one carry
wire per bit position (n-1 ancillas plus the carry-out wire) and runs a
Toffoli ladder over that carry register twice.  The *optimized*
structure stores the running carries in the ``a`` register itself and
needs no ancillas of its own; it sandwiches an inverted Toffoli ladder
over (a, z) between CNOT-ladder prefix sweeps.

Either structure accepts any of the three Toffoli-ladder implementations
(linear / polylog / carrylog), giving six adders.  The source key in
``Circuit.meta`` names the known construction a combination coincides
with (VBE96, DKR06, TTK10, RV25), with "new" for the two combinations
that match no published adder.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, CircuitError, Gate, WireRole
from .ladders import (
    ladder1_linear,
    ladder1_log,
    ladder2_carrylog,
    ladder2_linear,
    ladder2_polylog,
)

STRUCTURES = ("original", "optimized")
LADDERS = ("linear", "polylog", "carrylog")

SOURCE_KEYS = {
    ("original", "linear"): "~VBE96",
    ("original", "polylog"): "new",
    ("original", "carrylog"): "DKR06",
    ("optimized", "linear"): "~TTK10",
    ("optimized", "polylog"): "RV25",
    ("optimized", "carrylog"): "new",
}


@dataclass(frozen=True)
class AdderConfig:
    """One cell of the structure x ladder grid at operand width ``n``."""

    n: int
    structure: str
    ladder: str

    def __post_init__(self):
        if self.n < 1:
            raise CircuitError("operand width must be at least 1")
        if self.structure not in STRUCTURES:
            raise CircuitError(f"unknown structure {self.structure!r}")
        if self.ladder not in LADDERS:
            raise CircuitError(f"unknown ladder {self.ladder!r}")

    @property
    def source(self) -> str:
        return SOURCE_KEYS[(self.structure, self.ladder)]

    def describe(self) -> str:
        return f"{self.structure}+{self.ladder}"


# -- reference semantics --------------------------------------------------


def add_values(n: int, a: int, b: int, z: int) -> tuple[int, int, int]:
    """Expected adder action: (a, (a+b) mod 2^n, z XOR bit n of a+b)."""
    s = a + b
    return a, s & ((1 << n) - 1), z ^ ((s >> n) & 1)


def adder_oracle(n: int, n_wires: int):
    """(scalar, batch) reference pair for the standard adder wire layout.

    The scalar form goes through Python integer addition; the batch form
    ripples a lane-parallel majority carry over the packed words.  The
    two are independent routes to the same function.
    """

    def scalar(bits):
        a = sum(bits[i] << i for i in range(n))
        b = sum(bits[n + i] << i for i in range(n))
        _, s, z_out = add_values(n, a, b, bits[2 * n])
        out = list(bits)
        for i in range(n):
            out[n + i] = (s >> i) & 1
        out[2 * n] = z_out
        return out

    def batch(words, n_lanes):
        out = list(words)
        carry = 0
        for i in range(n):
            ai, bi = words[i], words[n + i]
            out[n + i] = ai ^ bi ^ carry
            carry = (ai & bi) | (carry & (ai ^ bi))
        out[2 * n] = words[2 * n] ^ carry
        return out

    return scalar, batch


# -- ladder dispatch ------------------------------------------------------


def _ladder2(kind: str, rungs: int) -> tuple[Circuit | None, int]:
    """m-rung Toffoli ladder subcircuit and its ancilla demand."""
    if rungs <= 0:
        return None, 0
    if kind == "linear":
        return ladder2_linear(rungs), 0
    if kind == "polylog":
        return ladder2_polylog(rungs), 0
    if kind == "carrylog":
        sub = ladder2_carrylog(rungs + 1)
        return sub, len(sub.ancillas())
    raise CircuitError(f"unknown ladder {kind!r}")


def _ladder1(kind: str, rungs: int) -> Circuit | None:
    if rungs <= 0:
        return None
    return ladder1_linear(rungs) if kind == "linear" else ladder1_log(rungs)


def _adder_specs(n: int, n_bank: int) -> list[tuple[str, WireRole]]:
    return (
        [(f"a{i}", WireRole.DATA) for i in range(n)]
        + [(f"b{i}", WireRole.DATA) for i in range(n)]
        + [("z", WireRole.CARRY_OUT)]
        + [(f"c{i}", WireRole.ANCILLA) for i in range(n_bank)]
    )


def _adder_width_one(meta: dict[str, str]) -> Circuit:
    # both structures collapse to the plain half-adder cell at n=1
    circ = Circuit(_adder_specs(1, 0), meta=meta)
    circ.gates.append(Gate((0, 1), 2))
    circ.gates.append(Gate((0,), 1))
    circ.slice_tags = [1, 1]
    return circ


# -- the two structures ---------------------------------------------------


def build_adder_original(n: int, ladder: str) -> Circuit:
    """Adder with a carry register: n-1 ancillas plus the carry-out wire.

    Carry wires c_0..c_{n-2} and z form the ladder chain.  Generate bits
    are computed into the chain, an inverted Toffoli ladder ripples the
    carries, sums are read off, and a second (shorter) ladder plus a
    mirror sweep restore every carry wire to 0.
    """
    meta = {
        "name": f"adder-original-{ladder}({n})",
        "kind": "adder",
        "structure": "original",
        "ladder": ladder,
        "n": str(n),
        "source": SOURCE_KEYS[("original", ladder)],
    }
    if n == 1:
        return _adder_width_one(meta)
    sub2, need2 = _ladder2(ladder, n - 1)
    sub4, need4 = _ladder2(ladder, n - 2)
    n_bank = max(need2, need4)
    circ = Circuit(_adder_specs(n, (n - 1) + n_bank), meta=meta)
    z = 2 * n
    carry = list(range(2 * n + 1, 3 * n)) + [z]  # chain c_0..c_{n-2}, z on top
    bank = list(range(3 * n, 3 * n + n_bank))
    gates = circ.gates
    tags: list[int] = []

    def mark(block: int) -> None:
        tags.extend([block] * (len(gates) - len(tags)))

    for i in range(n):
        gates.append(Gate((i, n + i), carry[i]))
        gates.append(Gate((i,), n + i))
    mark(1)
    if sub2 is not None:
        circ.embed(sub2.dagger(), carry + [n + 1 + i for i in range(n - 1)] + bank[:need2])
    mark(2)
    for i in range(n - 1):
        gates.append(Gate((carry[i],), n + 1 + i))
        gates.append(Gate((i,), n + i))
        gates.append(Gate((), n + i))
    mark(3)
    if sub4 is not None:
        circ.embed(sub4, carry[: n - 1] + [n + 1 + i for i in range(n - 2)] + bank[:need4])
    mark(4)
    for i in range(n - 1):
        gates.append(Gate((i,), n + i))
        gates.append(Gate((i, n + i), carry[i]))
        gates.append(Gate((), n + i))
    mark(5)
    circ.slice_tags = tags
    return circ


def build_adder_optimized(n: int, ladder: str) -> Circuit:
    """Adder that carries in the ``a`` register; no ancillas of its own.

    Only the carrylog ladder brings workspace: the bank is sized for the
    larger of the two embedded ladders and reused, since each leaves it
    clean.  With the linear ladder the CNOT-ladder sweeps are kept naive
    so the whole adder stays a pure ripple chain (2n-1 Toffolis in a
    single dependency line).
    """
    meta = {
        "name": f"adder-optimized-{ladder}({n})",
        "kind": "adder",
        "structure": "optimized",
        "ladder": ladder,
        "n": str(n),
        "source": SOURCE_KEYS[("optimized", ladder)],
    }
    if n == 1:
        return _adder_width_one(meta)
    sub3, need3 = _ladder2(ladder, n)
    sub5, need5 = _ladder2(ladder, n - 1)
    n_bank = max(need3, need5)
    circ = Circuit(_adder_specs(n, n_bank), meta=meta)
    z = 2 * n
    bank = list(range(2 * n + 1, 2 * n + 1 + n_bank))
    l1_kind = "linear" if ladder == "linear" else "log"
    gates = circ.gates
    tags: list[int] = []

    def mark(block: int) -> None:
        tags.extend([block] * (len(gates) - len(tags)))

    for i in range(1, n):
        gates.append(Gate((i,), n + i))
    mark(1)
    sub = _ladder1(l1_kind, n - 1)  # prefix-parity over a_1..a_{n-1}, z
    if sub is not None:
        circ.embed(sub, list(range(1, n)) + [z])
    mark(2)
    if sub3 is not None:  # inverted carry ladder over the chain (a, z)
        circ.embed(
            sub3.dagger(),
            list(range(n)) + [z] + [n + i for i in range(n)] + bank[:need3],
        )
    mark(3)
    for i in range(1, n):
        gates.append(Gate((i,), n + i))
    for i in range(1, n - 1):
        gates.append(Gate((), n + i))
    mark(4)
    if sub5 is not None:  # forward ladder over a restores the carries
        circ.embed(sub5, list(range(n)) + [n + i for i in range(n - 1)] + bank[:need5])
    mark(5)
    sub = _ladder1(l1_kind, n - 2)
    if sub is not None:
        circ.embed(sub.dagger(), list(range(1, n)))
    mark(6)
    for i in range(n):
        gates.append(Gate((i,), n + i))
    for i in range(1, n - 1):
        gates.append(Gate((), n + i))
    mark(7)
    circ.slice_tags = tags
    return circ


def build_adder(cfg: AdderConfig) -> Circuit:
    """Build the adder for one grid cell; ``meta['source']`` names the cell."""
    if cfg.structure == "original":
        return build_adder_original(cfg.n, cfg.ladder)
    return build_adder_optimized(cfg.n, cfg.ladder)


def all_configs(n: int) -> list[AdderConfig]:
    return [AdderConfig(n, s, lad) for s in STRUCTURES for lad in LADDERS]


def verify_adder(cfg: AdderConfig, *, mode: str = "exhaustive", samples: int = 1000, seed: int = 0):
    """Equivalence-check one adder against the arithmetic reference."""
    from .sim import check_equivalence

    circ = build_adder(cfg)
    scalar, batch = adder_oracle(cfg.n, circ.n_wires)
    return check_equivalence(
        circ, scalar, mode=mode, samples=samples, seed=seed, oracle_batch=batch
    )


# -- circuit identities ---------------------------------------------------


def identity_fixtures() -> list[tuple[str, Circuit, Circuit]]:
    """Three equal-action circuit pairs transcribed from the classic adders.

    * ``vbe-carry-block``: the 4-wire carry subroutine of the VBE96
      ripple adder against the rewritten block the original structure
      uses in its place.
    * ``ttk-carry-block``: the 3-wire carry step of the TTK10 adder
      against the rewritten block the optimized structure uses.
    * ``toffoli-pair-to-mcx``: compute/uncompute of a pair product
      around a Toffoli, against the single MCX that absorbs it.  The
      shared middle wire is an ancilla: the two act identically exactly
      when it starts at 0, which is how every use in the lookahead
      ladder encounters it.
    """
    d = WireRole.DATA

    vbe_left = Circuit([("cprev", d), ("a", d), ("b", d), ("c", d)])
    vbe_left.ccx(0, 2, 3)
    vbe_left.cx(1, 2)
    vbe_left.ccx(1, 2, 3)
    vbe_left.cx(1, 2)
    vbe_left.cx(0, 2)
    vbe_right = Circuit([("cprev", d), ("a", d), ("b", d), ("c", d)])
    vbe_right.cx(0, 2)
    vbe_right.cx(1, 2)
    vbe_right.x(2)
    vbe_right.ccx(0, 2, 3)
    vbe_right.cx(1, 2)
    vbe_right.ccx(1, 2, 3)
    vbe_right.x(2)

    ttk_left = Circuit([("a", d), ("b", d), ("anext", d)])
    ttk_left.ccx(0, 1, 2)
    ttk_left.cx(0, 1)
    ttk_right = Circuit([("a", d), ("b", d), ("anext", d)])
    ttk_right.cx(0, 1)
    ttk_right.x(1)
    ttk_right.ccx(0, 1, 2)
    ttk_right.x(1)

    pat_specs = [
        ("w1", d), ("w2", d), ("w3", WireRole.ANCILLA), ("w4", d), ("w5", d)
    ]
    pat_left = Circuit(pat_specs)
    pat_left.ccx(1, 3, 2)
    pat_left.ccx(0, 2, 4)
    pat_left.ccx(1, 3, 2)
    pat_right = Circuit(pat_specs)
    pat_right.mcx((0, 1, 3), 4)

    return [
        ("vbe-carry-block", vbe_left, vbe_right),
        ("ttk-carry-block", ttk_left, ttk_right),
        ("toffoli-pair-to-mcx", pat_left, pat_right),
    ]
