import random

from revq import Circuit, WireRole


def random_circuit(rng: random.Random, n_wires: int | None = None,
                   n_gates: int | None = None, varied_roles: bool = False) -> Circuit:
    """Seeded random circuit over the full gate set (for metamorphic tests)."""
    if n_wires is None:
        n_wires = rng.randint(3, 12)
    if n_gates is None:
        n_gates = rng.randint(0, 40)
    roles = [WireRole.DATA] * n_wires
    if varied_roles:
        roles = [rng.choice(list(WireRole)) for _ in range(n_wires)]
    circ = Circuit([(f"w{i}", roles[i]) for i in range(n_wires)])
    for _ in range(n_gates):
        arity = min(rng.choice((0, 1, 1, 2, 2, 2, 3, 5)), n_wires - 1)
        wires = rng.sample(range(n_wires), arity + 1)
        circ.append(wires[:-1], wires[-1])
    return circ


def random_bits(rng: random.Random, k: int) -> list[int]:
    return [rng.randint(0, 1) for _ in range(k)]
