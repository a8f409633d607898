"""Deterministic instance generators: complete colorings, closure
completion, and the 2-NM-closed counterexample family."""
from __future__ import annotations

import random

from .cycles import AltCycle, validate_cycle
from .graph import BLUE, RED, Color, ColoredMultigraph, empty
from .oracles import oracle_hamiltonian
from .predicates import is_2nm_closed, is_color_connected, two_m_violations, two_nm_violations


class ConstructionFailed(Exception):
    """The counterexample construction violated one of its own guarantees."""


def gen_complete(n: int, seed: int) -> ColoredMultigraph:
    """Complete graph, each pair colored uniformly at random from the seed."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    g = empty(n)
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v, BLUE if rng.getrandbits(1) else RED)
    return g


def gen_random(n: int, seed: int, density: float = 0.5) -> ColoredMultigraph:
    """Random 2-edge-colored multigraph: each (pair, color) edge present
    independently with the given probability."""
    rng = random.Random(seed)
    g = empty(n)
    for u in range(n):
        for v in range(u + 1, n):
            for color in (BLUE, RED):
                if rng.random() < density:
                    g.add_edge(u, v, color)
    return g


def closure_2m(
    g: ColoredMultigraph, seed: int = 0, color: str = "random"
) -> ColoredMultigraph:
    """Smallest-violation-first completion to a 2-M-closed supergraph.

    `color` picks the added edge color: 'B', 'R', or 'random' (seed-derived).
    """
    if color not in ("B", "R", "random"):
        raise ValueError(f"bad color policy {color!r}")
    rng = random.Random(seed)
    out = g.copy()
    while True:
        violations = two_m_violations(out)
        if not violations:
            return out
        v = violations[0]
        if color == "random":
            c = BLUE if rng.getrandbits(1) else RED
        else:
            c = Color.from_letter(color)
        out.add_edge(v.x1, v.x3, c)


def counterexample_cycles(k1: int, k2: int) -> tuple[AltCycle, AltCycle]:
    """The two alternating cycles the counterexample family is built on."""

    def ring(offset: int, half: int) -> AltCycle:
        verts = tuple(range(offset, offset + 2 * half))
        cols = tuple(BLUE if i % 2 == 0 else RED for i in range(2 * half))
        return AltCycle(verts, cols)

    return ring(0, k1), ring(2 * k1, k2)


def gen_counterexample(k1: int, k2: int) -> ColoredMultigraph:
    """Color-connected 2-NM-closed graph with a cycle factor but no
    alternating Hamiltonian cycle.

    Two alternating cycles of lengths 2*k1 and 2*k2, glued by four red edges
    across one blue cycle edge of each; red chords complete each cycle to
    2-NM-closure. All four claimed properties are verified before returning.
    """
    if k1 < 2 or k2 < 2:
        raise ValueError("cycle half-lengths must be at least 2")
    c1, c2 = counterexample_cycles(k1, k2)
    n = 2 * (k1 + k2)
    g = empty(n)
    for cycle in (c1, c2):
        m = len(cycle)
        for i in range(m):
            g.add_edge(cycle.vertices[i], cycle.vertices[(i + 1) % m], cycle.colors[i])
    x1, x2 = 0, 1
    y1, y2 = 2 * k1, 2 * k1 + 1
    for u, v in ((x1, y1), (x2, y2), (x1, y2), (x2, y1)):
        g.add_edge(u, v, RED)
    # red chords until 2-NM-closed; the violations stay inside the cycles
    while True:
        violations = two_nm_violations(g)
        if not violations:
            break
        v = violations[0]
        g.add_edge(v.x1, v.x3, RED)

    failures = []
    if not is_2nm_closed(g):
        failures.append("not 2-NM-closed")
    if not is_color_connected(g):
        failures.append("not color-connected")
    if not (validate_cycle(g, c1) and validate_cycle(g, c2)):
        failures.append("factor cycles broken")
    if oracle_hamiltonian(g) is not None:
        failures.append("alternating Hamiltonian cycle exists")
    if failures:
        raise ConstructionFailed("; ".join(failures))
    return g
