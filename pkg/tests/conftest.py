"""Shared builders for planted instances used across the test modules."""

from __future__ import annotations

import altcycles as ac
from altcycles import BLUE, RED, AltCycle, ColoredMultigraph


def ring(g: ColoredMultigraph, offset: int, half: int, first=BLUE) -> AltCycle:
    """Add an alternating cycle on 2*half consecutive vertices and return it."""
    n = 2 * half
    colors = tuple(first if i % 2 == 0 else first.other for i in range(n))
    for i in range(n):
        g.add_edge(offset + i, offset + (i + 1) % n, colors[i])
    return AltCycle(tuple(range(offset, offset + n)), colors)


def dominate(g: ColoredMultigraph, c1: AltCycle, c2: AltCycle, color) -> None:
    """Plant the full color-domination pattern of c1 over c2.

    Even-position vertices of c1 get `color` internally and toward all of
    c2; odd-position vertices get the other color for both.
    """
    evens, odds = sorted(c1.i_set), sorted(c1.p_set)
    for cls, c in ((evens, color), (odds, color.other)):
        for a, u in enumerate(cls):
            for v in cls[a + 1 :]:
                g.add_edge(u, v, c)
        for u in cls:
            for v in c2.vertices:
                g.add_edge(u, v, c)


def complete_within(g: ColoredMultigraph, cycle: AltCycle, chord_color=BLUE) -> None:
    """Add chords inside one cycle's vertex set until no monochromatic
    2-path there is missing its endpoint edge."""
    verts = sorted(cycle.vertex_set())
    changed = True
    while changed:
        changed = False
        for w in ac.two_m_violations(g):
            if w.x1 in verts and w.x3 in verts and not g.has_edge_any(w.x1, w.x3):
                g.add_edge(w.x1, w.x3, chord_color)
                changed = True


def domination_pair_graph() -> tuple[ColoredMultigraph, AltCycle, AltCycle]:
    """Two disjoint alternating cycles where the first blue-dominates the
    second and no good pair exists; the graph is 2-M-closed."""
    g = ac.empty(10)
    c1 = ring(g, 0, 3)
    c2 = ring(g, 6, 2)
    dominate(g, c1, c2, BLUE)
    complete_within(g, c1)
    complete_within(g, c2)
    assert ac.is_2m_closed(g)
    return g, c1, c2


def triangle_graph(colors) -> tuple[ColoredMultigraph, list[AltCycle]]:
    """Three disjoint alternating cycles with a directed domination
    triangle 0 -> 1 -> 2 -> 0 using the given arc colors."""
    g = ac.empty(14)
    cycles = [ring(g, 0, 2), ring(g, 4, 2), ring(g, 8, 3)]
    dominate(g, cycles[0], cycles[1], colors[0])
    dominate(g, cycles[1], cycles[2], colors[1])
    dominate(g, cycles[2], cycles[0], colors[2])
    for c in cycles:
        complete_within(g, c)
    return g, cycles


def not_color_connected_graph() -> tuple[ColoredMultigraph, list[AltCycle]]:
    """Three cycles with all dominations blue and acyclic (0 beats 1 and 2,
    1 beats 2): 2-M-closed, has a factor, but not color-connected."""
    g = ac.empty(12)
    cycles = [ring(g, 0, 2), ring(g, 4, 2), ring(g, 8, 2)]
    dominate(g, cycles[0], cycles[1], BLUE)
    dominate(g, cycles[0], cycles[2], BLUE)
    dominate(g, cycles[1], cycles[2], BLUE)
    for c in cycles:
        complete_within(g, c)
    assert ac.is_2m_closed(g)
    return g, cycles


def small_corpus(count: int, sizes=range(4, 9), seed0: int = 0):
    """Deterministic mix of complete-random and closed-up random graphs."""
    out = []
    seed = seed0
    while len(out) < count:
        for n in sizes:
            if len(out) >= count:
                break
            if seed % 2 == 0:
                out.append(ac.gen_complete(n, seed))
            else:
                out.append(ac.closure_2m(ac.gen_random(n, seed, 0.35), seed))
            seed += 1
    return out
