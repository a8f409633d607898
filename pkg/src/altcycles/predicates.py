"""Structural predicates: closure conditions, alternating path search,
color-connectivity. All return explicit witnesses on failure."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import BLUE, RED, Color, ColoredMultigraph


@dataclass(frozen=True)
class TwoPath:
    """A 2-path (x1, x2, x3) with edge colors c1 = [x1,x2], c2 = [x2,x3];
    reported with x1 < x3 to avoid orientation duplicates."""

    x1: int
    x2: int
    x3: int
    c1: Color
    c2: Color

    def holds_in(self, g: ColoredMultigraph) -> bool:
        return (
            len({self.x1, self.x2, self.x3}) == 3
            and g.has_edge_color(self.x1, self.x2, self.c1)
            and g.has_edge_color(self.x2, self.x3, self.c2)
        )

    def endpoint_edge_missing(self, g: ColoredMultigraph) -> bool:
        return not g.has_edge_any(self.x1, self.x3)


@dataclass(frozen=True)
class AltPath:
    """A simple alternating path; colors[k] colors edge [vertices[k], vertices[k+1]]."""

    vertices: tuple[int, ...]
    colors: tuple[Color, ...]

    def well_formed(self) -> bool:
        vs = self.vertices
        if len(vs) < 2 or len(set(vs)) != len(vs):
            return False
        if len(self.colors) != len(vs) - 1:
            return False
        return all(a != b for a, b in zip(self.colors, self.colors[1:]))

    def holds_in(self, g: ColoredMultigraph) -> bool:
        return self.well_formed() and all(
            g.has_edge_color(u, v, c)
            for u, v, c in zip(self.vertices, self.vertices[1:], self.colors)
        )


def _two_path(a: int, b: int, c: int, ca: Color, cc: Color) -> TwoPath:
    # normalize so x1 < x3
    if a < c:
        return TwoPath(a, b, c, ca, cc)
    return TwoPath(c, b, a, cc, ca)


def two_m_violations(g: ColoredMultigraph) -> list[TwoPath]:
    """Every monochromatic 2-path whose endpoints have no edge at all."""
    out = []
    for x2 in range(g.n):
        for color in (BLUE, RED):
            nbrs = sorted(g.neighbors_by_color(x2, color))
            for i, x1 in enumerate(nbrs):
                for x3 in nbrs[i + 1 :]:
                    if not g.has_edge_any(x1, x3):
                        out.append(_two_path(x1, x2, x3, color, color))
    out = sorted(set(out), key=lambda p: (p.x1, p.x2, p.x3, p.c1.value))
    return out


def two_nm_violations(g: ColoredMultigraph) -> list[TwoPath]:
    """Every non-monochromatic 2-path whose endpoints have no edge at all."""
    out = []
    for x2 in range(g.n):
        blues = g.neighbors_by_color(x2, BLUE)
        reds = g.neighbors_by_color(x2, RED)
        for x1 in blues:
            for x3 in reds:
                if x1 != x3 and not g.has_edge_any(x1, x3):
                    out.append(_two_path(x1, x2, x3, BLUE, RED))
    out = sorted(set(out), key=lambda p: (p.x1, p.x2, p.x3, p.c1.value))
    return out


def is_2m_closed(g: ColoredMultigraph) -> bool:
    return not two_m_violations(g)


def is_2nm_closed(g: ColoredMultigraph) -> bool:
    return not two_nm_violations(g)


def closed_alternating_witness(
    g: ColoredMultigraph,
) -> tuple[int, int, int, int] | None:
    """First alternating 3-path (x1, x2, x3, x4) with no closing alternating
    4-cycle (x1, y, w, x4, x1), or None if every one closes."""
    for x1 in range(g.n):
        for c1 in (BLUE, RED):
            for x2 in sorted(g.neighbors_by_color(x1, c1)):
                if x2 == x1:
                    continue
                c2 = c1.other
                for x3 in sorted(g.neighbors_by_color(x2, c2)):
                    if x3 in (x1, x2):
                        continue
                    c3 = c2.other
                    for x4 in sorted(g.neighbors_by_color(x3, c3)):
                        if x4 in (x1, x2, x3):
                            continue
                        if not _closes(g, x1, x4):
                            return (x1, x2, x3, x4)
    return None


def _closes(g: ColoredMultigraph, x1: int, x4: int) -> bool:
    # exhaustive search for y, w with (x1, y, w, x4, x1) alternating
    if not g.has_edge_any(x4, x1):
        return False
    for a in (BLUE, RED):
        if not g.has_edge_color(x4, x1, a.other):
            continue
        for y in g.neighbors_by_color(x1, a):
            if y in (x1, x4):
                continue
            for w in g.neighbors_by_color(y, a.other):
                if w in (x1, x4, y):
                    continue
                if g.has_edge_color(w, x4, a):
                    return True
    return False


def is_closed_alternating(g: ColoredMultigraph) -> bool:
    return closed_alternating_witness(g) is None


def exists_alternating_path(
    g: ColoredMultigraph, x: int, y: int, first: Color, last: Color
) -> AltPath | None:
    """Some simple alternating (x, y)-path with the given first and last edge
    colors, or None.

    Colors along an alternating path are forced by the first edge, so the
    search is a DFS over simple paths with the color schedule fixed.
    """
    if x == y:
        raise ValueError("endpoints must differ")
    path = [x]
    on_path = {x}

    def dfs(v: int, need: Color) -> AltPath | None:
        for u in sorted(g.neighbors_by_color(v, need)):
            if u in on_path:
                continue
            if u == y:
                if need is last:
                    cols = tuple(
                        first if k % 2 == 0 else first.other for k in range(len(path))
                    )
                    return AltPath(tuple(path) + (y,), cols)
                continue
            path.append(u)
            on_path.add(u)
            found = dfs(u, need.other)
            if found is not None:
                return found
            path.pop()
            on_path.remove(u)
        return None

    return dfs(x, first)


@dataclass(frozen=True)
class ColorConnectivityWitness:
    """A vertex pair failing color-connectivity, with the per-(first,last)
    path existence table for that pair."""

    x: int
    y: int
    existence: dict[tuple[Color, Color], bool]


def color_connectivity_witness(g: ColoredMultigraph) -> ColorConnectivityWitness | None:
    # a path reversed swaps (first, last), so unordered pairs suffice
    for x in range(g.n):
        for y in range(x + 1, g.n):
            ex = {
                (f, l): exists_alternating_path(g, x, y, f, l) is not None
                for f in Color
                for l in Color
            }
            ok = (ex[(BLUE, BLUE)] and ex[(RED, RED)]) or (
                ex[(BLUE, RED)] and ex[(RED, BLUE)]
            )
            if not ok:
                return ColorConnectivityWitness(x, y, ex)
    return None


def is_color_connected(g: ColoredMultigraph) -> bool:
    return color_connectivity_witness(g) is None
