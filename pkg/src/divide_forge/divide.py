"""Divides: systems of immersed circles as 4-valent maps.

A divide is a generic immersion of finitely many circles in a closed
oriented surface.  Combinatorially that is a :class:`HalfEdgeMap` whose
vertices (the double points) all have degree 4, together with a count of
vertex-free embedded loops.  The only connected vertex-free divide is the
single loop on the sphere, so ``free_loops`` is normally 0 or 1; larger
counts stay constructible so that validation can report them as
disconnected rather than refuse to look at them.

Rotation positions at a double point are counterclockwise.  The two
strands through a double point occupy positions {0, 2} and {1, 3}, which
is all the go-straight rule needs.

Complementary regions are the faces of the map.  Since a rotation system
is by definition a cellular embedding, the regions are disks by
representation; configurations with non-disk regions simply cannot be
written down in this encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
import struct

from .errors import NotAdmissible, NotBipartite
from .surface_map import HalfEdgeMap, canonical_form
from .surface_map import _cycles_of

WHITE = 0
BLACK = 1


class Divide:
    """A 4-valent map plus vertex-free loops.  Circle tracing is cached."""

    __slots__ = ("map", "free_loops", "_circles", "_circle_of")

    def __init__(self, map: HalfEdgeMap, free_loops: int = 0):
        for cycle in map.rotations:
            if len(cycle) != 4:
                raise ValueError(
                    f"double points must have degree 4, found degree {len(cycle)}"
                )
        free_loops = int(free_loops)
        if free_loops < 0:
            raise ValueError("free_loops must be nonnegative")
        self.map = map
        self.free_loops = free_loops
        self._circles: tuple[tuple[int, ...], ...] | None = None
        self._circle_of: list[int] | None = None

    @property
    def v(self) -> int:
        """Number of double points."""
        return self.map.num_vertices

    @property
    def c(self) -> int:
        """Number of circles, free loops included."""
        return len(trace_circles(self))

    def circle_of(self, dart: int) -> int:
        """Index of the circle running through ``dart``."""
        trace_circles(self)
        assert self._circle_of is not None
        return self._circle_of[dart]

    def relabeled(self, perm) -> "Divide":
        return Divide(self.map.relabeled(perm), self.free_loops)

    def canonical_form(self) -> bytes:
        """Free-loop count followed by the map's canonical form; equal
        bytes iff the divides are homeomorphic (reflections included)."""
        return struct.pack(">H", self.free_loops) + canonical_form(self.map)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Divide(v={self.v}, free_loops={self.free_loops})"


def trace_circles(divide: Divide) -> tuple[tuple[int, ...], ...]:
    """The circles of the divide as dart cycles of the go-straight rule.

    From dart d the strand crosses its edge and leaves the far double
    point two rotation steps later.  Orbits come in reversal pairs (apply
    the pairing to any dart); each pair is one circle, reported as the
    orbit that appears first.  A strand retracing itself would cover both
    directions in one orbit and counts once.  Free loops are appended as
    empty cycles.
    """
    if divide._circles is not None:
        return divide._circles
    m = divide.map
    n = m.dart_count
    step = [m.succ(m.succ(m.pair(d))) for d in range(n)]
    orbits = _cycles_of(step)
    orbit_of = {}
    for i, orbit in enumerate(orbits):
        for d in orbit:
            orbit_of[d] = i
    circles: list[tuple[int, ...]] = []
    circle_of = [-1] * n
    taken = [False] * len(orbits)
    for i, orbit in enumerate(orbits):
        if taken[i]:
            continue
        j = orbit_of[m.pair(orbit[0])]
        taken[i] = taken[j] = True
        index = len(circles)
        circles.append(orbit)
        for d in orbits[i]:
            circle_of[d] = index
        for d in orbits[j]:
            circle_of[d] = index
    circles.extend(() for _ in range(divide.free_loops))
    divide._circles = tuple(circles)
    divide._circle_of = circle_of
    return divide._circles


@dataclass(frozen=True)
class Coloring:
    """Checkerboard coloring of the complementary regions.

    ``colors[i]`` colors face ``i`` of the underlying map (0 white,
    1 black).  Each free loop bounds two disks of its own; ``loop_disks``
    lists their (outside, inside) colors.
    """

    colors: tuple[int, ...]
    loop_disks: tuple[tuple[int, int], ...] = ()

    def faces_of_color(self, color: int) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.colors) if c == color)

    def swapped(self) -> "Coloring":
        return Coloring(
            tuple(c ^ 1 for c in self.colors),
            tuple((o ^ 1, i ^ 1) for o, i in self.loop_disks),
        )


def checkerboard(divide: Divide, swap: bool = False) -> Coloring:
    """Two-color the regions so the sides of every edge differ.

    Tie-break: the face containing the smallest dart is white (applied
    per component if the map is disconnected); a free loop gets a white
    outside and a black inside.  ``swap=True`` flips every color, giving
    the only other coloring.

    Raises :class:`NotBipartite` when the face-adjacency graph has an odd
    cycle, i.e. the divide is not checkerboard-colorable.
    """
    m = divide.map
    faces = m.faces()
    face_of = m.face_of()
    colors = [-1] * len(faces)
    for start in range(len(faces)):
        if colors[start] >= 0:
            continue
        colors[start] = WHITE
        stack = [start]
        while stack:
            f = stack.pop()
            for d in faces[f]:
                g = face_of[m.pair(d)]
                if colors[g] < 0:
                    colors[g] = colors[f] ^ 1
                    stack.append(g)
                elif colors[g] == colors[f]:
                    raise NotBipartite(
                        f"face {f} and face {g} meet across edge"
                        f" {{{d}, {m.pair(d)}}} but would share a color"
                    )
    coloring = Coloring(
        tuple(colors), tuple((WHITE, BLACK) for _ in range(divide.free_loops))
    )
    return coloring.swapped() if swap else coloring


@dataclass(frozen=True)
class AdmissibilityReport:
    """Per-axiom verdicts; ``admissible`` iff all three hold.

    ``faces_are_disks`` is guaranteed by the cellular representation and
    recorded for completeness.
    """

    connected: bool
    faces_are_disks: bool
    colorable: bool
    failures: tuple[str, ...] = ()

    @property
    def admissible(self) -> bool:
        return self.connected and self.faces_are_disks and self.colorable


def validate_admissible(divide: Divide) -> AdmissibilityReport:
    """Check connectedness, disk regions, colorability; never raises."""
    failures = []
    if divide.v == 0:
        connected = divide.free_loops == 1
        if divide.free_loops == 0:
            failures.append("empty divide: no circles at all")
        elif divide.free_loops > 1:
            failures.append(f"{divide.free_loops} free loops are disconnected")
    else:
        connected = divide.map.is_connected() and divide.free_loops == 0
        if not divide.map.is_connected():
            parts = len(divide.map.connected_components())
            failures.append(f"underlying graph has {parts} components")
        if divide.free_loops:
            failures.append("free loops next to double points are disconnected")
    try:
        checkerboard(divide)
        colorable = True
    except NotBipartite as err:
        colorable = False
        failures.append(f"not checkerboard-colorable: {err}")
    return AdmissibilityReport(connected, True, colorable, tuple(failures))


def require_admissible(divide: Divide) -> AdmissibilityReport:
    report = validate_admissible(divide)
    if not report.admissible:
        raise NotAdmissible("; ".join(report.failures) or "divide is not admissible")
    return report


@dataclass(frozen=True)
class DualGraph:
    """One vertex per circle, one edge per double point (loops allowed)."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def degrees(self) -> tuple[int, ...]:
        """Double points on each circle counted with multiplicity."""
        deg = [0] * self.num_vertices
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)


def dual_graph(divide: Divide) -> DualGraph:
    """The circles-and-double-points multigraph.

    Meaningful for admissible divides but computed for any: double point
    i joins the circles of the strands at rotation positions 0 and 1.
    """
    trace_circles(divide)
    assert divide._circle_of is not None
    edges = []
    for cycle in divide.map.rotations:
        a = divide._circle_of[cycle[0]]
        b = divide._circle_of[cycle[1]]
        edges.append((a, b) if a <= b else (b, a))
    return DualGraph(divide.c, tuple(edges))
