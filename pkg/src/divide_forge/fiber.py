"""The page of the open book as an explicit ribbon surface.

Every double point of the divide contributes a roundabout (an annulus)
and every arc between double points contributes a band joining two
roundabouts.  The surface is encoded by its trivalent spine: one spine
vertex p_x per divide dart x, carrying three fatgraph darts

    band end   b(x) = 3x
    core out   t(x) = 3x + 1
    core in    u(x) = 3x + 2

Core arcs t(x) -- u(sigma x) run inside the roundabout from one band
foot to the next, closing up into the roundabout circle; band edges
b(x) -- b(alpha x) run through the divide's arcs.  Band feet alternate
between the two boundary circles of the roundabout: a dart at an even
rotation position attaches on one side, at an odd position on the other.
In spine terms the alternation flips the local rotation,

    p_x rotation = (b, t, u) at even positions, (b, u, t) at odd ones,

and that single sign choice is what makes the traced boundary close up
into 2c(P) circles.  Boundary tracing and the Euler count V - E reuse
the face rule of :mod:`divide_forge.surface_map`.

The vertex-free loop needs no roundabouts: its page is a bare annulus,
encoded as a single loop edge.

Vanishing cycles are closed dart-paths on the spine: the core circle of
each roundabout (one beta per double point), and one curve per region
running through its bands and across the adjacent roundabouts (alphas
for white regions, gammas for black).  Intersection numbers are counted
in the band picture: traversals of an edge run parallel, so curves cross
only inside spine-vertex disks, where two chords cross iff their
endpoints interleave along the disk boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .divide import Coloring, Divide, WHITE, BLACK, checkerboard, require_admissible
from .errors import BasisMismatch
from .surface_map import HalfEdgeMap

__all__ = [
    "FiberComplex",
    "VanishingCycleSet",
    "MonodromyWord",
    "build_fiber",
    "vanishing_cycles",
    "monodromy_word",
    "intersection_matrix",
    "homological_monodromy",
    "homology_basis",
    "cycle_coordinates",
]


def band_dart(x: int) -> int:
    return 3 * x


def core_out_dart(x: int) -> int:
    return 3 * x + 1


def core_in_dart(x: int) -> int:
    return 3 * x + 2


class FiberComplex:
    """Ribbon surface with traced boundary; immutable once built."""

    __slots__ = ("divide", "coloring", "graph", "roundabouts", "bands", "boundary_cycles", "euler_char", "_basis")

    def __init__(self, divide, coloring, graph, roundabouts, bands, boundary_cycles, euler_char):
        self.divide = divide
        self.coloring = coloring
        self.graph = graph
        self.roundabouts = roundabouts
        self.bands = bands
        self.boundary_cycles = boundary_cycles
        self.euler_char = euler_char
        self._basis = None

    @property
    def num_boundary(self) -> int:
        return len(self.boundary_cycles)

    @property
    def genus(self) -> int:
        """Genus of the page, from chi = 2 - 2h - (boundary count)."""
        return (2 - self.euler_char - self.num_boundary) // 2

    def __repr__(self) -> str:  # pragma: no cover
        return (
            f"FiberComplex(chi={self.euler_char}, boundary={self.num_boundary},"
            f" genus={self.genus})"
        )


def _spine(divide: Divide) -> HalfEdgeMap:
    m = divide.map
    n = m.dart_count
    side = [0] * n
    for cycle in m.rotations:
        for pos, d in enumerate(cycle):
            side[d] = pos & 1
    rotations = []
    for x in range(n):
        if side[x] == 0:
            rotations.append((3 * x, 3 * x + 1, 3 * x + 2))
        else:
            rotations.append((3 * x, 3 * x + 2, 3 * x + 1))
    pairing = [0] * (3 * n)
    for x in range(n):
        pairing[3 * x] = 3 * m.pair(x)
        pairing[3 * x + 1] = 3 * m.succ(x) + 2
        pairing[3 * m.succ(x) + 2] = 3 * x + 1
    return HalfEdgeMap(rotations, pairing)


def build_fiber(divide: Divide, coloring: Coloring | None = None) -> FiberComplex:
    """Assemble roundabouts and bands into the page of the open book.

    Raises :class:`NotAdmissible` for divides that carry no open book.
    For admissible input the traced boundary has 2c(P) components and
    the Euler characteristic is -2v(P); tests and the census re-verify
    both against the closed formulas.
    """
    require_admissible(divide)
    if coloring is None:
        coloring = checkerboard(divide)
    if divide.v == 0:
        graph = HalfEdgeMap([[0, 1]])
        return FiberComplex(divide, coloring, graph, (), (), graph.faces(), 0)
    graph = _spine(divide)
    m = divide.map
    bands = tuple((x, m.pair(x)) for x in range(m.dart_count) if x < m.pair(x))
    return FiberComplex(
        divide,
        coloring,
        graph,
        m.rotations,
        bands,
        graph.faces(),
        graph.num_vertices - graph.num_edges,
    )


@dataclass(frozen=True, eq=False)
class VanishingCycleSet:
    """Ordered vanishing cycles as closed dart-paths on the spine.

    A path (e_0, ..., e_{m-1}) leaves the vertex of e_j through e_j and
    arrives at the vertex of its pair.  Order: alphas (white regions),
    then betas (roundabout cores), then gammas (black regions).
    """

    fiber: FiberComplex
    alphas: tuple[tuple[int, ...], ...]
    betas: tuple[tuple[int, ...], ...]
    gammas: tuple[tuple[int, ...], ...]

    @property
    def m0(self) -> int:
        return len(self.alphas)

    @property
    def m1(self) -> int:
        return len(self.betas)

    @property
    def m2(self) -> int:
        return len(self.gammas)

    @property
    def ordered(self) -> tuple[tuple[int, ...], ...]:
        return self.alphas + self.betas + self.gammas


def vanishing_cycles(divide: Divide, coloring: Coloring | None = None) -> VanishingCycleSet:
    """The ordered cycles of the Lefschetz pencil carried by the divide.

    The region curve of a face (d_0, d_1, ...) runs through the band of
    each boundary arc and across one core arc of the roundabout at each
    corner: (b(d_0), t(alpha d_0), b(d_1), t(alpha d_1), ...).  For the
    vertex-free loop both region curves are the annulus core.
    """
    fiber = build_fiber(divide, coloring)
    if divide.v == 0:
        core = (0,)
        return VanishingCycleSet(fiber, (core,), (), (core,))
    m = divide.map
    colors = fiber.coloring.colors

    def region_curve(cycle: tuple[int, ...]) -> tuple[int, ...]:
        path = []
        for d in cycle:
            path.append(3 * d)
            path.append(3 * m.pair(d) + 1)
        return tuple(path)

    faces = m.faces()
    alphas = tuple(region_curve(faces[i]) for i in range(len(faces)) if colors[i] == WHITE)
    gammas = tuple(region_curve(faces[i]) for i in range(len(faces)) if colors[i] == BLACK)
    betas = tuple(
        (3 * c[0] + 1, 3 * c[1] + 1, 3 * c[2] + 1, 3 * c[3] + 1) for c in m.rotations
    )
    return VanishingCycleSet(fiber, alphas, betas, gammas)


@dataclass(frozen=True, eq=False)
class MonodromyWord:
    """Dehn twist word: (cycle index into cycles.ordered, sign) letters,
    first letter applied first."""

    cycles: VanishingCycleSet
    letters: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.letters)


def monodromy_word(divide: Divide, negated: bool = False) -> MonodromyWord:
    """Positive twists along the ordered vanishing cycles.

    ``negated=True`` formally flips every sign, the mirror convention on
    the unit tangent (rather than cotangent) bundle.
    """
    cycles = vanishing_cycles(divide)
    sign = -1 if negated else 1
    letters = tuple((i, sign) for i in range(len(cycles.ordered)))
    return MonodromyWord(cycles, letters)


def _algebraic_intersections(graph: HalfEdgeMap, paths) -> np.ndarray:
    """Pairwise algebraic intersection numbers of closed dart-paths.

    Traversals of one edge are laid out parallel (slot per traversal,
    reversed at the higher-numbered end so the ribbon stays untwisted),
    hence crossings happen only inside vertex disks.  Two chords cross
    iff their endpoints interleave along the disk boundary; the sign is
    +1 when the boundary reads (x in, y in, x out, y out)
    counterclockwise.  The total is representative-independent.
    """
    slots: dict[tuple[int, int], int] = {}
    per_edge: dict[int, int] = {}
    for i, p in enumerate(paths):
        for j, e in enumerate(p):
            lo = min(e, graph.pair(e))
            slots[(i, j)] = per_edge.get(lo, 0)
            per_edge[lo] = per_edge.get(lo, 0) + 1

    def position(dart: int, slot: int) -> int:
        count = per_edge[min(dart, graph.pair(dart))]
        return slot if dart < graph.pair(dart) else count - 1 - slot

    chords_at: dict[int, list] = {}
    for i, p in enumerate(paths):
        length = len(p)
        for j, e in enumerate(p):
            prev = p[j - 1]
            e_in = graph.pair(prev)
            if graph.vertex_of(e_in) != graph.vertex_of(e):
                raise ValueError("dart sequence is not a closed path")
            entry = (e_in, position(e_in, slots[(i, (j - 1) % length)]))
            exit_ = (e, position(e, slots[(i, j)]))
            chords_at.setdefault(graph.vertex_of(e), []).append((i, entry, exit_))

    result = np.zeros((len(paths), len(paths)), dtype=np.int64)
    for vertex, chords in chords_at.items():
        index: dict[tuple[int, int], int] = {}
        total = 0
        for d in graph.rotations[vertex]:
            for q in range(per_edge.get(min(d, graph.pair(d)), 0)):
                index[(d, q)] = total
                total += 1
        for (i, a_in, a_out), (k, b_in, b_out) in combinations(chords, 2):
            if i == k:
                continue
            xi, xo = index[a_in], index[a_out]
            yi, yo = index[b_in], index[b_out]
            span = (xo - xi) % total
            side_in = (yi - xi) % total < span
            side_out = (yo - xi) % total < span
            if side_in != side_out:
                sign = 1 if side_in else -1
                result[i, k] += sign
                result[k, i] -= sign
    return result


def intersection_matrix(cycles: VanishingCycleSet) -> np.ndarray:
    """Antisymmetric matrix of algebraic intersections of the ordered
    vanishing cycles."""
    return _algebraic_intersections(cycles.fiber.graph, cycles.ordered)


def _basis_data(fiber: FiberComplex):
    if fiber._basis is not None:
        return fiber._basis
    graph = fiber.graph
    num_v = graph.num_vertices
    visited = [False] * num_v
    up_dart = [-1] * num_v
    tree_lo: set[int] = set()
    queue = [0]
    visited[0] = True
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for d in graph.rotations[v]:
            w = graph.vertex_of(graph.pair(d))
            if not visited[w]:
                visited[w] = True
                up_dart[w] = graph.pair(d)
                tree_lo.add(min(d, graph.pair(d)))
                queue.append(w)
    lows = sorted({min(d, graph.pair(d)) for d in range(graph.dart_count)})
    nontree = [lo for lo in lows if lo not in tree_lo]
    nontree_index = {lo: i for i, lo in enumerate(nontree)}

    def walk_up(v: int) -> list[int]:
        darts = []
        while up_dart[v] != -1:
            darts.append(up_dart[v])
            v = graph.vertex_of(graph.pair(up_dart[v]))
        return darts

    basis_paths = []
    for lo in nontree:
        hi = graph.pair(lo)
        up_from = walk_up(graph.vertex_of(hi))
        up_to = walk_up(graph.vertex_of(lo))
        while up_from and up_to and up_from[-1] == up_to[-1]:
            up_from.pop()
            up_to.pop()
        down_to = [graph.pair(d) for d in reversed(up_to)]
        basis_paths.append((lo, *up_from, *down_to))
    form = _algebraic_intersections(graph, basis_paths)
    fiber._basis = (tuple(basis_paths), nontree_index, form)
    return fiber._basis


def homology_basis(fiber: FiberComplex) -> tuple[tuple[tuple[int, ...], ...], np.ndarray]:
    """Deterministic cycle basis of H1 of the page and its intersection
    form J.  One cycle per non-tree edge of a breadth-first spanning
    tree; rank = 2 h + k - 1 = 2 v + 1 for v >= 1."""
    paths, _, form = _basis_data(fiber)
    return paths, form


def cycle_coordinates(fiber: FiberComplex, path: tuple[int, ...]) -> np.ndarray:
    """Coordinates of a closed path in the homology basis: signed counts
    of its non-tree edge traversals."""
    graph = fiber.graph
    _, nontree_index, _ = _basis_data(fiber)
    vec = np.zeros(len(nontree_index), dtype=np.int64)
    for e in path:
        lo = min(e, graph.pair(e))
        idx = nontree_index.get(lo)
        if idx is not None:
            vec[idx] += 1 if e == lo else -1
    return vec


def homological_monodromy(fiber: FiberComplex, word: MonodromyWord) -> np.ndarray:
    """Action of the twist word on H1 of the page.

    A twist along c acts as the transvection x -> x + sign * <x, c> c;
    the product is taken in word order (first letter acts first).  The
    result preserves the intersection form: M.T @ J @ M = J.
    """
    if word.cycles.fiber is not fiber:
        raise BasisMismatch("word was built on a different fiber")
    _, _, form = _basis_data(fiber)
    rank = form.shape[0]
    matrix = np.eye(rank, dtype=np.int64)
    ordered = word.cycles.ordered
    for index, sign in word.letters:
        c = cycle_coordinates(fiber, ordered[index])
        twist = np.eye(rank, dtype=np.int64) + sign * np.outer(c, form @ c)
        matrix = twist @ matrix
    return matrix
