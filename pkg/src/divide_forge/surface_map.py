"""Combinatorial maps on closed oriented surfaces.

A map is a pair of permutations acting on darts (half edges) labelled
``0..n-1``:

* ``rotations``: for each vertex, the cyclic counterclockwise order of the
  darts attached to it.  Where a rotation starts is irrelevant.
* ``pairing``: a fixed point free involution matching the two darts of each
  edge.  Files always use the convention ``d <-> d XOR 1``; in memory any
  involution is accepted.

The face permutation sends ``d`` to ``succ(pairing(d))``: cross the edge,
then turn counterclockwise once.  Its orbits are the faces, and
``V - E + F`` gives the Euler characteristic of the closed oriented surface
in which the map embeds cellularly.  Orientability is automatic for
rotation systems.

The same face rule doubles as boundary tracing for ribbon graphs: if the
map data describes the spine of a fattened graph, the orbits of the face
permutation are the boundary circles of the thickening and ``V - E`` is its
Euler characteristic.  The fiber module reuses :func:`faces` this way.

>>> loop = HalfEdgeMap([[0, 1]])
>>> loop.euler_characteristic(), loop.genus()
(2, 0)
>>> torus = HalfEdgeMap([[0, 2, 1, 3]])
>>> len(torus.faces()), torus.genus()
(1, 1)
"""

from __future__ import annotations

import struct
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateDart,
    FixedDart,
    OddCharacteristic,
    UnpairedDart,
)

__all__ = [
    "HalfEdgeMap",
    "build_map",
    "canonical_form",
    "decode_canonical_form",
    "are_homeomorphic",
]


def _cycles_of(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Orbit decomposition of a permutation, each cycle starting at its
    smallest element, cycles ordered by smallest element."""
    n = len(perm)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        d = start
        while not seen[d]:
            seen[d] = True
            cycle.append(d)
            d = perm[d]
        cycles.append(tuple(cycle))
    return tuple(cycles)


class HalfEdgeMap:
    """Immutable rotation system with an explicit edge pairing.

    ``pairing=None`` selects the file convention ``d <-> d XOR 1``.
    """

    __slots__ = ("rotations", "pairing", "dart_count", "_succ", "_pred", "_vertex_of", "_faces")

    def __init__(
        self,
        rotations: Iterable[Iterable[int]],
        pairing: Sequence[int] | None = None,
    ):
        rotations = tuple(tuple(int(d) for d in cycle) for cycle in rotations)
        darts = [d for cycle in rotations for d in cycle]
        n = len(darts)
        seen: set[int] = set()
        for d in darts:
            if d in seen:
                raise DuplicateDart(f"dart {d} appears more than once in the rotations")
            seen.add(d)
        if seen != set(range(n)):
            raise UnpairedDart(
                f"rotations must use dart labels 0..{n - 1} exactly once, got {sorted(seen)[:8]}..."
                if n
                else "rotations must use dart labels 0..n-1 exactly once"
            )

        if pairing is None:
            if n % 2:
                raise UnpairedDart(f"{n} darts cannot be paired into edges")
            pairing = tuple(d ^ 1 for d in range(n))
        else:
            pairing = tuple(int(x) for x in pairing)
            if len(pairing) != n:
                raise UnpairedDart(f"pairing has {len(pairing)} entries for {n} darts")
            for d, e in enumerate(pairing):
                if e < 0 or e >= n:
                    raise UnpairedDart(f"pairing sends dart {d} to {e}, outside 0..{n - 1}")
                if e == d:
                    raise FixedDart(f"dart {d} is paired with itself")
                if pairing[e] != d:
                    raise UnpairedDart(f"pairing is not an involution at dart {d}")

        succ = [0] * n
        pred = [0] * n
        vertex_of = [0] * n
        for vi, cycle in enumerate(rotations):
            k = len(cycle)
            for i, d in enumerate(cycle):
                succ[d] = cycle[(i + 1) % k]
                pred[d] = cycle[(i - 1) % k]
                vertex_of[d] = vi

        self.rotations = rotations
        self.pairing = pairing
        self.dart_count = n
        self._succ = succ
        self._pred = pred
        self._vertex_of = vertex_of
        self._faces: tuple[tuple[int, ...], ...] | None = None

    # -- basic structure -------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return self.dart_count // 2

    def succ(self, d: int) -> int:
        """Next dart counterclockwise around the vertex of ``d``."""
        return self._succ[d]

    def pred(self, d: int) -> int:
        return self._pred[d]

    def pair(self, d: int) -> int:
        return self.pairing[d]

    def vertex_of(self, d: int) -> int:
        return self._vertex_of[d]

    def face_permutation(self, d: int) -> int:
        """The face rule: cross the edge, then turn counterclockwise."""
        return self._succ[self.pairing[d]]

    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of the face permutation, deterministically ordered."""
        if self._faces is None:
            phi = [self._succ[self.pairing[d]] for d in range(self.dart_count)]
            self._faces = _cycles_of(phi)
        return self._faces

    def face_of(self) -> list[int]:
        """Face index of every dart."""
        out = [0] * self.dart_count
        for fi, cycle in enumerate(self.faces()):
            for d in cycle:
                out[d] = fi
        return out

    # -- topology ---------------------------------------------------------

    def connected_components(self) -> list[tuple[int, ...]]:
        """Dart sets of the connected components (orbits of rotation+pairing)."""
        n = self.dart_count
        seen = [False] * n
        components = []
        for start in range(n):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                d = stack.pop()
                comp.append(d)
                for nb in (self._succ[d], self.pairing[d]):
                    if not seen[nb]:
                        seen[nb] = True
                        stack.append(nb)
            components.append(tuple(sorted(comp)))
        return components

    def is_connected(self) -> bool:
        return self.dart_count > 0 and len(self.connected_components()) == 1

    def euler_characteristic(self) -> int:
        """V - E + F of the closed surface; connected maps only."""
        if not self.is_connected():
            raise Disconnected("Euler characteristic needs a nonempty connected map")
        return self.num_vertices - self.num_edges + len(self.faces())

    def genus(self) -> int:
        chi = self.euler_characteristic()
        if (2 - chi) % 2:
            raise OddCharacteristic(f"V - E + F = {chi} is odd; map data is corrupt")
        g = (2 - chi) // 2
        if g < 0:
            raise OddCharacteristic(f"V - E + F = {chi} exceeds 2; map data is corrupt")
        return g

    # -- relabelling ------------------------------------------------------

    def relabeled(self, perm: Sequence[int]) -> "HalfEdgeMap":
        """Map with dart ``d`` renamed ``perm[d]``; same surface."""
        n = self.dart_count
        if sorted(perm) != list(range(n)):
            raise UnpairedDart("relabeling must be a permutation of 0..n-1")
        rotations = [[perm[d] for d in cycle] for cycle in self.rotations]
        pairing = [0] * n
        for d in range(n):
            pairing[perm[d]] = perm[self.pairing[d]]
        return HalfEdgeMap(rotations, pairing)

    def reflected(self) -> "HalfEdgeMap":
        """Mirror image: every rotation reversed."""
        return HalfEdgeMap([tuple(reversed(c)) for c in self.rotations], self.pairing)

    def __repr__(self) -> str:  # pragma: no cover
        return f"HalfEdgeMap({list(map(list, self.rotations))!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HalfEdgeMap):
            return NotImplemented
        return self.rotations == other.rotations and self.pairing == other.pairing

    def __hash__(self) -> int:
        return hash((self.rotations, self.pairing))


def build_map(
    rotations: Iterable[Iterable[int]],
    pairing: Sequence[int] | None = None,
) -> HalfEdgeMap:
    """Validate and build a :class:`HalfEdgeMap`.

    Raises :class:`DuplicateDart`, :class:`UnpairedDart` or
    :class:`FixedDart` on malformed input.
    """
    return HalfEdgeMap(rotations, pairing)


def _rooted_encoding(succ: Sequence[int], pairing: Sequence[int], root: int) -> tuple[int, ...]:
    """Canonical rooted relabelling: BFS from ``root`` exploring rotation
    successor before pairing, then the flattened (succ, pairing) table in the
    new labels.  Isomorphic rooted maps give equal tuples."""
    n = len(succ)
    new = [-1] * n
    order = [root]
    new[root] = 0
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for nb in (succ[d], pairing[d]):
            if new[nb] < 0:
                new[nb] = len(order)
                order.append(nb)
    encoding = []
    for d in order:
        encoding.append(new[succ[d]])
        encoding.append(new[pairing[d]])
    return tuple(encoding)


def canonical_form(m: HalfEdgeMap) -> bytes:
    """Byte form equal for two maps iff they differ by dart relabelling or
    by a reflection.

    Minimising the rooted encoding over every root dart and both global
    orientations is quadratic in the dart count, fine for the sizes here.
    The empty map encodes as a lone zero length.
    """
    n = m.dart_count
    if n == 0:
        return struct.pack(">H", 0)
    if not m.is_connected():
        raise Disconnected("canonical form is defined for connected maps")
    best: tuple[int, ...] | None = None
    for succ in (m._succ, m._pred):
        for root in range(n):
            enc = _rooted_encoding(succ, m.pairing, root)
            if best is None or enc < best:
                best = enc
    assert best is not None
    return struct.pack(f">H{2 * n}H", n, *best)


def decode_canonical_form(data: bytes) -> HalfEdgeMap:
    """Rebuild a map from :func:`canonical_form` output."""
    (n,) = struct.unpack_from(">H", data)
    if n == 0:
        return HalfEdgeMap([])
    values = struct.unpack_from(f">{2 * n}H", data, 2)
    succ = values[0::2]
    pairing = values[1::2]
    return HalfEdgeMap(_cycles_of(succ), pairing)


def are_homeomorphic(a: HalfEdgeMap, b: HalfEdgeMap) -> bool:
    """True iff the maps differ by relabelling or reflection."""
    return canonical_form(a) == canonical_form(b)
