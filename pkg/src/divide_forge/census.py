"""Chain divides, the three canonical families, and census enumeration.

A chain of k circles has circles C_0..C_{k-1} with C_i meeting C_{i+1}
(indices mod k) in exactly one double point w_i, so c = v = k and the
dual graph is a k-cycle.  Circle C_i contributes two arcs: arc a_i from
w_{i-1} to w_i with darts (4i, 4i+1), and arc b_i back from w_i to
w_{i-1} with darts (4i+2, 4i+3); the pairing is d <-> d XOR 1.  At w_i
the counterclockwise rotation interleaves C_i and C_{i+1}:

    (4i+1,  4(i+1),  4i+2,  4(i+1)+3)      untwisted
    (4i+1,  4(i+1)+3,  4i+2,  4(i+1))      twisted

Closing the chain leaves a binary twist choice per double point, but all
choices reduce to how many twists there are mod 2, and the four gluing
kinds below (parity of k times parity of twists) exhaust the closures.
The twisted vertex, when there is one, is w_{k-1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .divide import Divide
from .errors import ParityMismatch
from .invariants import page_invariants
from .surface_map import HalfEdgeMap

__all__ = [
    "GluingKind",
    "CensusEntry",
    "chain_divide",
    "ribbon_boundary_profile",
    "family",
    "FAMILY_KINDS",
    "census_entry",
    "enumerate_genus_one",
    "enumerate_divides",
    "DEFAULT_MAX_V",
]


class GluingKind(enum.Enum):
    """How the last ribbon of the chain is glued back to the first."""

    EVEN_SELF = "even-self"
    EVEN_CROSS = "even-cross"
    ODD_A = "odd-a"
    ODD_B = "odd-b"

    @property
    def needs_even(self) -> bool:
        return self in (GluingKind.EVEN_SELF, GluingKind.EVEN_CROSS)

    @property
    def twisted(self) -> bool:
        return self in (GluingKind.EVEN_CROSS, GluingKind.ODD_B)


def chain_divide(k: int, gluing: GluingKind) -> Divide:
    """Cyclic chain of k circles, each carrying exactly two double points.

    Ambient genus: (k-2)/2 for EVEN_SELF, k/2 for EVEN_CROSS, (k-1)/2 for
    the odd kinds (ODD_A and ODD_B give homeomorphic divides).
    """
    if k < 2:
        raise ValueError(f"a chain needs at least 2 circles, got {k}")
    if gluing.needs_even != (k % 2 == 0):
        raise ParityMismatch(f"{gluing.value} gluing needs {'even' if gluing.needs_even else 'odd'} k, got {k}")
    rotations = []
    for i in range(k):
        nxt = (i + 1) % k
        if gluing.twisted and i == k - 1:
            rotations.append((4 * i + 1, 4 * nxt + 3, 4 * i + 2, 4 * nxt))
        else:
            rotations.append((4 * i + 1, 4 * nxt, 4 * i + 2, 4 * nxt + 3))
    return Divide(HalfEdgeMap(rotations))


def ribbon_boundary_profile(k: int, gluing: GluingKind) -> tuple[int, ...]:
    """Sorted boundary lengths of the closed ribbon chain, i.e. the face
    degrees of the chain divide: {k,k,k,k} / {2k,2k} / {k,k,2k}.  Traced,
    not hard-coded."""
    d = chain_divide(k, gluing)
    return tuple(sorted(len(face) for face in d.map.faces()))


FAMILY_KINDS = ("birkhoff-fried", "brunella", "minimal")


def family(kind: str, g: int) -> Divide:
    """The three genus-one-page families on the genus-g surface.

    birkhoff-fried: 2g+2 circles (binding 4g+4); brunella: 2g+1 circles
    (binding 4g+2); minimal: 2g circles (binding 4g).
    """
    if g < 1:
        raise ValueError(f"families are defined for ambient genus >= 1, got {g}")
    kind = kind.strip().lower().replace("_", "-")
    if kind == "birkhoff-fried":
        return chain_divide(2 * g + 2, GluingKind.EVEN_SELF)
    if kind == "brunella":
        return chain_divide(2 * g + 1, GluingKind.ODD_A)
    if kind == "minimal":
        return chain_divide(2 * g, GluingKind.EVEN_CROSS)
    raise ValueError(f"unknown family {kind!r}, expected one of {FAMILY_KINDS}")


@dataclass(frozen=True)
class CensusEntry:
    """A homeomorphism class of admissible divides with its invariants."""

    canonical: bytes
    ambient_genus: int
    circles: int
    double_points: int
    binding: int
    page_genus: int
    family: str | None = None

    @property
    def invariant_vector(self) -> tuple[int, int, int, int, int]:
        """(g, c, v, k, h)."""
        return (
            self.ambient_genus,
            self.circles,
            self.double_points,
            self.binding,
            self.page_genus,
        )


def census_entry(divide: Divide, family_tag: str | None = None) -> CensusEntry:
    inv = page_invariants(divide)
    return CensusEntry(
        canonical=divide.canonical_form(),
        ambient_genus=inv.ambient_genus,
        circles=divide.c,
        double_points=divide.v,
        binding=inv.binding_components,
        page_genus=inv.genus,
        family=family_tag,
    )


def enumerate_genus_one(g: int) -> list[CensusEntry]:
    """All divides with a genus-one page on the genus-g surface, up to
    homeomorphism: the two even-k closures and the (single) odd-k one.
    Always three classes, ordered by descending binding count."""
    if g < 1:
        raise ValueError(f"ambient genus must be >= 1, got {g}")
    candidates = [
        ("birkhoff-fried", chain_divide(2 * g + 2, GluingKind.EVEN_SELF)),
        ("brunella", chain_divide(2 * g + 1, GluingKind.ODD_A)),
        (None, chain_divide(2 * g + 1, GluingKind.ODD_B)),
        ("minimal", chain_divide(2 * g, GluingKind.EVEN_CROSS)),
    ]
    entries: list[CensusEntry] = []
    seen: set[bytes] = set()
    for tag, divide in candidates:
        entry = census_entry(divide, tag)
        if entry.canonical in seen:
            continue
        seen.add(entry.canonical)
        entries.append(entry)
    return entries


DEFAULT_MAX_V = 8


def enumerate_divides(max_v: int, workers: int = 0) -> list[CensusEntry]:
    """Every admissible divide with at most max_v double points, up to
    homeomorphism; implemented in :mod:`divide_forge.enumeration`."""
    from .enumeration import enumerate_divides as _run

    return _run(max_v, workers=workers)
