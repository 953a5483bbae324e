"""Closed-form invariants of the open book carried by an admissible divide.

Everything here is arithmetic in the counts (c, v, g): the binding has
k = 2c components, the page has Euler characteristic -2v and genus
h = 1 + v - c, and the induced Heegaard splitting has genus 2h + k - 1,
which can never undercut the lower bound 2g + 1 of the ambient unit
(co)tangent bundle.  The fiber module rebuilds the page as an explicit
ribbon surface; agreement of the two routes is what the test suite leans
on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divide import Divide, require_admissible
from .errors import GenusTooSmall

__all__ = [
    "PageInvariants",
    "HeegaardData",
    "page_invariants",
    "heegaard_check",
    "binding_number_bounds",
]


@dataclass(frozen=True)
class PageInvariants:
    binding_components: int
    euler_char: int
    genus: int
    ambient_genus: int


@dataclass(frozen=True)
class HeegaardData:
    from_openbook: int
    lower_bound: int


def page_invariants(divide: Divide) -> PageInvariants:
    """Binding count, page Euler characteristic, page genus, ambient genus.

    Raises :class:`NotAdmissible` otherwise; the formulas assume a
    connected checkerboard-colorable divide.
    """
    require_admissible(divide)
    v = divide.v
    c = divide.c
    ambient = divide.map.genus() if v else 0
    return PageInvariants(
        binding_components=2 * c,
        euler_char=-2 * v,
        genus=1 + v - c,
        ambient_genus=ambient,
    )


def heegaard_check(divide: Divide) -> tuple[HeegaardData, bool]:
    """Heegaard genus 2h + k - 1 of the open book splitting against the
    ambient lower bound 2g + 1; the boolean (equivalent to v >= g) holds
    for every admissible divide.
    """
    inv = page_invariants(divide)
    data = HeegaardData(
        from_openbook=2 * inv.genus + inv.binding_components - 1,
        lower_bound=2 * inv.ambient_genus + 1,
    )
    return data, data.from_openbook >= data.lower_bound


def binding_number_bounds(g: int) -> tuple[int, int]:
    """Range (2g, 4g) for the minimal binding size over genus-one open
    books of the unit cotangent bundle of a genus-g surface; stated for
    g >= 2 only.
    """
    if g < 2:
        raise GenusTooSmall(f"binding bounds need ambient genus >= 2, got {g}")
    return (2 * g, 4 * g)
