"""Exhaustive census of admissible divides by double-point count.

Strategy: instead of enumerating 4-valent maps and filtering, walk the
checkerboard skeletons.  The black regions of an admissible divide form
a connected map whose medial is the divide itself, the white regions
form its dual, and a reflection of the divide reflects the skeleton; so
homeomorphism classes of admissible divides with v >= 1 double points
correspond exactly to connected maps with v edges taken up to
isomorphism, reflection, and duality.  The compiled kernel generates
one canonically rooted representative per such orbit and expands it to
a census row on the spot; see _census_kernels for the search itself.

Every row carries re-verified invariants (fiber boundary count, Euler
characteristic, Heegaard bound, crossing parities), computed inside the
kernel by tracing the actual fiber spine rather than by formula.  A
nonzero verification flag aborts the census instead of being papered
over.

`_direct_census` is the independent slow route kept for tests: raw
enumeration of all pairings on v crossing rotations, filtered through
`validate_admissible`, deduplicated by canonical form.  The two routes
must agree wherever both run.
"""

from __future__ import annotations

import os
import struct
from concurrent.futures import ProcessPoolExecutor

from .census import CensusEntry, DEFAULT_MAX_V, FAMILY_KINDS, family
from .divide import Divide, validate_admissible
from .errors import CapExceeded, DivideForgeError
from .surface_map import HalfEdgeMap

_ENV_CAP = "DIVIDE_FORGE_MAX_V"

_FLAG_NAMES = {
    1: "fiber boundary count mismatch",
    2: "Heegaard bound violated",
    4: "odd crossing count on a circle",
    8: "self-reverse strand orbit",
    16: "negative page genus",
    32: "fiber Euler characteristic mismatch",
}


def _census_cap() -> int:
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return DEFAULT_MAX_V
    try:
        return int(raw)
    except ValueError:
        raise DivideForgeError(f"{_ENV_CAP} must be an integer, got {raw!r}") from None


def _free_loop_entry() -> CensusEntry:
    loop = Divide(HalfEdgeMap([]), free_loops=1)
    return CensusEntry(
        canonical=loop.canonical_form(),
        ambient_genus=0,
        circles=1,
        double_points=0,
        binding=2,
        page_genus=0,
        family=None,
    )


def _run_level(e: int):
    """One edge level through the compiled kernel; plain tuples so the
    result survives a process boundary."""
    from . import _census_kernels as k

    canon, inv, leaves = k.enumerate_level(e)
    rows = []
    for i in range(canon.shape[0]):
        rows.append((canon[i].astype(">u2").tobytes(), tuple(int(x) for x in inv[i])))
    return e, rows, int(leaves)


def _describe_flags(flags: int) -> str:
    parts = [name for bit, name in _FLAG_NAMES.items() if flags & bit]
    return ", ".join(parts) if parts else f"flag {flags}"


def _family_index(max_genus: int) -> dict[bytes, str]:
    index: dict[bytes, str] = {}
    for g in range(1, max_genus + 1):
        for kind in FAMILY_KINDS:
            index[family(kind, g).canonical_form()] = kind
    return index


def enumerate_divides(max_v: int, workers: int = 0) -> list[CensusEntry]:
    """All admissible divides with at most max_v double points, one
    entry per homeomorphism class, ordered by canonical form bytes.

    The cap (DEFAULT_MAX_V, overridable through DIVIDE_FORGE_MAX_V)
    guards against accidental explosion; the count grows roughly like
    the rooted maps with max_v edges.  workers > 1 spreads the edge
    levels over processes; the deepest level dominates the runtime, so
    this helps only when several mid-sized levels are requested.
    """
    if max_v < 0:
        raise ValueError("max_v must be nonnegative")
    cap = _census_cap()
    if max_v > cap:
        raise CapExceeded(
            f"census capped at v <= {cap} (set {_ENV_CAP} to raise); requested {max_v}"
        )

    entries = [_free_loop_entry()]
    levels = list(range(1, max_v + 1))
    if workers > 1 and len(levels) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_level, levels))
    else:
        results = [_run_level(e) for e in levels]

    prefix = struct.pack(">H", 0)  # no free loops on any crossing divide
    max_genus_seen = 0
    staged = []
    for e, rows, _leaves in results:
        for canon_bytes, (v, c, genus, _faces, _boundary, _chi, flags) in rows:
            if flags:
                raise DivideForgeError(
                    f"census self-check failed at v={v}: {_describe_flags(flags)}"
                )
            staged.append((prefix + canon_bytes, v, c, genus))
            max_genus_seen = max(max_genus_seen, genus)

    families = _family_index(max_genus_seen)
    for canonical, v, c, genus in staged:
        page_genus = 1 + v - c
        tag = families.get(canonical) if page_genus == 1 else None
        entries.append(
            CensusEntry(
                canonical=canonical,
                ambient_genus=genus,
                circles=c,
                double_points=v,
                binding=2 * c,
                page_genus=page_genus,
                family=tag,
            )
        )

    if len({entry.canonical for entry in entries}) != len(entries):
        raise DivideForgeError("census produced a duplicate canonical form")
    entries.sort(key=lambda entry: entry.canonical)
    return entries


def level_leaf_count(e: int) -> int:
    """Number of generation leaves (rooted connected maps with e edges,
    all genera); a cheap cross-check against the known sequence."""
    return _run_level(e)[2]


def _all_pairings(darts: list[int]):
    if not darts:
        yield {}
        return
    first = darts[0]
    for i in range(1, len(darts)):
        rest = darts[1:i] + darts[i + 1 :]
        for match in _all_pairings(rest):
            match[first] = darts[i]
            match[darts[i]] = first
            yield match


def _direct_census(max_v: int) -> dict[int, set[bytes]]:
    """Canonical forms of all admissible divides with 1 <= v <= max_v,
    by raw search over every pairing of 4v darts on standard crossing
    rotations.  Exponential; meant for cross-checking small levels."""
    out: dict[int, set[bytes]] = {}
    for v in range(1, max_v + 1):
        rotations = [list(range(4 * i, 4 * i + 4)) for i in range(v)]
        found: set[bytes] = set()
        for match in _all_pairings(list(range(4 * v))):
            pairing = [match[d] for d in range(4 * v)]
            divide = Divide(HalfEdgeMap(rotations, pairing))
            if validate_admissible(divide).admissible:
                found.add(divide.canonical_form())
        out[v] = found
    return out
