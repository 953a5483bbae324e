"""JSON divide documents.

The on-disk format fixes the pairing to d <-> d XOR 1, so a document is
just the vertex rotations plus the free loop count:

    {
      "format_version": "1",
      "vertices": [[0, 2, 1, 3]],
      "free_loops": 0,
      "metadata": {"name": "...", "expected": {"c": 1, "v": 1}}
    }

Divides whose pairing is not the XOR involution are relabeled on emit
(edges numbered by their smallest dart, in dart order), which never
changes the homeomorphism class.  Declared expectations in
metadata.expected are re-derived from the parsed divide and any
disagreement is an InvariantMismatch; structural problems are
SchemaError; malformed JSON is a DocumentSyntaxError carrying the
position.  emit(parse(emit(d))) == emit(d) byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

from .divide import Divide, trace_circles
from .errors import (
    Disconnected,
    DocumentSyntaxError,
    InvariantMismatch,
    SchemaError,
)
from .surface_map import HalfEdgeMap

FORMAT_VERSION = "1"

_TOP_KEYS = {"format_version", "vertices", "free_loops", "metadata"}
_META_KEYS = {"name", "expected"}
_EXPECTED_KEYS = {"g", "c", "v", "k", "h"}


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SchemaError(message)


def parse_divide(text: str) -> Divide:
    """Divide from document text; validates schema and declared
    expectations but not admissibility (the validate command owns that)."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno,
            column=exc.colno,
        ) from None

    _require(isinstance(raw, dict), "document must be a JSON object")
    unknown = set(raw) - _TOP_KEYS
    _require(not unknown, f"unknown document fields: {sorted(unknown)}")
    _require(
        raw.get("format_version") == FORMAT_VERSION,
        f"format_version must be {FORMAT_VERSION!r}, got {raw.get('format_version')!r}",
    )

    vertices = raw.get("vertices", [])
    _require(isinstance(vertices, list), "vertices must be a list")
    rotations = []
    for i, vertex in enumerate(vertices):
        _require(isinstance(vertex, list), f"vertex {i} must be a list of darts")
        _require(len(vertex) == 4, f"vertex {i} has {len(vertex)} darts, need exactly 4")
        for d in vertex:
            _require(isinstance(d, int) and not isinstance(d, bool), f"vertex {i} has a non-integer dart")
        rotations.append(list(vertex))

    n = 4 * len(rotations)
    seen = sorted(d for vertex in rotations for d in vertex)
    _require(
        seen == list(range(n)),
        f"darts must be exactly 0..{n - 1}, each once",
    )

    free_loops = raw.get("free_loops", 0)
    _require(
        isinstance(free_loops, int) and not isinstance(free_loops, bool) and free_loops >= 0,
        "free_loops must be a nonnegative integer",
    )

    metadata = raw.get("metadata", {})
    _require(isinstance(metadata, dict), "metadata must be an object")
    unknown = set(metadata) - _META_KEYS
    _require(not unknown, f"unknown metadata fields: {sorted(unknown)}")
    expected = metadata.get("expected", {})
    _require(isinstance(expected, dict), "metadata.expected must be an object")
    unknown = set(expected) - _EXPECTED_KEYS
    _require(not unknown, f"unknown expected invariants: {sorted(unknown)}")
    for key, value in expected.items():
        _require(isinstance(value, int) and not isinstance(value, bool), f"expected.{key} must be an integer")

    divide = Divide(HalfEdgeMap(rotations), free_loops=free_loops)
    if expected:
        _check_expected(divide, expected)
    return divide


def _check_expected(divide: Divide, expected: dict[str, int]) -> None:
    actual: dict[str, Any] = {"c": divide.c, "v": divide.v}
    actual["k"] = 2 * divide.c
    actual["h"] = 1 + divide.v - divide.c
    if "g" in expected:
        try:
            actual["g"] = divide.map.genus() if divide.v else 0
        except Disconnected:
            actual["g"] = "disconnected"
    bad = [
        f"{key}: declared {expected[key]}, actual {actual[key]}"
        for key in sorted(expected)
        if expected[key] != actual[key]
    ]
    if bad:
        raise InvariantMismatch("; ".join(bad))


def _with_xor_pairing(divide: Divide) -> Divide:
    """Relabel so the pairing becomes d <-> d XOR 1; identity when it
    already is (keeps emit(parse(x)) byte-stable)."""
    m = divide.map
    n = 4 * divide.v
    if all(m.pair(d) == d ^ 1 for d in range(n)):
        return divide
    relabel = [-1] * n
    nxt = 0
    for d in range(n):
        if relabel[d] >= 0:
            continue
        relabel[d] = nxt
        relabel[m.pair(d)] = nxt + 1
        nxt += 2
    return divide.relabeled(relabel)


def emit_divide(
    divide: Divide,
    name: str | None = None,
    expected: dict[str, int] | None = None,
) -> str:
    """Document text for the divide, trailing newline included.  The
    vertex rows stay on single lines, which json.dumps cannot do."""
    normalized = _with_xor_pairing(divide)
    metadata: dict[str, Any] = {}
    if name is not None:
        metadata["name"] = name
    if expected:
        bad = set(expected) - _EXPECTED_KEYS
        if bad:
            raise ValueError(f"unsupported expected invariants: {sorted(bad)}")
        metadata["expected"] = {key: expected[key] for key in sorted(expected)}

    rotations = normalized.map.rotations
    out = ["{", f'  "format_version": "{FORMAT_VERSION}",']
    if rotations:
        out.append('  "vertices": [')
        for i, vertex in enumerate(rotations):
            comma = "," if i + 1 < len(rotations) else ""
            out.append(f"    [{vertex[0]}, {vertex[1]}, {vertex[2]}, {vertex[3]}]{comma}")
        out.append("  ],")
    else:
        out.append('  "vertices": [],')
    tail = "," if metadata else ""
    out.append(f'  "free_loops": {normalized.free_loops}{tail}')
    if metadata:
        body = json.dumps(metadata, indent=2).splitlines()
        out.append('  "metadata": ' + body[0])
        out.extend("  " + line for line in body[1:])
    out.append("}")
    return "\n".join(out) + "\n"


def standard_expected(divide: Divide) -> dict[str, int]:
    """The full expected-invariant block for a connected divide; handy
    when emitting documents that should self-verify on load."""
    return {
        "g": divide.map.genus() if divide.v else 0,
        "c": divide.c,
        "v": divide.v,
        "k": 2 * divide.c,
        "h": 1 + divide.v - divide.c,
    }
