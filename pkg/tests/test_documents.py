"""Divide document parsing, emission, and declared-invariant checking."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divide_forge.census import GluingKind, chain_divide, family
from divide_forge.divide import Divide
from divide_forge.documents import emit_divide, parse_divide, standard_expected
from divide_forge.errors import (
    DocumentSyntaxError,
    InvariantMismatch,
    SchemaError,
)
from divide_forge.surface_map import HalfEdgeMap

MINIMAL_DOC = """{
  "format_version": "1",
  "vertices": [
    [1, 4, 2, 7],
    [5, 3, 6, 0]
  ],
  "free_loops": 0
}
"""


def test_parse_minimal_document():
    d = parse_divide(MINIMAL_DOC)
    assert (d.c, d.v) == (2, 2)
    assert d.canonical_form() == family("minimal", 1).canonical_form()


def test_round_trip_families():
    for g in (1, 2, 3):
        for kind in ("birkhoff-fried", "brunella", "minimal"):
            d = family(kind, g)
            text = emit_divide(d)
            back = parse_divide(text)
            assert back.canonical_form() == d.canonical_form()


def test_emit_is_byte_stable():
    for d in (family("brunella", 2), Divide(HalfEdgeMap([]), free_loops=1)):
        text = emit_divide(d)
        assert emit_divide(parse_divide(text)) == text


def test_emitted_text_is_valid_json_with_flat_vertex_rows():
    text = emit_divide(family("minimal", 1), name="m1")
    raw = json.loads(text)
    assert raw["format_version"] == "1"
    assert raw["metadata"]["name"] == "m1"
    for line in text.splitlines():
        if line.lstrip().startswith("["):
            assert line.count("[") == line.count("]") == 1
    assert text.endswith("}\n")


def test_expected_block_verified_on_load():
    d = family("minimal", 1)
    text = emit_divide(d, expected=standard_expected(d))
    assert parse_divide(text).v == 2


def test_expected_mismatch_reports_field():
    d = family("minimal", 1)
    text = emit_divide(d, expected={"c": 5})
    with pytest.raises(InvariantMismatch, match="c: declared 5, actual 2"):
        parse_divide(text)


def test_expected_genus_checked():
    d = family("minimal", 2)
    good = emit_divide(d, expected={"g": 2})
    parse_divide(good)
    with pytest.raises(InvariantMismatch, match="g: declared 3"):
        parse_divide(emit_divide(d, expected={"g": 3}))


def test_syntax_error_carries_position():
    with pytest.raises(DocumentSyntaxError) as info:
        parse_divide('{\n  "format_version": "1",\n  oops\n}')
    assert info.value.line == 3
    assert info.value.column >= 1
    assert "line 3" in str(info.value)


def test_schema_errors():
    with pytest.raises(SchemaError, match="format_version"):
        parse_divide('{"format_version": "2", "vertices": []}')
    with pytest.raises(SchemaError, match="3 darts"):
        parse_divide('{"format_version": "1", "vertices": [[0, 1, 2]]}')
    with pytest.raises(SchemaError, match="darts must be exactly"):
        parse_divide('{"format_version": "1", "vertices": [[0, 1, 2, 9]]}')
    with pytest.raises(SchemaError, match="unknown document fields"):
        parse_divide('{"format_version": "1", "vertices": [], "extra": 1}')
    with pytest.raises(SchemaError, match="free_loops"):
        parse_divide('{"format_version": "1", "vertices": [], "free_loops": -1}')
    with pytest.raises(SchemaError, match="free_loops"):
        parse_divide('{"format_version": "1", "vertices": [], "free_loops": true}')
    with pytest.raises(SchemaError, match="must be a JSON object"):
        parse_divide("[]")
    with pytest.raises(SchemaError, match="unknown expected"):
        parse_divide(
            '{"format_version": "1", "vertices": [],'
            ' "metadata": {"expected": {"zz": 1}}}'
        )


def test_free_loop_document():
    loop = Divide(HalfEdgeMap([]), free_loops=1)
    text = emit_divide(loop, name="free loop")
    back = parse_divide(text)
    assert back.free_loops == 1
    assert back.v == 0
    assert back.canonical_form() == loop.canonical_form()


def test_non_xor_pairing_relabeled_on_emit():
    # same chain, edges wired as d <-> d+4 instead of d <-> d XOR 1
    rotations = [[0, 1, 2, 3], [4, 5, 6, 7]]
    pairing = [6, 4, 5, 7, 1, 2, 0, 3]
    scrambled = Divide(HalfEdgeMap(rotations, pairing))
    text = emit_divide(scrambled)
    back = parse_divide(text)
    assert back.canonical_form() == scrambled.canonical_form()
    assert all(back.map.pair(d) == d ^ 1 for d in range(8))


def test_emit_rejects_unknown_expected_key():
    with pytest.raises(ValueError):
        emit_divide(family("minimal", 1), expected={"volume": 3})


@given(st.integers(2, 9), st.booleans())
@settings(max_examples=30, deadline=None)
def test_chain_documents_round_trip(k, twisted):
    kinds = (
        (GluingKind.EVEN_SELF, GluingKind.EVEN_CROSS)
        if k % 2 == 0
        else (GluingKind.ODD_A, GluingKind.ODD_B)
    )
    d = chain_divide(k, kinds[twisted])
    text = emit_divide(d, expected=standard_expected(d))
    assert parse_divide(text).canonical_form() == d.canonical_form()
    assert emit_divide(parse_divide(text)) == emit_divide(d)
