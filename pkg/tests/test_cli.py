"""Command line surface, driven in-process through main()."""

import json

import pytest

from divide_forge.census import family
from divide_forge.cli import main
from divide_forge.divide import Divide
from divide_forge.documents import emit_divide
from divide_forge.surface_map import HalfEdgeMap


@pytest.fixture
def minimal_doc(tmp_path):
    path = tmp_path / "minimal-g1.json"
    path.write_text(emit_divide(family("minimal", 1)))
    return str(path)


@pytest.fixture
def two_loops_doc(tmp_path):
    path = tmp_path / "two-loops.json"
    path.write_text(emit_divide(Divide(HalfEdgeMap([]), free_loops=2)))
    return str(path)


def test_validate_ok(minimal_doc, capsys):
    assert main(["validate", minimal_doc]) == 0
    out = capsys.readouterr().out
    assert "admissible" in out and "yes" in out


def test_validate_disconnected_exits_one(two_loops_doc, capsys):
    assert main(["validate", two_loops_doc]) == 1
    captured = capsys.readouterr()
    assert "disconnected" in captured.err


def test_validate_json(two_loops_doc, capsys):
    assert main(["validate", two_loops_doc, "--format", "json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["admissible"] is False
    assert payload["failures"]


def test_invariants_table(minimal_doc, capsys):
    assert main(["invariants", minimal_doc]) == 0
    out = capsys.readouterr().out
    assert "binding k" in out
    assert "page genus h" in out


def test_invariants_json(minimal_doc, capsys):
    assert main(["invariants", minimal_doc, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "g": 1,
        "c": 2,
        "v": 2,
        "k": 4,
        "h": 1,
        "euler_char": -4,
        "heegaard_from_openbook": 5,
        "heegaard_lower_bound": 3,
        "heegaard_ok": True,
    }


def test_fiber_json(minimal_doc, capsys):
    assert main(["fiber", minimal_doc, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["euler_char"] == -4
    assert payload["boundary_components"] == 4
    assert (payload["m0"], payload["m1"], payload["m2"]) == (1, 2, 1)
    assert payload["word_length"] == 4


def test_monodromy_text(minimal_doc, capsys):
    assert main(["monodromy", minimal_doc]) == 0
    out = capsys.readouterr().out
    assert "length 4" in out
    assert "+alpha_1 +beta_1 +beta_2 +gamma_1" in out


def test_monodromy_negated(minimal_doc, capsys):
    assert main(["monodromy", minimal_doc, "--negated"]) == 0
    assert "-alpha_1 -beta_1 -beta_2 -gamma_1" in capsys.readouterr().out


def test_monodromy_homology_json(minimal_doc, capsys):
    assert main(["monodromy", minimal_doc, "--homology", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["length"] == 4
    matrix = payload["homological_matrix"]
    assert matrix == [
        [5, 4, -4, 0, 0],
        [-2, -1, 2, 0, 0],
        [2, 2, -1, 0, 0],
        [-4, -4, 4, 1, 0],
        [4, 4, -4, 0, 1],
    ]


def test_enumerate_genus_two(capsys):
    assert main(["enumerate", "--genus", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "total 3"
    assert any("birkhoff-fried" in line and "12" in line for line in out)


def test_enumerate_json(capsys):
    assert main(["enumerate", "--genus", "1", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [e["binding"] for e in payload] == [8, 6, 4]
    assert [e["family"] for e in payload] == ["birkhoff-fried", "brunella", "minimal"]


def test_enumerate_all_census(capsys):
    assert main(["enumerate", "--genus", "1", "--all", "--max-v", "3"]) == 0
    out = capsys.readouterr().out.splitlines()
    # v<=3 census classes on the torus
    rows = [line for line in out if line and not line.startswith(("family", "total"))]
    assert out[-1] == f"total {len(rows)}"
    assert all(" 1 " in line for line in rows)


def test_enumerate_max_v_without_all_is_usage_error(capsys):
    assert main(["enumerate", "--genus", "1", "--max-v", "3"]) == 2
    assert "error:" in capsys.readouterr().err


def test_family_roundtrip(tmp_path, capsys):
    out_path = str(tmp_path / "bf2.json")
    assert main(["family", "--kind", "birkhoff-fried", "--genus", "2", "-o", out_path]) == 0
    assert main(["validate", out_path]) == 0
    capsys.readouterr()
    assert main(["invariants", out_path, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert (payload["g"], payload["k"], payload["h"]) == (2, 12, 1)


def test_family_to_stdout(capsys):
    assert main(["family", "--kind", "minimal", "--genus", "1"]) == 0
    out = capsys.readouterr().out
    assert '"format_version": "1"' in out
    assert '"name": "minimal-g1"' in out


def test_family_bad_genus(capsys):
    assert main(["family", "--kind", "minimal", "--genus", "0"]) == 2
    assert "error:" in capsys.readouterr().err


def test_render_dot(minimal_doc, capsys):
    assert main(["render", minimal_doc, "--dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph dual {")
    assert out.count("--") == 2


def test_render_svg_to_file(minimal_doc, tmp_path, capsys):
    out_path = tmp_path / "fiber.svg"
    assert main(["render", minimal_doc, "--svg", "-o", str(out_path)]) == 0
    svg = out_path.read_text()
    assert svg.count('class="roundabout-outer"') == 2
    assert svg.count('class="band-body"') == 4


def test_missing_file_is_usage_error(capsys):
    assert main(["validate", "/nonexistent/divide.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_schema_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"format_version": "1", "vertices": [[0, 1, 2]]}')
    assert main(["validate", str(path)]) == 2
    assert "3 darts" in capsys.readouterr().err


def test_syntax_error_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["validate", str(path)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_invariant_mismatch_exit_code(tmp_path, capsys):
    path = tmp_path / "lying.json"
    path.write_text(emit_divide(family("minimal", 1), expected={"c": 5}))
    assert main(["invariants", str(path)]) == 1
    assert "declared 5" in capsys.readouterr().err
