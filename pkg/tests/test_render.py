"""DOT and SVG emitters: golden text and structural counts."""

from xml.dom import minidom

from divide_forge.census import GluingKind, chain_divide, family
from divide_forge.divide import Divide, dual_graph
from divide_forge.fiber import build_fiber
from divide_forge.render import emit_dot, emit_svg
from divide_forge.surface_map import HalfEdgeMap

CHAIN3_DOT = """graph dual {
  node [shape=circle];
  c0;
  c1;
  c2;
  c0 -- c1;
  c1 -- c2;
  c0 -- c2;
}
"""


def test_dot_chain_three():
    dual = dual_graph(chain_divide(3, GluingKind.ODD_A))
    assert emit_dot(dual) == CHAIN3_DOT


def test_dot_loops_allowed():
    # figure eight: one circle crossing itself, a loop in the dual graph
    dual = dual_graph(Divide(HalfEdgeMap([[0, 1, 2, 3]])))
    assert "c0 -- c0;" in emit_dot(dual)


def test_dot_custom_name():
    dual = dual_graph(chain_divide(2, GluingKind.EVEN_CROSS))
    assert emit_dot(dual, name="g2").startswith("graph g2 {")


def test_svg_birkhoff_fried_counts():
    fiber = build_fiber(family("birkhoff-fried", 1))
    svg = emit_svg(fiber)
    assert svg.count('class="roundabout-outer"') == 4
    assert svg.count('class="band-body"') == 8
    assert svg.count('class="band-side"') == 16
    assert "8 bands" in svg and "8 boundary components" in svg


def test_svg_free_loop_is_two_circles():
    fiber = build_fiber(Divide(HalfEdgeMap([]), free_loops=1))
    svg = emit_svg(fiber)
    assert svg.count("<circle") == 2
    assert "0 roundabouts, 0 bands, 2 boundary components" in svg


def test_svg_well_formed():
    for d in (
        Divide(HalfEdgeMap([]), free_loops=1),
        Divide(HalfEdgeMap([[0, 1, 2, 3]])),
        family("brunella", 2),
    ):
        svg = emit_svg(build_fiber(d))
        doc = minidom.parseString(svg)
        assert doc.documentElement.tagName == "svg"
        assert doc.documentElement.getAttribute("xmlns") == "http://www.w3.org/2000/svg"


def test_svg_legend_matches_fiber():
    fiber = build_fiber(family("minimal", 2))
    svg = emit_svg(fiber)
    assert f"chi={fiber.euler_char}, genus {fiber.genus}" in svg
