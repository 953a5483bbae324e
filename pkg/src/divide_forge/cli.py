"""Command line front end.

Exit codes: 0 success, 1 domain verdict (inadmissible divide, declared
invariants that do not hold), 2 usage or format problems.  Every
failure prints a single diagnostic line to stderr; tabular output goes
to stdout and is also available as JSON via --format json.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .census import DEFAULT_MAX_V, FAMILY_KINDS, enumerate_divides, enumerate_genus_one, family
from .divide import Divide, dual_graph, validate_admissible
from .documents import emit_divide, parse_divide, standard_expected
from .errors import (
    CapExceeded,
    DivideForgeError,
    DocumentSyntaxError,
    GenusTooSmall,
    InvariantMismatch,
    NotAdmissible,
    ParityMismatch,
    SchemaError,
)
from .fiber import build_fiber, homological_monodromy, monodromy_word, vanishing_cycles
from .invariants import heegaard_check, page_invariants
from .render import emit_dot, emit_svg

_USAGE_ERRORS = (DocumentSyntaxError, SchemaError, CapExceeded, ParityMismatch, GenusTooSmall, ValueError, OSError)
_DOMAIN_ERRORS = (NotAdmissible, InvariantMismatch)


def _load(path: str) -> Divide:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_divide(handle.read())


def _print_table(rows: list[tuple[str, Any]]) -> None:
    width = max(len(label) for label, _ in rows)
    for label, value in rows:
        if isinstance(value, bool):
            value = "yes" if value else "no"
        print(f"{label:<{width}}  {value}")


def _emit(args, rows: list[tuple[str, Any]], payload: dict[str, Any]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        _print_table(rows)


def _cmd_validate(args) -> int:
    divide = _load(args.file)
    report = validate_admissible(divide)
    rows = [
        ("connected", report.connected),
        ("faces are disks", report.faces_are_disks),
        ("colorable", report.colorable),
        ("admissible", report.admissible),
    ]
    payload = {
        "connected": report.connected,
        "faces_are_disks": report.faces_are_disks,
        "colorable": report.colorable,
        "admissible": report.admissible,
        "failures": list(report.failures),
    }
    _emit(args, rows, payload)
    if not report.admissible:
        print(f"error: not admissible: {'; '.join(report.failures)}", file=sys.stderr)
        return 1
    return 0


def _cmd_invariants(args) -> int:
    divide = _load(args.file)
    page = page_invariants(divide)
    heegaard, ok = heegaard_check(divide)
    rows = [
        ("ambient genus g", page.ambient_genus),
        ("circles c", divide.c),
        ("double points v", divide.v),
        ("binding k", page.binding_components),
        ("page genus h", page.genus),
        ("euler char", page.euler_char),
        ("heegaard genus 2h+k-1", heegaard.from_openbook),
        ("heegaard bound 2g+1", heegaard.lower_bound),
        ("heegaard ok", ok),
    ]
    payload = {
        "g": page.ambient_genus,
        "c": divide.c,
        "v": divide.v,
        "k": page.binding_components,
        "h": page.genus,
        "euler_char": page.euler_char,
        "heegaard_from_openbook": heegaard.from_openbook,
        "heegaard_lower_bound": heegaard.lower_bound,
        "heegaard_ok": ok,
    }
    _emit(args, rows, payload)
    return 0


def _cmd_fiber(args) -> int:
    divide = _load(args.file)
    fiber = build_fiber(divide)
    cycles = vanishing_cycles(divide)
    rows = [
        ("euler char", fiber.euler_char),
        ("boundary components", fiber.num_boundary),
        ("fiber genus", fiber.genus),
        ("roundabouts", len(fiber.roundabouts)),
        ("bands", len(fiber.bands)),
        ("alpha cycles (white)", cycles.m0),
        ("beta cycles (cores)", cycles.m1),
        ("gamma cycles (black)", cycles.m2),
        ("total cycles", len(cycles.ordered)),
    ]
    payload = {
        "euler_char": fiber.euler_char,
        "boundary_components": fiber.num_boundary,
        "genus": fiber.genus,
        "roundabouts": len(fiber.roundabouts),
        "bands": len(fiber.bands),
        "m0": cycles.m0,
        "m1": cycles.m1,
        "m2": cycles.m2,
        "word_length": len(cycles.ordered),
    }
    _emit(args, rows, payload)
    return 0


def _letter_name(cycles, index: int) -> str:
    if index < cycles.m0:
        return f"alpha_{index + 1}"
    if index < cycles.m0 + cycles.m1:
        return f"beta_{index - cycles.m0 + 1}"
    return f"gamma_{index - cycles.m0 - cycles.m1 + 1}"


def _cmd_monodromy(args) -> int:
    divide = _load(args.file)
    word = monodromy_word(divide, negated=args.negated)
    cycles = word.cycles
    letters = [
        {"twist": _letter_name(cycles, i), "sign": sign} for i, sign in word.letters
    ]
    payload: dict[str, Any] = {"length": len(word), "letters": letters}
    if args.homology:
        matrix = homological_monodromy(cycles.fiber, word)
        payload["homological_matrix"] = matrix.tolist()
    if args.format == "json":
        print(json.dumps(payload, indent=2))
        return 0
    names = " ".join(
        ("+" if sign > 0 else "-") + _letter_name(cycles, i) for i, sign in word.letters
    )
    print(f"length {len(word)}")
    print(names)
    if args.homology:
        print("homological matrix:")
        for row in payload["homological_matrix"]:
            print("  " + " ".join(f"{x:4d}" for x in row))
    return 0


def _entry_payload(entry) -> dict[str, Any]:
    return {
        "family": entry.family,
        "ambient_genus": entry.ambient_genus,
        "circles": entry.circles,
        "double_points": entry.double_points,
        "binding": entry.binding,
        "page_genus": entry.page_genus,
        "canonical": entry.canonical.hex(),
    }


def _cmd_enumerate(args) -> int:
    if args.all:
        max_v = args.max_v if args.max_v is not None else DEFAULT_MAX_V
        entries = [
            entry
            for entry in enumerate_divides(max_v)
            if entry.ambient_genus == args.genus
        ]
    else:
        if args.max_v is not None:
            raise ValueError("--max-v only applies together with --all")
        entries = enumerate_genus_one(args.genus)
    if args.format == "json":
        print(json.dumps([_entry_payload(e) for e in entries], indent=2))
        return 0
    print(f"{'family':<16} {'g':>3} {'c':>4} {'v':>4} {'binding':>8} {'page h':>7}")
    for e in entries:
        print(
            f"{e.family or '-':<16} {e.ambient_genus:>3} {e.circles:>4} "
            f"{e.double_points:>4} {e.binding:>8} {e.page_genus:>7}"
        )
    print(f"total {len(entries)}")
    return 0


def _cmd_family(args) -> int:
    divide = family(args.kind, args.genus)
    text = emit_divide(
        divide,
        name=f"{args.kind}-g{args.genus}",
        expected=standard_expected(divide),
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_render(args) -> int:
    divide = _load(args.file)
    if args.dot:
        text = emit_dot(dual_graph(divide))
    else:
        text = emit_svg(build_fiber(divide))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divide-forge",
        description="Divides on closed oriented surfaces and their open books.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("validate", help="admissibility report for a divide document")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("invariants", help="page and Heegaard invariants")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(run=_cmd_invariants)

    p = sub.add_parser("fiber", help="fiber statistics and vanishing cycle counts")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(run=_cmd_fiber)

    p = sub.add_parser("monodromy", help="ordered Dehn twist word")
    p.add_argument("file")
    p.add_argument("--homology", action="store_true", help="include the matrix on H1")
    p.add_argument("--negated", action="store_true", help="mirror convention: negative twists")
    add_format(p)
    p.set_defaults(run=_cmd_monodromy)

    p = sub.add_parser("enumerate", help="genus-one classification or full census")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--all", action="store_true", help="full census filtered by ambient genus")
    p.add_argument("--max-v", type=int, default=None, help="census cap with --all")
    add_format(p)
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("family", help="emit a canonical family divide document")
    p.add_argument("--kind", choices=FAMILY_KINDS, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(run=_cmd_family)

    p = sub.add_parser("render", help="dual graph DOT or fiber SVG")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--dot", action="store_true")
    group.add_argument("--svg", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(run=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DivideForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
