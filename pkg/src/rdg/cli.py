"""Command-line interface: ``rdg <subcommand> ...``.

Exit codes: 0 success, 2 invalid input or usage, 3 search found nothing
within its bounds.  ``RDG_BUDGET`` overrides the default search node budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .diagram import InvalidDiagramError, RectDiagram, validate
from .generators import (
    CableSpec,
    cable_slope,
    cable_type,
    gen_braid_closure,
    gen_torus_knot,
    gen_unknot_braided,
    gen_unknot_rect,
    parse_braid_word,
)
from .geometry import (
    EmbeddingError,
    WrappingDiagramError,
    contact_residual,
    curve_to_csv,
    embed,
    front_from_diagram,
    front_to_svg,
    half_space_shift,
)
from .invariants import invariant_report
from .io import ParseError, parse, serialize
from .moves import MoveRejected, apply_move, classify_delta, flip, parse_move
from .render import render_ascii, render_svg
from .search import SearchConfig, braid, equivalent, normalize_move_set

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_FOUND = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _read(path: str) -> RectDiagram:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8", newline="") as fh:
            text = fh.read()
    return parse(text)


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _report_dict(d: RectDiagram, with_sl: bool) -> dict:
    rep = invariant_report(d).as_dict()
    if not with_sl:
        rep.pop("sl_plus")
        rep.pop("sl_minus")
    return rep


def cmd_validate(args) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8", newline="") as fh:
            text = fh.read()
    try:
        d = parse(text)
    except InvalidDiagramError as exc:
        report = exc.report
    else:
        report = validate(d)
    if args.json:
        sys.stdout.write(_dumps({"ok": report.ok, "violations": [{"axiom": v.axiom, "message": v.message} for v in report.violations]}))
    else:
        print("ok" if report.ok else "\n".join(str(v) for v in report.violations))
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_inv(args) -> int:
    d = _read(args.file)
    rep = _report_dict(d, True)
    if args.json:
        sys.stdout.write(_dumps(_report_dict(d, args.sl)))
    else:
        for k, v in rep.items():
            print(f"{k} {v}")
    return EXIT_OK


def cmd_braid(args) -> int:
    _emit(serialize(braid(_read(args.file))), args.output)
    return EXIT_OK


def cmd_flip(args) -> int:
    d = _read(args.file)
    if not 1 <= args.row <= d.n:
        raise MoveRejected(f"row {args.row} outside 1..{d.n}")
    _emit(serialize(flip(d, args.row)), args.output)
    return EXIT_OK


def cmd_move(args) -> int:
    d = _read(args.file)
    steps = []
    for literal in args.moves:
        m = parse_move(literal)
        e = apply_move(d, m)
        cls = classify_delta(d, e)
        steps.append({"move": str(m), "delta_tb": cls.delta_tb, "delta_rot": cls.delta_rot,
                      "delta_sl_plus": cls.delta_sl_plus, "label": cls.label})
        d = e
    if args.json:
        sys.stdout.write(_dumps({"steps": steps, "result": serialize(d)}))
        if args.output:
            _emit(serialize(d), args.output)
    else:
        for s in steps:
            print(f"# {s['move']}: dtb={s['delta_tb']} drot={s['delta_rot']} dsl+={s['delta_sl_plus']} {s['label']}",
                  file=sys.stderr)
        _emit(serialize(d), args.output)
    return EXIT_OK


def cmd_equiv(args) -> int:
    d1, d2 = _read(args.file1), _read(args.file2)
    budget = args.budget
    if budget is None:
        env = os.environ.get("RDG_BUDGET")
        budget = int(env) if env else SearchConfig().node_budget
    cfg = SearchConfig(
        max_grid=args.max_grid,
        max_depth=args.max_depth,
        move_set=normalize_move_set(args.moves),
        node_budget=budget,
        braided_only=args.braided_only,
    )
    cert = equivalent(d1, d2, cfg)
    if args.json:
        sys.stdout.write(_dumps(cert.as_dict()))
    elif cert.found:
        print("equivalent")
        for m, _ in cert.path:
            print(m)
    else:
        why = f"obstruction {cert.obstruction}" if cert.obstruction else cert.reason
        print(f"not found within bounds ({why})")
    return EXIT_OK if cert.found else EXIT_NOT_FOUND


def cmd_gen(args) -> int:
    kind, params = args.kind, args.params
    want = {"unknot": 0, "unknot-braided": 0, "braid": 2, "torus": 2, "cable-slope": 2}
    if kind not in want:
        raise _UsageError(f"unknown generator {kind!r}; choose from {', '.join(want)}")
    if len(params) != want[kind]:
        raise _UsageError(f"gen {kind} takes {want[kind]} argument(s)")
    if kind == "cable-slope":
        spec = CableSpec(int(params[0]), int(params[1]))
        slope = cable_slope(spec)
        if args.json:
            p, q = cable_type(spec)
            sys.stdout.write(_dumps({"slope": str(slope), "cable": [p, q]}))
        else:
            print(slope)
        return EXIT_OK
    if kind == "unknot":
        d = gen_unknot_rect()
    elif kind == "unknot-braided":
        d = gen_unknot_braided()
    elif kind == "braid":
        d = gen_braid_closure(parse_braid_word(params[0]), int(params[1]))
    else:
        d = gen_torus_knot(int(params[0]), int(params[1]))
    _emit(serialize(d), args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    d = _read(args.file)
    _emit(render_ascii(d) if args.format == "ascii" else render_svg(d), args.output)
    return EXIT_OK


def cmd_embed(args) -> int:
    d = _read(args.file)
    c = embed(d, args.r1, args.r2, args.samples)
    if args.shift:
        c = half_space_shift(c, args.shift)
    rep = contact_residual(c)
    if args.json:
        info = rep.as_dict()
        info["pieces"] = {t: c.count(t) for t in ("near_horizontal", "near_vertical", "radial")}
        info["samples"] = int(len(c.base))
        sys.stdout.write(_dumps(info))
        if args.output:
            _emit(curve_to_csv(c), args.output)
    else:
        _emit(curve_to_csv(c), args.output)
        print(f"max residual {rep.max_residual:.3e}", file=sys.stderr)
    return EXIT_OK


def cmd_front(args) -> int:
    d = _read(args.file)
    f = front_from_diagram(d)
    if args.json:
        comps = [[{"x": v.x, "y": v.y, "cusp": v.cusp} for v in comp] for comp in f.components]
        sys.stdout.write(_dumps({"components": comps, "cusps": len(f.cusps)}))
    else:
        _emit(front_to_svg(f), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rdg", description="Rectangular diagrams of Legendrian links.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_, *, file=True, output=False, json_=True):
        sp = sub.add_parser(name, help=help_)
        if file:
            sp.add_argument("file", help="diagram file ('-' for stdin)")
        if output:
            sp.add_argument("-o", "--output", help="output path (default stdout)")
        if json_:
            sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the diagram axioms")
    sp = add("inv", cmd_inv, "classical invariants")
    sp.add_argument("--sl", action="store_true", help="include sl_plus and sl_minus in --json output")
    add("braid", cmd_braid, "flip backward arcs to get a braided diagram", output=True, json_=False)
    sp = add("flip", cmd_flip, "flip one horizontal arc", output=True, json_=False)
    sp.add_argument("row", type=int)
    sp = add("move", cmd_move, "apply move literals", output=True)
    sp.add_argument("moves", nargs="+", metavar="MOVE", help="flip:R hc:R vc:C rot:K stab:R,C,Q destab:R,C")

    sp = sub.add_parser("equiv", help="bounded search for an equivalence")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--moves", default="legendrian", help="legendrian | transverse | topological")
    sp.add_argument("--max-depth", type=int, default=10)
    sp.add_argument("--max-grid", type=int, default=None)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--braided-only", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_equiv)

    sp = sub.add_parser("gen", help="reference diagrams and cable slopes")
    sp.add_argument("kind", help="unknot | unknot-braided | braid | torus | cable-slope")
    sp.add_argument("params", nargs="*")
    sp.add_argument("-o", "--output")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_gen)

    sp = add("render", cmd_render, "draw the diagram", output=True, json_=False)
    sp.add_argument("--format", choices=("svg", "ascii"), default="svg")

    sp = add("embed", cmd_embed, "piecewise-Legendrian curve as CSV", output=True)
    sp.add_argument("--r1", type=float, default=0.1)
    sp.add_argument("--r2", type=float, default=10.0)
    sp.add_argument("--samples", type=int, default=64)
    sp.add_argument("--shift", type=float, default=0.0, help="apply the half-space map with this K")

    add("front", cmd_front, "front projection as SVG", output=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, InvalidDiagramError, MoveRejected, EmbeddingError, WrappingDiagramError,
            ValueError, OSError) as exc:
        print(f"rdg: {exc}", file=sys.stderr)
        return EXIT_INVALID


def cli_main(argv: Sequence[str] | None = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
