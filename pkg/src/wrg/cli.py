"""Command-line front end.

Exit status: 0 on success, 2 on invalid input, 3 when the answer is a
mathematical "no" (a certificate is printed on stdout), 1 when a search
budget runs out or an internal self-check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analyze, build, io, separate, stab
from .errors import BudgetExhausted, CapExceeded, NotCointerval, RealizationFailed, TemplateMismatch, WRGError
from .graph import Graph
from .realize import (
    IndependentTriple,
    realize_pm,
    realize_tree,
    realize_two_components,
    recognize_cointerval,
)
from .svg import render_graph_svg, render_svg

EXIT_OK, EXIT_FAILURE, EXIT_INVALID, EXIT_NEGATIVE = 0, 1, 2, 3

_MODES = {"pos": "positive", "neg": "negative", "pm": "mixed"}


class InvalidInput(Exception):
    pass


class Negative(Exception):
    """A negative answer; ``payload`` is the certificate."""

    def __init__(self, payload: dict):
        super().__init__(payload)
        self.payload = payload


def _load(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read JSON from {path}: {exc}") from exc


def _load_graph(path: str) -> Graph:
    data = _load(path)
    if "points" in data:
        return build.build_oracle(io.scene_from_json(data), "positive")
    return Graph.from_json(data)


def _load_points(path: str):
    data = _load(path)
    return io.points_from_json(data["points"] if isinstance(data, dict) else data)


def _not_cointerval(exc: NotCointerval) -> dict:
    return {"certificate": exc.code, "component": exc.component, "vertices": exc.vertices}


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- verbs ------------------------------------------------------------------------


def cmd_build(args) -> dict:
    scene = io.scene_from_json(_load(args.input))
    mode = _MODES[args.mode]
    if mode == "mixed" and args.algo == "sweep":
        raise InvalidInput("the sweep builder has no mixed mode; use --algo oracle")
    return build.build(scene, mode, args.algo).to_json()


def cmd_analyze(args) -> dict:
    report = analyze.feasibility_report(_load_graph(args.input)).to_json()
    if report["verdict"] == "fail":
        raise Negative(report)
    return report


def cmd_recognize(args) -> dict:
    g = _load_graph(args.input)
    if args.kind == "cointerval":
        model = recognize_cointerval(g)
        if model is None:
            raise Negative({"certificate": "NotCointerval", "vertices": sorted(g.vertices)})
        return model.to_json()
    if args.kind == "two-component":
        comps = analyze.nontrivial_components(g)
        if len(comps) != 2:
            raise InvalidInput(f"expected two non-trivial components, found {len(comps)}")
        models = []
        for idx, comp in enumerate(comps, 1):
            model = recognize_cointerval(g.induced(comp))
            if model is None:
                raise Negative(_not_cointerval(NotCointerval(idx, comp)))
            models.append(model.to_json())
        return {"realizable": True, "components": models, "isolated": sorted(g.isolated())}
    result = realize_tree(g)
    if isinstance(result, IndependentTriple):
        raise Negative(result.to_json())
    return {"realizable": True}


def cmd_realize(args) -> dict:
    g = _load_graph(args.input)
    if args.kind == "tree":
        result = realize_tree(g)
        if isinstance(result, IndependentTriple):
            raise Negative(result.to_json())
        return result.to_json()
    if args.kind == "two-component":
        return realize_two_components(g).to_json()
    return realize_pm(g).to_json()


def cmd_stab(args) -> dict:
    if args.grid is not None:
        if args.grid < 2:
            raise InvalidInput("--grid needs k >= 2")
        return stab.certificate_for_grid(args.grid).to_json()
    if args.input is None:
        raise InvalidInput("a point file is required unless --grid is given")
    points = _load_points(args.input)
    if args.exact:
        value = stab.stab_exact(points, cap=args.cap)
        return {"instance": io.points_to_json(points), "exact": value}
    scene = stab.stab_construct(points)
    return stab.StabbingCertificate(
        tuple(scene.points), None, scene.pos_witnesses, 0, len(scene.pos_witnesses)
    ).to_json()


def cmd_mng(args) -> dict:
    if args.find_counterexample:
        if args.seed is None:
            raise InvalidInput("--find-counterexample requires --seed")
        return separate.search_counterexample(args.seed, args.budget).to_json()
    if args.input is None:
        raise InvalidInput("--check needs an instance file")
    inst = separate.TwoClassInstance.from_json(_load(args.input))
    line = separate.linearly_separable(inst)
    return {
        "mutual_complete": separate.mutual_complete(inst),
        "separator": None if line is None else list(line),
    }


def cmd_render(args) -> str:
    data = _load(args.input)
    if args.graph:
        if "scene" in data:
            scene = io.scene_from_json(data["scene"])
            g = build.build_oracle(scene, data.get("mode", "positive"))
            return render_svg(scene, g)
        return render_graph_svg(Graph.from_json(data))
    scene = io.scene_from_json(data)
    mode = "mixed" if scene.neg_witnesses else "positive"
    return render_svg(scene, build.build_oracle(scene, mode))


# -- parser -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wrg", description="Witness rectangle graph toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="graph of a scene")
    p.add_argument("input")
    p.add_argument("--mode", choices=sorted(_MODES), default="pos")
    p.add_argument("--algo", choices=("sweep", "oracle"), default="sweep")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="necessary-condition report")
    p.add_argument("input")
    p.add_argument("--report", action="store_true", default=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    for verb, func, help_text in (
        ("recognize", cmd_recognize, "decide a graph class"),
        ("realize", cmd_realize, "draw a graph as a scene"),
    ):
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("input")
        group = p.add_mutually_exclusive_group(required=True)
        if verb == "recognize":
            group.add_argument("--cointerval", dest="kind", action="store_const", const="cointerval")
        else:
            group.add_argument("--pm", dest="kind", action="store_const", const="pm")
        group.add_argument("--two-component", dest="kind", action="store_const", const="two-component")
        group.add_argument("--tree", dest="kind", action="store_const", const="tree")
        p.add_argument("-o", "--output")
        p.set_defaults(func=func)

    p = sub.add_parser("stab", help="witness sets making the graph complete")
    p.add_argument("input", nargs="?")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--construct", action="store_true")
    group.add_argument("--exact", action="store_true")
    group.add_argument("--grid", type=int, metavar="K")
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("mng", help="mutual completeness versus separability")
    p.add_argument("input", nargs="?")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", action="store_true")
    group.add_argument("--find-counterexample", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mng)

    p = sub.add_parser("render", help="SVG drawing")
    p.add_argument("input")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--scene", action="store_true")
    group.add_argument("--graph", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def _error(payload: dict, status: int) -> int:
    sys.stderr.write(json.dumps(payload) + "\n")
    return status


def run(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except InvalidInput as exc:
        return _error({"error": "InvalidInput", "message": str(exc)}, EXIT_INVALID)
    try:
        result = args.func(args)
    except Negative as neg:
        sys.stdout.write(io.dumps(neg.payload))
        return EXIT_NEGATIVE
    except NotCointerval as exc:
        sys.stdout.write(io.dumps(_not_cointerval(exc)))
        return EXIT_NEGATIVE
    except (BudgetExhausted, CapExceeded, RealizationFailed, TemplateMismatch) as exc:
        return _error(exc.to_json(), EXIT_FAILURE)
    except WRGError as exc:
        return _error(exc.to_json(), EXIT_INVALID)
    except InvalidInput as exc:
        return _error({"error": "InvalidInput", "message": str(exc)}, EXIT_INVALID)
    except (KeyError, TypeError, ValueError) as exc:
        return _error({"error": "InvalidInput", "message": f"{type(exc).__name__}: {exc}"}, EXIT_INVALID)
    _emit(result if isinstance(result, str) else io.dumps(result), args.output)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
