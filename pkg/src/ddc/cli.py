"""The ``ddc`` command line."""

import argparse
import json
import sys
from pathlib import Path

from .cones import cone_of
from .collections import (ArcifyBudgetExceeded, Collection, crossing_pair_geometric,
                          is_arc_collection, is_reduced, membership)
from .geometry import arcs_cross, intersection_number
from .homs import hom_dim, orbit_statements, satisfied_statements
from .lattice import build_lattice, lattice_json, render_dot, render_svg
from .mutation import inverse, leq_mut, mutable_moves, mutate
from .objects import (Arc, CategoryParams, MarkedPoint, arc_of, check_arc, object_from_json,
                      object_of, parse_object)


class UsageError(Exception):
    """Bad invocation: missing inputs, unreadable files."""


def _emit(data):
    print(json.dumps(data, sort_keys=True))


def _params(text):
    try:
        return CategoryParams.parse(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def load_collection(path, params=None):
    """A collection file holds {"objects": [...]} or {"arcs": [...]}, optionally with "params"."""
    data = _read_json(path)
    if params is None:
        if "params" not in data:
            raise UsageError(f"{path} has no params; pass --params")
        raw = data["params"]
        params = CategoryParams(*raw) if isinstance(raw, list) else CategoryParams.parse(raw)
    if "arcs" in data:
        arcs = [check_arc(params, Arc.from_json(item)) for item in data["arcs"]]
    elif "objects" in data:
        arcs = [arc_of(object_from_json(params, item)) for item in data["objects"]]
    else:
        raise UsageError(f"{path} needs an 'arcs' or 'objects' list")
    return Collection(params, tuple(arcs))


def _arc(params, text):
    return check_arc(params, Arc.parse(text))


def cmd_hom(args):
    A, B = parse_object(args.params, args.a), parse_object(args.params, args.b)
    statements = orbit_statements(A, B) if args.orbit else satisfied_statements(A, B)
    print(len(statements) if args.orbit else hom_dim(A, B))
    _emit({"statements": [s.to_json() for s in statements]})


def cmd_cone(args):
    A, B = parse_object(args.params, args.a), parse_object(args.params, args.b)
    _emit(cone_of(A, B, args.stmt).to_json())


def cmd_arc(args):
    if args.obj:
        _emit(arc_of(parse_object(args.params, args.obj)).to_json())
    else:
        _emit(object_of(_arc(args.params, args.inv), args.params).to_json())


def cmd_intersect(args):
    first, second = _arc(args.params, args.a), _arc(args.params, args.b)
    _emit({"iota": intersection_number(first, second),
           "iota_reverse": intersection_number(second, first),
           "cross": arcs_cross(first, second)})


def cmd_check(args):
    coll = load_collection(args.coll, args.params)
    valid, _ = is_arc_collection(coll.arcs)
    offenders = []
    if not valid:
        offenders = [[str(a), str(b)] for a, b in _all_crossings(coll.arcs)]
    reduced = valid and is_reduced(coll)[0]
    _emit({"arc_collection": valid, "reduced": reduced, "offenders": offenders})


def _all_crossings(arcs):
    found = []
    for n, first in enumerate(arcs):
        for second in arcs[n:]:
            if crossing_pair_geometric([first, second]) is not None or \
                    (first == second and arcs_cross(first, first)):
                found.append((first, second))
    return found


def cmd_membership(args):
    coll = load_collection(args.coll, args.params)
    A = parse_object(coll.params, args.obj)
    member, walk = membership(A, coll)
    print(json.dumps(member))
    _emit({"member": member, "arc": arc_of(A).to_json(),
           "witness": [{"arc": str(coll.arcs[n]), "direction": sign} for n, sign in walk or []]})


def cmd_groupoid(args):
    _emit(load_collection(args.coll, args.params).descriptor().to_json())


def cmd_moves(args):
    coll = load_collection(args.coll, args.params)
    _emit({"arcs": [str(a) for a in coll.arcs],
           "moves": [m.to_json() for m in mutable_moves(coll)]})


def _parse_move(coll, text):
    parts = text.replace(" ", "").split(",")
    if len(parts) not in (4, 6):
        raise UsageError("--move expects a,b,v,dir (optionally followed by end_a,end_b)")
    a, b, vertex, direction = int(parts[0]), int(parts[1]), MarkedPoint.parse(parts[2]), parts[3]
    for move in mutable_moves(coll):
        if (move.a, move.b, move.vertex, move.direction) != (a, b, vertex, direction):
            continue
        if len(parts) == 6 and (move.end_a, move.end_b) != (parts[4], parts[5]):
            continue
        return move
    raise ValueError(f"{text} is not a mutable move of {coll.label()}")


def cmd_mutate(args):
    coll = load_collection(args.coll, args.params)
    move = _parse_move(coll, args.move)
    result = mutate(coll, move)
    data = result.to_json()
    data["inverse"] = inverse(coll, move).to_json()
    _emit(data)


def cmd_leq(args):
    first = load_collection(args.a, args.params)
    second = load_collection(args.b, first.params)
    if first.params != second.params:
        raise UsageError("the two collections live in different categories")
    _emit({"leq": leq_mut(first, second), "geq": leq_mut(second, first)})


def cmd_lattice(args):
    classes, covers = build_lattice(args.params, args.max_winding, args.quotient, args.max_arcs)
    data = lattice_json(classes, covers)
    if args.dot:
        labels = {n: cls.descriptor.label() for n, cls in enumerate(classes)}
        Path(args.dot).write_text(render_dot(covers, labels))
    if args.json:
        Path(args.json).write_text(json.dumps(data, sort_keys=True, indent=1) + "\n")
    else:
        _emit(data)


def cmd_render(args):
    svg = render_svg(load_collection(args.coll, args.params))
    if args.svg:
        Path(args.svg).write_text(svg)
    else:
        sys.stdout.write(svg)


def build_parser():
    parser = argparse.ArgumentParser(prog="ddc", description="Discrete derived category calculus.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, params_required=True):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--params", type=_params, required=params_required,
                         help="r,n,m" + ("" if params_required else " (else taken from the file)"))
        cmd.set_defaults(handler=handler)
        return cmd

    cmd = add("hom", cmd_hom, "hom dimension between two objects")
    cmd.add_argument("--a", required=True)
    cmd.add_argument("--b", required=True)
    cmd.add_argument("--orbit", action="store_true", help="sum over all shifts of b")

    cmd = add("cone", cmd_cone, "cone of the basis morphism of one statement")
    cmd.add_argument("--a", required=True)
    cmd.add_argument("--b", required=True)
    cmd.add_argument("--stmt", type=int, choices=range(10), required=True)

    cmd = add("arc", cmd_arc, "object to arc, or arc to object with --inv")
    which = cmd.add_mutually_exclusive_group(required=True)
    which.add_argument("--obj")
    which.add_argument("--inv")

    cmd = add("intersect", cmd_intersect, "intersection numbers of two arcs")
    cmd.add_argument("--a", required=True)
    cmd.add_argument("--b", required=True)

    for name, handler, text in (("check", cmd_check, "arc-collection and reducedness"),
                                ("groupoid", cmd_groupoid, "generated subgroupoid"),
                                ("moves", cmd_moves, "mutable moves")):
        add(name, handler, text, params_required=False).add_argument("--coll", required=True)

    cmd = add("membership", cmd_membership, "membership in the thick closure", False)
    cmd.add_argument("--coll", required=True)
    cmd.add_argument("--obj", required=True)

    cmd = add("mutate", cmd_mutate, "apply one mutation", False)
    cmd.add_argument("--coll", required=True)
    cmd.add_argument("--move", required=True, help="a,b,v,dir with dir left or right")

    cmd = add("leq", cmd_leq, "compare two collections in the mutation order", False)
    cmd.add_argument("--a", required=True)
    cmd.add_argument("--b", required=True)

    cmd = add("lattice", cmd_lattice, "enumerate the thick subcategory lattice")
    cmd.add_argument("--max-winding", type=int, required=True)
    cmd.add_argument("--max-arcs", type=int)
    cmd.add_argument("--quotient", action="store_true", help="collapse rotation families")
    cmd.add_argument("--dot")
    cmd.add_argument("--json")

    cmd = add("render", cmd_render, "draw a collection as SVG", False)
    cmd.add_argument("--coll", required=True)
    cmd.add_argument("--svg")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        args.handler(args)
    except UsageError as exc:
        print(f"ddc: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, ArcifyBudgetExceeded) as exc:
        print(f"ddc: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
