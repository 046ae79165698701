"""Command-line interface: one compact JSON record per line on stdout.

Exit status 0 on success, 1 on domain errors, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import classify, dynreal, orders, space
from .errors import OrdspaceError
from .exact import OrderParam, format_rational
from .groups import ball, group_from_json
from .orders import CMP_NAMES, DEFAULT_EXP_BOUND, DEFAULT_RADIUS, SIGN_NAMES


class UsageError(Exception):
    pass


def emit(record) -> None:
    print(json.dumps(record, sort_keys=True, separators=(",", ":"), ensure_ascii=False))


def _json_flag(args, name):
    raw = getattr(args, name)
    if raw is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--{name.replace('_', '-')}: invalid JSON ({exc.msg})") from None


def _group(args):
    return group_from_json(_json_flag(args, "group"))


def _ordering(args, group, name="ordering"):
    return orders.ordering_from_json(group, _json_flag(args, name))


def _word(args, group, name):
    raw = getattr(args, name)
    if raw is None:
        raise UsageError(f"--{name} is required")
    return group.eval_word(raw)


def cmd_nf(args):
    group = _group(args)
    emit(group.elem_to_json(_word(args, group, "word")))


def cmd_cmp(args):
    group = _group(args)
    o = _ordering(args, group)
    emit({"cmp": CMP_NAMES[o.compare(_word(args, group, "x"), _word(args, group, "y"))]})


def cmd_sign(args):
    group = _group(args)
    o = _ordering(args, group)
    emit({"sign": SIGN_NAMES[o.sign(_word(args, group, "word"))]})


def cmd_ball(args):
    group = _group(args)
    b = ball(group, args.radius)
    for x in b:
        emit({"length": b.length(x), "word": b.word(x), "elem": group.elem_to_json(x)})
    emit({"size": len(b.elements), "radius": args.radius})


def cmd_enum(args):
    group = _group(args)
    if args.kind is None:
        raise UsageError("--kind is required (left or conradian)")
    for o in classify.enum_orderings(group, args.kind):
        emit(o.descriptor())


def cmd_check(args):
    group = _group(args)
    emit(orders.check_cone_axioms(_ordering(args, group), args.radius).to_json())


def cmd_conradian(args):
    group = _group(args)
    emit(orders.check_conradian(_ordering(args, group), args.radius).to_json())


def cmd_cofinal(args):
    group = _group(args)
    emit(orders.check_cofinal(_ordering(args, group), args.radius, args.exp_bound).to_json())


def cmd_dist(args):
    group = _group(args)
    o1, o2 = _ordering(args, group, "o1"), _ordering(args, group, "o2")
    out = space.agreement_radius(o1, o2, args.max_radius).to_json()
    out["dist"] = str(space.dist(o1, o2, args.max_radius))
    emit(out)


def cmd_converge(args):
    group = _group(args)
    raw = _json_flag(args, "params")
    if not isinstance(raw, list):
        raise UsageError("--params must be a JSON list of parameters")
    params = [OrderParam.from_json(p) for p in raw]
    target = _ordering(args, group, "target")
    for p, result in space.converge_experiment(group, params, target, args.max_radius):
        out = result.to_json()
        out["eps"] = p.to_json()
        emit(out)


def cmd_probe(args):
    group = _group(args)
    o = _ordering(args, group)
    positives = [group.eval_word(w) for w in args.positive or []]
    emit(space.probe_neighborhood(o, positives).to_json(group))


def cmd_dynreal(args):
    group = _group(args)
    o = _ordering(args, group)
    if args.words:
        enumeration = [group.eval_word(w) for w in args.words.split(",")]
    else:
        enumeration = dynreal.ball_enumeration(group, args.radius)
    rmap = dynreal.realize(o, enumeration)
    for x, t in rmap.entries:
        emit({"word": group.format_elem(x), "t": format_rational(t)})
    report = dynreal.check_realization(rmap, o)
    emit({"ok": report.ok, "checks": report.details["checks"], "violations": [v.to_json() for v in report.violations]})


def cmd_classify(args):
    d = classify.series_from_json(_json_flag(args, "series"))
    report = classify.validate_series(d)
    if not report.ok:
        emit(report.to_json())
        raise OrdspaceError(report.violations[0].message)
    emit(
        {
            "c_count": classify.count_to_json(classify.count_c_orderings(d)),
            "lo_count": classify.count_to_json(classify.count_left_orderings(d)),
            "verdict": classify.verdict(d).value,
        }
    )


COMMANDS = {
    "nf": (cmd_nf, "normal form of a word", ["group", "word"]),
    "cmp": (cmd_cmp, "compare two elements", ["group", "ordering", "x", "y"]),
    "sign": (cmd_sign, "sign of an element", ["group", "ordering", "word"]),
    "ball": (cmd_ball, "list a word-length ball", ["group", "radius"]),
    "enum": (cmd_enum, "enumerate all orderings of a family with finitely many", ["group", "kind"]),
    "check": (cmd_check, "positive cone axioms on a ball", ["group", "ordering", "radius"]),
    "conradian": (cmd_conradian, "Conradian property on a ball", ["group", "ordering", "radius4"]),
    "cofinal": (cmd_cofinal, "a-boundedness on a ball", ["group", "ordering", "radius", "exp_bound"]),
    "dist": (cmd_dist, "agreement radius and distance", ["group", "o1", "o2", "max_radius"]),
    "converge": (cmd_converge, "agreement radius table", ["group", "params", "target", "max_radius"]),
    "probe": (cmd_probe, "find a nearby ordering", ["group", "ordering", "positive"]),
    "dynreal": (cmd_dynreal, "dynamical realization", ["group", "ordering", "radius4", "words"]),
    "classify": (cmd_classify, "counts and verdict for a series descriptor", ["series"]),
}

_FLAGS = {
    "group": dict(flag="--group", help="group descriptor (JSON)"),
    "ordering": dict(flag="--ordering", help="ordering descriptor (JSON)"),
    "word": dict(flag="--word", help="word in the generators"),
    "x": dict(flag="--x", help="first element (word)"),
    "y": dict(flag="--y", help="second element (word)"),
    "o1": dict(flag="--o1", help="first ordering (JSON)"),
    "o2": dict(flag="--o2", help="second ordering (JSON)"),
    "target": dict(flag="--target", help="target ordering (JSON)"),
    "params": dict(flag="--params", help="JSON list of Smirnov parameters"),
    "series": dict(flag="--series", help="series descriptor (JSON)"),
    "kind": dict(flag="--kind", choices=["left", "conradian"]),
    "radius": dict(flag="--radius", type=int, default=DEFAULT_RADIUS),
    "radius4": dict(flag="--radius", type=int, default=4),
    "max_radius": dict(flag="--max-radius", type=int, default=8),
    "exp_bound": dict(flag="--exp-bound", type=int, default=DEFAULT_EXP_BOUND),
    "positive": dict(flag="--positive", action="append", help="positive element (repeatable)"),
    "words": dict(flag="--words", help="comma-separated enumeration starting with id"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordspace", description="Exact experiments with left-orderings.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text, flags) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        for key in flags:
            spec = dict(_FLAGS[key])
            p.add_argument(spec.pop("flag"), **spec)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key in ("radius", "max_radius", "exp_bound"):
        if getattr(args, key, 0) is not None and getattr(args, key, 0) < 0:
            print(f"ordspace: --{key.replace('_', '-')} must be non-negative", file=sys.stderr)
            return 2
    try:
        args.func(args)
    except UsageError as exc:
        print(f"ordspace {args.command}: {exc}", file=sys.stderr)
        return 2
    except (OrdspaceError, ValueError, ZeroDivisionError) as exc:
        print(f"ordspace {args.command}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
