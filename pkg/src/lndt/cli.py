"""``lndtool``: check, transform, query, generate and law-test values.

Exit codes: 0 success or positive decision; 1 negative decision (no
witness, a counterexample, unequal values, ill-formed input to ``check``);
2 parse or well-formedness error on inputs; 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath
from typing import Any, Callable, Optional

from . import laws as lawmod
from . import spread as ops
from .codes import App, AtomSort, BaseT, Code, parse_code
from .errors import LndtError
from .values import Path, SeqNode, SeqStep, Val, WfFail, atom, parse_val, print_val, wf


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_FNS: dict[str, tuple[Callable, set[AtomSort]]] = {
    "succ": (lambda n: n + 1, {AtomSort.INT}),
    "double": (lambda n: 2 * n, {AtomSort.INT}),
    "square": (lambda n: n * n, {AtomSort.INT}),
    "id": (lambda a: a, {AtomSort.INT, AtomSort.STR}),
    "to_str": (lambda a: str(a), {AtomSort.INT, AtomSort.STR}),
}

_OPS: dict[str, tuple[Callable, Any, set[AtomSort]]] = {
    "add": (lambda x, y: x + y, 0, {AtomSort.INT}),
    "mul": (lambda x, y: x * y, 1, {AtomSort.INT}),
    "concat": (lambda x, y: x + y, "", {AtomSort.STR}),
}


def _predicate(name: str, base: AtomSort) -> Callable[[Any], bool]:
    if name == "even":
        pred, sorts = (lambda n: n % 2 == 0), {AtomSort.INT}
    elif name == "odd":
        pred, sorts = (lambda n: n % 2 == 1), {AtomSort.INT}
    elif name.startswith("gt:"):
        k = _int_flag(name[3:], "gt")
        pred, sorts = (lambda n: n > k), {AtomSort.INT}
    elif name.startswith("eq:"):
        k = _int_flag(name[3:], "eq")
        pred, sorts = (lambda n: n == k), {AtomSort.INT}
    elif name.startswith("eqs:"):
        s = name[4:]
        pred, sorts = (lambda a: a == s), {AtomSort.STR}
    else:
        raise UsageError(f"unknown predicate {name!r}")
    if base not in sorts:
        raise UsageError(f"predicate {name!r} does not apply to base {base.value}")
    return pred


def _int_flag(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{name} wants an integer, got {text!r}") from None


def _path_text(p: Path) -> str:
    return p.text()


def _path_json(p: Path) -> list[dict[str, int]]:
    return [
        {"seq": s.index} if isinstance(s, SeqStep) else {"tup": s.index} for s in p.steps
    ]


def _emit_json(obj: Any) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _read_value_arg(arg: str) -> Val:
    if arg.startswith("@"):
        arg = FsPath(arg[1:]).read_text(encoding="utf-8")
    return parse_val(arg)


def _parse_domain(text: str, base: AtomSort) -> tuple:
    parts = text.split(",") if text else []
    if not parts:
        raise UsageError("domain must list at least one atom")
    if base is AtomSort.INT:
        return tuple(_int_flag(p, "domain") for p in parts)
    return tuple(parts)


def _build_parser() -> _Parser:
    parser = _Parser(prog="lndtool", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _Parser, value: bool = True) -> None:
        p.add_argument("--type", required=True, help="code expression or alias")
        p.add_argument("--base", choices=["int", "str"], default="int")
        p.add_argument("--format", choices=["text", "json"], default="text")
        if value:
            p.add_argument("value", help="inline value or @file")

    common(sub.add_parser("check"))
    p = sub.add_parser("map")
    p.add_argument("--fn", required=True, choices=sorted(_FNS))
    common(p)
    for name in ("foldl", "foldr"):
        p = sub.add_parser(name)
        p.add_argument("--op", required=True, choices=sorted(_OPS))
        p.add_argument("--init", default=None)
        common(p)
    for name in ("any", "all", "member"):
        p = sub.add_parser(name)
        p.add_argument("--pred", required=True)
        common(p)
    p = sub.add_parser("eq")
    p.add_argument("--type", required=True)
    p.add_argument("--base", choices=["int", "str"], default="int")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("value", help="inline value or @file")
    p.add_argument("value2", help="inline value or @file")
    for name in ("size", "flatten", "show", "empty"):
        common(sub.add_parser(name))
    p = sub.add_parser("gen")
    common(p, value=False)
    p.add_argument("--budget", type=int, default=20)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--domain", default="0,1,2,3,4,5,6,7,8,9")
    p = sub.add_parser("enum")
    common(p, value=False)
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--domain", default="0,1")
    p = sub.add_parser("laws")
    common(p, value=False)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--budget", type=int, default=20)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--domain", default="0,1,2,3,4,5,6,7,8,9")
    return parser


def _require_wf_input(code: Code, base: AtomSort, v: Val) -> None:
    report = wf(App(code, BaseT(base)), v)
    if isinstance(report, WfFail):
        raise LndtError(f"ill-formed value: {report.describe()}")


def _dispatch(args: argparse.Namespace) -> int:
    code = parse_code(args.type)
    base = AtomSort.STR if args.base == "str" else AtomSort.INT
    as_json = args.format == "json"

    if args.command == "check":
        report = wf(App(code, BaseT(base)), _read_value_arg(args.value))
        if isinstance(report, WfFail):
            if as_json:
                _emit_json({"ok": False, "reason": report.reason.value, "at": _path_json(report.at)})
            else:
                print(report.describe())
            return 1
        _emit_json({"ok": True}) if as_json else print("ok")
        return 0

    if args.command == "map":
        fn, sorts = _FNS[args.fn]
        if base not in sorts:
            raise UsageError(f"--fn {args.fn} does not apply to base {base.value}")
        v = _read_value_arg(args.value)
        _require_wf_input(code, base, v)
        out = print_val(ops.map(code, fn, v))
        _emit_json(out) if as_json else print(out)
        return 0

    if args.command in ("foldl", "foldr"):
        step, init, sorts = _OPS[args.op]
        if base not in sorts:
            raise UsageError(f"--op {args.op} does not apply to base {base.value}")
        if args.init is not None:
            init = _int_flag(args.init, "init") if base is AtomSort.INT else args.init
        v = _read_value_arg(args.value)
        _require_wf_input(code, base, v)
        if args.command == "foldl":
            result = ops.foldl(code, step, init, v)
        else:
            result = ops.foldr(code, step, init, v)
        _emit_json(result) if as_json else print(result)
        return 0

    if args.command in ("any", "member"):
        pred = _predicate(args.pred, base)
        v = _read_value_arg(args.value)
        _require_wf_input(code, base, v)
        if args.command == "member" and args.pred.startswith("eq:"):
            hit = ops.member(code, _int_flag(args.pred[3:], "eq"), v)
        elif args.command == "member" and args.pred.startswith("eqs:"):
            hit = ops.member(code, args.pred[4:], v)
        else:
            hit = ops.any(code, pred, v)
        if hit is None:
            _emit_json(None) if as_json else print("none")
            return 1
        _emit_json(_path_json(hit)) if as_json else print(_path_text(hit))
        return 0

    if args.command == "all":
        pred = _predicate(args.pred, base)
        v = _read_value_arg(args.value)
        _require_wf_input(code, base, v)
        verdict = ops.all(code, pred, v)
        if isinstance(verdict, ops.Counterexample):
            if as_json:
                _emit_json({"holds": False, "counterexample": _path_json(verdict.at)})
            else:
                print(f"counterexample at {_path_text(verdict.at)}")
            return 1
        _emit_json({"holds": True}) if as_json else print("all")
        return 0

    if args.command == "eq":
        v = _read_value_arg(args.value)
        w = _read_value_arg(args.value2)
        _require_wf_input(code, base, v)
        _require_wf_input(code, base, w)
        equal = ops.eq(code, v, w)
        _emit_json(equal) if as_json else print("true" if equal else "false")
        return 0 if equal else 1

    if args.command == "size":
        v = _read_value_arg(args.value)
        _require_wf_input(code, base, v)
        count = ops.size(code, v)
        _emit_json(count) if as_json else print(count)
        return 0

    if args.command == "flatten":
        v = _read_value_arg(args.value)
        _require_wf_input(code, base, v)
        atoms = ops.flatten(code, v)
        if as_json:
            _emit_json(atoms)
        else:
            print(print_val(SeqNode(tuple(atom(p) for p in atoms))))
        return 0

    if args.command == "show":
        v = _read_value_arg(args.value)
        _require_wf_input(code, base, v)
        out = ops.show(code, v)
        _emit_json(out) if as_json else print(out)
        return 0

    if args.command == "empty":
        v = _read_value_arg(args.value)
        _require_wf_input(code, base, v)
        empty = ops.is_empty(code, v)
        _emit_json(empty) if as_json else print("true" if empty else "false")
        return 0

    if args.command == "gen":
        cfg = lawmod.GenConfig(args.budget, args.seed, _parse_domain(args.domain, base))
        v = lawmod.gen_val(App(code, BaseT(base)), cfg)
        out = print_val(v)
        _emit_json(out) if as_json else print(out)
        return 0

    if args.command == "enum":
        domain = _parse_domain(args.domain, base)
        vals = lawmod.enum_vals(App(code, BaseT(base)), args.max_size, domain)
        if as_json:
            _emit_json([print_val(v) for v in vals])
        else:
            for v in vals:
                print(print_val(v))
        return 0

    if args.command == "laws":
        cfg = lawmod.GenConfig(args.budget, args.seed, _parse_domain(args.domain, base))
        report = lawmod.run_laws(code, cfg, args.cases)
        print(report.to_json() if as_json else report.to_text())
        return 0 if report.total_failures() == 0 else 1

    raise UsageError(f"unknown subcommand {args.command!r}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 3
    try:
        return _dispatch(args)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 3
    except (LndtError, OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
