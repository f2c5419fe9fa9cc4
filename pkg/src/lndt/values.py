"""Universal values, well-formedness, and the canonical text format.

Every inhabitant of every code is one finite tree: atoms at the leaves,
fixed-arity tuple nodes, and spine (sequence) nodes. Arity and sort
constraints are not enforced at construction time; they are checked after
the fact by :func:`wf`, which answers with a report so diagnostics can
carry the failing position instead of raising.

Canonical text: integers in base 10, strings double-quoted with ``\\\"``
and ``\\\\`` as the only escapes, tuples comma-joined in parentheses,
sequences semicolon-joined in brackets, no whitespace.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .codes import App, AtomSort, BaseT, BushC, Lndt, Null, Tup, TypeExpr, app_iter
from .errors import ParseError, PathError


@dataclass(frozen=True)
class Atom:
    sort: AtomSort
    payload: int | str

    def __post_init__(self):
        ok = (
            isinstance(self.payload, int) and not isinstance(self.payload, bool)
            if self.sort is AtomSort.INT
            else isinstance(self.payload, str)
        )
        if not ok:
            raise ValueError(f"payload {self.payload!r} does not fit sort {self.sort.value}")


@dataclass(frozen=True)
class TupNode:
    children: tuple["Val", ...]


@dataclass(frozen=True)
class SeqNode:
    items: tuple["Val", ...]


Val = Atom | TupNode | SeqNode


def atom(payload: int | str) -> Atom:
    """Wrap a payload in an atom of the matching sort."""
    if isinstance(payload, bool) or not isinstance(payload, (int, str)):
        raise ValueError(f"atoms hold ints or strs, not {type(payload).__name__}")
    return Atom(AtomSort.INT if isinstance(payload, int) else AtomSort.STR, payload)


@dataclass(frozen=True)
class TupStep:
    index: int


@dataclass(frozen=True)
class SeqStep:
    index: int


PathStep = TupStep | SeqStep


@dataclass(frozen=True)
class Path:
    """Position of a node inside a value: the steps taken from the root."""

    steps: tuple[PathStep, ...] = ()

    def text(self) -> str:
        parts = (
            f"tup:{s.index}" if isinstance(s, TupStep) else f"seq:{s.index}"
            for s in self.steps
        )
        return "[" + ",".join(parts) + "]"


class WfReason(Enum):
    ARITY_MISMATCH = "ArityMismatch"
    NULL_INHABITED = "NullInhabited"
    SORT_MISMATCH = "SortMismatch"
    EXPECTED_TUPLE = "ExpectedTuple"
    EXPECTED_SEQ = "ExpectedSeq"
    EXPECTED_ATOM = "ExpectedAtom"


@dataclass(frozen=True)
class WfOk:
    def describe(self) -> str:
        return "ok"


@dataclass(frozen=True)
class WfFail:
    at: Path
    reason: WfReason

    def describe(self) -> str:
        return f"{self.reason.value} at {self.at.text()}"


WfReport = WfOk | WfFail

_OK = WfOk()


def wf(t: TypeExpr, v: Val) -> WfReport:
    """Decide whether ``v`` inhabits ``t``.

    Spine element ``i`` must inhabit the inner type nested ``i`` times;
    nothing inhabits an application of the null transformer; a bush
    application behaves as one spine layer over bush.
    """
    return _wf(t, v, ())


def _wf(t: TypeExpr, v: Val, at: tuple[PathStep, ...]) -> WfReport:
    match t:
        case BaseT(sort):
            if not isinstance(v, Atom):
                return WfFail(Path(at), WfReason.EXPECTED_ATOM)
            if v.sort is not sort:
                return WfFail(Path(at), WfReason.SORT_MISMATCH)
            return _OK
        case App(Null(), _):
            return WfFail(Path(at), WfReason.NULL_INHABITED)
        case App(Tup(n), inner):
            if not isinstance(v, TupNode):
                return WfFail(Path(at), WfReason.EXPECTED_TUPLE)
            if len(v.children) != n + 1:
                return WfFail(Path(at), WfReason.ARITY_MISMATCH)
            for i, child in enumerate(v.children):
                report = _wf(inner, child, at + (TupStep(i),))
                if isinstance(report, WfFail):
                    return report
            return _OK
        case App(Lndt(g), inner):
            if not isinstance(v, SeqNode):
                return WfFail(Path(at), WfReason.EXPECTED_SEQ)
            for i, item in enumerate(v.items):
                report = _wf(app_iter(g, i, inner), item, at + (SeqStep(i),))
                if isinstance(report, WfFail):
                    return report
            return _OK
        case App(BushC(), inner):
            return _wf(App(Lndt(BushC()), inner), v, at)
    raise TypeError(f"not a type expression: {t!r}")


def atom_text(a: Atom) -> str:
    """Canonical rendering of a single atom."""
    if a.sort is AtomSort.INT:
        return str(a.payload)
    escaped = str(a.payload).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def print_val(v: Val) -> str:
    """Render a value in canonical text; inverse of :func:`parse_val`."""
    match v:
        case Atom():
            return atom_text(v)
        case TupNode(children):
            return "(" + ",".join(print_val(c) for c in children) + ")"
        case SeqNode(items):
            return "[" + ";".join(print_val(w) for w in items) + "]"
    raise TypeError(f"not a value: {v!r}")


def parse_val(text: str) -> Val:
    """Parse the canonical value format (whitespace between tokens allowed).

    No well-formedness checking happens here; the result may be raw.
    """
    v, pos = _val_at(text, _ws(text, 0))
    pos = _ws(text, pos)
    if pos != len(text):
        raise _syntax(text, pos, "trailing input after value")
    return v


def struct_size(v: Val) -> int:
    """Number of nodes, atoms included; strictly dominates every subvalue."""
    match v:
        case Atom():
            return 1
        case TupNode(children):
            return 1 + sum(struct_size(c) for c in children)
        case SeqNode(items):
            return 1 + sum(struct_size(w) for w in items)
    raise TypeError(f"not a value: {v!r}")


def atom_at(v: Val, path: Path) -> Atom:
    """Follow ``path`` from the root of ``v``; the destination must be an atom."""
    node = v
    for step in path.steps:
        match step, node:
            case TupStep(index=i), TupNode(children=cs) if 0 <= i < len(cs):
                node = cs[i]
            case SeqStep(index=i), SeqNode(items=ws) if 0 <= i < len(ws):
                node = ws[i]
            case _:
                raise PathError(f"step {step!r} does not address a node")
    if not isinstance(node, Atom):
        raise PathError("path ends at a non-atom")
    return node


def infer_sort(v: Val) -> AtomSort | None:
    """Sort of the first atom in depth-first order, or None if atomless."""
    match v:
        case Atom(sort, _):
            return sort
        case TupNode(children):
            kids = children
        case SeqNode(items):
            kids = items
        case _:
            raise TypeError(f"not a value: {v!r}")
    for child in kids:
        sort = infer_sort(child)
        if sort is not None:
            return sort
    return None


def _ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _syntax(text: str, pos: int, message: str) -> ParseError:
    return ParseError(message, len(text[:pos].encode("utf-8")))


def _val_at(text: str, pos: int) -> tuple[Val, int]:
    if pos >= len(text):
        raise _syntax(text, pos, "unexpected end of input")
    ch = text[pos]
    if ch == "[":
        items: list[Val] = []
        pos = _ws(text, pos + 1)
        if pos < len(text) and text[pos] == "]":
            return SeqNode(()), pos + 1
        while True:
            item, pos = _val_at(text, pos)
            items.append(item)
            pos = _ws(text, pos)
            if pos < len(text) and text[pos] == ";":
                pos = _ws(text, pos + 1)
                continue
            if pos < len(text) and text[pos] == "]":
                return SeqNode(tuple(items)), pos + 1
            raise _syntax(text, pos, "expected ';' or ']'")
    if ch == "(":
        children: list[Val] = []
        pos = _ws(text, pos + 1)
        while True:
            child, pos = _val_at(text, pos)
            children.append(child)
            pos = _ws(text, pos)
            if pos < len(text) and text[pos] == ",":
                pos = _ws(text, pos + 1)
                continue
            if pos < len(text) and text[pos] == ")":
                return TupNode(tuple(children)), pos + 1
            raise _syntax(text, pos, "expected ',' or ')'")
    if ch == '"':
        return _string_at(text, pos)
    if ch == "-" or ch.isdigit():
        return _int_at(text, pos)
    raise _syntax(text, pos, "expected a value")


def _string_at(text: str, pos: int) -> tuple[Atom, int]:
    chars: list[str] = []
    pos += 1
    while pos < len(text):
        ch = text[pos]
        if ch == '"':
            return Atom(AtomSort.STR, "".join(chars)), pos + 1
        if ch == "\\":
            if pos + 1 >= len(text) or text[pos + 1] not in ('"', "\\"):
                raise _syntax(text, pos, "bad escape (only \\\" and \\\\ exist)")
            chars.append(text[pos + 1])
            pos += 2
            continue
        chars.append(ch)
        pos += 1
    raise _syntax(text, pos, "unterminated string")


def _int_at(text: str, pos: int) -> tuple[Atom, int]:
    start = pos
    if text[pos] == "-":
        pos += 1
    digits = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == digits:
        raise _syntax(text, digits, "expected digits")
    return Atom(AtomSort.INT, int(text[start:pos])), pos
