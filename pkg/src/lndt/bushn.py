"""Depth-indexed bush encoding and conversions to the universal form.

A level-``n`` node stands for a bush nested ``n`` times: atoms live at
level 0, and a cons cell at level ``n`` carries a head one level shallower
and a tail one level deeper. Levels are stored on every node so the
discipline is checkable at runtime.

The encoding does not fit the spine-over-transformer pattern the rest of
the library derives operations from, so no operations are re-derived here;
the module only demonstrates value-level equivalence via the round trip.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import AtomSort, BaseT, BushC, app_iter
from .errors import IllFormedError, LevelError
from .values import Atom, SeqNode, Val, WfFail, infer_sort, wf


@dataclass(frozen=True)
class BaseBN:
    atom: Atom


@dataclass(frozen=True)
class NilBN:
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("empty spines exist at level >= 1 only")


@dataclass(frozen=True)
class ConsBN:
    level: int
    head: "BushNVal"
    tail: "BushNVal"

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("cons cells exist at level >= 1 only")


BushNVal = BaseBN | NilBN | ConsBN


def bushn_level(b: BushNVal) -> int:
    match b:
        case BaseBN(_):
            return 0
        case NilBN(level):
            return level
        case ConsBN(level, _, _):
            return level
    raise TypeError(f"not a depth-indexed bush: {b!r}")


def wf_bushn(b: BushNVal) -> bool:
    """Check the level discipline: head one below, tail one above."""
    match b:
        case BaseBN(_) | NilBN(_):
            return True
        case ConsBN(level, head, tail):
            return (
                bushn_level(head) == level - 1
                and bushn_level(tail) == level + 1
                and wf_bushn(head)
                and wf_bushn(tail)
            )
    raise TypeError(f"not a depth-indexed bush: {b!r}")


def to_bushn(v: Val, level: int = 1) -> BushNVal:
    """Encode a bush nested ``level`` times into the depth-indexed form."""
    if level < 1:
        raise LevelError("encoding starts at level 1")
    sort = infer_sort(v) or AtomSort.INT
    report = wf(app_iter(BushC(), level, BaseT(sort)), v)
    if isinstance(report, WfFail):
        raise IllFormedError(report)
    return _encode_spine(v, level)


def _encode_spine(v: Val, level: int) -> BushNVal:
    assert isinstance(v, SeqNode)
    if not v.items:
        return NilBN(level)
    head = v.items[0]
    if level == 1:
        assert isinstance(head, Atom)
        head_bn: BushNVal = BaseBN(head)
    else:
        head_bn = _encode_spine(head, level - 1)
    tail_bn = _encode_spine(SeqNode(v.items[1:]), level + 1)
    return ConsBN(level, head_bn, tail_bn)


def from_bushn(b: BushNVal) -> Val:
    """Decode back to the universal form; exact inverse of :func:`to_bushn`."""
    if isinstance(b, BaseBN):
        raise LevelError("a bare atom is not a bush spine")
    if not wf_bushn(b):
        raise LevelError("level discipline violated")
    return _decode_spine(b)


def _decode_spine(b: BushNVal) -> Val:
    match b:
        case NilBN(_):
            return SeqNode(())
        case ConsBN(level, head, tail):
            head_val = head.atom if level == 1 else _decode_spine(head)
            rest = _decode_spine(tail)
            assert isinstance(rest, SeqNode)
            return SeqNode((head_val, *rest.items))
    raise LevelError("a bare atom is not a bush spine")


def bushn_atoms(b: BushNVal) -> list:
    """Atom payloads in order (head before tail)."""
    match b:
        case BaseBN(a):
            return [a.payload]
        case NilBN(_):
            return []
        case ConsBN(_, head, tail):
            return bushn_atoms(head) + bushn_atoms(tail)
    raise TypeError(f"not a depth-indexed bush: {b!r}")
