"""The universe of type-transformer codes.

A code names a transformer of types: fixed-arity tuples, the uninhabited
transformer, a linked-nested spine over an inner code, or the self-nested
bush transformer. Applying codes to a base atom sort yields type
expressions, which the well-formedness judgment in :mod:`lndt.values`
checks values against.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import AliasError, ParseError


class AtomSort(Enum):
    INT = "int"
    STR = "str"


@dataclass(frozen=True)
class Tup:
    """Tuple transformer holding ``n + 1`` slots (never empty)."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("tuple index must be non-negative")


@dataclass(frozen=True)
class Null:
    """Transformer with no inhabitants at any type."""


@dataclass(frozen=True)
class Lndt:
    """Linked nested spine over ``inner``: empty, or a head consed onto a
    spine whose elements are nested one step deeper."""

    inner: "Code"


@dataclass(frozen=True)
class BushC:
    """Self-nested transformer; unfolds to ``Lndt(BushC())`` wherever a
    structural rule needs one layer of spine."""


Code = Tup | Null | Lndt | BushC


@dataclass(frozen=True)
class BaseT:
    sort: AtomSort


@dataclass(frozen=True)
class App:
    code: Code
    inner: "TypeExpr"


TypeExpr = BaseT | App


_FIXED_ALIASES: dict[str, Code] = {
    "list": Lndt(Tup(0)),
    "nest": Lndt(Tup(1)),
    "maybe": Lndt(Null()),
    "bush": BushC(),
    "sqlist": Lndt(Lndt(Tup(0))),
}


def resolve_alias(name: str) -> Code:
    """Map an instance alias to its code.

    Known aliases: ``list``, ``nest``, ``maybe``, ``bush``, ``sqlist`` and
    the family ``nperfect:<n>`` (n-ary perfect trees, branching factor
    ``n >= 1``; note ``nperfect:2`` coincides with ``nest``).
    """
    if name in _FIXED_ALIASES:
        return _FIXED_ALIASES[name]
    if name.startswith("nperfect:"):
        digits = name[len("nperfect:") :]
        if digits.isdigit() and int(digits) >= 1:
            return Lndt(Tup(int(digits) - 1))
        raise AliasError(f"nperfect wants a branching factor >= 1, got {name!r}")
    raise AliasError(f"unknown alias {name!r}")


def alias_names() -> tuple[str, ...]:
    """Fixed alias names, excluding the parametric ``nperfect:<n>`` family."""
    return tuple(_FIXED_ALIASES)


def print_code(c: Code) -> str:
    """Render a code in canonical form (never using alias sugar)."""
    match c:
        case Tup(n):
            return f"tup:{n}"
        case Null():
            return "null"
        case Lndt(inner):
            return f"lndt({print_code(inner)})"
        case BushC():
            return "bush"
    raise TypeError(f"not a code: {c!r}")


def parse_code(text: str) -> Code:
    """Parse ``tup:<n>``, ``null``, ``lndt(<code>)``, ``bush`` or an alias.

    Aliases are accepted wherever a code may appear, so ``lndt(nest)``
    denotes ``lndt(lndt(tup:1))``.
    """
    code, pos = _code_at(text, _ws(text, 0))
    pos = _ws(text, pos)
    if pos != len(text):
        raise _syntax(text, pos, "trailing input after code")
    return code


def app_iter(c: Code, i: int, t: TypeExpr) -> TypeExpr:
    """Apply ``c`` to ``t`` ``i`` times; ``app_iter(c, 0, t)`` is ``t``."""
    if i < 0:
        raise ValueError("iteration count must be non-negative")
    for _ in range(i):
        t = App(c, t)
    return t


def _ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _syntax(text: str, pos: int, message: str) -> ParseError:
    return ParseError(message, len(text[:pos].encode("utf-8")))


def _code_at(text: str, pos: int) -> tuple[Code, int]:
    start = pos
    while pos < len(text) and text[pos].isalpha():
        pos += 1
    word = text[start:pos]
    if not word:
        raise _syntax(text, start, "expected a code")
    if word == "tup":
        n, pos = _nat_suffix(text, pos)
        return Tup(n), pos
    if word == "null":
        return Null(), pos
    if word == "bush":
        return BushC(), pos
    if word == "lndt":
        pos = _expect(text, _ws(text, pos), "(")
        inner, pos = _code_at(text, _ws(text, pos))
        pos = _expect(text, _ws(text, pos), ")")
        return Lndt(inner), pos
    if word == "nperfect":
        n, pos = _nat_suffix(text, pos)
        return resolve_alias(f"nperfect:{n}"), pos
    return resolve_alias(word), pos


def _nat_suffix(text: str, pos: int) -> tuple[int, int]:
    pos = _expect(text, pos, ":")
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise _syntax(text, start, "expected a number")
    return int(text[start:pos]), pos


def _expect(text: str, pos: int, ch: str) -> int:
    if pos >= len(text) or text[pos] != ch:
        raise _syntax(text, pos, f"expected {ch!r}")
    return pos + 1
