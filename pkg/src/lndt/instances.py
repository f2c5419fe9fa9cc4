"""Named instances and smart constructors for their standard shapes.

The alias table lives in :mod:`lndt.codes`; this module pairs each fixed
alias with documentation and provides constructors that build well-formed
values directly from flat atom lists. Bushes have no canonical "full"
shape, so there is no bush constructor here: bush values come from
parsing, generation, or manual assembly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .codes import Code, resolve_alias
from .errors import SortMismatchError
from .values import Atom, SeqNode, TupNode, Val, atom


@dataclass(frozen=True)
class InstanceEntry:
    name: str
    code: Code
    doc: str


INSTANCES: tuple[InstanceEntry, ...] = (
    InstanceEntry("list", resolve_alias("list"), "plain linked list (one-slot tuples)"),
    InstanceEntry("nest", resolve_alias("nest"), "nest: element i is a perfect pair tree of depth i"),
    InstanceEntry("maybe", resolve_alias("maybe"), "maybe: empty or a single element"),
    InstanceEntry("bush", resolve_alias("bush"), "bush: spine nested with itself"),
    InstanceEntry("sqlist", resolve_alias("sqlist"), "squared list: spine over lists"),
)


def _atoms(payloads: Iterable[int | str]) -> list[Atom]:
    out = [atom(p) for p in payloads]
    sorts = {a.sort for a in out}
    if len(sorts) > 1:
        raise SortMismatchError("atoms of a single structure must share one sort")
    return out


def list_of(payloads: Iterable[int | str]) -> Val:
    """List value holding ``payloads`` in order.

    Element ``i`` of the spine sits under ``i`` one-slot tuple wrappers, so
    ``list_of([1, 2, 3])`` prints as ``[1;(2);((3))]``.
    """
    items: list[Val] = []
    for i, a in enumerate(_atoms(payloads)):
        node: Val = a
        for _ in range(i):
            node = TupNode((node,))
        items.append(node)
    return SeqNode(tuple(items))


def _perfect(branch: int, depth: int, leaves: list[Atom]) -> Val:
    if depth == 0:
        return leaves[0]
    share = len(leaves) // branch
    return TupNode(
        tuple(
            _perfect(branch, depth - 1, leaves[j * share : (j + 1) * share])
            for j in range(branch)
        )
    )


def nperfect_full(n: int, depth: int, payloads: Iterable[int | str]) -> Val:
    """Full ``n``-ary perfect tree value with ``depth`` spine layers.

    Layer ``i`` holds ``n**i`` atoms, so ``payloads`` must supply exactly
    ``sum(n**i for i in range(depth))`` of them, layer by layer.
    """
    if n < 1:
        raise ValueError("branching factor must be >= 1")
    leaves = _atoms(payloads)
    expected = sum(n**i for i in range(depth))
    if len(leaves) != expected:
        raise ValueError(f"need {expected} atoms for {depth} layers, got {len(leaves)}")
    items: list[Val] = []
    offset = 0
    for i in range(depth):
        count = n**i
        items.append(_perfect(n, i, leaves[offset : offset + count]))
        offset += count
    return SeqNode(tuple(items))


def nest_full(layers: int, payloads: Iterable[int | str]) -> Val:
    """Full nest with ``layers`` spine layers; needs ``2**layers - 1`` atoms."""
    return nperfect_full(2, layers, payloads)


def maybe_of(x: Optional[int | str]) -> Val:
    """``None`` becomes ``[]``; a payload becomes the one-element spine."""
    if x is None:
        return SeqNode(())
    return SeqNode((atom(x),))
