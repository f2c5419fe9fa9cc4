"""Independent reference implementations used as test oracles.

Everything here works on the plain value tree, ignoring codes and the
whole seed/spread machinery on purpose: a brute-force depth-first walk
defines flatten order, witness paths, and the skeleton-preserving map.
"""

from __future__ import annotations

from functools import reduce

from lndt.values import Atom, Path, SeqNode, SeqStep, TupNode, TupStep, Val, atom


def ref_paths(v: Val, prefix: tuple = ()) -> list[tuple[Path, object]]:
    """All (path, payload) pairs in depth-first left-to-right order."""
    match v:
        case Atom(_, payload):
            return [(Path(prefix), payload)]
        case TupNode(children):
            out = []
            for i, c in enumerate(children):
                out.extend(ref_paths(c, prefix + (TupStep(i),)))
            return out
        case SeqNode(items):
            out = []
            for i, w in enumerate(items):
                out.extend(ref_paths(w, prefix + (SeqStep(i),)))
            return out
    raise TypeError(v)


def ref_flatten(v: Val) -> list:
    return [payload for _, payload in ref_paths(v)]


def ref_map(v: Val, f) -> Val:
    """Rebuild the skeleton with every atom payload passed through ``f``."""
    match v:
        case Atom(_, payload):
            return atom(f(payload))
        case TupNode(children):
            return TupNode(tuple(ref_map(c, f) for c in children))
        case SeqNode(items):
            return SeqNode(tuple(ref_map(w, f) for w in items))
    raise TypeError(v)


def ref_any(v: Val, p) -> Path | None:
    for path, payload in ref_paths(v):
        if p(payload):
            return path
    return None


def ref_all(v: Val, p) -> Path | None:
    """None when every atom satisfies ``p``, else the first failing path."""
    for path, payload in ref_paths(v):
        if not p(payload):
            return path
    return None


def ref_foldl(step, init, v: Val):
    return reduce(step, ref_flatten(v), init)


def ref_foldr(step, init, v: Val):
    acc = init
    for payload in reversed(ref_flatten(v)):
        acc = step(payload, acc)
    return acc


def ref_size(v: Val) -> int:
    return len(ref_flatten(v))


def ref_skeleton(v: Val):
    """Tree shape with atoms erased, for map-naturality checks."""
    match v:
        case Atom(_, _):
            return "*"
        case TupNode(children):
            return ("tup", tuple(ref_skeleton(c) for c in children))
        case SeqNode(items):
            return ("seq", tuple(ref_skeleton(w) for w in items))
    raise TypeError(v)


def raw_trees(max_size: int, domain: tuple):
    """Every raw value tree within the node bound, atoms drawn from ``domain``.

    Includes ill-formed shapes (empty tuples, mixed arities); the point is
    to feed an unfiltered space to wf and compare against the enumerator.
    """
    by_size: dict[int, list[Val]] = {}

    def of_size(n: int) -> list[Val]:
        if n in by_size:
            return by_size[n]
        out: list[Val] = []
        if n == 1:
            out.extend(atom(a) for a in domain)
            out.append(TupNode(()))
            out.append(SeqNode(()))
        else:
            for combo in compositions(n - 1):
                for children in child_lists(combo):
                    out.append(TupNode(children))
                    out.append(SeqNode(children))
        by_size[n] = out
        return out

    def compositions(total: int) -> list[tuple[int, ...]]:
        if total == 0:
            return [()]
        result = []
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                result.append((first, *rest))
        return result

    def child_lists(sizes: tuple[int, ...]) -> list[tuple[Val, ...]]:
        if not sizes:
            return [()]
        tails = child_lists(sizes[1:])
        return [(head, *tail) for head in of_size(sizes[0]) for tail in tails]

    for n in range(1, max_size + 1):
        yield from of_size(n)
