"""Seed bundles per code and the lift from inner seeds to spine seeds.

Each code gets a :class:`Spreadable`, a bundle of higher-order lifters:
every field takes a function on elements (sub-values) and returns the same
kind of function on whole structures. :func:`spread` performs the one
derivation step the whole library rests on: given the bundle for a
transformer, it produces the bundle for the spine over that transformer.
Processing a spine applies the bundle's lift once more per position, since
element ``i`` is nested ``i`` times.

Tuples iterate their slots left to right; null seeds lift fine but their
lifted functions can never legitimately run (nothing inhabits a null
position) — if one does run, it counts the event and raises; the bush
bundle is the knot ``s = spread(s)``, tied by deferred self-reference and
driven by value structure, so every recursive call consumes a strict
subvalue.

Public operations take the code and work on atom payloads: ``map`` applies
a payload function everywhere, ``foldl``/``foldr`` combine payloads,
``any``/``all`` decide a payload predicate and report an evidence path,
``eq`` compares two values through the same derivation, ``show`` renders
canonically, and ``size``/``flatten``/``member``/``is_empty`` derive from
the folds. All of them insist on well-formed input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Any, Callable, Optional

from .codes import App, AtomSort, BaseT, BushC, Code, Lndt, Null, Tup
from .errors import IllFormedError, NullSeedError, SeedError, SortMismatchError
from .values import (
    Atom,
    Path,
    SeqNode,
    SeqStep,
    TupNode,
    TupStep,
    Val,
    WfFail,
    atom,
    atom_text,
    infer_sort,
    wf,
)

MapFn = Callable[[Val], Val]
FoldLFn = Callable[[Any, Val], Any]
FoldRFn = Callable[[Val, Any], Any]
AnyFn = Callable[[Val], Optional[Path]]
ShowFn = Callable[[Val], str]
EqFn = Callable[[Val, Val], bool]


@dataclass(frozen=True)
class AllHolds:
    pass


@dataclass(frozen=True)
class Counterexample:
    at: Path


AllResult = AllHolds | Counterexample

AllFn = Callable[[Val], AllResult]

_ALL_HOLDS = AllHolds()


@dataclass(frozen=True)
class Spreadable:
    """Liftable operation bundle for one type transformer."""

    map_seed: Callable[[MapFn], MapFn]
    foldl_seed: Callable[[FoldLFn], FoldLFn]
    foldr_seed: Callable[[FoldRFn], FoldRFn]
    any_seed: Callable[[AnyFn], AnyFn]
    all_seed: Callable[[AllFn], AllFn]
    eq_seed: Callable[[EqFn], EqFn]
    show_seed: Callable[[ShowFn], ShowFn]


def _tup_children(v: Val, arity: int) -> tuple[Val, ...]:
    if not isinstance(v, TupNode) or len(v.children) != arity:
        raise SeedError(f"tuple seed of arity {arity} applied to {v!r}")
    return v.children


def _seq_items(v: Val) -> tuple[Val, ...]:
    if not isinstance(v, SeqNode):
        raise SeedError(f"spine seed applied to non-sequence {v!r}")
    return v.items


def _tuple_spreadable(arity: int) -> Spreadable:
    def map_seed(f: MapFn) -> MapFn:
        return lambda v: TupNode(tuple(f(c) for c in _tup_children(v, arity)))

    def foldl_seed(g: FoldLFn) -> FoldLFn:
        def fold(acc, v):
            for child in _tup_children(v, arity):
                acc = g(acc, child)
            return acc

        return fold

    def foldr_seed(g: FoldRFn) -> FoldRFn:
        def fold(v, acc):
            for child in reversed(_tup_children(v, arity)):
                acc = g(child, acc)
            return acc

        return fold

    def any_seed(d: AnyFn) -> AnyFn:
        def decide(v):
            for i, child in enumerate(_tup_children(v, arity)):
                hit = d(child)
                if hit is not None:
                    return Path((TupStep(i), *hit.steps))
            return None

        return decide

    def all_seed(k: AllFn) -> AllFn:
        def decide(v):
            for i, child in enumerate(_tup_children(v, arity)):
                result = k(child)
                if isinstance(result, Counterexample):
                    return Counterexample(Path((TupStep(i), *result.at.steps)))
            return _ALL_HOLDS

        return decide

    def eq_seed(e: EqFn) -> EqFn:
        def decide(v, w):
            vs = _tup_children(v, arity)
            ws = _tup_children(w, arity)
            for a, b in zip(vs, ws):
                if not e(a, b):
                    return False
            return True

        return decide

    def show_seed(r: ShowFn) -> ShowFn:
        return lambda v: "(" + ",".join(r(c) for c in _tup_children(v, arity)) + ")"

    return Spreadable(map_seed, foldl_seed, foldr_seed, any_seed, all_seed, eq_seed, show_seed)


_null_invocations = 0


def null_seed_invocations() -> int:
    """How many times a lifted null-seed function has ever been applied.

    Stays zero as long as only well-formed values are processed.
    """
    return _null_invocations


def _absurd(*_args):
    global _null_invocations
    _null_invocations += 1
    raise NullSeedError("null seed applied: an uninhabited position was reached")


def _null_spreadable() -> Spreadable:
    def lift(_fn):
        return _absurd

    return Spreadable(lift, lift, lift, lift, lift, lift, lift)


def spread(s: Spreadable) -> Spreadable:
    """Derive the spine bundle from the bundle of the underlying transformer."""

    def map_seed(f: MapFn) -> MapFn:
        def apply(v):
            items = _seq_items(v)
            out = []
            fi = f
            for i, item in enumerate(items):
                out.append(fi(item))
                if i + 1 < len(items):
                    fi = s.map_seed(fi)
            return SeqNode(tuple(out))

        return apply

    def foldl_seed(g: FoldLFn) -> FoldLFn:
        def fold(acc, v):
            items = _seq_items(v)
            gi = g
            for i, item in enumerate(items):
                acc = gi(acc, item)
                if i + 1 < len(items):
                    gi = s.foldl_seed(gi)
            return acc

        return fold

    def foldr_seed(g: FoldRFn) -> FoldRFn:
        def fold(v, acc):
            items = _seq_items(v)
            lifts = [g]
            for _ in range(len(items) - 1):
                lifts.append(s.foldr_seed(lifts[-1]))
            for i in range(len(items) - 1, -1, -1):
                acc = lifts[i](items[i], acc)
            return acc

        return fold

    def any_seed(d: AnyFn) -> AnyFn:
        def decide(v):
            items = _seq_items(v)
            di = d
            for i, item in enumerate(items):
                hit = di(item)
                if hit is not None:
                    return Path((SeqStep(i), *hit.steps))
                if i + 1 < len(items):
                    di = s.any_seed(di)
            return None

        return decide

    def all_seed(k: AllFn) -> AllFn:
        def decide(v):
            items = _seq_items(v)
            ki = k
            for i, item in enumerate(items):
                result = ki(item)
                if isinstance(result, Counterexample):
                    return Counterexample(Path((SeqStep(i), *result.at.steps)))
                if i + 1 < len(items):
                    ki = s.all_seed(ki)
            return _ALL_HOLDS

        return decide

    def eq_seed(e: EqFn) -> EqFn:
        def decide(v, w):
            vs = _seq_items(v)
            ws = _seq_items(w)
            if len(vs) != len(ws):
                return False
            ei = e
            for i, (a, b) in enumerate(zip(vs, ws)):
                if not ei(a, b):
                    return False
                if i + 1 < len(vs):
                    ei = s.eq_seed(ei)
            return True

        return decide

    def show_seed(r: ShowFn) -> ShowFn:
        def render(v):
            items = _seq_items(v)
            parts = []
            ri = r
            for i, item in enumerate(items):
                parts.append(ri(item))
                if i + 1 < len(items):
                    ri = s.show_seed(ri)
            return "[" + ";".join(parts) + "]"

        return render

    return Spreadable(map_seed, foldl_seed, foldr_seed, any_seed, all_seed, eq_seed, show_seed)


def _bush_spreadable() -> Spreadable:
    # s = spread(s): the proxy's lifters defer to the spread of the proxy
    # itself, which exists by the time any lifted function runs.
    knot: list[Spreadable] = []

    def tied() -> Spreadable:
        return knot[0]

    proxy = Spreadable(
        map_seed=lambda f: lambda v: tied().map_seed(f)(v),
        foldl_seed=lambda g: lambda acc, v: tied().foldl_seed(g)(acc, v),
        foldr_seed=lambda g: lambda v, acc: tied().foldr_seed(g)(v, acc),
        any_seed=lambda d: lambda v: tied().any_seed(d)(v),
        all_seed=lambda k: lambda v: tied().all_seed(k)(v),
        eq_seed=lambda e: lambda v, w: tied().eq_seed(e)(v, w),
        show_seed=lambda r: lambda v: tied().show_seed(r)(v),
    )
    knot.append(spread(proxy))
    return proxy


@cache
def spreadable_of(c: Code) -> Spreadable:
    """The operation bundle for a code, derived bottom-up from its seeds."""
    match c:
        case Tup(n):
            return _tuple_spreadable(n + 1)
        case Null():
            return _null_spreadable()
        case Lndt(inner):
            return spread(spreadable_of(inner))
        case BushC():
            return _bush_spreadable()
    raise TypeError(f"not a code: {c!r}")


def _payload(v: Val):
    if not isinstance(v, Atom):
        raise SeedError(f"expected an atom, got {v!r}")
    return v.payload


def _require_wf(c: Code, v: Val, sort: AtomSort | None = None) -> None:
    if sort is None:
        sort = infer_sort(v) or AtomSort.INT
    report = wf(App(c, BaseT(sort)), v)
    if isinstance(report, WfFail):
        raise IllFormedError(report)


def map(c: Code, f: Callable[[Any], Any], v: Val) -> Val:
    """Apply ``f`` to every atom payload, keeping the tree skeleton.

    ``f`` may change the payload sort (e.g. render ints as strings).
    """
    _require_wf(c, v)
    lifted = spreadable_of(c).map_seed(lambda a: atom(f(_payload(a))))
    return lifted(v)


def foldl(c: Code, step: Callable[[Any, Any], Any], init: Any, v: Val) -> Any:
    """Left fold of ``step`` over the atom payloads in flatten order."""
    _require_wf(c, v)
    lifted = spreadable_of(c).foldl_seed(lambda acc, a: step(acc, _payload(a)))
    return lifted(init, v)


def foldr(c: Code, step: Callable[[Any, Any], Any], init: Any, v: Val) -> Any:
    """Right fold of ``step`` over the atom payloads in flatten order."""
    _require_wf(c, v)
    lifted = spreadable_of(c).foldr_seed(lambda a, acc: step(_payload(a), acc))
    return lifted(v, init)


def any(c: Code, p: Callable[[Any], bool], v: Val) -> Optional[Path]:
    """Path to the first atom (in flatten order) satisfying ``p``, if one exists."""
    _require_wf(c, v)
    lifted = spreadable_of(c).any_seed(lambda a: Path(()) if p(_payload(a)) else None)
    return lifted(v)


def all(c: Code, p: Callable[[Any], bool], v: Val) -> AllResult:
    """Whether every atom satisfies ``p``; else the first failing position."""
    _require_wf(c, v)
    lifted = spreadable_of(c).all_seed(
        lambda a: _ALL_HOLDS if p(_payload(a)) else Counterexample(Path(()))
    )
    return lifted(v)


def eq(c: Code, v: Val, w: Val) -> bool:
    """Equality of two inhabitants, derived through the seed architecture."""
    sort_v = infer_sort(v)
    sort_w = infer_sort(w)
    if sort_v is not None and sort_w is not None and sort_v is not sort_w:
        raise SortMismatchError(f"cannot compare {sort_v.value} and {sort_w.value} values")
    sort = sort_v or sort_w or AtomSort.INT
    _require_wf(c, v, sort)
    _require_wf(c, w, sort)
    lifted = spreadable_of(c).eq_seed(lambda a, b: a == b)
    return lifted(v, w)


def show(c: Code, v: Val) -> str:
    """Canonical rendering, derived via show seeds; agrees with ``print_val``."""
    _require_wf(c, v)
    lifted = spreadable_of(c).show_seed(atom_text)
    return lifted(v)


def size(c: Code, v: Val) -> int:
    """Number of atoms in the structure (a left fold)."""
    return foldl(c, lambda acc, _a: acc + 1, 0, v)


def flatten(c: Code, v: Val) -> list:
    """Atom payloads in left-to-right depth-first order (a right fold)."""
    return foldr(c, lambda a, acc: [a, *acc], [], v)


def member(c: Code, a: Any, v: Val) -> Optional[Path]:
    """Path to the first occurrence of payload ``a``, if present."""
    sort_v = infer_sort(v)
    sort_a = atom(a).sort
    if sort_v is not None and sort_a is not sort_v:
        raise SortMismatchError(f"member of sort {sort_a.value} in {sort_v.value} value")
    return any(c, lambda x: x == a, v)


def is_empty(c: Code, v: Val) -> bool:
    """True when the structure holds no atoms (the spine itself may be non-empty)."""
    return size(c, v) == 0
