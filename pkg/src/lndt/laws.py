"""Generators, exact enumerators, and the executable law suite.

Random values come from a splitmix-style 64-bit generator so identical
configurations reproduce identical values anywhere. Generation is
budget-first: the node budget is split across spine positions before
descending, which keeps self-nested codes from blowing up (there are
infinitely many zero-atom bushes, so atom counts cannot bound anything).

``run_laws`` replays the algebraic laws the derivation is supposed to
satisfy over freshly generated values and reports failures in-band; a
correct build reports zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable

from . import spread as ops
from .codes import App, AtomSort, BaseT, BushC, Code, Lndt, Null, Tup, TypeExpr, app_iter, print_code
from .errors import UninhabitedError
from .values import Atom, SeqNode, TupNode, Val, parse_val, print_val, struct_size

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Tiny deterministic PRNG (splitmix64); identical streams per seed."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() wants a positive bound")
        return self.next_u64() % n


@dataclass(frozen=True)
class GenConfig:
    budget: int = 20
    seed: int = 1
    atom_domain: tuple = tuple(range(10))

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if not self.atom_domain:
            raise ValueError("atom domain must be non-empty")


def min_struct_size(t: TypeExpr) -> int | None:
    """Smallest node count of any inhabitant, or None when uninhabited."""
    match t:
        case BaseT(_):
            return 1
        case App(Null(), _):
            return None
        case App(Tup(n), inner):
            m = min_struct_size(inner)
            return None if m is None else 1 + (n + 1) * m
        case App(Lndt(_), _) | App(BushC(), _):
            return 1
    raise TypeError(f"not a type expression: {t!r}")


def gen_val(t: TypeExpr, cfg: GenConfig) -> Val:
    """Deterministic random inhabitant of ``t`` within the node budget."""
    m = min_struct_size(t)
    if m is None:
        raise UninhabitedError("no inhabitants exist for the requested type")
    if m > cfg.budget:
        raise ValueError(f"budget {cfg.budget} cannot fit the smallest inhabitant ({m} nodes)")
    rng = SplitMix64(cfg.seed)
    return _gen(t, cfg.budget, rng, cfg.atom_domain)


def _sorted_atoms(sort: AtomSort, domain: tuple) -> list:
    want = str if sort is AtomSort.STR else int
    return [a for a in domain if isinstance(a, want) and not isinstance(a, bool)]


def _gen(t: TypeExpr, budget: int, rng: SplitMix64, domain: tuple) -> Val:
    match t:
        case BaseT(sort):
            pool = _sorted_atoms(sort, domain)
            if not pool:
                raise UninhabitedError(f"atom domain has no {sort.value} payloads")
            return Atom(sort, pool[rng.below(len(pool))])
        case App(Null(), _):
            raise UninhabitedError("null positions are uninhabited")
        case App(BushC(), inner):
            return _gen(App(Lndt(BushC()), inner), budget, rng, domain)
        case App(Tup(n), inner):
            arity = n + 1
            m = min_struct_size(inner)
            if m is None:
                raise UninhabitedError("tuple over an uninhabited type")
            budgets = [m] * arity
            spare = budget - 1 - arity * m
            for i in range(arity):
                give = rng.below(spare + 1)
                budgets[i] += give
                spare -= give
            return TupNode(tuple(_gen(inner, budgets[i], rng, domain) for i in range(arity)))
        case App(Lndt(g), inner):
            avail = budget - 1
            mins: list[int] = []
            total = 0
            while True:
                m = min_struct_size(app_iter(g, len(mins), inner))
                if m is None or total + m > avail:
                    break
                mins.append(m)
                total += m
            k = rng.below(len(mins) + 1)
            spare = avail - sum(mins[:k])
            items = []
            for j in range(k):
                give = rng.below(spare + 1)
                spare -= give
                items.append(_gen(app_iter(g, j, inner), mins[j] + give, rng, domain))
            return SeqNode(tuple(items))
    raise TypeError(f"not a type expression: {t!r}")


def enum_vals(t: TypeExpr, max_size: int, atom_domain: tuple) -> list[Val]:
    """Every well-formed inhabitant of ``t`` within the node bound, exactly once.

    Finite because node counts strictly dominate subvalues; ordered by spine
    length and then recursively by the same enumeration.
    """
    memo: dict[tuple[TypeExpr, int], tuple[Val, ...]] = {}

    def go(ty: TypeExpr, bound: int) -> tuple[Val, ...]:
        if bound < 1:
            return ()
        key = (ty, bound)
        if key in memo:
            return memo[key]
        out: list[Val] = []
        match ty:
            case BaseT(sort):
                out.extend(Atom(sort, a) for a in _sorted_atoms(sort, atom_domain))
            case App(Null(), _):
                pass
            case App(BushC(), inner):
                out.extend(go(App(Lndt(BushC()), inner), bound))
            case App(Tup(n), inner):
                for combo in slots([inner] * (n + 1), bound - 1):
                    out.append(TupNode(combo))
            case App(Lndt(g), inner):
                k = 0
                floor = 0
                while True:
                    types = [app_iter(g, i, inner) for i in range(k)]
                    for combo in slots(types, bound - 1):
                        out.append(SeqNode(combo))
                    m = min_struct_size(app_iter(g, k, inner))
                    if m is None or floor + m > bound - 1:
                        break
                    floor += m
                    k += 1
            case _:
                raise TypeError(f"not a type expression: {ty!r}")
        memo[key] = tuple(out)
        return memo[key]

    def slots(types: list[TypeExpr], bound: int) -> list[tuple[Val, ...]]:
        if not types:
            return [()] if bound >= 0 else []
        rest_min = 0
        for ty in types[1:]:
            m = min_struct_size(ty)
            if m is None:
                return []
            rest_min += m
        combos: list[tuple[Val, ...]] = []
        for head in go(types[0], bound - rest_min):
            for tail in slots(types[1:], bound - struct_size(head)):
                combos.append((head, *tail))
        return combos

    return list(go(t, max_size))


LAW_NAMES = (
    "congruence",
    "composition",
    "map-identity",
    "any-all-duality",
    "fold-flatten",
    "eq-oracle",
    "membership-map",
    "show-parse",
)


@dataclass
class LawResult:
    name: str
    cases: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)


@dataclass
class LawReport:
    code: Code
    results: list[LawResult]

    def total_failures(self) -> int:
        return sum(len(r.failures) for r in self.results)

    def to_text(self) -> str:
        lines = [f"laws for {print_code(self.code)}"]
        for r in self.results:
            line = f"  {r.name}: {r.cases} cases, {len(r.failures)} failures"
            if r.skipped:
                line += f", {r.skipped} skipped"
            lines.append(line)
            lines.extend(f"    failing input: {case}" for case in r.failures)
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "code": print_code(self.code),
            "laws": [
                {
                    "name": r.name,
                    "cases": r.cases,
                    "skipped": r.skipped,
                    "failures": list(r.failures),
                }
                for r in self.results
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def check_congruence(c: Code, f: Callable, g: Callable, v: Val) -> str | None:
    """``"pass"``/``"fail"`` when ``f`` and ``g`` agree on every atom of ``v``,
    else ``None`` (precondition unmet, nothing to check)."""
    if not _agree_on(ops.flatten(c, v), f, g):
        return None
    return "pass" if ops.map(c, f, v) == ops.map(c, g, v) else "fail"


def _agree_on(atoms: list, f: Callable, g: Callable) -> bool:
    for a in atoms:
        if f(a) != g(a):
            return False
    return True


def run_laws(c: Code, cfg: GenConfig, cases: int) -> LawReport:
    """Generate ``cases`` values of ``c`` over int atoms and replay the laws."""
    results = {name: LawResult(name) for name in LAW_NAMES}
    texpr = App(c, BaseT(AtomSort.INT))
    rng = SplitMix64(cfg.seed)
    double_plus = lambda n: n + n
    twice = lambda n: 2 * n
    succ = lambda n: n + 1
    even = lambda n: n % 2 == 0

    for _ in range(cases):
        v = gen_val(texpr, GenConfig(cfg.budget, rng.next_u64(), cfg.atom_domain))
        w = gen_val(texpr, GenConfig(cfg.budget, rng.next_u64(), cfg.atom_domain))
        rendered = print_val(v)
        atoms = ops.flatten(c, v)

        outcome = check_congruence(c, double_plus, twice, v)
        results["congruence"].cases += 1
        if outcome is None:
            results["congruence"].skipped += 1
        elif outcome == "fail":
            results["congruence"].failures.append(rendered)

        results["composition"].cases += 1
        composed = ops.map(c, lambda n: twice(succ(n)), v)
        staged = ops.map(c, twice, ops.map(c, succ, v))
        if composed != staged:
            results["composition"].failures.append(rendered)

        results["map-identity"].cases += 1
        if ops.map(c, lambda n: n, v) != v:
            results["map-identity"].failures.append(rendered)

        results["any-all-duality"].cases += 1
        holds = isinstance(ops.all(c, even, v), ops.AllHolds)
        refuted = ops.any(c, lambda n: not even(n), v) is None
        if holds != refuted:
            results["any-all-duality"].failures.append(rendered)

        results["fold-flatten"].cases += 1
        left = ops.foldl(c, lambda acc, a: acc - a, 0, v)
        right = ops.foldr(c, lambda a, acc: a - acc, 0, v)
        ref_left = 0
        for a in atoms:
            ref_left -= a
        ref_right = 0
        for a in reversed(atoms):
            ref_right = a - ref_right
        if left != ref_left or right != ref_right:
            results["fold-flatten"].failures.append(rendered)

        results["eq-oracle"].cases += 1
        if not ops.eq(c, v, v) or ops.eq(c, v, w) != (v == w):
            results["eq-oracle"].failures.append(f"{rendered} vs {print_val(w)}")

        results["membership-map"].cases += 1
        mapped = ops.map(c, twice, v)
        if not _all_members(c, atoms, twice, mapped):
            results["membership-map"].failures.append(rendered)

        results["show-parse"].cases += 1
        if parse_val(ops.show(c, v)) != v:
            results["show-parse"].failures.append(rendered)

    return LawReport(c, [results[name] for name in LAW_NAMES])


def _all_members(c: Code, atoms: list, f: Callable, mapped: Val) -> bool:
    for a in atoms:
        if ops.member(c, f(a), mapped) is None:
            return False
    return True
