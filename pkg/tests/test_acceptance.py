"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import contextlib
import io
import time

import pytest

import lndt.spread as ops
from lndt.bushn import from_bushn, to_bushn, wf_bushn, bushn_atoms
from lndt.cli import main as cli_main
from lndt.codes import App, AtomSort, BaseT, BushC, parse_code, resolve_alias
from lndt.instances import nperfect_full
from lndt.laws import GenConfig, enum_vals, gen_val, run_laws
from lndt.spread import AllHolds, Counterexample, null_seed_invocations
from lndt.values import SeqNode, atom_at, parse_val, print_val

from .golden_session import SESSION
from .reference import ref_all, ref_any, ref_flatten, ref_foldl, ref_foldr, ref_map, ref_skeleton

INT = BaseT(AtomSort.INT)


def _report(number, name, ok, elapsed=None, bound=None):
    stamp = "PASS" if ok else "FAIL"
    timing = ""
    if elapsed is not None:
        timing = f" ({elapsed:.2f}s" + (f" < {bound:.0f}s)" if bound else ")")
    print(f"[{stamp}] criterion {number}: {name}{timing}")
    assert ok, f"criterion {number} ({name}) failed"


def test_criterion_1_maybe_shape():
    start = time.perf_counter()
    values = enum_vals(App(resolve_alias("maybe"), INT), 10, (0, 1))
    shapes_ok = len(values) == 3 and all(
        isinstance(v, SeqNode) and len(v.items) <= 1 for v in values
    )
    elapsed = time.perf_counter() - start
    _report(1, "maybe values within 10 nodes are [] or a singleton", shapes_ok and elapsed < 1.0, elapsed, 1.0)


def test_criterion_2_perfect_tree_counts():
    start = time.perf_counter()
    ok = True
    for branch in (1, 2, 3, 4):
        code = resolve_alias(f"nperfect:{branch}")
        for depth in range(5):
            expected = sum(branch**i for i in range(depth))
            v = nperfect_full(branch, depth, list(range(expected)))
            ok = ok and ops.size(code, v) == expected
    elapsed = time.perf_counter() - start
    _report(2, "perfect-tree sizes follow the layer sum", ok and elapsed < 1.0, elapsed, 1.0)


def test_criterion_3_oracle_equivalence():
    start = time.perf_counter()
    even = lambda n: n % 2 == 0
    sub = lambda acc, a: acc - a
    subr = lambda a, acc: a - acc
    mismatches = 0

    def check(code, values):
        nonlocal mismatches
        for v in values:
            flat = ref_flatten(v)
            mapped = ops.map(code, lambda n: n + 3, v)
            failing = ref_all(v, even)
            expected_all = AllHolds() if failing is None else Counterexample(failing)
            checks = [
                ops.flatten(code, v) == flat,
                ops.size(code, v) == len(flat),
                ops.foldl(code, sub, 0, v) == ref_foldl(sub, 0, v),
                ops.foldr(code, subr, 0, v) == ref_foldr(subr, 0, v),
                mapped == ref_map(v, lambda n: n + 3),
                ref_skeleton(mapped) == ref_skeleton(v),
                ops.any(code, even, v) == ref_any(v, even),
                ops.all(code, even, v) == expected_all,
            ]
            mismatches += checks.count(False)
        for v, w in zip(values, values[1:]):
            if ops.eq(code, v, w) != (v == w) or not ops.eq(code, v, v):
                mismatches += 1

    for alias in ("list", "nest", "maybe", "sqlist"):
        code = resolve_alias(alias)
        check(code, enum_vals(App(code, INT), 12, (0, 1)))
    bush = resolve_alias("bush")
    bushes = [
        gen_val(App(bush, INT), GenConfig(30, 1000 + i, tuple(range(10)))) for i in range(500)
    ]
    check(bush, bushes)

    elapsed = time.perf_counter() - start
    _report(3, "derived ops agree with brute-force references", mismatches == 0 and elapsed < 60.0, elapsed, 60.0)


def test_criterion_4_law_suite():
    start = time.perf_counter()
    failures = 0
    for alias in ("list", "nest", "maybe", "sqlist", "nperfect:3", "bush"):
        cases = 500 if alias == "bush" else 1000
        budget = 30 if alias == "bush" else 20
        report = run_laws(resolve_alias(alias), GenConfig(budget, 7, tuple(range(10))), cases)
        failures += report.total_failures()
    elapsed = time.perf_counter() - start
    _report(4, "eight laws hold across all instances", failures == 0 and elapsed < 120.0, elapsed, 120.0)


def test_criterion_5_bush_membership():
    bush = resolve_alias("bush")
    v = parse_val("[1;[2;[10;[10]]]]")
    hit = ops.member(bush, 10, v)
    ok = (
        hit is not None
        and atom_at(v, hit).payload == 10
        and hit == ref_any(v, lambda n: n == 10)
    )
    _report(5, "membership finds the leftmost 10 in a bush", ok)


def test_criterion_6_bushn_roundtrip():
    start = time.perf_counter()
    t = App(BushC(), INT)
    ok = True
    for i in range(500):
        v = gen_val(t, GenConfig(30, 2000 + i, tuple(range(10))))
        encoded = to_bushn(v, 1)
        ok = ok and wf_bushn(encoded)
        ok = ok and from_bushn(encoded) == v
        ok = ok and bushn_atoms(encoded) == ref_flatten(v)
    elapsed = time.perf_counter() - start
    _report(6, "depth-indexed bush round trip on 500 bushes", ok and elapsed < 10.0, elapsed, 10.0)


def test_criterion_7_null_seed_quiescence():
    # exercise the null-backed instance heavily, then read the counter;
    # the session-scoped fixture re-checks after the whole suite.
    maybe = resolve_alias("maybe")
    for text in ("[]", "[5]"):
        v = parse_val(text)
        ops.map(maybe, lambda n: n + 1, v)
        ops.foldl(maybe, lambda a, b: a + b, 0, v)
        ops.foldr(maybe, lambda a, b: a + b, 0, v)
        ops.any(maybe, lambda n: n > 1, v)
        ops.all(maybe, lambda n: n > 1, v)
        ops.eq(maybe, v, v)
        ops.show(maybe, v)
        ops.flatten(maybe, v)
        ops.is_empty(maybe, v)
    _report(7, "null seeds never invoked", null_seed_invocations() == 0)


def test_criterion_8_cli_golden_session():
    start = time.perf_counter()
    ok = True
    for args, expected_exit, expected_out in SESSION:
        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code = cli_main(args)
        ok = ok and code == expected_exit and out.getvalue() == expected_out
    elapsed = time.perf_counter() - start
    _report(8, "CLI golden session matches byte for byte", ok and elapsed < 5.0, elapsed, 5.0)
