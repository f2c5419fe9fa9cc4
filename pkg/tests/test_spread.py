import hypothesis.strategies as st
import pytest
from hypothesis import given

import lndt.spread as ops
from lndt.codes import App, AtomSort, BaseT, Lndt, Null, Tup, parse_code
from lndt.errors import IllFormedError, SortMismatchError
from lndt.laws import GenConfig, enum_vals, gen_val
from lndt.spread import AllHolds, Counterexample, null_seed_invocations, spread, spreadable_of
from lndt.values import Path, SeqStep, TupStep, atom_at, atom_text, parse_val, print_val

from .reference import (
    ref_all,
    ref_any,
    ref_flatten,
    ref_foldl,
    ref_foldr,
    ref_map,
    ref_skeleton,
)

INT = BaseT(AtomSort.INT)
LIST = parse_code("list")
NEST = parse_code("nest")
MAYBE = parse_code("maybe")
BUSH = parse_code("bush")
SQLIST = parse_code("sqlist")

even = lambda n: n % 2 == 0
sub = lambda acc, a: acc - a
subr = lambda a, acc: a - acc


def test_map_examples():
    assert print_val(ops.map(LIST, lambda n: n + 1, parse_val("[1;(2)]"))) == "[2;(3)]"
    assert print_val(ops.map(NEST, lambda n: 2 * n, parse_val("[1;(2,3)]"))) == "[2;(4,6)]"
    v = parse_val("[1;[2;[3]]]")
    assert ops.map(BUSH, lambda n: 2 * n, v) == ref_map(v, lambda n: 2 * n)
    assert print_val(ops.map(BUSH, lambda n: 2 * n, v)) == "[2;[4;[6]]]"


def test_map_changes_sort():
    out = ops.map(LIST, str, parse_val("[1;(2)]"))
    assert print_val(out) == '["1";("2")]'


def test_map_rejects_ill_formed():
    with pytest.raises(IllFormedError):
        ops.map(NEST, lambda n: n, parse_val("[1;(2)]"))


def test_fold_examples():
    assert ops.foldl(NEST, lambda a, b: a + b, 0, parse_val("[1;(2,3)]")) == 6
    assert ops.foldl(LIST, sub, 0, parse_val("[1;(2)]")) == -3
    assert ops.foldr(LIST, subr, 0, parse_val("[1;(2)]")) == -1
    assert ops.foldl(MAYBE, lambda a, b: a + b, 0, parse_val("[]")) == 0
    assert ops.foldr(LIST, lambda a, acc: [a, *acc], [], parse_val("[1;(2)]")) == [1, 2]
    assert ops.foldr(BUSH, lambda a, acc: a + acc, 0, parse_val("[1;[10]]")) == 11


def test_any_examples():
    assert ops.any(NEST, even, parse_val("[1;(2,3)]")) == Path((SeqStep(1), TupStep(0)))
    assert ops.any(BUSH, lambda n: n == 10, parse_val("[1;[10]]")) == Path(
        (SeqStep(1), SeqStep(0))
    )
    assert ops.any(MAYBE, even, parse_val("[]")) is None


def test_all_examples():
    assert ops.all(LIST, even, parse_val("[2;(4)]")) == AllHolds()
    assert ops.all(NEST, even, parse_val("[1;(2,3)]")) == Counterexample(Path((SeqStep(0),)))
    assert ops.all(MAYBE, even, parse_val("[]")) == AllHolds()


def test_eq_examples():
    assert ops.eq(LIST, parse_val("[1;(2)]"), parse_val("[1;(2)]"))
    assert not ops.eq(LIST, parse_val("[1;(2)]"), parse_val("[1;(3)]"))
    assert ops.eq(BUSH, parse_val("[1;[10]]"), parse_val("[1;[10]]"))
    assert not ops.eq(LIST, parse_val("[]"), parse_val("[1;(2)]"))
    with pytest.raises(SortMismatchError):
        ops.eq(LIST, parse_val("[1]"), parse_val('["a"]'))


def test_show_size_flatten_member_empty():
    assert ops.show(LIST, parse_val("[]")) == "[]"
    assert ops.show(NEST, parse_val("[1;(2,3)]")) == "[1;(2,3)]"
    assert ops.show(BUSH, parse_val("[1;[10]]")) == "[1;[10]]"
    assert ops.size(NEST, parse_val("[1;(2,3)]")) == 3
    assert ops.flatten(NEST, parse_val("[1;(2,3)]")) == [1, 2, 3]
    assert ops.flatten(MAYBE, parse_val("[5]")) == [5]
    assert ops.flatten(BUSH, parse_val("[1;[2;[3]]]")) == [1, 2, 3]
    assert ops.member(BUSH, 10, parse_val("[1;[10]]")) == Path((SeqStep(1), SeqStep(0)))
    assert ops.member(LIST, 7, parse_val("[1;(2)]")) is None
    assert ops.member(MAYBE, 5, parse_val("[5]")) == Path((SeqStep(0),))
    assert ops.is_empty(LIST, parse_val("[]"))
    assert not ops.is_empty(NEST, parse_val("[1;(2,3)]"))
    with pytest.raises(SortMismatchError):
        ops.member(LIST, "x", parse_val("[1]"))


def test_spread_of_tuple_seeds_directly():
    nest_like = spread(spreadable_of(Tup(1)))
    total = nest_like.foldl_seed(lambda acc, a: acc + a.payload)(0, parse_val("[1;(2,3)]"))
    assert total == 6


def test_spread_twice_matches_derived_sqlist():
    from lndt.values import atom

    manual = spread(spread(spreadable_of(Tup(0))))
    auto = spreadable_of(Lndt(Lndt(Tup(0))))
    bump = lambda a: atom(a.payload + 1)
    for v in enum_vals(App(SQLIST, INT), 10, (0, 1)):
        assert manual.show_seed(atom_text)(v) == auto.show_seed(atom_text)(v)
        assert manual.map_seed(bump)(v) == auto.map_seed(bump)(v)


def test_maybe_ops_never_touch_null_seeds():
    before = null_seed_invocations()
    for text in ["[]", "[5]"]:
        v = parse_val(text)
        ops.map(MAYBE, lambda n: n + 1, v)
        ops.foldl(MAYBE, sub, 0, v)
        ops.foldr(MAYBE, subr, 0, v)
        ops.any(MAYBE, even, v)
        ops.all(MAYBE, even, v)
        ops.eq(MAYBE, v, v)
        ops.show(MAYBE, v)
        ops.flatten(MAYBE, v)
    assert null_seed_invocations() == before


def test_null_code_direct_use_is_ill_formed():
    with pytest.raises(IllFormedError):
        ops.map(Null(), lambda n: n, parse_val("[1]"))


ORACLE_CODES = [LIST, NEST, MAYBE, SQLIST]


@pytest.mark.parametrize("code", ORACLE_CODES, ids=["list", "nest", "maybe", "sqlist"])
def test_ops_agree_with_oracle_on_enumerated(code):
    values = enum_vals(App(code, INT), 10, (0, 1))
    assert values
    _check_against_oracle(code, values)


def test_ops_agree_with_oracle_on_random_bushes():
    values = [
        gen_val(App(BUSH, INT), GenConfig(25, seed, tuple(range(8)))) for seed in range(120)
    ]
    _check_against_oracle(BUSH, values)


def _check_against_oracle(code, values):
    for v in values:
        flat = ref_flatten(v)
        assert ops.flatten(code, v) == flat
        assert ops.size(code, v) == len(flat)
        assert ops.is_empty(code, v) == (len(flat) == 0)
        assert ops.foldl(code, sub, 0, v) == ref_foldl(sub, 0, v)
        assert ops.foldr(code, subr, 0, v) == ref_foldr(subr, 0, v)
        mapped = ops.map(code, lambda n: n + 3, v)
        assert mapped == ref_map(v, lambda n: n + 3)
        assert ref_skeleton(mapped) == ref_skeleton(v)
        assert ops.any(code, even, v) == ref_any(v, even)
        verdict = ops.all(code, even, v)
        failing = ref_all(v, even)
        if failing is None:
            assert verdict == AllHolds()
        else:
            assert verdict == Counterexample(failing)
        assert ops.show(code, v) == print_val(v)
    for v, w in zip(values, values[1:]):
        assert ops.eq(code, v, w) == (v == w)
        assert ops.eq(code, v, v)


def test_any_witness_sound_and_minimal():
    v = parse_val("[1;(2,4)]")
    hit = ops.any(NEST, even, v)
    assert hit is not None and atom_at(v, hit).payload == 2
    assert hit == ref_any(v, even)


@given(st.lists(st.integers(-50, 50), max_size=8))
def test_list_fold_flatten_coherence(payloads):
    from lndt.instances import list_of

    v = list_of(payloads)
    assert ops.flatten(LIST, v) == payloads
    assert ops.foldl(LIST, sub, 0, v) == ref_foldl(sub, 0, v)
    assert ops.foldr(LIST, subr, 0, v) == ref_foldr(subr, 0, v)
    assert ops.size(LIST, v) == len(payloads)
