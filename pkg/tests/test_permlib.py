"""
Test Cases untuk permlib
insert/perm dan lemma fold/permutasi
"""

import pytest
from hypothesis import given, settings, strategies as st

from algebra.carriers import parse_carrier
from algebra.errors import KindMismatchError
from algebra.expr import parse_expr
from algebra.functions import get_predicate, get_pure_function
from algebra.values import Int64, ModInt, ValList, vlist
from checkers.permlib import (
    FoldSpec, check_exchange_odot, check_lemma_fold_insert, check_lemma_fold_perm,
    check_lemma_insert_map, check_lemma_perm_filter, check_lemma_perm_id, check_lemma_perm_map,
    check_perm_oracle, foldr_list, insert, multiset_permutation_count, perm, perm_direct
)
from checkers.report import Verdict
from nondet.monad import NonDet

MOD5 = ModInt(0, 5)


def l5(*residues):
    return vlist(residues, like=MOD5)


class TestInsertPerm:
    def test_insert_every_position(self):
        assert insert(ModInt(2, 5), l5(0, 1)) == NonDet.of([l5(2, 0, 1), l5(0, 2, 1), l5(0, 1, 2)])

    def test_insert_into_empty(self):
        assert insert(ModInt(3, 5), ValList(())) == NonDet.of([l5(3)])

    def test_insert_checks_element_kind(self):
        with pytest.raises(KindMismatchError):
            insert(Int64(1), l5(0, 1))

    def test_perm_distinct_elements(self):
        outcomes = perm(l5(1, 2, 3))
        assert len(outcomes) == 6
        assert l5(3, 2, 1) in outcomes

    def test_perm_of_three_distinct_elements(self):
        outcomes = perm(vlist([0, 1, 2], like=ModInt(0, 3)))
        expected = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
        assert [[v.residue for v in xs] for xs in outcomes] == expected

    def test_perm_merges_equal_permutations(self):
        assert perm(l5(0, 0, 1)) == NonDet.of([l5(0, 0, 1), l5(0, 1, 0), l5(1, 0, 0)])
        assert perm(ValList(())) == NonDet.of([ValList(())])

    @pytest.mark.parametrize('residues, expected', [
        ((), 1), ((1,), 1), ((1, 2, 3), 6), ((0, 0, 1), 3), ((2, 2, 2, 2), 1), ((0, 0, 1, 1), 6),
    ])
    def test_multiset_permutation_count(self, residues, expected):
        assert multiset_permutation_count(l5(*residues)) == expected


@settings(max_examples=60)
@given(st.lists(st.integers(min_value=0, max_value=4), max_size=5))
def test_perm_matches_itertools(residues):
    xs = l5(*residues)
    assert perm(xs) == perm_direct(xs)
    assert len(perm(xs)) == multiset_permutation_count(xs)


class TestFoldLemmas:
    def test_foldr_is_right_nested(self):
        # 1 - (2 - (3 - 0)) = 2
        assert foldr_list(parse_expr('x - y'), Int64(0), vlist([1, 2, 3])) == Int64(2)

    def test_fold_perm_holds_for_modular_sum(self, load_ops):
        ops = load_ops('mod5_add')
        record = check_lemma_fold_perm(FoldSpec.oplus_of(ops), ops.carrier_b, ops.carrier_b, 3)
        assert record.verdict == Verdict.PASS
        assert record.details['exchange_condition'] == 'pass'
        assert record.checked == 1 + 5 + 25 + 125

    def test_fold_perm_fails_for_left_projection(self, load_ops):
        ops = load_ops('mod2_left_proj')
        record = check_lemma_fold_perm(FoldSpec.oplus_of(ops), ops.carrier_b, ops.carrier_b)
        assert record.verdict == Verdict.FAIL
        assert record.witness['xs'] == '[0, 1]'
        assert record.witness['lhs'] == '{0, 1}'
        assert record.details['exchange_condition'] == 'fail'

    def test_exchange_gate(self, load_ops):
        ops = load_ops('mod2_left_proj')
        fold = FoldSpec.oplus_of(ops)
        exchange = check_exchange_odot(fold, ops.carrier_b, ops.carrier_b)
        assert exchange.witness['x'] == '0'
        assert exchange.witness['y'] == '1'
        assert exchange.witness['w'] == '0'
        gated = check_lemma_fold_perm(fold, ops.carrier_b, ops.carrier_b, require_exchange=True)
        assert gated.verdict == Verdict.HYPOTHESIS_NOT_MET

    def test_fold_insert(self, load_ops):
        add = load_ops('mod5_sub_add')
        assert check_lemma_fold_insert(FoldSpec.oplus_of(add), add.carrier_b, add.carrier_b, 3).passed
        sub = load_ops('mod5_sub')
        record = check_lemma_fold_insert(FoldSpec.oplus_of(sub), sub.carrier_b, sub.carrier_b, 3)
        assert record.verdict == Verdict.FAIL


class TestListLemmas:
    @pytest.mark.parametrize('name', ['succ', 'double', 'const0', 'identity'])
    def test_shuffle_map(self, mod3, name):
        record = check_lemma_perm_map(get_pure_function(name), mod3, 3)
        assert record.check_id == 'lemma-shuffle-map'
        assert record.passed

    def test_insert_map(self, mod3):
        assert check_lemma_insert_map(get_pure_function('negate'), mod3, 3).passed

    @pytest.mark.parametrize('name', ['is_even', 'is_zero', 'always_false'])
    def test_perm_filter(self, mod3, name):
        assert check_lemma_perm_filter(get_predicate(name), mod3, 3).passed

    def test_perm_id(self, mod2):
        record = check_lemma_perm_id(mod2, 4)
        assert record.passed
        assert record.checked == 1 + 2 + 4 + 8 + 16

    def test_perm_oracle(self):
        record = check_perm_oracle(parse_carrier('mod 3'), 4)
        assert record.passed
        assert record.checked == 1 + 3 + 9 + 27 + 81

    def test_perm_oracle_up_to_six_elements(self, mod3):
        record = check_perm_oracle(mod3, 6)
        assert record.passed
        assert record.checked == sum(3 ** n for n in range(7))


@pytest.mark.parametrize('name', ['mod7_add', 'int03_max'])
def test_fold_lemmas_hold_at_length_four(load_ops, name):
    ops = load_ops(name)
    fold = FoldSpec.oplus_of(ops)
    assert check_exchange_odot(fold, ops.carrier_b, ops.carrier_b).passed
    assert check_lemma_fold_perm(fold, ops.carrier_b, ops.carrier_b, 4).passed
    assert check_lemma_fold_insert(fold, ops.carrier_b, ops.carrier_b, 4).passed


def test_left_projection_breaks_both_fold_lemmas(load_ops):
    ops = load_ops('mod2_left_proj')
    fold = FoldSpec.oplus_of(ops)
    assert check_lemma_fold_perm(fold, ops.carrier_b, ops.carrier_b, 4).failed
    assert check_lemma_fold_insert(fold, ops.carrier_b, ops.carrier_b, 4).failed
    assert check_exchange_odot(fold, ops.carrier_b, ops.carrier_b).failed


def test_perm_keeps_the_carrier_of_its_input():
    ints = perm(vlist([0, 1]))
    bits = perm(vlist([0, 1], like=ModInt(0, 2)))
    fives = perm(l5(0, 1))
    assert {xs.element_tag() for xs in ints} == {'int'}
    assert {xs.element_tag() for xs in bits} == {'mod2'}
    assert {xs.element_tag() for xs in fives} == {'mod5'}
    assert ints != bits


def test_perm_id_over_two_carriers_in_sequence(mod2):
    assert check_lemma_perm_id(mod2, 3).passed
    ints = parse_carrier('int 0..1')
    record = check_lemma_perm_id(ints, 3)
    assert record.passed
    assert record.checked == 1 + 2 + 4 + 8
    assert {xs.element_tag() for xs in perm(vlist([1, 0]))} == {'int'}
