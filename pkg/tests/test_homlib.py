"""
Test Cases untuk homlib
Image fold, properti aljabar dan lemma homomorphism
"""

import pytest

from algebra.carriers import enum_values
from algebra.expr import parse_expr
from algebra.functions import LIST_FUNCTIONS
from algebra.values import Int64, ModInt
from checkers.homlib import (
    HomCandidate, check_exchange, check_fold_concat, check_hom_properties, check_lemma_foldr_hom,
    check_lemma_hom_concat, find_associativity_failure, find_commutativity_failure,
    find_identity_failure, image_saturation, image_set, image_with_witnesses
)
from checkers.report import Verdict


class TestImage:
    def test_count_image_grows_by_one_per_length(self, load_ops):
        ops = load_ops('count')
        assert image_set(ops.otimes, ops.z, ops.carrier_a, 3) == tuple(Int64(n) for n in range(4))

    def test_witness_is_shortest_list(self, load_ops):
        ops = load_ops('count')
        witnesses = dict(image_with_witnesses(ops.otimes, ops.z, ops.carrier_a, 3))
        assert str(witnesses[Int64(0)]) == '[]'
        assert str(witnesses[Int64(2)]) == '[0, 0]'

    def test_saturation(self, load_ops):
        count = load_ops('count')
        assert not image_saturation(count.otimes, count.z, count.carrier_a, 3)
        add = load_ops('mod5_add')
        assert image_saturation(add.otimes, add.z, add.carrier_a, 1)

    def test_negative_bound_is_empty(self, load_ops):
        ops = load_ops('mod5_add')
        assert image_set(ops.otimes, ops.z, ops.carrier_a, -1) == ()


class TestPropertySearches:
    def test_commutativity_failure_is_first_in_order(self, mod3):
        checked, found = find_commutativity_failure(parse_expr('x - y'), enum_values(mod3))
        assert checked == 2
        assert (found['x'], found['y']) == ('0', '1')

    def test_associativity(self):
        values = [Int64(n) for n in range(4)]
        checked, found = find_associativity_failure(parse_expr('max(x, y)'), values)
        assert found is None
        assert checked == 4 ** 3
        _, found = find_associativity_failure(parse_expr('x - y'), values)
        assert found is not None

    def test_identity(self):
        values = [Int64(n) for n in range(4)]
        assert find_identity_failure(parse_expr('max(x, y)'), Int64(0), values)[1] is None
        _, found = find_identity_failure(parse_expr('x'), Int64(0), values)
        assert found['y'] == '1'


class TestHomProperties:
    def test_length_is_a_homomorphism(self, mod2):
        length = HomCandidate.from_function('length', LIST_FUNCTIONS['length'],
                                            parse_expr('x + y'), Int64(0))
        record = check_hom_properties(length, mod2, 2)
        assert record.passed
        assert record.details['candidate']['k'] == 'h . wrap'
        assert set(record.details['equations'].values()) == {'pass'}

    def test_sum_is_not_a_max_homomorphism(self, load_ops):
        ops = load_ops('int03_add_max')
        record = check_hom_properties(HomCandidate.from_fold(ops), ops.carrier_a, 2)
        assert record.verdict == Verdict.FAIL
        assert record.details['equations']['concat'] == 'fail'


class TestHomConcat:
    @pytest.mark.parametrize('name, side', [
        ('count', 'pass'), ('mod5_add', 'pass'), ('int03_add_max', 'fail'),
    ])
    def test_sides_agree(self, load_ops, name, side):
        ops = load_ops(name)
        record = check_lemma_hom_concat(HomCandidate.from_fold(ops), ops.carrier_a, 3, 1)
        assert record.verdict == Verdict.PASS
        assert record.details['A'] == side
        assert record.details['B'] == side

    def test_ys_bound_covers_remaining_parts(self, load_ops):
        ops = load_ops('count')
        record = check_lemma_hom_concat(HomCandidate.from_fold(ops), ops.carrier_a, 3, 2)
        assert record.details['ys_max_len'] == 4


class TestFoldrHom:
    def test_both_hold_for_modular_sum(self, load_ops):
        ops = load_ops('mod5_add')
        record = check_lemma_foldr_hom(ops.otimes, ops.oplus, ops.z, ops.carrier_a, 2)
        assert record.verdict == Verdict.PASS
        assert (record.details['P'], record.details['Q']) == ('pass', 'pass')

    @pytest.mark.parametrize('name', ['mod5_sub_add', 'int03_add_max'])
    def test_both_fail(self, load_ops, name):
        ops = load_ops(name)
        record = check_lemma_foldr_hom(ops.otimes, ops.oplus, ops.z, ops.carrier_a, 2)
        assert record.verdict == Verdict.PASS
        assert (record.details['P'], record.details['Q']) == ('fail', 'fail')

    def test_gate_needs_identity(self, load_ops):
        ops = load_ops('mod2_left_proj')
        record = check_lemma_foldr_hom(ops.otimes, ops.oplus, ops.z, ops.carrier_a, 2)
        assert record.verdict == Verdict.HYPOTHESIS_NOT_MET
        assert record.details['gate'] == {'associativity': 'pass', 'identity': 'fail'}

    def test_exchange_law(self, load_ops):
        ops = load_ops('count')
        record = check_exchange(ops.otimes, ops.oplus, ops.z, ops.carrier_a, 3)
        assert record.passed
        assert record.details['image_size'] == 4

    def test_fold_concat_holds_for_any_operator(self, mod3):
        record = check_fold_concat(parse_expr('x - y'), ModInt(0, 3), mod3, 2)
        assert record.passed
        assert record.checked == 13 * 13


CATALOGUE = [
    'count', 'int03_add_max', 'int03_max', 'int07_min', 'mod2_left_proj',
    'mod5_add', 'mod5_mul', 'mod5_sub', 'mod5_sub_add', 'mod7_add',
]


@pytest.mark.parametrize('name', CATALOGUE)
def test_biconditionals_never_break(load_ops, name):
    ops = load_ops(name)
    hom_concat = check_lemma_hom_concat(HomCandidate.from_fold(ops), ops.carrier_a, 3, 1)
    assert hom_concat.verdict == Verdict.PASS
    foldr_hom = check_lemma_foldr_hom(ops.otimes, ops.oplus, ops.z, ops.carrier_a, 2)
    assert foldr_hom.verdict in (Verdict.PASS, Verdict.HYPOTHESIS_NOT_MET)
