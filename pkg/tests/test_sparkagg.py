"""
Test Cases untuk sparkagg
Model aggregate, determinism checker, theorem/corollary dan float demo
"""

import pytest

from algebra.errors import GuardViolationError, InvalidValueError
from algebra.expr import parse_expr
from algebra.values import Float64, ModInt, ValList, vlist
from checkers.report import Verdict
from checkers.sparkagg import (
    Rdd, aggregate, check_converse_cmonoid, check_converse_hom, check_corollary_det_hom,
    check_corollary_det_iff, check_determinism, check_lemma_det_reasoning,
    check_theorem_aggregate_det, concat_outcome, enforce_guard, enumerate_rdds, expected_outcome,
    float_divergence_demo, predict_determinism, split_partitions
)
from nondet.monad import NonDet

MOD5 = ModInt(0, 5)
NONDETERMINISTIC = {'mod2_left_proj', 'mod5_sub'}
CATALOGUE = [
    'count', 'int03_add_max', 'int03_max', 'int07_min', 'mod2_left_proj',
    'mod5_add', 'mod5_mul', 'mod5_sub', 'mod5_sub_add', 'mod7_add',
]


def rdd5(*partitions):
    return Rdd(tuple(vlist(p, like=MOD5) for p in partitions))


def floats(*values):
    return ValList(tuple(Float64(v) for v in values))


class TestAggregateModel:
    def test_aggregate_modular_sum(self, load_ops):
        ops = load_ops('mod5_add')
        rdd = rdd5([1, 2], [3])
        assert aggregate(ops, rdd) == NonDet.of([ModInt(1, 5)])
        assert expected_outcome(ops, rdd) == ModInt(1, 5)
        assert concat_outcome(ops, rdd) == ModInt(1, 5)

    def test_aggregate_subtraction_sees_both_orders(self, load_ops):
        ops = load_ops('mod5_sub')
        assert aggregate(ops, rdd5([1], [2])) == NonDet.of([ModInt(1, 5), ModInt(4, 5)])

    def test_empty_rdd(self, load_ops):
        ops = load_ops('mod5_add')
        assert aggregate(ops, Rdd(())) == NonDet.of([ModInt(0, 5)])

    def test_enumeration_starts_with_fewest_partitions(self, mod2):
        rdds = list(enumerate_rdds(mod2, 2, 1))
        assert len(rdds) == 1 + 3 + 9
        assert str(rdds[0]) == '[]'
        assert str(rdds[1]) == '[[]]'

    def test_guard(self):
        with pytest.raises(GuardViolationError):
            enforce_guard(7)
        enforce_guard(7, override_guards=True)


class TestDeterminism:
    @pytest.mark.parametrize('name', CATALOGUE)
    def test_catalogue_at_three_parts(self, load_ops, name):
        ops = load_ops(name)
        verdict = check_determinism(ops, 3, 1)
        prediction = predict_determinism(ops, 3)
        assert verdict.deterministic == (name not in NONDETERMINISTIC)
        assert prediction.passed == verdict.deterministic
        if not verdict.deterministic:
            assert prediction.witness['property'] == 'commutativity'
            assert (prediction.witness['x'], prediction.witness['y']) == ('0', '1')

    def test_minimal_counterexample(self, load_ops):
        verdict = check_determinism(load_ops('mod2_left_proj'), 2, 1)
        assert not verdict.deterministic
        assert verdict.rdds_checked == 13
        assert verdict.outcome_count_max == 2
        record = verdict.to_record()
        assert record.witness == {'rdd': '[[], [1]]', 'outcomes': '{0, 1}'}
        assert record.message == 'NONDETERMINISTIC; minimal counterexample RDD=[[], [1]]'

    def test_worker_count_does_not_change_result(self, load_ops):
        ops = load_ops('mod5_sub')
        single = check_determinism(ops, 3, 1, workers=1).to_record()
        threaded = check_determinism(ops, 3, 1, workers=4).to_record()
        assert single.to_dict() == threaded.to_dict()

    def test_guard_applies_to_check(self, load_ops):
        with pytest.raises(GuardViolationError):
            check_determinism(load_ops('mod5_add'), 7, 1)


class TestTheorems:
    def test_theorem_holds_for_modular_sum(self, load_ops):
        record = check_theorem_aggregate_det(load_ops('mod5_add'), 3, 1)
        assert record.verdict == Verdict.PASS

    def test_theorem_gate(self, load_ops):
        record = check_theorem_aggregate_det(load_ops('mod2_left_proj'), 3, 1)
        assert record.verdict == Verdict.HYPOTHESIS_NOT_MET
        assert record.details['gate']['commutativity'] == 'fail'

    def test_theorem_holds_without_homomorphism(self, load_ops):
        assert check_theorem_aggregate_det(load_ops('int03_add_max'), 3, 1).passed

    def test_corollary_needs_exchange_law(self, load_ops):
        record = check_corollary_det_hom(load_ops('int03_add_max'), 3, 1, 3)
        assert record.verdict == Verdict.HYPOTHESIS_NOT_MET
        assert record.details['gate']['exchange'] == 'fail'

    def test_corollary_for_count(self, load_ops):
        record = check_corollary_det_hom(load_ops('count'), 3, 1, 3)
        assert record.verdict == Verdict.PASS
        assert record.details['image_bound'] == 3


class TestConverse:
    def test_gate_not_met_for_left_projection(self, load_ops):
        ops = load_ops('mod2_left_proj')
        for record in (check_lemma_det_reasoning(ops, 3, 1),
                       check_converse_cmonoid(ops, 3, 1, 3),
                       check_converse_hom(ops, 1, max_parts=3)):
            assert record.verdict == Verdict.HYPOTHESIS_NOT_MET
        iff = check_corollary_det_iff(ops, 3, 1)
        assert iff.verdict == Verdict.PASS
        assert (iff.details['left'], iff.details['right']) == ('fail', 'fail')

    def test_maximum_satisfies_every_converse(self, load_ops):
        ops = load_ops('int03_max')
        assert check_lemma_det_reasoning(ops, 3, 1).passed
        cmonoid = check_converse_cmonoid(ops, 3, 1, 3)
        assert cmonoid.passed
        assert cmonoid.details['properties'] == {
            'identity': 'pass', 'commutativity': 'pass', 'associativity': 'pass',
        }
        assert check_converse_hom(ops, 1, max_parts=3).passed
        iff = check_corollary_det_iff(ops, 3, 1)
        assert (iff.details['left'], iff.details['right']) == ('pass', 'pass')

    def test_deterministic_but_not_homomorphic(self, load_ops):
        ops = load_ops('int03_add_max')
        assert check_converse_cmonoid(ops, 2, 1, 3).verdict == Verdict.HYPOTHESIS_NOT_MET
        assert check_corollary_det_iff(ops, 2, 1).verdict == Verdict.PASS

    def test_single_partition_skips_properties(self, load_ops):
        ops = load_ops('mod5_add')
        cmonoid = check_converse_cmonoid(ops, 1, 1, 3)
        assert cmonoid.verdict == Verdict.PASS
        assert set(cmonoid.details['properties'].values()) == {'skipped'}
        assert check_converse_hom(ops, 1, max_parts=1).verdict == Verdict.SKIPPED

    def test_associativity_needs_three_partitions(self, load_ops):
        record = check_converse_cmonoid(load_ops('mod5_add'), 2, 1, 3)
        assert record.details['properties']['associativity'] == 'skipped'
        assert record.details['properties']['identity'] == 'pass'


class TestFloatDemo:
    ADD = parse_expr('x + y')
    ZERO = Float64(0.0)

    def test_cancellation(self):
        record = float_divergence_demo(floats(1.0, 1e16, -1e16), [1, 1, 1], self.ADD, self.ZERO)
        assert record.details['merge_orders'] == 6
        assert record.details['distinct_outcomes'] == 2
        assert record.details['min'] == '0.0'
        assert record.details['max'] == '1.0'
        assert record.details['exact_sum'] == '1.0'

    def test_uniform_zeros(self):
        record = float_divergence_demo(floats(0.0, 0.0, 0.0, 0.0), [2, 2], self.ADD, self.ZERO)
        assert record.details['merge_orders'] == 1
        assert record.details['distinct_outcomes'] == 1

    def test_overflow_is_a_divergence_event(self):
        big = 1.7976931348623157e308
        record = float_divergence_demo(floats(big, big), [1, 1], self.ADD, self.ZERO)
        assert record.verdict == Verdict.PASS
        assert record.details['distinct_outcomes'] == 0
        assert record.details['min'] is None
        assert record.details['divergence_events'][0]['stage'] == 'merge'
        assert record.details['exact_sum'] is None
        assert record.details['divergence_events'][-1]['stage'] == 'exact-sum'

    def test_large_odd_powers_diverge(self):
        values = floats(-2.0 ** 73, -1.0, 0.0, 1.0, 2.0 ** 73)
        record = float_divergence_demo(values, [1] * 5, self.ADD, self.ZERO)
        assert record.details['merge_orders'] == 120
        assert record.details['distinct_outcomes'] > 1

    def test_partition_limit(self):
        with pytest.raises(GuardViolationError):
            float_divergence_demo(floats(*[1.0] * 7), [1] * 7, self.ADD, self.ZERO)

    def test_split_partitions(self):
        assert str(split_partitions(floats(1.0, 2.0, 3.0), [2, 0, 1])) == '[[1.0, 2.0], [], [3.0]]'
        with pytest.raises(InvalidValueError):
            split_partitions(floats(1.0, 2.0), [1])


@pytest.mark.parametrize('name', CATALOGUE)
def test_converse_holds_wherever_the_gate_holds(load_ops, name):
    ops = load_ops(name)
    for record in (check_lemma_det_reasoning(ops, 3, 1),
                   check_converse_cmonoid(ops, 3, 1, 3),
                   check_converse_hom(ops, 1, max_parts=3),
                   check_corollary_det_iff(ops, 3, 1)):
        assert record.verdict != Verdict.FAIL, record.check_id


def test_theorem_at_two_elements_per_partition(load_ops):
    ops = load_ops('mod5_add')
    assert check_determinism(ops, 3, 2).deterministic
    assert check_theorem_aggregate_det(ops, 3, 2).passed
