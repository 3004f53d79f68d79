"""
Test Cases untuk nondet
NonDet canonical form, the monad operators and the law suite
"""

import pytest
from hypothesis import given, strategies as st

from algebra.carriers import parse_carrier
from algebra.errors import CarrierError, CarrierMismatchError, InvalidValueError
from algebra.functions import get_pure_function
from algebra.values import Int64, ModInt
from checkers.report import Verdict
from nondet.laws import LAW_CATALOGUE, check_monad_laws
from nondet.monad import (
    Kleisli, NonDet, bind, enum_subsets, fmap, kleisli_comp, kleisli_table_for, lift, mcomp,
    mplus, mthen, mzero, pure
)


def m5(*residues):
    return NonDet.of(ModInt(r, 5) for r in residues)


KEEP_OR_SUCC = Kleisli('keep-or-succ', lambda x: NonDet.of((x, ModInt.of(x.residue + 1, 5))))


class TestNonDet:
    def test_canonical_form(self):
        assert m5(3, 1, 3) == NonDet((ModInt(1, 5), ModInt(3, 5)))
        assert str(m5(3, 1)) == '{1, 3}'
        assert m5(2).to_json() == ['2']

    def test_unsorted_outcomes_are_rejected(self):
        with pytest.raises(InvalidValueError):
            NonDet((ModInt(3, 5), ModInt(1, 5)))

    def test_only_requires_singleton(self):
        assert pure(Int64(4)).only() == Int64(4)
        with pytest.raises(InvalidValueError):
            m5(1, 2).only()

    def test_pure_rejects_nan(self):
        with pytest.raises(InvalidValueError):
            pure(float('nan'))


@given(st.lists(st.integers(min_value=0, max_value=4), max_size=8))
def test_of_is_order_and_duplicate_insensitive(residues):
    values = [ModInt(r, 5) for r in residues]
    canonical = NonDet.of(values)
    assert canonical == NonDet.of(reversed(values + values))
    assert len(canonical) == len(set(residues))
    assert list(canonical.outcomes) == sorted(set(values))


class TestOperators:
    def test_mplus_is_union(self):
        assert mplus(m5(1, 2), m5(2, 3)) == m5(1, 2, 3)
        assert mplus(mzero(), m5(1)) == m5(1)

    def test_bind(self):
        assert bind(KEEP_OR_SUCC, m5(1, 4)) == m5(0, 1, 2, 4)
        assert bind(KEEP_OR_SUCC, mzero()) == mzero()

    def test_fmap(self):
        succ = get_pure_function('succ')
        assert fmap(succ, m5(1, 4)) == m5(0, 2)

    def test_kleisli_composition(self):
        twice = kleisli_comp(KEEP_OR_SUCC, KEEP_OR_SUCC)
        assert twice(ModInt(0, 5)) == m5(0, 1, 2)
        assert mcomp(get_pure_function('double'), KEEP_OR_SUCC)(ModInt(1, 5)) == m5(2, 4)
        assert lift(get_pure_function('succ'))(ModInt(4, 5)) == m5(0)

    def test_composition_checks_carriers(self):
        f = Kleisli('f', pure, domain='mod5', codomain='mod5')
        g = Kleisli('g', pure, domain='mod3', codomain='mod3')
        with pytest.raises(CarrierMismatchError):
            kleisli_comp(f, g)

    def test_mthen_replaces_each_outcome(self):
        assert mthen(m5(4), m5(1, 2)) == m5(4)
        assert mthen(m5(4), mzero()) == mzero()

    def test_kleisli_must_return_nondet(self):
        broken = Kleisli('broken', lambda x: x)
        with pytest.raises(InvalidValueError):
            bind(broken, m5(1))

    def test_enum_subsets_sizes(self):
        subsets = enum_subsets([ModInt(r, 5) for r in range(5)], 2)
        assert len(subsets) == 1 + 5 + 10
        assert subsets[0] == mzero()
        assert subsets[-1] == m5(3, 4)


class TestLawSuite:
    def test_catalogue_has_22_laws(self):
        assert len(LAW_CATALOGUE) == 22
        assert len({law.law_id for law in LAW_CATALOGUE}) == 22

    def test_all_laws_hold_mod_5(self):
        report = check_monad_laws(parse_carrier('mod 5'))
        assert len(report.records) == 22
        assert all(r.verdict == Verdict.PASS for r in report.records)
        assert report.status() == 0
        assert report.bounds['set_bound'] == 3

    @pytest.mark.parametrize('carrier', ['int 0..3', 'float {1.0, 2.5}', 'list 2 of mod 2'])
    def test_all_laws_hold_on_other_carriers(self, carrier):
        report = check_monad_laws(parse_carrier(carrier), set_bound=2)
        failed = [r.check_id for r in report.records if r.verdict != Verdict.PASS]
        assert failed == []

    def test_custom_kleisli_table(self):
        table = kleisli_table_for(parse_carrier('mod 3'))[:2]
        report = check_monad_laws(parse_carrier('mod 3'), fn_table=table, set_bound=1)
        assert report.bounds['kleislis'] == ['return', 'return.succ']
        assert not report.has_failures

    def test_empty_table_is_rejected(self):
        with pytest.raises(CarrierError):
            check_monad_laws(parse_carrier('mod 3'), fn_table=[])

    def test_restricted_law_is_annotated(self):
        report = check_monad_laws(parse_carrier('mod 2'), set_bound=2)
        assert 'restriction' in report.record('mplus-return').details
        assert report.record('monad-left-identity').checked == 5 * 2
