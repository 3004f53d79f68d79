"""
Test Cases untuk algebra
Values, carriers, operator DSL, evaluator and operator specs
"""

import pytest
from hypothesis import given, strategies as st

from algebra.carriers import CarrierSpec, count_lists, enum_lists, enum_nested_lists, enum_values, parse_carrier
from algebra.errors import (
    CarrierError, DivisionByZeroError, EvaluationError, Int64OverflowError, InvalidValueError,
    KindMismatchError, NonFiniteResultError, OpSpecError, OpSpecSyntaxError, UnknownIdentifierError,
    UnknownNameError
)
from algebra.evaluator import eval_binop
from algebra.expr import (
    FUNCTION_OPERATORS, INFIX_OPERATORS, BinOp, Neg, Num, Var, free_variables, parse_expr, print_expr
)
from algebra.functions import get_predicate, get_pure_function, map_list
from algebra.opspec import parse_opspec
from algebra.values import Float64, Int64, ModInt, ValList, value_of, vlist

MOD5_ADD = """\
# comment line
carrier_a: mod 5
carrier_b: mod 5
oplus: x + y
otimes: x + y
z: 0
"""


class TestValues:
    def test_modint_reduces_with_of(self):
        assert ModInt.of(7, 5) == ModInt(2, 5)
        assert ModInt.of(-1, 5) == ModInt(4, 5)

    def test_modint_rejects_bad_residue_and_modulus(self):
        with pytest.raises(InvalidValueError):
            ModInt(5, 5)
        with pytest.raises(InvalidValueError):
            ModInt.of(0, 1)

    def test_different_moduli_do_not_compare(self):
        assert ModInt(1, 5) != ModInt(1, 7)
        with pytest.raises(KindMismatchError):
            ModInt(1, 5) < ModInt(1, 7)

    def test_int64_range_is_checked(self):
        with pytest.raises(Int64OverflowError):
            Int64(2 ** 63)
        assert Int64(-(2 ** 63)).value == -(2 ** 63)

    def test_float64_rejects_nan_and_inf(self):
        with pytest.raises(InvalidValueError):
            Float64(float('nan'))
        with pytest.raises(InvalidValueError):
            Float64(float('inf'))

    def test_negative_zero_orders_below_zero(self):
        assert Float64(-0.0) < Float64(0.0)
        assert Float64(-0.0) != Float64(0.0)
        assert str(Float64(1e16)) == '1e+16'

    def test_list_rejects_mixed_kinds(self):
        with pytest.raises(KindMismatchError):
            ValList((Int64(1), ModInt(1, 5)))

    def test_lists_over_different_carriers_differ(self):
        lists = [ValList((ModInt(0, 2),)), ValList((ModInt(0, 5),)), ValList((Int64(0),))]
        assert lists[0] != lists[1]
        assert lists[1] != lists[2]
        assert len(set(lists)) == 3
        assert len({hash(xs) for xs in lists}) == 3
        nested = ValList((lists[0],)), ValList((lists[2],))
        assert nested[0] != nested[1]

    def test_list_order_within_one_carrier(self):
        assert vlist([0, 1], ModInt(0, 2)) < vlist([1], ModInt(0, 2))
        assert ValList(()) < vlist([0], ModInt(0, 2))

    def test_value_of_follows_like(self):
        assert value_of(7, ModInt(0, 5)) == ModInt(2, 5)
        assert value_of([1, 2]) == ValList((Int64(1), Int64(2)))
        assert str(vlist([1, 2], ModInt(0, 3))) == '[1, 2]'
        with pytest.raises(InvalidValueError):
            value_of(True)


class TestCarriers:
    def test_parse_carrier_forms(self):
        assert parse_carrier('mod 5') == CarrierSpec.mod(5)
        assert parse_carrier('int  0 .. 3') == CarrierSpec.int_range(0, 3)
        assert parse_carrier('float {1.0, 1e16}').floats == (1.0, 1e16)
        listed = parse_carrier('list 2 of mod 2')
        assert listed.element == CarrierSpec.mod(2) and listed.max_len == 2

    @pytest.mark.parametrize('text', ['mod 1', 'mod 0', 'int 3..1', 'int 0..5000', 'float {}',
                                      'float {nan}', 'bool', 'list 9 of mod 2'])
    def test_bad_carriers_are_rejected(self, text):
        with pytest.raises(CarrierError):
            parse_carrier(text)

    def test_enum_values_order(self):
        assert enum_values(parse_carrier('int -1..1')) == (Int64(-1), Int64(0), Int64(1))
        floats = enum_values(parse_carrier('float {2.0, -1.0, 2.0}'))
        assert floats == (Float64(-1.0), Float64(2.0))

    def test_enum_lists_is_shortest_first(self, mod2):
        lists = enum_lists(mod2, 2)
        assert [str(xs) for xs in lists] == ['[]', '[0]', '[1]', '[0, 0]', '[0, 1]', '[1, 0]', '[1, 1]']
        assert len(enum_lists(parse_carrier('mod 3'), 2)) == count_lists(parse_carrier('mod 3'), 2) == 13

    def test_enum_nested_lists_counts(self, mod2):
        nested = list(enum_nested_lists(mod2, 2, 1))
        # 0 parts: 1, 1 part: 3, 2 parts: 9
        assert len(nested) == 13
        assert nested[0] == ()
        assert [str(p) for p in nested[6]] == ['[]', '[1]']

    def test_list_carrier_values(self):
        values = enum_values(parse_carrier('list 1 of mod 2'))
        assert [str(v) for v in values] == ['[]', '[0]', '[1]']

    def test_literal_kind_check(self):
        assert CarrierSpec.mod(5).literal('7') == ModInt(2, 5)
        with pytest.raises(KindMismatchError):
            CarrierSpec.mod(5).literal('1.5')
        assert CarrierSpec.list_of(CarrierSpec.mod(3), 2).literal('[1, 2]') == vlist([1, 2], ModInt(0, 3))


class TestExpressions:
    def test_precedence_and_associativity(self):
        assert parse_expr('x + y * 2') == BinOp('+', Var('x'), BinOp('*', Var('y'), Num(2)))
        assert parse_expr('x - y - 1') == BinOp('-', BinOp('-', Var('x'), Var('y')), Num(1))
        assert parse_expr('-x') == Neg(Var('x'))
        assert parse_expr('max(x, y)') == BinOp('max', Var('x'), Var('y'))

    def test_int_and_float_literals_differ(self):
        assert parse_expr('1') != parse_expr('1.0')

    def test_printer_keeps_needed_parentheses(self):
        assert print_expr(parse_expr('x - (y - 1)')) == 'x - (y - 1)'
        assert print_expr(parse_expr('(x - y) - 1')) == 'x - y - 1'
        assert print_expr(parse_expr('-(x + y)')) == '-(x + y)'
        assert print_expr(parse_expr('pow(x,2)')) == 'pow(x, 2)'

    def test_syntax_error_position(self):
        with pytest.raises(OpSpecSyntaxError) as info:
            parse_expr('x + * y')
        assert (info.value.line, info.value.column) == (1, 5)

    def test_unknown_identifier(self):
        with pytest.raises(UnknownIdentifierError):
            parse_expr('x + q')
        with pytest.raises(UnknownIdentifierError):
            parse_expr('sqrt(x, y)')

    @pytest.mark.parametrize('text', ['', 'x +', '(x', 'max(x)', 'x y', 'x $ y'])
    def test_malformed_expressions(self, text):
        with pytest.raises(OpSpecSyntaxError):
            parse_expr(text)

    def test_free_variables(self):
        assert free_variables(parse_expr('x')) == frozenset({'x'})
        assert free_variables(parse_expr('min(x, y) + 1')) == frozenset({'x', 'y'})


_leaves = st.one_of(
    st.sampled_from(['x', 'y']).map(Var),
    st.integers(min_value=0, max_value=10 ** 6).map(Num),
    st.floats(min_value=0.0, max_value=1e9, allow_nan=False, allow_infinity=False).map(Num),
)

_exprs = st.recursive(
    _leaves,
    lambda children: st.one_of(
        children.map(Neg),
        st.builds(BinOp, st.sampled_from(INFIX_OPERATORS + FUNCTION_OPERATORS), children, children),
    ),
    max_leaves=12,
)


@given(_exprs)
def test_parse_inverts_print(expr):
    assert parse_expr(print_expr(expr)) == expr


class TestEvaluator:
    def test_mod_arithmetic(self):
        a, b = ModInt(1, 5), ModInt(3, 5)
        assert eval_binop(parse_expr('x - y'), a, b) == ModInt(3, 5)
        assert eval_binop(parse_expr('x * y + 4'), a, b) == ModInt(2, 5)
        assert eval_binop(parse_expr('x / y'), ModInt(1, 5), ModInt(2, 5)) == ModInt(3, 5)
        assert eval_binop(parse_expr('pow(y, 3)'), a, b) == ModInt(2, 5)

    def test_mod_division_needs_inverse(self):
        with pytest.raises(EvaluationError):
            eval_binop(parse_expr('x / y'), ModInt(1, 4), ModInt(2, 4))
        with pytest.raises(DivisionByZeroError):
            eval_binop(parse_expr('x / y'), ModInt(1, 5), ModInt(0, 5))

    def test_integer_floor_semantics(self):
        assert eval_binop(parse_expr('x / y'), Int64(-7), Int64(2)) == Int64(-4)
        assert eval_binop(parse_expr('x % y'), Int64(-7), Int64(2)) == Int64(1)

    def test_int_errors_carry_context(self):
        with pytest.raises(DivisionByZeroError) as info:
            eval_binop(parse_expr('x / y'), Int64(1), Int64(0))
        assert info.value.context['expr'] == 'x / y'
        with pytest.raises(Int64OverflowError):
            eval_binop(parse_expr('x * y'), Int64(2 ** 62), Int64(4))

    def test_float_overflow_is_non_finite(self):
        with pytest.raises(NonFiniteResultError):
            eval_binop(parse_expr('x * y'), Float64(1e308), Float64(10.0))

    def test_float_addition_is_not_associative(self):
        a, b, c = Float64(1.0), Float64(1e16), Float64(-1e16)
        add = parse_expr('x + y')
        left = eval_binop(add, a, eval_binop(add, b, c))
        right = eval_binop(add, eval_binop(add, a, b), c)
        assert left == Float64(1.0) and right == Float64(0.0)

    def test_kind_mismatch(self):
        with pytest.raises(KindMismatchError):
            eval_binop(parse_expr('x + y'), ModInt(1, 5), Int64(1))

    def test_literal_follows_y(self):
        assert eval_binop(parse_expr('y + 1'), ModInt(1, 2), Int64(3)) == Int64(4)
        assert eval_binop(parse_expr('x'), ModInt(1, 2), ModInt(0, 2)) == ModInt(1, 2)

    def test_list_concat_and_order(self):
        xs, ys = vlist([1], ModInt(0, 2)), vlist([0, 1], ModInt(0, 2))
        assert eval_binop(parse_expr('x + y'), xs, ys) == vlist([1, 0, 1], ModInt(0, 2))
        assert eval_binop(parse_expr('min(x, y)'), xs, ys) == ys
        with pytest.raises(KindMismatchError):
            eval_binop(parse_expr('x * y'), xs, ys)


class TestOpSpec:
    def test_parse_valid_spec(self):
        spec = parse_opspec(MOD5_ADD, name='mod5_add')
        assert spec.z == ModInt(0, 5)
        assert spec.describe()['oplus'] == 'x + y'
        assert parse_opspec(spec.to_text()) == spec

    def test_missing_carrier_b_defaults_to_carrier_a(self):
        spec = parse_opspec('carrier_a: mod 7\noplus: x + y\notimes: x + y\nz: 0\n')
        assert spec.carrier_b == spec.carrier_a

    def test_syntax_error_reports_line_and_column(self):
        text = 'carrier_a: mod 5\ncarrier_b: mod 5\noplus: x + * y\notimes: x + y\nz: 0\n'
        with pytest.raises(OpSpecSyntaxError) as info:
            parse_opspec(text)
        assert (info.value.line, info.value.column) == (3, 12)

    @pytest.mark.parametrize('text', [
        'carrier_a: mod 5\nflavour: x\n',
        'carrier_a: mod 5\ncarrier_a: mod 3\n',
        'carrier_a: mod 5\noplus:\n',
        'just text\n',
        'carrier_a: mod 1\noplus: x\notimes: x\nz: 0\n',
    ])
    def test_malformed_documents(self, text):
        with pytest.raises(OpSpecSyntaxError):
            parse_opspec(text)

    @pytest.mark.parametrize('text', [
        'carrier_a: mod 5\noplus: x + y\notimes: x + y\n',
        'oplus: x + y\notimes: x + y\nz: 0\n',
        'carrier_a: mod 5\noplus: x + y\notimes: x + y\nz: 1.5\n',
        'carrier_a: int 0..3\noplus: x / y\notimes: x + y\nz: 0\n',
        'carrier_a: mod 2\ncarrier_b: int 0..3\noplus: x + y\notimes: x + y\nz: 0\n',
    ])
    def test_invalid_specs(self, text):
        with pytest.raises(OpSpecError):
            parse_opspec(text)


class TestFunctions:
    def test_registered_functions(self):
        succ = get_pure_function('succ')
        assert succ(ModInt(4, 5)) == ModInt(0, 5)
        assert map_list(succ, vlist([0, 1], ModInt(0, 2))) == vlist([1, 0], ModInt(0, 2))
        assert get_predicate('is_even')(Int64(4))

    def test_unknown_names(self):
        with pytest.raises(UnknownNameError):
            get_pure_function('sqrt')
        with pytest.raises(UnknownNameError):
            get_predicate('is_prime')
