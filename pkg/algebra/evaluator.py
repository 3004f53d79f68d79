"""
Operator Evaluator
Evaluates OpExpr trees over carrier values with checked arithmetic
"""

import math
from functools import lru_cache
from typing import Dict, Union

from .errors import (
    AggregationError, DivisionByZeroError, EvaluationError, Int64OverflowError,
    InvalidValueError, KindMismatchError, NonFiniteResultError
)
from .expr import BinOp, Neg, Num, OpExpr, Var, print_expr
from .values import Float64, Int64, ModInt, ValList, Value

# Bare literals stay Python numbers until they meet a carrier value
Operand = Union[Value, int, float]

# |base| >= 2 overflows Int64 long before this exponent
_MAX_INT_EXPONENT = 64


def eval_binop(expr: OpExpr, a: Value, b: Value) -> Value:
    """
    Evaluate expression dengan x := a dan y := b

    Args:
        expr: AST operator
        a: Value untuk x
        b: Value untuk y (hasil literal murni mengikuti kind b)

    Returns:
        Value hasil evaluasi

    Raises:
        EvaluationError: division by zero, overflow, non-finite result;
            KindMismatchError bila kind tidak konsisten. Keduanya membawa
            x, y dan expression sebagai context.
    """
    try:
        return _cached_eval(expr, a, b)
    except AggregationError as err:
        raise err.with_context(x=a, y=b, expr=print_expr(expr))


@lru_cache(maxsize=1 << 16)
def _cached_eval(expr: OpExpr, a: Value, b: Value) -> Value:
    result = _eval(expr, {'x': a, 'y': b})
    if isinstance(result, Value):
        return result
    return promote(result, b)


def _eval(expr: OpExpr, env: Dict[str, Value]) -> Operand:
    if isinstance(expr, Num):
        return expr.value
    if isinstance(expr, Var):
        return env[expr.name]
    if isinstance(expr, Neg):
        return _negate(_eval(expr.operand, env))
    if isinstance(expr, BinOp):
        left = _eval(expr.left, env)
        if expr.op == 'pow':
            return _power(left, expr.right, env)
        return apply_operator(expr.op, left, _eval(expr.right, env))
    raise EvaluationError(f"not an expression: {expr!r}")


def promote(raw: Union[int, float], like: Value) -> Value:
    """Ubah literal mentah ke kind yang sama dengan like"""
    if isinstance(like, ModInt):
        if not isinstance(raw, int):
            raise KindMismatchError(f"float literal {raw!r} in mod {like.modulus} arithmetic")
        return ModInt.of(raw, like.modulus)
    if isinstance(like, Int64):
        if not isinstance(raw, int):
            raise KindMismatchError(f"float literal {raw!r} in int arithmetic")
        return Int64(raw)
    if isinstance(like, Float64):
        return _finite(raw)
    raise KindMismatchError(f"literal {raw!r} cannot meet a {like.kind_tag()} value")


def apply_operator(op: str, left: Operand, right: Operand) -> Operand:
    """Terapkan satu operator biner (selain pow) pada dua operand"""
    left_is_value = isinstance(left, Value)
    right_is_value = isinstance(right, Value)
    if not left_is_value and not right_is_value:
        return _raw_apply(op, left, right)
    if not left_is_value:
        left = promote(left, right)
    elif not right_is_value:
        right = promote(right, left)
    if left.kind_tag() != right.kind_tag():
        raise KindMismatchError(
            f"operator {op} applied to {left.kind_tag()} and {right.kind_tag()}"
        )
    if isinstance(left, ModInt):
        return _mod_apply(op, left, right)
    if isinstance(left, Int64):
        return Int64(_int_apply(op, left.value, right.value))
    if isinstance(left, Float64):
        return _finite(_float_apply(op, left.value, right.value))
    return _list_apply(op, left, right)


def _raw_apply(op: str, left, right):
    if isinstance(left, int) and isinstance(right, int):
        return _int_apply(op, left, right)
    return _float_apply(op, float(left), float(right))


def _int_apply(op: str, left: int, right: int) -> int:
    if op == '+':
        return left + right
    if op == '-':
        return left - right
    if op == '*':
        return left * right
    if op in ('/', '%'):
        if right == 0:
            raise DivisionByZeroError(f"integer {'division' if op == '/' else 'modulo'} by zero")
        return left // right if op == '/' else left % right
    if op == 'min':
        return min(left, right)
    if op == 'max':
        return max(left, right)
    raise EvaluationError(f"unknown operator {op}")


def _float_apply(op: str, left: float, right: float) -> float:
    try:
        if op == '+':
            return left + right
        if op == '-':
            return left - right
        if op == '*':
            return left * right
        if op in ('/', '%'):
            if right == 0.0:
                raise DivisionByZeroError(f"float {'division' if op == '/' else 'modulo'} by zero")
            return left / right if op == '/' else left % right
        if op == 'min':
            return min(left, right)
        if op == 'max':
            return max(left, right)
    except OverflowError:
        raise NonFiniteResultError(f"float overflow in {op}")
    raise EvaluationError(f"unknown operator {op}")


def _mod_apply(op: str, left: ModInt, right: ModInt) -> ModInt:
    m = left.modulus
    a, b = left.residue, right.residue
    if op == '/':
        if b == 0:
            raise DivisionByZeroError(f"division by zero mod {m}")
        try:
            return ModInt.of(a * pow(b, -1, m), m)
        except ValueError:
            raise EvaluationError(f"{b} is not invertible mod {m}")
    if op == '%':
        if b == 0:
            raise DivisionByZeroError(f"modulo by zero mod {m}")
        return ModInt.of(a % b, m)
    if op in ('min', 'max'):
        return ModInt(_int_apply(op, a, b), m)
    return ModInt.of(_int_apply(op, a, b), m)


def _list_apply(op: str, left: ValList, right: ValList) -> ValList:
    if op == '+':
        return left.concat(right)
    if op == 'min':
        return min(left, right)
    if op == 'max':
        return max(left, right)
    raise KindMismatchError(f"operator {op} is not defined on lists")


def _negate(operand: Operand) -> Operand:
    if isinstance(operand, ModInt):
        return ModInt.of(-operand.residue, operand.modulus)
    if isinstance(operand, Int64):
        return Int64(-operand.value)
    if isinstance(operand, Float64):
        return Float64(-operand.value)
    if isinstance(operand, ValList):
        raise KindMismatchError("negation is not defined on lists")
    return -operand


def _power(base: Operand, exponent_expr: OpExpr, env: Dict[str, Value]) -> Operand:
    integral_base = isinstance(base, (ModInt, Int64)) or (
        isinstance(base, int) and not isinstance(base, bool)
    )
    if integral_base:
        if not (isinstance(exponent_expr, Num) and isinstance(exponent_expr.value, int)):
            raise EvaluationError(
                "integer pow needs a nonnegative integer literal exponent"
            )
        k = exponent_expr.value
        if isinstance(base, ModInt):
            return ModInt(pow(base.residue, k, base.modulus), base.modulus)
        raw = base.value if isinstance(base, Int64) else base
        if abs(raw) > 1 and k > _MAX_INT_EXPONENT:
            raise Int64OverflowError(f"Int64 overflow: {raw} ** {k}")
        result = raw ** k
        return Int64(result) if isinstance(base, Int64) else result
    if isinstance(base, ValList):
        raise KindMismatchError("pow is not defined on lists")

    exponent = _eval(exponent_expr, env)
    if isinstance(exponent, Value) and not isinstance(exponent, Float64):
        raise KindMismatchError(f"float pow with {exponent.kind_tag()} exponent")
    x = base.value if isinstance(base, Float64) else float(base)
    y = exponent.value if isinstance(exponent, Float64) else float(exponent)
    try:
        result = math.pow(x, y)
    except OverflowError:
        raise NonFiniteResultError(f"float overflow in pow({x!r}, {y!r})")
    except ValueError:
        raise EvaluationError(f"pow({x!r}, {y!r}) is undefined")
    return _finite(result) if isinstance(base, Float64) or isinstance(exponent, Float64) else result


def _finite(raw: float) -> Float64:
    try:
        return Float64(raw)
    except InvalidValueError:
        raise NonFiniteResultError(f"non-finite float result {raw!r}")
