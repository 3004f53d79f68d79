"""
Algebra Module
Carrier values, carrier enumeration and the operator DSL
"""

from .values import Value, ModInt, Int64, Float64, ValList, value_of, vlist
from .carriers import CarrierSpec, parse_carrier, enum_values, enum_lists, enum_nested_lists
from .expr import OpExpr, parse_expr, print_expr
from .evaluator import eval_binop
from .opspec import OpSpec, parse_opspec, load_opspec

__version__ = '1.0.0'
__all__ = [
    'Value', 'ModInt', 'Int64', 'Float64', 'ValList', 'value_of', 'vlist',
    'CarrierSpec', 'parse_carrier', 'enum_values', 'enum_lists', 'enum_nested_lists',
    'OpExpr', 'parse_expr', 'print_expr', 'eval_binop',
    'OpSpec', 'parse_opspec', 'load_opspec',
]
