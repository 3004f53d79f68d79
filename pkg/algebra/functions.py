"""
Function Tables
Registered pure functions, predicates and list functions
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .carriers import CarrierSpec
from .errors import KindMismatchError, UnknownNameError
from .values import Float64, Int64, ModInt, ValList, Value


@dataclass(frozen=True)
class PureFunction:
    """Fungsi murni Value -> Value dengan nama (supaya report bisa dicetak)"""
    name: str
    fn: Callable[[Value], Value] = field(compare=False, repr=False)

    def __call__(self, value: Value) -> Value:
        return self.fn(value)


@dataclass(frozen=True)
class Predicate:
    name: str
    fn: Callable[[Value], bool] = field(compare=False, repr=False)

    def __call__(self, value: Value) -> bool:
        return bool(self.fn(value))


def compose(f: PureFunction, g: PureFunction) -> PureFunction:
    """(f . g) x = f (g x)"""
    return PureFunction(f"{f.name}.{g.name}", lambda v: f(g(v)))


def map_list(g: Callable[[Value], Value], xs: ValList) -> ValList:
    return ValList(tuple(g(x) for x in xs))


def filter_list(p: Callable[[Value], bool], xs: ValList) -> ValList:
    return ValList(tuple(x for x in xs if p(x)))


# Scalar functions

def _shift(value: Value, delta: int) -> Value:
    if isinstance(value, ModInt):
        return ModInt.of(value.residue + delta, value.modulus)
    if isinstance(value, Int64):
        return Int64(value.value + delta)
    if isinstance(value, Float64):
        return Float64(value.value + delta)
    raise KindMismatchError(f"cannot shift a {value.kind_tag()} value")


def _succ(value: Value) -> Value:
    return _shift(value, 1)


def _double(value: Value) -> Value:
    if isinstance(value, ModInt):
        return ModInt.of(2 * value.residue, value.modulus)
    if isinstance(value, Int64):
        return Int64(2 * value.value)
    if isinstance(value, Float64):
        return Float64(2 * value.value)
    raise KindMismatchError(f"cannot double a {value.kind_tag()} value")


def _negate(value: Value) -> Value:
    if isinstance(value, ModInt):
        return ModInt.of(-value.residue, value.modulus)
    if isinstance(value, Int64):
        return Int64(-value.value)
    if isinstance(value, Float64):
        return Float64(-value.value)
    raise KindMismatchError(f"cannot negate a {value.kind_tag()} value")


def _const_zero(value: Value) -> Value:
    if isinstance(value, ModInt):
        return ModInt(0, value.modulus)
    if isinstance(value, Int64):
        return Int64(0)
    if isinstance(value, Float64):
        return Float64(0.0)
    return ValList(())


def _identity(value: Value) -> Value:
    return value


def _reverse(value: Value) -> Value:
    if not isinstance(value, ValList):
        raise KindMismatchError(f"cannot reverse a {value.kind_tag()} value")
    return ValList(tuple(reversed(value.items)))


# Predicates

def _numeric(value: Value):
    if isinstance(value, ModInt):
        return value.residue
    if isinstance(value, (Int64, Float64)):
        return value.value
    return len(value)


def _is_even(value: Value) -> bool:
    return _numeric(value) % 2 == 0


def _is_zero(value: Value) -> bool:
    return _numeric(value) == 0


PURE_FUNCTIONS: Dict[str, PureFunction] = {
    'identity': PureFunction('identity', _identity),
    'succ': PureFunction('succ', _succ),
    'double': PureFunction('double', _double),
    'negate': PureFunction('negate', _negate),
    'const0': PureFunction('const0', _const_zero),
    'reverse': PureFunction('reverse', _reverse),
}

PREDICATES: Dict[str, Predicate] = {
    'is_even': Predicate('is_even', _is_even),
    'is_odd': Predicate('is_odd', lambda v: not _is_even(v)),
    'is_zero': Predicate('is_zero', _is_zero),
    'always_true': Predicate('always_true', lambda v: True),
    'always_false': Predicate('always_false', lambda v: False),
}

# Black-box list functions usable as homomorphism candidates
LIST_FUNCTIONS: Dict[str, Callable[[ValList], Value]] = {
    'length': lambda xs: Int64(len(xs)),
}

_SCALAR_TABLE = ('identity', 'succ', 'double', 'negate', 'const0')
_LIST_TABLE = ('identity', 'reverse', 'const0')


def get_pure_function(name: str) -> PureFunction:
    try:
        return PURE_FUNCTIONS[name]
    except KeyError:
        raise UnknownNameError(
            f"unknown function {name}; choose from {', '.join(sorted(PURE_FUNCTIONS))}"
        )


def get_predicate(name: str) -> Predicate:
    try:
        return PREDICATES[name]
    except KeyError:
        raise UnknownNameError(
            f"unknown predicate {name}; choose from {', '.join(sorted(PREDICATES))}"
        )


def pure_table_for(carrier: CarrierSpec) -> List[PureFunction]:
    """Fungsi murni yang total pada carrier ini"""
    names = _LIST_TABLE if carrier.kind == 'list' else _SCALAR_TABLE
    return [PURE_FUNCTIONS[name] for name in names]
