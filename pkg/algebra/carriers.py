"""
Carrier Specifications
Finite carriers and their deterministic enumerations
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Tuple, Union

from config.settings import GUARDS
from .errors import CarrierError, InvalidValueError, KindMismatchError
from .values import INT64_MAX, INT64_MIN, Float64, Int64, ModInt, ValList, Value

CARRIER_KINDS = ('mod', 'int', 'float', 'list')

_MOD_PATTERN = re.compile(r'^mod\s+(-?\d+)$')
_INT_PATTERN = re.compile(r'^int\s+(-?\d+)\s*\.\.\s*(-?\d+)$')
_FLOAT_PATTERN = re.compile(r'^float\s*\{(.*)\}$')
_LIST_PATTERN = re.compile(r'^list\s+(\d+)\s+of\s+(.+)$')


@dataclass(frozen=True)
class CarrierSpec:
    """
    Carrier yang bisa dienumerasi

    Attributes:
        kind: 'mod', 'int', 'float' atau 'list'
        modulus: untuk kind 'mod'
        lo, hi: range inklusif untuk kind 'int'
        floats: value eksplisit untuk kind 'float'
        element, max_len: untuk kind 'list'
    """
    kind: str
    modulus: int = 0
    lo: int = 0
    hi: int = 0
    floats: Tuple[float, ...] = ()
    element: Optional['CarrierSpec'] = None
    max_len: int = 0

    @classmethod
    def mod(cls, modulus: int) -> 'CarrierSpec':
        if modulus < 2:
            raise CarrierError(f"modulus must be >= 2, got {modulus}")
        if modulus > GUARDS['max_carrier_size']:
            raise CarrierError(f"carrier mod {modulus} is too large to enumerate")
        return cls(kind='mod', modulus=modulus)

    @classmethod
    def int_range(cls, lo: int, hi: int) -> 'CarrierSpec':
        if lo > hi:
            raise CarrierError(f"empty int range {lo}..{hi}")
        if lo < INT64_MIN or hi > INT64_MAX:
            raise CarrierError(f"int range {lo}..{hi} exceeds 64-bit bounds")
        if hi - lo + 1 > GUARDS['max_carrier_size']:
            raise CarrierError(f"int range {lo}..{hi} is too large to enumerate")
        return cls(kind='int', lo=lo, hi=hi)

    @classmethod
    def float_set(cls, values) -> 'CarrierSpec':
        try:
            floats = tuple(Float64(v).value for v in values)
        except InvalidValueError as err:
            raise CarrierError(f"bad float carrier: {err.message}")
        if not floats:
            raise CarrierError("float carrier needs at least one value")
        return cls(kind='float', floats=floats)

    @classmethod
    def list_of(cls, element: 'CarrierSpec', max_len: int) -> 'CarrierSpec':
        if max_len < 0:
            raise CarrierError(f"list carrier needs max_len >= 0, got {max_len}")
        if max_len > GUARDS['max_len']:
            raise CarrierError(f"list carrier max_len {max_len} exceeds {GUARDS['max_len']}")
        return cls(kind='list', element=element, max_len=max_len)

    def kind_tag(self) -> str:
        """Tag yang sama dengan Value.kind_tag() milik elemennya"""
        if self.kind == 'mod':
            return f"mod{self.modulus}"
        return self.kind

    def describe(self) -> str:
        if self.kind == 'mod':
            return f"mod {self.modulus}"
        if self.kind == 'int':
            return f"int {self.lo}..{self.hi}"
        if self.kind == 'float':
            return 'float {' + ', '.join(repr(v) for v in self.floats) + '}'
        return f"list {self.max_len} of {self.element.describe()}"

    def __str__(self) -> str:
        return self.describe()

    def size(self) -> int:
        return len(enum_values(self))

    def literal(self, raw: Union[str, int, float]) -> Value:
        """
        Parse literal (misalnya z) ke kind carrier ini

        Raises:
            KindMismatchError: literal tidak cocok dengan kind carrier
        """
        text = raw.strip() if isinstance(raw, str) else raw
        if self.kind == 'list':
            return self._list_literal(text)
        number = _parse_number(text)
        if self.kind == 'mod':
            if not isinstance(number, int):
                raise KindMismatchError(f"literal {text} is not an integer for carrier {self}")
            return ModInt.of(number, self.modulus)
        if self.kind == 'int':
            if not isinstance(number, int):
                raise KindMismatchError(f"literal {text} is not an integer for carrier {self}")
            return Int64(number)
        return Float64(number)

    def _list_literal(self, text) -> ValList:
        if not isinstance(text, str) or not (text.startswith('[') and text.endswith(']')):
            raise KindMismatchError(f"literal {text} is not a list for carrier {self}")
        inner = text[1:-1].strip()
        if not inner:
            return ValList(())
        return ValList(tuple(self.element.literal(part) for part in inner.split(',')))


def _parse_number(text) -> Union[int, float]:
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        return text
    try:
        return int(text)
    except (TypeError, ValueError):
        pass
    try:
        return float(text)
    except (TypeError, ValueError):
        raise KindMismatchError(f"literal {text!r} is not a number")


def parse_carrier(text: str) -> CarrierSpec:
    """
    Parse carrier dari teks: "mod 5", "int 0..7", "float {1.0, 1e16}",
    atau "list 2 of mod 3"

    Raises:
        CarrierError: teks tidak dikenali atau bound tidak valid
    """
    text = ' '.join(text.strip().split())
    match = _MOD_PATTERN.match(text)
    if match:
        return CarrierSpec.mod(int(match.group(1)))
    match = _INT_PATTERN.match(text)
    if match:
        return CarrierSpec.int_range(int(match.group(1)), int(match.group(2)))
    match = _FLOAT_PATTERN.match(text)
    if match:
        parts = [p.strip() for p in match.group(1).split(',') if p.strip()]
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise CarrierError(f"bad float in carrier {text!r}")
        return CarrierSpec.float_set(values)
    match = _LIST_PATTERN.match(text)
    if match:
        return CarrierSpec.list_of(parse_carrier(match.group(2)), int(match.group(1)))
    raise CarrierError(f"unrecognised carrier {text!r}")


@lru_cache(maxsize=256)
def enum_values(c: CarrierSpec) -> Tuple[Value, ...]:
    """
    Semua value carrier, urutan size-then-lexicographic, tanpa duplikat

    Returns:
        Tuple value (hasil di-cache, jadi panggilan ulang identik)
    """
    if c.kind == 'mod':
        return tuple(ModInt(r, c.modulus) for r in range(c.modulus))
    if c.kind == 'int':
        return tuple(Int64(v) for v in range(c.lo, c.hi + 1))
    if c.kind == 'float':
        return tuple(sorted(set(Float64(v) for v in c.floats)))
    if c.kind == 'list':
        return enum_lists(c.element, c.max_len)
    raise CarrierError(f"unknown carrier kind {c.kind!r}")


@lru_cache(maxsize=256)
def enum_lists(c: CarrierSpec, max_len: int) -> Tuple[ValList, ...]:
    """
    Semua list atas enum_values(c) dengan panjang <= max_len

    Urutan: terpendek dulu, lalu lexicographic.
    """
    if max_len < 0:
        raise CarrierError(f"max_len must be >= 0, got {max_len}")
    items = enum_values(c)
    lists = []
    for length in range(max_len + 1):
        for combo in product(items, repeat=length):
            lists.append(ValList(combo))
    return tuple(lists)


def count_lists(c: CarrierSpec, max_len: int) -> int:
    """Jumlah list: sum_{k <= max_len} |c|^k"""
    n = len(enum_values(c))
    return sum(n ** k for k in range(max_len + 1))


def enum_nested_lists(c: CarrierSpec, max_parts: int, max_len: int) -> Iterator[Tuple[ValList, ...]]:
    """
    Semua list-of-lists dengan <= max_parts bagian, tiap bagian <= max_len

    Urutan: jumlah bagian dulu, lalu lexicographic menurut enum_lists.
    """
    if max_parts < 0:
        raise CarrierError(f"max_parts must be >= 0, got {max_parts}")
    shapes = enum_lists(c, max_len)
    for parts in range(max_parts + 1):
        yield from product(shapes, repeat=parts)
