"""
Carrier Values
Modular integers, checked 64-bit integers, finite floats and lists
"""

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Any, Iterator, Optional, Sequence, Tuple

from .errors import InvalidValueError, Int64OverflowError, KindMismatchError

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1


@total_ordering
class Value:
    """
    Base class untuk semua carrier value

    Urutan total hanya berlaku di dalam satu kind; membandingkan dua kind
    yang berbeda adalah error, bukan False.
    """

    kind = 'value'

    def kind_tag(self) -> str:
        return self.kind

    def sort_key(self) -> Tuple:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Value):
            return NotImplemented
        return self.kind_tag() == other.kind_tag() and self.sort_key() == other.sort_key()

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Value):
            return NotImplemented
        if self.kind_tag() != other.kind_tag():
            raise KindMismatchError(
                f"cannot compare {self.kind_tag()} with {other.kind_tag()}",
                left=self, right=other
            )
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return hash((self.kind_tag(), self.sort_key()))

    def to_json(self) -> str:
        return str(self)


@dataclass(frozen=True, eq=False)
class ModInt(Value):
    residue: int
    modulus: int

    kind = 'mod'

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise InvalidValueError(
                f"residue {self.residue} outside [0, {self.modulus})"
            )

    @classmethod
    def of(cls, n: int, modulus: int) -> 'ModInt':
        """Reduce n mod modulus"""
        if modulus < 2:
            raise InvalidValueError(f"modulus must be >= 2, got {modulus}")
        return cls(n % modulus, modulus)

    def kind_tag(self) -> str:
        return f"mod{self.modulus}"

    def sort_key(self) -> Tuple:
        return (self.residue, self.modulus)

    def __str__(self) -> str:
        return str(self.residue)


@dataclass(frozen=True, eq=False)
class Int64(Value):
    value: int

    kind = 'int'

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise InvalidValueError(f"Int64 needs an integer, got {self.value!r}")
        if not INT64_MIN <= self.value <= INT64_MAX:
            raise Int64OverflowError(f"Int64 overflow: {self.value}")

    def sort_key(self) -> Tuple:
        return (self.value,)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True, eq=False)
class Float64(Value):
    value: float

    kind = 'float'

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, (int, float)):
            raise InvalidValueError(f"Float64 needs a number, got {self.value!r}")
        object.__setattr__(self, 'value', float(self.value))
        if not math.isfinite(self.value):
            raise InvalidValueError(f"Float64 must be finite, got {self.value!r}")

    def sort_key(self) -> Tuple:
        # IEEE total order restricted to finite values: -0.0 < +0.0
        return (self.value, math.copysign(1.0, self.value))

    def __str__(self) -> str:
        return repr(self.value)


@dataclass(frozen=True, eq=False)
class ValList(Value):
    items: Tuple[Value, ...] = ()

    kind = 'list'

    def __post_init__(self):
        items = tuple(self.items)
        object.__setattr__(self, 'items', items)
        for item in items:
            if not isinstance(item, Value):
                raise InvalidValueError(f"list element {item!r} is not a Value")
        if items:
            tag = items[0].kind_tag()
            for item in items[1:]:
                if item.kind_tag() != tag:
                    raise KindMismatchError(
                        f"list mixes {tag} and {item.kind_tag()}", list=self
                    )

    def sort_key(self) -> Tuple:
        # element tag ikut dibandingkan: [0] mod 2, [0] mod 5 dan [0] int berbeda
        return tuple((item.kind_tag(), item.sort_key()) for item in self.items)

    def element_tag(self) -> Optional[str]:
        return self.items[0].kind_tag() if self.items else None

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Value]:
        return iter(self.items)

    def __getitem__(self, index):
        return self.items[index]

    def cons(self, head: Value) -> 'ValList':
        return ValList((head,) + self.items)

    def concat(self, other: 'ValList') -> 'ValList':
        return ValList(self.items + other.items)

    def __str__(self) -> str:
        return '[' + ', '.join(str(item) for item in self.items) + ']'


def value_of(raw: Any, like: Optional[Value] = None) -> Value:
    """
    Coerce raw Python data ke Value

    Args:
        raw: Value, int, float, atau list/tuple dari keduanya
        like: Contoh value; int mentah dibaca sebagai ModInt dengan
            modulus yang sama bila like adalah ModInt

    Returns:
        Value yang sesuai
    """
    if isinstance(raw, Value):
        return raw
    if isinstance(like, ModInt) and isinstance(raw, int) and not isinstance(raw, bool):
        return ModInt.of(raw, like.modulus)
    if isinstance(like, Float64) and isinstance(raw, (int, float)):
        return Float64(raw)
    if isinstance(raw, bool):
        raise InvalidValueError(f"booleans are not carrier values: {raw!r}")
    if isinstance(raw, int):
        return Int64(raw)
    if isinstance(raw, float):
        return Float64(raw)
    if isinstance(raw, (list, tuple)):
        element_like = like.items[0] if isinstance(like, ValList) and like.items else None
        return ValList(tuple(value_of(item, element_like) for item in raw))
    raise InvalidValueError(f"cannot build a Value from {raw!r}")


def vlist(raw: Sequence[Any], like: Optional[Value] = None) -> ValList:
    """Shorthand: ValList dari sequence mentah"""
    return ValList(tuple(value_of(item, like) for item in raw))
