"""
Non-determinism Monad
Finite outcome sets in canonical (sorted, duplicate-free) form with the
full operator algebra: return, failure, choice, bind and compositions
"""

from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from algebra.carriers import CarrierSpec
from algebra.errors import AggregationError, CarrierMismatchError, InvalidValueError
from algebra.functions import PURE_FUNCTIONS, PureFunction
from algebra.values import Value, value_of


@dataclass(frozen=True)
class NonDet:
    """
    Himpunan outcome berhingga

    outcomes selalu strictly ascending, sehingga kesamaan struktural sama
    dengan kesamaan himpunan.
    """
    outcomes: Tuple[Value, ...] = ()

    def __post_init__(self):
        outcomes = tuple(self.outcomes)
        object.__setattr__(self, 'outcomes', outcomes)
        for left, right in zip(outcomes, outcomes[1:]):
            if not left < right:
                raise InvalidValueError(
                    f"outcomes not in canonical order: {left} before {right}"
                )

    @classmethod
    def of(cls, values: Iterable[Value]) -> 'NonDet':
        """Canonicalize: sort + dedupe (kind campuran menghasilkan error)"""
        return cls(tuple(sorted(set(values))))

    def __iter__(self) -> Iterator[Value]:
        return iter(self.outcomes)

    def __len__(self) -> int:
        return len(self.outcomes)

    def __contains__(self, value: object) -> bool:
        return value in self.outcomes

    def is_empty(self) -> bool:
        return not self.outcomes

    def is_singleton(self) -> bool:
        return len(self.outcomes) == 1

    def only(self) -> Value:
        if not self.is_singleton():
            raise InvalidValueError(f"expected exactly one outcome, got {self}")
        return self.outcomes[0]

    def to_json(self) -> List[str]:
        return [str(v) for v in self.outcomes]

    def __str__(self) -> str:
        return '{' + ', '.join(str(v) for v in self.outcomes) + '}'


@dataclass(frozen=True)
class Kleisli:
    """
    Arrow bernama Value -> NonDet

    domain/codomain (kind tag) opsional; kalau keduanya diisi,
    kleisli_comp memeriksa kecocokannya.
    """
    name: str
    fn: Callable[[Value], NonDet] = field(compare=False, repr=False)
    domain: Optional[str] = None
    codomain: Optional[str] = None

    def __call__(self, value: Value) -> NonDet:
        result = self.fn(value)
        if not isinstance(result, NonDet):
            raise InvalidValueError(f"Kleisli {self.name} returned {result!r}, not NonDet")
        return result

    def __str__(self) -> str:
        return self.name


def pure(x) -> NonDet:
    """return x = {x}; NaN ditolak oleh Float64"""
    return NonDet((value_of(x),))


def mzero() -> NonDet:
    return NonDet(())


def mplus(m: NonDet, n: NonDet) -> NonDet:
    return NonDet.of(chain(m.outcomes, n.outcomes))


def bind(f: Kleisli, m: NonDet) -> NonDet:
    """f =<< m: gabungan f(x) untuk semua outcome x"""
    results = []
    for x in m:
        try:
            results.extend(f(x).outcomes)
        except AggregationError as err:
            raise err.with_context(kleisli=f.name, outcome=x)
    return NonDet.of(results)


def fmap(g: Callable[[Value], Value], m: NonDet) -> NonDet:
    """g <$> m"""
    results = []
    for x in m:
        try:
            results.append(g(x))
        except AggregationError as err:
            raise err.with_context(function=getattr(g, 'name', repr(g)), outcome=x)
    return NonDet.of(results)


def lift(g: PureFunction) -> Kleisli:
    """return . g"""
    return Kleisli(f"return.{g.name}", lambda x: pure(g(x)))


def kleisli_comp(f: Kleisli, g: Kleisli) -> Kleisli:
    """(f <=< g) x = f =<< g x"""
    if f.domain and g.codomain and f.domain != g.codomain:
        raise CarrierMismatchError(
            f"cannot compose {f.name} <=< {g.name}: "
            f"{g.name} yields {g.codomain}, {f.name} expects {f.domain}"
        )
    return Kleisli(
        f"({f.name} <=< {g.name})",
        lambda x: bind(f, g(x)),
        domain=g.domain,
        codomain=f.codomain,
    )


def mcomp(g: PureFunction, f: Kleisli) -> Kleisli:
    """g <.> f = (return . g) <=< f"""
    composed = kleisli_comp(lift(g), f)
    return Kleisli(f"({g.name} <.> {f.name})", composed.fn, domain=f.domain)


def precompose(f: Kleisli, h: PureFunction) -> Kleisli:
    """(f . h) untuk Kleisli f dan fungsi murni h"""
    return Kleisli(f"({f.name} . {h.name})", lambda x: f(h(x)), codomain=f.codomain)


def mthen(m1: NonDet, m2: NonDet) -> NonDet:
    """m1 << m2 = const m1 =<< m2"""
    return bind(Kleisli('const', lambda _: m1), m2)


def enum_subsets(values: Sequence[Value], bound: int) -> List[NonDet]:
    """Semua NonDet dari subset berukuran <= bound, size-then-lexicographic"""
    ordered = sorted(set(values))
    subsets = []
    for size in range(min(bound, len(ordered)) + 1):
        subsets.extend(NonDet(combo) for combo in combinations(ordered, size))
    return subsets


def kleisli_table_for(carrier: CarrierSpec) -> List[Kleisli]:
    """
    Tabel Kleisli default untuk carrier

    Semua entri total pada carrier (outcome boleh keluar dari range int,
    tapi tetap ber-kind sama).
    """
    tag = carrier.kind_tag()
    identity = PURE_FUNCTIONS['identity']
    if carrier.kind == 'list':
        reverse = PURE_FUNCTIONS['reverse']
        table = [
            Kleisli('return', pure),
            Kleisli('return.reverse', lambda x: pure(reverse(x))),
            Kleisli('keep-or-reverse', lambda x: NonDet.of((x, reverse(x)))),
            Kleisli('fail', lambda x: mzero()),
        ]
    else:
        succ = PURE_FUNCTIONS['succ']
        negate = PURE_FUNCTIONS['negate']
        table = [
            Kleisli('return', lambda x: pure(identity(x))),
            Kleisli('return.succ', lambda x: pure(succ(x))),
            Kleisli('keep-or-succ', lambda x: NonDet.of((x, succ(x)))),
            Kleisli('keep-or-negate', lambda x: NonDet.of((x, negate(x)))),
            Kleisli('fail', lambda x: mzero()),
        ]
    return [Kleisli(k.name, k.fn, domain=tag, codomain=tag) for k in table]
