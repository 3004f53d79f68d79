"""
Permutation Library
insert/perm as non-deterministic computations and exhaustive checkers for
the fold/permutation lemmas
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Optional

from algebra.carriers import CarrierSpec, enum_lists, enum_values
from algebra.errors import AggregationError, KindMismatchError
from algebra.evaluator import eval_binop
from algebra.expr import OpExpr, print_expr
from algebra.functions import Predicate, PureFunction, filter_list, map_list
from algebra.opspec import OpSpec
from algebra.values import ValList, Value
from config.settings import LEMMA_SETTINGS
from nondet.monad import Kleisli, NonDet, bind, fmap, mplus, pure
from .engine import find_counterexample
from .report import CheckRecord, Verdict, timed_check, witness


@dataclass(frozen=True)
class FoldSpec:
    """Operator odot :: a -> b -> b beserta z, untuk foldr"""
    odot: OpExpr
    z: Value

    @classmethod
    def oplus_of(cls, ops: OpSpec) -> 'FoldSpec':
        return cls(ops.oplus, ops.z)

    @classmethod
    def otimes_of(cls, ops: OpSpec) -> 'FoldSpec':
        return cls(ops.otimes, ops.z)

    def apply(self, x: Value, y: Value) -> Value:
        return eval_binop(self.odot, x, y)

    def fold(self, xs: ValList) -> Value:
        return foldr_list(self.odot, self.z, xs)

    def describe(self) -> str:
        return f"odot = {print_expr(self.odot)}, z = {self.z}"


def foldr_list(op: OpExpr, z: Value, xs: ValList) -> Value:
    """
    Right fold: x1 op (x2 op (... op z))

    Raises:
        EvaluationError: dengan list sebagai context
    """
    acc = z
    try:
        for x in reversed(xs.items):
            acc = eval_binop(op, x, acc)
    except AggregationError as err:
        raise err.with_context(list=xs)
    return acc


def _check_element_kind(x: Value, xs: ValList):
    tag = xs.element_tag()
    if tag is not None and tag != x.kind_tag():
        raise KindMismatchError(
            f"cannot insert {x.kind_tag()} value into a list of {tag}", x=x, list=xs
        )


def _cons(head: Value) -> PureFunction:
    return PureFunction(f"({head}:)", lambda ys: ys.cons(head))


def insert(x: Value, xs: ValList) -> NonDet:
    """
    Sisipkan x di posisi sembarang

    insert x []     = return [x]
    insert x (y:ys) = return (x:y:ys) || ((y:) <$> insert x ys)
    """
    _check_element_kind(x, xs)
    return _insert(x, xs)


@lru_cache(maxsize=1 << 14)
def _insert(x: Value, xs: ValList) -> NonDet:
    if not xs.items:
        return pure(ValList((x,)))
    head, rest = xs.items[0], ValList(xs.items[1:])
    return mplus(pure(xs.cons(x)), fmap(_cons(head), _insert(x, rest)))


@lru_cache(maxsize=1 << 14)
def perm(xs: ValList) -> NonDet:
    """
    Semua permutasi (set semantics: permutasi yang sama melebur)

    perm []     = return []
    perm (x:xs) = insert x =<< perm xs
    """
    if not xs.items:
        return pure(ValList(()))
    head, rest = xs.items[0], ValList(xs.items[1:])
    return bind(Kleisli(f"insert {head}", lambda ys: insert(head, ys)), perm(rest))


def perm_direct(xs: ValList) -> NonDet:
    """Oracle independen: itertools.permutations"""
    return NonDet.of(ValList(p) for p in permutations(xs.items))


def multiset_permutation_count(xs: ValList) -> int:
    """n! / prod(m_i!) untuk multiplicity m_i"""
    multiplicities = Counter(xs.items).values()
    return factorial(len(xs)) // prod(factorial(m) for m in multiplicities)


def _exchange_witness(f: FoldSpec, x: Value, y: Value, w: Value):
    lhs = f.apply(x, f.apply(y, w))
    rhs = f.apply(y, f.apply(x, w))
    if lhs == rhs:
        return None
    return witness(x=x, y=y, w=w, lhs=lhs, rhs=rhs)


@timed_check
def check_exchange_odot(f: FoldSpec, ca: CarrierSpec, cb: CarrierSpec,
                        workers: Optional[int] = None) -> CheckRecord:
    """x odot (y odot w) = y odot (x odot w) untuk semua x, y di ca, w di cb"""
    values_a, values_b = enum_values(ca), enum_values(cb)
    checked, found = find_counterexample(
        product(values_a, values_a, values_b),
        lambda p: _exchange_witness(f, *p), workers, desc='exchange-odot'
    )
    return CheckRecord.from_search(
        'exchange-odot', 'Lemma fold-perm (exchange condition)', checked, found,
        message='x odot (y odot w) = y odot (x odot w) holds' if found is None
        else 'exchange condition fails',
        details={'fold': f.describe(), 'carrier_a': ca.describe(), 'carrier_b': cb.describe()},
    )


@timed_check
def check_lemma_fold_perm(f: FoldSpec, ca: CarrierSpec, cb: CarrierSpec,
                          max_len: int = LEMMA_SETTINGS['max_len'],
                          require_exchange: bool = False,
                          workers: Optional[int] = None) -> CheckRecord:
    """
    foldr odot z <.> perm = return . foldr odot z

    Args:
        require_exchange: True berarti exchange condition jadi hypothesis
            gate; False (default) berarti diabaikan, supaya kegagalan
            lemma tetap terlihat
    """
    exchange = check_exchange_odot(f, ca, cb, workers)
    details = {
        'fold': f.describe(),
        'max_len': max_len,
        'exchange_condition': exchange.verdict.value,
    }
    if exchange.witness is not None:
        details['exchange_witness'] = exchange.witness
    if require_exchange and not exchange.passed:
        return CheckRecord(
            'lemma-fold-perm', 'Lemma fold-perm', Verdict.HYPOTHESIS_NOT_MET,
            checked=exchange.checked, details=details,
            message='exchange condition fails; lemma not applicable',
        )

    def check(xs: ValList):
        lhs = fmap(f.fold, perm(xs))
        rhs = pure(f.fold(xs))
        if lhs == rhs:
            return None
        return witness(xs=xs, lhs=lhs, rhs=rhs)

    checked, found = find_counterexample(enum_lists(ca, max_len), check, workers, desc='fold-perm')
    if found is not None and exchange.passed:
        message = 'lemma violated although the exchange condition holds'
    elif found is not None:
        message = 'fold depends on the order of elements'
    else:
        message = 'fold is invariant under permutation'
    return CheckRecord.from_search('lemma-fold-perm', 'Lemma fold-perm', checked, found,
                                   message=message, details=details)


@timed_check
def check_lemma_fold_insert(f: FoldSpec, ca: CarrierSpec, cb: CarrierSpec,
                            max_len: int = LEMMA_SETTINGS['max_len'],
                            workers: Optional[int] = None) -> CheckRecord:
    """foldr odot z <.> insert x = return . foldr odot z . (x:)"""
    def check(point):
        x, xs = point
        lhs = fmap(f.fold, insert(x, xs))
        rhs = pure(f.fold(xs.cons(x)))
        if lhs == rhs:
            return None
        return witness(x=x, xs=xs, lhs=lhs, rhs=rhs)

    checked, found = find_counterexample(
        product(enum_values(ca), enum_lists(ca, max_len)), check, workers, desc='fold-insert'
    )
    return CheckRecord.from_search(
        'lemma-fold-insert', 'Lemma fold-insert', checked, found,
        message='fold is invariant under insertion position' if found is None
        else 'fold depends on the insertion position',
        details={'fold': f.describe(), 'max_len': max_len},
    )


@timed_check
def check_lemma_perm_map(g: PureFunction, ca: CarrierSpec,
                         max_len: int = LEMMA_SETTINGS['max_len'],
                         workers: Optional[int] = None) -> CheckRecord:
    """perm . map g = map g <.> perm"""
    mapper = PureFunction(f"map {g.name}", lambda ys: map_list(g, ys))

    def check(xs: ValList):
        lhs = perm(map_list(g, xs))
        rhs = fmap(mapper, perm(xs))
        if lhs == rhs:
            return None
        return witness(xs=xs, lhs=lhs, rhs=rhs)

    checked, found = find_counterexample(enum_lists(ca, max_len), check, workers, desc='shuffle-map')
    return CheckRecord.from_search(
        'lemma-shuffle-map', 'Lemma shuffle-map', checked, found,
        details={'function': g.name, 'max_len': max_len},
    )


@timed_check
def check_lemma_insert_map(g: PureFunction, ca: CarrierSpec,
                           max_len: int = LEMMA_SETTINGS['max_len'],
                           workers: Optional[int] = None) -> CheckRecord:
    """insert (g x) . map g = map g <.> insert x"""
    mapper = PureFunction(f"map {g.name}", lambda ys: map_list(g, ys))

    def check(point):
        x, xs = point
        lhs = insert(g(x), map_list(g, xs))
        rhs = fmap(mapper, insert(x, xs))
        if lhs == rhs:
            return None
        return witness(x=x, xs=xs, lhs=lhs, rhs=rhs)

    checked, found = find_counterexample(
        product(enum_values(ca), enum_lists(ca, max_len)), check, workers, desc='insert-map'
    )
    return CheckRecord.from_search(
        'lemma-insert-map', 'Lemma insert-map', checked, found,
        details={'function': g.name, 'max_len': max_len},
    )


@timed_check
def check_lemma_perm_filter(p: Predicate, ca: CarrierSpec,
                            max_len: int = LEMMA_SETTINGS['max_len'],
                            workers: Optional[int] = None) -> CheckRecord:
    """perm . filter p = filter p <.> perm"""
    filterer = PureFunction(f"filter {p.name}", lambda ys: filter_list(p, ys))

    def check(xs: ValList):
        lhs = perm(filter_list(p, xs))
        rhs = fmap(filterer, perm(xs))
        if lhs == rhs:
            return None
        return witness(xs=xs, lhs=lhs, rhs=rhs)

    checked, found = find_counterexample(enum_lists(ca, max_len), check, workers, desc='perm-filter')
    return CheckRecord.from_search(
        'lemma-perm-filter', 'Lemma perm-filter', checked, found,
        details={'predicate': p.name, 'max_len': max_len},
    )


@timed_check
def check_lemma_perm_id(ca: CarrierSpec, max_len: int = LEMMA_SETTINGS['max_len'],
                        workers: Optional[int] = None) -> CheckRecord:
    """perm xs = return xs || m untuk suatu m, dibaca sebagai xs in perm xs"""
    def check(xs: ValList):
        outcomes = perm(xs)
        if xs in outcomes:
            return None
        return witness(xs=xs, outcomes=outcomes)

    checked, found = find_counterexample(enum_lists(ca, max_len), check, workers, desc='perm-id')
    return CheckRecord.from_search(
        'lemma-perm-id', 'Lemma perm-id', checked, found,
        details={'max_len': max_len, 'reading': 'set membership'},
    )


@timed_check
def check_perm_oracle(ca: CarrierSpec, max_len: int,
                      workers: Optional[int] = None) -> CheckRecord:
    """perm (definisi rekursif) == perm_direct, dan |perm xs| == n!/prod(m_i!)"""
    def check(xs: ValList):
        recursive = perm(xs)
        direct = perm_direct(xs)
        expected = multiset_permutation_count(xs)
        if recursive == direct and len(recursive) == expected:
            return None
        return witness(xs=xs, recursive=recursive, direct=direct, expected_count=expected)

    checked, found = find_counterexample(enum_lists(ca, max_len), check, workers, desc='perm-oracle')
    return CheckRecord.from_search(
        'perm-oracle', 'perm definition', checked, found,
        details={'max_len': max_len, 'oracle': 'itertools.permutations'},
    )
