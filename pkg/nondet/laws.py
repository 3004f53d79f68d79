"""
Monad Law Suite
Exhaustive checks of the non-determinism monad laws over a finite carrier
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from algebra.carriers import CarrierSpec, enum_values
from algebra.errors import CarrierError
from algebra.functions import PureFunction, compose, pure_table_for
from checkers.engine import find_counterexample
from checkers.report import CheckRecord, Report, timed_check, witness
from config.settings import LAW_SETTINGS
from utils.logger import get_logger
from .monad import (
    Kleisli, NonDet, bind, enum_subsets, fmap, kleisli_comp, kleisli_table_for,
    lift, mcomp, mplus, mzero, precompose, pure
)


@dataclass
class LawDomain:
    """Domain kuantifikasi untuk satu run law suite"""
    values: Sequence
    subsets: List[NonDet]
    nonempty: List[NonDet]
    kleislis: List[Kleisli]
    pures: List[PureFunction]


@dataclass(frozen=True)
class Law:
    law_id: str
    anchor: str
    statement: str
    points: Callable[[LawDomain], Iterable[Tuple]] = field(repr=False)
    check: Callable[..., Optional[Dict[str, Any]]] = field(repr=False)
    note: str = ''


def _same(lhs: NonDet, rhs: NonDet, **point: Any) -> Optional[Dict[str, str]]:
    if lhs == rhs:
        return None
    return witness(**point, lhs=lhs, rhs=rhs)


def _pointwise(lhs: Kleisli, rhs: Kleisli, x, **point: Any) -> Optional[Dict[str, str]]:
    return _same(lhs(x), rhs(x), **point, x=x)


# Quantification domains

def _k_x(d: LawDomain):
    return product(d.kleislis, d.values)


def _k_m(d: LawDomain):
    return product(d.kleislis, d.subsets)


def _m(d: LawDomain):
    return ((m,) for m in d.subsets)


def _kk_m(d: LawDomain):
    return product(d.kleislis, d.kleislis, d.subsets)


def _mmm(d: LawDomain):
    return product(d.subsets, d.subsets, d.subsets)


def _mm(d: LawDomain):
    return product(d.subsets, d.subsets)


def _k_mm(d: LawDomain):
    return product(d.kleislis, d.subsets, d.subsets)


def _p_x(d: LawDomain):
    return product(d.pures, d.values)


def _p_m(d: LawDomain):
    return product(d.pures, d.subsets)


def _p_mm(d: LawDomain):
    return product(d.pures, d.subsets, d.subsets)


def _p_k_x(d: LawDomain):
    return product(d.pures, d.kleislis, d.values)


def _pp_m(d: LawDomain):
    return product(d.pures, d.pures, d.subsets)


def _pp_k_x(d: LawDomain):
    return product(d.pures, d.pures, d.kleislis, d.values)


def _p_k_p_x(d: LawDomain):
    return product(d.pures, d.kleislis, d.pures, d.values)


def _k_p_m(d: LawDomain):
    return product(d.kleislis, d.pures, d.subsets)


def _p_k_m(d: LawDomain):
    return product(d.pures, d.kleislis, d.subsets)


def _k_p_k_x(d: LawDomain):
    return product(d.kleislis, d.pures, d.kleislis, d.values)


def _p_kk_x(d: LawDomain):
    return product(d.pures, d.kleislis, d.kleislis, d.values)


def _nonempty_pairs(d: LawDomain):
    return product(d.nonempty, d.nonempty)


def _xx(d: LawDomain):
    return product(d.values, d.values)


# Law checks

def _monoid(m, n, k):
    for lhs, rhs, label in (
        (mplus(mplus(m, n), k), mplus(m, mplus(n, k)), 'associativity'),
        (mplus(mzero(), m), m, 'left identity'),
        (mplus(m, mzero()), m, 'right identity'),
    ):
        if lhs != rhs:
            return witness(m=m, n=n, k=k, part=label, lhs=lhs, rhs=rhs)
    return None


def _mplus_return(m1: NonDet, m2: NonDet):
    joined = mplus(m1, m2)
    if not joined.is_singleton():
        return None
    single = pure(joined.only())
    if m1 == single and m2 == single:
        return None
    return witness(m1=m1, m2=m2, joined=joined)


def _return_injective(x1, x2):
    if pure(x1) == pure(x2) and x1 != x2:
        return witness(x1=x1, x2=x2)
    return None


LAW_CATALOGUE: Tuple[Law, ...] = (
    Law('monad-left-identity', 'monad law: left identity', 'f =<< return x = f x',
        _k_x, lambda f, x: _same(bind(f, pure(x)), f(x), f=f, x=x)),
    Law('monad-right-identity', 'monad law: right identity', 'return =<< m = m',
        _m, lambda m: _same(bind(Kleisli('return', pure), m), m, m=m)),
    Law('monad-associativity', 'monad law: associativity',
        'f =<< (g =<< m) = (\\x -> f =<< g x) =<< m',
        _kk_m, lambda f, g, m: _same(
            bind(f, bind(g, m)),
            bind(Kleisli('f=<<g', lambda x: bind(f, g(x))), m),
            f=f, g=g, m=m)),
    Law('mplus-monoid', 'law: (M a, ||, {}) is a monoid',
        '(m || n) || k = m || (n || k); {} || m = m = m || {}',
        _mmm, _monoid),
    Law('bind-mplus-dist', 'law: bind distributes into ||',
        'f =<< (m1 || m2) = (f =<< m1) || (f =<< m2)',
        _k_mm, lambda f, m1, m2: _same(
            bind(f, mplus(m1, m2)), mplus(bind(f, m1), bind(f, m2)), f=f, m1=m1, m2=m2)),
    Law('bind-mzero-zero', 'law: {} is a right zero of bind', 'f =<< {} = {}',
        lambda d: ((f,) for f in d.kleislis),
        lambda f: _same(bind(f, mzero()), mzero(), f=f)),
    Law('mplus-commutativity', 'law: || is commutative', 'm || n = n || m',
        _mm, lambda m, n: _same(mplus(m, n), mplus(n, m), m=m, n=n)),
    Law('mplus-idempotence', 'law: || is idempotent', 'm || m = m',
        _m, lambda m: _same(mplus(m, m), m, m=m)),
    Law('ap-return', 'law: ap-return', 'f <$> return x = return (f x)',
        _p_x, lambda f, x: _same(fmap(f, pure(x)), pure(f(x)), f=f.name, x=x)),
    Law('ap-mzero', 'law: ap-mzero', 'f <$> {} = {}',
        lambda d: ((f,) for f in d.pures),
        lambda f: _same(fmap(f, mzero()), mzero(), f=f.name)),
    Law('ap-mplus', 'law: ap-mplus', 'f <$> (m1 || m2) = (f <$> m1) || (f <$> m2)',
        _p_mm, lambda f, m1, m2: _same(
            fmap(f, mplus(m1, m2)), mplus(fmap(f, m1), fmap(f, m2)), f=f.name, m1=m1, m2=m2)),
    Law('comp-ap', 'law: comp-ap', '(f <.> g) x = f <$> g x',
        _p_k_x, lambda f, g, x: _same(mcomp(f, g)(x), fmap(f, g(x)), f=f.name, g=g, x=x)),
    Law('comp-ap-ap', 'law: comp-ap-ap', 'f <$> (g <$> m) = (f . g) <$> m',
        _pp_m, lambda f, g, m: _same(
            fmap(f, fmap(g, m)), fmap(compose(f, g), m), f=f.name, g=g.name, m=m)),
    Law('comp-mcomp-mcomp', 'law: comp-mcomp-mcomp', 'f <.> (g <.> h) = (f . g) <.> h',
        _pp_k_x, lambda f, g, h, x: _pointwise(
            mcomp(f, mcomp(g, h)), mcomp(compose(f, g), h), x, f=f.name, g=g.name, h=h)),
    Law('mcomp-comp-mcomp', 'law: mcomp-comp-mcomp', 'f <.> (g . h) = (f <.> g) . h',
        _p_k_p_x, lambda f, g, h, x: _pointwise(
            mcomp(f, precompose(g, h)), precompose(mcomp(f, g), h), x,
            f=f.name, g=g, h=h.name)),
    Law('comp-bind-ap', 'law: comp-bind-ap', 'f =<< (g <$> m) = (f . g) =<< m',
        _k_p_m, lambda f, g, m: _same(
            bind(f, fmap(g, m)), bind(precompose(f, g), m), f=f, g=g.name, m=m)),
    Law('mcomp-bind-ap', 'law: mcomp-bind-ap', 'f <$> (g =<< m) = (f <.> g) =<< m',
        _p_k_m, lambda f, g, m: _same(
            fmap(f, bind(g, m)), bind(mcomp(f, g), m), f=f.name, g=g, m=m)),
    Law('kc-mcomp', 'law: kc-mcomp', 'f <=< (g <.> h) = (f . g) <=< h',
        _k_p_k_x, lambda f, g, h, x: _pointwise(
            kleisli_comp(f, mcomp(g, h)), kleisli_comp(precompose(f, g), h), x,
            f=f, g=g.name, h=h)),
    Law('mcomp-kc', 'law: mcomp-kc', 'f <.> (g <=< h) = (f <.> g) <=< h',
        _p_kk_x, lambda f, g, h, x: _pointwise(
            mcomp(f, kleisli_comp(g, h)), kleisli_comp(mcomp(f, g), h), x,
            f=f.name, g=g, h=h)),
    Law('bind-comp-bind', 'law: bind-comp-bind', '(f =<<) . (g =<<) = ((f =<<) . g) =<<',
        _kk_m, lambda f, g, m: _same(
            bind(f, bind(g, m)),
            bind(Kleisli('(f=<<).g', lambda x: bind(f, g(x))), m),
            f=f, g=g, m=m)),
    Law('mplus-return', 'law: mplus-return',
        'm1 || m2 = return x implies m1 = m2 = return x',
        _nonempty_pairs, _mplus_return,
        note='quantified over nonempty m1, m2 only; {} || return x = return x refutes the unrestricted law'),
    Law('return-injective', 'law: return is injective', 'return x1 = return x2 implies x1 = x2',
        _xx, _return_injective),
)


def check_law(law: Law, domain: LawDomain, workers: Optional[int] = None) -> CheckRecord:
    """Jalankan satu law pada domain"""
    @timed_check
    def run() -> CheckRecord:
        checked, found = find_counterexample(
            law.points(domain), lambda point: law.check(*point), workers, desc=law.law_id
        )
        details = {'statement': law.statement}
        if law.note:
            details['restriction'] = law.note
        return CheckRecord.from_search(
            law.law_id, law.anchor, checked, found,
            message='holds on all quantified instances' if found is None
            else 'counterexample found', details=details
        )
    return run()


def build_domain(carrier: CarrierSpec, fn_table: Optional[List[Kleisli]] = None,
                 pure_table: Optional[List[PureFunction]] = None,
                 set_bound: int = LAW_SETTINGS['set_bound']) -> LawDomain:
    """
    Bangun domain kuantifikasi

    Raises:
        CarrierError: carrier kosong atau function table kosong
    """
    values = enum_values(carrier)
    if not values:
        raise CarrierError(f"carrier {carrier} is empty")
    kleislis = list(fn_table) if fn_table is not None else kleisli_table_for(carrier)
    if not kleislis:
        raise CarrierError("function table must be nonempty")
    pures = list(pure_table) if pure_table is not None else pure_table_for(carrier)
    subsets = enum_subsets(values, set_bound)
    return LawDomain(
        values=values,
        subsets=subsets,
        nonempty=[m for m in subsets if not m.is_empty()],
        kleislis=kleislis,
        pures=pures,
    )


def check_monad_laws(carrier: CarrierSpec, fn_table: Optional[List[Kleisli]] = None,
                     set_bound: int = LAW_SETTINGS['set_bound'],
                     pure_table: Optional[List[PureFunction]] = None,
                     workers: Optional[int] = None) -> Report:
    """
    Jalankan seluruh katalog law (22 law) secara exhaustive

    Args:
        carrier: Carrier berhingga
        fn_table: Kleisli arrows (default: kleisli_table_for(carrier))
        set_bound: Ukuran maksimum subset untuk NonDet yang dikuantifikasi
        pure_table: Fungsi murni untuk law yang memakai fmap/<.>
        workers: Jumlah worker engine

    Returns:
        Report berisi satu record per law
    """
    domain = build_domain(carrier, fn_table, pure_table, set_bound)
    get_logger().info(
        f"Law suite on {carrier}: {len(domain.values)} values, "
        f"{len(domain.subsets)} subsets, {len(domain.kleislis)} Kleislis"
    )
    report = Report(
        command='laws',
        bounds={
            'carrier': carrier.describe(),
            'set_bound': set_bound,
            'subsets': len(domain.subsets),
            'kleislis': [k.name for k in domain.kleislis],
            'pure_functions': [p.name for p in domain.pures],
        },
    )
    for law in LAW_CATALOGUE:
        report.add(check_law(law, domain, workers))
    return report
