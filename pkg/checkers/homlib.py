"""
Homomorphism Library
Images of folds, list-homomorphism properties and the two homomorphism
biconditionals (hom-concat, foldr-hom)
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Dict, Iterable, Optional, Sequence, Tuple

from algebra.carriers import CarrierSpec, enum_lists, enum_nested_lists, enum_values
from algebra.errors import AggregationError
from algebra.evaluator import eval_binop
from algebra.expr import OpExpr, print_expr
from algebra.opspec import OpSpec
from algebra.values import ValList, Value
from .engine import find_counterexample
from .permlib import foldr_list
from .report import CheckRecord, Verdict, show, timed_check, witness

Witness = Optional[Dict[str, str]]


@dataclass(frozen=True)
class HomCandidate:
    """
    Calon list homomorphism h = hom (oplus) k z

    Attributes:
        h: fungsi list -> value yang diuji
        otimes: bila di-set, h = foldr otimes z dan k = (otimes z);
            bila None, h black-box dan k = h . wrap
    """
    name: str
    oplus: OpExpr
    z: Value
    h: Callable[[ValList], Value] = field(compare=False, repr=False)
    otimes: Optional[OpExpr] = None

    @classmethod
    def from_fold(cls, ops: OpSpec) -> 'HomCandidate':
        otimes, z = ops.otimes, ops.z
        return cls(
            name=f"foldr ({print_expr(otimes)}) {z}",
            oplus=ops.oplus,
            z=z,
            h=lambda xs: foldr_list(otimes, z, xs),
            otimes=otimes,
        )

    @classmethod
    def from_function(cls, name: str, fn: Callable[[ValList], Value],
                      oplus: OpExpr, z: Value) -> 'HomCandidate':
        return cls(name=name, oplus=oplus, z=z, h=fn)

    def k(self, x: Value) -> Value:
        if self.otimes is not None:
            return eval_binop(self.otimes, x, self.z)
        return self.h(ValList((x,)))

    def combine(self, a: Value, b: Value) -> Value:
        return eval_binop(self.oplus, a, b)

    def describe(self) -> Dict[str, str]:
        return {
            'h': self.name,
            'oplus': print_expr(self.oplus),
            'z': str(self.z),
            'k': f"({print_expr(self.otimes)} {self.z})" if self.otimes is not None else 'h . wrap',
        }


# Image of foldr otimes z

@lru_cache(maxsize=512)
def image_with_witnesses(otimes: OpExpr, z: Value, ca: CarrierSpec,
                         max_len: int) -> Tuple[Tuple[Value, ValList], ...]:
    """
    Image foldr otimes z atas list dengan panjang <= max_len, masing-masing
    dengan satu witness list terpendek

    Dihitung per lapisan: img(L) = img(L-1) + { x otimes y | x in ca, y in img(L-1) },
    karena foldr otimes z (x:xs) = x otimes foldr otimes z xs.

    Returns:
        Tuple (value, witness) terurut menurut value
    """
    if max_len < 0:
        return ()
    found: Dict[Value, ValList] = {z: ValList(())}
    frontier = [z]
    for _ in range(max_len):
        fresh = []
        for y in frontier:
            ys = found[y]
            for x in enum_values(ca):
                try:
                    value = eval_binop(otimes, x, y)
                except AggregationError as err:
                    raise err.with_context(list=ys.cons(x))
                if value not in found:
                    found[value] = ys.cons(x)
                    fresh.append(value)
        if not fresh:
            break
        frontier = sorted(fresh)
    return tuple((value, found[value]) for value in sorted(found))


def image_set(otimes: OpExpr, z: Value, ca: CarrierSpec, max_len: int) -> Tuple[Value, ...]:
    """{ foldr otimes z xs | xs in enum_lists(ca, max_len) }, terurut"""
    return tuple(value for value, _ in image_with_witnesses(otimes, z, ca, max_len))


def image_saturation(otimes: OpExpr, z: Value, ca: CarrierSpec, max_len: int) -> bool:
    """True bila image sudah stabil: img(max_len) == img(max_len + 1)"""
    return image_set(otimes, z, ca, max_len) == image_set(otimes, z, ca, max_len + 1)


def image_details(otimes: OpExpr, z: Value, ca: CarrierSpec, max_len: int) -> Dict[str, Any]:
    image = image_set(otimes, z, ca, max_len)
    return {
        'image_bound': max_len,
        'image_size': len(image),
        'image': show(image),
        'image_saturated': image_saturation(otimes, z, ca, max_len),
    }


# Algebraic property searches shared with sparkagg

def find_associativity_failure(op: OpExpr, xs: Sequence[Value], ys: Optional[Sequence[Value]] = None,
                               ws: Optional[Sequence[Value]] = None,
                               workers: Optional[int] = None) -> Tuple[int, Witness]:
    """x op (y op w) = (x op y) op w untuk x in xs, y in ys, w in ws"""
    ys = xs if ys is None else ys
    ws = xs if ws is None else ws

    def check(point):
        x, y, w = point
        lhs = eval_binop(op, x, eval_binop(op, y, w))
        rhs = eval_binop(op, eval_binop(op, x, y), w)
        if lhs == rhs:
            return None
        return witness(x=x, y=y, w=w, lhs=lhs, rhs=rhs)

    return find_counterexample(product(xs, ys, ws), check, workers, desc='associativity')


def find_commutativity_failure(op: OpExpr, values: Sequence[Value],
                               workers: Optional[int] = None) -> Tuple[int, Witness]:
    """x op y = y op x"""
    def check(point):
        x, y = point
        lhs, rhs = eval_binop(op, x, y), eval_binop(op, y, x)
        if lhs == rhs:
            return None
        return witness(x=x, y=y, lhs=lhs, rhs=rhs)

    return find_counterexample(product(values, values), check, workers, desc='commutativity')


def find_identity_failure(op: OpExpr, z: Value, values: Iterable[Value],
                          workers: Optional[int] = None) -> Tuple[int, Witness]:
    """z op y = y = y op z"""
    def check(y):
        left, right = eval_binop(op, z, y), eval_binop(op, y, z)
        if left == y and right == y:
            return None
        return witness(y=y, z_op_y=left, y_op_z=right)

    return find_counterexample(values, check, workers, desc='identity')


def property_verdict(found: Witness) -> str:
    return Verdict.PASS.value if found is None else Verdict.FAIL.value


# Homomorphism equations

@timed_check
def check_hom_properties(c: HomCandidate, ca: CarrierSpec, max_len: int,
                         ys_max_len: Optional[int] = None,
                         workers: Optional[int] = None) -> CheckRecord:
    """
    Periksa tiga persamaan homomorphism:
    h [] = z, h [x] = k x, h (xs ++ ys) = h xs oplus h ys

    Args:
        max_len: batas panjang xs
        ys_max_len: batas panjang ys (default sama dengan max_len)
    """
    ys_max_len = max_len if ys_max_len is None else ys_max_len
    equations: Dict[str, str] = {}
    first: Optional[Tuple[str, Dict[str, str]]] = None
    total = 0

    def note(label: str, checked: int, found: Witness):
        nonlocal first, total
        total += checked
        equations[label] = property_verdict(found)
        if found is not None and first is None:
            first = (label, found)

    empty = c.h(ValList(()))
    note('empty', 1, None if empty == c.z else witness(h_empty=empty, z=c.z))

    def singleton(x: Value):
        lhs, rhs = c.h(ValList((x,))), c.k(x)
        return None if lhs == rhs else witness(x=x, lhs=lhs, rhs=rhs)

    note('singleton', *find_counterexample(enum_values(ca), singleton, workers, desc='hom-singleton'))

    def concat(point):
        xs, ys = point
        lhs = c.h(xs.concat(ys))
        rhs = c.combine(c.h(xs), c.h(ys))
        return None if lhs == rhs else witness(xs=xs, ys=ys, lhs=lhs, rhs=rhs)

    note('concat', *find_counterexample(
        product(enum_lists(ca, max_len), enum_lists(ca, ys_max_len)), concat, workers, desc='hom-concat'
    ))

    details = {
        'candidate': c.describe(),
        'equations': equations,
        'xs_max_len': max_len,
        'ys_max_len': ys_max_len,
    }
    if first is None:
        return CheckRecord('hom-properties', 'list homomorphism', Verdict.PASS, total,
                           details=details, message='h is a homomorphism at bounds')
    label, found = first
    return CheckRecord('hom-properties', 'list homomorphism', Verdict.FAIL, total,
                       witness=found, details=details,
                       message=f"homomorphism equation '{label}' fails")


@timed_check
def check_lemma_hom_concat(c: HomCandidate, ca: CarrierSpec, max_parts: int, max_len: int,
                           workers: Optional[int] = None) -> CheckRecord:
    """
    foldr oplus z . map h = h . concat   iff   h = hom (oplus) (h . wrap) z

    Sisi A dikuantifikasi atas xss dengan <= max_parts bagian (panjang
    <= max_len). Sisi B memeriksa persamaan concat untuk |xs| <= max_len
    dan |ys| <= (max_parts - 1) * max_len, batas yang tepat dipaksa oleh A.
    """
    def side_a(xss: Tuple[ValList, ...]):
        folded = ValList(tuple(c.h(xs) for xs in xss))
        lhs = foldr_list(c.oplus, c.z, folded)
        rhs = c.h(ValList(tuple(x for xs in xss for x in xs)))
        return None if lhs == rhs else witness(xss=list(xss), lhs=lhs, rhs=rhs)

    checked_a, found_a = find_counterexample(
        enum_nested_lists(ca, max_parts, max_len), side_a, workers, desc='hom-concat A'
    )
    ys_max_len = max(0, (max_parts - 1) * max_len)
    side_b = check_hom_properties(c, ca, max_len, ys_max_len=ys_max_len, workers=workers)

    a_holds, b_holds = found_a is None, side_b.passed
    details = {
        'candidate': c.describe(),
        'A': property_verdict(found_a),
        'B': side_b.verdict.value,
        'B_equations': side_b.details['equations'],
        'max_parts': max_parts,
        'max_len': max_len,
        'ys_max_len': ys_max_len,
    }
    if found_a is not None:
        details['A_witness'] = found_a
    if side_b.witness is not None:
        details['B_witness'] = side_b.witness

    if a_holds == b_holds:
        state = 'both hold' if a_holds else 'both fail'
        return CheckRecord('lemma-hom-concat', 'Lemma hom-concat', Verdict.PASS,
                           checked_a + side_b.checked, details=details,
                           message=f"A and B agree ({state})")
    return CheckRecord('lemma-hom-concat', 'Lemma hom-concat', Verdict.FAIL,
                       checked_a + side_b.checked,
                       witness=found_a if found_a is not None else side_b.witness,
                       details=details,
                       message=f"biconditional broken: A {details['A']}, B {details['B']}")


@timed_check
def check_exchange(otimes: OpExpr, oplus: OpExpr, z: Value, ca: CarrierSpec,
                   cb_image_bound: int, y_bound: Optional[int] = None,
                   workers: Optional[int] = None) -> CheckRecord:
    """
    x otimes (y oplus w) = (x otimes y) oplus w untuk x in ca, y dan w di image

    Args:
        cb_image_bound: batas panjang list untuk image tempat w diambil
        y_bound: batas image untuk y (default cb_image_bound)
    """
    y_bound = cb_image_bound if y_bound is None else y_bound
    ys = image_set(otimes, z, ca, y_bound)
    ws = image_set(otimes, z, ca, cb_image_bound)

    def check(point):
        x, y, w = point
        lhs = eval_binop(otimes, x, eval_binop(oplus, y, w))
        rhs = eval_binop(oplus, eval_binop(otimes, x, y), w)
        return None if lhs == rhs else witness(x=x, y=y, w=w, lhs=lhs, rhs=rhs)

    checked, found = find_counterexample(product(enum_values(ca), ys, ws), check, workers, desc='exchange')
    details = image_details(otimes, z, ca, cb_image_bound)
    details['y_image_bound'] = y_bound
    return CheckRecord.from_search(
        'exchange', 'Lemma foldr-hom (exchange law)', checked, found,
        message='exchange law holds on the image' if found is None else 'exchange law fails',
        details=details,
    )


@timed_check
def check_lemma_foldr_hom(otimes: OpExpr, oplus: OpExpr, z: Value, ca: CarrierSpec,
                          max_len: int, workers: Optional[int] = None) -> CheckRecord:
    """
    foldr otimes z = hom (oplus) (otimes z) z   iff   exchange law

    Hypothesis gate: oplus asosiatif pada img(max_len) dan z identity di sana.
    P memeriksa persamaan homomorphism untuk |xs|, |ys| <= max_len; Q
    mengambil y dari img(max_len - 1) dan w dari img(max_len).
    """
    image = image_set(otimes, z, ca, max_len)
    assoc_checked, assoc = find_associativity_failure(oplus, image, workers=workers)
    ident_checked, ident = find_identity_failure(oplus, z, image, workers=workers)
    details: Dict[str, Any] = {
        'otimes': print_expr(otimes),
        'oplus': print_expr(oplus),
        'z': str(z),
        'max_len': max_len,
        'gate': {'associativity': property_verdict(assoc), 'identity': property_verdict(ident)},
    }
    details.update(image_details(otimes, z, ca, max_len))
    gate_checked = assoc_checked + ident_checked
    if assoc is not None or ident is not None:
        return CheckRecord('lemma-foldr-hom', 'Lemma foldr-hom', Verdict.HYPOTHESIS_NOT_MET,
                           gate_checked, witness=assoc if assoc is not None else ident,
                           details=details,
                           message='oplus is not a monoid on the image with identity z')

    candidate = HomCandidate(f"foldr ({print_expr(otimes)}) {z}", oplus, z,
                             lambda xs: foldr_list(otimes, z, xs), otimes)
    side_p = check_hom_properties(candidate, ca, max_len, workers=workers)
    side_q = check_exchange(otimes, oplus, z, ca, max_len, y_bound=max(max_len - 1, 0),
                            workers=workers)
    details['P'] = side_p.verdict.value
    details['Q'] = side_q.verdict.value
    if side_p.witness is not None:
        details['P_witness'] = side_p.witness
    if side_q.witness is not None:
        details['Q_witness'] = side_q.witness

    checked = gate_checked + side_p.checked + side_q.checked
    if side_p.passed == side_q.passed:
        state = 'both hold' if side_p.passed else 'both fail'
        return CheckRecord('lemma-foldr-hom', 'Lemma foldr-hom', Verdict.PASS, checked,
                           details=details, message=f"P and Q agree ({state})")
    return CheckRecord('lemma-foldr-hom', 'Lemma foldr-hom', Verdict.FAIL, checked,
                       witness=side_p.witness or side_q.witness, details=details,
                       message=f"biconditional broken: P {details['P']}, Q {details['Q']}")


@timed_check
def check_fold_concat(otimes: OpExpr, z: Value, ca: CarrierSpec, max_len: int,
                      workers: Optional[int] = None) -> CheckRecord:
    """foldr otimes z (xs ++ ys) = foldr otimes (foldr otimes z ys) xs"""
    def check(point):
        xs, ys = point
        lhs = foldr_list(otimes, z, xs.concat(ys))
        rhs = foldr_list(otimes, foldr_list(otimes, z, ys), xs)
        return None if lhs == rhs else witness(xs=xs, ys=ys, lhs=lhs, rhs=rhs)

    lists = enum_lists(ca, max_len)
    checked, found = find_counterexample(product(lists, lists), check, workers, desc='fold-concat')
    return CheckRecord.from_search(
        'fold-concat', 'fold over concatenation', checked, found,
        details={'otimes': print_expr(otimes), 'z': str(z), 'max_len': max_len},
    )
