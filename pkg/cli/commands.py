"""
CLI Commands
One function per subcommand; each turns parsed flags into a Report
"""

from argparse import Namespace
from typing import List, Optional, Tuple

from algebra.carriers import parse_carrier
from algebra.expr import parse_expr
from algebra.functions import get_predicate, get_pure_function
from algebra.opspec import OpSpec
from algebra.values import Float64, ValList
from catalogue.catalogue_manager import get_catalogue
from checkers.homlib import HomCandidate, check_lemma_foldr_hom, check_lemma_hom_concat
from checkers.permlib import (
    FoldSpec, check_lemma_fold_insert, check_lemma_fold_perm, check_lemma_insert_map,
    check_lemma_perm_filter, check_lemma_perm_id, check_lemma_perm_map
)
from checkers.report import CheckRecord, Report, Verdict
from checkers.sparkagg import (
    check_converse_cmonoid, check_converse_hom, check_corollary_det_hom, check_corollary_det_iff,
    check_determinism, check_lemma_det_reasoning, check_theorem_aggregate_det, enforce_guard,
    float_divergence_demo, full_scale_note, predict_determinism
)
from config.settings import AGGREGATE_SETTINGS, DEMO_SETTINGS, LAW_SETTINGS, LEMMA_SETTINGS
from nondet.laws import check_monad_laws
from utils.logger import get_logger
from utils.validator import InputValidator

FLOAT_ADD = 'x + y'


def _pick(value: Optional[int], default: int) -> int:
    return default if value is None else value


def load_ops(reference: Optional[str]) -> OpSpec:
    """
    Load --ops: 'catalogue:NAME' atau path file

    Raises:
        ValidationError: --ops tidak diberikan
        FileNotFoundError, OpSpecSyntaxError, OpSpecError
    """
    if not reference:
        validator = InputValidator()
        validator.add_error('ops', 'this command needs --ops FILE or --ops catalogue:NAME')
        validator.raise_if_errors()
    ops = get_catalogue().resolve(reference)
    get_logger().info(f"Loaded operator spec {ops.name}: {ops.describe()}")
    return ops


def cmd_laws(args: Namespace) -> Report:
    """Seluruh katalog monad law atas satu carrier"""
    carrier = parse_carrier(args.carrier or LAW_SETTINGS['carrier'])
    set_bound = _pick(args.set_bound, LAW_SETTINGS['set_bound'])
    report = check_monad_laws(carrier, set_bound=set_bound)
    if set_bound != LAW_SETTINGS['set_bound']:
        report.notes.append(
            f"NonDet values quantified over subsets of size <= {set_bound} "
            f"(default {LAW_SETTINGS['set_bound']})"
        )
    return report


def cmd_lemmas(args: Namespace) -> Report:
    """
    Lemma permutasi dan homomorphism untuk satu operator spec

    Fold lemmas memakai odot := oplus atas carrier_b; lemma map/filter
    memakai --function/--predicate atas carrier_a; lemma homomorphism
    memakai h = foldr otimes z atas carrier_a.
    """
    ops = load_ops(args.ops)
    max_len = _pick(args.max_len, LEMMA_SETTINGS['max_len'])
    hom_parts = _pick(args.max_parts, LEMMA_SETTINGS['hom_parts'])
    hom_len = _pick(args.image_bound, LEMMA_SETTINGS['hom_len'])
    g = get_pure_function(args.function or LEMMA_SETTINGS['function'])
    p = get_predicate(args.predicate or LEMMA_SETTINGS['predicate'])
    fold = FoldSpec.oplus_of(ops)
    ca, cb = ops.carrier_a, ops.carrier_b

    report = Report(command='lemmas', bounds={
        'ops': ops.describe(),
        'max_len': max_len,
        'function': g.name,
        'predicate': p.name,
        'hom_parts': hom_parts,
        'hom_len': hom_len,
    })
    report.add(check_lemma_fold_perm(fold, cb, cb, max_len))
    report.add(check_lemma_fold_insert(fold, cb, cb, max_len))
    report.add(check_lemma_perm_map(g, ca, max_len))
    report.add(check_lemma_insert_map(g, ca, max_len))
    report.add(check_lemma_perm_filter(p, ca, max_len))
    report.add(check_lemma_perm_id(ca, max_len))
    report.add(check_lemma_hom_concat(HomCandidate.from_fold(ops), ca, hom_parts, hom_len))
    report.add(check_lemma_foldr_hom(ops.otimes, ops.oplus, ops.z, ca, hom_len))
    report.notes.append('fold lemmas instantiate odot with oplus over carrier_b')
    return report


def _aggregate_bounds(args: Namespace) -> Tuple[int, int, int]:
    return (
        _pick(args.max_parts, AGGREGATE_SETTINGS['max_parts']),
        _pick(args.max_len, AGGREGATE_SETTINGS['max_len']),
        _pick(args.image_bound, AGGREGATE_SETTINGS['image_bound']),
    )


def check_summary(determinism: CheckRecord, prediction: CheckRecord, theorem: CheckRecord) -> str:
    """Satu baris diagnosis: hasil enumerasi di samping prediksi aljabar"""
    if determinism.passed:
        if theorem.passed:
            return 'deterministic at bounds; Theorem aggregate-det verified'
        return f"deterministic at bounds; Theorem aggregate-det {theorem.verdict.value}"
    parts = [f"NONDETERMINISTIC; minimal counterexample RDD={determinism.witness['rdd']}"]
    found = prediction.witness or {}
    if found.get('property') == 'commutativity':
        parts.append(f"commutativity fails at (x,y)=({found['x']},{found['y']})")
    elif found.get('property') == 'associativity':
        parts.append(f"associativity fails at (x,y,w)=({found['x']},{found['y']},{found['w']})")
    elif prediction.verdict == Verdict.SKIPPED:
        parts.append('algebraic prediction skipped for float carriers')
    return '; '.join(parts)


def cmd_check(args: Namespace) -> Report:
    """Determinism enumeration plus algebraic diagnosis; exit 0 iff deterministic"""
    ops = load_ops(args.ops)
    max_parts, max_len, image_bound = _aggregate_bounds(args)
    verdict = check_determinism(ops, max_parts, max_len, override_guards=args.override_guards)

    report = Report(command='check', bounds={
        'ops': ops.describe(),
        'max_parts': max_parts,
        'max_len': max_len,
        'image_bound': image_bound,
    })
    determinism = report.add(verdict.to_record())
    prediction = report.add(predict_determinism(ops, image_bound))
    theorem = report.add(check_theorem_aggregate_det(ops, max_parts, max_len))
    report.add(check_corollary_det_hom(ops, max_parts, max_len, image_bound))

    report.notes.append(check_summary(determinism, prediction, theorem))
    logger = get_logger()
    if prediction.passed and not verdict.deterministic:
        note = 'implementation bug: prediction says deterministic but enumeration disagrees'
        logger.error(note)
        report.notes.append(note)
    if not verdict.deterministic and prediction.witness is not None:
        logger.info(f"nondeterminism paired with {prediction.witness.get('property')} failure")
    report.exit_status = 0 if verdict.deterministic else 1
    return report


def cmd_converse(args: Namespace) -> Report:
    """Converse theorems; hypothesis-not-met keluar dengan exit 0"""
    ops = load_ops(args.ops)
    max_parts, max_len, image_bound = _aggregate_bounds(args)
    enforce_guard(max_parts, args.override_guards)

    report = Report(command='converse', bounds={
        'ops': ops.describe(),
        'max_parts': max_parts,
        'max_len': max_len,
        'image_bound': image_bound,
    })
    report.add(check_lemma_det_reasoning(ops, max_parts, max_len))
    report.add(check_converse_cmonoid(ops, max_parts, max_len, image_bound))
    report.add(check_converse_hom(ops, max_len, max_parts=max_parts))
    report.add(check_corollary_det_iff(ops, max_parts, max_len))
    report.notes.append(f"converse results are verified at bounds ({max_parts}, {max_len}) only")
    if all(r.verdict == Verdict.HYPOTHESIS_NOT_MET for r in report.records[:3]):
        report.notes.append('hypothesis not met: aggregate is not return . foldr . concat at bounds')
    return report


def demo_input(args: Namespace) -> Tuple[str, ValList, List[int]]:
    """
    Tentukan value dan ukuran partisi: --values/--parts, atau --preset

    Raises:
        ValidationError: daftar value/partisi tidak valid
        UnknownNameError: preset tidak dikenal
    """
    validator = InputValidator()
    if args.values is not None:
        raw = validator.parse_float_list(args.values)
        parts = validator.parse_size_list(args.parts) if args.parts else [1] * len(raw)
        if raw:
            validator.validate_partition_sizes(parts, len(raw))
        validator.raise_if_errors()
        return 'custom', ValList(tuple(Float64(v) for v in raw)), parts

    catalogue = get_catalogue()
    name = args.preset or DEMO_SETTINGS['preset']
    values = catalogue.preset_values(name)
    parts = catalogue.preset_parts(name)
    if args.parts:
        parts = validator.parse_size_list(args.parts)
        validator.validate_partition_sizes(parts, len(values))
        validator.raise_if_errors()
    return name, values, parts


def cmd_demo_float(args: Namespace) -> Report:
    """Float divergence demo; selalu exit 0"""
    name, values, parts = demo_input(args)
    record = float_divergence_demo(values, parts, parse_expr(FLOAT_ADD), Float64(0.0))
    report = Report(command='demo-float', bounds={
        'preset': name,
        'partitions': len(parts),
        'values': len(values),
    })
    report.add(record)
    report.notes.append(full_scale_note())
    report.exit_status = 0
    return report


COMMANDS = {
    'laws': cmd_laws,
    'lemmas': cmd_lemmas,
    'check': cmd_check,
    'converse': cmd_converse,
    'demo-float': cmd_demo_float,
}
