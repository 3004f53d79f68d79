"""
Operator Spec Loader
Parses the line-oriented operator-spec format into a validated OpSpec

Format (UTF-8, '#' starts a comment):
    carrier_a: mod 3
    carrier_b: mod 3
    oplus: x + y
    otimes: x + y
    z: 0
"""

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Tuple, Union

from .carriers import CarrierSpec, enum_values, parse_carrier
from .errors import AggregationError, CarrierError, KindMismatchError, OpSpecError, OpSpecSyntaxError
from .evaluator import eval_binop
from .expr import OpExpr, parse_expr, print_expr
from .values import Value

OPSPEC_KEYS = ('carrier_a', 'carrier_b', 'oplus', 'otimes', 'z')

_LINE_PATTERN = re.compile(r'^(\s*)([A-Za-z_][A-Za-z_0-9]*)\s*:(\s*)(.*?)\s*$')


@dataclass(frozen=True)
class OpSpec:
    """
    Spesifikasi (z, otimes, oplus) untuk aggregate

    otimes bertipe a -> b -> b (x dari carrier_a, y dari carrier_b),
    oplus bertipe b -> b -> b, dan z anggota carrier_b.
    """
    oplus: OpExpr
    otimes: OpExpr
    z: Value
    carrier_a: CarrierSpec
    carrier_b: CarrierSpec
    name: str = field(default='ops', compare=False)

    def apply_oplus(self, y: Value, w: Value) -> Value:
        return eval_binop(self.oplus, y, w)

    def apply_otimes(self, x: Value, y: Value) -> Value:
        return eval_binop(self.otimes, x, y)

    def uses_float(self) -> bool:
        return 'float' in (self.carrier_a.kind, self.carrier_b.kind)

    def describe(self) -> Dict[str, str]:
        return {
            'name': self.name,
            'carrier_a': self.carrier_a.describe(),
            'carrier_b': self.carrier_b.describe(),
            'oplus': print_expr(self.oplus),
            'otimes': print_expr(self.otimes),
            'z': str(self.z),
        }

    def to_text(self) -> str:
        """Kembalikan spec ke format file (parse_opspec(to_text()) == self)"""
        info = self.describe()
        return ''.join(f"{key}: {info[key]}\n" for key in OPSPEC_KEYS)


def parse_opspec(text: str, name: str = 'ops') -> OpSpec:
    """
    Parse dan validasi operator spec

    Args:
        text: Isi dokumen operator spec
        name: Nama untuk report

    Returns:
        OpSpec yang sudah divalidasi (termasuk closure check)

    Raises:
        OpSpecSyntaxError: syntax error, dengan line/column
        OpSpecError: key hilang, z tidak cocok dengan carrier_b, closure gagal
    """
    entries: Dict[str, Tuple[int, str]] = {}
    expressions: Dict[str, OpExpr] = {}
    carriers: Dict[str, CarrierSpec] = {}

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split('#', 1)[0]
        if not line.strip():
            continue
        match = _LINE_PATTERN.match(line)
        if match is None:
            raise OpSpecSyntaxError(
                "expected 'key: value'", line=line_number,
                column=len(line) - len(line.lstrip()) + 1
            )
        key = match.group(2)
        value = match.group(4)
        key_column = len(match.group(1)) + 1
        value_column = match.start(4) + 1
        if key not in OPSPEC_KEYS:
            raise OpSpecSyntaxError(f"unknown key {key}", line=line_number, column=key_column)
        if key in entries:
            raise OpSpecSyntaxError(f"duplicate key {key}", line=line_number, column=key_column)
        if not value:
            raise OpSpecSyntaxError(f"missing value for {key}", line=line_number, column=value_column)
        entries[key] = (line_number, value)

        if key in ('oplus', 'otimes'):
            expressions[key] = parse_expr(value, line=line_number, column_offset=value_column - 1)
        elif key in ('carrier_a', 'carrier_b'):
            try:
                carriers[key] = parse_carrier(value)
            except CarrierError as err:
                raise OpSpecSyntaxError(err.message, line=line_number, column=value_column)

    for key in ('oplus', 'otimes', 'z'):
        if key not in entries:
            raise OpSpecError(f"missing required key {key}")
    if not carriers:
        raise OpSpecError("missing carrier: declare carrier_a and/or carrier_b")
    carrier_a = carriers.get('carrier_a', carriers.get('carrier_b'))
    carrier_b = carriers.get('carrier_b', carrier_a)

    z_line, z_text = entries['z']
    try:
        z = carrier_b.literal(z_text)
    except (KindMismatchError, AggregationError) as err:
        raise OpSpecError(
            f"z does not match carrier_b ({carrier_b}): {err.message}", line=z_line
        )

    spec = OpSpec(
        oplus=expressions['oplus'],
        otimes=expressions['otimes'],
        z=z,
        carrier_a=carrier_a,
        carrier_b=carrier_b,
        name=name,
    )
    check_closure(spec)
    return spec


def check_closure(spec: OpSpec) -> None:
    """
    Pastikan oplus dan otimes menghasilkan value ber-kind carrier_b
    untuk semua input yang dienumerasi

    Raises:
        OpSpecError: evaluasi gagal atau kind hasil salah
    """
    tag = spec.carrier_b.kind_tag()
    values_a = enum_values(spec.carrier_a)
    values_b = enum_values(spec.carrier_b)
    if spec.z.kind_tag() != tag:
        raise OpSpecError(f"z has kind {spec.z.kind_tag()}, carrier_b has kind {tag}")

    checks = (
        ('oplus', spec.apply_oplus, values_b),
        ('otimes', spec.apply_otimes, values_a),
    )
    for label, apply, left_values in checks:
        for left in left_values:
            for right in values_b:
                try:
                    result = apply(left, right)
                except AggregationError as err:
                    raise OpSpecError(
                        f"{label} fails on ({left}, {right}): {err.message}",
                        **err.context
                    )
                if result.kind_tag() != tag:
                    raise OpSpecError(
                        f"{label} on ({left}, {right}) gives {result.kind_tag()}, "
                        f"expected {tag}"
                    )


def load_opspec(path: Union[str, Path]) -> OpSpec:
    """
    Baca operator spec dari file

    Raises:
        FileNotFoundError: file tidak ada
    """
    path = Path(path)
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    return parse_opspec(text, name=path.stem)
