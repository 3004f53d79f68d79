"""
Check Reports
Verdicts, per-check records and the canonical report document
"""

import json
import time
from dataclasses import dataclass, field
from enum import Enum
from functools import wraps
from typing import Any, Callable, Dict, List, Optional

import jsonschema

from config.settings import TOOL_NAME, VERSION
from utils.logger import get_logger


class Verdict(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    HYPOTHESIS_NOT_MET = 'hypothesis-not-met'
    SKIPPED = 'skipped'


REPORT_SCHEMA = {
    'type': 'object',
    'required': ['tool', 'version', 'command', 'bounds', 'records', 'notes', 'exit_status'],
    'properties': {
        'tool': {'type': 'string'},
        'version': {'type': 'string'},
        'command': {'type': 'string'},
        'bounds': {'type': 'object'},
        'notes': {'type': 'array', 'items': {'type': 'string'}},
        'exit_status': {'type': 'integer', 'enum': [0, 1, 2]},
        'records': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['check_id', 'anchor', 'verdict', 'checked', 'witness', 'details', 'message'],
                'properties': {
                    'check_id': {'type': 'string'},
                    'anchor': {'type': 'string'},
                    'verdict': {'type': 'string', 'enum': [v.value for v in Verdict]},
                    'checked': {'type': 'integer', 'minimum': 0},
                    'witness': {'type': ['object', 'null']},
                    'details': {'type': 'object'},
                    'message': {'type': 'string'},
                    'duration': {'type': 'number'},
                },
            },
        },
    },
}


@dataclass
class CheckRecord:
    """
    Hasil satu check

    Attributes:
        check_id: id stabil, misalnya 'lemma-fold-perm'
        anchor: hasil teori yang diuji, misalnya 'Lemma fold-perm'
        verdict: pass / fail / hypothesis-not-met / skipped
        checked: jumlah titik kuantifikasi yang dievaluasi
        witness: counterexample pertama (urutan enumerasi), value sebagai string
        details: sub-verdict, bounds, catatan
        duration: detik (tidak ikut dibandingkan, tidak masuk JSON kanonik)
    """
    check_id: str
    anchor: str
    verdict: Verdict
    checked: int = 0
    witness: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)
    message: str = ''
    duration: Optional[float] = field(default=None, compare=False)

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    @property
    def failed(self) -> bool:
        return self.verdict == Verdict.FAIL

    @classmethod
    def from_search(cls, check_id: str, anchor: str, checked: int,
                    witness: Optional[Dict[str, Any]], message: str = '',
                    details: Optional[Dict[str, Any]] = None) -> 'CheckRecord':
        """Record dari pencarian counterexample: pass iff tidak ada witness"""
        return cls(
            check_id=check_id,
            anchor=anchor,
            verdict=Verdict.PASS if witness is None else Verdict.FAIL,
            checked=checked,
            witness=witness,
            details=details or {},
            message=message,
        )

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data = {
            'check_id': self.check_id,
            'anchor': self.anchor,
            'verdict': self.verdict.value,
            'checked': self.checked,
            'witness': self.witness,
            'details': self.details,
            'message': self.message,
        }
        if include_timing and self.duration is not None:
            data['duration'] = round(self.duration, 6)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CheckRecord':
        return cls(
            check_id=data['check_id'],
            anchor=data['anchor'],
            verdict=Verdict(data['verdict']),
            checked=data['checked'],
            witness=data['witness'],
            details=data['details'],
            message=data['message'],
            duration=data.get('duration'),
        )


@dataclass
class Report:
    """Dokumen hasil satu command"""
    command: str
    bounds: Dict[str, Any] = field(default_factory=dict)
    records: List[CheckRecord] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    tool: str = TOOL_NAME
    version: str = VERSION
    exit_status: Optional[int] = field(default=None, compare=False)

    def add(self, record: CheckRecord) -> CheckRecord:
        self.records.append(record)
        return record

    def record(self, check_id: str) -> CheckRecord:
        for record in self.records:
            if record.check_id == check_id:
                return record
        raise KeyError(check_id)

    @property
    def has_failures(self) -> bool:
        return any(r.failed for r in self.records)

    def status(self) -> int:
        """Exit status: eksplisit bila sudah di-set, kalau tidak 1 iff ada fail"""
        if self.exit_status is not None:
            return self.exit_status
        return 1 if self.has_failures else 0

    def verdict_counts(self) -> Dict[str, int]:
        counts = {v.value: 0 for v in Verdict}
        for record in self.records:
            counts[record.verdict.value] += 1
        return counts

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        return {
            'tool': self.tool,
            'version': self.version,
            'command': self.command,
            'bounds': self.bounds,
            'records': [r.to_dict(include_timing) for r in self.records],
            'notes': list(self.notes),
            'exit_status': self.status(),
        }

    def to_json(self, include_timing: bool = False) -> str:
        """JSON kanonik: key terurut, indent tetap, value sebagai string"""
        return json.dumps(
            self.to_dict(include_timing), sort_keys=True, indent=2, ensure_ascii=False
        ) + '\n'

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Report':
        """
        Bangun Report dari dict hasil to_dict()

        Raises:
            jsonschema.ValidationError: payload tidak sesuai REPORT_SCHEMA
        """
        jsonschema.validate(instance=data, schema=REPORT_SCHEMA)
        return cls(
            command=data['command'],
            bounds=data['bounds'],
            records=[CheckRecord.from_dict(r) for r in data['records']],
            notes=list(data['notes']),
            tool=data['tool'],
            version=data['version'],
            exit_status=data['exit_status'],
        )

    @classmethod
    def from_json(cls, text: str) -> 'Report':
        return cls.from_dict(json.loads(text))


def timed_check(check: Callable[..., CheckRecord]) -> Callable[..., CheckRecord]:
    """
    Decorator: ukur durasi check dan log hasilnya

    Dipakai pada semua checker yang mengembalikan CheckRecord.
    """
    @wraps(check)
    def wrapper(*args, **kwargs) -> CheckRecord:
        logger = get_logger()
        logger.log_check_start(check.__name__)
        started = time.perf_counter()
        record = check(*args, **kwargs)
        record.duration = time.perf_counter() - started
        logger.log_check_result(record.check_id, record.verdict.value, record.checked, record.duration)
        if record.witness is not None:
            logger.log_counterexample(record.check_id, record.witness)
        return record

    return wrapper


def show(value: Any) -> str:
    """Render value untuk witness/detail (canonical string)"""
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(show(v) for v in value) + ']'
    return str(value)


def witness(**entries: Any) -> Dict[str, str]:
    """Witness dict dengan semua value di-render sebagai string"""
    return {key: show(value) for key, value in entries.items()}
