"""
Logging System
Loguru-based logging untuk nondet-agg
"""

import sys
import traceback
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from loguru import logger as _loguru

from config.settings import LOG_DIR, LOG_FILE_FORMAT, LOG_FORMAT, LOG_LEVEL, LOG_ROTATION


class AggregationLogger:
    """Logger untuk checker dan CLI; semua output ke stderr atau file"""

    def __init__(self, name: str = 'nondet_agg', log_dir: Optional[str] = LOG_DIR,
                 level: str = LOG_LEVEL):
        """
        Initialize logger

        Args:
            name: Nama komponen (muncul di setiap baris log)
            log_dir: Directory untuk file log; None berarti stderr saja
            level: Level minimum untuk sink stderr
        """
        self.name = name
        self.log_dir = log_dir
        self.level = level
        self.logger = _loguru.bind(component=name)
        self._handler_ids: List[int] = []
        self._setup_handlers()

        # Session info
        self.session_id = datetime.now().strftime('%Y%m%d_%H%M%S')
        self.session_events: List[Dict[str, Any]] = []

    def _setup_handlers(self):
        """Setup sinks: stderr, plus file sink kalau log_dir di-set"""
        _loguru.remove()
        self._handler_ids = []

        # sys.stderr dicari saat menulis (pytest capsys menggantinya per test)
        self._handler_ids.append(_loguru.add(
            lambda message: sys.stderr.write(message),
            level=self.level, format=LOG_FORMAT, colorize=False
        ))
        if self.log_dir:
            Path(self.log_dir).mkdir(parents=True, exist_ok=True)
            self._handler_ids.append(_loguru.add(
                str(Path(self.log_dir) / 'nondet_agg.log'),
                level='DEBUG', format=LOG_FILE_FORMAT,
                rotation=LOG_ROTATION, encoding='utf-8'
            ))
            self._handler_ids.append(_loguru.add(
                str(Path(self.log_dir) / 'errors.log'),
                level='ERROR', format=LOG_FILE_FORMAT,
                rotation=LOG_ROTATION, encoding='utf-8'
            ))

    def set_level(self, level: str):
        """Ganti level sink stderr (misalnya INFO untuk --verbose)"""
        self.level = level.upper()
        self._setup_handlers()

    # Basic logging methods

    def debug(self, message: str, **kwargs):
        self.logger.debug(message, **kwargs)

    def info(self, message: str, **kwargs):
        self.logger.info(message, **kwargs)

    def warning(self, message: str, **kwargs):
        self.logger.warning(message, **kwargs)

    def error(self, message: str, **kwargs):
        self.logger.error(message, **kwargs)

    # Domain-specific logging

    def _record_event(self, event_type: str, **data: Any):
        self.session_events.append({
            'timestamp': datetime.now().isoformat(),
            'type': event_type,
            **data,
        })

    def log_command(self, command: str, argv: List[str]):
        """Log subcommand yang dijalankan"""
        self.info(f"Command: {command} {' '.join(argv)}")
        self._record_event('command', command=command, argv=list(argv))

    def log_check_start(self, check_name: str):
        self.debug(f"Start: {check_name}")

    def log_check_result(self, check_id: str, verdict: str, checked: int,
                         duration: Optional[float] = None):
        """Log verdict satu check"""
        timing = f" in {duration:.3f}s" if duration is not None else ''
        self.info(f"{check_id}: {verdict} ({checked} points{timing})")
        self._record_event('check', check_id=check_id, verdict=verdict,
                           checked=checked, duration=duration)

    def log_counterexample(self, check_id: str, witness: Dict[str, Any]):
        details = ', '.join(f"{k}={v}" for k, v in witness.items())
        self.info(f"{check_id}: counterexample {details}")

    def log_gate(self, check_id: str, gate: str, passed: bool):
        """Log hasil hypothesis gate"""
        state = 'met' if passed else 'NOT met'
        self.info(f"{check_id}: hypothesis {gate} {state}")
        self._record_event('gate', check_id=check_id, gate=gate, passed=passed)

    def log_guard_violation(self, name: str, value: int, limit: int):
        self.warning(f"Guard violation: {name}={value} exceeds {limit}")
        self._record_event('guard', name=name, value=value, limit=limit)

    def log_performance(self, operation: str, duration: float):
        """Log performance metrics"""
        self.debug(f"Performance - {operation}: {duration:.3f}s")
        self._record_event('performance', operation=operation, duration=duration)

    def log_error_with_traceback(self, error: Exception, context: str = ''):
        """Log error dengan traceback lengkap"""
        self.error(f"Error in {context}: {error}")
        self.debug(traceback.format_exc())
        self._record_event('error', context=context, error=str(error),
                           error_type=type(error).__name__)

    # Session summaries

    def get_check_statistics(self) -> Dict[str, int]:
        """Hitung verdict dari semua check di session ini"""
        stats: Dict[str, int] = {}
        for event in self.session_events:
            if event['type'] == 'check':
                stats[event['verdict']] = stats.get(event['verdict'], 0) + 1
        return stats

    def get_session_summary(self) -> Dict[str, Any]:
        """Get summary of current session"""
        checks = [e for e in self.session_events if e['type'] == 'check']
        durations = [e['duration'] for e in checks if e.get('duration') is not None]
        return {
            'session_id': self.session_id,
            'total_events': len(self.session_events),
            'checks': len(checks),
            'verdicts': self.get_check_statistics(),
            'errors': sum(1 for e in self.session_events if e['type'] == 'error'),
            'total_check_time': round(sum(durations), 3),
        }


# Global logger instance
_logger_instance: Optional[AggregationLogger] = None


def get_logger() -> AggregationLogger:
    """Get global logger instance (singleton)"""
    global _logger_instance
    if _logger_instance is None:
        _logger_instance = AggregationLogger()
    return _logger_instance
