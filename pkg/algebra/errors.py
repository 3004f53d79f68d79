"""
Error Hierarchy
Exceptions raised by carriers, the operator DSL and the checkers
"""

from typing import Any, Dict


class AggregationError(Exception):
    """
    Base error untuk semua kegagalan domain

    Context (offending inputs, witness list, nama Kleisli) ditempel
    sambil error naik ke atas lewat with_context().
    """

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context: Dict[str, Any] = dict(context)

    def with_context(self, **context: Any) -> 'AggregationError':
        """Tambahkan context tanpa menimpa key yang sudah ada"""
        for key, value in context.items():
            self.context.setdefault(key, value)
        return self

    def context_strings(self) -> Dict[str, str]:
        """Context sebagai string (untuk report dan log)"""
        return {key: str(value) for key, value in self.context.items()}

    def __str__(self) -> str:
        if not self.context:
            return self.message
        details = ', '.join(f"{k}={v}" for k, v in self.context.items())
        return f"{self.message} ({details})"


class InvalidValueError(AggregationError):
    """Value tidak valid (NaN, residue di luar range, dll)"""
    pass


class KindMismatchError(AggregationError):
    """Dua value dengan kind berbeda dibandingkan atau dikombinasikan"""
    pass


class CarrierMismatchError(KindMismatchError):
    """Codomain satu Kleisli tidak cocok dengan domain yang lain"""
    pass


class CarrierError(AggregationError):
    """Carrier spec tidak valid atau tidak bisa dienumerasi"""
    pass


class EvaluationError(AggregationError):
    """Evaluasi operator gagal"""
    pass


class DivisionByZeroError(EvaluationError):
    pass


class Int64OverflowError(EvaluationError):
    pass


class NonFiniteResultError(EvaluationError):
    pass


class OpSpecSyntaxError(AggregationError):
    """Syntax error di operator spec, dengan posisi line/column (1-based)"""

    def __init__(self, message: str, line: int = 1, column: int = 1, **context: Any):
        super().__init__(message, **context)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {super().__str__()}"


class UnknownIdentifierError(OpSpecSyntaxError):
    """Variable atau function yang tidak dikenal di expression"""
    pass


class OpSpecError(AggregationError):
    """Operator spec well-formed tapi tidak valid (missing key, closure gagal)"""
    pass


class UnknownNameError(AggregationError):
    """Nama function/predicate/preset/catalogue entry tidak terdaftar"""
    pass


class GuardViolationError(AggregationError):
    """Bound melewati guard (misalnya max_parts > 6 tanpa override)"""
    pass
