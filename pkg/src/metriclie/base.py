"""Shared error types and the pass/fail result object used by verification ops."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class MetricLieError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MetricLieError, ValueError):
    """Bad argument: dimension mismatch, singular matrix, unknown model, ..."""


class ParseError(MetricLieError, ValueError):
    """Malformed algebra file."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class JacobiError(MetricLieError, ValueError):
    """Structure constants violate the Jacobi identity."""

    def __init__(self, message: str, triple: tuple | None = None):
        super().__init__(message)
        self.triple = triple


class DegenerateMetricError(InputError):
    """A nondegenerate form was required but the given one has a radical."""

    def __init__(self, message: str, radical: Any = None):
        super().__init__(message)
        self.radical = radical


class NumericalError(MetricLieError, RuntimeError):
    """Floating-point computation failed (singular metric, non-finite state)."""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an identity check.

    ``witness`` holds the first failing datum (a basis triple, a pair, an
    entry...) when ``ok`` is False; checks always report what broke, never
    just a boolean.
    """

    ok: bool
    reason: str = ""
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        if self.witness is not None:
            return f"fail: {self.reason} at {self.witness}"
        return f"fail: {self.reason}"
