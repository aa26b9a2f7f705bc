"""Exception hierarchy shared by all modules.

Every error carries an ``exit_code`` so the CLI can map failures to the
documented process status without a lookup table.
"""

from __future__ import annotations


class LogPotError(Exception):
    exit_code = 3


class InputError(LogPotError, ValueError):
    """Bad user input: schema or constraint violations."""

    exit_code = 2


class SchemaError(InputError):
    def __init__(self, message: str, *, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class ConstraintError(InputError):
    pass


class DomainError(InputError):
    pass


class EmptyConfiguration(InputError):
    pass


class SingularLocation(InputError):
    pass


class NumericError(LogPotError):
    """Numerical failure; maps to exit status 3."""


class PoleProximity(NumericError):
    def __init__(self, point: complex, pole: complex, distance: float):
        self.point = point
        self.pole = pole
        self.distance = distance
        super().__init__(f"point {point!r} lies within {distance:.3g} of pole {pole!r}")


class ContourThroughPole(NumericError):
    pass


class BoundaryCharge(NumericError):
    pass


class SubdivisionExhausted(NumericError):
    def __init__(self, message: str, result=None):
        self.result = result
        super().__init__(message)


class NoConvergence(NumericError):
    def __init__(self, message: str, last_iterate: complex | None = None):
        self.last_iterate = last_iterate
        super().__init__(message)
