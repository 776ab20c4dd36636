"""Exception hierarchy.

Everything raised on purpose derives from :class:`GammaQError`, so the CLI can
map it to exit code 2 in one place.
"""

from __future__ import annotations


class GammaQError(Exception):
    pass


class MissingEntry(GammaQError):
    pass


class AssociativityViolation(GammaQError):
    def __init__(self, message: str, witness: dict[str, str]):
        super().__init__(message)
        self.witness = witness


class EmptySubset(GammaQError):
    pass


class BoundExceeded(GammaQError):
    pass


class ParseError(GammaQError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class OutOfRange(GammaQError):
    pass


class UnknownSymbol(GammaQError):
    pass


class EmptyFuzzySubset(GammaQError):
    pass


class GradeOrderViolation(GammaQError):
    pass


class DomainMismatch(GammaQError):
    pass


class PreconditionViolated(GammaQError):
    pass


class RequiresBothSided(GammaQError):
    pass


class WellDefinednessViolation(GammaQError):
    pass


class KindMismatch(GammaQError):
    pass


class MissingUnity(GammaQError):
    pass


class UnknownTheorem(GammaQError):
    pass
