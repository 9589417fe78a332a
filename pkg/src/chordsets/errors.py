"""Domain errors shared across the package.

Everything user-facing derives from DomainError so the CLI can map any
domain-level failure to a single exit code with a structured diagnosis.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for semantic failures (as opposed to usage errors)."""

    code = "domain_error"

    def payload(self) -> dict:
        return {"type": self.code, "message": str(self)}


class AdditivityViolation(DomainError):
    """A pair x, y inside the set sums to a value the set must contain but doesn't."""

    code = "additivity_violation"

    def __init__(self, x, y, total):
        self.x = x
        self.y = y
        self.total = total
        super().__init__(f"{x} + {y} = {total} escapes the set")

    def payload(self) -> dict:
        return {
            "type": self.code,
            "message": str(self),
            "witness": {"x": str(self.x), "y": str(self.y), "sum": str(self.total)},
        }


class OutOfRange(DomainError):
    """Operand outside the required domain (e.g. v not inside (0,1))."""

    code = "out_of_range"


class PointInP(DomainError):
    """The requested puncture point is 0 or a reciprocal 1/n, which can never be isolated."""

    code = "point_in_p"


class NotMaximal(DomainError):
    """Operation requires a set of measure exactly 1/2."""

    code = "not_maximal"


class IdentityFailure(DomainError):
    """Internal consistency failure: the two sides of an exact identity differ."""

    code = "identity_failure"


class UnsupportedTarget(DomainError):
    """No synthesis template covers the requested target set."""

    code = "unsupported_target"


class VerificationFailed(DomainError):
    """A synthesized candidate disagreed with its target at scan resolution."""

    code = "verification_failed"

    def __init__(self, message, residual=()):
        self.residual = tuple(residual)
        super().__init__(message)

    def payload(self) -> dict:
        return {
            "type": self.code,
            "message": str(self),
            "residual": list(self.residual),
        }


class InvariantViolation(DomainError):
    """A numeric result broke a guaranteed invariant; usually the resolution is too coarse."""

    code = "invariant_violation"
