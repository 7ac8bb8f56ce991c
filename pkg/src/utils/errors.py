#!/usr/bin/env python
"""Exception hierarchy shared by every evaluation layer."""

from typing import Optional, Tuple


class VerificationError(Exception):
    """
    Base class for all verification failures

    Carries optional context so the harness can report where an
    evaluation went wrong without re-running it.
    """

    def __init__(self,
                 message: str,
                 side: Optional[str] = None,
                 index: Optional[Tuple[int, ...]] = None,
                 record_id: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.side = side
        self.index = index
        self.record_id = record_id

    def with_context(self, side: Optional[str] = None,
                     record_id: Optional[str] = None) -> "VerificationError":
        """Attach side/record context if not already present and return self"""
        if side and not self.side:
            self.side = side
        if record_id and not self.record_id:
            self.record_id = record_id
        return self

    def __str__(self) -> str:
        parts = [self.message]
        if self.record_id:
            parts.append(f"record={self.record_id}")
        if self.side:
            parts.append(f"side={self.side}")
        if self.index is not None:
            parts.append(f"index={tuple(self.index)}")
        return " | ".join(parts)


class PoleError(VerificationError):
    """A divisor or negative-index factor vanished at working precision"""


class ConvergenceError(VerificationError):
    """An infinite sum, product or quadrature did not reach its target"""


class BudgetError(VerificationError):
    """A finite enumeration or expansion exceeds the configured size cap"""


class DomainError(VerificationError):
    """Arguments outside the admissible domain of an operation"""


class SamplingError(VerificationError):
    """No admissible parameter point was found within the attempt budget"""


class DegeneracyError(VerificationError):
    """Non-generic (q, t): Macdonald operator eigenvalues collide"""


class ManifestError(VerificationError):
    """Unknown suite pattern, malformed manifest or invalid CLI usage"""
