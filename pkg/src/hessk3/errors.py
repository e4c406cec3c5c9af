"""Shared exception types.

ValueError is reserved for caller mistakes: malformed input or violated
preconditions.  InvariantViolation means the library itself derived
something inconsistent, i.e. a postcondition or a proof-backed shape
assertion failed, so the surrounding computation cannot be trusted.
"""

from __future__ import annotations


class InvariantViolation(AssertionError):
    """An internal consistency check failed."""


def require(condition: bool, message: str) -> None:
    """Check an internal invariant; active regardless of python -O."""
    if not condition:
        raise InvariantViolation(message)
