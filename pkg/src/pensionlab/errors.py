"""Error taxonomy shared by the engine, CLI and HTTP service.

Two families matter to callers:

* :class:`ValidationError` — the input itself is malformed (bad field,
  unknown key, out-of-range value).  Maps to HTTP 400 / CLI exit 2.
* :class:`DomainError` — the input parsed fine but the engine cannot
  honour it (infeasible allocation, missing expected return).  Maps to
  HTTP 422 / CLI exit 1.
"""

from __future__ import annotations

from dataclasses import dataclass


class PensionLabError(Exception):
    """Base class for every error raised by this package."""


@dataclass(frozen=True)
class FieldError:
    field: str
    message: str

    def as_dict(self) -> dict:
        return {"field": self.field, "message": self.message}


class ValidationError(PensionLabError):
    """One or more input fields failed validation."""

    def __init__(self, errors: list[FieldError] | FieldError):
        if isinstance(errors, FieldError):
            errors = [errors]
        self.errors = list(errors)
        super().__init__("; ".join(f"{e.field}: {e.message}" for e in self.errors))

    @classmethod
    def single(cls, field: str, message: str) -> "ValidationError":
        return cls(FieldError(field, message))


class DomainError(PensionLabError):
    """The engine cannot compute a result for these (well-formed) inputs."""


class InfeasibleAllocationError(DomainError):
    """The greedy fill order cannot absorb 100% under the given caps."""


class MissingExpectedReturnError(DomainError):
    """A weighted asset class has no defined expected return."""


class ShareOutOfRangeError(DomainError):
    """An annuity/lumpsum share fell outside [0%, 100%]."""
