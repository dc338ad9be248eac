"""Strict JSON helpers shared by the codecs, CLI and service.

The wire formats carry exact money (integer paise) and exact rates
(decimal strings), so parsing is strict: unknown fields are rejected,
and floats never enter the engine.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .errors import FieldError, ValidationError


def canonical_json(obj: object) -> str:
    """Canonical serialization: sorted keys, no whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def expect_mapping(
    obj: object,
    required: set[str],
    *,
    optional: set[str] | None = None,
    field: str = "body",
) -> Mapping:
    """Require a JSON object with exactly the given keys; reject unknowns."""
    if not isinstance(obj, Mapping):
        raise ValidationError.single(field, f"expected an object, got {type(obj).__name__}")
    optional = optional or set()
    errors: list[FieldError] = []
    for key in sorted(required - set(obj)):
        errors.append(FieldError(f"{field}.{key}", "missing required field"))
    for key in sorted(set(obj) - required - optional):
        errors.append(FieldError(f"{field}.{key}", "unknown field"))
    if errors:
        raise ValidationError(errors)
    return obj


def expect_int(value: object, *, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError.single(field, "must be an integer")
    return value


def expect_str(value: object, *, field: str) -> str:
    if not isinstance(value, str):
        raise ValidationError.single(field, "must be a string")
    return value


def expect_list(value: object, *, field: str) -> list:
    if not isinstance(value, list):
        raise ValidationError.single(field, "must be a list")
    return value


def merge_errors(errors: Iterable[ValidationError]) -> ValidationError:
    collected: list[FieldError] = []
    for err in errors:
        collected.extend(err.errors)
    return ValidationError(collected)
