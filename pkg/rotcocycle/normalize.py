"""
Value normalization for reports.

Converts report payloads to JSON-compatible values before writing.

Normalization Rules:
    - Word → its text form (``a1 B2``, ``-`` for empty)
    - Fraction → ``"p/q"`` string (exact), integers stay integers
    - Enum → its value
    - dataclass → dict of its fields
    - mpmath numbers and other ``__float__`` types → float
    - tuple / list → list; set → sorted list
    - Non-finite floats (inf, -inf, NaN) → null
    - Negative zero → 0
    - Mapping types → dict with string keys
    - Unsupported types → null
"""

from __future__ import annotations

import dataclasses
import math
from collections.abc import Mapping
from enum import Enum
from fractions import Fraction
from typing import Any, TypeGuard

from .logging_config import get_logger
from .types import JsonPrimitive, JsonValue
from .words import Word


logger = get_logger(__name__)


def is_json_primitive(value: Any) -> TypeGuard[JsonPrimitive]:
    return value is None or isinstance(value, (str, int, float, bool))


def _normalize_float(value: float) -> JsonValue:
    if not math.isfinite(value):
        logger.debug(f"Converting non-finite float to null: {value}")
        return None
    if value == 0.0:
        return 0
    return value


def normalize_value(value: Any) -> JsonValue:
    """Normalize a report value to a JSON-compatible type.

    Examples:
        >>> from fractions import Fraction
        >>> normalize_value(Fraction(3, 2))
        '3/2'
        >>> normalize_value((1, float("nan")))
        [1, None]
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return _normalize_float(value)
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, Word):
        return str(value)
    if isinstance(value, Enum):
        return normalize_value(value.value)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: normalize_value(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, (list, tuple)):
        return [normalize_value(item) for item in value]
    if isinstance(value, (set, frozenset)):
        try:
            return [normalize_value(item) for item in sorted(value)]
        except TypeError:
            return [normalize_value(item) for item in sorted(value, key=repr)]
    if isinstance(value, Mapping):
        return {str(k): normalize_value(v) for k, v in value.items()}
    if hasattr(value, "__float__"):
        return _normalize_float(float(value))

    logger.warning(f"Unsupported type {type(value).__name__}, converting to null. Value: {str(value)[:50]}")
    return None


__all__ = ["is_json_primitive", "normalize_value"]
