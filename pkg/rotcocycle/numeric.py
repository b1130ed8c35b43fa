"""
Arithmetic backends.

Two interchangeable backends provide the handful of real functions the
circle action needs: :class:`DoubleBackend` on top of :mod:`math` and
:class:`ExtendedBackend` on a private 256-bit :class:`mpmath.MPContext`, so the
global ``mpmath.mp`` precision is never touched.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Any

import mpmath

from .constants import (
    EXTENDED_PRECISION_BITS,
    EXTENDED_WRAP_WINDOW,
    PRECISION_DOUBLE,
    PRECISION_EXTENDED,
    WRAP_SNAP_WINDOW,
)


Real = Any


class DoubleBackend:
    """IEEE double arithmetic."""

    name = PRECISION_DOUBLE
    wrap_window = WRAP_SNAP_WINDOW
    pi = math.pi

    def number(self, value: Real) -> float:
        return float(value)

    def sin(self, x: Real) -> float:
        return math.sin(x)

    def cos(self, x: Real) -> float:
        return math.cos(x)

    def atan2(self, y: Real, x: Real) -> float:
        return math.atan2(y, x)

    def sqrt(self, x: Real) -> float:
        return math.sqrt(x)

    def floor(self, x: Real) -> int:
        return math.floor(x)

    def is_finite(self, x: Real) -> bool:
        return math.isfinite(x)


class ExtendedBackend:
    """256-bit binary floating point through a private mpmath context."""

    name = PRECISION_EXTENDED
    wrap_window = EXTENDED_WRAP_WINDOW

    def __init__(self, bits: int = EXTENDED_PRECISION_BITS):
        self.ctx = mpmath.MPContext()
        self.ctx.prec = bits
        self.pi = +self.ctx.pi

    def number(self, value: Real) -> Any:
        return self.ctx.mpf(value)

    def sin(self, x: Real) -> Any:
        return self.ctx.sin(x)

    def cos(self, x: Real) -> Any:
        return self.ctx.cos(x)

    def atan2(self, y: Real, x: Real) -> Any:
        return self.ctx.atan2(y, x)

    def sqrt(self, x: Real) -> Any:
        return self.ctx.sqrt(x)

    def floor(self, x: Real) -> int:
        return int(self.ctx.floor(x))

    def is_finite(self, x: Real) -> bool:
        return bool(self.ctx.isfinite(x))

    def cosh(self, x: Real) -> Any:
        return self.ctx.cosh(x)

    def acosh(self, x: Real) -> Any:
        return self.ctx.acosh(x)

    def exp(self, x: Real) -> Any:
        return self.ctx.exp(x)

    def cot(self, x: Real) -> Any:
        return self.ctx.cot(x)


Backend = DoubleBackend | ExtendedBackend


@lru_cache(maxsize=1)
def double_backend() -> DoubleBackend:
    return DoubleBackend()


@lru_cache(maxsize=4)
def extended_backend(bits: int = EXTENDED_PRECISION_BITS) -> ExtendedBackend:
    return ExtendedBackend(bits)


def mod1(backend: Backend, x: Real) -> Real:
    """Reduce to [0, 1); rounding that lands on 1 snaps to 0."""
    value = x - backend.floor(x)
    if value >= 1:
        return backend.number(0)
    return value


def near_wrap(backend: Backend, coordinate: Real) -> bool:
    """Whether a [0, 1) coordinate is within the backend wrap window of 0 or 1."""
    return coordinate < backend.wrap_window or 1 - coordinate < backend.wrap_window


__all__ = ["Backend", "DoubleBackend", "ExtendedBackend", "double_backend", "extended_backend", "mod1", "near_wrap"]
