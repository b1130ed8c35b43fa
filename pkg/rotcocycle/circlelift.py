"""
Lifts of circle maps to the real line and translation numbers.

The boundary circle is the projective line with coordinate ``x ∈ [0, 1)`` for
the line of direction angle ``πx``. A :class:`LiftedMap` is the canonical lift
of a matrix shifted by an integer offset. Composition tracks the integer
section cocycle, so every lifted word carries its exact offset.

Translation numbers of surface-group elements are integers. Every value that
is claimed to be an integer is certified (distance to the nearest integer
below 0.25); under the ``extended-on-demand`` policy a failed certification in
double precision reruns the whole computation at 256 bits.

Words longer than the evaluation budget are first shortened by Dehn's
algorithm; every relator removed contributes the central translation
``trans(G̃(c)) = 2 - 2g`` exactly.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Any, TypeVar

from .constants import (
    CERTIFY_THRESHOLD,
    DEFAULT_EVAL_BUDGET,
    DEFAULT_ITERATIONS,
    EXTENDED_PRECISION_BITS,
    LIFT_TIE_WINDOW,
    PRECISION_DOUBLE,
    PRECISION_EXTENDED,
    PRECISION_ON_DEMAND,
)
from .dehn import dehn_reduce, dehn_reduce_cyclic
from .errors import CertificationError, CocycleBoundError, ConfigError, WordLengthError
from .fuchs import (
    FuchsianRep,
    Mat2,
    MatrixClass,
    backend_for,
    classify,
    direction_coordinate,
    fixed_coordinate,
    repelling_coordinate,
)
from .logging_config import get_logger
from .numeric import Backend, extended_backend, mod1, near_wrap
from .types import Precision
from .words import Word, multiply, relator, same_genus


logger = get_logger(__name__)

T = TypeVar("T")

_PRECISIONS = (PRECISION_DOUBLE, PRECISION_EXTENDED, PRECISION_ON_DEMAND)


def act(m: Mat2, x: Any, backend: Backend | None = None) -> Any:
    """Projective action on the circle coordinate.

    Examples:
        >>> act(Mat2(2.0, 0.0, 0.0, 0.5), 0.0)
        0.0
    """
    backend = backend or backend_for(m)
    theta = backend.pi * x
    u, v = backend.cos(theta), backend.sin(theta)
    return direction_coordinate(backend, m.a * u + m.b * v, m.c * u + m.d * v)


def _anchor(m: Mat2) -> Any:
    """``act(m, 0)`` with the wrap boundary resolved at extended precision."""
    backend = backend_for(m)
    value = act(m, backend.number(0), backend)
    if backend.name != PRECISION_DOUBLE or not near_wrap(backend, value):
        return value
    ext = extended_backend()
    precise = act(Mat2(*(ext.number(x) for x in m.entries())), ext.number(0), ext)
    if precise > 0.5:
        return min(float(precise), math.nextafter(1.0, 0.0))
    return float(precise)


@dataclass(frozen=True, slots=True)
class LiftedMap:
    """``x ↦ canonical_lift(matrix)(x) + offset``, commuting with ``x ↦ x + 1``.

    Attributes:
        matrix: Sign-normalized matrix.
        offset: Integer shift.
        anchor: ``canonical_lift(matrix)(0) ∈ [0, 1)``; computed when omitted.
    """

    matrix: Mat2
    offset: int = 0
    anchor: Any = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.anchor is None:
            object.__setattr__(self, "anchor", _anchor(self.matrix))

    def __call__(self, x: Any) -> Any:
        return _lift_value(self.matrix, self.anchor, x) + self.offset

    def shifted(self, k: int) -> LiftedMap:
        return LiftedMap(self.matrix, self.offset + k, self.anchor)


def _tie_wraps(m: Mat2, t: Any, backend: Backend) -> bool:
    """Decide whether a displacement within the tie window is really close to 1."""
    kind = classify(m)
    if kind in (MatrixClass.HYPERBOLIC, MatrixClass.PARABOLIC):
        r = repelling_coordinate(m, backend)
        ambiguous = abs(r - t) < LIFT_TIE_WINDOW or r < LIFT_TIE_WINDOW
        if ambiguous and backend.name == PRECISION_DOUBLE:
            raise CertificationError(f"lift branch undecidable at t={float(t):.3e}, repelling point {float(r):.3e}")
        wraps = 0 < r < t
    else:
        wraps = t > 0.5
    logger.debug(f"lift tie at t={float(t):.6g} ({kind.value}): wraps={wraps}")
    return bool(wraps)


def _lift_value(m: Mat2, anchor: Any, x: Any) -> Any:
    backend = backend_for(m)
    n = backend.floor(x)
    t = x - n
    if t == 0:
        return n + anchor
    delta = mod1(backend, act(m, t, backend) - anchor)
    if delta < LIFT_TIE_WINDOW or 1 - delta < LIFT_TIE_WINDOW:
        wraps = _tie_wraps(m, t, backend)
        if wraps and delta < LIFT_TIE_WINDOW:
            delta = delta + 1
        elif not wraps and 1 - delta < LIFT_TIE_WINDOW:
            delta = delta - 1
    return n + anchor + delta


def _nearest_integer(value: Any) -> int:
    if isinstance(value, (int, float)):
        return math.floor(value + 0.5)
    return extended_backend().floor(value + 0.5)


def _certify(value: Any, what: str) -> tuple[int, float]:
    if not math.isfinite(float(value)):
        raise CertificationError(f"{what} is not finite")
    k = _nearest_integer(value)
    residual = abs(float(value - k))
    if residual >= CERTIFY_THRESHOLD:
        raise CertificationError(f"{what} is not an integer: residual {residual:.3e}", residual)
    return k, residual


def canonical_lift(m: Mat2) -> LiftedMap:
    """Lift with ``f̃(0) = act(m, 0) ∈ [0, 1)`` and offset 0."""
    return LiftedMap(m.normalized(), 0)


def identity_lift(one: Any = 1.0) -> LiftedMap:
    return LiftedMap(Mat2.identity(one), 0)


def central(k: int, one: Any = 1.0) -> LiftedMap:
    """Translation ``x ↦ x + k``."""
    return LiftedMap(Mat2.identity(one), k)


def compose(first: LiftedMap, second: LiftedMap) -> LiftedMap:
    """``first ∘ second`` (``second`` applied first); matrix ``M1 · M2``.

    The offset picks up the certified section cocycle
    ``σ = f̃_{M1}(f̃_{M2}(0)) − f̃_{M1 M2}(0)``.

    Raises:
        CertificationError: If σ is not certifiably an integer.
    """
    product = canonical_lift(first.matrix @ second.matrix)
    sigma_value = _lift_value(first.matrix, first.anchor, second.anchor) - product.anchor
    sigma, _ = _certify(sigma_value, "section cocycle")
    if sigma not in (0, 1):
        if sigma not in (-1, 2):
            raise CertificationError(f"section cocycle {sigma} outside [-1, 2]")
        logger.debug(f"section cocycle {sigma} at wrap boundary")
    return LiftedMap(product.matrix, first.offset + second.offset + sigma, product.anchor)


def inverse(lifted: LiftedMap) -> LiftedMap:
    """Group inverse: lift of the adjugate with the offset that composes to the identity lift."""
    candidate = canonical_lift(lifted.matrix.inverse())
    k, _ = _certify(_lift_value(lifted.matrix, lifted.anchor, candidate.anchor), "inverse offset")
    return LiftedMap(candidate.matrix, -lifted.offset - k, candidate.anchor)


def _trans(lifted: LiftedMap) -> tuple[int | float, float, bool]:
    m = lifted.matrix
    kind = classify(m)
    if kind == MatrixClass.IDENTITY:
        k, residual = _certify(lifted.anchor, "identity translation")
        return lifted.offset + k, residual, True
    if kind == MatrixClass.ELLIPTIC:
        logger.warning(f"elliptic matrix (trace {float(m.trace()):.6g}); falling back to iteration")
        return trans_iterative(lifted, DEFAULT_ITERATIONS), float("nan"), False
    backend = backend_for(m)
    x = fixed_coordinate(m, backend)
    k, residual = _certify(_lift_value(m, lifted.anchor, x) - x, "translation number")
    return lifted.offset + k, residual, True


def trans(lifted: LiftedMap) -> int | float:
    """Translation number; an exact integer unless the matrix is elliptic.

    Raises:
        CertificationError: If the fixed-point displacement is not an integer.
    """
    return _trans(lifted)[0]


def trans_iterative(lifted: LiftedMap, n: int) -> float:
    """``f̃ⁿ(0) / n`` by repeated application."""
    if n < 1:
        raise ValueError(f"iteration count must be >= 1; got: {n}")
    x: Any = 0 * lifted.anchor
    for _ in range(n):
        x = lifted(x)
    return float(x) / n


@dataclass(frozen=True)
class TransResult:
    value: int | float
    certified: bool
    residual: float
    precision: str


@dataclass(frozen=True)
class LiftContext:
    """A representation together with a lift choice for every generator.

    Attributes:
        rep: Validated Fuchsian representation.
        generator_offsets: One integer per generator; defaults to zeros.
        precision: ``double``, ``extended`` or ``extended-on-demand``.
        eval_budget: Maximum letters multiplied per evaluation.
    """

    rep: FuchsianRep
    generator_offsets: tuple[int, ...] = ()
    precision: Precision = PRECISION_ON_DEMAND
    eval_budget: int = DEFAULT_EVAL_BUDGET

    def __post_init__(self) -> None:
        size = 2 * self.rep.genus
        if not self.generator_offsets:
            object.__setattr__(self, "generator_offsets", (0,) * size)
        offsets = self.generator_offsets
        if len(offsets) != size or not all(isinstance(k, int) and not isinstance(k, bool) for k in offsets):
            raise ConfigError(f"generator_offsets must be {size} integers; got: {offsets!r}")
        if self.precision not in _PRECISIONS:
            raise ConfigError(f"precision must be one of {_PRECISIONS}; got: {self.precision!r}")
        if self.eval_budget < 1:
            raise ConfigError(f"eval_budget must be >= 1; got: {self.eval_budget}")

    @property
    def genus(self) -> int:
        return self.rep.genus

    def _lifts(self, precision: Precision) -> tuple[tuple[LiftedMap, ...], tuple[LiftedMap, ...]]:
        forward = tuple(
            canonical_lift(m).shifted(k) for m, k in zip(self.rep.matrices(precision), self.generator_offsets)
        )
        return forward, tuple(inverse(lifted) for lifted in forward)

    @cached_property
    def double_lifts(self) -> tuple[tuple[LiftedMap, ...], tuple[LiftedMap, ...]]:
        return self._lifts(PRECISION_DOUBLE)

    @cached_property
    def extended_lifts(self) -> tuple[tuple[LiftedMap, ...], tuple[LiftedMap, ...]]:
        return self._lifts(PRECISION_EXTENDED)

    def generator_lift(self, letter: int, precision: Precision) -> LiftedMap:
        forward, backward = self.double_lifts if precision == PRECISION_DOUBLE else self.extended_lifts
        return forward[letter - 1] if letter > 0 else backward[-letter - 1]

    @cached_property
    def relator_shift(self) -> int:
        value = _run(self, lambda p: _trans(_evaluate(self, relator(self.genus), p))[0])
        if not isinstance(value, int):
            raise CertificationError(f"relator translation {value} is not an integer")
        return value


def with_offsets(ctx: LiftContext, offsets: tuple[int, ...]) -> LiftContext:
    return replace(ctx, generator_offsets=tuple(offsets))


def _run(ctx: LiftContext, task: Callable[[Precision], T]) -> T:
    if ctx.precision == PRECISION_EXTENDED:
        return task(PRECISION_EXTENDED)
    try:
        return task(PRECISION_DOUBLE)
    except CertificationError as exc:
        if ctx.precision == PRECISION_DOUBLE:
            raise
        logger.info(f"escalating to {EXTENDED_PRECISION_BITS}-bit arithmetic: {exc}")
        return task(PRECISION_EXTENDED)


def _evaluate(ctx: LiftContext, w: Word, precision: Precision) -> LiftedMap:
    same_genus(ctx.genus, w.genus)
    if len(w) > ctx.eval_budget:
        raise WordLengthError(f"evaluation of {len(w)} letters exceeds budget {ctx.eval_budget}")
    result: LiftedMap | None = None
    for letter in w.letters:
        step = ctx.generator_lift(letter, precision)
        result = step if result is None else compose(result, step)
    if result is None:
        one = ctx.rep.matrices(precision)[0].a * 0 + 1
        return identity_lift(one)
    return result


def evaluate_word(ctx: LiftContext, w: Word) -> LiftedMap:
    """``G̃(w)``: left-to-right composition of generator lifts.

    Raises:
        WordLengthError: If ``w`` exceeds the evaluation budget.
        CertificationError: If certification fails under the precision policy.
    """
    return _run(ctx, lambda p: _evaluate(ctx, w, p))


def relator_translation(ctx: LiftContext) -> int:
    """``trans(G̃(c))``, the central translation the relator lifts to; cached per context."""
    return ctx.relator_shift


def lift_word(ctx: LiftContext, w: Word) -> LiftedMap:
    """``G̃(w)`` for words of any length: Dehn-reduce, evaluate, then add the central shift."""

    def task(precision: Precision) -> LiftedMap:
        reduced, count = dehn_reduce(w)
        lifted = _evaluate(ctx, reduced, precision)
        return lifted.shifted(count * ctx.relator_shift) if count else lifted

    return _run(ctx, task)


def _trans_word(ctx: LiftContext, w: Word, precision: Precision) -> tuple[int | float, float, bool]:
    core, count = dehn_reduce_cyclic(w)
    shift = count * ctx.relator_shift if count else 0
    if not core:
        return shift, 0.0, True
    value, residual, certified = _trans(_evaluate(ctx, core, precision))
    return value + shift, residual, certified


def trans_word(ctx: LiftContext, w: Word) -> int | float:
    """Exact ``trans(G̃(w))`` using cyclic Dehn reduction and conjugation invariance."""
    return _run(ctx, lambda p: _trans_word(ctx, w, p))[0]


def trans_direct(ctx: LiftContext, w: Word) -> int | float:
    """``trans(G̃(w))`` from the letter-by-letter lift, without Dehn shortcuts.

    Only for words within the evaluation budget; the suites use it as an oracle for
    :func:`trans_word`.
    """
    return _run(ctx, lambda p: _trans(_evaluate(ctx, w, p))[0])


def trans_report(ctx: LiftContext, w: Word) -> TransResult:
    used: list[str] = []

    def task(precision: Precision) -> tuple[int | float, float, bool]:
        used.append(precision)
        return _trans_word(ctx, w, precision)

    value, residual, certified = _run(ctx, task)
    return TransResult(value, certified, residual, used[-1])


def tau(ctx: LiftContext, alpha: Word, beta: Word) -> int:
    """Euler cocycle ``trans(G̃α ∘ G̃β) − trans(G̃α) − trans(G̃β)``.

    Uses ``G̃α ∘ G̃β = G̃(αβ)``, so all three terms are exact translation numbers.

    Raises:
        CocycleBoundError: If the value leaves {-1, 0, 1}.
    """

    def task(precision: Precision) -> int | float:
        product = multiply(alpha, beta)
        terms = [_trans_word(ctx, w, precision)[0] for w in (product, alpha, beta)]
        return terms[0] - terms[1] - terms[2]

    value = _run(ctx, task)
    if value not in (-1, 0, 1):
        raise CocycleBoundError(f"tau({alpha}, {beta}) = {value} outside {{-1, 0, 1}}")
    return int(value)


def tau_lifted(first: LiftedMap, second: LiftedMap) -> int | float:
    """Euler cocycle of two arbitrary lifts (no exactness guarantees)."""
    return trans(compose(first, second)) - trans(first) - trans(second)


__all__ = [
    "LiftContext",
    "LiftedMap",
    "TransResult",
    "act",
    "canonical_lift",
    "central",
    "compose",
    "evaluate_word",
    "identity_lift",
    "inverse",
    "lift_word",
    "relator_translation",
    "tau",
    "tau_lifted",
    "trans",
    "trans_direct",
    "trans_iterative",
    "trans_report",
    "trans_word",
    "with_offsets",
]
