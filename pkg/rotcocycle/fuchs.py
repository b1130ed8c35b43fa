"""
Explicit Fuchsian representation of the genus-g surface group.

The representation is built from the side pairings of the regular hyperbolic
4g-gon with vertex angle 2π/4g, centred at ``i`` in the upper half plane. Side
``k`` carries the letter ``c[k]`` of the relator, so sides ``4i`` and ``4i+2``
belong to one generator of handle ``i`` and sides ``4i+1`` and ``4i+3`` to the
other. The labelling convention is found by a small deterministic search: the
first candidate whose relator evaluates to ``±I`` with hyperbolic generators
wins.

Matrices are computed in a private 256-bit mpmath context and kept both as
doubles and as extended numbers; every matrix is sign-normalized (first
nonzero entry positive).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any

from .constants import CLASSIFY_EPS, DETERMINANT_TOL, PRECISION_DOUBLE, RELATOR_RESIDUAL
from .errors import CertificationError, RepresentationError
from .logging_config import get_logger
from .notation import letter_token
from .numeric import Backend, ExtendedBackend, double_backend, extended_backend, mod1
from .types import JsonObject, Precision
from .words import Word, check_genus, relator, same_genus


logger = get_logger(__name__)


class MatrixClass(Enum):
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"
    IDENTITY = "identity"


@dataclass(frozen=True, slots=True)
class Mat2:
    """A 2×2 real matrix ``[[a, b], [c, d]]`` acting projectively.

    Entries are floats or extended mpmath numbers; arithmetic never mixes
    the two.
    """

    a: Any
    b: Any
    c: Any
    d: Any

    @classmethod
    def identity(cls, one: Any = 1.0) -> Mat2:
        return cls(one, 0 * one, 0 * one, one)

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> Any:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Any:
        return self.a + self.d

    def inverse(self) -> Mat2:
        """Adjugate, the inverse for determinant one."""
        return Mat2(self.d, -self.b, -self.c, self.a)

    def normalized(self) -> Mat2:
        for entry in (self.a, self.b, self.c, self.d):
            if entry != 0:
                return self if entry > 0 else -self
        return self

    def entries(self) -> tuple[Any, Any, Any, Any]:
        return (self.a, self.b, self.c, self.d)

    def to_float(self) -> Mat2:
        return Mat2(float(self.a), float(self.b), float(self.c), float(self.d))

    def distance(self, other: Mat2) -> float:
        """Projective max-entry distance: ``min(‖M − N‖, ‖M + N‖)``."""
        plus = max(abs(float(x - y)) for x, y in zip(self.entries(), other.entries()))
        minus = max(abs(float(x + y)) for x, y in zip(self.entries(), other.entries()))
        return min(plus, minus)

    def rows(self) -> list[list[float]]:
        return [[float(self.a), float(self.b)], [float(self.c), float(self.d)]]


def classify(m: Mat2, eps: float = CLASSIFY_EPS) -> MatrixClass:
    """Classify by ``|trace|``; near 2 the distance to ``±I`` separates identity from parabolic.

    Examples:
        >>> classify(Mat2(2.0, 0.0, 0.0, 0.5))
        <MatrixClass.HYPERBOLIC: 'hyperbolic'>
        >>> classify(Mat2.identity())
        <MatrixClass.IDENTITY: 'identity'>
    """
    t = abs(float(m.trace()))
    if t > 2 + eps:
        return MatrixClass.HYPERBOLIC
    if t < 2 - eps:
        return MatrixClass.ELLIPTIC
    if m.distance(Mat2.identity()) < eps:
        return MatrixClass.IDENTITY
    return MatrixClass.PARABOLIC


def backend_for(m: Mat2) -> Backend:
    return double_backend() if isinstance(m.a, float) else extended_backend()


def direction_coordinate(backend: Backend, x: Any, y: Any) -> Any:
    """Circle coordinate in [0, 1) of the line through ``(x, y)``."""
    return mod1(backend, backend.atan2(y, x) / backend.pi)


def _fixed_direction(m: Mat2, attracting: bool, backend: Backend) -> Any:
    kind = classify(m)
    if kind in (MatrixClass.ELLIPTIC, MatrixClass.IDENTITY):
        raise ValueError(f"{kind.value} matrix has no boundary fixed point to select")
    if m.trace() < 0:
        m = -m
    a, b, c, d = m.entries()
    disc = (a - d) * (a - d) + 4 * b * c
    s = backend.sqrt(disc) if disc > 0 else 0 * disc
    diff = a - d
    if attracting:
        first, second = ((diff + s) / 2, c), (b, (s - diff) / 2)
        primary, secondary = (first, second) if diff >= 0 else (second, first)
    else:
        first, second = ((diff - s) / 2, c), (b, (-diff - s) / 2)
        primary, secondary = (first, second) if diff <= 0 else (second, first)
    if primary[0] == 0 and primary[1] == 0:
        primary = secondary
    return direction_coordinate(backend, primary[0], primary[1])


def fixed_coordinate(m: Mat2, backend: Backend | None = None) -> Any:
    """Attracting (or the unique parabolic) fixed direction of ``m``.

    Examples:
        >>> fixed_coordinate(Mat2(2.0, 0.0, 0.0, 0.5))
        0.0
        >>> fixed_coordinate(Mat2(0.5, 0.0, 0.0, 2.0))
        0.5

    Raises:
        ValueError: For elliptic matrices and the identity.
    """
    return _fixed_direction(m, True, backend or backend_for(m))


def repelling_coordinate(m: Mat2, backend: Backend | None = None) -> Any:
    return _fixed_direction(m, False, backend or backend_for(m))


@dataclass(frozen=True)
class FuchsianRep:
    """Validated generator matrices for ``a1, b1, ..., ag, bg``.

    Attributes:
        genus: Surface genus.
        generators: Double-precision matrices.
        extended: The same matrices at 256 bits.
        orientation_flipped: Whether the construction was conjugated by ``diag(1, -1)``
            to put the relator translation at ``2 - 2g``.
        candidate: Labelling convention that passed validation.
    """

    genus: int
    generators: tuple[Mat2, ...]
    extended: tuple[Mat2, ...]
    orientation_flipped: bool = False
    candidate: dict[str, Any] = field(default_factory=dict, compare=False)

    def matrices(self, precision: Precision = PRECISION_DOUBLE) -> tuple[Mat2, ...]:
        return self.generators if precision == PRECISION_DOUBLE else self.extended

    def matrix(self, letter: int, precision: Precision = PRECISION_DOUBLE) -> Mat2:
        m = self.matrices(precision)[abs(letter) - 1]
        return m if letter > 0 else m.inverse()


def evaluate(rep: FuchsianRep, w: Word, precision: Precision = PRECISION_DOUBLE) -> Mat2:
    """Ordered product ``ρ(x_1) ··· ρ(x_n)``.

    Raises:
        GenusError: On genus mismatch.
        CertificationError: If entries overflow.
    """
    same_genus(rep.genus, w.genus)
    generators = rep.matrices(precision)
    one = generators[0].a * 0 + 1
    result = Mat2.identity(one)
    for letter in w.letters:
        m = generators[abs(letter) - 1]
        result = result @ (m if letter > 0 else m.inverse())
    backend = double_backend() if precision == PRECISION_DOUBLE else extended_backend()
    if not all(backend.is_finite(x) for x in result.entries()):
        raise CertificationError(f"matrix entries overflowed in {precision} precision evaluating {len(w)} letters")
    return result.normalized()


def _rotation(ext: ExtendedBackend, alpha: Any) -> Mat2:
    """Rotation about ``i`` by ``alpha``; ``[[cos t, -sin t], [sin t, cos t]]`` rotates by ``-2t``."""
    t = -alpha / 2
    return Mat2(ext.cos(t), -ext.sin(t), ext.sin(t), ext.cos(t))


def _side_pairing(ext: ExtendedBackend, genus: int, source: int, target: int, mirror: bool) -> Mat2:
    """Map side ``source`` onto side ``target`` with the polygon landing across ``target``."""
    sides = 4 * genus
    pi = ext.pi
    half = ext.acosh(ext.cot(pi / sides))
    sign = -1 if mirror else 1
    psi_source = sign * 2 * pi * source / sides
    psi_target = sign * 2 * pi * target / sides
    translate = Mat2(ext.exp(half), ext.number(0), ext.number(0), ext.exp(-half))
    return _rotation(ext, psi_target - pi / 2) @ translate @ _rotation(ext, -pi / 2 - psi_source)


def _power(m: Mat2, exponent: int) -> Mat2:
    return m if exponent == 1 else m.inverse()


def _candidates() -> list[dict[str, Any]]:
    return [
        {"roles": roles, "exponent_a": ea, "exponent_b": eb, "mirror": mirror, "reversed_handles": rev}
        for roles, ea, eb, mirror, rev in itertools.product(("ab", "ba"), (1, -1), (1, -1), (False, True), (False, True))
    ]


def _candidate_generators(ext: ExtendedBackend, genus: int, candidate: dict[str, Any]) -> tuple[Mat2, ...]:
    generators: list[Mat2] = []
    for i in range(genus):
        slot = genus - 1 - i if candidate["reversed_handles"] else i
        a_sides, b_sides = (4 * slot, 4 * slot + 2), (4 * slot + 1, 4 * slot + 3)
        if candidate["roles"] == "ba":
            a_sides, b_sides = b_sides, a_sides
        mirror = candidate["mirror"]
        generators.append(_power(_side_pairing(ext, genus, *a_sides, mirror), candidate["exponent_a"]))
        generators.append(_power(_side_pairing(ext, genus, *b_sides, mirror), candidate["exponent_b"]))
    return tuple(m.normalized() for m in generators)


def _relator_residual(generators: tuple[Mat2, ...], genus: int) -> float:
    result = Mat2.identity(generators[0].a * 0 + 1)
    for letter in relator(genus).letters:
        m = generators[abs(letter) - 1]
        result = result @ (m if letter > 0 else m.inverse())
    return result.distance(Mat2.identity())


def _flip(m: Mat2) -> Mat2:
    """Conjugate by ``diag(1, -1)``; reverses the circle orientation."""
    return Mat2(m.a, -m.b, -m.c, m.d).normalized()


def _validate(generators: tuple[Mat2, ...], genus: int) -> float:
    for k, m in enumerate(generators):
        if abs(float(m.det()) - 1) > DETERMINANT_TOL:
            raise RepresentationError(f"generator {letter_token(k + 1)} has determinant {float(m.det())}")
        if classify(m.to_float()) != MatrixClass.HYPERBOLIC:
            raise RepresentationError(f"generator {letter_token(k + 1)} is not hyperbolic")
    return _relator_residual(generators, genus)


@lru_cache(maxsize=16)
def build_rep(genus: int) -> FuchsianRep:
    """Build and validate the representation for ``genus``.

    Deterministic for fixed genus; cached.

    Raises:
        GenusError: If genus < 2.
        RepresentationError: If no labelling candidate passes validation or the relator
            translation is not ``±(2g - 2)``.
    """
    from .circlelift import LiftContext, relator_translation

    check_genus(genus)
    ext = extended_backend()
    for candidate in _candidates():
        extended = _candidate_generators(ext, genus, candidate)
        try:
            residual = _validate(extended, genus)
        except RepresentationError as exc:
            logger.debug(f"candidate {candidate} rejected: {exc}")
            continue
        if residual >= RELATOR_RESIDUAL:
            logger.debug(f"candidate {candidate} rejected: relator residual {residual:.3e}")
            continue
        rep = FuchsianRep(genus, tuple(m.to_float() for m in extended), extended, False, candidate)
        euler = relator_translation(LiftContext(rep))
        if euler == 2 * genus - 2:
            extended = tuple(_flip(m) for m in extended)
            rep = FuchsianRep(genus, tuple(m.to_float() for m in extended), extended, True, candidate)
            euler = relator_translation(LiftContext(rep))
        if euler != 2 - 2 * genus:
            raise RepresentationError(f"relator translates by {euler}, expected {2 - 2 * genus} for genus {genus}")
        float_residual = _relator_residual(rep.generators, genus)
        if float_residual >= RELATOR_RESIDUAL:
            raise RepresentationError(f"double-precision relator residual {float_residual:.3e} for genus {genus}")
        logger.info(f"genus {genus}: accepted side pairing {candidate}, orientation flipped: {rep.orientation_flipped}")
        return rep
    raise RepresentationError(
        f"no side-pairing candidate satisfies the relator for genus {genus}. "
        "Hint: the polygon labelling search covers role, exponent, mirror and handle order."
    )


def rep_as_dict(rep: FuchsianRep) -> JsonObject:
    """Row-major generator matrices for ``rep-dump``."""
    return {
        "genus": rep.genus,
        "orientation_flipped": rep.orientation_flipped,
        "candidate": dict(rep.candidate),
        "relator_residual": _relator_residual(rep.generators, rep.genus),
        "generators": {letter_token(k + 1): m.rows() for k, m in enumerate(rep.generators)},
    }


__all__ = [
    "FuchsianRep",
    "Mat2",
    "MatrixClass",
    "backend_for",
    "build_rep",
    "classify",
    "direction_coordinate",
    "evaluate",
    "fixed_coordinate",
    "rep_as_dict",
    "repelling_coordinate",
]
