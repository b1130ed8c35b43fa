"""
The rotation-number crossed homomorphism and its companions.

``R(φ)(γ) = trans(G̃(f(γ))) − trans(G̃(γ))`` for a relator-fixing
representative ``f`` of φ. Around it live the integer functions on F_2g that
the checks compare: the Euler cocycle as the defect of ``trans ∘ G̃``, the
letter-pair potential whose defect is the intersection form, ``C_f`` built
from that potential, and a cover-type classifier for pairs of words.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any

from .circlelift import LiftContext, lift_word, tau, trans_word, with_offsets
from .constants import CLASSIFY_EPS, DEFAULT_MAXLEN, DEFAULT_SEED
from .dehn import dehn_reduce, surface_equal
from .errors import CocycleBoundError
from .fuchs import MatrixClass, classify, fixed_coordinate, repelling_coordinate
from .logging_config import get_logger
from .mapclass import MappingClass, apply, compose, homology_action, point_push
from .sampling import random_reduced_pair, substream
from .types import JsonObject
from .words import Word, abelianize, commutator, empty, generator, intersection, is_a, multiply, same_genus


logger = get_logger(__name__)


@dataclass(frozen=True)
class Cochain:
    """An integer function on F_2g with cached generator values.

    Attributes:
        name: Display name.
        genus: Surface genus.
        evaluator: The function itself.
        is_homomorphism: Whether values follow from generator values by abelianization.
    """

    name: str
    genus: int
    evaluator: Callable[[Word], int] = field(compare=False)
    is_homomorphism: bool = False

    def __call__(self, w: Word) -> int:
        return self.value(w)

    def value(self, w: Word) -> int:
        same_genus(self.genus, w.genus)
        return self.evaluator(w)

    @cached_property
    def _generator_values(self) -> tuple[int, ...]:
        return tuple(self.value(generator(self.genus, k + 1)) for k in range(2 * self.genus))

    def generator_values(self) -> tuple[int, ...]:
        return self._generator_values

    def homomorphism_value(self, w: Word) -> int:
        """Value predicted by additivity from the generator values."""
        return sum(x * y for x, y in zip(self.generator_values(), abelianize(w)))

    def defect(self, a: Word, b: Word) -> int:
        return defect(self, a, b)


def defect(h: Callable[[Word], int], a: Word, b: Word) -> int:
    """``D(h)(a, b) = h(ab) − h(a) − h(b)`` with ``ab`` freely reduced."""
    return h(multiply(a, b)) - h(a) - h(b)


def R(ctx: LiftContext, phi: MappingClass, gamma: Word) -> int:
    """``R(φ)(γ)`` as an exact integer.

    Examples:
        >>> import rotcocycle
        >>> from rotcocycle.mapclass import point_push
        >>> from rotcocycle.words import generator
        >>> R(rotcocycle.context(2), point_push(1, genus=2), generator(2, 2))
        -2
    """
    same_genus(ctx.genus, phi.genus, gamma.genus)
    return int(trans_word(ctx, apply(phi, gamma)) - trans_word(ctx, gamma))


def R_on_homology(
    ctx: LiftContext,
    phi: MappingClass,
    checks: int = 0,
    seed: int = DEFAULT_SEED,
    maxlen: int = DEFAULT_MAXLEN,
) -> tuple[int, ...]:
    """Generator values of ``R(φ)``, optionally spot-checking additivity.

    Raises:
        CocycleBoundError: If any sampled pair violates additivity.
    """
    values = tuple(R(ctx, phi, generator(ctx.genus, k + 1)) for k in range(2 * ctx.genus))
    for index in range(checks):
        alpha, beta = random_reduced_pair(substream(seed, f"R_on_homology:{phi.label}", index), ctx.genus, maxlen)
        total = R(ctx, phi, multiply(alpha, beta))
        parts = R(ctx, phi, alpha) + R(ctx, phi, beta)
        if total != parts:
            raise CocycleBoundError(f"R({phi.label}) not additive on ({alpha}, {beta}): {total} != {parts}")
    return values


def morita_potential(w: Word) -> int:
    """``Σ_{i<j} ⟨x_i, x_j⟩`` over the letters of ``w``.

    Examples:
        >>> from rotcocycle.words import word
        >>> morita_potential(word(2, 1, 2))
        1
    """
    prefix = [0] * (2 * w.genus)
    total = 0
    for letter in w.letters:
        k = abs(letter) - 1
        sign = 1 if letter > 0 else -1
        if is_a(letter):
            total -= sign * prefix[k + 1]
        else:
            total += sign * prefix[k - 1]
        prefix[k] += sign
    return total


def C_f(phi: MappingClass, a: Word) -> int:
    """``f(φ(a)) − f(a)`` for the letter-pair potential ``f``."""
    return morita_potential(apply(phi, a)) - morita_potential(a)


def check_crossed(ctx: LiftContext, phi: MappingClass, eta: MappingClass, gamma: Word) -> bool:
    """``R(φη)(γ) = R(φ)(γ) + R(η)(f_φ(γ))`` with φη represented by ``compose(φ, η)``."""
    left = R(ctx, compose(phi, eta), gamma)
    right = R(ctx, phi, gamma) + R(ctx, eta, apply(phi, gamma))
    return left == right


def check_cf_crossed(phi: MappingClass, eta: MappingClass, a: Word) -> bool:
    return C_f(compose(phi, eta), a) == C_f(phi, a) + C_f(eta, apply(phi, a))


def R_push_word(ctx: LiftContext, w: Word, gamma: Word) -> int:
    """``R(P(w))(γ)`` for the push along ``w``, letter by letter.

    Uses the crossed law ``R(P(x₁⋯xₙ))(γ) = Σᵢ R(P(xᵢ))(γᵢ)`` with ``γ₁ = γ`` and
    ``γᵢ₊₁ = P(xᵢ)(γᵢ)`` Dehn-reduced. ``R(φ)`` only depends on the surface-group
    element, so the reduction does not change any term. Agrees with
    ``R(ctx, point_push_word(w), gamma)`` wherever the composite can be built.

    Examples:
        >>> import rotcocycle
        >>> from rotcocycle.words import generator
        >>> R_push_word(rotcocycle.context(2), generator(2, 1), generator(2, 2))
        -2
    """
    same_genus(ctx.genus, w.genus, gamma.genus)
    total = 0
    current = gamma
    for letter in w.letters:
        push = point_push(letter, w.genus)
        image = apply(push, current)
        total += int(trans_word(ctx, image) - trans_word(ctx, current))
        current, _ = dehn_reduce(image)
    return total


def pointpush_bilinear(ctx: LiftContext, a: Word, b: Word) -> bool:
    """``R(P(a))(b) = (2 − 2g) · i(a, b)``."""
    return R_push_word(ctx, a, b) == (2 - 2 * ctx.genus) * intersection(a, b)


def check_defect_transport(ctx: LiftContext, phi: MappingClass, alpha: Word, beta: Word) -> bool:
    """``trans(G̃(fα fβ)) − trans(G̃(αβ)) = R(φ)(α) + R(φ)(β)``."""
    moved = trans_word(ctx, multiply(apply(phi, alpha), apply(phi, beta)))
    original = trans_word(ctx, multiply(alpha, beta))
    return moved - original == R(ctx, phi, alpha) + R(ctx, phi, beta)


def lift_offset_coboundary(ctx: LiftContext, offsets: Sequence[int], phi: MappingClass, gamma: Word) -> int:
    """Predicted change of ``R(φ)(γ)`` when the generator lifts move to ``offsets``.

    Each generator lift shifts by a central translation, so the change is
    ``Σ_k Δn_k · (ab(fγ)_k − ab(γ)_k)``.
    """
    moved, original = abelianize(apply(phi, gamma)), abelianize(gamma)
    return sum((new - old) * (x - y) for new, old, x, y in zip(offsets, ctx.generator_offsets, moved, original))


def check_lift_offsets(ctx: LiftContext, offsets: Sequence[int], phi: MappingClass, gamma: Word) -> bool:
    shifted = with_offsets(ctx, tuple(offsets))
    return R(shifted, phi, gamma) - R(ctx, phi, gamma) == lift_offset_coboundary(ctx, offsets, phi, gamma)


def trans_cochain(ctx: LiftContext) -> Cochain:
    return Cochain("trans", ctx.genus, lambda w: int(trans_word(ctx, w)))


def morita_cochain(genus: int) -> Cochain:
    return Cochain("morita", genus, morita_potential)


def r_cochain(ctx: LiftContext, phi: MappingClass) -> Cochain:
    return Cochain(f"R({phi.label})", ctx.genus, lambda w: R(ctx, phi, w), is_homomorphism=True)


def cf_cochain(phi: MappingClass) -> Cochain:
    return Cochain(f"C_f({phi.label})", phi.genus, lambda w: C_f(phi, w))


def omega_cochain(field_model: Any) -> Cochain:
    from .windnum import omega

    return Cochain(f"omega_{field_model.name}", field_model.genus, lambda w: omega(field_model, w))


class CoverType(Enum):
    PUNCTURED_TORUS = "punctured-torus"
    PANTS_MATCHED = "pants-matched"
    PANTS_OPPOSED = "pants-opposed"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class CoverReport:
    cover_type: CoverType
    commutator_trace: float | None
    endpoints: tuple[float, ...] = ()


def _circle_gap(x: float, y: float) -> float:
    gap = abs(x - y) % 1.0
    return min(gap, 1.0 - gap)


def cover_report(ctx: LiftContext, alpha: Word, beta: Word) -> CoverReport:
    """Classify the cover of the surface associated with ``⟨α, β⟩``.

    Axes whose endpoints interleave give a punctured torus. Disjoint axes give a pair
    of pants; it is *matched* when both endpoint pairs appear in the same
    repelling-to-attracting order counterclockwise, *opposed* otherwise.
    """
    same_genus(ctx.genus, alpha.genus, beta.genus)
    if surface_equal(commutator(alpha, beta), empty(ctx.genus)):
        return CoverReport(CoverType.DEGENERATE, None)
    m_alpha, m_beta = lift_word(ctx, alpha).matrix, lift_word(ctx, beta).matrix
    trace = float((m_alpha @ m_beta @ m_alpha.inverse() @ m_beta.inverse()).trace())
    if classify(m_alpha) != MatrixClass.HYPERBOLIC or classify(m_beta) != MatrixClass.HYPERBOLIC:
        return CoverReport(CoverType.DEGENERATE, trace)
    points = [
        (float(repelling_coordinate(m_alpha)), "A", "r"),
        (float(fixed_coordinate(m_alpha)), "A", "a"),
        (float(repelling_coordinate(m_beta)), "B", "r"),
        (float(fixed_coordinate(m_beta)), "B", "a"),
    ]
    endpoints = tuple(p[0] for p in points)
    for i in range(4):
        for j in range(i + 1, 4):
            if _circle_gap(points[i][0], points[j][0]) < CLASSIFY_EPS:
                return CoverReport(CoverType.DEGENERATE, trace, endpoints)
    ordered = sorted(points)
    owners = [p[1] for p in ordered]
    if owners in (["A", "B", "A", "B"], ["B", "A", "B", "A"]):
        return CoverReport(CoverType.PUNCTURED_TORUS, trace, endpoints)
    while owners[0] != "A" or owners[1] != "A":
        ordered = ordered[1:] + ordered[:1]
        owners = [p[1] for p in ordered]
    matched = ordered[0][2] == ordered[2][2]
    return CoverReport(CoverType.PANTS_MATCHED if matched else CoverType.PANTS_OPPOSED, trace, endpoints)


def classify_cover(ctx: LiftContext, alpha: Word, beta: Word) -> CoverType:
    return cover_report(ctx, alpha, beta).cover_type


def cover_calibration(ctx: LiftContext, pairs: Iterable[tuple[Word, Word]]) -> dict[str, dict[int, int]]:
    """τ histogram per cover type, used to read off the sign rule for pants."""
    histogram: dict[str, Counter[int]] = {kind.value: Counter() for kind in CoverType}
    for alpha, beta in pairs:
        histogram[classify_cover(ctx, alpha, beta).value][tau(ctx, alpha, beta)] += 1
    return {kind: dict(sorted(counts.items())) for kind, counts in histogram.items()}


def cf_difference_report(ctx: LiftContext, classes: Iterable[MappingClass]) -> list[JsonObject]:
    """Generator values of ``C_f(φ)``, ``R(φ)`` and their difference per class."""
    rows: list[JsonObject] = []
    for phi in classes:
        r_values = R_on_homology(ctx, phi)
        cf_values = cf_cochain(phi).generator_values()
        rows.append(
            {
                "phi": phi.label,
                "r": list(r_values),
                "c_f": list(cf_values),
                "difference": [x - y for x, y in zip(cf_values, r_values)],
                "homology_action": [list(row) for row in homology_action(phi)],
            }
        )
    return rows


def theorem_pairs(genus: int) -> list[tuple[Word, Word]]:
    """The handle pairs ``(a_i, b_i)``."""
    return [(generator(genus, 2 * i - 1), generator(genus, 2 * i)) for i in range(1, genus + 1)]


__all__ = [
    "C_f",
    "Cochain",
    "CoverReport",
    "CoverType",
    "R",
    "R_on_homology",
    "R_push_word",
    "cf_cochain",
    "cf_difference_report",
    "check_cf_crossed",
    "check_crossed",
    "check_defect_transport",
    "check_lift_offsets",
    "classify_cover",
    "cover_calibration",
    "cover_report",
    "defect",
    "lift_offset_coboundary",
    "morita_cochain",
    "morita_potential",
    "omega_cochain",
    "pointpush_bilinear",
    "r_cochain",
    "theorem_pairs",
    "trans_cochain",
]
