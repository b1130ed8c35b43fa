"""
Combinatorial winding numbers on the surface minus a disk.

The spine is a one-vertex fatgraph with one loop per generator. A
:class:`FieldModel` places every half-edge at a direction (a rational multiple
of π) in a chart around the vertex where the vector field is constant, and
gives every petal an extra integer number of field turns. The winding number of
a word is the total turning of the tangent of its taut loop, measured against
the field, in full turns.

Angles are :class:`fractions.Fraction` multiples of π, so all turning sums are
exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from .circlelift import LiftContext, tau
from .cocycle import CoverType, classify_cover
from .constants import DEFAULT_MAXLEN, DEFAULT_SEED
from .errors import FieldModelError
from .logging_config import get_logger
from .notation import format_word, letter_token
from .sampling import random_reduced_pair, random_word, substream
from .types import Closure, JsonObject
from .utils import map_samples
from .words import Word, a, b, check_genus, conjugate, cyclic_reduce, generator, invert, multiply, relator, same_genus


logger = get_logger(__name__)

End = Literal["out", "in"]

_FULL_TURN = Fraction(2)


@dataclass(frozen=True, slots=True)
class HalfEdge:
    """One end of the loop of ``generator``; ``out`` is where a positive traversal leaves."""

    generator: int
    end: End

    def __str__(self) -> str:
        return f"{self.end}({letter_token(self.generator)})"


@dataclass(frozen=True)
class Fatgraph:
    genus: int
    cyclic_order: tuple[HalfEdge, ...]
    boundary_word: Word

    @property
    def euler_characteristic(self) -> int:
        return 1 - 2 * self.genus

    def position(self, half_edge: HalfEdge) -> int:
        return self.cyclic_order.index(half_edge)


def _departure(letter: int) -> HalfEdge:
    return HalfEdge(abs(letter), "out" if letter > 0 else "in")


def _arrival(letter: int) -> HalfEdge:
    return HalfEdge(abs(letter), "in" if letter > 0 else "out")


def _letter_leaving(half_edge: HalfEdge) -> int:
    return half_edge.generator if half_edge.end == "out" else -half_edge.generator


@lru_cache(maxsize=16)
def build_fatgraph(genus: int) -> Fatgraph:
    """One-vertex spine with cyclic order ``out(a_i), in(b_i), in(a_i), out(b_i)`` per handle.

    The boundary walk arrives through a half-edge and leaves through its
    successor; it reads the relator.

    Raises:
        FieldModelError: If the boundary walk does not read a rotation of ``c^{±1}``.
    """
    check_genus(genus)
    order: list[HalfEdge] = []
    for i in range(1, genus + 1):
        order.extend((HalfEdge(a(i), "out"), HalfEdge(b(i), "in"), HalfEdge(a(i), "in"), HalfEdge(b(i), "out")))
    successor = {h: order[(k + 1) % len(order)] for k, h in enumerate(order)}
    letters: list[int] = []
    current = order[0]
    for _ in range(4 * genus):
        letter = _letter_leaving(current)
        letters.append(letter)
        current = successor[_arrival(letter)]
    boundary = Word(genus, tuple(letters))
    if not _is_relator_rotation(boundary):
        raise FieldModelError(f"fatgraph boundary reads {format_word(boundary)}, not a rotation of the relator")
    return Fatgraph(genus, tuple(order), boundary)


def _is_relator_rotation(w: Word) -> bool:
    c = relator(w.genus).letters
    for target in (c, invert(relator(w.genus)).letters):
        doubled = target + target
        if len(w) == len(target) and any(doubled[k : k + len(target)] == w.letters for k in range(len(target))):
            return True
    return False


@dataclass(frozen=True)
class FieldModel:
    """A nowhere-zero field on the thickened spine.

    Attributes:
        name: Display name.
        genus: Surface genus.
        angles: Direction of every half-edge in fatgraph cyclic order, as multiples of π in [0, 2).
        twists: Extra full field turns along each petal, one per generator.
        basepoint: Tangent direction used by the based closure.
    """

    name: str
    genus: int
    angles: tuple[Fraction, ...]
    twists: tuple[int, ...]
    basepoint: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        check_genus(self.genus)
        if len(self.angles) != 4 * self.genus or len(self.twists) != 2 * self.genus:
            raise FieldModelError(
                f"field {self.name!r} needs {4 * self.genus} angles and {2 * self.genus} twists; "
                f"got {len(self.angles)} and {len(self.twists)}"
            )
        if any(not 0 <= x < 2 for x in (*self.angles, self.basepoint)):
            raise FieldModelError(f"field {self.name!r}: angles must lie in [0, 2) (units of π)")
        if len(set(self.angles)) != len(self.angles):
            raise FieldModelError(f"field {self.name!r}: half-edge angles must be distinct")
        descents = sum(1 for x, y in zip(self.angles, self.angles[1:] + self.angles[:1]) if y < x)
        if descents != 1:
            raise FieldModelError(f"field {self.name!r}: angles must increase along the cyclic order")
        if any((x - self.basepoint) % 2 == 1 for x in self.angles):
            raise FieldModelError(f"field {self.name!r}: basepoint is exactly opposite a half-edge")

    def angle(self, half_edge: HalfEdge) -> Fraction:
        return self.angles[build_fatgraph(self.genus).position(half_edge)]


def builtin_fields(genus: int) -> dict[str, FieldModel]:
    """Field ``X`` (even spacing, no twists) and field ``Y`` (uneven spacing, twists)."""
    check_genus(genus)
    n = 4 * genus
    even = tuple(Fraction(2 * j + 1, n) for j in range(n))
    uneven = tuple(Fraction(j, 2 * genus) + Fraction(j % 3 + 1, 16 * genus) for j in range(n))
    return {
        "X": FieldModel("X", genus, even, (0,) * (2 * genus), Fraction(0)),
        "Y": FieldModel("Y", genus, uneven, tuple(k % 3 - 1 for k in range(2 * genus)), Fraction(1, 32 * genus)),
    }


def _shortest_rotation(start: Fraction, end: Fraction) -> Fraction:
    turn = (end - start) % _FULL_TURN
    if turn == 1:
        raise FieldModelError(f"exactly-π transition between directions {start}π and {end}π")
    return turn - _FULL_TURN if turn > 1 else turn


def petal_turning(field_model: FieldModel, letter: int) -> Fraction:
    """Tangent turning along one petal, in units of π."""
    k = abs(letter)
    forward = (field_model.angle(HalfEdge(k, "in")) + 1 - field_model.angle(HalfEdge(k, "out"))) % _FULL_TURN
    forward += _FULL_TURN * field_model.twists[k - 1]
    return forward if letter > 0 else -forward


def junction_turning(field_model: FieldModel, before: int, after: int) -> Fraction:
    """Turning at the vertex from arriving along ``before`` to leaving along ``after``."""
    arriving = field_model.angle(_arrival(before)) + 1
    return _shortest_rotation(arriving, field_model.angle(_departure(after)))


def turning(field_model: FieldModel, w: Word, closure: Closure = "cyclic") -> Fraction:
    """Total turning in units of π of the closed taut loop of ``w``."""
    same_genus(field_model.genus, w.genus)
    letters = cyclic_reduce(w)[0].letters if closure == "cyclic" else w.letters
    if not letters:
        return Fraction(0)
    total = sum((petal_turning(field_model, x) for x in letters), Fraction(0))
    total += sum((junction_turning(field_model, x, y) for x, y in zip(letters, letters[1:])), Fraction(0))
    if closure == "cyclic":
        return total + junction_turning(field_model, letters[-1], letters[0])
    start = _shortest_rotation(field_model.basepoint, field_model.angle(_departure(letters[0])))
    end = _shortest_rotation(field_model.angle(_arrival(letters[-1])) + 1, field_model.basepoint)
    return total + start + end


def omega(field_model: FieldModel, w: Word, closure: Closure = "cyclic") -> int:
    """Winding number of ``w`` against the field, in full turns.

    ``closure="cyclic"`` closes the taut loop of the cyclically reduced word (a
    class function); ``closure="based"`` closes through the basepoint direction.

    Examples:
        >>> from rotcocycle.words import generator
        >>> omega(builtin_fields(2)["X"], generator(2, 1))
        1

    Raises:
        FieldModelError: On an exactly-π transition or a non-integral turning sum.
    """
    if closure not in ("cyclic", "based"):
        raise ValueError(f"closure must be 'cyclic' or 'based'; got: {closure!r}")
    total = turning(field_model, w, closure)
    turns = total / _FULL_TURN
    if turns.denominator != 1:
        raise FieldModelError(f"turning sum {total}π of {format_word(w)} is not a whole number of turns")
    return int(turns)


def defect_omega(field_model: FieldModel, a_word: Word, b_word: Word, closure: Closure = "cyclic") -> int:
    """``ω(ab) − ω(a) − ω(b)``."""
    product = multiply(a_word, b_word)
    return omega(field_model, product, closure) - omega(field_model, a_word, closure) - omega(field_model, b_word, closure)


def omega_difference(field_x: FieldModel, field_y: FieldModel) -> tuple[int, ...]:
    """Generator values of the homomorphism ``ω_X − ω_Y``."""
    genus = same_genus(field_x.genus, field_y.genus)
    return tuple(
        omega(field_x, generator(genus, k + 1)) - omega(field_y, generator(genus, k + 1)) for k in range(2 * genus)
    )


def theorem_instances(
    ctx: LiftContext,
    field_model: FieldModel,
    conjugators: tuple[Word, ...] = (),
) -> list[JsonObject]:
    """Both defects on ``(a_i, b_i)`` and on ``(w a_i w⁻¹, w b_i w⁻¹)`` for each conjugator ``w``."""
    genus = same_genus(ctx.genus, field_model.genus)
    rows: list[JsonObject] = []
    for w in (Word(genus, ()), *conjugators):
        for i in range(1, genus + 1):
            alpha = conjugate(generator(genus, a(i)), invert(w))
            beta = conjugate(generator(genus, b(i)), invert(w))
            d_omega = defect_omega(field_model, alpha, beta)
            d_trans = tau(ctx, alpha, beta)
            rows.append(
                {
                    "alpha": format_word(alpha),
                    "beta": format_word(beta),
                    "d_omega": d_omega,
                    "d_trans": d_trans,
                    "agree": d_omega == d_trans,
                }
            )
    return rows


def compare_defects(
    ctx: LiftContext,
    field_model: FieldModel,
    samples: int,
    maxlen: int = DEFAULT_MAXLEN,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
    progress: bool = False,
) -> JsonObject:
    """Seeded comparison of ``D(ω)`` and ``D(trans ∘ G̃)`` on random pairs.

    Pairs are grouped by cover type; the report records agreement rates and draws
    no conclusion. The one expected outcome it flags is
    ``summary["punctured_torus_zero"]``: both defects vanish on every
    punctured-torus pair.
    """

    genus = same_genus(ctx.genus, field_model.genus)

    def one(index: int) -> JsonObject:
        alpha, beta = random_reduced_pair(substream(seed, "compare_defects", index), genus, maxlen)
        d_omega = defect_omega(field_model, alpha, beta)
        d_trans = tau(ctx, alpha, beta)
        return {
            "alpha": format_word(alpha),
            "beta": format_word(beta),
            "d_omega": d_omega,
            "d_trans": d_trans,
            "cover_type": classify_cover(ctx, alpha, beta).value,
            "agree": d_omega == d_trans,
        }

    pairs = map_samples(one, samples, workers, progress, desc="compare-defects")
    by_cover: dict[str, Counter[str]] = {}
    for row in pairs:
        counts = by_cover.setdefault(str(row["cover_type"]), Counter())
        counts["count"] += 1
        counts["agree"] += int(bool(row["agree"]))
    conjugators = tuple(random_word(substream(seed, "theorem_conjugator", k), genus, 6) for k in range(4))
    instances = theorem_instances(ctx, field_model, conjugators)
    agreed = sum(1 for row in pairs if row["agree"])
    torus_rows = [row for row in pairs if row["cover_type"] == CoverType.PUNCTURED_TORUS.value]
    torus_zero = all(row["d_omega"] == 0 and row["d_trans"] == 0 for row in torus_rows)
    if not torus_zero:
        logger.warning(f"compare-defects: nonzero defect on a punctured-torus pair ({len(torus_rows)} such pairs)")
    logger.info(f"compare-defects: {agreed}/{samples} pairs agree")
    return {
        "params": {"genus": genus, "samples": samples, "maxlen": maxlen, "seed": seed, "field": field_model.name},
        "pairs": pairs,
        "theorem_instances": instances,
        "summary": {
            "agree_rate": agreed / samples if samples else 0.0,
            "by_cover_type": {
                kind: {"count": counts["count"], "agree": counts["agree"]} for kind, counts in sorted(by_cover.items())
            },
            "theorem_instances_agree": all(row["agree"] for row in instances),
            "punctured_torus_zero": torus_zero,
        },
    }


__all__ = [
    "Fatgraph",
    "FieldModel",
    "HalfEdge",
    "build_fatgraph",
    "builtin_fields",
    "compare_defects",
    "defect_omega",
    "junction_turning",
    "omega",
    "omega_difference",
    "petal_turning",
    "theorem_instances",
    "turning",
]
