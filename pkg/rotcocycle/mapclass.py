"""
Mapping classes as relator-fixing automorphisms of F_2g.

A :class:`MappingClass` stores the images of the generators under the
automorphism and under its inverse, and refuses to exist unless the
automorphism fixes the relator ``c`` exactly and the two image tables invert
each other.

Conventions:
    - ``compose(f, h)`` applies ``f`` first, i.e. it is ``h ∘ f``; it represents
      the product φη when f represents φ and h represents η.
    - Point pushes descend to ``x ↦ γ⁻¹ x γ`` on the surface group, the same side as
      :func:`rotcocycle.words.conjugate`.

Point-push formulas beyond ``P(a1)`` are derived by conjugating ``P(a1)`` with
explicit relator-fixing automorphisms (a handle rotation σ built from twists,
and handle swaps), so every derived class is valid by construction and is
validated again when built.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce as fold

from .constants import DEFAULT_MAX_WORD_LENGTH
from .dehn import dehn_reduce
from .errors import MappingClassError, WordError
from .logging_config import get_logger
from .notation import format_word, letter_token
from .words import (
    Word,
    a,
    abelianize,
    b,
    check_genus,
    commutator,
    conjugate,
    free_reduce,
    generator,
    invert,
    multiply,
    reduce,
    relator,
    relator_letters,
    same_genus,
)


logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class MappingClass:
    """A relator-fixing automorphism of F_2g together with its inverse.

    Attributes:
        genus: Surface genus.
        forward: Images of ``a1, b1, ..., ag, bg``.
        backward: Images of the generators under the inverse automorphism.
        label: Human-readable provenance.
    """

    genus: int
    forward: tuple[Word, ...]
    backward: tuple[Word, ...]
    label: str = field(default="f")

    def __post_init__(self) -> None:
        check_genus(self.genus)
        size = 2 * self.genus
        if len(self.forward) != size or len(self.backward) != size:
            raise MappingClassError(f"{self.label}: expected {size} generator images")
        for image in self.forward + self.backward:
            same_genus(self.genus, image.genus)
        c = relator(self.genus)
        if _substitute(self.forward, c.letters) != list(c.letters):
            raise MappingClassError(
                f"{self.label} does not fix the relator: c -> {format_word(apply(self, c))}. "
                "Hint: only automorphisms with f(c) = c represent mapping classes here."
            )
        for k in range(size):
            letter = k + 1
            if _substitute(self.backward, self.forward[k].letters) != [letter]:
                raise MappingClassError(f"{self.label}: backward images do not invert forward at {letter_token(letter)}")
            if _substitute(self.forward, self.backward[k].letters) != [letter]:
                raise MappingClassError(f"{self.label}: forward images do not invert backward at {letter_token(letter)}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MappingClass):
            return NotImplemented
        return self.genus == other.genus and self.forward == other.forward

    def __hash__(self) -> int:
        return hash((self.genus, self.forward))

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    @cached_property
    def max_image_length(self) -> int:
        return max(len(image) for image in self.forward)

    def describe(self) -> dict[str, str]:
        return {letter_token(k + 1): format_word(image) for k, image in enumerate(self.forward)}


def _substitute(images: Sequence[Word], letters: Iterable[int]) -> list[int]:
    out: list[int] = []
    for letter in letters:
        image = images[abs(letter) - 1].letters
        if letter > 0:
            out.extend(image)
        else:
            out.extend(-x for x in reversed(image))
    return free_reduce(out)


def apply(f: MappingClass, w: Word, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> Word:
    """Apply the automorphism letterwise and freely reduce.

    Raises:
        GenusError: If genera differ.
        WordLengthError: If the image exceeds ``max_length``.
    """
    same_genus(f.genus, w.genus)
    return reduce(_substitute(f.forward, w.letters), f.genus, max_length)


def apply_inverse(f: MappingClass, w: Word, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> Word:
    same_genus(f.genus, w.genus)
    return reduce(_substitute(f.backward, w.letters), f.genus, max_length)


def identity(genus: int) -> MappingClass:
    images = tuple(generator(genus, k + 1) for k in range(2 * check_genus(genus)))
    return MappingClass(genus, images, images, "id")


def compose(f: MappingClass, h: MappingClass) -> MappingClass:
    """Return ``h ∘ f`` (apply ``f`` first), which represents φη.

    Examples:
        >>> from rotcocycle.mapclass import point_push, compose, inverse, identity
        >>> f = point_push(1, genus=2)
        >>> compose(f, inverse(f)) == identity(2)
        True
    """
    genus = same_genus(f.genus, h.genus)
    forward = tuple(apply(h, image) for image in f.forward)
    backward = tuple(apply_inverse(f, image) for image in h.backward)
    return MappingClass(genus, forward, backward, _join_labels(f.label, h.label))


def compose_all(classes: Sequence[MappingClass], genus: int) -> MappingClass:
    return fold(compose, classes, identity(genus))


def inverse(f: MappingClass) -> MappingClass:
    if f.label.endswith("^-1"):
        label = f.label[: -len("^-1")]
    elif " " in f.label:
        label = f"({f.label})^-1"
    else:
        label = f"{f.label}^-1"
    return MappingClass(f.genus, f.backward, f.forward, label)


def _join_labels(first: str, second: str) -> str:
    if first == "id":
        return second
    if second == "id":
        return first
    return f"{first} * {second}"


def c_conjugate(f: MappingClass, k: int) -> MappingClass:
    """Alternative representative ``γ ↦ c^k · f(γ) · c^-k`` of the same class.

    The relator is still fixed: ``c^k c c^-k = c``.
    """
    c = relator(f.genus)
    power = _power(c, k)
    forward = tuple(conjugate(image, invert(power)) for image in f.forward)
    backward = tuple(conjugate(image, power) for image in f.backward)
    return MappingClass(f.genus, forward, backward, f"c^{k}.{f.label}.c^{-k}")


def _power(w: Word, k: int) -> Word:
    base = w if k >= 0 else invert(w)
    result = Word(w.genus, ())
    for _ in range(abs(k)):
        result = multiply(result, base)
    return result


def _check_generator(letter: int, genus: int) -> int:
    if isinstance(letter, bool) or not isinstance(letter, int) or letter == 0 or abs(letter) > 2 * genus:
        raise WordError(f"generator {letter!r} out of range for genus {genus}")
    return letter


@lru_cache(maxsize=256)
def twist(letter: int, direction: int = 1, genus: int = 2) -> MappingClass:
    """Dehn twist about the curve of generator ``letter``.

    Twisting about ``a_i`` sends ``b_i ↦ b_i a_i^d``; twisting about ``b_i`` sends
    ``a_i ↦ a_i b_i^d`` (d = ±1). Every other generator is fixed.

    Raises:
        WordError: If ``letter`` is out of range or an inverse letter; the inverse
            twist is ``direction=-1``.
    """
    check_genus(genus)
    if _check_generator(letter, genus) < 0:
        raise WordError(f"twist curve must be a generator, got {letter_token(letter)}; use direction=-1 instead")
    if direction not in (1, -1):
        raise ValueError(f"direction must be +1 or -1; got: {direction!r}")
    partner = letter + 1 if letter % 2 == 1 else letter - 1
    size = 2 * genus
    forward = [generator(genus, k + 1) for k in range(size)]
    backward = list(forward)
    forward[partner - 1] = reduce((partner, direction * letter), genus)
    backward[partner - 1] = reduce((partner, -direction * letter), genus)
    name = f"twist({letter_token(letter)})" + ("" if direction == 1 else "^-1")
    return MappingClass(genus, tuple(forward), tuple(backward), name)


@lru_cache(maxsize=64)
def handle_swap(i: int, genus: int) -> MappingClass:
    """Swap handles ``i`` and ``i+1`` (relator-fixing).

    ``a_i ↦ a_{i+1}``, ``b_i ↦ b_{i+1}``, ``a_{i+1} ↦ K⁻¹ a_i K``,
    ``b_{i+1} ↦ K⁻¹ b_i K`` with ``K = [a_{i+1}, b_{i+1}]``.
    """
    check_genus(genus)
    if not 1 <= i < genus:
        raise WordError(f"handle swap index must be in 1..{genus - 1}; got: {i}")
    size = 2 * genus
    gens = [generator(genus, k + 1) for k in range(size)]
    k_next = commutator(gens[a(i + 1) - 1], gens[b(i + 1) - 1])
    k_here = commutator(gens[a(i) - 1], gens[b(i) - 1])
    forward = list(gens)
    backward = list(gens)
    forward[a(i) - 1] = gens[a(i + 1) - 1]
    forward[b(i) - 1] = gens[b(i + 1) - 1]
    forward[a(i + 1) - 1] = conjugate(gens[a(i) - 1], k_next)
    forward[b(i + 1) - 1] = conjugate(gens[b(i) - 1], k_next)
    backward[a(i) - 1] = conjugate(gens[a(i + 1) - 1], invert(k_here))
    backward[b(i) - 1] = conjugate(gens[b(i + 1) - 1], invert(k_here))
    backward[a(i + 1) - 1] = gens[a(i) - 1]
    backward[b(i + 1) - 1] = gens[b(i) - 1]
    return MappingClass(genus, tuple(forward), tuple(backward), f"swap({i})")


def _push_a1(genus: int) -> MappingClass:
    c = relator(genus)
    c_inv = invert(c)
    a1 = generator(genus, 1)
    a1_inv = invert(a1)
    size = 2 * genus
    forward = []
    backward = []
    for k in range(size):
        x = generator(genus, k + 1)
        if k == 0:
            forward.append(x)
            backward.append(x)
        elif k == 1:
            forward.append(reduce(a1_inv.letters + c.letters + x.letters + a1.letters, genus))
            backward.append(reduce(c_inv.letters + a1.letters + x.letters + a1_inv.letters, genus))
        else:
            forward.append(reduce(a1_inv.letters + c.letters + x.letters + c_inv.letters + a1.letters, genus))
            backward.append(reduce(c_inv.letters + a1.letters + x.letters + a1_inv.letters + c.letters, genus))
    return MappingClass(genus, tuple(forward), tuple(backward), "push(a1)")


def _conjugate_class(f: MappingClass, by: MappingClass, label: str) -> MappingClass:
    """``by ∘ f ∘ by⁻¹`` as a function."""
    result = compose(compose(inverse(by), f), by)
    return MappingClass(result.genus, result.forward, result.backward, label)


@lru_cache(maxsize=256)
def point_push(letter: int, genus: int = 2) -> MappingClass:
    """Point push along a generator loop (negative letter: inverse push).

    The result descends to ``x ↦ γ⁻¹ x γ`` on the surface group, where ``γ`` is the
    generator.

    Raises:
        WordError: If the letter is out of range.
        MappingClassError: If a derived formula fails validation.
    """
    check_genus(genus)
    _check_generator(letter, genus)
    if letter < 0:
        pushed = point_push(-letter, genus)
        return MappingClass(genus, pushed.backward, pushed.forward, f"push({letter_token(letter)})")
    if letter == 1:
        return _push_a1(genus)
    if letter == 2:
        p_a1 = point_push(1, genus)
        sigma = compose_all([twist(2, 1, genus), twist(1, -1, genus), twist(2, 1, genus)], genus)
        q = _conjugate_class(p_a1, sigma, "push(a1 b1 A1)")
        return _conjugate_class(q, p_a1, "push(b1)")
    i = (letter + 1) // 2
    carry = compose_all([handle_swap(j, genus) for j in range(1, i)], genus)
    base = point_push(1 if letter % 2 == 1 else 2, genus)
    logger.debug(f"deriving push({letter_token(letter)}) from {base.label} via {carry.label}")
    return _conjugate_class(base, carry, f"push({letter_token(letter)})")


def point_push_word(w: Word) -> MappingClass:
    """Composite of per-letter pushes in word order; descends to conjugation by ``w``.

    Image lengths of the composite grow quickly with ``len(w)``; past a handful of
    letters use :func:`apply_push_word` or :func:`rotcocycle.cocycle.R_push_word`.
    """
    result = compose_all([point_push(letter, w.genus) for letter in w.letters], w.genus)
    return MappingClass(w.genus, result.forward, result.backward, f"push({format_word(w)})")


def apply_push_word(w: Word, x: Word) -> Word:
    """Image of ``x`` under ``point_push_word(w)``, as an element of the surface group.

    Applies the per-letter pushes in word order and Dehn-reduces after each one,
    so the composite automorphism is never built. The result is surface-equal to
    ``apply(point_push_word(w), x)`` and to ``w⁻¹ x w``.
    """
    same_genus(w.genus, x.genus)
    current = x
    for letter in w.letters:
        current, _ = dehn_reduce(apply(point_push(letter, w.genus), current))
    return current


def homology_action(f: MappingClass) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of the induced map on H₁; column k is the class of ``f(x_k)``."""
    columns = [abelianize(image) for image in f.forward]
    size = len(columns)
    return tuple(tuple(columns[k][row] for k in range(size)) for row in range(size))


def acts_trivially_on_homology(f: MappingClass) -> bool:
    size = 2 * f.genus
    matrix = homology_action(f)
    return all(matrix[r][k] == (1 if r == k else 0) for r in range(size) for k in range(size))


def builtin_classes(genus: int) -> dict[str, MappingClass]:
    """Pushes and twists of every generator, both directions, keyed by label."""
    classes: dict[str, MappingClass] = {}
    for k in range(1, 2 * check_genus(genus) + 1):
        for f in (point_push(k, genus), point_push(-k, genus), twist(k, 1, genus), twist(k, -1, genus)):
            classes[f.label] = f
    return classes


def relator_is_fixed(f: MappingClass) -> bool:
    return _substitute(f.forward, relator_letters(f.genus)) == list(relator_letters(f.genus))


__all__ = [
    "MappingClass",
    "acts_trivially_on_homology",
    "apply",
    "apply_inverse",
    "apply_push_word",
    "builtin_classes",
    "c_conjugate",
    "compose",
    "compose_all",
    "handle_swap",
    "homology_action",
    "identity",
    "inverse",
    "point_push",
    "point_push_word",
    "relator_is_fixed",
    "twist",
]
