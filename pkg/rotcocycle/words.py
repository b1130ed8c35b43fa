"""
Exact free-group arithmetic on F_2g.

Letters are signed generator indices: ``2i-1`` is ``a_i``, ``2i`` is ``b_i`` and a
negative sign is the inverse letter. Every :class:`Word` is freely reduced and
tagged with its genus.

Examples:
    >>> from rotcocycle.words import reduce, relator
    >>> reduce([1, 2, -2, 3], genus=2).letters
    (1, 3)
    >>> len(relator(3))
    12
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .constants import DEFAULT_MAX_WORD_LENGTH, MIN_GENUS
from .errors import GenusError, WordError, WordLengthError
from .types import AbelianVector, Letters


def check_genus(genus: int) -> int:
    if isinstance(genus, bool) or not isinstance(genus, int):
        raise GenusError(f"genus must be an int; got: {genus!r}")
    if genus < MIN_GENUS:
        raise GenusError(f"genus must be >= {MIN_GENUS} (hyperbolic surfaces only); got: {genus}")
    return genus


def same_genus(*genera: int) -> int:
    first = genera[0]
    for other in genera[1:]:
        if other != first:
            raise GenusError(f"genus mismatch: {first} vs {other}")
    return first


def a(i: int) -> int:
    """Letter of the generator ``a_i``."""
    return 2 * i - 1


def b(i: int) -> int:
    """Letter of the generator ``b_i``."""
    return 2 * i


def handle_of(letter: int) -> int:
    return (abs(letter) + 1) // 2


def is_a(letter: int) -> bool:
    return abs(letter) % 2 == 1


@dataclass(frozen=True, slots=True)
class Word:
    """A freely reduced word in F_2g.

    Construct words with :func:`reduce` (or :func:`word`); the constructor only
    validates.
    """

    genus: int
    letters: Letters = ()

    def __post_init__(self) -> None:
        check_genus(self.genus)
        top = 2 * self.genus
        previous = 0
        for letter in self.letters:
            if letter == 0 or abs(letter) > top:
                raise WordError(f"letter {letter} out of range for genus {self.genus} (valid: ±1..±{top})")
            if letter == -previous:
                raise WordError(f"word is not freely reduced: {self.letters}")
            previous = letter

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def __str__(self) -> str:
        from .notation import format_word

        return format_word(self)

    def inverse(self) -> Word:
        return invert(self)


def free_reduce(letters: Iterable[int]) -> list[int]:
    """Cancel adjacent ``x x⁻¹`` pairs with a single stack pass."""
    stack: list[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return stack


def reduce(raw: Iterable[int], genus: int, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> Word:
    """Return the freely reduced word of a letter sequence.

    Args:
        raw: Signed generator indices.
        genus: Surface genus (>= 2).
        max_length: Cap on the reduced length.

    Returns:
        Word: The unique freely reduced form.

    Raises:
        WordError: If a letter is zero or out of range.
        WordLengthError: If the reduced word exceeds ``max_length``.
    """
    check_genus(genus)
    top = 2 * genus
    letters = list(raw)
    for letter in letters:
        if isinstance(letter, bool) or not isinstance(letter, int) or letter == 0 or abs(letter) > top:
            raise WordError(f"letter {letter!r} out of range for genus {genus} (valid: ±1..±{top})")
    stack = free_reduce(letters)
    if len(stack) > max_length:
        raise WordLengthError(f"reduced word has {len(stack)} letters, cap is {max_length}")
    return Word(genus, tuple(stack))


def word(genus: int, *letters: int) -> Word:
    return reduce(letters, genus)


def empty(genus: int) -> Word:
    return Word(check_genus(genus), ())


def generator(genus: int, letter: int) -> Word:
    return reduce((letter,), genus)


def multiply(u: Word, v: Word, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> Word:
    genus = same_genus(u.genus, v.genus)
    return reduce(u.letters + v.letters, genus, max_length)


def invert(u: Word) -> Word:
    return Word(u.genus, tuple(-letter for letter in reversed(u.letters)))


def conjugate(u: Word, by: Word, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> Word:
    """Return ``by⁻¹ · u · by``."""
    genus = same_genus(u.genus, by.genus)
    return reduce(invert(by).letters + u.letters + by.letters, genus, max_length)


def commutator(u: Word, v: Word) -> Word:
    """Return ``[u, v] = u v u⁻¹ v⁻¹``."""
    genus = same_genus(u.genus, v.genus)
    return reduce(u.letters + v.letters + invert(u).letters + invert(v).letters, genus)


def relator_letters(genus: int) -> Letters:
    letters: list[int] = []
    for i in range(1, genus + 1):
        letters.extend((a(i), b(i), -a(i), -b(i)))
    return tuple(letters)


def relator(genus: int) -> Word:
    """The surface relator ``c = [a1,b1]···[ag,bg]`` (length 4g)."""
    return Word(check_genus(genus), relator_letters(genus))


def abelianize(u: Word) -> AbelianVector:
    """Exponent sums per generator, ordered ``a1, b1, ..., ag, bg``."""
    counts = [0] * (2 * u.genus)
    for letter in u.letters:
        counts[abs(letter) - 1] += 1 if letter > 0 else -1
    return tuple(counts)


def symplectic_form(x: AbelianVector, y: AbelianVector) -> int:
    """``Σ_k (x_{a_k} y_{b_k} − x_{b_k} y_{a_k})``."""
    if len(x) != len(y):
        raise GenusError(f"abelian vectors of different length: {len(x)} vs {len(y)}")
    return sum(x[k] * y[k + 1] - x[k + 1] * y[k] for k in range(0, len(x), 2))


def letter_pairing(x: int, y: int) -> int:
    """Symplectic pairing of two signed letters (``⟨a_i, b_i⟩ = 1``)."""
    kx, ky = abs(x), abs(y)
    if handle_of(kx) != handle_of(ky) or kx == ky:
        return 0
    sign = 1 if (x > 0) == (y > 0) else -1
    return sign if kx % 2 == 1 else -sign


def intersection(u: Word, v: Word) -> int:
    """Algebraic intersection number of the homology classes of ``u`` and ``v``."""
    same_genus(u.genus, v.genus)
    return symplectic_form(abelianize(u), abelianize(v))


def intersection_matrix(genus: int) -> tuple[tuple[int, ...], ...]:
    size = 2 * check_genus(genus)
    return tuple(tuple(letter_pairing(k + 1, m + 1) for m in range(size)) for k in range(size))


def cyclic_reduce(u: Word) -> tuple[Word, Word]:
    """Split ``u = t⁻¹ · core · t`` with ``core`` cyclically reduced.

    Returns:
        tuple[Word, Word]: ``(core, t)``.
    """
    letters = u.letters
    lo, hi = 0, len(letters) - 1
    while lo < hi and letters[lo] == -letters[hi]:
        lo += 1
        hi -= 1
    core = Word(u.genus, letters[lo : hi + 1])
    conjugator = Word(u.genus, letters[hi + 1 :])
    return core, conjugator


def concatenation_is_reduced(u: Word, v: Word) -> bool:
    return not u.letters or not v.letters or u.letters[-1] != -v.letters[0]


__all__ = [
    "Word",
    "a",
    "b",
    "abelianize",
    "check_genus",
    "commutator",
    "concatenation_is_reduced",
    "conjugate",
    "cyclic_reduce",
    "empty",
    "free_reduce",
    "generator",
    "handle_of",
    "intersection",
    "intersection_matrix",
    "invert",
    "is_a",
    "letter_pairing",
    "multiply",
    "reduce",
    "relator",
    "relator_letters",
    "same_genus",
    "symplectic_form",
    "word",
]
