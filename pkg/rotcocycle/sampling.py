"""
Seeded sampling of words and mapping classes.

Every sample draws from its own ``random.Random`` seeded by the string
``"{seed}:{label}:{index}"``, so a sample depends only on its seed, property
label and index and never on execution order or worker count.
"""

from __future__ import annotations

import random
from collections.abc import Sequence

from .constants import DEFAULT_MAXLEN
from .mapclass import MappingClass, builtin_classes, compose_all
from .words import Word, check_genus, reduce


def substream(seed: int, label: str, index: int) -> random.Random:
    """Independent generator for one sample.

    Examples:
        >>> substream(0, "tau", 3).random() == substream(0, "tau", 3).random()
        True
    """
    return random.Random(f"{seed}:{label}:{index}")


def random_word(rng: random.Random, genus: int, maxlen: int = DEFAULT_MAXLEN, min_length: int = 0) -> Word:
    """Uniform length in ``[min_length, maxlen]``, then a non-backtracking letter walk."""
    check_genus(genus)
    length = rng.randint(min_length, maxlen)
    top = 2 * genus
    letters: list[int] = []
    while len(letters) < length:
        letter = rng.choice((1, -1)) * rng.randint(1, top)
        if letters and letters[-1] == -letter:
            continue
        letters.append(letter)
    return reduce(letters, genus)


def random_nontrivial_word(rng: random.Random, genus: int, maxlen: int = DEFAULT_MAXLEN) -> Word:
    return random_word(rng, genus, maxlen, min_length=1)


def random_reduced_pair(rng: random.Random, genus: int, maxlen: int = DEFAULT_MAXLEN) -> tuple[Word, Word]:
    """Two words whose concatenation is already freely reduced."""
    while True:
        first = random_word(rng, genus, maxlen)
        second = random_word(rng, genus, maxlen)
        if not first or not second or first.letters[-1] != -second.letters[0]:
            return first, second


def random_mapping_class(
    rng: random.Random,
    genus: int,
    max_factors: int = 2,
    pool: Sequence[MappingClass] | None = None,
) -> MappingClass:
    """Composite of 1..max_factors built-in pushes and twists."""
    choices = list(pool) if pool is not None else list(builtin_classes(genus).values())
    factors = [rng.choice(choices) for _ in range(rng.randint(1, max_factors))]
    return compose_all(factors, genus) if len(factors) > 1 else factors[0]


def random_offsets(rng: random.Random, genus: int, bound: int = 2) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(2 * genus))


__all__ = [
    "random_mapping_class",
    "random_nontrivial_word",
    "random_offsets",
    "random_reduced_pair",
    "random_word",
    "substream",
]
