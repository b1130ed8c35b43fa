"""
Dehn's algorithm for the surface group F_2g / ⟨⟨c⟩⟩.

The standard presentation is C'(1/6) for g >= 2 with single-letter pieces, so
any subword of length 2g+1 of a rotation of ``c^{±1}`` determines the rotation.
Replacements are applied on a stack as letters arrive, which keeps the pass
linear; each replacement also records the signed relator count so callers can
carry the central element the relator lifts to.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import GenusError
from .logging_config import get_logger
from .types import Letters
from .words import Word, check_genus, cyclic_reduce, free_reduce, invert, relator_letters, same_genus


logger = get_logger(__name__)


@lru_cache(maxsize=16)
def piece_table(genus: int) -> dict[Letters, tuple[Letters, int]]:
    """Map every length-(2g+1) prefix of a rotation of ``c^{±1}`` to ``(rotation, ε)``.

    Raises:
        GenusError: If two rotations share a window (cannot happen for g >= 2).
    """
    check_genus(genus)
    window = 2 * genus + 1
    base = relator_letters(genus)
    inverse = tuple(-x for x in reversed(base))
    table: dict[Letters, tuple[Letters, int]] = {}
    for sign, rel in ((1, base), (-1, inverse)):
        for shift in range(len(rel)):
            rotation = rel[shift:] + rel[:shift]
            key = rotation[:window]
            if key in table:
                raise GenusError(f"relator windows collide for genus {genus}: {key}")
            table[key] = (rotation, sign)
    return table


def _linear_pass(genus: int, letters: Letters) -> tuple[list[int], int]:
    window = 2 * genus + 1
    table = piece_table(genus)
    stack: list[int] = []
    pending = list(reversed(letters))
    count = 0
    while pending:
        letter = pending.pop()
        if stack and stack[-1] == -letter:
            stack.pop()
            continue
        stack.append(letter)
        if len(stack) < window:
            continue
        hit = table.get(tuple(stack[-window:]))
        if hit is None:
            continue
        rotation, sign = hit
        del stack[-window:]
        # piece s of s·t = c^ε becomes t⁻¹; pending pops from the end
        pending.extend(-x for x in rotation[window:])
        count += sign
    return stack, count


def dehn_reduce(w: Word) -> tuple[Word, int]:
    """Dehn-reduce ``w`` without cyclic moves.

    Returns:
        tuple[Word, int]: ``(u, k)`` with ``w = u`` in the surface group. In F_2g,
        ``w`` is obtained from ``u`` by inserting ``k`` net conjugates of ``c``
        (signed), so any lift sending ``c`` to a central element ``z`` gives
        ``lift(w) = lift(u) · z^k``.
    """
    stack, count = _linear_pass(w.genus, w.letters)
    return Word(w.genus, tuple(stack)), count


def _wrapping_piece(genus: int, letters: Letters) -> int | None:
    window = 2 * genus + 1
    n = len(letters)
    if n < window:
        return None
    table = piece_table(genus)
    doubled = letters + letters[: window - 1]
    for start in range(n):
        if doubled[start : start + window] in table:
            return start
    return None


def dehn_reduce_cyclic(w: Word) -> tuple[Word, int]:
    """Cyclic Dehn reduction.

    Returns:
        tuple[Word, int]: ``(u, k)`` where ``u`` is cyclically reduced, contains no
        cyclic piece longer than 2g, and ``w`` is conjugate to ``u`` times ``k``
        signed relator conjugates. ``u`` is empty iff ``w`` is trivial.
    """
    genus = w.genus
    current, count = dehn_reduce(w)
    while True:
        core, _ = cyclic_reduce(current)
        start = _wrapping_piece(genus, core.letters)
        if start is None:
            return core, count
        rotated = core.letters[start:] + core.letters[:start]
        stack, extra = _linear_pass(genus, rotated)
        logger.debug(f"cyclic piece at {start}, length {len(core)} -> {len(stack)}")
        current = Word(genus, tuple(free_reduce(stack)))
        count += extra


def is_trivial(w: Word) -> bool:
    return not dehn_reduce_cyclic(w)[0]


def surface_equal(u: Word, v: Word) -> bool:
    """Word problem: is ``u·v⁻¹`` in the normal closure of the relator?

    Examples:
        >>> from rotcocycle.words import relator, empty
        >>> surface_equal(relator(2), empty(2))
        True
    """
    genus = same_genus(u.genus, v.genus)
    product = Word(genus, tuple(free_reduce(u.letters + invert(v).letters)))
    return is_trivial(product)


__all__ = ["dehn_reduce", "dehn_reduce_cyclic", "is_trivial", "piece_table", "surface_equal"]
