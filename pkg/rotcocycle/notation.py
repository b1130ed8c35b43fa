"""
Text syntax for words.

Tokens are whitespace separated: ``a<i>`` and ``b<i>`` are generators, the
upper-case ``A<i>`` and ``B<i>`` their inverses, and ``-`` alone is the empty
word.

Key Functions:
    - letter_token: Token for one signed letter
    - format_word: Text form of a word
    - parse_word: Parse text into a reduced word

Examples:
    >>> from rotcocycle.notation import parse_word, format_word
    >>> format_word(parse_word("a1 B2 A1", genus=2))
    'a1 B2 A1'
    >>> format_word(parse_word("a1 A1", genus=2))
    '-'
"""

import re

from .constants import (
    DEFAULT_MAX_WORD_LENGTH,
    EMPTY_WORD_TOKEN,
    GENERATOR_A,
    GENERATOR_B,
    INVERSE_A,
    INVERSE_B,
    WORD_TOKEN_REGEX,
)
from .errors import ParseError, WordError
from .logging_config import get_logger
from .words import Word, handle_of, is_a, reduce


_WORD_TOKEN_PATTERN = re.compile(WORD_TOKEN_REGEX)
_WHITESPACE_PATTERN = re.compile(r"\S+")

logger = get_logger(__name__)


def letter_token(letter: int) -> str:
    """Token for a signed letter.

    Examples:
        >>> letter_token(1), letter_token(-4)
        ('a1', 'B2')
    """
    if letter == 0:
        raise WordError("letter 0 does not name a generator")
    if is_a(letter):
        prefix = GENERATOR_A if letter > 0 else INVERSE_A
    else:
        prefix = GENERATOR_B if letter > 0 else INVERSE_B
    return f"{prefix}{handle_of(letter)}"


def format_word(w: Word) -> str:
    if not w.letters:
        return EMPTY_WORD_TOKEN
    return " ".join(letter_token(letter) for letter in w.letters)


def parse_letter(token: str, genus: int, text: str = "", position: int = 0) -> int:
    match = _WORD_TOKEN_PATTERN.match(token)
    if not match:
        raise ParseError(
            f"unknown token {token!r}",
            text or token,
            position,
            hint="Use a<i>, b<i> for generators, A<i>, B<i> for inverses, '-' for the empty word.",
        )
    prefix, index = match.group(1), int(match.group(2))
    if index > genus:
        raise ParseError(
            f"handle index {index} exceeds genus {genus}",
            text or token,
            position,
            hint=f"Handles are numbered 1..{genus}.",
        )
    letter = 2 * index - 1 if prefix in (GENERATOR_A, INVERSE_A) else 2 * index
    return -letter if prefix in (INVERSE_A, INVERSE_B) else letter


def parse_word(text: str, genus: int, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> Word:
    """Parse word text into a freely reduced :class:`Word`.

    Args:
        text: Whitespace-separated tokens, or ``-`` for the empty word.
        genus: Surface genus.
        max_length: Cap on the reduced word length.

    Raises:
        TypeError: If text is not a string.
        ParseError: On unknown tokens, out-of-range handles, or a stray ``-``.
    """
    if not isinstance(text, str):
        raise TypeError(f"parse_word() expects a string, got {type(text).__name__}")
    tokens = [(m.group(0), m.start()) for m in _WHITESPACE_PATTERN.finditer(text)]
    if not tokens:
        raise ParseError("empty input", text, 0, hint=f"Write {EMPTY_WORD_TOKEN!r} for the empty word.")
    if len(tokens) == 1 and tokens[0][0] == EMPTY_WORD_TOKEN:
        return reduce((), genus)
    letters = []
    for token, position in tokens:
        if token == EMPTY_WORD_TOKEN:
            raise ParseError(
                "'-' must stand alone", text, position, hint="The empty-word marker cannot be mixed with letters."
            )
        letters.append(parse_letter(token, genus, text, position))
    result = reduce(letters, genus, max_length)
    logger.debug(f"Parsed word: {len(letters)} tokens -> {len(result)} letters")
    return result


__all__ = ["format_word", "letter_token", "parse_letter", "parse_word"]
