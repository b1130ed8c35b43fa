"""
Mapping-class expressions.

Grammar (whitespace is free between tokens)::

    expr  := term ("*" term)*
    term  := atom ("^" int)?
    atom  := "push(" word ")" | "twist(" letter ["," ±1] ")" | "swap(" int ")"
           | "id" | "(" expr ")"

``*`` composes left to right: ``f * h`` applies ``f`` first. ``push(w)`` takes
word text in the syntax of :mod:`rotcocycle.notation`.

Examples:
    >>> from rotcocycle.expressions import parse_expression
    >>> from rotcocycle.mapclass import identity
    >>> parse_expression("push(a1) * push(a1)^-1", genus=2) == identity(2)
    True
"""

from __future__ import annotations

import re

from .constants import (
    EXPR_CLOSE,
    EXPR_COMPOSE,
    EXPR_IDENTITY,
    EXPR_INT_REGEX,
    EXPR_NAME_REGEX,
    EXPR_OPEN,
    EXPR_POWER,
    EXPR_PUSH,
    EXPR_SEPARATOR,
    EXPR_SWAP,
    EXPR_TWIST,
)
from .errors import ParseError, WordError
from .logging_config import get_logger
from .mapclass import MappingClass, compose, handle_swap, identity, inverse, point_push_word, twist
from .notation import parse_letter, parse_word
from .words import check_genus


_NAME_PATTERN = re.compile(EXPR_NAME_REGEX)
_INT_PATTERN = re.compile(EXPR_INT_REGEX)

logger = get_logger(__name__)


class ExpressionParser:
    """Recursive-descent parser for mapping-class expressions.

    One parser instance handles one input; use :func:`parse_expression`.
    """

    def __init__(self, text: str, genus: int):
        if not isinstance(text, str):
            raise TypeError(f"Expected string input, got {type(text).__name__}")
        self.text = text
        self.genus = check_genus(genus)
        self.pos = 0

    def parse(self) -> MappingClass:
        if not self.text.strip():
            raise self._err("empty expression", hint=f"Write {EXPR_IDENTITY!r} for the identity.")
        result = self._expr()
        self._skip()
        if self.pos != len(self.text):
            raise self._err(f"unexpected {self.text[self.pos]!r}", hint=f"Join factors with {EXPR_COMPOSE!r}.")
        logger.debug(f"Parsed expression {self.text!r} -> {result.label}")
        return result

    def _err(self, detail: str, hint: str | None = None, position: int | None = None) -> ParseError:
        return ParseError(detail, self.text, self.pos if position is None else position, hint)

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self, symbol: str) -> bool:
        self._skip()
        return self.text.startswith(symbol, self.pos)

    def _expect(self, symbol: str) -> None:
        if not self._peek(symbol):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self._err(f"expected {symbol!r}, found {found!r}")
        self.pos += len(symbol)

    def _integer(self) -> int:
        self._skip()
        match = _INT_PATTERN.match(self.text, self.pos)
        if not match:
            raise self._err("expected an integer")
        self.pos = match.end()
        return int(match.group(0))

    def _argument(self) -> tuple[str, int]:
        """Raw text up to the matching close paren (exclusive), and its offset."""
        self._expect(EXPR_OPEN)
        start = self.pos
        end = self.text.find(EXPR_CLOSE, start)
        if end < 0:
            raise self._err("unclosed argument list", hint=f"Add {EXPR_CLOSE!r}.")
        self.pos = end + len(EXPR_CLOSE)
        return self.text[start:end], start

    def _expr(self) -> MappingClass:
        result = self._term()
        while self._peek(EXPR_COMPOSE):
            self.pos += len(EXPR_COMPOSE)
            result = compose(result, self._term())
        return result

    def _term(self) -> MappingClass:
        base = self._atom()
        if not self._peek(EXPR_POWER):
            return base
        self.pos += len(EXPR_POWER)
        return power(base, self._integer())

    def _atom(self) -> MappingClass:
        self._skip()
        if self._peek(EXPR_OPEN):
            self.pos += len(EXPR_OPEN)
            inner = self._expr()
            self._expect(EXPR_CLOSE)
            return inner
        start = self.pos
        match = _NAME_PATTERN.match(self.text, self.pos)
        if not match:
            raise self._err("expected push(...), twist(...), swap(...), id or '('")
        name = match.group(0)
        self.pos = match.end()
        if name == EXPR_IDENTITY:
            return identity(self.genus)
        if name == EXPR_PUSH:
            body, offset = self._argument()
            try:
                return point_push_word(parse_word(body, self.genus))
            except ParseError as exc:
                raise self._err(f"bad word in push: {exc}", position=offset) from exc
        if name == EXPR_TWIST:
            body, offset = self._argument()
            parts = [part.strip() for part in body.split(EXPR_SEPARATOR)]
            if len(parts) not in (1, 2):
                raise self._err("twist takes a generator and an optional direction", position=offset)
            letter = parse_letter(parts[0], self.genus, self.text, offset)
            if letter < 0:
                raise self._err(
                    f"twist takes a generator, not the inverse {parts[0]!r}",
                    position=offset,
                    hint="Write twist(a1)^-1 or twist(a1, -1) for the inverse twist.",
                )
            direction = 1
            if len(parts) == 2:
                if parts[1] not in ("1", "+1", "-1"):
                    raise self._err("twist direction must be +1 or -1", position=offset)
                direction = int(parts[1])
            return twist(letter, direction, self.genus)
        if name == EXPR_SWAP:
            body, offset = self._argument()
            if not _INT_PATTERN.fullmatch(body.strip()):
                raise self._err("swap takes a handle index", position=offset)
            try:
                return handle_swap(int(body), self.genus)
            except WordError as exc:
                raise self._err(str(exc), position=offset) from exc
        raise self._err(f"unknown name {name!r}", position=start, hint="Known: push, twist, swap, id.")


def power(f: MappingClass, n: int) -> MappingClass:
    """``f`` composed with itself ``n`` times; negative ``n`` uses the inverse."""
    base = f if n >= 0 else inverse(f)
    result = identity(f.genus)
    for _ in range(abs(n)):
        result = compose(result, base)
    return result


def parse_expression(text: str, genus: int) -> MappingClass:
    """Parse an expression into a validated :class:`MappingClass`.

    Raises:
        TypeError: If text is not a string.
        ParseError: On syntax errors, with position and hint.
    """
    return ExpressionParser(text, genus).parse()


__all__ = ["ExpressionParser", "parse_expression", "power"]
