"""
Exception types for rotcocycle.

Every error subclasses a builtin (``ValueError``, ``ArithmeticError`` or
``AssertionError``) so callers can keep catching the builtin family.
"""


class GenusError(ValueError):
    """Genus below 2, or operands built for different genera."""


class WordError(ValueError):
    """A letter does not name a generator of the configured genus."""


class WordLengthError(WordError):
    """A word exceeded the configured cap or evaluation budget."""


class ParseError(ValueError):
    """Word or mapping-class expression text could not be parsed.

    Attributes:
        position: Zero-based character offset of the offending token.
        text: The full input text.
    """

    def __init__(self, detail: str, text: str, position: int, hint: str | None = None):
        self.position = position
        self.text = text
        snippet = text[max(0, position - 20) : position + 20]
        message = f"Position {position}: {detail}. Snippet: {snippet!r}"
        message = f"{message} Hint: {hint}" if hint else f"{message} Hint: Check the syntax near this position."
        super().__init__(message)


class MappingClassError(ValueError):
    """An automorphism does not fix the relator or its inverse does not invert it."""


class RepresentationError(ValueError):
    """No Fuchsian side-pairing candidate passed validation."""


class FieldModelError(ValueError):
    """Angle layout is not a valid combinatorial vector field."""


class ConfigError(ValueError):
    """Run configuration is invalid."""


class CertificationError(ArithmeticError):
    """A quantity claimed to be an integer could not be certified.

    Attributes:
        residual: Distance from the nearest integer (``inf`` on overflow).
    """

    def __init__(self, message: str, residual: float = float("inf")):
        self.residual = residual
        super().__init__(message)


class CocycleBoundError(AssertionError):
    """A proven identity failed: tau left {-1, 0, 1} or R lost additivity."""


__all__ = [
    "GenusError",
    "WordError",
    "WordLengthError",
    "ParseError",
    "MappingClassError",
    "RepresentationError",
    "FieldModelError",
    "ConfigError",
    "CertificationError",
    "CocycleBoundError",
]
