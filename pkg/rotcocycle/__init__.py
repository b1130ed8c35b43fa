"""
rotcocycle: the rotation-number crossed homomorphism of a punctured surface.

For a closed surface of genus g >= 2 with one marked disk, this package
computes exact integer invariants attached to the discrete faithful action of
the surface group on the circle at infinity:

- translation numbers ``trans(G̃(w))`` of lifted words and the Euler cocycle τ,
- the crossed homomorphism ``R(φ)(γ) = trans(G̃(f(γ))) − trans(G̃(γ))`` for
  relator-fixing automorphisms ``f`` (point pushes, Dehn twists, composites),
- combinatorial winding numbers against vector fields on the thickened spine
  and their defects.

Quick Start:
    >>> import rotcocycle
    >>> from rotcocycle.words import relator
    >>> ctx = rotcocycle.context(2)
    >>> rotcocycle.trans_word(ctx, relator(2))
    -2
    >>> phi = rotcocycle.parse_expression("push(a1)", genus=2)
    >>> rotcocycle.R(ctx, phi, rotcocycle.parse_word("b1", genus=2))
    -2

Debug Mode:
    Enable detailed logging with environment variable:
    $ ROTCOCYCLE_DEBUG=1 rotcocycle verify --suite circlelift
"""

from functools import lru_cache

from .constants import DEFAULT_EVAL_BUDGET, DEFAULT_PRECISION, PRECISION_EXTENDED, PRECISION_POLICIES


# Version info
__version__ = "0.1.0"
from .circlelift import LiftContext, evaluate_word, lift_word, tau, trans, trans_word  # noqa: E402
from .cocycle import C_f, R, R_on_homology, classify_cover, defect, morita_potential  # noqa: E402
from .errors import (  # noqa: E402
    CertificationError,
    CocycleBoundError,
    ConfigError,
    GenusError,
    ParseError,
    WordError,
)
from .expressions import parse_expression  # noqa: E402
from .fuchs import build_rep  # noqa: E402
from .mapclass import MappingClass, compose, inverse, point_push, point_push_word, twist  # noqa: E402
from .notation import format_word, parse_word  # noqa: E402
from .types import RunOptions  # noqa: E402
from .windnum import builtin_fields, defect_omega, omega  # noqa: E402
from .words import Word, check_genus, relator  # noqa: E402


_OPTION_KEYS = {"precision", "eval_budget", "generator_offsets"}


@lru_cache(maxsize=32)
def _cached_context(genus: int, precision: str, eval_budget: int, offsets: tuple[int, ...]) -> LiftContext:
    return LiftContext(build_rep(genus), offsets, precision, eval_budget)  # type: ignore[arg-type]


def context(genus: int = 2, options: RunOptions | dict | None = None) -> LiftContext:
    """Build (or reuse) the lift context for ``genus``.

    Args:
        genus: Surface genus (>= 2).
        options: Optional :class:`~rotcocycle.types.RunOptions` with keys:
            - precision (str): ``"double"``, ``"extended"`` or ``"extended-on-demand"``
              (default: ``"extended-on-demand"``)
            - eval_budget (int): Letters multiplied per evaluation (default: 256)
            - generator_offsets (tuple[int, ...]): Lift choice per generator (default: zeros)

    Returns:
        LiftContext: Cached per distinct argument set.

    Raises:
        TypeError: If options is not a dict.
        GenusError: If genus < 2.
        ConfigError: On unsupported keys or invalid values.
        RepresentationError: If the representation cannot be built.

    Examples:
        >>> import rotcocycle
        >>> rotcocycle.context(2) is rotcocycle.context(2)
        True
        >>> rotcocycle.context(2, {"precision": "double"}).precision
        'double'
    """
    check_genus(genus)
    if options is not None and not isinstance(options, dict):
        raise TypeError(f"options must be a dict, got {type(options).__name__}")
    opts = options or {}
    invalid = set(opts) - _OPTION_KEYS
    if invalid:
        raise ConfigError(f"options contains unsupported keys; allowed: {sorted(_OPTION_KEYS)}; got: {sorted(invalid)}")
    precision = opts.get("precision", DEFAULT_PRECISION)
    if precision not in (*PRECISION_POLICIES, PRECISION_EXTENDED):
        raise ConfigError(f"precision must be one of {PRECISION_POLICIES + (PRECISION_EXTENDED,)}; got: {precision!r}")
    eval_budget = opts.get("eval_budget", DEFAULT_EVAL_BUDGET)
    if isinstance(eval_budget, bool) or not isinstance(eval_budget, int) or eval_budget < 1:
        raise ConfigError(f"eval_budget must be a positive int; got: {eval_budget!r}")
    offsets = tuple(opts.get("generator_offsets", ()))
    return _cached_context(genus, precision, eval_budget, offsets)


__all__ = [
    # Version
    "__version__",
    # API
    "context",
    "trans",
    "trans_word",
    "tau",
    "evaluate_word",
    "lift_word",
    "R",
    "R_on_homology",
    "C_f",
    "defect",
    "morita_potential",
    "classify_cover",
    "omega",
    "defect_omega",
    "builtin_fields",
    "parse_word",
    "format_word",
    "parse_expression",
    "point_push",
    "point_push_word",
    "twist",
    "compose",
    "inverse",
    "relator",
    "build_rep",
    # Types
    "Word",
    "MappingClass",
    "LiftContext",
    "RunOptions",
    # Errors
    "CertificationError",
    "CocycleBoundError",
    "ConfigError",
    "GenusError",
    "ParseError",
    "WordError",
]
