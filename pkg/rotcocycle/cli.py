"""
Command-line interface.

Subcommands::

    rotcocycle verify [--suite NAME]
    rotcocycle trans --word W
    rotcocycle tau --alpha W --beta W
    rotcocycle r --phi EXPR [--gamma W]
    rotcocycle omega --word W [--field X|Y] [--closure cyclic|based]
    rotcocycle compare-defects [--field X|Y]
    rotcocycle rep-dump
    rotcocycle cf-diff [--phi EXPR ...]

Every report embeds the run configuration, the conventions in force and the
generator matrices. Feeding a report back through ``--config`` reproduces it
byte for byte.

Exit codes: 0 pass, 1 property failure, 2 usage error, 3 certification failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from . import __version__
from .circlelift import LiftContext, relator_translation, tau, trans_report
from .cocycle import R, R_on_homology, cf_difference_report
from .constants import (
    COMPOSITION_CONVENTION,
    CONJUGATION_CONVENTION,
    DEFAULT_COMPARE_SAMPLES,
    DEFAULT_EVAL_BUDGET,
    DEFAULT_MAX_WORD_LENGTH,
    DEFAULT_MAXLEN,
    DEFAULT_PRECISION,
    DEFAULT_SEED,
    EXIT_CERTIFICATION,
    EXIT_OK,
    EXIT_PROPERTY_FAILURE,
    EXIT_USAGE,
    FORMAT_JSON,
    MIN_GENUS,
    OUTPUT_FORMATS,
    PRECISION_POLICIES,
)
from .errors import (
    CertificationError,
    CocycleBoundError,
    ConfigError,
    FieldModelError,
    GenusError,
    MappingClassError,
    ParseError,
    RepresentationError,
    WordError,
)
from .expressions import parse_expression
from .fuchs import build_rep, rep_as_dict
from .logging_config import configure_logging, get_logger, verbosity_level
from .mapclass import builtin_classes
from .notation import format_word, letter_token, parse_word
from .suites import PropertyRunner, resolve_suites, run_suites
from .types import JsonObject, OutputFormat, Precision
from .windnum import FieldModel, builtin_fields, compare_defects, omega
from .words import Word
from .writer import ReportWriter


logger = get_logger(__name__)

_FIELD_ALIASES = {"0": "X", "1": "Y"}


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by every subcommand.

    Attributes:
        genus: Surface genus (>= 2).
        precision: ``"double"`` or ``"extended-on-demand"``.
        max_word_length: Cap on parsed and computed words.
        eval_budget: Letters multiplied per matrix evaluation.
        samples: Cap on per-property sample counts (``verify``) or the pair count
            (``compare-defects``); ``None`` keeps the defaults.
        maxlen: Maximum random word length.
        seed: Base seed for every sample stream.
        out: Report path; stdout when ``None``.
        format: ``"json"`` or ``"csv"``.
        workers: Threads for sampling.
        progress: Show progress bars (needs tqdm).
    """

    genus: int = 2
    precision: Precision = DEFAULT_PRECISION
    max_word_length: int = DEFAULT_MAX_WORD_LENGTH
    eval_budget: int = DEFAULT_EVAL_BUDGET
    samples: int | None = None
    maxlen: int = DEFAULT_MAXLEN
    seed: int = DEFAULT_SEED
    out: str | None = None
    format: OutputFormat = FORMAT_JSON
    workers: int = 1
    progress: bool = False

    def __post_init__(self) -> None:
        for name in ("genus", "max_word_length", "eval_budget", "maxlen", "seed", "workers"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"{name} must be an int; got: {value!r}. Hint: check the config file.")
        if self.genus < MIN_GENUS:
            raise ConfigError(f"genus must be >= {MIN_GENUS}; got: {self.genus}. Hint: only hyperbolic surfaces are supported.")
        if self.precision not in PRECISION_POLICIES:
            raise ConfigError(f"precision must be one of {PRECISION_POLICIES}; got: {self.precision!r}")
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(f"format must be one of {OUTPUT_FORMATS}; got: {self.format!r}")
        if self.samples is not None and (
            isinstance(self.samples, bool) or not isinstance(self.samples, int) or self.samples < 1
        ):
            raise ConfigError(f"samples must be a positive int; got: {self.samples!r}. Hint: omit it for the defaults.")
        if self.maxlen < 0:
            raise ConfigError(f"maxlen must be >= 0; got: {self.maxlen}")
        if self.max_word_length < 1 or self.eval_budget < 1:
            raise ConfigError("max_word_length and eval_budget must be >= 1. Hint: the defaults are 4096 and 256.")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1; got: {self.workers}")

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> RunConfig:
        """Build from a dumped config (or a whole report carrying a ``config`` key).

        Raises:
            ConfigError: On unknown keys or invalid values.
        """
        if isinstance(data.get("config"), dict):
            data = data["config"]
        allowed = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - allowed
        if unknown:
            raise ConfigError(f"config contains unsupported keys; allowed: {sorted(allowed)}; got: {sorted(unknown)}")
        return cls(**data)

    def to_dict(self) -> JsonObject:
        """Output-determining fields only; ``out``, ``workers`` and ``progress`` never change a report."""
        return {
            "genus": self.genus,
            "precision": self.precision,
            "max_word_length": self.max_word_length,
            "eval_budget": self.eval_budget,
            "samples": self.samples,
            "maxlen": self.maxlen,
            "seed": self.seed,
            "format": self.format,
        }


def load_config(args: argparse.Namespace) -> RunConfig:
    """Merge ``--config`` (if any) with explicitly passed flags; flags win."""
    base: dict[str, Any] = {}
    if args.config is not None:
        path = Path(args.config)
        try:
            loaded = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}. Hint: pass a JSON report or config dump.") from exc
        if not isinstance(loaded, dict):
            raise ConfigError(f"config {path} must hold a JSON object")
        base = dataclasses.asdict(RunConfig.from_mapping(loaded))
    for name in ("genus", "precision", "samples", "maxlen", "seed", "out", "format", "workers", "progress"):
        value = getattr(args, name, None)
        if value is not None:
            base[name] = value
    return RunConfig(**base)


def make_context(config: RunConfig) -> LiftContext:
    return LiftContext(build_rep(config.genus), (), config.precision, config.eval_budget)


def _word(text: str, config: RunConfig) -> Word:
    return parse_word(text, config.genus, config.max_word_length)


def _field(name: str, genus: int) -> FieldModel:
    fields = builtin_fields(genus)
    key = _FIELD_ALIASES.get(name, name)
    if key not in fields:
        raise ConfigError(f"unknown field {name!r}. Hint: use X, Y, 0 or 1.")
    return fields[key]


def _header(command: str, config: RunConfig, ctx: LiftContext, closure: str | None = None) -> JsonObject:
    conventions: JsonObject = {
        "conjugation": CONJUGATION_CONVENTION,
        "composition": COMPOSITION_CONVENTION,
        "orientation_flipped": ctx.rep.orientation_flipped,
        "relator_translation": relator_translation(ctx),
    }
    if closure is not None:
        conventions["closure"] = closure
    return {
        "command": command,
        "version": __version__,
        "config": config.to_dict(),
        "conventions": conventions,
        "representation": rep_as_dict(ctx.rep),
    }


CommandResult = tuple[JsonObject, int, "str | None"]


def cmd_verify(config: RunConfig, args: argparse.Namespace) -> CommandResult:
    """Run property suites; exit 1 on a failed property, 3 if a failure was a certification failure."""
    ctx = make_context(config)
    runner = PropertyRunner(ctx, config.seed, config.maxlen, config.samples, config.workers, config.progress)
    reports = run_suites(runner, resolve_suites(args.suite))
    passed = all(report.passed for report in reports)
    certified = all(report.certified for report in reports)
    checks = [{"suite": report.suite, **check} for report in reports for check in report.as_dict()["checks"]]
    payload = {
        **_header("verify", config, ctx),
        "suite": args.suite,
        "suites": {report.suite: report.passed for report in reports},
        "checks": checks,
        "passed": passed,
    }
    if passed:
        status = EXIT_OK
    else:
        status = EXIT_PROPERTY_FAILURE if certified else EXIT_CERTIFICATION
    return payload, status, "checks"


def cmd_trans(config: RunConfig, args: argparse.Namespace) -> CommandResult:
    ctx = make_context(config)
    w = _word(args.word, config)
    result = trans_report(ctx, w)
    payload = {
        **_header("trans", config, ctx),
        "word": format_word(w),
        "trans": result.value,
        "certified": result.certified,
        "residual": result.residual,
        "precision": result.precision,
    }
    return payload, EXIT_OK, None


def cmd_tau(config: RunConfig, args: argparse.Namespace) -> CommandResult:
    ctx = make_context(config)
    alpha, beta = _word(args.alpha, config), _word(args.beta, config)
    payload = {
        **_header("tau", config, ctx),
        "alpha": format_word(alpha),
        "beta": format_word(beta),
        "tau": tau(ctx, alpha, beta),
    }
    return payload, EXIT_OK, None


def cmd_r(config: RunConfig, args: argparse.Namespace) -> CommandResult:
    """``R(φ)(γ)``, or the generator values of ``R(φ)`` when no γ is given."""
    ctx = make_context(config)
    phi = parse_expression(args.phi, config.genus)
    payload: JsonObject = {
        **_header("r", config, ctx),
        "phi": phi.label,
        "phi_images": phi.describe(),
    }
    if args.gamma is not None:
        gamma = _word(args.gamma, config)
        payload["gamma"] = format_word(gamma)
        payload["r"] = R(ctx, phi, gamma)
    else:
        checks = config.samples or 0
        values = R_on_homology(ctx, phi, checks, config.seed, config.maxlen)
        payload["r_on_generators"] = {letter_token(k + 1): value for k, value in enumerate(values)}
        payload["additivity_checks"] = checks
    return payload, EXIT_OK, None


def cmd_omega(config: RunConfig, args: argparse.Namespace) -> CommandResult:
    ctx = make_context(config)
    field_model = _field(args.field, config.genus)
    w = _word(args.word, config)
    payload = {
        **_header("omega", config, ctx, args.closure),
        "word": format_word(w),
        "field": field_model.name,
        "omega": omega(field_model, w, args.closure),
    }
    return payload, EXIT_OK, None


def cmd_compare_defects(config: RunConfig, args: argparse.Namespace) -> CommandResult:
    ctx = make_context(config)
    field_model = _field(args.field, config.genus)
    samples = config.samples or DEFAULT_COMPARE_SAMPLES
    report = compare_defects(ctx, field_model, samples, config.maxlen, config.seed, config.workers, config.progress)
    summary = report["summary"]
    expected = summary["punctured_torus_zero"] and summary["theorem_instances_agree"]  # type: ignore[index]
    status = EXIT_OK if expected else EXIT_PROPERTY_FAILURE
    return {**_header("compare-defects", config, ctx, "cyclic"), **report}, status, "pairs"


def cmd_rep_dump(config: RunConfig, args: argparse.Namespace) -> CommandResult:
    ctx = make_context(config)
    return _header("rep-dump", config, ctx), EXIT_OK, None


def cmd_cf_diff(config: RunConfig, args: argparse.Namespace) -> CommandResult:
    """Generator values of ``C_f``, ``R`` and their difference for each class."""
    ctx = make_context(config)
    if args.phi:
        classes = [parse_expression(text, config.genus) for text in args.phi]
    else:
        classes = list(builtin_classes(config.genus).values())
    payload = {**_header("cf-diff", config, ctx), "rows": cf_difference_report(ctx, classes)}
    return payload, EXIT_OK, "rows"


COMMANDS: dict[str, Callable[[RunConfig, argparse.Namespace], CommandResult]] = {
    "verify": cmd_verify,
    "trans": cmd_trans,
    "tau": cmd_tau,
    "r": cmd_r,
    "omega": cmd_omega,
    "compare-defects": cmd_compare_defects,
    "rep-dump": cmd_rep_dump,
    "cf-diff": cmd_cf_diff,
}


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", type=int, default=None, help="Surface genus (default: 2)")
    common.add_argument("--seed", type=int, default=None, help=f"Base seed (default: {DEFAULT_SEED})")
    common.add_argument("--samples", type=int, default=None, help="Cap on sample counts")
    common.add_argument("--maxlen", type=int, default=None, help=f"Maximum random word length (default: {DEFAULT_MAXLEN})")
    common.add_argument("--out", default=None, help="Report path (default: stdout)")
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Report format (default: json)")
    common.add_argument("--precision", choices=PRECISION_POLICIES, default=None, help="Precision policy")
    common.add_argument("--workers", type=int, default=None, help="Sampling threads (default: 1)")
    common.add_argument("--progress", action="store_true", default=None, help="Show progress bars (needs tqdm)")
    common.add_argument("--config", default=None, help="JSON config or report to reproduce")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="rotcocycle",
        description="Exact translation numbers, the Euler cocycle and the rotation crossed homomorphism.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="Run property suites")
    verify.add_argument("--suite", default="all", help="words, mapclass, fuchs, circlelift, cocycle, windnum or all")

    trans = sub.add_parser("trans", parents=[common], help="Translation number of a lifted word")
    trans.add_argument("--word", required=True, help="Word text, e.g. 'a1 b1 A1 B1'")

    tau_cmd = sub.add_parser("tau", parents=[common], help="Euler cocycle of two words")
    tau_cmd.add_argument("--alpha", required=True)
    tau_cmd.add_argument("--beta", required=True)

    r_cmd = sub.add_parser("r", parents=[common], help="Rotation crossed homomorphism R(phi)(gamma)")
    r_cmd.add_argument("--phi", required=True, help="Mapping-class expression, e.g. 'push(a1) * twist(b2)^-1'")
    r_cmd.add_argument("--gamma", default=None, help="Word; omit for generator values")

    omega_cmd = sub.add_parser("omega", parents=[common], help="Winding number against a field")
    omega_cmd.add_argument("--word", required=True)
    omega_cmd.add_argument("--field", default="X", help="X, Y (or 0, 1)")
    omega_cmd.add_argument("--closure", choices=("cyclic", "based"), default="cyclic")

    compare = sub.add_parser("compare-defects", parents=[common], help="Compare D(omega) with tau on random pairs")
    compare.add_argument("--field", default="X", help="X, Y (or 0, 1)")

    sub.add_parser("rep-dump", parents=[common], help="Dump the generator matrices")

    cf_diff = sub.add_parser("cf-diff", parents=[common], help="C_f - R on generators per mapping class")
    cf_diff.add_argument("--phi", action="append", default=None, help="Expression (repeatable; default: built-ins)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point for the ``rotcocycle`` console script."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(verbosity_level(args.verbose))

    try:
        config = load_config(args)
        report, status, rows_key = COMMANDS[args.command](config, args)
    except (ConfigError, ParseError, GenusError, WordError, MappingClassError, FieldModelError) as exc:
        print(f"[rotcocycle] error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CertificationError, RepresentationError) as exc:
        print(f"[rotcocycle] certification failure: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except CocycleBoundError as exc:
        print(f"[rotcocycle] property failure: {exc}", file=sys.stderr)
        return EXIT_PROPERTY_FAILURE

    text = ReportWriter(config.format, rows_key).write(report, config.out)
    if config.out is None:
        sys.stdout.write(text)
    else:
        logger.info(f"wrote {args.command} report to {config.out}")
    return status


__all__ = ["COMMANDS", "RunConfig", "build_parser", "load_config", "main"]
