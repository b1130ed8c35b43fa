"""
Property suites behind ``rotcocycle verify``.

Each property is a predicate on one seeded random stream: it returns ``None``
when the sample passes and a short counterexample description otherwise. A
:class:`PropertyRunner` draws ``substream(seed, property, index)`` for every
index, so results do not depend on the worker count.

Suites:
    words: free reduction, intersection form, word problem vs matrices
    mapclass: point-push descent, composition laws
    fuchs: evaluation homomorphism, absence of elliptics
    circlelift: translation numbers and the Euler cocycle
    cocycle: R, its crossed law and the letter-pair potential
    windnum: winding numbers and their defects
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from .circlelift import LiftContext, evaluate_word, tau, trans_direct, trans_iterative, trans_word, with_offsets
from .cocycle import (
    CoverType,
    R,
    R_push_word,
    check_crossed,
    check_defect_transport,
    check_lift_offsets,
    classify_cover,
    defect,
    morita_potential,
    pointpush_bilinear,
)
from .constants import (
    COMPOSITE_PUSH_MAXLEN,
    DEFAULT_MAXLEN,
    DEFAULT_SEED,
    PRECISION_EXTENDED,
    PROPERTY_WORD_LENGTHS,
    SAMPLE_COUNTS,
)
from .dehn import dehn_reduce_cyclic, surface_equal
from .errors import CertificationError, CocycleBoundError, ConfigError
from .fuchs import Mat2, MatrixClass, classify, evaluate
from .logging_config import get_logger
from .mapclass import (
    MappingClass,
    apply,
    apply_push_word,
    builtin_classes,
    c_conjugate,
    compose,
    identity,
    inverse,
    point_push_word,
)
from .sampling import (
    random_mapping_class,
    random_nontrivial_word,
    random_offsets,
    random_reduced_pair,
    random_word,
    substream,
)
from .types import JsonObject
from .utils import map_samples
from .windnum import builtin_fields, defect_omega, omega, omega_difference
from .words import (
    Word,
    a,
    abelianize,
    b,
    conjugate,
    generator,
    intersection,
    invert,
    multiply,
    reduce,
    relator,
)


logger = get_logger(__name__)

Predicate = Callable[[random.Random], "str | None"]

SUITE_NAMES = ("words", "mapclass", "fuchs", "circlelift", "cocycle", "windnum")

_ITERATION_CHECK = 2**16
_MATRIX_RESIDUAL = 1e-6
_HOMOMORPHISM_RESIDUAL = 1e-40


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one property.

    Attributes:
        name: Property name.
        samples: Number of samples drawn.
        passed: Whether every sample passed.
        counterexample: Description of the first failing sample, if any.
        certified: False if a failing sample hit a certification failure.
    """

    name: str
    samples: int
    passed: bool
    counterexample: str | None = None
    certified: bool = True


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def certified(self) -> bool:
        return all(check.certified for check in self.checks)

    def as_dict(self) -> JsonObject:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {
                    "name": check.name,
                    "samples": check.samples,
                    "passed": check.passed,
                    "counterexample": check.counterexample,
                    "certified": check.certified,
                }
                for check in self.checks
            ],
        }


class PropertyRunner:
    """Seeded sampling for the property suites.

    Args:
        ctx: Lift context (fixes genus, representation and precision policy).
        seed: Base seed.
        maxlen: Maximum random word length.
        samples: Optional cap on every property's sample count.
        workers: Thread count for :func:`rotcocycle.utils.map_samples`.
        progress: Show progress bars.
    """

    def __init__(
        self,
        ctx: LiftContext,
        seed: int = DEFAULT_SEED,
        maxlen: int = DEFAULT_MAXLEN,
        samples: int | None = None,
        workers: int = 1,
        progress: bool = False,
    ):
        self.ctx = ctx
        self.genus = ctx.genus
        self.seed = seed
        self.maxlen = maxlen
        self.samples = samples
        self.workers = workers
        self.progress = progress

    def count(self, name: str) -> int:
        default = SAMPLE_COUNTS[name]
        return default if self.samples is None else min(default, self.samples)

    def check(self, name: str, predicate: Predicate) -> CheckResult:
        count = self.count(name)

        def sample(index: int) -> tuple[str | None, bool]:
            try:
                return predicate(substream(self.seed, name, index)), True
            except (CocycleBoundError, ValueError) as exc:
                return f"sample {index}: {type(exc).__name__}: {exc}", True
            except CertificationError as exc:
                return f"sample {index}: {exc}", False

        outcomes = map_samples(sample, count, self.workers, self.progress, desc=name)
        failures = [(message, certified) for message, certified in outcomes if message is not None]
        if not failures:
            logger.debug(f"{name}: {count} samples passed")
            return CheckResult(name, count, True)
        message, _ = failures[0]
        logger.warning(f"{name}: {len(failures)}/{count} samples failed; first: {message}")
        return CheckResult(name, count, False, message, all(ok for _, ok in failures))

    def word(self, rng: random.Random, maxlen: int | None = None) -> Word:
        return random_word(rng, self.genus, self.maxlen if maxlen is None else maxlen)

    def nontrivial(self, rng: random.Random, maxlen: int | None = None) -> Word:
        return random_nontrivial_word(rng, self.genus, self.maxlen if maxlen is None else maxlen)

    def pair(self, rng: random.Random) -> tuple[Word, Word]:
        return random_reduced_pair(rng, self.genus, self.maxlen)

    def mapping_class(self, rng: random.Random, max_factors: int = 2) -> MappingClass:
        return random_mapping_class(rng, self.genus, max_factors)


def _power(w: Word, k: int) -> Word:
    base = w if k >= 0 else invert(w)
    return reduce(base.letters * abs(k), w.genus)


def _insert(u: Word, k: int, letters: tuple[int, ...]) -> Word:
    return reduce(u.letters[:k] + letters + u.letters[k:], u.genus)


def _relative_distance(m: Mat2, n: Mat2) -> float:
    scale = max(1.0, *(abs(float(x)) for x in m.entries()))
    return m.distance(n) / scale


# region words


def _words_suite(runner: PropertyRunner) -> list[CheckResult]:
    genus = runner.genus
    rep = runner.ctx.rep

    def reduce_inverse(rng: random.Random) -> str | None:
        w = runner.word(rng, PROPERTY_WORD_LENGTHS["reduce_inverse"])
        product = multiply(w, invert(w))
        if product:
            return f"w = {w}: w * w^-1 = {product}"
        x = rng.choice((1, -1)) * rng.randint(1, 2 * genus)
        padded = _insert(w, rng.randint(0, len(w)), (x, -x))
        if padded != w:
            return f"w = {w}: inserting a cancelling pair gives {padded}"
        return None

    def intersection_bilinear(rng: random.Random) -> str | None:
        u, v, w = runner.word(rng), runner.word(rng), runner.word(rng)
        if intersection(multiply(u, v), w) != intersection(u, w) + intersection(v, w):
            return f"i(uv, w) not additive for u = {u}, v = {v}, w = {w}"
        if intersection(u, v) != -intersection(v, u):
            return f"i not antisymmetric for u = {u}, v = {v}"
        return None

    def surface_equal_matrix(rng: random.Random) -> str | None:
        u = runner.word(rng, 16)
        t = runner.word(rng, 2)
        piece = conjugate(_power(relator(genus), rng.choice((1, -1))), t)
        inserted = _insert(u, rng.randint(0, len(u)), piece.letters)
        other = runner.word(rng, 16)
        for v in (inserted, other):
            quotient = evaluate(rep, multiply(u, invert(v)), PRECISION_EXTENDED)
            matrix_equal = quotient.distance(Mat2.identity(quotient.a * 0 + 1)) < _MATRIX_RESIDUAL
            if surface_equal(u, v) != matrix_equal:
                return f"u = {u}, v = {v}: word problem says {not matrix_equal}, matrices say {matrix_equal}"
        return None

    return [
        runner.check("reduce_inverse", reduce_inverse),
        runner.check("intersection_bilinear", intersection_bilinear),
        runner.check("surface_equal_matrix", surface_equal_matrix),
    ]


# endregion

# region mapclass


def _mapclass_suite(runner: PropertyRunner) -> list[CheckResult]:
    genus = runner.genus
    pool = list(builtin_classes(genus).values())

    def push_descent(rng: random.Random) -> str | None:
        gamma = runner.nontrivial(rng, PROPERTY_WORD_LENGTHS["push_descent"])
        x = runner.word(rng)
        pushed = apply_push_word(gamma, x)
        if not surface_equal(pushed, conjugate(x, gamma)):
            return f"push({gamma})({x}) = {pushed} is not {gamma}^-1 x {gamma} in the surface group"
        if len(gamma) <= COMPOSITE_PUSH_MAXLEN:
            composite = apply(point_push_word(gamma), x)
            if not surface_equal(composite, pushed):
                return f"composite push({gamma}) sends {x} to {composite}, letter by letter gives {pushed}"
        return None

    def compose_associative(rng: random.Random) -> str | None:
        f, h, k = (rng.choice(pool) for _ in range(3))
        if compose(compose(f, h), k) != compose(f, compose(h, k)):
            return f"compose not associative on ({f.label}, {h.label}, {k.label})"
        if compose(f, inverse(f)) != identity(genus):
            return f"{f.label} * {f.label}^-1 is not the identity"
        return None

    return [
        runner.check("push_descent", push_descent),
        runner.check("compose_associative", compose_associative),
    ]


# endregion

# region fuchs


def _fuchs_suite(runner: PropertyRunner) -> list[CheckResult]:
    rep = runner.ctx.rep

    def evaluate_homomorphism(rng: random.Random) -> str | None:
        u, v = runner.word(rng), runner.word(rng)
        product = (evaluate(rep, u, PRECISION_EXTENDED) @ evaluate(rep, v, PRECISION_EXTENDED)).normalized()
        direct = evaluate(rep, multiply(u, v), PRECISION_EXTENDED)
        residual = _relative_distance(direct, product)
        if residual >= _HOMOMORPHISM_RESIDUAL:
            return f"evaluate({u} * {v}) differs from the matrix product by {residual:.3e}"
        return None

    def no_elliptics(rng: random.Random) -> str | None:
        w = runner.nontrivial(rng, PROPERTY_WORD_LENGTHS["no_elliptics"])
        core, _ = dehn_reduce_cyclic(w)
        if not core:
            return None
        kind = classify(evaluate(rep, core, PRECISION_EXTENDED))
        if kind != MatrixClass.HYPERBOLIC:
            return f"{w} (cyclic core {core}) evaluates to a {kind.value} matrix"
        return None

    return [
        runner.check("evaluate_homomorphism", evaluate_homomorphism),
        runner.check("no_elliptics", no_elliptics),
    ]


# endregion

# region circlelift


def _circlelift_suite(runner: PropertyRunner) -> list[CheckResult]:
    ctx = runner.ctx
    genus = runner.genus
    euler = 2 - 2 * genus

    def trans_conjugation(rng: random.Random) -> str | None:
        alpha, beta = runner.word(rng), runner.word(rng)
        conjugated = conjugate(alpha, beta)
        expected = trans_direct(ctx, alpha)
        for value in (trans_direct(ctx, conjugated), trans_word(ctx, conjugated)):
            if value != expected:
                return f"trans({beta}^-1 {alpha} {beta}) = {value}, trans({alpha}) = {expected}"
        return None

    def trans_central(rng: random.Random) -> str | None:
        w = runner.word(rng)
        k = rng.choice((1, -1))
        shifted = multiply(w, _power(relator(genus), k))
        value, expected = trans_direct(ctx, shifted), trans_direct(ctx, w) + k * euler
        if value != expected:
            return f"trans({w} c^{k}) = {value}, expected {expected}"
        return None

    def tau_range(rng: random.Random) -> str | None:
        alpha, beta = runner.nontrivial(rng), runner.nontrivial(rng)
        value = tau(ctx, alpha, beta)
        direct = trans_direct(ctx, multiply(alpha, beta)) - trans_direct(ctx, alpha) - trans_direct(ctx, beta)
        if value != direct:
            return f"tau({alpha}, {beta}) = {value} but the letter-by-letter lifts give {direct}"
        return None

    def tau_cocycle(rng: random.Random) -> str | None:
        x, y, z = runner.word(rng), runner.word(rng), runner.word(rng)
        left = tau(ctx, x, y) + tau(ctx, multiply(x, y), z)
        right = tau(ctx, x, multiply(y, z)) + tau(ctx, y, z)
        if left != right:
            return f"cocycle identity fails on ({x}, {y}, {z}): {left} != {right}"
        return None

    def tau_offsets(rng: random.Random) -> str | None:
        alpha, beta = runner.word(rng), runner.word(rng)
        offsets = random_offsets(rng, genus)
        moved = tau(with_offsets(ctx, offsets), alpha, beta)
        original = tau(ctx, alpha, beta)
        if moved != original:
            return f"tau({alpha}, {beta}) changes from {original} to {moved} with offsets {offsets}"
        return None

    def tau_mapping_class(rng: random.Random) -> str | None:
        phi = runner.mapping_class(rng)
        alpha, beta = runner.word(rng), runner.word(rng)
        moved = tau(ctx, apply(phi, alpha), apply(phi, beta))
        original = tau(ctx, alpha, beta)
        if moved != original:
            return f"tau({phi.label} of ({alpha}, {beta})) = {moved}, tau({alpha}, {beta}) = {original}"
        return None

    def iterative_oracle(rng: random.Random) -> str | None:
        w = runner.nontrivial(rng, max(1, min(4, runner.maxlen)))
        exact = trans_direct(ctx, w)
        estimate = trans_iterative(evaluate_word(ctx, w), _ITERATION_CHECK)
        if abs(exact - estimate) > 2 / _ITERATION_CHECK:
            return f"trans({w}) = {exact} but iteration gives {estimate}"
        return None

    return [
        runner.check("trans_conjugation", trans_conjugation),
        runner.check("trans_central", trans_central),
        runner.check("tau_range", tau_range),
        runner.check("tau_cocycle", tau_cocycle),
        runner.check("tau_offsets", tau_offsets),
        runner.check("tau_mapping_class", tau_mapping_class),
        runner.check("iterative_oracle", iterative_oracle),
    ]


# endregion

# region cocycle


def _cocycle_suite(runner: PropertyRunner) -> list[CheckResult]:
    ctx = runner.ctx
    genus = runner.genus
    c_potential = morita_potential(relator(genus))

    def r_additive(rng: random.Random) -> str | None:
        phi = runner.mapping_class(rng)
        alpha, beta = runner.pair(rng)
        total, parts = R(ctx, phi, multiply(alpha, beta)), R(ctx, phi, alpha) + R(ctx, phi, beta)
        if total != parts:
            return f"R({phi.label})({alpha} {beta}) = {total}, sum of parts {parts}"
        return None

    def r_crossed(rng: random.Random) -> str | None:
        phi, eta = runner.mapping_class(rng, 1), runner.mapping_class(rng, 1)
        gamma = runner.word(rng)
        if not check_crossed(ctx, phi, eta, gamma):
            return f"crossed law fails for ({phi.label}, {eta.label}) at {gamma}"
        return None

    def r_c_conjugate(rng: random.Random) -> str | None:
        phi = runner.mapping_class(rng)
        k = rng.randint(-2, 2)
        gamma = runner.word(rng)
        moved, original = R(ctx, c_conjugate(phi, k), gamma), R(ctx, phi, gamma)
        if moved != original:
            return f"R changes from {original} to {moved} under c^{k} conjugation of {phi.label} at {gamma}"
        return None

    def r_lift_offsets(rng: random.Random) -> str | None:
        phi = runner.mapping_class(rng)
        gamma = runner.word(rng)
        offsets = random_offsets(rng, genus)
        if not check_lift_offsets(ctx, offsets, phi, gamma):
            return f"R({phi.label})({gamma}) does not move by the coboundary for offsets {offsets}"
        return None

    def r_pointpush_bilinear(rng: random.Random) -> str | None:
        a_word = runner.nontrivial(rng, PROPERTY_WORD_LENGTHS["r_pointpush_bilinear"])
        b_word = runner.word(rng, 16)
        if not pointpush_bilinear(ctx, a_word, b_word):
            value = R_push_word(ctx, a_word, b_word)
            expected = (2 - 2 * genus) * intersection(a_word, b_word)
            return f"R(push({a_word}))({b_word}) = {value}, expected {expected}"
        return None

    def defect_transport(rng: random.Random) -> str | None:
        phi = runner.mapping_class(rng)
        alpha, beta = runner.word(rng), runner.word(rng)
        if not check_defect_transport(ctx, phi, alpha, beta):
            return f"defect transport fails for {phi.label} on ({alpha}, {beta})"
        return None

    def morita_defect(rng: random.Random) -> str | None:
        u, v = runner.word(rng), runner.word(rng)
        value = defect(morita_potential, u, v)
        if value != intersection(u, v):
            return f"D(f)({u}, {v}) = {value}, i = {intersection(u, v)}"
        return None

    def morita_insertion(rng: random.Random) -> str | None:
        u, v = runner.word(rng), runner.word(rng)
        k = rng.choice((1, -1))
        inserted = reduce(u.letters + _power(relator(genus), k).letters + v.letters, genus)
        change = morita_potential(inserted) - morita_potential(multiply(u, v))
        if change != k * c_potential:
            return f"inserting c^{k} between {u} and {v} changes f by {change}, expected {k * c_potential}"
        return None

    def cover_vs_tau(rng: random.Random) -> str | None:
        alpha, beta = runner.nontrivial(rng), runner.nontrivial(rng)
        if classify_cover(ctx, alpha, beta) != CoverType.PUNCTURED_TORUS:
            return None
        value = tau(ctx, alpha, beta)
        if value != 0:
            return f"punctured-torus pair ({alpha}, {beta}) has tau {value}"
        return None

    return [
        runner.check("r_additive", r_additive),
        runner.check("r_crossed", r_crossed),
        runner.check("r_c_conjugate", r_c_conjugate),
        runner.check("r_lift_offsets", r_lift_offsets),
        runner.check("r_pointpush_bilinear", r_pointpush_bilinear),
        runner.check("defect_transport", defect_transport),
        runner.check("morita_defect", morita_defect),
        runner.check("morita_insertion", morita_insertion),
        runner.check("cover_vs_tau", cover_vs_tau),
    ]


# endregion

# region windnum


def _windnum_suite(runner: PropertyRunner) -> list[CheckResult]:
    ctx = runner.ctx
    genus = runner.genus
    fields = builtin_fields(genus)
    field_x, field_y = fields["X"], fields["Y"]
    difference = omega_difference(field_x, field_y)

    def omega_integer(rng: random.Random) -> str | None:
        w = runner.word(rng, PROPERTY_WORD_LENGTHS["omega_integer"])
        for field_model in (field_x, field_y):
            for closure in ("cyclic", "based"):
                value = omega(field_model, w, closure)
                if not isinstance(value, int):
                    return f"omega_{field_model.name}({w}, {closure}) = {value!r}"
        return None

    def omega_field_defect(rng: random.Random) -> str | None:
        u, v = runner.word(rng), runner.word(rng)
        d_x, d_y = defect_omega(field_x, u, v), defect_omega(field_y, u, v)
        if d_x != d_y:
            return f"D(omega)({u}, {v}) is {d_x} for X and {d_y} for Y"
        return None

    def omega_difference_additive(rng: random.Random) -> str | None:
        u, v = runner.word(rng), runner.word(rng)

        def h(w: Word) -> int:
            return omega(field_x, w) - omega(field_y, w)

        if h(multiply(u, v)) != h(u) + h(v):
            return f"omega_X - omega_Y not additive on ({u}, {v})"
        predicted = sum(x * y for x, y in zip(difference, abelianize(u)))
        if h(u) != predicted:
            return f"(omega_X - omega_Y)({u}) = {h(u)}, generator values predict {predicted}"
        return None

    def omega_theorem_instances(rng: random.Random) -> str | None:
        w = runner.word(rng, max(1, runner.maxlen // 2))
        for i in range(1, genus + 1):
            alpha = conjugate(generator(genus, a(i)), invert(w))
            beta = conjugate(generator(genus, b(i)), invert(w))
            for field_model in (field_x, field_y):
                d_omega = defect_omega(field_model, alpha, beta)
                if d_omega != 0:
                    return f"D(omega_{field_model.name})({alpha}, {beta}) = {d_omega}"
            d_trans = tau(ctx, alpha, beta)
            if d_trans != 0:
                return f"tau({alpha}, {beta}) = {d_trans}"
        return None

    def omega_punctured_torus(rng: random.Random) -> str | None:
        alpha, beta = runner.pair(rng)
        if classify_cover(ctx, alpha, beta) != CoverType.PUNCTURED_TORUS:
            return None
        for field_model in (field_x, field_y):
            d_omega = defect_omega(field_model, alpha, beta)
            if d_omega != 0:
                return f"punctured-torus pair ({alpha}, {beta}) has D(omega_{field_model.name}) = {d_omega}"
        return None

    return [
        runner.check("omega_integer", omega_integer),
        runner.check("omega_field_defect", omega_field_defect),
        runner.check("omega_difference", omega_difference_additive),
        runner.check("omega_theorem_instances", omega_theorem_instances),
        runner.check("omega_punctured_torus", omega_punctured_torus),
    ]


# endregion

SUITES: dict[str, Callable[[PropertyRunner], list[CheckResult]]] = {
    "words": _words_suite,
    "mapclass": _mapclass_suite,
    "fuchs": _fuchs_suite,
    "circlelift": _circlelift_suite,
    "cocycle": _cocycle_suite,
    "windnum": _windnum_suite,
}


def resolve_suites(name: str) -> tuple[str, ...]:
    """Expand ``all`` and validate a suite name.

    Raises:
        ConfigError: For an unknown suite.
    """
    if name == "all":
        return SUITE_NAMES
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}. Hint: choose one of {', '.join(SUITE_NAMES)} or 'all'.")
    return (name,)


def run_suites(runner: PropertyRunner, names: Iterable[str]) -> list[SuiteReport]:
    reports = []
    for name in names:
        logger.info(f"running suite {name} (genus {runner.genus}, seed {runner.seed})")
        reports.append(SuiteReport(name, SUITES[name](runner)))
    return reports


__all__ = [
    "CheckResult",
    "PropertyRunner",
    "SUITES",
    "SUITE_NAMES",
    "SuiteReport",
    "resolve_suites",
    "run_suites",
]
