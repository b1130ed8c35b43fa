"""Lifted circle maps, translation numbers and the Euler cocycle."""

import pytest
from hypothesis import given, settings

import rotcocycle
from rotcocycle.circlelift import (
    LiftContext,
    canonical_lift,
    central,
    compose,
    evaluate_word,
    identity_lift,
    inverse,
    lift_word,
    relator_translation,
    tau,
    trans,
    trans_direct,
    trans_iterative,
    trans_report,
    trans_word,
    with_offsets,
)
from rotcocycle.errors import ConfigError, WordLengthError
from rotcocycle.fuchs import Mat2
from rotcocycle.words import conjugate, empty, generator, invert, multiply, relator, word
from tests.conftest import words


class TestLiftedMap:
    def test_central_translation(self):
        assert trans(central(3)) == 3
        assert trans(identity_lift()) == 0

    def test_canonical_lift_anchor_in_unit_interval(self, ctx2):
        for m in ctx2.rep.generators:
            lifted = canonical_lift(m)
            assert 0 <= lifted(0.0) < 1

    def test_commutes_with_integer_translation(self, ctx2):
        lifted = canonical_lift(ctx2.rep.generators[0])
        assert lifted(1.3) == pytest.approx(lifted(0.3) + 1, abs=1e-12)

    def test_compose_with_central_adds_translation(self, ctx2):
        lifted = canonical_lift(ctx2.rep.generators[1])
        assert trans(compose(central(2), lifted)) == trans(lifted) + 2

    def test_inverse_composes_to_identity(self, ctx2):
        lifted = canonical_lift(ctx2.rep.generators[2]).shifted(1)
        product = compose(lifted, inverse(lifted))
        assert trans(product) == 0
        assert product(0.25) == pytest.approx(0.25, abs=1e-9)

    def test_hyperbolic_fixed_point_translation(self):
        assert trans(canonical_lift(Mat2(2.0, 0.0, 0.0, 0.5))) == 0

    def test_iteration_count_must_be_positive(self):
        with pytest.raises(ValueError):
            trans_iterative(central(1), 0)


class TestRelatorTranslation:
    def test_genus_two(self, ctx2):
        assert relator_translation(ctx2) == -2
        assert trans_word(ctx2, relator(2)) == -2
        assert trans_direct(ctx2, relator(2)) == -2

    def test_genus_three(self, ctx3):
        assert relator_translation(ctx3) == -4
        assert trans_word(ctx3, invert(relator(3))) == 4

    @pytest.mark.slow
    def test_genus_four(self):
        assert trans_word(rotcocycle.context(4), relator(4)) == -6

    def test_double_precision_policy(self):
        ctx = rotcocycle.context(2, {"precision": "double"})
        assert trans_word(ctx, relator(2)) == -2

    def test_extended_precision_policy(self):
        ctx = rotcocycle.context(2, {"precision": "extended"})
        report = trans_report(ctx, relator(2))
        assert report.value == -2
        assert report.precision == "extended"
        assert report.certified


class TestTransWord:
    def test_generators_translate_by_zero_or_one(self, ctx2):
        for k in range(1, 5):
            assert trans_word(ctx2, generator(2, k)) in (0, 1)

    def test_empty_word(self, ctx2):
        assert trans_word(ctx2, empty(2)) == 0

    def test_generator_offsets_shift_translation(self, ctx2):
        shifted = with_offsets(ctx2, (1, 0, 0, 0))
        a1 = generator(2, 1)
        assert trans_word(shifted, a1) == trans_word(ctx2, a1) + 1
        assert relator_translation(shifted) == -2

    def test_lift_word_shortens_relators(self, ctx2):
        w = multiply(word(2, 1, 3), relator(2))
        assert trans(lift_word(ctx2, w)) == trans_word(ctx2, w) == trans_word(ctx2, word(2, 1, 3)) - 2

    def test_matches_iteration(self, ctx2):
        w = word(2, 1, 2, 2, -3)
        approx = trans_iterative(evaluate_word(ctx2, w), 4096)
        assert approx == pytest.approx(trans_word(ctx2, w), abs=1e-3)

    @settings(deadline=None, max_examples=60)
    @given(words(max_size=8), words(max_size=4))
    def test_conjugation_invariance(self, ctx2, w, v):
        assert trans_word(ctx2, conjugate(w, v)) == trans_word(ctx2, w)

    @settings(deadline=None, max_examples=60)
    @given(words(max_size=8))
    def test_inverse_and_powers(self, ctx2, w):
        value = trans_word(ctx2, w)
        assert trans_word(ctx2, invert(w)) == -value
        assert trans_word(ctx2, multiply(multiply(w, w), w)) == 3 * value

    @settings(deadline=None, max_examples=60)
    @given(words(max_size=10))
    def test_matches_letterwise_lift(self, ctx2, w):
        assert trans_word(ctx2, w) == trans_direct(ctx2, w)

    @settings(deadline=None, max_examples=40)
    @given(words(max_size=8))
    def test_relator_is_central(self, ctx2, w):
        assert trans_word(ctx2, multiply(w, relator(2))) == trans_word(ctx2, w) - 2


class TestTau:
    def test_empty_argument(self, ctx2):
        assert tau(ctx2, empty(2), generator(2, 1)) == 0
        assert tau(ctx2, generator(2, 3), empty(2)) == 0

    def test_inverse_pair(self, ctx2):
        w = word(2, 1, -4)
        assert tau(ctx2, w, invert(w)) == 0

    @settings(deadline=None, max_examples=60)
    @given(words(max_size=8), words(max_size=8))
    def test_values_are_bounded(self, ctx2, u, v):
        assert tau(ctx2, u, v) in (-1, 0, 1)

    @settings(deadline=None, max_examples=40)
    @given(words(max_size=6), words(max_size=6), words(max_size=6))
    def test_cocycle_identity(self, ctx2, u, v, w):
        left = tau(ctx2, u, v) + tau(ctx2, multiply(u, v), w)
        right = tau(ctx2, v, w) + tau(ctx2, u, multiply(v, w))
        assert left == right


class TestConfiguration:
    def test_offsets_must_match_generators(self, ctx2):
        with pytest.raises(ConfigError, match="generator_offsets"):
            LiftContext(ctx2.rep, (0, 1))

    def test_unknown_precision(self, ctx2):
        with pytest.raises(ConfigError, match="precision"):
            LiftContext(ctx2.rep, precision="quad")  # type: ignore[arg-type]

    def test_eval_budget(self):
        ctx = rotcocycle.context(2, {"eval_budget": 4})
        with pytest.raises(WordLengthError):
            evaluate_word(ctx, word(2, 1, 1, 1, 1, 1))
        with pytest.raises(WordLengthError):
            trans_word(ctx, word(2, 1, 1, 1, 1, 1))

    def test_context_rejects_unknown_option(self):
        with pytest.raises(ConfigError, match="unsupported keys"):
            rotcocycle.context(2, {"bits": 128})

    def test_context_rejects_non_dict(self):
        with pytest.raises(TypeError):
            rotcocycle.context(2, [("precision", "double")])  # type: ignore[arg-type]

    def test_context_is_cached(self):
        assert rotcocycle.context(2) is rotcocycle.context(2)
