"""The crossed homomorphism R, the letter-pair potential and cover types."""

import pytest
from hypothesis import given, settings

from rotcocycle.circlelift import tau
from rotcocycle.cocycle import (
    C_f,
    CoverType,
    R,
    R_on_homology,
    R_push_word,
    cf_cochain,
    cf_difference_report,
    check_cf_crossed,
    check_crossed,
    check_defect_transport,
    check_lift_offsets,
    classify_cover,
    cover_calibration,
    cover_report,
    defect,
    lift_offset_coboundary,
    morita_cochain,
    morita_potential,
    pointpush_bilinear,
    r_cochain,
    theorem_pairs,
    trans_cochain,
)
from rotcocycle.errors import GenusError
from rotcocycle.mapclass import c_conjugate, compose, identity, point_push, point_push_word, twist
from rotcocycle.sampling import random_word, substream
from rotcocycle.words import conjugate, empty, generator, intersection, invert, relator, word
from tests.conftest import words


class TestR:
    def test_push_a1_on_b1(self, ctx2):
        assert R(ctx2, point_push(1, 2), generator(2, 2)) == -2

    @pytest.mark.parametrize("genus", [2, 3])
    def test_push_a1_on_homology(self, genus, request):
        ctx = request.getfixturevalue(f"ctx{genus}")
        expected = (0, 2 - 2 * genus) + (0,) * (2 * genus - 2)
        assert R_on_homology(ctx, point_push(1, genus)) == expected

    def test_additivity_spot_checks(self, ctx2):
        assert R_on_homology(ctx2, twist(1, 1, 2), checks=5, seed=3, maxlen=6) == R_on_homology(ctx2, twist(1, 1, 2))

    def test_identity_class_is_zero(self, ctx2):
        assert R_on_homology(ctx2, identity(2)) == (0, 0, 0, 0)

    @pytest.mark.parametrize("power", [-2, -1, 0, 1, 2])
    def test_relator_representative_does_not_matter(self, ctx2, power):
        f = point_push(3, 2)
        for k in range(1, 5):
            gamma = generator(2, k)
            assert R(ctx2, c_conjugate(f, power), gamma) == R(ctx2, f, gamma)

    def test_genus_mismatch(self, ctx2):
        with pytest.raises(GenusError):
            R(ctx2, point_push(1, 3), generator(2, 1))

    @pytest.mark.parametrize(
        ("a", "b"),
        [
            ((1,), (2,)),
            ((2,), (1,)),
            ((3,), (4,)),
            ((1, 3), (2, 1)),
            ((4, -1), (2,)),
        ],
    )
    def test_pointpush_is_bilinear_in_intersection(self, ctx2, a, b):
        assert pointpush_bilinear(ctx2, word(2, *a), word(2, *b))

    @pytest.mark.parametrize("push", [(1,), (2, 3), (1, 3, -2), (-4, 1, 2)])
    def test_letterwise_push_matches_the_composite(self, ctx2, push):
        w = word(2, *push)
        for gamma in (generator(2, 1), generator(2, 2), word(2, 3, -1, 4)):
            assert R_push_word(ctx2, w, gamma) == R(ctx2, point_push_word(w), gamma)

    def test_length_eight_push_word(self, ctx2):
        a = word(2, 1, 3, 2, 4, -1, -3, 2, 2)
        for b in (generator(2, 2), generator(2, 1), word(2, 4, -3, 2)):
            assert R_push_word(ctx2, a, b) == -2 * intersection(a, b)

    @pytest.mark.slow
    @pytest.mark.parametrize("index", range(5))
    def test_length_sixteen_push_words(self, ctx2, index):
        rng = substream(7, "push16", index)
        a, b = random_word(rng, 2, 16, 16), random_word(rng, 2, 16, 16)
        assert len(a) == 16
        assert pointpush_bilinear(ctx2, a, b)

    def test_crossed_identity(self, ctx2):
        phi, eta = point_push(1, 2), twist(2, -1, 2)
        for k in range(1, 5):
            assert check_crossed(ctx2, phi, eta, generator(2, k))
        assert check_crossed(ctx2, phi, eta, word(2, 1, 2, -3))

    def test_defect_transport(self, ctx2):
        assert check_defect_transport(ctx2, twist(1, 1, 2), word(2, 1, 2), word(2, -3, 4))

    def test_lift_offsets_change_r_by_a_coboundary(self, ctx2):
        offsets = (1, 0, 2, -1)
        phi = twist(2, 1, 2)
        for k in range(1, 5):
            assert check_lift_offsets(ctx2, offsets, phi, generator(2, k))
        assert lift_offset_coboundary(ctx2, offsets, phi, generator(2, 2)) == 0
        assert lift_offset_coboundary(ctx2, offsets, phi, generator(2, 1)) == 0

    @settings(deadline=None, max_examples=30)
    @given(words(max_size=6), words(max_size=6))
    def test_r_is_additive(self, ctx2, u, v):
        cochain = r_cochain(ctx2, twist(3, 1, 2))
        assert defect(cochain, u, v) == 0
        assert cochain(u) == cochain.homomorphism_value(u)


class TestMoritaPotential:
    @pytest.mark.parametrize(("genus", "expected"), [(2, 4), (3, 6)])
    def test_relator_value(self, genus, expected):
        assert morita_potential(relator(genus)) == expected

    def test_small_words(self):
        assert morita_potential(word(2, 1, 2)) == 1
        assert morita_potential(word(2, 2, 1)) == -1
        assert morita_potential(empty(2)) == 0

    @settings(deadline=None, max_examples=100)
    @given(words(), words())
    def test_defect_is_intersection(self, u, v):
        assert morita_cochain(2).defect(u, v) == intersection(u, v)

    @settings(deadline=None, max_examples=100)
    @given(words())
    def test_odd_under_inversion(self, w):
        assert morita_potential(invert(w)) == -morita_potential(w)

    def test_conjugating_by_a_letter_inserts_pairings(self):
        w = word(2, 1, 3)
        assert morita_potential(conjugate(w, generator(2, 2))) == morita_potential(w) + 2 * intersection(w, generator(2, 2))


class TestCf:
    def test_identity(self):
        assert C_f(identity(2), word(2, 1, 2, 3)) == 0

    def test_crossed(self):
        phi, eta = twist(1, 1, 2), point_push(2, 2)
        for a in (generator(2, 1), word(2, 2, 3), word(2, -4, 1, 1)):
            assert check_cf_crossed(phi, eta, a)

    def test_cochain_generator_values(self):
        values = cf_cochain(point_push(1, 2)).generator_values()
        assert len(values) == 4
        assert values[0] == 0

    def test_difference_report(self, ctx2):
        rows = cf_difference_report(ctx2, [point_push(1, 2), compose(twist(1, 1, 2), point_push(2, 2))])
        assert [row["phi"] for row in rows] == ["push(a1)", "twist(a1) * push(b1)"]
        first = rows[0]
        assert first["r"] == [0, -2, 0, 0]
        assert first["difference"] == [x - y for x, y in zip(first["c_f"], first["r"])]
        assert len(first["homology_action"]) == 4


class TestTau:
    @settings(deadline=None, max_examples=40)
    @given(words(max_size=6), words(max_size=6))
    def test_tau_is_the_defect_of_trans(self, ctx2, u, v):
        assert trans_cochain(ctx2).defect(u, v) == tau(ctx2, u, v)


class TestCoverType:
    def test_handle_pair_is_punctured_torus(self, ctx2):
        a1, b1 = generator(2, 1), generator(2, 2)
        assert classify_cover(ctx2, a1, b1) is CoverType.PUNCTURED_TORUS
        by = word(2, 3, -4)
        assert classify_cover(ctx2, conjugate(a1, by), conjugate(b1, by)) is CoverType.PUNCTURED_TORUS

    def test_theorem_pairs(self, ctx2):
        pairs = theorem_pairs(2)
        assert len(pairs) == 2
        for alpha, beta in pairs:
            assert classify_cover(ctx2, alpha, beta) is CoverType.PUNCTURED_TORUS

    @pytest.mark.parametrize(
        ("alpha", "beta"),
        [((1,), (1,)), ((1,), ()), ((1, 2), (1, 2, 1, 2))],
    )
    def test_commuting_pairs_are_degenerate(self, ctx2, alpha, beta):
        report = cover_report(ctx2, word(2, *alpha), word(2, *beta))
        assert report.cover_type is CoverType.DEGENERATE
        assert report.commutator_trace is None

    def test_report_carries_endpoints(self, ctx2):
        report = cover_report(ctx2, generator(2, 1), generator(2, 2))
        assert len(report.endpoints) == 4
        assert all(0 <= x < 1 for x in report.endpoints)
        assert abs(report.commutator_trace) > 2

    def test_calibration_histogram(self, ctx2):
        pairs = [(generator(2, 1), generator(2, 2)), (generator(2, 1), generator(2, 1))]
        histogram = cover_calibration(ctx2, pairs)
        assert set(histogram) == {kind.value for kind in CoverType}
        assert sum(histogram["degenerate"].values()) == 1
        assert sum(histogram["punctured-torus"].values()) == 1
