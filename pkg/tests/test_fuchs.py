"""Fuchsian representation, matrix classes and fixed points."""

import pytest

from rotcocycle.errors import GenusError
from rotcocycle.fuchs import (
    Mat2,
    MatrixClass,
    build_rep,
    classify,
    evaluate,
    fixed_coordinate,
    rep_as_dict,
    repelling_coordinate,
)
from rotcocycle.words import commutator, empty, generator, invert, multiply, relator, word


@pytest.fixture(scope="module")
def rep2():
    return build_rep(2)


class TestMat2:
    def test_product_and_inverse(self):
        m = Mat2(2.0, 1.0, 1.0, 1.0)
        assert (m @ m.inverse()).distance(Mat2.identity()) < 1e-15

    def test_normalized_sign(self):
        assert Mat2(-1.0, 2.0, 0.0, -1.0).normalized() == Mat2(1.0, -2.0, 0.0, 1.0)
        assert Mat2(0.0, -1.0, 1.0, 0.0).normalized() == Mat2(0.0, 1.0, -1.0, 0.0)

    def test_distance_is_projective(self):
        assert Mat2(-1.0, 0.0, 0.0, -1.0).distance(Mat2.identity()) == 0.0


class TestClassify:
    @pytest.mark.parametrize(
        ("matrix", "kind"),
        [
            (Mat2(2.0, 0.0, 0.0, 0.5), MatrixClass.HYPERBOLIC),
            (Mat2(1.0, 1.0, 0.0, 1.0), MatrixClass.PARABOLIC),
            (Mat2(0.0, -1.0, 1.0, 0.0), MatrixClass.ELLIPTIC),
            (Mat2(-1.0, 0.0, 0.0, -1.0), MatrixClass.IDENTITY),
        ],
    )
    def test_examples(self, matrix, kind):
        assert classify(matrix) is kind

    def test_fixed_points_of_diagonal(self):
        assert fixed_coordinate(Mat2(2.0, 0.0, 0.0, 0.5)) == 0.0
        assert fixed_coordinate(Mat2(0.5, 0.0, 0.0, 2.0)) == 0.5
        assert repelling_coordinate(Mat2(2.0, 0.0, 0.0, 0.5)) == 0.5

    def test_parabolic_fixed_point(self):
        assert fixed_coordinate(Mat2(1.0, 1.0, 0.0, 1.0)) == 0.0

    def test_elliptic_has_no_fixed_point(self):
        with pytest.raises(ValueError, match="elliptic"):
            fixed_coordinate(Mat2(0.0, -1.0, 1.0, 0.0))


class TestBuildRep:
    @pytest.mark.parametrize("genus", [2, 3])
    def test_generators_are_hyperbolic_with_unit_determinant(self, genus):
        rep = build_rep(genus)
        assert len(rep.generators) == 2 * genus
        for m in rep.generators:
            assert abs(m.det() - 1) < 1e-12
            assert classify(m) is MatrixClass.HYPERBOLIC

    @pytest.mark.parametrize("genus", [2, 3])
    def test_relator_evaluates_to_identity(self, genus):
        rep = build_rep(genus)
        assert evaluate(rep, relator(genus)).distance(Mat2.identity()) < 1e-9
        assert evaluate(rep, relator(genus), "extended").distance(Mat2.identity()) < 1e-40

    def test_is_cached_and_deterministic(self, rep2):
        assert build_rep(2) is rep2

    def test_genus_one_rejected(self):
        with pytest.raises(GenusError):
            build_rep(1)

    def test_evaluate_is_a_homomorphism(self, rep2):
        u, v = word(2, 1, -3, 2), word(2, 4, 4, -1)
        product = evaluate(rep2, multiply(u, v), "extended")
        assert product.distance(evaluate(rep2, u, "extended") @ evaluate(rep2, v, "extended")) < 1e-40

    def test_evaluate_empty_word(self, rep2):
        assert evaluate(rep2, empty(2)) == Mat2.identity()

    def test_commutators_are_hyperbolic(self, rep2):
        c1 = commutator(generator(2, 1), generator(2, 2))
        assert classify(evaluate(rep2, c1)) is MatrixClass.HYPERBOLIC
        assert classify(evaluate(rep2, invert(c1))) is MatrixClass.HYPERBOLIC

    def test_rep_as_dict(self, rep2):
        dumped = rep_as_dict(rep2)
        assert dumped["genus"] == 2
        assert sorted(dumped["generators"]) == ["a1", "a2", "b1", "b2"]
        assert dumped["relator_residual"] < 1e-9
        assert isinstance(dumped["orientation_flipped"], bool)
        assert all(len(rows) == 2 and len(rows[0]) == 2 for rows in dumped["generators"].values())
