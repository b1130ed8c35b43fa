"""Fatgraph spine, field models and winding-number defects."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from rotcocycle.errors import FieldModelError
from rotcocycle.windnum import (
    FieldModel,
    HalfEdge,
    build_fatgraph,
    builtin_fields,
    compare_defects,
    defect_omega,
    omega,
    omega_difference,
    theorem_instances,
    turning,
)
from rotcocycle.words import conjugate, empty, generator, invert, relator, word
from tests.conftest import words


@pytest.fixture(scope="module")
def fields():
    return builtin_fields(2)


class TestFatgraph:
    def test_boundary_reads_the_relator(self):
        graph = build_fatgraph(2)
        assert len(graph.cyclic_order) == 8
        assert graph.euler_characteristic == -3
        doubled = relator(2).letters * 2
        assert any(doubled[k : k + 8] == graph.boundary_word.letters for k in range(8))

    def test_half_edge_positions(self):
        graph = build_fatgraph(3)
        assert graph.position(HalfEdge(1, "out")) == 0
        assert graph.position(HalfEdge(2, "in")) == 1
        assert str(HalfEdge(4, "out")) == "out(b2)"


class TestOmega:
    def test_even_field_values(self, fields):
        x = fields["X"]
        assert omega(x, generator(2, 1)) == 1
        assert omega(x, generator(2, 2)) == 0
        assert omega(x, word(2, 1, 2)) == 1

    def test_uneven_field_values(self, fields):
        y = fields["Y"]
        assert omega(y, generator(2, 1)) == 0
        assert omega(y, generator(2, 2)) == 0
        assert omega(y, word(2, 1, 2)) == 0

    def test_handle_defect_vanishes(self, fields):
        a1, b1 = generator(2, 1), generator(2, 2)
        assert defect_omega(fields["X"], a1, b1) == 0
        assert defect_omega(fields["Y"], a1, b1) == 0

    def test_difference_is_a_homomorphism(self, fields):
        diff = omega_difference(fields["X"], fields["Y"])
        assert diff[:2] == (1, 0)
        assert len(diff) == 4

    def test_empty_word(self, fields):
        assert omega(fields["X"], empty(2)) == 0
        assert turning(fields["X"], empty(2)) == 0

    @settings(deadline=None, max_examples=100)
    @given(words(max_size=12))
    def test_integer_and_class_function(self, fields, w):
        for field_model in fields.values():
            value = omega(field_model, w)
            assert isinstance(value, int)
            assert omega(field_model, conjugate(w, generator(2, 3))) == value
            assert omega(field_model, invert(w)) == -value

    def test_unknown_closure(self, fields):
        with pytest.raises(ValueError, match="closure"):
            omega(fields["X"], generator(2, 1), closure="open")  # type: ignore[arg-type]


class TestFieldModel:
    def _angles(self):
        return tuple(Fraction(2 * j + 1, 8) for j in range(8))

    def test_wrong_sizes(self):
        with pytest.raises(FieldModelError, match="needs 8 angles"):
            FieldModel("bad", 2, self._angles()[:7], (0,) * 4)

    def test_out_of_range_angle(self):
        angles = (*self._angles()[:7], Fraction(2))
        with pytest.raises(FieldModelError, match=r"\[0, 2\)"):
            FieldModel("bad", 2, angles, (0,) * 4)

    def test_duplicate_angles(self):
        angles = (self._angles()[0], *self._angles()[:7])
        with pytest.raises(FieldModelError, match="distinct"):
            FieldModel("bad", 2, angles, (0,) * 4)

    def test_angles_must_follow_cyclic_order(self):
        angles = self._angles()
        swapped = (angles[1], angles[0], *angles[2:])
        with pytest.raises(FieldModelError, match="increase"):
            FieldModel("bad", 2, swapped, (0,) * 4)

    def test_rotated_angles_are_allowed(self):
        angles = self._angles()
        FieldModel("rotated", 2, angles[3:] + angles[:3], (0,) * 4)

    def test_basepoint_opposite_a_half_edge(self):
        with pytest.raises(FieldModelError, match="opposite"):
            FieldModel("bad", 2, self._angles(), (0,) * 4, Fraction(9, 8))

    def test_builtin_fields(self):
        assert set(builtin_fields(3)) == {"X", "Y"}
        assert builtin_fields(2)["Y"].twists == (-1, 0, 1, -1)
        assert builtin_fields(2)["Y"].basepoint == Fraction(1, 64)


class TestComparison:
    def test_theorem_instances_agree(self, ctx2, fields):
        for field_model in fields.values():
            rows = theorem_instances(ctx2, field_model, (word(2, 3, -2),))
            assert len(rows) == 4
            assert all(row["agree"] for row in rows)
            assert rows[0]["alpha"] == "a1"

    def test_compare_defects_is_deterministic(self, ctx2, fields):
        first = compare_defects(ctx2, fields["X"], samples=6, maxlen=5, seed=7)
        again = compare_defects(ctx2, fields["X"], samples=6, maxlen=5, seed=7)
        threaded = compare_defects(ctx2, fields["X"], samples=6, maxlen=5, seed=7, workers=3)
        assert first == again == threaded

    def test_compare_defects_summary(self, ctx2, fields):
        report = compare_defects(ctx2, fields["Y"], samples=5, maxlen=4, seed=1)
        assert report["params"]["field"] == "Y"
        assert len(report["pairs"]) == 5
        summary = report["summary"]
        assert 0.0 <= summary["agree_rate"] <= 1.0
        assert sum(group["count"] for group in summary["by_cover_type"].values()) == 5
        assert summary["theorem_instances_agree"] is True
        assert summary["punctured_torus_zero"] is True

    def test_zero_samples(self, ctx2, fields):
        report = compare_defects(ctx2, fields["X"], samples=0)
        assert report["pairs"] == []
        assert report["summary"]["agree_rate"] == 0.0
        assert report["summary"]["punctured_torus_zero"] is True

    @pytest.mark.parametrize("name", ["X", "Y"])
    def test_punctured_torus_rows_have_no_defect(self, ctx2, fields, name):
        report = compare_defects(ctx2, fields[name], samples=40, maxlen=8, seed=5)
        torus = [row for row in report["pairs"] if row["cover_type"] == "punctured-torus"]
        assert all(row["d_omega"] == row["d_trans"] == 0 for row in torus)
        assert report["summary"]["punctured_torus_zero"] is True

    @pytest.mark.slow
    def test_punctured_torus_rows_at_scale(self, ctx2, fields):
        report = compare_defects(ctx2, fields["X"], samples=200, maxlen=12, seed=42)
        torus = [row for row in report["pairs"] if row["cover_type"] == "punctured-torus"]
        assert torus
        assert all(row["d_omega"] == row["d_trans"] == 0 for row in torus)
        assert report["summary"]["punctured_torus_zero"] is True
