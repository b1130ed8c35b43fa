"""Relator-fixing automorphisms: pushes, twists, swaps and composition."""

import pytest

from rotcocycle.dehn import surface_equal
from rotcocycle.errors import MappingClassError, WordError
from rotcocycle.mapclass import (
    MappingClass,
    acts_trivially_on_homology,
    apply,
    apply_push_word,
    builtin_classes,
    c_conjugate,
    compose,
    compose_all,
    handle_swap,
    homology_action,
    identity,
    inverse,
    point_push,
    point_push_word,
    relator_is_fixed,
    twist,
)
from rotcocycle.words import conjugate, generator, invert, relator, word


def _descends_to_conjugation(f: MappingClass, by) -> bool:
    return all(
        surface_equal(apply(f, generator(f.genus, k)), conjugate(generator(f.genus, k), by))
        for k in range(1, 2 * f.genus + 1)
    )


class TestPointPush:
    @pytest.mark.parametrize("letter", [1, 2, 3, 4, -1, -2, -3, -4])
    def test_push_descends_to_conjugation_genus_two(self, letter):
        assert _descends_to_conjugation(point_push(letter, 2), word(2, letter))

    @pytest.mark.parametrize("letter", [1, 2, 5, 6])
    def test_push_descends_to_conjugation_genus_three(self, letter):
        assert _descends_to_conjugation(point_push(letter, 3), word(3, letter))

    def test_push_a1_images(self):
        push = point_push(1, 2)
        assert push.forward[0] == generator(2, 1)
        assert push.label == "push(a1)"
        assert point_push(-1, 2).label == "push(A1)"

    def test_push_of_word_is_conjugation_by_the_word(self):
        gamma = word(2, 1, 2)
        assert _descends_to_conjugation(point_push_word(gamma), gamma)
        assert point_push_word(gamma).label == "push(a1 b1)"

    @pytest.mark.parametrize("push", [(1, 3, 2, 4, -1, -3, 2, 2), (4, 4, -1, 3, -2, -4, 1, 3, 3, 2, -1, 4)])
    def test_long_push_words_act_by_conjugation(self, push):
        w = word(2, *push)
        for x in (generator(2, 1), generator(2, 4), word(2, 2, -3, 1)):
            assert surface_equal(apply_push_word(w, x), conjugate(x, w))

    @pytest.mark.parametrize("push", [(1,), (2, 3), (-1, 4, 2)])
    def test_letterwise_push_matches_the_composite(self, push):
        w = word(2, *push)
        for k in range(1, 5):
            x = generator(2, k)
            assert surface_equal(apply_push_word(w, x), apply(point_push_word(w), x))

    @pytest.mark.parametrize("letter", [1, 2, 3, 4])
    def test_pushes_act_trivially_on_homology(self, letter):
        assert acts_trivially_on_homology(point_push(letter, 2))

    def test_out_of_range_generator(self):
        with pytest.raises(WordError):
            point_push(5, 2)


class TestTwistsAndSwaps:
    def test_twist_about_a1(self):
        t = twist(1, 1, 2)
        assert apply(t, generator(2, 2)).letters == (2, 1)
        assert apply(t, generator(2, 1)).letters == (1,)
        assert t.label == "twist(a1)"
        assert twist(2, -1, 2).label == "twist(b1)^-1"

    def test_twist_homology_is_a_transvection(self):
        matrix = homology_action(twist(1, 1, 2))
        assert matrix[0][1] == 1
        assert matrix[1][1] == 1
        assert not acts_trivially_on_homology(twist(1, 1, 2))

    def test_twist_direction_must_be_unit(self):
        with pytest.raises(ValueError):
            twist(1, 2, 2)

    @pytest.mark.parametrize("letter", [-1, -2, -4])
    def test_twist_rejects_inverse_letters(self, letter):
        with pytest.raises(WordError, match="direction=-1"):
            twist(letter, 1, 2)

    def test_handle_swap_moves_handles(self):
        swap = handle_swap(1, 2)
        assert apply(swap, generator(2, 1)) == generator(2, 3)
        assert apply(swap, generator(2, 2)) == generator(2, 4)
        assert relator_is_fixed(swap)

    def test_handle_swap_index_range(self):
        with pytest.raises(WordError):
            handle_swap(2, 2)

    def test_builtin_classes(self):
        classes = builtin_classes(2)
        assert len(classes) == 16
        assert all(relator_is_fixed(f) for f in classes.values())


class TestComposition:
    def test_first_argument_is_applied_first(self):
        composed = compose(twist(1, 1, 2), twist(2, 1, 2))
        # b1 -> b1 a1 -> b1 (a1 b1)
        assert apply(composed, generator(2, 2)).letters == (2, 1, 2)
        assert composed.label == "twist(a1) * twist(b1)"

    def test_inverse_cancels(self):
        for f in (point_push(2, 2), twist(3, -1, 2), handle_swap(1, 2)):
            assert compose(f, inverse(f)) == identity(2)
            assert compose(inverse(f), f) == identity(2)

    def test_inverse_labels(self):
        assert inverse(point_push(1, 2)).label == "push(a1)^-1"
        assert inverse(inverse(point_push(1, 2))).label == "push(a1)"

    def test_compose_all_is_associative(self):
        fs = [point_push(1, 2), twist(2, 1, 2), point_push(3, 2)]
        left = compose(compose(fs[0], fs[1]), fs[2])
        right = compose(fs[0], compose(fs[1], fs[2]))
        assert left == right == compose_all(fs, 2)

    def test_c_conjugate_represents_the_same_class(self):
        f = point_push(1, 2)
        shifted = c_conjugate(f, 1)
        assert shifted != f
        assert relator_is_fixed(shifted)
        for k in range(1, 5):
            assert surface_equal(apply(shifted, generator(2, k)), apply(f, generator(2, k)))


class TestValidation:
    def test_rejects_relator_breaking_images(self):
        a1, b1, a2, b2 = (generator(2, k) for k in range(1, 5))
        with pytest.raises(MappingClassError, match="does not fix the relator"):
            MappingClass(2, (b1, a1, a2, b2), (b1, a1, a2, b2), "flip")

    def test_rejects_mismatched_inverse(self):
        t = twist(1, 1, 2)
        with pytest.raises(MappingClassError, match="invert"):
            MappingClass(2, t.forward, t.forward, "bad")

    def test_rejects_wrong_image_count(self):
        with pytest.raises(MappingClassError, match="expected 4"):
            MappingClass(2, (generator(2, 1),), (generator(2, 1),), "short")

    def test_call_applies(self):
        f = point_push(1, 2)
        assert f(relator(2)) == relator(2)
        assert f(invert(generator(2, 1))) == invert(generator(2, 1))
