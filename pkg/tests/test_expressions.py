"""Mapping-class expression parsing."""

import pytest

from rotcocycle.errors import ParseError
from rotcocycle.expressions import parse_expression, power
from rotcocycle.mapclass import compose, handle_swap, identity, inverse, point_push, point_push_word, twist
from rotcocycle.words import word


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("id", lambda: identity(2)),
        ("push(a1)", lambda: point_push(1, 2)),
        ("push(B2)", lambda: point_push(-4, 2)),
        ("twist(b1)", lambda: twist(2, 1, 2)),
        ("twist(a2, -1)", lambda: twist(3, -1, 2)),
        ("swap(1)", lambda: handle_swap(1, 2)),
        ("push(a1 b1)", lambda: point_push_word(word(2, 1, 2))),
    ],
)
def test_atoms(text, expected):
    assert parse_expression(text, genus=2) == expected()


def test_composition_applies_left_factor_first():
    parsed = parse_expression("twist(a1) * push(b1)", genus=2)
    assert parsed == compose(twist(1, 1, 2), point_push(2, 2))


def test_powers_and_grouping():
    f = compose(point_push(1, 2), twist(2, 1, 2))
    assert parse_expression("(push(a1) * twist(b1))^2", genus=2) == compose(f, f)
    assert parse_expression("(push(a1) * twist(b1))^-1", genus=2) == inverse(f)
    assert parse_expression("push(a1)^0", genus=2) == identity(2)


def test_power_helper():
    f = twist(1, 1, 2)
    assert power(f, 3) == compose(compose(f, f), f)
    assert power(f, -1) == inverse(f)


def test_whitespace_is_free():
    assert parse_expression("  push( a1 )*push(A1) ", genus=2) == identity(2)


@pytest.mark.parametrize(
    ("text", "position"),
    [
        ("push(a1) + push(b1)", 9),
        ("frob(a1)", 0),
        ("push(a1) *", 10),
        ("twist(A1)", 6),
        ("push(a1) * twist(B2, -1)", 17),
    ],
)
def test_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_expression(text, genus=2)
    assert info.value.position == position


@pytest.mark.parametrize(
    "text",
    ["", "push(a1", "twist(a1, 2)", "twist(a1, 1, 1)", "swap(2)", "swap(x)", "push(c1)", "(push(a1)"],
)
def test_malformed_expressions(text):
    with pytest.raises(ParseError):
        parse_expression(text, genus=2)


def test_non_string_input():
    with pytest.raises(TypeError):
        parse_expression(None, genus=2)  # type: ignore[arg-type]


def test_inverse_twist_is_spelled_with_a_direction():
    with pytest.raises(ParseError, match="twist\\(a1, -1\\)"):
        parse_expression("twist(A1)", genus=2)
    spelled, powered = parse_expression("twist(a1, -1)", genus=2), parse_expression("twist(a1)^-1", genus=2)
    assert spelled.forward == powered.forward
