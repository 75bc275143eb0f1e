"""Expression grammar, exact literal handling, and error positions."""

from fractions import Fraction as F

import pytest

from realbicyclic import Elem, NegativeScalar, ParseError, ZERO, parse_expr


def test_worked_examples():
    assert parse_expr("(1,3)*(2,5)") == Elem(1, 6)
    assert parse_expr("((1,6))^-1") == Elem(6, 1)
    assert parse_expr("(3,5) <= (1,3)") is True


def test_zero_literal_and_absorption():
    assert parse_expr("0") is ZERO
    assert parse_expr("0 * (1,2)") is ZERO
    assert parse_expr("(1,2) * 0") is ZERO
    assert parse_expr("0^-1") is ZERO
    assert parse_expr("(0,0)") == Elem(0, 0)  # the identity, not the zero


def test_rational_and_decimal_literals_exact():
    assert parse_expr("(1/2, 3/2) * (2, 1/3)") == Elem(1, F(1, 3))
    assert parse_expr("(0.5, 1.5)") == Elem(F(1, 2), F(3, 2))
    assert parse_expr("(0.1, 0)") == Elem(F(1, 10), 0)  # exact, not binary float


def test_order_with_zero():
    assert parse_expr("0 <= (1,2)") is True
    assert parse_expr("(1,2) <= 0") is False
    assert parse_expr("0 <= 0") is True


def test_precedence_and_grouping():
    # postfix inversion binds tighter than product
    assert parse_expr("(1,3)*(2,5)^-1") == parse_expr("(1,3)*((2,5)^-1)")
    assert parse_expr("(2,5)^-1^-1") == Elem(2, 5)
    assert parse_expr("((1,3)*(2,5)) <= (1,3)") in (True, False)
    assert parse_expr("(1,2)*(1,2)*(1,2)") == parse_expr("((1,2)*(1,2))*(1,2)")


def test_comparison_result_is_boolean():
    value = parse_expr("(3,5) <= (1,3)")
    assert value is True


def test_negative_literal_rejected_with_position():
    with pytest.raises(NegativeScalar) as exc:
        parse_expr("(-1, 2)")
    assert exc.value.pos == 1
    with pytest.raises(NegativeScalar):
        parse_expr("(1, -2)")


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as exc:
        parse_expr("(1,2")
    assert exc.value.pos == 4
    with pytest.raises(ParseError):
        parse_expr("(1,2) * ")
    with pytest.raises(ParseError):
        parse_expr("(1,2) (3,4)")  # trailing input
    with pytest.raises(ParseError):
        parse_expr("5 * (1,2)")  # bare nonzero scalar is not an element
    with pytest.raises(ParseError):
        parse_expr("(1,2) ^ 2")
    with pytest.raises(ParseError):
        parse_expr("(1,2) < (1,3)")
    with pytest.raises(ParseError):
        parse_expr("(1/, 2)")
    with pytest.raises(ParseError):
        parse_expr("(1/0, 2)")
    with pytest.raises(ParseError):
        parse_expr("(1., 2)")
    with pytest.raises(ParseError):
        parse_expr("")


def test_boolean_misuse_rejected():
    with pytest.raises(ParseError):
        parse_expr("((1,2) <= (1,2)) * (1,2)")
    with pytest.raises(ParseError):
        parse_expr("((1,2) <= (1,2))^-1")


def test_whitespace_is_free_form():
    assert parse_expr("  ( 1 , 3 )  *  ( 2 , 5 )  ") == Elem(1, 6)
