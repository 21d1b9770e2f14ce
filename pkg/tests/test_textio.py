import json

import pytest
from hypothesis import given

from conftest import elements
from scaledhyper import Hypercomplex, Matrix2C, ParseError, textio


@pytest.mark.parametrize(
    "text, value",
    [
        ("3", 3),
        ("1+3i", 1 + 3j),
        ("-1+1i", -1 + 1j),
        ("1i", 1j),
        ("i", 1j),
        ("-i", -1j),
        ("2.5e-3-4i", 0.0025 - 4j),
        ("1-i", 1 - 1j),
        (" -0.5 ", -0.5),
    ],
)
def test_parse_complex(text, value):
    assert textio.parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "1+", "3j", "1+2", "nan", "inf", "1e999", "(1,2)"])
def test_parse_complex_rejects(text):
    with pytest.raises(ParseError):
        textio.parse_complex(text)


def test_parse_hypercomplex():
    assert textio.parse_hypercomplex("(1+3i,-1+1i)") == Hypercomplex(1 + 3j, -1 + 1j)
    assert textio.parse_hypercomplex("2i") == Hypercomplex(2j, 0)
    with pytest.raises(ParseError):
        textio.parse_hypercomplex("(1,2,3)")


def test_render():
    assert textio.render_complex(1 + 3j) == "1+3i"
    assert textio.render_complex(-2.5j) == "0-2.5i"
    assert textio.render_complex(complex(-0.0, 0)) == "0"
    assert textio.render_hypercomplex(Hypercomplex(-1, 0)) == "(-1,0)"
    assert textio.render_complex(1 / 3, 4) == "0.3333"


@given(elements)
def test_render_parse_round_trip_at_17_digits(x):
    assert textio.parse_hypercomplex(textio.render_hypercomplex(x, 17)) == x


@given(elements)
def test_json_round_trip_is_bit_exact(x):
    text = json.dumps(textio.hypercomplex_to_json(x))
    assert textio.hypercomplex_from_json(json.loads(text)) == x


def test_json_shapes():
    assert textio.hypercomplex_to_json(Hypercomplex(1 + 2j, -3)) == {"a": [1.0, 2.0], "b": [-3.0, 0.0]}
    M = Matrix2C(1j, 10, 2, -1j)
    assert textio.matrix_to_json(M) == [[[0.0, 1.0], [10.0, 0.0]], [[2.0, 0.0], [0.0, -1.0]]]
    assert textio.matrix_from_json(textio.matrix_to_json(M)) == M
    with pytest.raises(ParseError):
        textio.hypercomplex_from_json({"a": [1, 2]})
    with pytest.raises(ParseError):
        textio.matrix_from_json([[1, 2]])


@pytest.mark.parametrize(
    "t, expr, expected",
    [
        (-1, "(0,1)*(0,1)", Hypercomplex(-1, 0)),
        (2, "(1,0)+(0,0)", Hypercomplex(1, 0)),
        (2, "(1+1i,1)*(0,1i)", Hypercomplex(-2j, -1 + 1j)),
        (-1, "(1i,0)*(0,1) - (0,1)*(1i,0)", Hypercomplex(0, 2j)),
        (-1, "2*(0,1)+(1,0)", Hypercomplex(1, 2)),
        (-1, "((1,0)+(1,0))*(0,1)", Hypercomplex(0, 2)),
        (-1, "-(0,1)*(0,1)", Hypercomplex(1, 0)),
        (0, "inv((2i,5))", Hypercomplex(-0.5j, -1.25)),
        (-1, "(0,1)*inv((0,1))", Hypercomplex(1, 0)),
    ],
)
def test_evaluate_expression(t, expr, expected):
    got = textio.evaluate_expression(t, textio.parse_expression(expr))
    assert abs(got.a - expected.a) < 1e-15 and abs(got.b - expected.b) < 1e-15


def test_multiplication_binds_tighter_and_groups_left():
    tree = textio.parse_expression("(1,0)+(0,1)*(0,1)")
    assert textio.evaluate_expression(-1, tree) == Hypercomplex(0, 0)
    # left grouping matters for subtraction
    tree = textio.parse_expression("(1,0)-(1,0)-(1,0)")
    assert textio.evaluate_expression(-1, tree) == Hypercomplex(-1, 0)


@pytest.mark.parametrize("expr", ["", "(1,0)+", "(1,0", "inv(1,0)", "(1,0)(0,1)", "foo"])
def test_expression_errors(expr):
    with pytest.raises(ParseError):
        textio.parse_expression(expr)
