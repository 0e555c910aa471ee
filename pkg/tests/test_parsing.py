import pytest

from ncgb.coeff import param_ring
from ncgb.errors import ParseError
from ncgb.freealg import FreePoly
from ncgb.ordering import OrderingSpec
from ncgb.parsing import parse_input, parse_poly, parse_scalar

KLEIN = """\
% the Klein four-group
vars x > y
degbound 10
order right
gens:
x^2-1
y^2-1
x*y*x*y-1
"""


def test_klein_file_configuration():
    parsed = parse_input(KLEIN)
    assert parsed.spec == OrderingSpec(("x", "y"), "direct")
    assert parsed.config.weight_bound == 10 and parsed.config.variant == "std"
    assert [str(g) for g in parsed.presentation.generators] == ["x^2 - 1", "y^2 - 1", "x*y*x*y - 1"]


def test_empty_gens_block():
    with pytest.raises(ParseError, match="no generators"):
        parse_input("vars x\ndegbound 3\ngens:\n")


def test_params_directive():
    parsed = parse_input("vars x\nparams q\ndegbound 4\ngens:\nx^2-(q-1)*x-q\n")
    assert parsed.presentation.params == ("q",)
    assert str(parsed.presentation.generators[0]) == "x^2 - (q - 1)*x - q"


def test_order_and_variant():
    parsed = parse_input("vars a > b\norder left\nvariant bas\ndegbound 5\ngens:\na*b - b*a\n")
    assert parsed.spec.direction == "reverse" and parsed.config.variant == "bas"
    assert parse_input("vars a\ngens:\na\n").config is None


@pytest.mark.parametrize("text, line, fragment", [
    ("vars x > x\ngens:\nx\n", 1, "duplicate letter"),
    ("vars x > t\ngens:\nx\n", 1, "reserved"),
    ("vars x\ndegbound ten\ngens:\nx\n", 2, "natural number"),
    ("vars x\ngens:\nx\nx*z\n", 4, "unknown letter"),
    ("vars x\ngens:\nx + \n", 3, "expected a scalar"),
    ("vars x\nfoo 3\ngens:\nx\n", 2, "unknown directive"),
    ("vars x\ngens:\nx*t\n", 3, "reserved"),
])
def test_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError, match=fragment) as exc:
        parse_input(text)
    assert exc.value.line == line


def test_expression_grammar():
    spec = OrderingSpec(("x", "y"))
    R = param_ring(("q",))
    f = parse_poly("  2 * x ^ 2 * y / 3 - (q+1)^2 * y * x + x*x*y ", spec, R)
    assert str(f) == "5/3*x^2*y - (q^2 + 2*q + 1)*y*x"
    with pytest.raises(ParseError):
        parse_poly("x / x", spec, R)
    with pytest.raises(ParseError):
        parse_poly("(x + 1)", spec, R)
    assert parse_scalar("(q^2-1)/(q-1)", R) == parse_scalar("q+1", R)
    assert parse_poly("-x + x", spec) == FreePoly([], spec)
