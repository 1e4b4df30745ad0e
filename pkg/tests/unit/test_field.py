"""Tests for milnor_hodge.field module."""

from random import Random

from pytest import mark
from pytest import raises as pytest_raises
from sympy import Poly, divisors
from sympy.polys.domains import QQ, ZZ

from milnor_hodge.exceptions import (
    CoefficientParseError,
    FieldDivisionByZero,
    OrderMismatchError,
)
from milnor_hodge.field import (
    VARIABLE,
    CyclotomicElement,
    cyclotomic_polynomial,
    field_degree,
    field_mul,
    format_coefficient,
    parse_coefficient,
)


@mark.parametrize(
    "order, coefficients",
    [
        (1, [1, -1]),
        (2, [1, 1]),
        (3, [1, 1, 1]),
        (4, [1, 0, 1]),
        (6, [1, -1, 1]),
        (12, [1, 0, -1, 0, 1]),
    ],
)
def test_cyclotomic_polynomial(order: int, coefficients: list[int]) -> None:
    """Test cyclotomic_polynomial against known cyclotomic polynomials."""
    assert cyclotomic_polynomial(order).all_coeffs() == coefficients


def test_cyclotomic_polynomial_invalid_order() -> None:
    """Test cyclotomic_polynomial with a non-positive order."""
    with pytest_raises(ValueError):
        cyclotomic_polynomial(0)


def test_field_degree() -> None:
    """Test field_degree is Euler's phi."""
    assert [field_degree(order) for order in (1, 2, 3, 5, 9, 12)] == [
        1,
        1,
        2,
        4,
        6,
        4,
    ]


def test_cyclotomic_element_wrong_length() -> None:
    """Test CyclotomicElement rejects a coefficient vector of the wrong length."""
    with pytest_raises(ValueError):
        CyclotomicElement(3, (QQ.one,))


def test_zeta_cubed_is_one() -> None:
    """Test zeta_3 raised to the third power is 1."""
    zeta = CyclotomicElement.zeta(3)
    assert zeta * zeta * zeta == CyclotomicElement.one(3)
    assert CyclotomicElement.zeta(3, 3) == CyclotomicElement.one(3)


def test_zeta_squared_is_reduced() -> None:
    """Test zeta_3^2 is stored as -1 - zeta_3."""
    assert str(CyclotomicElement.zeta(3, 2)) == "-1 - z"


def test_field_add_and_sub() -> None:
    """Test addition and subtraction are coordinatewise."""
    left = parse_coefficient("1 + 2*z", 3)
    right = parse_coefficient("1/2 - z", 3)
    assert str(left + right) == "3/2 + z"
    assert str(left - right) == "1/2 + 3*z"
    assert (left - left).is_zero


def test_field_mul_reduces() -> None:
    """Test multiplication reduces modulo the cyclotomic polynomial."""
    one_plus_zeta = parse_coefficient("1 + z", 3)
    assert str(one_plus_zeta * one_plus_zeta) == "z"


def test_field_inverse() -> None:
    """Test the inverse of 1 + zeta_3 is -zeta_3."""
    one_plus_zeta = parse_coefficient("1 + z", 3)
    inverse = one_plus_zeta.inverse()
    assert inverse == -CyclotomicElement.zeta(3)
    assert one_plus_zeta * inverse == CyclotomicElement.one(3)


def test_field_inverse_rational() -> None:
    """Test inversion in Q itself."""
    element = CyclotomicElement.from_rational(1, -3, 4)
    assert str(element.inverse()) == "-4/3"


def test_field_division() -> None:
    """Test division is multiplication by the inverse."""
    numerator = parse_coefficient("2 - z^2", 5)
    denominator = parse_coefficient("3 + z", 5)
    assert (numerator / denominator) * denominator == numerator


def test_field_inverse_of_zero() -> None:
    """Test inverting zero raises FieldDivisionByZero."""
    with pytest_raises(FieldDivisionByZero):
        CyclotomicElement.zero(3).inverse()
    with pytest_raises(ZeroDivisionError):
        CyclotomicElement.zero(1) / CyclotomicElement.zero(1)


def test_order_mismatch() -> None:
    """Test combining elements of different fields raises OrderMismatchError."""
    with pytest_raises(OrderMismatchError):
        CyclotomicElement.one(3) + CyclotomicElement.one(1)
    with pytest_raises(ArithmeticError):
        CyclotomicElement.one(3) * CyclotomicElement.one(4)


@mark.parametrize(
    "text, order, expected",
    [
        ("0", 3, "0"),
        ("-1", 1, "-1"),
        ("z", 1, "1"),
        ("z", 2, "-1"),
        ("-z^2", 3, "1 + z"),
        ("3/2*z^2", 3, "-3/2 - 3/2*z"),
        (" 1 -  z ", 3, "1 - z"),
        ("z^3 + 2/4", 3, "3/2"),
        ("-1 - z", 3, "-1 - z"),
    ],
)
def test_parse_coefficient(text: str, order: int, expected: str) -> None:
    """Test parse_coefficient reduces to the canonical form."""
    assert format_coefficient(parse_coefficient(text, order)) == expected


@mark.parametrize("text", ["", "   ", "x", "1z", "2*", "1/0", "z^", "+-1", "1 2z"])
def test_parse_coefficient_errors(text: str) -> None:
    """Test parse_coefficient rejects strings outside the grammar."""
    with pytest_raises(CoefficientParseError):
        parse_coefficient(text, 3)


def test_format_coefficient_parses_back() -> None:
    """Test format_coefficient output is accepted by parse_coefficient."""
    element = parse_coefficient("-7/3 + 2*z^3 - z", 5)
    assert parse_coefficient(format_coefficient(element), 5) == element


@mark.parametrize("order", range(1, 31))
def test_cyclotomic_polynomials_multiply_to_x_power_minus_one(order: int) -> None:
    """Test the product of Phi_e over the divisors e of m is x^m - 1."""
    product = Poly(1, VARIABLE, domain=ZZ)
    for divisor in divisors(order):
        product *= cyclotomic_polynomial(divisor)
    assert product.all_coeffs() == [1] + [0] * (order - 1) + [-1]


def test_cyclotomic_polynomial_nine() -> None:
    """Test Phi_9 = x^6 + x^3 + 1."""
    assert cyclotomic_polynomial(9).all_coeffs() == [1, 0, 0, 1, 0, 0, 1]


def _random_element(rng: Random, order: int) -> CyclotomicElement:
    return CyclotomicElement(
        order,
        tuple(
            QQ(rng.randint(-3, 3), rng.randint(1, 3))
            for _ in range(field_degree(order))
        ),
    )


@mark.parametrize("order", [1, 3, 4, 5, 9, 12])
def test_field_axioms(order: int) -> None:
    """Test associativity, distributivity and inverses on random elements."""
    rng = Random(order)
    one = CyclotomicElement.one(order)
    for _ in range(10):
        a, b, c = (_random_element(rng, order) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if a:
            assert a * a.inverse() == one


def test_field_inverse_of_one_minus_zeta() -> None:
    """Test the inverse of 1 - zeta_3 is (2 + zeta_3) / 3."""
    inverse = parse_coefficient("1 - z", 3).inverse()
    assert inverse == parse_coefficient("2/3 + 1/3*z", 3)
    assert field_mul(parse_coefficient("1 - z", 3), inverse) == (
        CyclotomicElement.one(3)
    )


@mark.parametrize("order", [1, 3, 7, 12])
def test_canonical_form_is_idempotent(order: int) -> None:
    """Test reducing a canonical element changes nothing."""
    element = _random_element(Random(7 * order), order)
    assert CyclotomicElement.from_dense(order, element.dense) == element


@mark.parametrize(
    "text, order, power",
    [("z^1000000", 3, 1), ("z^999999", 3, 0), ("z^123456789", 12, 9)],
)
def test_parse_coefficient_large_power(text: str, order: int, power: int) -> None:
    """Test large powers of zeta are reduced modulo the order."""
    assert parse_coefficient(text, order) == CyclotomicElement.zeta(order, power)


def test_parse_coefficient_invalid_order() -> None:
    """Test parse_coefficient with a non-positive order."""
    with pytest_raises(ValueError):
        parse_coefficient("z", 0)
