"""Exact arithmetic in the cyclotomic fields Q(zeta_m).

An element is a coefficient vector over the rationals in the power basis
1, z, ..., z^(phi(m) - 1), reduced modulo the m-th cyclotomic polynomial.
Polynomial arithmetic goes through sympy's dense univariate routines
(``dup_*``), with coefficients living in sympy's ``QQ`` domain, which is
backed by gmpy2 when it is installed.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Final

from sympy import Poly, Symbol, divisors
from sympy.polys.densearith import dup_div, dup_mul, dup_rem
from sympy.polys.densebasic import dup_convert, dup_strip
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_gcdex

from .exceptions import (
    CoefficientParseError,
    ConsistencyError,
    FieldDivisionByZero,
    OrderMismatchError,
)

BigRational = QQ.dtype

VARIABLE: Final[Symbol] = Symbol("x")

_TERM: Final[re.Pattern[str]] = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:"
    r"(?P<number>\d+)(?:/(?P<denominator>\d+))?"
    r"(?P<scaled>\*z(?:\^(?P<scaled_power>\d+))?)?"
    r"|(?P<bare>z(?:\^(?P<bare_power>\d+))?)"
    r")"
)


@lru_cache(maxsize=None)
def _cyclotomic_dup(order: int) -> tuple:
    """
    Dense integer coefficients of the cyclotomic polynomial, leading term first.

    Args:
        order (int): The order m >= 1.

    Returns:
        tuple: The coefficients of Phi_m.

    Raises:
        ConsistencyError: If the exact division leaves a remainder.
    """
    numerator = [ZZ.one] + [ZZ.zero] * (order - 1) + [-ZZ.one]
    denominator = [ZZ.one]
    for divisor in divisors(order)[:-1]:
        denominator = dup_mul(denominator, list(_cyclotomic_dup(divisor)), ZZ)
    quotient, remainder = dup_div(numerator, denominator, ZZ)
    if remainder:
        raise ConsistencyError(
            "cyclotomic_polynomial", f"x^{order} - 1 is not divisible by its factors"
        )
    return tuple(quotient)


@lru_cache(maxsize=None)
def _modulus(order: int) -> tuple:
    return tuple(dup_convert(list(_cyclotomic_dup(order)), ZZ, QQ))


def cyclotomic_polynomial(order: int) -> Poly:
    """
    Return the m-th cyclotomic polynomial, obtained by dividing x^m - 1 by the
    cyclotomic polynomials of the proper divisors of m.

    Args:
        order (int): The order m >= 1.

    Returns:
        Poly: Phi_m over ZZ in the variable x.

    Raises:
        ValueError: If the order is not positive.
    """
    if order < 1:
        raise ValueError(f"Cyclotomic order must be positive, got {order}.")
    return Poly.from_list(list(_cyclotomic_dup(order)), VARIABLE, domain=ZZ)


def field_degree(order: int) -> int:
    """Return phi(m), the dimension of Q(zeta_m) over Q."""
    if order < 1:
        raise ValueError(f"Cyclotomic order must be positive, got {order}.")
    return len(_cyclotomic_dup(order)) - 1


@dataclass(frozen=True)
class CyclotomicElement:
    """
    An element of Q(zeta_m) in canonical form.

    Attributes:
        order (int): The cyclotomic order m.
        coeffs (tuple[BigRational, ...]): The phi(m) coefficients of
            1, z, ..., z^(phi(m) - 1).
    """

    order: int
    coeffs: tuple

    def __post_init__(self) -> None:
        degree = field_degree(self.order)
        if len(self.coeffs) != degree:
            raise ValueError(
                f"Q(zeta_{self.order}) needs {degree} coefficients, "
                f"got {len(self.coeffs)}."
            )

    @classmethod
    def from_dense(cls, order: int, dense: list) -> "CyclotomicElement":
        """
        Reduce a dense polynomial (leading coefficient first, QQ entries) modulo
        Phi_m.

        Args:
            order (int): The cyclotomic order.
            dense (list): The polynomial coefficients.

        Returns:
            CyclotomicElement: The canonical element.
        """
        reduced = dup_rem(dup_strip(list(dense)), list(_modulus(order)), QQ)
        coeffs = list(reversed(reduced))
        coeffs.extend([QQ.zero] * (field_degree(order) - len(coeffs)))
        return cls(order, tuple(coeffs))

    @classmethod
    def from_rational(
        cls, order: int, numerator: int, denominator: int = 1
    ) -> "CyclotomicElement":
        """Embed a rational number."""
        return cls.from_dense(order, [QQ(numerator, denominator)])

    @classmethod
    def zero(cls, order: int) -> "CyclotomicElement":
        """Return 0 in Q(zeta_m)."""
        return cls(order, (QQ.zero,) * field_degree(order))

    @classmethod
    def one(cls, order: int) -> "CyclotomicElement":
        """Return 1 in Q(zeta_m)."""
        return cls.from_rational(order, 1)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CyclotomicElement":
        """Return zeta_m raised to a non-negative power."""
        return cls.from_dense(order, [QQ.one] + [QQ.zero] * (power % order))

    @property
    def dense(self) -> list:
        """The polynomial representative, leading coefficient first."""
        return dup_strip(list(reversed(self.coeffs)))

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero element."""
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        return field_add(self, other)

    def __sub__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        return field_add(self, field_neg(other))

    def __neg__(self) -> "CyclotomicElement":
        return field_neg(self)

    def __mul__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        return field_mul(self, other)

    def __truediv__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        return field_mul(self, field_inverse(other))

    def inverse(self) -> "CyclotomicElement":
        """Return the multiplicative inverse."""
        return field_inverse(self)

    def __str__(self) -> str:
        return format_coefficient(self)


def _check_orders(left: CyclotomicElement, right: CyclotomicElement) -> None:
    if left.order != right.order:
        raise OrderMismatchError(left.order, right.order)


def field_add(left: CyclotomicElement, right: CyclotomicElement) -> CyclotomicElement:
    """
    Add two elements of the same cyclotomic field.

    Raises:
        OrderMismatchError: If the orders differ.
    """
    _check_orders(left, right)
    return CyclotomicElement(
        left.order, tuple(a + b for a, b in zip(left.coeffs, right.coeffs))
    )


def field_neg(element: CyclotomicElement) -> CyclotomicElement:
    """Return the additive inverse."""
    return CyclotomicElement(element.order, tuple(-a for a in element.coeffs))


def field_mul(left: CyclotomicElement, right: CyclotomicElement) -> CyclotomicElement:
    """
    Multiply two elements of the same cyclotomic field, reducing modulo Phi_m.

    Raises:
        OrderMismatchError: If the orders differ.
    """
    _check_orders(left, right)
    return CyclotomicElement.from_dense(
        left.order, dup_mul(left.dense, right.dense, QQ)
    )


def field_inverse(element: CyclotomicElement) -> CyclotomicElement:
    """
    Invert a nonzero element with the extended Euclidean algorithm against Phi_m.
    Phi_m is irreducible over Q, so the gcd of a nonzero representative with it
    is 1.

    Args:
        element (CyclotomicElement): The element to invert.

    Returns:
        CyclotomicElement: The inverse.

    Raises:
        FieldDivisionByZero: If the element is zero.
        ConsistencyError: If the gcd is not 1.
    """
    if element.is_zero:
        raise FieldDivisionByZero()
    modulus = list(_modulus(element.order))
    cofactor, _, gcd = dup_gcdex(element.dense, modulus, QQ)
    if gcd != [QQ.one]:
        raise ConsistencyError(
            "field_inverse", f"gcd with Phi_{element.order} is not 1 for {element}"
        )
    return CyclotomicElement.from_dense(element.order, cofactor)


def _rational_text(value: BigRational) -> str:
    numerator, denominator = int(value.numerator), int(value.denominator)
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


def format_coefficient(element: CyclotomicElement) -> str:
    """
    Render an element in the coefficient grammar, e.g. ``-1 - z`` or ``3/2*z^2``.

    Args:
        element (CyclotomicElement): The element.

    Returns:
        str: A string that `parse_coefficient` maps back to the element.
    """
    parts: list[str] = []
    for power, value in enumerate(element.coeffs):
        if not value:
            continue
        monomial = "" if power == 0 else ("z" if power == 1 else f"z^{power}")
        magnitude = abs(value)
        if not monomial:
            body = _rational_text(magnitude)
        elif magnitude == QQ.one:
            body = monomial
        else:
            body = f"{_rational_text(magnitude)}*{monomial}"
        if not parts:
            parts.append(body if value > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if value > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def parse_coefficient(text: str, order: int) -> CyclotomicElement:
    """
    Parse a coefficient string: signed rationals, ``z`` for zeta_m, powers
    ``z^k``, products ``3/2*z^2`` and sums or differences of these. Whitespace is
    ignored.

    Args:
        text (str): The coefficient string.
        order (int): The cyclotomic order m.

    Returns:
        CyclotomicElement: The canonical element.

    Raises:
        CoefficientParseError: If the string does not follow the grammar.
        ValueError: If the order is not positive.
    """
    if order < 1:
        raise ValueError(f"Cyclotomic order must be positive, got {order}.")
    compact = "".join(text.split())
    if not compact:
        raise CoefficientParseError(text, "empty coefficient")
    terms: dict[int, BigRational] = {}
    position = 0
    while position < len(compact):
        match = _TERM.match(compact, position)
        if match is None:
            raise CoefficientParseError(text, f"unexpected input at {position}")
        if position > 0 and not match["sign"]:
            raise CoefficientParseError(text, f"missing + or - at {position}")
        if match["number"] is not None:
            denominator = int(match["denominator"] or 1)
            if denominator == 0:
                raise CoefficientParseError(text, "zero denominator")
            value = QQ(int(match["number"]), denominator)
            power = int(match["scaled_power"] or 1) if match["scaled"] else 0
        else:
            value = QQ.one
            power = int(match["bare_power"] or 1)
        # zeta^m = 1
        power %= order
        if match["sign"] == "-":
            value = -value
        terms[power] = terms.get(power, QQ.zero) + value
        position = match.end()

    dense = [terms.get(power, QQ.zero) for power in range(max(terms), -1, -1)]
    return CyclotomicElement.from_dense(order, dense)
