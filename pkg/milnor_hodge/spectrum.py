"""Closed-form spectrum of a line arrangement with only double and triple points.

Binomials C(n, 2) vanish for every n < 2, negative n included; the j = d
block relies on this for its t^3 coefficient.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator


def binom2(n: int) -> int:
    """Return C(n, 2), taken as 0 for n < 2."""
    return n * (n - 1) // 2 if n >= 2 else 0


def _ceil_div(numerator: int, denominator: int) -> int:
    return -(-numerator // denominator)


@dataclass(frozen=True)
class SpectrumPoly:
    """
    Sp = sum of n_alpha t^alpha with exact rational exponents.

    Attributes:
        terms (dict[Fraction, int]): Nonzero coefficients keyed by exponent.
    """

    terms: dict[Fraction, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "terms",
            {alpha: coeff for alpha, coeff in sorted(self.terms.items()) if coeff},
        )

    def coefficient(self, alpha: Fraction) -> int:
        """Return n_alpha, 0 when absent."""
        return self.terms.get(Fraction(alpha), 0)

    def total(self) -> int:
        """Return the sum of all coefficients."""
        return sum(self.terms.values())

    def __iter__(self) -> Iterator[tuple[Fraction, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for alpha, coeff in self.terms.items():
            sign = "-" if coeff < 0 else "+"
            magnitude = "" if abs(coeff) == 1 else str(abs(coeff))
            parts.append(f"{sign} {magnitude}t^{alpha}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def n_alpha_block(j: int, d: int, n3: int) -> tuple[int, int, int]:
    """
    Return (n_alpha, n_alpha+1, n_alpha+2) for alpha = j / d.

    Args:
        j (int): The block index, 1 <= j <= d.
        d (int): The number of lines.
        n3 (int): The number of triple points.

    Returns:
        tuple[int, int, int]: The three spectrum coefficients.

    Raises:
        ValueError: If j is outside [1, d].
    """
    if not 1 <= j <= d:
        raise ValueError(f"Block index {j} outside [1, {d}].")
    ceiling = _ceil_div(3 * j, d)
    delta = 1 if j == d else 0
    return (
        binom2(j - 1) - n3 * binom2(ceiling - 1),
        (j - 1) * (d - j - 1) - n3 * (ceiling - 1) * (3 - ceiling),
        binom2(d - j - 1) - n3 * binom2(3 - ceiling) - delta,
    )


def spectrum(d: int, n3: int) -> SpectrumPoly:
    """
    Assemble Sp from the blocks j = 1..d placed at j/d, j/d + 1 and j/d + 2.

    Args:
        d (int): The number of lines.
        n3 (int): The number of triple points.

    Returns:
        SpectrumPoly: The spectrum.
    """
    terms: dict[Fraction, int] = {}
    for j in range(1, d + 1):
        for shift, coeff in enumerate(n_alpha_block(j, d, n3)):
            terms[Fraction(j, d) + shift] = coeff
    return SpectrumPoly(terms)


def n_alpha(alpha: Fraction, d: int, n3: int) -> int:
    """
    Return the spectrum coefficient at any rational exponent.

    Args:
        alpha (Fraction): The exponent.
        d (int): The number of lines.
        n3 (int): The number of triple points.

    Returns:
        int: n_alpha, 0 when alpha * d is not an integer or alpha is not in (0, 3].
    """
    alpha = Fraction(alpha)
    scaled = alpha * d
    if scaled.denominator != 1 or not 0 < alpha <= 3:
        return 0
    shift, j = divmod(int(scaled), d)
    if j == 0:
        shift, j = shift - 1, d
    return n_alpha_block(j, d, n3)[shift]
