"""Tests for milnor_hodge.spectrum module."""

from fractions import Fraction

from pytest import mark
from pytest import raises as pytest_raises

from milnor_hodge.spectrum import (
    SpectrumPoly,
    binom2,
    n_alpha,
    n_alpha_block,
    spectrum,
)

CEVA3_TERMS = {
    Fraction(1, 3): 1,
    Fraction(4, 9): 3,
    Fraction(5, 9): 6,
    Fraction(2, 3): 10,
    Fraction(7, 9): 3,
    Fraction(8, 9): 9,
    Fraction(1): 16,
    Fraction(11, 9): 6,
    Fraction(4, 3): 10,
    Fraction(5, 3): -2,
    Fraction(16, 9): 6,
    Fraction(2): -8,
    Fraction(19, 9): 9,
    Fraction(20, 9): 3,
    Fraction(7, 3): -2,
    Fraction(22, 9): 6,
    Fraction(23, 9): 3,
    Fraction(8, 3): 1,
    Fraction(3): -1,
}


@mark.parametrize("n, value", [(-3, 0), (0, 0), (1, 0), (2, 1), (5, 10), (8, 28)])
def test_binom2(n: int, value: int) -> None:
    """Test binom2 vanishes below 2."""
    assert binom2(n) == value


@mark.parametrize(
    "j, block",
    [
        (1, (0, 0, 9)),
        (2, (0, 6, 3)),
        (3, (1, 10, -2)),
        (4, (3, 0, 6)),
        (5, (6, 0, 3)),
        (6, (10, -2, 1)),
        (7, (3, 6, 0)),
        (8, (9, 0, 0)),
        (9, (16, -8, -1)),
    ],
)
def test_n_alpha_block_ceva3(j: int, block: tuple[int, int, int]) -> None:
    """Test the blocks of d = 9, n3 = 12."""
    assert n_alpha_block(j, 9, 12) == block


@mark.parametrize(
    "j, block",
    [
        (1, (0, 0, 2)),
        (2, (0, 3, -1)),
        (3, (1, 0, 1)),
        (4, (3, -1, 0)),
        (5, (2, 0, 0)),
        (6, (6, -5, -1)),
    ],
)
def test_n_alpha_block_ceva2(j: int, block: tuple[int, int, int]) -> None:
    """Test the blocks of d = 6, n3 = 4."""
    assert n_alpha_block(j, 6, 4) == block


@mark.parametrize("d, n3", [(3, 0), (6, 4), (9, 12), (7, 0), (12, 19)])
def test_block_sums(d: int, n3: int) -> None:
    """Test every block below d sums to C(d - 2, 2) - n3."""
    for j in range(1, d):
        assert sum(n_alpha_block(j, d, n3)) == binom2(d - 2) - n3


@mark.parametrize("j", [0, 10])
def test_n_alpha_block_out_of_range(j: int) -> None:
    """Test block indices outside [1, d] are rejected."""
    with pytest_raises(ValueError):
        n_alpha_block(j, 9, 12)


def test_spectrum_ceva3() -> None:
    """Test the spectrum of the Ceva arrangement."""
    result = spectrum(9, 12)
    assert result.terms == CEVA3_TERMS
    assert len(result) == 19
    assert list(result.terms) == sorted(CEVA3_TERMS)


def test_spectrum_small() -> None:
    """Test the spectra of the triangle and of two lines."""
    assert str(spectrum(3, 0)) == "t^1 - 2t^2 - t^3"
    assert str(spectrum(2, 0)) == "-t^2 - t^3"


@mark.parametrize(
    "d, n3, chi_f", [(2, 0, 0), (3, 0, 0), (6, 4, 12), (9, 12, 81), (5, 0, 15)]
)
def test_spectrum_total(d: int, n3: int, chi_f: int) -> None:
    """Test the coefficients sum to chi(F) - 2."""
    assert spectrum(d, n3).total() == chi_f - 2


def test_n_alpha() -> None:
    """Test n_alpha at admissible and inadmissible exponents."""
    assert n_alpha(Fraction(5, 3), 9, 12) == -2
    assert n_alpha(Fraction(3), 9, 12) == -1
    assert n_alpha(Fraction(1, 2), 9, 12) == 0
    assert n_alpha(Fraction(0), 9, 12) == 0
    assert n_alpha(Fraction(28, 9), 9, 12) == 0
    assert n_alpha(Fraction(19, 9), 9, 12) == 9


def test_n_alpha_matches_spectrum() -> None:
    """Test n_alpha agrees with the assembled spectrum."""
    result = spectrum(6, 4)
    for alpha, coeff in result:
        assert n_alpha(alpha, 6, 4) == coeff


def test_spectrum_poly() -> None:
    """Test SpectrumPoly drops zeros and sorts exponents."""
    poly = SpectrumPoly({Fraction(2): 3, Fraction(1, 2): -1, Fraction(1): 0})
    assert list(poly) == [(Fraction(1, 2), -1), (Fraction(2), 3)]
    assert poly.coefficient(Fraction(1)) == 0
    assert poly.total() == 2
    assert str(poly) == "-t^1/2 + 3t^2"
    assert str(SpectrumPoly()) == "0"


SMALL_INVARIANTS = [(d, n3) for d in range(2, 13) for n3 in range(binom2(d) // 3 + 1)]


@mark.parametrize("d, n3", SMALL_INVARIANTS)
def test_spectrum_at_one_and_two(d: int, n3: int) -> None:
    """Test n_1 = C(d - 1, 2) - n3 and n_2 = -(d - 1)."""
    closed = spectrum(d, n3)
    assert closed.coefficient(Fraction(1)) == binom2(d - 1) - n3
    assert closed.coefficient(Fraction(2)) == -(d - 1)


@mark.parametrize("d, n3", SMALL_INVARIANTS)
def test_spectrum_conjugate_blocks(d: int, n3: int) -> None:
    """Test n_{j/d} = n_{(d - j)/d + 2} when d does not divide 3j."""
    closed = spectrum(d, n3)
    for j in range(1, d):
        if (3 * j) % d:
            assert closed.coefficient(Fraction(j, d)) == closed.coefficient(
                Fraction(d - j, d) + 2
            ), j


@mark.parametrize("d, n3", SMALL_INVARIANTS)
def test_spectrum_support(d: int, n3: int) -> None:
    """Test every exponent lies in (0, 3] with a denominator dividing d."""
    for alpha, _ in spectrum(d, n3):
        assert 0 < alpha <= 3
        assert d % alpha.denominator == 0
