"""Equivariant mixed Hodge numbers of the Milnor fiber.

Character k of mu_d stands for the eigenvalue lambda_k = exp(-2 pi i k / d)
of the action by the inverse monodromy, so the spectrum exponent alpha = k / d
and the character index coincide. The primitive cubic roots gamma and
gamma' are k = d/3 and k = 2d/3.

Tables are keyed by (p, q, j) for h^{p,q}(H^j(F)); zero multiplicities are
never stored.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd
from typing import Iterator

from pydantic import BaseModel
from sympy import Poly, divisors
from sympy.polys.domains import ZZ

from .arrangement import ArrangementSummary
from .exceptions import (
    ConsistencyError,
    InvalidInvariantsError,
    NegativeMultiplicityError,
    NotCurveMilnorFiberHD,
)
from .field import VARIABLE, cyclotomic_polynomial
from .spectrum import SpectrumPoly, binom2, n_alpha, n_alpha_block

logger = logging.getLogger(__name__)

HodgeKey = tuple[int, int, int]
HodgeLayer = dict[HodgeKey, int]


def _compact(entries: dict[int, dict]) -> dict[int, dict]:
    compacted = {}
    for k in sorted(entries):
        values = {key: value for key, value in sorted(entries[k].items()) if value}
        if values:
            compacted[k] = values
    return compacted


@dataclass(frozen=True)
class EquivariantHodgeTable:
    """
    The multiplicities h^{p,q}(H^j(F))_lambda_k, i.e. PD^{mu_d}(F; u, v, t).

    Attributes:
        d (int): The order of the group mu_d.
        entries (dict[int, HodgeLayer]): Per character, (p, q, j) to multiplicity.
    """

    d: int
    entries: dict[int, HodgeLayer] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _compact(self.entries))

    def character(self, k: int) -> HodgeLayer:
        """Return the entries of character k."""
        return dict(self.entries.get(k % self.d, {}))

    def multiplicity(self, k: int, p: int, q: int, j: int) -> int:
        """Return h^{p,q}(H^j(F)) at character k."""
        return self.entries.get(k % self.d, {}).get((p, q, j), 0)

    def records(self) -> Iterator[tuple[int, int, int, int, int]]:
        """Yield (k, p, q, j, mult) sorted by character, degree, then (p, q)."""
        rows = [
            (k, p, q, j, mult)
            for k, layer in self.entries.items()
            for (p, q, j), mult in layer.items()
        ]
        yield from sorted(rows, key=lambda row: (row[0], row[3], row[1], row[2]))

    def eigenspace_dimension(self, k: int, j: int) -> int:
        """Return dim H^j(F)_lambda_k."""
        return sum(
            mult for (_, _, degree), mult in self.character(k).items() if degree == j
        )

    def betti(self, j: int) -> int:
        """Return b_j(F)."""
        return sum(self.eigenspace_dimension(k, j) for k in range(self.d))


@dataclass(frozen=True)
class HDPoly:
    """
    HD^{mu_d}(F; u, v) = PD^{mu_d}(F; u, v, -1), per character.

    Attributes:
        d (int): The order of the group mu_d.
        coefficients (dict[int, dict[tuple[int, int], int]]): Per character,
            (p, q) to the signed coefficient of u^p v^q.
    """

    d: int
    coefficients: dict[int, dict[tuple[int, int], int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _compact(self.coefficients))

    def character(self, k: int) -> dict[tuple[int, int], int]:
        """Return the polynomial of character k."""
        return dict(self.coefficients.get(k % self.d, {}))


class BettiReport(BaseModel):
    """
    Betti numbers, Euler characteristics and weights of the Milnor fiber.

    Attributes:
        b0 (int): b_0(F).
        b1 (int): b_1(F).
        b2 (int): b_2(F).
        chi_F (int): b0 - b1 + b2.
        chi_M (int): Euler characteristic of the complement.
        gr_w2_h2 (int): dim Gr^W_2 H^2(F).
        gr_w3_h2 (int): dim Gr^W_3 H^2(F).
        gr_w4_h2 (int): dim Gr^W_4 H^2(F).
    """

    b0: int
    b1: int
    b2: int
    chi_F: int
    chi_M: int
    gr_w2_h2: int
    gr_w3_h2: int
    gr_w4_h2: int


def is_cubic(k: int, d: int) -> bool:
    """Whether lambda_k is a primitive cubic root of unity."""
    return k % d != 0 and (3 * k) % d == 0


def h1_table(d: int, beta3: int) -> dict[int, HodgeLayer]:
    """
    The H^0 and H^1 layers. H^1(F)_1 is pure of type (1, 1) and dimension d - 1;
    the other eigenvalues of H^1 are the cubic roots, each of multiplicity beta3,
    of type (0, 1) at gamma and (1, 0) at gamma'.

    Args:
        d (int): The number of lines.
        beta3 (int): The Papadima-Suciu invariant.

    Returns:
        dict[int, HodgeLayer]: The partial table.

    Raises:
        InvalidInvariantsError: If beta3 > 0 and 3 does not divide d.
    """
    if beta3 and d % 3:
        raise InvalidInvariantsError(f"beta3 = {beta3} needs 3 | d, got d = {d}")
    table: dict[int, HodgeLayer] = {0: {(0, 0, 0): 1, (1, 1, 1): d - 1}}
    if beta3:
        gamma, gamma_bar = d // 3, 2 * d // 3
        table[gamma] = {(0, 1, 1): beta3}
        table[gamma_bar] = {(1, 0, 1): beta3}
    return table


def h2_noncubic(j: int, d: int, n3: int) -> HodgeLayer:
    """
    H^2 at a character that is neither trivial nor cubic: pure of weight 2 with
    h^{2,0}, h^{1,1}, h^{0,2} equal to n_alpha, n_alpha+1, n_alpha+2 at alpha = j/d.

    Args:
        j (int): The character, 1 <= j <= d - 1.
        d (int): The number of lines.
        n3 (int): The number of triple points.

    Returns:
        HodgeLayer: The three multiplicities.

    Raises:
        ValueError: If j is out of range or lambda_j is a cubic root of unity.
    """
    if not 1 <= j <= d - 1:
        raise ValueError(f"Character {j} outside [1, {d - 1}].")
    if is_cubic(j, d):
        raise ValueError(f"Character {j} of mu_{d} is a cubic root of unity.")
    first, second, third = n_alpha_block(j, d, n3)
    return {(2, 0, 2): first, (1, 1, 2): second, (0, 2, 2): third}


def _check_non_negative(k: int, layer: HodgeLayer) -> None:
    for key, value in layer.items():
        if value < 0:
            raise NegativeMultiplicityError(k, key, value)


def h2_cubic(
    d: int, n3: int, beta3: int, allow_negative: bool = False
) -> tuple[HodgeLayer, HodgeLayer]:
    """
    H^2 at gamma and gamma', of weights 2 and 3. The gamma' layer is the (q, p)
    mirror of the gamma layer.

    Args:
        d (int): The number of lines, divisible by 3.
        n3 (int): The number of triple points.
        beta3 (int): The Papadima-Suciu invariant.
        allow_negative (bool): Skip the non-negativity refusal.

    Returns:
        tuple[HodgeLayer, HodgeLayer]: The layers at gamma and gamma'.

    Raises:
        InvalidInvariantsError: If 3 does not divide d.
        NegativeMultiplicityError: If a multiplicity is negative.
    """
    if d % 3:
        raise InvalidInvariantsError(f"cubic characters need 3 | d, got d = {d}")

    def n(alpha: Fraction) -> int:
        return n_alpha(alpha, d, n3)

    beta, beta_bar = Fraction(1, 3), Fraction(2, 3)
    gamma = {
        (2, 0, 2): n(beta_bar + 2),
        (1, 1, 2): n(beta_bar + 2) + n(beta_bar + 1) - n(beta) + beta3,
        (0, 2, 2): (
            n(beta_bar + 2)
            + n(beta_bar + 1)
            + n(beta_bar)
            - n(beta)
            - n(beta + 1)
            + beta3
        ),
        (2, 1, 2): n(beta) - n(beta_bar + 2),
        (1, 2, 2): n(beta + 1) + n(beta) - n(beta_bar + 1) - n(beta_bar + 2) - beta3,
    }
    gamma_bar = {(q, p, j): value for (p, q, j), value in gamma.items()}
    if not allow_negative:
        _check_non_negative(d // 3, gamma)
        _check_non_negative(2 * d // 3, gamma_bar)
    return gamma, gamma_bar


def assemble_pd(
    d: int, n3: int, beta3: int, allow_negative: bool = False
) -> EquivariantHodgeTable:
    """
    Assemble PD^{mu_d}(F) from the three combinatorial invariants.

    Args:
        d (int): The number of lines, at least 2.
        n3 (int): The number of triple points.
        beta3 (int): The Papadima-Suciu invariant, in {0, 1, 2}.
        allow_negative (bool): Keep negative values instead of refusing them.
            Only meaningful for tables that no arrangement realizes.

    Returns:
        EquivariantHodgeTable: The table.

    Raises:
        InvalidInvariantsError: If the invariants are out of range.
        NegativeMultiplicityError: If a multiplicity is negative.
    """
    if d < 2 or n3 < 0:
        raise InvalidInvariantsError(f"need d >= 2 and n3 >= 0, got d={d}, n3={n3}")
    if beta3 not in (0, 1, 2):
        raise InvalidInvariantsError(f"beta3 must be 0, 1 or 2, got {beta3}")

    entries = h1_table(d, beta3)
    entries[0][(2, 2, 2)] = binom2(d - 1) - n3
    for k in range(1, d):
        if not is_cubic(k, d):
            entries.setdefault(k, {}).update(h2_noncubic(k, d, n3))
    if d % 3 == 0:
        gamma, gamma_bar = h2_cubic(d, n3, beta3, allow_negative=allow_negative)
        entries.setdefault(d // 3, {}).update(gamma)
        entries.setdefault(2 * d // 3, {}).update(gamma_bar)

    if not allow_negative:
        for k, layer in entries.items():
            _check_non_negative(k, layer)
    logger.debug("Assembled PD for d=%d, n3=%d, beta3=%d", d, n3, beta3)
    return EquivariantHodgeTable(d=d, entries=entries)


def specialize_hd(table: EquivariantHodgeTable) -> HDPoly:
    """
    Set t = -1: per character, the coefficient of u^p v^q is the alternating
    sum over j of h^{p,q}(H^j(F)).

    Args:
        table (EquivariantHodgeTable): The PD table.

    Returns:
        HDPoly: The Hodge-Deligne polynomial.
    """
    coefficients: dict[int, dict[tuple[int, int], int]] = {}
    for k, p, q, j, mult in table.records():
        character = coefficients.setdefault(k, {})
        character[(p, q)] = character.get((p, q), 0) + (-1) ** j * mult
    return HDPoly(d=table.d, coefficients=coefficients)


def _source_degree(k: int, p: int, q: int) -> int:
    """The cohomological degree a monomial u^p v^q of character k comes from."""
    weight = p + q
    if max(p, q) > 2:
        raise NotCurveMilnorFiberHD(f"u^{p} v^{q} exceeds the Hodge range of a surface")
    if k == 0:
        if (p, q) == (0, 0):
            return 0
        if (p, q) == (1, 1):
            return 1
        if weight in (3, 4):
            return 2
        raise NotCurveMilnorFiberHD(
            f"u^{p} v^{q} cannot occur at the trivial character"
        )
    if weight == 1:
        return 1
    if weight >= 2:
        return 2
    raise NotCurveMilnorFiberHD(f"u^{p} v^{q} cannot occur at character {k}")


def reconstruct_pd(hd: HDPoly, d: int) -> EquivariantHodgeTable:
    """
    Recover PD from HD for the Milnor fiber of a plane curve. At the trivial
    character H^0 gives 1, H^1 gives multiples of uv and H^2 has weights 3 and 4;
    at other characters H^1 is linear in u, v and H^2 has weight at least 2, so no
    monomial can come from two degrees.

    Args:
        hd (HDPoly): The Hodge-Deligne polynomial.
        d (int): The order of the group mu_d.

    Returns:
        EquivariantHodgeTable: The PD table.

    Raises:
        NotCurveMilnorFiberHD: If a monomial has no admissible source degree or a
            recovered multiplicity is negative.
    """
    entries: dict[int, HodgeLayer] = {}
    for k, polynomial in hd.coefficients.items():
        for (p, q), coeff in polynomial.items():
            j = _source_degree(k, p, q)
            mult = (-1) ** j * coeff
            if mult < 0:
                raise NotCurveMilnorFiberHD(
                    f"u^{p} v^{q} at character {k} would have multiplicity {mult}"
                )
            entries.setdefault(k, {})[(p, q, j)] = mult
    return EquivariantHodgeTable(d=d, entries=entries)


def specialize_v1(hd: HDPoly) -> dict[int, dict[int, int]]:
    """
    Set v = 1 in HD: per character, the coefficient of u^p. This carries the same
    information as the spectrum.

    Args:
        hd (HDPoly): The Hodge-Deligne polynomial.

    Returns:
        dict[int, dict[int, int]]: Per character, p to coefficient.
    """
    result: dict[int, dict[int, int]] = {}
    for k, polynomial in hd.coefficients.items():
        for (p, _), coeff in polynomial.items():
            result.setdefault(k, {})
            result[k][p] = result[k].get(p, 0) + coeff
    return _compact(result)


def spectrum_from_hodge(table: EquivariantHodgeTable) -> SpectrumPoly:
    """
    The spectrum from its definition: n_alpha is the alternating sum over j >= 1
    of dim Gr_F^p H^j(F)_lambda with p = floor(3 - alpha), where
    dim Gr_F^p H^j = sum over q >= j - p of h^{p,q}(H^j). H^0 is left out.

    Args:
        table (EquivariantHodgeTable): The PD table.

    Returns:
        SpectrumPoly: The spectrum.
    """
    d = table.d
    terms: dict[Fraction, int] = {}
    for k in range(d):
        layer = table.character(k)
        for shift in range(3):
            alpha = Fraction(k, d) + shift if k else Fraction(shift + 1)
            p = floor(3 - alpha)
            terms[alpha] = sum(
                (-1) ** j * mult
                for (p_key, q, j), mult in layer.items()
                if j >= 1 and p_key == p and q >= j - p
            )
    return SpectrumPoly(terms)


def weight_graded_dimensions(table: EquivariantHodgeTable) -> dict[int, int]:
    """
    Return dim Gr^W_w H^2(F) for w = 2, 3, 4.

    Args:
        table (EquivariantHodgeTable): The PD table.

    Returns:
        dict[int, int]: Weight to dimension.
    """
    dims = {2: 0, 3: 0, 4: 0}
    for _, p, q, j, mult in table.records():
        if j == 2:
            dims[p + q] = dims.get(p + q, 0) + mult
    return dims


def betti_and_euler(
    table: EquivariantHodgeTable, summary: ArrangementSummary, beta3: int
) -> BettiReport:
    """
    Betti numbers of F with the identities b0 = 1, b1 = d - 1 + 2 beta3 and
    b0 - b1 + b2 = d chi(M).

    Args:
        table (EquivariantHodgeTable): The PD table.
        summary (ArrangementSummary): The arrangement summary.
        beta3 (int): The Papadima-Suciu invariant.

    Returns:
        BettiReport: The report.

    Raises:
        ConsistencyError: Naming the first identity that fails.
    """
    b0, b1, b2 = (table.betti(j) for j in range(3))
    if b0 != 1:
        raise ConsistencyError("b0", f"b0(F) = {b0}, expected 1")
    if b1 != summary.d - 1 + 2 * beta3:
        raise ConsistencyError(
            "b1", f"b1(F) = {b1}, expected {summary.d - 1} + 2 * {beta3}"
        )
    if b0 - b1 + b2 != summary.d * summary.chi_M:
        raise ConsistencyError(
            "euler",
            f"chi(F) = {b0 - b1 + b2}, expected d * chi(M) = {summary.chi_F}",
        )
    weights = weight_graded_dimensions(table)
    return BettiReport(
        b0=b0,
        b1=b1,
        b2=b2,
        chi_F=b0 - b1 + b2,
        chi_M=summary.chi_M,
        gr_w2_h2=weights[2],
        gr_w3_h2=weights[3],
        gr_w4_h2=weights[4],
    )


def monodromy_factors(table: EquivariantHodgeTable, j: int) -> dict[int, int]:
    """
    Factor the characteristic polynomial of the monodromy on H^j(F) as a product
    of cyclotomic polynomials Phi_e^c. The eigenvalue multiplicity must be
    constant along each Galois orbit, i.e. on the characters k with
    d / gcd(k, d) = e.

    Args:
        table (EquivariantHodgeTable): The PD table.
        j (int): The cohomological degree.

    Returns:
        dict[int, int]: e to exponent c, zero exponents omitted.

    Raises:
        ConsistencyError: If an orbit carries different multiplicities.
    """
    d = table.d
    factors: dict[int, int] = {}
    for e in divisors(d):
        orbit = [k for k in range(d) if d // gcd(k, d) == e]
        dims = {table.eigenspace_dimension(k, j) for k in orbit}
        if len(dims) > 1:
            raise ConsistencyError(
                "galois_invariance",
                f"H^{j} eigenvalues of order {e} have multiplicities {sorted(dims)}",
            )
        exponent = dims.pop()
        if exponent:
            factors[e] = exponent
    return factors


def characteristic_polynomial(table: EquivariantHodgeTable, j: int) -> Poly:
    """
    Return the characteristic polynomial of the monodromy on H^j(F).

    Args:
        table (EquivariantHodgeTable): The PD table.
        j (int): The cohomological degree.

    Returns:
        Poly: A monic integer polynomial of degree b_j(F).
    """
    result = Poly(1, VARIABLE, domain=ZZ)
    for e, exponent in monodromy_factors(table, j).items():
        result *= cyclotomic_polynomial(e) ** exponent
    return result
