"""The Papadima-Suciu invariant beta3 as the defect of an evaluation map.

For d = 3m lines, beta3 is the corank of the map sending a homogeneous
polynomial of degree 2m - 3 to its values at the triple points. When 3 does
not divide d the invariant is 0 and no matrix is built.
"""

import logging
from dataclasses import dataclass
from math import comb

from pydantic import BaseModel

from .arrangement import ArrangementSummary, ProjectivePoint, Triple
from .exceptions import HypothesisViolation
from .field import CyclotomicElement

logger = logging.getLogger(__name__)

Monomial = tuple[int, int, int]


class DefectResult(BaseModel):
    """
    Rank data of the evaluation map.

    When 3 does not divide d, ``m`` is None and ``monomial_count``, ``rank`` and
    ``beta3`` are 0.

    Attributes:
        m (int | None): d / 3.
        n_triple (int): Number of triple points.
        monomial_count (int): Dimension of the space of polynomials of degree 2m - 3.
        rank (int): Rank of the evaluation map.
        beta3 (int): The corank n_triple - rank.
        assumed (bool): Whether beta3 was supplied instead of computed.
    """

    m: int | None
    n_triple: int
    monomial_count: int = 0
    rank: int = 0
    beta3: int = 0
    assumed: bool = False


@dataclass(frozen=True)
class EvaluationMatrix:
    """
    Monomials evaluated at point representatives, one row per point.

    Attributes:
        order (int): The cyclotomic order of the entries.
        monomials (tuple[Monomial, ...]): Column labels.
        rows (tuple[tuple[CyclotomicElement, ...], ...]): The entries.
    """

    order: int
    monomials: tuple[Monomial, ...]
    rows: tuple[tuple[CyclotomicElement, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        """(number of points, number of monomials)."""
        return len(self.rows), len(self.monomials)


def monomial_basis(degree: int) -> list[Monomial]:
    """
    Exponent triples (i, j, k) with i + j + k = degree in graded lexicographic
    order: x^degree first, z^degree last.

    Args:
        degree (int): The degree; negative degrees give no monomials.

    Returns:
        list[Monomial]: The C(degree + 2, 2) exponent triples.
    """
    return [
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    ]


def _powers(value: CyclotomicElement, degree: int) -> list[CyclotomicElement]:
    powers = [CyclotomicElement.one(value.order)]
    for _ in range(degree):
        powers.append(powers[-1] * value)
    return powers


def build_evaluation_matrix(
    representatives: list[Triple], degree: int, order: int
) -> EvaluationMatrix:
    """
    Evaluate every monomial of the given degree at a coordinate vector of every
    point. Rescaling a vector rescales its row, so the rank does not depend on
    the representatives.

    Args:
        representatives (list[Triple]): Coordinates of the points, one row each.
        degree (int): The monomial degree.
        order (int): The cyclotomic order, used when there are no points.

    Returns:
        EvaluationMatrix: The matrix.
    """
    monomials = tuple(monomial_basis(degree))
    rows = []
    for coords in representatives:
        xs, ys, zs = (_powers(coordinate, max(degree, 0)) for coordinate in coords)
        rows.append(tuple(xs[i] * ys[j] * zs[k] for i, j, k in monomials))
    return EvaluationMatrix(order=order, monomials=monomials, rows=tuple(rows))


def matrix_rank(matrix: EvaluationMatrix) -> int:
    """
    Exact rank by Gaussian elimination over Q(zeta_m). Columns are scanned left
    to right and the pivot is the first remaining row with a nonzero entry.

    Args:
        matrix (EvaluationMatrix): The matrix.

    Returns:
        int: The rank.
    """
    rows = [list(row) for row in matrix.rows]
    n_rows, n_cols = matrix.shape
    rank = 0
    for column in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][column]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = rows[rank][column].inverse()
        for r in range(rank + 1, n_rows):
            if not rows[r][column]:
                continue
            factor = rows[r][column] * inverse
            for c in range(column, n_cols):
                if rows[rank][c]:
                    rows[r][c] = rows[r][c] - rows[rank][c] * factor
        rank += 1
        if rank == n_rows:
            break
    return rank


def beta3(
    summary: ArrangementSummary, triple_points: list[ProjectivePoint], order: int
) -> DefectResult:
    """
    Compute beta3 as the defect of the evaluation map in degree 2m - 3.

    Args:
        summary (ArrangementSummary): The arrangement summary.
        triple_points (list[ProjectivePoint]): The triple points T.
        order (int): The cyclotomic order of the arrangement.

    Returns:
        DefectResult: The rank data.

    Raises:
        HypothesisViolation: If the arrangement has points of multiplicity above 3.
    """
    if not summary.triple_only:
        raise HypothesisViolation(
            "beta3 needs an arrangement with only double and triple points, found "
            f"multiplicity {max(summary.mult_histogram)}."
        )
    if len(triple_points) != summary.n3:
        raise HypothesisViolation(
            f"{len(triple_points)} triple points given, summary has {summary.n3}."
        )
    if summary.d % 3:
        return DefectResult(m=None, n_triple=len(triple_points))

    m = summary.d // 3
    matrix = build_evaluation_matrix(
        [point.coords for point in triple_points], 2 * m - 3, order
    )
    rank = matrix_rank(matrix)
    result = DefectResult(
        m=m,
        n_triple=len(triple_points),
        monomial_count=len(matrix.monomials),
        rank=rank,
        beta3=len(triple_points) - rank,
    )
    if result.beta3 > 2:
        logger.warning(
            "beta3 = %d exceeds 2 (d=%d, n3=%d); the input or the rank is suspect",
            result.beta3,
            summary.d,
            summary.n3,
        )
    return result


def expected_monomial_count(degree: int) -> int:
    """Return C(degree + 2, 2), or 0 for negative degrees."""
    return comb(degree + 2, 2) if degree >= 0 else 0
