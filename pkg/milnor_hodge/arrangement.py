"""Line arrangements in the projective plane and their intersection lattices."""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from pathlib import Path
from random import Random

from pydantic import BaseModel, Field, PositiveInt, ValidationError
from sympy.polys.domains import QQ

from .exceptions import (
    ConsistencyError,
    DocumentParseError,
    DuplicateLineError,
    InvalidInvariantsError,
    ProportionalLinesError,
    SamplingBudgetExhausted,
    ZeroLineError,
)
from .field import CyclotomicElement, field_degree, parse_coefficient
from .settings import get_settings

logger = logging.getLogger(__name__)

Triple = tuple[CyclotomicElement, CyclotomicElement, CyclotomicElement]


class ArrangementDocument(BaseModel):
    """
    Input document describing an arrangement.

    Attributes:
        cyclotomic_order (int): The order m of the coefficient field Q(zeta_m).
        lines (list[tuple[str, str, str]]): Coefficients of ax + by + cz, one
            coefficient string per entry.
    """

    cyclotomic_order: PositiveInt
    lines: list[tuple[str, str, str]] = Field(min_length=2)


class ArrangementSummary(BaseModel):
    """
    Combinatorial summary of an arrangement.

    Attributes:
        d (int): The number of lines.
        mult_histogram (dict[int, int]): Number of lattice points per multiplicity.
        triple_only (bool): Whether every point is a double or triple point.
        essential (bool): Whether the lines have no common point.
        chi_M (int): Euler characteristic of the complement M.
        chi_F (int): Euler characteristic of the Milnor fiber, d * chi_M.
        b2_M (int): Second Betti number of M.
    """

    d: int
    mult_histogram: dict[int, int]
    triple_only: bool
    essential: bool
    chi_M: int
    chi_F: int
    b2_M: int

    @property
    def n2(self) -> int:
        """Number of double points."""
        return self.mult_histogram.get(2, 0)

    @property
    def n3(self) -> int:
        """Number of triple points."""
        return self.mult_histogram.get(3, 0)


def _normalize(triple: Triple) -> Triple | None:
    """Scale a triple so that its first nonzero entry is 1; None for the zero triple."""
    for entry in triple:
        if entry:
            scale = entry.inverse()
            return (triple[0] * scale, triple[1] * scale, triple[2] * scale)
    return None


def _is_normalized(triple: Triple) -> bool:
    orders = {entry.order for entry in triple}
    if len(orders) != 1:
        return False
    leading = next((entry for entry in triple if entry), None)
    return (
        leading is not None
        and leading.coeffs[0] == 1
        and not any(leading.coeffs[1:])
    )


@dataclass(frozen=True)
class ProjectivePoint:
    """
    A point [x:y:z] of the projective plane, first nonzero coordinate equal to 1.

    Attributes:
        x (CyclotomicElement): First coordinate.
        y (CyclotomicElement): Second coordinate.
        z (CyclotomicElement): Third coordinate.
    """

    x: CyclotomicElement
    y: CyclotomicElement
    z: CyclotomicElement

    def __post_init__(self) -> None:
        if not _is_normalized(self.coords):
            raise ValueError(f"Point {self} is not in normalized form.")

    @classmethod
    def from_coordinates(
        cls, x: CyclotomicElement, y: CyclotomicElement, z: CyclotomicElement
    ) -> "ProjectivePoint":
        """
        Build a point from any representative.

        Raises:
            ValueError: If all coordinates vanish.
        """
        normalized = _normalize((x, y, z))
        if normalized is None:
            raise ValueError("The zero vector is not a projective point.")
        return cls(*normalized)

    @property
    def coords(self) -> Triple:
        """The normalized representative."""
        return (self.x, self.y, self.z)

    @property
    def order(self) -> int:
        """The cyclotomic order of the coordinates."""
        return self.x.order

    def __str__(self) -> str:
        return "[" + ":".join(str(entry) for entry in self.coords) + "]"


@dataclass(frozen=True)
class ProjectiveLine:
    """
    The line ax + by + cz = 0, first nonzero coefficient equal to 1.

    Attributes:
        a (CyclotomicElement): Coefficient of x.
        b (CyclotomicElement): Coefficient of y.
        c (CyclotomicElement): Coefficient of z.
    """

    a: CyclotomicElement
    b: CyclotomicElement
    c: CyclotomicElement

    def __post_init__(self) -> None:
        if not _is_normalized(self.coefficients):
            raise ValueError(f"Line {self} is not in normalized form.")

    @classmethod
    def from_coefficients(
        cls, a: CyclotomicElement, b: CyclotomicElement, c: CyclotomicElement
    ) -> "ProjectiveLine":
        """
        Build a line from any nonzero coefficient triple.

        Raises:
            ZeroLineError: If all coefficients vanish.
        """
        normalized = _normalize((a, b, c))
        if normalized is None:
            raise ZeroLineError()
        return cls(*normalized)

    @property
    def coefficients(self) -> Triple:
        """The normalized coefficient triple."""
        return (self.a, self.b, self.c)

    @property
    def order(self) -> int:
        """The cyclotomic order of the coefficients."""
        return self.a.order

    def evaluate(self, point: ProjectivePoint) -> CyclotomicElement:
        """Return a*x + b*y + c*z at the normalized representative of the point."""
        return self.a * point.x + self.b * point.y + self.c * point.z

    def contains(self, point: ProjectivePoint) -> bool:
        """Whether the point lies on the line."""
        return self.evaluate(point).is_zero

    def __str__(self) -> str:
        return f"({self.a})x + ({self.b})y + ({self.c})z"


@dataclass(frozen=True)
class Arrangement:
    """
    An arrangement of d >= 2 distinct lines over Q(zeta_m).

    Attributes:
        order (int): The cyclotomic order m.
        lines (tuple[ProjectiveLine, ...]): The lines.
    """

    order: int
    lines: tuple[ProjectiveLine, ...]

    def __post_init__(self) -> None:
        if len(self.lines) < 2:
            raise ValueError("An arrangement needs at least two lines.")
        seen: dict[ProjectiveLine, int] = {}
        for index, line in enumerate(self.lines):
            if line.order != self.order:
                raise ValueError(
                    f"Line {index} lives over Q(zeta_{line.order}), "
                    f"expected Q(zeta_{self.order})."
                )
            if line in seen:
                raise DuplicateLineError(seen[line], index)
            seen[line] = index

    @property
    def d(self) -> int:
        """The number of lines."""
        return len(self.lines)

    def to_document(self) -> ArrangementDocument:
        """Dump the arrangement in the input document format."""
        return ArrangementDocument(
            cyclotomic_order=self.order,
            lines=[
                (str(line.a), str(line.b), str(line.c)) for line in self.lines
            ],
        )


@dataclass(frozen=True)
class LatticePoint:
    """
    A point of the intersection lattice.

    Attributes:
        point (ProjectivePoint): The intersection point.
        incident (tuple[int, ...]): Sorted indices of the lines through it.
    """

    point: ProjectivePoint
    incident: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        """The number of lines through the point."""
        return len(self.incident)


@dataclass(frozen=True)
class IntersectionLattice:
    """
    The rank-2 part of the intersection lattice L(A).

    Attributes:
        points (tuple[LatticePoint, ...]): Points sorted by their incident lines.
    """

    points: tuple[LatticePoint, ...]

    def histogram(self) -> dict[int, int]:
        """Return the number of points of each multiplicity."""
        return dict(sorted(Counter(p.multiplicity for p in self.points).items()))

    def of_multiplicity(self, multiplicity: int) -> list[ProjectivePoint]:
        """Return the points of a given multiplicity, in lattice order."""
        return [p.point for p in self.points if p.multiplicity == multiplicity]

    def triple_points(self) -> list[ProjectivePoint]:
        """Return the set T of triple points."""
        return self.of_multiplicity(3)

    def highest(self) -> LatticePoint:
        """Return the first point of largest multiplicity."""
        return max(self.points, key=lambda p: p.multiplicity)


def load_arrangement(document: ArrangementDocument | dict) -> Arrangement:
    """
    Build an arrangement from a parsed input document.

    Args:
        document (ArrangementDocument | dict): The document.

    Returns:
        Arrangement: The normalized arrangement.

    Raises:
        DocumentParseError: If the document does not match the schema.
        CoefficientParseError: If a coefficient string is malformed.
        ZeroLineError: If a coefficient triple is zero.
        DuplicateLineError: If two lines are proportional.
    """
    if not isinstance(document, ArrangementDocument):
        try:
            document = ArrangementDocument.model_validate(document)
        except ValidationError as error:
            raise DocumentParseError(str(error)) from error

    order = document.cyclotomic_order
    lines = []
    for index, triple in enumerate(document.lines):
        coefficients = [parse_coefficient(text, order) for text in triple]
        try:
            lines.append(ProjectiveLine.from_coefficients(*coefficients))
        except ZeroLineError as error:
            raise ZeroLineError(index) from error
    return Arrangement(order=order, lines=tuple(lines))


def read_arrangement(path: Path) -> Arrangement:
    """
    Read an arrangement from a JSON file.

    Args:
        path (Path): The file path.

    Returns:
        Arrangement: The arrangement.

    Raises:
        DocumentParseError: If the file cannot be read or is not a valid document.
    """
    try:
        document = ArrangementDocument.model_validate_json(path.read_text("utf-8"))
    except (OSError, UnicodeDecodeError, ValidationError) as error:
        raise DocumentParseError(str(error)) from error
    return load_arrangement(document)


def intersect_lines(first: ProjectiveLine, second: ProjectiveLine) -> ProjectivePoint:
    """
    Intersect two lines via the cross product of their coefficient triples.

    Args:
        first (ProjectiveLine): The first line.
        second (ProjectiveLine): The second line.

    Returns:
        ProjectivePoint: The common point.

    Raises:
        ProportionalLinesError: If the lines coincide.
    """
    a1, b1, c1 = first.coefficients
    a2, b2, c2 = second.coefficients
    cross = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)
    normalized = _normalize(cross)
    if normalized is None:
        raise ProportionalLinesError()
    return ProjectivePoint(*normalized)


def build_lattice(arrangement: Arrangement) -> IntersectionLattice:
    """
    Compute all pairwise intersections and group them by point.

    Args:
        arrangement (Arrangement): The arrangement.

    Returns:
        IntersectionLattice: The lattice, sorted by incident lines.

    Raises:
        ConsistencyError: If the pair-count identity fails.
    """
    incidences: dict[ProjectivePoint, set[int]] = {}
    for (i, first), (j, second) in combinations(enumerate(arrangement.lines), 2):
        incidences.setdefault(intersect_lines(first, second), set()).update((i, j))

    points = sorted(
        (
            LatticePoint(point=point, incident=tuple(sorted(lines)))
            for point, lines in incidences.items()
        ),
        key=lambda lattice_point: lattice_point.incident,
    )
    pairs = sum(comb(p.multiplicity, 2) for p in points)
    if pairs != comb(arrangement.d, 2):
        raise ConsistencyError(
            "pair_count", f"{pairs} incident pairs for {arrangement.d} lines"
        )
    return IntersectionLattice(points=tuple(points))


def _summary(d: int, histogram: dict[int, int], essential: bool) -> ArrangementSummary:
    excess = sum((mult - 1) * count for mult, count in histogram.items())
    chi_m = 3 - 2 * d + excess
    return ArrangementSummary(
        d=d,
        mult_histogram=histogram,
        triple_only=all(mult <= 3 for mult in histogram),
        essential=essential,
        chi_M=chi_m,
        chi_F=d * chi_m,
        b2_M=1 - d + excess,
    )


def summarize(
    arrangement: Arrangement, lattice: IntersectionLattice
) -> ArrangementSummary:
    """
    Summarize the combinatorics of an arrangement. Hypothesis failures are
    reported through the flags, never raised.

    Args:
        arrangement (Arrangement): The arrangement.
        lattice (IntersectionLattice): Its lattice.

    Returns:
        ArrangementSummary: The summary.
    """
    return _summary(arrangement.d, lattice.histogram(), len(lattice.points) > 1)


def summary_from_counts(d: int, n3: int) -> ArrangementSummary:
    """
    Summary of a triple point arrangement known only by d and n3.

    Args:
        d (int): The number of lines.
        n3 (int): The number of triple points.

    Returns:
        ArrangementSummary: The summary, with n2 = C(d, 2) - 3 n3.

    Raises:
        InvalidInvariantsError: If d < 2, n3 < 0 or 3 n3 > C(d, 2).
    """
    if d < 2 or n3 < 0:
        raise InvalidInvariantsError(f"need d >= 2 and n3 >= 0, got d={d}, n3={n3}")
    n2 = comb(d, 2) - 3 * n3
    if n2 < 0:
        raise InvalidInvariantsError(f"{n3} triple points need more than {d} lines")
    histogram = {mult: count for mult, count in ((2, n2), (3, n3)) if count}
    return _summary(d, histogram, d > 2 and not (d == 3 and n3 == 1))


def _random_element(rng: Random, order: int, bound: int) -> CyclotomicElement:
    return CyclotomicElement(
        order,
        tuple(QQ(rng.randint(-bound, bound)) for _ in range(field_degree(order))),
    )


def _keeps_triple_only(lines: list[ProjectiveLine], candidate: ProjectiveLine) -> bool:
    """A new point of multiplicity k + 1 appears where the candidate meets k lines."""
    meetings = Counter(intersect_lines(line, candidate) for line in lines)
    return all(count <= 2 for count in meetings.values())


def _is_pencil(lines: list[ProjectiveLine]) -> bool:
    centre = intersect_lines(lines[0], lines[1])
    return all(line.contains(centre) for line in lines[2:])


def generate_random_arrangement(
    d: int,
    order: int,
    seed: int,
    bound: int | None = None,
    max_attempts: int | None = None,
) -> Arrangement:
    """
    Sample a triple point arrangement line by line. Each candidate line has
    coefficients with integer entries in [-bound, bound]; it is rejected when it
    is zero, repeats a line, or would create a point of multiplicity 4. For
    d >= 3 a completed pencil is rejected as well. The result depends only on
    the arguments.

    Args:
        d (int): The number of lines, at least 2.
        order (int): The cyclotomic order of the coefficients.
        seed (int): The random seed.
        bound (int | None): Coefficient bound; defaults to the settings.
        max_attempts (int | None): Candidate budget; defaults to the settings.

    Returns:
        Arrangement: A triple point arrangement, essential when d >= 3.

    Raises:
        ValueError: If d < 2.
        SamplingBudgetExhausted: If the budget runs out.
    """
    if d < 2:
        raise ValueError(f"An arrangement needs at least two lines, got {d}.")
    settings = get_settings()
    bound = bound or settings.RANDOM_COEFFICIENT_BOUND
    max_attempts = max_attempts or settings.RANDOM_MAX_ATTEMPTS

    rng = Random(seed)
    lines: list[ProjectiveLine] = []
    for _ in range(max_attempts):
        coefficients = [_random_element(rng, order, bound) for _ in range(3)]
        if not any(coefficients):
            continue
        candidate = ProjectiveLine.from_coefficients(*coefficients)
        if candidate in lines or not _keeps_triple_only(lines, candidate):
            continue
        lines.append(candidate)
        if len(lines) == d:
            if d >= 3 and _is_pencil(lines):
                lines.pop()
                continue
            return Arrangement(order=order, lines=tuple(lines))
    logger.warning(
        "Sampling budget of %d exhausted (d=%d, seed=%d)", max_attempts, d, seed
    )
    raise SamplingBudgetExhausted(d, max_attempts)
