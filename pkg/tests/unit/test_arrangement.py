"""Tests for milnor_hodge.arrangement module."""

from pathlib import Path

from pytest import mark
from pytest import raises as pytest_raises

from milnor_hodge.arrangement import (
    Arrangement,
    ArrangementSummary,
    IntersectionLattice,
    ProjectiveLine,
    ProjectivePoint,
    build_lattice,
    generate_random_arrangement,
    intersect_lines,
    load_arrangement,
    read_arrangement,
    summarize,
    summary_from_counts,
)
from milnor_hodge.exceptions import (
    CoefficientParseError,
    DocumentParseError,
    DuplicateLineError,
    InvalidInvariantsError,
    ProportionalLinesError,
    SamplingBudgetExhausted,
    ZeroLineError,
)
from milnor_hodge.catalog import get_builtin
from milnor_hodge.field import (
    CyclotomicElement,
    format_coefficient,
    parse_coefficient,
)


def _line(order: int, *coefficients: str) -> ProjectiveLine:
    return ProjectiveLine.from_coefficients(
        *(parse_coefficient(text, order) for text in coefficients)
    )


def test_line_normalization() -> None:
    """Test proportional coefficient triples give the same line."""
    assert _line(3, "2", "-2*z", "0") == _line(3, "1", "-z", "0")
    assert _line(1, "0", "-3", "6") == _line(1, "0", "1", "-2")
    assert str(_line(1, "0", "-3", "6")) == "(0)x + (1)y + (-2)z"


def test_zero_line() -> None:
    """Test the zero triple is not a line."""
    with pytest_raises(ZeroLineError):
        _line(1, "0", "0", "0")


def test_intersect_coordinate_lines() -> None:
    """Test x = 0 and y = 0 meet at [0:0:1]."""
    point = intersect_lines(_line(1, "1", "0", "0"), _line(1, "0", "1", "0"))
    assert str(point) == "[0:0:1]"


def test_intersect_over_cyclotomic_field() -> None:
    """Test x - zeta y = 0 and y - z = 0 meet at [zeta:1:1]."""
    point = intersect_lines(_line(3, "1", "-z", "0"), _line(3, "0", "1", "-1"))
    zeta, one = CyclotomicElement.zeta(3), CyclotomicElement.one(3)
    assert point == ProjectivePoint.from_coordinates(zeta, one, one)
    assert str(point) == "[1:-1 - z:-1 - z]"


def test_intersect_proportional_lines() -> None:
    """Test intersecting a line with itself raises ProportionalLinesError."""
    line = _line(1, "1", "1", "1")
    with pytest_raises(ProportionalLinesError):
        intersect_lines(line, line)


def test_line_contains() -> None:
    """Test line evaluation at a normalized point."""
    line = _line(1, "1", "1", "-2")
    one, zero = CyclotomicElement.one(1), CyclotomicElement.zero(1)
    assert line.contains(ProjectivePoint.from_coordinates(one, one, one))
    assert not line.contains(ProjectivePoint.from_coordinates(one, zero, zero))


def test_load_arrangement(ceva3: Arrangement) -> None:
    """Test load_arrangement on the Ceva document."""
    assert ceva3.d == 9
    assert ceva3.order == 3
    assert all(line.order == 3 for line in ceva3.lines)


def test_load_arrangement_zero_line() -> None:
    """Test load_arrangement names the zero line."""
    with pytest_raises(ZeroLineError) as error:
        load_arrangement(
            {"cyclotomic_order": 1, "lines": [["1", "0", "0"], ["0", "0", "0"]]}
        )
    assert "line 1" in error.value.message


def test_load_arrangement_duplicate_lines() -> None:
    """Test load_arrangement rejects proportional lines."""
    with pytest_raises(DuplicateLineError) as error:
        load_arrangement(
            {
                "cyclotomic_order": 1,
                "lines": [["1", "1", "0"], ["0", "0", "1"], ["2", "2", "0"]],
            }
        )
    assert "0 and 2" in error.value.message


@mark.parametrize(
    "document",
    [
        {"cyclotomic_order": 0, "lines": [["1", "0", "0"], ["0", "1", "0"]]},
        {"cyclotomic_order": 1, "lines": [["1", "0", "0"]]},
        {"cyclotomic_order": 1, "lines": [["1", "0"], ["0", "1", "0"]]},
        {"lines": [["1", "0", "0"], ["0", "1", "0"]]},
    ],
)
def test_load_arrangement_invalid_document(document: dict) -> None:
    """Test load_arrangement rejects documents outside the schema."""
    with pytest_raises(DocumentParseError):
        load_arrangement(document)


def test_load_arrangement_bad_coefficient() -> None:
    """Test load_arrangement propagates coefficient errors."""
    with pytest_raises(CoefficientParseError):
        load_arrangement(
            {"cyclotomic_order": 3, "lines": [["1", "w", "0"], ["0", "1", "0"]]}
        )


def test_read_arrangement(tmp_path: Path, ceva2: Arrangement) -> None:
    """Test read_arrangement on a written document."""
    path = tmp_path / "ceva2.json"
    path.write_text(ceva2.to_document().model_dump_json(), encoding="utf-8")
    assert read_arrangement(path) == ceva2


def test_read_arrangement_errors(tmp_path: Path, malformed_file: Path) -> None:
    """Test read_arrangement on missing and malformed files."""
    with pytest_raises(DocumentParseError):
        read_arrangement(tmp_path / "missing.json")
    with pytest_raises(DocumentParseError):
        read_arrangement(malformed_file)
    not_json = tmp_path / "not.json"
    not_json.write_text("{", encoding="utf-8")
    with pytest_raises(DocumentParseError):
        read_arrangement(not_json)


def test_read_arrangement_not_utf8(tmp_path: Path) -> None:
    """Test a file that is not valid UTF-8 raises DocumentParseError."""
    path = tmp_path / "latin1.json"
    path.write_bytes(
        b'{"cyclotomic_order": 1, "lines": [["1", "0", "\xff"], ["0", "1", "0"]]}'
    )
    with pytest_raises(DocumentParseError):
        read_arrangement(path)


def test_to_document_round_trip(ceva3: Arrangement) -> None:
    """Test to_document is inverse to load_arrangement."""
    document = ceva3.to_document()
    assert document.cyclotomic_order == 3
    assert document.lines[1] == ("1", "-z", "0")
    assert load_arrangement(document) == ceva3


def test_arrangement_needs_two_lines() -> None:
    """Test an arrangement of one line is rejected."""
    with pytest_raises(ValueError):
        Arrangement(order=1, lines=(_line(1, "1", "0", "0"),))


def test_build_lattice_ceva3(ceva3_lattice: IntersectionLattice) -> None:
    """Test the Ceva lattice has twelve triple points and nothing else."""
    assert ceva3_lattice.histogram() == {3: 12}
    assert len(ceva3_lattice.triple_points()) == 12
    assert "[0:0:1]" in {str(point) for point in ceva3_lattice.triple_points()}


def test_build_lattice_ceva2(ceva2: Arrangement) -> None:
    """Test the lattice of x +- y, x +- z, y +- z."""
    lattice = build_lattice(ceva2)
    assert lattice.histogram() == {2: 3, 3: 4}
    assert {str(point) for point in lattice.of_multiplicity(2)} == {
        "[0:0:1]",
        "[0:1:0]",
        "[1:0:0]",
    }
    assert {str(point) for point in lattice.triple_points()} == {
        "[1:1:1]",
        "[1:1:-1]",
        "[1:-1:1]",
        "[1:-1:-1]",
    }
    incidents = [point.incident for point in lattice.points]
    assert incidents == sorted(incidents)


def test_lattice_highest(pencil: Arrangement) -> None:
    """Test highest returns the point of largest multiplicity."""
    lattice = build_lattice(pencil)
    assert lattice.highest().multiplicity == 3
    assert lattice.highest().incident == (0, 1, 2)


def test_summarize_ceva3(ceva3_summary: ArrangementSummary) -> None:
    """Test the Ceva summary."""
    assert ceva3_summary.model_dump() == {
        "d": 9,
        "mult_histogram": {3: 12},
        "triple_only": True,
        "essential": True,
        "chi_M": 9,
        "chi_F": 81,
        "b2_M": 16,
    }
    assert ceva3_summary.n2 == 0
    assert ceva3_summary.n3 == 12


def test_summarize_ceva2_and_triangle(
    ceva2: Arrangement, triangle: Arrangement
) -> None:
    """Test Euler characteristics of the six-line and three-line arrangements."""
    ceva2_summary = summarize(ceva2, build_lattice(ceva2))
    assert (ceva2_summary.chi_M, ceva2_summary.chi_F, ceva2_summary.b2_M) == (2, 12, 6)
    triangle_summary = summarize(triangle, build_lattice(triangle))
    assert (triangle_summary.n2, triangle_summary.n3) == (3, 0)
    assert (triangle_summary.chi_M, triangle_summary.b2_M) == (0, 1)
    assert triangle_summary.essential


def test_summarize_pencils(pencil: Arrangement) -> None:
    """Test pencils are flagged, not raised."""
    summary = summarize(pencil, build_lattice(pencil))
    assert summary.triple_only
    assert not summary.essential

    four = load_arrangement(
        {
            "cyclotomic_order": 1,
            "lines": [
                ["1", "0", "0"],
                ["0", "1", "0"],
                ["1", "-1", "0"],
                ["1", "1", "0"],
            ],
        }
    )
    summary = summarize(four, build_lattice(four))
    assert summary.mult_histogram == {4: 1}
    assert not summary.triple_only
    assert summary.chi_M == 3 - 8 + 3


def test_summary_from_counts(ceva3_summary: ArrangementSummary) -> None:
    """Test summary_from_counts agrees with the geometric summary."""
    assert summary_from_counts(9, 12) == ceva3_summary
    assert summary_from_counts(6, 4).mult_histogram == {2: 3, 3: 4}
    assert not summary_from_counts(3, 1).essential
    assert not summary_from_counts(2, 0).essential
    assert summary_from_counts(2, 0).chi_M == 0


@mark.parametrize("d, n3", [(1, 0), (3, 2), (4, -1)])
def test_summary_from_counts_invalid(d: int, n3: int) -> None:
    """Test summary_from_counts rejects impossible counts."""
    with pytest_raises(InvalidInvariantsError):
        summary_from_counts(d, n3)


@mark.parametrize("d, order, seed", [(3, 1, 0), (6, 1, 11), (7, 3, 5)])
def test_generate_random_arrangement(d: int, order: int, seed: int) -> None:
    """Test sampled arrangements are deterministic, triple-only and essential."""
    arrangement = generate_random_arrangement(d, order, seed)
    assert arrangement == generate_random_arrangement(d, order, seed)
    assert arrangement.d == d
    assert arrangement.order == order
    summary = summarize(arrangement, build_lattice(arrangement))
    assert summary.triple_only
    assert summary.essential


def test_generate_random_arrangement_errors() -> None:
    """Test generate_random_arrangement argument and budget errors."""
    with pytest_raises(ValueError):
        generate_random_arrangement(1, 1, 0)
    with pytest_raises(SamplingBudgetExhausted):
        generate_random_arrangement(5, 1, 0, max_attempts=1)


@mark.parametrize("name", ["ceva3", "ceva2", "triangle"])
def test_lattice_invariant_under_line_rescaling(name: str) -> None:
    """Test rescaling the input lines by nonzero scalars leaves the lattice alone."""
    arrangement = get_builtin(name)
    order = arrangement.order
    lines = []
    for index, line in enumerate(arrangement.lines):
        scalar = CyclotomicElement.from_rational(order, index + 2, 3)
        scalar = scalar + CyclotomicElement.zeta(order)
        scaled = (scalar * entry for entry in line.coefficients)
        lines.append([format_coefficient(entry) for entry in scaled])
    rescaled = load_arrangement({"cyclotomic_order": order, "lines": lines})
    assert rescaled == arrangement
    assert build_lattice(rescaled) == build_lattice(arrangement)
