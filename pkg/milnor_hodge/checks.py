"""Named invariants tying the closed formulas to their definitions.

Every check returns a `CheckResult` and never raises for a failing identity;
exceptions from the pipeline itself are turned into failures as well.
"""

import logging
from fractions import Fraction
from math import comb

from .arrangement import (
    Arrangement,
    ArrangementSummary,
    IntersectionLattice,
    build_lattice,
    summarize,
)
from .catalog import get_builtin
from .defect import (
    DefectResult,
    EvaluationMatrix,
    beta3,
    build_evaluation_matrix,
    expected_monomial_count,
    matrix_rank,
)
from .exceptions import ConsistencyError, MilnorHodgeException
from .field import CyclotomicElement
from .hodge import (
    EquivariantHodgeTable,
    assemble_pd,
    betti_and_euler,
    characteristic_polynomial,
    h2_cubic,
    is_cubic,
    reconstruct_pd,
    specialize_hd,
    specialize_v1,
    spectrum_from_hodge,
    weight_graded_dimensions,
)
from .schema import CheckResult, format_rational
from .spectrum import binom2, spectrum

logger = logging.getLogger(__name__)

CEVA3_SPECTRUM: dict[Fraction, int] = {
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


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    if not passed:
        logger.warning("Check %s failed: %s", name, detail)
    return CheckResult(name=name, passed=passed, detail=detail)


def check_non_negativity(table: EquivariantHodgeTable) -> CheckResult:
    """Every multiplicity is a dimension."""
    negative = [record for record in table.records() if record[4] < 0]
    return _result(
        "non_negativity",
        not negative,
        f"negative entries (k, p, q, j, mult): {negative}" if negative else "",
    )


def check_conjugation_symmetry(table: EquivariantHodgeTable) -> CheckResult:
    """h^{p,q}(H^j)_k = h^{q,p}(H^j)_{d-k}."""
    broken = [
        (k, p, q, j)
        for k, p, q, j, mult in table.records()
        if table.multiplicity(-k, q, p, j) != mult
    ]
    return _result(
        "conjugation_symmetry",
        not broken,
        f"asymmetric at (k, p, q, j): {broken}" if broken else "",
    )


def _placement_allowed(k: int, p: int, q: int, j: int, d: int) -> bool:
    if max(p, q) > 2:
        return False
    if j == 0:
        return k == 0 and (p, q) == (0, 0)
    if j == 1:
        return (p, q) == (1, 1) if k == 0 else is_cubic(k, d) and p + q == 1
    if k == 0:
        return p + q in (3, 4)
    return p + q == 2 or (p + q == 3 and is_cubic(k, d))


def check_purity_placement(table: EquivariantHodgeTable) -> CheckResult:
    """Each entry sits at a weight its degree and character allow."""
    misplaced = [
        (k, p, q, j)
        for k, p, q, j, _ in table.records()
        if not _placement_allowed(k, p, q, j, table.d)
    ]
    return _result(
        "purity_placement",
        not misplaced,
        f"misplaced (k, p, q, j): {misplaced}" if misplaced else "",
    )


def check_eigenvalue_support(table: EquivariantHodgeTable, beta3: int) -> CheckResult:
    """H^1 eigenvalues are 1 and, when beta3 > 0, the primitive cubic roots."""
    d = table.d
    found = sorted(k for k in range(d) if table.eigenspace_dimension(k, 1))
    expected = [0] + ([d // 3, 2 * d // 3] if beta3 else [])
    return _result(
        "eigenvalue_support",
        found == expected,
        f"H^1 characters {found}, expected {expected}",
    )


def check_spectrum_agreement(table: EquivariantHodgeTable, n3: int) -> CheckResult:
    """Closed form and definition agree on (0, 3) and differ by exactly 1 at 3."""
    closed = spectrum(table.d, n3)
    definitional = spectrum_from_hodge(table)
    alphas = set(closed.terms) | set(definitional.terms)
    mismatches = [
        format_rational(alpha)
        for alpha in sorted(alphas)
        if alpha < 3 and closed.coefficient(alpha) != definitional.coefficient(alpha)
    ]
    gap = definitional.coefficient(Fraction(3)) - closed.coefficient(Fraction(3))
    return _result(
        "spectrum_agreement",
        not mismatches and gap == 1,
        f"mismatches at {mismatches}, gap at alpha=3 is {gap}",
    )


def check_spectrum_total(summary: ArrangementSummary) -> CheckResult:
    """The closed-form spectrum sums to chi(F) - 2."""
    total = spectrum(summary.d, summary.n3).total()
    return _result(
        "spectrum_total",
        total == summary.chi_F - 2,
        f"sum of n_alpha is {total}, chi(F) - 2 is {summary.chi_F - 2}",
    )


def check_spectrum_blocks(d: int, n3: int) -> CheckResult:
    """
    Closed-form identities of the spectrum: n_1 = C(d - 1, 2) - n3,
    n_2 = -(d - 1), n_{j/d} = n_{(d - j)/d + 2} for 3j not divisible by d, and
    every exponent lies in (0, 3] with a denominator dividing d.

    Args:
        d (int): The number of lines.
        n3 (int): The number of triple points.

    Returns:
        CheckResult: The result.
    """
    closed = spectrum(d, n3)
    problems = []
    n_one = closed.coefficient(Fraction(1))
    if n_one != binom2(d - 1) - n3:
        problems.append(f"n_1 = {n_one}, expected {binom2(d - 1) - n3}")
    n_two = closed.coefficient(Fraction(2))
    if n_two != 1 - d:
        problems.append(f"n_2 = {n_two}, expected {1 - d}")
    unpaired = [
        f"{j}/{d}"
        for j in range(1, d)
        if (3 * j) % d
        and closed.coefficient(Fraction(j, d))
        != closed.coefficient(Fraction(d - j, d) + 2)
    ]
    if unpaired:
        problems.append(f"conjugate blocks differ at {unpaired}")
    outside = [
        format_rational(alpha)
        for alpha in closed.terms
        if not 0 < alpha <= 3 or d % alpha.denominator
    ]
    if outside:
        problems.append(f"exponents outside the support: {outside}")
    return _result("spectrum_blocks", not problems, "; ".join(problems))


def check_round_trip(table: EquivariantHodgeTable) -> CheckResult:
    """PD is recovered from HD."""
    try:
        recovered = reconstruct_pd(specialize_hd(table), table.d)
    except MilnorHodgeException as error:
        return _result("round_trip", False, error.message)
    return _result(
        "round_trip",
        recovered == table,
        "" if recovered == table else f"recovered {recovered.entries}",
    )


def check_beta3_dependence(
    table: EquivariantHodgeTable, n3: int, beta3: int
) -> list[CheckResult]:
    """
    Varying beta3 with (d, n3) fixed changes PD, HD and the weight-graded
    dimensions of H^2 but leaves the spectrum and HD(u, 1) alone.

    Args:
        table (EquivariantHodgeTable): The assembled table.
        n3 (int): The number of triple points.
        beta3 (int): The beta3 the table was assembled with.

    Returns:
        list[CheckResult]: The spectrum and weight results.
    """
    d = table.d
    if d % 3:
        detail = f"3 does not divide d = {d}, beta3 is fixed at 0"
        return [
            _result("beta3_cancels_in_spectrum", True, detail),
            _result("beta3_changes_weights", True, detail),
        ]

    spectrum_ok, weights_ok, details = True, True, []
    own_spectrum = spectrum_from_hodge(table)
    own_weights = weight_graded_dimensions(table)
    own_hd = specialize_hd(table)
    for other in (value for value in (0, 1, 2) if value != beta3):
        virtual = assemble_pd(d, n3, other, allow_negative=True)
        virtual_hd = specialize_hd(virtual)
        if (
            spectrum_from_hodge(virtual) != own_spectrum
            or specialize_v1(virtual_hd) != specialize_v1(own_hd)
            or virtual_hd == own_hd
            or virtual == table
        ):
            spectrum_ok = False
            details.append(f"beta3={other} moves the spectrum or fixes PD")
        weights = weight_graded_dimensions(virtual)
        if weights[2] == own_weights[2] or weights[3] == own_weights[3]:
            weights_ok = False
            details.append(f"beta3={other} leaves Gr^W_2 or Gr^W_3 unchanged")
    detail = "; ".join(details)
    return [
        _result("beta3_cancels_in_spectrum", spectrum_ok, detail),
        _result("beta3_changes_weights", weights_ok, detail),
    ]


def check_betti(
    table: EquivariantHodgeTable, summary: ArrangementSummary, beta3: int
) -> CheckResult:
    """b0 = 1, b1 = d - 1 + 2 beta3, b0 - b1 + b2 = d chi(M)."""
    try:
        report = betti_and_euler(table, summary, beta3)
    except ConsistencyError as error:
        return _result("betti_euler", False, error.message)
    return _result(
        "betti_euler",
        True,
        f"(b0, b1, b2) = ({report.b0}, {report.b1}, {report.b2}), "
        f"chi(F) = {report.chi_F}",
    )


def check_galois_invariance(table: EquivariantHodgeTable) -> CheckResult:
    """
    The monodromy has an integer characteristic polynomial of degree b_j in
    each degree j.
    """
    try:
        degrees = [characteristic_polynomial(table, j).degree() for j in range(3)]
    except ConsistencyError as error:
        return _result("galois_invariance", False, error.detail)
    bettis = [table.betti(j) for j in range(3)]
    return _result(
        "galois_invariance",
        degrees == bettis,
        f"degrees {degrees}, Betti numbers {bettis}",
    )


def table_checks(
    table: EquivariantHodgeTable, summary: ArrangementSummary, beta3: int
) -> list[CheckResult]:
    """
    Run every invariant of an assembled table.

    Args:
        table (EquivariantHodgeTable): The table.
        summary (ArrangementSummary): The summary it was assembled from.
        beta3 (int): The beta3 it was assembled with.

    Returns:
        list[CheckResult]: The results in a fixed order.
    """
    return [
        check_non_negativity(table),
        check_conjugation_symmetry(table),
        check_purity_placement(table),
        check_eigenvalue_support(table, beta3),
        check_spectrum_agreement(table, summary.n3),
        check_spectrum_total(summary),
        check_spectrum_blocks(summary.d, summary.n3),
        check_round_trip(table),
        *check_beta3_dependence(table, summary.n3, beta3),
        check_betti(table, summary, beta3),
        check_galois_invariance(table),
    ]


def check_pair_count(
    arrangement: Arrangement, lattice: IntersectionLattice
) -> CheckResult:
    """Every pair of lines meets at exactly one lattice point."""
    pairs = sum(comb(point.multiplicity, 2) for point in lattice.points)
    return _result(
        "pair_count",
        pairs == comb(arrangement.d, 2),
        f"{pairs} incident pairs, C({arrangement.d}, 2) = {comb(arrangement.d, 2)}",
    )


def check_incidence(
    arrangement: Arrangement, lattice: IntersectionLattice
) -> CheckResult:
    """A line passes through a lattice point exactly when it is listed as incident."""
    wrong = [
        (str(point.point), index)
        for point in lattice.points
        for index, line in enumerate(arrangement.lines)
        if line.contains(point.point) != (index in point.incident)
    ]
    return _result(
        "incidence", not wrong, f"wrong incidences: {wrong}" if wrong else ""
    )


def check_euler_from_counts(summary: ArrangementSummary) -> CheckResult:
    """chi(M) = 3 - 2d + n2 + 2 n3."""
    expected = 3 - 2 * summary.d + summary.n2 + 2 * summary.n3
    return _result(
        "euler_from_counts",
        summary.chi_M == expected,
        f"chi(M) = {summary.chi_M}, 3 - 2d + n2 + 2 n3 = {expected}",
    )


def check_beta3_range(defect: DefectResult) -> CheckResult:
    """Observed beta3 is 0, 1 or 2."""
    return _result("beta3_range", defect.beta3 in (0, 1, 2), f"beta3 = {defect.beta3}")


def _rescale_factor(order: int, index: int) -> CyclotomicElement:
    # c + zeta with |c| >= 2 never vanishes
    constant = CyclotomicElement.from_rational(order, index + 2)
    return constant + CyclotomicElement.zeta(order)


def check_rank_rescaling(
    arrangement: Arrangement, lattice: IntersectionLattice, defect: DefectResult
) -> CheckResult:
    """The evaluation rank does not depend on the point representatives."""
    if defect.m is None or defect.assumed:
        return _result("rank_rescaling", True, "no evaluation matrix")
    order = arrangement.order
    representatives = []
    for index, point in enumerate(lattice.triple_points()):
        factor = _rescale_factor(order, index)
        representatives.append(tuple(entry * factor for entry in point.coords))
    matrix = build_evaluation_matrix(representatives, 2 * defect.m - 3, order)
    rank = matrix_rank(matrix)
    return _result(
        "rank_rescaling",
        rank == defect.rank,
        f"rank {rank} after rescaling, {defect.rank} before",
    )


def _evaluation_matrix(
    arrangement: Arrangement, lattice: IntersectionLattice, defect: DefectResult
) -> EvaluationMatrix:
    representatives = [point.coords for point in lattice.triple_points()]
    return build_evaluation_matrix(representatives, 2 * defect.m - 3, arrangement.order)


def check_monomial_count(defect: DefectResult) -> CheckResult:
    """The evaluation matrix has one column per monomial of degree 2m - 3."""
    if defect.m is None or defect.assumed:
        return _result("monomial_count", True, "no evaluation matrix")
    expected = expected_monomial_count(2 * defect.m - 3)
    return _result(
        "monomial_count",
        defect.monomial_count == expected,
        f"{defect.monomial_count} columns, C(2m - 1, 2) = {expected}",
    )


def check_rank_permutation(
    arrangement: Arrangement, lattice: IntersectionLattice, defect: DefectResult
) -> CheckResult:
    """Reversing the points and the monomials leaves the rank alone."""
    if defect.m is None or defect.assumed:
        return _result("rank_permutation", True, "no evaluation matrix")
    matrix = _evaluation_matrix(arrangement, lattice, defect)
    reversed_matrix = EvaluationMatrix(
        order=matrix.order,
        monomials=matrix.monomials[::-1],
        rows=tuple(row[::-1] for row in reversed(matrix.rows)),
    )
    rank = matrix_rank(reversed_matrix)
    return _result(
        "rank_permutation",
        rank == defect.rank,
        f"rank {rank} after reordering, {defect.rank} before",
    )


def check_rank_monotonicity(
    arrangement: Arrangement, lattice: IntersectionLattice, defect: DefectResult
) -> CheckResult:
    """Dropping the first or the last point lowers the rank by at most 1."""
    if defect.m is None or defect.assumed or not defect.n_triple:
        return _result("rank_monotonicity", True, "no evaluation matrix")
    matrix = _evaluation_matrix(arrangement, lattice, defect)
    ranks = []
    for index in sorted({0, len(matrix.rows) - 1}):
        rows = matrix.rows[:index] + matrix.rows[index + 1 :]
        ranks.append(
            matrix_rank(
                EvaluationMatrix(
                    order=matrix.order, monomials=matrix.monomials, rows=rows
                )
            )
        )
    return _result(
        "rank_monotonicity",
        all(defect.rank - 1 <= rank <= defect.rank for rank in ranks),
        f"ranks {ranks} after dropping a point, {defect.rank} before",
    )


def geometry_checks(
    arrangement: Arrangement,
    lattice: IntersectionLattice,
    summary: ArrangementSummary,
    defect: DefectResult,
) -> list[CheckResult]:
    """
    Run the invariants of the lattice and the evaluation map.

    Args:
        arrangement (Arrangement): The arrangement.
        lattice (IntersectionLattice): Its lattice.
        summary (ArrangementSummary): Its summary.
        defect (DefectResult): Its beta3 data.

    Returns:
        list[CheckResult]: The results in a fixed order.
    """
    return [
        check_pair_count(arrangement, lattice),
        check_incidence(arrangement, lattice),
        check_euler_from_counts(summary),
        check_beta3_range(defect),
        check_rank_rescaling(arrangement, lattice, defect),
        check_monomial_count(defect),
        check_rank_permutation(arrangement, lattice, defect),
        check_rank_monotonicity(arrangement, lattice, defect),
    ]


def golden_checks() -> list[CheckResult]:
    """
    Pin the published Ceva(3) and triangle values, so that a change to the
    spectrum formulas, to the alpha = 3 convention or to the cubic characters
    fails loudly.

    Returns:
        list[CheckResult]: The results.
    """
    ceva_spectrum = spectrum(9, 12)
    results = [
        _result(
            "golden_ceva3_spectrum",
            ceva_spectrum.terms == CEVA3_SPECTRUM,
            f"Sp = {ceva_spectrum}",
        )
    ]

    gamma, _ = h2_cubic(9, 12, 2)
    results.append(
        _result(
            "golden_ceva3_cubic_hodge",
            gamma.get((2, 1, 2), 0) == 0 and gamma.get((1, 2, 2), 0) == 10,
            f"h^(2,1) = {gamma.get((2, 1, 2), 0)}, "
            f"h^(1,2) = {gamma.get((1, 2, 2), 0)}",
        )
    )

    arrangement = get_builtin("ceva3")
    lattice = build_lattice(arrangement)
    summary = summarize(arrangement, lattice)
    defect = beta3(summary, lattice.triple_points(), arrangement.order)
    results.append(
        _result(
            "golden_ceva3_beta3",
            summary.n3 == 12 and defect.beta3 == 2,
            f"n3 = {summary.n3}, beta3 = {defect.beta3}",
        )
    )

    triangle = spectrum(3, 0)
    results.append(
        _result(
            "golden_triangle_spectrum",
            triangle.terms == {Fraction(1): 1, Fraction(2): -2, Fraction(3): -1},
            f"Sp = {triangle}",
        )
    )
    return results
