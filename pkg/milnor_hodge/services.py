"""Services classes and utils for the milnor_hodge package."""

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from random import Random
from typing import NamedTuple

from .arrangement import (
    Arrangement,
    ArrangementSummary,
    build_lattice,
    generate_random_arrangement,
    summarize,
    summary_from_counts,
)
from .catalog import BUILTINS, get_builtin
from .checks import geometry_checks, golden_checks, table_checks
from .defect import DefectResult, beta3
from .exceptions import (
    InvalidInvariantsError,
    MilnorHodgeException,
    NotEssentialError,
    NotTripleOnlyError,
)
from .hodge import (
    EquivariantHodgeTable,
    HDPoly,
    assemble_pd,
    betti_and_euler,
    monodromy_factors,
    specialize_hd,
)
from .schema import (
    CheckFailure,
    CheckResult,
    CheckSummary,
    HDEntry,
    MonodromyFactor,
    PDEntry,
    RunReport,
    SpectrumTerm,
    format_rational,
)
from .settings import Settings, get_settings
from .spectrum import SpectrumPoly, spectrum

logger = logging.getLogger(__name__)


class CorpusItem(NamedTuple):
    """One random arrangement of the check corpus."""

    seed: int
    d: int
    order: int


class AnalysisController:
    """
    Controller for the analysis pipeline.

    Attributes:
        settings (Settings): The settings.
    """

    corpus_orders: tuple[int, ...] = (1, 3)

    def __init__(self, settings: Settings | None = None) -> None:
        self.settings = settings if settings else get_settings()

    @staticmethod
    def spectrum_terms(poly: SpectrumPoly) -> list[SpectrumTerm]:
        """
        Get the report terms of a spectrum.

        Args:
            poly (SpectrumPoly): The spectrum.

        Returns:
            list[SpectrumTerm]: The nonzero terms sorted by exponent.
        """
        return [
            SpectrumTerm(alpha=format_rational(alpha), coeff=coeff)
            for alpha, coeff in poly
        ]

    @staticmethod
    def pd_entries(table: EquivariantHodgeTable) -> list[PDEntry]:
        """
        Get the report entries of a PD table.

        Args:
            table (EquivariantHodgeTable): The table.

        Returns:
            list[PDEntry]: The entries sorted by (k, j, p, q).
        """
        return [
            PDEntry(k=k, p=p, q=q, j=j, mult=mult)
            for k, p, q, j, mult in table.records()
        ]

    @staticmethod
    def hd_entries(hd: HDPoly) -> list[HDEntry]:
        """
        Get the report entries of an HD polynomial.

        Args:
            hd (HDPoly): The polynomial.

        Returns:
            list[HDEntry]: The entries sorted by (k, p, q).
        """
        return [
            HDEntry(k=k, p=p, q=q, coeff=coeff)
            for k, polynomial in hd.coefficients.items()
            for (p, q), coeff in polynomial.items()
        ]

    @staticmethod
    def monodromy(table: EquivariantHodgeTable) -> list[MonodromyFactor]:
        """
        Get the characteristic polynomial factors of the monodromy in each degree.

        Args:
            table (EquivariantHodgeTable): The table.

        Returns:
            list[MonodromyFactor]: The factors sorted by (j, order).
        """
        return [
            MonodromyFactor(j=j, order=order, exponent=exponent)
            for j in range(3)
            for order, exponent in monodromy_factors(table, j).items()
        ]

    def build_report(
        self,
        source: str,
        summary: ArrangementSummary,
        beta3_value: int,
        defect: DefectResult | None = None,
        checks: list[CheckResult] | None = None,
        geometric: bool = True,
        golden: bool = True,
    ) -> RunReport:
        """
        Assemble spectrum, PD, HD and Betti numbers and run the table checks.

        Args:
            source (str): What the run started from.
            summary (ArrangementSummary): The summary.
            beta3_value (int): The beta3 to assemble with.
            defect (DefectResult | None): The rank data, if any.
            checks (list[CheckResult] | None): Checks already run on the geometry.
            geometric (bool): Whether to include summary and defect in the report.
            golden (bool): Whether to run the golden checks.

        Returns:
            RunReport: The report.

        Raises:
            HypothesisViolation: If the invariants are out of range.
            ConsistencyError: If an assembled multiplicity is negative or a Betti
                identity fails.
        """
        table = assemble_pd(summary.d, summary.n3, beta3_value)
        all_checks = list(checks or [])
        all_checks.extend(table_checks(table, summary, beta3_value))
        if golden:
            all_checks.extend(golden_checks())
        return RunReport(
            source=source,
            summary=summary if geometric else None,
            defect=defect if geometric else None,
            spectrum=self.spectrum_terms(spectrum(summary.d, summary.n3)),
            pd=self.pd_entries(table),
            hd=self.hd_entries(specialize_hd(table)),
            betti=betti_and_euler(table, summary, beta3_value),
            monodromy=self.monodromy(table),
            checks=all_checks,
        )

    @staticmethod
    def assumed_defect(summary: ArrangementSummary, value: int) -> DefectResult:
        """
        Get rank data for a user-supplied beta3, skipping the evaluation matrix.

        Args:
            summary (ArrangementSummary): The summary.
            value (int): The assumed beta3.

        Returns:
            DefectResult: The rank data, flagged as assumed.

        Raises:
            InvalidInvariantsError: If the value is not allowed for this d.
        """
        if value not in (0, 1, 2) or (value and summary.d % 3):
            raise InvalidInvariantsError(
                f"cannot assume beta3 = {value} for d = {summary.d}"
            )
        logger.info("Skipping the rank computation, beta3 assumed to be %d", value)
        return DefectResult(
            m=summary.d // 3 if summary.d % 3 == 0 else None,
            n_triple=summary.n3,
            beta3=value,
            assumed=True,
        )

    def analyze(
        self,
        arrangement: Arrangement,
        source: str = "input",
        assume_beta3: int | None = None,
        golden: bool = True,
    ) -> RunReport:
        """
        Run the full pipeline on an arrangement.

        Args:
            arrangement (Arrangement): The arrangement.
            source (str): What the arrangement was read from.
            assume_beta3 (int | None): Use this beta3 instead of computing it.
            golden (bool): Whether to run the golden checks.

        Returns:
            RunReport: The report.

        Raises:
            NotTripleOnlyError: If a point has multiplicity above 3.
            NotEssentialError: If the arrangement is a pencil.
            ConsistencyError: If an identity fails during assembly.
        """
        lattice = build_lattice(arrangement)
        summary = summarize(arrangement, lattice)
        if not summary.triple_only:
            highest = lattice.highest()
            raise NotTripleOnlyError(str(highest.point), highest.multiplicity)
        if not summary.essential:
            raise NotEssentialError(str(lattice.points[0].point))

        if assume_beta3 is None:
            defect = beta3(summary, lattice.triple_points(), arrangement.order)
        else:
            defect = self.assumed_defect(summary, assume_beta3)
        return self.build_report(
            source,
            summary,
            defect.beta3,
            defect=defect,
            checks=geometry_checks(arrangement, lattice, summary, defect),
            golden=golden,
        )

    def analyze_builtin(self, name: str, assume_beta3: int | None = None) -> RunReport:
        """
        Run the full pipeline on a built-in arrangement.

        Args:
            name (str): The built-in name.
            assume_beta3 (int | None): Use this beta3 instead of computing it.

        Returns:
            RunReport: The report.
        """
        return self.analyze(
            get_builtin(name), source=f"builtin:{name}", assume_beta3=assume_beta3
        )

    def formulas(self, d: int, n3: int, beta3_value: int) -> RunReport:
        """
        Build the report straight from (d, n3, beta3), without geometry.

        Args:
            d (int): The number of lines.
            n3 (int): The number of triple points.
            beta3_value (int): The Papadima-Suciu invariant.

        Returns:
            RunReport: The report, with no summary and no defect.

        Raises:
            InvalidInvariantsError: If the invariants are out of range.
        """
        summary = summary_from_counts(d, n3)
        return self.build_report(
            f"formulas:d={d},n3={n3},beta3={beta3_value}",
            summary,
            beta3_value,
            geometric=False,
        )

    def corpus(self, count: int, max_d: int, seed: int) -> list[CorpusItem]:
        """
        Draw the random corpus: d uniform in [3, max_d], order in (1, 3).

        Args:
            count (int): The number of items.
            max_d (int): The largest number of lines.
            seed (int): The corpus seed.

        Returns:
            list[CorpusItem]: The items, a function of the arguments only.

        Raises:
            ValueError: If max_d < 3 or count < 0.
        """
        if max_d < 3:
            raise ValueError(f"--max-d must be at least 3, got {max_d}.")
        if count < 0:
            raise ValueError(f"--count must be non-negative, got {count}.")
        rng = Random(seed)
        return [
            CorpusItem(
                seed=rng.randrange(2**32),
                d=rng.randint(3, max_d),
                order=rng.choice(self.corpus_orders),
            )
            for _ in range(count)
        ]

    def check(self, count: int, max_d: int, seed: int) -> CheckSummary:
        """
        Run every invariant on a random corpus, plus the golden checks once.

        Args:
            count (int): The number of random arrangements.
            max_d (int): The largest number of lines.
            seed (int): The corpus seed.

        Returns:
            CheckSummary: Failures in corpus order, whatever the execution order.
        """
        items = self.corpus(count, max_d, seed)
        results: list[list[CheckFailure]] = [[] for _ in items]
        workers = self.settings.CHECK_WORKERS
        if workers > 1 and len(items) > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                futures = {
                    executor.submit(check_corpus_item, item): index
                    for index, item in enumerate(items)
                }
                for future in as_completed(futures):
                    results[futures[future]] = future.result()
        else:
            results = [check_corpus_item(item) for item in items]

        failures = [failure for result in results for failure in result]
        ceva = BUILTINS["ceva3"]
        failures.extend(
            CheckFailure(
                seed=seed,
                d=len(ceva.lines),
                order=ceva.cyclotomic_order,
                check=result.name,
                detail=result.detail,
                arrangement=ceva,
            )
            for result in golden_checks()
            if not result.passed
        )
        return CheckSummary(
            count=count,
            passed=sum(1 for result in results if not result),
            failures=failures,
        )


def check_corpus_item(item: CorpusItem) -> list[CheckFailure]:
    """
    Sample one corpus arrangement and run every non-golden invariant on it.

    Args:
        item (CorpusItem): The item.

    Returns:
        list[CheckFailure]: The failures, empty when everything holds.
    """
    try:
        arrangement = generate_random_arrangement(item.d, item.order, item.seed)
    except MilnorHodgeException as error:
        return [
            CheckFailure(
                seed=item.seed,
                d=item.d,
                order=item.order,
                check="sampling",
                detail=error.message,
            )
        ]

    document = arrangement.to_document()
    try:
        report = AnalysisController().analyze(
            arrangement, source=f"seed:{item.seed}", golden=False
        )
    except MilnorHodgeException as error:
        return [
            CheckFailure(
                seed=item.seed,
                d=item.d,
                order=item.order,
                check=getattr(error, "name", type(error).__name__),
                detail=error.message,
                arrangement=document,
            )
        ]
    return [
        CheckFailure(
            seed=item.seed,
            d=item.d,
            order=item.order,
            check=result.name,
            detail=result.detail,
            arrangement=document,
        )
        for result in report.checks
        if not result.passed
    ]


def get_controller() -> AnalysisController:
    """
    Get the analysis controller.

    Returns:
        AnalysisController: The analysis controller.
    """
    return AnalysisController()
