"""Schema classes for the milnor_hodge package."""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from . import __version__
from .arrangement import ArrangementDocument, ArrangementSummary
from .defect import DefectResult
from .hodge import BettiReport


def format_rational(value: Fraction) -> str:
    """Render a rational as "p/q", integers included ("2/1")."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class SpectrumTerm(BaseModel):
    """
    One term n_alpha t^alpha of the spectrum.

    Attributes:
        alpha (str): The exponent as "p/q".
        coeff (int): The coefficient n_alpha.
    """

    alpha: str
    coeff: int


class PDEntry(BaseModel):
    """
    One multiplicity h^{p,q}(H^j(F)) at character k.

    Attributes:
        k (int): The character index.
        p (int): The Hodge index p.
        q (int): The Hodge index q.
        j (int): The cohomological degree.
        mult (int): The multiplicity.
    """

    k: int
    p: int
    q: int
    j: int
    mult: int


class HDEntry(BaseModel):
    """
    One coefficient of u^p v^q at character k of the Hodge-Deligne polynomial.

    Attributes:
        k (int): The character index.
        p (int): The exponent of u.
        q (int): The exponent of v.
        coeff (int): The signed coefficient.
    """

    k: int
    p: int
    q: int
    coeff: int


class MonodromyFactor(BaseModel):
    """
    A factor Phi_order^exponent of the characteristic polynomial on H^j(F).

    Attributes:
        j (int): The cohomological degree.
        order (int): The order of the cyclotomic polynomial.
        exponent (int): Its exponent.
    """

    j: int
    order: int
    exponent: int


class CheckResult(BaseModel):
    """
    Outcome of one named invariant.

    Attributes:
        name (str): The invariant name.
        passed (bool): Whether it holds, serialized as "pass".
        detail (str): What was compared.
    """

    model_config = ConfigDict(populate_by_name=True)

    name: str
    passed: bool = Field(alias="pass")
    detail: str = ""


class RunReport(BaseModel):
    """
    Full report of one run. ``summary`` and ``defect`` are None when the run
    starts from (d, n3, beta3) instead of geometry.

    Attributes:
        version (str): The version of the package.
        source (str): What the run started from.
        summary (ArrangementSummary | None): The combinatorial summary.
        defect (DefectResult | None): The rank data of beta3.
        spectrum (list[SpectrumTerm]): The spectrum, sorted by alpha.
        pd (list[PDEntry]): PD entries sorted by (k, j, p, q).
        hd (list[HDEntry]): HD entries sorted by (k, p, q).
        betti (BettiReport): Betti numbers and weights.
        monodromy (list[MonodromyFactor]): Characteristic polynomial factors.
        checks (list[CheckResult]): The invariant suite.
    """

    version: str = __version__
    source: str
    summary: ArrangementSummary | None = None
    defect: DefectResult | None = None
    spectrum: list[SpectrumTerm] = Field(default_factory=list)
    pd: list[PDEntry] = Field(default_factory=list)
    hd: list[HDEntry] = Field(default_factory=list)
    betti: BettiReport
    monodromy: list[MonodromyFactor] = Field(default_factory=list)
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(check.passed for check in self.checks)


class CheckFailure(BaseModel):
    """
    A failing corpus item, with enough to reproduce it.

    Attributes:
        seed (int): The seed of the item.
        d (int): The number of lines.
        order (int): The cyclotomic order.
        check (str): The failing check.
        detail (str): The failure detail.
        arrangement (ArrangementDocument | None): The sampled arrangement, None when
            sampling itself failed.
    """

    seed: int
    d: int
    order: int
    check: str
    detail: str
    arrangement: ArrangementDocument | None = None


class CheckSummary(BaseModel):
    """
    Outcome of a corpus run.

    Attributes:
        count (int): The number of corpus items.
        passed (int): The number of items without failures.
        failures (list[CheckFailure]): All failures in corpus order.
    """

    count: int
    passed: int
    failures: list[CheckFailure] = Field(default_factory=list)
