"""Exception classes for the milnor_hodge package."""

from .enums import ExitCode


class MilnorHodgeException(Exception):
    """Base class for exceptions in the milnor_hodge package."""

    exit_code: ExitCode = ExitCode.CONSISTENCY

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class ParseError(MilnorHodgeException):
    """Exception raised when an input cannot be parsed."""

    exit_code = ExitCode.PARSE


class CoefficientParseError(ParseError):
    """Exception raised when a coefficient string does not follow the grammar."""

    def __init__(self, text: str, reason: str) -> None:
        super().__init__(f"Cannot parse coefficient {text!r}: {reason}.")


class DocumentParseError(ParseError):
    """Exception raised when an arrangement document is malformed."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"Invalid arrangement document: {reason}")


class HypothesisViolation(MilnorHodgeException):
    """Exception raised when the input falls outside the supported arrangements."""

    exit_code = ExitCode.HYPOTHESIS


class ZeroLineError(HypothesisViolation):
    """Exception raised when all three coefficients of a line vanish."""

    def __init__(self, index: int | None = None) -> None:
        where = "" if index is None else f" (line {index})"
        super().__init__(f"All coefficients are zero{where}.")


class DuplicateLineError(HypothesisViolation):
    """Exception raised when two input lines are proportional."""

    def __init__(self, first: int, second: int) -> None:
        super().__init__(f"Lines {first} and {second} are proportional.")


class ProportionalLinesError(HypothesisViolation):
    """Exception raised when intersecting a line with itself."""

    def __init__(self) -> None:
        super().__init__("Cannot intersect proportional lines.")


class NotTripleOnlyError(HypothesisViolation):
    """Exception raised when a lattice point has multiplicity above 3."""

    def __init__(self, point: str, multiplicity: int) -> None:
        super().__init__(
            f"Lattice point {point} has multiplicity {multiplicity}; "
            "only double and triple points are supported."
        )


class NotEssentialError(HypothesisViolation):
    """Exception raised when all lines pass through one point."""

    def __init__(self, point: str) -> None:
        super().__init__(
            f"All lines pass through {point}; the arrangement is a pencil."
        )


class InvalidInvariantsError(HypothesisViolation):
    """Exception raised when (d, n3, beta3) are out of range."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"Invalid combinatorial invariants: {reason}.")


class SamplingBudgetExhausted(HypothesisViolation):
    """Exception raised when random sampling does not find an arrangement."""

    def __init__(self, d: int, attempts: int) -> None:
        super().__init__(
            f"No triple point arrangement of {d} lines found in {attempts} attempts."
        )


class NotCurveMilnorFiberHD(HypothesisViolation):
    """Exception raised when a polynomial is not the HD of a curve Milnor fiber."""

    def __init__(self, reason: str) -> None:
        super().__init__(f"Not a curve Milnor fiber HD: {reason}.")


class ConsistencyError(MilnorHodgeException):
    """Exception raised when an identity that must hold fails."""

    exit_code = ExitCode.CONSISTENCY

    def __init__(self, name: str, detail: str) -> None:
        super().__init__(f"Consistency check {name} failed: {detail}")
        self.name = name
        self.detail = detail


class NegativeMultiplicityError(ConsistencyError):
    """Exception raised when a Hodge multiplicity comes out negative."""

    def __init__(self, k: int, key: tuple[int, int, int], value: int) -> None:
        p, q, j = key
        super().__init__(
            "non_negativity",
            f"h^{{{p},{q}}}(H^{j}(F)) at character {k} is {value}.",
        )


class OrderMismatchError(MilnorHodgeException, ArithmeticError):
    """Exception raised when combining elements of different cyclotomic fields."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"Cyclotomic orders differ: {left} and {right}.")


class FieldDivisionByZero(MilnorHodgeException, ZeroDivisionError):
    """Exception raised when inverting zero."""

    def __init__(self) -> None:
        super().__init__("Division by zero in a cyclotomic field.")
