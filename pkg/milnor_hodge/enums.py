"""Enum classes for the milnor_hodge package."""

from enum import Enum


class OutputFormat(Enum):
    """
    Enum class for the report formats of the command line.

    Attributes:
        JSON (str): Indented, key-stable JSON.
        TEXT (str): Aligned plain text.
    """

    JSON: str = "json"
    TEXT: str = "text"


class ExitCode(Enum):
    """
    Enum class for the process exit codes.

    Attributes:
        OK (int): Success.
        CONSISTENCY (int): An internal identity failed.
        HYPOTHESIS (int): The input violates the double/triple point hypotheses.
        PARSE (int): The input could not be parsed.
    """

    OK: int = 0
    CONSISTENCY: int = 1
    HYPOTHESIS: int = 2
    PARSE: int = 3
