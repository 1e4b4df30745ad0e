"""Built-in arrangements."""

from .arrangement import Arrangement, ArrangementDocument, load_arrangement
from .exceptions import DocumentParseError

BUILTINS: dict[str, ArrangementDocument] = {
    # (x^3 - y^3)(x^3 - z^3)(y^3 - z^3)
    "ceva3": ArrangementDocument(
        cyclotomic_order=3,
        lines=[
            ("1", "-1", "0"),
            ("1", "-z", "0"),
            ("1", "-z^2", "0"),
            ("1", "0", "-1"),
            ("1", "0", "-z"),
            ("1", "0", "-z^2"),
            ("0", "1", "-1"),
            ("0", "1", "-z"),
            ("0", "1", "-z^2"),
        ],
    ),
    "triangle": ArrangementDocument(
        cyclotomic_order=1,
        lines=[("1", "0", "0"), ("0", "1", "0"), ("0", "0", "1")],
    ),
    # (x^2 - y^2)(x^2 - z^2)(y^2 - z^2)
    "ceva2": ArrangementDocument(
        cyclotomic_order=1,
        lines=[
            ("1", "-1", "0"),
            ("1", "1", "0"),
            ("1", "0", "-1"),
            ("1", "0", "1"),
            ("0", "1", "-1"),
            ("0", "1", "1"),
        ],
    ),
}


def builtin_names() -> list[str]:
    """Return the names of the built-in arrangements."""
    return list(BUILTINS)


def get_builtin(name: str) -> Arrangement:
    """
    Load a built-in arrangement by name.

    Args:
        name (str): The name.

    Returns:
        Arrangement: The arrangement.

    Raises:
        DocumentParseError: If no built-in has this name.
    """
    try:
        document = BUILTINS[name]
    except KeyError as error:
        raise DocumentParseError(
            f"unknown built-in {name!r}, choose from {', '.join(BUILTINS)}"
        ) from error
    return load_arrangement(document)
