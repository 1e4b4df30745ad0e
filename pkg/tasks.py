"""Shell utils for milnor_hodge."""

from invoke import task
from invoke.context import Context

CACHES = {
    "bytecode": ["**/__pycache__", "**/*.pyc"],
    "pytest": [".pytest_cache", ".coverage", "htmlcov"],
    "mypy": [".mypy_cache"],
}


def _run_quiet(ctx: Context, command: str, report: bool, **kwargs) -> None:
    """Run a command, printing only its last output line unless report is set."""
    result = ctx.run(command, hide=not report, warn=True, **kwargs)
    if not report and result and result.stdout:
        print(result.stdout.splitlines()[-1])


@task
def clean(
    ctx: Context,
    bytecode: bool = False,
    pytest: bool = False,
    mypy: bool = False,
    extra: str = "",
) -> None:
    """
    Remove build artifacts and, on request, caches.

    Args:
        ctx: The Invoke context.
        bytecode: Also remove compiled Python files.
        pytest: Also remove the pytest cache and coverage data.
        mypy: Also remove the mypy cache.
        extra: Further space separated paths to remove.
    """
    patterns = ["build", "dist", "*.egg-info"]
    for name, wanted in (("bytecode", bytecode), ("pytest", pytest), ("mypy", mypy)):
        if wanted:
            patterns.extend(CACHES[name])
    patterns.extend(extra.split())
    ctx.run(f"rm -rf {' '.join(patterns)}", hide=True, warn=True)


@task
def install(
    ctx: Context,
    editable: bool = False,
    testing: bool = False,
    dev: bool = False,
    report: bool = False,
) -> None:
    """
    Install milnor_hodge with pip.

    Args:
        ctx: The Invoke context.
        editable: Install in editable mode.
        testing: Add the test extra.
        dev: Add the dev extra.
        report: Show the full pip output.
    """
    extras = [name for name, wanted in (("test", testing), ("dev", dev)) if wanted]
    target = f".[{','.join(extras)}]" if extras else "."
    flag = "-e " if editable else ""
    _run_quiet(ctx, f"pip install {flag}'{target}'", report)


@task
def precommit(ctx: Context) -> None:
    """Run the pre-commit hooks on every file."""
    ctx.run("pre-commit run --all-files", warn=True)


@task
def test(
    ctx: Context,
    integration: bool = False,
    report: bool = False,
) -> None:
    """
    Run the unit tests, and the command line tests when asked.

    Args:
        ctx: The Invoke context.
        integration: Also run tests/integration.
        report: Show the full pytest output.
    """
    suites = ["unit", "integration"] if integration else ["unit"]
    for suite in suites:
        print(f"Running {suite} tests...")
        _run_quiet(ctx, f"pytest tests/{suite}", report)


@task
def check(
    ctx: Context,
    count: int = 50,
    max_d: int = 9,
    seed: int = 7,
    workers: int = 1,
) -> None:
    """
    Run the invariant suite on a random corpus of arrangements.

    Args:
        ctx: The Invoke context.
        count: The number of random arrangements.
        max_d: The largest number of lines.
        seed: The corpus seed.
        workers: The number of worker processes.
    """
    ctx.run(
        f"milnor-hodge check --count {count} --max-d {max_d} --seed {seed} "
        "--output text",
        env={"MILNOR_HODGE_CHECK_WORKERS": str(workers)},
        warn=True,
    )
