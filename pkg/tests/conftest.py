"""Fixtures for milnor_hodge tests."""

import json
from pathlib import Path

from pytest import fixture

from milnor_hodge.arrangement import (
    Arrangement,
    ArrangementSummary,
    IntersectionLattice,
    build_lattice,
    load_arrangement,
    summarize,
)
from milnor_hodge.catalog import get_builtin
from milnor_hodge.hodge import EquivariantHodgeTable, assemble_pd
from milnor_hodge.services import AnalysisController
from milnor_hodge.settings import Settings, get_settings


@fixture(name="dir_data")
def _dir_data() -> Path:
    return Path(__file__).parent / "data"


@fixture(name="dir_golden")
def _dir_golden(dir_data: Path) -> Path:
    return dir_data / "golden"


@fixture(name="ceva3")
def _ceva3() -> Arrangement:
    return get_builtin("ceva3")


@fixture(name="ceva2")
def _ceva2() -> Arrangement:
    return get_builtin("ceva2")


@fixture(name="triangle")
def _triangle() -> Arrangement:
    return get_builtin("triangle")


@fixture(name="pencil")
def _pencil() -> Arrangement:
    return load_arrangement(
        {
            "cyclotomic_order": 1,
            "lines": [["1", "0", "0"], ["0", "1", "0"], ["1", "-1", "0"]],
        }
    )


@fixture(name="ceva3_lattice")
def _ceva3_lattice(ceva3: Arrangement) -> IntersectionLattice:
    return build_lattice(ceva3)


@fixture(name="ceva3_summary")
def _ceva3_summary(
    ceva3: Arrangement, ceva3_lattice: IntersectionLattice
) -> ArrangementSummary:
    return summarize(ceva3, ceva3_lattice)


@fixture(name="ceva3_table")
def _ceva3_table() -> EquivariantHodgeTable:
    return assemble_pd(9, 12, 2)


@fixture(name="ceva2_table")
def _ceva2_table() -> EquivariantHodgeTable:
    return assemble_pd(6, 4, 1)


@fixture(name="triangle_table")
def _triangle_table() -> EquivariantHodgeTable:
    return assemble_pd(3, 0, 0)


@fixture(name="pencil_file")
def _pencil_file(tmp_path: Path, pencil: Arrangement) -> Path:
    path = tmp_path / "pencil.json"
    path.write_text(pencil.to_document().model_dump_json(), encoding="utf-8")
    return path


@fixture(name="malformed_file")
def _malformed_file(tmp_path: Path) -> Path:
    path = tmp_path / "malformed.json"
    path.write_text(json.dumps({"cyclotomic_order": 3, "lines": "x"}), "utf-8")
    return path


@fixture(name="controller")
def _controller() -> AnalysisController:
    return AnalysisController(settings=Settings())


@fixture(autouse=True)
def _clear_settings_cache():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
