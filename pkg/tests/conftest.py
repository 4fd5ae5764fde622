from pathlib import Path

import pytest

from paramodring import database, main
from paramodring.config import settings
from paramodring.paramod.tables import load_table
from paramodring.suites import runner

ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = ROOT / "data"


@pytest.fixture(autouse=True)
def _settings(monkeypatch):
    """Shipped tables and small property counts for every test."""
    monkeypatch.setattr(settings, "paramod_data", str(DATA_DIR))
    monkeypatch.setattr(settings, "property_instances", 20)
    monkeypatch.setattr(settings, "embedding_samples", 10)
    monkeypatch.setattr(settings, "point_samples", 3)


@pytest.fixture
def g6_level5():
    return load_table(5, "g6")


@pytest.fixture
def g7_level5():
    return load_table(5, "g7")


@pytest.fixture
def g5_level7():
    return load_table(7, "g5")


@pytest.fixture
def write_table(tmp_path):
    """Write a Jacobi table from header fields and rows; returns its path."""

    def _write(weight, index, rows, precision=None, name="table.jf", extra=""):
        lines = [f"weight {weight}", f"index {index}", "source test fixture"]
        if precision is not None:
            lines.append(f"precision {precision}")
        lines += [f"{n} {r} {v}" for n, r, v in rows]
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n" + extra)
        return path

    return _write


@pytest.fixture
def run_db(monkeypatch, tmp_path):
    """Point the run history at a fresh SQLite file."""
    engine = database.make_engine(str(tmp_path / "runs.db"))
    session_factory = database.make_session_factory(engine)
    monkeypatch.setattr(database, "engine", engine)
    for module in (database, runner, main):
        monkeypatch.setattr(module, "SessionLocal", session_factory)
    return session_factory
