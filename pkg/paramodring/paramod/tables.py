"""Shipped Jacobi tables under the data directory (``PARAMOD_DATA``)."""

from functools import lru_cache
from pathlib import Path

from paramodring.config import settings
from paramodring.errors import JacobiDataError
from paramodring.paramod.jacobi import JacobiFormData, parse_jacobi

SHIPPED = {
    5: ("g6", "g7", "g8", "g10"),
    7: ("g5", "g6", "g7", "g8", "g10"),
}


def data_dir() -> Path:
    return Path(settings.paramod_data)


def check_data_dir() -> Path:
    """The data directory, which must exist and hold at least one table."""
    root = data_dir()
    if not root.is_dir():
        raise JacobiDataError("data directory does not exist", str(root))
    if not any(root.glob("level*/*.jf")):
        raise JacobiDataError("data directory holds no Jacobi tables", str(root))
    return root


def table_path(level: int, name: str) -> Path:
    return data_dir() / f"level{level}" / f"{name}.jf"


@lru_cache(maxsize=32)
def _load(path: str) -> JacobiFormData:
    return parse_jacobi(path)


def load_table(level: int, name: str) -> JacobiFormData:
    return _load(str(table_path(level, name)))
