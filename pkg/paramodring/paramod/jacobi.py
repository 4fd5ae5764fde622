"""Jacobi form coefficient tables: ingestion, validation and index-N periodicity."""

import logging
from math import isqrt
from fractions import Fraction
from pathlib import Path
from typing import Callable

from paramodring.core.rational import format_rational, parse_rational
from paramodring.errors import InsufficientJacobiData, JacobiDataError

logger = logging.getLogger(__name__)

_HEADER_KEYS = ("weight", "index", "source", "precision")


def reduce_index(n: int, r: int, N: int) -> tuple[int, int]:
    """Representative (n', r') with r' in (-N, N] and the same 4Nn - r^2 and r mod 2N."""
    rr = r % (2 * N)
    if rr > N:
        rr -= 2 * N
    disc = 4 * N * n - r * r
    return (disc + rr * rr) // (4 * N), rr


class JacobiFormData:
    """Fourier coefficients c(n, r) of a Jacobi form of weight k and index N.

    Values are held by reduced index (see ``reduce_index``), so any c(n, r)
    whose reduced n' is at most ``max_n`` is known; entries missing from the
    table within that bound are zero. ``max_n=None`` means the table is exact
    (every coefficient known), which covers the zero form and on-demand tables.
    """

    def __init__(self, weight: int, index: int, max_n: int | None = None, source: str = "",
                 path: str | None = None, generator: Callable[[int, int], Fraction] | None = None):
        if index < 1:
            raise JacobiDataError(f"index must be positive, got {index}", path)
        self.weight = weight
        self.index = index
        self.max_n = max_n
        self.source = source
        self.path = path
        self._generator = generator
        self._reduced: dict[tuple[int, int], Fraction] = {}
        self._listed: dict[tuple[int, int], Fraction] = {}

    # --- ingestion ---
    def _store(self, n: int, r: int, value: Fraction, line: int | None):
        key = reduce_index(n, r, self.index)
        known = self._reduced.get(key)
        if known is not None and known != value:
            raise JacobiDataError(
                f"periodicity conflict: c({n},{r}) = {value} but c{key} = {known}", self.path, line
            )
        self._reduced[key] = value

    def add_entry(self, n: int, r: int, value, line: int | None = None):
        N, k = self.index, self.weight
        value = Fraction(value)
        if n < 0 or r < 0:
            raise JacobiDataError(f"entries need n >= 0 and r >= 0, got ({n},{r})", self.path, line)
        if (n, r) in self._listed:
            raise JacobiDataError(f"duplicate entry c({n},{r})", self.path, line)
        if r * r > 4 * N * n and value != 0:
            raise JacobiDataError(f"Koecher violation: c({n},{r}) with r^2 > 4Nn", self.path, line)
        if self.max_n is not None and n > self.max_n:
            raise JacobiDataError(f"c({n},{r}) lies beyond precision {self.max_n}", self.path, line)
        if k % 2 and value != 0:
            rr = reduce_index(n, r, N)[1]
            if r == 0 or rr == N:
                raise JacobiDataError(
                    f"parity conflict: odd weight forces c({n},{r}) = 0", self.path, line
                )
        self._listed[(n, r)] = value
        sign = -1 if k % 2 else 1
        self._store(n, r, value, line)
        if r:
            self._store(n, -r, sign * value, line)

    @classmethod
    def from_entries(cls, weight: int, index: int, entries, max_n: int | None = None,
                     source: str = "", path: str | None = None) -> "JacobiFormData":
        entries = list(entries)
        if max_n is None and entries:
            max_n = max(e[0] for e in entries)
        data = cls(weight, index, max_n, source, path)
        for entry in entries:
            n, r, value = entry[:3]
            line = entry[3] if len(entry) > 3 else None
            data.add_entry(n, r, value, line)
        return data

    @classmethod
    def from_function(cls, weight: int, index: int, fn: Callable[[int, int], Fraction],
                      source: str = "") -> "JacobiFormData":
        """Exact table whose coefficients are computed (and cached) on demand."""
        return cls(weight, index, None, source, generator=fn)

    # --- access ---
    def coeff(self, n: int, r: int) -> Fraction | None:
        """c(n, r), or None when it lies beyond the trusted precision."""
        N = self.index
        if n < 0 or r * r > 4 * N * n:
            return Fraction(0)
        key = reduce_index(n, r, N)
        if self._generator is not None:
            value = self._reduced.get(key)
            if value is None:
                value = Fraction(self._generator(*key))
                self._reduced[key] = value
            return value
        if self.max_n is not None and key[0] > self.max_n:
            return None
        return self._reduced.get(key, Fraction(0))

    def require(self, n: int, r: int) -> Fraction:
        value = self.coeff(n, r)
        if value is None:
            raise InsufficientJacobiData([(n, r)])
        return value

    def rows(self, max_n: int | None = None) -> list[tuple[int, int, Fraction]]:
        """Nonzero c(n, r) with r >= 0 for n up to ``max_n`` (default: precision)."""
        limit = self.max_n if max_n is None else max_n
        if limit is None:
            limit = max((n for n, _ in self._listed), default=0)
        out = []
        for n in range(limit + 1):
            for r in range(0, isqrt(4 * self.index * n) + 1):
                value = self.coeff(n, r)
                if value:
                    out.append((n, r, value))
        return out

    def is_zero(self) -> bool:
        return self._generator is None and not any(self._reduced.values())

    def __repr__(self):
        return f"JacobiFormData(weight={self.weight}, index={self.index}, max_n={self.max_n}, source={self.source!r})"


def parse_jacobi(path) -> JacobiFormData:
    """Read a Jacobi table: header lines ``weight``/``index``/``source``/``precision``, then ``n r p/q`` rows."""
    path = Path(path)
    header: dict[str, str] = {}
    entries: list[tuple[int, int, Fraction, int]] = []
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise JacobiDataError(f"cannot read table: {e}", str(path)) from e

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split(None, 1)
        if fields[0].lower() in _HEADER_KEYS:
            key = fields[0].lower()
            if entries:
                raise JacobiDataError(f"header '{key}' after coefficient rows", str(path), lineno)
            header[key] = fields[1].strip() if len(fields) > 1 else ""
            continue
        parts = line.split()
        if len(parts) != 3:
            raise JacobiDataError(f"malformed row {raw.strip()!r}", str(path), lineno)
        try:
            entries.append((int(parts[0]), int(parts[1]), parse_rational(parts[2]), lineno))
        except ValueError as e:
            raise JacobiDataError(f"malformed row {raw.strip()!r}: {e}", str(path), lineno) from e

    for key in ("weight", "index"):
        if key not in header:
            raise JacobiDataError(f"missing '{key}' header", str(path))
    try:
        weight = int(header["weight"])
        index = int(header["index"])
        precision = int(header["precision"]) if "precision" in header else None
    except ValueError as e:
        raise JacobiDataError(f"malformed header: {e}", str(path)) from e

    data = JacobiFormData.from_entries(
        weight, index, entries, precision, header.get("source", ""), str(path)
    )
    logger.debug("Loaded %s: weight %d, index %d, %d rows", path, weight, index, len(entries))
    return data


def format_jacobi(data: JacobiFormData, max_n: int | None = None) -> str:
    """Text of a table in the format read by ``parse_jacobi``."""
    limit = data.max_n if max_n is None else max_n
    if limit is None:
        raise JacobiDataError("an exact on-demand table needs an explicit precision to be written")
    lines = [
        f"weight {data.weight}",
        f"index {data.index}",
        f"source {data.source}",
        f"precision {limit}",
    ]
    lines += [f"{n} {r} {format_rational(v)}" for n, r, v in data.rows(limit)]
    return "\n".join(lines) + "\n"


def write_jacobi(data: JacobiFormData, path, max_n: int | None = None) -> Path:
    path = Path(path)
    text = format_jacobi(data, max_n)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path
