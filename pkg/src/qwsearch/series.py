"""CSV emission and parsing for per-step resource series.

Floats are written with 12 significant digits, ``.`` as decimal separator and
``\\n`` line endings so files are byte-reproducible. Unpopulated cells are
empty strings. Parsing then re-emitting any file written here gives the same
bytes.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import QWSearchError

RESOURCE_COLUMNS = ("t", "backend", "P", "C_l1", "C_norm", "sC_closed", "sC_brute", "MC", "Q_noisy", "C_l1_noisy")
BACKEND_ORDER = {"": 0, "closed": 0, "full": 1}


class SeriesFormatError(QWSearchError, ValueError):
    pass


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if value == 0:
            value = 0.0  # no "-0"
        return format(value, ".12g")
    return str(value)


def parse_cell(text: str):
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


@dataclass
class ResourceSeries:
    columns: list[str]
    rows: list[list] = field(default_factory=list)

    def add(self, **values) -> None:
        unknown = set(values) - set(self.columns)
        if unknown:
            raise KeyError(f"unknown columns {sorted(unknown)}")
        self.rows.append([values.get(c) for c in self.columns])

    def column(self, name: str) -> list:
        j = self.columns.index(name)
        return [row[j] for row in self.rows]

    def check_order(self) -> None:
        """Rows must be strictly increasing in ``(t, backend)``."""
        if "t" not in self.columns:
            raise SeriesFormatError("series has no 't' column")
        jt = self.columns.index("t")
        jb = self.columns.index("backend") if "backend" in self.columns else None
        keys = []
        for row in self.rows:
            t = row[jt]
            if not isinstance(t, int):
                raise SeriesFormatError(f"step {t!r} is not an integer")
            backend = row[jb] if jb is not None else ""
            keys.append((t, BACKEND_ORDER.get(backend or "", 2)))
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise SeriesFormatError("rows are not strictly increasing in t")

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_cell(v) for v in row])
        return buf.getvalue()

    def write(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_csv())

    @classmethod
    def from_csv(cls, text: str) -> "ResourceSeries":
        reader = csv.reader(io.StringIO(text))
        try:
            header = next(reader)
        except StopIteration:
            raise SeriesFormatError("missing header row") from None
        except csv.Error as exc:
            raise SeriesFormatError(str(exc)) from exc
        if not header or any(not name for name in header):
            raise SeriesFormatError("malformed header row")
        series = cls(list(header))
        try:
            for lineno, raw in enumerate(reader, start=2):
                if len(raw) != len(header):
                    raise SeriesFormatError(f"line {lineno}: expected {len(header)} fields, got {len(raw)}")
                series.rows.append([parse_cell(cell) for cell in raw])
        except csv.Error as exc:
            raise SeriesFormatError(str(exc)) from exc
        series.check_order()
        return series

    @classmethod
    def read(cls, path: str | Path) -> "ResourceSeries":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise SeriesFormatError(f"cannot read {path}: {exc}") from exc
        return cls.from_csv(text)


def extremal_set(steps, values, kind: str = "max", tol: float = 1e-9) -> list[int]:
    """Steps whose value is within ``tol`` of the max (or min)."""
    finite = [v for v in values if v is not None and math.isfinite(v)]
    if not finite:
        return []
    if kind == "max":
        best = max(finite)
        return [t for t, v in zip(steps, values) if v is not None and v >= best - tol]
    if kind == "min":
        best = min(finite)
        return [t for t, v in zip(steps, values) if v is not None and v <= best + tol]
    raise ValueError(f"kind must be 'max' or 'min', got {kind!r}")


def extrema_coincide(steps, first, second, first_kind: str = "max", second_kind: str = "min", tol: float = 1e-9) -> bool:
    """True when the extremal step sets of two series share a step.

    Periodic series attain their extremum at several steps; alignment means
    at least one of those steps is common to both.
    """
    a = set(extremal_set(steps, first, first_kind, tol))
    b = set(extremal_set(steps, second, second_kind, tol))
    return bool(a & b)
