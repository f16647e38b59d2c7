"""Named diagram collections and reproduction of published w_x tables.

A catalog is newline-delimited JSON, one entry per line::

    {"name": "8_4", "code": "X- 7 16 8 1 ; ...", "expected": {"w": 0, "w_x": -2},
     "source": "..."}

``expected`` and ``source`` are optional.  Two tables ship with the package
(see :func:`bundled_table`).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path

from .diagram import Diagram, parse_pd
from .errors import CatalogError, DiagramError, DuplicateNameError
from .nullification import InvariantReport, chirality_verdict

__all__ = [
    "Expected",
    "CatalogEntry",
    "TableRow",
    "TableReport",
    "load_catalog",
    "reproduce_table",
    "bundled_table",
    "CSV_COLUMNS",
]

CSV_COLUMNS = ["name", "n", "s", "k", "c", "o", "w", "w_x", "w_y", "expected_w_x", "status"]


@dataclass(frozen=True)
class Expected:
    w: int | None = None
    w_x: int | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    code: str
    diagram: Diagram
    expected: Expected | None = None
    source: str = ""


def _entry_from_record(rec: object, where: str) -> CatalogEntry:
    if not isinstance(rec, dict):
        raise CatalogError(f"{where}: record must be a JSON object")
    name, code = rec.get("name"), rec.get("code")
    if not isinstance(name, str) or not name:
        raise CatalogError(f"{where}: missing or invalid 'name'")
    if not isinstance(code, str):
        raise CatalogError(f"{where}: missing or invalid 'code'")
    try:
        diagram = parse_pd(code)
    except DiagramError as exc:
        raise type(exc)(f"{where} ({name}): {exc}") from exc
    exp = rec.get("expected")
    expected = None
    if exp is not None:
        if not isinstance(exp, dict):
            raise CatalogError(f"{where}: 'expected' must be an object")
        for key in ("w", "w_x"):
            if exp.get(key) is not None and not isinstance(exp[key], int):
                raise CatalogError(f"{where}: expected.{key} must be an integer")
        expected = Expected(exp.get("w"), exp.get("w_x"))
    return CatalogEntry(name, code, diagram, expected, str(rec.get("source", "")))


def load_catalog(path: str | Path) -> list[CatalogEntry]:
    """Read and validate every entry; raises OSError when unreadable."""
    path = Path(path)
    entries: list[CatalogEntry] = []
    seen: set[str] = set()
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            where = f"{path}:{lineno}"
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CatalogError(f"{where}: invalid JSON: {exc}") from exc
            entry = _entry_from_record(rec, where)
            if entry.name in seen:
                raise DuplicateNameError(f"{where}: duplicate entry name {entry.name!r}")
            seen.add(entry.name)
            entries.append(entry)
    return entries


def bundled_table(name: str) -> Path:
    """Path of a table shipped with the package, e.g. ``"table1"``."""
    ref = resources.files("nullwrithe") / "tables" / f"{name.removesuffix('.ndjson')}.ndjson"
    return Path(str(ref))


@dataclass(frozen=True)
class TableRow:
    name: str
    report: InvariantReport
    expected_w_x: int | None
    status: str  # exact | mirror | mismatch | computed-only

    def to_dict(self) -> dict:
        r = self.report
        return {
            "name": self.name,
            "n": r.n, "s": r.s, "k": r.k, "c": r.c, "o": r.o,
            "w": r.w, "w_x": r.w_x, "w_y": r.w_y,
            "expected_w_x": self.expected_w_x,
            "status": self.status,
            "verdict": str(r.verdict),
        }


def _status(report: InvariantReport, expected: Expected | None) -> str:
    if expected is None or (expected.w is None and expected.w_x is None):
        return "computed-only"
    exact = mirror = True
    if expected.w is not None:
        exact &= report.w == expected.w
        mirror &= report.w == -expected.w
    if expected.w_x is not None:
        exact &= report.w_x == expected.w_x
        mirror &= report.w_x == -expected.w_x
    if exact:
        return "exact"
    return "mirror" if mirror else "mismatch"


@dataclass
class TableReport:
    rows: list[TableRow]

    @property
    def summary(self) -> dict[str, int]:
        counts = {"rows": len(self.rows), "exact": 0, "mirror": 0, "mismatch": 0, "computed-only": 0}
        for row in self.rows:
            counts[row.status] += 1
        return counts

    @property
    def mismatches(self) -> list[TableRow]:
        return [r for r in self.rows if r.status == "mismatch"]

    def to_json(self) -> str:
        return json.dumps([r.to_dict() for r in self.rows], indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            d = row.to_dict()
            if d["expected_w_x"] is None:
                d["expected_w_x"] = ""
            writer.writerow(d)
        return buf.getvalue()

    def to_text(self) -> str:
        cols = CSV_COLUMNS + ["verdict"]
        table = [cols] + [
            ["" if v is None else str(v) for v in (row.to_dict()[c] for c in cols)] for row in self.rows
        ]
        widths = [max(len(r[i]) for r in table) for i in range(len(cols))]
        lines = ["  ".join(cell.ljust(wd) for cell, wd in zip(r, widths)).rstrip() for r in table]
        lines.append(", ".join(f"{k}={v}" for k, v in self.summary.items()))
        return "\n".join(lines) + "\n"


def reproduce_table(entries: list[CatalogEntry], seed: int = 0) -> TableReport:
    rows = []
    for entry in entries:
        report = chirality_verdict(entry.diagram, seed=seed)
        expected_w_x = entry.expected.w_x if entry.expected else None
        rows.append(TableRow(entry.name, report, expected_w_x, _status(report, entry.expected)))
    return TableReport(rows)


def entry_as_record(entry: CatalogEntry) -> dict:
    rec = {"name": entry.name, "code": entry.code}
    if entry.expected is not None:
        rec["expected"] = asdict(entry.expected)
    if entry.source:
        rec["source"] = entry.source
    return rec
