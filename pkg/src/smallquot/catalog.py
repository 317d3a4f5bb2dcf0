"""Group catalogs (JSON lines) and report serialisation.

A catalog line looks like::

    {"name": "A5", "degree": 5, "generators": ["(1 2 3)", "(3 4 5)"]}

Each generator is either a 1-based image array or a cycle string.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .errors import CatalogError
from .groups import FiniteGroupTable, closure
from .perm import Permutation, parse_cycles
from .reports import CheckReport

FORMATS = ("json", "tsv")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    degree: int
    generators: tuple[Permutation, ...]

    def to_table(self, ceiling: int | None = None) -> FiniteGroupTable:
        return closure(self.generators, ceiling=ceiling)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "degree": self.degree,
            "generators": [g.image_list() for g in self.generators],
        }


def _generator(raw, degree: int, name: str, lineno: int) -> Permutation:
    where = f"entry {name!r}"
    if isinstance(raw, str):
        try:
            cycles = parse_cycles(raw)
        except ValueError as exc:
            raise CatalogError(f"{where}: bad cycle string {raw!r}: {exc}", lineno, name) from None
        points = [p for c in cycles for p in c]
        if any(not 1 <= p <= degree for p in points):
            raise CatalogError(f"{where}: {raw!r} moves a point outside 1..{degree}", lineno, name)
        if len(points) != len(set(points)):
            raise CatalogError(f"{where}: {raw!r} repeats a point", lineno, name)
        return Permutation.from_cycles(cycles, degree)
    if isinstance(raw, list):
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in raw):
            raise CatalogError(f"{where}: image array {raw!r} must hold integers", lineno, name)
        if len(raw) != degree or sorted(raw) != list(range(1, degree + 1)):
            raise CatalogError(
                f"{where}: {raw!r} is not a permutation of 1..{degree}", lineno, name
            )
        return Permutation.from_images(raw)
    raise CatalogError(f"{where}: generator {raw!r} is neither a list nor a string", lineno, name)


def parse_catalog(text: str) -> list[CatalogEntry]:
    """Parse JSON-lines catalog text; blank lines are skipped."""
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CatalogError(f"invalid JSON: {exc.msg}", lineno) from None
        if not isinstance(obj, dict):
            raise CatalogError("expected a JSON object", lineno)
        missing = {"name", "degree", "generators"} - obj.keys()
        if missing:
            raise CatalogError(f"missing field(s) {sorted(missing)}", lineno)
        name, degree, gens = obj["name"], obj["degree"], obj["generators"]
        if not isinstance(name, str) or not name:
            raise CatalogError("name must be a non-empty string", lineno)
        if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
            raise CatalogError(f"entry {name!r}: degree must be a positive integer", lineno, name)
        if not isinstance(gens, list) or not gens:
            raise CatalogError(f"entry {name!r}: generators must be a non-empty list", lineno, name)
        entries.append(
            CatalogEntry(name, degree, tuple(_generator(g, degree, name, lineno) for g in gens))
        )
    return entries


def load_catalog(path: str) -> list[CatalogEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_catalog(fh.read())


def emit_catalog(entries: list[CatalogEntry]) -> str:
    return "".join(json.dumps(e.to_dict(), separators=(", ", ": ")) + "\n" for e in entries)


def _cell(v) -> str:
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(v, separators=(",", ":"), sort_keys=True)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v).replace("\t", " ").replace("\n", " ")


def emit_report(report: CheckReport, fmt: str = "json") -> str:
    """Serialise a report; identical reports give byte-identical text.

    TSV layout: ``check``, ``params``, ``verdict`` and ``witnesses`` rows,
    then the counts table under its header row.
    """
    if fmt == "json":
        return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"
    if fmt != "tsv":
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    lines = [
        f"check\t{report.name}",
        f"params\t{_cell(report.params)}",
        f"verdict\t{report.verdict}",
        f"witnesses\t{_cell(report.witnesses) if report.witnesses else ''}",
    ]
    if report.columns:
        lines.append("\t".join(report.columns))
        lines.extend("\t".join(_cell(v) for v in row) for row in report.rows)
    return "\n".join(lines) + "\n"
