"""``.had`` matrix files, built-in matrix aliases and JSON run reports.

``.had`` layout: the decimal order v on the first line, then v lines of v
characters from ``+``/``-``, each terminated by LF. Nothing else is accepted.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .errors import BentHadError, ParseError
from .matrix import HadamardMatrix, paley, sylvester, sylvester_form, symplectic_form


def parse_matrix_text(text: str) -> HadamardMatrix:
    if "\r" in text:
        raise ParseError("CR characters are not allowed; use LF line endings")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not re.fullmatch(r"[1-9][0-9]*", lines[0]):
        raise ParseError("first line must be the decimal order v")
    v = int(lines[0])
    rows = lines[1:]
    if len(rows) != v:
        raise ParseError(f"expected {v} rows, found {len(rows)}")
    grid = np.empty((v, v), dtype=np.int64)
    for i, row in enumerate(rows):
        if len(row) != v:
            raise ParseError(f"row {i + 1} has {len(row)} characters, expected {v}")
        bad = set(row) - {"+", "-"}
        if bad:
            raise ParseError(f"row {i + 1} contains invalid character {sorted(bad)[0]!r}")
        grid[i] = [1 if ch == "+" else -1 for ch in row]
    return HadamardMatrix(grid)


def parse_matrix_file(path) -> HadamardMatrix:
    with open(path, "r", encoding="ascii", newline="") as fh:
        try:
            text = fh.read()
        except UnicodeDecodeError:
            raise ParseError(f"{path}: non-ASCII content") from None
    return parse_matrix_text(text)


def write_matrix_file(h: HadamardMatrix, path):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(h.to_text())


ALIASES = {
    "s4": lambda: sylvester(2),
    "s16": lambda: sylvester(4),
    "s64": lambda: sylvester(6),
    "paley2-17": lambda: paley(17, "II"),
    "symp16": lambda: sylvester_form(symplectic_form(4)),
}


def resolve_matrix(name: str) -> HadamardMatrix:
    """A built-in alias, ``sylvester-H``, ``paley1-Q``, ``paley2-Q`` or a ``.had`` path."""
    if name in ALIASES:
        return ALIASES[name]()
    m = re.fullmatch(r"sylvester-(\d+)", name)
    if m:
        return sylvester(int(m.group(1)))
    m = re.fullmatch(r"paley([12])-(\d+)", name)
    if m:
        return paley(int(m.group(2)), "I" if m.group(1) == "1" else "II")
    if os.path.exists(name):
        return parse_matrix_file(name)
    raise BentHadError(f"unknown matrix {name!r}: not an alias and no such file")


@dataclass
class RunReport:
    command: str
    parameters: dict
    results: dict
    matrix_id: str = None
    elapsed_ms: float = 0.0
    version: str = __version__
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "command": self.command,
            "parameters": self.parameters,
            "matrix_id": self.matrix_id,
            "results": self.results,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def strip_timing(obj):
    """Drop every ``elapsed_ms`` key, for determinism comparisons."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "elapsed_ms"}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def write_report(report: RunReport, out=None):
    text = report.to_json()
    if out:
        Path(out).write_text(text)
    return text
