"""
CSV tables with locale-independent 9-significant-digit numbers.
"""

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from sea_mtt.config import write_atomic
from sea_mtt.constants import CSV_SIGNIFICANT_DIGITS


def format_number(value: Any) -> str:
    """Render a cell: floats with 9 significant digits, everything else via str()."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return f"{value:.{CSV_SIGNIFICANT_DIGITS}g}"
    if hasattr(value, "value"):  # str enums
        return str(value.value)
    return str(value)


@dataclass
class CsvTable:
    """Header plus rows; every row has as many cells as the header."""

    header: list[str]
    rows: list[list[Any]] = field(default_factory=list)

    def add_row(self, row: list[Any]) -> None:
        if len(row) != len(self.header):
            raise ValueError(f"Row has {len(row)} cells, header has {len(self.header)}")
        self.rows.append(row)

    def render(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.header)
        for row in self.rows:
            writer.writerow([format_number(cell) for cell in row])
        return buffer.getvalue()

    def write(self, path: Optional[Path]) -> str:
        """Write to ``path`` atomically and return the rendered text."""
        text = self.render()
        if path is not None:
            write_atomic(Path(path), text)
        return text
