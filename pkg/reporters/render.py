# reporters/render.py
"""
Renderers shared by every CLI command.

JSON goes through pydantic, CSV through pandas, tables through rich. Table
and CSV cells come from the same frame, so all three carry identical values.

Usage:
    emit(records, OutputFormat.TABLE, console, title="su(3,4)")
"""
import json
from enum import Enum
from typing import List, Sequence

import pandas as pd
from pydantic import BaseModel, TypeAdapter
from rich.console import Console
from rich.table import Table

from ampleness.closed_forms import young_grid


class OutputFormat(str, Enum):
    JSON = "json"
    TABLE = "table"
    CSV = "csv"


def _cell(value):
    # lists and dicts become compact JSON so CSV/table agree with the JSON output
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"), ensure_ascii=False)
    return value


def records_frame(records: Sequence[BaseModel]) -> pd.DataFrame:
    rows = [{key: _cell(value) for key, value in r.model_dump(mode="json").items()} for r in records]
    return pd.DataFrame(rows)


def render_json(records: Sequence[BaseModel] | BaseModel) -> str:
    if isinstance(records, BaseModel):
        return records.model_dump_json(indent=2)
    items = list(records)
    if not items:
        return "[]"
    return TypeAdapter(List[type(items[0])]).dump_json(items, indent=2).decode("utf-8")


def render_csv(records: Sequence[BaseModel]) -> str:
    return records_frame(records).to_csv(index=False)


def render_table(records: Sequence[BaseModel], title: str | None = None) -> Table:
    frame = records_frame(records)
    table = Table(title=title, show_lines=False)
    for column in frame.columns:
        table.add_column(str(column), overflow="fold")
    for row in frame.itertuples(index=False):
        table.add_row(*("" if pd.isna(v) else str(v) for v in row))
    return table


def emit(records: Sequence[BaseModel] | BaseModel, fmt: OutputFormat, console: Console,
         title: str | None = None) -> None:
    """Write records to the console (stdout) in the requested format."""
    items = [records] if isinstance(records, BaseModel) else list(records)
    if fmt is OutputFormat.JSON:
        console.out(render_json(records), highlight=False)
    elif fmt is OutputFormat.CSV:
        console.out(render_csv(items), highlight=False, end="")
    else:
        console.print(render_table(items, title=title))


# ---------- Young diagrams ----------
def render_young(subset, p: int, q: int, marker: str = "*") -> str:
    """
    The q×p grid as text: one line per row (j_{p+q} on top), one cell per
    column (j_1 .. j_p), each cell its hook length with a marker when colored.
    """
    grid = young_grid(subset, p, q)
    cells = [[f"{box.hook}{marker if box.colored else ''}" for box in row] for row in grid]
    width = max(len(c) for row in cells for c in row)
    label_width = len(str(p + q))
    head = " " * (label_width + 3) + " ".join(str(box.column_label).rjust(width) for box in grid[0])
    lines = [head]
    for row, texts in zip(grid, cells):
        label = str(row[0].row_label).rjust(label_width)
        lines.append(f"{label} | " + " ".join(t.rjust(width) for t in texts))
    return "\n".join(lines)
