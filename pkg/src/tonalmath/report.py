"""Tabular command reports rendered as aligned text, CSV or JSON."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

__all__ = ["Report"]


def _parse_cell(text: str):
    if text == "":
        return None
    if text in ("True", "False"):
        return text == "True"
    for conv in (int, float):
        try:
            return conv(text)
        except ValueError:
            pass
    return text


@dataclass
class Report:
    """Rows produced by one CLI command.

    ``formats`` maps column names to format specs for the human table only;
    CSV and JSON always carry the stored values at full precision.
    """

    command: str
    params: dict
    columns: list
    rows: list
    formats: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> str:
        doc = {"command": self.command, "params": self.params, "rows": self.rows}
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.columns, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: ("" if row.get(k) is None else row[k]) for k in self.columns})
        return buf.getvalue()

    def to_table(self) -> str:
        cells = [list(self.columns)]
        for row in self.rows:
            line = []
            for col in self.columns:
                v = row.get(col)
                if v is None:
                    line.append("")
                elif col in self.formats and isinstance(v, (int, float)) and not isinstance(v, bool):
                    line.append(format(v, self.formats[col]))
                else:
                    line.append(str(v))
            cells.append(line)
        widths = [max(len(r[i]) for r in cells) for i in range(len(self.columns))]
        out = []
        for i, r in enumerate(cells):
            out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
            if i == 0:
                out.append("  ".join("-" * w for w in widths))
        return "\n".join(out) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "table":
            return self.to_table()
        raise ValueError(f"unsupported report format {fmt!r}")

    @classmethod
    def from_json(cls, text: str) -> "Report":
        doc = json.loads(text)
        rows = doc["rows"]
        columns = list(rows[0]) if rows else []
        return cls(doc["command"], doc["params"], columns, rows)

    @classmethod
    def from_csv(cls, text: str, command: str = "", params: dict | None = None) -> "Report":
        reader = csv.DictReader(io.StringIO(text))
        rows = [{k: _parse_cell(v) for k, v in row.items()} for row in reader]
        return cls(command, params or {}, list(reader.fieldnames or []), rows)
