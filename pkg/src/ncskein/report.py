"""Verification reports: one row per checked case, PASS iff every row passes."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Any


@dataclass
class RunReport:
    command: str
    parameters: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0
    summary: dict[str, Any] = field(default_factory=dict)
    _started: float = field(default_factory=time.perf_counter, repr=False, compare=False)

    def add(self, ok: bool, **fields: Any) -> None:
        row = dict(fields)
        row["ok"] = bool(ok)
        self.rows.append(row)

    def extend(self, other: "RunReport", **tag: Any) -> None:
        """Append another report's rows, optionally tagging each with extra fields."""
        self.rows.extend({**tag, **row} for row in other.rows)

    def finish(self) -> "RunReport":
        self.elapsed = time.perf_counter() - self._started
        return self

    @property
    def passed(self) -> bool:
        return all(r["ok"] for r in self.rows)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    @property
    def failures(self) -> list[dict[str, Any]]:
        return [r for r in self.rows if not r["ok"]]

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "command": self.command,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "rows": self.rows,
        }
        if self.summary:
            out["summary"] = self.summary
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, default=str)

    def columns(self) -> list[str]:
        cols: list[str] = []
        for row in self.rows:
            for key in row:
                if key not in cols:
                    cols.append(key)
        return cols

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.columns(), lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
        return buf.getvalue()

    def to_table(self, max_rows: int | None = None) -> str:
        cols = self.columns()
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items() if v is not None)
        head = f"{self.command} {params}".rstrip()
        rows = self.rows if max_rows is None else self.rows[:max_rows]
        cells = [[_fmt(r.get(c, "")) for c in cols] for r in rows]
        widths = [max([len(c)] + [len(row[j]) for row in cells]) for j, c in enumerate(cols)]
        lines = [head, "  ".join(c.rjust(w) for c, w in zip(cols, widths))]
        lines += ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells]
        if max_rows is not None and len(self.rows) > max_rows:
            lines.append(f"... {len(self.rows) - max_rows} more rows")
        lines += [f"{key}: {_fmt_summary(value)}" for key, value in self.summary.items()]
        lines.append(f"{self.verdict}: {len(self.rows) - len(self.failures)}/{len(self.rows)} cases")
        return "\n".join(lines)


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "ok" if value else "FAIL"
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(map(str, value)) + ")"
    return str(value)


def _fmt_summary(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return _fmt(value)
