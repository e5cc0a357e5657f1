"""Figures for verification reports, written with the non-interactive Agg backend."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .report import RunReport  # noqa: E402

PASS_COLOR = "#3b7dd8"
FAIL_COLOR = "#d8453b"


def _label(value) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(map(str, value)) + ")"
    return str(value)


def _paired(ax, rows, left: str, right: str, key: str):
    """Side-by-side bars of two numeric columns, one pair per row."""
    xs = range(len(rows))
    ax.bar([x - 0.2 for x in xs], [r[left] for r in rows], width=0.4, label=left, color=PASS_COLOR)
    ax.bar([x + 0.2 for x in xs], [r[right] for r in rows], width=0.4, label=right, color="#9bbbe8")
    for x, r in zip(xs, rows):
        if not r["ok"]:
            ax.annotate("x", (x, max(r[left], r[right])), color=FAIL_COLOR, ha="center")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([_label(r.get(key, "")) for r in rows], rotation=70, fontsize=7)
    ax.axhline(0, color="black", linewidth=0.5)
    ax.legend(fontsize=8)


def _verdicts(ax, rows, cols):
    """Passing and failing rows, grouped by the first descriptive column."""
    key = next((c for c in cols if c not in ("ok",)), None)
    groups: dict[str, list[int]] = defaultdict(lambda: [0, 0])
    for r in rows:
        groups[_label(r.get(key, ""))][0 if r["ok"] else 1] += 1
    names = list(groups)
    xs = range(len(names))
    ax.bar(xs, [groups[g][0] for g in names], color=PASS_COLOR, label="pass")
    ax.bar(xs, [groups[g][1] for g in names], bottom=[groups[g][0] for g in names], color=FAIL_COLOR, label="fail")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(names, rotation=70, fontsize=7)
    ax.set_xlabel(key or "")
    ax.set_ylabel("rows")
    ax.legend(fontsize=8)


def plot_report(report: RunReport, path: str | Path) -> Path:
    """Draw the report in the form that suits its columns and save it to ``path``."""
    path = Path(path)
    cols = report.columns()
    rows = report.rows
    fig, ax = plt.subplots(figsize=(8, 4.5))
    numeric = [r for r in rows if isinstance(r.get("chi_V"), int)]
    if numeric:
        _paired(ax, numeric, "chi_V", "chi_W", "cycle_type")
        ax.set_ylabel("character value")
    elif "trace" in cols and "predicted" in cols and len(rows) <= 60:
        _paired(ax, rows, "trace", "predicted", "cycle_type")
        ax.set_ylabel("character value")
    elif "fixed" in cols and "evaluation" in cols and len(rows) <= 60:
        _paired(ax, rows, "fixed", "evaluation", "d")
        ax.set_ylabel("count")
    elif "character" in cols and "evaluation" in cols and len(rows) <= 60:
        _paired(ax, rows, "character", "evaluation", "d")
        ax.set_ylabel("value")
    elif rows:
        _verdicts(ax, rows, cols)
    else:
        ax.text(0.5, 0.5, "no rows", ha="center", va="center")
    params = ", ".join(f"{k}={_label(v)}" for k, v in report.parameters.items() if v is not None)
    ax.set_title(f"{report.command} {params}: {report.verdict}", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path


def write_outputs(report: RunReport, directory: str | Path) -> tuple[Path, Path]:
    """``<command>.csv`` and ``<command>.png`` inside ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    csv_path = directory / f"{report.command}.csv"
    csv_path.write_text(report.to_csv())
    png_path = plot_report(report, directory / f"{report.command}.png")
    return csv_path, png_path
