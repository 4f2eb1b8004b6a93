"""Render benchmark figures for a batch run into PNG files."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .report import PHASE_NAMES, QueryRecord, RunReport

_MODE_COLORS = {"eve": "tab:blue", "upper": "tab:orange", "oracle": "tab:green"}


def _ok(records: list[QueryRecord], mode: str) -> list[QueryRecord]:
    return [r for r in records if r.mode == mode and r.status == "ok"]


def _time_per_query(report: RunReport, path: Path) -> bool:
    fig, ax = plt.subplots(figsize=(8, 4.5))
    plotted = False
    for mode in report.modes:
        records = _ok(report.records, mode)
        if not records:
            continue
        ax.plot(
            [r.index for r in records],
            [r.total_ms for r in records],
            marker="o",
            markersize=3,
            linewidth=1,
            label=mode,
            color=_MODE_COLORS.get(mode),
        )
        plotted = True
    if not plotted:
        plt.close(fig)
        return False
    ax.set_xlabel("query index")
    ax.set_ylabel("wall time (ms)")
    ax.set_yscale("log")
    ax.set_title("Wall time per query")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return True


def _phase_breakdown(report: RunReport, path: Path) -> bool:
    modes = []
    means: dict[str, list[float]] = {phase: [] for phase in PHASE_NAMES}
    for mode in report.modes:
        records = _ok(report.records, mode)
        if not records or not any(
            phase in r.phase_ms for r in records for phase in PHASE_NAMES
        ):
            continue
        modes.append(mode)
        for phase in PHASE_NAMES:
            values = [r.phase_ms[phase] for r in records if phase in r.phase_ms]
            means[phase].append(sum(values) / len(values) if values else 0.0)
    if not modes:
        return False
    fig, ax = plt.subplots(figsize=(6, 4.5))
    bottoms = [0.0] * len(modes)
    for phase in PHASE_NAMES:
        ax.bar(modes, means[phase], bottom=bottoms, label=phase)
        bottoms = [b + m for b, m in zip(bottoms, means[phase])]
    ax.set_ylabel("mean time (ms)")
    ax.set_title("Mean phase breakdown")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return True


def _metric_panels(report: RunReport, path: Path) -> bool:
    coverage = [
        (r.index, r.coverage_ratio)
        for r in report.records
        if r.status == "ok" and r.coverage_ratio is not None
    ]
    redundant = [
        (r.index, r.redundant_ratio)
        for r in report.records
        if r.status == "ok" and r.redundant_ratio is not None
    ]
    if not coverage and not redundant:
        return False
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 4))
    if coverage:
        left.scatter(*zip(*coverage), s=12, color="tab:blue")
    left.set_xlabel("query index")
    left.set_ylabel("coverage ratio")
    left.set_title("Result share of the graph")
    if redundant:
        right.scatter(*zip(*redundant), s=12, color="tab:red")
    right.set_xlabel("query index")
    right.set_ylabel("redundant ratio")
    right.set_title("Upper-bound surplus")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return True


def render_figures(report: RunReport, out_dir: Path) -> list[Path]:
    """Write the standard figure set; returns the paths actually written.

    Figures with no matching data (e.g. metrics when only the oracle ran)
    are skipped rather than rendered empty.
    """
    figures_dir = Path(out_dir) / "figures"
    figures_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, renderer in (
        ("time_per_query.png", _time_per_query),
        ("phase_breakdown.png", _phase_breakdown),
        ("metrics.png", _metric_panels),
    ):
        target = figures_dir / name
        if renderer(report, target):
            written.append(target)
    return written
