"""Histogram figures for corpus reports (rendered off-screen)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .properties import BUCKETS, CorpusReport  # noqa: E402


def histogram_figure(report: CorpusReport, prop: str):
    counts = report.histogram()[prop]
    fig, ax = plt.subplots(figsize=(4.5, 3.0))
    ax.bar(range(len(BUCKETS)), [counts[b] for b in BUCKETS], color="#4c72b0")
    ax.set_xticks(range(len(BUCKETS)), BUCKETS)
    ax.set_xlabel(prop)
    ax.set_ylabel("instances")
    ax.set_title(f"{prop} ({len(report.reports)} instances)")
    fig.tight_layout()
    return fig


def write_figures(report: CorpusReport, directory: str | Path) -> list[Path]:
    """One PNG per property plus an overview grid; returns the written paths."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    props = report.properties()
    for prop in props:
        fig = histogram_figure(report, prop)
        path = out / f"hist_{prop}.png"
        fig.savefig(path, dpi=100)
        plt.close(fig)
        written.append(path)

    hist = report.histogram()
    fig, axes = plt.subplots(1, len(props), figsize=(2.6 * len(props), 2.8), sharey=True)
    for ax, prop in zip(axes, props):
        ax.bar(range(len(BUCKETS)), [hist[prop][b] for b in BUCKETS], color="#55a868")
        ax.set_xticks(range(len(BUCKETS)), BUCKETS)
        ax.set_title(prop, fontsize=9)
    axes[0].set_ylabel("instances")
    fig.tight_layout()
    path = out / "histograms.png"
    fig.savefig(path, dpi=100)
    plt.close(fig)
    written.append(path)
    return written
