"""Figures for benchmark output."""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from blackpeg.bench import BenchRecord  # noqa: E402

SERIES = (
    ("max_queries", "realized max", "#1b9e77"),
    ("mean_queries", "realized mean", "#66c2a5"),
    ("our_bound", "single-count bound", "#d95f02"),
    ("chvatal_bound", "Chvatal", "#7570b3"),
    ("chen_bound", "Chen et al.", "#e7298a"),
)


def plot_bench(records: Sequence[BenchRecord], path, title: str = "Queries to recover the secret"):
    """Grouped bars, one group per (N, K), written to ``path`` (format from suffix)."""
    labels = [f"N={r.N}\nK={r.K}" for r in records]
    pos = np.arange(len(records))
    width = 0.8 / len(SERIES)
    fig, ax = plt.subplots(figsize=(max(4.0, 1.4 * len(records) + 2), 3.6))
    for i, (attr, label, color) in enumerate(SERIES):
        ax.bar(pos + (i - (len(SERIES) - 1) / 2) * width,
               [getattr(r, attr) for r in records], width, label=label, color=color)
    ax.set_xticks(pos)
    ax.set_xticklabels(labels)
    ax.set_ylabel("queries")
    ax.set_title(title)
    ax.legend(fontsize=7, frameon=False)
    fig.tight_layout()
    fig.savefig(Path(path), dpi=120, metadata={"Software": None})
    plt.close(fig)
