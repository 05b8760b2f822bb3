"""Delimited and graphical reporting for burst-error simulations."""

from __future__ import annotations

import csv
from typing import Sequence

FIELDS = ("bursts", "trials", "successes", "ratio")


def write_sweep_csv(path: str, rows: Sequence[dict]) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=FIELDS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row[k] for k in FIELDS})


def render_sweep_plot(path: str, rows: Sequence[dict], title: str = "") -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    bursts = [row["bursts"] for row in rows]
    ratios = [row["ratio"] for row in rows]
    fig, ax = plt.subplots(figsize=(5.5, 3.5))
    ax.plot(bursts, ratios, marker="o", color="#1f6f8b")
    ax.set_xlabel("burst positions corrupted")
    ax.set_ylabel("decode success ratio")
    ax.set_ylim(-0.05, 1.05)
    ax.set_xticks(bursts)
    ax.grid(True, alpha=0.3)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
