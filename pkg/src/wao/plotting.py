"""Figure rendering for solver reports.

Everything here writes files (Agg backend); nothing opens a window.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_history_plot(
    histories: Mapping[str, Sequence[int]],
    path: str,
    title: str | None = None,
) -> None:
    """Plot best-independent-set-size-so-far curves against generation."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for label, history in histories.items():
        ax.step(
            range(1, len(history) + 1), history, where="post", label=label, lw=1.2
        )
    ax.set_xlabel("generation")
    ax.set_ylabel("best independent set size so far")
    if title:
        ax.set_title(title)
    if len(histories) > 1:
        ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_bench_plot(rows: Sequence[Mapping], path: str) -> None:
    """Bar chart of attained set sizes, with known alpha markers when given."""
    labels = [f"{r['instance']} (L={r['L']})" for r in rows]
    sizes = [r["best_size"] for r in rows]
    fig, ax = plt.subplots(figsize=(max(6.4, 0.7 * len(rows)), 4.0))
    xs = range(len(rows))
    ax.bar(xs, sizes, color="steelblue", label="found")
    alphas = [(i, r["alpha"]) for i, r in enumerate(rows) if r.get("alpha") is not None]
    if alphas:
        ax.scatter(
            [i for i, _ in alphas],
            [a for _, a in alphas],
            color="crimson",
            zorder=3,
            marker="_",
            s=400,
            label="known alpha",
        )
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("independent set size")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
