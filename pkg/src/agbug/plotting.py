"""Figures for session results: Hilbert functions and Jordan type diagrams."""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402


def hilbert_figure(H, path: str, title: str = "") -> str:
    fig, ax = plt.subplots(figsize=(max(3, 0.6 * len(H) + 1.5), 3))
    ax.bar(range(len(H)), H, color="#4477aa")
    for i, h in enumerate(H):
        ax.text(i, h, str(h), ha="center", va="bottom", fontsize=8)
    ax.set_xticks(range(len(H)))
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_xlabel("degree")
    ax.set_ylabel("dim")
    ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def jordan_figure(P, path: str, title: str = "") -> str:
    """Ferrers diagram: one row of boxes per Jordan block."""
    P = list(P)
    width = max(P, default=1)
    fig, ax = plt.subplots(figsize=(max(2.5, 0.3 * width + 1), max(2, 0.3 * len(P) + 1)))
    for r, part in enumerate(P):
        for c in range(part):
            ax.add_patch(plt.Rectangle((c, -r - 1), 1, 1, fill=True, fc="#ccddaa", ec="black"))
    ax.set_xlim(0, width)
    ax.set_ylim(-len(P), 0)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def session_figures(entries, directory: str, stem: str) -> list[str]:
    """Draw every Hilbert function and Jordan type found in the results."""
    os.makedirs(directory, exist_ok=True)
    out = []
    for e in entries:
        label = f"[{e.line}] {e.command}"
        H = e.fields.get("hilbert")
        if isinstance(H, tuple) and H and all(isinstance(h, int) for h in H):
            out.append(hilbert_figure(H, os.path.join(directory, f"{stem}-L{e.line}-hilbert.png"),
                                      f"{label}: H = {H}"))
        P = e.fields.get("jordan")
        if isinstance(P, tuple) and P:
            out.append(jordan_figure(P, os.path.join(directory, f"{stem}-L{e.line}-jordan.png"),
                                     f"{label}: P = {P}"))
    return out
