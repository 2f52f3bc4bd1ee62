"""Figure and CSV rendering for Betti tables and defect profiles.

Figures go through the Agg backend so the report path works headless; every
figure is written next to a CSV holding the same numbers.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .diagnostics import DefectProfile  # noqa: E402
from .homology import BettiTable  # noqa: E402


def write_betti_csv(table: BettiTable, path: Path):
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["i", "j", "beta"])
        for (i, j), value in sorted(table.entries.items()):
            writer.writerow([i, j, value])


def render_betti_png(table: BettiTable, path: Path):
    """Macaulay-style layout: column i, row j - i."""
    max_i = max(i for i, _ in table.entries)
    max_shift = max(j - i for i, j in table.entries)
    grid = [[0] * (max_i + 1) for _ in range(max_shift + 1)]
    for (i, j), value in table.entries.items():
        grid[j - i][i] = value
    fig, ax = plt.subplots(figsize=(1.0 + 0.6 * (max_i + 1), 1.0 + 0.6 * (max_shift + 1)))
    ax.imshow(grid, cmap="Blues", aspect="equal")
    for r, row in enumerate(grid):
        for c, value in enumerate(row):
            if value:
                ax.text(c, r, str(value), ha="center", va="center", fontsize=9)
    ax.set_xlabel("homological degree i")
    ax.set_ylabel("twist j - i")
    ax.set_xticks(range(max_i + 1))
    ax.set_yticks(range(max_shift + 1))
    ax.set_title(f"Betti table (p = {table.field_char}, pd = {table.pd}, reg = {table.reg})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_defect_csv(profile: DefectProfile, path: Path):
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["step", "degree", "quotient_dim", "dim_kernel", "e_kernel"])
        for idx, step in enumerate(profile.steps, start=1):
            writer.writerow(
                [idx, step.degree, step.hilb_quotient.pole_order, step.dim_kernel, step.e_kernel]
            )


def render_defect_png(profile: DefectProfile, path: Path):
    steps = list(range(1, len(profile.steps) + 1))
    kernels = [s.e_kernel if s.is_obstruction else 0 for s in profile.steps]
    fig, ax = plt.subplots(figsize=(max(3.0, 0.8 * len(steps) + 1.5), 3.0))
    bars = ax.bar(steps, kernels, color="firebrick")
    for bar, step in zip(bars, profile.steps):
        if step.is_obstruction:
            ax.text(
                bar.get_x() + bar.get_width() / 2,
                bar.get_height(),
                f"dim {step.dim_kernel}",
                ha="center",
                va="bottom",
                fontsize=8,
            )
    ax.set_xlabel("sop step")
    ax.set_ylabel("kernel multiplicity")
    ax.set_xticks(steps)
    verdict = "regular sequence" if profile.is_regular_sequence else "obstructed"
    ax.set_title(
        f"length {profile.length} vs {profile.degree_product} x e = "
        f"{profile.degree_product * profile.base.multiplicity} ({verdict})"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
