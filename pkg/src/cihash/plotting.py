"""Matplotlib figures for avalanche reports and orbits, written straight to files."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from cihash.analysis import AvalancheReport  # noqa: E402
from cihash.core import BitState  # noqa: E402

RC = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def binomial_reference(n: int = 256, p: float = 0.5) -> np.ndarray:
    k = np.arange(n + 1)
    logpmf = np.array([math.lgamma(n + 1) - math.lgamma(i + 1) - math.lgamma(n - i + 1) for i in k])
    return np.exp(logpmf + k * math.log(p) + (n - k) * math.log(1 - p))


def plot_avalanche(report: AvalancheReport, path: str | Path) -> Path:
    """Distance histogram against Binomial(256, 1/2), and per-bit flip rates."""
    path = Path(path)
    hist = np.asarray(report.histogram)
    rates = np.asarray(report.per_bit_flip_rate)
    with plt.rc_context(RC):
        fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6.4, 5.6))
        x = np.arange(len(hist))
        ax1.bar(x, hist, width=1.0, color="0.55", label="observed")
        ax1.plot(x, binomial_reference(len(hist) - 1) * report.trials, color="C3", lw=1.2,
                 label="Binomial(256, 0.5)")
        ax1.axvline(report.mean_distance, color="k", ls="--", lw=0.8)
        lo = max(0, int(report.mean_distance - 6 * max(report.std_distance, 1)))
        hi = min(len(hist) - 1, int(report.mean_distance + 6 * max(report.std_distance, 1)))
        ax1.set_xlim(lo, hi)
        ax1.set_xlabel("output Hamming distance (bits)")
        ax1.set_ylabel("trials")
        ax1.set_title(f"avalanche: {report.trials} trials, mean {report.mean_distance:.2f}, "
                      f"sd {report.std_distance:.2f}")
        ax1.legend(frameon=False)

        ax2.plot(np.arange(1, len(rates) + 1), rates, ".", ms=3, color="C0")
        ax2.axhline(0.5, color="k", lw=0.8)
        for bound in (0.35, 0.65):
            ax2.axhline(bound, color="C3", ls=":", lw=0.8)
        ax2.set_ylim(0, 1)
        ax2.set_xlim(0, len(rates) + 1)
        ax2.set_xlabel("output bit (cell index)")
        ax2.set_ylabel("flip rate")
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_orbit(states: Sequence[BitState], path: str | Path, title: str = "") -> Path:
    """Raster of cell values (columns) over iteration steps (rows)."""
    path = Path(path)
    grid = np.array([np.frombuffer(s.cells, dtype=np.uint8) for s in states])
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        ax.imshow(grid, aspect="auto", interpolation="nearest", cmap="Greys",
                  extent=(0.5, grid.shape[1] + 0.5, grid.shape[0] - 0.5, -0.5))
        ax.set_xlabel("cell")
        ax.set_ylabel("step")
        if title:
            ax.set_title(title)
        fig.savefig(path)
        plt.close(fig)
    return path
