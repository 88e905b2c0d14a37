"""Matplotlib rendering of singularity point sets.

The CLI report path writes these figures next to the delimited output;
they mirror the hand-rolled SVG export but with proper axes.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def render_rootsets(rootsets, path, title=None):
    """Scatter the roots of one or more RootSets with the reference circle.

    The overlay is the unit circle in the q-plane or |t| = 1/2 in the
    t-plane, matching the plane of the first set.
    """
    rootsets = list(rootsets)
    plane = rootsets[0].plane if rootsets else "q"
    radius = 1.0 if plane == "q" else 0.5

    fig, ax = plt.subplots(figsize=(5, 5))
    theta = np.linspace(0, 2 * np.pi, 400)
    ax.plot(radius * np.cos(theta), radius * np.sin(theta),
            color="0.6", linewidth=0.8, zorder=1)
    for rs in rootsets:
        xs = [float(z.real) for z, _ in rs.roots]
        ys = [float(z.imag) for z, _ in rs.roots]
        ax.scatter(xs, ys, s=12, zorder=2,
                   label=f"{rs.family} n={rs.n}" if rs.family else None)
    ax.set_aspect("equal")
    ax.axhline(0, color="0.85", linewidth=0.5, zorder=0)
    ax.axvline(0, color="0.85", linewidth=0.5, zorder=0)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    if len(rootsets) > 1:
        ax.legend(fontsize=8, loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata={"Software": "qkernel"} if str(path).endswith(".png") else None)
    plt.close(fig)
