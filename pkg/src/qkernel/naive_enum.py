"""Brute-force dynamic programming over the quarter-plane grid.

Ground truth for every other enumeration path.  Counts are exact Python
ints; a walk of length n never leaves [0, n]^2, so layer n is an
(n+1) x (n+1) table.  Only two consecutive layers are kept unless the full
table is requested.
"""

from __future__ import annotations

from dataclasses import dataclass

from .models import ModelId, step_set

_AXES = ("x_axis", "y_axis", "origin")


@dataclass
class WalkTable:
    """Full count table: counts[n][i][j] = walks of length n from (0,0) to (i,j)."""

    model: ModelId
    counts: list

    def layer(self, n):
        return self.counts[n]

    def total(self, n):
        return sum(sum(row) for row in self.counts[n])


def _advance(layer, steps, size):
    new = [[0] * size for _ in range(size)]
    for i in range(size):
        row_out = new[i]
        for a, b in steps:
            pi = i - a
            if pi < 0 or pi >= size:
                continue
            prev_row = layer[pi]
            for j in range(size):
                pj = j - b
                if 0 <= pj < size:
                    c = prev_row[pj]
                    if c:
                        row_out[j] += c
    return new


def walk_table(model: ModelId, N: int) -> WalkTable:
    steps = step_set(model).steps
    size = N + 1
    layer = [[0] * size for _ in range(size)]
    layer[0][0] = 1
    layers = [layer]
    for _ in range(N):
        layer = _advance(layer, steps, size)
        layers.append(layer)
    return WalkTable(model, layers)


def count_all(model: ModelId, N: int) -> list:
    """S_0..S_N: total quarter-plane walks of each length."""
    steps = step_set(model).steps
    size = N + 1
    layer = [[0] * size for _ in range(size)]
    layer[0][0] = 1
    out = [1]
    for _ in range(N):
        layer = _advance(layer, steps, size)
        out.append(sum(sum(row) for row in layer))
    return out


def count_axis(model: ModelId, N: int, axis: str) -> list:
    """Counts of walks ending on the x-axis (j=0), y-axis (i=0), or at the origin."""
    if axis not in _AXES:
        raise ValueError(f"axis must be one of {_AXES}")
    steps = step_set(model).steps
    size = N + 1
    layer = [[0] * size for _ in range(size)]
    layer[0][0] = 1
    out = [1]
    for _ in range(N):
        layer = _advance(layer, steps, size)
        if axis == "x_axis":
            out.append(sum(row[0] for row in layer))
        elif axis == "y_axis":
            out.append(sum(layer[0]))
        else:
            out.append(layer[0][0])
    return out


def count_half_plane(model: ModelId, N: int) -> list:
    """Walks constrained only by y >= 0 that end on the x-axis.

    The x-coordinate ranges over [-n, n]; it is tracked with an offset of N.
    """
    steps = step_set(model).steps
    width = 2 * N + 1
    height = N + 1
    layer = [[0] * height for _ in range(width)]  # layer[x + N][y]
    layer[N][0] = 1
    out = [1]
    for _ in range(N):
        new = [[0] * height for _ in range(width)]
        for xi in range(width):
            row_out = new[xi]
            for a, b in steps:
                px = xi - a
                if px < 0 or px >= width:
                    continue
                prev = layer[px]
                for y in range(height):
                    py = y - b
                    if 0 <= py < height:
                        c = prev[py]
                        if c:
                            row_out[y] += c
        layer = new
        out.append(sum(layer[xi][0] for xi in range(width)))
    return out
