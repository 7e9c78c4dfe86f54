"""k-dimensional binary pattern primitives.

Patterns are plain numpy bool arrays of ndim >= 2, row-major, last axis
fastest-varying. Coordinates are tuples of python ints. Cells outside the
array are treated as background everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np
from scipy import ndimage

Coord = tuple[int, ...]


class DimensionError(ValueError):
    """The pattern's dimensionality is not supported by the operation."""


def as_pattern(data) -> np.ndarray:
    """Validate and convert array-like input to a bool pattern array.

    Accepts bool arrays or integer arrays containing only 0/1.
    """
    arr = np.asarray(data)
    if arr.ndim < 2:
        raise DimensionError(f"pattern must have at least 2 dimensions, got {arr.ndim}")
    if arr.dtype != bool:
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("pattern cells must be exactly 0 or 1")
        arr = arr.astype(bool)
    return arr


def foreground_count(pattern) -> int:
    return int(np.count_nonzero(as_pattern(pattern)))


def foreground_coords(pattern) -> set[Coord]:
    arr = as_pattern(pattern)
    return {tuple(map(int, c)) for c in np.argwhere(arr)}


def in_bounds(shape: tuple[int, ...], c: Coord) -> bool:
    return len(c) == len(shape) and all(0 <= ci < ni for ci, ni in zip(c, shape))


@dataclass(frozen=True)
class Neighborhood:
    """The in-bounds Chebyshev-1 ball around a cell, center included."""

    center: Coord
    members: frozenset[Coord]
    foreground_count: int


def _clipped_ranges(shape, c):
    return [range(max(ci - 1, 0), min(ci + 1, ni - 1) + 1) for ci, ni in zip(c, shape)]


def neighborhood(pattern, c) -> Neighborhood:
    """All in-bounds coords at Chebyshev distance <= 1 from ``c``.

    Out-of-bounds positions are background and are omitted from the member
    set. ``foreground_count`` includes the center cell itself.
    """
    arr = as_pattern(pattern)
    c = tuple(int(x) for x in c)
    if not in_bounds(arr.shape, c):
        raise IndexError(f"center {c} out of bounds for shape {arr.shape}")
    ranges = _clipped_ranges(arr.shape, c)
    members = frozenset(product(*ranges))
    block = arr[tuple(slice(r.start, r.stop) for r in ranges)]
    return Neighborhood(center=c, members=members, foreground_count=int(block.sum()))


def connected_components(pattern) -> tuple[int, dict[Coord, int]]:
    """Label foreground under (3^k - 1)-adjacency (8-connectivity in 2D).

    Returns the component count and a coord -> label map for every
    foreground cell. Labels start at 1.
    """
    arr = as_pattern(pattern)
    structure = np.ones((3,) * arr.ndim, dtype=bool)
    labeled, count = ndimage.label(arr, structure=structure)
    labels = {tuple(map(int, c)): int(labeled[tuple(c)]) for c in np.argwhere(arr)}
    return count, labels


def component_count(pattern) -> int:
    """Component count only, skipping the label map."""
    arr = as_pattern(pattern)
    structure = np.ones((3,) * arr.ndim, dtype=bool)
    _, count = ndimage.label(arr, structure=structure)
    return count


def non_unit_width_pixels(pattern) -> set[Coord]:
    """Foreground pixels covered by at least one all-foreground 2x2 window.

    This is the union of the four corner-anchored 2x2 hit-or-miss responses
    used by the unit-width convergence metric. 2D patterns only.
    """
    arr = as_pattern(pattern)
    if arr.ndim != 2:
        raise DimensionError("non_unit_width_pixels requires a 2D pattern")
    blocks = arr[:-1, :-1] & arr[1:, :-1] & arr[:-1, 1:] & arr[1:, 1:]
    marked = np.zeros_like(arr)
    marked[:-1, :-1] |= blocks
    marked[1:, :-1] |= blocks
    marked[:-1, 1:] |= blocks
    marked[1:, 1:] |= blocks
    return {tuple(map(int, c)) for c in np.argwhere(marked)}
