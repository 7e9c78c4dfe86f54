"""Zhang-Suen and Guo-Hall parallel thinning baselines for 2D patterns.

Both use the mark-then-sweep scheme: each sub-iteration marks deletable
pixels against the frozen pre-sub-iteration pattern, then deletes them all
at once. Neighbor layout (row x grows downward, column y rightward):

    P9 P2 P3
    P8 P1 P4
    P7 P6 P5
"""

from __future__ import annotations

import numpy as np

from .pattern import DimensionError, as_pattern


def _neighbor_planes(img):
    p = np.pad(img, 1)
    p2 = p[:-2, 1:-1]
    p3 = p[:-2, 2:]
    p4 = p[1:-1, 2:]
    p5 = p[2:, 2:]
    p6 = p[2:, 1:-1]
    p7 = p[2:, :-2]
    p8 = p[1:-1, :-2]
    p9 = p[:-2, :-2]
    return p2, p3, p4, p5, p6, p7, p8, p9


def _require_2d(pattern):
    arr = as_pattern(pattern)
    if arr.ndim != 2:
        raise DimensionError("baseline thinning supports 2D patterns only")
    return arr


def zs_thin(pattern) -> tuple[np.ndarray, int]:
    """Zhang-Suen two-sub-iteration parallel thinning.

    Sub-iteration 1 deletes pixels with 2 <= BP <= 6, AP = 1,
    P2*P4*P6 = 0 and P4*P6*P8 = 0 (southeast boundary); sub-iteration 2
    swaps the products to P2*P4*P8 and P2*P6*P8 (northwest boundary).
    Iterates until neither sub-iteration deletes.
    """
    img = _require_2d(pattern).copy()
    iterations = 0
    while True:
        iterations += 1
        changed = False
        for sub in (0, 1):
            p2, p3, p4, p5, p6, p7, p8, p9 = _neighbor_planes(img)
            seq = (p2, p3, p4, p5, p6, p7, p8, p9, p2)
            bp = sum(n.astype(np.uint8) for n in seq[:-1])
            ap = sum((~a & b).astype(np.uint8) for a, b in zip(seq[:-1], seq[1:]))
            cond = img & (bp >= 2) & (bp <= 6) & (ap == 1)
            if sub == 0:
                cond &= ~(p2 & p4 & p6) & ~(p4 & p6 & p8)
            else:
                cond &= ~(p2 & p4 & p8) & ~(p2 & p6 & p8)
            if cond.any():
                img[cond] = False
                changed = True
        if not changed:
            break
    return img, iterations


def gh_thin(pattern) -> tuple[np.ndarray, int]:
    """Guo-Hall two-sub-iteration parallel thinning.

    Deletes pixels with connectivity number CP = 1, NP = min(NP1, NP2) in
    {2, 3}, and a zero directional term: ((P2|P3|~P5) & P4) == 0 on the
    first (odd) sub-iteration, ((P6|P7|~P9) & P8) == 0 on the second.
    """
    img = _require_2d(pattern).copy()
    iterations = 0
    while True:
        iterations += 1
        changed = False
        for sub in (0, 1):
            p2, p3, p4, p5, p6, p7, p8, p9 = _neighbor_planes(img)
            cp = (
                (~p2 & (p3 | p4)).astype(np.uint8)
                + (~p4 & (p5 | p6)).astype(np.uint8)
                + (~p6 & (p7 | p8)).astype(np.uint8)
                + (~p8 & (p9 | p2)).astype(np.uint8)
            )
            np1 = (
                (p9 | p2).astype(np.uint8)
                + (p3 | p4).astype(np.uint8)
                + (p5 | p6).astype(np.uint8)
                + (p7 | p8).astype(np.uint8)
            )
            np2 = (
                (p2 | p3).astype(np.uint8)
                + (p4 | p5).astype(np.uint8)
                + (p6 | p7).astype(np.uint8)
                + (p8 | p9).astype(np.uint8)
            )
            npv = np.minimum(np1, np2)
            if sub == 0:
                directional = (p2 | p3 | ~p5) & p4
            else:
                directional = (p6 | p7 | ~p9) & p8
            cond = img & (cp == 1) & (npv >= 2) & (npv <= 3) & ~directional
            if cond.any():
                img[cond] = False
                changed = True
        if not changed:
            break
    return img, iterations
