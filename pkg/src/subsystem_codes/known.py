"""A few named binary codes used in examples and tests."""

from __future__ import annotations

import numpy as np

from .codes import AdditiveCode
from .gf import FieldSpec

__all__ = ["five_qubit_code", "bacon_shor_code"]


def five_qubit_code() -> AdditiveCode:
    """Stabilizer code of the [[5,1,3]]_2 five-qubit code.

    Generators are the cyclic shifts of x-part 10010, y-part 01100.
    """
    f2 = FieldSpec(2)
    x0 = [1, 0, 0, 1, 0]
    y0 = [0, 1, 1, 0, 0]
    gens = []
    for s in range(4):
        gens.append([x0[(i - s) % 5] for i in range(5)]
                    + [y0[(i - s) % 5] for i in range(5)])
    return AdditiveCode(5, f2, gens)


def bacon_shor_code() -> AdditiveCode:
    """Gauge code of the [[9,1,4,3]]_2 Bacon-Shor code on the 3x3 grid.

    X-type generators act on vertically adjacent sites, Z-type on
    horizontally adjacent sites; site (row, col) has index 3*row + col.
    """
    f2 = FieldSpec(2)
    gens = []
    for r in range(2):          # X_i X_j, vertical neighbors
        for c in range(3):
            g = np.zeros(18, dtype=np.int64)
            g[3 * r + c] = 1
            g[3 * (r + 1) + c] = 1
            gens.append(g)
    for r in range(3):          # Z_i Z_j, horizontal neighbors
        for c in range(2):
            g = np.zeros(18, dtype=np.int64)
            g[9 + 3 * r + c] = 1
            g[9 + 3 * r + c + 1] = 1
            gens.append(g)
    return AdditiveCode(9, f2, gens)
