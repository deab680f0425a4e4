"""Deterministic, seedless search over integer coefficient vectors.

Witness searches (non-degenerate integrals, invertible elements of a
solution subspace) enumerate integer vectors by increasing max-norm with
heights 1, 2, 4, ...; within a height the coordinate order is
0, 1, -1, 2, -2, ... lexicographically.  The order is fixed so that every
output of the package is reproducible.  The height cap honored by the
bounded searches is WHOPF_MAX_HEIGHT (default 8).

When enumeration fails, invertibility over a subspace is decided exactly:
the determinant of the generic left-multiplication matrix is a polynomial of
degree <= n in each coordinate, so evaluating it on a (n+1)^d integer grid
decides identical vanishing; a non-vanishing grid point doubles as a
witness.  Grids too large to afford raise Undecidable rather than guess.
"""

from __future__ import annotations

import os
from itertools import product

from .errors import Undecidable

__all__ = ["max_height", "height_vectors", "find_invertible_in_subspace"]

_GRID_CAP = 200_000


def max_height(default=8):
    value = os.environ.get("WHOPF_MAX_HEIGHT", "")
    try:
        return max(1, int(value))
    except ValueError:
        return default


def _heights(cap):
    height = 1
    while height <= cap:
        yield height
        height *= 2


def _coordinate_order(height):
    out = [0]
    for k in range(1, height + 1):
        out.extend((k, -k))
    return out


def height_vectors(dim, max_height=8):
    """Nonzero integer vectors of each exact max-norm 1, 2, 4, ... in order."""
    if dim == 0:
        return
    for height in _heights(max_height):
        coords = _coordinate_order(height)
        for vec in product(coords, repeat=dim):
            if max(abs(c) for c in vec) == height:
                yield vec


def find_invertible_in_subspace(h, space, offset=None):
    """Invertible element of ``offset + space`` (affine when offset given).

    Returns (element coefficients, combination) or None when no invertible
    element exists; raises Undecidable only when the deciding grid would
    exceed the affordable size.  The element is searched by deterministic
    height enumeration first, then decided by the grid criterion.
    """
    zero = h.field.zero()
    d = space.dim
    if d == 0:
        if offset is not None and h.left_mult_matrix(offset).is_invertible():
            return list(offset), ()
        return None

    def assemble(coeffs):
        vec = list(offset) if offset is not None else [zero] * h.dim
        for c, row in zip(coeffs, space.rows):
            if c:
                vec = [x + c * y for x, y in zip(vec, row)]
        return vec

    if offset is not None:
        vec = assemble((0,) * d)
        if h.left_mult_matrix(vec).is_invertible():
            return vec, (0,) * d
    for coeffs in height_vectors(d, max_height=max_height()):
        vec = assemble(coeffs)
        if h.left_mult_matrix(vec).is_invertible():
            return vec, coeffs
    # Grid decision: det is a polynomial of degree <= dim in each coordinate.
    grid = h.dim + 1
    if grid**d > _GRID_CAP:
        raise Undecidable(f"grid of size {grid}^{d} exceeds the cap")
    for coeffs in product(range(grid), repeat=d):
        vec = assemble(coeffs)
        if h.left_mult_matrix(vec).is_invertible():
            return vec, coeffs
    return None
