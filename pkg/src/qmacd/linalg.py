"""Exact Gaussian elimination over Q(q, t)."""

from __future__ import annotations

from typing import Sequence

from .qtfield import ONE, ZERO, QtScalar


def rref(rows: Sequence[Sequence[QtScalar]], ncols: int) -> tuple[list[list[QtScalar]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows if any(not c.is_zero() for c in r)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(m)) if not m[k][col].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [c * inv for c in m[r]]
        for k in range(len(m)):
            if k != r and not m[k][col].is_zero():
                f = m[k][col]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[QtScalar]], ncols: int) -> list[list[QtScalar]]:
    """A basis of {v : A v = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis
