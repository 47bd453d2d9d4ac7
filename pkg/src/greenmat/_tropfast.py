"""Unreduced-rational fast path for bulk tropical relation checking.

Matrices become grids of ``(num, den)`` integer pairs (``None`` for the
additive zero -inf); fractions are never reduced, comparisons and
equality cross-multiply, so everything stays exact while avoiding
object construction in the hot loops.  This mirrors the residuation
decider from the green module; tests pin the two paths against each
other on random inputs.
"""

from __future__ import annotations

from fractions import Fraction

from .matrix import Matrix
from .green import GreenRelation
from .semiring import Semifield

_TOP = object()


def grid_of(a: Matrix) -> tuple:
    """Extract an exact (num, den) payload grid from a tropical matrix."""
    if a.semifield is Semifield.BOOLEAN:
        raise ValueError("the fast path is for the tropical carriers")
    out = []
    for row in a.entries:
        grow = []
        for e in row:
            p = e.payload
            if not isinstance(p, (int, Fraction)):
                grow.append(None)
            elif isinstance(p, Fraction):
                grow.append((p.numerator, p.denominator))
            else:
                grow.append((p, 1))
        out.append(tuple(grow))
    return tuple(out)


def transpose_grid(g: tuple) -> tuple:
    return tuple(zip(*g))


def leq_l(agrid: tuple, bgrid: tuple) -> bool:
    """Row-space containment via the principal solution, verified rowwise."""
    bt = transpose_grid(bgrid)
    for arow in agrid:
        # greatest srow with srow * b <= arow
        srow = []
        for brow in bgrid:
            acc = _TOP
            for x, y in zip(arow, brow):
                if y is None:
                    continue
                if x is None:
                    acc = None
                    break
                rn, rd = x[0] * y[1] - y[0] * x[1], x[1] * y[1]
                if acc is _TOP or (acc is not None and rn * acc[1] < acc[0] * rd):
                    acc = (rn, rd)
            srow.append((0, 1) if acc is _TOP else acc)
        # verify (srow * b) == arow before moving on
        for bcol, target in zip(bt, arow):
            best = None
            for s, y in zip(srow, bcol):
                if s is None or y is None:
                    continue
                vn, vd = s[0] * y[1] + y[0] * s[1], s[1] * y[1]
                if best is None or vn * best[1] > best[0] * vd:
                    best = (vn, vd)
            if best is None:
                if target is not None:
                    return False
            elif target is None or best[0] * target[1] != target[0] * best[1]:
                return False
    return True


def related(agrid: tuple, bgrid: tuple, rel: GreenRelation) -> bool:
    if rel is GreenRelation.LEQ_L:
        return leq_l(agrid, bgrid)
    if rel is GreenRelation.LEQ_R:
        return leq_l(transpose_grid(agrid), transpose_grid(bgrid))
    if rel is GreenRelation.L:
        return leq_l(agrid, bgrid) and leq_l(bgrid, agrid)
    if rel is GreenRelation.R:
        at, bt = transpose_grid(agrid), transpose_grid(bgrid)
        return leq_l(at, bt) and leq_l(bt, at)
    if rel is GreenRelation.H:
        if not (leq_l(agrid, bgrid) and leq_l(bgrid, agrid)):
            return False
        at, bt = transpose_grid(agrid), transpose_grid(bgrid)
        return leq_l(at, bt) and leq_l(bt, at)
    raise ValueError(f"no fast decider for {rel.value}")


def map_rep(u) -> tuple[tuple[int, ...], tuple]:
    """Flatten a unit-permutation map to (cell targets, coefficient grid)."""
    n = u.n
    cells = []
    coeffs = []
    for i in range(n):
        crow = []
        for j in range(n):
            k, l = u.sigma[i][j]
            cells.append(k * n + l)
            p = u.alpha[i][j].payload
            crow.append((p.numerator, p.denominator) if isinstance(p, Fraction) else (p, 1))
        coeffs.append(tuple(crow))
    return tuple(cells), tuple(coeffs)


def apply_map(cells: tuple[int, ...], coeffs: tuple, xgrid: tuple, n: int) -> tuple:
    flat: list = [None] * (n * n)
    for i in range(n):
        xrow = xgrid[i]
        crow = coeffs[i]
        for j in range(n):
            x = xrow[j]
            if x is None:
                continue
            c = crow[j]
            flat[cells[i * n + j]] = (c[0] * x[1] + x[0] * c[1], c[1] * x[1])
    return tuple(tuple(flat[k * n + l] for l in range(n)) for k in range(n))
