"""Deciders for Green's pre-orders and equivalences, and factor rank.

Containment of row spaces (and dually column spaces) is decided through
residuation: the greatest S with S*b <= a entrywise exists because the
supported semifields are idempotent and totally ordered, and a = s*b is
solvable iff that principal solution attains equality.  Row and column
spaces themselves are never materialized.

D, J and the J-pre-order have no residuation characterisation here and
are decided by bounded exhaustive search, available over the boolean
semifield only and for sizes up to 3.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from . import semiring
from .matrix import (
    DimensionMismatch,
    Matrix,
    all_boolean_matrices,
    is_zero_matrix,
    mat_mul,
    transpose,
)
from .semiring import MixedSemifields, Semifield, SemifieldValue, natural_leq


class GreenRelation(enum.Enum):
    LEQ_L = "leqL"
    LEQ_R = "leqR"
    LEQ_J = "leqJ"
    L = "L"
    R = "R"
    H = "H"
    D = "D"
    J = "J"


#: Relations decidable only by bounded search over the boolean semifield.
BOUNDED_SEARCH = frozenset({GreenRelation.D, GreenRelation.J, GreenRelation.LEQ_J})

#: Largest size admitted to the bounded D / J / leqJ searches.
MAX_BOUNDED_N = 3


class UndecidableOverSemifield(ValueError):
    """D/J/leqJ were requested outside the boolean semifield."""


class SearchSpaceExceeded(ValueError):
    """A bounded exhaustive search was requested beyond its size limit."""


class RankUndetermined(ValueError):
    """Factor rank falls outside the decidable fragment."""


def decidable_over(rel: GreenRelation, semifield: Semifield) -> bool:
    return semifield is Semifield.BOOLEAN or rel not in BOUNDED_SEARCH


def _scalar_residual(x: SemifieldValue, y: SemifieldValue) -> SemifieldValue | None:
    """Greatest t with t*y <= x; None stands for the adjoined top element."""
    if semiring.is_zero(y):
        return None
    if x.semifield is Semifield.BOOLEAN:
        return x
    if semiring.is_zero(x):
        return x
    return SemifieldValue(x.semifield, x.payload - y.payload)


def left_residual(a: Matrix, b: Matrix) -> Matrix:
    """The greatest S with S*b <= a entrywise (principal solution of S*b = a).

    Computed in a completion with a top element; a top coefficient can
    only multiply an all-zero row of b, so it is projected to the
    multiplicative identity before returning.
    """
    if a.semifield is not b.semifield:
        raise MixedSemifields(f"{a.semifield.value} vs {b.semifield.value}")
    if a.cols != b.cols:
        raise DimensionMismatch("residual needs matching column counts")
    one_v = semiring.one(a.semifield)
    rows = []
    for i in range(a.rows):
        arow = a.entries[i]
        row = []
        for j in range(b.rows):
            brow = b.entries[j]
            acc: SemifieldValue | None = None
            for x, y in zip(arow, brow):
                r = _scalar_residual(x, y)
                if r is None:
                    continue
                if acc is None or natural_leq(r, acc):
                    acc = r
            row.append(one_v if acc is None else acc)
        rows.append(tuple(row))
    return Matrix(a.semifield, a.rows, b.rows, tuple(rows))


def _leq_l(a: Matrix, b: Matrix) -> tuple[bool, Matrix]:
    s = left_residual(a, b)
    return mat_mul(s, b) == a, s


def _check_relate_pre(a: Matrix, b: Matrix, rel: GreenRelation) -> None:
    if a.semifield is not b.semifield:
        raise MixedSemifields(f"{a.semifield.value} vs {b.semifield.value}")
    if not (a.rows == a.cols == b.rows == b.cols):
        raise DimensionMismatch("Green's relations compare square matrices of equal size")
    if rel in BOUNDED_SEARCH:
        if a.semifield is not Semifield.BOOLEAN:
            raise UndecidableOverSemifield(
                f"{rel.value} is only decidable here over the boolean semifield"
            )
        if a.rows > MAX_BOUNDED_N:
            raise SearchSpaceExceeded(
                f"bounded {rel.value} search is limited to n <= {MAX_BOUNDED_N}"
            )


def relate(a: Matrix, b: Matrix, rel: GreenRelation) -> bool:
    return relate_witness(a, b, rel) is not None


def relate_witness(a: Matrix, b: Matrix, rel: GreenRelation) -> dict | None:
    """Decide a rel b; on success return the multiplier matrices realizing it.

    Witness keys: "s" with a = s*b (leqL), "t" with a = b*t (leqR),
    "s"/"t" with a = s*b*t (leqJ), forward/backward variants for the
    equivalences, and "c" for the intermediate element of D.
    """
    _check_relate_pre(a, b, rel)
    if rel is GreenRelation.LEQ_L:
        ok, s = _leq_l(a, b)
        return {"s": s} if ok else None
    if rel is GreenRelation.LEQ_R:
        ok, s = _leq_l(transpose(a), transpose(b))
        return {"t": transpose(s)} if ok else None
    if rel is GreenRelation.L:
        fwd = relate_witness(a, b, GreenRelation.LEQ_L)
        if fwd is None:
            return None
        bwd = relate_witness(b, a, GreenRelation.LEQ_L)
        if bwd is None:
            return None
        return {"s_forward": fwd["s"], "s_backward": bwd["s"]}
    if rel is GreenRelation.R:
        fwd = relate_witness(a, b, GreenRelation.LEQ_R)
        if fwd is None:
            return None
        bwd = relate_witness(b, a, GreenRelation.LEQ_R)
        if bwd is None:
            return None
        return {"t_forward": fwd["t"], "t_backward": bwd["t"]}
    if rel is GreenRelation.H:
        lw = relate_witness(a, b, GreenRelation.L)
        if lw is None:
            return None
        rw = relate_witness(a, b, GreenRelation.R)
        if rw is None:
            return None
        return {**lw, **rw}
    if rel is GreenRelation.D:
        for c in all_boolean_matrices(a.rows, a.rows):
            if relate(a, c, GreenRelation.R) and relate(c, b, GreenRelation.L):
                return {"c": c}
        return None
    if rel is GreenRelation.LEQ_J:
        for s in all_boolean_matrices(a.rows, a.rows):
            sb = mat_mul(s, b)
            for t in all_boolean_matrices(a.rows, a.rows):
                if mat_mul(sb, t) == a:
                    return {"s": s, "t": t}
        return None
    if rel is GreenRelation.J:
        fwd = relate_witness(a, b, GreenRelation.LEQ_J)
        if fwd is None:
            return None
        bwd = relate_witness(b, a, GreenRelation.LEQ_J)
        if bwd is None:
            return None
        return {
            "s_forward": fwd["s"], "t_forward": fwd["t"],
            "s_backward": bwd["s"], "t_backward": bwd["t"],
        }
    raise ValueError(f"unknown relation {rel!r}")


# --- factor rank ----------------------------------------------------------


class RankMethod(enum.Enum):
    ZERO_MATRIX = "ZeroMatrix"
    RANK_ONE_WITNESS = "RankOneWitness"
    TWO_BY_TWO_CRITERION = "TwoByTwoCriterion"
    EXHAUSTIVE_BOOLEAN = "ExhaustiveBoolean"


@dataclass(frozen=True)
class RankResult:
    value: int
    method: RankMethod


def has_factor_rank_at_most_one(a: Matrix) -> bool:
    """Rank <= 1 test valid over any of the supported semifields.

    A nonzero matrix is an outer product u*v exactly when its nonzero
    support is a full rectangle RxC and the two-by-two cross products
    agree on the support: a[i][j]*a[i0][j0] = a[i][j0]*a[i0][j].
    """
    sup_rows = [i for i in range(a.rows) if any(not semiring.is_zero(x) for x in a.entries[i])]
    sup_cols = [j for j in range(a.cols) if any(not semiring.is_zero(a.entries[i][j]) for i in range(a.rows))]
    if not sup_rows:
        return True
    for i in sup_rows:
        for j in sup_cols:
            if semiring.is_zero(a.entries[i][j]):
                return False
    i0, j0 = sup_rows[0], sup_cols[0]
    anchor = a.entries[i0][j0]
    for i in sup_rows:
        for j in sup_cols:
            lhs = semiring.mul(a.entries[i][j], anchor)
            rhs = semiring.mul(a.entries[i][j0], a.entries[i0][j])
            if lhs != rhs:
                return False
    return True


def _boolean_rank_exhaustive(a: Matrix) -> int:
    """Smallest k with a = B*C, by searching distinct nonzero columns for B.

    Any factorization can be rewritten to use distinct nonzero columns
    without increasing k, and for a fixed B the greatest C with
    B*C <= a already attains equality whenever any C does, so checking
    that single C per column choice is exact.
    """
    col_masks = []
    for j in range(a.cols):
        m = 0
        for i in range(a.rows):
            if not semiring.is_zero(a.entries[i][j]):
                m |= 1 << i
        col_masks.append(m)
    candidates = list(range(1, 1 << a.rows))
    for k in range(2, min(a.rows, a.cols) + 1):
        for chosen in itertools.combinations(candidates, k):
            if all(
                _best_cover(chosen, target) == target for target in col_masks
            ):
                return k
    raise AssertionError("boolean factor rank search failed to terminate")


def _best_cover(chosen: tuple[int, ...], target: int) -> int:
    cover = 0
    for cand in chosen:
        if cand & ~target == 0:
            cover |= cand
    return cover


def factor_rank(a: Matrix) -> RankResult:
    """Factor rank where decidable; raises RankUndetermined otherwise.

    Zero matrices have rank 0; rank <= 1 is decided for every supported
    semifield; full-support 2x2 matrices fall to the ad != bc
    criterion; boolean matrices of any size are settled by exhaustive
    search over factorizations.
    """
    if is_zero_matrix(a):
        return RankResult(0, RankMethod.ZERO_MATRIX)
    if has_factor_rank_at_most_one(a):
        return RankResult(1, RankMethod.RANK_ONE_WITNESS)
    if a.rows == 2 and a.cols == 2 and not any(
        semiring.is_zero(x) for row in a.entries for x in row
    ):
        # full support and not rank one means the cross products differ
        return RankResult(2, RankMethod.TWO_BY_TWO_CRITERION)
    if a.semifield is Semifield.BOOLEAN:
        return RankResult(_boolean_rank_exhaustive(a), RankMethod.EXHAUSTIVE_BOOLEAN)
    raise RankUndetermined(
        f"factor rank >= 2 of a {a.rows}x{a.cols} {a.semifield.value} matrix "
        "is outside the decidable fragment"
    )
