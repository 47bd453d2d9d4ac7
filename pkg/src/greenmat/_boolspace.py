"""Bit-encoded enumeration of M_n(B) for exhaustive verification, n <= 3.

Matrix number k has a one in cell (i, j) iff bit i*n + j of k is set --
the same total order as matrix.all_boolean_matrices.  The relation
deciders here are the residuation algorithm from the green module
reimplemented on row bitmasks; tests pin their equivalence against the
Matrix-level deciders, exhaustively at n = 2 and on samples at n = 3.
"""

from __future__ import annotations

import functools

from .matrix import Matrix, all_boolean_matrices
from .semiring import Semifield
from . import semiring
from .green import GreenRelation


@functools.lru_cache(maxsize=None)
def space(n: int) -> "BooleanSpace":
    return BooleanSpace(n)


def matrix_to_index(a: Matrix) -> int:
    bits = 0
    for i in range(a.rows):
        for j in range(a.cols):
            if not semiring.is_zero(a.entries[i][j]):
                bits |= 1 << (i * a.cols + j)
    return bits


class BooleanSpace:
    def __init__(self, n: int):
        if not 1 <= n <= 3:
            raise ValueError("exhaustive boolean workspace supports 1 <= n <= 3")
        self.n = n
        self.size = 1 << (n * n)
        mask = (1 << n) - 1
        self.rows = [
            tuple((m >> (i * n)) & mask for i in range(n)) for m in range(self.size)
        ]
        self.transposed = [self._transpose_bits(m) for m in range(self.size)]
        self.identity = matrix_to_index(
            _identity_matrix(n)
        )

    def _transpose_bits(self, m: int) -> int:
        out = 0
        n = self.n
        for i in range(n):
            for j in range(n):
                if (m >> (i * n + j)) & 1:
                    out |= 1 << (j * n + i)
        return out

    def matrix_of(self, index: int) -> Matrix:
        n = self.n
        z = semiring.zero(Semifield.BOOLEAN)
        o = semiring.one(Semifield.BOOLEAN)
        return Matrix(
            Semifield.BOOLEAN, n, n,
            tuple(
                tuple(o if (index >> (i * n + j)) & 1 else z for j in range(n))
                for i in range(n)
            ),
        )

    # --- scalar-free residuation on row masks ---------------------------

    def leq_l(self, a: int, b: int) -> bool:
        """Row space containment Row(a) <= Row(b) via the principal solution."""
        arows, brows = self.rows[a], self.rows[b]
        for arow in arows:
            prod = 0
            for brow in brows:
                if brow & ~arow == 0:
                    prod |= brow
            if prod != arow:
                return False
        return True

    def leq_r(self, a: int, b: int) -> bool:
        return self.leq_l(self.transposed[a], self.transposed[b])

    def mul(self, a: int, b: int) -> int:
        n = self.n
        arows, brows = self.rows[a], self.rows[b]
        out = 0
        for i in range(n):
            arow = arows[i]
            acc = 0
            for j in range(n):
                if (arow >> j) & 1:
                    acc |= brows[j]
            out |= acc << (i * n)
        return out

    # --- full relation tables as bitmask rows ---------------------------

    @functools.cached_property
    def leq_l_table(self) -> list[int]:
        table = [0] * self.size
        for a in range(self.size):
            row = 0
            for b in range(self.size):
                if self.leq_l(a, b):
                    row |= 1 << b
            table[a] = row
        return table

    @functools.cached_property
    def leq_r_table(self) -> list[int]:
        table = [0] * self.size
        for a in range(self.size):
            row = 0
            for b in range(self.size):
                if self.leq_r(a, b):
                    row |= 1 << b
            table[a] = row
        return table

    @functools.cached_property
    def l_table(self) -> list[int]:
        leq = self.leq_l_table
        conv = _converse(leq, self.size)
        return [leq[a] & conv[a] for a in range(self.size)]

    @functools.cached_property
    def r_table(self) -> list[int]:
        leq = self.leq_r_table
        conv = _converse(leq, self.size)
        return [leq[a] & conv[a] for a in range(self.size)]

    @functools.cached_property
    def h_table(self) -> list[int]:
        return [l & r for l, r in zip(self.l_table, self.r_table)]

    @functools.cached_property
    def d_table(self) -> list[int]:
        if self.n > 2:
            raise ValueError("full D table is only built for n <= 2")
        ltab, rtab = self.l_table, self.r_table
        table = [0] * self.size
        for a in range(self.size):
            row = 0
            reach = rtab[a]
            for c in range(self.size):
                if (reach >> c) & 1:
                    row |= ltab[c]
            table[a] = row
        return table

    @functools.cached_property
    def leq_j_table(self) -> list[int]:
        if self.n > 2:
            raise ValueError("full leqJ table is only built for n <= 2")
        table = [0] * self.size
        for b in range(self.size):
            reachable = set()
            for s in range(self.size):
                sb = self.mul(s, b)
                for t in range(self.size):
                    reachable.add(self.mul(sb, t))
            for a in reachable:
                table[a] |= 1 << b
        return table

    @functools.cached_property
    def j_table(self) -> list[int]:
        leq = self.leq_j_table
        conv = _converse(leq, self.size)
        return [leq[a] & conv[a] for a in range(self.size)]

    def table(self, rel: GreenRelation) -> list[int]:
        return {
            GreenRelation.LEQ_L: lambda: self.leq_l_table,
            GreenRelation.LEQ_R: lambda: self.leq_r_table,
            GreenRelation.LEQ_J: lambda: self.leq_j_table,
            GreenRelation.L: lambda: self.l_table,
            GreenRelation.R: lambda: self.r_table,
            GreenRelation.H: lambda: self.h_table,
            GreenRelation.D: lambda: self.d_table,
            GreenRelation.J: lambda: self.j_table,
        }[rel]()

    def related(self, a: int, b: int, rel: GreenRelation) -> bool:
        return (self.table(rel)[a] >> b) & 1 == 1


def _converse(table: list[int], size: int) -> list[int]:
    """Transpose a bitmask relation table in one pass."""
    out = [0] * size
    for b in range(size):
        row = table[b]
        a = 0
        while row:
            if row & 1:
                out[a] |= 1 << b
            row >>= 1
            a += 1
    return out


def _identity_matrix(n: int) -> Matrix:
    from .matrix import identity

    return identity(Semifield.BOOLEAN, n)


def act_on_bits(cell_map: tuple[int, ...], m: int) -> int:
    """Apply a cell permutation (a boolean unit-permutation map) to matrix bits."""
    out = 0
    c = 0
    while m:
        if m & 1:
            out |= 1 << cell_map[c]
        m >>= 1
        c += 1
    return out


def all_cell_maps(n: int):
    """All (n*n)! cell permutations, i.e. all bijective linear maps over B."""
    import itertools

    return itertools.permutations(range(n * n))
