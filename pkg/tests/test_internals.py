"""The bit-level and unreduced-rational fast paths agree with the
reference deciders; the exhaustive suites lean on these equivalences."""

import random

from hypothesis import given, settings, strategies as st

from greenmat import _boolspace, _tropfast, sampling
from greenmat.green import GreenRelation, relate
from greenmat.matrix import all_boolean_matrices, mat_mul
from greenmat.semiring import Semifield

GR = GreenRelation
B, T, TI = Semifield.BOOLEAN, Semifield.TROPICAL, Semifield.TROPICAL_INT


class TestBoolspace:
    def test_indexing_matches_enumeration_order(self):
        sp = _boolspace.space(2)
        for idx, m in enumerate(all_boolean_matrices(2, 2)):
            assert sp.matrix_of(idx) == m
            assert _boolspace.matrix_to_index(m) == idx

    def test_mul_matches_mat_mul(self):
        sp = _boolspace.space(2)
        mats = list(all_boolean_matrices(2, 2))
        for i, a in enumerate(mats):
            for j, b in enumerate(mats):
                assert sp.matrix_of(sp.mul(i, j)) == mat_mul(a, b)

    def test_leq_tables_match_reference_exhaustively_n2(self):
        sp = _boolspace.space(2)
        mats = list(all_boolean_matrices(2, 2))
        for rel in (GR.LEQ_L, GR.LEQ_R, GR.L, GR.R, GR.H, GR.D, GR.J, GR.LEQ_J):
            table = sp.table(rel)
            for i, a in enumerate(mats):
                for j, b in enumerate(mats):
                    assert ((table[i] >> j) & 1 == 1) == relate(a, b, rel), (rel, i, j)

    def test_leq_l_matches_reference_sampled_n3(self):
        sp = _boolspace.space(3)
        rng = random.Random(20240817)
        for _ in range(300):
            i, j = rng.randrange(sp.size), rng.randrange(sp.size)
            a, b = sp.matrix_of(i), sp.matrix_of(j)
            assert sp.leq_l(i, j) == relate(a, b, GR.LEQ_L)
            assert sp.leq_r(i, j) == relate(a, b, GR.LEQ_R)

    def test_act_on_bits(self):
        # the transposition of cells for n = 2 swaps the two off-diagonal bits
        cell_map = (0, 2, 1, 3)
        assert _boolspace.act_on_bits(cell_map, 0b0010) == 0b0100
        assert _boolspace.act_on_bits(cell_map, 0b1111) == 0b1111


def _tropical_grids(sf, n=2, ints=False):
    scalar = (
        st.integers(-50, 50)
        if ints
        else st.fractions(min_value=-50, max_value=50, max_denominator=12)
    )
    entry = st.one_of(st.none(), scalar)
    return st.lists(
        st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n
    )


class TestTropfast:
    @settings(max_examples=150)
    @given(_tropical_grids(T), _tropical_grids(T))
    def test_related_matches_reference(self, rows_a, rows_b):
        from greenmat import matrix as mx
        from greenmat.semiring import MINUS_INF

        a = mx.from_rows(T, [[MINUS_INF if x is None else x for x in r] for r in rows_a])
        b = mx.from_rows(T, [[MINUS_INF if x is None else x for x in r] for r in rows_b])
        ga, gb = _tropfast.grid_of(a), _tropfast.grid_of(b)
        for rel in (GR.LEQ_L, GR.LEQ_R, GR.L, GR.R, GR.H):
            assert _tropfast.related(ga, gb, rel) == relate(a, b, rel), rel

    @settings(max_examples=60)
    @given(_tropical_grids(TI, ints=True), _tropical_grids(TI, ints=True))
    def test_related_matches_reference_integer_carrier(self, rows_a, rows_b):
        from greenmat import matrix as mx
        from greenmat.semiring import MINUS_INF

        a = mx.from_rows(TI, [[MINUS_INF if x is None else x for x in r] for r in rows_a])
        b = mx.from_rows(TI, [[MINUS_INF if x is None else x for x in r] for r in rows_b])
        ga, gb = _tropfast.grid_of(a), _tropfast.grid_of(b)
        for rel in (GR.LEQ_L, GR.L, GR.H):
            assert _tropfast.related(ga, gb, rel) == relate(a, b, rel), rel

    def test_apply_map_matches_reference(self):
        from greenmat import linear_maps as lm

        rng = random.Random(99)
        for n in (2, 3):
            for _ in range(20):
                p = sampling.random_monomial(rng, T, n)
                q = sampling.random_monomial(rng, T, n)
                u = lm.synthesize(lm.CanonicalForm(p, q, rng.random() < 0.5), n, T)
                cells, coeffs = _tropfast.map_rep(u)
                x = sampling.random_matrix(rng, T, n)
                expected = lm.apply(u, x)
                got = _tropfast.apply_map(cells, coeffs, _tropfast.grid_of(x), n)
                assert _grids_equal(got, _tropfast.grid_of(expected))


def _grids_equal(g1, g2):
    for r1, r2 in zip(g1, g2):
        for x, y in zip(r1, r2):
            if (x is None) != (y is None):
                return False
            if x is not None and x[0] * y[1] != y[0] * x[1]:
                return False
    return True
