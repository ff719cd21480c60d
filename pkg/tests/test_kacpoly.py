from fractions import Fraction

import pytest

from quivercount.bruteforce import (count_absolutely_indecomposable,
                                    count_iso_classes, jet_counts,
                                    moment_fiber_count)
from quivercount.closedforms import (GLOOP_RANK3_TABLE, cyclic3_limit_A,
                                     cyclic3_limit_B, gloop_A2, gloop_A3,
                                     gloop_Z, kronecker_A, kronecker_Z)
from quivercount.errors import Not2Connected, NotConnected
from quivercount.kacpoly import (gloop_kac_rank2, gloop_kac_rank3,
                                 gloop_rank2_recurrence,
                                 gloop_rank3_recurrence,
                                 kronecker_kac_via_zeta, limit_A, limit_B,
                                 m_to_a, a_to_m, order_complex_hilbert,
                                 poincare_from_zeta, poincare_symbolic,
                                 rank1_fiber_count, rank3_matrix_checksum,
                                 toric_kac_trees, toric_kac_wyss,
                                 zeta_fixed_q, _rank3_matrix)
from quivercount.qpolynomial import QPolynomial, RationalFunction
from quivercount.quiver import (Quiver, a2_quiver, cyclic_quiver,
                                jordan_quiver, kronecker_quiver, loop_quiver)
from quivercount.series import TruncatedSeries

q = QPolynomial.q
one = RationalFunction.one()


class TestToricKac:
    def test_chain_formula_examples(self):
        assert toric_kac_wyss(jordan_quiver(), 1) == q(1)
        assert toric_kac_wyss(jordan_quiver(), 3) == q(3)
        assert toric_kac_wyss(cyclic_quiver(3), 1) == q(1) + 2
        # a tree quiver counts a single class
        path = Quiver(["1", "2", "3"], [(0, 1), (1, 2)])
        assert toric_kac_wyss(path, 1) == QPolynomial.one()

    def test_tree_formula_examples(self):
        assert toric_kac_trees(jordan_quiver(), 2) == q(2)
        assert toric_kac_trees(cyclic_quiver(3), 1) == q(1) + 2
        assert toric_kac_trees(a2_quiver(), 3) == QPolynomial.const(3)
        assert toric_kac_wyss(a2_quiver(), 3) == QPolynomial.const(3)

    def test_formulas_agree_samples(self):
        for Q in [cyclic_quiver(3), cyclic_quiver(4), kronecker_quiver(3),
                  loop_quiver(2), Quiver(["1", "2"], [(0, 1), (1, 0), (0, 0)])]:
            for alpha in (1, 2, 3):
                assert toric_kac_wyss(Q, alpha) == toric_kac_trees(Q, alpha)

    def test_degree_law(self):
        # deg A = alpha * b(Q)
        from quivercount.quiver import betti
        for Q in [cyclic_quiver(3), loop_quiver(2), kronecker_quiver(3)]:
            for alpha in (1, 2, 3):
                assert toric_kac_wyss(Q, alpha).degree() == alpha * betti(Q)

    def test_disconnected_rejected(self):
        Q = Quiver(["1", "2"], [])
        with pytest.raises(NotConnected):
            toric_kac_wyss(Q, 1)
        with pytest.raises(NotConnected):
            toric_kac_trees(Q, 1)


class TestGloopRecurrences:
    def test_level_one_sum(self):
        # the level-one class sum for one loop: q^4/(q(q-1)(q+1)) +
        # q^2(q-2)/(2(q-1)) + q + q^3/(2(q+1))
        qm = RationalFunction.q
        expect = (qm(4) / (qm(1) * (qm(1) - 1) * (qm(1) + 1))
                  + qm(2) * (qm(1) - 2) / ((qm(1) - 1) * 2)
                  + qm(1) + qm(3) / ((qm(1) + 1) * 2))
        assert gloop_rank2_recurrence(1, 1) == expect

    def test_rank2_closed_form(self):
        assert gloop_kac_rank2(1, 1) == RationalFunction(q(1))
        for g in (1, 2, 3):
            for alpha in (1, 2, 3):
                assert gloop_kac_rank2(g, alpha) == gloop_A2(g, alpha)

    def test_rank2_example_value(self):
        assert gloop_A2(2, 1).evaluate(2) == 40

    def test_rank3_table_entry(self):
        expect = RationalFunction(QPolynomial({7: 1, 6: 1, 5: 3, 4: 2, 3: 2}))
        assert gloop_kac_rank3(1, 3) == expect

    def test_rank3_closed_form_sample(self):
        for g in (1, 2):
            for alpha in (1, 2):
                assert gloop_kac_rank3(g, alpha) == gloop_A3(g, alpha)

    def test_burnside_anchor(self):
        assert gloop_rank2_recurrence(1, 2).evaluate(2) == \
            count_iso_classes(jordan_quiver(), 2, (2,), 2)
        assert gloop_rank3_recurrence(2, 1).evaluate(2) == \
            count_iso_classes(loop_quiver(2), 1, (3,), 2)

    def test_matrix_transcription(self):
        # frozen checksum plus three independently re-typed entries at g=2
        assert rank3_matrix_checksum(2) == rank3_matrix_checksum(2)
        M = _rank3_matrix(2)
        qm = RationalFunction.q
        assert M[0][0] == qm(10)                                  # q^(9g-8)
        assert M[1][0] == qm(4) * (qm(3) - 1)                     # q^(5g-6)(q^3-1)
        assert M[8][2] == qm(3) * (qm(1) - 1)                     # q^(3g-3)(q-1)


class TestSeriesConversion:
    def test_m_to_a_roundtrip(self):
        coeffs = {(0,): one, (1,): RationalFunction.q(2), (2,): RationalFunction.q(5)}
        M = TruncatedSeries(("t",), (2,), coeffs)
        assert a_to_m(m_to_a(M)) == M

    def test_rank1_count_is_free_space(self):
        # units act trivially in rank one: A_1 = q^(alpha g)
        for g, alpha in [(1, 1), (2, 2)]:
            assert count_absolutely_indecomposable(loop_quiver(g), alpha, (1,), 2) \
                == 2 ** (alpha * g)
            assert toric_kac_wyss(loop_quiver(g), alpha) == q(alpha * g)

    def test_rank2_extraction_formula(self):
        # A2 = M2 - (A1(q)^2 + A1(q^2))/2
        g, alpha = 2, 2
        m2 = gloop_rank2_recurrence(g, alpha)
        a1 = RationalFunction.q(alpha * g)
        direct = m2 - (a1 * a1 + a1.adams(2)) * Fraction(1, 2)
        assert gloop_kac_rank2(g, alpha) == direct == gloop_A2(g, alpha)


class TestRankOneFibers:
    def test_examples(self):
        assert rank1_fiber_count(jordan_quiver(), 1) == RationalFunction(q(2))
        assert rank1_fiber_count(a2_quiver(), 1) == RationalFunction(2 * q(1) - 1)

    def test_brute_anchors(self):
        for Q in (a2_quiver(), cyclic_quiver(3)):
            ones = (1,) * Q.num_vertices
            for alpha in (1, 2):
                f = rank1_fiber_count(Q, alpha)
                for q0 in (2, 3, 5):
                    assert f.evaluate(q0) == moment_fiber_count(Q, alpha, ones, q0)


class TestLimits:
    def test_cyclic3_values(self):
        assert limit_A(cyclic_quiver(3)) == cyclic3_limit_A()
        assert limit_B(cyclic_quiver(3)) == cyclic3_limit_B()
        assert cyclic3_limit_A().evaluate(2) == 13

    def test_jordan(self):
        assert limit_A(jordan_quiver()) == one

    def test_two_cycle_leading_terms(self):
        # q^(-alpha b) A_(Q,alpha) stabilizes to the limit coefficientwise
        Q = cyclic_quiver(2)
        A = limit_A(Q)
        target = A.qinv_series(3)
        from quivercount.quiver import betti
        for alpha in (5, 6):
            f = RationalFunction(toric_kac_wyss(Q, alpha)) * RationalFunction.q(-alpha * betti(Q))
            assert f.qinv_series(3) == target

    def test_not_two_connected_rejected(self):
        with pytest.raises(Not2Connected):
            limit_A(a2_quiver())
        with pytest.raises(Not2Connected):
            order_complex_hilbert(a2_quiver())


class TestHilbert:
    def test_cyclic3(self):
        # faces: the empty face, 6 subsets, 6 two-term chains, all with
        # u = 1/q; the series is (1 + 4u + u^2)/(1-u)^2
        h = order_complex_hilbert(cyclic_quiver(3))
        u = RationalFunction.q(-1)
        expect = (one + 4 * u + u * u) / (one - u) ** 2
        assert h == expect
        b = 1
        assert (one - u) ** b / (one - RationalFunction.q(-b)) * h == limit_A(cyclic_quiver(3))

    def test_jordan_trivial_poset(self):
        assert order_complex_hilbert(jordan_quiver()) == one

    def test_two_cycle_identity(self):
        Q = cyclic_quiver(2)
        h = order_complex_hilbert(Q)
        u = RationalFunction.q(-1)
        assert (one - u) / (one - u) * h == h
        assert (one - u) ** 1 / (one - RationalFunction.q(-1)) * h == limit_A(Q)


class TestZetaExpansion:
    def test_degenerate_zero_map(self):
        # the identically-zero map has Z = 0 and N_n = q^(mn); for the
        # one-loop quiver in rank one this is the jet count q^(2n)
        Z = RationalFunction.zero()
        Ns = poincare_from_zeta(Z, 2, 2, 3)
        assert Ns == [4, 16, 64]
        assert Ns == [Fraction(v) for v in jet_counts(jordan_quiver(), (1,), 2, 3)]

    def test_gloop_expansion_matches_brute(self):
        zn, zd = gloop_Z(2)
        sym = [N.evaluate(2) for N in poincare_symbolic(zn, zd, 16, 2)]
        assert sym == jet_counts(loop_quiver(2), (2,), 2, 2)
        # numeric route agrees with the symbolic one
        numeric = poincare_from_zeta(zeta_fixed_q(zn, zd, 2), 2, 16, 2)
        assert numeric == sym

    def test_kronecker_expansion_small(self):
        zn, zd = kronecker_Z(3)
        sym = [N.evaluate(2) for N in poincare_symbolic(zn, zd, 12, 2)]
        assert sym == jet_counts(kronecker_quiver(3), (1, 2), 2, 2)


class TestKroneckerPipeline:
    @pytest.mark.parametrize("r", [3, 4])
    @pytest.mark.parametrize("alpha", [1, 2, 3])
    def test_reconstruction(self, r, alpha):
        assert kronecker_kac_via_zeta(r, alpha) == kronecker_A(r, alpha)


def test_rank3_tables_frozen():
    assert len(GLOOP_RANK3_TABLE) == 15
    assert GLOOP_RANK3_TABLE[(1, 1)] == {1: 1}
