import pytest

from quivercount.bruteforce import moment_fiber_count
from quivercount.closedforms import (cyclic3_limit_A, cyclic3_limit_B,
                                     gloop_A2, gloop_A3, gloop_Z,
                                     gloop_fiber, kronecker_A, kronecker_Z)
from quivercount.qpolynomial import QPolynomial, RationalFunction
from quivercount.quiver import loop_quiver

q = QPolynomial.q


def test_gloop_A2_values():
    assert gloop_A2(1, 1) == RationalFunction(q(1))
    assert gloop_A2(2, 1) == RationalFunction(q(5) + q(3))
    assert gloop_A2(2, 1).evaluate(2) == 40
    # polynomial with nonnegative coefficients on a window
    for g in (1, 2, 3):
        for alpha in (1, 2, 3, 4):
            p = gloop_A2(g, alpha).as_polynomial()
            assert all(c > 0 for c in p.coeffs.values())


def test_gloop_A3_values():
    assert gloop_A3(1, 1) == RationalFunction(q(1))
    assert gloop_A3(2, 1) == RationalFunction(
        QPolynomial({10: 1, 8: 1, 7: 1, 6: 1, 5: 1, 4: 1}))


def test_gloop_fiber_values():
    assert gloop_fiber(2, 1).evaluate(2) == 11776
    assert gloop_fiber(2, 1).evaluate(2) == moment_fiber_count(loop_quiver(2), 1, (2,), 2)
    with pytest.raises(ValueError):
        gloop_fiber(1, 1)


def test_gloop_Z_shape():
    zn, zd = gloop_Z(2)
    # numerator (q^3-1)(q^4-1); denominator (q^3 - T)(q^4 - T)
    assert len(zn) == 1 and len(zd) == 3
    assert zn[0] == RationalFunction((q(3) - 1) * (q(4) - 1))
    assert zd[0] == RationalFunction(q(7))
    assert zd[1] == RationalFunction(-(q(3) + q(4)))
    assert zd[2] == RationalFunction.one()


def test_kronecker_A_values():
    # alpha = 1: (q^(r-1)-1)(q^r-1)/((q-1)^2 (q+1))
    f = kronecker_A(3, 1)
    expect = RationalFunction((q(2) - 1) * (q(3) - 1), (q(1) - 1) ** 2 * (q(1) + 1))
    assert f == expect
    assert kronecker_A(3, 2).as_polynomial() == \
        QPolynomial({4: 2, 3: 3, 2: 4, 1: 2, 0: 1})
    with pytest.raises(ValueError):
        kronecker_A(3, 6)
    with pytest.raises(ValueError):
        kronecker_A(2, 1)


def test_kronecker_Z_degrees():
    zn, zd = kronecker_Z(3)
    assert len(zn) == 2 and len(zd) == 4


def test_cyclic3_limits():
    A = cyclic3_limit_A()
    B = cyclic3_limit_B()
    assert A == RationalFunction(q(2) + 4 * q(1) + 1, (q(1) - 1) ** 2)
    assert B == RationalFunction(q(2) + 4 * q(1) + 1, q(2))
    one = RationalFunction.one()
    qinv = RationalFunction.q(-1)
    # B/(1-1/q)^3 = A/(1-1/q)
    assert B / (one - qinv) ** 3 == A / (one - qinv)
