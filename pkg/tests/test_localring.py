import random
from itertools import product

import pytest

from quivercount.errors import EnumerationCapExceeded
from quivercount.localring import (Fq, OMatrix, ORing, gl_enumerate, gl_order,
                                   kernel_elements, kernel_size_exponent,
                                   smith_invariants, smith_normal_form,
                                   solve_linear)


class TestFq:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9, 25, 49])
    def test_multiplicative_group_cyclic(self, q):
        f = Fq(q)
        orders = [f.element_order(a) for a in range(1, q)]
        assert max(orders) == q - 1
        assert all((q - 1) % o == 0 for o in orders)

    def test_frobenius_is_automorphism(self):
        f = Fq(9)
        frob = {a: a for a in range(9)}
        for a in range(9):
            x = a
            for _ in range(f.p - 1):
                x = f.mul(x, a)
            frob[a] = x
        for a in range(9):
            for b in range(9):
                assert frob[f.add(a, b)] == f.add(frob[a], frob[b])
                assert frob[f.mul(a, b)] == f.mul(frob[a], frob[b])

    def test_x_q_equals_x(self):
        for q in (4, 9, 25):
            f = Fq(q)
            for a in range(q):
                x = a
                for _ in range(q - 1):
                    x = f.mul(x, a)
                assert x == a  # a^q = a; a^{q-1} = 1 for nonzero a


class TestORing:
    def test_units_and_valuation(self):
        R = ORing(3, 2)
        assert R.val(R.zero) == 2
        assert R.val(R.t) == 1
        assert R.is_unit(R.one) and not R.is_unit(R.t)
        for u in R.units():
            assert R.mul(u, R.inv(u)) == R.one

    def test_divide_exact(self):
        R = ORing(2, 3)
        a = R.from_coeffs([0, 1, 1])  # t + t^2
        b = R.from_coeffs([0, 1])     # t
        assert R.divide_exact(a, b) == R.from_coeffs([1, 1])
        with pytest.raises(ValueError):
            R.divide_exact(R.one, R.t)


class TestSmithNormalForm:
    def test_examples(self):
        R2 = ORing(2, 2)
        M = OMatrix(R2, [[R2.t, R2.one], [R2.zero, R2.t]])
        assert smith_invariants(M) == [0, 2]
        R3 = ORing(3, 3)
        assert smith_invariants(OMatrix(R3, [[R3.one, R3.zero], [R3.zero, R3.t]])) == [0, 1]
        assert smith_invariants(OMatrix.zero(R3, 2, 2)) == [3, 3]

    @pytest.mark.parametrize("q,alpha", [(2, 1), (2, 2), (3, 2), (4, 2), (2, 3), (5, 2)])
    def test_random_reconstruction(self, q, alpha):
        random.seed(q * 100 + alpha)
        R = ORing(q, alpha)
        els = list(R.elements())
        for _ in range(500):
            n, m = random.randint(1, 3), random.randint(1, 3)
            M = OMatrix(R, [[random.choice(els) for _ in range(m)] for _ in range(n)])
            gammas, U, V = smith_normal_form(M)
            assert U.is_invertible() and V.is_invertible()
            D = U * M * V
            for i in range(n):
                for j in range(m):
                    want = R.t_power(gammas[i]) if (i == j and i < len(gammas)) else R.zero
                    assert D.entries[i][j] == want
            assert list(gammas) == sorted(gammas)
            assert smith_invariants(M) == list(gammas)

    def test_determinantal_characterization(self):
        # sum of the i smallest gammas = minimal valuation among i x i minors
        R = ORing(2, 3)
        M = OMatrix(R, [[R.t, R.one], [R.t_power(2), R.t]])
        gammas = smith_invariants(M)
        vals1 = min(R.val(e) for row in M.entries for e in row)
        assert gammas[0] == vals1
        det = R.sub(R.mul(M.entries[0][0], M.entries[1][1]),
                    R.mul(M.entries[0][1], M.entries[1][0]))
        expected = R.val(det)
        got = sum(g for g in gammas if g < R.alpha)
        if expected < R.alpha:
            assert got == expected


class TestKernelSize:
    def test_examples(self):
        R2 = ORing(2, 2)
        assert kernel_size_exponent(OMatrix.identity(R2, 3)) == 0
        assert kernel_size_exponent(OMatrix.zero(R2, 1, 1)) == 2
        M = OMatrix(R2, [[R2.t, R2.one], [R2.zero, R2.t]])
        assert kernel_size_exponent(M) == 2

    def test_exhaustive_all_small_matrices_f2(self):
        R = ORing(2, 2)
        els = list(R.elements())
        for rows, cols in [(1, 1), (1, 2), (2, 1), (2, 2)]:
            for flat in product(els, repeat=rows * cols):
                M = OMatrix(R, [flat[i * cols:(i + 1) * cols] for i in range(rows)])
                true_count = sum(
                    1 for z in product(els, repeat=cols)
                    if all(v == R.zero for v in M.apply(z)))
                assert true_count == 2 ** kernel_size_exponent(M)

    def test_random_sample_f3(self):
        random.seed(11)
        R = ORing(3, 2)
        els = list(R.elements())
        for _ in range(40):
            M = OMatrix(R, [[random.choice(els) for _ in range(2)] for _ in range(2)])
            true_count = sum(
                1 for z in product(els, repeat=2)
                if all(v == R.zero for v in M.apply(z)))
            assert true_count == 3 ** kernel_size_exponent(M)

    def test_kernel_elements(self):
        R = ORing(2, 2)
        M = OMatrix(R, [[R.t, R.one], [R.zero, R.t]])
        kernel = list(kernel_elements(M))
        assert len(kernel) == 2 ** kernel_size_exponent(M)
        assert all(all(v == R.zero for v in M.apply(z)) for z in kernel)


class TestGL:
    def test_orders(self):
        assert gl_order(2, 1, 2) == 6
        assert gl_order(2, 2, 2) == 96
        assert gl_order(3, 2, 1) == 6
        assert gl_order(5, 1, 0) == 1

    @pytest.mark.parametrize("q,alpha,r", [(2, 1, 2), (2, 2, 1), (2, 2, 2),
                                           (3, 1, 2), (3, 2, 1)])
    def test_enumeration_matches_order(self, q, alpha, r):
        mats = list(gl_enumerate(q, alpha, r))
        assert len(mats) == gl_order(q, alpha, r)
        assert len(set(m.entries for m in mats)) == len(mats)
        assert all(m.is_invertible() for m in mats)

    def test_cap(self):
        with pytest.raises(EnumerationCapExceeded):
            list(gl_enumerate(5, 2, 3, cap=100))


class TestSolve:
    def test_examples(self):
        R = ORing(2, 2)
        ok, ke, x = solve_linear(OMatrix.identity(R, 2), (R.zero, R.zero))
        assert ok and ke == 0 and x == (R.zero, R.zero)
        A = OMatrix(R, [[R.t]])
        ok, ke, x = solve_linear(A, (R.t,))
        assert ok and ke == 1 and A.apply(x) == (R.t,)
        ok, ke, _ = solve_linear(A, (R.one,))
        assert not ok

    def test_random_consistency(self):
        random.seed(17)
        R = ORing(3, 2)
        els = list(R.elements())
        for _ in range(100):
            n, m = random.randint(1, 3), random.randint(1, 3)
            A = OMatrix(R, [[random.choice(els) for _ in range(m)] for _ in range(n)])
            z = tuple(random.choice(els) for _ in range(m))
            b = A.apply(z)
            ok, ke, x = solve_linear(A, b)
            assert ok
            assert A.apply(x) == b
            # solution count = kernel size
            count = sum(1 for w in product(els, repeat=m) if A.apply(w) == b)
            assert count == 3 ** ke
