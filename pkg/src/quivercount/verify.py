"""The acceptance suite: every top-level identity the package claims,
checked end to end at its stated scale.

Each check returns a CheckResult; run_checks prints one line per check.
Suites group the checks by flavor: purely symbolic identities, brute-force
anchored counts, symbolic-vs-brute cross checks, and the Hall algebra.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from . import bruteforce, closedforms, hall, kacpoly
from .bruteforce import Caps
from .localring import gl_order
from .qpolynomial import QPolynomial, RationalFunction
from .quiver import (Quiver, a2_quiver, betti, connected_quiver_corpus,
                     cyclic_quiver, euler_form, is_2_connected, jordan_quiver,
                     kronecker_quiver, loop_quiver)
from .series import TruncatedSeries, VolumeSequence, plethystic_exp


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}  ({self.seconds:.1f}s){': ' + self.detail if self.detail else ''}"


def _result(name, t0, passed, detail=""):
    return CheckResult(name, passed, detail, time.time() - t0)


_CORPUS = None


def corpus():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = connected_quiver_corpus(4, 6)
    return _CORPUS


# -- criterion 1 --------------------------------------------------------------

def check_toric_tables(caps=bruteforce.DEFAULT_CAPS) -> CheckResult:
    """Chain formula = tree formula, with nonnegative coefficients, on the
    whole corpus for alpha <= 3."""
    t0 = time.time()
    for Q in corpus():
        for alpha in (1, 2, 3):
            w = kacpoly.toric_kac_wyss(Q, alpha)
            tr = kacpoly.toric_kac_trees(Q, alpha)
            if w != tr:
                return _result("toric count: chain formula = tree formula", t0, False,
                               f"mismatch on {Q!r} at alpha={alpha}")
            if any(c < 0 for c in tr.coeffs.values()):
                return _result("toric count: chain formula = tree formula", t0, False,
                               f"negative coefficient on {Q!r} at alpha={alpha}")
    return _result("toric count: chain formula = tree formula, coefficients >= 0", t0, True,
                   f"{len(corpus())} quivers, alpha <= 3")


# -- criterion 2 --------------------------------------------------------------

def check_toric_brute_anchor(caps=None) -> CheckResult:
    """Toric count evaluated at q equals the orbit-census count of
    absolutely indecomposable classes, across the corpus."""
    t0 = time.time()
    caps = caps or Caps(max_space_log2=20)
    checked = 0
    for Q in corpus():
        ones = (1,) * Q.num_vertices
        for alpha in (1, 2):
            for q in (2, 3):
                if alpha * Q.num_arrows * math.log2(q) > caps.max_space_log2:
                    continue
                cnt = bruteforce.count_absolutely_indecomposable(Q, alpha, ones, q, caps)
                val = kacpoly.toric_kac_wyss(Q, alpha).evaluate(q)
                if cnt != val:
                    return _result("toric count anchored by orbit census", t0, False,
                                   f"{Q!r} alpha={alpha} q={q}: census {cnt} vs {val}")
                checked += 1
    return _result("toric count anchored by orbit census", t0, True,
                   f"{checked} instances at q in {{2,3}}, alpha <= 2")


# -- criteria 3 and 4 ----------------------------------------------------------

def check_gloop_rank2(caps=bruteforce.DEFAULT_CAPS) -> CheckResult:
    """Rank-2 recurrence = closed form for g <= 4, alpha <= 6; anchored by
    the orbit census over F_2 and, through the class-count series, F_4."""
    t0 = time.time()
    for g in (1, 2, 3, 4):
        for alpha in range(1, 7):
            if kacpoly.gloop_kac_rank2(g, alpha) != closedforms.gloop_A2(g, alpha):
                return _result("rank-2 loop-quiver count", t0, False,
                               f"recurrence vs closed form at g={g}, alpha={alpha}")
    # absolute-indecomposable census over F_2 at (g, alpha) = (2, 1)
    census = bruteforce.count_absolutely_indecomposable(loop_quiver(2), 1, (2,), 2, caps)
    if census != closedforms.gloop_A2(2, 1).evaluate(2):
        return _result("rank-2 loop-quiver count", t0, False, "F_2 census mismatch")
    # F_4 value through the class-count series: A2(4) from Burnside M2(4)
    m2_f4 = bruteforce.count_iso_classes(loop_quiver(2), 1, (2,), 4, caps)
    a1 = Fraction(4) ** (1 * 2)
    a2_f4 = m2_f4 - (a1 ** 2 + Fraction(16) ** 2) / 2
    if a2_f4 != closedforms.gloop_A2(2, 1).evaluate(4):
        return _result("rank-2 loop-quiver count", t0, False, "F_4 series-route mismatch")
    return _result("rank-2 loop-quiver count: recurrence = closed form, census anchors", t0, True,
                   "g <= 4, alpha <= 6; F_2 and F_4 anchors at (2,1)")


def check_gloop_rank3(caps=None) -> CheckResult:
    """Rank-3 recurrence reproduces all 15 tabulated polynomials."""
    t0 = time.time()
    for (g, alpha), table in closedforms.GLOOP_RANK3_TABLE.items():
        got = kacpoly.gloop_kac_rank3(g, alpha)
        if got != RationalFunction(QPolynomial(table)):
            return _result("rank-3 loop-quiver count vs tables", t0, False,
                           f"mismatch at g={g}, alpha={alpha}")
        if got != closedforms.gloop_A3(g, alpha):
            return _result("rank-3 loop-quiver count vs tables", t0, False,
                           f"closed-form mismatch at g={g}, alpha={alpha}")
    return _result("rank-3 loop-quiver count: recurrence = 15 tables = closed form", t0, True,
                   "g <= 3, alpha <= 5")


# -- criterion 5 ---------------------------------------------------------------

def check_kronecker_pipeline(caps=None) -> CheckResult:
    """Rank-(1,2) Kronecker counts reconstructed from the zeta function
    match the five closed forms, for r in {3,4}."""
    t0 = time.time()
    for r in (3, 4):
        for alpha in range(1, 6):
            got = kacpoly.kronecker_kac_via_zeta(r, alpha)
            if got != closedforms.kronecker_A(r, alpha):
                return _result("Kronecker rank-(1,2) zeta pipeline", t0, False,
                               f"r={r}, alpha={alpha}")
    return _result("Kronecker rank-(1,2) counts via zeta expansion", t0, True,
                   "r in {3,4}, alpha <= 5, exact rational functions")


# -- criterion 6 ---------------------------------------------------------------

def check_moment_fibers(caps=bruteforce.DEFAULT_CAPS) -> CheckResult:
    """Zero-fiber counts: rank-2 loop-quiver closed form and the rank-one
    partition formula, both against brute force."""
    t0 = time.time()
    for (g, alpha, q) in [(2, 1, 2), (2, 2, 2), (2, 1, 3)]:
        closed = closedforms.gloop_fiber(g, alpha).evaluate(q)
        brute = bruteforce.moment_fiber_count(loop_quiver(g), alpha, (2,), q, None, caps)
        if closed != brute:
            return _result("moment-map zero fibers", t0, False,
                           f"loop g={g} alpha={alpha} q={q}: {closed} vs {brute}")
    for Q in (cyclic_quiver(3), a2_quiver()):
        ones = (1,) * Q.num_vertices
        for alpha in (1, 2):
            sym = kacpoly.rank1_fiber_count(Q, alpha)
            for q in (2, 3):
                brute = bruteforce.moment_fiber_count(Q, alpha, ones, q, None, caps)
                if sym.evaluate(q) != brute:
                    return _result("moment-map zero fibers", t0, False,
                                   f"{Q!r} alpha={alpha} q={q}")
    return _result("moment-map zero fibers: closed forms = brute force", t0, True,
                   "rank-2 loops and rank-one partition formula")


# -- criterion 7 ---------------------------------------------------------------

def check_deformed_fibers(caps=bruteforce.DEFAULT_CAPS) -> CheckResult:
    """Deformed fiber counts match q^(-alpha<r,r>) A/(1-q^-1) exactly."""
    t0 = time.time()

    def one_case(Q, r, lam, alpha, q):
        cnt = bruteforce.moment_fiber_count(Q, alpha, r, q, lam, caps)
        gl = 1
        for ri in r:
            gl *= gl_order(q, alpha, ri)
        a_val = kacpoly.toric_kac_wyss(Q, alpha).evaluate(q)
        lhs = Fraction(cnt, gl)
        rhs = Fraction(q) ** (-alpha * euler_form(Q, r, r)) * a_val / (1 - Fraction(1, q))
        return lhs == rhs

    for alpha in (1, 2):
        for q in (3, 5):
            if not one_case(a2_quiver(), (1, 1), (1, -1), alpha, q):
                return _result("deformed moment fibers", t0, False,
                               f"two-vertex quiver alpha={alpha} q={q}")
    if not one_case(cyclic_quiver(3), (1, 1, 1), (1, 1, -2), 1, 7):
        return _result("deformed moment fibers", t0, False, "triangle at q=7")
    return _result("deformed moment fibers = generic-fiber formula", t0, True,
                   "two cases x {3,5} + triangle at q=7, exact")


# -- criterion 8 ---------------------------------------------------------------

def check_jet_series(caps=bruteforce.DEFAULT_CAPS) -> CheckResult:
    """Fiber counts over F_q[t]/(t^n) match the zeta-function expansions."""
    t0 = time.time()
    zn, zd = closedforms.gloop_Z(2)
    sym = [N.evaluate(2) for N in kacpoly.poincare_symbolic(zn, zd, 16, 2)]
    brute = bruteforce.jet_counts(loop_quiver(2), (2,), 2, 2, caps)
    if sym != brute:
        return _result("jet counts vs zeta expansion", t0, False, "rank-2 loop quiver")
    zn, zd = closedforms.kronecker_Z(3)
    sym = [N.evaluate(2) for N in kacpoly.poincare_symbolic(zn, zd, 12, 3)]
    brute = bruteforce.jet_counts(kronecker_quiver(3), (1, 2), 2, 3, caps)
    if sym != brute:
        return _result("jet counts vs zeta expansion", t0, False, "3-Kronecker rank (1,2)")
    return _result("jet counts = zeta-function expansion", t0, True,
                   "2-loop rank 2 (n <= 2) and 3-Kronecker rank (1,2) (n <= 3) at q=2")


# -- criterion 9 ---------------------------------------------------------------

def check_limits_hilbert(caps=None) -> CheckResult:
    """Limit fractions of the triangle, the Hilbert-series identity, the
    B = A (1-1/q)^(V-1) relation, and stabilization of normalized counts."""
    t0 = time.time()
    c3 = cyclic_quiver(3)
    if kacpoly.limit_A(c3) != closedforms.cyclic3_limit_A():
        return _result("limits and Hilbert identity", t0, False, "triangle A limit")
    if kacpoly.limit_B(c3) != closedforms.cyclic3_limit_B():
        return _result("limits and Hilbert identity", t0, False, "triangle B limit")
    one = RationalFunction.one()
    qinv = RationalFunction.q(-1)
    checked = 0
    for Q in corpus():
        if not (1 <= Q.num_arrows <= 5 and is_2_connected(Q)):
            continue
        b = betti(Q)
        A = kacpoly.limit_A(Q)
        B = kacpoly.limit_B(Q)
        if B / (one - qinv) ** Q.num_vertices != A / (one - qinv):
            return _result("limits and Hilbert identity", t0, False, f"A-B relation on {Q!r}")
        hilb = kacpoly.order_complex_hilbert(Q)
        if (one - qinv) ** b / (one - RationalFunction.q(-b)) * hilb != A:
            return _result("limits and Hilbert identity", t0, False, f"Hilbert identity on {Q!r}")
        target = A.qinv_series(3)
        for alpha in (5, 6):
            f = RationalFunction(kacpoly.toric_kac_wyss(Q, alpha)) * RationalFunction.q(-alpha * b)
            if f.qinv_series(3) != target:
                return _result("limits and Hilbert identity", t0, False,
                               f"stabilization fails on {Q!r} at alpha={alpha}")
        checked += 1
    return _result("limits, A-B relation and Hilbert identity", t0, True,
                   f"triangle values + {checked} two-connected quivers, <= 5 edges")


# -- criterion 10 ----------------------------------------------------------------

def plethystic_identity_fixed_q(Q: Quiver, alpha: int, bound, q0: int,
                                caps=bruteforce.DEFAULT_CAPS) -> bool:
    """The counting identity at a fixed prime power: the fiber-count series
    equals the plethystic exponential of the absolutely-indecomposable
    series, with coefficients tracked over F_q and F_{q^2}."""
    depth = 2
    n_vars = Q.num_vertices
    zero = VolumeSequence.const(0, depth)
    one = VolumeSequence.const(1, depth)

    def vseq(values):
        return VolumeSequence(values)

    from .series import all_exponents
    a_coeffs = {}
    for r in all_exponents(bound):
        if all(x == 0 for x in r):
            continue
        entries = []
        for n in (1, 2):
            if any(n * x > b for x, b in zip(r, bound)):
                entries.append(None)
                continue
            qn = q0 ** n
            entries.append(Fraction(
                bruteforce.count_absolutely_indecomposable(Q, alpha, r, qn, caps))
                / (1 - Fraction(1, qn)))
        a_coeffs[r] = vseq(entries)
    a_series = TruncatedSeries([f"t{i}" for i in range(n_vars)], bound, a_coeffs,
                               zero=zero, one=one)
    m_series = plethystic_exp(a_series)

    for r in all_exponents(bound):
        fiber = bruteforce.moment_fiber_count(Q, alpha, r, q0, None, caps)
        gl = 1
        for ri in r:
            gl *= gl_order(q0, alpha, ri)
        lhs = Fraction(fiber, gl) * Fraction(q0) ** (alpha * euler_form(Q, r, r))
        if lhs != m_series.coefficient(r).entry(1):
            return False
    return True


def check_plethystic_fixed_q(caps=bruteforce.DEFAULT_CAPS) -> CheckResult:
    """The counting identity at q=2 on the one-vertex quivers up to rank 2
    and the two-vertex quiver up to rank (2,1)."""
    t0 = time.time()
    cases = [
        (jordan_quiver(), 1, (2,)), (jordan_quiver(), 2, (2,)),
        (loop_quiver(2), 1, (2,)), (loop_quiver(2), 2, (2,)),
        (a2_quiver(), 1, (1, 1)), (a2_quiver(), 2, (1, 1)),
        (a2_quiver(), 1, (2, 1)), (a2_quiver(), 2, (2, 1)),
    ]
    for Q, alpha, bound in cases:
        if not plethystic_identity_fixed_q(Q, alpha, bound, 2, caps):
            return _result("counting identity at fixed q", t0, False,
                           f"{Q!r} alpha={alpha} bound={bound}")
    return _result("fiber counts = Exp of indecomposable counts at q=2", t0, True,
                   "one-vertex ranks <= 2 and two-vertex ranks <= (2,1), alpha <= 2")


# -- criterion 11 -----------------------------------------------------------------

def check_hall(caps=None) -> CheckResult:
    """Associativity, bialgebra compatibility, primitive dimensions and the
    distinguished brackets for the two-vertex quiver over O_alpha."""
    t0 = time.time()
    for alpha in (1, 2):
        unit_label = (0,) * alpha
        for q in (2, 3):
            e1 = hall.HallFunction.indicator((1, 0), alpha, unit_label)
            e2 = hall.HallFunction.indicator((0, 1), alpha, unit_label)
            br = hall.bracket(e1, e2, q)
            want = hall.HallFunction((1, 1), alpha, {
                tuple(1 if j == i else 0 for j in range(alpha)): 1
                for i in range(alpha)})
            if br != want:
                return _result("Hall algebra structure", t0, False,
                               f"[e1,e2] alpha={alpha} q={q}")
            if not _hall_associativity(alpha, q):
                return _result("Hall algebra structure", t0, False,
                               f"associativity alpha={alpha} q={q}")
            if not _hall_bialgebra(alpha, q):
                return _result("Hall algebra structure", t0, False,
                               f"bialgebra axiom alpha={alpha} q={q}")
            if not _hall_extra_generators_central(alpha, q):
                return _result("Hall algebra structure", t0, False,
                               f"extra generators alpha={alpha} q={q}")
        if hall.primitive_space_dim((1, 1), alpha) != alpha:
            return _result("Hall algebra structure", t0, False,
                           f"primitive dimension at (1,1), alpha={alpha}")
        if hall.primitive_space_dim((2, 1), alpha) != 0:
            return _result("Hall algebra structure", t0, False,
                           f"primitive dimension at (2,1), alpha={alpha}")
    return _result("Hall algebra: associative bialgebra with the expected primitives", t0,
                   True, "alpha <= 2, q in {2,3}, total rank <= (2,2)")


def _hall_indicator_basis(alpha):
    """Orbit indicators in the degrees used by the axiom checks."""
    ranks = [(1, 0), (0, 1), (1, 1)]
    out = []
    for rk in ranks:
        for lab in hall.all_orbit_labels(rk, alpha):
            out.append(hall.HallFunction.indicator(rk, alpha, lab))
    return out


def _hall_associativity(alpha, q) -> bool:
    basis = _hall_indicator_basis(alpha)
    for f in basis:
        for g in basis:
            for h in basis:
                total = tuple(a + b + c for a, b, c in zip(f.rank, g.rank, h.rank))
                if total[0] > 2 or total[1] > 2:
                    continue
                left = hall.hall_product(hall.hall_product(f, g, q), h, q)
                right = hall.hall_product(f, hall.hall_product(g, h, q), q)
                if left != right:
                    return False
    return True


def _coproduct_table(f):
    """Values of Delta(f) on all orbit-label pairs."""
    table = {}
    for left, right in hall.hall_coproduct(f):
        lab1 = next(iter(left.values))
        for lab2, v in right.values.items():
            table[(left.rank, lab1, right.rank, lab2)] = \
                table.get((left.rank, lab1, right.rank, lab2), Fraction(0)) + v
    return table


def _hall_bialgebra(alpha, q) -> bool:
    """Delta(f * g) = Delta(f) Delta(g) on indicator pairs (componentwise
    products of tensor legs)."""
    basis = _hall_indicator_basis(alpha)
    for f in basis:
        for g in basis:
            total = tuple(a + b for a, b in zip(f.rank, g.rank))
            if total[0] > 2 or total[1] > 2:
                continue
            lhs = _coproduct_table(hall.hall_product(f, g, q))
            rhs = {}
            for lf, rf in hall.hall_coproduct(f):
                for lg, rg in hall.hall_coproduct(g):
                    left = hall.hall_product(lf, lg, q)
                    right = hall.hall_product(rf, rg, q)
                    for lab1, v1 in left.values.items():
                        for lab2, v2 in right.values.items():
                            key = (left.rank, lab1, right.rank, lab2)
                            rhs[key] = rhs.get(key, Fraction(0)) + v1 * v2
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                return False
    return True


def _hall_extra_generators_central(alpha, q) -> bool:
    """1_{O_i}, i >= 1 brackets to zero with every generator of the
    primitive space, inside the tested rank window."""
    gens = [hall.HallFunction.indicator((1, 0), alpha, (0,) * alpha),
            hall.HallFunction.indicator((0, 1), alpha, (0,) * alpha)]
    for i in range(alpha):
        lab = tuple(1 if j == i else 0 for j in range(alpha))
        gens.append(hall.HallFunction.indicator((1, 1), alpha, lab))
    for i in range(1, alpha):
        lab = tuple(1 if j == i else 0 for j in range(alpha))
        f = hall.HallFunction.indicator((1, 1), alpha, lab)
        for g in gens:
            total = (f.rank[0] + g.rank[0], f.rank[1] + g.rank[1])
            if total[0] > 2 or total[1] > 2:
                continue
            if hall.bracket(f, g, q).values:
                return False
    return True


# -- suite plumbing ----------------------------------------------------------------

CRITERIA = [
    ("1", "toric tables", check_toric_tables),
    ("2", "toric brute anchor", check_toric_brute_anchor),
    ("3", "rank-2 loop counts", check_gloop_rank2),
    ("4", "rank-3 loop counts", check_gloop_rank3),
    ("5", "Kronecker pipeline", check_kronecker_pipeline),
    ("6", "moment fibers", check_moment_fibers),
    ("7", "deformed fibers", check_deformed_fibers),
    ("8", "jet series", check_jet_series),
    ("9", "limits and Hilbert", check_limits_hilbert),
    ("10", "fixed-q counting identity", check_plethystic_fixed_q),
    ("11", "Hall algebra", check_hall),
]

SUITES = {
    "symbolic": ["1", "3", "4", "5", "9"],
    "brute": ["2", "6", "7", "8"],
    "cross": ["10"],
    "hall": ["11"],
}


def run_checks(suite: str = "all", out=None):
    """Run a suite (or all criteria); returns (results, all_passed)."""
    if suite == "all":
        wanted = [key for key, _, _ in CRITERIA]
    else:
        wanted = SUITES[suite]
    results = []
    for key, _, fn in CRITERIA:
        if key not in wanted:
            continue
        res = fn()
        results.append(res)
        if out is not None:
            out.write(res.line() + "\n")
            out.flush()
    return results, all(r.passed for r in results)
