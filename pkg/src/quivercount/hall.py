"""The Ringel-Hall algebra of the one-arrow two-vertex quiver over O_alpha.

Representations of rank (r1, r2) are single matrices x over O_alpha of
shape r2 x r1, and their orbits under base change are classified by the
Smith data (q_0, ..., q_{alpha-1}): the multiset of diagonal powers t^i
padded with zero blocks.  Constructible functions constant on orbits form
a graded vector space; the product integrates over locally free submodule
flags at a fixed prime power, the coproduct evaluates on direct sums.

Conventions: in f1 * f2, the second factor restricts to the submodule and
the first to the quotient, which makes 1_{e2} * 1_{e1} the indicator of
the zero orbit in rank (1,1) and 1_{e1} * 1_{e2} the constant function 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import CapExceeded
from .localring import OMatrix, ORing, smith_invariants, solve_linear

MAX_TOTAL_RANK = 4
MAX_ALPHA = 3
MAX_Q = 9

# sample points for reading off structure constants as polynomials in q;
# six points pin the degree (at most 2 alpha <= 4) with room to spare
EULER_SAMPLE_POINTS = (2, 3, 4, 5, 7, 9)


def all_orbit_labels(rank, alpha: int):
    """Smith tuples (q_0..q_{alpha-1}) with sum at most min(rank)."""
    r = min(rank)
    labels = []
    for combo in product(range(r + 1), repeat=alpha):
        if sum(combo) <= r:
            labels.append(combo)
    return sorted(labels)


def orbit_representative(ring: ORing, rank, label) -> OMatrix:
    """Canonical matrix diag(t^0 I_{q_0}, ..., t^{alpha-1} I_{q_{alpha-1}}, 0)."""
    r1, r2 = rank
    powers = []
    for i, cnt in enumerate(label):
        powers.extend([i] * cnt)
    entries = [[ring.zero] * r1 for _ in range(r2)]
    for k, p in enumerate(powers):
        entries[k][k] = ring.t_power(p)
    return OMatrix(ring, entries, shape=(r2, r1))


def orbit_label_of(x: OMatrix, alpha: int):
    gammas = smith_invariants(x)
    label = [0] * alpha
    for g in gammas:
        if g < alpha:
            label[g] += 1
    return tuple(label)


def is_indecomposable_label(rank, label, alpha: int) -> bool:
    """The module of a label splits into t^i-blocks and vertex simples;
    it is indecomposable iff there is exactly one summand."""
    r1, r2 = rank
    r = sum(label)
    summands = r + (r1 - r) + (r2 - r)
    return summands == 1


@dataclass
class HallFunction:
    """Orbit-constant function on representations of one fixed rank."""
    rank: tuple
    alpha: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        self.rank = tuple(int(x) for x in self.rank)
        self.values = {tuple(k): Fraction(v) for k, v in self.values.items() if v}

    @staticmethod
    def indicator(rank, alpha, label) -> "HallFunction":
        return HallFunction(rank, alpha, {tuple(label): Fraction(1)})

    @staticmethod
    def unit(alpha) -> "HallFunction":
        return HallFunction((0, 0), alpha, {(0,) * alpha: Fraction(1)})

    @staticmethod
    def constant(rank, alpha, value=1) -> "HallFunction":
        return HallFunction(rank, alpha,
                            {lab: Fraction(value) for lab in all_orbit_labels(rank, alpha)})

    def value(self, label) -> Fraction:
        return self.values.get(tuple(label), Fraction(0))

    def __add__(self, other):
        if self.rank != other.rank or self.alpha != other.alpha:
            raise ValueError("Hall functions of different degrees")
        vals = dict(self.values)
        for k, v in other.values.items():
            vals[k] = vals.get(k, Fraction(0)) + v
        return HallFunction(self.rank, self.alpha, vals)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "HallFunction":
        return HallFunction(self.rank, self.alpha,
                            {k: v * c for k, v in self.values.items()})

    def __eq__(self, other):
        return (isinstance(other, HallFunction) and self.rank == other.rank
                and self.alpha == other.alpha and self.values == other.values)

    def __repr__(self):
        return f"HallFunction(rank={self.rank}, alpha={self.alpha}, values={self.values})"


# -- submodule machinery -------------------------------------------------------

def _free_summands(ring: ORing, ambient: int, k: int):
    """Rank-k direct summands of O^ambient: (basis matrix, element set) pairs.

    A tuple of k columns spans a free summand iff its Smith invariants all
    vanish; summands are deduplicated by their element sets.
    """
    if k == 0:
        return [(OMatrix(ring, [[] for _ in range(ambient)], shape=(ambient, 0)),
                 frozenset([(ring.zero,) * ambient]))]
    if k > ambient:
        return []
    out = {}
    vectors = list(product(ring.elements(), repeat=ambient))
    for cols in product(vectors, repeat=k):
        basis = OMatrix(ring, [[cols[j][i] for j in range(k)] for i in range(ambient)],
                        shape=(ambient, k))
        if any(g != 0 for g in smith_invariants(basis)):
            continue
        span = frozenset(basis.apply(w) for w in product(ring.elements(), repeat=k))
        if span not in out:
            out[span] = basis
    return [(basis, span) for span, basis in sorted(out.items(), key=lambda kv: kv[1].entries)]


_SUMMAND_CACHE = {}


def free_summands(ring: ORing, ambient: int, k: int):
    key = (ring.q, ring.alpha, ambient, k)
    if key not in _SUMMAND_CACHE:
        _SUMMAND_CACHE[key] = _free_summands(ring, ambient, k)
    return _SUMMAND_CACHE[key]


def _complete_basis(ring: ORing, basis: OMatrix) -> OMatrix:
    """Extend a summand basis to an invertible square matrix by appending
    standard vectors that stay independent modulo t."""
    n = basis.rows
    cols = [tuple(basis.entries[i][j] for i in range(n)) for j in range(basis.cols)]
    for e in range(n):
        if len(cols) == n:
            break
        cand = tuple(ring.one if i == e else ring.zero for i in range(n))
        trial = OMatrix(ring, [[c[i] for c in cols + [cand]] for i in range(n)],
                        shape=(n, len(cols) + 1))
        if all(g == 0 for g in smith_invariants(trial)):
            cols.append(cand)
    full = OMatrix(ring, [[c[i] for c in cols] for i in range(n)])
    if not full.is_invertible():
        raise AssertionError("basis completion failed")
    return full


def _check_caps(rank, alpha, q):
    if sum(rank) > MAX_TOTAL_RANK or alpha > MAX_ALPHA or q > MAX_Q:
        raise CapExceeded(
            f"Hall computation capped at total rank {MAX_TOTAL_RANK}, "
            f"alpha {MAX_ALPHA}, q {MAX_Q}")


_FLAG_CACHE = {}


def _flag_table(q: int, alpha: int, rank, sub_rank):
    """For each orbit label: the (sub-label, quotient-label) census over all
    x-stable free summand pairs of the given sub-rank.

    The table drives every product in this degree, so it is built once per
    (q, alpha, rank, sub_rank)."""
    key = (q, alpha, tuple(rank), tuple(sub_rank))
    if key in _FLAG_CACHE:
        return _FLAG_CACHE[key]
    ring = ORing(q, alpha)
    pairs1 = free_summands(ring, rank[0], sub_rank[0])
    pairs2 = free_summands(ring, rank[1], sub_rank[1])
    adapted1 = [(_complete_basis(ring, b), b.cols, span) for b, span in pairs1]
    adapted2 = [(_complete_basis(ring, b).inverse(), b.cols, span) for b, span in pairs2]
    table = {}
    for label in all_orbit_labels(rank, alpha):
        x = orbit_representative(ring, rank, label)
        census = {}
        for B1, k1, span1 in adapted1:
            images = [x.apply(tuple(B1.entries[i][j] for i in range(rank[0])))
                      for j in range(k1)]
            for B2inv, k2, span2 in adapted2:
                if any(img not in span2 for img in images):
                    continue
                x_adapted = B2inv * x * B1
                sub = OMatrix(ring, [[x_adapted.entries[i][j] for j in range(k1)]
                                     for i in range(k2)], shape=(k2, k1))
                quo = OMatrix(ring, [[x_adapted.entries[i][j] for j in range(k1, x.cols)]
                                     for i in range(k2, x.rows)],
                              shape=(x.rows - k2, x.cols - k1))
                pair = (orbit_label_of(sub, alpha), orbit_label_of(quo, alpha))
                census[pair] = census.get(pair, 0) + 1
        table[label] = census
    _FLAG_CACHE[key] = table
    return table


def hall_product(f1: HallFunction, f2: HallFunction, q: int) -> HallFunction:
    """(f1 * f2)(x) sums f1(x on the quotient) f2(x on the submodule) over
    x-stable free summand pairs of rank f2.rank, at the given prime power."""
    if f1.alpha != f2.alpha:
        raise ValueError("mixed truncation levels")
    alpha = f1.alpha
    rank = (f1.rank[0] + f2.rank[0], f1.rank[1] + f2.rank[1])
    _check_caps(rank, alpha, q)
    table = _flag_table(q, alpha, rank, f2.rank)
    values = {}
    for label, census in table.items():
        total = Fraction(0)
        for (sub_label, quo_label), count in census.items():
            v2 = f2.value(sub_label)
            if not v2:
                continue
            total += count * f1.value(quo_label) * v2
        if total:
            values[label] = total
    return HallFunction(rank, alpha, values)


def hall_coproduct(f: HallFunction):
    """Delta(f) evaluated on direct sums, as a list of tensor summands.

    Each summand is (indicator of a left orbit, right-component function);
    direct sums concatenate Smith data and add rank deficits.
    """
    alpha = f.alpha
    out = []
    r1, r2 = f.rank
    for s1 in range(r1 + 1):
        for s2 in range(r2 + 1):
            left_rank = (s1, s2)
            right_rank = (r1 - s1, r2 - s2)
            for lab1 in all_orbit_labels(left_rank, alpha):
                right_vals = {}
                for lab2 in all_orbit_labels(right_rank, alpha):
                    summed = tuple(a + b for a, b in zip(lab1, lab2))
                    if sum(summed) > min(r1, r2):
                        continue
                    v = f.value(summed)
                    if v:
                        right_vals[lab2] = v
                if right_vals:
                    out.append((HallFunction.indicator(left_rank, alpha, lab1),
                                HallFunction(right_rank, alpha, right_vals)))
    return out


def is_primitive(f: HallFunction) -> bool:
    """Delta(f) = f x 1 + 1 x f, i.e. support on indecomposable orbits."""
    alpha = f.alpha
    unit_label = (0,) * alpha
    for left, right in hall_coproduct(f):
        lr, rr = left.rank, right.rank
        if lr == (0, 0):
            if right.values != f.values or rr != f.rank:
                return False
        elif rr == (0, 0):
            lab = next(iter(left.values))
            if right.value(unit_label) != f.value(lab):
                return False
        else:
            return False
    return True


def primitive_space_dim(rank, alpha: int) -> int:
    """Dimension of the primitive subspace in one degree: the number of
    indecomposable orbits."""
    return sum(1 for lab in all_orbit_labels(rank, alpha)
               if is_indecomposable_label(rank, lab, alpha))


def bracket(f1: HallFunction, f2: HallFunction, q: int) -> HallFunction:
    return hall_product(f1, f2, q) - hall_product(f2, f1, q)


def structure_constants(rank1, rank2, alpha: int, q: int):
    """Products of all orbit-indicator pairs, as a nested dictionary
    {(label1, label2): {label: value}}."""
    out = {}
    for lab1 in all_orbit_labels(rank1, alpha):
        for lab2 in all_orbit_labels(rank2, alpha):
            prod_f = hall_product(HallFunction.indicator(rank1, alpha, lab1),
                                  HallFunction.indicator(rank2, alpha, lab2), q)
            out[(lab1, lab2)] = dict(prod_f.values)
    return out


def _interpolate_at_one(samples) -> Fraction:
    """Value at q = 1 of the polynomial through (point, value) samples."""
    total = Fraction(0)
    points = [Fraction(p) for p, _ in samples]
    for i, (xi, yi) in enumerate(samples):
        term = Fraction(yi)
        for j, xj in enumerate(points):
            if j != i:
                term *= (1 - xj) / (Fraction(xi) - xj)
        total += term
    return total


def hall_product_euler(f1: HallFunction, f2: HallFunction) -> HallFunction:
    """The Euler-characteristic shadow of the product.

    Flag counts are polynomial in q at these ranks; the constructible
    convolution over the complex numbers integrates Euler characteristics,
    which is the specialization of those polynomials at q = 1.  Values are
    read off by interpolation through the sample points.
    """
    if f1.alpha > 2:
        raise CapExceeded("Euler-shadow products implemented for alpha <= 2")
    sampled = [hall_product(f1, f2, p) for p in EULER_SAMPLE_POINTS]
    rank = sampled[0].rank
    alpha = f1.alpha
    values = {}
    for label in all_orbit_labels(rank, alpha):
        v = _interpolate_at_one(
            [(p, s.value(label)) for p, s in zip(EULER_SAMPLE_POINTS, sampled)])
        if v:
            values[label] = v
    return HallFunction(rank, alpha, values)


def bracket_euler(f1: HallFunction, f2: HallFunction) -> HallFunction:
    return hall_product_euler(f1, f2) - hall_product_euler(f2, f1)
