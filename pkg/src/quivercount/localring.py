"""Arithmetic over F_q and O_alpha = F_q[t]/(t^alpha), with Smith normal form.

Field elements are integers 0..q-1 encoding base-p coefficient vectors of
F_p[x]/(modulus); all field operations go through precomputed tables, which
is comfortable for the supported range p in {2,3,5,7}, k in {1,2}.

O_alpha elements are length-alpha tuples of field elements (coefficient of
t^0 first).  An element is a unit exactly when its t^0 coefficient is
nonzero, and the valuation of 0 is alpha by convention.

The Smith normal form over O_alpha diagonalizes any matrix as
U M V = diag(t^g1, ..., t^gr, 0, ...) with U, V invertible and the g's
weakly increasing; zero diagonal entries are encoded as g = alpha so the
kernel-size formula stays uniform.
"""

from __future__ import annotations

from itertools import product

from .errors import EnumerationCapExceeded

# fixed irreducible quadratics x^2 + c1 x + c0 over F_p, stored as (c1, c0):
# x^2+x+1 over F_2, x^2+1 over F_3 and F_7, x^2+2 over F_5
_QUADRATIC_MODULI = {2: (1, 1), 3: (0, 1), 5: (0, 2), 7: (0, 1)}

_SMALL_PRIMES = (2, 3, 5, 7)


def _factor_prime_power(q: int):
    for p in _SMALL_PRIMES:
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m == 1 and k in (1, 2):
                return p, k
    raise ValueError(f"unsupported field size {q}: need p^k, p in {_SMALL_PRIMES}, k <= 2")


class Fq:
    """The finite field with q = p^k elements (q <= 49)."""

    _cache: dict = {}

    def __new__(cls, q: int):
        if q in cls._cache:
            return cls._cache[q]
        self = super().__new__(cls)
        cls._cache[q] = self
        return self

    def __init__(self, q: int):
        if hasattr(self, "q"):
            return
        p, k = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.k = k
        if k == 2:
            c1, c0 = _QUADRATIC_MODULI[p]
            self.modulus = (c0, c1)  # x^2 = -(c1 x + c0)
        else:
            self.modulus = None
        self._build_tables()

    def _build_tables(self):
        q, p, k = self.q, self.p, self.k
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            a0, a1 = a % p, a // p
            for b in range(q):
                b0, b1 = b % p, b // p
                add[a][b] = (a0 + b0) % p + p * ((a1 + b1) % p)
                if k == 1:
                    mul[a][b] = (a * b) % p
                else:
                    c0m, c1m = self.modulus
                    # (a0 + a1 x)(b0 + b1 x) with x^2 = -c1 x - c0
                    r0 = (a0 * b0 - a1 * b1 * c0m) % p
                    r1 = (a0 * b1 + a1 * b0 - a1 * b1 * c1m) % p
                    mul[a][b] = r0 + p * r1
        self.add_table = add
        self.mul_table = mul
        self.neg_table = [((-a % p) + p * (-(a // p) % p)) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self.inv_table = inv

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return self.inv_table[a]

    def from_int(self, n: int) -> int:
        """Image of the rational integer n under Z -> F_q."""
        return n % self.p

    def elements(self):
        return range(self.q)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def __repr__(self):
        return f"Fq({self.q})"


class ORing:
    """O_alpha = F_q[t]/(t^alpha); elements are coefficient tuples."""

    _cache: dict = {}

    def __new__(cls, q: int, alpha: int):
        key = (q, alpha)
        if key in cls._cache:
            return cls._cache[key]
        self = super().__new__(cls)
        cls._cache[key] = self
        return self

    def __init__(self, q: int, alpha: int):
        if hasattr(self, "alpha"):
            return
        if alpha < 1:
            raise ValueError("alpha must be >= 1")
        self.field = Fq(q)
        self.q = q
        self.alpha = alpha
        self.zero = (0,) * alpha
        self.one = (1,) + (0,) * (alpha - 1)
        self.t = tuple(1 if i == 1 else 0 for i in range(alpha)) if alpha > 1 else (0,)

    def size(self) -> int:
        return self.q ** self.alpha

    def from_coeffs(self, coeffs):
        c = list(coeffs)[: self.alpha]
        c += [0] * (self.alpha - len(c))
        return tuple(c)

    def from_int(self, n: int):
        return (self.field.from_int(n),) + (0,) * (self.alpha - 1)

    def t_power(self, k: int):
        """t^k, which is zero from k = alpha on."""
        if k >= self.alpha:
            return self.zero
        return tuple(1 if i == k else 0 for i in range(self.alpha))

    def add(self, a, b):
        add = self.field.add_table
        return tuple(add[x][y] for x, y in zip(a, b))

    def neg(self, a):
        neg = self.field.neg_table
        return tuple(neg[x] for x in a)

    def sub(self, a, b):
        add, neg = self.field.add_table, self.field.neg_table
        return tuple(add[x][neg[y]] for x, y in zip(a, b))

    def mul(self, a, b):
        alpha = self.alpha
        add, mul = self.field.add_table, self.field.mul_table
        out = [0] * alpha
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            row = mul[ai]
            for j in range(alpha - i):
                bj = b[j]
                if bj:
                    out[i + j] = add[out[i + j]][row[bj]]
        return tuple(out)

    def scalar_mul(self, c: int, a):
        row = self.field.mul_table[c]
        return tuple(row[x] for x in a)

    def val(self, a) -> int:
        for i, x in enumerate(a):
            if x:
                return i
        return self.alpha

    def is_unit(self, a) -> bool:
        return a[0] != 0

    def inv(self, a):
        """Inverse of a unit, coefficient by coefficient."""
        if a[0] == 0:
            raise ZeroDivisionError("inverse of a non-unit in O_alpha")
        f = self.field
        inv0 = f.inv(a[0])
        out = [inv0] + [0] * (self.alpha - 1)
        for n in range(1, self.alpha):
            # coefficient n of a * out must vanish
            s = 0
            for i in range(1, n + 1):
                s = f.add(s, f.mul(a[i], out[n - i]))
            out[n] = f.neg(f.mul(inv0, s))
        return tuple(out)

    def divide_exact(self, a, b):
        """a / b when val(a) >= val(b); b nonzero."""
        v = self.val(b)
        if v == self.alpha:
            raise ZeroDivisionError("division by zero in O_alpha")
        if self.val(a) < v:
            raise ValueError("division with valuation drop is not exact")
        shifted_a = a[v:] + (0,) * v
        unit = b[v:] + (0,) * v
        return self.mul(shifted_a, self.inv(unit))

    def elements(self):
        return product(self.field.elements(), repeat=self.alpha)

    def units(self):
        for a in self.elements():
            if a[0] != 0:
                yield a

    def __repr__(self):
        return f"ORing(q={self.q}, alpha={self.alpha})"


class OMatrix:
    """Immutable matrix over O_alpha."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: ORing, entries, shape=None):
        self.ring = ring
        self.entries = tuple(tuple(row) for row in entries)
        if self.entries:
            self.rows = len(self.entries)
            self.cols = len(self.entries[0])
        else:
            self.rows, self.cols = shape if shape else (0, 0)

    @staticmethod
    def zero(ring: ORing, rows: int, cols: int) -> "OMatrix":
        return OMatrix(ring, [[ring.zero] * cols for _ in range(rows)])

    @staticmethod
    def identity(ring: ORing, n: int) -> "OMatrix":
        return OMatrix(ring, [[ring.one if i == j else ring.zero for j in range(n)]
                              for i in range(n)])

    @staticmethod
    def from_ints(ring: ORing, rows) -> "OMatrix":
        return OMatrix(ring, [[ring.from_int(x) for x in row] for row in rows])

    def __eq__(self, other):
        if not isinstance(other, OMatrix):
            return NotImplemented
        return self.ring is other.ring and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"OMatrix({self.entries!r})"

    def __add__(self, other):
        r = self.ring
        return OMatrix(r, [[r.add(a, b) for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)],
                       shape=(self.rows, self.cols))

    def __sub__(self, other):
        r = self.ring
        return OMatrix(r, [[r.sub(a, b) for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)],
                       shape=(self.rows, self.cols))

    def __neg__(self):
        r = self.ring
        return OMatrix(r, [[r.neg(a) for a in row] for row in self.entries],
                       shape=(self.rows, self.cols))

    def __mul__(self, other):
        r = self.ring
        if self.cols != other.rows:
            raise ValueError("matrix shape mismatch")
        if self.rows == 0 or other.cols == 0:
            return OMatrix(r, [], shape=(self.rows, other.cols))
        ot = list(zip(*other.entries)) if other.entries else [()] * other.cols
        out = []
        for row in self.entries:
            out_row = []
            for col in ot:
                acc = r.zero
                for a, b in zip(row, col):
                    acc = r.add(acc, r.mul(a, b))
                out_row.append(acc)
            out.append(out_row)
        return OMatrix(r, out, shape=(self.rows, other.cols))

    def apply(self, vec):
        """Matrix times column vector (tuple of O-elements)."""
        r = self.ring
        out = []
        for row in self.entries:
            acc = r.zero
            for a, b in zip(row, vec):
                acc = r.add(acc, r.mul(a, b))
            out.append(acc)
        return tuple(out)

    def reduction_mod_t(self):
        """Entries modulo t, as a list of lists of field elements."""
        return [[e[0] for e in row] for row in self.entries]

    def is_invertible(self) -> bool:
        """Invertible over O_alpha iff invertible modulo t."""
        if self.rows != self.cols:
            return False
        f = self.ring.field
        m = self.reduction_mod_t()
        n = self.rows
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
            if piv is None:
                return False
            m[col], m[piv] = m[piv], m[col]
            inv = f.inv(m[col][col])
            m[col] = [f.mul(inv, x) for x in m[col]]
            for r2 in range(n):
                if r2 != col and m[r2][col] != 0:
                    c = m[r2][col]
                    m[r2] = [f.sub(x, f.mul(c, y)) for x, y in zip(m[r2], m[col])]
        return True

    def inverse(self) -> "OMatrix":
        """Inverse of an invertible square matrix, via the Smith factors."""
        gammas, U, V = smith_normal_form(self)
        if any(g != 0 for g in gammas) or self.rows != self.cols:
            raise ZeroDivisionError("matrix is not invertible over O_alpha")
        return V * U


def smith_normal_form(M: OMatrix):
    """Return (gammas, U, V) with U M V = diag(t^g) and U, V invertible.

    Pivots take the entry of smallest valuation, ties broken row-major,
    which makes the factorization deterministic.  gammas has length
    min(rows, cols); zero invariants appear as alpha.
    """
    ring = M.ring
    alpha = ring.alpha
    A = [list(row) for row in M.entries]
    n, m = M.rows, M.cols
    U = [list(row) for row in OMatrix.identity(ring, n).entries]
    V = [list(row) for row in OMatrix.identity(ring, m).entries]
    gammas = []
    k = 0
    limit = min(n, m)
    while k < limit:
        best = None
        best_val = alpha
        for i in range(k, n):
            Ai = A[i]
            for j in range(k, m):
                v = ring.val(Ai[j])
                if v < best_val:
                    best, best_val = (i, j), v
                    if v == 0:
                        break
            if best_val == 0:
                break
        if best is None:
            break
        i0, j0 = best
        if i0 != k:
            A[k], A[i0] = A[i0], A[k]
            U[k], U[i0] = U[i0], U[k]
        if j0 != k:
            for row in A:
                row[k], row[j0] = row[j0], row[k]
            for row in V:
                row[k], row[j0] = row[j0], row[k]
        # scale the pivot row so the pivot becomes exactly t^gamma
        g = best_val
        unit = A[k][k][g:] + (0,) * g
        unit_inv = ring.inv(unit)
        A[k] = [ring.mul(unit_inv, x) for x in A[k]]
        U[k] = [ring.mul(unit_inv, x) for x in U[k]]
        # clear the rest of column k (row operations, tracked in U)
        for i in range(n):
            if i == k:
                continue
            x = A[i][k]
            if ring.val(x) >= alpha:
                continue
            c = ring.divide_exact(x, A[k][k])
            A[i] = [ring.sub(a, ring.mul(c, b)) for a, b in zip(A[i], A[k])]
            U[i] = [ring.sub(a, ring.mul(c, b)) for a, b in zip(U[i], U[k])]
        # clear the rest of row k (column operations, tracked in V)
        for j in range(m):
            if j == k:
                continue
            x = A[k][j]
            if ring.val(x) >= alpha:
                continue
            c = ring.divide_exact(x, A[k][k])
            for row in A:
                row[j] = ring.sub(row[j], ring.mul(c, row[k]))
            for row in V:
                row[j] = ring.sub(row[j], ring.mul(c, row[k]))
        gammas.append(g)
        k += 1
    while len(gammas) < limit:
        gammas.append(alpha)
    return gammas, OMatrix(ring, U), OMatrix(ring, V)


def smith_invariants(M: OMatrix):
    """The gammas alone, skipping the U/V bookkeeping (hot-loop variant)."""
    ring = M.ring
    alpha = ring.alpha
    A = [list(row) for row in M.entries]
    n, m = M.rows, M.cols
    gammas = []
    limit = min(n, m)
    k = 0
    while k < limit:
        best = None
        best_val = alpha
        for i in range(k, n):
            Ai = A[i]
            for j in range(k, m):
                v = ring.val(Ai[j])
                if v < best_val:
                    best, best_val = (i, j), v
                    if v == 0:
                        break
            if best_val == 0:
                break
        if best is None:
            break
        i0, j0 = best
        if i0 != k:
            A[k], A[i0] = A[i0], A[k]
        if j0 != k:
            for row in A:
                row[k], row[j0] = row[j0], row[k]
        g = best_val
        pivot = A[k][k]
        unit_inv = ring.inv(pivot[g:] + (0,) * g)
        A[k] = [ring.mul(unit_inv, x) for x in A[k]]
        for i in range(k + 1, n):
            x = A[i][k]
            if ring.val(x) >= alpha:
                continue
            c = ring.divide_exact(x, A[k][k])
            Ai = A[i]
            Ak = A[k]
            A[i] = [ring.sub(a, ring.mul(c, b)) for a, b in zip(Ai, Ak)]
        # row k cleanup only affects columns beyond k
        Ak = A[k]
        for j in range(k + 1, m):
            x = Ak[j]
            if ring.val(x) >= alpha:
                continue
            c = ring.divide_exact(x, Ak[k])
            for row in A:
                row[j] = ring.sub(row[j], ring.mul(c, row[k]))
        gammas.append(g)
        k += 1
    while len(gammas) < limit:
        gammas.append(alpha)
    return gammas


def kernel_size_exponent(M: OMatrix) -> int:
    """e with |Ker M| = q^e for M acting on O_alpha^cols.

    A diagonal entry t^g contributes g; each of the cols - r zero columns
    contributes a full alpha.
    """
    gammas = smith_invariants(M)
    return kernel_exponent_from_gammas(gammas, M.cols, M.ring.alpha)


def kernel_exponent_from_gammas(gammas, cols: int, alpha: int) -> int:
    r = sum(1 for g in gammas if g < alpha)
    return alpha * (cols - r) + sum(g for g in gammas if g < alpha)


def kernel_elements(M: OMatrix):
    """All vectors z with M z = 0 (exponentially many; small inputs only)."""
    ring = M.ring
    alpha = ring.alpha
    gammas, _, V = smith_normal_form(M)
    gammas = list(gammas) + [alpha] * (M.cols - len(gammas))
    # kernel of diag(t^g) is prod t^(alpha-g) O; push through V
    coords = []
    for g in gammas:
        if g >= alpha:
            coords.append(list(ring.elements()))
        elif g == 0:
            coords.append([ring.zero])
        else:
            opts = []
            for tail in product(ring.field.elements(), repeat=g):
                opts.append(ring.from_coeffs([0] * (alpha - g) + list(tail)))
            coords.append(opts)
    for w in product(*coords):
        yield V.apply(w)


def solve_linear(A: OMatrix, b):
    """Solve A x = b over O_alpha.

    Returns (solvable, kernel_exponent, particular_solution_or_None).
    """
    ring = A.ring
    alpha = ring.alpha
    gammas, U, V = smith_normal_form(A)
    gammas = list(gammas)
    c = U.apply(tuple(b))
    y = []
    for i in range(A.rows):
        g = gammas[i] if i < len(gammas) else alpha
        ci = c[i]
        if g >= alpha:
            if ring.val(ci) < alpha:
                return False, kernel_exponent_from_gammas(gammas, A.cols, alpha), None
            if i < A.cols:
                y.append(ring.zero)
        else:
            if ring.val(ci) < g:
                return False, kernel_exponent_from_gammas(gammas, A.cols, alpha), None
            y.append(ring.divide_exact(ci, ring.t_power(g)))
    while len(y) < A.cols:
        y.append(ring.zero)
    x = V.apply(tuple(y[: A.cols]))
    return True, kernel_exponent_from_gammas(gammas, A.cols, alpha), x


def gl_order(q: int, alpha: int, r: int) -> int:
    """|GL_r(O_alpha)| = q^((alpha-1) r^2) * prod_{i<r} (q^r - q^i)."""
    if r == 0:
        return 1
    order = q ** ((alpha - 1) * r * r)
    for i in range(r):
        order *= q ** r - q ** i
    return order


def gl_enumerate(q: int, alpha: int, r: int, cap: int = 10 ** 5):
    """All invertible r x r matrices over O_alpha, as OMatrix values.

    Matrices are generated as (unit modulo t) x (free higher coefficients);
    raises EnumerationCapExceeded when the group order exceeds the cap.
    """
    order = gl_order(q, alpha, r)
    if order > cap:
        raise EnumerationCapExceeded(
            f"|GL_{{{alpha},{r}}}(F_{q})| = {order} exceeds cap {cap}")
    ring = ORing(q, alpha)
    if r == 0:
        yield OMatrix(ring, [])
        return
    field = ring.field
    # invertible matrices modulo t
    base = []
    for flat in product(field.elements(), repeat=r * r):
        rows = [flat[i * r:(i + 1) * r] for i in range(r)]
        m0 = OMatrix(ring, [[(x,) + (0,) * (alpha - 1) for x in row] for row in rows])
        if m0.is_invertible():
            base.append(rows)
    higher_range = list(product(field.elements(), repeat=alpha - 1))
    for rows in base:
        for flat_high in product(higher_range, repeat=r * r):
            entries = []
            idx = 0
            for i in range(r):
                row = []
                for j in range(r):
                    row.append((rows[i][j],) + tuple(flat_high[idx]))
                    idx += 1
                entries.append(row)
            yield OMatrix(ring, entries)
