"""Exact Laurent polynomials and rational functions in the counting variable q.

A QPolynomial is a sparse dictionary {exponent: Fraction} with integer
exponents of either sign (Laurent terms are allowed, since several of the
closed-form counts carry factors like q^(2g-3) - 1 that drop below degree
zero for small g).  Zero coefficients are never stored, so two equal
polynomials always carry identical dictionaries.

A RationalFunction is a reduced quotient num/den of two QPolynomials.  The
canonical form is: num and den contain no Laurent terms (any power of q is
moved wholly into num or den), gcd(num, den) = 1 over Q[q], both have
coprime integer coefficients, and den has a positive leading coefficient.
Equality of canonical forms then coincides with cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import PoleAtEvaluationPoint

Rat = Fraction


class QPolynomial:
    """Sparse Laurent polynomial in q over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    d[int(e)] = c
        self.coeffs = d

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "QPolynomial":
        return QPolynomial()

    @staticmethod
    def one() -> "QPolynomial":
        return QPolynomial({0: 1})

    @staticmethod
    def const(c) -> "QPolynomial":
        return QPolynomial({0: Fraction(c)})

    @staticmethod
    def q(exp: int = 1, coeff=1) -> "QPolynomial":
        """The monomial coeff * q^exp."""
        return QPolynomial({exp: Fraction(coeff)})

    @staticmethod
    def from_int_coeffs(coeffs) -> "QPolynomial":
        """Build from a list of coefficients indexed by degree 0, 1, ..."""
        return QPolynomial({e: c for e, c in enumerate(coeffs)})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Largest exponent; -1 on the zero polynomial by convention."""
        return max(self.coeffs) if self.coeffs else -1

    def low_degree(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def leading_coeff(self) -> Fraction:
        return self.coeffs[self.degree()] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = d.get(e, Fraction(0)) + c
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        out = QPolynomial()
        out.coeffs = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = QPolynomial()
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = d.get(e, Fraction(0)) + c1 * c2
                if s:
                    d[e] = s
                else:
                    d.pop(e, None)
        out = QPolynomial()
        out.coeffs = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial; use RationalFunction")
        result = QPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        out = QPolynomial()
        out.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return out

    def adams(self, m: int) -> "QPolynomial":
        """Substitute q -> q^m."""
        if m < 1:
            raise ValueError("Adams operator index must be >= 1")
        out = QPolynomial()
        out.coeffs = {e * m: c for e, c in self.coeffs.items()}
        return out

    def evaluate(self, q0) -> Fraction:
        q0 = Fraction(q0)
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * q0 ** e
        return total

    # -- Euclidean toolbox on ordinary (non-Laurent) polynomials ------

    def divmod_ordinary(self, other: "QPolynomial"):
        """Polynomial division; both operands must have low_degree >= 0."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self.coeffs)
        quo = {}
        dB = other.degree()
        lcB = other.leading_coeff()
        while rem and max(rem) >= dB:
            dA = max(rem)
            c = rem[dA] / lcB
            quo[dA - dB] = c
            for e, b in other.coeffs.items():
                e2 = e + dA - dB
                s = rem.get(e2, Fraction(0)) - c * b
                if s:
                    rem[e2] = s
                else:
                    rem.pop(e2, None)
        q = QPolynomial()
        q.coeffs = quo
        r = QPolynomial()
        r.coeffs = rem
        return q, r

    def monic(self) -> "QPolynomial":
        lc = self.leading_coeff()
        if not lc or lc == 1:
            return self
        out = QPolynomial()
        out.coeffs = {e: c / lc for e, c in self.coeffs.items()}
        return out

    # -- printing -----------------------------------------------------

    def __repr__(self):
        return f"QPolynomial({self.to_string()!r})"

    def to_string(self) -> str:
        """Render with exponents in decreasing order, e.g. 'q^2 + 4q + 1'."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = _coeff_str(c)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if c == 1 else f"{_coeff_str(c)}{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def int_coeff_list(self):
        """Coefficients indexed from degree 0; requires an ordinary polynomial."""
        if self.coeffs and min(self.coeffs) < 0:
            raise ValueError("Laurent polynomial has no coefficient list")
        out = [Fraction(0)] * (self.degree() + 1 if self.coeffs else 0)
        for e, c in self.coeffs.items():
            out[e] = c
        return out


def _coeff_str(c: Fraction) -> str:
    return str(c) if c.denominator == 1 else f"({c})"


def _as_poly(x) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return QPolynomial.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to QPolynomial")


def poly_gcd(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Monic gcd over Q[q]; inputs must be ordinary polynomials."""
    while not b.is_zero():
        _, r = a.divmod_ordinary(b)
        a, b = b, r
    return a.monic()


class RationalFunction:
    """Reduced quotient of integer-coefficient polynomials in q."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = QPolynomial.one() if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _reduce(num, den)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "RationalFunction":
        return RationalFunction(QPolynomial.zero())

    @staticmethod
    def one() -> "RationalFunction":
        return RationalFunction(QPolynomial.one())

    @staticmethod
    def const(c) -> "RationalFunction":
        return RationalFunction(QPolynomial.const(c))

    @staticmethod
    def q(exp: int = 1, coeff=1) -> "RationalFunction":
        return RationalFunction(QPolynomial.q(exp, coeff))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == QPolynomial.one()

    def as_polynomial(self) -> QPolynomial:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self.to_string()}")
        return self.num

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.const(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) + (-self)

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction.one() / self ** (-n)
        out = RationalFunction.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "RationalFunction":
        return RationalFunction.one() / self

    def adams(self, m: int) -> "RationalFunction":
        """q -> q^m, reduced."""
        return RationalFunction(self.num.adams(m), self.den.adams(m))

    def evaluate(self, q0) -> Fraction:
        """Exact evaluation at a rational point; raises at poles."""
        d = self.den.evaluate(q0)
        if d == 0:
            raise PoleAtEvaluationPoint(f"denominator vanishes at q = {q0}")
        return self.num.evaluate(q0) / d

    def qinv_series(self, order: int):
        """First coefficients of the expansion in powers of q^-1.

        Requires the function to be regular at q = infinity, i.e.
        deg(num) <= deg(den).  Returns [c_0, ..., c_order] with
        f = sum c_k q^-k + O(q^-(order+1)).
        """
        dn, dd = self.num.degree(), self.den.degree()
        if not self.num.is_zero() and dn > dd:
            raise ValueError("function has a pole at q = infinity")
        # substitute u = 1/q: f = u^(dd-dn) * num~(u) / den~(u), den~(0) != 0
        num_u = {dd - e: c for e, c in self.num.coeffs.items()}
        den_u = {dd - e: c for e, c in self.den.coeffs.items()}
        d0 = den_u.get(0)
        out = []
        state = dict(num_u)
        for k in range(order + 1):
            ck = state.get(k, Fraction(0)) / d0
            out.append(ck)
            for j, dj in den_u.items():
                if j == 0:
                    continue
                e = k + j
                s = state.get(e, Fraction(0)) - ck * dj
                if s:
                    state[e] = s
                else:
                    state.pop(e, None)
        return out

    def taylor_coefficients(self, order: int):
        """Coefficients of the expansion around 0 up to the given order.

        Requires regularity at 0 (no pole): the denominator may not vanish
        there and the numerator may not carry negative exponents.
        """
        if self.num.low_degree() < 0 or self.den.low_degree() > 0:
            raise PoleAtEvaluationPoint("pole at 0 blocks the expansion")
        d0 = self.den.coeffs.get(0)
        state = dict(self.num.coeffs)
        out = []
        for k in range(order + 1):
            ck = state.get(k, Fraction(0)) / d0
            out.append(ck)
            for j, dj in self.den.coeffs.items():
                if j == 0:
                    continue
                e = k + j
                s = state.get(e, Fraction(0)) - ck * dj
                if s:
                    state[e] = s
                else:
                    state.pop(e, None)
        return out

    # -- printing -----------------------------------------------------

    def to_string(self) -> str:
        """Canonical 'num / den' string with decreasing exponents."""
        if self.is_polynomial():
            return self.num.to_string()
        return f"({self.num.to_string()}) / ({self.den.to_string()})"

    def __repr__(self):
        return f"RationalFunction({self.to_string()!r})"


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, QPolynomial)):
        return RationalFunction(x if isinstance(x, QPolynomial) else QPolynomial.const(x))
    raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")


def _reduce(num: QPolynomial, den: QPolynomial):
    """Canonicalize a fraction of Laurent polynomials (see module docstring)."""
    if num.is_zero():
        return QPolynomial.zero(), QPolynomial.one()
    # clear Laurent exponents: a global power of q moves to one side
    k = num.low_degree() - den.low_degree()
    num = num.shift(-num.low_degree())
    den = den.shift(-den.low_degree())
    g = poly_gcd(num, den)
    if g.degree() > 0:
        num, _ = num.divmod_ordinary(g)
        den, _ = den.divmod_ordinary(g)
    if k > 0:
        num = num.shift(k)
    elif k < 0:
        den = den.shift(-k)
    # unique positive scalar making both integral and jointly primitive
    lcm = 1
    for p in (num, den):
        for c in p.coeffs.values():
            lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
    g = 0
    for p in (num, den):
        for c in p.coeffs.values():
            g = int_gcd(g, abs((c * lcm).numerator))
    scale = Fraction(lcm, g)
    if den.leading_coeff() < 0:
        scale = -scale
    num_scaled = QPolynomial()
    num_scaled.coeffs = {e: c * scale for e, c in num.coeffs.items()}
    den_scaled = QPolynomial()
    den_scaled.coeffs = {e: c * scale for e, c in den.coeffs.items()}
    return num_scaled, den_scaled
