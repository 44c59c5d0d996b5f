"""Elimination toolkit: univariate views, Sylvester resultants, rational
functions, Sturm sign certificates and exact quadratic roots."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Mapping, Sequence

import gmpy2

from .exact_arith import Q, Rational, is_rational, rat_str
from .polyring import ONE, ZERO, MultiPoly, PolyError, exact_divide, substitute


class EliminationError(ValueError):
    pass


# -- univariate views and resultants -------------------------------------

@dataclass
class UniPoly:
    """Polynomial in ``var`` whose coefficients are MultiPoly in the others."""

    var: str
    coeffs: List[MultiPoly]

    def __post_init__(self):
        while self.coeffs and self.coeffs[-1].is_zero():
            self.coeffs.pop()

    @classmethod
    def from_poly(cls, p: MultiPoly, var: str) -> UniPoly:
        parts = p.coeffs_in(var)
        deg = max(parts, default=-1)
        return cls(var, [parts.get(d, ZERO) for d in range(deg + 1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> MultiPoly:
        return self.coeffs[-1]

    def to_poly(self) -> MultiPoly:
        x = MultiPoly.var(self.var)
        total = ZERO
        for c in reversed(self.coeffs):
            total = total * x + c
        return total


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> list:
    """Rows: deg(q) shifted copies of p, then deg(p) shifted copies of q."""
    f, g = UniPoly.from_poly(p, var), UniPoly.from_poly(q, var)
    m, n = f.degree, g.degree
    if m < 1 or n < 1:
        raise EliminationError(f"both polynomials need positive degree in {var} (got {m}, {n})")
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([ZERO] * i + fc + [ZERO] * (size - m - 1 - i))
    for i in range(m):
        rows.append([ZERO] * i + gc + [ZERO] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free Gaussian elimination; every division is exact."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = pivot * a[i][j] - aik * a[k][j]
                if prev is ONE:
                    a[i][j] = num
                else:
                    quo = exact_divide(num, prev)
                    if quo is None:
                        raise PolyError("Bareiss step was not exact")
                    a[i][j] = quo
            a[i][k] = ZERO
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    return bareiss_determinant(sylvester_matrix(p, q, var))


# -- rational functions -------------------------------------------------

class RatFunc:
    """num/den with integer content removed and a positive leading denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num, den = MultiPoly.coerce(num), MultiPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        c = den.content()
        if den.leading_coefficient() < 0:
            c = -c
        g = num.content()
        # pull the rational content of num out against that of den
        self.num = num.scale(1 / g)
        self.den = den.scale(1 / c)
        factor = g / c
        self.num = self.num.scale(factor)
        # cancel identical polynomial parts (cheap common case)
        if self.num == self.den:
            self.num, self.den = ONE, ONE
        elif self.den.is_constant():
            self.num, self.den = self.num.scale(1 / self.den.constant_term()), ONE

    @staticmethod
    def coerce(x) -> RatFunc:
        return x if isinstance(x, RatFunc) else RatFunc(x)

    def __add__(self, other):
        o = RatFunc.coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        o = RatFunc.coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by a zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den**-n, self.num**-n)
        return RatFunc(self.num**n, self.den**n)

    def __eq__(self, other) -> bool:
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return ratfunc_equal(self, o)

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def substitute(self, bindings: Mapping[str, object]) -> RatFunc:
        return rat_substitute(self, bindings)

    def evaluate(self, values):
        return self.num.evaluate(values) / self.den.evaluate(values)

    def __repr__(self) -> str:
        return f"RatFunc(({self.num}) / ({self.den}))"

    __str__ = __repr__


def ratfunc_equal(a: RatFunc, b: RatFunc) -> bool:
    """a == b iff a.num*b.den == b.num*a.den."""
    a, b = RatFunc.coerce(a), RatFunc.coerce(b)
    return a.num * b.den == b.num * a.den


def cross_difference(a, b) -> MultiPoly:
    """a.num*b.den - b.num*a.den: zero iff the two functions are equal."""
    a, b = RatFunc.coerce(a), RatFunc.coerce(b)
    return a.num * b.den - b.num * a.den


def _poly_at_ratfunc(p: MultiPoly, var: str, value: RatFunc) -> RatFunc:
    parts = p.coeffs_in(var)
    D = max(parts)
    if D == 0:
        return RatFunc(p)
    npow = [ONE]
    dpow = [ONE]
    for _ in range(D):
        npow.append(npow[-1] * value.num)
        dpow.append(dpow[-1] * value.den)
    total = ZERO
    for k, c in parts.items():
        total = total + c * npow[k] * dpow[D - k]
    return RatFunc(total, dpow[D])


def rat_substitute(f, bindings: Mapping[str, object]) -> RatFunc:
    """Substitute polynomials or rational functions for variables, in order.

    Bindings are applied one variable at a time; a later binding never sees
    an earlier target, so targets must not mention bound variables.
    """
    f = RatFunc.coerce(f)
    poly_b = {}
    rat_b = {}
    for name, v in bindings.items():
        if isinstance(v, RatFunc) and not v.den.is_constant():
            rat_b[name] = v
        elif isinstance(v, RatFunc):
            poly_b[name] = v.num.scale(1 / v.den.constant_term())
        else:
            poly_b[name] = MultiPoly.coerce(v)
    bound = set(bindings)
    for name, v in rat_b.items():
        if bound.intersection(v.num.variables()) or bound.intersection(v.den.variables()):
            raise PolyError(f"recursive binding for {name}")
    num, den = f.num, f.den
    if poly_b:
        num, den = substitute(num, poly_b), substitute(den, poly_b)
    result = RatFunc(num, den)
    for name, v in rat_b.items():
        result = _poly_at_ratfunc(result.num, name, v) / _poly_at_ratfunc(result.den, name, v)
    return result


def solve_linear(p: MultiPoly, var: str) -> RatFunc:
    """The root -c0/c1 of p = c1*var + c0."""
    parts = p.coeffs_in(var)
    if max(parts, default=0) != 1:
        raise EliminationError(f"polynomial is not linear in {var}")
    return RatFunc(-parts.get(0, ZERO), parts[1])


# -- Sturm certificates ---------------------------------------------------

def univariate_coeffs(p, var: str | None = None) -> list:
    """Rational coefficient list (index = degree) of a univariate polynomial."""
    if isinstance(p, (list, tuple)):
        return [Q(c) for c in p]
    p = MultiPoly.coerce(p)
    vs = p.variables()
    if len(vs) > 1:
        raise EliminationError(f"not univariate: {vs}")
    if not vs:
        return [p.constant_term()]
    parts = p.coeffs_in(var or vs[0])
    return [parts[d].constant_term() if d in parts else Q(0) for d in range(max(parts) + 1)]


def _trim(c: list) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _eval(c: list, x) -> Rational:
    acc = Q(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _rem(a: list, b: list) -> list:
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        f = a[-1] / b[-1]
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] -= f * bc
        a = _trim(a)
    return a


def sturm_sequence(coeffs: list) -> list:
    p0 = _trim(coeffs)
    p1 = _trim([i * a for i, a in enumerate(p0)][1:])
    seq = [p0]
    if p1:
        seq.append(p1)
    while len(seq) > 1:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-a for a in r])
    return seq


def _sign_changes(values: Iterable) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at(seq: list, x) -> list:
    if x == math.inf or x == -math.inf:
        out = []
        for c in seq:
            lead = c[-1]
            deg = len(c) - 1
            s = 1 if lead > 0 else -1
            if x < 0 and deg % 2:
                s = -s
            out.append(s)
        return out
    return [_eval(c, x) for c in seq]


def count_real_roots(p, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    seq = sturm_sequence(univariate_coeffs(p))
    lo_q = lo if lo in (math.inf, -math.inf) else Q(lo)
    hi_q = hi if hi in (math.inf, -math.inf) else Q(hi)
    return _sign_changes(_signs_at(seq, lo_q)) - _sign_changes(_signs_at(seq, hi_q))


def sturm_sign_certificate(p, lo=-math.inf, hi=math.inf) -> str:
    """'positive' / 'negative' on the closed interval [lo, hi], else 'has_root'.

    Infinite endpoints are open.  The sign comes from one exact sample
    evaluation once the Sturm count shows no root in the interval.
    """
    c = _trim(univariate_coeffs(p))
    if not c:
        return "has_root"
    if len(c) == 1:
        return "positive" if c[0] > 0 else "negative"
    if lo not in (math.inf, -math.inf) and _eval(c, Q(lo)) == 0:
        return "has_root"
    if count_real_roots(c, lo, hi):
        return "has_root"
    if lo == -math.inf and hi == math.inf:
        sample = Q(0)
    elif lo == -math.inf:
        sample = Q(hi) - 1
    elif hi == math.inf:
        sample = Q(lo) + 1
    else:
        sample = (Q(lo) + Q(hi)) / 2
    return "positive" if _eval(c, sample) > 0 else "negative"


# -- quadratic extensions ---------------------------------------------------

def squarefree_split(n: int) -> tuple:
    """n = k^2 * d with d square-free; returns (k, d) for n > 0."""
    n = int(n)
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    k, d = 1, 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    return k, d * n


class QuadExt:
    """(p + q*sqrt(d)) / r with integers p, q, r > 0 coprime and d square-free."""

    __slots__ = ("p", "q", "r", "d")

    def __init__(self, p, q, r, d: int):
        p, q, r = Q(p), Q(q), Q(r)
        if r == 0:
            raise ZeroDivisionError("QuadExt with r = 0")
        k, d = squarefree_split(d)
        q = q * k
        if d == 1:
            p, q = p + q, Q(0)
        # clear denominators into r
        lcm = gmpy2.lcm(gmpy2.lcm(p.denominator, q.denominator), r.denominator)
        P, Qq, R = p * lcm, q * lcm, r * lcm
        g = gmpy2.gcd(gmpy2.gcd(int(P), int(Qq)), int(R))
        if R < 0:
            g = -g
        self.p, self.q, self.r = int(P / g), int(Qq / g), int(R / g)
        self.d = int(d)

    @classmethod
    def rational(cls, x, d: int = 1) -> QuadExt:
        return cls(x, 0, 1, d)

    def _same(self, other) -> QuadExt:
        if is_rational(other):
            return QuadExt.rational(other, self.d)
        if self.q and other.q and other.d != self.d:
            raise EliminationError("QuadExt operands live in different fields")
        return other

    def _field(self, other) -> int:
        return self.d if self.q else other.d

    def __add__(self, other):
        o = self._same(other)
        d = self._field(o)
        return QuadExt(Q(self.p, self.r) + Q(o.p, o.r), Q(self.q, self.r) + Q(o.q, o.r), 1, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.r, self.d)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._same(other)
        d = self._field(o)
        p = self.p * o.p + self.q * o.q * d
        q = self.p * o.q + self.q * o.p
        return QuadExt(p, q, self.r * o.r, d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = QuadExt.rational(1, self.d)
        for _ in range(n):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def sign(self) -> int:
        """Exact sign of the real number (p + q*sqrt(d))/r."""
        a, b = self.p, self.q
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with b^2 d
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0
        return (1 if a > 0 else -1) if lhs > rhs else (1 if b > 0 else -1)

    def __eq__(self, other) -> bool:
        if is_rational(other):
            other = QuadExt.rational(other, self.d)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(self.d)) / self.r

    def rational_part(self) -> Rational:
        return Q(self.p, self.r)

    def surd_part(self) -> Rational:
        """Coefficient of sqrt(d)."""
        return Q(self.q, self.r)

    def __repr__(self) -> str:
        if not self.q:
            return f"QuadExt({rat_str(Q(self.p, self.r))})"
        return f"QuadExt({Q(self.p, self.r)} + ({Q(self.q, self.r)})*sqrt({self.d}))"

    __str__ = __repr__


def quad_roots(a, b, c) -> list:
    """Both roots of a*t^2 + b*t + c (with multiplicity), '+' root first."""
    a, b, c = Q(a), Q(b), Q(c)
    if a == 0:
        raise EliminationError("leading coefficient must be nonzero")
    disc = b * b - 4 * a * c
    if disc < 0:
        raise EliminationError("complex roots are not representable")
    num, den = int(disc.numerator), int(disc.denominator)
    # sqrt(num/den) = sqrt(num*den)/den
    rad = num * den
    if rad == 0:
        root = QuadExt(-b, 0, 2 * a, 1)
        return [root, root]
    k, d = squarefree_split(rad)
    surd = Q(k, den)
    return [QuadExt(-b, surd, 2 * a, d), QuadExt(-b, -surd, 2 * a, d)]


def solve_linear_system(rows: Sequence[Sequence], rhs: Sequence) -> list:
    """Unique solution of a square rational system, by Gauss-Jordan."""
    n = len(rows)
    m = [[Q(x) for x in row] + [Q(r)] for row, r in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise EliminationError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]
