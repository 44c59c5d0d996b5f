"""Truncated bivariate Taylor series in (alpha, beta) with polynomial coefficients."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from .exact_arith import Q
from .polyring import ONE, ZERO, MultiPoly, phase_cos_sin, pythagorean_reduce, substitute

DEFAULT_DEGREE = 8


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class PhasedLinearArg:
    """u*alpha + v*beta + k0*pi + sum_i m_i*t_i*pi.

    u and v may be polynomials of degree <= 1 in the t_i (e.g. t4*alpha).
    """

    u: MultiPoly = ZERO
    v: MultiPoly = ZERO
    k0: int = 0
    m: Tuple[int, ...] = (0, 0, 0, 0, 0, 0)

    def __post_init__(self):
        object.__setattr__(self, "u", MultiPoly.coerce(self.u))
        object.__setattr__(self, "v", MultiPoly.coerce(self.v))
        m = tuple(self.m)
        if len(m) != 6:
            raise SeriesError("phase multiplicities need 6 entries")
        object.__setattr__(self, "m", m)
        for part in (self.u, self.v):
            if part.degree() > 1:
                raise SeriesError("linear-part coefficients must have degree <= 1")

    def __neg__(self) -> PhasedLinearArg:
        return PhasedLinearArg(-self.u, -self.v, -self.k0, tuple(-x for x in self.m))

    def __add__(self, other: PhasedLinearArg) -> PhasedLinearArg:
        return PhasedLinearArg(
            self.u + other.u,
            self.v + other.v,
            self.k0 + other.k0,
            tuple(a + b for a, b in zip(self.m, other.m)),
        )

    def scaled(self, k: int) -> PhasedLinearArg:
        return PhasedLinearArg(self.u * k, self.v * k, self.k0 * k, tuple(k * x for x in self.m))

    def phase(self) -> tuple:
        """(cos, sin) of the constant phase as s/c polynomials."""
        return phase_cos_sin(self.k0, {i + 1: mi for i, mi in enumerate(self.m)})

    def evaluate(self, alpha: float, beta: float, t: Mapping[str, float]) -> float:
        pi = math.pi
        val = float(self.u.evaluate(t)) * alpha + float(self.v.evaluate(t)) * beta + self.k0 * pi
        return val + sum(mi * t[f"t{i + 1}"] * pi for i, mi in enumerate(self.m))


@dataclass
class TruncSeries:
    """sum of coeffs[(i, j)] * alpha^i * beta^j over i + j <= N."""

    N: int
    coeffs: Dict[tuple, MultiPoly] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {ij: c for ij, c in self.coeffs.items() if c and ij[0] + ij[1] <= self.N}

    @classmethod
    def const(cls, c, N: int) -> TruncSeries:
        return cls(N, {(0, 0): MultiPoly.coerce(c)})

    @classmethod
    def alpha(cls, N: int) -> TruncSeries:
        return cls(N, {(1, 0): ONE})

    @classmethod
    def beta(cls, N: int) -> TruncSeries:
        return cls(N, {(0, 1): ONE})

    def _check(self, other: TruncSeries):
        if not isinstance(other, TruncSeries):
            raise SeriesError(f"expected TruncSeries, got {type(other).__name__}")
        if other.N != self.N:
            raise SeriesError(f"truncation mismatch: {self.N} vs {other.N}")

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        out = dict(self.coeffs)
        for ij, c in other.coeffs.items():
            out[ij] = out.get(ij, ZERO) + c
        return TruncSeries(self.N, out)

    def __neg__(self) -> TruncSeries:
        return TruncSeries(self.N, {ij: -c for ij, c in self.coeffs.items()})

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def scale(self, k) -> TruncSeries:
        k = MultiPoly.coerce(k)
        return TruncSeries(self.N, {ij: c * k for ij, c in self.coeffs.items()})

    def __mul__(self, other) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._check(other)
        N = self.N
        out: Dict[tuple, MultiPoly] = {}
        b_items = sorted(other.coeffs.items(), key=lambda kv: kv[0][0] + kv[0][1])
        for (i1, j1), c1 in self.coeffs.items():
            room = N - i1 - j1
            for (i2, j2), c2 in b_items:
                if i2 + j2 > room:
                    break
                ij = (i1 + i2, j1 + j2)
                prod = c1 * c2
                prev = out.get(ij)
                out[ij] = prod if prev is None else prev + prod
        return TruncSeries(N, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TruncSeries:
        result = TruncSeries.const(1, self.N)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def valuation(self) -> int:
        """Lowest total degree present (N + 1 for the zero series)."""
        return min((i + j for i, j in self.coeffs), default=self.N + 1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def map(self, fn) -> TruncSeries:
        return TruncSeries(self.N, {ij: fn(c) for ij, c in self.coeffs.items()})

    def reduce(self) -> TruncSeries:
        return self.map(pythagorean_reduce)

    def substitute(self, bindings) -> TruncSeries:
        return self.map(lambda c: substitute(c, bindings))

    def evaluate(self, alpha: float, beta: float, values: Mapping[str, float]) -> float:
        total = 0.0
        for (i, j), c in self.coeffs.items():
            total += float(c.evaluate(values)) * alpha**i * beta**j
        return total


def series_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown series op {op!r}")


def coeff(s: TruncSeries, i: int, j: int) -> MultiPoly:
    if i < 0 or j < 0 or i + j > s.N:
        raise SeriesError(f"coefficient ({i}, {j}) outside truncation degree {s.N}")
    return s.coeffs.get((i, j), ZERO)


def homogeneous_part(s: TruncSeries, d: int) -> TruncSeries:
    if d > s.N:
        raise SeriesError(f"degree {d} exceeds truncation degree {s.N}")
    return TruncSeries(s.N, {ij: c for ij, c in s.coeffs.items() if ij[0] + ij[1] == d})


def _linear_powers(u: MultiPoly, v: MultiPoly, N: int) -> list:
    """[(u*alpha + v*beta)^n as dict (i, j) -> poly for n = 0..N]."""
    upow, vpow = [ONE], [ONE]
    for _ in range(N):
        upow.append(upow[-1] * u)
        vpow.append(vpow[-1] * v)
    out = []
    for n in range(N + 1):
        terms = {}
        for i in range(n + 1):
            c = upow[i] * vpow[n - i] * math.comb(n, i)
            if c:
                terms[(i, n - i)] = c
        out.append(terms)
    return out


def _sin_cos_linear(u: MultiPoly, v: MultiPoly, N: int) -> tuple:
    powers = _linear_powers(u, v, N)
    sin_terms: dict = {}
    cos_terms: dict = {}
    for n, terms in enumerate(powers):
        sign = -1 if (n // 2) % 2 else 1
        w = Q(sign, math.factorial(n))
        target = sin_terms if n % 2 else cos_terms
        for ij, c in terms.items():
            target[ij] = c.scale(w)
    return TruncSeries(N, sin_terms), TruncSeries(N, cos_terms)


def sin_of(arg: PhasedLinearArg, N: int = DEFAULT_DEGREE) -> TruncSeries:
    """Taylor series of sin(arg) about alpha = beta = 0."""
    pc, ps = arg.phase()
    sl, cl = _sin_cos_linear(arg.u, arg.v, N)
    return sl.scale(pc) + cl.scale(ps)


def cos_of(arg: PhasedLinearArg, N: int = DEFAULT_DEGREE) -> TruncSeries:
    """Taylor series of cos(arg) about alpha = beta = 0."""
    pc, ps = arg.phase()
    sl, cl = _sin_cos_linear(arg.u, arg.v, N)
    return cl.scale(pc) - sl.scale(ps)
