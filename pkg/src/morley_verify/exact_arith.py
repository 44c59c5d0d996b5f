"""Exact coefficient domains: rationals and the cyclotomic field Q(zeta_12).

Rationals are gmpy2 ``mpq`` values, which are always stored in lowest terms
with a positive denominator.  ``CycloNum`` holds an element of Q(zeta) with
zeta = exp(i*pi/6), reduced modulo the cyclotomic polynomial
zeta^4 - zeta^2 + 1.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, Union

import gmpy2

Rational = type(gmpy2.mpq())
RationalLike = Union[int, Fraction, "Rational", str]


def Q(value: RationalLike = 0, den: int | None = None) -> Rational:
    """Build a normalized rational from an int, Fraction, mpq or 'p/q' string."""
    if den is not None:
        return gmpy2.mpq(value, den)
    if isinstance(value, Fraction):
        return gmpy2.mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return gmpy2.mpq(value)


def is_rational(x: object) -> bool:
    return isinstance(x, (int, Rational, Fraction)) and not isinstance(x, bool)


def rat_str(q: RationalLike) -> str:
    """Render as 'num/den' (denominator always shown)."""
    q = Q(q)
    return f"{q.numerator}/{q.denominator}"


def rat_arith(a: RationalLike, b: RationalLike, op: str) -> Rational:
    """Exact ``a op b`` for op in {add, sub, mul, div}.

    Raises ZeroDivisionError for division by zero.
    """
    a, b = Q(a), Q(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError(f"rational division {rat_str(a)} / 0")
        return a / b
    raise ValueError(f"unknown rational op {op!r}")


class CycloNum:
    """a0 + a1*z + a2*z^2 + a3*z^3 with z a primitive 12th root of unity."""

    __slots__ = ("coeffs",)
    DEGREE = 4

    def __init__(self, coeffs: Iterable[RationalLike] = (0, 0, 0, 0)):
        cs = [Q(c) for c in coeffs]
        self.coeffs: tuple = tuple(_reduce(cs))

    @classmethod
    def zeta_power(cls, k: int) -> CycloNum:
        """zeta**k for any integer k (zeta**12 == 1)."""
        k %= 12
        cs = [Q(0)] * (k + 1)
        cs[k] = Q(1)
        return cls(cs)

    @classmethod
    def from_rational(cls, q: RationalLike) -> CycloNum:
        return cls((q, 0, 0, 0))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if is_rational(other):
            other = CycloNum.from_rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> CycloNum:
        if isinstance(other, CycloNum):
            return other
        if is_rational(other):
            return CycloNum.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if is_rational(other):
            q = Q(other)
            return CycloNum(a * q for a in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Q(0)] * 7
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloNum(prod)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CycloNum:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = CycloNum.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> CycloNum:
        """Complex conjugation, zeta -> zeta**11."""
        total = CycloNum()
        for k, a in enumerate(self.coeffs):
            if a:
                total = total + CycloNum.zeta_power(-k) * a
        return total

    def to_complex(self) -> complex:
        z = cmath.exp(1j * math.pi / 6)
        return sum(float(a) * z**k for k, a in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"CycloNum({', '.join(rat_str(a) for a in self.coeffs)})"

    def __str__(self) -> str:
        parts = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            parts.append(f"({a})*{mono}" if mono else f"({a})")
        return " + ".join(parts) or "0"


def _reduce(cs: list) -> list:
    # z^n = z^(n-2) - z^(n-4), from z^4 = z^2 - 1
    cs = list(cs)
    for n in range(len(cs) - 1, 3, -1):
        a = cs[n]
        if a:
            cs[n - 2] += a
            cs[n - 4] -= a
    cs = cs[:4]
    while len(cs) < 4:
        cs.append(Q(0))
    return cs


I_UNIT = CycloNum.zeta_power(3)


def cyclo_arith(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown cyclotomic op {op!r}")


def cyclo_from_trig(kind: str, k: int) -> CycloNum:
    """sin(k*pi/6) or cos(k*pi/6) as an exact element of Q(zeta_12)."""
    zk = CycloNum.zeta_power(k)
    zmk = CycloNum.zeta_power(-k)
    half = Q(1, 2)
    if kind == "cos":
        return (zk + zmk) * half
    if kind == "sin":
        # (Z - Z^-1) / (2i) = -i (Z - Z^-1) / 2
        return -(I_UNIT * (zk - zmk)) * half
    raise ValueError(f"kind must be 'sin' or 'cos', got {kind!r}")
