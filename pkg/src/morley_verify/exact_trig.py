"""Exact trigonometric identities on the pi/6 lattice.

A trigonometric monomial sin/cos(a*x + b*y + k*pi/6) becomes a Laurent
polynomial in z = e^{ix}, w = e^{iy} with coefficients in Q(zeta_12).
An expression is identically zero iff every Laurent coefficient is zero.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple

from .exact_arith import CycloNum, I_UNIT, Q

_HALF = Q(1, 2)


class LaurentPoly2:
    """Sum of coeff * z^a * w^b with CycloNum coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], CycloNum] | None = None):
        self.terms: Dict[Tuple[int, int], CycloNum] = {
            k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def const(cls, c) -> LaurentPoly2:
        c = c if isinstance(c, CycloNum) else CycloNum.from_rational(c)
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> LaurentPoly2:
        c = c if isinstance(c, CycloNum) else CycloNum.from_rational(c)
        return cls({(a, b): c})

    @staticmethod
    def coerce(x) -> LaurentPoly2:
        return x if isinstance(x, LaurentPoly2) else LaurentPoly2.const(x)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (self - LaurentPoly2.coerce(other)).is_zero()

    def __add__(self, other) -> LaurentPoly2:
        other = LaurentPoly2.coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly2:
        return LaurentPoly2({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> LaurentPoly2:
        return self + (-LaurentPoly2.coerce(other))

    def __rsub__(self, other) -> LaurentPoly2:
        return LaurentPoly2.coerce(other) - self

    def __mul__(self, other) -> LaurentPoly2:
        if not isinstance(other, LaurentPoly2):
            c = other if isinstance(other, CycloNum) else CycloNum.from_rational(other)
            return LaurentPoly2({k: v * c for k, v in self.terms.items()})
        out: Dict[Tuple[int, int], CycloNum] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                p = c1 * c2
                out[k] = out[k] + p if k in out else p
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly2:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result, base = LaurentPoly2.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x: float, y: float) -> complex:
        z, w = cmath.exp(1j * x), cmath.exp(1j * y)
        return sum(c.to_complex() * z ** a * w ** b for (a, b), c in self.terms.items())

    def witness(self):
        """Some nonzero coefficient, or None if the polynomial is zero."""
        if not self.terms:
            return None
        k = min(self.terms)
        return k, self.terms[k]

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentPoly2(0)"
        parts = [f"({c})*z^{a}*w^{b}" for (a, b), c in sorted(self.terms.items())]
        return "LaurentPoly2(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class TrigAtom:
    """kind(a*x + b*y + k*pi/6) with kind in {'sin', 'cos'}."""

    kind: str
    a: int = 0
    b: int = 0
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("sin", "cos"):
            raise ValueError(f"unknown kind {self.kind!r}")

    def value(self, x: float, y: float) -> float:
        theta = self.a * x + self.b * y + self.k * math.pi / 6
        return math.sin(theta) if self.kind == "sin" else math.cos(theta)


def compile_atom(atom: TrigAtom) -> LaurentPoly2:
    """sin t = (Z - 1/Z)/(2i), cos t = (Z + 1/Z)/2 with Z = zeta^k z^a w^b."""
    zk = CycloNum.zeta_power(atom.k)
    zk_inv = CycloNum.zeta_power(-atom.k)
    if atom.kind == "cos":
        return LaurentPoly2({(atom.a, atom.b): zk * _HALF}) + \
            LaurentPoly2({(-atom.a, -atom.b): zk_inv * _HALF})
    # 1/(2i) = -i/2
    f = I_UNIT * (-_HALF)
    return LaurentPoly2({(atom.a, atom.b): zk * f}) + LaurentPoly2({(-atom.a, -atom.b): -(zk_inv * f)})


# short alias
compile = compile_atom  # noqa: A001


def compile_product(coeff, factors: Iterable[tuple]) -> LaurentPoly2:
    """coeff * prod(atom^power)."""
    out = LaurentPoly2.const(coeff)
    for atom, power in factors:
        out = out * compile_atom(atom) ** power
    return out


def _s(a=0, b=0, k=0):
    return TrigAtom("sin", a, b, k)


def _c(a=0, b=0, k=0):
    return TrigAtom("cos", a, b, k)


# A at t1 = ... = t6 = 1/3 with alpha = 3x, beta = 3y; each summand is
# (coefficient, [(atom, power), ...]).
MORLEY_SUMMANDS = (
    (1, [(_s(1), 2), (_s(3, 3), 2), (_c(1, 0, 1), 2), (_c(0, 1, 1), 2)]),
    (1, [(_s(3), 2), (_c(1, 1, 1), 2), (_s(1, 1), 2), (_c(0, 1, 1), 2)]),
    (-2, [(_s(1), 1), (_s(3), 1), (_c(1, 1, 1), 1), (_c(0, 1), 1), (_s(1, 1), 1),
          (_s(3, 3), 1), (_c(1, 0, 1), 1), (_c(0, 1, 1), 2)]),
    (-1, [(_s(3), 2), (_s(0, 1), 2), (_s(1, 1), 2), (_c(0, 1, 1), 2)]),
    (-1, [(_s(0, 3), 2), (_s(1), 2), (_s(1, 1), 2), (_c(1, 0, 1), 2)]),
    (2, [(_s(3), 1), (_s(0, 1), 1), (_s(0, 3), 1), (_s(1), 1), (_s(1, 1, 1), 1),
         (_s(1, 1), 2), (_c(1, 0, 1), 1), (_c(0, 1, 1), 1)]),
)


# The same six summands read off A itself: with t_i = 1/3 every factor is a
# lattice atom, e.g. sin(-t3*beta - t4*pi + t4*alpha + t4*beta) = sin(x - pi/3).
_G = {
    1: _s(1), 2: _s(3, 3), 3: _s(1, 0, -2), 4: _s(0, 1, -2), 5: _s(3),
    6: _s(-1, -1, 2), 7: _s(1, 1), 8: _c(0, -1), 9: _s(0, 1), 10: _s(0, 3),
    11: _s(1), 12: _c(1, 1, -2),
}


def _g(*items):
    return [(_G[i], p) for i, p in items]


EXPRESSION_SUMMANDS_AT_THIRD = (
    (1, _g((1, 2), (2, 2), (3, 2), (4, 2))),
    (1, _g((5, 2), (6, 2), (7, 2), (4, 2))),
    (2, _g((1, 1), (5, 1), (6, 1), (8, 1), (7, 1), (2, 1), (3, 1), (4, 2))),
    (-1, _g((5, 2), (9, 2), (7, 2), (4, 2))),
    (-1, _g((10, 2), (11, 2), (7, 2), (3, 2))),
    (2, _g((5, 1), (9, 1), (10, 1), (11, 1), (12, 1), (7, 2), (3, 1), (4, 1))),
)


def expression_summands(flip: int | None = None) -> list:
    return [compile_product(-c if i == flip else c, f)
            for i, (c, f) in enumerate(EXPRESSION_SUMMANDS_AT_THIRD)]


def morley_summands(flip: int | None = None) -> list:
    """Compiled summands; ``flip`` negates one of them (fault injection)."""
    out = []
    for idx, (coeff, factors) in enumerate(MORLEY_SUMMANDS):
        c = -coeff if idx == flip else coeff
        out.append(compile_product(c, factors))
    return out


def evaluate_summands(x: float, y: float) -> float:
    total = 0.0
    for coeff, factors in MORLEY_SUMMANDS:
        term = float(coeff)
        for atom, power in factors:
            term *= atom.value(x, y) ** power
        total += term
    return total


@dataclass
class IdentityResult:
    holds: bool
    terms: int                      # Laurent terms in the sum
    witness: tuple | None           # ((a, b), coefficient) when nonzero

    def __bool__(self) -> bool:
        return self.holds


def check_identity(summands: Iterable[LaurentPoly2]) -> IdentityResult:
    total = LaurentPoly2()
    for s in summands:
        total = total + s
    return IdentityResult(total.is_zero(), len(total), total.witness())


def verify_morley_identity(flip: int | None = None) -> IdentityResult:
    """Exact check that A vanishes identically at the trisector parameters."""
    return check_identity(morley_summands(flip))


def summand_mismatches() -> list:
    """Indices where the lattice display and A itself compile differently."""
    return [i for i, (a, b) in enumerate(zip(expression_summands(), morley_summands())) if a != b]
