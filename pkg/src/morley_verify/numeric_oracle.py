"""Floating-point geometry of the cevian configuration and rigorous sin^2 bounds.

The base triangle is E=(0,0), F=(1,0) with angles alpha at E and beta at F.
G is cut out by the cevians from E and F, I by those from F and H, J by
those from H and E.  The six angle fractions are t1..t6 in the order
(E->G, F->G, F->I, H->I, H->J, E->J).
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import gmpy2

from .cevian import AdmissibilityError, CevianParams
from .exact_arith import Q, Rational

ANGLE_GUARD = 1e-6


class DegenerateTriangleError(ValueError):
    pass


def _params(params) -> CevianParams:
    if isinstance(params, CevianParams):
        return params
    return CevianParams(tuple(params))


def _check_angles(alpha: float, beta: float) -> None:
    if alpha < ANGLE_GUARD or beta < ANGLE_GUARD or alpha + beta > math.pi - ANGLE_GUARD:
        raise DegenerateTriangleError(
            f"angles alpha={alpha!r}, beta={beta!r} too close to a degenerate triangle")


def _prepare(alpha: float, beta: float, params) -> tuple:
    _check_angles(alpha, beta)
    p = _params(params).check()
    return p.as_floats()


# -- closed forms -----------------------------------------------------------

def cevian_lengths(alpha: float, beta: float, params) -> dict:
    """Law-of-sines lengths of every cevian segment (EF = 1)."""
    t1, t2, t3, t4, t5, t6 = _prepare(alpha, beta, params)
    gamma = math.pi - alpha - beta
    s = math.sin
    FH = s(alpha) / s(alpha + beta)
    HE = s(beta) / s(alpha + beta)
    return {
        "FH": FH,
        "HE": HE,
        "EG": s(t2 * beta) / s(t1 * alpha + t2 * beta),
        "GF": s(t1 * alpha) / s(t1 * alpha + t2 * beta),
        "FI": FH * s(t4 * gamma) / s(t3 * beta + t4 * gamma),
        "IH": FH * s(t3 * beta) / s(t3 * beta + t4 * gamma),
        "HJ": HE * s(t6 * alpha) / s(t5 * gamma + t6 * alpha),
        "JE": HE * s(t5 * gamma) / s(t5 * gamma + t6 * alpha),
    }


def closed_form_sides_sq(alpha: float, beta: float, params) -> tuple:
    """(GI^2, IJ^2, JG^2) from the law of cosines at F, H and E."""
    t1, t2, t3, t4, t5, t6 = _prepare(alpha, beta, params)
    gamma = math.pi - alpha - beta
    L = cevian_lengths(alpha, beta, params)
    GI2 = L["GF"] ** 2 + L["FI"] ** 2 - 2 * L["GF"] * L["FI"] * math.cos((1 - t2 - t3) * beta)
    IJ2 = L["IH"] ** 2 + L["HJ"] ** 2 - 2 * L["IH"] * L["HJ"] * math.cos((1 - t4 - t5) * gamma)
    JG2 = L["JE"] ** 2 + L["EG"] ** 2 - 2 * L["JE"] * L["EG"] * math.cos((1 - t6 - t1) * alpha)
    return GI2, IJ2, JG2


def denominator_D(alpha: float, beta: float, params) -> float:
    """Product of the squared sine denominators cleared in A."""
    t1, t2, t3, t4, t5, t6 = _prepare(alpha, beta, params)
    gamma = math.pi - alpha - beta
    s = math.sin
    return (s(t1 * alpha + t2 * beta) * s(alpha + beta)
            * s(t3 * beta + t4 * gamma) * s(t5 * gamma + t6 * alpha)) ** 2


def eval_A_direct(alpha: float, beta: float, params) -> float:
    """Direct trigonometric evaluation of the six-term expression A."""
    t1, t2, t3, t4, t5, t6 = _prepare(alpha, beta, params)
    s, c, pi = math.sin, math.cos, math.pi
    a, b = alpha, beta
    p = s(-t3 * b - t4 * pi + t4 * a + t4 * b)        # -sin(t3 b + t4 g)
    q = s(t5 * (a + b - pi) - t6 * a)                  # -sin(t5 g + t6 a)
    u = s(t1 * a + t2 * b)
    return (s(t1 * a) ** 2 * s(a + b) ** 2 * p ** 2 * q ** 2
            + s(a) ** 2 * s(t4 * (pi - a - b)) ** 2 * u ** 2 * q ** 2
            + 2 * s(t1 * a) * s(a) * s(t4 * (pi - a - b)) * c((-1 + t2 + t3) * b)
            * u * s(a + b) * p * q ** 2
            - s(a) ** 2 * s(t3 * b) ** 2 * u ** 2 * q ** 2
            - s(b) ** 2 * s(t6 * a) ** 2 * u ** 2 * p ** 2
            + 2 * s(a) * s(t3 * b) * s(b) * s(t6 * a) * c((-1 + t4 + t5) * (pi - a - b))
            * u ** 2 * p * q)


# -- coordinates ------------------------------------------------------------

@dataclass
class TriangleScene:
    E: tuple
    F: tuple
    H: tuple
    G: tuple
    I: tuple
    J: tuple
    alpha: float
    beta: float
    params: CevianParams


def _polar(origin: tuple, r: float, theta: float) -> tuple:
    return (origin[0] + r * math.cos(theta), origin[1] + r * math.sin(theta))


def construct_scene(alpha: float, beta: float, params) -> TriangleScene:
    """Place G, I, J using the law-of-sines lengths along each cevian."""
    p = _params(params)
    t1, t2, t3, t4, t5, t6 = _prepare(alpha, beta, p)
    L = cevian_lengths(alpha, beta, p)
    E, F = (0.0, 0.0), (1.0, 0.0)
    H = _polar(E, L["HE"], alpha)
    G = _polar(E, L["EG"], t1 * alpha)
    I = _polar(F, L["FI"], math.pi - beta + t3 * beta)
    J = _polar(E, L["JE"], (1 - t6) * alpha)
    return TriangleScene(E, F, H, G, I, J, alpha, beta, p)


def intersect_rays(p: tuple, theta: float, q: tuple, phi: float) -> tuple:
    """Intersection of the lines through p and q with directions theta, phi."""
    dx, dy = math.cos(theta), math.sin(theta)
    ex, ey = math.cos(phi), math.sin(phi)
    det = dx * (-ey) - dy * (-ex)
    if abs(det) < 1e-15:
        raise DegenerateTriangleError("parallel rays")
    rx, ry = q[0] - p[0], q[1] - p[1]
    lam = (rx * (-ey) - ry * (-ex)) / det
    return (p[0] + lam * dx, p[1] + lam * dy)


def scene_by_intersection(alpha: float, beta: float, params) -> TriangleScene:
    """Same scene from generic ray intersections; the independent path."""
    p = _params(params)
    t1, t2, t3, t4, t5, t6 = _prepare(alpha, beta, p)
    gamma = math.pi - alpha - beta
    E, F = (0.0, 0.0), (1.0, 0.0)
    H = intersect_rays(E, alpha, F, math.pi - beta)
    # direction from H towards E and towards F
    to_E = math.atan2(E[1] - H[1], E[0] - H[0])
    to_F = math.atan2(F[1] - H[1], F[0] - H[0])
    G = intersect_rays(E, t1 * alpha, F, math.pi - t2 * beta)
    I = intersect_rays(F, math.pi - beta + t3 * beta, H, to_F - t4 * gamma)
    J = intersect_rays(H, to_E + t5 * gamma, E, (1 - t6) * alpha)
    return TriangleScene(E, F, H, G, I, J, alpha, beta, p)


def _dist(a: tuple, b: tuple) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def side_lengths(scene: TriangleScene) -> tuple:
    return _dist(scene.G, scene.I), _dist(scene.I, scene.J), _dist(scene.J, scene.G)


def scene_lengths(scene: TriangleScene) -> dict:
    """Coordinate distances for every entry of :func:`cevian_lengths`."""
    d = _dist
    return {
        "FH": d(scene.F, scene.H), "HE": d(scene.H, scene.E),
        "EG": d(scene.E, scene.G), "GF": d(scene.G, scene.F),
        "FI": d(scene.F, scene.I), "IH": d(scene.I, scene.H),
        "HJ": d(scene.H, scene.J), "JE": d(scene.J, scene.E),
    }


def defect(sides: Sequence[float]) -> float:
    """Largest pairwise difference of the three sides."""
    a, b, c = sides
    return max(abs(a - b), abs(b - c), abs(c - a))


# -- scan -------------------------------------------------------------------

@dataclass
class ScanReport:
    grid: int
    params: CevianParams
    rows: list = field(default_factory=list)     # (alpha, beta, GI, IJ, JG, defect)

    @property
    def max_defect(self) -> float:
        return max((r[5] for r in self.rows), default=0.0)

    @property
    def worst(self) -> tuple | None:
        return max(self.rows, key=lambda r: r[5]) if self.rows else None

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["alpha", "beta", "GI", "IJ", "JG", "defect"])
            for r in self.rows:
                w.writerow([repr(x) for x in r])


def scan_angles(grid: int) -> Iterable[tuple]:
    """grid x grid interior points of the open region alpha, beta > 0, alpha + beta < pi."""
    for i in range(grid):
        u = (i + 0.5) / grid
        for j in range(grid):
            v = (j + 0.5) / grid
            yield math.pi * u, math.pi * (1 - u) * v


def equilateral_scan(grid: int, params) -> ScanReport:
    if grid < 1:
        raise ValueError("grid resolution must be positive")
    p = _params(params).check()
    rep = ScanReport(grid, p)
    for alpha, beta in scan_angles(grid):
        sides = side_lengths(construct_scene(alpha, beta, p))
        rep.rows.append((alpha, beta, *sides, defect(sides)))
    return rep


# -- rigorous sin^2 ---------------------------------------------------------

@dataclass(frozen=True)
class PrecisionInterval:
    lo: Rational
    hi: Rational

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = Q(x)
        return self.lo <= x <= self.hi

    def excludes(self, x) -> bool:
        return not self.contains(x)

    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)


def _arctan_inv(k: int, eps: Rational) -> tuple:
    """Enclosure of arctan(1/k) by the alternating series."""
    x = Q(1, k)
    x2 = x * x
    s, term, n, sign = Q(0), x, 0, 1
    while True:
        t = term / (2 * n + 1)
        if t < eps:
            return s - t, s + t
        s += sign * t
        sign = -sign
        term *= x2
        n += 1


def pi_interval(bits: int) -> tuple:
    """[lo, hi] containing pi with width below 2^-bits (Machin's formula)."""
    eps = Q(1, 1 << (bits + 6))
    a_lo, a_hi = _arctan_inv(5, eps)
    b_lo, b_hi = _arctan_inv(239, eps)
    return 16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo


def _sin_taylor(x: Rational, eps: Rational) -> tuple:
    """(value, error bound) for sin(x), 0 <= x <= 2."""
    s, term, k = Q(0), x, 1
    x2 = x * x
    sign = 1
    while term >= eps:
        s += sign * term
        sign = -sign
        term = term * x2 / ((k + 1) * (k + 2))
        k += 2
    return s, term


def _floor_dyadic(x: Rational, bits: int) -> Rational:
    return Q(gmpy2.f_div(x.numerator << bits, x.denominator), 1 << bits)


def _ceil_dyadic(x: Rational, bits: int) -> Rational:
    return Q(gmpy2.c_div(x.numerator << bits, x.denominator), 1 << bits)


def certified_sin_sq(p: int, q: int, precision: int = 128) -> PrecisionInterval:
    """Interval of width <= 2^-precision guaranteed to contain sin^2(p*pi/q)."""
    if q == 0:
        raise ZeroDivisionError("q must be nonzero")
    r = Q(p, q)
    r -= gmpy2.f_div(r.numerator, r.denominator)   # period pi
    if r > Q(1, 2):
        r = 1 - r                                   # sin(pi - x) = sin(x)
    if r == 0:
        return PrecisionInterval(Q(0), Q(0))
    if r == Q(1, 2):
        return PrecisionInterval(Q(1), Q(1))
    guard = precision + 8
    while True:
        pl, ph = pi_interval(guard)
        xl, xh = r * pl, r * ph
        mid, half = (xl + xh) / 2, (xh - xl) / 2
        s, err = _sin_taylor(mid, Q(1, 1 << guard))
        # |sin x - sin mid| <= |x - mid|
        lo = max(Q(0), s - err - half)
        hi = min(Q(1), s + err + half)
        lo, hi = _floor_dyadic(lo * lo, guard + 2), _ceil_dyadic(hi * hi, guard + 2)
        if hi - lo <= Q(1, 1 << precision):
            return PrecisionInterval(lo, hi)
        guard += 16


__all__ = [
    "ANGLE_GUARD", "AdmissibilityError", "DegenerateTriangleError", "PrecisionInterval",
    "ScanReport", "TriangleScene", "certified_sin_sq", "closed_form_sides_sq",
    "construct_scene", "defect", "denominator_D", "equilateral_scan", "eval_A_direct",
    "intersect_rays", "cevian_lengths", "pi_interval", "scan_angles", "scene_by_intersection",
    "scene_lengths", "side_lengths",
]
