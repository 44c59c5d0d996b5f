from __future__ import annotations

import math
import random

import mpmath
import pytest
from hypothesis import given, strategies as st

from morley_verify.cevian import AdmissibilityError, CevianParams
from morley_verify.exact_arith import Q
from morley_verify.numeric_oracle import (
    DegenerateTriangleError, certified_sin_sq, closed_form_sides_sq, construct_scene, defect,
    denominator_D, equilateral_scan, eval_A_direct, cevian_lengths, scan_angles,
    scene_by_intersection, scene_lengths, side_lengths,
)

THIRD = [1 / 3] * 6


def random_case(rng):
    t = [rng.uniform(0.02, 0.48) for _ in range(6)]
    while True:
        a, b = rng.uniform(0.01, 3.1), rng.uniform(0.01, 3.1)
        if a + b < math.pi - 0.01:
            return a, b, t


def test_symmetric_case_equilateral():
    s = side_lengths(construct_scene(math.pi / 3, math.pi / 3, THIRD))
    assert defect(s) < 1e-14


def test_trisectors_equilateral():
    assert defect(side_lengths(construct_scene(0.9, 0.7, THIRD))) < 1e-12


def test_non_trisector_not_equilateral():
    assert defect(side_lengths(construct_scene(0.9, 0.7, [0.3] * 6))) > 1e-3


def test_scene_shape():
    sc = construct_scene(0.9, 0.7, THIRD)
    assert sc.E == (0.0, 0.0) and sc.F == (1.0, 0.0) and sc.H[1] > 0
    for P in (sc.G, sc.I, sc.J):
        assert P[1] > 0


def test_degenerate_guard():
    with pytest.raises(DegenerateTriangleError):
        construct_scene(1e-9, 0.7, THIRD)
    with pytest.raises(DegenerateTriangleError):
        construct_scene(1.6, math.pi - 1.6, THIRD)


def test_inadmissible_rejected():
    with pytest.raises(AdmissibilityError):
        construct_scene(0.9, 0.7, [0.5] * 6)


def test_base_triangle_law_of_sines():
    rng = random.Random(4)
    for _ in range(200):
        a, b, t = random_case(rng)
        sc = scene_by_intersection(a, b, t)
        EH, FH = math.dist(sc.E, sc.H), math.dist(sc.F, sc.H)
        assert abs(EH - math.sin(b) / math.sin(a + b)) < 1e-13 * max(1, EH)
        assert abs(FH - math.sin(a) / math.sin(a + b)) < 1e-13 * max(1, FH)


def test_dual_path_1000_scenes():
    rng = random.Random(9)
    for _ in range(1000):
        a, b, t = random_case(rng)
        closed = closed_form_sides_sq(a, b, t)
        sides = side_lengths(scene_by_intersection(a, b, t))
        for c, s in zip(closed, sides):
            assert abs(c - s * s) <= 1e-12 * max(1.0, c)
        L, M = cevian_lengths(a, b, t), scene_lengths(scene_by_intersection(a, b, t))
        assert max(abs(L[k] - M[k]) for k in L) <= 1e-12 * max(1.0, max(L.values()))


def test_polar_and_intersection_paths_agree():
    rng = random.Random(12)
    for _ in range(100):
        a, b, t = random_case(rng)
        s1, s2 = side_lengths(construct_scene(a, b, t)), side_lengths(scene_by_intersection(a, b, t))
        assert max(abs(x - y) for x, y in zip(s1, s2)) < 1e-12


def test_A_vanishes_at_trisectors():
    rng = random.Random(5)
    for _ in range(100):
        a, b, _ = random_case(rng)
        assert abs(eval_A_direct(a, b, THIRD)) < 1e-12


def test_A_equals_cleared_difference():
    rng = random.Random(6)
    for _ in range(200):
        a, b, t = random_case(rng)
        A = eval_A_direct(a, b, t)
        GI2, IJ2, _ = closed_form_sides_sq(a, b, t)
        X = (GI2 - IJ2) * denominator_D(a, b, t)
        assert abs(A - X) <= 1e-10 * max(abs(A), abs(X), 1e-300)


@pytest.mark.parametrize("p,q,excluded", [
    (7, 38, [Q(147, 211), Q(5929, 46828), Q(539, 4283)]),
    (3, 11, [Q(17328, 7199), Q(144, 229)]),
])
def test_exclusions(p, q, excluded):
    iv = certified_sin_sq(p, q, 128)
    assert iv.width <= Q(1, 10 ** 15)
    for x in excluded:
        assert iv.excludes(x)


def test_sin_sq_special_values():
    assert certified_sin_sq(1, 2).contains(1)
    assert certified_sin_sq(1, 6).contains(Q(1, 4))
    assert certified_sin_sq(0, 5).contains(0)


@given(st.integers(-60, 60), st.integers(1, 60))
def test_interval_contains_reference(p, q):
    mpmath.mp.prec = 200
    ref = mpmath.sin(mpmath.pi * p / q) ** 2
    iv = certified_sin_sq(p, q, 96)
    lo = mpmath.mpf(int(iv.lo.numerator)) / int(iv.lo.denominator)
    hi = mpmath.mpf(int(iv.hi.numerator)) / int(iv.hi.denominator)
    slack = mpmath.mpf(2) ** -190          # error of the 200-bit reference itself
    assert lo - slack <= ref <= hi + slack
    assert iv.width <= Q(1, 2 ** 96)


def test_intervals_shrink_with_precision():
    widths = [certified_sin_sq(7, 38, bits).width for bits in (32, 64, 128, 256)]
    assert widths == sorted(widths, reverse=True)
    outer = certified_sin_sq(7, 38, 32)
    inner = certified_sin_sq(7, 38, 256)
    assert outer.lo <= inner.lo and inner.hi <= outer.hi


def test_scan_trisectors():
    assert equilateral_scan(50, CevianParams.uniform()).max_defect < 1e-12


def test_scan_perturbed():
    p = CevianParams((0.34,) + (1 / 3,) * 5)
    assert equilateral_scan(50, p).max_defect > 1e-4


def test_single_cell_scan():
    rep = equilateral_scan(1, CevianParams.uniform())
    (a, b), = list(scan_angles(1))
    assert len(rep.rows) == 1
    assert rep.rows[0][2:5] == side_lengths(construct_scene(a, b, THIRD))


def test_scan_csv(tmp_path):
    rep = equilateral_scan(3, CevianParams.uniform())
    out = tmp_path / "scan.csv"
    rep.to_csv(out)
    lines = out.read_text().splitlines()
    assert lines[0] == "alpha,beta,GI,IJ,JG,defect" and len(lines) == 10


def _A_terms(a, b, t):
    s, c, pi = math.sin, math.cos, math.pi
    t1, t2, t3, t4, t5, t6 = t
    p = s(-t3 * b - t4 * pi + t4 * a + t4 * b)
    q = s(t5 * (a + b - pi) - t6 * a)
    u = s(t1 * a + t2 * b)
    return [s(t1 * a) ** 2 * s(a + b) ** 2 * p ** 2 * q ** 2,
            s(a) ** 2 * s(t4 * (pi - a - b)) ** 2 * u ** 2 * q ** 2,
            2 * s(t1 * a) * s(a) * s(t4 * (pi - a - b)) * c((-1 + t2 + t3) * b) * u * s(a + b) * p * q ** 2,
            s(a) ** 2 * s(t3 * b) ** 2 * u ** 2 * q ** 2,
            s(b) ** 2 * s(t6 * a) ** 2 * u ** 2 * p ** 2,
            2 * s(a) * s(t3 * b) * s(b) * s(t6 * a) * c((-1 + t4 + t5) * (pi - a - b)) * u ** 2 * p * q]


@pytest.mark.parametrize("seed", range(10))
def test_cleared_form_within_rounding_bound(seed):
    # both sides are exact rearrangements; their gap is rounding, bounded by the term magnitudes
    from morley_verify.morley_core import random_admissible, random_angles
    rng = random.Random(seed)
    for _ in range(1000):
        t, (a, b) = random_admissible(rng), random_angles(rng)
        A = eval_A_direct(a, b, t)
        GI2, IJ2, _ = closed_form_sides_sq(a, b, t)
        D = denominator_D(a, b, t)
        X = (GI2 - IJ2) * D
        scale = sum(abs(x) for x in _A_terms(a, b, t)) + (GI2 + IJ2) * D
        assert abs(A - X) <= 256 * 2.0 ** -52 * scale
