from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, strategies as st

from morley_verify import displays
from morley_verify.elimination import (
    EliminationError, QuadExt, RatFunc, count_real_roots, cross_difference, quad_roots,
    rat_substitute, ratfunc_equal, solve_linear, sturm_sign_certificate, sylvester_resultant,
)
from morley_verify.exact_arith import Q
from morley_verify.polyring import MultiPoly, V, parse_poly, verify_factorization

ints = st.integers(-6, 6)


@st.composite
def upolys(draw, var="t1", max_deg=3):
    d = draw(st.integers(1, max_deg))
    cs = [draw(ints) for _ in range(d)] + [draw(st.integers(1, 6))]
    return sum((MultiPoly.const(c) * V(var) ** i for i, c in enumerate(cs)), MultiPoly())


def test_resultant_of_linears():
    r = sylvester_resultant(parse_poly("t1-t3"), parse_poly("t1-t5"), "t1")
    assert r == parse_poly("t5-t3") or r == parse_poly("t3-t5")


def test_resultant_needs_positive_degree():
    with pytest.raises(EliminationError):
        sylvester_resultant(parse_poly("t3"), parse_poly("t1-1"), "t1")


def test_q1_q5_eliminate_t5():
    r = sylvester_resultant(displays.poly("q1"), displays.poly("q5"), "t5")
    assert verify_factorization(r, 48, [
        (parse_poly("38*t1-7"), 1), (parse_poly("61*t1^2-98*t1+49"), 1),
        (parse_poly("11*t1-3"), 2), (parse_poly("131*t1^2-42*t1+7"), 2),
        (parse_poly("2*t1-1"), 6)])


T1_COMMON = [(parse_poly("38*t5-23"), 1), (parse_poly("11*t5-3"), 2),
             (parse_poly("131*t5^2-123*t5+40"), 2), (parse_poly("2*t5-1"), 6)]


def test_q1_q5_eliminate_t1_constant_term_11_does_not_hold():
    r = sylvester_resultant(displays.poly("q1"), displays.poly("q5"), "t1")
    assert not verify_factorization(r, -48, T1_COMMON + [(parse_poly("61*t5^2+144*t5+11"), 1)])


def test_q1_q5_eliminate_t1_corrected():
    r = sylvester_resultant(displays.poly("q1"), displays.poly("q5"), "t1")
    assert verify_factorization(r, -48, T1_COMMON + [(parse_poly("61*t5^2+144*t5+111"), 1)])


def test_p1_p3_eliminate_t3():
    r = sylvester_resultant(displays.poly("p1"), displays.poly("p3"), "t3")
    assert verify_factorization(r, Q(1, 16), [
        (parse_poly("11*t1-3"), 2), (parse_poly("t1+3"), 2), (parse_poly("131*t1^2-42*t1+7"), 2)])


def test_p1_p3_eliminate_t1_contains_factor():
    r = sylvester_resultant(displays.poly("p1"), displays.poly("p3"), "t1")
    base = [(parse_poly("5*t3^2-15*t3-8"), 1), (parse_poly("131*t3^2-42*t3+7"), 1),
            (parse_poly("131*t3^2-123*t3+40"), 1)]
    assert verify_factorization(r, -9, base + [(parse_poly("11*t3-3"), 2)])
    assert not verify_factorization(r, -9, base + [(parse_poly("11*t3-3"), 1)])


def test_solve_linear_examples():
    s5 = solve_linear(displays.poly("S5_linear_t1t3"), "S5")
    want = RatFunc(parse_poly("t5^2*(7*t1+4*t5-3)"), parse_poly(
        "-3-37*t1^2+25*t1^2*t5+22*t1^3-19*t1*t5+5*t1*t5^2+18*t1-3*t5^2+3*t5^3+5*t5"))
    assert ratfunc_equal(s5, want)
    s1 = solve_linear(parse_poly("S1*(7*t1^2-4*t1+1)-3*t1^2"), "S1")
    assert s1 == RatFunc(parse_poly("3*t1^2"), parse_poly("7*t1^2-4*t1+1"))
    assert solve_linear(parse_poly("2*t2-4"), "t2") == RatFunc(MultiPoly.const(2))


def test_solve_linear_rejects_nonlinear():
    with pytest.raises(EliminationError):
        solve_linear(parse_poly("t1^2-1"), "t1")


def test_ratfunc_equal_simple():
    assert ratfunc_equal(RatFunc(V("t1")), RatFunc(2 * V("t1"), MultiPoly.const(2)))


def test_case_a_composition():
    t5 = displays.ratfunc("t5_case_A")
    via = rat_substitute(rat_substitute(displays.ratfunc("S3_of_S5"), {"t5": t5}),
                         {"S5": displays.ratfunc("S5_case_A")})
    assert ratfunc_equal(via, displays.ratfunc("S3_case_A_via_S5"))


def test_two_s1_forms_differ_by_t1_sq_times_gap():
    d = cross_difference(displays.ratfunc("S1_general"), displays.ratfunc("S1_via_S5"))
    from morley_verify.polyring import exact_divide
    assert exact_divide(d, parse_poly("t1^2*(t1-t5)")) is not None


def test_sturm_examples():
    assert 42 ** 2 - 4 * 131 * 7 == -1904
    assert sturm_sign_certificate(parse_poly("131*t1^2-42*t1+7")) == "positive"
    assert sturm_sign_certificate(parse_poly("5*t1^2-15*t1-8"), 0, 1) == "negative"
    assert sturm_sign_certificate(parse_poly("t1-1"), 0, 2) == "has_root"
    assert count_real_roots(parse_poly("t1^2-2")) == 2


def test_quadratic_roots_examples():
    r = quad_roots(57, -36, -5)
    assert [(x.p, x.q, x.r, x.d) for x in r] == [(18, 1, 57, 609), (18, -1, 57, 609)]
    assert sorted(x.rational_part() for x in quad_roots(1, 0, -1)) == [-1, 1]
    assert sorted(x.rational_part() for x in quad_roots(6, -5, 1)) == [Q(1, 3), Q(1, 2)]
    assert r[0].rational_part() == Q(6, 19) and r[0].surd_part() == Q(1, 57)


@given(ints.filter(bool), ints, ints)
def test_quad_roots_are_roots(a, b, c):
    if b * b - 4 * a * c < 0:
        with pytest.raises(EliminationError):
            quad_roots(a, b, c)
        return
    roots = quad_roots(a, b, c)
    assert len(roots) == 2
    for x in roots:
        assert (x * x * a + x * b + c).is_zero()
    assert (roots[0] == roots[1]) == (b * b == 4 * a * c)


@given(upolys(), upolys(), upolys())
def test_resultant_multiplicative(p, q, r):
    lhs = sylvester_resultant(p * q, r, "t1")
    assert lhs == sylvester_resultant(p, r, "t1") * sylvester_resultant(q, r, "t1")


@given(upolys(), upolys())
def test_resultant_antisymmetry(p, q):
    sign = (-1) ** (p.degree("t1") * q.degree("t1"))
    assert sylvester_resultant(p, q, "t1") == sylvester_resultant(q, p, "t1") * sign


@given(upolys(max_deg=4))
def test_positive_certificate_samples(p):
    if sturm_sign_certificate(p) != "positive":
        return
    rng = random.Random(1)
    for _ in range(500):
        x = Q(rng.randint(-10**6, 10**6), rng.randint(1, 1000))
        assert p.evaluate({"t1": x}) > 0


def test_quadext_ordering():
    r = quad_roots(57, -36, -5)
    assert r[1].sign() < 0 < r[0].sign()
    assert math.isclose(float(r[0]), 6 / 19 + math.sqrt(609) / 57)
    assert isinstance(r[0] - r[1], QuadExt) and (r[0] - r[1]).sign() > 0
