from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, strategies as st

from morley_verify.exact_arith import Q
from morley_verify.morley_core import _expression_args, build_A
from morley_verify.numeric_oracle import eval_A_direct
from morley_verify.polyring import MultiPoly, V, parse_poly, pythagorean_reduce
from morley_verify.series import (
    PhasedLinearArg, SeriesError, TruncSeries, coeff, cos_of, homogeneous_part, series_arith,
    sin_of,
)

a, b = TruncSeries.alpha, TruncSeries.beta


def trig_values(t):
    vals = {f"t{i}": t[i - 1] for i in range(1, 7)}
    for i in range(1, 7):
        vals[f"s{i}"] = math.sin(t[i - 1] * math.pi)
        vals[f"c{i}"] = math.cos(t[i - 1] * math.pi)
    return vals


def test_product_of_generators():
    assert series_arith(a(3), b(3), "mul") == TruncSeries(3, {(1, 1): MultiPoly.const(1)})


def test_binomial_square():
    s = (a(2) + b(2)) ** 2
    assert {ij: c.as_constant() for ij, c in s.coeffs.items()} == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


def test_sine_square():
    s = sin_of(PhasedLinearArg(u=1), 4)
    sq = s * s
    assert coeff(sq, 2, 0) == MultiPoly.const(1)
    assert coeff(sq, 4, 0) == MultiPoly.const(Q(-1, 3))


def test_mismatched_degree():
    with pytest.raises(SeriesError):
        a(3) + a(4)


def test_sin_t1_alpha():
    s = sin_of(PhasedLinearArg(u=V("t1")), 8)
    assert coeff(s, 1, 0) == V("t1")
    assert coeff(s, 3, 0) == parse_poly("-t1^3/6")


def test_phase_constant_term():
    kind, arg = _expression_args()[3]
    assert coeff(sin_of(arg, 4), 0, 0) == -V("s4")


def test_cos_phase_constant_term():
    kind, arg = _expression_args()[12]
    assert kind == "cos"
    c00 = pythagorean_reduce(coeff(cos_of(arg, 4), 0, 0))
    assert c00 == -(V("c4") * V("c5") - V("s4") * V("s5"))


def test_coeff_out_of_range():
    with pytest.raises(SeriesError):
        coeff(a(3), 3, 1)


def test_homogeneous_parts():
    cube = (a(3) + b(3)) ** 3
    assert homogeneous_part(cube, 3) == cube
    assert homogeneous_part(cube, 2).is_zero()


@pytest.mark.parametrize("k", sorted(_expression_args()))
def test_pythagorean_identity_for_each_factor(k):
    _, arg = _expression_args()[k]
    s, c = sin_of(arg, 6), cos_of(arg, 6)
    one = (s * s + c * c).reduce()
    assert one == TruncSeries.const(1, 6)


@given(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2),
       st.lists(st.integers(-2, 2), min_size=6, max_size=6))
def test_sine_is_odd(u, v, k0, m):
    arg = PhasedLinearArg(u=u * V("t2") + 1, v=v, k0=k0, m=tuple(m))
    assert (sin_of(-arg, 5) + sin_of(arg, 5)).reduce().is_zero()
    assert (cos_of(-arg, 5) - cos_of(arg, 5)).reduce().is_zero()


def test_truncation_error_scales_like_degree_nine():
    A = build_A(0, 8)
    rng = random.Random(3)
    for _ in range(5):
        t = [rng.uniform(0.1, 0.45) for _ in range(6)]
        vals = trig_values(t)
        errs = []
        for h in (0.24, 0.12):
            x, y = h * 5 / 12, h * 7 / 12
            errs.append(abs(A.evaluate(x, y, vals) - eval_A_direct(x, y, t)))
        # (0.05, 0.07) against a constant fitted at twice the size
        C = errs[0] / 0.24 ** 9
        assert errs[1] <= 4 * C * 0.12 ** 9


def test_truncation_error_order():
    # least-squares slope of log(error) against log(h) over h = 0.48 .. 0.06
    A = build_A(0, 8)
    rng = random.Random(5)
    hs = (0.48, 0.24, 0.12, 0.06)
    for _ in range(5):
        t = [rng.uniform(0.1, 0.45) for _ in range(6)]
        vals = trig_values(t)
        xs = [math.log(h) for h in hs]
        ys = [math.log(abs(A.evaluate(h * 5 / 12, h * 7 / 12, vals)
                           - eval_A_direct(h * 5 / 12, h * 7 / 12, t))) for h in hs]
        mx, my = sum(xs) / 4, sum(ys) / 4
        slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
        assert slope > 8.5


def test_numeric_consistency_small_arguments():
    A = build_A(0, 8)
    rng = random.Random(11)
    for _ in range(100):
        t = [rng.uniform(0.05, 0.45) for _ in range(6)]
        x, y = rng.uniform(0.002, 0.05), rng.uniform(0.002, 0.05)
        err = abs(A.evaluate(x, y, trig_values(t)) - eval_A_direct(x, y, t))
        assert err <= 10.0 * (x + y) ** 9 + 1e-15
