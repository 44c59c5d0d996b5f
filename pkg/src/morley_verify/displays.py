"""Transcribed closed forms checked by the step registry.

Each entry is plain arithmetic text over the ring variables; ``^`` is a
power.  Rational-function entries are stored as (numerator, denominator).
Polynomial relations "lhs = rhs" are stored as the single polynomial
lhs - rhs.
"""
from __future__ import annotations

from functools import lru_cache

from .elimination import RatFunc
from .polyring import MultiPoly, parse_poly

# bracket shared by the three-index relations, written for the (1, 3, 5) slot
_X1 = "((1-2*t1-2*t3+t1^2+2*t1*t3+2*t3*t5)*s5^2-t5^2)"
_X4 = "((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*s1^2-t1^2)"
_X5 = "((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*s3^2-t3^2)"

# cubic S5-coefficient of the linear relation after the (t1 - t3) split
_K5 = ("(3*t1^3+2*t1^2*t5+11*t1^2*t3-11*t1^2+11*t1+20*t1*t3*t5-6*t1*t5-25*t1*t3"
       "+11*t1*t3^2-3+2*t3^2*t5+3*t5^3+t5-11*t3^2+3*t3^3+11*t3-6*t3*t5)")
_K3 = ("(3*t1^3+2*t1^2*t3+11*t1^2*t5-11*t1^2+11*t1+20*t1*t5*t3-6*t1*t3-25*t1*t5"
       "+11*t1*t5^2-3+2*t5^2*t3+3*t3^3+t3-11*t5^2+3*t5^3+11*t5-6*t5*t3)")
_K1 = ("(3*t5^3+2*t5^2*t1+11*t5^2*t3-11*t5^2+11*t5+20*t5*t3*t1-6*t5*t1-25*t5*t3"
       "+11*t5*t3^2-3+2*t3^2*t1+3*t1^3+t1-11*t3^2+3*t3^3+11*t3-6*t3*t1)")

_D_T1T3 = "(-3-37*t1^2+25*t1^2*t5+22*t1^3-19*t1*t5+5*t1*t5^2+18*t1-3*t5^2+3*t5^3+5*t5)"
_K_T1T3 = "(-17*t1^2+31*t1^2*t5+8*t1^3-31*t1*t5+13*t1*t5^2+12*t1-11*t5^2+3*t5^3-3+11*t5)"

POLYS = {
    "alpha2beta2": "(-1+c4^2)*(-1+c5^2)*(t1-t2)^2",
    # degree-6 condition of the reduced expression; the cosine phase factor
    # cos((t3 + t5 - 1) pi) is written out as s3*s5 - c3*c5
    "deg6_condition": "2*t3*t5*(s3*s5-c3*c5)*s3*s5+((-1+t1+t3)^2-t3^2)*s3^2*s5^2-t5^2*s3^2",
    "E1": "-2*t3*t5*c3*c5*s5+((1-2*t1-2*t3+t1^2+2*t1*t3+2*t3*t5)*s5^2-t5^2)*s3",
    "E2": "-2*t5*t3*c5*c3*s3+((1-2*t1-2*t5+t1^2+2*t1*t5+2*t5*t3)*s3^2-t3^2)*s5",
    "E3": "-2*t1*t5*c1*c5*s5+((1-2*t3-2*t1+t3^2+2*t3*t1+2*t1*t5)*s5^2-t5^2)*s1",
    "E4": "-2*t5*t1*c5*c1*s1+((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*s1^2-t1^2)*s5",
    "E5": "-2*t1*t3*c1*c3*s3+((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*s3^2-t3^2)*s1",
    "E6": "-2*t3*t1*c3*c1*s1+((1-2*t5-2*t3+t5^2+2*t5*t3+2*t3*t1)*s1^2-t1^2)*s3",
    "S3_relation": "(-2*t3+2*t1*t3)*S5*S3-t5^2*S3-((-2*t5+2*t1*t5)*S3*S5-t3^2*S5)",
    "S3_relation_factored": "2*(t5-t3)*(1-t1)*S3*S5-(t5^2*S3-t3^2*S5)",
    "S3_relation_linear": "(2*(t5-t3)*(1-t1)*S5-t5^2)*S3+t3^2*S5",
    "X1_coefficient": _X1,
    "a5b2_condition": (
        "3/2*t5*s3*s5*(t3+t5-1)*(s3*c5+c3*s5)"
        "+(3/2*t3*t5*(s3*s5-c3*c5)*s5+s3*((t1-1)*(t1-2+3*t3)*s5^2-3/2*t5^2))*c3"
    ),
    "a5b2_condition_swapped": (
        "3/2*t3*s5*s3*(t3+t5-1)*(s3*c5+c3*s5)"
        "+(3/2*t3*t5*(s3*s5-c3*c5)*s3+s5*((t1-1)*(t1-2+3*t5)*s3^2-3/2*t3^2))*c5"
    ),
    "t3_half_residue": "(t5-1/2)*c5",
    "t5_half_residue": "(t3-1/2)*c3",
    "S5_quadratic": (
        "(5-72*t1*t3*t5-22*t3+35*t3^2-16*t1+52*t1*t3-54*t1*t3^2+22*t1*t5+24*t3*t5"
        "-12*t3*t5^2-6*t5-24*t3^3-6*t5^3+6*t5^2+13*t1^2*t3^2-24*t3^2*t5+6*t5*t3^3+18*t1*t3^3"
        "-12*t1^2*t5-26*t1^2*t3+2*t1^3*t5+2*t1^3*t3+6*t3*t5^3+13*t1^2-12*t1*t5^2+6*t5^4-2*t1^3"
        "+6*t3^4+36*t1*t3*t5^2+48*t1*t3^2*t5+12*t1^2*t3*t5)*S5^2"
        "+(-12*t1*t3*t5^2-6*t5^3*t1+12*t1*t5^2-9*t3^2*t5^2-12*t3*t5^3+18*t3*t5^2"
        "+6*t5^3-t1^2*t5^2-8*t5^2-6*t5^4)*S5+3*t5^4"
    ),
    "S5_quadratic_swapped": (
        "(5-72*t1*t3*t5-22*t1+35*t1^2-16*t3+52*t1*t3-54*t3*t1^2+22*t3*t5+24*t1*t5"
        "-12*t1*t5^2-6*t5-24*t1^3-6*t5^3+6*t5^2+13*t1^2*t3^2-24*t1^2*t5+6*t5*t1^3+18*t3*t1^3"
        "-12*t3^2*t5-26*t3^2*t1+2*t3^3*t5+2*t3^3*t1+6*t1*t5^3+13*t3^2-12*t3*t5^2+6*t5^4-2*t3^3"
        "+6*t1^4+36*t1*t3*t5^2+48*t3*t1^2*t5+12*t3^2*t1*t5)*S5^2"
        "+(-12*t1*t3*t5^2-6*t5^3*t3+12*t3*t5^2-9*t1^2*t5^2-12*t1*t5^3+18*t1*t5^2"
        "+6*t5^3-t3^2*t5^2-8*t5^2-6*t5^4)*S5+3*t5^4"
    ),
    "S5_split": f"(t1-t3)*({_K5}*S5-t5^2*(4*t1-3+3*t5+4*t3))",
    "S3_split": f"(t1-t5)*({_K3}*S3-t3^2*(4*t1-3+3*t3+4*t5))",
    "S1_split": f"(t5-t3)*({_K1}*S1-t1^2*(4*t5-3+3*t1+4*t3))",
    "S5_linear": f"{_K5}*S5-t5^2*(4*t1-3+3*t5+4*t3)",
    "S3_linear": f"{_K3}*S3-t3^2*(4*t1-3+3*t3+4*t5)",
    "S1_linear": f"{_K1}*S1-t1^2*(4*t5-3+3*t1+4*t3)",
    "S5_coefficient": _K5,
    "S3_coefficient": _K3,
    "S1_coefficient": _K1,
    "S1_linear_t1t3": f"{_K_T1T3}*S1-t1^2*(7*t1+4*t5-3)",
    "S5_linear_t1t3": f"{_D_T1T3}*S5-t5^2*(7*t1+4*t5-3)",
    "S5_coefficient_t1t3": _D_T1T3,
    "t5_line_t1t3": "7*t1+4*t5-3",
    "degenerate_t1t3_factored": "(11*t1-3)*(131*t1^2-42*t1+7)",
    "q1": "4*t1^3-63*t1^2*t5+25*t1^2-23*t1-23*t5+65*t1*t5-24*t1*t5^2-5*t5^3+22*t5^2+6",
    "q5": (
        "6-11*t5-53*t1-484*t1^3+218*t1^2-3*t5^3-11*t5^5+18*t5^4-263*t1^5+576*t1^4"
        "+212*t5^2*t1^3-114*t1^2*t5+44*t1*t5+85*t1*t5^2-206*t5^2*t1^2+56*t5^3*t1^2"
        "-t5^4*t1-62*t5^3*t1+162*t1^3*t5-169*t1^4*t5"
    ),
    "case_A_coefficient": _K1,
    "case_A_line": "4*t5-3+3*t1+4*t3",
    "case_A_cubic": (
        "-131/64*t1-9/8*t3-9/64*t1^2+183/64*t1^3+3/2*t3^2-87/8*t1^2*t3+12*t1*t3"
        "-29/2*t1*t3^2+21/64"
    ),
    "case_A_S3_match": (
        "-16*t3^2*(-3+3*t1+8*t3)*(155*t1^3-684*t1^2*t3-81*t1^2-95*t1"
        "+792*t1*t3-912*t1*t3^2-108*t3+21+144*t3^2)"
    ),
    "case_A_i_line": "-3+3*t1+8*t3",
    "case_A_i_factored": "(11*t1-3)*(57*t1^2-36*t1-5)",
    "p1": (
        "-131/64*t1-9/8*t3-9/64*t1^2+183/64*t1^3+3/2*t3^2-87/8*t1^2*t3+12*t1*t3"
        "-29/2*t1*t3^2+21/64"
    ),
    "p3": "155*t1^3-684*t1^2*t3-81*t1^2-95*t1+792*t1*t3-912*t1*t3^2-108*t3+21+144*t3^2",
    "case_B_S1_difference": (
        "t1^2*(t1-t5)*(3*t1^3+9*t1^2-6*t1^2*t5-9*t1^2*t3+27*t5*t1+30*t1*t3-20*t1-13*t1*t3^2"
        "-15*t1*t3*t5-6*t5^2*t1+9-t3^3-20*t3-9*t3*t5^2+9*t5^2+3*t5^3+12*t3^2+30*t3*t5-20*t5"
        "-13*t3^2*t5)"
    ),
    "case_B_S3_difference": (
        "t3^2*(t3-t5)*(-3*t3^3+9*t1*t3^2-9*t3^2+6*t3^2*t5-30*t1*t3-27*t3*t5+13*t1^2*t3"
        "+15*t1*t3*t5+20*t3+6*t3*t5^2-9+t1^3+20*t1-9*t5^2-3*t5^3-12*t1^2+9*t5^2*t1"
        "-30*t5*t1+13*t1^2*t5+20*t5)"
    ),
    "case_B_cubic_1": (
        "3*t1^3+9*t1^2-6*t1^2*t5-9*t1^2*t3+27*t5*t1+30*t1*t3-20*t1-13*t1*t3^2-15*t1*t3*t5"
        "-6*t5^2*t1+9-t3^3-20*t3-9*t3*t5^2+9*t5^2+3*t5^3+12*t3^2+30*t3*t5-20*t5-13*t3^2*t5"
    ),
    "case_B_cubic_3": (
        "-3*t3^3+9*t1*t3^2-9*t3^2+6*t3^2*t5-30*t1*t3-27*t3*t5+13*t1^2*t3+15*t1*t3*t5+20*t3"
        "+6*t3*t5^2-9+t1^3+20*t1-9*t5^2-3*t5^3-12*t1^2+9*t5^2*t1-30*t5*t1+13*t1^2*t5+20*t5"
    ),
    "case_B_sum_factored": "(t1-t3)*(t1+t3+t5)*(4*t1-3+3*t5+4*t3)",
    "case_B_line": "4*t1-3+3*t5+4*t3",
    "equal_S1_first": "(7*t1^2-4*t1+1)*S1-3*t1^2",
    "equal_S1_second": "(13*t1^2-9*t1+2)*S1-3*t1^2",
}

RATFUNCS = {
    "S3_of_S5": ("-t3^2*S5", "2*(t5-t3)*(1-t1)*S5-t5^2"),
    "S1_of_S5": ("-t1^2*S5", "2*(t5-t1)*(1-t3)*S5-t5^2"),
    "c3c5": (f"{_X1}*s3", "2*t3*t5*s5"),
    "c5c1": (f"{_X4}*s5", "2*t5*t1*s1"),
    "c1c3": (f"{_X5}*s1", "2*t3*t1*s3"),
    "cos_product_sq": (f"{_X1}*{_X4}*{_X5}", "8*t1^2*t3^2*t5^2"),
    "c3c5_sq": (f"{_X1}^2*s3^2", "4*t3^2*t5^2*s5^2"),
    "c5c1_sq": (f"{_X4}^2*s5^2", "4*t5^2*t1^2*s1^2"),
    "c1c3_sq": (f"{_X5}^2*s1^2", "4*t3^2*t1^2*s3^2"),
    "c1_sq": (f"s5^2*{_X4}*{_X5}", f"2*t1^2*s3^2*{_X1}"),
    "c3_sq": (f"s1^2*{_X1}*{_X5}", f"2*t3^2*s5^2*{_X4}"),
    "c5_sq": (f"s3^2*{_X1}*{_X4}", f"2*t5^2*s1^2*{_X5}"),
    "C1_of_S5": (
        "-((1+t5^2+4*t1*t3-2*t3-2*t1)*S5-t5^2)*((1-2*t3+2*t5*t1-2*t1+2*t1*t3+t3^2)*S5-t5^2)",
        "2*((1-2*t1+t1^2+2*t1*t3+2*t3*t5-2*t3)*S5-t5^2)*((2*t1*t3+2*t5-2*t3*t5-2*t1)*S5-t5^2)",
    ),
    "C3_of_S5": (
        "-((1+t5^2+4*t1*t3-2*t3-2*t1)*S5-t5^2)*((1-2*t1+t1^2+2*t1*t3+2*t3*t5-2*t3)*S5-t5^2)",
        "2*((1-2*t3+2*t5*t1-2*t1+2*t1*t3+t3^2)*S5-t5^2)*((2*t1*t3+2*t5-2*t1*t5-2*t3)*S5-t5^2)",
    ),
    "C5_of_S5": (
        "((1-2*t3+2*t5*t1-2*t1+2*t1*t3+t3^2)*S5-t5^2)*((1-2*t1+t1^2+2*t1*t3+2*t3*t5-2*t3)*S5-t5^2)",
        "2*((1+t5^2+4*t1*t3-2*t3-2*t1)*S5-t5^2)*t5^2",
    ),
    "S5_eq_lhs": ("-3/2*t3*s5*s3*(t3+t5-1)*(s3*c5+c3*s5)", "1"),
    "S5_eq_rhs": ("(3/2*t3*t5*(s3*s5-c3*c5)*s3+s5*((t1-1)*(t1-2+3*t5)*s3^2-3/2*t3^2))*c5", "1"),
    "mixed_term": ("s5*t3*((1-t1)*(1-t1-2*t3)*S5-t5^2)", "2*t5*(2*(t5-t3)*(1-t1)*S5-t5^2)"),
    "square_term": ("-t3^2*(2*(1-t1)*(2-t1-3*t3)*S5-3*t5^2)", "4*(t5-t3)*(1-t1)*S5-2*t5^2"),
    "S5_eq_rhs_closed": (
        "c5*s5*t3^2*((1-t1)*(t1-5+6*t3)*S5+3*t5^2)", "8*(t5-t3)*(1-t1)*S5-4*t5^2"
    ),
    "S5_eq_divided_rhs": ("t3*((1-t1)*(t1-5+6*t3)*S5+3*t5^2)", "8*(t5-t3)*(1-t1)*S5-4*t5^2"),
    "c3_over_c5": (
        "((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*S3-t3^2)*S1*t5",
        "((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*S1-t1^2)*s3*s5*t3",
    ),
    "S3_plus_ratio": (
        "-t3*S5*((t3-2*t3^2-2*t1*t3+2*t1*t3^2+t3^3+6*t1*t3*t5-2*t1*t5+t5^3-2*t3*t5+t5)*S5"
        "-t3*t5^2-t5^3)",
        "(2*(t5-t3)*(1-t1)*S5-t5^2)*((2*t5*t1-2*t1+2*t1*t3+t3^2-2*t3+1)*S5-t5^2)",
    ),
    "S5_t1t3": ("t5^2*(7*t1+4*t5-3)", _D_T1T3),
    "S1_t1t3": ("t1^2*(7*t1+4*t5-3)", _K_T1T3),
    "C1_t1t3": ("(t1-t5)*(6*t1^2-3*t1-3*t1*t5+1-t5^2)", f"2*{_K_T1T3}"),
    "C5_t1t3": (
        "(t1^2-1-3*t5^2+3*t5)*(t5-t1+3*t1*t5+t1^3-t1^2*t5-3*t1*t5^2-3*t5^2+3*t5^3)",
        f"2*(6*t1^2-3*t1-3*t1*t5+1-t5^2)*{_D_T1T3}",
    ),
    "S5_general": ("t5^2*(4*t1-3+3*t5+4*t3)", _K5),
    "S3_general": ("t3^2*(4*t1-3+3*t3+4*t5)", _K3),
    "S1_general": ("t1^2*(4*t5-3+3*t1+4*t3)", _K1),
    "S1_via_S5": (
        "t1^2*(4*t1-3+3*t5+4*t3)",
        "-3+22*t1*t3*t5+11*t3-11*t3^2+5*t1-11*t1*t3+3*t1*t3^2-8*t1*t5-20*t3*t5+6*t3*t5^2"
        "+7*t5+3*t3^3+3*t5^3-6*t5^2+10*t3^2*t5+2*t1^2*t5+3*t1^2*t3-3*t1^2+3*t1^3",
    ),
    "S3_via_S5": (
        "t3^2*(4*t1-3+3*t5+4*t3)",
        "-3+22*t1*t3*t5+11*t1-11*t1^2+5*t3-11*t1*t3+3*t3*t1^2-8*t3*t5-20*t1*t5+6*t1*t5^2"
        "+7*t5+3*t1^3+3*t5^3-6*t5^2+10*t1^2*t5+2*t3^2*t5+3*t3^2*t1-3*t3^2+3*t3^3",
    ),
    "t5_case_A": ("3-3*t1-4*t3", "4"),
    "S5_case_A": (
        "(-3+3*t1+4*t3)^2*(7*t1-3+4*t3)",
        "125*t1+28*t3-77*t1^2+15*t1^3+208*t3^2-128*t3^3-708*t1^2*t3+680*t1*t3-1104*t1*t3^2-63",
    ),
    "S3_case_A": (
        "-64*t3^2*(t1-t3)",
        "79*t1+124*t3-79*t1^2+21*t1^3+80*t3^2-128*t3^3+732*t1^2*t3-856*t1*t3+816*t1*t3^2-21",
    ),
    "S3_case_A_via_S5": (
        "-16*t3^2*(7*t1-3+4*t3)",
        "-331*t1^2+187*t1-1512*t1*t3-9+260*t3+153*t1^3+1252*t1^2*t3+1360*t1*t3^2-464*t3^2+128*t3^3",
    ),
    "t5_from_t1": ("3-7*t1", "4"),
    "S1_equal_first": ("3*t1^2", "7*t1^2-4*t1+1"),
    "S1_equal_second": ("3*t1^2", "13*t1^2-9*t1+2"),
    "t3_case_A_i": ("3-3*t1", "8"),
}


@lru_cache(maxsize=None)
def poly(name: str) -> MultiPoly:
    return parse_poly(POLYS[name])


@lru_cache(maxsize=None)
def ratfunc(name: str) -> RatFunc:
    num, den = RATFUNCS[name]
    return RatFunc(parse_poly(num), parse_poly(den))


def names() -> list:
    return sorted(POLYS) + sorted(RATFUNCS)
