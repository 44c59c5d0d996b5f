from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from morley_verify.exact_arith import CycloNum, Q
from morley_verify.exact_trig import (
    MORLEY_SUMMANDS, LaurentPoly2, TrigAtom, check_identity, compile_atom, compile_product,
    evaluate_summands, expression_summands, morley_summands, summand_mismatches,
    verify_morley_identity,
)
from morley_verify.numeric_oracle import eval_A_direct

atoms = st.builds(TrigAtom, st.sampled_from(["sin", "cos"]), st.integers(-3, 3),
                  st.integers(-3, 3), st.integers(-12, 12))


def test_cos_zero_is_one():
    assert compile_atom(TrigAtom("cos")) == LaurentPoly2.const(1)


def test_pythagorean():
    s, c = compile_atom(TrigAtom("sin", 1)), compile_atom(TrigAtom("cos", 1))
    assert s * s + c * c == LaurentPoly2.const(1)


def test_cos_pi_over_six_plus_x_at_zero():
    p = compile_atom(TrigAtom("cos", 1, 0, 1))
    at_zero = CycloNum()
    for (_, _), c in p.terms.items():
        at_zero = at_zero + c
    assert at_zero * at_zero == CycloNum.from_rational(Q(3, 4))


def test_full_identity_holds():
    res = verify_morley_identity()
    assert res.holds and res.terms == 0 and res.witness is None


@pytest.mark.parametrize("i", range(len(MORLEY_SUMMANDS)))
def test_sign_flip_breaks_identity(i):
    res = verify_morley_identity(flip=i)
    assert not res.holds and res.witness is not None and not res.witness[1].is_zero()


@pytest.mark.parametrize("i", range(len(MORLEY_SUMMANDS)))
def test_single_summand_nonzero(i):
    assert not check_identity([morley_summands()[i]]).holds


def test_display_matches_expression_factors():
    assert summand_mismatches() == []
    assert check_identity(expression_summands()).holds


def test_numeric_agreement_with_direct_evaluation():
    rng = random.Random(2)
    for _ in range(20):
        x, y = rng.uniform(0.01, 0.5), rng.uniform(0.01, 0.5)
        assert abs(evaluate_summands(x, y)) < 1e-12
        assert abs(eval_A_direct(3 * x, 3 * y, [1 / 3] * 6)) < 1e-12


@given(atoms, atoms)
def test_compile_is_multiplicative(a, b):
    prod = compile_product(1, [(a, 1), (b, 1)])
    rng = random.Random(hash((a, b)) & 0xFFFF)
    for _ in range(50):
        x, y = rng.uniform(-3, 3), rng.uniform(-3, 3)
        v = prod.evaluate(x, y)
        assert abs(v.imag) < 1e-12
        assert abs(v.real - a.value(x, y) * b.value(x, y)) < 1e-12


def test_bad_atom_kind():
    with pytest.raises(ValueError):
        TrigAtom("tan")


def test_laurent_negative_power_rejected():
    with pytest.raises(ValueError):
        LaurentPoly2.const(2) ** -1
