from __future__ import annotations

import math
import random
from itertools import permutations

import pytest

from morley_verify import displays
from morley_verify.exact_arith import Q
from morley_verify.morley_core import (
    REGISTRY, ROTATIONS, PipelineConfig, PipelineError, build_A, build_reduced_A,
    build_reduced_display, derived_constant, flip_one_sign, generate_system,
    is_nonvanishing_monomial, monomial_ratio, run_pipeline, step_ids,
)
from morley_verify.polyring import (
    MultiPoly, V, exact_divide, parse_poly, permute_indices, pythagorean_reduce,
)
from morley_verify.series import coeff


def trig_values(t):
    vals = {f"t{i}": t[i - 1] for i in range(1, 7)}
    for i in range(1, 7):
        vals[f"s{i}"] = math.sin(t[i - 1] * math.pi)
        vals[f"c{i}"] = math.cos(t[i - 1] * math.pi)
    return vals


def test_registry_ids():
    assert step_ids() == [f"S{i:02d}" for i in range(1, 38)]
    assert len({s.id for s in REGISTRY}) == 37
    assert all(s.anchor and s.claim for s in REGISTRY)


def test_A_vanishes_at_trisectors():
    assert abs(build_A(0, 8).evaluate(0.7, 0.9, trig_values([1 / 3] * 6))) < 1e-12


def test_rotation_divisibility():
    assert exact_divide(coeff(build_A(1, 8), 2, 2), parse_poly("(t3-t4)^2")) is not None
    assert exact_divide(coeff(build_A(2, 8), 2, 2), parse_poly("(t5-t6)^2")) is not None
    assert exact_divide(coeff(build_A(0, 8), 2, 2), parse_poly("(t1-t2)^2")) is not None


def test_rotation_is_index_shift_by_two():
    assert ROTATIONS[1] == {1: 3, 2: 4, 3: 5, 4: 6, 5: 1, 6: 2}


def test_bad_arguments():
    with pytest.raises(PipelineError):
        build_A(3, 8)
    with pytest.raises(PipelineError):
        build_A(0, 3)
    with pytest.raises(PipelineError):
        build_reduced_A(6)


def test_reduced_matches_display_and_numeric():
    assert build_reduced_A(8) == build_reduced_display(8)
    full, red = build_A(0, 8), build_reduced_A(8)
    rng = random.Random(8)
    for _ in range(20):
        t1, t3, t5 = (rng.uniform(0.05, 0.45) for _ in range(3))
        vals = trig_values([t1, t1, t3, t3, t5, t5])
        x, y = rng.uniform(0.01, 0.3), rng.uniform(0.01, 0.3)
        assert abs(full.evaluate(x, y, vals) - red.evaluate(x, y, vals)) < 1e-12


def test_generated_system_is_the_display():
    # the generated form carries c5^2 where the display has 1 - s5^2
    for k, E in enumerate(generate_system(8), start=1):
        assert pythagorean_reduce(E) == pythagorean_reduce(displays.poly(f"E{k}"))


def test_system_vanishes_at_trisectors():
    vals = trig_values([1 / 3] * 6)
    for E in generate_system(8):
        assert abs(E.evaluate(vals)) < 1e-12


def test_system_closed_under_permutations():
    system = {displays.poly(f"E{k}") for k in range(1, 7)}
    for img in permutations((1, 3, 5)):
        sigma = dict(zip((1, 3, 5), img))
        assert {permute_indices(E, sigma) for E in system} == system


def test_full_pipeline():
    results = run_pipeline(PipelineConfig())
    assert [r.id for r in results] == step_ids()
    bad = [(r.id, r.witness) for r in results if not r.verified]
    assert not bad


def test_single_step():
    (r,) = run_pipeline(PipelineConfig(steps=["S04"], degree=4))
    assert r.id == "S04" and r.status == "verified"


def test_fault_injection_on_e1():
    cfg = PipelineConfig(steps=["S08"], overrides={"E1": flip_one_sign(displays.poly("E1"))})
    (r,) = run_pipeline(cfg)
    assert r.status == "failed"
    assert any(v.startswith("FAILED") for v in r.witness.values())


def test_arithmetic_error_becomes_failed_step():
    cfg = PipelineConfig(steps=["S26"], overrides={"q1": MultiPoly.const(0)})
    (r,) = run_pipeline(cfg)
    assert r.status == "failed" and r.witness


@pytest.mark.parametrize("step,want", [("S04", 1), ("S07", 1), ("S11", Q(-4, 3))])
def test_derived_constants(step, want):
    assert derived_constant(step) == want


def test_derived_constant_missing():
    with pytest.raises(KeyError):
        derived_constant("S29")
    with pytest.raises(KeyError):
        derived_constant("S99")


@pytest.mark.parametrize("cfg", [
    PipelineConfig(degree=5), PipelineConfig(precision_bits=32), PipelineConfig(steps=["S00"]),
])
def test_invalid_configs(cfg):
    with pytest.raises(PipelineError):
        run_pipeline(cfg)


def test_nonvanishing_monomials():
    assert is_nonvanishing_monomial(parse_poly("-4/3*t1^2*t3*s5"))
    assert not is_nonvanishing_monomial(parse_poly("c3"))
    assert not is_nonvanishing_monomial(parse_poly("t1+t3"))
    assert monomial_ratio(parse_poly("2*t1*(t3+t5)"), parse_poly("t3+t5")) == 2 * V("t1")
    assert monomial_ratio(parse_poly("t1+t3"), parse_poly("t3+t5")) is None


def test_steps_deterministic():
    a = run_pipeline(PipelineConfig(steps=["S01", "S26", "S27"]))
    b = run_pipeline(PipelineConfig(steps=["S01", "S26", "S27"]))
    assert [(r.status, r.witness, r.constants) for r in a] == \
        [(r.status, r.witness, r.constants) for r in b]
