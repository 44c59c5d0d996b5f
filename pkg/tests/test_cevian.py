from __future__ import annotations

import pytest

from morley_verify.cevian import AdmissibilityError, CevianParams, admissible
from morley_verify.exact_arith import Q


def test_trisector_point_admissible():
    assert CevianParams.uniform().admissible()
    assert CevianParams.uniform()[1] == Q(1, 3)


def test_half_violates_pair_sums():
    p = CevianParams.uniform(Q(1, 2))
    assert set(p.violations()) == {"t2 + t3 >= 1", "t4 + t5 >= 1", "t6 + t1 >= 1"}
    with pytest.raises(AdmissibilityError):
        p.check()


def test_nonpositive_entry():
    assert not admissible([0, Q(1, 3), Q(1, 3), Q(1, 3), Q(1, 3), Q(1, 3)])


def test_parse_mixed():
    p = CevianParams.parse("1/3, 0.34, 1/3,1/3,1/3,1/3")
    assert p[1] == Q(1, 3) and p[2] == 0.34


def test_wrong_length():
    with pytest.raises(AdmissibilityError):
        CevianParams((Q(1, 3),) * 5)


def test_perturbed():
    p = CevianParams.uniform().perturbed(3, Q(1, 100))
    assert p[3] == Q(103, 300) and p[2] == Q(1, 3)


def test_symbolic_has_no_violations():
    assert CevianParams.symbolic_params().admissible()
