"""Cevian parameters t1..t6 and their admissibility region."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact_arith import Q, is_rational


class AdmissibilityError(ValueError):
    pass


@dataclass(frozen=True)
class CevianParams:
    """Six angle fractions.  With ``symbolic`` set, ``t`` is ignored and the
    parameters stay ring variables t1..t6."""

    t: tuple = ()
    symbolic: bool = False

    def __post_init__(self):
        if self.symbolic:
            return
        if len(self.t) != 6:
            raise AdmissibilityError(f"need 6 parameters, got {len(self.t)}")
        vals = tuple(x if is_rational(x) or isinstance(x, float) else Q(x) for x in self.t)
        object.__setattr__(self, "t", vals)

    @classmethod
    def uniform(cls, value=Q(1, 3)) -> CevianParams:
        return cls((value,) * 6)

    @classmethod
    def symbolic_params(cls) -> CevianParams:
        return cls((), symbolic=True)

    @classmethod
    def parse(cls, text: str) -> CevianParams:
        """'t1,...,t6'; entries may be fractions ('1/3') or decimals."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        vals = []
        for p in parts:
            if "/" in p or p.lstrip("-").isdigit():
                vals.append(Q(p))
            else:
                vals.append(float(p))
        return cls(tuple(vals))

    def __getitem__(self, i: int):
        """1-based access, t[1] .. t[6]."""
        return self.t[i - 1]

    def violations(self) -> list:
        if self.symbolic:
            return []
        t = self.t
        out = [f"t{i + 1} <= 0" for i in range(6) if t[i] <= 0]
        for a, b in ((2, 3), (4, 5), (6, 1)):
            if t[a - 1] + t[b - 1] >= 1:
                out.append(f"t{a} + t{b} >= 1")
        return out

    def admissible(self) -> bool:
        return not self.violations()

    def check(self) -> CevianParams:
        bad = self.violations()
        if bad:
            raise AdmissibilityError("inadmissible parameters: " + ", ".join(bad))
        return self

    def as_floats(self) -> tuple:
        return tuple(float(x) for x in self.t)

    def perturbed(self, i: int, delta) -> CevianParams:
        vals = list(self.t)
        vals[i - 1] = vals[i - 1] + delta
        return CevianParams(tuple(vals))


def admissible(t: Sequence) -> bool:
    return CevianParams(tuple(t)).admissible()
