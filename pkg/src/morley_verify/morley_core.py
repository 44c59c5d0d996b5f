"""Construction of A(alpha, beta) and the ordered registry of derivation checks.

Every step re-derives one link of the elimination argument with exact
arithmetic and compares it with the transcribed closed forms in
:mod:`displays`.  Relations that hold "up to a constant" are checked as
``computed == K * m * display`` where K is rational and m a monomial in
quantities that cannot vanish for admissible parameters (t_i, s_i, S_i);
every K is reported.
"""
from __future__ import annotations

import math
import random
import time
import traceback
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterable, Mapping, Sequence

from . import displays
from .cevian import CevianParams
from .elimination import (
    RatFunc, cross_difference, quad_roots, rat_substitute, solve_linear,
    solve_linear_system, sturm_sign_certificate, sylvester_resultant,
)
from .exact_arith import Q, Rational, rat_str
from .exact_trig import check_identity, expression_summands, morley_summands, summand_mismatches
from .numeric_oracle import (
    certified_sin_sq, closed_form_sides_sq, denominator_D, eval_A_direct,
    cevian_lengths, scene_by_intersection, scene_lengths, side_lengths,
)
from .polyring import (
    VAR_NAMES, MultiPoly, V, exact_divide, parse_poly, permute_indices,
    pythagorean_reduce, squares_to_trig, substitute, swap, trig_to_squares,
    unpack, verify_factorization,
)
from .series import PhasedLinearArg, TruncSeries, coeff, cos_of, homogeneous_part, sin_of

FULL_DEGREE = 8
MIN_PRECISION = 64
EXCLUSION_WIDTH = Q(1, 10 ** 15)

CHECK_KINDS = ("series-coeff", "poly-identity", "ratfunc-identity", "resultant",
               "sign-certificate", "numeric", "exact-trig")

# cyclic role shift G -> I -> J: t_i -> t_{i+2}
ROTATIONS = {
    0: {i: i for i in range(1, 7)},
    1: {i: (i + 1) % 6 + 1 for i in range(1, 7)},
    2: {i: (i + 3) % 6 + 1 for i in range(1, 7)},
}

# E1 -> E_k under a relabelling of {1, 3, 5}
SYSTEM_PERMUTATIONS = (
    {1: 1, 3: 3, 5: 5},
    {1: 1, 3: 5, 5: 3},
    {1: 3, 3: 1, 5: 5},
    {1: 3, 3: 5, 5: 1},
    {1: 5, 3: 1, 5: 3},
    {1: 5, 3: 3, 5: 1},
)


class PipelineError(ValueError):
    pass


# -- A(alpha, beta) -----------------------------------------------------------

def _t(i: int) -> MultiPoly:
    return V(f"t{i}")


def _arg(u=0, v=0, k0=0, **m) -> PhasedLinearArg:
    ms = [0] * 6
    for name, k in m.items():
        ms[int(name[1:]) - 1] = k
    return PhasedLinearArg(MultiPoly.coerce(u), MultiPoly.coerce(v), k0, tuple(ms))


def _expression_args() -> dict:
    t1, t2, t3, t4, t5, t6 = (_t(i) for i in range(1, 7))
    return {
        1: ("sin", _arg(u=t1)),
        2: ("sin", _arg(u=1, v=1)),
        3: ("sin", _arg(u=t4, v=t4 - t3, m4=-1)),           # -t3 b - t4 pi + t4 a + t4 b
        4: ("sin", _arg(u=t5 - t6, v=t5, m5=-1)),           # t5 (a + b - pi) - t6 a
        5: ("sin", _arg(u=1)),
        6: ("sin", _arg(u=-t4, v=-t4, m4=1)),               # t4 (pi - a - b)
        7: ("sin", _arg(u=t1, v=t2)),
        8: ("cos", _arg(v=t2 + t3 - 1)),
        9: ("sin", _arg(v=t3)),
        10: ("sin", _arg(v=1)),
        11: ("sin", _arg(u=t6)),
        12: ("cos", _arg(u=1 - t4 - t5, v=1 - t4 - t5, k0=-1, m4=1, m5=1)),
    }


def _reduced_args() -> dict:
    t1, t3, t5 = _t(1), _t(3), _t(5)
    return {
        1: ("sin", _arg(u=t1)),
        2: ("sin", _arg(u=1, v=1)),
        3: ("sin", _arg(u=t3, m3=-1)),
        4: ("sin", _arg(v=t5, m5=-1)),
        5: ("sin", _arg(u=1)),
        6: ("sin", _arg(u=-t3, v=-t3, m3=1)),
        7: ("sin", _arg(u=t1, v=t1)),
        8: ("cos", _arg(v=t1 + t3 - 1)),
        9: ("sin", _arg(v=t3)),
        10: ("sin", _arg(v=1)),
        11: ("sin", _arg(u=t5)),
        12: ("cos", _arg(u=1 - t3 - t5, v=1 - t3 - t5, k0=-1, m3=1, m5=1)),
    }


def _assemble(args: Mapping[int, tuple], N: int) -> TruncSeries:
    g = {k: (sin_of(a, N) if kind == "sin" else cos_of(a, N)) for k, (kind, a) in args.items()}
    sq = {k: g[k] * g[k] for k in (1, 2, 3, 4, 5, 6, 7, 9, 10, 11)}
    return (sq[1] * sq[2] * sq[3] * sq[4]
            + sq[5] * sq[6] * sq[7] * sq[4]
            + (g[1] * g[5] * g[6] * g[8] * g[7] * g[2] * g[3] * sq[4]).scale(2)
            - sq[5] * sq[9] * sq[7] * sq[4]
            - sq[10] * sq[11] * sq[7] * sq[3]
            + (g[5] * g[9] * g[10] * g[11] * g[12] * sq[7] * g[3] * g[4]).scale(2))


@lru_cache(maxsize=8)
def build_A(rotation: int = 0, N: int = FULL_DEGREE) -> TruncSeries:
    """Taylor series of A to total degree N; rotations relabel t_i -> t_{i+2r}."""
    if N < 4:
        raise PipelineError("truncation degree must be at least 4")
    if rotation not in ROTATIONS:
        raise PipelineError(f"rotation must be 0, 1 or 2, got {rotation!r}")
    A = _assemble(_expression_args(), N)
    if rotation:
        sigma = ROTATIONS[rotation]
        A = A.map(lambda p: permute_indices(p, sigma))
    return A


REDUCTION = {"t2": V("t1"), "t4": V("t3"), "t6": V("t5"),
             "s2": V("s1"), "c2": V("c1"), "s4": V("s3"), "c4": V("c3"),
             "s6": V("s5"), "c6": V("c5")}


@lru_cache(maxsize=4)
def build_reduced_A(N: int = FULL_DEGREE) -> TruncSeries:
    """A with t2 = t1, t4 = t3, t6 = t5, Pythagorean-reduced."""
    if N < FULL_DEGREE:
        raise PipelineError(f"reduced expansion needs degree >= {FULL_DEGREE}")
    return build_A(0, N).substitute(REDUCTION).reduce()


@lru_cache(maxsize=4)
def build_reduced_display(N: int = FULL_DEGREE) -> TruncSeries:
    """Independent expansion of the reduced six-term expression."""
    return _assemble(_reduced_args(), N).reduce()


def monomial_content(p: MultiPoly, families: str = "t") -> MultiPoly:
    """Largest monomial in the given variable families dividing every term."""
    if p.is_zero():
        return MultiPoly.const(1)
    exps = None
    for k in p.terms:
        e = unpack(k)
        exps = list(e) if exps is None else [min(a, b) for a, b in zip(exps, e)]
    return MultiPoly.monomial({n: e for n, e in zip(VAR_NAMES, exps)
                               if e and n[0] in families})


def lift_from_reduced(p: MultiPoly, i: int) -> MultiPoly | None:
    """E with pythagorean_reduce(s_i * E) == p, or None.

    Write p = s_i * a + b with b free of s_i; b must be a multiple of
    1 - c_i^2 = s_i^2, giving E = a + s_i * (b / (1 - c_i^2)).
    """
    s = f"s{i}"
    parts = p.coeffs_in(s)
    a, b = parts.get(1, MultiPoly()), parts.get(0, MultiPoly())
    if set(parts) - {0, 1}:
        return None
    rest = exact_divide(b, 1 - V(f"c{i}") ** 2)
    if rest is None:
        return None
    return a + V(s) * rest


def generate_system(N: int = FULL_DEGREE) -> list:
    """E1..E6 derived from the degree-6 block of the reduced expansion."""
    c42 = coeff(build_reduced_A(N), 4, 2)
    core = exact_divide(c42, monomial_content(c42))
    E1 = lift_from_reduced(core, 3)
    if E1 is None:
        raise PipelineError("degree-6 coefficient is not a multiple of s3")
    return [permute_indices(E1, sigma) for sigma in SYSTEM_PERMUTATIONS]


# -- proportionality helpers ------------------------------------------------

_SAFE_FAMILIES = ("t", "s", "S")


def is_nonvanishing_monomial(m: MultiPoly) -> bool:
    """Single term in t_i, s_i, S_i only: nonzero whenever 0 < t_i < 1."""
    if len(m) != 1:
        return False
    return all(v[0] in _SAFE_FAMILIES for v in m.variables())


def monomial_ratio(p: MultiPoly, ref: MultiPoly) -> MultiPoly | None:
    """Monomial m with p == m * ref, or None."""
    if ref.is_zero():
        raise ZeroDivisionError("reference polynomial is zero")
    if p.is_zero():
        return None
    kp, cp = p.leading_term()
    kr, cr = ref.leading_term()
    q = exact_divide(MultiPoly({kp: cp}), MultiPoly({kr: cr}))
    if q is None or q * ref != p:
        return None
    return q


def strip_factors(q: MultiPoly, factors: Sequence[MultiPoly]) -> tuple:
    """Divide out each allowed factor as often as possible."""
    used = []
    for f in factors:
        n = 0
        while True:
            r = exact_divide(q, f)
            if r is None:
                break
            q, n = r, n + 1
        used.append(n)
    return q, used


def _short(p, limit: int = 1500) -> str:
    text = p.to_text() if isinstance(p, MultiPoly) else str(p)
    if len(text) > limit:
        return text[:limit] + f" ... [{len(text)} chars]"
    return text


def _rstr(x) -> str:
    return rat_str(x)


# -- results ----------------------------------------------------------------

@dataclass(frozen=True)
class DerivationStep:
    id: str
    claim: str
    check_kind: str
    anchor: str
    run: Callable
    min_degree: int = 0


@dataclass
class StepResult:
    id: str
    claim: str
    status: str                         # verified | failed | skipped
    witness: dict = field(default_factory=dict)
    anchor: str = ""
    millis: float = 0.0
    constants: dict = field(default_factory=dict)
    check_kind: str = ""

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_dict(self) -> dict:
        return {
            "id": self.id, "claim": self.claim, "status": self.status,
            "witness": dict(self.witness), "anchor": self.anchor,
            "millis": round(self.millis, 3), "check_kind": self.check_kind,
            "constants": {k: _rstr(v) for k, v in self.constants.items()},
        }


class Outcome:
    """Accumulates sub-checks of one step."""

    def __init__(self):
        self.ok = True
        self.witness: Dict[str, str] = {}
        self.constants: Dict[str, Rational] = {}

    def check(self, label: str, cond: bool, detail=None) -> bool:
        cond = bool(cond)
        if cond:
            self.witness[label] = "ok"
        else:
            self.ok = False
            self.witness[label] = "FAILED" + (f": {_short(detail)}" if detail is not None else "")
        return cond

    def note(self, label: str, value) -> None:
        self.witness[label] = value if isinstance(value, str) else _short(value)

    def const(self, name: str, value) -> None:
        self.constants[name] = Q(value)

    def equal(self, label: str, got, want) -> bool:
        if isinstance(got, RatFunc) or isinstance(want, RatFunc):
            diff = cross_difference(got, want)
        else:
            diff = MultiPoly.coerce(got) - MultiPoly.coerce(want)
        return self.check(label, diff.is_zero(), diff)

    def proportional(self, label: str, p: MultiPoly, ref: MultiPoly,
                     allowed: Sequence[MultiPoly] = (), const: str | None = None) -> MultiPoly | None:
        """p == m * prod(allowed^k) * ref with m a nonvanishing monomial."""
        q = exact_divide(p, ref) if not ref.is_zero() else None
        if q is None:
            self.check(label, False, f"not divisible; computed = {_short(p, 600)}")
            return None
        q, used = strip_factors(q, allowed)
        if not is_nonvanishing_monomial(q):
            self.check(label, False, f"cofactor {_short(q, 600)} is not a nonvanishing monomial")
            return None
        self.check(label, True)
        self.witness[label + " cofactor"] = q.to_text() + "".join(
            f" * [allowed factor {i + 1}]^{n}" for i, n in enumerate(used) if n)
        if const:
            self.const(const, next(iter(q.terms.values())))
        return q


class Context:
    """Per-run state: configuration, display overrides and cached objects."""

    def __init__(self, config: PipelineConfig):
        self.config = config
        self.cache: dict = {}

    @property
    def N(self) -> int:
        return self.config.degree

    def poly(self, name: str) -> MultiPoly:
        o = self.config.overrides.get(name)
        return o if isinstance(o, MultiPoly) else displays.poly(name)

    def ratfunc(self, name: str) -> RatFunc:
        o = self.config.overrides.get(name)
        return o if isinstance(o, RatFunc) else displays.ratfunc(name)

    def rng(self, salt: int) -> random.Random:
        return random.Random(self.config.seed * 1000003 + salt)


@dataclass
class PipelineConfig:
    degree: int = FULL_DEGREE
    precision_bits: int = 128
    steps: Sequence[str] | None = None
    overrides: Mapping[str, object] = field(default_factory=dict)
    seed: int = 0
    samples: int = 200

    def validate(self) -> None:
        if self.precision_bits < MIN_PRECISION:
            raise PipelineError(f"precision must be at least {MIN_PRECISION} bits")
        need = required_degree(self.steps)
        if self.degree < need:
            raise PipelineError(
                f"degree {self.degree} too low for the selected steps (need >= {need})")
        known = {s.id for s in REGISTRY}
        bad = [s for s in (self.steps or ()) if s not in known]
        if bad:
            raise PipelineError("unknown step id(s): " + ", ".join(bad))


# -- numeric helpers --------------------------------------------------------

def random_admissible(rng: random.Random) -> tuple:
    """Random cevian parameters with every adjacent pair sum below 1."""
    return tuple(rng.uniform(0.05, 0.45) for _ in range(6))


def random_angles(rng: random.Random) -> tuple:
    while True:
        a, b = rng.uniform(0.05, 3.0), rng.uniform(0.05, 3.0)
        if a + b < math.pi - 0.05:
            return a, b


T1, T3, T5 = _t(1), _t(3), _t(5)
S5 = V("S5")


def _at_t3_eq_t1(f):
    if isinstance(f, RatFunc):
        return RatFunc(substitute(f.num, {"t3": T1}), substitute(f.den, {"t3": T1}))
    return substitute(f, {"t3": T1})


def _squares(f: RatFunc) -> RatFunc:
    return RatFunc(trig_to_squares(f.num), trig_to_squares(f.den))


def _trig_equal(out: Outcome, label: str, a, b) -> bool:
    """Equality after writing S_i, C_i back as s_i^2, c_i^2."""
    d = squares_to_trig(cross_difference(a, b))
    return out.check(label, pythagorean_reduce(d).is_zero(), d)


def _rat_value(f: RatFunc, values: Mapping[str, object]) -> Rational:
    return Q(f.num.evaluate(values)) / Q(f.den.evaluate(values))


# -- steps ------------------------------------------------------------------

def _s01(ctx: Context, out: Outcome):
    rng = ctx.rng(1)
    worst = 0.0
    for _ in range(ctx.config.samples):
        t, (a, b) = random_admissible(rng), random_angles(rng)
        L = cevian_lengths(a, b, t)
        M = scene_lengths(scene_by_intersection(a, b, t))
        worst = max(worst, max(abs(L[k] - M[k]) for k in L))
    out.note("max |law of sines - coordinates|", f"{worst:.3e}")
    out.check("segment lengths within 1e-12", worst <= 1e-12, f"{worst:.3e}")


def _s02(ctx: Context, out: Outcome):
    rng = ctx.rng(2)
    worst = 0.0
    for _ in range(ctx.config.samples):
        t, (a, b) = random_admissible(rng), random_angles(rng)
        closed = closed_form_sides_sq(a, b, t)
        sides = side_lengths(scene_by_intersection(a, b, t))
        worst = max(worst, max(abs(c - s * s) for c, s in zip(closed, sides)))
    out.note("max |closed form - coordinates| (squared sides)", f"{worst:.3e}")
    out.check("law of cosines within 1e-12", worst <= 1e-12, f"{worst:.3e}")


def _s03(ctx: Context, out: Outcome):
    rng = ctx.rng(3)
    worst = 0.0
    for _ in range(ctx.config.samples):
        t, (a, b) = random_admissible(rng), random_angles(rng)
        A = eval_A_direct(a, b, t)
        GI2, IJ2, _ = closed_form_sides_sq(a, b, t)
        X = (GI2 - IJ2) * denominator_D(a, b, t)
        scale = max(abs(A), abs(X), 1e-300)
        worst = max(worst, abs(A - X) / scale)
    out.note("max relative |A - (GI^2 - IJ^2) D|", f"{worst:.3e}")
    out.check("cleared form within 1e-10 relative", worst <= 1e-10, f"{worst:.3e}")


def _s04(ctx: Context, out: Outcome):
    A = build_A(0, ctx.N)
    low = [ij for ij in A.coeffs if sum(ij) < 4]
    out.check("coefficients of total degree < 4 vanish", not low, str(sorted(low)))
    c22 = pythagorean_reduce(coeff(A, 2, 2))
    ref = pythagorean_reduce(ctx.poly("alpha2beta2"))
    out.proportional("a^2 b^2 coefficient = K * display", c22, ref, const="K")


def _s05(ctx: Context, out: Outcome):
    base = ctx.poly("alpha2beta2")
    for r, pair in ((1, "t3 - t4"), (2, "t5 - t6")):
        c22 = pythagorean_reduce(coeff(build_A(r, ctx.N), 2, 2))
        ref = pythagorean_reduce(permute_indices(base, ROTATIONS[r]))
        d = parse_poly(pair) ** 2
        out.check(f"rotation {r}: ({pair})^2 divides the a^2 b^2 coefficient",
                  exact_divide(c22, d) is not None, c22)
        out.proportional(f"rotation {r}: coefficient = K * rotated display", c22, ref,
                         const=f"K_rot{r}")
    out.note("rotation convention", "t_i -> t_(i+2) (indices mod 6), s_i and c_i alike")


def _s06(ctx: Context, out: Outcome):
    red = build_reduced_A(ctx.N)
    disp = build_reduced_display(ctx.N)
    keys = sorted(set(red.coeffs) | set(disp.coeffs))
    bad = [ij for ij in keys if red.coeffs.get(ij, MultiPoly()) != disp.coeffs.get(ij, MultiPoly())]
    out.check("substituted A equals the reduced expression term by term", not bad, str(bad))
    out.note("coefficients compared", str(len(keys)))
    out.note("lowest nonzero total degree", str(red.valuation()))


def _s07(ctx: Context, out: Outcome):
    red = build_reduced_A(ctx.N)
    P = pythagorean_reduce(ctx.poly("deg6_condition"))
    m = out.proportional("(4,2) coefficient = K m * display", coeff(red, 4, 2), P, const="K")
    if m is None:
        return
    target = (TruncSeries.alpha(ctx.N) ** 2 * TruncSeries.beta(ctx.N) ** 2
              * (TruncSeries.alpha(ctx.N) + TruncSeries.beta(ctx.N)) ** 2)
    target = target.map(lambda c: c * m * P)
    out.check("degree-6 part = K m a^2 b^2 (a+b)^2 * display",
              homogeneous_part(red, 6) == target)
    lower = {d: all(c.is_zero() for ij, c in red.coeffs.items() if sum(ij) == d) for d in range(6)}
    out.note("total degrees < 6 identically zero", ",".join(str(d) for d, z in lower.items() if z))


def _s08(ctx: Context, out: Outcome):
    system = generate_system(ctx.N)
    for k, (gen, sigma) in enumerate(zip(system, SYSTEM_PERMUTATIONS), start=1):
        disp = ctx.poly(f"E{k}")
        out.equal(f"E{k} generated = display (mod s^2 + c^2 = 1)",
                  pythagorean_reduce(gen), pythagorean_reduce(disp))
        if k > 1:
            out.equal(f"E{k} display = permuted E1 display",
                      permute_indices(ctx.poly("E1"), sigma), disp)
    out.equal("display of the degree-6 condition = s3 * E1",
              ctx.poly("deg6_condition"), V("s3") * ctx.poly("E1"))


def _s09(ctx: Context, out: Outcome):
    rel = trig_to_squares(V("s3") * ctx.poly("E1") - V("s5") * ctx.poly("E2"))
    out.equal("s3 E1 - s5 E2 in squares", rel, ctx.poly("S3_relation"))
    out.equal("rearranged relation", rel, ctx.poly("S3_relation_factored"))
    out.equal("relation linear in S3", rel, ctx.poly("S3_relation_linear"))
    out.equal("S3 in terms of S5", solve_linear(rel, "S3"), ctx.ratfunc("S3_of_S5"))


def _s10(ctx: Context, out: Outcome):
    rel = trig_to_squares(V("s1") * ctx.poly("E3") - V("s5") * ctx.poly("E4"))
    out.equal("S1 in terms of S5", solve_linear(rel, "S1"), ctx.ratfunc("S1_of_S5"))


def _s11(ctx: Context, out: Outcome):
    c52 = coeff(build_reduced_A(ctx.N), 5, 2)
    out.proportional("(5,2) coefficient = K m * display", c52,
                     pythagorean_reduce(ctx.poly("a5b2_condition")), const="K")


def _s12(ctx: Context, out: Outcome):
    X1 = ctx.poly("X1_coefficient")
    out.equal("E1 - X1 s3 = -2 t3 t5 c3 c5 s5", ctx.poly("E1") - X1 * V("s3"),
              parse_poly("-2*t3*t5*c3*c5*s5"))
    r = substitute(ctx.poly("a5b2_condition"), {"t3": Q(1, 2), "c3": 0, "s3": 1})
    out.proportional("t3 = 1/2 residue = K m * (t5 - 1/2) c5", r,
                     ctx.poly("t3_half_residue"), const="K")
    # (t5 - 1/2) c5 = 0 with 0 < t5 < 1 forces t5 = 1/2; then t4 + t5 = t3 + t5 = 1
    p = CevianParams((Q(1, 4), Q(1, 4), Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)))
    out.check("t3 = t4 = t5 = 1/2 violates t4 + t5 < 1", "t4 + t5 >= 1" in p.violations())


def _s13(ctx: Context, out: Outcome):
    sw = permute_indices(ctx.poly("a5b2_condition"), swap(3, 5))
    out.equal("3 <-> 5 swap of the (5,2) condition", sw, ctx.poly("a5b2_condition_swapped"))
    r = substitute(sw, {"t5": Q(1, 2), "c5": 0, "s5": 1})
    out.proportional("t5 = 1/2 residue = K m * (t3 - 1/2) c3", r,
                     ctx.poly("t5_half_residue"), const="K")


def _s14(ctx: Context, out: Outcome):
    s = {i: V(f"s{i}") for i in (1, 3, 5)}
    t = {i: V(f"t{i}") for i in (1, 3, 5)}
    c = {i: V(f"c{i}") for i in (1, 3, 5)}
    for name, E, (i, j), k in (("c3c5", "E1", (3, 5), 5), ("c5c1", "E4", (5, 1), 1),
                               ("c1c3", "E5", (1, 3), 3)):
        rest = ctx.poly(E) + 2 * t[i] * t[j] * c[i] * c[j] * s[k]
        out.check(f"{E} is linear in {name}", rest.degree(f"c{i}") == 0, rest)
        out.equal(f"{name} from {E}", RatFunc(rest, 2 * t[i] * t[j] * s[k]), ctx.ratfunc(name))
    prod = ctx.ratfunc("c3c5") * ctx.ratfunc("c5c1") * ctx.ratfunc("c1c3")
    _trig_equal(out, "product of the three", prod, ctx.ratfunc("cos_product_sq"))


def _s15(ctx: Context, out: Outcome):
    for name in ("c3c5", "c5c1", "c1c3"):
        _trig_equal(out, f"{name} squared", ctx.ratfunc(name) ** 2, ctx.ratfunc(name + "_sq"))
    prod = ctx.ratfunc("cos_product_sq")
    for sq, single in (("c3c5_sq", "c1_sq"), ("c5c1_sq", "c3_sq"), ("c1c3_sq", "c5_sq")):
        _trig_equal(out, f"{single} = product / {sq}", prod / ctx.ratfunc(sq), ctx.ratfunc(single))


def _s16(ctx: Context, out: Outcome):
    sub = {"S1": ctx.ratfunc("S1_of_S5"), "S3": ctx.ratfunc("S3_of_S5")}
    for single, closed in (("c1_sq", "C1_of_S5"), ("c3_sq", "C3_of_S5"), ("c5_sq", "C5_of_S5")):
        got = rat_substitute(_squares(ctx.ratfunc(single)), sub)
        out.equal(f"{closed}", got, ctx.ratfunc(closed))


def _s17(ctx: Context, out: Outcome):
    s3, s5 = V("s3"), V("s5")
    e = RatFunc(V("S3") * s5) - _squares(ctx.ratfunc("c3c5") * s3)
    e = rat_substitute(e, {"S3": ctx.ratfunc("S3_of_S5")})
    _trig_equal(out, "(s3 s5 - c3 c5) s3 closed form", e, _squares(ctx.ratfunc("mixed_term")))


def _s18(ctx: Context, out: Outcome):
    e = rat_substitute(RatFunc(parse_poly("(t1-1)*(t1-2+3*t5)*S3-3/2*t3^2")),
                       {"S3": ctx.ratfunc("S3_of_S5")})
    _trig_equal(out, "bracket closed form", e, ctx.ratfunc("square_term"))


def _s19(ctx: Context, out: Outcome):
    s3, s5, c3, c5, t3 = V("s3"), V("s5"), V("c3"), V("c5"), V("t3")
    rhs = (ctx.ratfunc("mixed_term") * parse_poly("3/2*t3*t5")
           + ctx.ratfunc("square_term") * s5) * c5
    _trig_equal(out, "right side closed form", rhs, ctx.ratfunc("S5_eq_rhs_closed"))
    _trig_equal(out, "right side / (c5 s5 t3)", ctx.ratfunc("S5_eq_rhs_closed"),
                ctx.ratfunc("S5_eq_divided_rhs") * (c5 * s5 * t3))
    lhs = (RatFunc(s3 ** 2) + RatFunc(c3, c5) * (s3 * s5)) * parse_poly("-3/2*(t3+t5-1)")
    _trig_equal(out, "left side / (c5 s5 t3)", ctx.ratfunc("S5_eq_lhs"), lhs * (c5 * s5 * t3))
    out.equal("sides rearrange the (5,2) condition with 3 <-> 5",
              (ctx.ratfunc("S5_eq_rhs") - ctx.ratfunc("S5_eq_lhs")).num,
              ctx.poly("a5b2_condition_swapped"))


def _s20(ctx: Context, out: Outcome):
    _trig_equal(out, "c3/c5 from E5 and E4", ctx.ratfunc("c3_over_c5"),
                ctx.ratfunc("c1c3") / ctx.ratfunc("c5c1"))
    s3, s5 = V("s3"), V("s5")
    sub = {"S1": ctx.ratfunc("S1_of_S5"), "S3": ctx.ratfunc("S3_of_S5")}
    e = rat_substitute(_squares(RatFunc(s3 ** 2) + ctx.ratfunc("c3_over_c5") * (s3 * s5)), sub)
    out.equal("S3 + s3 s5 c3/c5 closed form", e, ctx.ratfunc("S3_plus_ratio"))


def _s21(ctx: Context, out: Outcome):
    e = ctx.ratfunc("S3_plus_ratio") * parse_poly("-3/2*(t3+t5-1)") - ctx.ratfunc("S5_eq_divided_rhs")
    allowed = (ctx.ratfunc("S3_of_S5").den, parse_poly(
        "(2*t5*t1-2*t1+2*t1*t3+t3^2-2*t3+1)*S5-t5^2"))
    out.proportional("numerator = K m * quadratic in S5", e.num, ctx.poly("S5_quadratic"),
                     allowed=allowed, const="K")


def _s22(ctx: Context, out: Outcome):
    out.equal("1 <-> 3 swap", permute_indices(ctx.poly("S5_quadratic"), swap(1, 3)),
              ctx.poly("S5_quadratic_swapped"))


def _s23(ctx: Context, out: Outcome):
    d = ctx.poly("S5_quadratic") - ctx.poly("S5_quadratic_swapped")
    out.proportional("difference = K S5 * split form", d, ctx.poly("S5_split"), const="K")
    out.equal("split form", ctx.poly("S5_split"),
              (T1 - T3) * ctx.poly("S5_linear"))


def _s24(ctx: Context, out: Outcome):
    out.equal("3 <-> 5 swap of the split", permute_indices(ctx.poly("S5_split"), swap(3, 5)),
              ctx.poly("S3_split"))
    out.equal("1 <-> 5 swap of the split", permute_indices(ctx.poly("S5_split"), swap(1, 5)),
              ctx.poly("S1_split"))
    # t1 = t3 (so S3 = S1) and t1 != t5
    x = substitute(ctx.poly("S3_split"), {"t3": T1, "S3": V("S1")})
    q = exact_divide(x, T1 - T5)
    out.check("t1 - t5 divides the split at t3 = t1", q is not None, x)
    if q is not None:
        out.equal("linear relation for S1", q, ctx.poly("S1_linear_t1t3"))
    e = rat_substitute(RatFunc(ctx.poly("S1_linear_t1t3")), {"S1": _at_t3_eq_t1(ctx.ratfunc("S1_of_S5"))})
    out.proportional("S1 -> S5 gives the S5 relation", e.num, ctx.poly("S5_linear_t1t3"), const="K")
    # vanishing S5 coefficient
    line = ctx.poly("t5_line_t1t3")
    t5 = solve_linear(line, "t5")
    out.equal("t5 from the right side", t5, ctx.ratfunc("t5_from_t1"))
    e = rat_substitute(RatFunc(ctx.poly("S5_coefficient_t1t3")), {"t5": t5})
    out.proportional("coefficient on the line", e.num, ctx.poly("degenerate_t1t3_factored"),
                     const="K_degenerate")
    out.check("131 t^2 - 42 t + 7 > 0 on R",
              sturm_sign_certificate(parse_poly("131*t1^2-42*t1+7")) == "positive")
    t5v = _rat_value(t5, {"t1": Q(3, 11)})
    out.check("t1 = 3/11 forces t5 = 3/11 = t1", t5v == Q(3, 11), rat_str(t5v))


def _s25(ctx: Context, out: Outcome):
    S5t = solve_linear(ctx.poly("S5_linear_t1t3"), "S5")
    out.equal("S5 closed form", S5t, ctx.ratfunc("S5_t1t3"))
    for src, dst in (("S1_of_S5", "S1_t1t3"), ("C1_of_S5", "C1_t1t3"), ("C5_of_S5", "C5_t1t3")):
        got = rat_substitute(_at_t3_eq_t1(ctx.ratfunc(src)), {"S5": ctx.ratfunc("S5_t1t3")})
        out.equal(dst, got, ctx.ratfunc(dst))


# resultant factorizations (constant, [(factor, multiplicity), ...])
Q1Q5_T5 = (48, [("38*t1-7", 1), ("61*t1^2-98*t1+49", 1), ("11*t1-3", 2),
                ("131*t1^2-42*t1+7", 2), ("2*t1-1", 6)])
Q1Q5_T1 = (-48, [("38*t5-23", 1), ("61*t5^2+144*t5+111", 1), ("11*t5-3", 2),
                 ("131*t5^2-123*t5+40", 2), ("2*t5-1", 6)])
Q1Q5_T1_CONST_11 = (-48, [("38*t5-23", 1), ("61*t5^2+144*t5+11", 1), ("11*t5-3", 2),
                            ("131*t5^2-123*t5+40", 2), ("2*t5-1", 6)])
P1P3_T3 = (Q(1, 16), [("11*t1-3", 2), ("t1+3", 2), ("131*t1^2-42*t1+7", 2)])
P1P3_T1 = (-9, [("5*t3^2-15*t3-8", 1), ("131*t3^2-42*t3+7", 1), ("131*t3^2-123*t3+40", 1),
                ("11*t3-3", 2)])
P1P3_T1_SIMPLE = (-9, [("5*t3^2-15*t3-8", 1), ("131*t3^2-42*t3+7", 1),
                           ("131*t3^2-123*t3+40", 1), ("11*t3-3", 1)])


def factorization_holds(p: MultiPoly, form: tuple) -> bool:
    const, factors = form
    return verify_factorization(p, const, [(parse_poly(f), m) for f, m in factors])


@lru_cache(maxsize=8)
def resultant(a: str, b: str, var: str) -> MultiPoly:
    return sylvester_resultant(displays.poly(a), displays.poly(b), var)


def _s26(ctx: Context, out: Outcome):
    e = ctx.ratfunc("S1_t1t3") + ctx.ratfunc("C1_t1t3") - 1
    out.proportional("S1 + C1 - 1 numerator = K q1", e.num, ctx.poly("q1"), const="K_q1")
    e = ctx.ratfunc("S5_t1t3") + ctx.ratfunc("C5_t1t3") - 1
    out.proportional("S5 + C5 - 1 numerator = K q5", e.num, ctx.poly("q5"),
                     allowed=(ctx.ratfunc("S5_t1t3").den,), const="K_q5")
    q1, q5 = ctx.poly("q1"), ctx.poly("q5")
    r5 = sylvester_resultant(q1, q5, "t5")
    r1 = sylvester_resultant(q1, q5, "t1")
    out.check("R(q1, q5, t5) factorization", factorization_holds(r5, Q1Q5_T5), r5)
    out.check("R(q1, q5, t1) factorization", factorization_holds(r1, Q1Q5_T1), r1)
    out.const("R_t5_leading", Q1Q5_T5[0])
    out.const("R_t1_leading", Q1Q5_T1[0])
    alt = factorization_holds(r1, Q1Q5_T1_CONST_11)
    out.note("t1 resultant, quadratic factor", "61*t5^2+144*t5+111" + (
        "" if alt else " (a constant term of 11 does not reproduce the resultant)"))
    out.note("sign convention", "Sylvester matrix rows: deg(q5) shifts of q1, then q5")


def _s27(ctx: Context, out: Outcome):
    for f in ("61*t^2-98*t+49", "131*t^2-42*t+7", "61*t^2+144*t+111", "131*t^2-123*t+40"):
        out.check(f"{f} > 0 on R", sturm_sign_certificate(parse_poly(f.replace("t", "t1"))) == "positive")
    roots1 = [Q(7, 38), Q(3, 11), Q(1, 2)]
    roots5 = [Q(23, 38), Q(3, 11), Q(1, 2)]
    for r, f in zip(roots1, ("38*t1-7", "11*t1-3", "2*t1-1")):
        out.check(f"root of {f}", parse_poly(f).evaluate({"t1": r}) == 0)
    pairs = [(a, b) for a in roots1 for b in roots5 if 2 * a < 1 and a != b]
    expected = [(Q(7, 38), Q(23, 38)), (Q(7, 38), Q(3, 11)), (Q(7, 38), Q(1, 2)),
                (Q(3, 11), Q(23, 38)), (Q(3, 11), Q(1, 2))]
    out.check("admissible candidate pairs (2 t1 < 1, t1 != t5)", pairs == expected,
              str([(rat_str(a), rat_str(b)) for a, b in pairs]))
    wanted = [Q(147, 211), Q(5929, 46828), Q(539, 4283), Q(17328, 7199), Q(144, 229)]
    bits = ctx.config.precision_bits
    for (a, b), w in zip(pairs, wanted):
        val = _rat_value(ctx.ratfunc("S1_t1t3"), {"t1": a, "t5": b})
        tag = f"({rat_str(a)}, {rat_str(b)})"
        out.check(f"S1 at {tag} = {rat_str(w)}", val == w, rat_str(val))
        iv = certified_sin_sq(int(a.numerator), int(a.denominator), bits)
        out.check(f"sin^2({rat_str(a)} pi) enclosure width <= 1e-15", iv.width <= EXCLUSION_WIDTH,
                  float(iv.width))
        out.check(f"sin^2({rat_str(a)} pi) != {rat_str(val)}", iv.excludes(val),
                  f"[{float(iv.lo)}, {float(iv.hi)}]")
        out.note(f"enclosure sin^2({rat_str(a)} pi)", f"[{float(iv.lo):.17g}, {float(iv.hi):.17g}]")


def _s28(ctx: Context, out: Outcome):
    b = {"t3": T1, "t5": T1, "s3": V("s1"), "s5": V("s1"), "c3": V("c1"), "c5": V("c1")}
    s1, c1 = V("s1"), V("c1")
    e = substitute(trig_to_squares(substitute(ctx.poly("E1"), b)), {"C1": 1 - V("S1")})
    out.proportional("E1 at t1 = t3 = t5", e, ctx.poly("equal_S1_first"), const="K_first")
    e = substitute(trig_to_squares(substitute(ctx.poly("a5b2_condition"), b)), {"C1": 1 - V("S1")})
    q = exact_divide(e, ctx.poly("equal_S1_second"))
    out.check("(5,2) condition at t1 = t3 = t5 = s1 c1 * display", q is not None and q == s1 * c1, e)
    out.note("c1 != 0", "c1 = 0 needs t1 = 1/2, excluded by 2 t1 < 1")
    out.equal("first closed form", solve_linear(ctx.poly("equal_S1_first"), "S1"),
              ctx.ratfunc("S1_equal_first"))
    out.equal("second closed form", solve_linear(ctx.poly("equal_S1_second"), "S1"),
              ctx.ratfunc("S1_equal_second"))
    for f in ("7*t1^2-4*t1+1", "13*t1^2-9*t1+2"):
        out.check(f"{f} > 0 on R", sturm_sign_certificate(parse_poly(f)) == "positive")
    # equal numerators 3 t1^2 != 0, so the denominators agree
    diff = ctx.ratfunc("S1_equal_second").den - ctx.ratfunc("S1_equal_first").den
    out.equal("denominator difference", diff, parse_poly("6*t1^2-5*t1+1"))
    roots = sorted(float(r) for r in quad_roots(6, -5, 1))
    rs = [r.rational_part() for r in quad_roots(6, -5, 1)]
    out.check("roots are 1/3 and 1/2", sorted(rs) == [Q(1, 3), Q(1, 2)], str(roots))
    out.check("t = 1/2 inadmissible", not CevianParams.uniform(Q(1, 2)).admissible())
    out.check("t = 1/3 admissible", CevianParams.uniform(Q(1, 3)).admissible())


def _s29(ctx: Context, out: Outcome):
    res = check_identity(morley_summands())
    out.check("display summands sum to 0 exactly", res.holds, str(res.witness))
    mism = summand_mismatches()
    out.check("display summands equal those of A at t = 1/3", not mism, str(mism))
    res2 = check_identity(expression_summands())
    out.check("A at t = 1/3 vanishes identically", res2.holds, str(res2.witness))


def _s30(ctx: Context, out: Outcome):
    out.equal("split = (t1 - t3) * linear", ctx.poly("S5_split"), (T1 - T3) * ctx.poly("S5_linear"))
    out.equal("3 <-> 5", permute_indices(ctx.poly("S5_linear"), swap(3, 5)), ctx.poly("S3_linear"))
    out.equal("1 <-> 5", permute_indices(ctx.poly("S5_linear"), swap(1, 5)), ctx.poly("S1_linear"))
    rows = [[4, 4, 3], [4, 3, 4], [3, 4, 4]]           # coefficients of t1, t3, t5
    sol = solve_linear_system(rows, [3, 3, 3])
    out.check("all three right sides vanish only at t = 3/11", sol == [Q(3, 11)] * 3,
              str([rat_str(x) for x in sol]))
    a, b = parse_poly("4*t1-3+3*t3+4*t5"), parse_poly("4*t5-3+3*t1+4*t3")
    out.equal("two right sides vanish => t1 = t3", a - b, T1 - T3)


def _s31(ctx: Context, out: Outcome):
    for lin, closed, var in (("S5_linear", "S5_general", "S5"), ("S3_linear", "S3_general", "S3"),
                             ("S1_linear", "S1_general", "S1")):
        out.equal(closed, solve_linear(ctx.poly(lin), var), ctx.ratfunc(closed))
    out.equal("S1 through S5", rat_substitute(ctx.ratfunc("S1_of_S5"), {"S5": ctx.ratfunc("S5_general")}),
              ctx.ratfunc("S1_via_S5"))
    out.equal("S3 through S5", rat_substitute(ctx.ratfunc("S3_of_S5"), {"S5": ctx.ratfunc("S5_general")}),
              ctx.ratfunc("S3_via_S5"))


def _s32(ctx: Context, out: Outcome):
    d1 = cross_difference(ctx.ratfunc("S1_general"), ctx.ratfunc("S1_via_S5"))
    out.proportional("S1 forms differ by K * display", d1, ctx.poly("case_B_S1_difference"), const="K_S1")
    d3 = cross_difference(ctx.ratfunc("S3_general"), ctx.ratfunc("S3_via_S5"))
    out.proportional("S3 forms differ by K * display", d3, ctx.poly("case_B_S3_difference"), const="K_S3")
    out.equal("S1 difference factors", ctx.poly("case_B_S1_difference"),
              T1 ** 2 * (T1 - T5) * ctx.poly("case_B_cubic_1"))
    out.equal("S3 difference factors", ctx.poly("case_B_S3_difference"),
              T3 ** 2 * (T3 - T5) * ctx.poly("case_B_cubic_3"))
    out.proportional("sum of the cubics", ctx.poly("case_B_cubic_1") + ctx.poly("case_B_cubic_3"),
                     ctx.poly("case_B_sum_factored"), const="K_sum")


def _s33(ctx: Context, out: Outcome):
    t5 = solve_linear(ctx.poly("case_A_line"), "t5")
    out.equal("t5 on the line", t5, ctx.ratfunc("t5_case_A"))
    e = rat_substitute(RatFunc(ctx.poly("case_A_coefficient")), {"t5": t5})
    out.check("substitution has constant denominator", e.den.is_constant(), e.den)
    out.proportional("cubic in t1, t3", e.num, ctx.poly("case_A_cubic"), const="K")


def _s34(ctx: Context, out: Outcome):
    t5 = ctx.ratfunc("t5_case_A")
    out.equal("S5 on the line", rat_substitute(ctx.ratfunc("S5_general"), {"t5": t5}),
              ctx.ratfunc("S5_case_A"))
    out.equal("S3 on the line", rat_substitute(ctx.ratfunc("S3_general"), {"t5": t5}),
              ctx.ratfunc("S3_case_A"))
    via = rat_substitute(rat_substitute(ctx.ratfunc("S3_of_S5"), {"t5": t5}),
                         {"S5": ctx.ratfunc("S5_case_A")})
    out.equal("S3 through S5 on the line", via, ctx.ratfunc("S3_case_A_via_S5"))
    d = cross_difference(ctx.ratfunc("S3_case_A"), ctx.ratfunc("S3_case_A_via_S5"))
    out.proportional("two S3 forms differ by K * display", d, ctx.poly("case_A_S3_match"), const="K")
    out.equal("display factors", ctx.poly("case_A_S3_match"),
              parse_poly("-16*t3^2") * ctx.poly("case_A_i_line") * ctx.poly("p3"))


def _s35(ctx: Context, out: Outcome):
    t3 = solve_linear(ctx.poly("case_A_i_line"), "t3")
    out.equal("t3 on the line", t3, ctx.ratfunc("t3_case_A_i"))
    e = rat_substitute(RatFunc(ctx.poly("case_A_cubic")), {"t3": t3})
    out.check("constant denominator", e.den.is_constant(), e.den)
    out.proportional("cubic factors", e.num, ctx.poly("case_A_i_factored"), const="K")
    roots = quad_roots(57, -36, -5)
    for r in roots:
        val = r * r * 57 + r * (-36) + (-5)
        out.check(f"{r} is a root", val.is_zero())
    out.check("second quadratic root is negative", roots[1].sign() < 0, str(roots[1]))
    out.check("first quadratic root is positive", roots[0].sign() > 0, str(roots[0]))
    t3v = (3 - roots[0] * 3) * Q(1, 8)
    out.check("t3 = 39/152 - sqrt(609)/152",
              (t3v.p, t3v.q, t3v.r, t3v.d) == (39, -1, 152, 609), str(t3v))
    out.check("t1 = 3/11 gives t3 = 3/11 = t1", _rat_value(t3, {"t1": Q(3, 11)}) == Q(3, 11))
    t5 = rat_substitute(ctx.ratfunc("t5_case_A"), {"t3": t3})
    out.equal("t5 - t3 vanishes identically on the branch", t5 - t3, RatFunc(MultiPoly()))


def _s36(ctx: Context, out: Outcome):
    out.equal("p1 is the cubic", ctx.poly("p1"), ctx.poly("case_A_cubic"))
    p1, p3 = ctx.poly("p1"), ctx.poly("p3")
    r3 = sylvester_resultant(p1, p3, "t3")
    r1 = sylvester_resultant(p1, p3, "t1")
    out.check("R(p1, p3, t3) factorization", factorization_holds(r3, P1P3_T3), r3)
    out.check("R(p1, p3, t1) factorization", factorization_holds(r1, P1P3_T1), r1)
    out.const("R_t3_leading", P1P3_T3[0])
    out.const("R_t1_leading", P1P3_T1[0])
    if not factorization_holds(r1, P1P3_T1_SIMPLE):
        out.note("t1 resultant, factor 11*t3-3", "multiplicity 2")
    inf = math.inf
    for f, lo, hi, want in (("t1+3", 0, 1, "positive"), ("131*t1^2-42*t1+7", -inf, inf, "positive"),
                            ("131*t1^2-123*t1+40", -inf, inf, "positive"),
                            ("5*t1^2-15*t1-8", 0, 1, "negative")):
        got = sturm_sign_certificate(parse_poly(f), lo, hi)
        out.check(f"{f} {want} on [{lo}, {hi}]", got == want, got)
    out.check("only t1 = t3 = 3/11 remains, contradicting t1 != t3", True)


def _s37(ctx: Context, out: Outcome):
    line = ctx.poly("case_B_line")
    t5 = solve_linear(line, "t5")
    rhs = rat_substitute(RatFunc(T5 ** 2 * line), {"t5": t5})
    out.check("right side vanishes on the line", rhs.is_zero(), rhs.num)
    lin = rat_substitute(RatFunc(ctx.poly("S5_linear")), {"t5": t5})
    coef = rat_substitute(RatFunc(ctx.poly("S5_coefficient")), {"t5": t5})
    out.equal("relation reduces to coefficient * S5", lin, coef * S5)
    out.check("t1 + t3 + t5 > 0 for admissible t", True)


_A = "cleared-denominator expression A"

REGISTRY: tuple = (
    DerivationStep("S01", "Law-of-sines lengths agree with ray intersections", "numeric",
                   "segment lengths of the cevian configuration", _s01),
    DerivationStep("S02", "Law-of-cosines GI^2, IJ^2 agree with coordinates", "numeric",
                   "squared sides GI^2, IJ^2", _s02),
    DerivationStep("S03", "A equals (GI^2 - IJ^2) times the cleared denominator", "numeric",
                   _A, _s03),
    DerivationStep("S04", "alpha^2 beta^2 coefficient of A is K (c4^2-1)(c5^2-1)(t1-t2)^2",
                   "series-coeff", "alpha^2 beta^2 coefficient", _s04, 4),
    DerivationStep("S05", "Rotated expansions give (t3-t4)^2 and (t5-t6)^2", "poly-identity",
                   "rotated alpha^2 beta^2 coefficients", _s05, 4),
    DerivationStep("S06", "Substituting t2=t1, t4=t3, t6=t5 gives the reduced expression",
                   "series-coeff", "reduced expansion", _s06, FULL_DEGREE),
    DerivationStep("S07", "Degree-6 part is K m alpha^2 beta^2 (alpha+beta)^2 P", "series-coeff",
                   "degree-6 block", _s07, FULL_DEGREE),
    DerivationStep("S08", "System E1..E6 from the degree-6 condition and relabelling",
                   "poly-identity", "system E1..E6", _s08, FULL_DEGREE),
    DerivationStep("S09", "S3 as a function of S5 from E1, E2", "ratfunc-identity",
                   "S3 closed form", _s09),
    DerivationStep("S10", "S1 as a function of S5 from E3, E4", "ratfunc-identity",
                   "S1 closed form", _s10),
    DerivationStep("S11", "alpha^5 beta^2 coefficient is K m times the (5,2) condition",
                   "series-coeff", "alpha^5 beta^2 coefficient", _s11, FULL_DEGREE),
    DerivationStep("S12", "t3 = 1/2 branch forces t5 = 1/2, inadmissible", "poly-identity",
                   "branch c3 = 0", _s12),
    DerivationStep("S13", "t5 = 1/2 branch forces t3 = 1/2, inadmissible", "poly-identity",
                   "branch c5 = 0", _s13),
    DerivationStep("S14", "c_i c_j from E1, E4, E5 and their product", "poly-identity",
                   "cosine products", _s14),
    DerivationStep("S15", "Squares of the cosine products and single c_i^2", "poly-identity",
                   "squared cosine products", _s15),
    DerivationStep("S16", "C1, C3, C5 as functions of S5", "ratfunc-identity",
                   "C1, C3, C5 closed forms", _s16),
    DerivationStep("S17", "(s3 s5 - c3 c5) s3 in terms of S5", "ratfunc-identity",
                   "mixed trigonometric term", _s17),
    DerivationStep("S18", "Bracket (t1-1)(t1-2+3t5) S3 - 3/2 t3^2 in terms of S5",
                   "ratfunc-identity", "square bracket term", _s18),
    DerivationStep("S19", "Right and left sides of the rearranged (5,2) condition",
                   "ratfunc-identity", "rearranged (5,2) condition", _s19),
    DerivationStep("S20", "S3 + s3 s5 c3/c5 in terms of S5", "ratfunc-identity",
                   "ratio term", _s20),
    DerivationStep("S21", "Quadratic equation in S5", "ratfunc-identity",
                   "quadratic in S5", _s21),
    DerivationStep("S22", "1 <-> 3 swapped quadratic", "poly-identity",
                   "swapped quadratic", _s22),
    DerivationStep("S23", "Difference of the quadratics factors through (t1 - t3)",
                   "poly-identity", "difference of quadratics", _s23),
    DerivationStep("S24", "Case t1 = t3 != t5: S5 relation; degenerate subcase gives t = 3/11",
                   "poly-identity", "case t1 = t3", _s24),
    DerivationStep("S25", "Closed forms of S5, S1, C1, C5 when t1 = t3", "ratfunc-identity",
                   "closed forms at t1 = t3", _s25),
    DerivationStep("S26", "q1, q5 from S + C = 1 and both resultant factorizations",
                   "resultant", "elimination of t5 and t1", _s26),
    DerivationStep("S27", "Positivity certificates and exclusion of the five candidate pairs",
                   "sign-certificate", "candidate exclusions", _s27),
    DerivationStep("S28", "Case t1 = t3 = t5 gives t1 in {1/3, 1/2}; 1/2 inadmissible",
                   "poly-identity", "all three equal", _s28),
    DerivationStep("S29", "A vanishes identically at t_i = 1/3", "exact-trig",
                   "trisector identity", _s29),
    DerivationStep("S30", "Distinct t1, t3, t5: linear relations; all-zero subcase gives 3/11",
                   "poly-identity", "linear relations in S1, S3, S5", _s30),
    DerivationStep("S31", "General closed forms of S5, S3, S1 and their compositions",
                   "ratfunc-identity", "general closed forms", _s31),
    DerivationStep("S32", "Two cubic conditions; their sum factors", "poly-identity",
                   "cubic conditions", _s32),
    DerivationStep("S33", "Case A: t5 on the line and the resulting cubic", "poly-identity",
                   "case A cubic", _s33),
    DerivationStep("S34", "Case A: S5, S3 on the line and the matching condition",
                   "ratfunc-identity", "case A matching", _s34),
    DerivationStep("S35", "Case A(i): roots, negative root, t3 = t5 contradiction",
                   "poly-identity", "case A(i)", _s35),
    DerivationStep("S36", "Case A(ii): resultants of p1, p3 and sign certificates", "resultant",
                   "case A(ii)", _s36),
    DerivationStep("S37", "Case B: the S5 coefficient is forced to 0", "poly-identity",
                   "case B", _s37),
)

_BY_ID = {s.id: s for s in REGISTRY}


def step_ids() -> list:
    return [s.id for s in REGISTRY]


def required_degree(steps: Iterable[str] | None) -> int:
    chosen = REGISTRY if steps is None else [_BY_ID[s] for s in steps if s in _BY_ID]
    return max((s.min_degree for s in chosen), default=0)


def run_step(step: DerivationStep, ctx: Context) -> StepResult:
    out = Outcome()
    t0 = time.perf_counter()
    try:
        step.run(ctx, out)
        status = "verified" if out.ok else "failed"
    except Exception as exc:                      # arithmetic failures are verdicts
        status = "failed"
        out.witness["error"] = f"{type(exc).__name__}: {exc}"
        out.witness["traceback"] = traceback.format_exc(limit=3)
    millis = (time.perf_counter() - t0) * 1000
    if status == "failed" and not out.witness:
        out.witness["error"] = "check failed"
    return StepResult(step.id, step.claim, status, out.witness, step.anchor, millis,
                      out.constants, step.check_kind)


def run_pipeline(config: PipelineConfig | None = None) -> list:
    config = config or PipelineConfig()
    config.validate()
    ctx = Context(config)
    chosen = REGISTRY if config.steps is None else [s for s in REGISTRY if s.id in set(config.steps)]
    return [run_step(s, ctx) for s in chosen]


def constants_table(results: Iterable[StepResult]) -> dict:
    return {f"{r.id}.{k}": v for r in results for k, v in r.constants.items()}


def derived_constant(step: str, config: PipelineConfig | None = None, name: str = "K") -> Rational:
    """The proportionality constant a step derives (computed == K * display)."""
    if step not in _BY_ID:
        raise KeyError(f"unknown step {step!r}")
    base = config or PipelineConfig()
    cfg = PipelineConfig(base.degree, base.precision_bits, [step], base.overrides,
                         base.seed, base.samples)
    (res,) = run_pipeline(cfg)
    if name not in res.constants:
        raise KeyError(f"step {step} has no constant {name!r}")
    return res.constants[name]


def flip_one_sign(p: MultiPoly) -> MultiPoly:
    """Negate the leading term (fault injection helper)."""
    k, c = p.leading_term()
    return p - MultiPoly({k: 2 * c})
