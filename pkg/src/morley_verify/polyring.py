"""Sparse multivariate polynomials over Q in a fixed 24-variable universe.

Variables: t1..t6 (cevian fractions), s1..s6 / c1..c6 (sine and cosine of
t_i*pi), S1, S3, S5 (s_i^2) and C1, C3, C5 (c_i^2).

A monomial is packed into one Python int, BITS bits per variable, with t1 in
the most significant slot.  Multiplying monomials is integer addition, and
integer comparison of keys is lexicographic order over the variable list.
"""
from __future__ import annotations

import ast
import math
from functools import reduce
from typing import Dict, Iterable, Mapping, Sequence

import gmpy2

from .exact_arith import Q, Rational, is_rational

VAR_NAMES: tuple = (
    tuple(f"t{i}" for i in range(1, 7))
    + tuple(f"s{i}" for i in range(1, 7))
    + tuple(f"c{i}" for i in range(1, 7))
    + ("S1", "S3", "S5", "C1", "C3", "C5")
)
NVARS = len(VAR_NAMES)
VAR_INDEX: Dict[str, int] = {name: i for i, name in enumerate(VAR_NAMES)}

BITS = 16
FIELD = (1 << BITS) - 1
_SHIFT = tuple(BITS * (NVARS - 1 - i) for i in range(NVARS))
_ONE = [1 << _SHIFT[i] for i in range(NVARS)]
# guard bits: a key with any field >= 2**(BITS-1) means overflow
_GUARD = sum(1 << (s + BITS - 1) for s in _SHIFT)


class PolyError(ArithmeticError):
    pass


def pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e:
            if not 0 <= e < (1 << (BITS - 1)):
                raise PolyError(f"exponent {e} out of range")
            key |= e << _SHIFT[i]
    return key


def unpack(key: int) -> tuple:
    return tuple((key >> s) & FIELD for s in _SHIFT)


def key_degree(key: int, var: int) -> int:
    return (key >> _SHIFT[var]) & FIELD


def key_total_degree(key: int) -> int:
    total = 0
    while key:
        total += key & FIELD
        key >>= BITS
    return total


def _grlex(key: int) -> tuple:
    return (key_total_degree(key), key)


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps packed monomial -> mpq."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None, _clean: bool = False):
        if _clean:
            self.terms = terms
        else:
            self.terms = {}
            for k, c in (terms or {}).items():
                c = Q(c)
                if c:
                    self.terms[k] = c
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> MultiPoly:
        c = Q(c)
        return cls({0: c} if c else {}, _clean=True)

    @classmethod
    def var(cls, name: str, power: int = 1) -> MultiPoly:
        return cls({power * _ONE[VAR_INDEX[name]]: Q(1)}, _clean=True)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1) -> MultiPoly:
        vec = [0] * NVARS
        for name, e in exps.items():
            vec[VAR_INDEX[name]] += e
        return cls({pack(vec): Q(coeff)})

    @staticmethod
    def coerce(x) -> MultiPoly:
        if isinstance(x, MultiPoly):
            return x
        if is_rational(x):
            return MultiPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to MultiPoly")

    # -- basic queries ------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self) -> Rational:
        return self.terms.get(0, Q(0))

    def as_constant(self) -> Rational:
        if not self.is_constant():
            raise PolyError(f"not a constant: {self}")
        return self.constant_term()

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(key_total_degree(k) for k in self.terms)
        v = VAR_INDEX[var]
        return max(key_degree(k, v) for k in self.terms)

    def variables(self) -> list:
        used = 0
        for k in self.terms:
            used |= k
        return [VAR_NAMES[i] for i in range(NVARS) if (used >> _SHIFT[i]) & FIELD]

    def leading_term(self) -> tuple:
        """(key, coeff) of the lex-leading term."""
        k = max(self.terms)
        return k, self.terms[k]

    def leading_coefficient(self) -> Rational:
        return max(self.terms.items(), key=lambda kv: _grlex(kv[0]))[1]

    # -- arithmetic ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if is_rational(other):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self) -> MultiPoly:
        return MultiPoly({k: -c for k, c in self.terms.items()}, _clean=True)

    def __add__(self, other) -> MultiPoly:
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return MultiPoly(out, _clean=True)

    __radd__ = __add__

    def __sub__(self, other) -> MultiPoly:
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return MultiPoly.coerce(other) - self

    def scale(self, c) -> MultiPoly:
        c = Q(c)
        if not c:
            return MultiPoly()
        return MultiPoly({k: v * c for k, v in self.terms.items()}, _clean=True)

    def __mul__(self, other) -> MultiPoly:
        if is_rational(other):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                v = get(k)
                out[k] = ca * cb if v is None else v + ca * cb
        res = {k: v for k, v in out.items() if v}
        if res and max(res) & _GUARD:
            raise PolyError("exponent overflow")
        return MultiPoly(res, _clean=True)

    __rmul__ = __mul__

    def __truediv__(self, other) -> MultiPoly:
        if is_rational(other):
            return self.scale(1 / Q(other))
        q = exact_divide(self, MultiPoly.coerce(other))
        if q is None:
            raise PolyError("polynomial division is not exact")
        return q

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise PolyError("negative power")
        if len(self.terms) == 1:
            (k, c), = self.terms.items()
            if n and k * n & _GUARD:
                raise PolyError("exponent overflow")
            return MultiPoly({k * n: c**n}, _clean=True)
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure ----------------------------------------------------
    def coeffs_in(self, var: str) -> Dict[int, MultiPoly]:
        """Split into {degree: coefficient polynomial} with respect to var."""
        v = VAR_INDEX[var]
        shift = _SHIFT[v]
        parts: Dict[int, dict] = {}
        for k, c in self.terms.items():
            d = (k >> shift) & FIELD
            parts.setdefault(d, {})[k - (d << shift)] = c
        return {d: MultiPoly(t, _clean=True) for d, t in parts.items()}

    def content(self) -> Rational:
        """Positive rational c with self/c integral and primitive."""
        if not self.terms:
            return Q(1)
        nums = [c.numerator for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = reduce(gmpy2.gcd, nums)
        lcm = reduce(gmpy2.lcm, dens)
        return gmpy2.mpq(abs(g), lcm)

    def primitive(self) -> MultiPoly:
        """Integer-coprime multiple with positive grlex-leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(1 / c)

    def map_coeffs(self, fn) -> MultiPoly:
        return MultiPoly({k: fn(c) for k, c in self.terms.items()})

    def evaluate(self, values: Mapping[str, object]):
        """Numeric value; ``values`` must bind every variable present."""
        idx = [(VAR_INDEX[n], v) for n, v in values.items()]
        total = 0
        for k, c in self.terms.items():
            term = c
            for i, v in idx:
                e = (k >> _SHIFT[i]) & FIELD
                if e:
                    term = term * v**e
            if k and _residual(k, idx):
                raise PolyError(f"unbound variables in {self.variables()}")
            total = total + term
        return total

    def to_text(self) -> str:
        return to_text(self)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"MultiPoly({to_text(self)!r})"


def _residual(key: int, idx) -> bool:
    for i, _ in idx:
        key &= ~(FIELD << _SHIFT[i])
    return key != 0


ZERO = MultiPoly()
ONE = MultiPoly.const(1)


def V(name: str) -> MultiPoly:
    return MultiPoly.var(name)


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial op {op!r}")


# -- serialization ----------------------------------------------------

def _mono_text(key: int) -> str:
    parts = []
    for i, e in enumerate(unpack(key)):
        if e == 1:
            parts.append(VAR_NAMES[i])
        elif e:
            parts.append(f"{VAR_NAMES[i]}^{e}")
    return "*".join(parts)


def sorted_terms(p: MultiPoly) -> list:
    """Terms in descending graded-lex order."""
    return sorted(p.terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True)


def to_text(p: MultiPoly) -> str:
    """Canonical one-line serialization, e.g. ``2*t1^2*s3 - 1/2*t5``."""
    if not p.terms:
        return "0"
    out = []
    for i, (k, c) in enumerate(sorted_terms(p)):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _mono_text(k)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def parse_poly(text: str, names: Mapping[str, MultiPoly] | None = None) -> MultiPoly:
    """Parse an arithmetic expression into a MultiPoly.

    Accepts + - * / and both ``^`` and ``**`` for powers; ``/`` requires a
    constant divisor or an exact polynomial quotient.  ``names`` can bind
    extra identifiers (e.g. the formal series variables) to polynomials.
    """
    # ^ binds looser than * in Python, so it is rewritten to ** up front
    tree = ast.parse(text.replace("\n", " ").replace("^", "**"), mode="eval")
    env = dict(names or {})
    return MultiPoly.coerce(_eval_node(tree.body, env))


def _eval_node(node, env):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Q(node.value)
    if isinstance(node, ast.Name):
        if node.id in env:
            return env[node.id]
        if node.id in VAR_INDEX:
            return MultiPoly.var(node.id)
        raise PolyError(f"unknown variable {node.id!r}")
    if isinstance(node, ast.UnaryOp):
        v = _eval_node(node.operand, env)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, env)
        right = _eval_node(node.right, env)
        op = node.op
        if isinstance(op, ast.Add):
            return left + right
        if isinstance(op, ast.Sub):
            return left - right
        if isinstance(op, ast.Mult):
            return left * right
        if isinstance(op, ast.Div):
            if is_rational(left) and is_rational(right):
                return Q(left) / Q(right)
            return MultiPoly.coerce(left) / right
        if isinstance(op, ast.Pow):
            if not is_rational(right) or Q(right).denominator != 1:
                raise PolyError("exponent must be an integer literal")
            return left ** int(right)
    raise PolyError(f"unsupported syntax: {ast.dump(node)}")


# -- substitution and renaming ----------------------------------------

def substitute(p: MultiPoly, bindings: Mapping[str, object]) -> MultiPoly:
    """Ring homomorphism replacing each bound variable by a polynomial.

    A binding target may not mention any bound variable (no recursion).
    """
    if not bindings:
        return p
    targets = {name: MultiPoly.coerce(v) for name, v in bindings.items()}
    bound = set(targets)
    for name, t in targets.items():
        if name not in VAR_INDEX:
            raise PolyError(f"unknown variable {name!r}")
        clash = bound.intersection(t.variables())
        if clash:
            raise PolyError(f"recursive binding {name} -> {sorted(clash)}")
    slots = [(VAR_INDEX[n], targets[n]) for n in targets]
    bound_mask = sum(FIELD << _SHIFT[i] for i, _ in slots)

    groups: Dict[tuple, dict] = {}
    for k, c in p.terms.items():
        exps = tuple((k >> _SHIFT[i]) & FIELD for i, _ in slots)
        groups.setdefault(exps, {})[k & ~bound_mask] = c

    powers: Dict[tuple, MultiPoly] = {}

    def power(j: int, e: int) -> MultiPoly:
        key = (j, e)
        if key not in powers:
            powers[key] = slots[j][1] if e == 1 else power(j, e - 1) * slots[j][1]
        return powers[key]

    result = ZERO
    for exps, free in groups.items():
        factor = ONE
        for j, e in enumerate(exps):
            if e:
                factor = factor * power(j, e)
        result = result + MultiPoly(free, _clean=True) * factor
    return result


def rename(p: MultiPoly, mapping: Mapping[str, str]) -> MultiPoly:
    """Apply a variable permutation given as name -> name."""
    moves = [(VAR_INDEX[a], VAR_INDEX[b]) for a, b in mapping.items() if a != b]
    if sorted(a for a, _ in moves) != sorted(b for _, b in moves):
        raise PolyError("rename mapping must be a permutation of its support")
    if not moves:
        return p
    clear = sum(FIELD << _SHIFT[a] for a, _ in moves)
    out = {}
    for k, c in p.terms.items():
        nk = k & ~clear
        for a, b in moves:
            e = (k >> _SHIFT[a]) & FIELD
            if e:
                nk += e << _SHIFT[b]
        out[nk] = c
    return MultiPoly(out, _clean=True)


def index_mapping(sigma: Mapping[int, int], families: Iterable[str] = ("t", "s", "c", "S", "C")) -> dict:
    mapping = {}
    for fam in families:
        for i, j in sigma.items():
            a, b = f"{fam}{i}", f"{fam}{j}"
            if a in VAR_INDEX and b in VAR_INDEX:
                mapping[a] = b
    return mapping


def permute_indices(p: MultiPoly, sigma: Mapping[int, int]) -> MultiPoly:
    """Relabel subscripts of t, s, c, S, C simultaneously by sigma."""
    if sorted(sigma) != sorted(sigma.values()):
        raise PolyError(f"not a permutation: {dict(sigma)}")
    return rename(p, index_mapping(sigma))


def swap(i: int, j: int) -> dict:
    return {i: j, j: i}


# -- trigonometric relations ------------------------------------------

_S_IDX = [VAR_INDEX[f"s{i}"] for i in range(1, 7)]
_C_IDX = [VAR_INDEX[f"c{i}"] for i in range(1, 7)]


def pythagorean_reduce(p: MultiPoly) -> MultiPoly:
    """Rewrite s_i^2 -> 1 - c_i^2 until every s_i exponent is at most 1."""
    s_mask = sum(FIELD << _SHIFT[i] for i in _S_IDX)
    if not any(k & s_mask for k in p.terms):
        return p
    relation = {i: ONE - MultiPoly({2 * _ONE[c]: Q(1)}, _clean=True) for i, c in zip(_S_IDX, _C_IDX)}
    cache: Dict[tuple, MultiPoly] = {}
    kept: dict = {}
    result = ZERO
    groups: Dict[tuple, dict] = {}
    for k, c in p.terms.items():
        halves = tuple(((k >> _SHIFT[i]) & FIELD) // 2 for i in _S_IDX)
        if not any(halves):
            kept[k] = c
            continue
        nk = k
        for i, h in zip(_S_IDX, halves):
            nk -= (2 * h) << _SHIFT[i]
        groups.setdefault(halves, {})[nk] = c
    for halves, rest in groups.items():
        if halves not in cache:
            f = ONE
            for i, h in zip(_S_IDX, halves):
                if h:
                    f = f * relation[i] ** h
            cache[halves] = f
        result = result + MultiPoly(rest, _clean=True) * cache[halves]
    return result + MultiPoly(kept, _clean=True)


def squares_to_trig(p: MultiPoly) -> MultiPoly:
    """Replace S_i by s_i^2 and C_i by c_i^2."""
    b = {}
    for i in (1, 3, 5):
        b[f"S{i}"] = V(f"s{i}") ** 2
        b[f"C{i}"] = V(f"c{i}") ** 2
    return substitute(p, b)


def trig_to_squares(p: MultiPoly, indices: Iterable[int] = (1, 3, 5)) -> MultiPoly:
    """Rewrite s_i^(2k+r) -> S_i^k s_i^r (and likewise c_i -> C_i)."""
    pairs = []
    for i in indices:
        pairs.append((VAR_INDEX[f"s{i}"], VAR_INDEX[f"S{i}"]))
        pairs.append((VAR_INDEX[f"c{i}"], VAR_INDEX[f"C{i}"]))
    out: dict = {}
    for k, c in p.terms.items():
        nk = k
        for src, dst in pairs:
            e = (k >> _SHIFT[src]) & FIELD
            if e >= 2:
                h = e // 2
                nk += (h << _SHIFT[dst]) - ((2 * h) << _SHIFT[src])
        out[nk] = out.get(nk, 0) + c
    return MultiPoly(out)


def chebyshev_phase(kind: str, m: int, i: int) -> MultiPoly:
    """sin(m*t_i*pi) or cos(m*t_i*pi) as a polynomial in s_i, c_i."""
    re, im = _phase_power(m, i)
    if kind == "cos":
        return re
    if kind == "sin":
        return im
    raise ValueError(f"kind must be 'sin' or 'cos', got {kind!r}")


def _phase_power(m: int, i: int) -> tuple:
    # (c + i s)^m as (real, imaginary); negative m conjugates
    c, s = V(f"c{i}"), V(f"s{i}")
    sign = -1 if m < 0 else 1
    m = abs(m)
    re, im = ZERO, ZERO
    for k in range(m + 1):
        term = c ** (m - k) * s**k * math.comb(m, k)
        r = k % 4
        if r == 0:
            re = re + term
        elif r == 1:
            im = im + term
        elif r == 2:
            re = re - term
        else:
            im = im - term
    return re, im * sign


def phase_cos_sin(k0: int, ms: Mapping[int, int]) -> tuple:
    """(cos, sin) of k0*pi + sum m_i t_i pi, expanded in s_i, c_i."""
    re, im = ONE if k0 % 2 == 0 else -ONE, ZERO
    for i, m in ms.items():
        if not m:
            continue
        a, b = _phase_power(m, i)
        re, im = re * a - im * b, re * b + im * a
    return re, im


# -- division and factorization checks --------------------------------

def exact_divide(p: MultiPoly, d: MultiPoly) -> MultiPoly | None:
    """Quotient q with q*d == p, or None when d does not divide p."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    if d.is_constant():
        return p.scale(1 / d.constant_term())
    dk, dc = d.leading_term()
    dterms = list(d.terms.items())
    rem = dict(p.terms)
    quot: dict = {}
    while rem:
        rk = max(rem)
        rc = rem[rk]
        qk = rk - dk
        if qk < 0 or qk & _GUARD or _borrowed(rk, dk):
            return None
        qc = rc / dc
        quot[qk] = qc
        for k, c in dterms:
            nk = qk + k
            v = rem.get(nk, 0) - qc * c
            if v:
                rem[nk] = v
            else:
                rem.pop(nk, None)
    return MultiPoly(quot, _clean=True)


def _borrowed(a: int, b: int) -> bool:
    # True unless every exponent field of b is <= that of a
    for s in _SHIFT:
        if (b >> s) & FIELD > (a >> s) & FIELD:
            return True
    return False


def divides(d: MultiPoly, p: MultiPoly) -> bool:
    return exact_divide(p, d) is not None


def expand_factors(constant, factors: Iterable[tuple]) -> MultiPoly:
    total = MultiPoly.const(constant)
    for f, m in factors:
        total = total * MultiPoly.coerce(f) ** m
    return total


def verify_factorization(p: MultiPoly, constant, factors: Iterable[tuple]) -> bool:
    """True iff constant * prod(f**m) == p exactly."""
    return expand_factors(constant, factors) == p


def proportionality_constant(p: MultiPoly, ref: MultiPoly) -> Rational | None:
    """K with p == K*ref, or None if no such rational exists (ref != 0)."""
    if ref.is_zero():
        raise ZeroDivisionError("reference polynomial is zero")
    if p.is_zero():
        return Q(0)
    k, c = ref.leading_term()
    if k not in p.terms:
        return None
    K = p.terms[k] / c
    return K if ref.scale(K) == p else None
