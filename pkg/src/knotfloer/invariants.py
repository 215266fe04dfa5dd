"""Concordance invariants of knot-like complexes: tau, Upsilon, V_k, nu+.

Every invariant here has the same shape: take the cycles representing a
one-dimensional homology class (the affine space ``z0 + B``), and minimise
over them the largest "level" of a monomial in the cycle, for some level
function on monomials.  ``_min_max_level`` solves that exactly with a single
Gaussian elimination once coordinates are sorted by level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import gf2
from .cfk import (
    Complex,
    Monomial,
    _in_slice,
    dual,
    homology_class_rep,
    require_knotlike,
    tensor,
)
from .errors import ComputationCapError, ComputationError, NotKnotLikeError
from .pl import PLFunction, frac, upper_envelope

TWO = Fraction(2)
DEFAULT_ENUMERATION_CAP = 20  # log2 of the representative count


@dataclass(frozen=True)
class ClassData:
    """A one-dimensional homology class: coordinates, one cycle, boundary span."""

    monos: tuple[Monomial, ...]
    cycle: int
    bounds: tuple[int, ...]


def _class_data(c: Complex, keep=None) -> ClassData:
    monos, z0, bounds = homology_class_rep(c, 0, keep)
    return ClassData(tuple(monos), z0, tuple(bounds))


def _memo(c: Complex, key: str, compute):
    # cached on the (immutable) complex itself so large complexes free their data with it
    cache = c.__dict__.setdefault("_invariant_cache", {})
    if key not in cache:
        cache[key] = compute()
    return cache[key]


def _knot_class(c: Complex) -> ClassData:
    require_knotlike(c)
    return _memo(c, "knot", lambda: _class_data(c))


def _slice_class(c: Complex) -> ClassData:
    require_knotlike(c)
    return _memo(c, "slice", lambda: _class_data(c, _in_slice))


def _min_max_level(data: ClassData, levels: list) -> tuple:
    """Least achievable max level over ``cycle + span(bounds)``, and a cycle attaining it."""
    order = sorted(range(len(levels)), key=lambda k: (levels[k], k))
    pos = {old: new for new, old in enumerate(order)}

    def remap(v: int) -> int:
        out = 0
        for k in gf2.support(v):
            out |= 1 << pos[k]
        return out

    rem = gf2.min_max_representative(remap(data.cycle), (remap(b) for b in data.bounds))
    if not rem:
        raise ComputationError("class representative reduced to zero; the class is trivial")
    top = order[rem.bit_length() - 1]
    cycle = 0
    for k in gf2.support(rem):
        cycle |= 1 << order[k]
    return levels[top], cycle


def _eff(c: Complex, mono: Monomial) -> tuple[int, int]:
    return c.alg(mono), c.alex(mono)


def line_level(i: int, j: int, t: Fraction) -> Fraction:
    """Level of a point (i, j) for the slope line of Upsilon at t."""
    return (1 - t / 2) * i + (t / 2) * j


# tau -----------------------------------------------------------------

def tau(c: Complex) -> int:
    data = _slice_class(c)
    levels = [c.alex(m) for m in data.monos]
    return _min_max_level(data, levels)[0]


# Upsilon ---------------------------------------------------------------

def _check_t(t) -> Fraction:
    t = frac(t)
    if not 0 <= t <= 2:
        raise ValueError(f"t = {t} is outside [0, 2]")
    return t


def _upsilon_raw(c: Complex, t: Fraction) -> Fraction:
    data = _knot_class(c)
    levels = [line_level(*_eff(c, m), t) for m in data.monos]
    return -2 * _min_max_level(data, levels)[0]


def upsilon_at(c: Complex, t) -> Fraction:
    t = _check_t(t)
    if t == 0:
        _knot_class(c)
        return Fraction(0)
    return _upsilon_raw(c, t)


def level_lines(c: Complex) -> list[tuple[Fraction, Fraction]]:
    """Distinct (intercept, slope) of t -> level of each grading-0 monomial."""
    data = _knot_class(c)
    lines = set()
    for m in data.monos:
        i, j = _eff(c, m)
        lines.add((Fraction(i), Fraction(j - i, 2)))
    return sorted(lines, key=lambda l: (l[1], l[0]))


def candidate_breakpoints(c: Complex) -> tuple[Fraction, ...]:
    """Every t in [0, 2] where Upsilon could change slope, plus the endpoints.

    Upsilon/-2 is continuous and agrees with one of the level lines near
    every point, so it can only switch lines where two of them cross.
    """
    return _memo(c, "breakpoints", lambda: _crossings(level_lines(c)))


def _crossings(lines) -> tuple[Fraction, ...]:
    ts = {Fraction(0), TWO}
    for (c1, s1), (c2, s2) in itertools.combinations(lines, 2):
        if s1 != s2:
            x = (c2 - c1) / (s1 - s2)
            if 0 < x < 2:
                ts.add(x)
    return tuple(sorted(ts))


class _Scan:
    """Memoised Upsilon evaluation over the candidate breakpoints."""

    def __init__(self, c: Complex):
        self.c = c
        self.ts = candidate_breakpoints(c)
        self._vals: dict[Fraction, Fraction] = {}

    def value(self, t: Fraction) -> Fraction:
        if t not in self._vals:
            self._vals[t] = upsilon_at(self.c, t)
        return self._vals[t]

    def neighbours(self, t: Fraction) -> tuple[Optional[Fraction], Optional[Fraction]]:
        left = max((s for s in self.ts if s < t), default=None)
        right = min((s for s in self.ts if s > t), default=None)
        return left, right

    def pl(self, lo: Fraction, hi: Fraction) -> PLFunction:
        ts = sorted({lo, hi} | {s for s in self.ts if lo < s < hi})
        return PLFunction.from_points([(s, self.value(s)) for s in ts], verified=True)


def upsilon_pl(
    c: Complex,
    mode: str = "exact",
    *,
    method: str = "scan",
    qmax: int = 64,
    cap: int = DEFAULT_ENUMERATION_CAP,
    interval: tuple = (0, 2),
) -> PLFunction:
    """Upsilon as an exact piecewise-linear function.

    ``mode="exact"`` with ``method="scan"`` evaluates at every candidate
    breakpoint; ``method="enumerate"`` instead builds the envelope of every
    representative cycle and raises :class:`ComputationCapError` past
    ``2**cap`` representatives.  ``mode="sampled"`` evaluates on the grid
    ``t = 2a/qmax`` with mediant refinement and is marked unverified.
    """
    lo, hi = _check_t(interval[0]), _check_t(interval[1])
    if lo >= hi:
        raise ValueError("empty interval")
    if mode == "sampled":
        return _upsilon_sampled(c, qmax, lo, hi)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    if method == "scan":
        return _Scan(c).pl(lo, hi)
    if method == "enumerate":
        return upsilon_enumerated(c, cap).restricted(lo, hi)
    raise ValueError(f"unknown method {method!r}")


def upsilon_enumerated(c: Complex, cap: int = DEFAULT_ENUMERATION_CAP) -> PLFunction:
    """-2 times the lower envelope, over all cycles in the class, of each cycle's upper envelope of level lines."""
    data = _knot_class(c)
    basis = gf2.Echelon()
    for b in data.bounds:
        basis.add(b)
    span = [vec for vec, _ in basis.pivots.values()]
    if len(span) > cap:
        raise ComputationCapError(
            f"{len(span)}-dimensional boundary space exceeds the enumeration cap 2^{cap}"
        )
    lines = []
    for m in data.monos:
        i, j = _eff(c, m)
        lines.append((Fraction(i), Fraction(j - i, 2)))
    best = None
    for bits in itertools.product((0, 1), repeat=len(span)):
        z = data.cycle
        for bit, vec in zip(bits, span):
            if bit:
                z ^= vec
        env = upper_envelope([lines[k] for k in gf2.support(z)], Fraction(0), TWO)
        best = env if best is None else best.minimum(env)
    return best.scaled(-2)


def _upsilon_sampled(c: Complex, qmax: int, lo: Fraction, hi: Fraction, rounds: int = 4) -> PLFunction:
    if qmax < 1:
        raise ValueError("qmax must be positive")
    vals: dict[Fraction, Fraction] = {}

    def ev(t):
        if t not in vals:
            vals[t] = upsilon_at(c, t)
        return vals[t]

    for a in range(qmax + 1):
        t = Fraction(2 * a, qmax)
        if lo <= t <= hi:
            ev(t)
    ev(lo)
    ev(hi)
    for _ in range(rounds):
        ts = sorted(vals)
        slopes = [(vals[b] - vals[a]) / (b - a) for a, b in zip(ts, ts[1:])]
        added = False
        for k in range(len(slopes)):
            left = slopes[k - 1] if k > 0 else slopes[k]
            right = slopes[k + 1] if k + 1 < len(slopes) else slopes[k]
            if left != slopes[k] or right != slopes[k]:
                a, b = ts[k], ts[k + 1]
                mediant = Fraction(a.numerator + b.numerator, a.denominator + b.denominator)
                if not a < mediant < b:
                    mediant = (a + b) / 2
                if mediant not in vals:
                    ev(mediant)
                    added = True
        if not added:
            break
    return PLFunction.from_points(vals.items(), verified=False)


def upsilon_jump(c: Complex, t0) -> Fraction:
    """Right minus left derivative of Upsilon at an interior t0."""
    t0 = frac(t0)
    if not 0 < t0 < 2:
        raise ValueError("jump point must lie in (0, 2)")
    scan = _Scan(c)
    if t0 not in scan.ts:
        return Fraction(0)
    left, right = scan.neighbours(t0)
    v = scan.value(t0)
    return (scan.value(right) - v) / (right - t0) - (v - scan.value(left)) / (t0 - left)


def initial_slope(c: Complex) -> Fraction:
    """Slope of the first linear piece of Upsilon."""
    scan = _Scan(c)
    t1 = scan.ts[1]
    return scan.value(t1) / t1


def first_singularity(c: Complex) -> Optional[Fraction]:
    """Smallest t > 0 where Upsilon changes slope; None if it never does."""
    scan = _Scan(c)
    ts = scan.ts
    prev = None
    for a, b in zip(ts, ts[1:]):
        slope = (scan.value(b) - scan.value(a)) / (b - a)
        if prev is not None and slope != prev:
            return a
        prev = slope
    return None


# V_k and nu+ -------------------------------------------------------------

def v_k(c: Complex, k: int) -> int:
    """V_k: least m >= 0 with U^m times the generator class carried by C{i <= 0, j <= k}.

    For a knot-like complex the homology class in grading -2m is U^m [z]
    for the grading-0 generator [z], so V_k = max(0, min over cycles z in
    the class of max over monomials of max(i, j - k)).  This equals the
    tower formulation through H_*(C{i <= 0}) whenever that homology is a
    single free tower, as it is for knot complexes.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    data = _knot_class(c)
    levels = [max(c.alg(m), c.alex(m) - k) for m in data.monos]
    return max(0, _min_max_level(data, levels)[0])


def nu_plus(c: Complex) -> int:
    data = _knot_class(c)
    bound = max((c.alex(m) - c.alg(m) for m in data.monos), default=0) + 1
    for k in range(max(bound, 0) + 1):
        if v_k(c, k) == 0:
            return k
    raise ComputationError(f"V_k did not vanish for k <= {bound}")


def d_surgery_one(c: Complex) -> int:
    """d(S^3_1(K)) = -2 V_0."""
    return -2 * v_k(c, 0)


def d_half_zero_surgery(c: Complex) -> Fraction:
    """d_{1/2}(S^3_0(K), t_0) = 1/2 + d(S^3_1(K))."""
    return Fraction(1, 2) + d_surgery_one(c)


def nu_plus_equivalent(a: Complex, b: Complex) -> bool:
    require_knotlike(a)
    require_knotlike(b)
    return v_k(tensor(a, dual(b)), 0) == 0 and v_k(tensor(dual(a), b), 0) == 0


__all__ = [
    "tau",
    "upsilon_at",
    "upsilon_pl",
    "upsilon_enumerated",
    "upsilon_jump",
    "initial_slope",
    "first_singularity",
    "candidate_breakpoints",
    "v_k",
    "nu_plus",
    "d_surgery_one",
    "d_half_zero_surgery",
    "nu_plus_equivalent",
    "NotKnotLikeError",
]
