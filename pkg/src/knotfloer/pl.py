"""Exact piecewise-linear functions with rational breakpoints."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Line = tuple[Fraction, Fraction]  # (intercept, slope)


def frac(x) -> Fraction:
    """Parse ``"p/q"``, ints or Fractions into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an exact rational")
    return Fraction(x)


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class PLFunction:
    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    verified: bool = True

    def __post_init__(self):
        if len(self.breakpoints) != len(self.values) or not self.breakpoints:
            raise ValueError("breakpoints and values must be nonempty and of equal length")
        if any(a >= b for a, b in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")

    @classmethod
    def from_points(cls, points: Iterable[tuple], verified: bool = True) -> "PLFunction":
        pts = sorted((frac(t), frac(v)) for t, v in points)
        return cls(tuple(t for t, _ in pts), tuple(v for _, v in pts), verified).simplified()

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return self.breakpoints[0], self.breakpoints[-1]

    def __call__(self, t) -> Fraction:
        t = frac(t)
        bp = self.breakpoints
        if t < bp[0] or t > bp[-1]:
            raise ValueError(f"t = {t} outside the domain {bp[0]}..{bp[-1]}")
        k = bisect_left(bp, t)
        if bp[k] == t:
            return self.values[k]
        t0, t1 = bp[k - 1], bp[k]
        v0, v1 = self.values[k - 1], self.values[k]
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0)

    def slopes(self) -> list[Fraction]:
        bp, v = self.breakpoints, self.values
        return [(v[k + 1] - v[k]) / (bp[k + 1] - bp[k]) for k in range(len(bp) - 1)]

    def simplified(self) -> "PLFunction":
        """Drop interior breakpoints where the slope does not change."""
        bp, v = list(self.breakpoints), list(self.values)
        if len(bp) <= 2:
            return self
        keep_t, keep_v = [bp[0]], [v[0]]
        for k in range(1, len(bp) - 1):
            left = (v[k] - keep_v[-1]) / (bp[k] - keep_t[-1])
            right = (v[k + 1] - v[k]) / (bp[k + 1] - bp[k])
            if left != right:
                keep_t.append(bp[k])
                keep_v.append(v[k])
        keep_t.append(bp[-1])
        keep_v.append(v[-1])
        return PLFunction(tuple(keep_t), tuple(keep_v), self.verified)

    def slope_right(self, t) -> Fraction:
        t = frac(t)
        bp = self.breakpoints
        k = bisect_left(bp, t)
        if k < len(bp) and bp[k] == t:
            k += 1
        if k >= len(bp):
            raise ValueError("no segment to the right")
        return self.slopes()[k - 1]

    def slope_left(self, t) -> Fraction:
        t = frac(t)
        k = bisect_left(self.breakpoints, t)
        if k == 0:
            raise ValueError("no segment to the left")
        return self.slopes()[k - 1]

    def jump(self, t0) -> Fraction:
        """Right derivative minus left derivative at an interior point."""
        return self.slope_right(t0) - self.slope_left(t0)

    def kinks(self) -> list[Fraction]:
        """Interior breakpoints (slope changes) after simplification."""
        return list(self.simplified().breakpoints[1:-1])

    def minimum(self, other: "PLFunction") -> "PLFunction":
        """Exact pointwise minimum over the common domain."""
        lo = max(self.domain[0], other.domain[0])
        hi = min(self.domain[1], other.domain[1])
        ts = sorted({t for t in self.breakpoints + other.breakpoints if lo <= t <= hi} | {lo, hi})
        pts = []
        for a, b in zip(ts, ts[1:]):
            fa, fb, ga, gb = self(a), self(b), other(a), other(b)
            pts.append((a, min(fa, ga)))
            da, db = fa - ga, fb - gb
            if da * db < 0:
                x = a + (b - a) * da / (da - db)
                pts.append((x, self(x)))
        pts.append((hi, min(self(hi), other(hi))))
        return PLFunction.from_points(pts, self.verified and other.verified)

    def restricted(self, lo, hi) -> "PLFunction":
        lo, hi = frac(lo), frac(hi)
        ts = sorted({lo, hi} | {t for t in self.breakpoints if lo < t < hi})
        return PLFunction.from_points([(t, self(t)) for t in ts], self.verified)

    def scaled(self, k) -> "PLFunction":
        return PLFunction(self.breakpoints, tuple(k * v for v in self.values), self.verified)

    def to_dict(self) -> dict:
        return {
            "breakpoints": [{"t": fmt(t), "v": fmt(v)} for t, v in zip(self.breakpoints, self.values)],
            "verified": self.verified,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PLFunction":
        pts = [(frac(p["t"]), frac(p["v"])) for p in data["breakpoints"]]
        return cls(tuple(t for t, _ in pts), tuple(v for _, v in pts), bool(data["verified"]))


def upper_envelope(lines: Sequence[Line], lo: Fraction, hi: Fraction) -> PLFunction:
    """max of the given lines on [lo, hi], exactly."""
    lines = sorted(set(lines), key=lambda l: (l[1], l[0]))
    ts = {lo, hi}
    for a in range(len(lines)):
        for b in range(a + 1, len(lines)):
            (c1, s1), (c2, s2) = lines[a], lines[b]
            if s1 != s2:
                x = (c2 - c1) / (s1 - s2)
                if lo < x < hi:
                    ts.add(x)
    pts = [(t, max(c + s * t for c, s in lines)) for t in sorted(ts)]
    return PLFunction.from_points(pts)
