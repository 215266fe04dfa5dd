"""Integer Laurent polynomials in one variable ``t``."""

from __future__ import annotations

from typing import Mapping


class LaurentError(ValueError):
    pass


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Stored as ``{exponent: coefficient}`` with no zero coefficients, so
    equal polynomials have equal representations.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        for e, a in (coeffs or {}).items():
            if a:
                c[int(e)] = int(a)
        self._c = dict(sorted(c.items()))

    @classmethod
    def const(cls, a: int) -> "LaurentPoly":
        return cls({0: a})

    @classmethod
    def monomial(cls, e: int, a: int = 1) -> "LaurentPoly":
        return cls({e: a})

    @classmethod
    def from_list(cls, coeffs, low: int = 0) -> "LaurentPoly":
        """``coeffs[k]`` is the coefficient of ``t^(low + k)``."""
        return cls({low + k: a for k, a in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self._c)
        for e, a in other._c.items():
            out[e] = out.get(e, 0) + a
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise LaurentError("negative powers are not supported")
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        return sum(a * x ** e for e, a in self._c.items())

    def at_one(self) -> int:
        return sum(self._c.values())

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    def compose_power(self, w: int) -> "LaurentPoly":
        """Substitute ``t -> t^w``."""
        if w == 0:
            raise LaurentError("compose_power needs a nonzero exponent")
        return LaurentPoly({w * e: a for e, a in self._c.items()})

    def mirror(self) -> "LaurentPoly":
        """Substitute ``t -> t^-1``."""
        return self.compose_power(-1)

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def __str__(self):
        return render(self)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def compose_power(a: LaurentPoly, w: int) -> LaurentPoly:
    return a.compose_power(w)


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient ``q`` with ``q * den == num``; raises if the division is not exact."""
    if den.is_zero():
        raise LaurentError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly()
    rem = num.coeffs
    dlo, dhi = den.min_exp(), den.max_exp()
    lead = den.coeffs[dhi]
    qlo = num.min_exp() - dlo
    quot: dict[int, int] = {}
    while rem:
        top = max(rem)
        if top - dhi < qlo:
            break
        a = rem[top]
        if a % lead:
            break
        q, e = a // lead, top - dhi
        quot[e] = quot.get(e, 0) + q
        for de, da in den.coeffs.items():
            rem[e + de] = rem.get(e + de, 0) - q * da
            if rem[e + de] == 0:
                del rem[e + de]
    if rem:
        raise LaurentError(f"{render(den)} does not divide {render(num)}")
    return LaurentPoly(quot)


def is_symmetric(p: LaurentPoly) -> bool:
    return p == p.mirror()


def symmetrize(p: LaurentPoly) -> LaurentPoly:
    """The representative ``±t^k p`` with ``p(t) = p(1/t)`` and ``p(1) = 1``."""
    if p.is_zero():
        raise LaurentError("the zero polynomial has no symmetric normalization")
    v = p.at_one()
    if v not in (1, -1):
        raise LaurentError(f"p(1) = {v}, expected +-1")
    lo, hi = p.min_exp(), p.max_exp()
    if (lo + hi) % 2:
        raise LaurentError(f"{render(p)} has no symmetric shift")
    q = p.shift(-(lo + hi) // 2) * v
    if not is_symmetric(q):
        raise LaurentError(f"{render(p)} is not symmetric up to a unit")
    return q


def is_trivial(p: LaurentPoly) -> bool:
    return symmetrize(p) == LaurentPoly.const(1)


def _term(e: int, a: int, first: bool) -> str:
    mag = abs(a)
    if e == 0:
        body = str(mag)
    else:
        var = "t" if e == 1 else f"t^{e}"
        body = var if mag == 1 else f"{mag}{var}"
    if first:
        return f"-{body}" if a < 0 else body
    return f" - {body}" if a < 0 else f" + {body}"


def render(p: LaurentPoly) -> str:
    """Exponent-ascending text, e.g. ``t^-2 - t^-1 + 1 - t + t^2``."""
    if p.is_zero():
        return "0"
    return "".join(_term(e, a, k == 0) for k, (e, a) in enumerate(p.coeffs.items()))
