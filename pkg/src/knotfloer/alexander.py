"""Alexander polynomials of torus knots, satellites and the knot families HOM, OSS, KP."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidComplexError
from .laurent import LaurentError, LaurentPoly, exact_divide, is_trivial, symmetrize

ONE = LaurentPoly.const(1)


def _binomial(e: int) -> LaurentPoly:
    return LaurentPoly({e: 1, 0: -1})


def torus_delta(p: int, q: int) -> LaurentPoly:
    from .models import check_coprime

    check_coprime(p, q)
    num = _binomial(p * q) * _binomial(1)
    den = _binomial(p) * _binomial(q)
    return symmetrize(exact_divide(num, den))


def satellite_delta(pattern_delta: LaurentPoly, companion_delta: LaurentPoly, winding: int) -> LaurentPoly:
    """Seifert's formula: Delta_P(K)(t) = Delta_P(U)(t) * Delta_K(t^w)."""
    if winding == 0:
        raise LaurentError("the satellite formula needs a nonzero winding number")
    return symmetrize(pattern_delta * companion_delta.compose_power(winding))


def whitehead_double_delta() -> LaurentPoly:
    return ONE


def cable_delta(p: int, q: int, companion_delta: LaurentPoly) -> LaurentPoly:
    """(p,q)-cable: torus-knot pattern T(p,q) with winding number p."""
    pattern = ONE if q == 1 else torus_delta(p, q)
    return satellite_delta(pattern, companion_delta, p)


@dataclass(frozen=True)
class FamilyRow:
    label: str
    delta: LaurentPoly
    trivial: bool


def _whitehead_cable_minus_torus(p: int, q: int) -> tuple[str, LaurentPoly]:
    # D_{p,q} # -T_{p,q}: connected sum multiplies, mirroring keeps the symmetric form
    d = cable_delta(p, q, whitehead_double_delta()) * torus_delta(p, q).mirror()
    return f"D_{{{p},{q}}}#-T_{{{p},{q}}}", symmetrize(d)


def family_member(family: str, n: int) -> FamilyRow:
    if n < 2:
        raise InvalidComplexError("family index n must be >= 2")
    fam = family.upper()
    if fam == "HOM":
        label, d = _whitehead_cable_minus_torus(n, n + 1)
    elif fam == "OSS":
        label, d = _whitehead_cable_minus_torus(n, 2 * n - 1)
    elif fam == "KP":
        label, d = f"D_{{{2 * n - 1},1}}", cable_delta(2 * n - 1, 1, whitehead_double_delta())
    else:
        raise InvalidComplexError(f"unknown family {family!r}; expected HOM, OSS or KP")
    return FamilyRow(label, d, is_trivial(d))


def family_delta_report(family: str, n_range) -> list[FamilyRow]:
    return [family_member(family, n) for n in n_range]
