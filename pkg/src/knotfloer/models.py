"""Model complexes: staircases, acyclic boxes, thin models and the cable model."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .cfk import Complex, Generator, check_valid, dual
from .errors import InvalidComplexError


def unknot() -> Complex:
    return Complex([Generator("g", 0, 0, 0)], {}, "U")


def staircase_from_exponents(alpha: Sequence[int], name: str = "") -> Complex:
    """Staircase whose corners come from the alternating exponents of an L-space knot's Alexander polynomial.

    ``alpha`` is strictly descending, of odd length and symmetric about 0.
    Generator ``v0`` sits at (0, alpha[0]); odd generators step right, even
    generators step down, and ``d v_{2k-1} = v_{2k-2} + v_{2k}``.
    """
    alpha = [int(a) for a in alpha]
    if len(alpha) % 2 == 0:
        raise InvalidComplexError("staircase exponents must have odd length")
    if any(a <= b for a, b in zip(alpha, alpha[1:])):
        raise InvalidComplexError("staircase exponents must be strictly descending")
    if alpha != [-a for a in reversed(alpha)]:
        raise InvalidComplexError("staircase exponents must be symmetric about 0")
    i, j = 0, alpha[0]
    gens = [Generator("v0", i, j, 0)]
    diff = {}
    for k in range(1, len(alpha)):
        step = alpha[k - 1] - alpha[k]
        if k % 2:
            i += step
            gens.append(Generator(f"v{k}", i, j, 1))
        else:
            j -= step
            gens.append(Generator(f"v{k}", i, j, 0))
            diff[f"v{k - 1}"] = [(f"v{k - 2}", 0), (f"v{k}", 0)]
    return Complex(gens, diff, name or "staircase" + str(tuple(alpha)))


def torus_staircase(p: int, q: int) -> Complex:
    from .alexander import torus_delta

    delta = torus_delta(p, q)
    alpha = sorted(delta.coeffs, reverse=True)
    c = staircase_from_exponents(alpha, name=f"T({p},{q})")
    return c


def box(shift_i: int = 0, shift_j: int = 0, top_maslov: int = 1) -> Complex:
    """The four-generator acyclic square with top corner at (shift_i+1, shift_j+1)."""
    a, b, m = shift_i, shift_j, top_maslov
    gens = [
        Generator("tr", a + 1, b + 1, m),
        Generator("tl", a, b + 1, m - 1),
        Generator("br", a + 1, b, m - 1),
        Generator("bl", a, b, m - 2),
    ]
    diff = {"tr": [("tl", 0), ("br", 0)], "tl": [("bl", 0)], "br": [("bl", 0)]}
    return Complex(gens, diff, f"box({a},{b},{m})")


def thin_model(tau_value: int) -> Complex:
    """Representative of the nu+-class of a thin knot with the given tau."""
    if tau_value == 0:
        return unknot()
    c = torus_staircase(2, 2 * abs(tau_value) + 1)
    return dual(c) if tau_value < 0 else c


@dataclass(frozen=True)
class CableModelConfig:
    n: int
    a: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise InvalidComplexError("cable model needs n >= 2")
        a = tuple(int(x) for x in self.a) if self.a else (0,) * (self.n - 1)
        if len(a) != self.n - 1:
            raise InvalidComplexError(f"a-vector must have n-1 = {self.n - 1} entries, got {len(a)}")
        if any(x not in (0, 1) for x in a):
            raise InvalidComplexError("a-vector entries must be bits")
        object.__setattr__(self, "a", a)


def cable_model(cfg: CableModelConfig | int, a: Sequence[int] = ()) -> Complex:
    """Minimal model of CFK-infinity of the (n,1)-cable of the right-handed trefoil.

    Generators follow the U-translated basis of the cable's knot Floer
    complex (6n-5 of them).  The differential is the minimal one consistent
    with the known vertical/horizontal arrows, plus the free diagonal bits
    ``a`` in ``d x_n`` and the matching ``d y'_1 = sum a_i w_i``.
    """
    if not isinstance(cfg, CableModelConfig):
        cfg = CableModelConfig(int(cfg), tuple(a))
    n, av = cfg.n, cfg.a
    gens = [
        Generator(f"y_{n}", 0, n, 0),
        Generator(f"x_{n}", 1, n, 1),
        Generator("y'_1", 1, 0, 0),
    ]
    for k in range(2, n + 1):
        gens.append(Generator(f"x'_{k}", k, 1, 1))
        gens.append(Generator(f"y'_{k}", k, 0, 0))
    for k in range(2, n):
        gens.append(Generator(f"x_{k}", 1, k, 1))
        gens.append(Generator(f"z_{k}", 1, 1, 0))
    for k in range(1, n):
        gens.append(Generator(f"y_{k}", 0, k, 0))
        gens.append(Generator(f"w_{k}", 0, 0, -1))

    on = [i for i in range(1, n) if av[i - 1]]
    diff = {
        f"x_{n}": [(f"y_{n}", 0), ("y'_1", 0)] + [(f"y_{i}", 0) for i in on],
        "y'_1": [(f"w_{i}", 0) for i in on],
    }
    for k in range(2, n):
        diff[f"x_{k}"] = [(f"z_{k}", 0)]
    for k in range(2, n + 1):
        diff[f"x'_{k}"] = [(f"y'_{k}", 0)]
    for k in range(1, n):
        diff[f"y_{k}"] = [(f"w_{k}", 0)]
    label = "".join(str(x) for x in av)
    return check_valid(Complex(gens, diff, f"cable({n};{label})"))


def check_coprime(p: int, q: int) -> None:
    if p < 2 or q < 1:
        raise InvalidComplexError("torus knot needs p >= 2 and q >= 1")
    if gcd(p, q) != 1:
        raise InvalidComplexError(f"T({p},{q}) is not a knot: gcd is {gcd(p, q)}")
