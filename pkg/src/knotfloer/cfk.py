"""Bifiltered chain complexes over GF(2)[U, U^-1].

A complex is stored by its finitely many generators and the differential of
each generator; ``U^m g`` is the monomial ``(g, m)`` and the differential
extends U-equivariantly.  Every Maslov grading is finite dimensional (each
generator of matching parity contributes exactly one U-translate), which is
what makes all the homology computations below finite.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional

from . import gf2
from .errors import InvalidComplexError, NotKnotLikeError
from .laurent import LaurentError, LaurentPoly, symmetrize

Monomial = tuple[str, int]
Element = frozenset  # frozenset[Monomial]; addition is symmetric difference


@dataclass(frozen=True)
class Generator:
    id: str
    alg: int
    alex: int
    maslov: int

    def sort_key(self):
        return (-self.maslov, self.alg, self.alex, self.id)


class Complex:
    """Immutable finitely generated bifiltered complex.

    ``differential`` maps a generator id to the monomials ``(h, u)`` such that
    ``U^u h`` appears in its boundary.  Repeated entries cancel in pairs.
    """

    def __init__(
        self,
        generators: Iterable[Generator],
        differential: Mapping[str, Iterable[Monomial]] | None = None,
        name: str = "",
    ):
        gens = sorted(generators, key=Generator.sort_key)
        ids = [g.id for g in gens]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise InvalidComplexError(f"duplicate generator ids: {dup}")
        self.name = name
        self.generators: tuple[Generator, ...] = tuple(gens)
        self._by_id = {g.id: g for g in gens}
        self._order = {g.id: k for k, g in enumerate(gens)}
        diff: dict[str, frozenset] = {}
        for src, terms in (differential or {}).items():
            if src not in self._by_id:
                raise InvalidComplexError(f"differential given for unknown generator {src!r}")
            acc: set = set()
            for h, u in terms:
                if h not in self._by_id:
                    raise InvalidComplexError(f"{src!r} maps to unknown generator {h!r}")
                key = (h, int(u))
                if key in acc:
                    acc.remove(key)
                else:
                    acc.add(key)
            if acc:
                diff[src] = frozenset(acc)
        self._diff = diff

    # basic access -------------------------------------------------------

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"Complex({self.name!r}, {len(self)} generators)"

    def gen(self, gid: str) -> Generator:
        return self._by_id[gid]

    def ids(self) -> list[str]:
        return [g.id for g in self.generators]

    def d(self, gid: str) -> frozenset:
        return self._diff.get(gid, frozenset())

    def entries(self) -> list[tuple[str, str, int]]:
        """All differential entries ``(from, to, u)`` in canonical order."""
        out = []
        for g in self.generators:
            for h, u in sorted(self.d(g.id), key=lambda m: (self._order[m[0]], m[1])):
                out.append((g.id, h, u))
        return out

    def boundary(self, x: Iterable[Monomial]) -> Element:
        out: set = set()
        for g, m in x:
            for h, u in self.d(g):
                out ^= {(h, m + u)}
        return frozenset(out)

    def alg(self, mono: Monomial) -> int:
        return self._by_id[mono[0]].alg - mono[1]

    def alex(self, mono: Monomial) -> int:
        return self._by_id[mono[0]].alex - mono[1]

    def grading(self, mono: Monomial) -> int:
        return self._by_id[mono[0]].maslov - 2 * mono[1]

    def renamed(self, name: str) -> "Complex":
        return Complex(self.generators, self._diff, name)

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self.generators == other.generators and self._diff == other._diff

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = self._hash = hash((self.generators, tuple(self.entries())))
        return h


# validation ----------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str  # FILTERED, REDUCED, GRADED or D_SQUARED
    generator: str
    monomial: Optional[Monomial]
    detail: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(f"{v.kind}: {v.generator} -> {v.monomial}: {v.detail}" for v in self.violations)


def validate(c: Complex) -> ValidationReport:
    report = ValidationReport()
    bad = report.violations.append
    for g in c.generators:
        for mono in sorted(c.d(g.id), key=lambda m: (m[0], m[1])):
            i, j, gr = c.alg(mono), c.alex(mono), c.grading(mono)
            if i > g.alg or j > g.alex:
                bad(Violation("FILTERED", g.id, mono, f"({i},{j}) not <= ({g.alg},{g.alex})"))
            elif i == g.alg and j == g.alex:
                bad(Violation("REDUCED", g.id, mono, f"arrow preserves bidegree ({i},{j})"))
            if gr != g.maslov - 1:
                bad(Violation("GRADED", g.id, mono, f"grading {gr}, expected {g.maslov - 1}"))
        dd = c.boundary(c.d(g.id))
        for mono in sorted(dd):
            bad(Violation("D_SQUARED", g.id, mono, "appears in d(d(g))"))
    return report


def check_valid(c: Complex) -> Complex:
    if c.__dict__.get("_valid"):
        return c
    report = validate(c)
    if not report.ok:
        raise InvalidComplexError(f"invalid complex {c.name!r}:\n{report}")
    c._valid = True
    return c


# constructions ---------------------------------------------------------------

def tensor(a: Complex, b: Complex) -> Complex:
    def pid(g, h):
        return f"({g},{h})"

    gens = [
        Generator(pid(g.id, h.id), g.alg + h.alg, g.alex + h.alex, g.maslov + h.maslov)
        for g in a.generators
        for h in b.generators
    ]
    diff = {}
    for g in a.generators:
        for h in b.generators:
            terms = [(pid(g2, h.id), u) for g2, u in a.d(g.id)]
            terms += [(pid(g.id, h2), u) for h2, u in b.d(h.id)]
            diff[pid(g.id, h.id)] = terms
    return Complex(gens, diff, f"{a.name}#{b.name}")


def _dual_id(gid: str) -> str:
    return gid[:-1] if gid.endswith("*") else gid + "*"


def dual(c: Complex) -> Complex:
    """Mirror complex: negate filtrations and grading, transpose the differential."""
    gens = [Generator(_dual_id(g.id), -g.alg, -g.alex, -g.maslov) for g in c.generators]
    diff: dict[str, list] = defaultdict(list)
    for src, dst, u in c.entries():
        diff[_dual_id(dst)].append((_dual_id(src), u))
    name = c.name[1:] if c.name.startswith("-") else "-" + c.name
    return Complex(gens, diff, name)


def direct_sum(a: Complex, b: Complex) -> Complex:
    taken = set(a.ids())
    rename = {}
    for gid in b.ids():
        new, k = gid, 2
        while new in taken:
            new = f"{gid}#{k}"
            k += 1
        rename[gid] = new
        taken.add(new)
    gens = list(a.generators) + [
        Generator(rename[g.id], g.alg, g.alex, g.maslov) for g in b.generators
    ]
    diff = {g: list(a.d(g)) for g in a.ids()}
    for g in b.ids():
        diff[rename[g]] = [(rename[h], u) for h, u in b.d(g)]
    return Complex(gens, diff, f"{a.name}(+){b.name}")


def empty_complex() -> Complex:
    return Complex([], {}, "0")


# graded pieces and homology ----------------------------------------------------

Keep = Callable[[Complex, Monomial], bool]


def graded_slice(c: Complex, maslov_grading: int, keep: Optional[Keep] = None) -> list[Monomial]:
    """Monomials ``U^m g`` of the given grading, in canonical generator order."""
    out = []
    for g in c.generators:
        diff = g.maslov - maslov_grading
        if diff % 2:
            continue
        mono = (g.id, diff // 2)
        if keep is None or keep(c, mono):
            out.append(mono)
    return out


def boundary_columns(
    c: Complex, source: list[Monomial], target: list[Monomial]
) -> list[int]:
    """Differential restricted to ``source`` and projected onto ``target``, as bit columns."""
    index = {m: k for k, m in enumerate(target)}
    cols = []
    for g, m in source:
        v = 0
        for h, u in c.d(g):
            k = index.get((h, m + u))
            if k is not None:
                v ^= 1 << k
        cols.append(v)
    return cols


def split_blocks(
    c: Complex, here: list[Monomial], below: list[Monomial], above: list[Monomial]
) -> list[tuple[list[Monomial], list[Monomial], list[Monomial]]]:
    """Partition three adjacent graded pieces into blocks the differential does not mix.

    Homology is the direct sum over blocks, so elimination can run block by
    block on short local bit vectors.  Order inside each block is preserved.
    """
    pieces = (here, below, above)
    offsets = (0, len(here), len(here) + len(below))
    parent = list(range(offsets[2] + len(above)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    diff = c._diff
    for src_slot, dst_slot in ((2, 0), (0, 1)):
        target = {m: offsets[dst_slot] + k for k, m in enumerate(pieces[dst_slot])}
        base = offsets[src_slot]
        for k, (g, m) in enumerate(pieces[src_slot]):
            for h, u in diff.get(g, ()):
                t = target.get((h, m + u))
                if t is not None:
                    a, b = find(base + k), find(t)
                    if a != b:
                        parent[a] = b
    blocks: dict[int, tuple[list, list, list]] = {}
    for slot, piece in enumerate(pieces):
        base = offsets[slot]
        for k, m in enumerate(piece):
            r = find(base + k)
            if r not in blocks:
                blocks[r] = ([], [], [])
            blocks[r][slot].append(m)
    return list(blocks.values())


def _block_dims(c: Complex, blocks) -> int:
    """Homology dimension of the middle piece, summed over blocks."""
    total = 0
    for h, b, a in blocks:
        if h:
            total += len(h)
            if a or b:
                total -= gf2.rank_of_vectors(boundary_columns(c, h, b))
                total -= gf2.rank_of_vectors(boundary_columns(c, a, h))
    return total


def _blocks(c: Complex, grading: int, keep: Optional[Keep] = None):
    """Blocks of the pieces around ``grading``; memoised on the complex for the full complex."""
    if keep is None:
        cache = c.__dict__.setdefault("_block_cache", {})
        if grading in cache:
            return cache[grading]
    blocks = split_blocks(
        c,
        graded_slice(c, grading, keep),
        graded_slice(c, grading - 1, keep),
        graded_slice(c, grading + 1, keep),
    )
    if keep is None:
        cache[grading] = blocks
    return blocks


def _homology_dim(c: Complex, grading: int, keep: Optional[Keep] = None) -> int:
    return _block_dims(c, _blocks(c, grading, keep))


def homology_dims(c: Complex) -> dict[int, int]:
    """Homology ranks in gradings 0 and 1; U-periodicity gives the rest."""
    return {0: _homology_dim(c, 0), 1: _homology_dim(c, 1)}


def _in_slice(c: Complex, mono: Monomial) -> bool:
    return c.alg(mono) == 0


def slice_gradings(c: Complex) -> list[int]:
    return sorted({g.maslov - 2 * g.alg for g in c.generators})


def slice_homology(c: Complex) -> dict[int, int]:
    """Homology of the i=0 slice by grading (nonzero entries only)."""
    by_grading: dict[int, list[Monomial]] = defaultdict(list)
    for g in c.generators:
        by_grading[g.maslov - 2 * g.alg].append((g.id, g.alg))
    out = {}
    for gr, here in sorted(by_grading.items()):
        d = _block_dims(c, split_blocks(c, here, by_grading.get(gr - 1, []), by_grading.get(gr + 1, [])))
        if d:
            out[gr] = d
    return out


def is_knotlike(c: Complex) -> bool:
    cached = c.__dict__.get("_knotlike")
    if cached is None:
        cached = c._knotlike = homology_dims(c) == {0: 1, 1: 0} and slice_homology(c) == {0: 1}
    return cached


def require_knotlike(c: Complex) -> Complex:
    check_valid(c)
    if not is_knotlike(c):
        raise NotKnotLikeError(
            f"{c.name!r} is not knot-like: homology {homology_dims(c)}, "
            f"i=0 slice homology {slice_homology(c)}"
        )
    return c


def homology_class_rep(c: Complex, grading: int, keep: Optional[Keep] = None):
    """A cycle spanning homology in a one-dimensional grading, with the boundary space.

    Returns ``(monomials, cycle, boundaries)`` for the block carrying the
    homology: ``cycle`` is a bit vector over ``monomials`` and ``boundaries``
    spans the image of the incoming differential there.  Other blocks are
    acyclic in this grading, so every minimal representative lives here.
    """
    for here, below, above in _blocks(c, grading, keep):
        if not here:
            continue
        cycles = gf2.kernel_basis(gf2.BitMatrix.from_columns(boundary_columns(c, here, below), len(below)))
        if not cycles:
            continue
        bounds = [v for v in boundary_columns(c, above, here) if v]
        basis = gf2.Echelon()
        for b in bounds:
            basis.add(b)
        for z in cycles:
            rem, _ = basis.reduce(z)
            if rem:
                return here, z, bounds
    raise NotKnotLikeError(f"no homology in grading {grading}")


def hat_table(c: Complex) -> dict[tuple[int, int], int]:
    """Ranks of HFK-hat indexed by (Alexander grading, Maslov grading).

    Computed from the associated graded of the i=0 slice, i.e. keeping only
    differential components that preserve both filtration levels.
    """
    blocks: dict[int, list[Monomial]] = defaultdict(list)
    for g in c.generators:
        blocks[g.alex - g.alg].append((g.id, g.alg))
    out = {}
    for a, monos in blocks.items():
        by_grading: dict[int, list[Monomial]] = defaultdict(list)
        for mono in monos:
            by_grading[c.grading(mono)].append(mono)
        ranks = {}
        for gr, here in by_grading.items():
            below = by_grading.get(gr - 1, [])
            ranks[gr] = gf2.rank_of_vectors(boundary_columns(c, here, below))
        for gr, here in by_grading.items():
            above = by_grading.get(gr + 1, [])
            r_in = gf2.rank_of_vectors(boundary_columns(c, above, here)) if above else 0
            dim = len(here) - ranks[gr] - r_in
            if dim:
                out[(a, gr)] = dim
    return dict(sorted(out.items()))


def delta_from_complex(c: Complex) -> LaurentPoly:
    """Graded Euler characteristic of HFK-hat, symmetrized."""
    coeffs: dict[int, int] = defaultdict(int)
    for g in c.generators:
        coeffs[g.alex - g.alg] += -1 if g.maslov % 2 else 1
    try:
        return symmetrize(LaurentPoly(coeffs))
    except LaurentError as exc:
        raise InvalidComplexError(f"Euler characteristic of {c.name!r} is not an Alexander polynomial: {exc}") from exc


# JSON ---------------------------------------------------------------------

def to_dict(c: Complex) -> dict:
    return {
        "name": c.name,
        "generators": [
            {"id": g.id, "alg": g.alg, "alex": g.alex, "maslov": g.maslov} for g in c.generators
        ],
        "differential": [{"from": s, "to": t, "u": u} for s, t, u in c.entries()],
    }


def to_json(c: Complex) -> str:
    return json.dumps(to_dict(c), sort_keys=True, indent=2) + "\n"


def from_dict(data: dict) -> Complex:
    try:
        gens = [
            Generator(str(g["id"]), int(g["alg"]), int(g["alex"]), int(g["maslov"]))
            for g in data["generators"]
        ]
        diff: dict[str, list] = defaultdict(list)
        for e in data.get("differential", []):
            diff[str(e["from"])].append((str(e["to"]), int(e["u"])))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidComplexError(f"malformed complex JSON: {exc}") from exc
    return Complex(gens, diff, str(data.get("name", "")))


def from_json(text: str) -> Complex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidComplexError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidComplexError("complex JSON must be an object")
    return from_dict(data)


def load(path) -> Complex:
    with open(path) as fh:
        return check_valid(from_json(fh.read()))


def save(c: Complex, path) -> None:
    with open(path, "w") as fh:
        fh.write(to_json(c))
