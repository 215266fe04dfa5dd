"""Dense linear algebra over GF(2).

Vectors are Python ints used as bitsets: bit ``k`` holds coordinate ``k``.
A :class:`BitMatrix` stores its rows the same way, so the entries are
bit-packed in row-major order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class DimensionError(ValueError):
    pass


def bits_to_int(bits: Iterable[int]) -> int:
    v = 0
    for k, b in enumerate(bits):
        if b & 1:
            v |= 1 << k
    return v


def int_to_bits(v: int, length: int) -> list[int]:
    return [(v >> k) & 1 for k in range(length)]


def support(v: int) -> list[int]:
    """Indices of the set bits of ``v``, ascending."""
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


@dataclass(frozen=True)
class BitMatrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise DimensionError("row count does not match nrows")
        limit = 1 << self.ncols
        if any(r < 0 or r >= limit for r in self.rows):
            raise DimensionError("row has bits beyond ncols")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        if any(len(r) != ncols for r in entries):
            raise DimensionError("ragged matrix")
        return cls(len(entries), ncols, tuple(bits_to_int(r) for r in entries))

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "BitMatrix":
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in support(col):
                if i >= nrows:
                    raise DimensionError("column has bits beyond nrows")
                rows[i] |= 1 << j
        return cls(nrows, len(columns), tuple(rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << k for k in range(n)))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def columns(self) -> list[int]:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            for j in support(r):
                cols[j] |= 1 << i
        return cols

    def to_lists(self) -> list[list[int]]:
        return [int_to_bits(r, self.ncols) for r in self.rows]

    def apply(self, x: int) -> int:
        """Matrix-vector product with ``x`` packed as an int."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & x).bit_count() & 1:
                out |= 1 << i
        return out

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "BitMatrix":
        """Row ``i`` of the result is row ``row_perm[i]``; likewise for columns."""
        rows = []
        for i in row_perm:
            src = self.rows[i]
            rows.append(bits_to_int((src >> j) & 1 for j in col_perm))
        return BitMatrix(self.nrows, self.ncols, tuple(rows))


class Echelon:
    """Incremental basis of a subspace, keyed by leading (highest) bit.

    Each stored vector remembers which inserted vectors it is a sum of,
    so membership queries can return coefficients.
    """

    def __init__(self):
        self.pivots: dict[int, tuple[int, int]] = {}
        self._count = 0

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v: int) -> tuple[int, int]:
        """Reduce ``v`` against the basis; returns (remainder, combination)."""
        combo = 0
        while v:
            top = v.bit_length() - 1
            hit = self.pivots.get(top)
            if hit is None:
                break
            v ^= hit[0]
            combo ^= hit[1]
        return v, combo

    def reduce_fully(self, v: int) -> tuple[int, int]:
        """Clear every pivot position of ``v``, not only the leading one."""
        combo = 0
        for top in sorted(self.pivots, reverse=True):
            if (v >> top) & 1:
                vec, c = self.pivots[top]
                v ^= vec
                combo ^= c
        return v, combo

    def add(self, v: int) -> int:
        """Insert ``v``; returns the kernel combination if ``v`` was dependent, else 0."""
        tag = 1 << self._count
        self._count += 1
        rem, combo = self.reduce(v)
        combo ^= tag
        if rem:
            self.pivots[rem.bit_length() - 1] = (rem, combo)
            return 0
        return combo


def rank(m: BitMatrix) -> int:
    basis = Echelon()
    for r in m.rows:
        basis.add(r)
    return len(basis)


def rank_of_vectors(vectors: Iterable[int]) -> int:
    basis = Echelon()
    for v in vectors:
        basis.add(v)
    return len(basis)


def kernel_basis(m: BitMatrix) -> list[int]:
    """Basis of {x : m x = 0}, each vector packed as an int over the columns."""
    basis = Echelon()
    kernel = []
    for col in m.columns():
        dep = basis.add(col)
        if dep:
            kernel.append(dep)
    return kernel


def solve_membership(span: BitMatrix, target: Sequence[int] | int) -> Optional[list[int]]:
    """Coefficients ``c`` with ``span @ c == target``, or None if target is outside the column span."""
    if isinstance(target, int):
        t = target
        if t >> span.nrows:
            raise DimensionError("target longer than the column length")
    else:
        if len(target) != span.nrows:
            raise DimensionError(f"target has length {len(target)}, expected {span.nrows}")
        t = bits_to_int(target)
    basis = Echelon()
    for col in span.columns():
        basis.add(col)
    rem, combo = basis.reduce(t)
    if rem:
        return None
    return int_to_bits(combo, span.ncols)


def min_max_representative(target: int, subspace: Iterable[int]) -> int:
    """Element of ``target + span(subspace)`` whose highest set bit is as low as possible.

    Coordinates must be numbered so that a higher bit index means a higher
    level; the leading bit of the result is then the least achievable
    maximum level over the coset.  Returns 0 when target lies in the span.
    """
    basis = Echelon()
    for v in subspace:
        basis.add(v)
    rem, _ = basis.reduce(target)
    return rem
