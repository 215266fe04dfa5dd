"""Jump homomorphism phi, jump matrices and the Z^r-summand certificate."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .cfk import Complex
from .invariants import first_singularity, upsilon_jump
from .pl import fmt


def phi_vector(c: Complex, k_max: int) -> list[Fraction]:
    """Entries k = 2..k_max of phi: the jump of Upsilon' at 2/(1+k), divided by 1+k."""
    return [upsilon_jump(c, Fraction(2, 1 + k)) / (1 + k) for k in range(2, k_max + 1)]


@dataclass
class JumpMatrix:
    labels: list[str]
    k_max: int
    rows: list[list[Fraction]]

    @property
    def ks(self) -> list[int]:
        return list(range(2, self.k_max + 1))

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)


def _phi_job(args):
    c, k_max = args
    return phi_vector(c, k_max)


def jump_matrix(family: Sequence[Complex], k_max: int, labels: Optional[Sequence[str]] = None, jobs: int = 1) -> JumpMatrix:
    labels = list(labels) if labels is not None else [c.name for c in family]
    if jobs > 1 and len(family) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_phi_job, [(c, k_max) for c in family]))
    else:
        rows = [phi_vector(c, k_max) for c in family]
    return JumpMatrix(labels, k_max, rows)


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    work = [list(map(Fraction, r)) for r in rows if any(r)]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        p = work[rank][col]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                f = work[r][col] / p
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


@dataclass
class Verdict:
    rank: int
    certified: bool
    certified_rank: int
    pivot_columns: list[int]
    pivot_rows: list[str] = field(default_factory=list)
    integral: bool = True


def summand_certificate(m: JumpMatrix) -> Verdict:
    """Look for rows of the form (*, ..., *, +-1, 0, 0, ...) with distinct pivot columns.

    Ordering such rows by pivot column gives a triangular integer matrix with
    unit diagonal, so the truncated phi maps their span onto Z^r at those
    coordinates.  Certified when r equals the rational rank of the matrix.
    """
    rank = rational_rank(m.rows)
    chosen: dict[int, str] = {}
    for label, row in zip(m.labels, m.rows):
        nz = [k for k, x in enumerate(row) if x != 0]
        if not nz:
            continue
        last = nz[-1]
        if abs(row[last]) == 1 and last not in chosen:
            chosen[last] = label
    cols = sorted(chosen)
    ks = m.ks
    r = len(cols)
    return Verdict(
        rank=rank,
        certified=r > 0 and r == rank,
        certified_rank=r,
        pivot_columns=[ks[k] for k in cols],
        pivot_rows=[chosen[k] for k in cols],
        integral=m.integral,
    )


def certificate_document(m: JumpMatrix, verdict: Optional[Verdict] = None) -> dict:
    verdict = verdict or summand_certificate(m)
    return {
        "k_max": m.k_max,
        "labels": list(m.labels),
        "matrix": [[fmt(x) for x in row] for row in m.rows],
        "rank": verdict.rank,
        "certified": verdict.certified,
        "pivot_columns": verdict.pivot_columns,
        "integral": verdict.integral,
    }


def certificate_json(m: JumpMatrix) -> str:
    return json.dumps(certificate_document(m), sort_keys=True, indent=2) + "\n"


__all__ = [
    "phi_vector",
    "JumpMatrix",
    "jump_matrix",
    "summand_certificate",
    "certificate_document",
    "first_singularity",
]
