"""Small exact linear-algebra helpers: rational ranks and linear feasibility.

Everything here works over fractions.Fraction; no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def rational_rank(rows: Iterable[dict[int, Fraction]]) -> int:
    """Rank of the row span of sparse rational vectors (column index -> value).

    Plain Gaussian elimination with exact arithmetic; rows may share no
    common dimension bound, columns are arbitrary hashable-int indices.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        work = {c: Fraction(v) for c, v in row.items() if v}
        while work:
            c = min(work)
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / work[c]
                pivots[c] = {cc: vv * inv for cc, vv in work.items()}
                rank += 1
                break
            factor = work[c]
            for cc, vv in piv.items():
                nv = work.get(cc, Fraction(0)) - factor * vv
                if nv:
                    work[cc] = nv
                else:
                    work.pop(cc, None)
    return rank


def _normalize(vec: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    for v in vec:
        if v:
            scale = abs(v)
            return tuple(x / scale for x in vec)
    return vec


def homogeneous_feasible(
    equalities: Sequence[Sequence[Fraction | int]],
    strict: Sequence[Sequence[Fraction | int]],
) -> bool:
    """Does some rational w satisfy e.w == 0 for all e and s.w < 0 for all s?

    Exact Fourier-Motzkin elimination.  Equalities are removed first by
    substitution; the strict inequalities are then projected one variable at
    a time, combinations of a strict constraint staying strict.  The system
    is infeasible exactly when a 0 < 0 row is derived.
    """
    dims = {len(r) for r in list(equalities) + list(strict)}
    if len(dims) > 1:
        raise ValueError("constraint rows of mixed dimension")
    if not dims:
        return True
    dim = dims.pop()

    eqs = [tuple(Fraction(v) for v in row) for row in equalities]
    ineqs = [tuple(Fraction(v) for v in row) for row in strict]

    # Substitute equalities away: each pivot column is eliminated everywhere.
    reduced: list[tuple[int, tuple[Fraction, ...]]] = []
    for row in eqs:
        work = list(row)
        for pc, prow in reduced:
            if work[pc]:
                f = work[pc]
                work = [w - f * p for w, p in zip(work, prow)]
        pivot = next((c for c, v in enumerate(work) if v), None)
        if pivot is None:
            continue
        inv = 1 / work[pivot]
        prow = tuple(v * inv for v in work)
        reduced.append((pivot, prow))
    for pc, prow in reduced:
        ineqs = [
            tuple(v - row[pc] * p for v, p in zip(row, prow)) for row in ineqs
        ]

    rows = set()
    for r in ineqs:
        if not any(r):
            return False  # 0 < 0
        rows.add(_normalize(r))

    remaining = [c for c in range(dim) if any(r[c] for r in rows)]
    for c in remaining:
        pos = [r for r in rows if r[c] > 0]
        neg = [r for r in rows if r[c] < 0]
        keep = {r for r in rows if not r[c]}
        for p in pos:
            for q in neg:
                comb = tuple(
                    v * (-q[c]) + w * p[c] for v, w in zip(p, q)
                )
                if not any(comb):
                    return False
                keep.add(_normalize(comb))
        rows = keep
        if not rows:
            break
    return True
