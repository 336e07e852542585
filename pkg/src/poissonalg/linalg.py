"""Exact sparse null spaces over Q."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping


Row = Dict[int, Fraction]


def nullspace(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> List[Row]:
    """Basis of {v : row . v = 0 for every row}, columns indexed 0..ncols-1.

    Pivots are chosen at the lowest column index, so free columns are the
    highest-index ones; each basis vector has a 1 in exactly one free column.
    """
    pivots: Dict[int, Row] = {}
    for raw in rows:
        r = {c: Fraction(v) for c, v in raw.items() if v}
        # eliminate existing pivots from r
        for p in sorted(c for c in r if c in pivots):
            if p in r:
                f = r[p]
                for c, v in pivots[p].items():
                    s = r.get(c, 0) - f * v
                    if s:
                        r[c] = s
                    else:
                        r.pop(c, None)
        r = {c: v for c, v in r.items() if v}
        if not r:
            continue
        p = min(r)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for q, row in pivots.items():
            if p in row:
                f = row[p]
                for c, v in r.items():
                    s = row.get(c, 0) - f * v
                    if s:
                        row[c] = s
                    else:
                        row.pop(c, None)
        pivots[p] = r
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: Fraction(1)}
        for p, row in pivots.items():
            if f in row:
                v[p] = -row[f]
        basis.append(v)
    return basis


def rank(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> int:
    return ncols - len(nullspace(rows, ncols))


class LinearSystem:
    """Accumulates homogeneous equations keyed by arbitrary labels."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.eqs: Dict[Hashable, Row] = {}

    def add(self, label: Hashable, col: int, coeff: Fraction) -> None:
        if not coeff:
            return
        row = self.eqs.setdefault(label, {})
        s = row.get(col, 0) + coeff
        if s:
            row[col] = s
        else:
            del row[col]

    def nullspace(self) -> List[Row]:
        return nullspace(self.eqs.values(), self.ncols)
