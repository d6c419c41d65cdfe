"""Exact rank of sparse rational matrices.

Rows are dicts ``column -> Fraction``.  Columns are any totally ordered keys;
each row is pivoted on its largest column, so an incremental echelon form is
maintained without back-substitution.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class Echelon:
    """Incrementally row-reduced span of sparse rows."""

    def __init__(self, ncols: int | None = None):
        self.pivots: dict = {}
        self.ncols = ncols

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def full(self) -> bool:
        return self.ncols is not None and self.rank >= self.ncols

    def reduce(self, row: dict, full: bool = True) -> dict:
        """Eliminate pivot columns from ``row``.

        With ``full=False`` elimination stops at the first non-pivot column,
        which is enough to decide independence.
        """
        row = {k: Fraction(v) for k, v in row.items() if v}
        done = {}
        while row:
            col = max(row)
            c = row.pop(col)
            piv = self.pivots.get(col)
            if piv is None:
                done[col] = c
                if not full:
                    done.update(row)
                    break
                continue
            for k, v in piv.items():
                if k == col:
                    continue
                s = row.get(k, 0) - c * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
        return done

    def add(self, row: dict) -> bool:
        """Insert a row; returns True when it increased the rank."""
        if self.full():
            return False
        red = self.reduce(row, full=False)
        if not red:
            return False
        col = max(red)
        lead = red[col]
        self.pivots[col] = {k: v / lead for k, v in red.items()}
        return True


def exact_rank(rows: Iterable[dict], ncols: int | None = None) -> int:
    ech = Echelon(ncols)
    for row in rows:
        if ech.full():
            break
        ech.add(row)
    return ech.rank
