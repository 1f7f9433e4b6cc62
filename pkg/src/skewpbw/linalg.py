"""Sparse exact linear algebra over Q.

Vectors are dicts ``column -> Fraction`` with no zero entries. Columns may be
any hashable, sortable keys (ints, words, index pairs).
"""

from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence

Vector = Dict[Hashable, Fraction]


def _clean(row: Mapping) -> Vector:
    return {k: Fraction(v) for k, v in row.items() if v}


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Each stored row's pivot is its highest-priority column, and no stored row
    has a nonzero entry in another row's pivot column. ``priority`` maps a
    column to a sort key; larger keys are pivoted first.
    """

    def __init__(self, priority: Optional[Callable] = None):
        self.priority = priority or (lambda c: c)
        self.pivots: Dict[Hashable, Vector] = {}

    def reduce(self, row: Mapping) -> Vector:
        row = _clean(row)
        for col in [c for c in row if c in self.pivots]:
            f = row.get(col)
            if not f:
                continue
            for k, v in self.pivots[col].items():
                s = row.get(k, 0) - f * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
        return row

    def add(self, row: Mapping) -> bool:
        """Insert ``row``; return False if it was already in the span."""
        row = self.reduce(row)
        if not row:
            return False
        piv = max(row, key=self.priority)
        inv = 1 / row[piv]
        row = {k: v * inv for k, v in row.items()}
        for other in self.pivots.values():
            f = other.get(piv)
            if f:
                for k, v in row.items():
                    s = other.get(k, 0) - f * v
                    if s:
                        other[k] = s
                    else:
                        other.pop(k, None)
        self.pivots[piv] = row
        return True

    def extend(self, rows: Iterable[Mapping]) -> "Echelon":
        for r in rows:
            self.add(r)
        return self

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def basis(self) -> List[Vector]:
        """Rows sorted by descending pivot priority."""
        return [dict(self.pivots[c]) for c in sorted(self.pivots, key=self.priority, reverse=True)]


def rank(rows: Iterable[Mapping]) -> int:
    return Echelon().extend(rows).rank


def nullspace(rows: Sequence[Mapping], columns: Sequence[Hashable]) -> List[Vector]:
    """Basis of ``{v : sum_c row[c] * v[c] = 0 for every row}`` over ``columns``."""
    order = {c: i for i, c in enumerate(columns)}
    ech = Echelon(priority=lambda c: -order[c]).extend(rows)
    basis = []
    for free in columns:
        if free in ech.pivots:
            continue
        v = {free: Fraction(1)}
        for piv, row in ech.pivots.items():
            f = row.get(free)
            if f:
                v[piv] = -f
        basis.append(v)
    return basis


def dense(v: Mapping, columns: Sequence[Hashable]) -> tuple:
    return tuple(Fraction(v.get(c, 0)) for c in columns)
