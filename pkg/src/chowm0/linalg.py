"""Exact sparse row reduction over QQ.

Rows are dicts ``column -> int`` kept primitive (content 1, positive pivot),
and reduction is fraction-free: ``v <- a*v - b*row`` followed by division
by the content.  Every stored row also remembers which combination of the
inserted vectors produced it, so :meth:`Echelon.express` can write a target
as an explicit rational combination.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence

__all__ = ["Echelon", "rank", "to_int_row"]


def to_int_row(vec: Mapping[Hashable, Fraction | int]):
    """Clear denominators; return (int row, multiplier) with row == multiplier*vec."""
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    row = {}
    for k, c in vec.items():
        if c:
            v = c * den
            row[k] = int(v)
    return row, den


def _content(*dicts):
    g = 0
    for d in dicts:
        for c in d.values():
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


class Echelon:
    """Incremental row echelon form with column keys ordered by ``key``.

    ``columns`` order is the insertion order of :meth:`column_index` unless
    the caller supplies an explicit ordering, which matters only for which
    pivots get chosen (and therefore which witness combinations are found).
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: dict[int, tuple[dict, dict]] = {}  # pivot col -> (row, combo)
        self._col_index: dict = {}
        self._cols: list = []
        self.count = 0

    def column_index(self, key) -> int:
        idx = self._col_index.get(key)
        if idx is None:
            idx = len(self._cols)
            self._col_index[key] = idx
            self._cols.append(key)
        return idx

    def _encode(self, vec: Mapping) -> tuple[dict, int]:
        row, mult = to_int_row(vec)
        return {self.column_index(k): c for k, c in row.items()}, mult

    def _reduce(self, row: dict, combo: dict):
        heap = list(row)
        heapq.heapify(heap)
        seen = set()
        while heap:
            col = heapq.heappop(heap)
            if col in seen:
                continue
            seen.add(col)
            a = row.get(col)
            if not a or col not in self.rows:
                continue
            prow, pcombo = self.rows[col]
            p = prow[col]
            g = gcd(a, p)
            fa, fp = p // g, a // g
            new = {}
            for k, c in row.items():
                new[k] = c * fa
            for k, c in prow.items():
                s = new.get(k, 0) - c * fp
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
                if k not in seen and k > col:
                    heapq.heappush(heap, k)
            row = new
            if self.track:
                nc = {k: c * fa for k, c in combo.items()}
                for k, c in pcombo.items():
                    s = nc.get(k, 0) - c * fp
                    if s:
                        nc[k] = s
                    else:
                        nc.pop(k, None)
                combo = nc
            g = _content(row, combo) if self.track else _content(row)
            if g > 1:
                row = {k: c // g for k, c in row.items()}
                if self.track:
                    combo = {k: c // g for k, c in combo.items()}
        return row, combo

    def add(self, vec: Mapping, label: Hashable | None = None) -> bool:
        """Insert ``vec``; return True iff it was independent of earlier rows."""
        row, mult = self._encode(vec)
        label = self.count if label is None else label
        self.count += 1
        combo = {label: mult} if self.track else {}
        row, combo = self._reduce(row, combo)
        if not row:
            return False
        pivot = min(row)
        if row[pivot] < 0:
            row = {k: -c for k, c in row.items()}
            combo = {k: -c for k, c in combo.items()}
        self.rows[pivot] = (row, combo)
        return True

    def contains(self, vec: Mapping) -> bool:
        row, _ = self._encode(vec)
        saved = self.track
        self.track = False
        try:
            row, _ = self._reduce(row, {})
        finally:
            self.track = saved
        return not row

    def express(self, vec: Mapping) -> dict | None:
        """Labels -> Fraction coefficients summing to ``vec``, or None.

        Requires ``track=True``; only independent inserted vectors appear.
        """
        if not self.track:
            raise ValueError("express() needs an Echelon built with track=True")
        row, mult = self._encode(vec)
        # reduce row; the dependence is row_final = s*vec - sum(...)
        combo = {None: mult}
        row, combo = self._reduce(row, combo)
        if row:
            return None
        s = combo.pop(None, 0)
        if not s:
            raise ArithmeticError("degenerate reduction")
        # s * (vec) - combo_rows == 0 with the sign conventions of _reduce:
        # combo holds coefficients c_i with s*vec + sum c_i * v_i == 0
        return {k: Fraction(-c, s) for k, c in combo.items() if c}

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(vectors: Iterable[Mapping]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def nullspace_dimension(vectors: Sequence[Mapping]) -> int:
    return len(vectors) - rank(vectors)
