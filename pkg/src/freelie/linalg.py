"""Sparse exact Gaussian elimination.

Rows are ``dict[int, value]`` mapping a column index to a nonzero field
element (``Fraction`` or ``FpElement``).  Nothing here knows about Lie
algebras.
"""

from __future__ import annotations

from collections.abc import Iterable


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Every stored row has pivot coefficient 1 and no entries in any other
    pivot column.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def reduce(self, row: dict) -> dict:
        """Reduce ``row`` modulo the current row space; returns a new dict."""
        row = dict(row)
        for col in [c for c in row if c in self.pivots]:
            x = row.get(col)
            if not x:
                continue
            for c, y in self.pivots[col].items():
                v = row.get(c)
                v = -x * y if v is None else v - x * y
                if v:
                    row[c] = v
                else:
                    row.pop(c, None)
        return row

    def add(self, row: dict, forbidden: int | None = None) -> int | None:
        """Insert ``row``; returns the new pivot column, or None if dependent.

        ``forbidden`` names a column that may never become a pivot (used for
        the right-hand side of an augmented system).  A row whose only entry
        is there is returned as ``-1``.
        """
        row = self.reduce(row)
        cols = [c for c in row if c != forbidden]
        if not cols:
            return -1 if row else None
        p = min(cols)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        for other in self.pivots.values():
            x = other.get(p)
            if x:
                for c, y in row.items():
                    v = other.get(c)
                    v = -x * y if v is None else v - x * y
                    if v:
                        other[c] = v
                    else:
                        del other[c]
        self.pivots[p] = row
        return p

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[dict]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows: Iterable[dict], columns: Iterable[int], one) -> list[dict]:
    """Basis of ``{x : row . x = 0 for every row}`` restricted to ``columns``.

    ``one`` is the field's unit, used for the free coordinate.
    """
    ech = Echelon()
    for r in rows:
        ech.add(r)
    basis = []
    for j in sorted(columns):
        if j in ech.pivots:
            continue
        v = {j: one}
        for p, prow in ech.pivots.items():
            x = prow.get(j)
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def solve(rows: Iterable[tuple[dict, object]]) -> dict | None:
    """One solution of ``row . x = rhs`` for each ``(row, rhs)``, or None.

    Free variables are set to zero.
    """
    ech = Echelon()
    rhs_col = -1
    for row, b in rows:
        aug = dict(row)
        if b:
            aug[rhs_col] = -b
        if ech.add(aug, forbidden=rhs_col) == -1:
            return None
    return {p: -prow[rhs_col] for p, prow in ech.pivots.items() if rhs_col in prow}
