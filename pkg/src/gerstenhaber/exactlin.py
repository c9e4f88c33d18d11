"""Exact rational sparse linear algebra.

Everything is done over Q with ``fractions.Fraction`` (always lowest terms,
positive denominator), so rank / kernel / span decisions are exact.  Pivoting
is deterministic: columns are processed left to right and the pivot row is the
one with the lowest index among the rows not yet used.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Optional


class SparseMat:
    """Sparse matrix over Q, stored as {(row, col): Fraction} without zeros."""

    def __init__(self, nrows: int, ncols: int, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (r, c), v in items:
                self[r, c] = v

    def __getitem__(self, rc) -> Fraction:
        return self.entries.get(rc, Fraction(0))

    def __setitem__(self, rc, v):
        r, c = rc
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError(f"entry {rc} outside {self.nrows}x{self.ncols}")
        v = Fraction(v)
        if v == 0:
            self.entries.pop(rc, None)
        else:
            self.entries[rc] = v

    def __eq__(self, other):
        return (
            isinstance(other, SparseMat)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"SparseMat({self.nrows}x{self.ncols}, nnz={len(self.entries)})"

    def is_zero(self) -> bool:
        return not self.entries

    def rows(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def mul(self, other: "SparseMat") -> "SparseMat":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        cols: dict[int, dict[int, Fraction]] = {}
        for (r, c), v in other.entries.items():
            cols.setdefault(c, {})[r] = v
        rows = self.rows()
        out = SparseMat(self.nrows, other.ncols)
        for j, col in cols.items():
            for i in range(self.nrows):
                row = rows[i]
                if not row:
                    continue
                s = Fraction(0)
                if len(row) < len(col):
                    for k, v in row.items():
                        w = col.get(k)
                        if w is not None:
                            s += v * w
                else:
                    for k, w in col.items():
                        v = row.get(k)
                        if v is not None:
                            s += v * w
                if s:
                    out[i, j] = s
        return out

    def mul_vec(self, x: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (r, c), v in self.entries.items():
            xc = x.get(c)
            if xc:
                s = out.get(r, Fraction(0)) + v * xc
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out

    def to_matrixmarket(self) -> str:
        """Matrix Market coordinate format, rationals written as p/q."""
        lines = [
            "%%MatrixMarket matrix coordinate rational general",
            f"{self.nrows} {self.ncols} {len(self.entries)}",
        ]
        for (r, c) in sorted(self.entries):
            v = self.entries[(r, c)]
            lines.append(f"{r + 1} {c + 1} {v.numerator}/{v.denominator}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        ents = [
            [r, c, f"{v.numerator}/{v.denominator}"]
            for (r, c), v in sorted(self.entries.items())
        ]
        return json.dumps(
            {"nrows": self.nrows, "ncols": self.ncols, "entries": ents}
        )


def _echelonize(rowdicts: list[dict[int, Fraction]], ncols: int):
    """In-place row echelon with unit pivots and full back-elimination.

    Returns (reduced rows, pivot column list).  Row order is preserved up to
    the deterministic swaps (lowest-index nonzero row becomes the pivot row).
    """
    pivots: list[int] = []
    prow = 0
    nrows = len(rowdicts)
    for col in range(ncols):
        sel = None
        for r in range(prow, nrows):
            if rowdicts[r].get(col):
                sel = r
                break
        if sel is None:
            continue
        rowdicts[prow], rowdicts[sel] = rowdicts[sel], rowdicts[prow]
        piv = rowdicts[prow]
        inv = 1 / piv[col]
        if inv != 1:
            for c in list(piv):
                piv[c] *= inv
        for r in range(nrows):
            if r == prow:
                continue
            f = rowdicts[r].get(col)
            if not f:
                continue
            row = rowdicts[r]
            for c, v in piv.items():
                s = row.get(c, Fraction(0)) - f * v
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    return rowdicts, pivots


def rref(m: SparseMat) -> tuple[SparseMat, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows, pivots = _echelonize(m.rows(), m.ncols)
    out = SparseMat(m.nrows, m.ncols)
    for r, row in enumerate(rows):
        for c, v in row.items():
            out[r, c] = v
    return out, pivots


def rank(m: SparseMat) -> int:
    _, pivots = _echelonize(m.rows(), m.ncols)
    return len(pivots)


def kernel_basis(m: SparseMat) -> list[dict[int, Fraction]]:
    """Basis of the right null space, one sparse column vector per free column."""
    rows, pivots = _echelonize(m.rows(), m.ncols)
    pivset = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivset:
            continue
        vec = {free: Fraction(1)}
        for r, col in enumerate(pivots):
            v = rows[r].get(free)
            if v:
                vec[col] = -v
        basis.append(vec)
    return basis


def solve_in_column_span(
    m: SparseMat, b: dict[int, Fraction] | Iterable[Fraction]
) -> Optional[dict[int, Fraction]]:
    """Some exact x with m.x = b, or None when b is outside the column span.

    Free variables are set to 0, so the answer is deterministic.
    """
    if not isinstance(b, dict):
        b = {i: Fraction(v) for i, v in enumerate(b) if v}
        # length check happens below through nrows bound
    for r in b:
        if not 0 <= r < m.nrows:
            raise ValueError("right-hand side has wrong length")
    rows = m.rows()
    aug = m.ncols
    for r, v in b.items():
        if v:
            rows[r][aug] = Fraction(v)
    rows, pivots = _echelonize(rows, m.ncols + 1)
    if pivots and pivots[-1] == aug:
        return None
    x: dict[int, Fraction] = {}
    for r, col in enumerate(pivots):
        v = rows[r].get(aug)
        if v:
            x[col] = v
    return x
