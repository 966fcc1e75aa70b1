"""Sparse exact linear algebra over the rationals.

Rows are dicts mapping column index to a nonzero integer; rational input rows
are scaled to integers first (scaling never changes ranks, kernels or spans).
Elimination is fraction-free with eager content removal, which keeps entry
growth near determinant size.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Row = dict[int, int]
FracRow = dict[int, Fraction]


def intify(row: FracRow) -> tuple[Row, int]:
    """Scale a rational row to an integer row.

    Returns ``(irow, scale)`` with ``irow == scale * row`` exactly, so callers
    can track combinations of the original rational rows.
    """
    if not row:
        return {}, 1
    denom = 1
    for c in row.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    out = {j: int(c * denom) for j, c in row.items() if c != 0}
    return out, denom


def _normalize(row: Row) -> Row:
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
    lead = min(row)
    if row[lead] < 0:
        g = -g
    if g != 1:
        row = {j: v // g for j, v in row.items()}
    return row


def _eliminate(row: Row, piv: Row, col: int) -> Row:
    """Return ``a*row - b*piv`` clearing ``col``; not normalized."""
    a = piv[col]
    b = row[col]
    g = gcd(a, b)
    ma = a // g
    mb = b // g
    out = {j: v * ma for j, v in row.items()}
    for j, v in piv.items():
        w = out.get(j, 0) - mb * v
        if w:
            out[j] = w
        elif j in out:
            del out[j]
    return out


class Echelon:
    """Online row echelon form; the pivot of a row is its smallest column."""

    def __init__(self):
        self.pivots: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Row) -> Row:
        row = _normalize(dict(row))
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                break
            row = _normalize(_eliminate(row, piv, col))
        return row

    def add(self, row: Row) -> int | None:
        """Insert a row; returns its pivot column, or None if dependent."""
        row = self.reduce(row)
        if not row:
            return None
        col = min(row)
        self.pivots[col] = row
        return col

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)


def rank_of_rows(rows) -> int:
    ech = Echelon()
    for row in sorted(rows, key=len):
        ech.add(row)
    return ech.rank


def kernel_of_rows(rows: list[FracRow], ncols: int) -> list[FracRow]:
    """Basis of ``{c : sum_i c_i row_i = 0}``, echelonized for determinism.

    Augmented elimination: each input row is tagged with its own unit vector
    in columns ``ncols..``; rows whose matrix part cancels yield kernel
    combinations in the tag part.
    """
    ech = Echelon()
    raw_kernel: list[Row] = []
    for i, frow in enumerate(rows):
        irow, scale = intify(frow)
        aug = dict(irow)
        aug[ncols + i] = scale  # tag tracks coefficients on the *rational* rows
        reduced = _reduce_augmented(ech, aug, ncols)
        if reduced and min(reduced) >= ncols:
            raw_kernel.append(reduced)
        elif reduced:
            ech.pivots[min(reduced)] = reduced
    # Canonicalize the kernel vectors (reduced echelon over the tag columns).
    out = Rref()
    for vec in raw_kernel:
        out.add({j - ncols: v for j, v in vec.items()})
    vectors = [out.pivots[c] for c in sorted(out.pivots)]
    return [{j: Fraction(v) for j, v in vec.items()} for vec in vectors]


def _reduce_augmented(ech: Echelon, row: Row, ncols: int) -> Row:
    # Like Echelon.reduce, but only matrix columns (< ncols) may be pivots.
    row = dict(row)
    while True:
        cols = [c for c in row if c < ncols]
        if not cols:
            break
        col = min(cols)
        piv = ech.pivots.get(col)
        if piv is None:
            break
        row = _eliminate(row, piv, col)
    return _normalize(row)


class Rref:
    """Reduced row echelon form supporting incremental insertion and exact
    reduction of rational vectors modulo the row space."""

    def __init__(self):
        self.pivots: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_columns(self) -> set[int]:
        return set(self.pivots)

    def add(self, frow_or_row) -> int | None:
        if frow_or_row and isinstance(next(iter(frow_or_row.values())), Fraction):
            row, _ = intify(frow_or_row)
        else:
            row = dict(frow_or_row)
        row = self._strip_pivots(row)
        if not row:
            return None
        col = min(row)
        # back-substitute the new pivot column out of existing rows
        for pcol, prow in list(self.pivots.items()):
            if col in prow:
                self.pivots[pcol] = _normalize(_eliminate(prow, row, col))
        self.pivots[col] = row
        return col

    def _strip_pivots(self, row: Row) -> Row:
        """Eliminate every pivot column from a row.  Stored rows never carry
        foreign pivot columns, so each elimination introduces non-pivot
        columns only and the loop terminates."""
        row = _normalize(dict(row))
        while row:
            hits = [c for c in row if c in self.pivots]
            if not hits:
                break
            col = min(hits)
            row = _normalize(_eliminate(row, self.pivots[col], col))
        return row

    def reduce(self, fvec: FracRow) -> FracRow:
        """Canonical representative of ``fvec`` modulo the row space; the
        result is supported on non-pivot columns only."""
        out = {j: Fraction(v) for j, v in fvec.items() if v != 0}
        for col in sorted(out):
            piv = self.pivots.get(col)
            if piv is None or col not in out:
                continue
            coeff = out[col] / piv[col]
            for j, v in piv.items():
                w = out.get(j, Fraction(0)) - coeff * v
                if w:
                    out[j] = w
                elif j in out:
                    del out[j]
        return out
