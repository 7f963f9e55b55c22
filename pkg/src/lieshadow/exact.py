"""Exact integer linear algebra: fraction-free rank and rational solving."""
from __future__ import annotations

from fractions import Fraction


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    ``rows`` is a sequence of equal-length integer sequences; it is copied.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            a = m[r][col]
            row, prow = m[r], m[rank]
            for c in range(col + 1, n_cols):
                # exact division is guaranteed by Sylvester's identity
                row[c] = (p * row[c] - a * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


class RationalSolver:
    """Solve ``A x = b`` for many right-hand sides against a fixed ``A``.

    ``columns`` are the columns of ``A`` as dicts from row key to integer.
    The system is reduced once to row echelon form over the rationals; each
    :meth:`solve` then costs one forward pass plus back substitution.
    """

    def __init__(self, columns):
        self.n = len(columns)
        keys = sorted({k for col in columns for k in col})
        self.row_keys = keys
        index = {k: i for i, k in enumerate(keys)}
        # augmented rows, one per row key, with an identity block to replay ops on b
        rows = []
        for k in keys:
            rows.append([Fraction(col.get(k, 0)) for col in columns])
        self._ops = []  # (pivot_row, target_row, factor) and swaps
        self._pivots = []
        r = 0
        for c in range(self.n):
            p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
            if p is None:
                continue
            if p != r:
                rows[r], rows[p] = rows[p], rows[r]
                self._ops.append(("swap", r, p))
            for i in range(r + 1, len(rows)):
                if rows[i][c] != 0:
                    f = rows[i][c] / rows[r][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                    self._ops.append(("sub", r, i, f))
            self._pivots.append(c)
            r += 1
        self.rank = r
        self._echelon = rows
        self._index = index

    def solve(self, b):
        """Return the list of rational coordinates, or ``None`` if inconsistent.

        Columns that are not pivots get coordinate 0.
        """
        vec = [Fraction(0)] * len(self.row_keys)
        for k, v in b.items():
            i = self._index.get(k)
            if i is None:
                if v != 0:
                    return None
                continue
            vec[i] = Fraction(v)
        for op in self._ops:
            if op[0] == "swap":
                _, a, c = op
                vec[a], vec[c] = vec[c], vec[a]
            else:
                _, a, c, f = op
                vec[c] -= f * vec[a]
        if any(vec[i] != 0 for i in range(self.rank, len(vec))):
            return None
        x = [Fraction(0)] * self.n
        for r in range(self.rank - 1, -1, -1):
            c = self._pivots[r]
            s = vec[r] - sum(self._echelon[r][cc] * x[cc] for cc in range(c + 1, self.n))
            x[c] = s / self._echelon[r][c]
        return x
