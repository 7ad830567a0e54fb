"""Pure-Python streaming rank accumulator over F_p (fallback backend).

Rows arrive one at a time as (columns, values) pairs; the accumulator keeps
an echelon set of pivot rows and reduces each arrival against it.  Stored
rows are normalized to leading coefficient 1 and their tails only contain
columns strictly greater than the lead, so reduction always moves forward.
Duplicate column indices within a row are accumulated; negative column
indices are padding and get skipped.
"""

from __future__ import annotations

import heapq


class RankAccumulator:
    def __init__(self, ncols: int, p: int):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        self.p = p
        self.ncols = ncols
        self.rank = 0
        self._buf = [0] * ncols
        self._piv = [-1] * ncols
        self._rows_cols: list[list[int]] = []
        self._rows_vals: list[list[int]] = []
        self._inv = [0] * p
        for a in range(1, p):
            self._inv[a] = pow(a, p - 2, p)

    @property
    def full(self) -> bool:
        return self.rank == self.ncols

    def add_row(self, cols, vals) -> bool:
        """Reduce one row; returns True if it increased the rank."""
        p = self.p
        buf = self._buf
        heap: list[int] = []
        for c, v in zip(cols, vals):
            c = int(c)
            if c < 0:
                continue
            v = int(v) % p
            if v == 0:
                continue
            if buf[c] == 0:
                heapq.heappush(heap, c)
            buf[c] = (buf[c] + v) % p
        piv = self._piv
        while heap:
            c = heapq.heappop(heap)
            w = buf[c]
            if w == 0:
                continue
            r = piv[c]
            if r < 0:
                inv = self._inv[w]
                cols_out = [c]
                vals_out = [1]
                buf[c] = 0
                while heap:
                    c2 = heapq.heappop(heap)
                    w2 = buf[c2]
                    if w2:
                        cols_out.append(c2)
                        vals_out.append(w2 * inv % p)
                        buf[c2] = 0
                piv[c] = len(self._rows_cols)
                self._rows_cols.append(cols_out)
                self._rows_vals.append(vals_out)
                self.rank += 1
                return True
            rc = self._rows_cols[r]
            rv = self._rows_vals[r]
            for c2, v2 in zip(rc, rv):
                old = buf[c2]
                new = (old - w * v2) % p
                if old == 0 and new:
                    heapq.heappush(heap, c2)
                buf[c2] = new
        return False

    def add_rows(self, cols2d, vals2d) -> int:
        added = 0
        for cols, vals in zip(cols2d, vals2d):
            if self.add_row(cols, vals):
                added += 1
        return added
