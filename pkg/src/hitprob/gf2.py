"""Streaming echelon basis over GF(2), bit-packed into 64-bit words.

Rows are numpy uint64 arrays; column c lives in word c >> 6, bit c & 63.
Column 0 is by convention the LARGEST monomial of the degree slice, so a
stored row's pivot (its first set column) is the leading monomial of a hit
element and the pivot set is exactly the set of inadmissible leading
monomials.

Stored rows are reduced against all earlier pivots on insertion (forward
reduction); queries are fully reduced, so `normal_form` returns the unique
representative with no set bit in any pivot column regardless of insertion
order.
"""

from __future__ import annotations

import struct
from typing import Iterable, Sequence, Set

import numpy as np
from numba import njit


@njit(cache=True)
def _reduce(mat, ends, col2row, row):
    """Reduce `row` in place by the stored pivot rows.

    Returns (pivot_col, end_word): the first irreducible set column and the
    last nonzero word of the reduced row, or (-1, -1) if it reduced to zero.
    """
    nw = row.shape[0]
    rend = nw - 1
    while rend >= 0 and row[rend] == 0:
        rend -= 1
    w = 0
    while w <= rend:
        x = row[w]
        if x == 0:
            w += 1
            continue
        b = 0
        while (x >> np.uint64(b)) & np.uint64(1) == 0:
            b += 1
        col = (w << 6) + b
        r = col2row[col]
        if r < 0:
            return col, rend
        e = ends[r]
        for j in range(w, e + 1):
            row[j] ^= mat[r, j]
        if e > rend:
            rend = e
        while rend >= 0 and row[rend] == 0:
            rend -= 1
    return -1, -1


@njit(cache=True)
def _full_reduce(mat, ends, col2row, row):
    """Clear every pivot column of `row` in place, lowest column first.

    Eliminating a pivot can only set bits in higher columns, so one upward
    sweep with a skip mask for the non-pivot bits terminates with the unique
    representative supported away from the pivot columns.
    """
    nw = row.shape[0]
    one = np.uint64(1)
    w = 0
    while w < nw:
        skip = np.uint64(0)
        while True:
            x = row[w] & ~skip
            if x == 0:
                break
            b = 0
            while (x >> np.uint64(b)) & one == 0:
                b += 1
            col = (w << 6) + b
            r = col2row[col]
            if r < 0:
                skip |= one << np.uint64(b)
                continue
            e = ends[r]
            for j in range(w, e + 1):
                row[j] ^= mat[r, j]
        w += 1


class EchelonBasis:
    """Incremental row-reduced GF(2) subspace keyed by pivot columns."""

    def __init__(self, column_count: int):
        if column_count < 0:
            raise ValueError("column_count must be non-negative")
        self.column_count = column_count
        self.words = max(1, (column_count + 63) >> 6)
        self._cap = 64
        self._mat = np.zeros((self._cap, self.words), dtype=np.uint64)
        self._ends = np.zeros(self._cap, dtype=np.int64)
        self._col2row = np.full(column_count, -1, dtype=np.int64)
        self.rank = 0
        self._pivot_cols: list = []

    # -- row constructors --------------------------------------------------

    def row_from_columns(self, cols: Iterable[int]) -> np.ndarray:
        row = np.zeros(self.words, dtype=np.uint64)
        for c in cols:
            if not 0 <= c < self.column_count:
                raise ValueError(f"column {c} out of range")
            row[c >> 6] ^= np.uint64(1) << np.uint64(c & 63)
        return row

    def row_from_bits(self, bits: Sequence[int]) -> np.ndarray:
        if len(bits) != self.column_count:
            raise ValueError("bit vector length does not match column count")
        return self.row_from_columns(c for c, b in enumerate(bits) if b)

    @staticmethod
    def row_columns(row: np.ndarray) -> list:
        out = []
        for w in range(row.shape[0]):
            x = int(row[w])
            while x:
                b = x & -x
                out.append((w << 6) + b.bit_length() - 1)
                x ^= b
        return out

    def _coerce(self, row) -> np.ndarray:
        if isinstance(row, np.ndarray) and row.dtype == np.uint64:
            if row.shape != (self.words,):
                raise ValueError("row has wrong word count")
            return row
        return self.row_from_bits(list(row))

    # -- core operations ----------------------------------------------------

    def insert(self, row) -> bool:
        """Reduce and store; True iff the row enlarged the subspace.

        When `row` is a uint64 word array it is consumed (reduced in place).
        """
        row = self._coerce(row)
        piv, rend = _reduce(self._mat, self._ends, self._col2row, row)
        if piv < 0:
            return False
        if self.rank == self._cap:
            self._grow()
        w = piv >> 6
        self._mat[self.rank, w : rend + 1] = row[w : rend + 1]
        self._ends[self.rank] = rend
        self._col2row[piv] = self.rank
        self._pivot_cols.append(piv)
        self.rank += 1
        return True

    def insert_columns(self, cols: Iterable[int]) -> bool:
        return self.insert(self.row_from_columns(cols))

    def normal_form(self, row) -> np.ndarray:
        """Fully reduced copy: zero iff the row is in the span."""
        row = self._coerce(row).copy()
        _full_reduce(self._mat, self._ends, self._col2row, row)
        return row

    def contains(self, row) -> bool:
        return not self.normal_form(row).any()

    def pivot_columns(self) -> Set[int]:
        return set(self._pivot_cols)

    def is_pivot(self, col: int) -> bool:
        return self._col2row[col] >= 0

    def _grow(self) -> None:
        self._cap *= 2
        mat = np.zeros((self._cap, self.words), dtype=np.uint64)
        mat[: self.rank] = self._mat[: self.rank]
        self._mat = mat
        ends = np.zeros(self._cap, dtype=np.int64)
        ends[: self.rank] = self._ends[: self.rank]
        self._ends = ends

    # -- checkpointing -------------------------------------------------------

    def dump(self, path) -> None:
        """column_count and rank as little-endian int64, then the pivot rows
        row-major as little-endian 64-bit words."""
        with open(path, "wb") as fh:
            fh.write(struct.pack("<qq", self.column_count, self.rank))
            rows = self._mat[: self.rank]
            fh.write(np.ascontiguousarray(rows, dtype="<u8").tobytes())

    @classmethod
    def load(cls, path) -> "EchelonBasis":
        with open(path, "rb") as fh:
            column_count, rank = struct.unpack("<qq", fh.read(16))
            basis = cls(column_count)
            data = np.frombuffer(fh.read(), dtype="<u8")
        if data.size != rank * basis.words:
            raise ValueError("truncated echelon checkpoint")
        mat = data.reshape(rank, basis.words).astype(np.uint64)
        cap = max(64, rank)
        basis._cap = cap
        basis._mat = np.zeros((cap, basis.words), dtype=np.uint64)
        basis._mat[:rank] = mat
        basis._ends = np.zeros(cap, dtype=np.int64)
        for r in range(rank):
            nz = np.nonzero(mat[r])[0]
            if nz.size == 0:
                raise ValueError("zero row in echelon checkpoint")
            basis._ends[r] = nz[-1]
            first = int(nz[0])
            x = int(mat[r, first])
            piv = (first << 6) + (x & -x).bit_length() - 1
            basis._col2row[piv] = r
            basis._pivot_cols.append(piv)
        basis.rank = rank
        return basis


def gf2_rank_dense(rows: list, n_cols: int) -> int:
    """Naive reference rank over GF(2) on int bitmasks (tests/oracles)."""
    work = [int(r) for r in rows]
    rank = 0
    for col in range(n_cols):
        piv = None
        for idx in range(rank, len(work)):
            if (work[idx] >> col) & 1:
                piv = idx
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for idx in range(len(work)):
            if idx != rank and (work[idx] >> col) & 1:
                work[idx] ^= work[rank]
        rank += 1
    return rank
