"""Exact GF(2) linear algebra on machine-word-packed bit rows.

Vectors and matrix rows are Python ints used as bitsets (bit i = coordinate
i), so a row operation is a single XOR regardless of width.  Empty matrices
(0 rows or 0 columns) are legal and have rank 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class BitVector:
    """GF(2) vector of fixed length; bit i of ``bits`` holds coordinate i."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("BitVector length must be >= 0")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("BitVector has bits set beyond its length")

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> BitVector:
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise ValueError(f"index {i} outside 0..{length - 1}")
            bits |= 1 << i
        return cls(length, bits)

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> BitVector:
        bits = 0
        length = 0
        for c in coords:
            if c not in (0, 1):
                raise ValueError("coordinates must be 0 or 1")
            bits |= c << length
            length += 1
        return cls(length, bits)

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    def coords(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.length))

    def __xor__(self, other: BitVector) -> BitVector:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)


@dataclass(frozen=True)
class BitMatrix:
    """GF(2) matrix stored as one int bit-row per matrix row."""

    cols: int
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ValueError("BitMatrix cols must be >= 0")
        for r in self.rows:
            if r < 0 or r >> self.cols:
                raise ValueError("matrix row wider than cols")

    @classmethod
    def from_dense(cls, dense: Iterable[Iterable[int]], cols: Optional[int] = None) -> BitMatrix:
        rows = []
        for dr in dense:
            v = BitVector.from_coords(dr)
            if cols is None:
                cols = v.length
            elif v.length != cols:
                raise ValueError("ragged rows")
            rows.append(v.bits)
        if cols is None:
            raise ValueError("cannot infer cols from an empty iterable; pass cols=")
        return cls(cols, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, nrows: int, cols: int) -> BitMatrix:
        return cls(cols, (0,) * nrows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, r: int, c: int) -> int:
        if not 0 <= c < self.cols:
            raise IndexError(c)
        return (self.rows[r] >> c) & 1

    def row(self, r: int) -> BitVector:
        return BitVector(self.cols, self.rows[r])

    def transpose(self) -> BitMatrix:
        cols = []
        for c in range(self.cols):
            v = 0
            for r, row in enumerate(self.rows):
                v |= ((row >> c) & 1) << r
            cols.append(v)
        return BitMatrix(self.nrows, tuple(cols))

    def stack_row_on_top(self, bits: int) -> BitMatrix:
        return BitMatrix(self.cols, (bits,) + self.rows)


# -- low-level helpers on raw int rows (hot path for coalition scans) --------


def echelon_basis(rows: Iterable[int]) -> dict[int, int]:
    """Echelon basis keyed by leading (highest) bit; values span the rows."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            p = basis.get(h)
            if p is None:
                basis[h] = r
                break
            r ^= p
    return basis


def reduce_bits(vec: int, basis: dict[int, int]) -> int:
    """Residual of ``vec`` after elimination against an echelon basis."""
    while vec:
        p = basis.get(vec.bit_length() - 1)
        if p is None:
            break
        vec ^= p
    return vec


def in_span(vec: int, basis: dict[int, int]) -> bool:
    return reduce_bits(vec, basis) == 0


# -- public operations --------------------------------------------------------


def rank(m: BitMatrix) -> int:
    """Dimension of the row space over GF(2); 0 for empty matrices."""
    return len(echelon_basis(m.rows))


def _rref(m: BitMatrix, rhs: Optional[int] = None) -> tuple[dict[int, int], Optional[int], bool]:
    """Reduced row echelon form with pivots at the lowest column index.

    Returns (pivot column -> reduced row, rhs bits keyed like rows via an
    extra bit at position ``cols``, consistent).  With ``rhs`` given, rows
    carry their right-hand-side bit at position ``cols`` and ``consistent``
    reports solvability.
    """
    cols = m.cols
    work = list(m.rows)
    if rhs is not None:
        work = [m.rows[i] | (((rhs >> i) & 1) << cols) for i in range(m.nrows)]
    colmask = (1 << cols) - 1
    pivots: dict[int, int] = {}
    consistent = True
    for r in work:
        while r & colmask:
            p = (r & -r).bit_length() - 1
            q = pivots.get(p)
            if q is None:
                pivots[p] = r
                break
            r ^= q
        else:
            if r:  # zero row with rhs bit set: 0 = 1
                consistent = False
    # back-substitute so each pivot column appears in exactly one row
    for p in sorted(pivots, reverse=True):
        rp = pivots[p]
        for q in pivots:
            if q < p and (pivots[q] >> p) & 1:
                pivots[q] ^= rp
    return pivots, rhs, consistent


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Canonical basis of {x : M x = 0}, one vector per free column."""
    pivots, _, _ = _rref(m)
    basis = []
    for f in range(m.cols):
        if f in pivots:
            continue
        v = 1 << f
        for p, row in pivots.items():
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(BitVector(m.cols, v))
    return basis


def solve(m: BitMatrix, b: BitVector) -> Optional[BitVector]:
    """Some x with M x = b, or None if b is outside the column space.

    Ties are broken deterministically: among all solutions the returned x is
    lexicographically smallest with coordinate 0 most significant.
    """
    if b.length != m.nrows:
        raise ValueError(f"rhs length {b.length} != rows {m.nrows}")
    pivots, _, consistent = _rref(m, rhs=b.bits)
    if not consistent:
        return None
    colmask = (1 << m.cols) - 1
    x = 0
    for p, row in pivots.items():
        if row >> m.cols:  # rhs bit of this pivot row
            x |= 1 << p
    # lex-minimise over the solution coset: reduce against a kernel basis
    # re-echelonised on the lowest set bit, clearing low coordinates first
    low_basis: dict[int, int] = {}
    for kv in kernel_basis(m):
        v = kv.bits
        while v:
            lo = (v & -v).bit_length() - 1
            q = low_basis.get(lo)
            if q is None:
                low_basis[lo] = v
                break
            v ^= q
    for lo in sorted(low_basis):
        if (x >> lo) & 1:
            x ^= low_basis[lo]
    return BitVector(m.cols, x & colmask)


def mat_vec(m: BitMatrix, x: BitVector) -> BitVector:
    """GF(2) matrix-vector product."""
    if x.length != m.cols:
        raise ValueError(f"vector length {x.length} != cols {m.cols}")
    out = 0
    for i, row in enumerate(m.rows):
        out |= ((row & x.bits).bit_count() & 1) << i
    return BitVector(m.nrows, out)
