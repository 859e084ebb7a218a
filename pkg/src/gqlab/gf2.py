"""Bit-packed linear algebra over GF(2) for 3x3 matrices and 6-bit vectors.

Packing conventions, fixed for the whole package:

* ``Mat3``: an int of 9 bits, row-major, bit 8 = entry (1,1) down to
  bit 0 = entry (3,3).
* ``SymMat3``: an int of 6 bits ``(a, b, c, d, e, f)`` for the symmetric
  matrix ``[[a, b, c], [b, d, e], [c, e, f]]``, bit 5 = ``a`` down to
  bit 0 = ``f``.  XOR of two packed values is matrix addition.  The
  canonical text form is the bit string ``"abcdef"``.
* ``GfVec6``: an int of 6 bits, bit 5 = first coordinate; text form is the
  bit string of the six coordinates.
* Row vectors of length 3: ints 0..7, bit 2 = first coordinate.

Everything here is a pure function on small ints, so the module is safe
for unrestricted concurrent use.
"""

from __future__ import annotations

from typing import Iterable


class SingularMatrixError(ValueError):
    """Inverse requested for a matrix with determinant 0."""


MAT_IDENTITY = 0b100_010_001
SYM_IDENTITY = 0b100101


def bits6(value: int) -> str:
    """Canonical 6-character bit string of a SymMat3 or GfVec6."""
    return format(value, "06b")


def parse_bits6(text: str) -> int:
    """Parse the canonical 6-character 0/1 string; raises ValueError otherwise."""
    if len(text) != 6 or any(ch not in "01" for ch in text):
        raise ValueError(f"expected 6 characters over 0/1, got {text!r}")
    return int(text, 2)


def sym_entries(s: int) -> tuple[int, int, int, int, int, int]:
    """The upper-triangle bits (a, b, c, d, e, f) of a packed SymMat3."""
    return (s >> 5 & 1, s >> 4 & 1, s >> 3 & 1, s >> 2 & 1, s >> 1 & 1, s & 1)


def sym_to_mat(s: int) -> int:
    """Expand a packed SymMat3 into the full 9-bit Mat3."""
    a, b, c, d, e, f = sym_entries(s)
    return ((a << 2 | b << 1 | c) << 6) | ((b << 2 | d << 1 | e) << 3) | (c << 2 | e << 1 | f)


def mat_row(m: int, i: int) -> int:
    """Row i (0-based) of a Mat3 as a 3-bit row vector."""
    return m >> (6 - 3 * i) & 7


def mat_from_rows(rows: Iterable[int]) -> int:
    r0, r1, r2 = rows
    return r0 << 6 | r1 << 3 | r2


def mat_transpose(m: int) -> int:
    t = 0
    for i in range(3):
        for j in range(3):
            t |= (m >> (8 - 3 * i - j) & 1) << (8 - 3 * j - i)
    return t


def is_symmetric(m: int) -> bool:
    return m == mat_transpose(m)


def mat_to_sym(m: int) -> int:
    """Pack a symmetric Mat3 into 6 bits; raises ValueError if not symmetric."""
    if not is_symmetric(m):
        raise ValueError(f"matrix {m:09b} is not symmetric")
    r0, r1, r2 = mat_row(m, 0), mat_row(m, 1), mat_row(m, 2)
    return (r0 << 3) | ((r1 & 0b011) << 1) | (r2 & 1)


def row_times_mat(v: int, m: int) -> int:
    """Row vector times matrix: XOR of the rows of m selected by v."""
    acc = 0
    for i in range(3):
        if v >> (2 - i) & 1:
            acc ^= mat_row(m, i)
    return acc


def mat_mul(x: int, y: int) -> int:
    return mat_from_rows(row_times_mat(mat_row(x, i), y) for i in range(3))


def det3(m: int) -> int:
    """Determinant of a Mat3; over GF(2) all cofactor signs vanish."""
    a, b, c = m >> 8 & 1, m >> 7 & 1, m >> 6 & 1
    d, e, f = m >> 5 & 1, m >> 4 & 1, m >> 3 & 1
    g, h, i = m >> 2 & 1, m >> 1 & 1, m & 1
    return (a & (e & i ^ f & h)) ^ (b & (d & i ^ f & g)) ^ (c & (d & h ^ e & g))


def sym_det(s: int) -> int:
    return det3(sym_to_mat(s))


def _minor2(m: int, row: int, col: int) -> int:
    rows = [r for r in range(3) if r != row]
    cols = [c for c in range(3) if c != col]

    def entry(r: int, c: int) -> int:
        return m >> (8 - 3 * r - c) & 1

    return entry(rows[0], cols[0]) & entry(rows[1], cols[1]) ^ entry(rows[0], cols[1]) & entry(rows[1], cols[0])


def inverse3(m: int) -> int:
    """Inverse of a Mat3 via the adjugate (no signs over GF(2))."""
    if det3(m) != 1:
        raise SingularMatrixError(f"matrix {m:09b} is singular")
    out = 0
    for r in range(3):
        for c in range(3):
            out |= _minor2(m, c, r) << (8 - 3 * r - c)
    return out


def rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon basis of the span of int-packed rows.

    Pivots are taken on the leftmost (highest) set bit, so the result is
    the unique RREF with rows ordered by descending leading bit.  Zero
    rows are dropped.
    """
    pivots: dict[int, int] = {}
    for row in rows:
        for bit in sorted(pivots, reverse=True):
            if row >> bit & 1:
                row ^= pivots[bit]
        if row:
            lead = row.bit_length() - 1
            for bit, prow in list(pivots.items()):
                if prow >> lead & 1:
                    pivots[bit] = prow ^ row
            pivots[lead] = row
    return tuple(pivots[bit] for bit in sorted(pivots, reverse=True))


def row_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a matrix given as int-packed rows (any width)."""
    return len(rref(rows))


def mat_rank(m: int) -> int:
    """Rank of a Mat3 over GF(2)."""
    return row_rank(mat_row(m, i) for i in range(3))


def eigenspace_one(m: int) -> tuple[int, ...]:
    """All row vectors v with v*m = v, zero included; always a subspace.

    The domain has 8 vectors, so plain enumeration is the implementation.
    """
    return tuple(v for v in range(8) if row_times_mat(v, m) == v)


def eigenspace_dim(m: int) -> int:
    return len(eigenspace_one(m)).bit_length() - 1
