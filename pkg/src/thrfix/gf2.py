"""GF(2) linear algebra on int bitsets (bit i = coordinate i)."""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple


class F2Span:
    """Incrementally maintained subspace of GF(2)^dim.

    Each stored row has a distinct leading (highest) bit. After
    :meth:`reduce` a vector has no bits at pivot positions, so the unit
    vectors at non-pivot positions form a basis of the quotient.
    """

    def __init__(self, dim: int, vectors: Iterable[int] = ()):
        self.dim = dim
        self._rows: Dict[int, int] = {}
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, v: int) -> int:
        rows = self._rows
        out = 0
        while v:
            top = v.bit_length() - 1
            r = rows.get(top)
            if r is None:
                out |= 1 << top
                v ^= 1 << top
            else:
                v ^= r
        return out

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        self._rows[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def complement(self) -> List[int]:
        """Positions whose unit vectors span a complement, ascending."""
        return [i for i in range(self.dim) if i not in self._rows]

    def basis(self) -> List[int]:
        return [self._rows[p] for p in sorted(self._rows)]


def bits(v: int, dim: int) -> Tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(dim))


def from_bits(seq: Sequence[int]) -> int:
    out = 0
    for i, b in enumerate(seq):
        if b % 2:
            out |= 1 << i
    return out


def outer(u: int, v: int, nv: int) -> int:
    """Bitset of ``u ⊗ v`` with index ``i * nv + j``."""
    out = 0
    i = 0
    while u:
        if u & 1:
            out |= v << (i * nv)
        u >>= 1
        i += 1
    return out


def kernel_of_columns(columns: Sequence[int]) -> List[int]:
    """Basis of ``{c : sum_i c_i * columns[i] = 0}`` as bitsets over the columns."""
    pivots: Dict[int, Tuple[int, int]] = {}
    kernel = []
    for i, col in enumerate(columns):
        v, comb = col, 1 << i
        while v:
            top = v.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                break
            v ^= hit[0]
            comb ^= hit[1]
        if v:
            pivots[v.bit_length() - 1] = (v, comb)
        else:
            kernel.append(comb)
    return kernel


def rank_of_columns(columns: Sequence[int], dim: int) -> int:
    return F2Span(dim, columns).rank


def invert(columns: Sequence[int]) -> Optional[List[int]]:
    """Inverse of the square matrix with the given columns, as columns."""
    n = len(columns)
    # Gauss-Jordan on rows of [M | I]; row r of M has bit c iff columns[c] has bit r
    rows = []
    for r in range(n):
        m = 0
        for c, col in enumerate(columns):
            if (col >> r) & 1:
                m |= 1 << c
        rows.append([m, 1 << r])
    for c in range(n):
        p = next((r for r in range(c, n) if (rows[r][0] >> c) & 1), None)
        if p is None:
            return None
        rows[c], rows[p] = rows[p], rows[c]
        for r in range(n):
            if r != c and (rows[r][0] >> c) & 1:
                rows[r][0] ^= rows[c][0]
                rows[r][1] ^= rows[c][1]
    # rows[r][1] is row r of the inverse
    out = []
    for c in range(n):
        col = 0
        for r in range(n):
            if (rows[r][1] >> c) & 1:
                col |= 1 << r
        out.append(col)
    return out


def apply(columns: Sequence[int], v: int) -> int:
    out = 0
    i = 0
    while v:
        if v & 1:
            out ^= columns[i]
        v >>= 1
        i += 1
    return out
