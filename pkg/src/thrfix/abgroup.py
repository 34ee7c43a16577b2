"""Finitely generated abelian groups over exact integers.

Matrices are lists of rows of Python ints. Group elements are coefficient
vectors in the generators of a presentation; a presentation is a generator
count together with relation rows ``sum_i c_i g_i = 0``.

Everything here is pure: inputs are never mutated.

>>> P = AbelianPresentation(2, ((6, 0), (0, 4)))
>>> P.invariant_factors()
[2, 12]
>>> tensor_product(cyclic(6), cyclic(4)).invariant_factors()
[2]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]
Vector = Tuple[int, ...]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], inner: Optional[int] = None) -> Matrix:
    if inner is None:
        inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * cols
        for k in range(inner):
            a = row[k]
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def transpose(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    if ncols is None:
        ncols = len(A[0]) if A else 0
    return [[row[j] for row in A] for j in range(ncols)]


def vecmat(v: Sequence[int], M: Sequence[Sequence[int]], ncols: int) -> List[int]:
    """Row vector times matrix."""
    out = [0] * ncols
    for vi, row in zip(v, M):
        if vi:
            for j, m in enumerate(row):
                if m:
                    out[j] += vi * m
    return out


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _SNF:
    U: Matrix
    Uinv: Matrix
    D: Matrix
    V: Matrix
    Vinv: Matrix
    diag: Tuple[int, ...]  # nonzero diagonal entries, d_1 | d_2 | ...
    nrows: int
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.diag)


def _snf(M: Sequence[Sequence[int]], ncols: int) -> _SNF:
    r = len(M)
    c = ncols
    A = [list(row) for row in M]
    for row in A:
        if len(row) != c:
            raise ValueError("ragged matrix")
    U, Uinv = identity(r), identity(r)
    V, Vinv = identity(c), identity(c)

    # U*M*V = A is maintained throughout, with Uinv = U^-1, Vinv = V^-1.
    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q == 0:
            return
        a_src, a_dst = A[src], A[dst]
        for k in range(c):
            if a_src[k]:
                a_dst[k] += q * a_src[k]
        u_src, u_dst = U[src], U[dst]
        for k in range(r):
            if u_src[k]:
                u_dst[k] += q * u_src[k]
        for row in Uinv:
            if row[dst]:
                row[src] -= q * row[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        if q == 0:
            return
        for row in A:
            if row[src]:
                row[dst] += q * row[src]
        for row in V:
            if row[src]:
                row[dst] += q * row[src]
        v_src, v_dst = Vinv[src], Vinv[dst]
        for k in range(c):
            if v_dst[k]:
                v_src[k] -= q * v_dst[k]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    def find_pivot(t):
        best = None
        best_abs = 0
        for i in range(t, r):
            row = A[i]
            for j in range(t, c):
                a = row[j]
                if a:
                    aa = abs(a)
                    if best is None or aa < best_abs:
                        best, best_abs = (i, j), aa
                        if aa == 1:
                            return best
        return best

    diag = []
    t = 0
    while t < min(r, c):
        pivot = find_pivot(t)
        if pivot is None:
            break
        while True:
            i, j = pivot
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, r):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, c):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                pivot = find_pivot(t)
                continue
            bad = None
            for i in range(t + 1, r):
                row = A[i]
                for j in range(t + 1, c):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
            pivot = find_pivot(t)
        if A[t][t] < 0:
            negate_row(t)
        diag.append(A[t][t])
        t += 1
    return _SNF(U, Uinv, A, V, Vinv, tuple(diag), r, c)


def smith_normal_form(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U*M*V == D``.

    ``D`` is diagonal with non-negative entries ``d_1 | d_2 | ...`` and ``U``,
    ``V`` are unimodular. Pivoting is deterministic: the smallest nonzero
    absolute value in the remaining block, ties to the lowest row, then
    column. ``ncols`` is only needed when ``M`` has no rows.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    s = _snf(M, ncols)
    return s.U, s.D, s.V


# ---------------------------------------------------------------------------
# Lattices
# ---------------------------------------------------------------------------

class Lattice:
    """The subgroup of Z^dim spanned by a list of integer row vectors.

    One SNF is done up front; membership and coordinate queries afterwards
    are a single vector-matrix product.
    """

    def __init__(self, vectors: Sequence[Sequence[int]], dim: int):
        self.dim = dim
        self.generators = [tuple(v) for v in vectors]
        self._snf = s = _snf(self.generators, dim)
        self.basis = [
            tuple(d * x for x in s.Vinv[i]) for i, d in enumerate(s.diag)
        ]

    @property
    def rank(self) -> int:
        return self._snf.rank

    def _solve_z(self, v: Sequence[int]) -> Optional[List[int]]:
        s = self._snf
        w = vecmat(v, s.V, self.dim)
        z = []
        for i, d in enumerate(s.diag):
            q, rem = divmod(w[i], d)
            if rem:
                return None
            z.append(q)
        if any(w[s.rank:]):
            return None
        return z

    def __contains__(self, v: Sequence[int]) -> bool:
        return self._solve_z(v) is not None

    def coords(self, v: Sequence[int]) -> Optional[List[int]]:
        """Coordinates of ``v`` in :attr:`basis`, or None if not a member."""
        return self._solve_z(v)

    def express(self, v: Sequence[int]) -> Optional[List[int]]:
        """Integer coefficients on :attr:`generators` summing to ``v``."""
        z = self._solve_z(v)
        if z is None:
            return None
        s = self._snf
        z = z + [0] * (s.nrows - len(z))
        return vecmat(z, s.U, s.nrows)


def left_kernel(rows: Sequence[Sequence[int]], ncols: int) -> List[Vector]:
    """A Z-basis of ``{w : w * rows == 0}``."""
    s = _snf(rows, ncols)
    return [tuple(s.U[i]) for i in range(s.rank, s.nrows)]


# ---------------------------------------------------------------------------
# Presentations and maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    """Explicit isomorphism of a presentation with ``⊕ Z/d_i``.

    ``generators[i]`` is a vector in the presentation's generators that maps
    to the i-th cyclic summand; :meth:`coords` goes the other way.
    """

    factors: Tuple[int, ...]
    generators: Tuple[Vector, ...]
    _V: Matrix
    _positions: Tuple[int, ...]

    def coords(self, v: Sequence[int]) -> Vector:
        w = vecmat(v, self._V, len(self._V))
        out = []
        for pos, d in zip(self._positions, self.factors):
            out.append(w[pos] % d if d else w[pos])
        return tuple(out)


@dataclass(frozen=True)
class AbelianPresentation:
    num_generators: int
    relations: Tuple[Vector, ...] = ()

    def __post_init__(self):
        rels = tuple(tuple(int(x) for x in r) for r in self.relations)
        for r in rels:
            if len(r) != self.num_generators:
                raise ValueError(
                    f"relation of length {len(r)} in a presentation with "
                    f"{self.num_generators} generators"
                )
        object.__setattr__(self, "relations", rels)

    @cached_property
    def relation_lattice(self) -> Lattice:
        return Lattice(self.relations, self.num_generators)

    @cached_property
    def _decomposition(self) -> Decomposition:
        s = _snf(self.relations, self.num_generators)
        full = list(s.diag) + [0] * (self.num_generators - s.rank)
        positions = tuple(i for i, d in enumerate(full) if d != 1)
        return Decomposition(
            factors=tuple(full[i] for i in positions),
            generators=tuple(tuple(s.Vinv[i]) for i in positions),
            _V=s.V,
            _positions=positions,
        )

    def decompose(self) -> Decomposition:
        return self._decomposition

    def invariant_factors(self) -> List[int]:
        """Invariant factors ``d_1 | d_2 | ...``; 0 stands for a copy of Z."""
        return list(self._decomposition.factors)

    def order(self) -> Optional[int]:
        """Group order, or None when the group is infinite."""
        f = self.invariant_factors()
        if 0 in f:
            return None
        return prod(f)

    def is_zero(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.relation_lattice

    def zero(self) -> Vector:
        return (0,) * self.num_generators

    def generator(self, i: int) -> Vector:
        return tuple(int(i == j) for j in range(self.num_generators))


def cyclic(n: int) -> AbelianPresentation:
    """Z/n on one generator (n = 0 gives Z)."""
    return AbelianPresentation(1, ((n,),) if n else ())


def free(rank: int) -> AbelianPresentation:
    return AbelianPresentation(rank, ())


def direct_sum(*groups: AbelianPresentation) -> AbelianPresentation:
    n = sum(g.num_generators for g in groups)
    rels = []
    offset = 0
    for g in groups:
        for r in g.relations:
            rels.append((0,) * offset + r + (0,) * (n - offset - g.num_generators))
        offset += g.num_generators
    return AbelianPresentation(n, tuple(rels))


@dataclass(frozen=True)
class GroupMap:
    """A homomorphism given on generators.

    ``matrix`` has ``target.num_generators`` rows and ``source.num_generators``
    columns; column j is the image of source generator j.
    """

    source: AbelianPresentation
    target: AbelianPresentation
    matrix: Tuple[Vector, ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(m) != self.target.num_generators or any(
            len(row) != self.source.num_generators for row in m
        ):
            raise ValueError("matrix shape does not match source/target")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_columns(cls, source, target, columns: Sequence[Sequence[int]]) -> "GroupMap":
        cols = list(columns)
        if len(cols) != source.num_generators:
            raise ValueError("need one column per source generator")
        return cls(source, target, tuple(transpose(cols, target.num_generators)) if cols
                   else tuple(() for _ in range(target.num_generators)))

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.source.num_generators)]

    def __call__(self, v: Sequence[int]) -> Vector:
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.matrix)

    def compose(self, inner: "GroupMap") -> "GroupMap":
        """``self ∘ inner``."""
        if inner.target.num_generators != self.source.num_generators:
            raise ValueError("maps are not composable")
        m = matmul(self.matrix, inner.matrix, self.source.num_generators)
        return GroupMap(inner.source, self.target, tuple(tuple(r) for r in m))

    def is_well_defined(self) -> bool:
        """Every source relation maps into the target's relation subgroup."""
        tl = self.target.relation_lattice
        return all(self(r) in tl for r in self.source.relations)

    def is_zero(self) -> bool:
        return all(self.target.is_zero(c) for c in self.columns())


def _preimage_lattice(f: GroupMap) -> Lattice:
    """``{x in Z^n_source : f(x) = 0 in target}`` as a lattice."""
    ns = f.source.num_generators
    nt = f.target.num_generators
    rows = [list(c) for c in f.columns()] + [[-x for x in r] for r in f.target.relations]
    ker = left_kernel(rows, nt)
    return Lattice([w[:ns] for w in ker], ns)


def kernel(f: GroupMap) -> Tuple[AbelianPresentation, GroupMap]:
    K = _preimage_lattice(f)
    basis = K.basis
    rels = []
    for r in f.source.relations:
        c = K.coords(r)
        if c is None:
            raise ValueError("map is not well defined: a source relation escapes the kernel")
        rels.append(tuple(c))
    P = AbelianPresentation(len(basis), tuple(rels))
    return P, GroupMap.from_columns(P, f.source, basis)


def image(f: GroupMap) -> Tuple[AbelianPresentation, GroupMap]:
    K = _preimage_lattice(f)
    P = AbelianPresentation(f.source.num_generators, tuple(K.basis))
    return P, GroupMap(P, f.target, f.matrix)


def cokernel(f: GroupMap) -> Tuple[AbelianPresentation, GroupMap]:
    return quotient_by_subgroup(f.target, f.columns())


def quotient_by_subgroup(P: AbelianPresentation, gens: Sequence[Sequence[int]]) -> Tuple[AbelianPresentation, GroupMap]:
    for g in gens:
        if len(g) != P.num_generators:
            raise ValueError("subgroup generator has the wrong length")
    Q = AbelianPresentation(P.num_generators, P.relations + tuple(tuple(g) for g in gens))
    return Q, GroupMap(P, Q, tuple(map(tuple, identity(P.num_generators))))


def subgroup(P: AbelianPresentation, gens: Sequence[Sequence[int]]) -> AbelianPresentation:
    """Presentation of the subgroup of P generated by ``gens``."""
    incl = GroupMap.from_columns(free(len(gens)), P, gens)
    return image(incl)[0]


def tensor_product(A: AbelianPresentation, B: AbelianPresentation) -> AbelianPresentation:
    """Generators ``e_i ⊗ f_j`` at index ``i * B.num_generators + j``."""
    na, nb = A.num_generators, B.num_generators
    rels = []
    for r in A.relations:
        for j in range(nb):
            v = [0] * (na * nb)
            for i, c in enumerate(r):
                v[i * nb + j] = c
            rels.append(tuple(v))
    for i in range(na):
        for r in B.relations:
            v = [0] * (na * nb)
            v[i * nb:(i + 1) * nb] = r
            rels.append(tuple(v))
    return AbelianPresentation(na * nb, tuple(rels))


def tensor_vectors(u: Sequence[int], v: Sequence[int]) -> Vector:
    """Coordinates of ``u ⊗ v`` in :func:`tensor_product` indexing."""
    nb = len(v)
    out = [0] * (len(u) * nb)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[i * nb + j] = a * b
    return tuple(out)


def solve_membership(P: AbelianPresentation, subgroup_gens: Sequence[Sequence[int]], x: Sequence[int]) -> Optional[List[int]]:
    """Coefficients ``c`` with ``sum c_k gens_k == x`` modulo relations, or None."""
    k = len(subgroup_gens)
    L = Lattice(list(subgroup_gens) + list(P.relations), P.num_generators)
    y = L.express(x)
    if y is None:
        return None
    return y[:k]
