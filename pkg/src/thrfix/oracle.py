"""Brute-force cross-checks for the geometric fixed point computation.

* :func:`homology_H1` builds the chain complex of the simplicial abelian
  group ``(R[S^1 ∧ S^1])^{α∘ω} / R[*]`` straight from the simplicial
  structure of the 2-sphere and takes first homology over Z. It must agree
  with ``R^α / N(R)``.
* :func:`coequalizer_pi0` computes ``coker(d0 - d1)`` with integer
  presentations, using the H1 model for Q. No 2-torsion shortcut is used.
* :func:`brute_force_relation_subgroup` enumerates the generators of I for
  every s in a finite ring.

The unnormalized complex is used throughout (degenerate simplices included,
``∂ = Σ (-1)^i d_i``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import gf2
from .abgroup import (
    AbelianPresentation,
    GroupMap,
    Lattice,
    cokernel,
    kernel,
    tensor_product,
    tensor_vectors,
)
from .errors import CrossCheckError, InputError
from .geomfix import GeomFixResult, NormQuotient, norm_quotient, resolve_max_enum
from .ring_inv import Element, RingWithInvolution, fixed_subgroup

BASE = "*"
Simplex = Union[str, Tuple[int, int]]


# ---------------------------------------------------------------------------
# S^2 = S^1 ∧ S^1 as a simplicial set
# ---------------------------------------------------------------------------

def _face_index(i: int, s: int) -> int:
    return i if i <= s else i - 1


def _degeneracy_index(i: int, j: int) -> int:
    return i if i <= j else i + 1


@dataclass(frozen=True)
class SimplicialSmashSphere:
    """Level ``k`` of ``S^1[-] ∧ S^1[-]``.

    ``x_a ∧ x_b`` is stored as ``(a, b)`` with ``1 <= a, b <= k``; anything
    touching ``x_0`` or ``x_{k+1}`` is the basepoint :data:`BASE`.
    """

    level: int
    simplices: Tuple[Simplex, ...]

    @property
    def nondegenerate_base(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(s for s in self.simplices if s != BASE)

    def face(self, s: int, x: Simplex) -> Simplex:
        k = self.level
        if not 0 <= s <= k or k == 0:
            raise ValueError(f"no face d_{s} at level {k}")
        if x == BASE:
            return BASE
        a, b = _face_index(x[0], s), _face_index(x[1], s)
        if a in (0, k) or b in (0, k):
            return BASE
        return (a, b)

    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        if not 0 <= j <= self.level:
            raise ValueError(f"no degeneracy s_{j} at level {self.level}")
        if x == BASE:
            return BASE
        return (_degeneracy_index(x[0], j), _degeneracy_index(x[1], j))

    @staticmethod
    def swap(x: Simplex) -> Simplex:
        return x if x == BASE else (x[1], x[0])


def simplicial_sphere(k: int) -> SimplicialSmashSphere:
    if k < 0:
        raise ValueError("level must be >= 0")
    diag = [(a, a) for a in range(1, k + 1)]
    off = [(a, b) for a in range(1, k + 1) for b in range(1, k + 1) if a != b]
    return SimplicialSmashSphere(k, (BASE,) + tuple(diag) + tuple(off))


# ---------------------------------------------------------------------------
# the fixed chain complex
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FixedChainComplex:
    """Degrees ``0..max_deg`` of the α∘ω fixed chain complex.

    ``ambient[k]`` is ``R[S^2[k]]/R[*]`` (block per non-base simplex),
    ``inclusions[k]`` embeds ``groups[k]`` in it and ``boundaries[k]`` is
    ``∂_k : groups[k] -> groups[k-1]`` for ``k >= 1``.
    """

    ring: RingWithInvolution
    spheres: Tuple[SimplicialSmashSphere, ...]
    ambient: Tuple[AbelianPresentation, ...]
    groups: Tuple[AbelianPresentation, ...]
    inclusions: Tuple[GroupMap, ...]
    boundaries: Dict[int, GroupMap] = field(default_factory=dict)

    @property
    def max_deg(self) -> int:
        return len(self.groups) - 1

    def boundary_squares_vanish(self) -> bool:
        return all(
            self.boundaries[k - 1].compose(self.boundaries[k]).is_zero()
            for k in range(2, self.max_deg + 1)
        )


def _ambient(R: RingWithInvolution, sphere: SimplicialSmashSphere) -> AbelianPresentation:
    nb = sphere.nondegenerate_base
    n = R.n
    N = n * len(nb)
    rels = []
    for blk in range(len(nb)):
        for i, d in enumerate(R.orders):
            if d:
                v = [0] * N
                v[blk * n + i] = d
                rels.append(tuple(v))
    return AbelianPresentation(N, tuple(rels))


def _ambient_boundary(R: RingWithInvolution, sphere: SimplicialSmashSphere,
                      lower: SimplicialSmashSphere, v: Sequence[int]) -> List[int]:
    n = R.n
    nb = sphere.nondegenerate_base
    index = {x: i for i, x in enumerate(lower.nondegenerate_base)}
    out = [0] * (n * len(index))
    for blk, x in enumerate(nb):
        chunk = v[blk * n:(blk + 1) * n]
        if not any(chunk):
            continue
        for s in range(sphere.level + 1):
            y = sphere.face(s, x)
            if y == BASE:
                continue
            sign = -1 if s % 2 else 1
            j = index[y]
            for i, c in enumerate(chunk):
                out[j * n + i] += sign * c
    return out


def _fixed_level(R: RingWithInvolution, sphere: SimplicialSmashSphere, fixed_basis, fixed_rels):
    """Group and inclusion for level k: R^α per diagonal simplex, R per swapped pair."""
    n = R.n
    nb = sphere.nondegenerate_base
    index = {x: i for i, x in enumerate(nb)}
    N = n * len(nb)
    cols = []
    block_rels = []  # (offset, size, relations)
    offset = 0
    for x in nb:
        a, b = x
        if a == b:
            for g in fixed_basis:
                v = [0] * N
                v[index[x] * n:(index[x] + 1) * n] = g
                cols.append(tuple(v))
            block_rels.append((offset, len(fixed_basis), fixed_rels))
            offset += len(fixed_basis)
        elif a < b:
            y = (b, a)
            for i in range(n):
                v = [0] * N
                v[index[x] * n + i] = 1
                img = R.invol(R.basis(i))
                v[index[y] * n:(index[y] + 1) * n] = img
                cols.append(tuple(v))
            block_rels.append((offset, n, R.additive.relations))
            offset += n
    rels = []
    for off, size, rs in block_rels:
        for r in rs:
            v = [0] * offset
            v[off:off + size] = r
            rels.append(tuple(v))
    C = AbelianPresentation(offset, tuple(rels))
    return C, cols


def fixed_chain_complex(R: RingWithInvolution, max_deg: int = 2) -> FixedChainComplex:
    if max_deg < 2:
        raise InputError("max_deg must be at least 2")
    fixed, fincl = fixed_subgroup(R)
    fixed_basis = fincl.columns()
    spheres, ambient, groups, incls = [], [], [], []
    for k in range(max_deg + 1):
        sph = simplicial_sphere(k)
        amb = _ambient(R, sph)
        C, cols = _fixed_level(R, sph, fixed_basis, fixed.relations)
        incl = GroupMap.from_columns(C, amb, cols)
        if not incl.is_well_defined():
            raise CrossCheckError(f"{R.name}: level {k} inclusion is not well defined")
        spheres.append(sph)
        ambient.append(amb)
        groups.append(C)
        incls.append(incl)
    boundaries = {}
    for k in range(1, max_deg + 1):
        lower_cols = incls[k - 1].columns()
        L = Lattice(lower_cols + list(ambient[k - 1].relations), ambient[k - 1].num_generators)
        p = groups[k - 1].num_generators
        cols = []
        for c in incls[k].columns():
            img = _ambient_boundary(R, spheres[k], spheres[k - 1], c)
            y = L.express(img)
            if y is None:
                raise CrossCheckError(f"{R.name}: ∂_{k} leaves the fixed subgroup")
            cols.append(y[:p])
        boundaries[k] = GroupMap.from_columns(groups[k], groups[k - 1], cols)
    cc = FixedChainComplex(R, tuple(spheres), tuple(ambient), tuple(groups), tuple(incls), boundaries)
    if not cc.boundary_squares_vanish():
        raise CrossCheckError(f"{R.name}: ∂∂ != 0")
    return cc


def ambient_fixed_subgroup(R: RingWithInvolution, k: int) -> Tuple[AbelianPresentation, GroupMap]:
    """Fixed points of α∘ω on ``R[S^2[k]]/R[*]`` computed as a plain kernel."""
    sph = simplicial_sphere(k)
    amb = _ambient(R, sph)
    nb = sph.nondegenerate_base
    index = {x: i for i, x in enumerate(nb)}
    n = R.n
    N = amb.num_generators
    cols = []
    for x in nb:
        for i in range(n):
            v = [0] * N
            img = R.invol(R.basis(i))
            j = index[sph.swap(x)]
            v[j * n:(j + 1) * n] = img
            v[index[x] * n + i] -= 1
            cols.append(tuple(v))
    return kernel(GroupMap.from_columns(amb, amb, cols))


@dataclass(frozen=True, eq=False)
class _H1Model:
    ring: RingWithInvolution
    presentation: AbelianPresentation
    cycle_inclusion: GroupMap  # H1 generators -> C_1
    c1_inclusion: GroupMap     # C_1 -> ambient R (one block, x1 ∧ x1)
    _c1_lattice: Lattice = field(repr=False)
    _cycle_lattice: Lattice = field(repr=False)

    def element(self, h: Sequence[int]) -> Element:
        """Ring element representing ``h`` (a vector in H1 generators)."""
        return self.ring.canon(self.c1_inclusion(self.cycle_inclusion(h)))

    def coords(self, x: Sequence[int]) -> Tuple[int, ...]:
        """H1 coordinates of a fixed element ``x`` placed at ``x1 ∧ x1``."""
        c = self._c1_lattice.express(self.ring.canon(x))
        if c is None:
            raise ValueError(f"{self.ring.format(x)} is not fixed by the involution")
        c = c[:self.c1_inclusion.source.num_generators]
        y = self._cycle_lattice.express(c)
        return tuple(y[:self.presentation.num_generators])


def _h1_model(R: RingWithInvolution) -> _H1Model:
    cc = fixed_chain_complex(R, 2)
    d1, d2 = cc.boundaries[1], cc.boundaries[2]
    Z1, zincl = kernel(d1)
    C1 = cc.groups[1]
    zl = Lattice(zincl.columns() + list(C1.relations), C1.num_generators)
    rels = list(Z1.relations)
    for col in d2.columns():
        y = zl.express(col)
        if y is None:
            raise CrossCheckError(f"{R.name}: a boundary is not a cycle")
        rels.append(tuple(y[:Z1.num_generators]))
    H = AbelianPresentation(Z1.num_generators, tuple(rels))
    amb = cc.ambient[1]
    c1l = Lattice(cc.inclusions[1].columns() + list(amb.relations), amb.num_generators)
    return _H1Model(R, H, zincl, cc.inclusions[1], c1l, zl)


def homology_H1(R: RingWithInvolution, check: bool = True) -> AbelianPresentation:
    """``ker ∂1 / im ∂2``; with ``check``, compared against ``R^α/N(R)``."""
    H = _h1_model(R).presentation
    if check:
        q = norm_quotient(R).Q.invariant_factors()
        if H.invariant_factors() != q:
            raise CrossCheckError(
                f"{R.name}: H1 = {H.invariant_factors()} but R^α/N(R) = {q}"
            )
    return H


# ---------------------------------------------------------------------------
# coequalizer over Z
# ---------------------------------------------------------------------------

def coequalizer_pi0(R: RingWithInvolution) -> GeomFixResult:
    """``coker(d0 - d1 : Q ⊗ R ⊗ Q -> Q ⊗ Q)`` with Q taken from the H1 model."""
    h = _h1_model(R)
    dec = h.presentation.decompose()
    k = len(dec.factors)
    n = R.n
    Qc = AbelianPresentation(k, tuple(
        tuple(d * (i == j) for j in range(k)) for i, d in enumerate(dec.factors) if d
    ))
    lifts = [h.element(g) for g in dec.generators]

    def qc(x):
        return dec.coords(h.coords(x))

    unit = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    QQ = tensor_product(Qc, Qc)
    dom = tensor_product(tensor_product(Qc, R.additive), Qc)
    cols = []
    for a in range(k):
        for s in range(n):
            sb = R.basis(s)
            a_s = R.invol(sb)
            u = qc(R.mul(R.mul(a_s, lifts[a]), sb))
            for b in range(k):
                v = qc(R.mul(R.mul(sb, lifts[b]), a_s))
                left = tensor_vectors(u, unit[b])
                right = tensor_vectors(unit[a], v)
                cols.append(tuple(x - y for x, y in zip(left, right)))
    diff = GroupMap.from_columns(dom, QQ, cols)
    if not diff.is_well_defined():
        raise CrossCheckError(f"{R.name}: d0 - d1 is not additive on Q ⊗ R ⊗ Q")
    cok, _ = cokernel(diff)
    cdec = cok.decompose()
    witnesses = []
    for g in cdec.generators:
        witnesses.append(tuple((c, lifts[i // k], lifts[i % k]) for i, c in enumerate(g) if c))

    def classify(terms):
        vec = [0] * (k * k)
        for c, r, t in terms:
            for i, x in enumerate(tensor_vectors(qc(r), qc(t))):
                vec[i] += c * x
        return cdec.coords(vec)

    factors = tuple(cdec.factors)
    f2 = sum(1 for d in factors if d % 2 == 0)
    return GeomFixResult(R.name, factors, f2, tuple(witnesses), "coequalizer", {}, classify)


# ---------------------------------------------------------------------------
# literal enumeration of I
# ---------------------------------------------------------------------------

def brute_force_relation_subgroup(R: RingWithInvolution, nq: Optional[NormQuotient] = None,
                                  max_order: Optional[int] = None, pairs: str = "lifts") -> List[int]:
    """Generators ``α(s) r s ⊗ t - r ⊗ s t α(s)`` for every s in R.

    ``pairs="lifts"`` lets r, t run over the chosen lifts of a basis of Q;
    ``pairs="all"`` lets them run over every fixed element.
    """
    cap = resolve_max_enum(max_order)
    if not R.is_finite:
        raise InputError(f"{R.name} is infinite")
    if R.order() > cap:
        raise InputError(f"{R.name} has order {R.order()} > cap {cap}")
    if pairs not in ("lifts", "all"):
        raise InputError("pairs must be 'lifts' or 'all'")
    nq = nq or norm_quotient(R)
    q = nq.dim
    if pairs == "lifts":
        reps = list(nq.lifts)
    else:
        reps = [x for x in R.elements() if R.is_fixed(x)]
    rep_bits = [nq.coords(x) for x in reps]
    out = []
    for s in R.elements():
        a_s = R.invol(s)
        lefts = [nq.coords(R.mul(R.mul(a_s, r), s)) for r in reps]
        rights = [nq.coords(R.mul(R.mul(s, t), a_s)) for t in reps]
        for i in range(len(reps)):
            for j in range(len(reps)):
                out.append(gf2.outer(lefts[i], rep_bits[j], q) ^ gf2.outer(rep_bits[i], rights[j], q))
    return out


# ---------------------------------------------------------------------------
# golden files
# ---------------------------------------------------------------------------

def format_factors(factors: Sequence[int]) -> str:
    return "[" + ", ".join(str(int(f)) for f in factors) + "]"


def parse_factors(text: str) -> List[int]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"not a bracketed factor list: {text!r}")
    inner = text[1:-1].strip()
    return [int(x) for x in inner.split(",")] if inner else []


def write_golden(path: Union[str, Path], entries: Dict[str, Sequence[int]]) -> None:
    lines = [f"{name}\t{format_factors(f)}" for name, f in entries.items()]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_golden(path: Union[str, Path]) -> Dict[str, List[int]]:
    out = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, factors = line.split("\t")
        out[name] = parse_factors(factors)
    return out
