"""The component group ``(Q ⊗ Q) / I`` with ``Q = R^α / N(R)``.

``I`` is generated by ``α(s) r s ⊗ t - r ⊗ s t α(s)`` for s in R and r, t
in R^α. Since ``2x = N(x)`` for fixed x, Q is an F_2 vector space and,
after :func:`norm_quotient`, all the work here is GF(2) linear algebra.
That reduction is checked at runtime (every invariant factor of Q must be 2)
rather than assumed.

Two strategies produce I:

* ``linear``: the values of ``d0 - d1`` on basis triples ``(r, s, t)`` with
  r, t running over lifts of a basis of Q and s over a basis of R/2R.
  This is valid because ``s -> class(α(s) r s)`` is additive (the cross
  term ``α(s) r s' + α(s') r s`` is the norm of ``α(s) r s'``) and Q is
  2-torsion.
* ``enumerate``: every s in a finite ring, taken literally.

A third, ``coequalizer``, lives in :mod:`thrfix.oracle` and works over Z.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import gf2
from .abgroup import (
    AbelianPresentation,
    Decomposition,
    GroupMap,
    Lattice,
    direct_sum,
)
from .errors import CrossCheckError, InputError
from .ring_inv import (
    Element,
    RingWithInvolution,
    fixed_subgroup,
    norm_image,
    product,
    projection,
)

DEFAULT_MAX_ENUM = 4096
METHODS = ("linear", "enumerate", "coequalizer", "all")

# A witness is a formal sum of pure tensors: ((coef, r, t), ...).
Term = Tuple[int, Element, Element]


def resolve_max_enum(max_enum: Optional[int] = None) -> int:
    """Explicit argument, else ``$THRFIX_MAX_ENUM``, else 4096."""
    if max_enum is not None:
        return int(max_enum)
    env = os.environ.get("THRFIX_MAX_ENUM")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"THRFIX_MAX_ENUM must be an integer, got {env!r}") from None
    return DEFAULT_MAX_ENUM


def elementary_two(k: int) -> AbelianPresentation:
    return AbelianPresentation(k, tuple(tuple(2 * (i == j) for j in range(k)) for i in range(k)))


def middle_basis(R: RingWithInvolution) -> List[int]:
    """Additive generators surviving in R/2R (even or infinite order)."""
    return [i for i, d in enumerate(R.orders) if d % 2 == 0]


# ---------------------------------------------------------------------------
# Q = R^α / N(R)
# ---------------------------------------------------------------------------

def _support_key(x: Element):
    support = tuple(i for i, c in enumerate(x) if c)
    return (len(support), support, tuple(x[i] for i in support))


def _candidates(R: RingWithInvolution, budget: int):
    """Elements of R in preference order for lifts: small support first."""
    box = [d if d else 2 for d in R.orders]
    size = 1
    for b in box:
        size *= b
    if size <= budget:
        pool = [x for x in itertools.product(*(range(b) for b in box)) if any(x)]
        pool.sort(key=_support_key)
        yield from pool
        return
    n = R.n
    for w in (1, 2):
        for support in itertools.combinations(range(n), w):
            for vals in itertools.product(*(range(1, box[i]) for i in support)):
                x = [0] * n
                for i, v in zip(support, vals):
                    x[i] = v
                yield tuple(x)


@dataclass(frozen=True, eq=False)
class NormQuotient:
    """Q = R^α / N(R) with a chosen basis of lifts.

    ``coords(x)`` returns the class of a fixed element as a bitset over the
    lifts: bit i is the coefficient of ``lifts[i]``.
    """

    ring: RingWithInvolution
    Q: AbelianPresentation
    projection: GroupMap
    lifts: Tuple[Element, ...]
    fixed: AbelianPresentation
    fixed_inclusion: GroupMap
    _fixed_lattice: Lattice = field(repr=False)
    _decomposition: Decomposition = field(repr=False)
    _change: Tuple[int, ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.Q.num_generators

    def _snf_bits(self, x: Sequence[int]) -> int:
        y = self._fixed_lattice.express(self.ring.canon(x))
        if y is None:
            raise ValueError(f"{self.ring.format(x)} is not fixed by the involution")
        return gf2.from_bits(self._decomposition.coords(y))

    def coords(self, x: Sequence[int]) -> int:
        if not self.ring.is_fixed(x):
            raise ValueError(f"{self.ring.format(x)} is not fixed by the involution")
        return gf2.apply(self._change, self._snf_bits(x))


def norm_quotient(R: RingWithInvolution, max_enum: Optional[int] = None) -> NormQuotient:
    budget = resolve_max_enum(max_enum)
    fixed, incl = fixed_subgroup(R)
    basis = incl.columns()
    F = Lattice(basis, R.n)
    _, nincl = norm_image(R)
    norm_rels = []
    for v in nincl.columns():
        c = F.express(v)
        if c is None:
            raise CrossCheckError(f"{R.name}: a norm lies outside the fixed subgroup")
        norm_rels.append(tuple(c))
    pres = AbelianPresentation(fixed.num_generators, fixed.relations + tuple(norm_rels))
    dec = pres.decompose()
    if any(f != 2 for f in dec.factors):
        raise CrossCheckError(
            f"{R.name}: R^α/N(R) has invariant factors {list(dec.factors)}, expected all 2"
        )
    q = len(dec.factors)

    def snf_bits(x):
        return gf2.from_bits(dec.coords(F.express(R.canon(x))))

    span = gf2.F2Span(q)
    lifts: List[Element] = []
    lift_bits: List[int] = []
    if q:
        for x in _candidates(R, budget):
            if not R.is_fixed(x):
                continue
            b = snf_bits(x)
            if span.add(b):
                lifts.append(R.canon(x))
                lift_bits.append(b)
                if len(lifts) == q:
                    break
        if len(lifts) < q:
            for g in dec.generators:
                x = R.canon([sum(c * v[k] for c, v in zip(g, basis)) for k in range(R.n)])
                b = snf_bits(x)
                if span.add(b):
                    lifts.append(x)
                    lift_bits.append(b)
    change = gf2.invert(lift_bits) if q else []
    if change is None or len(lifts) != q:
        raise CrossCheckError(f"{R.name}: failed to choose a basis of lifts for Q")
    Q = elementary_two(q)
    proj_cols = [gf2.bits(gf2.apply(change, snf_bits(v)), q) for v in basis]
    projection_map = GroupMap.from_columns(fixed, Q, proj_cols)
    return NormQuotient(R, Q, projection_map, tuple(lifts), fixed, incl, F, dec, tuple(change))


# ---------------------------------------------------------------------------
# face maps
# ---------------------------------------------------------------------------

def face_values(R: RingWithInvolution, nq: NormQuotient, r, s, t) -> Tuple[int, int]:
    """Classes of ``α(s) r s ⊗ t`` and ``r ⊗ s t α(s)`` in Q ⊗ Q (bitsets)."""
    q = nq.dim
    a_s = R.invol(s)
    left = R.mul(R.mul(a_s, r), s)
    right = R.mul(R.mul(s, t), a_s)
    return (gf2.outer(nq.coords(left), nq.coords(t), q),
            gf2.outer(nq.coords(r), nq.coords(right), q))


@dataclass(frozen=True)
class FaceMaps:
    source: AbelianPresentation
    target: AbelianPresentation
    d0: GroupMap
    d1: GroupMap
    triples: Tuple[Tuple[int, int, int], ...]  # (lift index, ring basis index, lift index)
    d0_columns: Tuple[int, ...]
    d1_columns: Tuple[int, ...]


def face_maps_on_pi0(R: RingWithInvolution, nq: NormQuotient, check: bool = True) -> FaceMaps:
    """``d0, d1 : Q ⊗ R/2R ⊗ Q -> Q ⊗ Q`` on basis triples.

    With ``check`` each value is recomputed after moving the lifts by a norm;
    a change means the maps are not well defined and raises
    :class:`CrossCheckError`.
    """
    q = nq.dim
    mids = middle_basis(R)
    m = len(mids)
    lifts = nq.lifts
    triples = []
    c0, c1 = [], []
    for a in range(q):
        for si, s_idx in enumerate(mids):
            s = R.basis(s_idx)
            for b in range(q):
                v0, v1 = face_values(R, nq, lifts[a], s, lifts[b])
                if check:
                    w = R.basis((a + si + b) % R.n)
                    w2 = R.basis((a + 2 * si + 3 * b + 1) % R.n)
                    r2 = R.add(lifts[a], R.norm(w))
                    t2 = R.add(lifts[b], R.norm(w2))
                    if face_values(R, nq, r2, s, t2) != (v0, v1):
                        raise CrossCheckError(
                            f"{R.name}: face maps depend on the choice of lift at "
                            f"r={R.format(lifts[a])}, s={R.labels[s_idx]}, t={R.format(lifts[b])}"
                        )
                triples.append((a, s_idx, b))
                c0.append(v0)
                c1.append(v1)
    source = elementary_two(q * m * q)
    target = elementary_two(q * q)
    d0 = GroupMap.from_columns(source, target, [gf2.bits(v, q * q) for v in c0])
    d1 = GroupMap.from_columns(source, target, [gf2.bits(v, q * q) for v in c1])
    return FaceMaps(source, target, d0, d1, tuple(triples), tuple(c0), tuple(c1))


# ---------------------------------------------------------------------------
# I and the quotient
# ---------------------------------------------------------------------------

def relation_subgroup(R: RingWithInvolution, nq: NormQuotient, strategy: str = "linear",
                      max_enum: Optional[int] = None) -> List[int]:
    """Spanning set of I as bitsets over Q ⊗ Q (index ``a * dim + b``)."""
    if strategy == "linear":
        fm = face_maps_on_pi0(R, nq)
        return [a ^ b for a, b in zip(fm.d0_columns, fm.d1_columns)]
    if strategy == "enumerate":
        cap = resolve_max_enum(max_enum)
        if not R.is_finite:
            raise InputError(f"{R.name} is infinite; strategy 'enumerate' needs a finite ring")
        if R.order() > cap:
            raise InputError(f"{R.name} has order {R.order()} > enumeration cap {cap}")
        q = nq.dim
        lifts = nq.lifts
        out = []
        for s in R.elements():
            a_s = R.invol(s)
            lefts = [nq.coords(R.mul(R.mul(a_s, r), s)) for r in lifts]
            rights = [nq.coords(R.mul(R.mul(s, t), a_s)) for t in lifts]
            for a in range(q):
                for b in range(q):
                    out.append(gf2.outer(lefts[a], 1 << b, q) ^ gf2.outer(1 << a, rights[b], q))
        return out
    raise InputError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True, eq=False)
class GeomFixResult:
    """``π0`` of the geometric fixed points as an abelian group.

    ``witnesses[i]`` is a formal sum of pure tensors whose class is the i-th
    basis element of the result. :meth:`classify` maps any formal sum to its
    coordinates in that basis.
    """

    ring_name: str
    invariant_factors: Tuple[int, ...]
    f2_dimension: int
    witnesses: Tuple[Tuple[Term, ...], ...]
    method: str
    cross_check: Dict[str, Any] = field(default_factory=dict)
    _classify: Optional[Callable[[Sequence[Term]], Tuple[int, ...]]] = field(default=None, repr=False)

    def classify(self, terms: Sequence[Term]) -> Tuple[int, ...]:
        if self._classify is None:
            raise ValueError("this result carries no coordinate map")
        return self._classify(terms)

    @property
    def presentation(self) -> AbelianPresentation:
        k = len(self.invariant_factors)
        return AbelianPresentation(k, tuple(
            tuple(d * (i == j) for j in range(k)) for i, d in enumerate(self.invariant_factors)
        ))


def format_terms(R: RingWithInvolution, terms: Sequence[Term]) -> str:
    parts = []
    for c, r, t in terms:
        pure = f"{_paren(R.format(r))} ⊗ {_paren(R.format(t))}"
        parts.append(pure if c == 1 else f"{c}*({pure})")
    return " + ".join(parts) if parts else "0"


def _paren(s: str) -> str:
    return f"({s})" if (" " in s) else s


def tensor_class(nq: NormQuotient, terms: Sequence[Term]) -> int:
    q = nq.dim
    v = 0
    for c, r, t in terms:
        if c % 2:
            v ^= gf2.outer(nq.coords(r), nq.coords(t), q)
    return v


def _f2_result(R: RingWithInvolution, nq: NormQuotient, gens: Sequence[int], method: str) -> GeomFixResult:
    q = nq.dim
    span = gf2.F2Span(q * q, gens)
    free_pos = span.complement()
    witnesses = tuple(((1, nq.lifts[p // q], nq.lifts[p % q]),) for p in free_pos) if q else ()

    def classify(terms):
        red = span.reduce(tensor_class(nq, terms))
        return tuple((red >> p) & 1 for p in free_pos)

    k = len(free_pos)
    return GeomFixResult(R.name, (2,) * k, k, witnesses, method, {}, classify)


def pi0_geometric_fixed_points(R: RingWithInvolution, method: str = "all",
                               max_enum: Optional[int] = None) -> GeomFixResult:
    """Compute ``(Q ⊗ Q) / I``.

    ``method="all"`` runs linear, coequalizer and (for finite rings within the
    enumeration cap) enumerate, and raises :class:`CrossCheckError` unless all
    invariant factors agree. The returned object is the linear result with
    the agreement record attached.
    """
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    cap = resolve_max_enum(max_enum)
    enumerable = R.is_finite and R.order() <= cap
    if method == "enumerate" and not enumerable:
        if not R.is_finite:
            raise InputError(f"{R.name} is infinite; method 'enumerate' needs a finite ring")
        raise InputError(f"{R.name} has order {R.order()} > enumeration cap {cap}")

    if method == "coequalizer":
        from .oracle import coequalizer_pi0
        return coequalizer_pi0(R)

    nq = norm_quotient(R, cap)
    if method in ("linear", "enumerate"):
        gens = relation_subgroup(R, nq, method, cap)
        return _f2_result(R, nq, gens, method)

    from .oracle import coequalizer_pi0
    runs = {"linear": _f2_result(R, nq, relation_subgroup(R, nq, "linear"), "linear")}
    skipped = []
    if enumerable:
        runs["enumerate"] = _f2_result(R, nq, relation_subgroup(R, nq, "enumerate", cap), "enumerate")
    else:
        skipped.append("enumerate")
    runs["coequalizer"] = coequalizer_pi0(R)
    factors = {m: list(res.invariant_factors) for m, res in runs.items()}
    agree = len({tuple(f) for f in factors.values()}) == 1
    record = {"methods": factors, "agree": agree, "skipped": skipped}
    if not agree:
        raise CrossCheckError(f"{R.name}: methods disagree: {factors}")
    return replace(runs["linear"], cross_check=record)


# ---------------------------------------------------------------------------
# functoriality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RingMap:
    """Additive map given by ``matrix`` (column j is the image of ``b_j``)."""

    source: RingWithInvolution
    target: RingWithInvolution
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(m) != self.target.n or any(len(row) != self.source.n for row in m):
            raise InputError("ring map matrix has the wrong shape")
        object.__setattr__(self, "matrix", m)

    def __call__(self, x: Sequence[int]) -> Element:
        return self.target.canon([sum(a * b for a, b in zip(row, x)) for row in self.matrix])

    def problems(self) -> List[str]:
        S, T = self.source, self.target
        out = []
        B = [S.basis(i) for i in range(S.n)]
        images = [self(b) for b in B]
        for i, d in enumerate(S.orders):
            if d and any(T.scale(d, images[i])):
                out.append(f"not additive: {d}*f(b{i}) != 0")
        for i in range(S.n):
            for j in range(S.n):
                if self(S.mul_table[i][j]) != T.mul(images[i], images[j]):
                    out.append(f"not multiplicative on (b{i}, b{j})")
        if self(S.unit) != T.unit:
            out.append("not unital")
        for i in range(S.n):
            if self(S.invol(B[i])) != T.invol(images[i]):
                out.append(f"does not commute with the involutions on b{i}")
        return out

    def compose(self, inner: "RingMap") -> "RingMap":
        """``self ∘ inner``."""
        cols = [self(inner(inner.source.basis(j))) for j in range(inner.source.n)]
        return RingMap(inner.source, self.target,
                       tuple(tuple(c[i] for c in cols) for i in range(self.target.n)))


def identity_map(R: RingWithInvolution) -> RingMap:
    return RingMap(R, R, tuple(tuple(int(i == j) for j in range(R.n)) for i in range(R.n)))


def induced_map(f: RingMap, source_result: Optional[GeomFixResult] = None,
                target_result: Optional[GeomFixResult] = None) -> GroupMap:
    """The map on results induced by ``r ⊗ t -> f(r) ⊗ f(t)``."""
    bad = f.problems()
    if bad:
        raise InputError("not an equivariant ring map: " + "; ".join(bad))
    src = source_result or pi0_geometric_fixed_points(f.source, "linear")
    tgt = target_result or pi0_geometric_fixed_points(f.target, "linear")
    cols = []
    for w in src.witnesses:
        cols.append(tgt.classify([(c, f(r), f(t)) for c, r, t in w]))
    return GroupMap.from_columns(src.presentation, tgt.presentation, cols)


@dataclass(frozen=True)
class DefectReport:
    source: GeomFixResult
    target: Tuple[GeomFixResult, GeomFixResult]
    comparison: GroupMap
    kernel_witnesses: Tuple[Tuple[Term, ...], ...]
    injective: bool
    surjective: bool
    ring: RingWithInvolution = field(repr=False, default=None)


def product_defect(R1: RingWithInvolution, R2: RingWithInvolution, method: str = "linear",
                   max_enum: Optional[int] = None) -> DefectReport:
    """Compare the result for ``R1 x R2`` with the product of the results."""
    P = product(R1, R2)
    src = pi0_geometric_fixed_points(P, method, max_enum)
    t1 = pi0_geometric_fixed_points(R1, method, max_enum)
    t2 = pi0_geometric_fixed_points(R2, method, max_enum)
    if src._classify is None or t1._classify is None or t2._classify is None:
        raise InputError(f"method {method!r} does not support induced maps")
    g1 = induced_map(RingMap(P, R1, tuple(map(tuple, projection(P, R1.n, 0)))), src, t1)
    g2 = induced_map(RingMap(P, R2, tuple(map(tuple, projection(P, R1.n, 1)))), src, t2)
    tgt = direct_sum(t1.presentation, t2.presentation)
    comparison = GroupMap(src.presentation, tgt, g1.matrix + g2.matrix)
    k_t = tgt.num_generators
    cols = [gf2.from_bits(c) for c in comparison.columns()]
    ker = gf2.kernel_of_columns(cols)
    witnesses = []
    for v in ker:
        terms = []
        for j in range(len(cols)):
            if (v >> j) & 1:
                terms.extend(src.witnesses[j])
        witnesses.append(tuple(terms))
    rank = gf2.rank_of_columns(cols, k_t)
    return DefectReport(src, (t1, t2), comparison, tuple(witnesses), not ker, rank == k_t, P)
