"""2-typical Witt vectors of length 2 over a commutative ring.

Components ``(x1, x2)`` with ghost map ``(x1, x1^2 + 2 x2)``. The sum and
product polynomials are the unique integral ones making the ghost map a ring
homomorphism:

    (a1, a2) + (b1, b2) = (a1 + b1, a2 + b2 - a1 b1)
    (a1, a2) * (b1, b2) = (a1 b1, a1^2 b2 + a2 b1^2 + 2 a2 b2)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .abgroup import AbelianPresentation
from .errors import InputError
from .ring_inv import Element, RingWithInvolution


@dataclass(frozen=True)
class WittVector2:
    ring: RingWithInvolution
    x1: Element
    x2: Element

    def __post_init__(self):
        object.__setattr__(self, "x1", self.ring.canon(self.x1))
        object.__setattr__(self, "x2", self.ring.canon(self.x2))

    def __add__(self, other: "WittVector2") -> "WittVector2":
        return witt_add(self, other)

    def __mul__(self, other: "WittVector2") -> "WittVector2":
        return witt_mul(self, other)

    @property
    def key(self) -> Tuple[Element, Element]:
        return (self.x1, self.x2)


def _require_commutative(R: RingWithInvolution) -> None:
    if not R.commutative:
        raise InputError(f"{R.name} is not commutative; Witt vectors need a commutative ring")


def _same_ring(a: WittVector2, b: WittVector2) -> RingWithInvolution:
    if a.ring != b.ring:
        raise InputError("Witt vectors over different rings")
    _require_commutative(a.ring)
    return a.ring


def witt_vector(R: RingWithInvolution, x1, x2) -> WittVector2:
    _require_commutative(R)
    return WittVector2(R, x1, x2)


def witt_zero(R: RingWithInvolution) -> WittVector2:
    return witt_vector(R, R.zero, R.zero)


def witt_one(R: RingWithInvolution) -> WittVector2:
    return witt_vector(R, R.one, R.zero)


def ghost(w: WittVector2) -> Tuple[Element, Element]:
    R = w.ring
    _require_commutative(R)
    return (w.x1, R.add(R.mul(w.x1, w.x1), R.scale(2, w.x2)))


def witt_add(a: WittVector2, b: WittVector2) -> WittVector2:
    R = _same_ring(a, b)
    return WittVector2(R, R.add(a.x1, b.x1), R.sub(R.add(a.x2, b.x2), R.mul(a.x1, b.x1)))


def witt_mul(a: WittVector2, b: WittVector2) -> WittVector2:
    R = _same_ring(a, b)
    sq_a, sq_b = R.mul(a.x1, a.x1), R.mul(b.x1, b.x1)
    x2 = R.add(R.add(R.mul(sq_a, b.x2), R.mul(a.x2, sq_b)), R.scale(2, R.mul(a.x2, b.x2)))
    return WittVector2(R, R.mul(a.x1, b.x1), x2)


def witt_elements(R: RingWithInvolution) -> List[WittVector2]:
    if not R.is_finite:
        raise InputError(f"{R.name} is infinite")
    _require_commutative(R)
    elems = list(R.elements())
    return [WittVector2(R, x, y) for x in elems for y in elems]


def additive_generators(W: List[WittVector2]) -> List[int]:
    """Indices of a greedy generating set of ``(W, +)``, in enumeration order."""
    index = {w.key: i for i, w in enumerate(W)}
    reached = {index[witt_zero(W[0].ring).key]}
    gens = []
    for i, w in enumerate(W):
        if i in reached:
            continue
        gens.append(i)
        frontier = list(reached)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    k = index[witt_add(W[a], W[g]).key]
                    if k not in reached:
                        reached.add(k)
                        nxt.append(k)
            frontier = nxt
    return gens


def witt_group_structure(R: RingWithInvolution) -> List[int]:
    """Invariant factors of ``(W(R), +)`` from its addition table.

    One generator per element, the relation ``g_0 = 0`` and
    ``g_a + g_s = g_{a+s}`` for every element a and every s in a generating
    set. Walking from 0 along these edges recovers every relation of the
    group, so this presents ``W(R)`` itself.
    """
    W = witt_elements(R)
    index: Dict[Tuple[Element, Element], int] = {w.key: i for i, w in enumerate(W)}
    m = len(W)
    zero = index[witt_zero(R).key]
    rels = [tuple(int(i == zero) for i in range(m))]
    for s in additive_generators(W):
        for i, a in enumerate(W):
            k = index[witt_add(a, W[s]).key]
            row = [0] * m
            row[i] += 1
            row[s] += 1
            row[k] -= 1
            if any(row):
                rels.append(tuple(row))
    return AbelianPresentation(m, tuple(rels)).invariant_factors()


@dataclass(frozen=True)
class WittComparison:
    ring_name: str
    witt_factors: Tuple[int, ...]
    geomfix_factors: Tuple[int, ...]
    isomorphic_as_groups: bool
    note: str


GENUINE_NOTE = (
    "geomfix_factors are the geometric fixed points; the comparison in the "
    "literature is with the genuine fixed points, which are not computed here"
)


def compare_with_geomfix(R: RingWithInvolution) -> WittComparison:
    from .geomfix import pi0_geometric_fixed_points

    if not R.is_identity_involution():
        raise InputError(f"{R.name} does not carry the identity involution")
    wf = tuple(witt_group_structure(R))
    gf = tuple(pi0_geometric_fixed_points(R, "all").invariant_factors)
    return WittComparison(R.name, wf, gf, wf == gf, GENUINE_NOTE)
