"""Rings with anti-involution, given by structure constants.

A ring is an additive group with basis ``b_0 .. b_{n-1}`` where ``b_i`` has
order ``orders[i]`` (0 for infinite order), a multiplication table
``mul[i][j] = b_i * b_j`` expanded in the basis, a unit vector, and an
involution matrix ``A`` whose column ``i`` is ``α(b_i)``.

Elements are plain tuples of ints kept in canonical form (coordinate ``i``
reduced mod ``orders[i]`` when that is positive).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

from .abgroup import (
    AbelianPresentation,
    GroupMap,
    _snf,
    image,
    kernel,
    vecmat,
)
from .errors import InputError

Element = Tuple[int, ...]


@dataclass(frozen=True)
class Failure:
    axiom: str
    witness: Tuple[int, ...]
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    failures: Tuple[Failure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def axioms_failed(self) -> List[str]:
        return sorted({f.axiom for f in self.failures})


@dataclass(frozen=True)
class RingWithInvolution:
    orders: Tuple[int, ...]
    mul_table: Tuple[Tuple[Element, ...], ...]
    unit: Element
    involution: Tuple[Tuple[int, ...], ...]
    commutative: bool = False
    name: str = "R"
    labels: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.orders)
        orders = tuple(int(d) for d in self.orders)
        if any(d < 0 for d in orders):
            raise InputError("orders must be non-negative")
        object.__setattr__(self, "orders", orders)
        if len(self.mul_table) != n or any(len(row) != n for row in self.mul_table):
            raise InputError(f"multiplication table must be {n}x{n}")
        if len(self.unit) != n:
            raise InputError("unit has the wrong length")
        if len(self.involution) != n or any(len(row) != n for row in self.involution):
            raise InputError(f"involution matrix must be {n}x{n}")
        for row in self.mul_table:
            for v in row:
                if len(v) != n:
                    raise InputError("structure constant vector has the wrong length")
        object.__setattr__(self, "mul_table", tuple(tuple(self.canon(v) for v in row) for row in self.mul_table))
        object.__setattr__(self, "unit", self.canon(self.unit))
        object.__setattr__(self, "involution", tuple(tuple(int(x) for x in row) for row in self.involution))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"b{i}" for i in range(n)))
        elif len(self.labels) != n:
            raise InputError("need one label per basis element")

    # -- basics -------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.orders)

    def canon(self, v: Sequence[int]) -> Element:
        return tuple(x % d if d else int(x) for x, d in zip(v, self.orders))

    def _check(self, x: Sequence[int]) -> None:
        if len(x) != self.n:
            raise InputError(f"element of length {len(x)} in a ring of rank {self.n}")

    @property
    def zero(self) -> Element:
        return (0,) * self.n

    @property
    def one(self) -> Element:
        return self.unit

    def basis(self, i: int) -> Element:
        return tuple(int(i == j) for j in range(self.n))

    def add(self, x, y) -> Element:
        self._check(x)
        self._check(y)
        return self.canon([a + b for a, b in zip(x, y)])

    def sub(self, x, y) -> Element:
        return self.add(x, self.neg(y))

    def neg(self, x) -> Element:
        return self.canon([-a for a in x])

    def scale(self, k: int, x) -> Element:
        return self.canon([k * a for a in x])

    @cached_property
    def _sparse_table(self):
        return [
            [[(k, c) for k, c in enumerate(v) if c] for v in row]
            for row in self.mul_table
        ]

    def mul(self, x, y) -> Element:
        self._check(x)
        self._check(y)
        table = self._sparse_table
        out = [0] * self.n
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if a:
                row = table[i]
                for j, b in ys:
                    ab = a * b
                    for k, c in row[j]:
                        out[k] += ab * c
        return self.canon(out)

    @cached_property
    def _invol_columns(self):
        return [[(j, self.involution[j][i]) for j in range(self.n) if self.involution[j][i]]
                for i in range(self.n)]

    def invol(self, x) -> Element:
        self._check(x)
        out = [0] * self.n
        for i, a in enumerate(x):
            if a:
                for j, c in self._invol_columns[i]:
                    out[j] += a * c
        return self.canon(out)

    def norm(self, x) -> Element:
        return self.add(x, self.invol(x))

    def is_fixed(self, x) -> bool:
        return self.invol(x) == self.canon(x)

    # -- additive structure -------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return 0 not in self.orders

    def order(self) -> Optional[int]:
        if not self.is_finite:
            return None
        out = 1
        for d in self.orders:
            out *= d
        return out

    def elements(self) -> Iterator[Element]:
        """All elements in mixed-radix order (first coordinate most significant)."""
        if not self.is_finite:
            raise InputError(f"{self.name} is infinite; cannot enumerate")
        return itertools.product(*(range(d) for d in self.orders))

    @cached_property
    def additive(self) -> AbelianPresentation:
        rels = []
        for i, d in enumerate(self.orders):
            if d:
                rels.append(tuple(d if j == i else 0 for j in range(self.n)))
        return AbelianPresentation(self.n, tuple(rels))

    def additive_map(self, matrix) -> GroupMap:
        return GroupMap(self.additive, self.additive, matrix)

    def is_identity_involution(self) -> bool:
        return all(self.invol(self.basis(i)) == self.canon(self.basis(i)) for i in range(self.n))

    def two_is_invertible(self) -> bool:
        """Does ``2x = 1`` have a solution?"""
        for d, u in zip(self.orders, self.unit):
            if d == 0:
                if u % 2:
                    return False
            elif d % 2 == 0 and u % 2:
                return False
        return True

    def format(self, x) -> str:
        terms = []
        for c, lab in zip(self.canon(x), self.labels):
            if not c:
                continue
            if lab == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(lab)
            elif c == -1:
                terms.append("-" + lab)
            else:
                terms.append(f"{c}*{lab}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def renamed(self, name: str) -> "RingWithInvolution":
        return RingWithInvolution(self.orders, self.mul_table, self.unit, self.involution,
                                  self.commutative, name, self.labels)

    def relabeled(self, labels: Sequence[str]) -> "RingWithInvolution":
        return RingWithInvolution(self.orders, self.mul_table, self.unit, self.involution,
                                  self.commutative, self.name, tuple(labels))

    @classmethod
    def from_relations(cls, num_generators: int, relations, mul_table, unit, involution,
                       commutative: bool = False, name: str = "R") -> "RingWithInvolution":
        """Build a ring whose additive group has an arbitrary relation matrix.

        The data is given in the original generators. A Smith normal form
        change of basis brings the group to diagonal form; summands of order 1
        are dropped.
        """
        n = num_generators
        s = _snf(relations, n)
        full = list(s.diag) + [0] * (n - s.rank)
        keep = [i for i, d in enumerate(full) if d != 1]
        # old coefficient row c  ->  new coordinates (c V)[keep]
        def to_new(c):
            w = vecmat(c, s.V, n)
            return [w[i] for i in keep]
        new_basis = [s.Vinv[i] for i in keep]  # old coordinates of the new generators

        def old_mul(x, y):
            out = [0] * n
            for i, a in enumerate(x):
                for j, b in enumerate(y):
                    if a and b:
                        for k, c in enumerate(mul_table[i][j]):
                            out[k] += a * b * c
            return out

        def old_invol(x):
            out = [0] * n
            for i, a in enumerate(x):
                for j in range(n):
                    out[j] += a * involution[j][i]
            return out

        table = tuple(tuple(tuple(to_new(old_mul(x, y))) for y in new_basis) for x in new_basis)
        cols = [to_new(old_invol(x)) for x in new_basis]
        m = len(keep)
        A = tuple(tuple(cols[i][j] for i in range(m)) for j in range(m))
        return cls(tuple(full[i] for i in keep), table, tuple(to_new(unit)), A, commutative, name)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate(R: RingWithInvolution) -> ValidationReport:
    """Check every ring-with-anti-involution axiom on basis elements."""
    fails: List[Failure] = []
    n = R.n
    B = [R.basis(i) for i in range(n)]
    table = R.mul_table

    def zero(v):
        return all(x == 0 for x in R.canon(v))

    for i, d in enumerate(R.orders):
        if d:
            for j in range(n):
                if not zero([d * c for c in table[i][j]]):
                    fails.append(Failure("respects_orders", (i, j), f"{d}*(b{i}*b{j}) != 0"))
                if not zero([d * c for c in table[j][i]]):
                    fails.append(Failure("respects_orders", (j, i), f"{d}*(b{j}*b{i}) != 0"))
            col = [R.involution[k][i] for k in range(n)]
            if not zero([d * c for c in col]):
                fails.append(Failure("respects_orders", (i,), f"{d}*α(b{i}) != 0"))

    for i in range(n):
        for j in range(n):
            bij = table[i][j]
            for k in range(n):
                if R.mul(bij, B[k]) != R.mul(B[i], table[j][k]):
                    fails.append(Failure("associativity", (i, j, k)))

    u = R.unit
    for i in range(n):
        if R.mul(u, B[i]) != R.canon(B[i]):
            fails.append(Failure("left_unit", (i,)))
        if R.mul(B[i], u) != R.canon(B[i]):
            fails.append(Failure("right_unit", (i,)))

    for i in range(n):
        if R.invol(R.invol(B[i])) != R.canon(B[i]):
            fails.append(Failure("involution_squared", (i,)))

    for i in range(n):
        for j in range(n):
            if R.invol(table[i][j]) != R.mul(R.invol(B[j]), R.invol(B[i])):
                fails.append(Failure("anti_multiplicative", (i, j)))

    if R.invol(u) != u:
        fails.append(Failure("involution_unit", (), f"α(1) = {R.invol(u)}"))

    if R.commutative:
        for i in range(n):
            for j in range(i + 1, n):
                if table[i][j] != table[j][i]:
                    fails.append(Failure("commutative", (i, j)))
    return ValidationReport(tuple(fails))


def is_commutative(R: RingWithInvolution) -> bool:
    t = R.mul_table
    return all(t[i][j] == t[j][i] for i in range(R.n) for j in range(i))


def _finish(R: RingWithInvolution) -> RingWithInvolution:
    report = validate(R)
    if not report:
        raise InputError(f"constructed ring {R.name} fails {report.axioms_failed()}")
    return R


def _build(orders, mul, unit, A, name, labels) -> RingWithInvolution:
    R = RingWithInvolution(tuple(orders), mul, tuple(unit), A, False, name, tuple(labels))
    R = RingWithInvolution(R.orders, R.mul_table, R.unit, R.involution, is_commutative(R), name, R.labels)
    return _finish(R)


def _matrix_from_columns(cols: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    n = len(cols)
    return tuple(tuple(cols[i][j] for i in range(n)) for j in range(n))


def _times_label(a: str, b: str) -> str:
    if a == "1":
        return b
    if b == "1":
        return a
    return f"{a}*{b}"


# ---------------------------------------------------------------------------
# fixed points and norms
# ---------------------------------------------------------------------------

def _shifted_involution(R: RingWithInvolution, sign: int) -> GroupMap:
    A = R.involution
    n = R.n
    return R.additive_map(tuple(
        tuple(A[i][j] + sign * (i == j) for j in range(n)) for i in range(n)
    ))


def fixed_subgroup(R: RingWithInvolution) -> Tuple[AbelianPresentation, GroupMap]:
    """``R^α = ker(α - id)`` with its inclusion into the additive group."""
    return kernel(_shifted_involution(R, -1))


def norm_image(R: RingWithInvolution) -> Tuple[AbelianPresentation, GroupMap]:
    """``N(R) = im(id + α)`` with its inclusion into the additive group."""
    return image(_shifted_involution(R, +1))


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def cyclic_ring(n: int) -> RingWithInvolution:
    """Z/n with the identity involution; ``cyclic_ring(0)`` is Z."""
    if n < 0:
        raise InputError("cyclic_ring needs n >= 0")
    name = "Z" if n == 0 else f"Z/{n}"
    return _finish(RingWithInvolution((n,), (((1,),),), (1,), ((1,),), True, name, ("1",)))


def integers() -> RingWithInvolution:
    return cyclic_ring(0)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _poly_mod(a: List[int], m: List[int], p: int) -> List[int]:
    """Remainder of ``a`` by monic ``m`` over F_p (coefficient lists, low degree first)."""
    a = [x % p for x in a]
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - dm
            for i, mc in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _monic_polys(p: int, k: int):
    """Monic degree-k polynomials in lexicographic order of (c_{k-1}, ..., c_0)."""
    for top in itertools.product(range(p), repeat=k):
        yield list(reversed(top)) + [1]


def _is_irreducible(f: List[int], p: int) -> bool:
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(p, d):
            r = _poly_mod(f, g, p)
            if not any(r):
                return False
    return True


def first_irreducible(p: int, k: int) -> List[int]:
    for f in _monic_polys(p, k):
        if _is_irreducible(f, p):
            return f
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def _poly_str(f: List[int], var: str = "a") -> str:
    terms = []
    for e in range(len(f) - 1, -1, -1):
        c = f[e]
        if not c:
            continue
        mon = "1" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if mon == "1":
            terms.append(str(c))
        else:
            terms.append(mon if c == 1 else f"{c}{mon}")
    return "+".join(terms)


def finite_field(p: int, k: int = 1, involution: str = "identity") -> RingWithInvolution:
    """F_{p^k} = F_p[a]/(f) with f the lexicographically first monic irreducible.

    ``involution="frobenius_half"`` uses ``a -> a^(p^(k/2))`` and needs k even.
    """
    if not _is_prime(p):
        raise InputError(f"{p} is not prime")
    if k < 1:
        raise InputError("finite_field needs k >= 1")
    if involution not in ("identity", "frobenius_half"):
        raise InputError(f"unknown involution {involution!r}")
    if involution == "frobenius_half" and k % 2:
        raise InputError("frobenius_half needs an even degree")
    f = first_irreducible(p, k)

    def reduce(poly):
        r = _poly_mod(poly, f, p)
        return tuple(r + [0] * (k - len(r)))

    mono = [[0] * e + [1] for e in range(k)]
    mul = tuple(tuple(reduce(_poly_mul(mono[i], mono[j], p)) for j in range(k)) for i in range(k))
    if involution == "identity":
        cols = [reduce(m) for m in mono]
        suffix = ""
    else:
        q = p ** (k // 2)
        # a^q by square-and-multiply mod f
        acc, base, e = [1], mono[1] if k > 1 else [0], q
        while e:
            if e & 1:
                acc = _poly_mod(_poly_mul(acc, base, p), f, p)
            base = _poly_mod(_poly_mul(base, base, p), f, p)
            e >>= 1
        frob = acc
        cols = []
        power = [1]
        for _ in range(k):
            cols.append(reduce(power))
            power = _poly_mod(_poly_mul(power, frob, p), f, p)
        suffix = ",frob"
    name = f"F{p}" if k == 1 else f"F{p ** k}[{_poly_str(f)}{suffix}]"
    if k == 1 and involution != "identity":
        name += suffix
    labels = ["1"] + ["a" if e == 1 else f"a^{e}" for e in range(1, k)]
    return _build([p] * k, mul, reduce([1]), _matrix_from_columns(cols), name, labels)


def truncated_polynomial(R: RingWithInvolution, k: int, var: str = "x") -> RingWithInvolution:
    """R[x]/(x^k) with x central and fixed by the involution.

    Basis ``b_i * x^e`` at index ``e * n + i``.
    """
    if k < 1:
        raise InputError("truncated_polynomial needs k >= 1")
    n = R.n
    N = n * k

    def embed(v, e):
        out = [0] * N
        out[e * n:(e + 1) * n] = v
        return tuple(out)

    mul = []
    for e1 in range(k):
        for i in range(n):
            row = []
            for e2 in range(k):
                for j in range(n):
                    e = e1 + e2
                    row.append(embed(R.mul_table[i][j], e) if e < k else (0,) * N)
            mul.append(tuple(row))
    cols = [embed(R.invol(R.basis(i)), e) for e in range(k) for i in range(n)]
    labels = []
    for e in range(k):
        power = "1" if e == 0 else (var if e == 1 else f"{var}^{e}")
        labels.extend(_times_label(lab, power) for lab in R.labels)
    return _build(list(R.orders) * k, tuple(mul), embed(R.unit, 0), _matrix_from_columns(cols),
                  f"{R.name}[{var}]/({var}^{k})", labels)


def matrix_ring(R: RingWithInvolution, k: int) -> RingWithInvolution:
    """M_k(R) with ``X -> α(X)^T``. Basis ``E_ab * b_i`` at ``(a*k + b)*n + i``."""
    if k < 1:
        raise InputError("matrix_ring needs k >= 1")
    n = R.n
    N = k * k * n

    def idx(a, b, i):
        return (a * k + b) * n + i

    def embed(a, b, v):
        out = [0] * N
        for i, c in enumerate(v):
            out[idx(a, b, i)] = c
        return tuple(out)

    zero = (0,) * N
    mul = [[None] * N for _ in range(N)]
    for a in range(k):
        for b in range(k):
            for i in range(n):
                for c in range(k):
                    for d in range(k):
                        for j in range(n):
                            mul[idx(a, b, i)][idx(c, d, j)] = (
                                embed(a, d, R.mul_table[i][j]) if b == c else zero
                            )
    cols = [None] * N
    for a in range(k):
        for b in range(k):
            for i in range(n):
                cols[idx(a, b, i)] = embed(b, a, R.invol(R.basis(i)))
    unit = [0] * N
    for a in range(k):
        for i, c in enumerate(R.unit):
            unit[idx(a, a, i)] = c
    labels = [_times_label(lab, f"E{a + 1}{b + 1}") for a in range(k) for b in range(k) for lab in R.labels]
    return _build(list(R.orders) * (k * k), tuple(tuple(r) for r in mul), unit,
                  _matrix_from_columns(cols), f"M{k}({R.name})", labels)


def cyclic_group_table(m: int) -> List[List[int]]:
    return [[(a + b) % m for b in range(m)] for a in range(m)]


def symmetric_group_table(k: int) -> List[List[int]]:
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]


def group_ring(R: RingWithInvolution, table: Sequence[Sequence[int]], group_name: str = "G",
               element_names: Optional[Sequence[str]] = None) -> RingWithInvolution:
    """R[G] with ``r*g -> α(r)*g^-1``. Basis ``b_i * g`` at ``g*n + i``."""
    m = len(table)
    if m < 1 or any(len(row) != m for row in table):
        raise InputError("group table must be a non-empty square")
    if any(not (0 <= x < m) for row in table for x in row):
        raise InputError("group table entries out of range")
    ids = [e for e in range(m) if all(table[e][x] == x == table[x][e] for x in range(m))]
    if not ids:
        raise InputError("group table has no identity")
    e = ids[0]
    for a in range(m):
        for b in range(m):
            for c in range(m):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise InputError("group table is not associative")
    inv = []
    for a in range(m):
        cand = [b for b in range(m) if table[a][b] == e]
        if len(cand) != 1 or table[cand[0]][a] != e:
            raise InputError("group table has an element without inverse")
        inv.append(cand[0])
    n = R.n
    N = m * n

    def embed(g, v):
        out = [0] * N
        out[g * n:(g + 1) * n] = v
        return tuple(out)

    mul = tuple(
        tuple(embed(table[g][h], R.mul_table[i][j]) for h in range(m) for j in range(n))
        for g in range(m) for i in range(n)
    )
    cols = [embed(inv[g], R.invol(R.basis(i))) for g in range(m) for i in range(n)]
    if element_names is None:
        element_names = ["1" if g == e else f"g{g}" for g in range(m)]
    labels = [_times_label(lab, element_names[g]) for g in range(m) for lab in R.labels]
    return _build(list(R.orders) * m, mul, embed(e, R.unit), _matrix_from_columns(cols),
                  f"{R.name}[{group_name}]", labels)


def cyclic_group_ring(R: RingWithInvolution, m: int) -> RingWithInvolution:
    names = ["1", "g"] + [f"g^{k}" for k in range(2, m)]
    return group_ring(R, cyclic_group_table(m), f"C{m}", names[:m])


def product(R1: RingWithInvolution, R2: RingWithInvolution) -> RingWithInvolution:
    """R1 x R2 with componentwise operations; basis of R1 then basis of R2."""
    n1, n2 = R1.n, R2.n

    def left(v):
        return tuple(v) + (0,) * n2

    def right(v):
        return (0,) * n1 + tuple(v)

    zero = (0,) * (n1 + n2)
    mul = [[zero] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            mul[i][j] = left(R1.mul_table[i][j])
    for i in range(n2):
        for j in range(n2):
            mul[n1 + i][n1 + j] = right(R2.mul_table[i][j])
    cols = [left(R1.invol(R1.basis(i))) for i in range(n1)] + \
           [right(R2.invol(R2.basis(i))) for i in range(n2)]
    labels = [f"({lab},0)" for lab in R1.labels] + [f"(0,{lab})" for lab in R2.labels]
    return _build(R1.orders + R2.orders, tuple(tuple(r) for r in mul), tuple(R1.unit) + tuple(R2.unit),
                  _matrix_from_columns(cols), f"{R1.name} x {R2.name}", labels)


def projection(P: RingWithInvolution, n1: int, which: int) -> List[List[int]]:
    """Additive matrix of the projection of a :func:`product` onto a factor."""
    N = P.n
    rng = range(n1) if which == 0 else range(n1, N)
    return [[int(j == i) for j in range(N)] for i in rng]


def gaussian_integers() -> RingWithInvolution:
    """Z[i] with complex conjugation."""
    mul = (((1, 0), (0, 1)), ((0, 1), (-1, 0)))
    A = ((1, 0), (0, -1))
    return _build([0, 0], mul, (1, 0), A, "Z[i]", ["1", "i"])


def quaternion_ring(n: int) -> RingWithInvolution:
    """Hamilton quaternions over Z/n (Z for n = 0) with conjugation."""
    if n < 0:
        raise InputError("quaternion_ring needs n >= 0")
    # basis 1, i, j, k; products as (sign, index)
    ham = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    mul = tuple(
        tuple(tuple(ham[a, b][0] if c == ham[a, b][1] else 0 for c in range(4)) for b in range(4))
        for a in range(4)
    )
    A = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(4)) for i in range(4))
    base = "Z" if n == 0 else f"Z/{n}"
    return _build([n] * 4, mul, (1, 0, 0, 0), A, f"H({base})", ["1", "i", "j", "k"])
