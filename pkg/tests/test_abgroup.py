from __future__ import annotations

import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thrfix.abgroup import (
    AbelianPresentation,
    GroupMap,
    cokernel,
    cyclic,
    determinant,
    direct_sum,
    free,
    image,
    kernel,
    matmul,
    quotient_by_subgroup,
    smith_normal_form,
    solve_membership,
    subgroup,
    tensor_product,
)


def minor_gcds(M, ncols):
    """d_1 d_2 ... d_k as gcds of k x k minors (slow, small matrices only)."""
    from itertools import combinations

    rows = len(M)
    out = []
    for k in range(1, min(rows, ncols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(ncols), k):
                g = gcd(g, determinant([[M[r][c] for c in cs] for r in rs]))
        out.append(g)
    return out


def check_snf(M, ncols):
    U, D, V = smith_normal_form(M, ncols)
    assert matmul(matmul(U, M, len(M)), V, ncols) == [list(r) for r in D]
    assert abs(determinant(U)) == 1
    assert abs(determinant(V)) == 1
    diag = [D[i][i] for i in range(min(len(M), ncols))]
    for i in range(len(M)):
        for j in range(ncols):
            if i != j:
                assert D[i][j] == 0
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    return diag


def test_snf_examples():
    assert check_snf([[2, 4], [6, 8]], 2) == [2, 4]
    assert check_snf([[1, 0], [0, 1]], 2) == [1, 1]
    assert check_snf([[0]], 1) == [0]


def test_snf_identity_gives_identity_transforms():
    U, D, V = smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    assert [list(r) for r in D] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_snf_matches_minor_gcds():
    rng = random.Random(7)
    for _ in range(40):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        M = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        diag = check_snf(M, c)
        prods, p = [], 1
        for d in diag:
            p *= d
            prods.append(p)
        assert prods == minor_gcds(M, c)


def test_snf_random_contract():
    rng = random.Random(20240601)
    for _ in range(200):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        M = [[rng.randint(-50, 50) for _ in range(c)] for _ in range(r)]
        check_snf(M, c)


def test_snf_big_entries_stay_exact():
    M = [[2 ** 80 + 1, 3 ** 50], [7 ** 30, 2 ** 100]]
    check_snf(M, 2)


def test_snf_empty_rows():
    U, D, V = smith_normal_form([], 3)
    assert D == [] or all(not any(r) for r in D)


def test_invariant_factor_examples():
    assert AbelianPresentation(2, ((6, 0), (0, 4))).invariant_factors() == [2, 12]
    assert AbelianPresentation(2, ()).invariant_factors() == [0, 0]
    assert AbelianPresentation(1, ((1,),)).invariant_factors() == []


def test_zero_factors_come_last():
    P = AbelianPresentation(3, ((0, 3, 0),))
    assert P.invariant_factors() == [3, 0, 0]


def test_presentation_independence():
    rels = ((6, 2, 0), (0, 4, 8), (2, 2, 2))
    base = AbelianPresentation(3, rels).invariant_factors()
    assert AbelianPresentation(3, rels[::-1]).invariant_factors() == base
    swapped = tuple((r[2], r[0], r[1]) for r in rels)
    assert AbelianPresentation(3, swapped).invariant_factors() == base
    added = (rels[0], tuple(a + b for a, b in zip(rels[0], rels[1])), rels[2])
    assert AbelianPresentation(3, added).invariant_factors() == base


def test_kernel_image_cokernel_mult_by_two():
    Z = free(1)
    f = GroupMap(Z, Z, ((2,),))
    K, _ = kernel(f)
    assert K.invariant_factors() == []
    assert image(f)[0].invariant_factors() == [0]
    assert cokernel(f)[0].invariant_factors() == [2]


def test_kernel_of_swap_minus_identity():
    Z2 = free(2)
    f = GroupMap(Z2, Z2, ((-1, 1), (1, -1)))
    K, incl = kernel(f)
    assert K.invariant_factors() == [0]
    col = incl.column(0)
    assert col in ((1, 1), (-1, -1))
    assert f.compose(incl).is_zero()


def test_zero_map():
    P = direct_sum(cyclic(4), cyclic(6))
    f = GroupMap(P, P, ((0, 0), (0, 0)))
    assert kernel(f)[0].invariant_factors() == P.invariant_factors()
    assert image(f)[0].invariant_factors() == []
    assert cokernel(f)[0].invariant_factors() == P.invariant_factors()


def test_kernel_on_torsion_source():
    # Z/4 -> Z/2, 1 -> 1
    f = GroupMap(cyclic(4), cyclic(2), ((1,),))
    assert f.is_well_defined()
    K, incl = kernel(f)
    assert K.invariant_factors() == [2]
    assert f.compose(incl).is_zero()


def test_ill_defined_map_detected():
    assert not GroupMap(cyclic(2), cyclic(3), ((1,),)).is_well_defined()


def test_quotient_examples():
    assert quotient_by_subgroup(free(2), [(2, 0)])[0].invariant_factors() == [2, 0]
    P = direct_sum(cyclic(4), free(1))
    assert quotient_by_subgroup(P, [(0, 0)])[0].invariant_factors() == P.invariant_factors()
    assert quotient_by_subgroup(cyclic(4), [(2,)])[0].invariant_factors() == [2]


def test_quotient_order_formula():
    P = direct_sum(cyclic(4), cyclic(6), cyclic(2))
    gens = [(2, 3, 0), (0, 2, 1)]
    Q = quotient_by_subgroup(P, gens)[0]
    S = subgroup(P, gens)
    assert Q.order() * S.order() == P.order()


@pytest.mark.parametrize("a,b,expected", [(6, 4, [2]), (2, 3, [])])
def test_tensor_examples(a, b, expected):
    assert tensor_product(cyclic(a), cyclic(b)).invariant_factors() == expected


def test_tensor_with_integers():
    assert tensor_product(free(1), cyclic(5)).invariant_factors() == [5]


def test_tensor_gcd_law():
    for a in range(2, 31):
        for b in range(2, 31):
            g = gcd(a, b)
            assert tensor_product(cyclic(a), cyclic(b)).invariant_factors() == ([g] if g > 1 else [])


def test_solve_membership_examples():
    P = cyclic(4)
    assert solve_membership(P, [(2,)], (0,)) == [0]
    assert solve_membership(P, [(2,)], (2,)) is not None
    assert solve_membership(free(2), [(2, 0)], (1, 0)) is None


def test_solve_membership_certificate():
    P = direct_sum(cyclic(6), free(1))
    gens = [(2, 3), (3, 1)]
    x = (5, 4)
    c = solve_membership(P, gens, x)
    if c is not None:
        combo = [sum(ci * g[k] for ci, g in zip(c, gens)) for k in range(2)]
        assert P.is_zero([u - v for u, v in zip(combo, x)])


def test_decomposition_coordinates():
    P = AbelianPresentation(2, ((2, 4), (6, 8)))
    dec = P.decompose()
    assert dec.factors == [2, 4] or list(dec.factors) == [2, 4]
    for g, d in zip(dec.generators, dec.factors):
        assert not P.is_zero(g) or d == 1
        assert P.is_zero([d * x for x in g])


small = st.integers(min_value=-12, max_value=12)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=0, max_size=4))
def test_exactness_order(rows):
    # source Z/6 + Z/4 + Z/2 mapped into Z/12 + Z/12 by a random well-defined matrix
    src = direct_sum(cyclic(6), cyclic(4), cyclic(2))
    tgt = direct_sum(cyclic(12), cyclic(12))
    # scale columns so the map respects the source orders
    cols = []
    for j, d in enumerate((6, 4, 2)):
        k = 12 // d
        cols.append(tuple(k * (rows[i % len(rows)][j] if rows else 1) for i in range(2)))
    f = GroupMap.from_columns(src, tgt, cols)
    assert f.is_well_defined()
    assert image(f)[0].order() * kernel(f)[0].order() == src.order()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=5), st.randoms())
def test_permutation_invariance(rows, rnd):
    P = AbelianPresentation(3, tuple(tuple(r) for r in rows))
    perm = list(range(3))
    rnd.shuffle(perm)
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    Q = AbelianPresentation(3, tuple(tuple(r[p] for p in perm) for r in shuffled))
    assert P.invariant_factors() == Q.invariant_factors()
