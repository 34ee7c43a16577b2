from __future__ import annotations

from pathlib import Path

import pytest

from corpus import finite_corpus, full_corpus
from thrfix import gf2
from thrfix.errors import CrossCheckError, InputError
from thrfix.geomfix import norm_quotient, pi0_geometric_fixed_points, relation_subgroup
from thrfix.oracle import (
    BASE,
    ambient_fixed_subgroup,
    brute_force_relation_subgroup,
    coequalizer_pi0,
    fixed_chain_complex,
    format_factors,
    homology_H1,
    parse_factors,
    read_golden,
    simplicial_sphere,
    write_golden,
)
from thrfix.ring_inv import (
    cyclic_group_ring,
    cyclic_ring,
    finite_field,
    gaussian_integers,
    integers,
    matrix_ring,
    product,
    quaternion_ring,
    truncated_polynomial,
)

F2 = cyclic_ring(2)
GOLDEN = Path(__file__).parent / "golden" / "derived_small.tsv"


# -- the simplicial sphere ---------------------------------------------------------

def test_sphere_levels():
    assert simplicial_sphere(0).simplices == (BASE,)
    assert simplicial_sphere(1).simplices == (BASE, (1, 1))
    assert set(simplicial_sphere(2).simplices) == {BASE, (1, 1), (2, 2), (1, 2), (2, 1)}
    assert len(simplicial_sphere(2).simplices) == 5
    assert len(simplicial_sphere(3).simplices) == 1 + 9


def test_faces_of_level_two():
    S = simplicial_sphere(2)
    # d_s(x_i) = x_i for i <= s else x_{i-1}; x_0 and x_2 are the basepoint at level 1
    assert [S.face(s, (1, 2)) for s in range(3)] == [BASE, (1, 1), BASE]
    assert [S.face(s, (2, 1)) for s in range(3)] == [BASE, (1, 1), BASE]
    assert [S.face(s, (1, 1)) for s in range(3)] == [BASE, (1, 1), (1, 1)]
    assert [S.face(s, (2, 2)) for s in range(3)] == [(1, 1), (1, 1), BASE]


def test_simplicial_identities():
    for k in range(2, 4):
        S, L = simplicial_sphere(k), simplicial_sphere(k - 1)
        for x in S.simplices:
            for i in range(k + 1):
                for j in range(i + 1, k + 1):
                    # d_i d_j = d_{j-1} d_i
                    assert L.face(i, S.face(j, x)) == L.face(j - 1, S.face(i, x))


def test_degeneracy_identities():
    for k in range(1, 4):
        S = simplicial_sphere(k)
        up = simplicial_sphere(k + 1)
        for x in S.simplices:
            for j in range(k + 1):
                y = S.degeneracy(j, x)
                assert y in up.simplices
                assert up.face(j, y) == x
                assert up.face(j + 1, y) == x


def test_swap():
    S = simplicial_sphere(2)
    assert S.swap((1, 2)) == (2, 1)
    assert S.swap(BASE) == BASE


# -- the fixed chain complex ----------------------------------------------------------

@pytest.mark.parametrize("R", full_corpus(), ids=lambda R: R.name)
def test_boundary_squared_vanishes(R):
    cc = fixed_chain_complex(R, 3)
    assert cc.boundary_squares_vanish()


def test_degree_one_is_fixed_subgroup():
    R = matrix_ring(F2, 2)
    cc = fixed_chain_complex(R)
    assert cc.groups[0].num_generators == 0
    assert cc.groups[1].invariant_factors() == [2, 2, 2]


def test_degree_two_boundary_on_the_swapped_pair():
    R = integers()
    cc = fixed_chain_complex(R)
    # generators at level 2: (1,1), (2,2), then the pair {(1,2),(2,1)}
    d2 = cc.boundaries[2]
    assert d2.column(0) == (0,)
    assert d2.column(1) == (0,)
    # r (x1∧x2) + α(r) (x2∧x1) with r = 1 goes to -2 (x1∧x1)
    assert d2.column(2) == (-2,)


def test_f2_chain_groups_are_vector_spaces():
    cc = fixed_chain_complex(F2, 3)
    for C in cc.groups:
        assert all(d == 2 for d in C.invariant_factors())


@pytest.mark.parametrize("R", [cyclic_ring(4), gaussian_integers(), matrix_ring(F2, 2), quaternion_ring(2)],
                         ids=lambda R: R.name)
def test_parametrization_matches_plain_fixed_points(R):
    for k in range(4):
        plain = ambient_fixed_subgroup(R, k)[0].invariant_factors()
        assert fixed_chain_complex(R, 3).groups[k].invariant_factors() == plain


# -- H1 ---------------------------------------------------------------------------

@pytest.mark.parametrize("R,expected", [
    (cyclic_ring(4), [2]),
    (finite_field(3), []),
    (gaussian_integers(), [2]),
], ids=["Z/4", "F3", "Z[i]"])
def test_h1_examples(R, expected):
    assert homology_H1(R).invariant_factors() == expected


@pytest.mark.parametrize("R", full_corpus(), ids=lambda R: R.name)
def test_h1_equals_norm_quotient(R):
    assert homology_H1(R, check=False).invariant_factors() == norm_quotient(R).Q.invariant_factors()


def test_h1_mismatch_raises(monkeypatch):
    import thrfix.oracle as oracle
    from dataclasses import replace

    real = oracle.norm_quotient

    def fake(R, *a):
        nq = real(R, *a)
        return replace(nq, Q=oracle.AbelianPresentation(3, ((2, 0, 0), (0, 2, 0), (0, 0, 2))))

    monkeypatch.setattr(oracle, "norm_quotient", fake)
    with pytest.raises(CrossCheckError):
        homology_H1(F2)


# -- coequalizer ---------------------------------------------------------------------

@pytest.mark.parametrize("R,expected", [
    (integers(), [2]),
    (F2, [2]),
    (finite_field(5), []),
], ids=["Z", "F2", "F5"])
def test_coequalizer_examples(R, expected):
    assert list(coequalizer_pi0(R).invariant_factors) == expected


@pytest.mark.parametrize("R", full_corpus(), ids=lambda R: R.name)
def test_coequalizer_equals_linear(R):
    assert coequalizer_pi0(R).invariant_factors == pi0_geometric_fixed_points(R, "linear").invariant_factors


def test_coequalizer_classifier():
    R = product(F2, F2)
    res = coequalizer_pi0(R)
    e1, e2 = R.basis(0), R.basis(1)
    assert not any(res.classify([(1, e1, e2)]))
    assert any(res.classify([(1, e1, e1)]))
    for i, w in enumerate(res.witnesses):
        assert [c % 2 for c in res.classify(w)] == [int(i == j) for j in range(len(res.witnesses))]


# -- brute force -----------------------------------------------------------------------

def dim_span(R, gens):
    return gf2.F2Span(norm_quotient(R).dim ** 2, gens).rank


def test_brute_force_examples():
    R = cyclic_ring(4)
    assert dim_span(R, brute_force_relation_subgroup(R)) == 0
    R = product(F2, F2)
    assert dim_span(R, brute_force_relation_subgroup(R)) == 2


def test_brute_force_errors():
    with pytest.raises(InputError):
        brute_force_relation_subgroup(integers())
    with pytest.raises(InputError):
        brute_force_relation_subgroup(matrix_ring(F2, 2), max_order=8)
    with pytest.raises(InputError):
        brute_force_relation_subgroup(F2, pairs="some")


@pytest.mark.parametrize("R", finite_corpus(), ids=lambda R: R.name)
def test_brute_force_matches_linear(R):
    nq = norm_quotient(R)
    d = nq.dim ** 2
    lin = gf2.F2Span(d, relation_subgroup(R, nq, "linear"))
    for pairs in ("lifts", "all"):
        b = brute_force_relation_subgroup(R, nq, pairs=pairs)
        bs = gf2.F2Span(d, b)
        assert bs.rank == lin.rank
        assert all(v in lin for v in b)


# -- golden file --------------------------------------------------------------------------

def test_factor_format_round_trip():
    assert format_factors([]) == "[]"
    assert format_factors([2, 2]) == "[2, 2]"
    assert parse_factors("[2, 2]") == [2, 2]
    assert parse_factors("[]") == []
    with pytest.raises(ValueError):
        parse_factors("2, 2")


def test_golden_round_trip(tmp_path):
    p = tmp_path / "g.tsv"
    write_golden(p, {"A": [2], "B": []})
    assert read_golden(p) == {"A": [2], "B": []}


def test_golden_values():
    golden = read_golden(GOLDEN)
    rings = {R.name: R for R in full_corpus()}
    assert set(golden) == set(rings)
    for name, factors in golden.items():
        assert list(pi0_geometric_fixed_points(rings[name], "all").invariant_factors) == factors, name
