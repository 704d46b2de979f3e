import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from dihedra.bar_thh import (
    STAR, build_bar, check_diagonal, complex_homology, diagonal_map, homology_table, int_det,
    matmul, normalized_chain_complex, relabeled, smash, smith_normal_form, thh_operator,
    unnormalized_chain_complex, verify_bar_suite,
)
from dihedra.crossed_simplicial import check_identities
from dihedra.errors import ArgumentError
from dihedra.perm_core import (
    PointedMonoid, cyclic_group_monoid, enumerate_pointed_monoids, trivial_monoid,
)


def invertible(M):
    return abs(int_det(M)) == 1


def matrices(max_dim=5, bound=6):
    return st.tuples(st.integers(1, max_dim), st.integers(1, max_dim)).flatmap(
        lambda mn: st.lists(st.lists(st.integers(-bound, bound), min_size=mn[1], max_size=mn[1]),
                            min_size=mn[0], max_size=mn[0]))


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_snf_decomposition(A):
    res = smith_normal_form(A)
    assert matmul(matmul(res.U, A), res.V) == res.D
    assert invertible(res.U) and invertible(res.V)
    diag = res.diagonal
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(nz[t + 1] % nz[t] == 0 for t in range(len(nz) - 1))
    assert diag[len(nz):] == [0] * (len(diag) - len(nz))
    off = [res.D[a][b] for a in range(len(A)) for b in range(len(A[0])) if a != b]
    assert not any(off)


@settings(max_examples=100, deadline=None)
@given(matrices(4, 5))
def test_snf_agrees_with_sympy(A):
    ours = [d for d in smith_normal_form(A).diagonal if d]
    theirs = sympy_snf(sympy.Matrix(A), domain=sympy.ZZ)
    k = min(theirs.shape)
    want = [abs(int(theirs[t, t])) for t in range(k) if theirs[t, t] != 0]
    assert ours == sorted(want)


def test_snf_empty_and_ragged():
    assert smith_normal_form([], 0, 3).diagonal == []
    with pytest.raises(ArgumentError):
        smith_normal_form([[1, 2], [3]])


def test_smash_and_operators():
    M = cyclic_group_monoid(2)
    assert smash((1, 0, 2)) is STAR
    assert thh_operator("d", (2, 2, 1), M, 0) == (1, 1)
    assert thh_operator("d", (2, 1, 2), M, 2) == (1, 1)
    assert thh_operator("s", (2, 2), M, 1) == (2, 2, 1)
    assert thh_operator("t", (1, 2, 2), M) == (2, 1, 2)


@pytest.mark.parametrize("M", enumerate_pointed_monoids(3, involutive=True)
                         + enumerate_pointed_monoids(2, involutive=True), ids=lambda M: str(M.table))
def test_bar_is_dihedral(M):
    assert check_identities(build_bar(M, 4)).ok


def test_diagonal_examples():
    assert diagonal_map((1, 2), 2) == (1, 2, 1, 2)
    assert check_diagonal(cyclic_group_monoid(3), 2, 3).ok


def _homology_from(mats, ranks, n_max):
    """Homology from boundary matrices, computed with sympy alone."""
    out = []
    for n in range(n_max + 1):
        rank_out = sympy.Matrix(mats[n]).rank() if n in mats else 0
        if n + 1 in mats:
            D = sympy_snf(sympy.Matrix(mats[n + 1]), domain=sympy.ZZ)
            diag = [abs(int(D[t, t])) for t in range(min(D.shape)) if D[t, t] != 0]
        else:
            diag = []
        out.append((ranks[n] - rank_out - len(diag), [d for d in diag if d > 1]))
    return out


def test_c2_hand_computation():
    # hand oracle: a_n = (1, g, .., g), b_n = (g, .., g); d_n = (1 + (-1)^n) swap
    mats, ranks = {}, {}
    for n in range(5):
        ranks[n] = 2
        if n:
            c = 1 + (-1) ** n
            mats[n] = [[0, c], [c, 0]]
    hand = _homology_from(mats, ranks, 3)
    assert hand == [(2, []), (0, [2, 2]), (0, []), (0, [2, 2])]
    got = homology_table(build_bar(cyclic_group_monoid(2), 4), 3)
    assert [(f, sorted(t)) for f, t in got] == hand


def test_c2_boundary_matches_hand_basis():
    C = normalized_chain_complex(build_bar(cyclic_group_monoid(2), 4), 4)
    for n in range(1, 5):
        assert sorted(C.bases[n]) == [(1,) + (2,) * n, (2,) * (n + 1)]
        c = 1 + (-1) ** n
        mat = C.boundaries[n]
        assert sorted(abs(v) for row in mat for v in row) == [0, 0, c, c]


def test_trivial_monoid():
    X = build_bar(trivial_monoid(), 4)
    assert homology_table(X, 3) == [(1, []), (0, []), (0, []), (0, [])]
    assert homology_table(X, 3, augmented=True) == [(0, [])] * 4


def test_c3_degree_zero():
    assert homology_table(build_bar(cyclic_group_monoid(3), 2), 1)[0] == (3, [])


@pytest.mark.parametrize("M", [cyclic_group_monoid(2), cyclic_group_monoid(3),
                               PointedMonoid([[0, 0, 0], [0, 1, 2], [0, 2, 0]])], ids=repr)
def test_normalized_equals_unnormalized(M):
    X = build_bar(M, 4)
    N = normalized_chain_complex(X, 4)
    U = unnormalized_chain_complex(X, 4)
    for n in range(3):
        assert complex_homology(N, n) == complex_homology(U, n)


def test_relabeling_invariance():
    X = build_bar(cyclic_group_monoid(2), 4)
    rng = random.Random(5)
    assert homology_table(relabeled(X, rng), 3) == homology_table(X, 3)


def test_suite_small():
    monoids = enumerate_pointed_monoids(3, involutive=True)
    assert verify_bar_suite(monoids, q_max=2, r_max=2).ok
