import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedra.bar_thh import STAR
from dihedra.errors import ArgumentError, InvariantError
from dihedra.matrix_trace import (
    BEElement, LexOrdering, MatrixElem, be_add, be_bar_operator, be_canonicalize, be_empty,
    enumerate_matrices, is_special, mat_bar_operator, mat_census, mat_direct_sum, mat_mul,
    mat_unit, restriction, special_lemma_sides, special_maps, trace_q, verify_trace_suite,
    WedgeElem, wn_elements, wn_face, wn_homotopy, wn_incl, wn_trace,
)
from dihedra.perm_core import Permutation, cyclic_group_monoid


def brute_matrix_count(n, size):
    """Count n x n arrays over {0..size-1} with at most one non-zero per row and column."""
    count = 0
    for cells in itertools.product(range(size), repeat=n * n):
        rows = [cells[a * n:(a + 1) * n] for a in range(n)]
        if all(sum(1 for v in r if v) <= 1 for r in rows) and \
                all(sum(1 for r in rows if r[b]) <= 1 for b in range(n)):
            count += 1
    return count


def test_two_by_two_over_two_points():
    assert len(enumerate_matrices(2, [1])) == 7


@pytest.mark.parametrize("n,size", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_census_formula(n, size):
    want = brute_matrix_count(n, size)
    assert sum(mat_census(n, k, size) for k in range(n + 1)) == want
    assert len(enumerate_matrices(n, range(1, size))) == want


def test_matrix_invariants():
    with pytest.raises(InvariantError):
        MatrixElem(2, [(1, 1, 1), (1, 2, 1)])
    with pytest.raises(InvariantError):
        MatrixElem(2, [(1, 3, 1)])


def test_matrix_product():
    M = cyclic_group_monoid(2)
    A = MatrixElem(2, [(1, 2, 2)])
    B = MatrixElem(2, [(2, 1, 2)])
    assert mat_mul(A, B, M) == MatrixElem(2, [(1, 1, 1)])
    assert mat_mul(B, A, M) == MatrixElem(2, [(2, 2, 1)])
    assert mat_mul(A, A, M).is_zero


def test_trace_of_one_by_one_matrices():
    for xs in itertools.product(range(1, 4), repeat=3):
        ms = [MatrixElem(1, [(1, 1, x)]) for x in xs]
        got = trace_q(ms)
        assert got.xs == (xs,)
        assert all(p == Permutation.identity(1) for p in got.perms)
    assert trace_q([MatrixElem(1), mat_unit(1)]) == be_empty(1)


def test_trace_of_units_is_the_diagonal():
    got = trace_q([mat_unit(3)])
    assert got.xs == ((1,), (1,), (1,))


def test_canonical_form_strips_basepoints():
    u = be_canonicalize([Permutation([2, 1, 3]), Permutation([3, 1, 2])], [(1, 2), STAR, (2, 1)])
    assert u.arity == 2
    assert u.perms[0] == Permutation.identity(2)


def test_restriction():
    assert restriction((1, 3), Permutation([3, 1, 2])) == Permutation([2, 1])
    with pytest.raises(ArgumentError):
        restriction((1, 1), Permutation([1, 2]))


def test_lex_orderings():
    lam1 = LexOrdering(2, 1, 1)
    assert [lam1(t) for t in range(1, 5)] == [(1, 1), (2, 1), (1, 2), (2, 2)]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_trace_additive(seed):
    rng = random.Random(seed)
    q = rng.randint(0, 2)
    pool1, pool2 = enumerate_matrices(1, range(1, 3)), enumerate_matrices(2, range(1, 3))
    A = [rng.choice(pool1) for _ in range(q + 1)]
    B = [rng.choice(pool2) for _ in range(q + 1)]
    lhs = trace_q([mat_direct_sum(a, b) for a, b in zip(A, B)])
    assert lhs == be_add(trace_q(A), trace_q(B))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from(["d", "s", "t", "r"]))
def test_trace_commutes_with_operators(seed, kind):
    rng = random.Random(seed)
    M = cyclic_group_monoid(3)
    n, q = rng.randint(1, 2), rng.randint(1, 2)
    pool = enumerate_matrices(n, range(1, 4))
    ms = [rng.choice(pool) for _ in range(q + 1)]
    i = rng.randint(0, q) if kind in "ds" else None
    lhs = trace_q(mat_bar_operator(kind, ms, M, i))
    rhs = be_bar_operator(kind, trace_q(ms), M, i)
    assert lhs == rhs


def test_wedge_model():
    M = cyclic_group_monoid(2)
    W = WedgeElem
    assert wn_trace(wn_incl((1, 2))) == (1, 2)
    closed = (W(1, 2, 2), W(2, 2, 1))
    assert wn_trace(closed) == (2, 2)
    assert wn_trace((W(1, 2, 2), W(1, 2, 1))) is STAR
    # g g = 1 in C_2
    assert wn_face(closed, 0, M) == (W(1, 1, 1),)
    assert wn_face(closed, 1, M) == (W(2, 1, 2),)
    us = (W(1, 1, 1), W(1, 1, 2))
    assert wn_homotopy(us, 0, M) == (W(1, 1, 1), W(1, 1, 1), W(1, 1, 2))
    assert wn_homotopy(us, 1, M) == (W(1, 1, 1), W(1, 1, 1), W(1, 1, 2))
    assert wn_homotopy((W(1, 1, 2), W(1, 1, 1)), 1, M) is STAR
    assert len(wn_elements(2, [1, 2])) == 8


def test_special_maps_lemma_small():
    for beta in special_maps(2, 1):
        assert is_special(beta, 2, 1)
        for i in range(2):
            a, b = special_lemma_sides(beta, 2, 1, i)
            assert a == b


def test_suite_small():
    M = [cyclic_group_monoid(2)]
    assert verify_trace_suite(n_max=2, q_max=1, monoids=M).ok


def test_wrong_orderings_break_equivariance():
    def same(n, q):
        return [LexOrdering(n, q, 0)] * (q + 1)
    rep = verify_trace_suite(n_max=2, q_max=1, monoids=[cyclic_group_monoid(2)], lambdas=same)
    assert "Tr commutes with t_q" in rep.failed_cases()


def test_be_element_equality():
    u = BEElement([Permutation.identity(1)] * 2, ((1, 1),), 1)
    assert u == be_canonicalize([Permutation.identity(1)] * 2, [(1, 1)], 1)
