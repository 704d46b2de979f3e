import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedra.errors import ArgumentError, InvariantError
from dihedra.perm_core import (
    COMMUTATIVE, HYPEROCTAHEDRAL, SYMMETRIC, Permutation, PointedMonoid, SignedPerm,
    TableOperad, algebra_axioms_check, box_compose_i, box_model_check, commutative_action,
    cyclic_group_monoid, enumerate_pointed_monoids, five_formulas_check,
    h_algebra_from_involutive_monoid, hyper_compose_i, hyper_matrix_check,
    involution_identities, iterated_composition_check, matrix_to_signed_perm, monoid_action,
    operad_axioms_check, perm_compose_i, trivial_monoid,
)


def perms(max_k=5, min_k=0):
    return st.integers(min_k, max_k).flatmap(
        lambda k: st.permutations(list(range(1, k + 1))).map(Permutation))


def signed(max_k=4, min_k=0):
    return st.integers(min_k, max_k).flatmap(
        lambda k: st.tuples(st.lists(st.sampled_from((1, -1)), min_size=k, max_size=k),
                            st.permutations(list(range(1, k + 1))))
    ).map(lambda sp: SignedPerm(tuple(sp[0]), sp[1]))


def test_known_composition():
    got = perm_compose_i(Permutation([2, 4, 1, 3]), Permutation([3, 2, 1]), 1)
    assert list(got.images) == [4, 3, 2, 6, 1, 5]


def test_act_convention():
    # position p(t) of the result holds entry t
    assert Permutation([2, 3, 1]).act("abc") == ("c", "a", "b")
    assert Permutation([2, 3, 1])(1) == 2


def test_composition_with_empty_permutation_contracts():
    r = Permutation([3, 1, 2])
    # delete input i and its image, then relabel order-preservingly
    assert list(perm_compose_i(r, Permutation.identity(0), 1).images) == [1, 2]
    assert list(perm_compose_i(r, Permutation.identity(0), 2).images) == [2, 1]
    assert list(perm_compose_i(r, Permutation.identity(0), 3).images) == [2, 1]


def test_slot_out_of_range():
    with pytest.raises(ArgumentError):
        perm_compose_i(Permutation([1, 2]), Permutation([1]), 3)


@settings(max_examples=300, deadline=None)
@given(perms(min_k=1), perms(), st.data())
def test_formula_matches_boxes(r, u, data):
    i = data.draw(st.integers(1, len(r)))
    assert perm_compose_i(r, u, i) == box_compose_i(r, u, i)


@settings(max_examples=200, deadline=None)
@given(perms(4, 1), perms(3, 1), perms(3), st.data())
def test_sequential_associativity(r, u, m, data):
    a = data.draw(st.integers(1, len(r)))
    b = data.draw(st.integers(0, len(u) - 1)) + a
    lhs = perm_compose_i(perm_compose_i(r, u, a), m, b)
    rhs = perm_compose_i(r, perm_compose_i(u, m, b - a + 1), a)
    assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(signed(3, 1), signed(3), st.data())
def test_signed_composition_is_block_matrix(a, b, data):
    from dihedra.perm_core import hyper_matrix_compose_i
    i = data.draw(st.integers(1, len(a)))
    got = hyper_compose_i(a, b, i).to_matrix()
    assert np.array_equal(got, hyper_matrix_compose_i(a.to_matrix(), b.to_matrix(), i))


@given(signed(5))
def test_signed_matrix_roundtrip(a):
    assert matrix_to_signed_perm(a.to_matrix()) == a


def test_box_model_small():
    assert box_model_check(4).ok


def test_five_formulas_and_iterated():
    assert five_formulas_check(3).ok
    assert iterated_composition_check(3).ok


def test_hyper_matrix_exhaustive():
    assert hyper_matrix_check(2).ok


@pytest.mark.parametrize("P", [SYMMETRIC, COMMUTATIVE, HYPEROCTAHEDRAL], ids=lambda P: P.name)
def test_operad_axioms(P):
    assert operad_axioms_check(P, 3).ok


def test_operad_axioms_catch_a_broken_table():
    r, u = Permutation([2, 1]), Permutation([1, 2])
    bad = TableOperad(SYMMETRIC, {(r.images, u.images, 1): Permutation([1, 2, 3])})
    rep = operad_axioms_check(bad, 3)
    assert not rep.ok


def _naive_monoid_count(size):
    free = range(2, size)
    count = 0
    for vals in itertools.product(range(size), repeat=len(free) ** 2):
        tab = {}
        for x in range(size):
            tab[0, x] = tab[x, 0] = 0
            tab[1, x] = tab[x, 1] = x
        for (x, y), v in zip(itertools.product(free, free), vals):
            tab[x, y] = v
        if all(tab[tab[x, y], z] == tab[x, tab[y, z]]
               for x in range(size) for y in range(size) for z in range(size)):
            count += 1
    return count


@pytest.mark.parametrize("size", [2, 3, 4])
def test_monoid_enumeration_against_brute_force(size):
    found = enumerate_pointed_monoids(size)
    assert len(found) == _naive_monoid_count(size)
    assert len(set(found)) == len(found)


def test_monoid_text_roundtrip(tmp_path):
    M = cyclic_group_monoid(3)
    path = tmp_path / "c3.mon"
    path.write_text(M.to_text())
    assert PointedMonoid.from_file(path) == M


def test_bad_monoid_rejected():
    with pytest.raises(InvariantError):
        PointedMonoid([[0, 0, 0], [0, 1, 2], [0, 2, 1]], [0, 1, 1])
    with pytest.raises(InvariantError):
        PointedMonoid([[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 0], [0, 3, 3, 3]])


@pytest.mark.parametrize("M", [trivial_monoid(), cyclic_group_monoid(2), cyclic_group_monoid(3)],
                         ids=repr)
def test_algebra_actions(M):
    assert algebra_axioms_check(monoid_action(M), 3).ok
    assert algebra_axioms_check(h_algebra_from_involutive_monoid(M), 3).ok
    assert involution_identities(M).ok


def test_commutative_action_needs_commutativity():
    # x y = x, y x = y on two idempotents is not commutative
    M = PointedMonoid([[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 2, 2], [0, 3, 3, 3]])
    assert not algebra_axioms_check(commutative_action(M), 2).ok
    assert algebra_axioms_check(monoid_action(M), 2).ok
