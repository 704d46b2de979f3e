import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedra.dn_words import DnOperad
from dihedra.errors import ArgumentError, PreconditionError
from dihedra.free_monad import (
    STAR, BarLevels, FreeTerm, algebra_check, bar_identity_suite, bar_level_eval,
    canonicalize_term, census_increments, concatenation_check, dn_action, eta, filtration_census,
    fmap, level_unit, monad_law_suite, mu, pullback_consistency, random_element, theta_term,
    word_term,
)
from dihedra.perm_core import (
    COMMUTATIVE, HYPEROCTAHEDRAL, SYMMETRIC, Permutation, PointedMonoid, SignedPerm,
    commutative_action, cyclic_group_monoid, h_algebra_from_involutive_monoid, monoid_action,
)


def test_unit_argument_gives_the_unit_term():
    assert canonicalize_term(Permutation.identity(1), (1,), SYMMETRIC) == level_unit(SYMMETRIC, 1)


def test_unit_contraction():
    sigma = Permutation([2, 3, 1])
    got = canonicalize_term(sigma, (2, 1, 3), SYMMETRIC)
    # contraction of sigma at input 2 is [2, 1]; acting moves (2, 3) to (3, 2)
    assert got == canonicalize_term(Permutation([2, 1]), (2, 3), SYMMETRIC)
    assert got.c == Permutation.identity(2) and got.args == (3, 2)


def test_basepoint_collapses():
    assert canonicalize_term(Permutation([2, 1]), (2, 0), SYMMETRIC) is STAR
    assert canonicalize_term(SignedPerm.identity(2), (0, 2), HYPEROCTAHEDRAL) is STAR


def test_arity_mismatch():
    with pytest.raises(ArgumentError):
        canonicalize_term(Permutation([2, 1]), (2,), SYMMETRIC)


def test_malformed_nesting():
    t = canonicalize_term(Permutation([1, 2]), (2, 3), SYMMETRIC)
    with pytest.raises(ArgumentError):
        mu(t, SYMMETRIC, 2)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000))
def test_orbit_relation(seed):
    rng = random.Random(seed)
    k = rng.randint(0, 4)
    c = Permutation.random(k, rng)
    s = Permutation.random(k, rng)
    args = tuple(rng.randrange(1, 5) for _ in range(k))
    lhs = canonicalize_term(c * s, args, SYMMETRIC)
    rhs = canonicalize_term(c, s.act(args), SYMMETRIC)
    assert lhs == rhs


@pytest.mark.parametrize("P", [SYMMETRIC, COMMUTATIVE, HYPEROCTAHEDRAL, DnOperad(max_len=4)],
                         ids=lambda P: P.name)
def test_monad_laws(P):
    assert monad_law_suite(P, 4, samples=150, seed=2).ok


def test_mu_is_concatenation():
    assert concatenation_check(4, 200).ok
    inner = [word_term((2, 3)), word_term((3,))]
    outer = canonicalize_term(Permutation([2, 1]), inner, SYMMETRIC, 2)
    assert mu(outer, SYMMETRIC, 2) == word_term((3, 2, 3))


def test_eta_and_star():
    assert eta(0, SYMMETRIC) is STAR
    assert eta(1, SYMMETRIC) == level_unit(SYMMETRIC, 1)
    assert mu(STAR, SYMMETRIC) is STAR
    assert eta(2, SYMMETRIC) == word_term((2,))


@pytest.mark.parametrize("j", range(6))
def test_symmetric_census(j):
    assert filtration_census(SYMMETRIC, 3, j) == j + 2


@pytest.mark.parametrize("j", range(4))
def test_symmetric_census_two_letters(j):
    # basepoint plus words of length <= j over two letters
    assert filtration_census(SYMMETRIC, 4, j) == 2 ** (j + 1)


@pytest.mark.parametrize("j,want", [(0, 2), (1, 4), (2, 8), (3, 16)])
def test_hyperoctahedral_census(j, want):
    # words over a and its conjugate
    assert filtration_census(HYPEROCTAHEDRAL, 3, j) == want


def test_commutative_census_is_flagged():
    rows = census_increments(COMMUTATIVE, 4, 3)
    assert not rows[0]["free"]
    # multisets over two letters
    assert [r["census"] for r in rows] == [2, 4, 7, 11]


def test_word_operad_census_refused():
    with pytest.raises(PreconditionError):
        filtration_census(DnOperad(), 3, 1)


def test_census_zero():
    for P in (SYMMETRIC, COMMUTATIVE, HYPEROCTAHEDRAL):
        assert filtration_census(P, 5, 0) == 2


@pytest.mark.parametrize("M", [cyclic_group_monoid(2), cyclic_group_monoid(3)], ids=repr)
def test_algebra_checks(M):
    assert algebra_check(monoid_action(M), 3).ok
    assert algebra_check(h_algebra_from_involutive_monoid(M), 3).ok
    assert pullback_consistency(M, 2).ok


def test_pulled_back_action_passes():
    assert algebra_check(dn_action(cyclic_group_monoid(2)), 2, samples=8).ok


def test_non_commutative_monoid_is_not_an_n_algebra():
    M = PointedMonoid([[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 2, 2], [0, 3, 3, 3]])
    rep = algebra_check(commutative_action(M), 2)
    assert not rep.ok


def test_theta_term():
    M = cyclic_group_monoid(3)
    act = monoid_action(M)
    t = canonicalize_term(Permutation([1, 2]), (2, 3), SYMMETRIC)
    assert theta_term(t, act) == M.mul(2, 3)
    assert theta_term(STAR, act) == 0


def test_bar_faces_and_degeneracies():
    act = monoid_action(cyclic_group_monoid(3))
    bar = BarLevels(act)
    rng = random.Random(4)
    moved = 0
    for _ in range(100):
        x = random_element(SYMMETRIC, act.monoid, 2, rng, 2)
        assert bar.face(1, 0, x) == mu(x, SYMMETRIC, 2)
        assert bar_level_eval(SYMMETRIC, SYMMETRIC, act, 1, x, ("d", 0)) == mu(x, SYMMETRIC, 2)
        assert bar.face(2, 0, bar.degen(1, 0, x)) == x
        moved += bar.degen(0, 0, bar.face(1, 0, x)) != x
    assert moved > 0


def test_bar_identity_suite():
    act = monoid_action(cyclic_group_monoid(2))
    assert bar_identity_suite(act, 3, 200).ok


def test_bar_rejects_other_modules():
    act = monoid_action(cyclic_group_monoid(2))
    with pytest.raises(PreconditionError):
        BarLevels(act, F=HYPEROCTAHEDRAL)


def test_fmap_of_identity():
    rng = random.Random(1)
    for _ in range(50):
        t = random_element(HYPEROCTAHEDRAL, 4, 1, rng)
        assert fmap(lambda x: x, t, HYPEROCTAHEDRAL, 1) == t
        assert t is STAR or isinstance(t, FreeTerm)
