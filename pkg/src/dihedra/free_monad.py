"""The free algebra monad of a discrete operad on a pointed set with unit.

A pointed set with unit L is a finite set {0, 1, ..., n-1} where 0 is the
basepoint and 1 the unit; the remaining points are letters.  A class in PL is
either STAR or a term [c; x1..xk] with c an operation of arity k.  Terms are
kept canonical:

* any basepoint argument collapses the term to STAR,
* every unit argument is removed by composing c with the level 0 point,
* the representative of the orbit (c.s, x) ~ (c, s.x) is the one whose
  permutation part is the identity (for operads with a free action) or whose
  arguments are sorted (for the one-point operad).

Iterating P gives P^k L; the arguments of a level k term are level k-1
classes, and the unit of level k >= 1 is the empty term [P(0); ()].
"""

import itertools
import random

from .crossed_simplicial import PresentedObject, check_identities
from .dn_words import DnOperad, to_hyperoctahedral
from .errors import ArgumentError, PreconditionError
from .perm_core import (
    COMMUTATIVE, HYPEROCTAHEDRAL, SYMMETRIC, AlgebraAction, CommutativeOperad,
    HyperoctahedralOperad, Permutation, SymmetricOperad, algebra_axioms_check,
    h_algebra_from_involutive_monoid, monoid_action,
)
from .reports import Report, Tally

STAR = None


class FreeTerm:
    """A canonical non-basepoint class [c; args] at some level of P^k L."""

    __slots__ = ("c", "args", "_key")

    def __init__(self, c, args, key):
        self.c = c
        self.args = tuple(args)
        self._key = key

    @property
    def arity(self):
        return len(self.args)

    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, FreeTerm) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"[{self.c!r}; {', '.join(map(repr, self.args))}]"

    def to_plain(self):
        c = self.c.to_plain() if hasattr(self.c, "to_plain") else repr(self.c)
        return {"op": c, "args": [a.to_plain() if isinstance(a, FreeTerm) else a
                                  for a in self.args]}


def _size(L):
    n = L if isinstance(L, int) else L.size
    if n < 2:
        raise PreconditionError("a pointed set with unit needs at least two points")
    return n


def _arg_key(x):
    return x.key() if isinstance(x, FreeTerm) else x


def _perm_part(P, c):
    if isinstance(P, SymmetricOperad):
        return c
    if isinstance(P, (HyperoctahedralOperad, DnOperad)):
        return c.perm
    return None


def level_unit(P, level):
    """The unit point of P^level L."""
    if level == 0:
        return 1
    return FreeTerm(P.zero, (), (P.key(P.zero), ()))


def canonicalize_term(c, args, P, level=1):
    """Canonical class of the raw term [c; args] in P^level L.

    ``args`` are canonical classes of level - 1 (ints when level is 1).
    """
    args = tuple(args)
    if P.arity(c) != len(args):
        raise ArgumentError(f"operation of arity {P.arity(c)} given {len(args)} arguments")
    if level < 1:
        raise ArgumentError("terms live in level 1 or above")
    if any(a is STAR or (level == 1 and a == 0) for a in args):
        return STAR
    unit = level_unit(P, level - 1)
    for i in range(len(args), 0, -1):
        if args[i - 1] == unit:
            c = P.compose(c, P.zero, i)
            args = args[:i - 1] + args[i:]
    pi = _perm_part(P, c)
    if pi is not None:
        sigma = pi.inverse()
        c = P.act(c, sigma)
        args = sigma.inverse().act(args)
    elif isinstance(P, CommutativeOperad):
        args = tuple(sorted(args, key=_arg_key))
    else:
        best = None
        for sigma in Permutation.all(len(args)):
            cand_c = P.act(c, sigma)
            cand_x = sigma.inverse().act(args)
            k = (P.key(cand_c), tuple(_arg_key(a) for a in cand_x))
            if best is None or k < best[0]:
                best = (k, cand_c, cand_x)
        c, args = best[1], best[2]
    return FreeTerm(c, args, (P.key(c), tuple(_arg_key(a) for a in args)))


def term(c, args, P, level=1):
    return canonicalize_term(c, args, P, level)


def eta(x, P, level=0):
    """The unit x -> [1; x] from P^level L to P^(level+1) L."""
    if x is STAR or (level == 0 and x == 0):
        return STAR
    return canonicalize_term(P.unit, (x,), P, level + 1)


def mu(t, P, level=2):
    """Multiplication P^level L -> P^(level-1) L on the two outer layers."""
    if level < 2:
        raise ArgumentError("mu needs a term of level at least 2")
    if t is STAR:
        return STAR
    if not isinstance(t, FreeTerm):
        raise ArgumentError(f"malformed nesting: {t!r} is not a term")
    ds, xs = [], []
    for a in t.args:
        if not isinstance(a, FreeTerm):
            raise ArgumentError(f"malformed nesting: argument {a!r} is not a term")
        ds.append(a.c)
        xs.extend(a.args)
    return canonicalize_term(P.gamma(t.c, ds), xs, P, level - 1)


def fmap(f, t, P, level):
    """P applied to a map f of the arguments of a level ``level`` term."""
    if t is STAR:
        return STAR
    return canonicalize_term(t.c, [f(a) for a in t.args], P, level)


def at_depth(f, t, P, depth, out_level):
    """Apply f below ``depth`` layers of P; ``out_level`` is the level of the result."""
    if depth == 0:
        return f(t)
    if t is STAR:
        return STAR
    if not isinstance(t, FreeTerm):
        raise ArgumentError(f"malformed nesting: {t!r} is not a term")
    inner = [at_depth(f, a, P, depth - 1, out_level - 1) for a in t.args]
    return canonicalize_term(t.c, inner, P, out_level)


def theta_term(t, action):
    """The algebra structure map PL -> L of an operad action."""
    if t is STAR:
        return 0
    return action(t.c, t.args)


# ---------------------------------------------------------------------------
# sampling

def random_element(P, L, level, rng, max_arity=3, star_rate=0.03, unit_rate=0.15):
    """A random class of P^level L, built from a raw term and canonicalized."""
    n = _size(L)
    if level == 0:
        u = rng.random()
        if u < star_rate:
            return 0
        if u < star_rate + unit_rate or n == 2:
            return 1
        return rng.randrange(2, n)
    k = rng.randint(0, max_arity)
    c = P.sample(k, rng)
    args = [random_element(P, L, level - 1, rng, max_arity, star_rate, unit_rate)
            for _ in range(k)]
    return canonicalize_term(c, args, P, level)


# ---------------------------------------------------------------------------
# monad laws

def monad_law_suite(P, L=4, samples=500, seed=0, max_arity=3):
    """Unit and associativity laws of (P, eta, mu) on sampled terms."""
    rng = random.Random(seed)
    report = Report("monad_laws", {"operad": P.name, "points": _size(L), "samples": samples}, seed)
    left = Tally(report, "mu . eta_P = id", {})
    right = Tally(report, "mu . P(eta) = id", {})
    assoc = Tally(report, "mu . mu_P = mu . P(mu)", {})
    star = Tally(report, "mu and eta fix the basepoint", {})
    for _ in range(samples):
        t = random_element(P, L, 1, rng, max_arity)
        left.check(mu(eta(t, P, 1), P, 2) == t, lambda: [t])
        right.check(mu(fmap(lambda x: eta(x, P, 0), t, P, 2), P, 2) == t, lambda: [t])
        ttt = random_element(P, L, 3, rng, max_arity=2)
        a = mu(mu(ttt, P, 3), P, 2)
        b = mu(fmap(lambda s: mu(s, P, 2), ttt, P, 3), P, 2)
        assoc.check(a == b, lambda: [ttt, a, b])
    star.check(mu(STAR, P, 2) is STAR and eta(STAR, P, 1) is STAR and eta(0, P, 0) is STAR)
    for tally in (left, right, assoc, star):
        tally.close()
    return report


def word_term(word, P=SYMMETRIC):
    """The term [id; w] of a word over the letters 2, 3, ... (1 is the empty letter)."""
    return canonicalize_term(Permutation.identity(len(word)), word, P, 1)


def concatenation_check(L=4, samples=300, seed=0, max_len=4):
    """For the symmetric operad, mu([id; w1..wk]) is the concatenated word."""
    rng = random.Random(seed)
    n = _size(L)
    report = Report("concatenation", {"points": n, "samples": samples}, seed)
    tally = Tally(report, "mu is concatenation", {})
    for _ in range(samples):
        words = [tuple(rng.randrange(2, n) for _ in range(rng.randint(0, max_len)))
                 for _ in range(rng.randint(0, 3))]
        inner = [word_term(w) for w in words]
        outer = canonicalize_term(Permutation.identity(len(inner)), inner, SYMMETRIC, 2)
        flat = tuple(x for w in words for x in w)
        got = mu(outer, SYMMETRIC, 2)
        tally.check(got == word_term(flat), lambda: [list(map(list, words)), got])
    tally.close()
    return report


# ---------------------------------------------------------------------------
# filtration census

def filtration_terms(P, L, j):
    """All canonical classes of arity at most j, including STAR."""
    n = _size(L)
    out = {STAR}
    for k in range(j + 1):
        els = P.elements(k)
        if els is None:
            raise PreconditionError(f"operad {P.name} has no finite enumeration of level {k}")
        els = list(els)
        for c in els:
            for args in itertools.product(range(2, n), repeat=k):
                out.add(canonicalize_term(c, args, P, 1))
    return out


def filtration_census(P, L, j):
    """|F_j PL|, the number of classes represented by terms of arity <= j."""
    return len(filtration_terms(P, L, j))


def census_increments(P, L, j_max):
    """Census values, their increments, and the orbit-count prediction.

    For a free Sigma-action the new classes in arity j are the orbits of
    P(j) x letters^j, that is |P(j)| * l^j / j!.  For the one-point operad the
    action is not free and the prediction is the number of multisets.
    """
    n = _size(L)
    letters = n - 2
    rows = []
    prev = None
    free = getattr(P, "free_action", True)
    for j in range(j_max + 1):
        value = filtration_census(P, L, j)
        size = sum(1 for _ in P.elements(j))
        if free:
            pred = size * letters ** j // _fact(j)
        else:
            pred = _multisets(letters, j) * size
        rows.append({"j": j, "census": value,
                     "increment": value - prev if prev is not None else value,
                     "orbit_prediction": pred if j else 2, "free": free})
        prev = value
    return rows


def _fact(k):
    out = 1
    for t in range(2, k + 1):
        out *= t
    return out


def _multisets(m, k):
    if m == 0:
        return 1 if k == 0 else 0
    return _fact(m + k - 1) // (_fact(k) * _fact(m - 1))


def census_check(j_max=4, seed=0):
    report = Report("census", {"j_max": j_max}, seed)
    for j in range(j_max + 1):
        got = filtration_census(SYMMETRIC, 3, j)
        report.record("symmetric, one letter: j+2", {"j": j}, got == j + 2, [got, j + 2])
    for j, want in ((0, 2), (1, 4), (2, 8)):
        got = filtration_census(HYPEROCTAHEDRAL, 3, j)
        report.record("hyperoctahedral, one letter", {"j": j}, got == want, [got, want])
    for P in (SYMMETRIC, HYPEROCTAHEDRAL, COMMUTATIVE):
        for L in (3, 4):
            for row in census_increments(P, L, 3):
                report.record("increment matches orbit count",
                              {"operad": P.name, "points": L, "j": row["j"]},
                              row["increment"] == row["orbit_prediction"], row)
    # the word reading of the symmetric case is a bijection
    for L in (3, 4):
        j = 3
        words = {word_term(w) for k in range(j + 1)
                 for w in itertools.product(range(2, L), repeat=k)}
        terms = filtration_terms(SYMMETRIC, L, j) - {STAR}
        report.record("words <-> terms is a bijection", {"points": L, "j": j},
                      words == terms, [len(words), len(terms)])
    return report


# ---------------------------------------------------------------------------
# algebras

def pulled_back_action(action, along, operad, name=None):
    """theta'(c; g) = theta(along(c); g) for an operad map ``along``."""
    return AlgebraAction(operad, action.monoid, lambda c, gs: action.theta(along(c), gs),
                         name or f"{action.name} pulled back")


def dn_action(M, D=None):
    """The D-operad action on an involutive monoid through to_hyperoctahedral."""
    D = D or DnOperad()
    return pulled_back_action(h_algebra_from_involutive_monoid(M), to_hyperoctahedral, D, "D-action")


def algebra_check(action, bound=3, samples=30, seed=0, terms=200):
    """Operad algebra axioms up to ``bound`` plus the P-algebra laws of PL -> L.

    The axioms are checked on every tuple of monoid elements; for operads
    without a finite enumeration the operations are sampled.  The monad side
    checks theta . eta = id and theta . mu = theta . P(theta) on random terms.
    """
    P, M = action.operad, action.monoid
    report = algebra_axioms_check(action, bound, samples=samples, seed=seed)
    report.suite = "algebra"
    report.params["bound"] = bound
    rng = random.Random(seed)
    unit = Tally(report, "theta . eta = id", {})
    for g in M.elements:
        unit.check(theta_term(eta(g, P, 0), action) == g, [g])
    unit.close()
    mult = Tally(report, "theta . mu = theta . P(theta)", {})
    for _ in range(terms):
        t = random_element(P, M, 2, rng, max_arity=2)
        lhs = theta_term(mu(t, P, 2), action)
        rhs = theta_term(fmap(lambda s: theta_term(s, action), t, P, 2), action)
        mult.check(lhs == rhs, lambda: [t, lhs, rhs])
    mult.close()
    return report


def pullback_consistency(M, bound=3, samples=30, seed=0):
    """The D-action check fails exactly when the H-action check fails."""
    report = Report("pullback", {"monoid": repr(M), "bound": bound}, seed)
    h = algebra_check(h_algebra_from_involutive_monoid(M), bound, samples, seed)
    d = algebra_check(dn_action(M), bound, samples, seed)
    report.record("D fails iff H fails", {}, h.ok == d.ok,
                  [h.failed_cases(), d.failed_cases()])
    return report


# ---------------------------------------------------------------------------
# the two-sided bar construction B(P, P, L)

class BarLevels:
    """Levels B_q = P P^q L of the two-sided bar for an algebra L.

    d_0 applies mu to the two outer layers (lambda = mu for F = P), d_i for
    0 < i < q applies mu at depth i, d_q applies theta innermost, and s_i
    inserts eta at depth i + 1.
    """

    def __init__(self, action, F=None):
        self.P = action.operad
        if F is not None and F is not self.P:
            raise PreconditionError("only the free right module F = P is supported")
        self.action = action
        self.L = action.monoid

    def level(self, q):
        return q + 1

    def face(self, q, i, x):
        if q < 1 or not 0 <= i <= q:
            raise ArgumentError(f"no face d_{i} on level {q}")
        P = self.P
        if i < q:
            return at_depth(lambda t: mu(t, P, q + 1 - i), x, P, i, q)
        return at_depth(lambda t: theta_term(t, self.action), x, P, q, q)

    def degen(self, q, i, x):
        if not 0 <= i <= q:
            raise ArgumentError(f"no degeneracy s_{i} on level {q}")
        P = self.P
        return at_depth(lambda t: eta(t, P, q - i), x, P, i + 1, q + 2)

    def apply(self, q, operator, x):
        kind, i = operator
        if kind == "d":
            return self.face(q, i, x)
        if kind == "s":
            return self.degen(q, i, x)
        raise ArgumentError(f"unknown operator {kind!r}")

    def sample(self, q, n, seed=0, max_arity=2):
        rng = random.Random(seed + 7919 * q)
        out = []
        for _ in range(n):
            out.append(random_element(self.P, self.L, q + 1, rng, max_arity))
        return out

    def presented(self, q_max, samples, seed=0):
        return PresentedObject(
            "d", 1, q_max, lambda q: self.sample(q, samples, seed),
            self.face, self.degen, basepoint=STAR,
            name=f"B(P,P,L) for {self.P.name}")


def bar_level_eval(F, P, X, q, element, operator):
    """Apply ("d", i) or ("s", i) to an element of B_q(F, P, X)."""
    if X.operad is not P:
        raise PreconditionError("the algebra must be over the same operad")
    return BarLevels(X, F).apply(q, operator, element)


def bar_identity_suite(action, q_max=3, samples=200, seed=0):
    bar = BarLevels(action)
    report = check_identities(bar.presented(q_max, samples, seed), seed=seed)
    report.suite = "bar_levels"
    tally = Tally(report, "d_0 s_0 = id", {})
    for x in bar.sample(1, samples, seed + 1):
        tally.check(bar.face(2, 0, bar.degen(1, 0, x)) == x, [x])
    tally.close()
    return report


# ---------------------------------------------------------------------------

def builtin_operads():
    return [SYMMETRIC, COMMUTATIVE, HYPEROCTAHEDRAL, DnOperad(max_len=4)]


def verify_monad_suite(samples=500, seed=0, L=4, monoids=None, bar_samples=200):
    from .perm_core import cyclic_group_monoid, trivial_monoid
    report = Report("monad", {"samples": samples, "points": L}, seed)
    for P in builtin_operads():
        report.extend(monad_law_suite(P, L, samples, seed))
    report.extend(concatenation_check(L, min(samples, 300), seed))
    report.extend(census_check(4, seed))
    monoids = monoids or [trivial_monoid(), cyclic_group_monoid(2), cyclic_group_monoid(3)]
    for M in monoids:
        report.extend(algebra_check(monoid_action(M), 3, seed=seed))
        if M.has_involution:
            report.extend(algebra_check(h_algebra_from_involutive_monoid(M), 3, seed=seed))
            report.extend(pullback_consistency(M, 2, seed=seed))
    for M in monoids[1:]:
        report.extend(bar_identity_suite(monoid_action(M), 3, bar_samples, seed))
        if M.has_involution:
            report.extend(bar_identity_suite(h_algebra_from_involutive_monoid(M), 3,
                                             bar_samples // 2, seed))
    return report
