"""Matrices with at most one entry per row and column, the wedge model W_n,
the Barratt-Eccles construction Gamma+ and the trace into it.

Matrices and wedge elements carry entries from a pointed monoid M (or from
any pointed set when no multiplication is needed).  Indices are 1-based.
"""

import itertools
import math
import random

from .bar_thh import STAR, smash, thh_operator
from .errors import ArgumentError, InvariantError
from .perm_core import Permutation
from .reports import Report, Tally


# ---------------------------------------------------------------------------
# matrices

class MatrixElem:
    """n x n matrix given by its non-basepoint entries (row, col, x)."""

    __slots__ = ("n", "entries")

    def __init__(self, n, entries=()):
        entries = tuple(sorted((int(a), int(b), x) for a, b, x in entries))
        rows = [a for a, _, _ in entries]
        cols = [b for _, b, _ in entries]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise InvariantError("a row or column holds more than one entry")
        if any(not (1 <= a <= n and 1 <= b <= n) for a, b, _ in entries):
            raise InvariantError(f"index outside 1..{n}")
        if any(x == 0 or x is STAR for _, _, x in entries):
            raise InvariantError("entries must be non-basepoint")
        self.n = n
        self.entries = entries

    def get(self, a, b):
        for r, c, x in self.entries:
            if r == a and c == b:
                return x
        return STAR

    @property
    def is_zero(self):
        return not self.entries

    def as_dict(self):
        return {(a, b): x for a, b, x in self.entries}

    def __eq__(self, other):
        return isinstance(other, MatrixElem) and self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, self.entries))

    def __repr__(self):
        return f"Mat{self.n}{list(self.entries)}"

    def to_plain(self):
        return {"n": self.n, "entries": [list(e) for e in self.entries]}


def mat_mul(A, B, M=None):
    """Matrix product; entries multiply in M, or pair up when M is None."""
    if A.n != B.n:
        raise ArgumentError("dimension mismatch")
    cols = {a: (b, x) for a, b, x in B.entries}
    out = []
    for i, k, x in A.entries:
        if k in cols:
            j, y = cols[k]
            z = (x, y) if M is None else M.mul(x, y)
            if z != 0:
                out.append((i, j, z))
    return MatrixElem(A.n, out)


def mat_transpose(A, M=None):
    """Transpose, applying the involution of M to every entry when given."""
    inv = (lambda x: x) if M is None else M.inv
    return MatrixElem(A.n, [(b, a, inv(x)) for a, b, x in A.entries])


def mat_unit(n, x=1):
    return MatrixElem(n, [(a, a, x) for a in range(1, n + 1)])


def mat_direct_sum(A, B):
    k = A.n
    return MatrixElem(k + B.n, list(A.entries) + [(a + k, b + k, x) for a, b, x in B.entries])


def enumerate_matrices(n, letters):
    """Every n x n matrix with entries from ``letters`` (non-basepoint values)."""
    letters = list(letters)
    out = []
    for k in range(n + 1):
        for rows in itertools.combinations(range(1, n + 1), k):
            for cols in itertools.permutations(range(1, n + 1), k):
                for xs in itertools.product(letters, repeat=k):
                    out.append(MatrixElem(n, zip(rows, cols, xs)))
    return out


def mat_census(n, k, x_count):
    """Number of matrices with exactly k entries, over a pointed set of size x_count."""
    if not 0 <= k <= n:
        raise ArgumentError("need 0 <= k <= n")
    return math.comb(n, k) ** 2 * math.factorial(k) * (x_count - 1) ** k


# ---------------------------------------------------------------------------
# the wedge model

class WedgeElem:
    __slots__ = ("a", "x", "b")

    def __init__(self, a, x, b):
        self.a, self.x, self.b = int(a), x, int(b)

    def key(self):
        return (self.a, self.x, self.b)

    def __eq__(self, other):
        return isinstance(other, WedgeElem) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"W{self.key()}"

    def to_plain(self):
        return list(self.key())


def wn_elements(n, letters):
    return [WedgeElem(a, x, b) for a in range(1, n + 1) for x in letters for b in range(1, n + 1)]


def wn_mul(u, v, M):
    if u is STAR or v is STAR or u.b != v.a:
        return STAR
    z = M.mul(u.x, v.x)
    return STAR if z == 0 else WedgeElem(u.a, z, v.b)


def wn_to_mat(u, n):
    return MatrixElem(n) if u is STAR else MatrixElem(n, [(u.a, u.b, u.x)])


def wn_trace(us):
    """(x_0, ..., x_q) when b_0 = a_1, ..., b_q = a_0; otherwise STAR."""
    if us is STAR or any(u is STAR for u in us):
        return STAR
    q = len(us) - 1
    for t in range(q + 1):
        if us[t].b != us[(t + 1) % (q + 1)].a:
            return STAR
    return tuple(u.x for u in us)


def wn_incl(xs, one_index=1):
    if xs is STAR:
        return STAR
    return tuple(WedgeElem(one_index, x, one_index) for x in xs)


def wn_face(us, i, M):
    """Face d_i of the bar construction on W_n (no degeneracies: W_n has no unit)."""
    if us is STAR:
        return STAR
    q = len(us) - 1
    if i < q:
        z = wn_mul(us[i], us[i + 1], M)
        out = us[:i] + (z,) + us[i + 2:]
    else:
        z = wn_mul(us[q], us[0], M)
        out = (z,) + us[1:q]
    return STAR if STAR in out else out


def wn_homotopy(us, i, M):
    """The map h_i from level q to level q + 1."""
    if us is STAR:
        return STAR
    q = len(us) - 1
    if not 0 <= i <= q:
        raise ArgumentError(f"h_{i} needs 0 <= i <= {q}")
    for t in range(i):
        if us[t].b != us[t + 1].a:
            return STAR
    one = M.one
    head = [WedgeElem(us[0].a, us[0].x, 1)]
    head += [WedgeElem(1, us[t].x, 1) for t in range(1, i + 1)]
    head.append(WedgeElem(1, one, us[i].b))
    return tuple(head) + tuple(us[i + 1:])


def wn_level(n, letters, q):
    return [STAR] + list(itertools.product(wn_elements(n, letters), repeat=q + 1))


# ---------------------------------------------------------------------------
# cycled lexicographic orderings, restriction, entirety, speciality

class LexOrdering:
    """lambda_s: {1..n^(q+1)} -> {1..n}^(q+1), sorting by (j_s, .., j_q, j_0, .., j_{s-1})."""

    def __init__(self, n, q, s):
        if not 0 <= s <= q:
            raise ArgumentError("need 0 <= s <= q")
        self.n, self.q, self.s = n, q, s
        tuples = list(itertools.product(range(1, n + 1), repeat=q + 1))
        tuples.sort(key=lambda j: j[s:] + j[:s])
        self.tuples = tuples
        self.index = {j: t + 1 for t, j in enumerate(tuples)}

    @property
    def m(self):
        return len(self.tuples)

    def __call__(self, t):
        return self.tuples[t - 1]

    def inverse(self, j):
        return self.index[tuple(j)]


def lex_ordering(n, q, s):
    return LexOrdering(n, q, s)


def relative_perm(lam_s, lam_0):
    """lambda_s^-1 o lambda_0 as a permutation of {1..m}."""
    return Permutation([lam_s.inverse(lam_0(t)) for t in range(1, lam_0.m + 1)])


def _check_injection(alpha, m=None):
    alpha = tuple(int(a) for a in alpha)
    if len(set(alpha)) != len(alpha):
        raise ArgumentError(f"{alpha} is not injective")
    if m is not None and any(not 1 <= a <= m for a in alpha):
        raise ArgumentError(f"{alpha} leaves 1..{m}")
    return alpha


def restriction(alpha, sigma):
    """alpha^*(sigma): the permutation with sigma o alpha = sigma_*(alpha) o alpha^*(sigma).

    ``alpha`` is an injection {1..m'} -> {1..m} given by its images; the
    result sends t to the rank of sigma(alpha(t)) among sigma(image alpha).
    """
    alpha = _check_injection(alpha, len(sigma))
    vals = [sigma(a) for a in alpha]
    order = sorted(vals)
    rank = {v: k + 1 for k, v in enumerate(order)}
    return Permutation([rank[v] for v in vals])


def is_entire(alpha, xs):
    """Every coordinate outside the image of alpha is the basepoint."""
    image = set(alpha)
    return all(x is STAR for t, x in enumerate(xs, 1) if t not in image)


def is_special(beta, n, q):
    lam0 = LexOrdering(n, q, 0)
    points = [lam0(b) for b in beta]
    return all(len({p[i] for p in points}) == len(points) for i in range(q + 1))


def reversal_perm(n, q):
    """lambda_?-independent permutation of tuples (j_0..j_q) -> (j_q..j_0), as a dict."""
    return {j: tuple(reversed(j)) for j in itertools.product(range(1, n + 1), repeat=q + 1)}


def special_lemma_sides(beta, n, q, i):
    """The two permutations compared by the lemma on special maps."""
    lams = [LexOrdering(n, q, s) for s in range(q + 1)]
    lam0 = lams[0]
    rev = reversal_perm(n, q)
    left = Permutation([lams[q - i].inverse(rev[lam0(t)]) for t in range(1, lam0.m + 1)])
    right = relative_perm(lams[i], lam0)
    return restriction(beta, left), restriction(beta, right)


# ---------------------------------------------------------------------------
# Barratt-Eccles elements

class BEElement:
    """Canonical [(sigma_0..sigma_q); (x_1..x_m)] with sigma_0 = id and no basepoints."""

    __slots__ = ("perms", "xs", "q")

    def __init__(self, perms, xs, q):
        self.perms = tuple(perms)
        self.xs = tuple(xs)
        self.q = q

    @property
    def arity(self):
        return len(self.xs)

    def key(self):
        return (tuple(p.images for p in self.perms), self.xs)

    def __eq__(self, other):
        return isinstance(other, BEElement) and self.q == other.q and self.key() == other.key()

    def __hash__(self):
        return hash((self.q, self.key()))

    def __repr__(self):
        return f"BE(q={self.q}, {[list(p.images) for p in self.perms]}, {list(self.xs)})"

    def to_plain(self):
        return {"q": self.q, "perms": [list(p.images) for p in self.perms], "xs": list(self.xs)}


def be_empty(q):
    return BEElement([Permutation.identity(0)] * (q + 1), (), q)


def be_canonicalize(perms, xs, q=None):
    """Strip basepoint coordinates, then move sigma_0 to the identity."""
    perms = [p if isinstance(p, Permutation) else Permutation(p) for p in perms]
    xs = tuple(xs)
    if q is None:
        q = len(perms) - 1
    if len(perms) != q + 1:
        raise ArgumentError("need q + 1 permutations")
    if any(len(p) != len(xs) for p in perms):
        raise ArgumentError("permutations and coordinates disagree on the arity")
    alpha = [t for t, x in enumerate(xs, 1) if x is not STAR]
    perms = [restriction(alpha, p) for p in perms]
    xs = tuple(xs[t - 1] for t in alpha)
    s0inv = perms[0].inverse()
    perms = [p * s0inv for p in perms]
    xs = tuple(xs[s0inv(t) - 1] for t in range(1, len(xs) + 1))
    return BEElement(perms, xs, q)


def block_sum(p, r):
    k = len(p)
    return Permutation(list(p.images) + [k + v for v in r.images])


def be_add(u, v):
    if u.q != v.q:
        raise ArgumentError("degree mismatch")
    return be_canonicalize([block_sum(a, b) for a, b in zip(u.perms, v.perms)], u.xs + v.xs, u.q)


def be_bar_operator(kind, u, M, i=None):
    """Dihedral bar operators on Gamma+ over M^(q+1)."""
    q = u.q
    xs = [thh_operator(kind, x, M, i) for x in u.xs]
    perms = list(u.perms)
    if kind == "d":
        if not 0 <= i <= q or q == 0:
            raise ArgumentError(f"d_{i} undefined on level {q}")
        del perms[i]
        return be_canonicalize(perms, xs, q - 1)
    if kind == "s":
        if not 0 <= i <= q:
            raise ArgumentError(f"s_{i} undefined on level {q}")
        perms.insert(i + 1, perms[i])
        return be_canonicalize(perms, xs, q + 1)
    if kind == "t":
        return be_canonicalize([perms[q]] + perms[:q], xs, q)
    if kind == "r":
        return be_canonicalize(list(reversed(perms)), xs, q)
    raise ArgumentError(f"unknown operator {kind!r}")


# ---------------------------------------------------------------------------
# bar operators on tuples of matrices and the trace

def _zero_tuple(ms):
    return any(m.is_zero for m in ms)


def mat_bar_operator(kind, ms, M, i=None):
    """Operators of THH of M_n(M) on a tuple of q + 1 matrices."""
    ms = tuple(ms)
    q = len(ms) - 1
    n = ms[0].n
    if kind == "d":
        if not 0 <= i <= q or q == 0:
            raise ArgumentError(f"d_{i} undefined on level {q}")
        if i < q:
            return ms[:i] + (mat_mul(ms[i], ms[i + 1], M),) + ms[i + 2:]
        return (mat_mul(ms[q], ms[0], M),) + ms[1:q]
    if kind == "s":
        return ms[:i + 1] + (mat_unit(n, M.one),) + ms[i + 1:]
    if kind == "t":
        return (ms[q],) + ms[:q]
    if kind == "r":
        tr = [mat_transpose(m, M) for m in ms]
        return (tr[0],) + tuple(reversed(tr[1:]))
    raise ArgumentError(f"unknown operator {kind!r}")


def _orderings(n, q, cache={}):
    key = (n, q)
    if key not in cache:
        cache[key] = [LexOrdering(n, q, s) for s in range(q + 1)]
    return cache[key]


def trace_q(ms, lambdas=None):
    """Tr_q of a tuple of q + 1 matrices, canonicalized."""
    ms = tuple(ms)
    q = len(ms) - 1
    n = ms[0].n
    if any(m.n != n for m in ms):
        raise ArgumentError("dimension mismatch")
    lams = lambdas or _orderings(n, q)
    lam0 = lams[0]
    perms = [relative_perm(lam, lam0) for lam in lams]
    tables = [m.as_dict() for m in ms]
    xs = []
    for t in range(1, lam0.m + 1):
        j = lam0(t)
        vals = [tables[0].get((j[q], j[0]), STAR)]
        vals += [tables[s].get((j[s - 1], j[s]), STAR) for s in range(1, q + 1)]
        xs.append(STAR if STAR in vals else tuple(vals))
    return be_canonicalize(perms, xs, q)


# ---------------------------------------------------------------------------
# verification

def _ops(q):
    out = [("d", i) for i in range(q + 1)] if q >= 1 else []
    out += [("s", i) for i in range(q + 1)]
    out += [("t", None), ("r", None)]
    return out


def verify_trace_suite(n_max=2, q_max=2, monoids=None, seed=0, lambdas=None, samples=200):
    """Trace equivariance, additivity, and the Morita identities.

    Exhaustive for n <= 2, q <= 2 over the given involutive monoids;
    ``lambdas`` replaces the orderings (negative control).
    """
    from .perm_core import enumerate_pointed_monoids
    if monoids is None:
        monoids = [m for size in (2, 3) for m in enumerate_pointed_monoids(size, involutive=True)]
    rng = random.Random(seed)
    report = Report("matrix_trace", {"n_max": n_max, "q_max": q_max, "monoids": len(monoids)}, seed)

    # matrix census
    tal = Tally(report, "matrix census", {})
    for n in range(1, 4):
        for size in (2, 3):
            letters = range(1, size)
            mats = enumerate_matrices(n, letters)
            by_k = {}
            for A in mats:
                by_k[len(A.entries)] = by_k.get(len(A.entries), 0) + 1
            ok = all(by_k.get(k, 0) == mat_census(n, k, size) for k in range(n + 1))
            tal.check(ok and len(mats) == sum(mat_census(n, k, size) for k in range(n + 1)), [n, size])
    tal.close()

    for idx, M in enumerate(monoids):
        name = M.name or f"#{idx}"
        letters = list(range(1, M.size))
        for n in range(1, n_max + 1):
            mats = [A for A in enumerate_matrices(n, letters)]
            params = {"monoid": name, "n": n}
            tm = Tally(report, "matrix laws", params)
            for A in mats:
                tm.check(mat_transpose(mat_transpose(A, M), M) == A, [A])
                tm.check(mat_mul(mat_unit(n, M.one), A, M) == A == mat_mul(A, mat_unit(n, M.one), M), [A])
            for A in mats:
                for B in rng.sample(mats, min(len(mats), 20)):
                    tm.check(mat_transpose(mat_mul(A, B, M), M) == mat_mul(mat_transpose(B, M), mat_transpose(A, M), M),
                             [A, B])
            tm.close()
            for q in range(q_max + 1):
                tally = {}
                lams = None if lambdas is None else lambdas(n, q)
                for ms in itertools.product(mats, repeat=q + 1):
                    tr = trace_q(ms, lams)
                    for kind, i in _ops(q):
                        lhs = trace_q(mat_bar_operator(kind, ms, M, i), None if lambdas is None else
                                      lambdas(n, q - 1 if kind == "d" else q + 1 if kind == "s" else q))
                        rhs = be_bar_operator(kind, tr, M, i)
                        case = f"Tr commutes with {kind}" + ("_i" if i is not None else "_q")
                        if case not in tally:
                            tally[case] = Tally(report, case, dict(params, q=q))
                        tally[case].check(lhs == rhs, lambda: [list(ms), kind, i])
                for t in tally.values():
                    t.close()
        # additivity
        one_by_one = enumerate_matrices(1, letters)
        for q in range(q_max + 1):
            tal = Tally(report, "additivity", {"monoid": name, "q": q})
            for As in itertools.product(one_by_one, repeat=q + 1):
                for Bs in itertools.product(one_by_one, repeat=q + 1):
                    lhs = trace_q([mat_direct_sum(a, b) for a, b in zip(As, Bs)])
                    tal.check(lhs == be_add(trace_q(As), trace_q(Bs)), lambda: [list(As), list(Bs)])
            tal.close()
        # Morita identities on W_n
        for n in range(1, n_max + 1):
            params = {"monoid": name, "n": n}
            names = ["Tr o incl = id", "d_0 h_0 = id", "d_i h_j = h_{j-1} d_i (i<j)",
                     "d_i h_i = d_i h_{i-1}", "d_i h_j = h_j d_{i-1} (i>j+1)", "d_{q+1} h_q = incl o Tr",
                     "Tr o d_i = d_i o Tr", "W_n mult matches matrices"]
            tw = {k: Tally(report, k, params) for k in names}
            for q in range(q_max + 1):
                for xs in itertools.product(letters, repeat=q + 1):
                    tw["Tr o incl = id"].check(wn_trace(wn_incl(xs)) == xs, [xs])
                for us in wn_level(n, letters, q):
                    if us is STAR:
                        continue
                    h = [wn_homotopy(us, j, M) for j in range(q + 1)]
                    tw["d_0 h_0 = id"].check(wn_face(h[0], 0, M) == us, [us])
                    for j in range(q + 1):
                        for i in range(q + 2):
                            lhs = wn_face(h[j], i, M)
                            if i < j:
                                rhs = _h(wn_face(us, i, M), j - 1, M)
                                tw["d_i h_j = h_{j-1} d_i (i<j)"].check(lhs == rhs, [us, i, j])
                            elif i == j and i >= 1:
                                tw["d_i h_i = d_i h_{i-1}"].check(lhs == wn_face(h[i - 1], i, M), [us, i])
                            elif i > j + 1 and q >= 1:
                                rhs = _h(wn_face(us, i - 1, M), j, M)
                                tw["d_i h_j = h_j d_{i-1} (i>j+1)"].check(lhs == rhs, [us, i, j])
                    tw["d_{q+1} h_q = incl o Tr"].check(wn_face(h[q], q + 1, M) == wn_incl(wn_trace(us)), [us])
                    if q >= 1:
                        for i in range(q + 1):
                            tw["Tr o d_i = d_i o Tr"].check(
                                wn_trace(wn_face(us, i, M)) == thh_operator("d", wn_trace(us), M, i), [us, i])
            for u in wn_elements(n, letters):
                for v in wn_elements(n, letters):
                    tw["W_n mult matches matrices"].check(
                        wn_to_mat(wn_mul(u, v, M), n) == mat_mul(wn_to_mat(u, n), wn_to_mat(v, n), M), [u, v])
            for t in tw.values():
                t.close()
    # orderings and the special lemma
    report.record("lambda_1^-1 lambda_0 for n=2, q=1", {},
                  relative_perm(LexOrdering(2, 1, 1), LexOrdering(2, 1, 0)) == Permutation([1, 3, 2, 4]), None)
    tal = Tally(report, "special maps lemma", {})
    for n in range(1, 4):
        for q in range(0, 4):
            for beta in special_maps(n, q):
                for i in range(q + 1):
                    a, b = special_lemma_sides(beta, n, q, i)
                    tal.check(a == b, [n, q, list(beta), i])
    tal.close()
    return report


def _h(us, j, M):
    return STAR if us is STAR else wn_homotopy(us, j, M)


def special_maps(n, q, limit=None):
    """All special monotone injections beta into {1..n^(q+1)}."""
    lam0 = LexOrdering(n, q, 0)
    out = []

    def grow(chosen, start):
        out.append(tuple(chosen))
        if limit is not None and len(out) >= limit:
            return
        for t in range(start, lam0.m + 1):
            p = lam0(t)
            if all(all(lam0(c)[k] != p[k] for k in range(q + 1)) for c in chosen):
                grow(chosen + [t], t + 1)

    grow([], 1)
    return out
