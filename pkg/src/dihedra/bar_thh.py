"""The dihedral bar construction of a finite pointed monoid, its subdivisions,
the diagonal into fixed points, and integer homology.

A level-q cell is either STAR or a tuple of q + 1 non-basepoint elements.
Tuples containing the basepoint never exist; every operator collapses them
to STAR on the spot.
"""

import itertools
import random

from .crossed_simplicial import PresentedObject, check_identities, fixed_points, sd_object
from .errors import ArgumentError, PreconditionError
from .perm_core import PointedMonoid
from .reports import Report, Tally

STAR = None


def smash(values, star=0):
    """Collapse a tuple to STAR when it contains the basepoint."""
    values = tuple(values)
    return STAR if star in values else values


def thh_operator(kind, x, M, i=None):
    """Apply d_i, s_i, t_q or r_q (kind "d", "s", "t", "r") to a level-q cell."""
    if x is STAR:
        return STAR
    q = len(x) - 1
    if kind == "d":
        if i is None or not 0 <= i <= q or q == 0:
            raise ArgumentError(f"d_{i} is not defined on level {q}")
        if i < q:
            return smash(x[:i] + (M.mul(x[i], x[i + 1]),) + x[i + 2:])
        return smash((M.mul(x[q], x[0]),) + x[1:q])
    if kind == "s":
        if i is None or not 0 <= i <= q:
            raise ArgumentError(f"s_{i} is not defined on level {q}")
        return x[:i + 1] + (M.one,) + x[i + 1:]
    if kind == "t":
        return (x[q],) + x[:q]
    if kind == "r":
        iv = M.inv
        return (iv(x[0]),) + tuple(iv(v) for v in reversed(x[1:]))
    raise ArgumentError(f"unknown operator {kind!r}")


def level_cells(M, q):
    letters = range(1, M.size)
    return [STAR] + list(itertools.product(letters, repeat=q + 1))


def build_bar(M, q_max):
    """THH_. of M as a presented object (dihedral when M has an involution)."""
    if not isinstance(M, PointedMonoid):
        raise ArgumentError("build_bar needs a PointedMonoid")
    M.validate()
    flavor = "D" if M.has_involution else "C"

    def face(q, i, x):
        return thh_operator("d", x, M, i)

    def degen(q, i, x):
        return thh_operator("s", x, M, i)

    def cyc(q, x):
        return thh_operator("t", x, M)

    refl = None
    if M.has_involution:
        def refl(q, x):
            return thh_operator("r", x, M)

    return PresentedObject(flavor, 1, q_max, lambda q: level_cells(M, q), face, degen, cyc, refl,
                           basepoint=STAR, name=f"THH({M.name or M.size})")


def fixed_points_of_subdivision(M, q, r):
    """Level q of (sd_r THH)^{C_r}: cells of level r(q+1)-1 fixed by t^{q+1}."""
    if r < 1:
        raise ArgumentError("r must be at least 1")
    out = []
    for x in level_cells(M, r * (q + 1) - 1):
        if x is STAR:
            out.append(x)
            continue
        y = x
        for _ in range(q + 1):
            y = thh_operator("t", y, M)
        if y == x:
            out.append(x)
    return out


def subdivided_fixed_object(M, r, q_max):
    """(sd_r THH)^{C_r} as a presented object up to degree q_max."""
    X = build_bar(M, r * (q_max + 1) - 1)
    return fixed_points(sd_object(X, r), r)


def diagonal_map(x, r):
    """x -> (x, x, ..., x), r copies."""
    if r < 1:
        raise ArgumentError("r must be at least 1")
    return STAR if x is STAR else tuple(x) * r


# ---------------------------------------------------------------------------
# integer matrices

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def int_det(A):
    """Determinant by fraction-free elimination (Bareiss)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


class SNFResult:
    """U A V = D with U, V unimodular and D diagonal with d_1 | d_2 | ..."""

    __slots__ = ("D", "U", "V", "rows", "cols")

    def __init__(self, D, U, V, rows, cols):
        self.D, self.U, self.V, self.rows, self.cols = D, U, V, rows, cols

    @property
    def diagonal(self):
        return [self.D[t][t] for t in range(min(self.rows, self.cols))]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)

    def to_plain(self):
        return {"diagonal": self.diagonal, "rows": self.rows, "cols": self.cols}


def smith_normal_form(A, rows=None, cols=None):
    """Smith normal form over the integers, tracking the transforms."""
    D = [list(map(int, row)) for row in A]
    m = len(D) if rows is None else rows
    n = (len(D[0]) if D else 0) if cols is None else cols
    if any(len(row) != n for row in D):
        raise ArgumentError("ragged matrix")
    U, V = _identity(m), _identity(n)

    def swap_rows(a, b):
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def add_row(dst, src, k):
        """row dst += k * row src"""
        if k:
            D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
            U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        if k:
            for row in D:
                row[dst] += k * row[src]
            for row in V:
                row[dst] += k * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            left = [(i, t) for i in range(t + 1, m) if D[i][t]] + [(t, j) for j in range(t + 1, n) if D[t][j]]
            if left:
                i, j = min(left, key=lambda ij: abs(D[ij[0]][ij[1]]))
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
    return SNFResult(D, U, V, m, n)


# ---------------------------------------------------------------------------
# chain complexes and homology

class ChainComplex:
    """Bases per degree and boundary matrices (rows: degree n-1, cols: degree n)."""

    def __init__(self, bases, boundaries, top):
        self.bases = bases
        self.boundaries = boundaries
        self.top = top

    def rank(self, n):
        return len(self.bases.get(n, []))


def normalized_chain_complex(X, n_max, check=True, augmented=False):
    """Normalized complex on the nondegenerate non-basepoint cells, degrees 0..n_max.

    With ``augmented=True`` a copy of Z sits in degree -1 and d_0 is the sum
    of coefficients, so the homology is the reduced homology of the part
    away from the basepoint.
    """
    if n_max > X.degrees:
        raise ArgumentError(f"{X.name} is presented only to degree {X.degrees}")
    if check:
        rep = check_identities(X, min(n_max + 1, X.degrees), sample=300)
        if not rep.ok:
            raise PreconditionError(f"{X.name} fails {rep.failed_cases()}")
    bases = {}
    degenerate = {}
    for n in range(n_max + 1):
        nd = X.nondegenerate(n)
        bases[n] = nd
        if n >= 1:
            degenerate[n] = {X.degen(n - 1, i, y) for y in X.cells(n - 1) for i in range(n)}
        else:
            degenerate[n] = set()
    boundaries = {}
    for n in range(1, n_max + 1):
        index = {x: k for k, x in enumerate(bases[n - 1])}
        mat = [[0] * len(bases[n]) for _ in bases[n - 1]]
        for col, x in enumerate(bases[n]):
            for i in range(n + 1):
                y = X.face(n, i, x)
                if y == X.basepoint or y in degenerate[n - 1]:
                    continue
                mat[index[y]][col] += -1 if i % 2 else 1
        boundaries[n] = mat
    if augmented:
        bases[-1] = ["augmentation"]
        boundaries[0] = [[1] * len(bases[0])]
    return ChainComplex(bases, boundaries, n_max)


def unnormalized_chain_complex(X, n_max):
    """All non-basepoint cells, no quotient by degeneracies (for cross-checks)."""
    bases = {n: [x for x in X.cells(n) if x != X.basepoint] for n in range(n_max + 1)}
    boundaries = {}
    for n in range(1, n_max + 1):
        index = {x: k for k, x in enumerate(bases[n - 1])}
        mat = [[0] * len(bases[n]) for _ in bases[n - 1]]
        for col, x in enumerate(bases[n]):
            for i in range(n + 1):
                y = X.face(n, i, x)
                if y != X.basepoint:
                    mat[index[y]][col] += -1 if i % 2 else 1
        boundaries[n] = mat
    return ChainComplex(bases, boundaries, n_max)


def _snf_of(C, n):
    rows = C.rank(n - 1)
    cols = C.rank(n)
    if n not in C.boundaries or rows == 0 or cols == 0:
        return None
    return smith_normal_form(C.boundaries[n], rows, cols)


def complex_homology(C, n):
    """(free rank, torsion coefficients) of H_n; needs degree n + 1 in C."""
    if n + 1 > C.top:
        raise ArgumentError(f"homology in degree {n} needs the complex up to degree {n + 1}")
    out_snf = _snf_of(C, n)
    in_snf = _snf_of(C, n + 1)
    rank_out = out_snf.rank if out_snf else 0
    incoming = in_snf.diagonal if in_snf else []
    rank_in = sum(1 for d in incoming if d)
    free = C.rank(n) - rank_out - rank_in
    torsion = [d for d in incoming if d > 1]
    return free, torsion


def homology(X, n, augmented=False, check=True):
    """Integer homology in degree n of the normalized complex of X."""
    if n + 1 > X.degrees:
        raise ArgumentError(f"{X.name} needs degree {n + 1} for H_{n}")
    return complex_homology(normalized_chain_complex(X, n + 1, check=check, augmented=augmented), n)


def homology_table(X, degrees, augmented=False):
    C = normalized_chain_complex(X, degrees + 1, augmented=augmented)
    return [complex_homology(C, n) for n in range(degrees + 1)]


def relabeled(X, rng):
    """The same object with every degree's cells renamed by a random bijection."""
    fwd, back = {}, {}
    for n in range(X.degrees + 1):
        cells = [x for x in X.cells(n) if x != X.basepoint]
        keys = list(range(len(cells)))
        rng.shuffle(keys)
        for x, k in zip(cells, keys):
            fwd[(n, x)] = (n, k)
            back[(n, k)] = x
    base = None if X.basepoint is None else "*"

    def to(n, x):
        return base if base is not None and x == X.basepoint else fwd[(n, x)]

    def frm(y):
        return X.basepoint if base is not None and y == base else back[y]

    def cells(n):
        out = sorted(fwd[(n, x)] for x in X.cells(n) if x != X.basepoint)
        return ([base] if base is not None else []) + out

    def face(n, i, y):
        return to(n - 1, X.face(n, i, frm(y)))

    def degen(n, i, y):
        return to(n + 1, X.degen(n, i, frm(y)))

    cyc = (lambda n, y: to(n, X.cyc(n, frm(y)))) if X.cyc else None
    refl = (lambda n, y: to(n, X.refl(n, frm(y)))) if X.refl else None
    return PresentedObject(X.flavor, X.r, X.degrees, cells, face, degen, cyc, refl,
                           basepoint=base, name=f"relabeled {X.name}")


# ---------------------------------------------------------------------------
# verification

def _op_list(q, flavor_has_refl):
    ops = [("d", i) for i in range(q + 1)] if q >= 1 else []
    ops += [("s", i) for i in range(q + 1)]
    ops.append(("t", None))
    if flavor_has_refl:
        ops.append(("r", None))
    return ops


def _apply(X, kind, q, i, x):
    if kind == "d":
        return X.face(q, i, x)
    if kind == "s":
        return X.degen(q, i, x)
    if kind == "t":
        return X.cyc(q, x)
    return X.refl(q, x)


def check_diagonal(M, q_max, r_max, seed=0):
    """Diagonal maps: bijections onto fixed points, commuting with every operator,
    and the coherence r_{C_rs} = r_{C_r} o fix(r_{C_s})."""
    report = Report("diagonal", {"monoid": M.name, "q_max": q_max, "r_max": r_max}, seed)
    refl = M.has_involution
    for r in range(1, r_max + 1):
        params = {"r": r}
        tb = Tally(report, "diagonal is a bijection onto the fixed points", params)
        tc = Tally(report, "fixed points are closed under the operators", params)
        to = Tally(report, "diagonal commutes with the operators", params)
        F = subdivided_fixed_object(M, r, q_max)
        B = build_bar(M, q_max + 1)
        for q in range(q_max + 1):
            fixed = F.cells(q)
            image = [diagonal_map(x, r) for x in level_cells(M, q)]
            tb.check(sorted(image, key=repr) == sorted(fixed, key=repr) and len(set(image)) == len(image), [q])
            for y in fixed:
                for kind, i in _op_list(q, refl):
                    if kind == "s" and q + 1 > F.degrees:
                        continue
                    target = q - 1 if kind == "d" else q + 1 if kind == "s" else q
                    tc.check(_apply(F, kind, q, i, y) in set(F.cells(target)), [q, y, kind, i])
            for x in level_cells(M, q):
                for kind, i in _op_list(q, refl):
                    if kind == "s" and q + 1 > F.degrees:
                        continue
                    lhs = diagonal_map(_apply(B, kind, q, i, x), r)
                    rhs = _apply(F, kind, q, i, diagonal_map(x, r))
                    to.check(lhs == rhs, [q, x, kind, i])
        for tal in (tb, tc, to):
            tal.close()
    for r in range(1, r_max + 1):
        for s in range(1, r_max + 1):
            tal = Tally(report, "r_{C_rs} = r_{C_r} o fix(r_{C_s})", {"r": r, "s": s})
            for q in range(q_max + 1):
                for x in level_cells(M, q):
                    inner = diagonal_map(x, r)
                    outer = diagonal_map(inner, s)
                    tal.check(outer == diagonal_map(x, r * s), [q, x])
            tal.close()
    return report


def verify_bar_suite(monoids=None, q_max=3, r_max=2, seed=0, sample=None):
    from .perm_core import enumerate_pointed_monoids
    if monoids is None:
        monoids = [m for size in (2, 3) for m in enumerate_pointed_monoids(size, involutive=True)]
    report = Report("bar_thh", {"q_max": q_max, "r_max": r_max, "monoids": len(monoids)}, seed)
    for k, M in enumerate(monoids):
        M.validate()
        if M.name is None:
            M.name = f"#{k}"
        X = build_bar(M, q_max + 1)
        report.extend(check_identities(X, q_max + 1, sample=sample, seed=seed))
        for c in range(2, r_max + 1):
            Y = sd_object(build_bar(M, c * (q_max + 2) - 1), c)
            report.extend(check_identities(Y, min(q_max, Y.degrees), sample=sample, seed=seed))
        report.extend(check_diagonal(M, q_max, r_max, seed))
    return report
