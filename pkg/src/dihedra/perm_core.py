"""Permutations, signed permutations and the operads built from them.

Permutations are 1-indexed: ``Permutation((2, 4, 1, 3))`` sends 1 to 2,
2 to 4 and so on.  Products compose right to left, ``(p * q)(t) == p(q(t))``.

Three discrete operads live here:

* ``SYMMETRIC``      level j is the symmetric group on j letters,
* ``COMMUTATIVE``    level j is a single point,
* ``HYPEROCTAHEDRAL`` level j is the group of signed permutations.

Level 0 of each operad is the pointed set {*, 1}; only the point 1 is stored.
"""

import itertools
import random

import numpy as np

from .errors import ArgumentError, InvariantError, PreconditionError
from .reports import Report, Tally


# ---------------------------------------------------------------------------
# permutations

class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvariantError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def _raw(cls, images):
        p = cls.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, k):
        return cls._raw(tuple(range(1, k + 1)))

    @classmethod
    def reversal(cls, k):
        """The order reversing permutation t -> k + 1 - t."""
        return cls._raw(tuple(range(k, 0, -1)))

    @classmethod
    def all(cls, k):
        for images in itertools.permutations(range(1, k + 1)):
            yield cls._raw(images)

    @classmethod
    def random(cls, k, rng):
        images = list(range(1, k + 1))
        rng.shuffle(images)
        return cls._raw(tuple(images))

    @property
    def degree(self):
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __call__(self, t):
        return self.images[t - 1]

    def __mul__(self, other):
        if len(other) != len(self):
            raise ArgumentError("degree mismatch in permutation product")
        im = self.images
        return Permutation._raw(tuple(im[v - 1] for v in other.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for t, v in enumerate(self.images, 1):
            inv[v - 1] = t
        return Permutation._raw(tuple(inv))

    def is_identity(self):
        return all(v == t for t, v in enumerate(self.images, 1))

    def act(self, seq):
        """Left action on tuples: position s of the result holds seq[p^-1(s)]."""
        out = [None] * len(seq)
        for t, v in enumerate(self.images):
            out[v - 1] = seq[t]
        return tuple(out)

    def key(self):
        return self.images

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(("perm", self.images))

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def to_plain(self):
        return list(self.images)


def as_perm(p):
    return p if isinstance(p, Permutation) else Permutation(p)


def _compose_tuple(rho, ups, i):
    """Partial composition on raw image tuples (no validation)."""
    k = len(rho)
    j = len(ups)
    pivot = rho[i - 1]
    out = []
    for t in range(1, k + j):
        if t < i:
            v = rho[t - 1]
            out.append(v if v < pivot else v + j - 1)
        elif t < i + j:
            out.append(ups[t - i] + pivot - 1)
        else:
            v = rho[t - j]
            out.append(v if v < pivot else v + j - 1)
    return tuple(out)


def perm_compose_i(rho, ups, i):
    """Insert ``ups`` into slot ``i`` of ``rho``.

    The result has degree k + j - 1.  With j = 0 the slot is deleted.
    """
    rho, ups = as_perm(rho), as_perm(ups)
    if not 1 <= i <= len(rho):
        raise ArgumentError(f"slot {i} out of range 1..{len(rho)}")
    return Permutation._raw(_compose_tuple(rho.images, ups.images, i))


def box_compose_i(rho, ups, i):
    """Evaluate the same composition by moving boxes around.

    Box t holds the single letter t, except box i, which holds ``ups``
    applied to j letters.  The boxes are placed in the order given by
    ``rho`` and the row of boxes is then numbered from left to right.
    """
    rho, ups = as_perm(rho), as_perm(ups)
    k, j = len(rho), len(ups)
    if not 1 <= i <= k:
        raise ArgumentError(f"slot {i} out of range 1..{k}")
    sizes = [j if t == i else 1 for t in range(1, k + 1)]
    # which box sits at each position
    at_position = [None] * k
    for t in range(1, k + 1):
        at_position[rho(t) - 1] = t
    start = {}
    running = 1
    for box in at_position:
        start[box] = running
        running += sizes[box - 1]
    flat = []
    for t in range(1, k + 1):
        if t == i:
            flat.extend(start[t] + ups(e) - 1 for e in range(1, j + 1))
        else:
            flat.append(start[t])
    return Permutation(flat)


# ---------------------------------------------------------------------------
# pointed monoids

class PointedMonoid:
    """Finite monoid with an absorbing basepoint.

    Elements are 0..n-1, with 0 the basepoint and 1 the unit.  ``table[x][y]``
    is the product x*y.  ``involution`` is optional; when present it must be an
    anti-automorphism of order two.
    """

    star = 0
    one = 1

    def __init__(self, table, involution=None, name=None, check=True):
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.involution = None if involution is None else tuple(int(v) for v in involution)
        self.name = name
        if check:
            self.validate()

    @property
    def size(self):
        return len(self.table)

    @property
    def elements(self):
        return range(len(self.table))

    @property
    def has_involution(self):
        return self.involution is not None

    def mul(self, x, y):
        return self.table[x][y]

    def prod(self, xs):
        acc = self.one
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def inv(self, x):
        if self.involution is None:
            raise PreconditionError("monoid has no involution")
        return self.involution[x]

    def validate(self):
        n = len(self.table)
        if n < 2:
            raise InvariantError("a pointed monoid needs at least the basepoint and the unit")
        els = range(n)
        for row in self.table:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise InvariantError("multiplication table is not square or has bad entries")
        t = self.table
        for x in els:
            if t[1][x] != x or t[x][1] != x:
                raise InvariantError(f"1 is not a two-sided unit at {x}")
            if t[0][x] != 0 or t[x][0] != 0:
                raise InvariantError(f"basepoint is not absorbing at {x}")
        for x in els:
            for y in els:
                xy = t[x][y]
                for z in els:
                    if t[xy][z] != t[x][t[y][z]]:
                        raise InvariantError(f"not associative at {(x, y, z)}")
        if self.involution is not None:
            iv = self.involution
            if len(iv) != n or any(not 0 <= v < n for v in iv):
                raise InvariantError("involution table has bad entries")
            if iv[0] != 0 or iv[1] != 1:
                raise InvariantError("involution must fix the basepoint and the unit")
            for x in els:
                if iv[iv[x]] != x:
                    raise InvariantError(f"involution is not of order two at {x}")
                for y in els:
                    if iv[t[x][y]] != t[iv[y]][iv[x]]:
                        raise InvariantError(f"involution is not anti-multiplicative at {(x, y)}")

    def to_text(self):
        lines = [str(self.size),
                 f"unit=1 basepoint=0 involution={'yes' if self.involution else 'no'}"]
        lines += [" ".join(map(str, row)) for row in self.table]
        if self.involution:
            lines.append(" ".join(map(str, self.involution)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text, name=None):
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
        try:
            n = int(lines[0])
            flags = dict(item.split("=", 1) for item in lines[1].split())
            table = [list(map(int, lines[2 + r].split())) for r in range(n)]
        except (IndexError, ValueError) as exc:
            raise ArgumentError(f"malformed monoid file: {exc}") from exc
        if flags.get("unit", "1") != "1" or flags.get("basepoint", "0") != "0":
            raise ArgumentError("only unit=1 basepoint=0 is supported")
        involution = None
        if flags.get("involution", "no") == "yes":
            if len(lines) < n + 3:
                raise ArgumentError("involution=yes but no involution line")
            involution = list(map(int, lines[n + 2].split()))
        return cls(table, involution, name=name)

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read(), name=str(path))

    def __eq__(self, other):
        return (isinstance(other, PointedMonoid) and self.table == other.table
                and self.involution == other.involution)

    def __hash__(self):
        return hash((self.table, self.involution))

    def __repr__(self):
        tag = self.name or f"size {self.size}"
        return f"PointedMonoid({tag})"

    def to_plain(self):
        return {"table": [list(r) for r in self.table],
                "involution": list(self.involution) if self.involution else None}


def trivial_monoid():
    """The monoid {*, 1}."""
    return PointedMonoid([[0, 0], [0, 1]], [0, 1], name="trivial")


def cyclic_group_monoid(order):
    """The cyclic group of the given order with a disjoint basepoint.

    Group element g^a is stored as a + 1; the involution is inversion.
    """
    n = order + 1
    table = [[0] * n for _ in range(n)]
    for a in range(order):
        for b in range(order):
            table[a + 1][b + 1] = (a + b) % order + 1
    inv = [0] + [(-a) % order + 1 for a in range(order)]
    return PointedMonoid(table, inv, name=f"C{order}+")


def group_monoid(elements, mul, inverse, name=None):
    """A finite group with a disjoint basepoint, involution = inversion.

    ``elements`` must list the identity first.
    """
    index = {g: t + 1 for t, g in enumerate(elements)}
    n = len(elements) + 1
    table = [[0] * n for _ in range(n)]
    for g in elements:
        for h in elements:
            table[index[g]][index[h]] = index[mul(g, h)]
    inv = [0] + [index[inverse(g)] for g in elements]
    return PointedMonoid(table, inv, name=name)


def enumerate_pointed_monoids(size, involutive=False):
    """All pointed monoids with the given number of elements (not up to iso).

    With ``involutive=True`` every valid involution is attached, giving one
    entry per (table, involution) pair, and tables admitting none are
    dropped.  Feasible for size <= 4.
    """
    free = list(range(2, size))
    els = list(range(size))
    result = []
    cells = [(x, y) for x in free for y in free]
    for values in itertools.product(els, repeat=len(cells)):
        table = [[0] * size for _ in range(size)]
        for x in els:
            table[1][x] = x
            table[x][1] = x
        table[1][0] = table[0][1] = 0
        for (x, y), v in zip(cells, values):
            table[x][y] = v
        try:
            base = PointedMonoid(table, None)
        except InvariantError:
            continue
        if involutive:
            for perm in itertools.permutations(free):
                iv = [0, 1] + list(perm)
                try:
                    result.append(PointedMonoid(table, iv))
                except InvariantError:
                    pass
        else:
            result.append(base)
    return result


def theta_action(rho, gs, M):
    """Multiply the entries of ``gs`` in the order prescribed by ``rho``.

    Returns g_{rho^-1(1)} * ... * g_{rho^-1(j)}.
    """
    rho = as_perm(rho)
    if len(gs) != len(rho):
        raise ArgumentError(f"arity mismatch: permutation of degree {len(rho)} with {len(gs)} entries")
    inv = rho.inverse()
    return M.prod(gs[inv(s) - 1] for s in range(1, len(rho) + 1))


# ---------------------------------------------------------------------------
# signed permutations

class SignedPerm:
    """Pair (signs, perm): the matrix D_signs * P_perm.

    The permutation matrix P has P[perm(t), t] = 1, so column t of the signed
    matrix carries signs[perm(t)] in row perm(t).
    """

    __slots__ = ("signs", "perm")

    def __init__(self, signs, perm):
        signs = tuple(int(s) for s in signs)
        perm = as_perm(perm)
        if any(s not in (1, -1) for s in signs):
            raise InvariantError(f"signs must be +1 or -1: {signs}")
        if len(signs) != len(perm):
            raise InvariantError("sign vector and permutation have different lengths")
        self.signs = signs
        self.perm = perm

    @classmethod
    def _raw(cls, signs, perm):
        x = cls.__new__(cls)
        x.signs = signs
        x.perm = perm
        return x

    @classmethod
    def identity(cls, n):
        return cls._raw((1,) * n, Permutation.identity(n))

    @classmethod
    def all(cls, n):
        for perm in Permutation.all(n):
            for signs in itertools.product((1, -1), repeat=n):
                yield cls._raw(signs, perm)

    @classmethod
    def random(cls, n, rng):
        return cls._raw(tuple(rng.choice((1, -1)) for _ in range(n)), Permutation.random(n, rng))

    @property
    def degree(self):
        return len(self.signs)

    def __len__(self):
        return len(self.signs)

    def __mul__(self, other):
        """Group product, matching the product of the matrices."""
        # D_x P_r D_y P_u = D_x D_{r.y} P_r P_u, where (r.y)_s = y_{r^-1(s)}
        moved = self.perm.act(other.signs)
        return SignedPerm._raw(tuple(a * b for a, b in zip(self.signs, moved)), self.perm * other.perm)

    def act(self, sigma):
        """Right action of a permutation: (x, r).s = (x, r s)."""
        return SignedPerm._raw(self.signs, self.perm * sigma)

    def key(self):
        return (self.signs, self.perm.images)

    def to_matrix(self):
        return signed_perm_to_matrix(self)

    def __eq__(self, other):
        return isinstance(other, SignedPerm) and self.key() == other.key()

    def __hash__(self):
        return hash(("signed", self.key()))

    def __repr__(self):
        return f"SignedPerm({list(self.signs)}, {list(self.perm.images)})"

    def to_plain(self):
        return {"signs": list(self.signs), "perm": list(self.perm.images)}


def sign_insert(x, y, p):
    """Put y into position p of the sign vector x.

    If x_p is -1 the reversed and negated y is inserted instead.
    """
    a = x[p - 1]
    inner = tuple(y) if a == 1 else tuple(-s for s in reversed(y))
    return tuple(x[:p - 1]) + inner + tuple(x[p:])


def hyper_compose_i(a, b, i):
    """Partial composition of signed permutations via the semidirect product."""
    k = len(a)
    if not 1 <= i <= k:
        raise ArgumentError(f"slot {i} out of range 1..{k}")
    p = a.perm(i)
    pivot = a.signs[p - 1]
    j = len(b)
    ups = b.perm.images
    if pivot == -1:
        ups = tuple(j + 1 - v for v in ups)
    signs = sign_insert(a.signs, b.signs, p)
    return SignedPerm._raw(signs, Permutation._raw(_compose_tuple(a.perm.images, ups, i)))


def signed_perm_to_matrix(a):
    n = len(a)
    m = np.zeros((n, n), dtype=np.int64)
    for t in range(1, n + 1):
        r = a.perm(t)
        m[r - 1, t - 1] = a.signs[r - 1]
    return m


def matrix_to_signed_perm(m):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvariantError("expected a square matrix")
    n = m.shape[0]
    if not np.isin(m, (-1, 0, 1)).all():
        raise InvariantError("entries must be 0 or +-1")
    nz = m != 0
    if n and (not (nz.sum(axis=0) == 1).all() or not (nz.sum(axis=1) == 1).all()):
        raise InvariantError("not a generalized permutation matrix")
    perm = [0] * n
    signs = [0] * n
    for t in range(n):
        r = int(np.flatnonzero(m[:, t])[0])
        perm[t] = r + 1
        signs[r] = int(m[r, t])
    return SignedPerm(signs, perm)


def flip_matrix(n):
    """T_n: the antidiagonal matrix with entries -1."""
    return -np.fliplr(np.eye(n, dtype=np.int64))


def hyper_matrix_compose_i(A, B, i):
    """Block substitution: replace the nonzero entry a of column i of A.

    The entry is replaced by B when a = 1 and by T_n B when a = -1; the other
    rows and columns of A move apart to make room.
    """
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    matrix_to_signed_perm(A)
    matrix_to_signed_perm(B)
    m, n = A.shape[0], B.shape[0]
    if not 1 <= i <= m:
        raise ArgumentError(f"slot {i} out of range 1..{m}")
    col = i - 1
    row = int(np.flatnonzero(A[:, col])[0])
    pivot = A[row, col]
    block = B if pivot == 1 else flip_matrix(n) @ B
    size = m + n - 1
    out = np.zeros((size, size), dtype=np.int64)
    rest_rows = [r for r in range(m) if r != row]
    rest_cols = [c for c in range(m) if c != col]

    def shift(idx, at):
        return idx if idx < at else idx + n - 1

    for r in rest_rows:
        for c in rest_cols:
            out[shift(r, row), shift(c, col)] = A[r, c]
    out[row:row + n, col:col + n] = block
    return out


# ---------------------------------------------------------------------------
# operads

class Operad:
    """Interface for a discrete operad.

    Subclasses provide ``compose(a, b, i)``, ``act(a, sigma)`` (right action
    of a permutation), ``arity(a)``, ``key(a)`` (a sortable total key),
    ``unit`` (the identity in level 1), ``zero`` (the non-basepoint of level
    0) and ``elements(k)`` which enumerates a level or returns None when the
    level is infinite.
    """

    name = "operad"
    free_action = True

    def elements(self, k):
        return None

    def sample(self, k, rng):
        els = self.elements(k)
        if els is None:
            raise PreconditionError(f"{self.name} needs a sampler for level {k}")
        els = list(els)
        return els[rng.randrange(len(els))]

    def eq(self, a, b):
        return self.key(a) == self.key(b)

    def gamma(self, c, ds):
        """Multi-composition: plug ds[t] into slot t + 1 of c."""
        if len(ds) != self.arity(c):
            raise ArgumentError("gamma needs one operation per input")
        out = c
        for t in range(len(ds), 0, -1):
            out = self.compose(out, ds[t - 1], t)
        return out


class SymmetricOperad(Operad):
    name = "M"

    def compose(self, a, b, i):
        return perm_compose_i(a, b, i)

    def act(self, a, sigma):
        return a * sigma

    def arity(self, a):
        return len(a)

    def key(self, a):
        return a.images

    @property
    def unit(self):
        return Permutation.identity(1)

    @property
    def zero(self):
        return Permutation.identity(0)

    def elements(self, k):
        return Permutation.all(k)

    def sample(self, k, rng):
        return Permutation.random(k, rng)


class CommutativeOperad(Operad):
    """One point in each level, stored as its arity."""

    name = "N"
    free_action = False

    def compose(self, a, b, i):
        if not 1 <= i <= a:
            raise ArgumentError(f"slot {i} out of range 1..{a}")
        return a + b - 1

    def act(self, a, sigma):
        return a

    def arity(self, a):
        return a

    def key(self, a):
        return a

    unit = 1
    zero = 0

    def elements(self, k):
        return iter((k,))

    def sample(self, k, rng):
        return k


class HyperoctahedralOperad(Operad):
    name = "H"

    def compose(self, a, b, i):
        return hyper_compose_i(a, b, i)

    def act(self, a, sigma):
        return a.act(sigma)

    def arity(self, a):
        return len(a)

    def key(self, a):
        return a.key()

    @property
    def unit(self):
        return SignedPerm.identity(1)

    @property
    def zero(self):
        return SignedPerm.identity(0)

    def elements(self, k):
        return SignedPerm.all(k)

    def sample(self, k, rng):
        return SignedPerm.random(k, rng)


SYMMETRIC = SymmetricOperad()
COMMUTATIVE = CommutativeOperad()
HYPEROCTAHEDRAL = HyperoctahedralOperad()


class TableOperad(Operad):
    """Wrap an operad and override single composition results.

    ``overrides`` maps (key(a), key(b), i) to a replacement result.  Used as a
    negative control for the axiom checker.
    """

    def __init__(self, base, overrides):
        self.base = base
        self.overrides = dict(overrides)
        self.name = f"{base.name}*"

    def compose(self, a, b, i):
        hit = self.overrides.get((self.base.key(a), self.base.key(b), i))
        return hit if hit is not None else self.base.compose(a, b, i)

    def act(self, a, sigma):
        return self.base.act(a, sigma)

    def arity(self, a):
        return self.base.arity(a)

    def key(self, a):
        return self.base.key(a)

    @property
    def unit(self):
        return self.base.unit

    @property
    def zero(self):
        return self.base.zero

    def elements(self, k):
        return self.base.elements(k)

    def sample(self, k, rng):
        return self.base.sample(k, rng)


class _Memo:
    """Interns operad elements by key and caches compositions and actions."""

    def __init__(self, P):
        self.P = P
        self.ids = {}
        self.objs = []
        self.comp = {}
        self.acts = {}

    def intern(self, a):
        k = self.P.key(a)
        idx = self.ids.get(k)
        if idx is None:
            idx = len(self.objs)
            self.ids[k] = idx
            self.objs.append(a)
        return idx

    def compose(self, ia, ib, i):
        key = (ia, ib, i)
        r = self.comp.get(key)
        if r is None:
            r = self.intern(self.P.compose(self.objs[ia], self.objs[ib], i))
            self.comp[key] = r
        return r

    def act(self, ia, sigma):
        key = (ia, sigma.images)
        r = self.acts.get(key)
        if r is None:
            r = self.intern(self.P.act(self.objs[ia], sigma))
            self.acts[key] = r
        return r


def operad_axioms_check(P, k_max, sampler=None, samples=50, seed=0):
    """Check associativity, equivariance and unity of a discrete operad.

    Levels that ``P.elements`` can enumerate are checked exhaustively up to
    ``k_max``; other levels use ``samples`` random elements per level drawn
    with ``sampler(k, rng)`` (or ``P.sample``).  One record is written per
    axiom and parameter shape, carrying the first failing instance.
    """
    rng = random.Random(seed)
    report = Report("operad_axioms", {"operad": P.name, "k_max": k_max, "samples": samples}, seed)
    memo = _Memo(P)
    draw = sampler or P.sample
    levels = {}
    for k in range(k_max + 1):
        els = P.elements(k)
        if els is None:
            els = [draw(k, rng) for _ in range(samples)]
        levels[k] = [memo.intern(a) for a in els]
    obj = memo.objs

    def show(*ids):
        return [obj[t] for t in ids]

    # associativity
    for k in range(1, k_max + 1):
        for j in range(k_max + 1):
            for l in range(k_max + 1):
                for i in range(1, k + 1):
                    for h in range(1, k + j):
                        if h < i:
                            case = "associativity h<i"
                        elif h < i + j:
                            case = "associativity i<=h<i+j"
                        else:
                            case = "associativity h>=i+j"
                        tally = Tally(report, case, {"k": k, "j": j, "l": l, "i": i, "h": h})
                        for a in levels[k]:
                            for b in levels[j]:
                                ab = memo.compose(a, b, i)
                                for c in levels[l]:
                                    lhs = memo.compose(ab, c, h)
                                    if h < i:
                                        rhs = memo.compose(memo.compose(a, c, h), b, i + l - 1)
                                    elif h < i + j:
                                        rhs = memo.compose(a, memo.compose(b, c, h - i + 1), i)
                                    else:
                                        rhs = memo.compose(memo.compose(a, c, h - j + 1), b, i)
                                    tally.check(lhs == rhs, lambda: show(a, b, c, lhs, rhs))
                        tally.close()
    # equivariance
    for k in range(1, k_max + 1):
        for j in range(k_max + 1):
            sig_k = list(Permutation.all(k))
            sig_j = list(Permutation.all(j))
            for i in range(1, k + 1):
                tally = Tally(report, "equivariance", {"k": k, "j": j, "i": i})
                for a in levels[k]:
                    for b in levels[j]:
                        for s in sig_k:
                            sa = memo.act(a, s)
                            for t in sig_j:
                                lhs = memo.compose(sa, memo.act(b, t), i)
                                rhs = memo.act(memo.compose(a, b, s(i)), perm_compose_i(s, t, i))
                                tally.check(lhs == rhs, lambda: show(a, b) + [s, t])
                tally.close()
    # unity
    u = memo.intern(P.unit)
    for k in range(k_max + 1):
        tally = Tally(report, "left unit", {"k": k})
        for a in levels[k]:
            tally.check(memo.compose(u, a, 1) == a, lambda: show(a))
        tally.close()
        if k == 0:
            continue
        tally = Tally(report, "right unit", {"k": k})
        for a in levels[k]:
            for i in range(1, k + 1):
                tally.check(memo.compose(a, u, i) == a, lambda: show(a) + [i])
        tally.close()
    return report


# ---------------------------------------------------------------------------
# algebra actions

class AlgebraAction:
    """Maps theta_j: P(j) x M^j -> M for a discrete operad P and a pointed monoid M."""

    def __init__(self, operad, monoid, theta, name=None):
        self.operad = operad
        self.monoid = monoid
        self.theta = theta
        self.name = name or f"{operad.name}-action"

    def __call__(self, c, gs):
        return self.theta(c, tuple(gs))


def monoid_action(M):
    """The action of the symmetric operad through ordered products."""
    return AlgebraAction(SYMMETRIC, M, lambda rho, gs: theta_action(rho, gs, M), "M-action")


def commutative_action(M):
    """The action of the one-point operad; only an algebra if M is commutative."""
    def theta(c, gs):
        if len(gs) != c:
            raise ArgumentError("arity mismatch")
        return M.prod(gs)
    return AlgebraAction(COMMUTATIVE, M, theta, "N-action")


def h_theta(a, gs, M):
    """Apply the involution where the sign is -1, then multiply in permuted order."""
    if len(gs) != len(a):
        raise ArgumentError(f"arity mismatch: {len(a)} vs {len(gs)}")
    inv = a.perm.inverse()
    acc = M.one
    for s in range(1, len(a) + 1):
        g = gs[inv(s) - 1]
        if a.signs[s - 1] == -1:
            g = M.inv(g)
        acc = M.mul(acc, g)
    return acc


def h_algebra_from_involutive_monoid(M):
    if not M.has_involution:
        raise PreconditionError("the hyperoctahedral action needs a monoid with involution")
    return AlgebraAction(HYPEROCTAHEDRAL, M, lambda a, gs: h_theta(a, gs, M), "H-action")


def algebra_axioms_check(action, k_max, sampler=None, samples=30, seed=0, tuples=None):
    """Check the three algebra axioms for ``action`` up to arity ``k_max``.

    * theta_{k+j-1}(c o_i d; g) = theta_k(c; ..., theta_j(d; g_i..g_{i+j-1}), ...)
    * theta_1(1; g) = g, and theta_0 of the level 0 point is the unit
    * theta(c.s; g) = theta(c; s.g)

    Element tuples are enumerated exhaustively unless ``tuples`` caps the
    number per arity, in which case they are sampled.
    """
    P, M, theta = action.operad, action.monoid, action.theta
    rng = random.Random(seed)
    report = Report("algebra_axioms", {"operad": P.name, "monoid": repr(M), "k_max": k_max}, seed)
    draw = sampler or P.sample
    levels = {}
    for k in range(k_max + 1):
        els = P.elements(k)
        levels[k] = list(els) if els is not None else [draw(k, rng) for _ in range(samples)]

    def gtuples(n):
        if tuples is None:
            return list(itertools.product(M.elements, repeat=n))
        return [tuple(rng.randrange(M.size) for _ in range(n)) for _ in range(tuples)]

    for k in range(1, k_max + 1):
        for j in range(0, k_max + 1):
            if k + j - 1 > k_max + 1:
                continue
            gs_all = gtuples(k + j - 1)
            for i in range(1, k + 1):
                tally = Tally(report, "theta acts", {"k": k, "j": j, "i": i})
                for c in levels[k]:
                    for d in levels[j]:
                        cd = P.compose(c, d, i)
                        for g in gs_all:
                            lhs = theta(cd, g)
                            inner = theta(d, g[i - 1:i - 1 + j])
                            rhs = theta(c, g[:i - 1] + (inner,) + g[i - 1 + j:])
                            tally.check(lhs == rhs, lambda: [c, d, i, list(g), lhs, rhs])
                tally.close()
    tally = Tally(report, "unit acts trivially", {})
    for g in M.elements:
        tally.check(theta(P.unit, (g,)) == g, [g])
    tally.check(theta(P.zero, ()) == M.one, ["level 0"])
    tally.close()
    for k in range(0, k_max + 1):
        tally = Tally(report, "equivariance", {"k": k})
        perms = list(Permutation.all(k))
        for c in levels[k]:
            for g in gtuples(k):
                for s in perms:
                    tally.check(theta(P.act(c, s), g) == theta(c, s.act(g)),
                                lambda: [c, s, list(g)])
        tally.close()
    return report


# ---------------------------------------------------------------------------
# identities used by the test-suite and the CLI

def five_formulas_check(k_max=4):
    """Exhaustively check the five product formulas relating o_i and products."""
    report = Report("five_formulas", {"k_max": k_max})
    for k in range(1, k_max + 1):
        idk = Permutation.identity(k)
        sk = list(Permutation.all(k))
        for j in range(0, k_max + 1):
            idj = Permutation.identity(j)
            sj = list(Permutation.all(j))
            for i in range(1, k + 1):
                tallies = {n: Tally(report, n, {"k": k, "j": j, "i": i})
                           for n in ("i", "ii", "iii", "iv", "v")}
                for r in sk:
                    ri = perm_compose_i(r, idj, i)
                    for u in sj:
                        lhs = perm_compose_i(r, u, i)
                        tallies["i"].check(lhs == ri * perm_compose_i(idk, u, i), [r, u])
                        tallies["ii"].check(lhs == perm_compose_i(idk, u, r(i)) * ri, [r, u])
                for u in sj:
                    for u2 in sj:
                        tallies["iii"].check(
                            perm_compose_i(idk, u * u2, i)
                            == perm_compose_i(idk, u, i) * perm_compose_i(idk, u2, i), [u, u2])
                for r in sk:
                    for r2 in sk:
                        tallies["iv"].check(
                            perm_compose_i(r * r2, idj, i)
                            == perm_compose_i(r, idj, r2(i)) * perm_compose_i(r2, idj, i), [r, r2])
                # v on a deterministic slice of the (r, r2, u, u2) space
                for r in sk:
                    for r2 in sk:
                        for u in sj:
                            for u2 in (sj if k * j <= 9 else sj[:2]):
                                tallies["v"].check(
                                    perm_compose_i(r * r2, u * u2, i)
                                    == perm_compose_i(r, u, r2(i)) * perm_compose_i(r2, u2, i),
                                    [r, r2, u, u2])
                for t in tallies.values():
                    t.close()
    return report


def iterated_composition_check(k_max=3):
    """Exhaustively check the three cases of iterated composition in the symmetric operad."""
    report = Report("iterated_compositions", {"k_max": k_max})
    for k in range(1, k_max + 1):
        for j in range(0, k_max + 1):
            for l in range(0, k_max + 1):
                for a in range(1, k + 1):
                    for b in range(1, k + j):
                        if b < a:
                            case = "b<a"
                        elif b < a + j:
                            case = "a<=b<a+j"
                        else:
                            case = "b>=a+j"
                        tally = Tally(report, case, {"k": k, "j": j, "l": l, "a": a, "b": b})
                        for r in Permutation.all(k):
                            for u in Permutation.all(j):
                                ru = perm_compose_i(r, u, a)
                                for m in Permutation.all(l):
                                    lhs = perm_compose_i(ru, m, b)
                                    if b < a:
                                        rhs = perm_compose_i(perm_compose_i(r, m, b), u, a + l - 1)
                                    elif b < a + j:
                                        rhs = perm_compose_i(r, perm_compose_i(u, m, b - a + 1), a)
                                    else:
                                        rhs = perm_compose_i(perm_compose_i(r, m, b - j + 1), u, a)
                                    tally.check(lhs == rhs, [r, u, m])
                        tally.close()
    return report


def box_model_check(k_max=5):
    report = Report("box_model", {"k_max": k_max})
    for k in range(1, k_max + 1):
        for j in range(0, k_max + 1):
            tally = Tally(report, "formula = boxes", {"k": k, "j": j})
            sj = list(Permutation.all(j))
            for r in Permutation.all(k):
                for u in sj:
                    for i in range(1, k + 1):
                        tally.check(perm_compose_i(r, u, i) == box_compose_i(r, u, i), [r, u, i])
            tally.close()
    return report


def hyper_matrix_check(k_max=3):
    report = Report("hyper_matrix", {"k_max": k_max})
    for k in range(1, k_max + 1):
        for j in range(0, k_max + 1):
            tally = Tally(report, "semidirect = block matrix", {"k": k, "j": j})
            bs = [(b, b.to_matrix()) for b in SignedPerm.all(j)]
            for a in SignedPerm.all(k):
                A = a.to_matrix()
                for b, B in bs:
                    for i in range(1, k + 1):
                        got = hyper_compose_i(a, b, i).to_matrix()
                        want = hyper_matrix_compose_i(A, B, i)
                        tally.check(np.array_equal(got, want), [a, b, i])
            tally.close()
    return report


def theta_composition_check(M, k_max=3, tuples=None, seed=0):
    """The monoid action of the symmetric operad composes correctly."""
    return algebra_axioms_check(monoid_action(M), k_max, tuples=tuples, seed=seed)


def involution_identities(M):
    """Check iota^2 = id and iota(xy) = iota(y)iota(x) through the H-action.

    iota is theta_1 at the sign -1 and multiplication is theta_2 at the
    identity; the identities come from composing in the operad.
    """
    act = h_algebra_from_involutive_monoid(M)
    neg = SignedPerm((-1,), (1,))
    I2 = SignedPerm.identity(2)
    report = Report("involution_identities", {"monoid": repr(M)})
    t1 = Tally(report, "iota^2 = id", {})
    t2 = Tally(report, "iota(xy) = iota(y) iota(x)", {})
    nn = hyper_compose_i(neg, neg, 1)
    flip = hyper_compose_i(neg, I2, 1)
    for x in M.elements:
        t1.check(act(nn, (x,)) == x and act(neg, (act(neg, (x,)),)) == x, [x])
        for y in M.elements:
            lhs = act(neg, (act(I2, (x, y)),))
            t2.check(lhs == act(flip, (x, y)) == act(I2, (act(neg, (y,)), act(neg, (x,)))), [x, y])
    t1.close()
    t2.close()
    return report


def verify_perm_suite(k_max=5, formula_k=4, iterated_k=3, operad_k=3, seed=0):
    """Symmetric operad arithmetic: boxes, a fixed example, the product formulas."""
    report = Report("perm", {"k_max": k_max}, seed)
    got = perm_compose_i(Permutation([2, 4, 1, 3]), Permutation([3, 2, 1]), 1)
    report.record("[2,4,1,3] o_1 [3,2,1] = [4,3,2,6,1,5]", {},
                  got.images == (4, 3, 2, 6, 1, 5), list(got.images))
    report.extend(box_model_check(k_max))
    report.extend(five_formulas_check(formula_k))
    report.extend(iterated_composition_check(iterated_k))
    report.extend(operad_axioms_check(SYMMETRIC, operad_k, seed=seed))
    return report


def verify_hyper_suite(k_max=3, monoid_size=4, seed=0):
    """Hyperoctahedral operad: matrices, axioms, involution identities."""
    report = Report("hyper", {"k_max": k_max, "monoid_size": monoid_size}, seed)
    report.extend(hyper_matrix_check(k_max))
    report.extend(operad_axioms_check(HYPEROCTAHEDRAL, k_max, seed=seed))
    for size in range(2, monoid_size + 1):
        for M in enumerate_pointed_monoids(size, involutive=True):
            sub = involution_identities(M)
            for rec in sub.records:
                rec["params"] = dict(rec["params"], size=size, table=[list(r) for r in M.table],
                                     involution=list(M.involution))
            report.extend(sub)
    return report
