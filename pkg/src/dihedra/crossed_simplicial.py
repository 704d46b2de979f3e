"""Crossed simplicial categories Delta, DeltaT, DeltaC_r and DeltaD_r.

A morphism [m] -> [n] is stored in its unique factored form phi o g with g
an automorphism of [m] and phi monotone.  Automorphisms are written
tau^a rho^e (rho applied first).  Flavors:

    "d"   plain Delta, no automorphisms
    "T"   involutive, automorphisms {1, rho}
    "C"   r-cyclic, automorphisms tau^a with a mod r(n+1)
    "D"   r-dihedral, both

Generators are tuples named after the codomain degree: ("d", i, n) is
delta_i: [n-1] -> [n], ("s", i, n) is sigma_i: [n+1] -> [n], ("t", n) is
tau_n and ("r", n) is rho_n.
"""

import itertools
import math
import random

from .errors import ArgumentError, InvariantError, PreconditionError
from .reports import Report, Tally

FLAVORS = ("d", "T", "C", "D")
_FLAVOR_ALIASES = {"d": "d", "delta": "d", "T": "T", "dT": "T", "C": "C", "dC": "C",
                   "D": "D", "dD": "D"}


def flavor_code(name):
    try:
        return _FLAVOR_ALIASES[name]
    except KeyError:
        raise ArgumentError(f"unknown flavor {name!r}") from None


def _has_tau(flavor):
    return flavor in ("C", "D")


def _has_rho(flavor):
    return flavor in ("T", "D")


# ---------------------------------------------------------------------------
# monotone maps

class MonotoneMap:
    __slots__ = ("images", "target")

    def __init__(self, images, target):
        images = tuple(int(v) for v in images)
        if not images:
            raise InvariantError("a monotone map needs a non-empty source")
        if any(v < 0 or v > target for v in images):
            raise InvariantError(f"images {images} leave [0, {target}]")
        if any(a > b for a, b in zip(images, images[1:])):
            raise InvariantError(f"images {images} are not weakly increasing")
        self.images = images
        self.target = int(target)

    @classmethod
    def identity(cls, n):
        return cls(range(n + 1), n)

    @property
    def source(self):
        return len(self.images) - 1

    def __call__(self, x):
        return self.images[x]

    def compose(self, other):
        """self o other."""
        if other.target != self.source:
            raise ArgumentError("degree mismatch in monotone composition")
        return MonotoneMap(tuple(self.images[v] for v in other.images), self.target)

    def periodic(self, x):
        """Extension to Z with phi(x + m + 1) = phi(x) + n + 1."""
        q, rem = divmod(x, self.source + 1)
        return self.images[rem] + q * (self.target + 1)

    def is_injective(self):
        return len(set(self.images)) == len(self.images)

    def word(self):
        """Generator word delta_{i1}..delta_{is} sigma_{j1}..sigma_{jt} (leftmost applied last)."""
        m, n = self.source, self.target
        missed = sorted(set(range(n + 1)) - set(self.images), reverse=True)
        repeats = [j for j in range(m) if self.images[j] == self.images[j + 1]]
        out = []
        deg = n
        for i in missed:
            out.append(("d", i, deg))
            deg -= 1
        # deg is now the degree of the image; sigma_{j} with the largest j is applied first
        for j in repeats:
            out.append(("s", j, deg))
            deg += 1
        return out

    def __eq__(self, other):
        return isinstance(other, MonotoneMap) and self.images == other.images and self.target == other.target

    def __hash__(self):
        return hash((self.images, self.target))

    def __repr__(self):
        return f"MonotoneMap({list(self.images)}->[{self.target}])"

    def to_plain(self):
        return {"images": list(self.images), "target": self.target}


def delta(i, n):
    """delta_i: [n-1] -> [n], skipping i."""
    if not 0 <= i <= n or n < 1:
        raise ArgumentError(f"delta_{i} needs 0 <= i <= n, n >= 1 (n={n})")
    return MonotoneMap([x if x < i else x + 1 for x in range(n)], n)


def sigma(i, n):
    """sigma_i: [n+1] -> [n], hitting i twice."""
    if not 0 <= i <= n:
        raise ArgumentError(f"sigma_{i} needs 0 <= i <= n (n={n})")
    return MonotoneMap([x if x <= i else x - 1 for x in range(n + 2)], n)


def monotone_from_word(word, source):
    """Compose a generator word (leftmost applied last) starting at [source]."""
    acc = MonotoneMap.identity(source)
    for gen in reversed(word):
        acc = _gen_map(gen).compose(acc)
    return acc


def _gen_map(gen):
    kind = gen[0]
    if kind == "d":
        return delta(gen[1], gen[2])
    if kind == "s":
        return sigma(gen[1], gen[2])
    raise ArgumentError(f"{gen!r} is not a monotone generator")


# ---------------------------------------------------------------------------
# automorphisms

class DihedralElem:
    """tau_n^a rho_n^e in Aut([n]) for the given flavor and r."""

    __slots__ = ("n", "r", "a", "e", "flavor")

    def __init__(self, n, a=0, e=0, flavor="D", r=1):
        flavor = flavor_code(flavor)
        if r < 1:
            raise InvariantError("r must be at least 1")
        a, e = int(a), int(e) % 2
        if not _has_tau(flavor):
            if a:
                raise InvariantError(f"flavor {flavor} has no rotations")
            r = 1
        else:
            a %= r * (n + 1)
        if e and not _has_rho(flavor):
            raise InvariantError(f"flavor {flavor} has no reflection")
        self.n, self.r, self.a, self.e, self.flavor = n, r, a, e, flavor

    @property
    def order(self):
        if self.flavor == "d":
            return 1
        if self.flavor == "T":
            return 2
        return self.r * (self.n + 1) * (2 if self.flavor == "D" else 1)

    def _like(self, n, a, e):
        return DihedralElem(n, a, e, self.flavor, self.r)

    def __mul__(self, other):
        if (self.n, self.flavor, self.r) != (other.n, other.flavor, other.r):
            raise ArgumentError("automorphisms of different objects or categories")
        sign = -1 if self.e else 1
        return self._like(self.n, self.a + sign * other.a, self.e + other.e)

    def inverse(self):
        if self.e:
            return self
        return self._like(self.n, -self.a, 0)

    def is_identity(self):
        return self.a == 0 and self.e == 0

    def word(self):
        """Generator word, leftmost applied last."""
        return [("t", self.n)] * self.a + [("r", self.n)] * self.e

    def __eq__(self, other):
        return (isinstance(other, DihedralElem)
                and (self.n, self.r, self.a, self.e, self.flavor)
                == (other.n, other.r, other.a, other.e, other.flavor))

    def __hash__(self):
        return hash((self.n, self.r, self.a, self.e, self.flavor))

    def __repr__(self):
        return f"tau_{self.n}^{self.a} rho^{self.e}"

    def to_plain(self):
        return {"n": self.n, "a": self.a, "e": self.e}


def automorphisms(n, flavor, r=1):
    flavor = flavor_code(flavor)
    rots = range(r * (n + 1)) if _has_tau(flavor) else (0,)
    refl = (0, 1) if _has_rho(flavor) else (0,)
    return [DihedralElem(n, a, e, flavor, r) for e in refl for a in rots]


# ---------------------------------------------------------------------------
# pushing automorphisms past monotone generators

def _push_rho(gen):
    """rho o gen = gen' o rho (on the new object)."""
    kind, i, n = gen
    return (kind, n - i, n)


def _push_tau(gen):
    """tau o gen = gen' o tau^c; returns (gen', c)."""
    kind, i, n = gen
    if kind == "d":
        return (("d", n, n), 0) if i == 0 else (("d", i - 1, n), 1)
    return (("s", n, n), 2) if i == 0 else (("s", i - 1, n), 1)


def _source_degree(gen):
    kind, _, n = gen
    return n - 1 if kind == "d" else n + 1


def star_maps(g, phi):
    """The unique (g*(phi), phi*(g)) with g o phi = g*(phi) o phi*(g)."""
    if phi.target != g.n:
        raise ArgumentError("degree mismatch: automorphism and monotone map")
    word = phi.word()
    a, e = g.a, g.e
    out = []
    for gen in word:
        if e:
            gen = _push_rho(gen)
        acc = 0
        for _ in range(a):
            gen, c = _push_tau(gen)
            acc += c
        out.append(gen)
        a = acc
    new = monotone_from_word(out, phi.source)
    return new, DihedralElem(phi.source, a, e, g.flavor, g.r)


# ---------------------------------------------------------------------------
# morphisms

class CSMorphism:
    __slots__ = ("flavor", "r", "mono", "group")

    def __init__(self, mono, group):
        if mono.source != group.n:
            raise InvariantError("automorphism must act on the source")
        self.flavor = group.flavor
        self.r = group.r
        self.mono = mono
        self.group = group

    @classmethod
    def identity(cls, n, flavor="D", r=1):
        return cls(MonotoneMap.identity(n), DihedralElem(n, 0, 0, flavor, r))

    @property
    def source(self):
        return self.mono.source

    @property
    def target(self):
        return self.mono.target

    def __eq__(self, other):
        return (isinstance(other, CSMorphism) and self.mono == other.mono
                and self.group == other.group)

    def __hash__(self):
        return hash((self.mono, self.group))

    def __repr__(self):
        return f"CSMorphism({list(self.mono.images)}->[{self.target}], {self.group!r})"

    def to_plain(self):
        return {"mono": self.mono.to_plain(), "group": self.group.to_plain()}


def generator(gen, flavor="D", r=1):
    """The morphism named by a generator tuple."""
    flavor = flavor_code(flavor)
    kind = gen[0]
    if kind in ("d", "s"):
        m = _gen_map(gen)
        return CSMorphism(m, DihedralElem(m.source, 0, 0, flavor, r))
    n = gen[1]
    if kind == "t":
        if not _has_tau(flavor):
            raise ArgumentError(f"flavor {flavor} has no tau")
        return CSMorphism(MonotoneMap.identity(n), DihedralElem(n, 1, 0, flavor, r))
    if kind == "r":
        if not _has_rho(flavor):
            raise ArgumentError(f"flavor {flavor} has no rho")
        return CSMorphism(MonotoneMap.identity(n), DihedralElem(n, 0, 1, flavor, r))
    raise ArgumentError(f"unknown generator {gen!r}")


def cs_compose(f, g):
    """f o g in factored form."""
    if (f.flavor, f.r) != (g.flavor, g.r):
        raise ArgumentError("morphisms from different categories")
    if g.target != f.source:
        raise ArgumentError(f"cannot compose [{g.source}]->[{g.target}] with [{f.source}]->[{f.target}]")
    moved, pulled = star_maps(f.group, g.mono)
    return CSMorphism(f.mono.compose(moved), pulled * g.group)


def compose_word(word, flavor="D", r=1):
    """Left-to-right product of a generator word (leftmost applied last)."""
    if not word:
        raise ArgumentError("empty word has no degree")
    acc = generator(word[-1], flavor, r)
    for gen in reversed(word[:-1]):
        acc = cs_compose(generator(gen, flavor, r), acc)
    return acc


def morphism_word(f):
    """A generator word for f."""
    return f.mono.word() + f.group.word()


def gen_source(gen):
    kind = gen[0]
    if kind in ("d", "s"):
        return _source_degree(gen)
    return gen[1]


def gen_target(gen):
    return gen[2] if gen[0] in ("d", "s") else gen[1]


def random_word(flavor, r, source, length, rng, max_degree=5):
    """Random composable generator word starting at [source]."""
    flavor = flavor_code(flavor)
    word = []
    deg = source
    for _ in range(length):
        options = []
        if deg < max_degree:
            options += [("d", i, deg + 1) for i in range(deg + 2)]
        if deg > 0:
            options += [("s", i, deg - 1) for i in range(deg)]
        if _has_tau(flavor):
            options.append(("t", deg))
        if _has_rho(flavor):
            options.append(("r", deg))
        gen = rng.choice(options)
        word.insert(0, gen)
        deg = gen_target(gen)
    return word


# ---------------------------------------------------------------------------
# the periodic integer model (independent oracle)

def z_model(f):
    """Signature of f as a map Z -> Z.

    tau acts by x -> x - 1, rho_n by x -> n - x, monotone maps are extended
    periodically.  The signature is the orientation plus the values on
    0..m, shifted so that the first value lies in [0, r(n+1)).
    """
    m, n = f.source, f.target
    g = f.group

    def on_source(x):
        if g.e:
            x = m - x
        return x - g.a

    vals = [f.mono.periodic(on_source(x)) for x in range(m + 1)]
    if _has_tau(f.flavor):
        period = f.r * (n + 1)
        shift = (vals[0] // period) * period
        vals = [v - shift for v in vals]
    return (g.e, tuple(vals))


def _z_eval(sig, m, n, x):
    e, vals = sig
    q, rem = divmod(x, m + 1)
    return vals[rem] + (-1 if e else 1) * q * (n + 1)


def z_compose(sig_f, f_shape, sig_g, g_shape):
    """Signature of f o g computed from the two signatures alone."""
    m_f, n_f, flavor, r = f_shape
    m_g, n_g = g_shape[:2]
    out = [_z_eval(sig_f, m_f, n_f, _z_eval(sig_g, m_g, n_g, x)) for x in range(m_g + 1)]
    if _has_tau(flavor):
        period = r * (n_f + 1)
        shift = (out[0] // period) * period
        out = [v - shift for v in out]
    return ((sig_f[0] + sig_g[0]) % 2, tuple(out))


# ---------------------------------------------------------------------------
# presented objects

class PresentedObject:
    """A simplicial (cyclic, involutive, dihedral) pointed set up to a degree.

    ``cells(n)`` lists the elements of degree n; ``face(n, i, x)``,
    ``degen(n, i, x)``, ``cyc(n, x)`` and ``refl(n, x)`` are the operators
    d_i, s_i, t_n, r_n on degree n.  ``basepoint`` is None for unpointed
    objects.
    """

    def __init__(self, flavor, r, degrees, cells, face, degen, cyc=None, refl=None,
                 basepoint=None, name="X"):
        self.flavor = flavor_code(flavor)
        self.r = r
        self.degrees = degrees
        self._cells = cells
        self.face = face
        self.degen = degen
        self.cyc = cyc
        self.refl = refl
        self.basepoint = basepoint
        self.name = name
        self._cache = {}

    def cells(self, n):
        if n > self.degrees:
            raise ArgumentError(f"{self.name} is presented only up to degree {self.degrees}")
        if n not in self._cache:
            self._cache[n] = list(self._cells(n))
        return self._cache[n]

    def nondegenerate(self, n):
        if n == 0:
            return [x for x in self.cells(0) if x != self.basepoint]
        images = {self.degen(n - 1, i, y) for y in self.cells(n - 1) for i in range(n)}
        return [x for x in self.cells(n) if x not in images and x != self.basepoint]

    def t_power(self, n, x, k):
        for _ in range(k):
            x = self.cyc(n, x)
        return x


def check_identities(X, degree=None, sample=None, seed=0):
    """Check every generator relation, contravariantly, on the cells of X.

    Relations are named by their covariant form.  ``sample`` limits the
    number of cells tried per degree (random subset with the given seed).
    """
    N = X.degrees if degree is None else min(degree, X.degrees)
    rng = random.Random(seed)
    report = Report("identities", {"object": X.name, "flavor": X.flavor, "r": X.r, "degrees": N}, seed)
    tallies = {}

    def check(name, ok, witness):
        if name not in tallies:
            tallies[name] = Tally(report, name, {})
        tallies[name].check(ok, witness)

    d, s, t, rr = X.face, X.degen, X.cyc, X.refl
    cyclic = _has_tau(X.flavor) and t is not None
    inv = _has_rho(X.flavor) and rr is not None
    for n in range(N + 1):
        cells = X.cells(n)
        if sample is not None and len(cells) > sample:
            cells = rng.sample(cells, sample)
        for x in cells:
            w = lambda *extra: [n, x] + list(extra)
            if X.basepoint is not None and x == X.basepoint:
                if n >= 1:
                    check("faces fix the basepoint",
                          all(d(n, i, x) == X.basepoint for i in range(n + 1)), w())
                if n < N:
                    check("degeneracies fix the basepoint",
                          all(s(n, i, x) == X.basepoint for i in range(n + 1)), w())
            # simplicial identities
            if n >= 2:
                for i in range(n + 1):
                    for j in range(i + 1, n + 1):
                        check("d_i d_j = d_{j-1} d_i",
                              d(n - 1, i, d(n, j, x)) == d(n - 1, j - 1, d(n, i, x)), w(i, j))
            if n + 1 <= N:
                for j in range(n + 1):
                    y = s(n, j, x)
                    for i in range(n + 2):
                        if i < j:
                            ok = n >= 1 and d(n + 1, i, y) == s(n - 1, j - 1, d(n, i, x))
                            check("d_i s_j = s_{j-1} d_i", ok, w(i, j))
                        elif i in (j, j + 1):
                            check("d_j s_j = d_{j+1} s_j = id", d(n + 1, i, y) == x, w(i, j))
                        else:
                            ok = n >= 1 and d(n + 1, i, y) == s(n - 1, j, d(n, i - 1, x))
                            check("d_i s_j = s_j d_{i-1}", ok, w(i, j))
            if n + 2 <= N:
                for i in range(n + 1):
                    for j in range(i, n + 1):
                        check("s_i s_j = s_{j+1} s_i",
                              s(n + 1, i, s(n, j, x)) == s(n + 1, j + 1, s(n, i, x)), w(i, j))
            # cyclic relations
            if cyclic:
                tx = t(n, x)
                if n >= 1:
                    check("τδ₀=δ_n", d(n, 0, tx) == d(n, n, x), w())
                    for i in range(1, n + 1):
                        check("τδ_i=δ_{i-1}τ", d(n, i, tx) == t(n - 1, d(n, i - 1, x)), w(i))
                if n + 1 <= N:
                    check("τσ₀=σ_nτ²", s(n, 0, tx) == t(n + 1, t(n + 1, s(n, n, x))), w())
                    for i in range(1, n + 1):
                        check("τσ_i=σ_{i-1}τ", s(n, i, tx) == t(n + 1, s(n, i - 1, x)), w(i))
                check("τ^{r(n+1)}=1", X.t_power(n, x, X.r * (n + 1)) == x, w())
            if inv:
                rx = rr(n, x)
                check("ρ²=1", rr(n, rx) == x, w())
                if n >= 1:
                    for i in range(n + 1):
                        check("ρδ_i=δ_{n-i}ρ", d(n, i, rx) == rr(n - 1, d(n, n - i, x)), w(i))
                if n + 1 <= N:
                    for i in range(n + 1):
                        check("ρσ_i=σ_{n-i}ρ", s(n, i, rx) == rr(n + 1, s(n, n - i, x)), w(i))
                if cyclic:
                    check("τρτ=ρ", t(n, rr(n, t(n, x))) == rx, w())
    for tal in tallies.values():
        tal.close()
    return report


# ---------------------------------------------------------------------------
# the simplicial sets G_.

def G_object(flavor, r=1, degrees=3):
    """G_n = Aut([n]) with d_i = delta_i^* and s_i = sigma_i^*."""
    flavor = flavor_code(flavor)

    def cells(n):
        return automorphisms(n, flavor, r)

    def face(n, i, g):
        return star_maps(g, delta(i, n))[1]

    def degen(n, i, g):
        return star_maps(g, sigma(i, n))[1]

    return PresentedObject(flavor, r, degrees, cells, face, degen, name=f"G[{flavor},{r}]")


def enumerate_G(flavor, r=1, degrees=3):
    """Cells, nondegenerate cells and faces of nondegenerate cells of G_."""
    X = G_object(flavor, r, degrees)
    out = []
    for n in range(degrees + 1):
        nd = X.nondegenerate(n)
        faces = []
        if n >= 1:
            faces = [[X.face(n, i, g) for i in range(n + 1)] for g in nd]
        out.append({"degree": n, "cells": X.cells(n), "nondegenerate": nd, "faces": faces})
    return out


def census_counts(table):
    return tuple(len(row["nondegenerate"]) for row in table)


def components_and_euler(table):
    """Connected components (via 1-cells) and Euler characteristic of the nondegenerate cells."""
    verts = table[0]["nondegenerate"]
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    if len(table) > 1:
        for faces in table[1]["faces"]:
            a, b = find(faces[0]), find(faces[1])
            if a != b:
                parent[a] = b
    comps = len({find(v) for v in verts})
    euler = sum((-1) ** row["degree"] * len(row["nondegenerate"]) for row in table)
    return comps, euler


# ---------------------------------------------------------------------------
# edgewise subdivision

def sd_generator(c, gen):
    """Word for sd_c(gen), leftmost applied last.  ``gen`` lives in the finer category."""
    if c < 1:
        raise ArgumentError("c must be at least 1")
    kind = gen[0]
    if kind == "d":
        _, i, q = gen
        # delta_i: [q-1] -> [q] becomes delta_{i+(c-1)(q+1)} ... delta_{i+(q+1)} delta_i
        out = []
        for t in range(c - 1, -1, -1):
            out.append(("d", i + t * (q + 1), c * q + t))
        return out
    if kind == "s":
        _, i, q = gen
        # sigma_i: [q+1] -> [q] becomes sigma_i sigma_{i+(q+2)} ... sigma_{i+(c-1)(q+2)}
        return [("s", i + t * (q + 2), c * (q + 1) + t - 1) for t in range(c)]
    if kind == "t":
        return [("t", c * (gen[1] + 1) - 1)]
    if kind == "r":
        return [("r", c * (gen[1] + 1) - 1)]
    raise ArgumentError(f"unknown generator {gen!r}")


def sd_word(c, word):
    out = []
    for gen in word:
        out += sd_generator(c, gen)
    return out


def _apply_word(X, word, n, x):
    """Evaluate the contravariant action of a covariant word on x in X_n.

    The word's rightmost generator has source [n]... contravariantly, the
    leftmost generator acts first on x, which lives at the leftmost target.
    """
    for gen in word:
        kind = gen[0]
        if kind == "d":
            x = X.face(gen[2], gen[1], x)
        elif kind == "s":
            x = X.degen(gen[2], gen[1], x)
        elif kind == "t":
            x = X.cyc(gen[1], x)
        else:
            x = X.refl(gen[1], x)
    return x


def sd_object(X, c):
    """The c-th edgewise subdivision, an object over the finer category."""
    if c < 1:
        raise ArgumentError("c must be at least 1")
    N = (X.degrees + 1) // c - 1
    if N < 0:
        raise ArgumentError(f"{X.name} needs degree >= {c - 1} for sd_{c}")

    def cells(q):
        return X.cells(c * (q + 1) - 1)

    def face(q, i, x):
        return _apply_word(X, sd_generator(c, ("d", i, q)), c * (q + 1) - 1, x)

    def degen(q, i, x):
        return _apply_word(X, sd_generator(c, ("s", i, q)), c * (q + 1) - 1, x)

    cyc = refl = None
    if X.cyc is not None:
        def cyc(q, x):
            return X.cyc(c * (q + 1) - 1, x)
    if X.refl is not None:
        def refl(q, x):
            return X.refl(c * (q + 1) - 1, x)
    return PresentedObject(X.flavor, X.r * c, N, cells, face, degen, cyc, refl,
                           basepoint=X.basepoint, name=f"sd_{c}({X.name})")


def fixed_points(X, c):
    """Fixed points of the order-c subgroup, acting on degree n by t^{(r/c)(n+1)}.

    The result is an (r/c)-object.
    """
    if X.r % c:
        raise PreconditionError(f"order {c} does not divide r = {X.r}")
    s = X.r // c

    def cells(n):
        return [x for x in X.cells(n) if X.t_power(n, x, s * (n + 1)) == x]

    return PresentedObject(X.flavor, s, X.degrees, cells, X.face, X.degen, X.cyc, X.refl,
                           basepoint=X.basepoint, name=f"{X.name}^C{c}")


# ---------------------------------------------------------------------------
# the index category for TC

def i_category_normal_form(word, source):
    """Normal form F_s o R_r of a composable word over R_r, F_s.

    ``word`` lists ("R", r) / ("F", s) letters, leftmost applied last, and
    each letter maps the object k to k / index.  Returns (s, r, target).
    """
    obj = int(source)
    if obj < 1:
        raise ArgumentError("objects are positive integers")
    s_total = r_total = 1
    for kind, idx in reversed(list(word)):
        if kind not in ("R", "F") or idx < 1:
            raise ArgumentError(f"bad letter {(kind, idx)!r}")
        if obj % idx:
            raise ArgumentError(f"{kind}_{idx} cannot act on the object {obj}")
        obj //= idx
        if kind == "R":
            r_total *= idx
        else:
            s_total *= idx
    return s_total, r_total, obj


def i_hom(n, m):
    """All morphisms n -> m as normal forms (s, r)."""
    if n % m:
        return []
    k = n // m
    return [(s, k // s) for s in range(1, k + 1) if k % s == 0]


# ---------------------------------------------------------------------------
# verification suite

def _bracketings(word, flavor, r, rng):
    """Compose a word with a random bracketing."""
    pieces = [generator(g, flavor, r) for g in word]
    while len(pieces) > 1:
        k = rng.randrange(len(pieces) - 1)
        pieces[k:k + 2] = [cs_compose(pieces[k], pieces[k + 1])]
    return pieces[0]


def _sig_shape(f):
    return (f.source, f.target, f.flavor, f.r)


def covariant_relations(flavor, n_max):
    """Instances (name, lhs word, rhs word) of the defining relations up to degree n_max."""
    flavor = flavor_code(flavor)
    out = []
    for n in range(2, n_max + 1):
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                out.append(("δ_jδ_i=δ_iδ_{j-1}", [("d", j, n), ("d", i, n - 1)], [("d", i, n), ("d", j - 1, n - 1)]))
    for n in range(0, n_max):
        for i in range(n + 1):
            for j in range(i, n + 1):
                out.append(("σ_jσ_i=σ_iσ_{j+1}", [("s", j, n), ("s", i, n + 1)], [("s", i, n), ("s", j + 1, n + 1)]))
    for n in range(0, n_max):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = [("s", j, n), ("d", i, n + 1)]
                if i < j:
                    rhs = [("d", i, n), ("s", j - 1, n - 1)] if n >= 1 else None
                elif i in (j, j + 1):
                    rhs = []
                else:
                    rhs = [("d", i - 1, n), ("s", j, n - 1)] if n >= 1 else None
                if rhs is not None:
                    out.append(("σ_jδ_i", lhs, rhs))
    if _has_tau(flavor):
        for n in range(1, n_max + 1):
            out.append(("τδ₀=δ_n", [("t", n), ("d", 0, n)], [("d", n, n)]))
            for i in range(1, n + 1):
                out.append(("τδ_i=δ_{i-1}τ", [("t", n), ("d", i, n)], [("d", i - 1, n), ("t", n - 1)]))
        for n in range(0, n_max):
            out.append(("τσ₀=σ_nτ²", [("t", n), ("s", 0, n)], [("s", n, n), ("t", n + 1), ("t", n + 1)]))
            for i in range(1, n + 1):
                out.append(("τσ_i=σ_{i-1}τ", [("t", n), ("s", i, n)], [("s", i - 1, n), ("t", n + 1)]))
    if _has_rho(flavor):
        for n in range(1, n_max + 1):
            for i in range(n + 1):
                out.append(("ρδ_i=δ_{n-i}ρ", [("r", n), ("d", i, n)], [("d", n - i, n), ("r", n - 1)]))
        for n in range(0, n_max):
            for i in range(n + 1):
                out.append(("ρσ_i=σ_{n-i}ρ", [("r", n), ("s", i, n)], [("s", n - i, n), ("r", n + 1)]))
        for n in range(0, n_max + 1):
            out.append(("ρ²=1", [("r", n), ("r", n)], []))
            if _has_tau(flavor):
                out.append(("τρτ=ρ", [("t", n), ("r", n), ("t", n)], [("r", n)]))
    return out


def _word_source(word, fallback):
    return gen_source(word[-1]) if word else fallback


def verify_crossed_suite(r_max=3, n_max=5, samples=300, seed=0):
    rng = random.Random(seed)
    report = Report("crossed_simplicial", {"r_max": r_max, "n_max": n_max, "samples": samples}, seed)
    flavors = [("d", 1), ("T", 1)] + [(f, r) for f in ("C", "D") for r in range(1, r_max + 1)]

    for flavor, r in flavors:
        params = {"flavor": flavor, "r": r}
        # automorphism group sizes
        tal = Tally(report, "|Aut([n])|", params)
        for n in range(n_max + 1):
            want = {"d": 1, "T": 2, "C": r * (n + 1), "D": 2 * r * (n + 1)}[flavor]
            tal.check(len(set(automorphisms(n, flavor, r))) == want, [n])
        tal.close()
        # relations hold in normal form
        tal = Tally(report, "defining relations", params)
        for name, lhs, rhs in covariant_relations(flavor, n_max - 1):
            src = _word_source(lhs, None)
            left = compose_word(lhs, flavor, r)
            right = compose_word(rhs, flavor, r) if rhs else CSMorphism.identity(src, flavor, r)
            tal.check(left == right, [name, lhs, rhs])
        tal.close()
        # associativity over random bracketings and the integer model
        ta = Tally(report, "normal forms independent of bracketing", params)
        tz = Tally(report, "agrees with the periodic integer model", params)
        tf = Tally(report, "star maps factor g o phi", params)
        for _ in range(samples):
            word = random_word(flavor, r, rng.randint(0, n_max), rng.randint(1, 7), rng, n_max)
            f1 = compose_word(word, flavor, r)
            f2 = _bracketings(word, flavor, r, rng)
            ta.check(f1 == f2, [word])
            k = rng.randint(1, len(word))
            left, right = compose_word(word[:k], flavor, r), (compose_word(word[k:], flavor, r) if word[k:] else None)
            if right is not None:
                want = z_compose(z_model(left), _sig_shape(left), z_model(right), _sig_shape(right))
                tz.check(z_model(f1) == want, [word, k])
            g = rng.choice(automorphisms(f1.target, flavor, r))
            moved, pulled = star_maps(g, f1.mono)
            lhs = cs_compose(CSMorphism(MonotoneMap.identity(g.n), g), CSMorphism(f1.mono, DihedralElem(f1.source, 0, 0, flavor, r)))
            tf.check(lhs == CSMorphism(moved, pulled), [g, f1.mono])
        for tal in (ta, tz, tf):
            tal.close()
        # G_. census and identities
        table = enumerate_G(flavor, r, 3)
        counts = census_counts(table)
        want = {"d": (1, 0, 0, 0), "T": (2, 0, 0, 0), "C": (r, r, 0, 0), "D": (2 * r, 2 * r, 0, 0)}[flavor]
        report.record("G census", params, counts == want, {"counts": counts, "expected": want})
        comps, euler = components_and_euler(table)
        want_c = {"d": 1, "T": 2, "C": 1, "D": 2}[flavor]
        want_e = {"d": 1, "T": 2, "C": 0, "D": 0}[flavor]
        report.record("G components and Euler characteristic", params,
                      (comps, euler) == (want_c, want_e), {"got": [comps, euler], "expected": [want_c, want_e]})
        if flavor == "C":
            X = G_object(flavor, r, 1)
            ok = True
            for i in range(1, r + 1):
                g = DihedralElem(1, 2 * i - 1, 0, "C", r)
                ok &= X.face(1, 0, g) == DihedralElem(0, i - 1, 0, "C", r)
                ok &= X.face(1, 1, g) == DihedralElem(0, i, 0, "C", r)
            report.record("faces of tau_1^{2i-1}", params, ok, None)
        report.extend(check_identities(G_object(flavor, r, 4)))
    # subdivision respects relations
    for flavor in ("C", "D"):
        for r in (1, 2):
            for c in (1, 2, 3):
                tal = Tally(report, "sd_c maps relations to equal morphisms", {"flavor": flavor, "r": r, "c": c})
                for name, lhs, rhs in covariant_relations(flavor, 3):
                    src = _word_source(lhs, None)
                    left = compose_word(sd_word(c, lhs), flavor, r)
                    if rhs:
                        right = compose_word(sd_word(c, rhs), flavor, r)
                    else:
                        right = CSMorphism.identity(c * (src + 1) - 1, flavor, r)
                    tal.check(left == right, [name, lhs])
                tal.close()
    # the index category
    ok = all(len(i_hom(n, m)) == (sum(1 for d in range(1, n // m + 1) if (n // m) % d == 0) if n % m == 0 else 0)
             for n in range(1, 25) for m in range(1, 25))
    report.record("|Hom_I(n, m)| = number of divisors of n/m", {}, ok and len(i_hom(6, 1)) == 4, None)
    return report
