"""Words in right-angled Coxeter groups and the involution operad built from them.

A letter is a triple ``(summand, label, slot)``.  Every letter is an
involution.  Two letters commute when their slots differ and either they come
from different summands or their labels are declared orthogonal.  A context
lists the summands (each a label set with an orthogonality relation) and the
number of slots.

Words are stored in a canonical form: reduced (no letter can be cancelled
against an equal one by commuting moves) and lexicographically least among
all reduced words reachable by swapping adjacent commuting letters.
"""

import itertools
import random

from .errors import ArgumentError, InvariantError, PreconditionError
from .perm_core import (Operad, Permutation, SignedPerm, as_perm, hyper_compose_i, perm_compose_i,
                        sign_insert)
from .reports import Report, Tally


# ---------------------------------------------------------------------------
# contexts

class CommutationContext:
    """Summands of labels with orthogonality, plus a slot count."""

    __slots__ = ("summands", "slots", "_index", "_perp")

    def __init__(self, summands, slots):
        table = {}
        for name, (labels, perp) in dict(summands).items():
            labels = tuple(labels)
            if len(set(labels)) != len(labels):
                raise InvariantError(f"repeated label in summand {name!r}")
            pairs = set()
            for a, b in perp:
                if a not in labels or b not in labels:
                    raise InvariantError(f"orthogonality mentions unknown label in {name!r}")
                if a == b:
                    raise InvariantError("a label cannot be orthogonal to itself")
                pairs.add((a, b))
                pairs.add((b, a))
            table[name] = (labels, frozenset(pairs))
        if slots < 0:
            raise InvariantError("slot count must be non-negative")
        self.summands = table
        self.slots = int(slots)
        self._index = {(name, lab): t for name, (labels, _) in table.items()
                       for t, lab in enumerate(labels)}
        self._perp = {name: perp for name, (_, perp) in table.items()}

    @classmethod
    def simple(cls, labels, perp=(), slots=1, name="V"):
        return cls({name: (labels, perp)}, slots)

    @classmethod
    def parse(cls, text, name="V"):
        """Read ``labels=a,b,c`` / ``perp=a-b`` / ``slots=j`` lines."""
        labels, perp, slots = None, [], 1
        for raw in text.replace(";", "\n").splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key == "labels":
                labels = [s.strip() for s in value.split(",") if s.strip()]
            elif key == "perp":
                for item in value.split(","):
                    if item.strip():
                        a, b = item.strip().split("-")
                        perp.append((a.strip(), b.strip()))
            elif key == "slots":
                slots = int(value)
            else:
                raise ArgumentError(f"unknown context key {key!r}")
        if labels is None:
            raise ArgumentError("context needs a labels= line")
        return cls.simple(labels, perp, slots, name)

    def with_slots(self, slots):
        return CommutationContext({n: (l, p) for n, (l, p) in self.summands.items()}, slots)

    def renamed(self, name):
        """Copy of a single-summand context under a different summand name."""
        if len(self.summands) != 1:
            raise ArgumentError("only single-summand contexts can be renamed")
        (labels, perp), = self.summands.values()
        return CommutationContext({name: (labels, perp)}, self.slots)

    def direct_sum(self, other, slots):
        """Union of summands; a shared name must carry identical data."""
        table = dict(self.summands)
        for name, data in other.summands.items():
            if name in table and table[name] != data:
                raise ArgumentError(f"summand {name!r} appears with different data")
            table[name] = data
        return CommutationContext(table, slots)

    def contains(self, other):
        return all(self.summands.get(n) == d for n, d in other.summands.items())

    def letter_key(self, letter):
        s, lab, r = letter
        return (s, self._index[(s, lab)], r)

    def check_letter(self, letter):
        try:
            s, lab, r = letter
        except (TypeError, ValueError):
            raise ArgumentError(f"malformed letter {letter!r}") from None
        if (s, lab) not in self._index:
            raise ArgumentError(f"letter {letter!r} uses an unknown label")
        if not 1 <= r <= self.slots:
            raise ArgumentError(f"letter {letter!r} has slot outside 1..{self.slots}")

    def commute(self, a, b):
        if a[2] == b[2]:
            return False
        if a[0] != b[0]:
            return True
        return (a[1], b[1]) in self._perp[a[0]]

    def letters(self):
        for name, (labels, _) in self.summands.items():
            for lab in labels:
                for r in range(1, self.slots + 1):
                    yield (name, lab, r)

    def __eq__(self, other):
        return (isinstance(other, CommutationContext) and self.slots == other.slots
                and self.summands == other.summands)

    def __hash__(self):
        return hash((self.slots, tuple(sorted(self.summands.items(), key=lambda kv: repr(kv[0])))))

    def __repr__(self):
        names = ",".join(map(str, self.summands))
        return f"CommutationContext([{names}], slots={self.slots})"


def default_context(slots=1, name="V"):
    """Three labels a, b, c with the single orthogonal pair a-b."""
    return CommutationContext.simple(("a", "b", "c"), [("a", "b")], slots, name)


# ---------------------------------------------------------------------------
# normal forms

def _reduce(raw, ctx):
    out = []
    commute = ctx.commute
    for x in raw:
        q = len(out) - 1
        while q >= 0:
            y = out[q]
            if y == x:
                del out[q]
                break
            if not commute(x, y):
                out.append(x)
                break
            q -= 1
        else:
            out.append(x)
    return out


def _lex_least(word, ctx):
    """Lexicographically least rearrangement by commuting moves."""
    n = len(word)
    if n < 2:
        return tuple(word)
    commute = ctx.commute
    keys = [ctx.letter_key(x) for x in word]
    later_blocked = [[] for _ in range(n)]
    blockers = [0] * n
    for p in range(n):
        for q in range(p + 1, n):
            if not commute(word[p], word[q]):
                later_blocked[p].append(q)
                blockers[q] += 1
    alive = [True] * n
    out = []
    for _ in range(n):
        best = -1
        for p in range(n):
            if alive[p] and blockers[p] == 0 and (best < 0 or keys[p] < keys[best]):
                best = p
        alive[best] = False
        out.append(word[best])
        for q in later_blocked[best]:
            blockers[q] -= 1
    return tuple(out)


class DnWord:
    """A group element in canonical form together with its context."""

    __slots__ = ("letters", "ctx")

    def __init__(self, letters, ctx):
        self.letters = letters
        self.ctx = ctx

    @property
    def slots(self):
        return self.ctx.slots

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        return word_mul(self, other)

    def inverse(self):
        return normalize(tuple(reversed(self.letters)), self.ctx)

    def key(self):
        return tuple(self.ctx.letter_key(x) for x in self.letters)

    def __eq__(self, other):
        return isinstance(other, DnWord) and self.letters == other.letters and self.ctx == other.ctx

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        body = "".join(f"({s}:{lab},{r})" for s, lab, r in self.letters) or "1"
        return f"DnWord[{body}; slots={self.ctx.slots}]"

    def to_plain(self):
        return {"letters": [list(x) for x in self.letters], "slots": self.ctx.slots}


def normalize(raw, ctx, check=True):
    raw = tuple(tuple(x) for x in raw)
    if check:
        for x in raw:
            ctx.check_letter(x)
    return DnWord(_lex_least(_reduce(raw, ctx), ctx), ctx)


def identity_word(ctx):
    return DnWord((), ctx)


def word(ctx, *letters):
    """Convenience constructor; letters may be (label, slot) for single-summand contexts."""
    if len(ctx.summands) == 1:
        (name,) = ctx.summands
        letters = [x if len(x) == 3 else (name,) + tuple(x) for x in letters]
    return normalize(letters, ctx)


def _same_ctx(x, y):
    if x.ctx != y.ctx:
        raise ArgumentError("words live in different contexts")


def word_mul(x, y):
    _same_ctx(x, y)
    return normalize(x.letters + y.letters, x.ctx, check=False)


def word_eq(x, y):
    _same_ctx(x, y)
    return x.letters == y.letters


def parity_map(x):
    """Slot-wise parity of letter counts, as a tuple of +1/-1."""
    signs = [1] * x.ctx.slots
    for _, _, r in x.letters:
        signs[r - 1] = -signs[r - 1]
    return tuple(signs)


def parity_at(letters, slot):
    count = sum(1 for x in letters if x[2] == slot)
    return -1 if count % 2 else 1


def shift_embed(y, i, target):
    """Move the slots of y up by i - 1 inside the larger context ``target``."""
    if not target.contains(y.ctx.with_slots(target.slots)):
        raise ArgumentError("target context does not contain the summands of y")
    if y.ctx.slots + i - 1 > target.slots:
        raise ArgumentError("shifted slots exceed the target context")
    return normalize([(s, lab, r + i - 1) for s, lab, r in y.letters], target, check=False)


def _bar_letters(letters, i, k):
    out = []
    for s, lab, r in letters:
        if i <= r < k + i:
            r = k + 2 * i - r - 1
        out.append((s, lab, r))
    return out


def bar_automorphism(z, i, k):
    """Reverse the block of slots i..i+k-1."""
    if i < 1 or i + k - 1 > z.ctx.slots:
        raise InvariantError(f"block {i}..{i + k - 1} does not fit in {z.ctx.slots} slots")
    return normalize(_bar_letters(z.letters, i, k), z.ctx, check=False)


def vdash_action(x, z, i, bar=None):
    """Left action of the word x (j slots) on z (j + k - 1 slots) at slot i."""
    bar = bar or bar_automorphism
    j = x.ctx.slots
    n = z.ctx.slots
    k = n - j + 1
    if k < 0:
        raise ArgumentError("z has too few slots for this action")
    if not 1 <= i <= j:
        raise ArgumentError(f"slot {i} out of range 1..{j}")
    if not z.ctx.contains(x.ctx.with_slots(n)):
        raise ArgumentError("z's context does not contain x's summands")
    ctx = z.ctx
    cur = z
    for s, lab, r in reversed(x.letters):
        if r < i:
            cur = normalize(((s, lab, r),) + cur.letters, ctx, check=False)
        elif r == i:
            block = tuple((s, lab, i + k - 1 - t) for t in range(k))
            cur = normalize(block + bar(cur, i, k).letters, ctx, check=False)
        else:
            cur = normalize(((s, lab, r + k - 1),) + cur.letters, ctx, check=False)
    return cur


def circ_context(x, y):
    return x.ctx.direct_sum(y.ctx, x.ctx.slots + y.ctx.slots - 1)


def dn_circ_i(x, y, i, bar=None):
    """x o_i y = x |-_i c_i(y)."""
    if not 1 <= i <= x.ctx.slots:
        raise ArgumentError(f"slot {i} out of range 1..{x.ctx.slots}")
    target = circ_context(x, y)
    return vdash_action(x, shift_embed(y, i, target), i, bar=bar)


# ---------------------------------------------------------------------------
# the operad on pairs (word, permutation)

class DnOperadElement:
    __slots__ = ("word", "perm")

    def __init__(self, word, perm):
        perm = as_perm(perm)
        if len(perm) != word.ctx.slots:
            raise InvariantError("permutation degree must equal the slot count")
        self.word = word
        self.perm = perm

    @property
    def arity(self):
        return len(self.perm)

    def act(self, sigma):
        return DnOperadElement(self.word, self.perm * sigma)

    def key(self):
        return (self.word.key(), self.perm.images)

    def __eq__(self, other):
        return (isinstance(other, DnOperadElement) and self.word == other.word
                and self.perm == other.perm)

    def __hash__(self):
        return hash((self.word, self.perm))

    def __repr__(self):
        return f"({self.word!r}, {list(self.perm.images)})"

    def to_plain(self):
        return {"word": self.word.to_plain(), "perm": list(self.perm.images)}


def dn_pair_circ_i(a, b, i, bar=None):
    """(x, r) o_i (y, u) = (x o_{r(i)} y, r o_i (tau_k(p_{r(i)}(x)) u))."""
    j = a.arity
    if not 1 <= i <= j:
        raise ArgumentError(f"slot {i} out of range 1..{j}")
    p = a.perm(i)
    k = b.arity
    ups = b.perm
    if parity_at(a.word.letters, p) == -1:
        ups = Permutation.reversal(k) * ups
    return DnOperadElement(dn_circ_i(a.word, b.word, p, bar=bar), perm_compose_i(a.perm, ups, i))


def to_hyperoctahedral(a):
    return SignedPerm(parity_map(a.word), a.perm)


def random_word(ctx, rng, max_len=8, summands=None):
    letters = [x for x in ctx.letters() if summands is None or x[0] in summands]
    if not letters:
        return identity_word(ctx)
    n = rng.randint(0, max_len)
    return normalize([rng.choice(letters) for _ in range(n)], ctx, check=False)


def random_element(ctx, rng, max_len=8):
    return DnOperadElement(random_word(ctx, rng, max_len), Permutation.random(ctx.slots, rng))


class DnOperad(Operad):
    """The word operad as a discrete operad, up to renaming of summands.

    Summands are numbered 0, 1, ...; each is a copy of one base label set.
    Composition puts the summands of the second argument after those of the
    first.  Elements are compared after dropping unused summands and choosing
    the numbering that gives the least canonical word, which identifies the
    two sides of every associativity square.
    """

    name = "D"

    def __init__(self, base=None, max_len=6):
        base = base or default_context()
        (labels, perp), = base.summands.values()
        self.labels = labels
        self.perp = tuple(p for p in perp if p[0] < p[1]) or tuple(perp)
        self.max_len = max_len

    def context(self, n_summands, slots):
        return CommutationContext({s: (self.labels, self.perp) for s in range(n_summands)}, slots)

    def canonical(self, a):
        used = sorted({x[0] for x in a.word.letters})
        ctx = self.context(len(used), a.word.ctx.slots)
        best = None
        for order in itertools.permutations(range(len(used))):
            rename = dict(zip(used, order))
            w = normalize([(rename[s], lab, r) for s, lab, r in a.word.letters], ctx, check=False)
            if best is None or w.key() < best.key():
                best = w
        return DnOperadElement(best, a.perm)

    def _count(self, a):
        return len(a.word.ctx.summands)

    def compose(self, a, b, i):
        off = self._count(a)
        n_b = self._count(b)
        shifted = CommutationContext({s + off: (self.labels, self.perp) for s in range(n_b)},
                                     b.word.ctx.slots)
        moved = normalize([(s + off, lab, r) for s, lab, r in b.word.letters], shifted, check=False)
        return self.canonical(dn_pair_circ_i(a, DnOperadElement(moved, b.perm), i))

    def act(self, a, sigma):
        return a.act(sigma)

    def arity(self, a):
        return a.arity

    def key(self, a):
        return a.key()

    @property
    def unit(self):
        return DnOperadElement(identity_word(self.context(0, 1)), Permutation.identity(1))

    @property
    def zero(self):
        return DnOperadElement(identity_word(self.context(0, 0)), Permutation.identity(0))

    def sample(self, k, rng):
        ctx = self.context(1, k)
        return self.canonical(DnOperadElement(random_word(ctx, rng, self.max_len),
                                              Permutation.random(k, rng)))


# ---------------------------------------------------------------------------
# finite loop models and the algebra action

class LoopModel:
    """A finite group acting through labelled anti-homomorphisms on a finite set.

    ``interpretation[label][g]`` is a permutation of ``range(vhat)`` given as
    a tuple; it must satisfy phi(g h) = phi(h) phi(g), phi(g^-1) = phi(g)^-1
    and phi(g) psi(h) = psi(h) phi(g) for orthogonal labels.
    """

    def __init__(self, elements, mul_table, inv_table, identity, vhat, interpretation):
        self.elements = list(elements)
        self.mul_table = mul_table
        self.inv_table = inv_table
        self.identity = identity
        self.vhat = vhat
        self.interpretation = interpretation

    def mul(self, g, h):
        return self.mul_table[g][h]

    def inv(self, g):
        return self.inv_table[g]

    def prod(self, gs):
        acc = self.identity
        for g in gs:
            acc = self.mul_table[acc][g]
        return acc

    def phi(self, label, g, sign=1):
        p = self.interpretation[label][g]
        if sign == -1:
            inv = [0] * len(p)
            for t, v in enumerate(p):
                inv[v] = t
            p = tuple(inv)
        return p

    def validate(self, ctx=None):
        n = len(self.elements)
        for label, table in self.interpretation.items():
            for g in range(n):
                pg = table[g]
                if sorted(pg) != list(range(self.vhat)):
                    raise PreconditionError(f"interpretation of {label} at {g} is not a permutation")
                if table[self.inv_table[g]] != self.phi(label, g, -1):
                    raise PreconditionError(f"phi_{label}(g^-1) != phi_{label}(g)^-1 at {g}")
                for h in range(n):
                    lhs = table[self.mul_table[g][h]]
                    ph = table[h]
                    rhs = tuple(ph[pg[v]] for v in range(self.vhat))
                    if lhs != rhs:
                        raise PreconditionError(f"phi_{label} is not an anti-homomorphism at {(g, h)}")
        if ctx is not None:
            for name, (labels, perp) in ctx.summands.items():
                for lab in labels:
                    if lab not in self.interpretation:
                        raise PreconditionError(f"label {lab!r} has no interpretation")
                for a, b in perp:
                    for g in range(n):
                        for h in range(n):
                            pa = self.interpretation[a][g]
                            pb = self.interpretation[b][h]
                            if any(pa[pb[v]] != pb[pa[v]] for v in range(self.vhat)):
                                raise PreconditionError(f"orthogonal labels {a}, {b} do not commute")
        return True


def default_loop_model():
    """S_3 acting on {0, 1, 2, 3}.

    Label c acts through the standard action on {0, 1, 2} (via g -> g^-1, so
    that it is an anti-homomorphism).  Labels a and b act through the sign,
    by the commuting transpositions (0 3) and (1 2).
    """
    elements = list(itertools.permutations(range(3)))
    index = {g: t for t, g in enumerate(elements)}

    def compose(g, h):
        return tuple(g[h[v]] for v in range(3))

    def invert(g):
        out = [0] * 3
        for t, v in enumerate(g):
            out[v] = t
        return tuple(out)

    def sign(g):
        inversions = sum(1 for p in range(3) for q in range(p + 1, 3) if g[p] > g[q])
        return -1 if inversions % 2 else 1

    mul = [[index[compose(g, h)] for h in elements] for g in elements]
    inv = [index[invert(g)] for g in elements]
    ident = index[(0, 1, 2)]
    interp = {"a": [], "b": [], "c": []}
    for g in elements:
        gi = invert(g)
        interp["c"].append(gi + (3,))
        odd = sign(g) == -1
        interp["a"].append((3, 1, 2, 0) if odd else (0, 1, 2, 3))
        interp["b"].append((0, 2, 1, 3) if odd else (0, 1, 2, 3))
    return LoopModel(elements, mul, inv, ident, 4, interp)


def abelian_loop_model():
    """C_6 acting on {0, 1, 2, 3}; anti-homomorphisms are homomorphisms here.

    Label c rotates {0, 1, 2} by g mod 3, labels a and b act through g mod 2
    by (0 3) and (1 2).
    """
    elements = list(range(6))
    mul = [[(g + h) % 6 for h in elements] for g in elements]
    inv = [(-g) % 6 for g in elements]
    interp = {"a": [], "b": [], "c": []}
    for g in elements:
        interp["c"].append(tuple((v + g) % 3 for v in range(3)) + (3,))
        interp["a"].append((3, 1, 2, 0) if g % 2 else (0, 1, 2, 3))
        interp["b"].append((0, 2, 1, 3) if g % 2 else (0, 1, 2, 3))
    return LoopModel(elements, mul, inv, 0, 4, interp)


def _state_dict(state, ctx):
    if isinstance(state, dict):
        return dict(state)
    if len(ctx.summands) != 1:
        raise ArgumentError("a multi-summand context needs one vector per summand")
    (name,) = ctx.summands
    return {name: state}


def dn_algebra_action(a, state, gs, model):
    """Evaluate the action on a loop tuple and a vector.

    Returns (product of the adjusted loops, new vector).  The vector is one
    element of the finite set per summand (a plain int is accepted for a
    single summand context).
    """
    j = a.arity
    if len(gs) != j:
        raise ArgumentError(f"expected {j} loops, got {len(gs)}")
    ctx = a.word.ctx
    v = _state_dict(state, ctx)
    letters = a.word.letters
    inv = a.perm.inverse()
    loops = [gs[inv(s) - 1] for s in range(1, j + 1)]
    parity = parity_map(a.word)
    deltas = [model.inv(g) if parity[s] == -1 else g for s, g in enumerate(loops)]
    # the rightmost letter acts first; eps_t is the parity of the later letters in slot r_t
    tail = [1] * (j + 1)
    for s_name, lab, r in reversed(letters):
        eps = tail[r]
        p = model.phi(lab, loops[r - 1], eps)
        v[s_name] = p[v[s_name]]
        tail[r] = -tail[r]
    out_state = v if isinstance(state, dict) else v[next(iter(ctx.summands))]
    return model.prod(deltas), out_state


def simulate_action(letters, perm, state, gs, model, ctx):
    """Reference evaluation by letting the letters act one at a time.

    Works on any letter sequence, reduced or not.
    """
    perm = as_perm(perm)
    j = len(perm)
    v = _state_dict(state, ctx)
    inv = perm.inverse()
    loops = [gs[inv(s) - 1] for s in range(1, j + 1)]
    maps = {name: tuple(range(model.vhat)) for name in ctx.summands}
    for s_name, lab, r in reversed(tuple(letters)):
        p = model.phi(lab, loops[r - 1])
        f = maps[s_name]
        maps[s_name] = tuple(p[f[t]] for t in range(model.vhat))
        loops[r - 1] = model.inv(loops[r - 1])
    out = {name: maps[name][v[name]] for name in ctx.summands}
    out_state = out if isinstance(state, dict) else out[next(iter(ctx.summands))]
    return model.prod(loops), out_state


# ---------------------------------------------------------------------------
# randomized verification

def _flip_parity(x, slot, ctx, rng, name):
    lab = rng.choice(ctx.summands[name][0])
    return word_mul(x, normalize([(name, lab, slot)], x.ctx, check=False))


def _rounds(tallies, samples, cap=60):
    """Keep drawing until every tally has seen ``samples`` instances."""
    tallies = list(tallies)
    n = 0
    while min(t.count for t in tallies) < samples and n < cap * samples:
        n += 1
        yield n


def verify_dn_suite(ctx=None, model=None, samples=1000, seed=0, bar=None, max_len=8, max_slots=3):
    """Randomized verification of the word calculus.

    Each identity is checked on ``samples`` random instances drawn with a
    fixed seed.  ``bar`` replaces the bar automorphism (negative control).
    """
    base = ctx or default_context()
    model = model or default_loop_model()
    model.validate(base)
    rng = random.Random(seed)
    report = Report("dn_words", {"samples": samples, "max_len": max_len, "max_slots": max_slots}, seed)
    V = base.renamed("V")
    W = base.renamed("W")
    U = base.renamed("U")
    vname, wname = "V", "W"

    def rw(c, slots, length=max_len):
        return random_word(c.with_slots(slots), rng, length)

    def circ(x, y, i):
        return dn_circ_i(x, y, i, bar=bar)

    def pair(a, b, i):
        return dn_pair_circ_i(a, b, i, bar=bar)

    def gen(c, name, slot):
        return (name, rng.choice(c.summands[name][0]), slot)

    # eleven formulas --------------------------------------------------------
    t = {n: Tally(report, f"circ formula {n}", {}) for n in
         ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi")}
    for _ in _rounds(t.values(), samples):
        j = rng.randint(1, max_slots)
        k = rng.randint(0, max_slots)
        i = rng.randint(1, j)
        one_v = identity_word(V.with_slots(j))
        one_w = identity_word(W.with_slots(k))
        t["i"].check(len(circ(one_v, one_w, i)) == 0, [j, k, i])
        x = rw(V, j)
        tgt = V.with_slots(j).direct_sum(W.with_slots(k), j + k - 1)
        z = random_word(tgt, rng, max_len)
        want = 1 if rng.random() < 0.5 else -1
        if parity_at(x.letters, i) != want:
            x = _flip_parity(x, i, V, rng, vname)
        x1 = circ(x, one_w, i)
        lhs = vdash_action(x, z, i, bar=bar)
        if want == 1:
            t["ii"].check(lhs == word_mul(x1, z), [x, z, i])
        else:
            t["iii"].check(lhs == word_mul(x1, bar_automorphism(z, i, k)), [x, z, i])
        # letter appended at slot i
        phi = gen(V, vname, i)
        xg = word_mul(x, normalize([phi], x.ctx, check=False))
        got = circ(xg, one_w, i)
        if want == 1:
            block = [(vname, phi[1], i + k - 1 - s) for s in range(k)]
            t["v"].check(got == word_mul(x1, normalize(block, tgt, check=False)), [x, phi, i, k])
        else:
            block = [(vname, phi[1], i + s) for s in range(k)]
            t["vi"].check(got == word_mul(x1, normalize(block, tgt, check=False)), [x, phi, i, k])
        # letters away from slot i
        if i > 1:
            r = rng.randint(1, i - 1)
            phi = gen(V, vname, r)
            xg = word_mul(x, normalize([phi], x.ctx, check=False))
            t["iv"].check(circ(xg, one_w, i) == word_mul(x1, normalize([phi], tgt, check=False)),
                          [x, phi, i, k])
            y = rw(W, k)
            t["x"].check(circ(xg, y, i) == word_mul(circ(x, y, i), normalize([phi], tgt, check=False)),
                         [x, phi, y, i])
        if i < j:
            r = rng.randint(i + 1, j)
            phi = gen(V, vname, r)
            xg = word_mul(x, normalize([phi], x.ctx, check=False))
            moved = normalize([(vname, phi[1], r + k - 1)], tgt, check=False)
            t["vii"].check(circ(xg, one_w, i) == word_mul(x1, moved), [x, phi, i, k])
            y = rw(W, k)
            t["xi"].check(circ(xg, y, i) == word_mul(circ(x, y, i), moved), [x, phi, y, i])
        if k >= 1:
            y = rw(W, k)
            rp = rng.randint(1, k)
            psi = gen(W, wname, rp)
            yg = word_mul(y, normalize([psi], y.ctx, check=False))
            lhs = circ(x, yg, i)
            if want == 1:
                tail = normalize([(wname, psi[1], rp + i - 1)], tgt, check=False)
                t["viii"].check(lhs == word_mul(circ(x, y, i), tail), [x, y, psi, i])
            else:
                tail = normalize([(wname, psi[1], k + i - rp)], tgt, check=False)
                t["ix"].check(lhs == word_mul(circ(x, y, i), tail), [x, y, psi, i])
    for tal in t.values():
        tal.close()

    # group laws, parity, bar, c_i, action laws ------------------------------
    tp = Tally(report, "parity is a homomorphism", {})
    tm = Tally(report, "length(xy) <= length(x) + length(y)", {})
    tb = Tally(report, "bar is an involution", {})
    tc = Tally(report, "c_i is injective", {})
    ta = Tally(report, "vdash is an action", {})
    for _ in range(samples):
        j = rng.randint(1, max_slots)
        k = rng.randint(0, max_slots)
        i = rng.randint(1, j)
        x, x2 = rw(V, j), rw(V, j)
        xy = word_mul(x, x2)
        tp.check(parity_map(xy) == tuple(a * b for a, b in zip(parity_map(x), parity_map(x2))), [x, x2])
        tm.check(len(xy) <= len(x) + len(x2), [x, x2])
        tgt = V.with_slots(j).direct_sum(W.with_slots(k), j + k - 1)
        z = random_word(tgt, rng, max_len)
        tb.check(bar_automorphism(bar_automorphism(z, i, k), i, k) == z, [z, i, k])
        y1, y2 = rw(W, k), rw(W, k)
        same = shift_embed(y1, i, tgt) == shift_embed(y2, i, tgt)
        tc.check(same == (y1 == y2), [y1, y2, i])
        ta.check(vdash_action(xy, z, i, bar=bar)
                 == vdash_action(x, vdash_action(x2, z, i, bar=bar), i, bar=bar), [x, x2, z, i])
    for tal in (tp, tm, tb, tc, ta):
        tal.close()

    # p and o interact -------------------------------------------------------
    tpc = Tally(report, "parity of o_i", {})
    for _ in range(samples):
        j = rng.randint(1, max_slots)
        k = rng.randint(0, max_slots)
        i = rng.randint(1, j)
        x, y = rw(V, j), rw(W, k)
        got = parity_map(circ(x, y, i))
        px, py = parity_map(x), parity_map(y)
        want = []
        for h in range(1, j + k):
            if h < i:
                want.append(px[h - 1])
            elif h < i + k:
                want.append(py[h - i] if px[i - 1] == 1 else -py[i + k - h - 1])
            else:
                want.append(px[h - k])
        tpc.check(got == tuple(want) == sign_insert(px, py, i), [x, y, i])
    tpc.close()

    # word associativity (four cases) ----------------------------------------
    names = {"lt": "associativity h<i", "mid+": "associativity i<=h<i+k, p=1",
             "mid-": "associativity i<=h<i+k, p=-1", "gt": "associativity h>=i+k"}
    tw = {n: Tally(report, c, {}) for n, c in names.items()}
    for _ in _rounds(tw.values(), samples):
        j = rng.randint(1, max_slots)
        k = rng.randint(0, max_slots)
        l = rng.randint(0, max_slots)
        if j + k - 1 < 1:
            continue
        i = rng.randint(1, j)
        h = rng.randint(1, j + k - 1)
        x, y, z = rw(V, j), rw(W, k), rw(U, l)
        lhs = circ(circ(x, y, i), z, h)
        if h < i:
            tw["lt"].check(lhs == circ(circ(x, z, h), y, i + l - 1), [x, y, z, i, h])
        elif h < i + k:
            if parity_at(x.letters, i) == 1:
                tw["mid+"].check(lhs == circ(x, circ(y, z, h - i + 1), i), [x, y, z, i, h])
            else:
                tw["mid-"].check(lhs == circ(x, circ(y, z, i + k - h), i), [x, y, z, i, h])
        else:
            tw["gt"].check(lhs == circ(circ(x, z, h - k + 1), y, i), [x, y, z, i, h])
    for tal in tw.values():
        tal.close()

    # pairs: associativity, equivariance, unit, map to signed permutations ---
    tpa = {n: Tally(report, f"pair associativity {n}", {}) for n in ("h<i", "i<=h<i+k", "h>=i+k")}
    teq = Tally(report, "pair equivariance", {})
    tun = Tally(report, "pair unit", {})
    tmo = Tally(report, "to_H is an operad map", {})
    for _ in _rounds(list(tpa.values()) + [teq], samples):
        j = rng.randint(1, max_slots)
        k = rng.randint(0, max_slots)
        l = rng.randint(0, max_slots)
        i = rng.randint(1, j)
        a = DnOperadElement(rw(V, j), Permutation.random(j, rng))
        b = DnOperadElement(rw(W, k), Permutation.random(k, rng))
        c = DnOperadElement(rw(U, l), Permutation.random(l, rng))
        ab = pair(a, b, i)
        if j + k - 1 >= 1:
            h = rng.randint(1, j + k - 1)
            lhs = pair(ab, c, h)
            if h < i:
                tpa["h<i"].check(lhs == pair(pair(a, c, h), b, i + l - 1), [a, b, c, i, h])
            elif h < i + k:
                tpa["i<=h<i+k"].check(lhs == pair(a, pair(b, c, h - i + 1), i), [a, b, c, i, h])
            else:
                tpa["h>=i+k"].check(lhs == pair(pair(a, c, h - k + 1), b, i), [a, b, c, i, h])
        s, u = Permutation.random(j, rng), Permutation.random(k, rng)
        teq.check(pair(a.act(s), b.act(u), i) == pair(a, b, s(i)).act(perm_compose_i(s, u, i)),
                  [a, b, s, u, i])
        one = DnOperadElement(identity_word(W.with_slots(1)), Permutation.identity(1))
        right, left = pair(a, one, i), pair(one, a, 1)
        tun.check(right.perm == a.perm and right.word.letters == a.word.letters
                  and left.perm == a.perm and left.word.letters == a.word.letters, [a, i])
        tmo.check(to_hyperoctahedral(ab) == hyper_compose_i(to_hyperoctahedral(a), to_hyperoctahedral(b), i),
                  [a, b, i])
    for tal in list(tpa.values()) + [teq, tun, tmo]:
        tal.close()

    # algebra action on the loop model --------------------------------------
    tacts = Tally(report, "theta acts", {})
    tunit = Tally(report, "theta unit", {})
    tequi = Tally(report, "theta equivariance", {})
    tsim = Tally(report, "explicit formula = letter-by-letter action", {})
    twd = Tally(report, "action well defined on word classes", {})
    G = len(model.elements)
    for _ in range(samples):
        j = rng.randint(1, max_slots)
        k = rng.randint(0, max_slots)
        i = rng.randint(1, j)
        a = DnOperadElement(rw(V, j), Permutation.random(j, rng))
        b = DnOperadElement(rw(W, k), Permutation.random(k, rng))
        gs = tuple(rng.randrange(G) for _ in range(j + k - 1))
        v, w = rng.randrange(model.vhat), rng.randrange(model.vhat)
        ab = pair(a, b, i)
        lhs = dn_algebra_action(ab, {"V": v, "W": w}, gs, model)
        g_in, w2 = dn_algebra_action(b, w, gs[i - 1:i - 1 + k], model)
        g_out, v2 = dn_algebra_action(a, v, gs[:i - 1] + (g_in,) + gs[i - 1 + k:], model)
        tacts.check(lhs == (g_out, {"V": v2, "W": w2}), [a, b, i, list(gs), v, w])
        g1 = rng.randrange(G)
        unit = DnOperadElement(identity_word(V.with_slots(1)), Permutation.identity(1))
        tunit.check(dn_algebra_action(unit, v, (g1,), model) == (g1, v), [g1, v])
        s = Permutation.random(j, rng)
        gj = gs[:j] if len(gs) >= j else tuple(rng.randrange(G) for _ in range(j))
        tequi.check(dn_algebra_action(a.act(s), v, gj, model) == dn_algebra_action(a, v, s.act(gj), model),
                    [a, s, list(gj), v])
        tsim.check(dn_algebra_action(a, v, gj, model)
                   == simulate_action(a.word.letters, a.perm, v, gj, model, a.word.ctx), [a, list(gj), v])
        # an unreduced spelling of the same element
        raw = list(a.word.letters)
        for _ in range(3):
            letter = rng.choice(list(a.word.ctx.letters()))
            pos = rng.randint(0, len(raw))
            raw[pos:pos] = [letter, letter]
        for _ in range(4):
            if len(raw) >= 2:
                p = rng.randrange(len(raw) - 1)
                if a.word.ctx.commute(raw[p], raw[p + 1]):
                    raw[p], raw[p + 1] = raw[p + 1], raw[p]
        ok = (normalize(raw, a.word.ctx) == a.word
              and simulate_action(raw, a.perm, v, gj, model, a.word.ctx) == dn_algebra_action(a, v, gj, model))
        twd.check(ok, [a, raw])
    for tal in (tacts, tunit, tequi, tsim, twd):
        tal.close()
    return report


# ---------------------------------------------------------------------------
# brute-force oracle for normal forms

def rewrite_oracle(raw, ctx, _memo=None):
    """Least (length, lexicographic key) word reachable by commuting swaps and
    deletions of adjacent equal pairs.  Independent of ``normalize``.
    """
    memo = {} if _memo is None else _memo
    raw = tuple(raw)
    # the class of words reachable by swaps alone
    seen = {raw}
    frontier = [raw]
    while frontier:
        nxt = []
        for w in frontier:
            for p in range(len(w) - 1):
                if ctx.commute(w[p], w[p + 1]):
                    v = w[:p] + (w[p + 1], w[p]) + w[p + 2:]
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        frontier = nxt

    def score(w):
        return (len(w), tuple(ctx.letter_key(x) for x in w))

    rep = min(seen, key=score)
    if rep in memo:
        return memo[rep]
    best = rep
    for w in seen:
        for p in range(len(w) - 1):
            if w[p] == w[p + 1]:
                cand = rewrite_oracle(w[:p] + w[p + 2:], ctx, memo)
                if score(cand) < score(best):
                    best = cand
    memo[rep] = best
    return best
