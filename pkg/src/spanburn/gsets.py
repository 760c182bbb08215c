"""Finite right G-sets, equivariant maps, limits/colimits, and bisets.

Carriers are always ``range(size)``; a GSet may carry ``labels`` recording
where its points came from (pairs for products/pullbacks, cosets for
orbits), which keeps composite constructions reproducible bit-for-bit.

A (H,G)-biset with left H-action and right G-action is handled through
its *combined* right action of the direct product H x G, acting by
``x . (h,g) = h^-1 x g``.  This turns biset orbits, maps, and
isomorphisms into plain G-set questions over the product group.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import (
    ActionsDoNotCommute,
    GroupMismatch,
    LeftActionNotFree,
    NotAnAction,
    NotEquivariant,
    TargetMismatch,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    direct_product,
    subgroup_classes,
)


class GSet:
    """A finite right G-set given by a size x |G| action table."""

    __slots__ = ("group", "size", "act_table", "labels")

    def __init__(self, group, act_table, labels=None, _validated=False):
        self.group = group
        self.act_table = tuple(tuple(row) for row in act_table)
        self.size = len(self.act_table)
        self.labels = tuple(labels) if labels is not None else tuple(range(self.size))
        if not _validated:
            self._validate()

    def _validate(self):
        G = self.group
        n = self.size
        if len(self.labels) != n:
            raise NotAnAction("labels length does not match size")
        for x, row in enumerate(self.act_table):
            if len(row) != G.order or any(not (0 <= y < n) for y in row):
                raise NotAnAction(f"action row {x} malformed")
            if row[0] != x:
                raise NotAnAction(f"identity moves point {x}")
        for x in range(n):
            for g in G.elements():
                xg = self.act_table[x][g]
                for h in G.elements():
                    if self.act_table[xg][h] != self.act_table[x][G.mul(g, h)]:
                        raise NotAnAction(
                            f"(x.g).h != x.(gh) at x={x}, g={g}, h={h}"
                        )

    def act(self, x, g):
        return self.act_table[x][g]

    def points(self):
        return range(self.size)

    def orbit_of(self, x):
        return sorted({self.act_table[x][g] for g in self.group.elements()})

    def stabilizer(self, x):
        els = [g for g in self.group.elements() if self.act_table[x][g] == x]
        return Subgroup(self.group, els, _validated=True)

    def fixed_points(self, sub):
        els = sub.elements if isinstance(sub, Subgroup) else tuple(sub)
        return [
            x for x in self.points()
            if all(self.act_table[x][g] == x for g in els)
        ]

    def is_free(self):
        return all(self.stabilizer(x).order == 1 for x in self.points())

    def is_transitive(self):
        return self.size > 0 and len(self.orbit_of(0)) == self.size

    def relabel(self, labels):
        return GSet(self.group, self.act_table, labels=labels, _validated=True)

    def __repr__(self):
        return f"<GSet size={self.size} over {self.group!r}>"


def build_gset(group, act_table, labels=None):
    """Validated GSet constructor (the public entry point)."""
    return GSet(group, act_table, labels=labels)


def empty_gset(G):
    return GSet(G, [], labels=[], _validated=True)


def trivial_gset(G, n=1):
    return GSet(G, [[x] * G.order for x in range(n)], _validated=True)


def regular_gset(G):
    return GSet(G, G.mul_table, _validated=True)


def orbit_gset(G, sub):
    """The orbit G/S as right cosets Sg, ordered by least member."""
    els = set(sub.elements)
    cosets = []
    seen = set()
    for g in G.elements():
        if g in seen:
            continue
        coset = tuple(sorted(G.mul(s, g) for s in els))
        cosets.append(coset)
        seen.update(coset)
    index = {}
    for i, c in enumerate(cosets):
        for a in c:
            index[a] = i
    act = [
        [index[G.mul(c[0], g)] for g in G.elements()]
        for c in cosets
    ]
    return GSet(G, act, labels=cosets, _validated=True)


class EquivariantMap:
    """A G-map between right G-sets, stored as a per-point table."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source, target, mapping, _validated=False):
        self.source = source
        self.target = target
        self.map = tuple(mapping)
        if not _validated:
            self._validate()

    def _validate(self):
        if self.source.group != self.target.group:
            raise GroupMismatch("source and target live over different groups")
        if len(self.map) != self.source.size:
            raise NotEquivariant("map table has wrong length")
        if any(not (0 <= y < self.target.size) for y in self.map):
            raise NotEquivariant("map table out of range")
        G = self.source.group
        for x in self.source.points():
            for g in G.elements():
                if self.map[self.source.act(x, g)] != self.target.act(self.map[x], g):
                    raise NotEquivariant(f"not equivariant at x={x}, g={g}")

    def __call__(self, x):
        return self.map[x]

    def compose(self, other):
        """self after other (other: X->Y, self: Y->Z)."""
        if other.target is not self.source and other.target.act_table != self.source.act_table:
            raise TargetMismatch("maps are not composable")
        return EquivariantMap(
            other.source, self.target,
            [self.map[y] for y in other.map], _validated=True,
        )

    def __eq__(self, other):
        return (
            isinstance(other, EquivariantMap)
            and self.map == other.map
            and self.source.act_table == other.source.act_table
            and self.target.act_table == other.target.act_table
        )

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"EquivariantMap{self.map}"


def identity_map(X):
    return EquivariantMap(X, X, range(X.size), _validated=True)


def is_epi(f):
    """Epi in Fin_G == surjective (categorical notion verified in tests)."""
    return len(set(f.map)) == f.target.size


def is_mono(f):
    return len(set(f.map)) == f.source.size


# -- orbits and canonical invariants -------------------------------------

@lru_cache(maxsize=None)
def group_context(G):
    """Cached subgroup-class data for a group."""
    subs, reps, witness = subgroup_classes(G)
    index = {s.elements: i for i, s in enumerate(subs)}
    return {
        "subgroups": subs,
        "reps": reps,
        "witness": witness,
        "index": index,
    }


def subgroup_class_id(G, sub):
    """Conjugacy-class index of a subgroup (into group_context reps)."""
    ctx = group_context(G)
    i = ctx["index"][tuple(sorted(sub.elements))]
    return ctx["witness"][i][0]


class OrbitType:
    """Stabilizer conjugacy class id with a multiplicity."""

    __slots__ = ("stabilizer_class", "multiplicity")

    def __init__(self, stabilizer_class, multiplicity=1):
        self.stabilizer_class = stabilizer_class
        self.multiplicity = multiplicity

    def key(self):
        return (self.stabilizer_class, self.multiplicity)

    def __eq__(self, other):
        return isinstance(other, OrbitType) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"OrbitType(class={self.stabilizer_class}, mult={self.multiplicity})"


def orbit_decomposition(X):
    """Orbits of X with stabilizers taken at the least orbit element.

    Returns a list of (sorted point list, stabilizer Subgroup, class id).
    """
    out = []
    seen = set()
    for x in X.points():
        if x in seen:
            continue
        orb = X.orbit_of(x)
        seen.update(orb)
        stab = X.stabilizer(orb[0])
        out.append((orb, stab, subgroup_class_id(X.group, stab)))
    return out


def orbit_type_census(X):
    """Sorted (class id, multiplicity) multiset; an isomorphism invariant."""
    counts = {}
    for _, _, cid in orbit_decomposition(X):
        counts[cid] = counts.get(cid, 0) + 1
    return tuple(sorted(counts.items()))


def gset_iso(X, Y):
    """An equivariant bijection X -> Y, or None.

    Orbit-type census decides existence; the witness is assembled by
    coset transport orbit by orbit.
    """
    if X.group != Y.group:
        raise GroupMismatch("cannot compare G-sets over different groups")
    G = X.group
    dx = orbit_decomposition(X)
    dy = orbit_decomposition(Y)
    if sorted(c for _, _, c in dx) != sorted(c for _, _, c in dy):
        return None
    by_class = {}
    for orb, stab, cid in dy:
        by_class.setdefault(cid, []).append((orb, stab))
    mapping = [None] * X.size
    for orb, stab, cid in dx:
        torb, tstab = by_class[cid].pop(0)
        x0, y0 = orb[0], torb[0]
        # find a with a^-1 Stab(y0) a == Stab(x0); then x0.g -> (y0.a).g
        a_found = None
        tset = set(tstab.elements)
        for a in G.elements():
            if {G.conj(s, a) for s in tset} == set(stab.elements):
                a_found = a
                break
        if a_found is None:  # same class id guarantees a witness
            return None
        base = Y.act(y0, a_found)
        for g in G.elements():
            mapping[X.act(x0, g)] = Y.act(base, g)
    return EquivariantMap(X, Y, mapping, _validated=True)


def equivariant_maps(X, Y):
    """All G-maps X -> Y, in a deterministic order.

    A map is fixed by a target choice per orbit whose stabilizer contains
    the orbit representative's stabilizer.
    """
    if X.group != Y.group:
        raise GroupMismatch("maps require a common group")
    G = X.group
    dec = orbit_decomposition(X)
    choices = []
    for orb, stab, _ in dec:
        sels = set(stab.elements)
        cands = [
            y for y in Y.points()
            if all(Y.act(y, s) == y for s in sels)
        ]
        choices.append((orb[0], cands))
    out = []

    def build(i, mapping):
        if i == len(choices):
            out.append(EquivariantMap(X, Y, list(mapping), _validated=True))
            return
        x0, cands = choices[i]
        for y in cands:
            m = list(mapping)
            for g in G.elements():
                m[X.act(x0, g)] = Y.act(y, g)
            build(i + 1, m)

    build(0, [None] * X.size)
    return out


# -- limits and colimits -------------------------------------------------

def pullback(f, g):
    """Pullback of f: A -> C, g: B -> C in Fin_G.

    Carrier is the lexicographically sorted list of matching pairs with
    the diagonal action; returns (P, proj1, proj2).
    """
    if f.target.act_table != g.target.act_table or f.target.group != g.target.group:
        raise TargetMismatch("pullback needs a common target")
    A, B = f.source, g.source
    G = A.group
    pairs = [
        (a, b)
        for a in A.points()
        for b in B.points()
        if f.map[a] == g.map[b]
    ]
    index = {p: i for i, p in enumerate(pairs)}
    act = [
        [index[(A.act(a, x), B.act(b, x))] for x in G.elements()]
        for (a, b) in pairs
    ]
    P = GSet(G, act, labels=pairs, _validated=True)
    p1 = EquivariantMap(P, A, [a for a, _ in pairs], _validated=True)
    p2 = EquivariantMap(P, B, [b for _, b in pairs], _validated=True)
    return P, p1, p2


def product(X, Y):
    """X x Y with the diagonal action; returns (P, proj1, proj2)."""
    if X.group != Y.group:
        raise GroupMismatch("product needs a common group")
    G = X.group
    pairs = [(x, y) for x in X.points() for y in Y.points()]
    index = {p: i for i, p in enumerate(pairs)}
    act = [
        [index[(X.act(x, g), Y.act(y, g))] for g in G.elements()]
        for (x, y) in pairs
    ]
    P = GSet(G, act, labels=pairs, _validated=True)
    p1 = EquivariantMap(P, X, [x for x, _ in pairs], _validated=True)
    p2 = EquivariantMap(P, Y, [y for _, y in pairs], _validated=True)
    return P, p1, p2


def coproduct(X, Y):
    """Disjoint union with tagged labels; returns (Z, inj1, inj2)."""
    if X.group != Y.group:
        raise GroupMismatch("coproduct needs a common group")
    G = X.group
    n = X.size
    act = [
        [X.act(x, g) for g in G.elements()] for x in X.points()
    ] + [
        [n + Y.act(y, g) for g in G.elements()] for y in Y.points()
    ]
    labels = tuple((0, l) for l in X.labels) + tuple((1, l) for l in Y.labels)
    Z = GSet(G, act, labels=labels, _validated=True)
    i1 = EquivariantMap(X, Z, range(n), _validated=True)
    i2 = EquivariantMap(Y, Z, range(n, n + Y.size), _validated=True)
    return Z, i1, i2


def coproduct_many(G, parts):
    """Iterated coproduct of a list of G-sets (empty list -> empty G-set)."""
    Z = empty_gset(G)
    injections = []
    offset = 0
    acc = []
    labels = []
    for k, X in enumerate(parts):
        for x in X.points():
            acc.append([offset + X.act(x, g) for g in G.elements()])
            labels.append((k, X.labels[x]))
        offset += X.size
    Z = GSet(G, acc, labels=labels, _validated=True)
    offset = 0
    for X in parts:
        injections.append(
            EquivariantMap(X, Z, range(offset, offset + X.size), _validated=True)
        )
        offset += X.size
    return Z, injections


def quotient_by_partition(X, blocks):
    """Quotient G-set from a G-stable partition (blocks: list of lists)."""
    G = X.group
    owner = {}
    for i, blk in enumerate(blocks):
        for x in blk:
            owner[x] = i
    act = []
    for blk in blocks:
        rep = blk[0]
        act.append([owner[X.act(rep, g)] for g in G.elements()])
    labels = tuple(tuple(sorted(b)) for b in blocks)
    Q = GSet(G, act, labels=labels, _validated=True)
    proj = EquivariantMap(X, Q, [owner[x] for x in X.points()], _validated=True)
    return Q, proj


# -- bisets --------------------------------------------------------------

class Biset:
    """A finite (L,R)-biset: left L-action and right R-action commuting."""

    __slots__ = ("left_group", "right_group", "size", "left_table",
                 "right_table", "left_free", "labels")

    def __init__(self, left_group, right_group, left_table, right_table,
                 labels=None, require_left_free=False, _validated=False):
        self.left_group = left_group
        self.right_group = right_group
        self.left_table = tuple(tuple(r) for r in left_table)
        self.right_table = tuple(tuple(r) for r in right_table)
        self.size = len(self.left_table)
        self.labels = tuple(labels) if labels is not None else tuple(range(self.size))
        if not _validated:
            self._validate()
        self.left_free = self._compute_left_free()
        if require_left_free and not self.left_free:
            raise LeftActionNotFree("left action has a nontrivial fixed point")

    def _validate(self):
        L, R = self.left_group, self.right_group
        n = self.size
        if len(self.right_table) != n:
            raise NotAnAction("left/right tables disagree on size")
        # left action: rows indexed by point, columns by L element, h.x
        for x in range(n):
            row = self.left_table[x]
            if len(row) != L.order or any(not (0 <= y < n) for y in row):
                raise NotAnAction(f"left table row {x} malformed")
            if row[0] != x:
                raise NotAnAction("left identity moves a point")
            rrow = self.right_table[x]
            if len(rrow) != R.order or any(not (0 <= y < n) for y in rrow):
                raise NotAnAction(f"right table row {x} malformed")
            if rrow[0] != x:
                raise NotAnAction("right identity moves a point")
        for x in range(n):
            for h in L.elements():
                hx = self.left_table[x][h]
                for h2 in L.elements():
                    # left action law: h2.(h.x) = (h2 h).x
                    if self.left_table[hx][h2] != self.left_table[x][L.mul(h2, h)]:
                        raise NotAnAction("left action law fails")
            for g in R.elements():
                xg = self.right_table[x][g]
                for g2 in R.elements():
                    if self.right_table[xg][g2] != self.right_table[x][R.mul(g, g2)]:
                        raise NotAnAction("right action law fails")
        for x in range(n):
            for h in L.elements():
                for g in R.elements():
                    if (
                        self.right_table[self.left_table[x][h]][g]
                        != self.left_table[self.right_table[x][g]][h]
                    ):
                        raise ActionsDoNotCommute(
                            f"h.(x.g) != (h.x).g at x={x}, h={h}, g={g}"
                        )

    def _compute_left_free(self):
        return all(
            self.left_table[x][h] != x
            for x in range(self.size)
            for h in self.left_group.elements()
            if h != 0
        )

    def left(self, h, x):
        return self.left_table[x][h]

    def right(self, x, g):
        return self.right_table[x][g]

    def points(self):
        return range(self.size)

    @property
    def combined_group(self):
        return _combined_group(self.left_group, self.right_group)

    def combined(self):
        """The underlying right (L x R)-set with x.(h,g) = h^-1 x g."""
        L, R = self.left_group, self.right_group
        J = self.combined_group
        act = [
            [
                self.right_table[self.left_table[x][L.inv(h)]][g]
                for h in L.elements()
                for g in R.elements()
            ]
            for x in self.points()
        ]
        return GSet(J, act, labels=self.labels, _validated=True)

    def __repr__(self):
        return (
            f"<Biset size={self.size} left={self.left_group!r} "
            f"right={self.right_group!r}>"
        )


@lru_cache(maxsize=None)
def _combined_group(L, R):
    return direct_product(L, R)


def build_biset(left_group, right_group, left_table, right_table,
                require_left_free=False, labels=None):
    return Biset(left_group, right_group, left_table, right_table,
                 labels=labels, require_left_free=require_left_free)


def biset_from_combined(L, R, X):
    """Recover a biset from a right (L x R)-set built by Biset.combined."""
    J = _combined_group(L, R)
    if X.group != J:
        raise GroupMismatch("combined carrier is over the wrong group")
    left = [
        [X.act(x, L.inv(h) * R.order) for h in L.elements()]
        for x in X.points()
    ]
    right = [
        [X.act(x, g) for g in R.elements()]
        for x in X.points()
    ]
    return Biset(L, R, left, right, labels=X.labels, _validated=True)


def canonical_biset(L, R):
    """The biset L^op x R: pairs (a,b), h.(a,b) = (ha,b), (a,b).g = (a,bg).

    The left L-action and right R-action are both free.
    """
    n, m = L.order, R.order
    idx = lambda a, b: a * m + b
    left = [
        [idx(L.mul(h, a), b) for h in L.elements()]
        for a in range(n) for b in range(m)
    ]
    right = [
        [idx(a, R.mul(b, g)) for g in R.elements()]
        for a in range(n) for b in range(m)
    ]
    labels = tuple((a, b) for a in range(n) for b in range(m))
    return Biset(L, R, left, right, labels=labels, _validated=True)


def conjugation_biset(G):
    """G as a (G,G)-biset: left and right multiplication."""
    left = [[G.mul(h, x) for h in G.elements()] for x in G.elements()]
    right = [[G.mul(x, g) for g in G.elements()] for x in G.elements()]
    return Biset(G, G, left, right, _validated=True)


def hom_twisted_biset(H, phi):
    """H_phi: carrier H, left mult on the left, a.g = a*phi(g) on the right."""
    G = phi.source
    left = [[H.mul(h, a) for h in H.elements()] for a in H.elements()]
    right = [[H.mul(a, phi(g)) for g in G.elements()] for a in H.elements()]
    return Biset(H, G, left, right, _validated=True)


def separable_biset(G, T):
    """G x T with g.(a,t).h = (ga, t.h); T is a right H-set."""
    H = T.group
    m = T.size
    idx = lambda a, t: a * m + t
    left = [
        [idx(G.mul(g, a), t) for g in G.elements()]
        for a in G.elements() for t in T.points()
    ]
    right = [
        [idx(a, T.act(t, h)) for h in H.elements()]
        for a in G.elements() for t in T.points()
    ]
    labels = tuple((a, T.labels[t]) for a in G.elements() for t in T.points())
    return Biset(G, H, left, right, labels=labels, _validated=True)


class BisetMap:
    """A map of bisets (equivariant on both sides)."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source, target, mapping, _validated=False):
        self.source = source
        self.target = target
        self.map = tuple(mapping)
        if not _validated:
            self._validate()

    def _validate(self):
        X, Y = self.source, self.target
        if X.left_group != Y.left_group or X.right_group != Y.right_group:
            raise GroupMismatch("biset map requires matching groups")
        if len(self.map) != X.size:
            raise NotEquivariant("map table has wrong length")
        for x in X.points():
            for h in X.left_group.elements():
                if self.map[X.left(h, x)] != Y.left(h, self.map[x]):
                    raise NotEquivariant("not left-equivariant")
            for g in X.right_group.elements():
                if self.map[X.right(x, g)] != Y.right(self.map[x], g):
                    raise NotEquivariant("not right-equivariant")

    def __call__(self, x):
        return self.map[x]

    def compose(self, other):
        return BisetMap(other.source, self.target,
                        [self.map[y] for y in other.map], _validated=True)

    def __eq__(self, other):
        return (
            isinstance(other, BisetMap)
            and self.map == other.map
            and self.source.left_table == other.source.left_table
            and self.source.right_table == other.source.right_table
            and self.target.left_table == other.target.left_table
            and self.target.right_table == other.target.right_table
        )

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"BisetMap{self.map}"


def biset_maps(X, Y):
    """All biset maps X -> Y via the combined right action."""
    fs = equivariant_maps(X.combined(), Y.combined())
    return [BisetMap(X, Y, f.map, _validated=True) for f in fs]


def biset_iso(X, Y):
    """A biset isomorphism X -> Y, or None (combined-action transport)."""
    f = gset_iso(X.combined(), Y.combined())
    if f is None:
        return None
    return BisetMap(X, Y, f.map, _validated=True)


def is_separable(X):
    """Separability witness for a left-free biset.

    Returns the right-group-set T with X isomorphic to (left group) x T,
    or None.  Criterion: no nonidentity left element g admits x, h with
    g.x.h = x.
    """
    if not X.left_free:
        raise LeftActionNotFree("separability is defined for left-free bisets")
    L, R = X.left_group, X.right_group
    for x in X.points():
        for g in L.elements():
            if g == 0:
                continue
            for h in R.elements():
                if X.right(X.left(g, x), h) == x:
                    return None
    T = left_orbit_space(X)
    return T


def left_orbit_space(X):
    """The quotient of a biset by its left action, as a right R-set."""
    R = X.right_group
    seen = set()
    blocks = []
    for x in X.points():
        if x in seen:
            continue
        blk = sorted({X.left(h, x) for h in X.left_group.elements()})
        blocks.append(blk)
        seen.update(blk)
    owner = {}
    for i, blk in enumerate(blocks):
        for x in blk:
            owner[x] = i
    act = [
        [owner[X.right(blk[0], g)] for g in R.elements()]
        for blk in blocks
    ]
    labels = tuple(tuple(b) for b in blocks)
    return GSet(R, act, labels=labels, _validated=True)


class BiOrbitType:
    """Combined-orbit classification of a left-free biset orbit.

    ``subgroup`` K sits inside the right group, ``hom`` maps K to the left
    group; the orbit is L x R/K with l(a, Kb)k = (l a hom(k), K b).
    Types are compared up to conjugacy of hom in the left group only.
    """

    __slots__ = ("subgroup", "hom")

    def __init__(self, subgroup, hom):
        self.subgroup = subgroup
        self.hom = hom

    def size(self, L, R):
        return L.order * (R.order // self.subgroup.order)

    def same_type(self, other):
        if self.subgroup.elements != other.subgroup.elements:
            return False
        L = self.hom.target
        K = self.subgroup.elements
        for c in L.elements():
            if all(L.conj(self.hom(k), c) == other.hom(k) for k in K):
                return True
        return False

    def __repr__(self):
        return f"BiOrbitType(K={self.subgroup.elements}, phi={self.hom.map})"


def biset_orbit_types(X):
    """Classify each combined orbit of a left-free biset.

    Returns a list of (orbit point list, BiOrbitType).
    """
    if not X.left_free:
        raise LeftActionNotFree("orbit types require a free left action")
    L, R = X.left_group, X.right_group
    seen = set()
    out = []
    for x0 in X.points():
        if x0 in seen:
            continue
        orbit = sorted({
            X.right(X.left(h, x0), g)
            for h in L.elements() for g in R.elements()
        })
        seen.update(orbit)
        left_orbit = {X.left(h, x0) for h in L.elements()}
        k_els = [g for g in R.elements() if X.right(x0, g) in left_orbit]
        K = Subgroup(R, k_els, _validated=True)
        phi = {}
        for k in k_els:
            xk = X.right(x0, k)
            for l in L.elements():
                if X.left(l, x0) == xk:
                    phi[k] = l
                    break
        sub_group, to_parent = K.as_group()
        table = [phi[to_parent[i]] for i in range(K.order)]
        hom = GroupHom(sub_group, L, table, _validated=True)
        out.append((orbit, BiOrbitType(K, hom)))
    return out


def biset_from_orbit_type(L, R, otype):
    """Rebuild the transitive biset L x R/K from an orbit type."""
    K = otype.subgroup
    hom = otype.hom
    sub_group, to_parent = K.as_group()
    to_sub = {a: i for i, a in enumerate(to_parent)}
    # right cosets Kb of K in R, ordered by least member
    els = set(K.elements)
    cosets = []
    seen = set()
    for b in R.elements():
        if b in seen:
            continue
        coset = tuple(sorted(R.mul(k, b) for k in els))
        cosets.append(coset)
        seen.update(coset)
    coset_of = {}
    for i, c in enumerate(cosets):
        for a in c:
            coset_of[a] = i
    m = len(cosets)
    idx = lambda a, c: a * m + c
    left = [
        [idx(L.mul(l, a), c) for l in L.elements()]
        for a in L.elements() for c in range(m)
    ]
    right = [[0] * R.order for _ in range(L.order * m)]
    for a in L.elements():
        for c in range(m):
            b = cosets[c][0]
            for g in R.elements():
                bg = R.mul(b, g)
                c2 = coset_of[bg]
                k = R.mul(bg, R.inv(cosets[c2][0]))
                # b g = k b'' with k in K; the twist moves phi(k) right of a
                a2 = L.mul(a, hom(to_sub[k]))
                right[idx(a, c)][g] = idx(a2, c2)
    labels = tuple((a, cosets[c]) for a in L.elements() for c in range(m))
    return Biset(L, R, left, right, labels=labels, _validated=True)
