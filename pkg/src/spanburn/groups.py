"""Finite groups given by complete multiplication tables.

Element ids are 0..order-1 and the identity is always id 0.  All group
axioms are checked exhaustively at construction time, which is cheap at
the desk-scale orders (<= 24) this package targets.
"""

from __future__ import annotations

import itertools
from functools import cached_property

from .errors import (
    CapExceeded,
    GeneratorClosureOverflow,
    NoIdentity,
    NoInverse,
    NonAssociative,
)

DEFAULT_CLOSURE_CAP = 10080


class FiniteGroup:
    """A finite group as a validated Cayley table.

    Immutable after construction; safe to share between workers.
    """

    __slots__ = ("order", "mul_table", "inv_table", "name", "__dict__")

    def __init__(self, mul_table, name=None, _validated=False):
        mul_table = tuple(tuple(row) for row in mul_table)
        n = len(mul_table)
        self.order = n
        self.mul_table = mul_table
        self.name = name
        if not _validated:
            self._validate()
        self.inv_table = self._compute_inverses()

    def _validate(self):
        n = self.order
        if n == 0:
            raise NoIdentity("a group must contain an identity element")
        for row in self.mul_table:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise NonAssociative("multiplication table is not square over 0..n-1")
        mul = self.mul_table
        # identity must be element 0 and two-sided
        if any(mul[0][a] != a or mul[a][0] != a for a in range(n)):
            raise NoIdentity("element 0 is not a two-sided identity")
        for a in range(n):
            for b in range(n):
                ab = mul[a][b]
                for c in range(n):
                    if mul[ab][c] != mul[a][mul[b][c]]:
                        raise NonAssociative(
                            f"associativity fails at ({a},{b},{c})"
                        )

    def _compute_inverses(self):
        n = self.order
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.mul_table[a][b] == 0 and self.mul_table[b][a] == 0:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise NoInverse(f"element {a} has no two-sided inverse")
        return tuple(inv)

    # -- basic operations ------------------------------------------------
    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        return self.inv_table[a]

    def conj(self, a, g):
        """g^-1 * a * g."""
        return self.mul_table[self.mul_table[self.inv_table[g]][a]][g]

    def elements(self):
        return range(self.order)

    def element_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.mul_table[x][a]
            k += 1
        return k

    @cached_property
    def order_profile(self):
        """Multiset of element orders; a cheap isomorphism invariant."""
        return tuple(sorted(self.element_order(a) for a in self.elements()))

    def is_abelian(self):
        return all(
            self.mul_table[a][b] == self.mul_table[b][a]
            for a in range(self.order)
            for b in range(a)
        )

    def opposite(self, name=None):
        """The opposite group (transposed Cayley table)."""
        n = self.order
        table = [[self.mul_table[b][a] for b in range(n)] for a in range(n)]
        nm = name or (f"{self.name}^op" if self.name else None)
        return FiniteGroup(table, name=nm, _validated=True)

    def __repr__(self):
        nm = self.name or "group"
        return f"<{nm} of order {self.order}>"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.mul_table == other.mul_table

    def __hash__(self):
        return hash(self.mul_table)


class Subgroup:
    """A subgroup of a parent group, stored as a sorted element-id tuple."""

    __slots__ = ("parent", "elements")

    def __init__(self, parent, elements, _validated=False):
        self.parent = parent
        self.elements = tuple(sorted(elements))
        if not _validated:
            self._validate()

    def _validate(self):
        els = set(self.elements)
        G = self.parent
        if 0 not in els:
            raise NoIdentity("subgroup must contain the identity")
        for a in self.elements:
            if G.inv(a) not in els:
                raise NoInverse(f"subgroup not closed under inverse of {a}")
            for b in self.elements:
                if G.mul(a, b) not in els:
                    raise NonAssociative(f"subgroup not closed under {a}*{b}")
        if G.order % len(self.elements) != 0:
            raise NonAssociative("subgroup order does not divide group order")

    @property
    def order(self):
        return len(self.elements)

    def contains(self, a):
        return a in set(self.elements)

    def conjugate(self, g):
        """The subgroup g^-1 S g."""
        G = self.parent
        return Subgroup(G, [G.conj(a, g) for a in self.elements], _validated=True)

    def as_group(self):
        """Relabel this subgroup as a standalone FiniteGroup.

        Returns (group, to_parent) where to_parent[i] is the parent id of
        element i.  The identity lands at id 0.
        """
        els = [0] + [a for a in self.elements if a != 0]
        index = {a: i for i, a in enumerate(els)}
        G = self.parent
        table = [[index[G.mul(a, b)] for b in els] for a in els]
        return FiniteGroup(table, _validated=True), tuple(els)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Subgroup{self.elements}"


class GroupHom:
    """A homomorphism between finite groups, as a per-element table."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source, target, mapping, _validated=False):
        self.source = source
        self.target = target
        self.map = tuple(mapping)
        if not _validated:
            self._validate()

    def _validate(self):
        if len(self.map) != self.source.order:
            raise NonAssociative("homomorphism table has wrong length")
        if self.map[0] != 0:
            raise NoIdentity("homomorphism must send identity to identity")
        for a in range(self.source.order):
            for b in range(self.source.order):
                if self.map[self.source.mul(a, b)] != self.target.mul(
                    self.map[a], self.map[b]
                ):
                    raise NonAssociative(f"map({a}*{b}) != map({a})*map({b})")

    def __call__(self, a):
        return self.map[a]

    def __eq__(self, other):
        return (
            isinstance(other, GroupHom)
            and self.source == other.source
            and self.target == other.target
            and self.map == other.map
        )

    def __hash__(self):
        return hash((self.map, self.target.order))

    def __repr__(self):
        return f"GroupHom{self.map}"


# -- construction --------------------------------------------------------

def build_group(mul_table=None, *, generators=None, degree=None, name=None,
                closure_cap=DEFAULT_CLOSURE_CAP):
    """Build a validated group from a Cayley table or permutation generators.

    ``generators`` is a list of permutations of range(degree), each given
    as an image tuple.  The generated group is closed under composition;
    exceeding ``closure_cap`` elements raises GeneratorClosureOverflow.
    """
    if mul_table is not None:
        return FiniteGroup(mul_table, name=name)
    if generators is None:
        raise NoIdentity("either a Cayley table or generators are required")
    if degree is None:
        degree = max((len(p) for p in generators), default=0)
    perms = [tuple(p) for p in generators]
    for p in perms:
        if sorted(p) != list(range(degree)):
            raise NotImplementedError(
                f"generator {p} is not a permutation of range({degree})"
            )
    ident = tuple(range(degree))
    els = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for p in frontier:
            for q in perms:
                r = tuple(p[q[i]] for i in range(degree))
                if r not in seen:
                    seen.add(r)
                    els.append(r)
                    new.append(r)
                    if len(els) > closure_cap:
                        raise GeneratorClosureOverflow(
                            f"generated group exceeds cap {closure_cap}"
                        )
        frontier = new
    index = {p: i for i, p in enumerate(els)}
    n = len(els)
    table = [[0] * n for _ in range(n)]
    for i, p in enumerate(els):
        for j, q in enumerate(els):
            # (p then q) as right-to-left function composition q(p(x)) keeps
            # the table consistent with acting on points from the right
            table[i][j] = index[tuple(q[p[x]] for x in range(degree))]
    return FiniteGroup(table, name=name)


def direct_product(G, H, name=None):
    """G x H with element id a*|H| + b for (a, b)."""
    n, m = G.order, H.order
    table = [[0] * (n * m) for _ in range(n * m)]
    for a in range(n):
        for b in range(m):
            for c in range(n):
                for d in range(m):
                    table[a * m + b][c * m + d] = G.mul(a, c) * m + H.mul(b, d)
    nm = name or (f"{G.name}x{H.name}" if G.name and H.name else None)
    return FiniteGroup(table, name=nm, _validated=True)


def product_pair(G, H, x):
    """Decompose a direct-product element id into (a, b)."""
    return divmod(x, H.order)


def product_id(G, H, a, b):
    return a * H.order + b


# -- closure and subgroup enumeration ------------------------------------

def closure(G, seed):
    """Smallest subset of G containing seed and closed under mul/inv."""
    els = set(seed) | {0}
    frontier = list(els)
    while frontier:
        new = []
        for a in frontier:
            ia = G.inv(a)
            if ia not in els:
                els.add(ia)
                new.append(ia)
            for b in list(els):
                for c in (G.mul(a, b), G.mul(b, a)):
                    if c not in els:
                        els.add(c)
                        new.append(c)
        frontier = new
    return frozenset(els)


def all_subgroups(G):
    """Every subgroup of G, sorted by (order, element tuple).

    BFS on closures: start from cyclic subgroups and extend each known
    subgroup by one extra generator until a fixed point.
    """
    found = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        new = []
        for S in frontier:
            for g in G.elements():
                if g in S:
                    continue
                T = closure(G, S | {g})
                if T not in found:
                    found.add(T)
                    new.append(T)
        frontier = new
    subs = [Subgroup(G, s, _validated=True) for s in found]
    subs.sort(key=lambda s: (s.order, s.elements))
    return subs


def subgroup_classes(G):
    """All subgroups, conjugacy-class representatives, and witnesses.

    Returns (subgroups, reps, witness) where witness maps each subgroup
    index to (rep_index, g) with rep == subgroups[i].conjugate(g).
    """
    subs = all_subgroups(G)
    index = {s.elements: i for i, s in enumerate(subs)}
    assigned = {}
    reps = []
    for i, s in enumerate(subs):
        if i in assigned:
            continue
        rep_idx = len(reps)
        reps.append(s)
        for g in G.elements():
            j = index[s.conjugate(g).elements]
            if j not in assigned:
                # rep = subs[j].conjugate(g^-1): undo the conjugation
                assigned[j] = (rep_idx, G.inv(g))
    witness = {}
    for i in range(len(subs)):
        rep_idx, g = assigned[i]
        witness[i] = (rep_idx, g)
    return subs, reps, witness


def conjugacy_classes(G):
    """Partition of element ids into conjugacy classes (identity first)."""
    seen = set()
    classes = []
    for a in G.elements():
        if a in seen:
            continue
        cls = sorted({G.conj(a, g) for g in G.elements()})
        classes.append(tuple(cls))
        seen.update(cls)
    return classes


def centralizer(G, a):
    return [g for g in G.elements() if G.mul(g, a) == G.mul(a, g)]


def normalizer(G, S):
    els = set(S.elements)
    return [
        g
        for g in G.elements()
        if {G.conj(a, g) for a in S.elements} == els
    ]


# -- homomorphisms -------------------------------------------------------

DEFAULT_HOM_CAP = 4096


def generating_sequence(G):
    """A small generating sequence, found greedily."""
    gens = []
    span = closure(G, [])
    for a in sorted(G.elements(), key=lambda x: -G.element_order(x)):
        if a not in span:
            gens.append(a)
            span = closure(G, span | {a})
            if len(span) == G.order:
                break
    return gens


def enumerate_homomorphisms(K, G, product_cap=DEFAULT_HOM_CAP):
    """All homomorphisms K -> G in a deterministic order."""
    if K.order * G.order > product_cap:
        raise CapExceeded(
            f"|K|*|G| = {K.order * G.order} exceeds cap {product_cap}"
        )
    gens = generating_sequence(K)
    if not gens:
        return [GroupHom(K, G, [0], _validated=True)] if K.order == 1 else []
    # express every element as a word in the generators once
    words = {0: ()}
    frontier = [0]
    while frontier:
        new = []
        for a in frontier:
            for gi, g in enumerate(gens):
                b = K.mul(a, g)
                if b not in words:
                    words[b] = words[a] + (gi,)
                    new.append(b)
        frontier = new
    homs = []
    for images in itertools.product(range(G.order), repeat=len(gens)):
        # element orders must be compatible; quick prune
        if any(
            K.element_order(g) % G.element_order(im)
            for g, im in zip(gens, images)
        ):
            continue
        table = [0] * K.order
        ok = True
        for a in range(K.order):
            x = 0
            for gi in words[a]:
                x = G.mul(x, images[gi])
            table[a] = x
        for a in range(K.order):
            for b in range(K.order):
                if table[K.mul(a, b)] != G.mul(table[a], table[b]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            homs.append(GroupHom(K, G, table, _validated=True))
    # dedupe (distinct generator images can induce the same map)
    seen = set()
    out = []
    for h in homs:
        if h.map not in seen:
            seen.add(h.map)
            out.append(h)
    out.sort(key=lambda h: h.map)
    return out


# -- isomorphism (internal only; small orders) ---------------------------

def find_isomorphism(G, H):
    """An isomorphism table G -> H, or None.  Backtracking; tiny orders."""
    if G.order != H.order or G.order_profile != H.order_profile:
        return None
    gens = generating_sequence(G)
    n = G.order
    by_order_H = {}
    for x in H.elements():
        by_order_H.setdefault(H.element_order(x), []).append(x)

    def extend(mapping, gi):
        if gi == len(gens):
            return dict(mapping)
        g = gens[gi]
        for x in by_order_H.get(G.element_order(g), []):
            new = dict(mapping)
            ok = True
            # close the partial map under multiplication
            frontier = [(g, x)]
            if g in new:
                if new[g] != x:
                    continue
                frontier = []
            else:
                new[g] = x
            while frontier and ok:
                more = []
                for a, fa in frontier:
                    for b in list(new):
                        for c, fc in (
                            (G.mul(a, b), H.mul(fa, new[b])),
                            (G.mul(b, a), H.mul(new[b], fa)),
                        ):
                            if c in new:
                                if new[c] != fc:
                                    ok = False
                                    break
                            else:
                                new[c] = fc
                                more.append((c, fc))
                        if not ok:
                            break
                    if not ok:
                        break
                frontier = more
            if not ok or len(set(new.values())) != len(new):
                continue
            result = extend(new, gi + 1)
            if result is not None:
                return result
        return None

    mapping = extend({0: 0}, 0)
    if mapping is None or len(mapping) != n:
        return None
    table = tuple(mapping[a] for a in range(n))
    if len(set(table)) != n:
        return None
    for a in range(n):
        for b in range(n):
            if table[G.mul(a, b)] != H.mul(table[a], table[b]):
                return None
    return table


def is_isomorphic(G, H):
    return find_isomorphism(G, H) is not None
