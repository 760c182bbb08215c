"""Spans of finite G-sets: composition by pullback, isomorphism classes,
hom monoids, the matrix bridge at the trivial group, and leg-structured
subcategories.

A span X <- A -> Y is classified, orbit by orbit of the apex, by where
the orbit lands in the fixed product carrier X x Y and by its stabilizer
transported to the base point of that product orbit.  Stabilizers are
canonicalized up to conjugacy inside the base point's stabilizer, which
is exactly the isomorphism relation over fixed feet (the backtracking
oracle in the tests validates this).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import FeetMismatch, GroupMismatch, NontrivialGroup
from .groups import Subgroup, all_subgroups
from .gsets import (
    EquivariantMap,
    GSet,
    coproduct,
    empty_gset,
    identity_map,
    is_epi,
    is_mono,
    orbit_gset,
    product,
    pullback,
)


class Span:
    """A span left <- apex -> right in Fin_G."""

    __slots__ = ("left", "right", "apex", "leg_left", "leg_right")

    def __init__(self, leg_left, leg_right):
        if leg_left.source is not leg_right.source and (
            leg_left.source.act_table != leg_right.source.act_table
        ):
            raise FeetMismatch("legs must share an apex")
        if leg_left.source.group != leg_right.source.group:
            raise GroupMismatch("span objects must live over one group")
        self.apex = leg_left.source
        self.left = leg_left.target
        self.right = leg_right.target
        self.leg_left = leg_left
        self.leg_right = leg_right

    @property
    def group(self):
        return self.apex.group

    def __repr__(self):
        return (
            f"<Span {self.left.size} <- {self.apex.size} -> {self.right.size}>"
        )


def build_span(leg_left, leg_right):
    return Span(leg_left, leg_right)


def identity_span(X):
    i = identity_map(X)
    return Span(i, i)


def empty_span(X, Y):
    E = empty_gset(X.group)
    return Span(
        EquivariantMap(E, X, [], _validated=True),
        EquivariantMap(E, Y, [], _validated=True),
    )


def fin_span(n_left, n_right, pairs):
    """A span of plain finite sets from a list of (left, right) pairs."""
    from .catalog import trivial_group

    T = trivial_group()
    X = GSet(T, [[x] for x in range(n_left)], _validated=True)
    Y = GSet(T, [[y] for y in range(n_right)], _validated=True)
    pairs = list(pairs)
    A = GSet(T, [[i] for i in range(len(pairs))], labels=pairs, _validated=True)
    return Span(
        EquivariantMap(A, X, [p[0] for p in pairs], _validated=True),
        EquivariantMap(A, Y, [p[1] for p in pairs], _validated=True),
    )


def graph_span(f):
    """The span X <- X -> Y of an equivariant map f: X -> Y."""
    return Span(identity_map(f.source), f)


def cograph_span(f):
    """The span Y <- X -> X of an equivariant map f: X -> Y."""
    return Span(f, identity_map(f.source))


def compose_spans(s, t):
    """Composite of s: X -> Y and t: Y -> Z by pullback over Y."""
    if (
        s.right.group != t.left.group
        or s.right.act_table != t.left.act_table
    ):
        raise FeetMismatch("right foot of s must equal left foot of t")
    P, p1, p2 = pullback(s.leg_right, t.leg_left)
    return Span(s.leg_left.compose(p1), t.leg_right.compose(p2))


def add_spans(s, t):
    """Pointwise sum: disjoint union of apexes over the same feet."""
    if (
        s.left.act_table != t.left.act_table
        or s.right.act_table != t.right.act_table
        or s.group != t.group
    ):
        raise FeetMismatch("sum requires equal feet")
    Z, i1, i2 = coproduct(s.apex, t.apex)
    ll = [0] * Z.size
    lr = [0] * Z.size
    for a in s.apex.points():
        ll[i1(a)] = s.leg_left(a)
        lr[i1(a)] = s.leg_right(a)
    for a in t.apex.points():
        ll[i2(a)] = t.leg_left(a)
        lr[i2(a)] = t.leg_right(a)
    return Span(
        EquivariantMap(Z, s.left, ll, _validated=True),
        EquivariantMap(Z, s.right, lr, _validated=True),
    )


# -- isomorphism classes -------------------------------------------------

@lru_cache(maxsize=None)
def _stab_subgroup_classes(G, stab_elements):
    """Subgroups of a stabilizer up to conjugacy inside it.

    Returns a dict mapping each subgroup (parent-id tuple) to the least
    tuple in its conjugacy class under the stabilizer.
    """
    T = Subgroup(G, stab_elements, _validated=True)
    TG, to_parent = T.as_group()
    canon = {}
    for S in all_subgroups(TG):
        parent = tuple(sorted(to_parent[i] for i in S.elements))
        if parent in canon:
            continue
        cls = {
            tuple(sorted(G.conj(a, t) for a in parent))
            for t in stab_elements
        }
        best = min(cls)
        for c in cls:
            canon[c] = best
    return canon


class SpanClass:
    """Canonical form of a span over fixed feet.

    ``canonical`` is a sorted tuple of ((base product point, canonical
    stabilizer tuple), multiplicity) entries, one per apex orbit shape.
    ``feet`` records the two action tables, so classes from different
    hom sets never compare equal.
    """

    __slots__ = ("group_order", "canonical", "feet")

    def __init__(self, group_order, canonical, feet=None):
        self.group_order = group_order
        self.canonical = tuple(canonical)
        self.feet = feet

    def apex_size(self):
        total = 0
        for (_, stab), mult in self.canonical:
            total += mult * (self.group_order // len(stab))
        return total

    def add(self, other):
        if other.feet != self.feet:
            raise FeetMismatch("cannot add classes over different feet")
        counts = dict(self.canonical)
        for unit, mult in other.canonical:
            counts[unit] = counts.get(unit, 0) + mult
        return SpanClass(self.group_order, sorted(counts.items()), self.feet)

    def key(self):
        return (self.apex_size(), self.canonical)

    def __eq__(self, other):
        return (
            isinstance(other, SpanClass)
            and self.canonical == other.canonical
            and self.group_order == other.group_order
            and self.feet == other.feet
        )

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash((self.group_order, self.canonical))

    def __repr__(self):
        return f"SpanClass{self.canonical}"


def span_class(s):
    """Canonical isomorphism class of a span over its fixed feet."""
    G = s.group
    X, Y = s.left, s.right
    ny = Y.size
    # fixed product carrier: pair (x, y) has id x*|Y| + y
    counts = {}
    seen = set()
    A = s.apex
    for a0 in A.points():
        if a0 in seen:
            continue
        orbit = A.orbit_of(a0)
        seen.update(orbit)
        a0 = orbit[0]
        # image points in the product carrier, tracking the group element
        img0 = s.leg_left(a0) * ny + s.leg_right(a0)
        best = None
        for g in G.elements():
            ag = A.act(a0, g)
            img = s.leg_left(ag) * ny + s.leg_right(ag)
            if best is None or img < best[0]:
                best = (img, g)
        p_min, g0 = best
        x_min, y_min = divmod(p_min, ny)
        stab_p = tuple(
            h for h in G.elements()
            if X.act(x_min, h) == x_min and Y.act(y_min, h) == y_min
        )
        a_base = A.act(a0, g0)
        S = tuple(h for h in stab_p if A.act(a_base, h) == a_base)
        canon = _stab_subgroup_classes(G, stab_p)[S]
        unit = (p_min, canon)
        counts[unit] = counts.get(unit, 0) + 1
    return SpanClass(G.order, sorted(counts.items()),
                     feet=(X.act_table, Y.act_table))


def spans_isomorphic(s, t):
    """Backtracking oracle: an apex bijection commuting with both legs.

    Independent of span_class; used to validate the canonical form.
    """
    if (
        s.left.act_table != t.left.act_table
        or s.right.act_table != t.right.act_table
        or s.group != t.group
    ):
        return False
    A, B = s.apex, t.apex
    if A.size != B.size:
        return False
    G = s.group
    mapping = [None] * A.size
    used = [False] * B.size

    def undo(placed):
        for x in placed:
            used[mapping[x]] = False
            mapping[x] = None

    def place(a, b):
        """Extend mapping by the whole orbit of a; None on conflict."""
        placed = []
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            if mapping[x] is not None:
                if mapping[x] != y:
                    undo(placed)
                    return None
                continue
            if used[y] or (
                s.leg_left(x) != t.leg_left(y)
                or s.leg_right(x) != t.leg_right(y)
            ):
                undo(placed)
                return None
            mapping[x] = y
            used[y] = True
            placed.append(x)
            for g in G.elements():
                stack.append((A.act(x, g), B.act(y, g)))
        return placed

    def search(a):
        while a < A.size and mapping[a] is not None:
            a += 1
        if a == A.size:
            return True
        for b in B.points():
            if used[b]:
                continue
            placed = place(a, b)
            if placed is None:
                continue
            if search(a + 1):
                return True
            undo(placed)
        return False

    return search(0)


def realize_class(G, X, Y, cls):
    """A concrete span over feet X, Y representing a SpanClass."""
    parts = []
    ny = Y.size
    for (p_min, stab), mult in cls.canonical:
        x_min, y_min = divmod(p_min, ny)
        S = Subgroup(G, stab, _validated=True)
        O = orbit_gset(G, S)
        ll = [0] * O.size
        lr = [0] * O.size
        for c in O.points():
            g = O.labels[c][0]  # least coset member: S g, image p_min . g
            ll[c] = X.act(x_min, g)
            lr[c] = Y.act(y_min, g)
        part = Span(
            EquivariantMap(O, X, ll, _validated=True),
            EquivariantMap(O, Y, lr, _validated=True),
        )
        for _ in range(mult):
            parts.append(part)
    out = empty_span(X, Y)
    for p in parts:
        out = add_spans(out, p)
    return out


# -- hom monoids ---------------------------------------------------------

class HomMonoid:
    """All span classes X -> Y with apex size below a bound."""

    __slots__ = ("left", "right", "apex_bound", "classes", "generators")

    def __init__(self, left, right, apex_bound, classes, generators):
        self.left = left
        self.right = right
        self.apex_bound = apex_bound
        self.classes = classes
        self.generators = generators

    def unit(self):
        return SpanClass(self.left.group.order, (),
                         feet=(self.left.act_table, self.right.act_table))

    def __len__(self):
        return len(self.classes)


def hom_basis(X, Y):
    """Transitive-apex span classes X -> Y, sorted canonically.

    One generator per (product orbit, stabilizer subgroup up to conjugacy
    in the base point's stabilizer).
    """
    if X.group != Y.group:
        raise GroupMismatch("hom requires a common group")
    G = X.group
    ny = Y.size
    units = []
    seen = set()
    for x in X.points():
        for y in Y.points():
            p = x * ny + y
            if p in seen:
                continue
            orbit = sorted(
                X.act(x, g) * ny + Y.act(y, g) for g in G.elements()
            )
            seen.update(orbit)
            p_min = orbit[0]
            x_min, y_min = divmod(p_min, ny)
            stab_p = tuple(
                h for h in G.elements()
                if X.act(x_min, h) == x_min and Y.act(y_min, h) == y_min
            )
            canon = _stab_subgroup_classes(G, stab_p)
            for S in sorted(set(canon.values())):
                units.append((p_min, S))
    units.sort()
    feet = (X.act_table, Y.act_table)
    return [SpanClass(G.order, [(u, 1)], feet=feet) for u in units]


def hom_monoid(X, Y, apex_bound):
    """Enumerate Hom(X, Y) classes with apex size <= apex_bound."""
    gens = hom_basis(X, Y)
    sizes = [g.apex_size() for g in gens]
    out = []

    def extend(i, current, budget):
        out.append(current)
        for j in range(i, len(gens)):
            if sizes[j] <= budget:
                extend(j, current.add(gens[j]), budget - sizes[j])

    extend(0, SpanClass(X.group.order, (), feet=(X.act_table, Y.act_table)),
           apex_bound)
    out.sort(key=lambda c: c.key())
    return HomMonoid(X, Y, apex_bound, out, gens)


# -- the matrix bridge (trivial group) -----------------------------------

class NatMatrix:
    """A rows x cols matrix of nonnegative integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = tuple(tuple(r) for r in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0

    def mul(self, other):
        if self.cols != other.rows:
            from .errors import ShapeMismatch

            raise ShapeMismatch("matrix shapes incompatible")
        return NatMatrix([
            [
                sum(self.entries[i][k] * other.entries[k][j]
                    for k in range(self.cols))
                for j in range(other.cols)
            ]
            for i in range(self.rows)
        ])

    def __eq__(self, other):
        return isinstance(other, NatMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"NatMatrix{list(map(list, self.entries))}"


def span_to_matrix(s):
    """Fiber-count matrix of a span of plain sets.

    Rows index the right foot, columns the left foot, so composing spans
    corresponds to multiplying the second matrix by the first.
    """
    if s.group.order != 1:
        raise NontrivialGroup("the matrix bridge needs the trivial group")
    m = [[0] * s.left.size for _ in range(s.right.size)]
    for a in s.apex.points():
        m[s.leg_right(a)][s.leg_left(a)] += 1
    return NatMatrix(m)


def matrix_to_span(M):
    """A span of plain sets with the given fiber counts.

    Apex points are laid out in (column, row) lexicographic order.
    """
    from .catalog import trivial_group

    pairs = []
    for i in range(M.cols):
        for j in range(M.rows):
            pairs.extend([(i, j)] * M.entries[j][i])
    return fin_span(M.cols, M.rows, pairs)


# -- structured subcategories --------------------------------------------

LEG_TYPES = ("bijective", "injective", "arbitrary")


def _leg_type(f):
    if is_mono(f):
        return "bijective" if is_epi(f) else "injective"
    return "arbitrary"


def _leg_satisfies(f, required):
    if required == "arbitrary":
        return True
    if required == "injective":
        return is_mono(f)
    return is_mono(f) and is_epi(f)


def structured_span_type(s):
    """Finest (left, right) leg type of a span."""
    return (_leg_type(s.leg_left), _leg_type(s.leg_right))


def span_satisfies(s, p, q):
    return _leg_satisfies(s.leg_left, p) and _leg_satisfies(s.leg_right, q)


def check_closure(p, q, corpus):
    """Compose all composable (p,q) pairs in corpus; report violations."""
    members = [s for s in corpus if span_satisfies(s, p, q)]
    pairs = 0
    violations = []
    for s in members:
        for t in members:
            if (
                s.right.group != t.left.group
                or s.right.act_table != t.left.act_table
            ):
                continue
            pairs += 1
            c = compose_spans(s, t)
            if not span_satisfies(c, p, q):
                violations.append((s, t, structured_span_type(c)))
    return {
        "type": (p, q),
        "members": len(members),
        "pairs": pairs,
        "violations": violations,
        "closed": not violations,
    }
