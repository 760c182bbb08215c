import itertools
import random

import pytest

from spanburn.catalog import cyclic, dihedral, symmetric, trivial_group
from spanburn.errors import FeetMismatch, NontrivialGroup
from spanburn.groups import all_subgroups, subgroup_classes
from spanburn.gsets import (
    EquivariantMap,
    coproduct_many,
    equivariant_maps,
    identity_map,
    orbit_gset,
    regular_gset,
    trivial_gset,
)
from spanburn.spans import (
    LEG_TYPES,
    NatMatrix,
    Span,
    add_spans,
    check_closure,
    compose_spans,
    empty_span,
    fin_span,
    graph_span,
    hom_monoid,
    identity_span,
    matrix_to_span,
    realize_class,
    span_class,
    span_to_matrix,
    spans_isomorphic,
    structured_span_type,
)


def _random_span(rng, G, X, Y, orbits):
    subs_all = all_subgroups(G)
    total = empty_span(X, Y)
    for _ in range(orbits):
        O = orbit_gset(G, rng.choice(subs_all))
        ms = equivariant_maps(O, X)
        mt = equivariant_maps(O, Y)
        if ms and mt:
            total = add_spans(total, Span(rng.choice(ms), rng.choice(mt)))
    return total


def test_identity_composition_fixes_class():
    S3 = symmetric(3)
    _, reps, _ = subgroup_classes(S3)
    X = regular_gset(S3)
    O = orbit_gset(S3, reps[1])
    s = Span(equivariant_maps(X, O)[0], identity_map(X))
    assert span_class(compose_spans(s, identity_span(X))) == span_class(s)
    assert span_class(compose_spans(identity_span(O), s)) == span_class(s)


def test_feet_mismatch():
    C2 = cyclic(2)
    s = identity_span(regular_gset(C2))
    t = identity_span(trivial_gset(C2, 1))
    with pytest.raises(FeetMismatch):
        compose_spans(s, t)
    with pytest.raises(FeetMismatch):
        add_spans(s, t)


def test_fin_matrix_multiplication():
    s2 = matrix_to_span(NatMatrix([[2]]))
    s3 = matrix_to_span(NatMatrix([[3]]))
    c = compose_spans(s2, s3)
    assert span_to_matrix(c) == NatMatrix([[6]])
    assert span_class(c) == span_class(matrix_to_span(NatMatrix([[6]])))


def test_matrix_bridge_roundtrip():
    M = NatMatrix([[1, 2], [0, 1]])
    s = matrix_to_span(M)
    assert span_to_matrix(s) == M
    assert span_class(s) == span_class(matrix_to_span(span_to_matrix(s)))
    # different matrices give different classes
    N = NatMatrix([[1, 0], [2, 1]])
    assert span_class(matrix_to_span(N)) != span_class(s)


def test_matrix_bridge_rejects_nontrivial_group():
    C2 = cyclic(2)
    with pytest.raises(NontrivialGroup):
        span_to_matrix(identity_span(regular_gset(C2)))


def test_identity_span_is_identity_matrix():
    T = trivial_group()
    X = trivial_gset(T, 3)
    M = span_to_matrix(identity_span(X))
    assert M.entries == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_column_matrix_example():
    s = fin_span(2, 1, [(0, 0), (0, 0), (1, 0)])
    assert span_to_matrix(s).entries == ((2, 1),)


def test_matrix_functoriality_exhaustive_small():
    # all Fin spans with feet <= 2, apex <= 3
    T = trivial_group()
    rng_sets = [trivial_gset(T, n) for n in (1, 2)]
    spans = []
    for A in rng_sets:
        for B in rng_sets:
            cells = [(a, b) for a in range(A.size) for b in range(B.size)]
            for k in range(4):
                for pairs in itertools.combinations_with_replacement(cells, k):
                    spans.append(fin_span(A.size, B.size, list(pairs)))
    for s in spans:
        for t in spans:
            if s.right.size != t.left.size:
                continue
            c = compose_spans(s, t)
            assert span_to_matrix(c) == span_to_matrix(t).mul(span_to_matrix(s))


def test_c2_point_roundtrip_composition():
    # (G/e <- G/e -> G/G) then (G/G <- G/e -> G/e): apex G/e x G/e,
    # decomposing as the identity span plus its swap twist
    C2 = cyclic(2)
    Ge = regular_gset(C2)
    GG = trivial_gset(C2, 1)
    f = equivariant_maps(Ge, GG)[0]
    comp = compose_spans(Span(identity_map(Ge), f), Span(f, identity_map(Ge)))
    assert comp.apex.size == 4
    reg = identity_span(Ge)
    twisted = Span(identity_map(Ge), EquivariantMap(Ge, Ge, [1, 0]))
    assert spans_isomorphic(comp, add_spans(reg, twisted))
    assert span_class(comp) == span_class(add_spans(reg, twisted))
    # every orbit of the composite has a free (regular) apex
    assert all(len(stab) == 1 for (_, stab), _ in span_class(comp).canonical)


def test_relabeled_apex_same_class():
    S3 = symmetric(3)
    X = regular_gset(S3)
    f = equivariant_maps(X, trivial_gset(S3, 1))[0]
    s = Span(identity_map(X), f)
    # precompose both legs with an equivariant apex automorphism
    # (left multiplication commutes with the right regular action)
    sigma = EquivariantMap(X, X, [S3.mul(3, x) for x in X.points()])
    s2 = Span(s.leg_left.compose(sigma), s.leg_right.compose(sigma))
    assert span_class(s2) == span_class(s)
    assert spans_isomorphic(s2, s)


def test_swapped_legs_differ():
    s = fin_span(2, 1, [(0, 0), (0, 0), (1, 0)])
    swapped = fin_span(1, 2, [(0, 0), (0, 0), (0, 1)])
    assert span_class(s) != span_class(swapped)


def test_class_equals_iso_oracle_s3():
    S3 = symmetric(3)
    _, reps, _ = subgroup_classes(S3)
    X = coproduct_many(S3, [orbit_gset(S3, reps[1]), trivial_gset(S3, 1)])[0]
    rng = random.Random(7)
    pool = [_random_span(rng, S3, X, X, rng.randint(0, 3)) for _ in range(30)]
    for a in pool:
        for b in pool:
            assert (span_class(a) == span_class(b)) == spans_isomorphic(a, b)


def test_class_equals_iso_oracle_d4():
    D4 = dihedral(4)
    _, reps, _ = subgroup_classes(D4)
    X = coproduct_many(
        D4, [orbit_gset(D4, reps[1]), orbit_gset(D4, reps[2]),
             trivial_gset(D4, 1)])[0]
    rng = random.Random(11)
    pool = [_random_span(rng, D4, X, X, rng.randint(0, 2)) for _ in range(20)]
    for a in pool:
        for b in pool:
            assert (span_class(a) == span_class(b)) == spans_isomorphic(a, b)


def test_hom_monoid_fin_point():
    T = trivial_group()
    pt = trivial_gset(T, 1)
    hm = hom_monoid(pt, pt, 3)
    assert len(hm) == 4
    sizes = sorted(c.apex_size() for c in hm.classes)
    assert sizes == [0, 1, 2, 3]


def test_hom_monoid_bound_zero():
    T = trivial_group()
    pt = trivial_gset(T, 2)
    hm = hom_monoid(pt, pt, 0)
    assert len(hm) == 1 and hm.classes[0].canonical == ()


def test_hom_monoid_c2_point():
    C2 = cyclic(2)
    pt = trivial_gset(C2, 1)
    hm = hom_monoid(pt, pt, 2)
    # apexes: 0, G/G, 2*G/G, G/e -- four classes
    assert len(hm) == 4


def test_hom_monoid_closed_under_addition():
    C2 = cyclic(2)
    pt = trivial_gset(C2, 1)
    hm = hom_monoid(pt, pt, 4)
    classes = set(hm.classes)
    for a in hm.classes:
        for b in hm.classes:
            c = a.add(b)
            if c.apex_size() <= hm.apex_bound:
                assert c in classes
            # commutativity
            assert c == b.add(a)
    # unit law
    for a in hm.classes:
        assert a.add(hm.unit()) == a


def test_realize_class_roundtrip():
    S3 = symmetric(3)
    _, reps, _ = subgroup_classes(S3)
    Y = orbit_gset(S3, reps[1])
    hm = hom_monoid(Y, Y, 6)
    assert len(hm) > 1
    for cls in hm.classes:
        assert span_class(realize_class(S3, Y, Y, cls)) == cls


def test_structured_types():
    T = trivial_group()
    pt = trivial_gset(T, 1)
    assert structured_span_type(identity_span(pt)) == ("bijective", "bijective")
    f = EquivariantMap(trivial_gset(T, 2), pt, [0, 0])
    assert structured_span_type(graph_span(f)) == ("bijective", "arbitrary")
    inj = fin_span(3, 2, [(0, 1)])
    assert structured_span_type(inj) == ("injective", "injective")
    assert structured_span_type(fin_span(1, 1, [(0, 0), (0, 0)])) == \
        ("arbitrary", "arbitrary")


def _fin_corpus(max_set=2, max_apex=2):
    T = trivial_group()
    sets = [trivial_gset(T, n) for n in range(max_set + 1)]
    corpus = []
    for A in sets:
        for B in sets:
            cells = [(a, b) for a in range(A.size) for b in range(B.size)]
            for k in range(max_apex + 1):
                for pairs in itertools.combinations_with_replacement(cells, k):
                    corpus.append(fin_span(A.size, B.size, list(pairs)))
    return corpus


def test_nine_types_closed_under_composition():
    corpus = _fin_corpus()
    for p in LEG_TYPES:
        for q in LEG_TYPES:
            report = check_closure(p, q, corpus)
            assert report["closed"], (p, q, report["violations"][:1])
            assert report["pairs"] > 0


def test_composition_additive_in_classes():
    S3 = symmetric(3)
    _, reps, _ = subgroup_classes(S3)
    X = coproduct_many(S3, [orbit_gset(S3, reps[1]), trivial_gset(S3, 1)])[0]
    rng = random.Random(3)
    for _ in range(8):
        a = _random_span(rng, S3, X, X, 1)
        b = _random_span(rng, S3, X, X, 1)
        c = _random_span(rng, S3, X, X, 1)
        lhs = span_class(compose_spans(add_spans(a, b), c))
        rhs = span_class(compose_spans(a, c)).add(
            span_class(compose_spans(b, c)))
        assert lhs == rhs


def test_associativity_up_to_class():
    S3 = symmetric(3)
    _, reps, _ = subgroup_classes(S3)
    X = coproduct_many(S3, [orbit_gset(S3, reps[1]), trivial_gset(S3, 1)])[0]
    rng = random.Random(5)
    for _ in range(8):
        a = _random_span(rng, S3, X, X, 2)
        b = _random_span(rng, S3, X, X, 2)
        c = _random_span(rng, S3, X, X, 2)
        assert span_class(compose_spans(compose_spans(a, b), c)) == \
            span_class(compose_spans(a, compose_spans(b, c)))


def test_biproduct_equations():
    # injection/projection spans of a disjoint union satisfy the
    # biproduct identities at the class level
    C2 = cyclic(2)
    X = regular_gset(C2)
    Y = trivial_gset(C2, 1)
    from spanburn.gsets import coproduct

    Z, i1, i2 = coproduct(X, Y)
    inj1, inj2 = graph_span(i1), graph_span(i2)
    # projections are the reversed spans
    proj1 = Span(i1, identity_map(X))
    proj2 = Span(i2, identity_map(Y))
    assert span_class(compose_spans(inj1, proj1)) == \
        span_class(identity_span(X))
    assert span_class(compose_spans(inj2, proj2)) == \
        span_class(identity_span(Y))
    assert span_class(compose_spans(inj1, proj2)) == \
        span_class(empty_span(X, Y))
    # p1;i1 + p2;i2 = id_Z
    r = add_spans(compose_spans(proj1, inj1), compose_spans(proj2, inj2))
    assert span_class(r) == span_class(identity_span(Z))
