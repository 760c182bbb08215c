import pytest

from spanburn.catalog import (
    alternating,
    by_name,
    catalog,
    cyclic,
    dicyclic3,
    dihedral,
    klein_four,
    quaternion,
    symmetric,
    trivial_group,
)
from spanburn.errors import (
    GeneratorClosureOverflow,
    NoIdentity,
    NoInverse,
    NonAssociative,
)
from spanburn.groups import (
    GroupHom,
    Subgroup,
    all_subgroups,
    build_group,
    centralizer,
    conjugacy_classes,
    direct_product,
    enumerate_homomorphisms,
    find_isomorphism,
    is_isomorphic,
    normalizer,
    subgroup_classes,
)


def test_catalog_orders():
    expected = {
        "1": 1, "C2": 2, "C3": 3, "C4": 4, "C2xC2": 4, "C5": 5,
        "C6": 6, "S3": 6, "C7": 7, "C8": 8, "C4xC2": 8, "C2^3": 8,
        "D4": 8, "Q8": 8, "C9": 9, "C3xC3": 9, "C10": 10, "D5": 10,
        "C11": 11, "C12": 12, "C6xC2": 12, "D6": 12, "A4": 12,
        "Dic3": 12, "S4": 24,
    }
    for G in catalog(24):
        assert G.order == expected[G.name]
    assert len(catalog(12)) == 24
    assert by_name("Q8").order == 8


def test_catalog_pairwise_noniso():
    groups = catalog(24)
    for i, G in enumerate(groups):
        for H in groups[i + 1:]:
            if G.order == H.order:
                assert not is_isomorphic(G, H), (G.name, H.name)


def test_validation_rejects_bad_tables():
    with pytest.raises(NoIdentity):
        build_group([[1, 0], [0, 1]])
    with pytest.raises((NonAssociative, NoInverse)):
        # left-cancellative magma that is not associative
        build_group([[0, 1, 2], [1, 2, 0], [2, 1, 0]])
    with pytest.raises(NoIdentity):
        build_group([])


def test_generator_closure():
    S3 = symmetric(3)
    assert S3.order == 6
    with pytest.raises(GeneratorClosureOverflow):
        build_group(generators=[list(range(1, 8)) + [0]], degree=8,
                    closure_cap=5)


def test_basic_ops():
    D4 = dihedral(4)
    assert D4.order == 8
    assert sorted(D4.element_order(a) for a in D4.elements()) == \
        [1, 2, 2, 2, 2, 2, 4, 4]
    for a in D4.elements():
        assert D4.mul(a, D4.inv(a)) == 0
    assert D4.conj(0, 3) == 0
    assert not D4.is_abelian()
    assert cyclic(6).is_abelian()


def test_opposite():
    S3 = symmetric(3)
    op = S3.opposite()
    for a in S3.elements():
        for b in S3.elements():
            assert op.mul(a, b) == S3.mul(b, a)
    assert is_isomorphic(S3, op)


def test_quaternion_structure():
    Q8 = quaternion()
    assert Q8.order_profile == (1, 2, 4, 4, 4, 4, 4, 4)
    assert not is_isomorphic(Q8, dihedral(4))
    # unique element of order 2 is central
    assert len(centralizer(Q8, 1)) == 8


def test_dicyclic3():
    D = dicyclic3()
    assert D.order == 12
    assert sorted(D.element_order(a) for a in D.elements()) == \
        [1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6]
    assert not is_isomorphic(D, alternating(4))
    assert not is_isomorphic(D, dihedral(6))


def test_subgroup_counts():
    # classical subgroup counts
    assert len(all_subgroups(symmetric(3))) == 6
    assert len(all_subgroups(alternating(4))) == 10
    assert len(all_subgroups(symmetric(4))) == 30
    assert len(all_subgroups(quaternion())) == 6
    assert len(all_subgroups(klein_four())) == 5
    assert len(all_subgroups(cyclic(12))) == 6


def test_subgroup_classes_witnesses():
    for G in (symmetric(3), dihedral(4), alternating(4)):
        subs, reps, witness = subgroup_classes(G)
        for i, s in enumerate(subs):
            rep_idx, g = witness[i]
            assert reps[rep_idx].elements == s.conjugate(g).elements


def test_subgroup_class_counts():
    assert len(subgroup_classes(symmetric(3))[1]) == 4
    assert len(subgroup_classes(dihedral(4))[1]) == 8
    assert len(subgroup_classes(alternating(4))[1]) == 5
    assert len(subgroup_classes(symmetric(4))[1]) == 11


def test_subgroup_validation():
    S3 = symmetric(3)
    with pytest.raises((NonAssociative, NoInverse, NoIdentity)):
        Subgroup(S3, [0, 1, 2])  # not closed unless 1,2 commute right
    sub = Subgroup(S3, [g for g in S3.elements() if S3.element_order(g) != 2
                        or g == 0][:3])
    assert sub.order in (1, 2, 3)


def test_conjugacy_classes():
    assert [len(c) for c in conjugacy_classes(symmetric(3))] in (
        [1, 2, 3], [1, 3, 2])
    assert len(conjugacy_classes(quaternion())) == 5
    assert len(conjugacy_classes(symmetric(4))) == 5


def test_normalizer_centralizer():
    S3 = symmetric(3)
    subs, _, _ = subgroup_classes(S3)
    for s in subs:
        N = normalizer(S3, s)
        assert len(N) % s.order == 0
        assert set(s.elements) <= set(N)


def test_hom_enumeration():
    C2, C3, S3 = cyclic(2), cyclic(3), symmetric(3)
    assert len(enumerate_homomorphisms(C2, S3)) == 4
    assert len(enumerate_homomorphisms(C3, S3)) == 3
    assert len(enumerate_homomorphisms(S3, C2)) == 2
    assert len(enumerate_homomorphisms(S3, S3)) == 10
    assert len(enumerate_homomorphisms(C2, C3)) == 1
    for h in enumerate_homomorphisms(S3, S3):
        GroupHom(S3, S3, h.map)  # revalidates


def test_hom_validation():
    C4 = cyclic(4)
    with pytest.raises((NonAssociative, NoIdentity)):
        GroupHom(C4, C4, [0, 2, 1, 3])


def test_direct_product():
    V = direct_product(cyclic(2), cyclic(2))
    assert V.is_abelian() and V.order == 4
    assert is_isomorphic(V, klein_four())
    assert not is_isomorphic(V, cyclic(4))


def test_find_isomorphism_is_valid_hom():
    G, H = symmetric(3), dihedral(3)
    table = find_isomorphism(G, H)
    assert table is not None
    GroupHom(G, H, table)
    assert len(set(table)) == G.order


def test_as_group_roundtrip():
    S4 = symmetric(4)
    subs, _, _ = subgroup_classes(S4)
    for s in subs:
        K, to_parent = s.as_group()
        assert K.order == s.order
        assert to_parent[0] == 0
        for i in range(K.order):
            for j in range(K.order):
                assert to_parent[K.mul(i, j)] == S4.mul(to_parent[i],
                                                        to_parent[j])


def test_trivial_group_edge_cases():
    T = trivial_group()
    assert T.order == 1
    assert all_subgroups(T)[0].order == 1
    assert len(enumerate_homomorphisms(T, symmetric(3))) == 1
    assert len(enumerate_homomorphisms(symmetric(3), T)) == 1
