"""A catalog of named small groups used throughout the test suites.

Groups are built from permutation generators or explicit constructions,
so the catalog doubles as an exercise of build_group.
"""

from __future__ import annotations

from functools import lru_cache

from .groups import FiniteGroup, build_group, direct_product


@lru_cache(maxsize=None)
def trivial_group():
    return FiniteGroup([[0]], name="1")


@lru_cache(maxsize=None)
def cyclic(n):
    if n == 1:
        return trivial_group()
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, name=f"C{n}")


@lru_cache(maxsize=None)
def symmetric(n):
    if n <= 1:
        return trivial_group()
    transposition = [1, 0] + list(range(2, n))
    cycle = list(range(1, n)) + [0]
    return build_group(generators=[transposition, cycle], degree=n, name=f"S{n}")


@lru_cache(maxsize=None)
def alternating(n):
    if n <= 2:
        return trivial_group()
    three_cycle = [1, 2, 0] + list(range(3, n))
    if n % 2:
        rot = list(range(1, n)) + [0]
    else:
        rot = [0] + list(range(2, n)) + [1]
    return build_group(generators=[three_cycle, rot], degree=n, name=f"A{n}")


@lru_cache(maxsize=None)
def dihedral(n):
    """Symmetries of the regular n-gon, order 2n."""
    rot = list(range(1, n)) + [0]
    flip = [(-i) % n for i in range(n)]
    return build_group(generators=[rot, flip], degree=n, name=f"D{n}")


@lru_cache(maxsize=None)
def quaternion():
    """Q8 as permutations of its own 8 elements (left regular action)."""
    # elements 1,-1,i,-i,j,-j,k,-k as 0..7
    mul = _quaternion_table()
    return FiniteGroup(mul, name="Q8")


def _quaternion_table():
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    sign = {n: (-1 if n.startswith("-") else 1) for n in names}
    base = {n: n.lstrip("-") for n in names}
    rules = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"),
        ("1", "k"): (1, "k"), ("i", "1"): (1, "i"), ("j", "1"): (1, "j"),
        ("k", "1"): (1, "k"), ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"),
        ("k", "k"): (-1, "1"), ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"), ("k", "i"): (1, "j"),
        ("i", "k"): (-1, "j"),
    }
    idx = {n: i for i, n in enumerate(names)}
    table = [[0] * 8 for _ in range(8)]
    for a in names:
        for b in names:
            s, r = rules[(base[a], base[b])]
            s *= sign[a] * sign[b]
            result = r if s == 1 else "-" + r
            table[idx[a]][idx[b]] = idx[result]
    return table


@lru_cache(maxsize=None)
def dicyclic3():
    """Dic3 (a.k.a. Q12), order 12."""
    # <a, b | a^6 = 1, b^2 = a^3, b^-1 a b = a^-1> acting on 12 points
    a = [1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6]
    b = [6, 11, 10, 9, 8, 7, 3, 2, 1, 0, 5, 4]
    return build_group(generators=[a, b], degree=12, name="Dic3")


@lru_cache(maxsize=None)
def klein_four():
    return direct_product(cyclic(2), cyclic(2), name="C2xC2")


def catalog(max_order=12):
    """Named groups of order <= max_order, deterministically ordered."""
    groups = [
        trivial_group(),
        cyclic(2), cyclic(3), cyclic(4), klein_four(),
        cyclic(5), cyclic(6), symmetric(3),
        cyclic(7),
        cyclic(8), direct_product(cyclic(4), cyclic(2), name="C4xC2"),
        direct_product(klein_four(), cyclic(2), name="C2^3"),
        dihedral(4), quaternion(),
        cyclic(9), direct_product(cyclic(3), cyclic(3), name="C3xC3"),
        cyclic(10), dihedral(5),
        cyclic(11),
        cyclic(12), direct_product(cyclic(6), cyclic(2), name="C6xC2"),
        dihedral(6), alternating(4), dicyclic3(),
        symmetric(4),
    ]
    return [G for G in groups if G.order <= max_order]


def by_name(name):
    for G in catalog(24):
        if G.name == name:
            return G
    raise KeyError(name)
