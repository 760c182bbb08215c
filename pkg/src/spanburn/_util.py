"""Small shared helpers: union-find and deterministic parallel mapping."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


class UnionFind:
    """Union-find over range(n) with path compression."""

    __slots__ = ("parent", "rank")

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return ra

    def blocks(self):
        """Partition as sorted lists, ordered by least element."""
        groups = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values(), key=lambda b: b[0])


def parallel_map(fn, items, jobs=1):
    """Map fn over items, preserving order regardless of worker count.

    Results are identical for any jobs value: items keep their input
    order, so downstream reports stay byte-for-byte reproducible.
    """
    items = list(items)
    if jobs is None or jobs <= 0:
        jobs = os.cpu_count() or 1
    if jobs == 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
