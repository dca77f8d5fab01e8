"""Independent brute-force oracles shared by the test modules.

Everything here works by direct neighborhood enumeration over all subsets,
never through the rank-based solver paths it is used to check.
"""

from __future__ import annotations

import itertools
from typing import Optional

from graphqss.graphs import Graph, VertexSet, odd_neighborhood


def submasks(mask: int):
    """All submasks of mask, ascending by value."""
    out = []
    sub = 0
    while True:
        out.append(sub)
        if sub == mask:
            return sorted(out)
        sub = (sub - mask) & mask


def brute_accessing_witness(g: Graph, a: VertexSet, b: VertexSet) -> Optional[VertexSet]:
    """Smallest-value D in b with Odd(D) in b and odd overlap with a."""
    for sub in submasks(b.mask):
        d = VertexSet(g.n, sub)
        if len(d & a) % 2 == 1 and odd_neighborhood(g, d).is_subset_of(b):
            return d
    return None


def brute_blind_witness(g: Graph, a: VertexSet, b: VertexSet) -> Optional[VertexSet]:
    """Smallest-value C outside b whose odd neighborhood matches a on b."""
    for sub in submasks(b.complement().mask):
        c = VertexSet(g.n, sub)
        if (odd_neighborhood(g, c) & b) == (a & b):
            return c
    return None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Permutation search; fine for n <= 8."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    for perm in itertools.permutations(range(g1.n)):
        if all(
            g2.has_edge(perm[u], perm[v]) == g1.has_edge(u, v)
            for u in range(g1.n)
            for v in range(u + 1, g1.n)
        ):
            return True
    return False


def all_graphs(n: int):
    """Every labelled graph on n vertices."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for idx, (i, j) in enumerate(pairs):
            if (mask >> idx) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))


def induced_edge_count(g: Graph, support: int) -> int:
    """Edges of g with both endpoints in the support bitmask."""
    return sum(
        1
        for u, v in g.edges()
        if (support >> u) & 1 and (support >> v) & 1
    )
