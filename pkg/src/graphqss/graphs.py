"""Simple graphs over GF(2): bitmask adjacency, transforms, products, formats.

Vertices are labelled 0..n-1.  The adjacency matrix is stored as one int
bitmask per vertex (bit j of row i = edge i-j), which makes the odd
neighborhood a fold of XORs and keeps coalition scans allocation-free.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import GraphParseError, ResourceLimitError

DEFAULT_SEED = 0

_MAX_GRAPH6_N = 258047  # 3-byte size form; longer graphs are out of scope


@dataclass(frozen=True)
class VertexSet:
    """Subset of 0..universe-1 with bitmask semantics."""

    universe: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.universe < 0:
            raise ValueError("universe must be >= 0")
        if self.mask < 0 or self.mask >> self.universe:
            raise ValueError("member outside 0..universe-1")

    @classmethod
    def from_iterable(cls, universe: int, members: Iterable[int]) -> VertexSet:
        mask = 0
        for v in members:
            if not 0 <= v < universe:
                raise ValueError(f"vertex {v} outside 0..{universe - 1}")
            mask |= 1 << v
        return cls(universe, mask)

    @classmethod
    def empty(cls, universe: int) -> VertexSet:
        return cls(universe, 0)

    @classmethod
    def full(cls, universe: int) -> VertexSet:
        return cls(universe, (1 << universe) - 1)

    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.universe) if (self.mask >> i) & 1)

    def complement(self) -> VertexSet:
        return VertexSet(self.universe, self.mask ^ ((1 << self.universe) - 1))

    def is_subset_of(self, other: VertexSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def _check(self, other: VertexSet) -> None:
        if self.universe != other.universe:
            raise ValueError("vertex sets over different universes")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe and (self.mask >> v) & 1 == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.universe, self.mask & other.mask)

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.universe, self.mask | other.mask)

    def __xor__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.universe, self.mask ^ other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.universe, self.mask & ~other.mask)

    def __repr__(self) -> str:
        return f"VertexSet({self.universe}, {{{', '.join(map(str, self.members()))}}})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``adj[i]`` is the neighbor bitmask of i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count != n")
        for i, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"adjacency row {i} has out-of-range bits")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                yield (u, v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)


def odd_neighborhood(g: Graph, d: VertexSet) -> VertexSet:
    """Vertices with an odd number of neighbors in d; GF(2)-linear in d."""
    if d.universe != g.n:
        raise ValueError("vertex set universe != graph order")
    acc = 0
    m = d.mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        acc ^= g.adj[v]
    return VertexSet(g.n, acc)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((row ^ full) & ~(1 << i) for i, row in enumerate(g.adj)))


def delta_complement(g: Graph, a: VertexSet) -> Graph:
    """Complement exactly the edges with both endpoints in ``a``."""
    if a.universe != g.n:
        raise ValueError("vertex set universe != graph order")
    adj = list(g.adj)
    for i in range(g.n):
        if (a.mask >> i) & 1:
            adj[i] ^= a.mask & ~(1 << i)
    return Graph(g.n, tuple(adj))


def lexicographic_product(g1: Graph, g2: Graph) -> Graph:
    """Substitute a copy of g2 for every vertex of g1.

    Vertex (u1, u2) maps to u1 * n2 + u2.  Edges: (u1,u2)-(v1,v2) iff u1-v1
    is an edge of g1, or u1 = v1 and u2-v2 is an edge of g2.
    """
    n1, n2 = g1.n, g2.n
    block = (1 << n2) - 1
    adj = []
    for u1 in range(n1):
        cross = 0
        m = g1.adj[u1]
        while m:
            v1 = (m & -m).bit_length() - 1
            m &= m - 1
            cross |= block << (v1 * n2)
        for u2 in range(n2):
            adj.append(cross | (g2.adj[u2] << (u1 * n2)))
    return Graph(n1 * n2, tuple(adj))


def c5_power(i: int, max_vertices: int = 3125) -> Graph:
    """Iterated lexicographic power of the 5-cycle; 5**i vertices."""
    if i < 1:
        raise ValueError("power must be >= 1")
    if 5**i > max_vertices:
        raise ResourceLimitError(f"5**{i} vertices exceeds cap {max_vertices}")
    g = family("cycle", 5)
    out = g
    for _ in range(i - 1):
        out = lexicographic_product(g, out)
    return out


def family(kind: str, n: int, p: Optional[float] = None, seed: Optional[int] = None) -> Graph:
    """Named graph families; deterministic for a fixed seed.

    cycle(1) is a single vertex and cycle(2) a single edge (simple graphs
    cannot carry a doubled 2-cycle).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "cycle":
        if n <= 2:
            return family("path", n)
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "random":
        if p is None or not 0.0 <= p <= 1.0:
            raise ValueError("random family needs edge probability p in [0, 1]")
        rng = random.Random(DEFAULT_SEED if seed is None else seed)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        return Graph.from_edges(n, edges)
    raise ValueError(f"unknown family {kind!r}")


# -- text formats --------------------------------------------------------------


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "graph6":
        return _parse_graph6(text.strip())
    raise ValueError(f"unknown format {fmt!r}")


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        lines = [str(g.n)]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    if fmt == "graph6":
        return _to_graph6(g)
    raise ValueError(f"unknown format {fmt!r}")


def _parse_edgelist(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphParseError("line 1: missing vertex count")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise GraphParseError(f"line 1: vertex count is not an integer: {lines[0]!r}") from None
    if n < 0:
        raise GraphParseError("line 1: vertex count must be >= 0")
    adj = [0] * n
    for ln, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {ln}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {ln}: non-integer vertex in {raw!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {ln}: vertex outside 0..{n - 1}")
        if u == v:
            raise GraphParseError(f"line {ln}: self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _to_graph6(g: Graph) -> str:
    n = g.n
    if n > _MAX_GRAPH6_N:
        raise ValueError(f"graph6 emitter supports n <= {_MAX_GRAPH6_N}")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append((g.adj[i] >> j) & 1)
    chars = []
    for k in range(0, len(bits), 6):
        group = bits[k : k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def _parse_graph6(text: str) -> Graph:
    if not text:
        raise GraphParseError("empty graph6 string")
    data = [ord(ch) - 63 for ch in text]
    for pos, val in enumerate(data):
        if not 0 <= val <= 63:
            raise GraphParseError(f"position {pos + 1}: invalid graph6 byte {text[pos]!r}")
    if data[0] == 63:  # '~': multi-byte vertex count
        if len(data) < 4:
            raise GraphParseError("truncated graph6 vertex count")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphParseError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    bits = []
    for val in body:
        for s in range(5, -1, -1):
            bits.append((val >> s) & 1)
    if any(bits[nbits:]):
        raise GraphParseError("graph6 padding bits are not zero")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))
