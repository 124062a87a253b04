"""Simple undirected graphs on vertices 0..n-1 with exact girth machinery.

Graphs are immutable once built.  Edge identifiers (used as hypergraph
universes elsewhere) are positions in the lexicographically sorted edge
list, so identical edge sets always get identical identifiers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


class InputError(ValueError):
    """Raised for malformed caller input (bad vertex, self-loop, range...)."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]  # sorted pairs (u, v) with u < v, lex order
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.edges)})

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        """Identifier of edge {u, v}: its position in the sorted edge list."""
        if u > v:
            u, v = v, u
        return self._index[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._index

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def adjacency_bits(self) -> list[int]:
        """Neighbour sets as int bitmasks (bit v set iff v adjacent)."""
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return bits


def graph_from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Canonical Graph from a pair list; duplicates collapse, loops rejected."""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for u, v in pairs:
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) out of range for n={n}")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def graph_girth(g: Graph) -> int | float:
    """Length of the shortest cycle, or math.inf for forests.

    BFS from every vertex; each non-tree edge {x,y} seen from root r closes
    a walk of length dist[x]+dist[y]+1 which contains a cycle no longer than
    itself, and rooting at a vertex of a shortest cycle attains equality.
    """
    adj = g.adjacency()
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            if 2 * dist[x] >= best:  # any further candidate is >= 2*dist[x]
                continue
            for y in adj[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y and parent[y] != x:
                    cand = dist[x] + dist[y] + 1
                    if cand < best:
                        best = cand
    return best


def girth_at_least(g: Graph, k: int) -> bool:
    """True iff g has no cycle shorter than k (i.e. graph_girth(g) >= k).

    Cheaper than graph_girth: a cycle of length l < k produces, from a root
    on it, a non-tree edge between vertices at distance <= l // 2, so BFS
    only needs (k - 1) // 2 layers per root.
    """
    if k <= 3:
        return True
    adj = g.adjacency()
    depth_cap = (k - 1) // 2
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for y in adj[x]:
                if dist[y] == -1:
                    # vertices beyond depth_cap cannot take part in a
                    # candidate shorter than k, so stop expanding there
                    if dist[x] < depth_cap:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                elif parent[x] != y and parent[y] != x:
                    if dist[x] + dist[y] + 1 < k:
                        return False
    return True


def enumerate_graph_cycles(g: Graph, length: int) -> Iterator[tuple[int, ...]]:
    """All simple cycles of exactly `length` vertices, as vertex tuples.

    Each cycle appears once: the tuple starts at its smallest vertex and the
    second entry is smaller than the last (kills rotation and reflection).
    """
    if length < 3 or length > g.n:
        return
    adj = g.adjacency()
    bits = g.adjacency_bits()
    path = [0] * length

    def extend(depth: int, used: int, start: int):
        last = path[depth - 1]
        if depth == length:
            if bits[last] >> start & 1 and path[1] < path[-1]:
                yield tuple(path)
            return
        for y in adj[last]:
            if y > start and not used >> y & 1:
                path[depth] = y
                yield from extend(depth + 1, used | 1 << y, start)

    for start in range(g.n):
        path[0] = start
        yield from extend(1, 1 << start, start)


def count_graph_cycles(g: Graph, length: int) -> int:
    return sum(1 for _ in enumerate_graph_cycles(g, length))


def enumerate_cliques(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """All k-cliques as ascending vertex tuples."""
    if k > g.n:
        return
    if k == 1:
        for v in range(g.n):
            yield (v,)
        return
    bits = g.adjacency_bits()
    later = [bits[v] & ~((1 << (v + 1)) - 1) for v in range(g.n)]
    clique = [0] * k

    def extend(depth: int, common: int):
        if depth == k:
            yield tuple(clique)
            return
        cand = common
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            clique[depth] = v
            yield from extend(depth + 1, common & later[v])

    for v in range(g.n):
        clique[0] = v
        yield from extend(1, later[v])
