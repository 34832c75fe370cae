"""Simple undirected graphs, BFS all-pairs distances, and the brute-force
Hosoya oracle.

Vertices are the dense integers ``0..V-1``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .polynomial import HosoyaPolynomial, IndexReport, IndexSource


class DisconnectedGraphError(ValueError):
    def __init__(self, source: int, vertex: int):
        super().__init__(
            f"graph not connected: vertex {vertex} is unreachable from vertex {source}"
        )
        self.source = source
        self.vertex = vertex


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency must list every vertex")
        for u, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbors of {u} must be sorted and distinct")
            for v in nbrs:
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if not 0 <= v < self.vertex_count:
                    raise ValueError(f"vertex {v} out of range")
                if u not in self.adjacency[v]:
                    raise ValueError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting self-loops and repeated edges."""
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"parallel edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(vertex_count, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.vertex_count

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError("perm must be a permutation of the vertices")
        return Graph.from_edges(self.vertex_count, ((perm[u], perm[v]) for u, v in self.edges()))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


@dataclass(frozen=True)
class DistanceMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def upper_pairs(self) -> Iterator[int]:
        """Distances d_ij for i < j."""
        for i, row in enumerate(self.rows):
            yield from row[i + 1:]

    def max(self) -> int:
        return max(max(r) for r in self.rows)

    def first_difference(self, other: "DistanceMatrix") -> tuple[int, int, int, int] | None:
        """``(row, col, self[row,col], other[row,col])`` of the first differing entry."""
        if self.size != other.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")
        for i, (a, b) in enumerate(zip(self.rows, other.rows)):
            if a != b:
                j = next(j for j in range(len(a)) if a[j] != b[j])
                return i, j, a[j], b[j]
        return None


def bfs_distances(g: Graph, source: int) -> list[int]:
    if not 0 <= source < g.vertex_count:
        raise IndexError(f"source {source} out of range for {g.vertex_count} vertices")
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    for v, d in enumerate(dist):
        if d < 0:
            raise DisconnectedGraphError(source, v)
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(bfs_distances(g, s)) for s in range(g.vertex_count)))


def diameter(g: Graph) -> int:
    return distance_matrix(g).max()


def hosoya_from_distances(dm: DistanceMatrix) -> HosoyaPolynomial:
    if dm.size < 2:
        raise ValueError("no pairs: a Hosoya polynomial needs at least two vertices")
    counts = Counter(dm.upper_pairs())
    top = max(counts)
    return HosoyaPolynomial(tuple(counts.get(k, 0) for k in range(1, top + 1)))


def hosoya_polynomial(g: Graph) -> HosoyaPolynomial:
    if g.vertex_count < 2:
        raise ValueError("no pairs: a Hosoya polynomial needs at least two vertices")
    return hosoya_from_distances(distance_matrix(g))


def direct_indices(dm: DistanceMatrix) -> IndexReport:
    """W, WW, Ha, TSZ summed pair by pair, without going through the polynomial."""
    w = ww = t = 0
    ha = Fraction(0)
    for d in dm.upper_pairs():
        w += d
        ww += d * d + d
        t += d * (d + 1) * (d + 2)
        ha += Fraction(1, d)
    return IndexReport(
        wiener=Fraction(w),
        hyper_wiener=Fraction(ww, 2),
        harary=ha,
        tsz=Fraction(t, 6),
        source=IndexSource.DIRECT_SUMMATION,
    )


def harary_squared(dm: DistanceMatrix) -> Fraction:
    """Harary variant with reciprocal squared distances, sum of 1/d^2 over pairs."""
    return sum((Fraction(1, d * d) for d in dm.upper_pairs()), Fraction(0))
