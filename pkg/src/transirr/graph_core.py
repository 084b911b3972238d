"""Exact distance and transmission computations on small simple graphs.

Every quantity here comes from plain breadth-first search over integer
adjacency lists.  The rest of the package treats these functions as the
ground truth that closed forms and classifiers are checked against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

# Full distance matrices are only materialized up to this order.
MATRIX_LIMIT = 4096


class GraphError(ValueError):
    """Invalid graph structure or an operation applied to the wrong kind of graph."""


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Use
    :meth:`from_edges` rather than the raw constructor.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adjacency) != self.n:
            raise GraphError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"adjacency of {v} is not sorted and duplicate-free")
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise GraphError(f"neighbour {w} of {v} out of range")
                if w == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in self.adjacency[w]:
                    raise GraphError(f"adjacency not symmetric for edge {v}-{w}")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        *,
        allow_disconnected: bool = False,
    ) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        g = cls(n, tuple(tuple(sorted(s)) for s in nbrs))
        if not allow_disconnected and not g.is_connected():
            raise DisconnectedGraphError("graph is disconnected")
        return g

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d >= 0 for d in _bfs(self.adjacency, 0))

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(
            self.n, [(perm[u], perm[v]) for u, v in self.edges()], allow_disconnected=True
        )


@dataclass(frozen=True)
class TransmissionProfile:
    transmissions: tuple[int, ...]
    wiener: int
    complexity: int
    transmission_set: tuple[int, ...]
    collisions: tuple[tuple[int, int], ...]
    is_irregular: bool
    is_regular: bool

    def to_dict(self) -> dict:
        return {
            "n": len(self.transmissions),
            "transmissions": list(self.transmissions),
            "wiener": self.wiener,
            "complexity": self.complexity,
            "transmission_set": list(self.transmission_set),
            "collisions": [list(c) for c in self.collisions],
            "is_irregular": self.is_irregular,
            "is_regular": self.is_regular,
        }


@dataclass(frozen=True)
class EdgeSplit:
    edge: tuple[int, int]
    n_u: int
    n_v: int
    equidistant: int


@dataclass(frozen=True)
class SanityPredicates:
    """Necessary-condition filters for transmission irregular trees.

    Either flag being set certifies the tree is not transmission irregular.
    """

    equal_split: bool
    equal_split_edge: tuple[int, int] | None
    adjacent_unit_splits: bool
    unit_split_edges: tuple[tuple[int, int], ...]

    @property
    def certified_not_irregular(self) -> bool:
        return self.equal_split or self.adjacent_unit_splits


def _bfs(adjacency: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def distances_from(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; raises if some vertex is unreachable."""
    dist = _bfs(g.adjacency, source)
    if -1 in dist:
        raise DisconnectedGraphError(
            f"vertex {dist.index(-1)} unreachable from {source}: graph is disconnected"
        )
    return dist


def all_distances(g: Graph) -> list[list[int]]:
    if g.n > MATRIX_LIMIT:
        raise GraphError(f"distance matrix not materialized above {MATRIX_LIMIT} vertices")
    return [distances_from(g, s) for s in range(g.n)]


def transmissions(g: Graph) -> list[int]:
    """Per-vertex sum of distances, accumulated one BFS at a time."""
    return [sum(distances_from(g, s)) for s in range(g.n)]


def transmission_profile(g: Graph) -> TransmissionProfile:
    if g.n < 1:
        raise GraphError("transmission profile needs at least one vertex")
    tr = transmissions(g)
    by_value: dict[int, list[int]] = {}
    for v, t in enumerate(tr):
        by_value.setdefault(t, []).append(v)
    collisions = sorted(
        (u, v)
        for group in by_value.values()
        for i, u in enumerate(group)
        for v in group[i + 1 :]
    )
    complexity = len(by_value)
    return TransmissionProfile(
        transmissions=tuple(tr),
        wiener=sum(tr) // 2,
        complexity=complexity,
        transmission_set=tuple(sorted(by_value)),
        collisions=tuple(collisions),
        is_irregular=complexity == g.n,
        is_regular=complexity == 1,
    )


def transmission_multiset(g: Graph) -> Counter:
    return Counter(transmissions(g))


def edge_split(g: Graph, u: int, v: int) -> EdgeSplit:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    du = distances_from(g, u)
    dv = distances_from(g, v)
    n_u = sum(1 for a, b in zip(du, dv) if a < b)
    n_v = sum(1 for a, b in zip(du, dv) if b < a)
    return EdgeSplit((u, v), n_u, n_v, g.n - n_u - n_v)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` is the ``i``-th edge of ``g.edges()``."""
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph is empty")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for inc in incident:
        for x in range(len(inc)):
            for y in range(x + 1, len(inc)):
                pairs.add((inc[x], inc[y]))
    return Graph.from_edges(len(edges), sorted(pairs), allow_disconnected=True)


def tree_edge_splits(g: Graph) -> list[EdgeSplit]:
    """Edge splits of a tree from subtree sizes, one per edge ``(parent, child)``.

    Rooted at vertex 0; in a tree no vertex is equidistant from both ends.
    """
    if not g.is_tree():
        raise GraphError("tree_edge_splits requires a tree")
    parent = [-1] * g.n
    order = [0]
    seen = [False] * g.n
    seen[0] = True
    for u in order:
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    size = [1] * g.n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    return [
        EdgeSplit((parent[c], c), g.n - size[c], size[c], 0)
        for c in sorted(order[1:])
    ]


def tree_sanity_predicates(g: Graph) -> SanityPredicates:
    splits = tree_edge_splits(g)
    equal = next((s.edge for s in splits if s.n_u == s.n_v), None)
    units = tuple(s.edge for s in splits if abs(s.n_u - s.n_v) == 1)
    return SanityPredicates(
        equal_split=equal is not None,
        equal_split_edge=equal,
        adjacent_unit_splits=len(units) >= 2,
        unit_split_edges=units,
    )


# -- edge-list interchange format ------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v`` (0-based)."""
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise GraphError("edge list is empty")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError("edge list header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError("edge list header must hold two integers") from None
    if n < 0 or m < 0:
        raise GraphError("edge list header values must be non-negative")
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} follow")
    edges = []
    for lineno, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: endpoints must be integers") from None
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"
