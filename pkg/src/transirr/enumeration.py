"""Isomorphism-free enumeration of free trees and starlike arm multisets.

Free trees come from the Wright-Richmond-Odlyzko-McKay successor scheme on
canonical level sequences, which emits each unlabeled tree exactly once in
constant amortized time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .families import Starlike
from .graph_core import Graph, transmission_profile

MAX_TREE_ORDER = 20


class EnumerationError(ValueError):
    pass


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a rooted canonical level sequence (Beyer-Hedetniemi step)."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    nxt = list(levels)
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - p + q]
    return nxt


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split off the first principal subtree of the root.

    ``left`` is that subtree re-rooted (levels minus one); ``rest`` is the
    root with every other subtree.
    """
    m = len(levels)
    seen_one = False
    for i, lv in enumerate(levels):
        if lv == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [lv - 1 for lv in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(levels: list[int]) -> list[int] | None:
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[len(nxt) - len(tail) :] = tail
    return nxt


def level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences, one per free tree on ``n`` vertices."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise EnumerationError(f"free-tree enumeration needs 1 ≤ n ≤ {MAX_TREE_ORDER}")
    if n <= 2:
        yield list(range(n))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is not None:
            yield levels
            levels = _next_rooted(levels)


def tree_from_levels(levels: list[int]) -> Graph:
    """Tree whose preorder depths are ``levels``; vertex ``i`` is the ``i``-th entry."""
    edges = []
    stack: list[int] = []
    for v, lv in enumerate(levels):
        del stack[lv:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Graph.from_edges(len(levels), edges)


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    for levels in level_sequences(n):
        yield tree_from_levels(levels)


def _parts(total: int, count: int, smallest: int) -> Iterator[tuple[int, ...]]:
    if count == 1:
        if total >= smallest:
            yield (total,)
        return
    for first in range(smallest, total // count + 1):
        for tail in _parts(total - first, count - 1, first):
            yield (first,) + tail


def enumerate_starlike(n: int, t: int | None = None) -> Iterator[Starlike]:
    """Starlike trees on ``n`` vertices, one per sorted arm multiset."""
    if n < 4:
        raise EnumerationError("starlike trees have at least 4 vertices")
    if t is not None:
        if t < 3:
            raise EnumerationError("starlike trees need t ≥ 3 arms")
        if n - 1 < t:
            raise EnumerationError(f"cannot split {n - 1} into {t} positive arms")
        counts = [t]
    else:
        counts = range(3, n)
    for c in counts:
        for arms in _parts(n - 1, c, 1):
            yield Starlike(arms)


# -- tree canonical form --------------------------------------------------------


def tree_centers(g: Graph) -> list[int]:
    degree = g.degrees()
    leaves = [v for v in range(g.n) if degree[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for leaf in leaves:
            for w in g.adjacency[leaf]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        leaves = nxt
    return sorted(leaves) if g.n > 1 else [0]


def _rooted_code(g: Graph, root: int) -> str:
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in g.adjacency[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    code: dict[int, str] = {}
    for u in reversed(order):
        kids = sorted(code[w] for w in g.adjacency[u] if parent.get(w) == u)
        code[u] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_tree_code(g: Graph) -> str:
    """Center-rooted AHU string; equal strings iff the trees are isomorphic."""
    if not g.is_tree():
        raise EnumerationError("canonical_tree_code requires a tree")
    return min(_rooted_code(g, c) for c in tree_centers(g))


def starlike_arms(g: Graph) -> tuple[int, ...] | None:
    """Arm lengths if ``g`` is a tree with exactly one vertex of degree ≥ 3."""
    if not g.is_tree():
        return None
    branching = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(branching) != 1:
        return None
    centre = branching[0]
    arms = []
    for first in g.adjacency[centre]:
        prev, cur, length = centre, first, 1
        while g.degree(cur) == 2:
            prev, cur = cur, next(w for w in g.adjacency[cur] if w != prev)
            length += 1
        arms.append(length)
    return tuple(sorted(arms))


# -- census ---------------------------------------------------------------------


@dataclass
class Census:
    order: int
    trees: int = 0
    histogram: dict[int, int] = field(default_factory=dict)
    irregular: int = 0
    witnesses: list[list[tuple[int, int]]] = field(default_factory=list)
    witness_labels: list[str | None] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "trees": self.trees,
            "histogram": {str(c): self.histogram[c] for c in sorted(self.histogram)},
            "irregular": self.irregular,
            "witnesses": [
                {"edges": [list(e) for e in edges], "starlike": label}
                for edges, label in zip(self.witnesses, self.witness_labels)
            ],
        }


def census(n: int) -> Census:
    result = Census(order=n)
    for tree in enumerate_free_trees(n):
        prof = transmission_profile(tree)
        result.trees += 1
        result.histogram[prof.complexity] = result.histogram.get(prof.complexity, 0) + 1
        if prof.is_irregular:
            result.irregular += 1
            result.witnesses.append(tree.edges())
            arms = starlike_arms(tree)
            result.witness_labels.append(
                "T(" + ",".join(map(str, arms)) + ")" if arms else None
            )
    return result
