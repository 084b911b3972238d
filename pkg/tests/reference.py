"""Slow, independent reference implementations used only by the tests."""

from itertools import product


def floyd_transmissions(n, edges):
    """Transmissions via Floyd-Warshall; no shared code with the package."""
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return [int(sum(row)) for row in d]


def _rooted(adj, root, parent):
    kids = sorted(_rooted(adj, w, root) for w in adj[root] if w != parent)
    return "(" + "".join(kids) + ")"


def brute_canonical(n, edges):
    """Minimum AHU code over every root; slow but obviously correct."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return min(_rooted(adj, r, -1) for r in range(n))


def prufer_decode(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return edges


def prufer_tree_classes(n):
    """Isomorphism classes of labelled trees on ``n`` vertices via Prüfer codes."""
    if n <= 2:
        return {brute_canonical(n, [(0, 1)] if n == 2 else [])}
    return {brute_canonical(n, prufer_decode(seq, n)) for seq in product(range(n), repeat=n - 2)}


def leaf_growth_classes(n):
    """Grow every tree by one leaf at a time, deduplicating by canonical code."""
    level = {brute_canonical(1, []): (1, [])}
    for size in range(1, n):
        nxt = {}
        for m, edges in level.values():
            for v in range(m):
                grown = edges + [(v, m)]
                code = brute_canonical(m + 1, grown)
                nxt.setdefault(code, (m + 1, grown))
        level = nxt
    return set(level)
