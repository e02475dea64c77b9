"""Independent brute-force oracle: explicit shortest-path enumeration.

Deliberately shares nothing with the DAG dynamic program it checks:
its own BFS, then a DFS over all shortest paths summing per-path
walker probabilities.
"""

from __future__ import annotations

import math
from collections import deque

from netskel.graph import Graph


def brute_force_pair_bits(g: Graph, s: int, d: int) -> float:
    if s == d:
        return 0.0
    dist = [-1] * g.node_count
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    if dist[d] < 0:
        raise ValueError(f"{d} unreachable from {s}")

    total = 0.0

    def dfs(u: int, prob: float) -> None:
        nonlocal total
        if u == d:
            total += prob
            return
        for v in g.adjacency[u]:
            if dist[v] == dist[u] + 1:
                step = 1.0 / g.degrees[s] if u == s else 1.0 / (g.degrees[u] - 1)
                dfs(v, prob * step)

    dfs(s, 1.0)
    return -math.log2(total)


def brute_force_total_bits(g: Graph) -> float:
    return math.fsum(
        brute_force_pair_bits(g, s, d)
        for s in range(g.node_count)
        for d in range(g.node_count)
        if s != d
    )
