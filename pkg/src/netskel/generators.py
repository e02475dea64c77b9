"""Synthetic graphs, degree-preserving randomization, tree-scaling experiment."""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from typing import Optional

from .errors import NetskelError
from .estimator import PowerLawFit, fit_power_law
from .graph import Graph, require_connected
from .searchinfo import total_search_information
from .seeding import derive_seed


@dataclass(frozen=True)
class TreeScalingRow:
    n: int
    mean_bits: float
    std_bits: float
    samples: int


def gen_ring(n: int) -> Graph:
    if n < 3:
        raise NetskelError(f"ring needs at least 3 nodes, got {n}")
    return Graph.from_links(n, [(i, (i + 1) % n) for i in range(n)])


def gen_chain(n: int) -> Graph:
    if n < 1:
        raise NetskelError(f"chain needs at least 1 node, got {n}")
    return Graph.from_links(n, [(i, i + 1) for i in range(n - 1)])


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n < 1:
        raise NetskelError(f"tree needs at least 1 node, got {n}")
    if n == 1:
        return Graph.from_links(1, [])
    if n == 2:
        return Graph.from_links(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    links: list[tuple[int, int]] = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        links.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    links.append((u, v))
    return Graph.from_links(n, links)


def rewire_degree_preserving(g: Graph, swap_attempts: int, seed: int) -> Graph:
    """Randomize by double-edge swaps that keep the graph simple and connected.

    Each attempt picks two edges and swaps endpoints; the swap is discarded
    if it would create a self-loop or multilink, and reverted if a BFS shows
    the result disconnected. The degree sequence never changes.
    """
    if swap_attempts < 1:
        raise NetskelError(f"swap_attempts must be positive, got {swap_attempts}")
    require_connected(g)
    if g.link_count < 2:
        return g
    rng = random.Random(seed)
    edges = list(g.links)
    adj: list[set[int]] = [set(ns) for ns in g.adjacency]

    def connected() -> bool:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == g.node_count

    for _ in range(swap_attempts):
        i, j = rng.randrange(len(edges)), rng.randrange(len(edges))
        if i == j:
            continue
        a, b = edges[i]
        c, d = edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        # proposed replacement: {a,c} and {b,d}
        if a == c or b == d or c in adj[a] or d in adj[b]:
            continue
        adj[a].remove(b), adj[b].remove(a)
        adj[c].remove(d), adj[d].remove(c)
        adj[a].add(c), adj[c].add(a)
        adj[b].add(d), adj[d].add(b)
        if connected():
            edges[i] = (a, c) if a < c else (c, a)
            edges[j] = (b, d) if b < d else (d, b)
        else:
            adj[a].remove(c), adj[c].remove(a)
            adj[b].remove(d), adj[d].remove(b)
            adj[a].add(b), adj[b].add(a)
            adj[c].add(d), adj[d].add(c)
    return Graph.from_links(g.node_count, edges, g.labels)


def tree_scaling_experiment(
    n_min: int,
    n_max: int,
    step: int,
    samples: int,
    seed: int,
) -> tuple[list[TreeScalingRow], Optional[PowerLawFit]]:
    """Mean search information of random trees per size, with a power-law fit.

    Standard deviation is the population convention (0 for a single sample).
    The fit is None when fewer than 3 sizes give positive means.
    """
    if n_min < 2 or n_min > n_max:
        raise NetskelError(f"need 2 <= n_min <= n_max, got {n_min}..{n_max}")
    if step < 1:
        raise NetskelError(f"step must be positive, got {step}")
    if samples < 1:
        raise NetskelError(f"samples must be positive, got {samples}")
    rows: list[TreeScalingRow] = []
    counter = 0
    for n in range(n_min, n_max + 1, step):
        values = []
        for _ in range(samples):
            tree = gen_random_tree(n, derive_seed(seed, counter))
            counter += 1
            values.append(total_search_information(tree).total_bits)
        mean = math.fsum(values) / samples
        var = math.fsum((v - mean) ** 2 for v in values) / samples
        rows.append(
            TreeScalingRow(n=n, mean_bits=mean, std_bits=math.sqrt(var), samples=samples)
        )
    points = [(float(row.n), row.mean_bits) for row in rows if row.mean_bits > 0]
    fit = fit_power_law(points) if len(points) >= 3 else None
    return rows, fit
