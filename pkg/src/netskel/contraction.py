"""Tree-contraction into skeleton + super-nodes and its search information.

A single Kruskal-like pass merges link endpoints in a given order; a
merge is rejected when the two current super-nodes share a skeleton
neighbor, since that merge would create a multilink. Every super-node's
internal structure is therefore a tree, and the skeleton keeps the
original graph's cyclomatic number.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import NetskelError
from .graph import Graph, Link, require_connected
from .searchinfo import total_search_information
from .seeding import derive_seed


@dataclass(frozen=True)
class SuperNode:
    members: tuple[int, ...]
    internal_links: tuple[Link, ...]


@dataclass(frozen=True)
class SimplifiedNetwork:
    original: Graph
    skeleton: Graph
    supernodes: tuple[SuperNode, ...]
    membership: tuple[int, ...]
    ordering_seed: Optional[int] = None


@dataclass(frozen=True)
class SimplifiedSearchInfo:
    h_skeleton: float
    h_supernodes: tuple[float, ...]
    h_supernodes_total: float
    h_simp: float


@dataclass(frozen=True)
class ContractionSample:
    trial: int
    skeleton_nodes: int
    h_skeleton: float
    h_supernodes: float
    h_simp: float


@dataclass(frozen=True)
class MinimizeResult:
    best: SimplifiedNetwork
    best_info: SimplifiedSearchInfo
    best_trial: int
    worst: SimplifiedNetwork
    worst_info: SimplifiedSearchInfo
    worst_trial: int
    samples: tuple[ContractionSample, ...]


def order_links_random(g: Graph, seed: int) -> list[Link]:
    """Uniform random permutation of g's links, deterministic per seed."""
    links = list(g.links)
    random.Random(seed).shuffle(links)
    return links


def order_links_degree(g: Graph) -> list[Link]:
    """Links by ascending endpoint degree sum, ties broken lexicographically.

    Weights use the original degrees, fixed before any contraction.
    """
    return sorted(g.links, key=lambda l: (g.degrees[l[0]] + g.degrees[l[1]], l))


def tree_contract(g: Graph, order: list[Link]) -> SimplifiedNetwork:
    """One pass over links in the given order, merging wherever no multilink
    would result. Rejected links stay rejected (merging can only add common
    neighbors), so a single pass is exhaustive."""
    require_connected(g)
    if sorted(order) != list(g.links):
        raise NetskelError("order must be a permutation of the graph's links")

    parent = list(range(g.node_count))
    size = [1] * g.node_count

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    neigh: dict[int, set[int]] = {
        u: set(g.adjacency[u]) for u in range(g.node_count)
    }
    internal: dict[int, list[Link]] = {u: [] for u in range(g.node_count)}

    for u, v in order:
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        nu, nv = neigh[ru], neigh[rv]
        small, large = (nu, nv) if len(nu) <= len(nv) else (nv, nu)
        if any(w in large for w in small if w != ru and w != rv):
            continue  # merge would create a multilink
        if size[ru] < size[rv]:
            ru, rv = rv, ru
            nu, nv = nv, nu
        parent[rv] = ru
        size[ru] += size[rv]
        merged = (nu | nv) - {ru, rv}
        for w in merged:
            neigh[w].discard(ru)
            neigh[w].discard(rv)
            neigh[w].add(ru)
        neigh[ru] = merged
        del neigh[rv]
        internal[ru] = internal[ru] + internal[rv] + [(u, v)]
        del internal[rv]

    min_member: dict[int, int] = {}
    for node in range(g.node_count):
        r = find(node)
        if r not in min_member:
            min_member[r] = node
    roots = sorted(neigh, key=lambda r: min_member[r])
    root_index = {r: i for i, r in enumerate(roots)}
    membership = tuple(root_index[find(u)] for u in range(g.node_count))

    members: list[list[int]] = [[] for _ in roots]
    for node, grp in enumerate(membership):
        members[grp].append(node)
    supernodes = tuple(
        SuperNode(members=tuple(members[i]), internal_links=tuple(sorted(internal[r])))
        for i, r in enumerate(roots)
    )

    skeleton_links: set[Link] = set()
    for u, v in g.links:
        a, b = membership[u], membership[v]
        if a != b:
            skeleton_links.add((a, b) if a < b else (b, a))
    skeleton = Graph.from_links(
        len(roots),
        sorted(skeleton_links),
        tuple(f"s{i}" for i in range(len(roots))),
    )
    return SimplifiedNetwork(
        original=g,
        skeleton=skeleton,
        supernodes=supernodes,
        membership=membership,
    )


def supernode_tree(g: Graph, sn: SuperNode) -> Graph:
    """The internal tree of a super-node as a standalone graph."""
    local = {node: i for i, node in enumerate(sn.members)}
    links = [(local[u], local[v]) for u, v in sn.internal_links]
    return Graph.from_links(
        len(sn.members), links, tuple(g.labels[m] for m in sn.members)
    )


def simplified_search_information(s: SimplifiedNetwork) -> SimplifiedSearchInfo:
    """H_simp = H of the skeleton plus H of each super-node tree in isolation."""
    if s.skeleton.node_count <= 1:
        h_skeleton = 0.0
    else:
        h_skeleton = total_search_information(s.skeleton).total_bits
    h_super: list[float] = []
    for sn in s.supernodes:
        if len(sn.members) <= 1:
            h_super.append(0.0)
        else:
            h_super.append(total_search_information(supernode_tree(s.original, sn)).total_bits)
    h_super_total = sum(h_super)
    return SimplifiedSearchInfo(
        h_skeleton=h_skeleton,
        h_supernodes=tuple(h_super),
        h_supernodes_total=h_super_total,
        h_simp=h_skeleton + h_super_total,
    )


def minimize_h_simp(g: Graph, trials: int, seed: int) -> MinimizeResult:
    """Sample random contraction orderings and track the extremes of h_simp.

    Trial i uses a seed derived from the master seed by counter, so the
    result is reproducible and trials could run in any order. Ties keep
    the lowest trial index.
    """
    if trials < 1:
        raise NetskelError(f"trials must be positive, got {trials}")
    require_connected(g)
    best = worst = None
    best_info = worst_info = None
    best_trial = worst_trial = -1
    samples: list[ContractionSample] = []
    for trial in range(trials):
        order = order_links_random(g, derive_seed(seed, trial))
        simp = tree_contract(g, order)
        info = simplified_search_information(simp)
        samples.append(
            ContractionSample(
                trial=trial,
                skeleton_nodes=simp.skeleton.node_count,
                h_skeleton=info.h_skeleton,
                h_supernodes=info.h_supernodes_total,
                h_simp=info.h_simp,
            )
        )
        if best_info is None or info.h_simp < best_info.h_simp:
            best, best_info, best_trial = simp, info, trial
        if worst_info is None or info.h_simp > worst_info.h_simp:
            worst, worst_info, worst_trial = simp, info, trial
    assert best is not None and worst is not None
    assert best_info is not None and worst_info is not None
    return MinimizeResult(
        best=best,
        best_info=best_info,
        best_trial=best_trial,
        worst=worst,
        worst_info=worst_info,
        worst_trial=worst_trial,
        samples=tuple(samples),
    )
