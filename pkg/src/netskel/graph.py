"""Undirected simple graph representation, I/O and structural metrics."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ConnectivityError, ParseError, ValidationError

Link = tuple[int, int]


def _normalize_link(u: int, v: int) -> Link:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph over dense node indices 0..N-1.

    ``links`` holds normalized (min, max) pairs in sorted order, ``labels``
    maps each index back to its external name, ``adjacency`` gives sorted
    neighbor lists for deterministic iteration.
    """

    node_count: int
    links: tuple[Link, ...]
    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @classmethod
    def from_links(
        cls,
        node_count: int,
        links: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "Graph":
        if node_count < 0:
            raise ValidationError("node_count must be non-negative")
        if labels is None:
            labels = tuple(str(i) for i in range(node_count))
        else:
            labels = tuple(labels)
            if len(labels) != node_count:
                raise ValidationError(
                    f"got {len(labels)} labels for {node_count} nodes"
                )
        normalized: list[Link] = []
        seen: set[Link] = set()
        for u, v in links:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValidationError(f"link ({u}, {v}) references unknown node")
            if u == v:
                raise ValidationError(f"self-loop on node {labels[u]!r}")
            link = _normalize_link(u, v)
            if link in seen:
                raise ValidationError(
                    f"duplicate link {labels[link[0]]!r} -- {labels[link[1]]!r}"
                )
            seen.add(link)
            normalized.append(link)
        normalized.sort()
        neighbors: list[list[int]] = [[] for _ in range(node_count)]
        for u, v in normalized:
            neighbors[u].append(v)
            neighbors[v].append(u)
        adjacency = tuple(tuple(sorted(ns)) for ns in neighbors)
        degrees = tuple(len(ns) for ns in adjacency)
        return cls(
            node_count=node_count,
            links=tuple(normalized),
            labels=labels,
            adjacency=adjacency,
            degrees=degrees,
        )

    @property
    def link_count(self) -> int:
        return len(self.links)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown node label {label!r}") from None


@dataclass(frozen=True)
class Partition:
    """Assignment of every node to one of ``group_count`` dense, non-empty groups."""

    assignment: tuple[int, ...]
    group_count: int

    def __post_init__(self) -> None:
        if self.group_count <= 0:
            raise ValidationError("group_count must be positive")
        used = set(self.assignment)
        if used != set(range(self.group_count)):
            raise ValidationError(
                "group indices must be dense 0..group_count-1 with no empty group"
            )

    def groups(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.group_count)]
        for node, grp in enumerate(self.assignment):
            out[grp].append(node)
        return out


def load_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse an edge list: one "LABEL LABEL" pair per line, '#' comments.

    Labels get dense indices in first-appearance order. Self-loops and
    duplicate edges are rejected.
    """
    if isinstance(text, str):
        lines: Iterable[str] = text.splitlines()
    else:
        lines = text
    index: dict[str, int] = {}
    labels: list[str] = []
    links: list[tuple[int, int]] = []
    seen: set[Link] = set()

    def intern(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected 2 tokens, got {len(tokens)}: {line!r}"
            )
        u, v = intern(tokens[0]), intern(tokens[1])
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop on {tokens[0]!r}")
        link = _normalize_link(u, v)
        if link in seen:
            raise ValidationError(
                f"line {lineno}: duplicate edge {tokens[0]!r} -- {tokens[1]!r}"
            )
        seen.add(link)
        links.append(link)
    return Graph.from_links(len(labels), links, labels)


def write_edge_list(g: Graph) -> str:
    """Inverse of load_edge_list; preserves the link set and labels."""
    return "".join(f"{g.labels[u]} {g.labels[v]}\n" for u, v in g.links)


def load_partition(text: str | Iterable[str], g: Graph) -> Partition:
    """Parse "LABEL GROUP" lines into a Partition over g's nodes.

    Group tokens are remapped to dense indices in first-appearance order.
    """
    if isinstance(text, str):
        lines: Iterable[str] = text.splitlines()
    else:
        lines = text
    assignment: list[Optional[int]] = [None] * g.node_count
    group_index: dict[str, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected 2 tokens, got {len(tokens)}: {line!r}"
            )
        node = g.index_of(tokens[0])
        if tokens[1] not in group_index:
            group_index[tokens[1]] = len(group_index)
        assignment[node] = group_index[tokens[1]]
    missing = [g.labels[i] for i, a in enumerate(assignment) if a is None]
    if missing:
        raise ValidationError(f"partition does not cover nodes: {missing[:5]}")
    return Partition(tuple(assignment), len(group_index))  # type: ignore[arg-type]


def connected_components(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return (component count, per-node component label) via BFS."""
    labels = [-1] * g.node_count
    count = 0
    for start in range(g.node_count):
        if labels[start] != -1:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if labels[v] == -1:
                    labels[v] = count
                    queue.append(v)
        count += 1
    return count, tuple(labels)


def is_connected(g: Graph) -> bool:
    count, _ = connected_components(g)
    return count <= 1


def require_connected(g: Graph) -> None:
    """Raise ConnectivityError naming two nodes in different components."""
    count, labels = connected_components(g)
    if count > 1:
        a = labels.index(0)
        b = labels.index(1)
        raise ConnectivityError(
            f"graph is disconnected: no path between {g.labels[a]!r} and {g.labels[b]!r}"
        )


def cyclomatic_number(g: Graph) -> int:
    """Number of independent cycles: L - N + P."""
    count, _ = connected_components(g)
    return g.link_count - g.node_count + count


def quotient_graph(g: Graph, p: Partition) -> Graph:
    """Simple graph over partition groups; cross-group links deduplicated,
    intra-group links dropped."""
    if len(p.assignment) != g.node_count:
        raise ValidationError(
            f"partition covers {len(p.assignment)} nodes, graph has {g.node_count}"
        )
    cross: set[Link] = set()
    for u, v in g.links:
        a, b = p.assignment[u], p.assignment[v]
        if a != b:
            cross.add(_normalize_link(a, b))
    return Graph.from_links(
        p.group_count, sorted(cross), tuple(f"g{i}" for i in range(p.group_count))
    )


def to_dot(g: Graph, node_weights: Optional[Sequence[int]] = None) -> str:
    """Render as a Graphviz undirected graph; optional weights scale node size."""
    if node_weights is not None:
        if len(node_weights) != g.node_count:
            raise ValidationError("node_weights length must equal node_count")
        if any(w <= 0 for w in node_weights):
            raise ValidationError("node_weights must be positive")
    out = ["graph {"]
    for i in range(g.node_count):
        attrs = [f'label="{g.labels[i]}"']
        if node_weights is not None:
            attrs.append(f"width={0.3 * node_weights[i]:.2f}")
            attrs.append("fixedsize=true")
        out.append(f'  n{i} [{", ".join(attrs)}];')
    for u, v in g.links:
        out.append(f"  n{u} -- n{v};")
    out.append("}")
    return "\n".join(out) + "\n"
