import random
import sys
from importlib import resources
from pathlib import Path

import pytest

import netskel as ns

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def karate() -> ns.Graph:
    text = (resources.files("netskel") / "data/karate.edges").read_text()
    return ns.load_edge_list(text)


def random_connected_graph(n: int, p: float, seed: int) -> ns.Graph:
    """Connected Erdos-Renyi sample; retries until connected."""
    rng = random.Random(seed)
    while True:
        links = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = ns.Graph.from_links(n, links)
        if n > 0 and ns.is_connected(g):
            return g


def tree_with_chords(n: int, chords: int, seed: int) -> ns.Graph:
    """Random tree plus a few extra random edges (keeps it connected)."""
    tree = ns.gen_random_tree(n, seed)
    rng = random.Random(seed + 1)
    links = set(tree.links)
    while len(links) < n - 1 + chords:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            links.add((min(u, v), max(u, v)))
    return ns.Graph.from_links(n, sorted(links))
