"""Shared fixtures: paper instances, graph builders, atlas corpora, and
independent brute-force oracles used to cross-check the library."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from greycontrast import Graph

F = Fraction


# ---------------------------------------------------------------------------
# builders

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n_leaves: int) -> Graph:
    return Graph.from_edges(n_leaves + 1, [(0, i) for i in range(1, n_leaves + 1)])


def wheel6_graph() -> Graph:
    # hub 0 joined to the rim cycle (1, 2, 3, 4, 5)
    rim = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    return Graph.from_edges(6, [(0, i) for i in range(1, 6)] + rim)


def spider_graph(leg_lengths: list[int]) -> Graph:
    """Hub 0 with one path per entry; returns the graph (leaves sit at the
    end of each leg in construction order)."""
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


@pytest.fixture(scope="session")
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture(scope="session")
def wheel6() -> Graph:
    return wheel6_graph()


# ---------------------------------------------------------------------------
# corpora

def _atlas_connected():
    from networkx.generators.atlas import graph_atlas_g
    import networkx as nx

    graphs = []
    for g in graph_atlas_g():
        if g.number_of_nodes() >= 1 and nx.is_connected(g):
            graphs.append(g)
    return graphs


def _to_graph(nxg) -> Graph:
    nodes = sorted(nxg.nodes())
    relabel = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(
        len(nodes), [(relabel[u], relabel[v]) for u, v in nxg.edges()]
    )


@pytest.fixture(scope="session")
def atlas_small():
    """Every non-isomorphic connected graph with at most 6 vertices."""
    return [_to_graph(g) for g in _atlas_connected() if g.number_of_nodes() <= 6]


@pytest.fixture(scope="session")
def solver_corpus():
    """200 connected graphs with at least one edge: exhaustive for n <= 6
    (142 graphs) plus a fixed 58-graph spread of the 853 seven-vertex
    atlas graphs, including the densest one."""
    connected = _atlas_connected()
    small = [g for g in connected if 2 <= g.number_of_nodes() <= 6]
    seven = [g for g in connected if g.number_of_nodes() == 7]
    picks = list(range(0, len(seven), 15))  # 57 evenly spread
    picks.append(len(seven) - 1)  # K_7
    sample = [seven[i] for i in sorted(set(picks))]
    corpus = [_to_graph(g) for g in small + sample]
    assert len(corpus) == 200
    return corpus


def random_connected_bipartite(rng: random.Random, n: int) -> Graph:
    """Random connected bipartite graph: a random bipartition respecting
    spanning tree plus extra cross edges."""
    sizes = rng.randint(1, n - 1)
    part = [0] * sizes + [1] * (n - sizes)
    rng.shuffle(part)
    vertices = list(range(n))
    rng.shuffle(vertices)
    edges = set()
    # spanning tree: attach each vertex to an earlier one of the other part
    placed = [vertices[0]]
    for v in vertices[1:]:
        others = [u for u in placed if part[u] != part[v]]
        if not others:
            # flip this vertex's side so the graph stays connected
            part[v] = 1 - part[v]
            others = [u for u in placed if part[u] != part[v]]
        u = rng.choice(others)
        edges.add((min(u, v), max(u, v)))
        placed.append(v)
    for u in range(n):
        for v in range(u + 1, n):
            if part[u] != part[v] and rng.random() < 0.35:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random labelled tree from a Pruefer sequence."""
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def random_fixed_tones(rng: random.Random, g: Graph, size: int) -> dict[int, Fraction] | None:
    """Random valid incomplete greyscale of the given size, or None if the
    sampled vertex set admits no valid extreme-tone assignment."""
    vertices = rng.sample(range(g.n), size)
    for _ in range(40):
        mapping = {v: F(rng.randint(0, 1)) for v in vertices}
        ok = all(
            not (u in mapping and v in mapping and mapping[u] == mapping[v])
            for u, v in g.edges
        )
        if ok:
            return mapping
    return None


# ---------------------------------------------------------------------------
# independent brute-force oracles (kept deliberately naive)

def brute_chromatic(g: Graph) -> int:
    if g.m == 0:
        return 1
    for k in range(2, g.n + 1):
        for colours in itertools.product(range(k), repeat=g.n):
            if all(colours[u] != colours[v] for u, v in g.edges):
                return k
    raise AssertionError("unreachable")


def brute_best_vector(
    g: Graph, values: tuple[Fraction, ...], fixed: dict[int, Fraction] | None = None
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Plain enumeration over compatible greyscales: returns the maximum
    contrast vector and its first (lexicographically smallest) witness."""
    fixed = fixed or {}
    free = [v for v in range(g.n) if v not in fixed]
    best_vec = None
    best_tones = None
    base = [fixed.get(v) for v in range(g.n)]
    for combo in itertools.product(values, repeat=len(free)):
        tones = list(base)
        for v, t in zip(free, combo):
            tones[v] = t
        if F(0) not in tones or F(1) not in tones:
            continue
        vec = tuple(sorted(abs(tones[u] - tones[v]) for u, v in g.edges))
        if best_vec is None or vec > best_vec:
            best_vec = vec
            best_tones = tuple(tones)
    assert best_vec is not None
    return best_vec, best_tones


def grid_best_vector_numpy(
    g: Graph, denominators: int, fixed: dict[int, Fraction]
) -> tuple[Fraction, ...]:
    """Exhaustive maximum over the grid {i/denominators} using numpy; exact
    because all arithmetic stays integral.  Returns the vector only."""
    import numpy as np

    d = denominators
    free = [v for v in range(g.n) if v not in fixed]
    grids = np.indices((d + 1,) * len(free)).reshape(len(free), -1).T.astype(np.int16)
    tones = np.empty((grids.shape[0], g.n), dtype=np.int16)
    for v in range(g.n):
        if v in fixed:
            tones[:, v] = int(fixed[v] * d)
    for col, v in enumerate(free):
        tones[:, v] = grids[:, col]
    keep = (tones == 0).any(axis=1) & (tones == d).any(axis=1)
    tones = tones[keep]
    diffs = np.empty((tones.shape[0], g.m), dtype=np.int16)
    for i, (u, v) in enumerate(g.edges):
        diffs[:, i] = np.abs(tones[:, u] - tones[:, v])
    diffs.sort(axis=1)
    order = np.lexsort(tuple(diffs[:, i] for i in range(g.m - 1, -1, -1)))
    best = diffs[order[-1]]
    return tuple(F(int(x), d) for x in best)
