"""Topology representation, edge betweenness, and random-walk generation.

The graph model is deliberately small: an undirected simple graph whose
edges carry stable integer indices in ``[0, N)``.  Those indices are the
coordinate system for every downstream vector (delays, priors, matrix
columns), so they never change once a :class:`Graph` is built.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

import numpy as np

from .errors import (
    DisconnectedGraphWarning,
    DuplicateEdgeError,
    EmptyInputError,
    InvalidCountError,
    IsolatedNodeError,
    SelfLoopError,
)

NodeId = Hashable


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with indexed edges.

    ``edges[e]`` is the node pair of edge ``e``; ``adj[u]`` lists
    ``(neighbor, edge_index)`` pairs.  Instances are immutable and safe
    to share across threads.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[tuple[int, int], ...], ...]
    labels: tuple[NodeId, ...] = ()

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])


@dataclass(frozen=True)
class EdgeBetweenness:
    """Shortest-path betweenness per edge index.

    ``values[e]`` counts unordered node pairs whose shortest paths cross
    edge ``e``, with fractional credit split evenly among equal-length
    paths.  ``max_value`` is the largest entry.
    """

    values: np.ndarray
    max_value: float


@dataclass(frozen=True)
class WalkPath:
    """One random walk: the visited node sequence plus the set of
    distinct edge indices it traversed."""

    nodes: tuple[int, ...]
    edge_set: frozenset[int]

    @property
    def steps(self) -> int:
        return len(self.nodes) - 1


def load_graph(edge_list: Sequence[tuple[NodeId, NodeId]]) -> Graph:
    """Build a :class:`Graph` from ``(node, node)`` pairs.

    Node ids (ints or strings) are mapped to dense indices in first
    appearance order; edge indices follow list order.  Self-loops and
    duplicate unordered pairs are rejected, identifying the offending
    entry.
    """
    if not edge_list:
        raise EmptyInputError("edge list is empty")

    index: dict[NodeId, int] = {}
    labels: list[NodeId] = []

    def node_of(raw: NodeId) -> int:
        if raw not in index:
            index[raw] = len(labels)
            labels.append(raw)
        return index[raw]

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, (a, b) in enumerate(edge_list):
        if a == b:
            raise SelfLoopError(f"entry {lineno}: self-loop at node {a!r}")
        u, v = node_of(a), node_of(b)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"entry {lineno}: duplicate edge {a!r} -- {b!r}")
        seen.add(key)
        edges.append((u, v))

    adj_lists: list[list[tuple[int, int]]] = [[] for _ in labels]
    for e, (u, v) in enumerate(edges):
        adj_lists[u].append((v, e))
        adj_lists[v].append((u, e))

    return Graph(
        node_count=len(labels),
        edges=tuple(edges),
        adj=tuple(tuple(a) for a in adj_lists),
        labels=tuple(labels),
    )


def load_edge_list(path) -> Graph:
    """Read the text edge-list format: one edge per line, two
    whitespace-separated node ids, ``#`` lines ignored."""
    pairs: list[tuple[str, str]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise EmptyInputError(
                    f"{path}:{lineno}: expected two node ids, got {stripped!r}"
                )
            pairs.append((parts[0], parts[1]))
    if not pairs:
        raise EmptyInputError(f"{path}: no edges found")
    return load_graph(pairs)


def is_connected(g: Graph) -> bool:
    if g.node_count <= 1:
        return True
    seen = [False] * g.node_count
    queue = deque([0])
    seen[0] = True
    count = 1
    while queue:
        u = queue.popleft()
        for v, _ in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.node_count


def edge_betweenness(g: Graph) -> EdgeBetweenness:
    """Shortest-path edge betweenness via Brandes' accumulation.

    Counts unordered node pairs with even splitting among equal-length
    shortest paths.  On a disconnected graph a warning is emitted and
    pairs in different components contribute zero.
    """
    if not is_connected(g):
        warnings.warn(
            "graph is disconnected; cross-component pairs contribute zero",
            DisconnectedGraphWarning,
            stacklevel=2,
        )

    n = g.node_count
    values = np.zeros(g.edge_count, dtype=np.float64)

    for source in range(n):
        # BFS phase: shortest-path counts and predecessor edges.
        dist = [-1] * n
        sigma = [0.0] * n
        preds: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        dist[source] = 0
        sigma[source] = 1.0
        order: list[int] = []
        queue = deque([source])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v, e in g.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
                    preds[v].append((u, e))
        # Accumulation phase: push pair dependencies back down the BFS DAG.
        delta = [0.0] * n
        for w in reversed(order):
            for u, e in preds[w]:
                credit = sigma[u] / sigma[w] * (1.0 + delta[w])
                values[e] += credit
                delta[u] += credit

    # Each unordered pair was counted from both endpoints.
    values *= 0.5
    max_value = float(values.max()) if len(values) else 0.0
    return EdgeBetweenness(values=values, max_value=max_value)


def random_walk(g: Graph, start: int, steps: int, rng: np.random.Generator) -> WalkPath:
    """Simple random walk: each step moves to a uniformly random
    neighbor.  Deterministic given the generator state."""
    if steps < 1:
        raise InvalidCountError(f"steps must be >= 1, got {steps}")
    if not (0 <= start < g.node_count):
        raise InvalidCountError(f"start node {start} out of range")
    if g.degree(start) == 0:
        raise IsolatedNodeError(f"node {start} has no neighbors")

    nodes = [start]
    edge_set: set[int] = set()
    current = start
    for _ in range(steps):
        neighbors = g.adj[current]
        v, e = neighbors[int(rng.integers(len(neighbors)))]
        nodes.append(v)
        edge_set.add(e)
        current = v
    return WalkPath(nodes=tuple(nodes), edge_set=frozenset(edge_set))


def uniform_start(g: Graph, rng: np.random.Generator) -> int:
    return int(rng.integers(g.node_count))


def sample_walks(
    g: Graph,
    m: int,
    steps: int,
    rng: np.random.Generator,
    start_policy: Callable[[Graph, np.random.Generator], int] = uniform_start,
) -> list[WalkPath]:
    """Draw ``m`` independent walks; start nodes come from
    ``start_policy`` (uniform over nodes by default)."""
    if m < 1:
        raise InvalidCountError(f"walk count must be >= 1, got {m}")
    return [random_walk(g, start_policy(g, rng), steps, rng) for _ in range(m)]
