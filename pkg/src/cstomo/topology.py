"""Synthetic topology generators.

Real operator topologies are rarely shareable, so experiments run on
generated graphs at comparable scale.  Scale-free graphs are the main
stand-in: their heterogeneous edge betweenness is the regime where a
betweenness prior has something to say.  Generators delegate to
networkx and re-index edges through :func:`cstomo.graph.load_graph`.
"""

from __future__ import annotations

import networkx as nx

from .errors import ConfigError
from .graph import Graph, load_graph


def scale_free(nodes: int, attach: int, seed: int) -> Graph:
    """Preferential-attachment graph with ``attach * (nodes - attach)``
    edges.  ``nodes=94, attach=3`` gives 273 links; ``nodes=125,
    attach=3`` gives 366."""
    if attach < 1 or attach >= nodes:
        raise ConfigError(f"attach must be in [1, nodes), got {attach}")
    g = nx.barabasi_albert_graph(nodes, attach, seed=seed)
    return load_graph(list(g.edges()))

def random_regular(nodes: int, degree: int, seed: int) -> Graph:
    """d-regular random graph with ``nodes * degree / 2`` edges."""
    if nodes * degree % 2 != 0:
        raise ConfigError("nodes * degree must be even for a regular graph")
    g = nx.random_regular_graph(degree, nodes, seed=seed)
    return load_graph(list(g.edges()))

def grid2d(rows: int, cols: int) -> Graph:
    """rows x cols lattice; deterministic, no seed."""
    if rows < 1 or cols < 1:
        raise ConfigError("grid dimensions must be positive")
    g = nx.grid_2d_graph(rows, cols)
    mapping = {node: i for i, node in enumerate(sorted(g.nodes()))}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges()]
    return load_graph(edges)
