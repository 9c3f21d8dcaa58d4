"""
Edge orientations with bounded in-degree. A graph can be oriented with every in-degree at
most r exactly when every subgraph has average degree at most 2r; even-degree graphs reach
the bound with an Euler orientation.
"""
from typing import Optional, Sequence

import networkx as nx
import numpy as np

from .multigraph import MultiGraph, degree_sequence


class Orientation(object):
    def __init__(self, n: int, tails: Sequence[int], heads: Sequence[int]):
        """
        :param n: int. Vertex count.
        :param tails: array-like of shape (m,). Tail of every edge id.
        :param heads: array-like of shape (m,). Head of every edge id.
        """
        self.n = n
        self.tails = np.asarray(tails, dtype=np.int64)
        self.heads = np.asarray(heads, dtype=np.int64)

    @property
    def in_degrees(self) -> np.ndarray:
        return np.bincount(self.heads, minlength=self.n)

    @property
    def out_degrees(self) -> np.ndarray:
        return np.bincount(self.tails, minlength=self.n)

    @property
    def max_in_degree(self) -> int:
        return int(self.in_degrees.max(initial=0))

    def agrees_with(self, g: MultiGraph) -> bool:
        """Whether every edge id is oriented between its own endpoints."""
        if len(self.tails) != g.m:
            return False
        arcs = np.sort(np.stack([self.tails, self.heads], axis=1), axis=1)
        return bool(np.array_equal(arcs, np.sort(g.edges, axis=1)))

    def __repr__(self):
        return f"Orientation(n={self.n}, max_in_degree={self.max_in_degree})"


def euler_orient(g: MultiGraph) -> Orientation:
    """
    Orients every edge along an Euler circuit of its component, so in-degree equals
    out-degree equals degree/2 everywhere (loops count 2).

    :param g: MultiGraph with all degrees even.
    :return: Orientation.
    """
    degrees = degree_sequence(g)
    odd = np.flatnonzero(degrees % 2)
    if len(odd):
        raise ValueError(
            f"Euler orientation needs even degrees, vertex {odd[0]} has degree {degrees[odd[0]]}"
        )
    tails = np.empty(g.m, dtype=np.int64)
    heads = np.empty(g.m, dtype=np.int64)
    graph = g.to_networkx()
    for component in nx.connected_components(graph):
        if len(component) == 1 and graph.degree(next(iter(component))) == 0:
            continue
        source = min(component)
        circuit = nx.eulerian_circuit(graph.subgraph(component), source=source, keys=True)
        for u, v, edge_id in circuit:
            tails[edge_id], heads[edge_id] = u, v
    return Orientation(g.n, tails, heads)


def flow_orient(g: MultiGraph, r: int) -> Optional[Orientation]:
    """
    Orientation with every in-degree at most r, found as a maximum flow that routes one
    unit from each edge to one of its endpoints (vertex capacity r).

    :return: Orientation, or None when no such orientation exists (some subgraph has
        average degree above 2r).
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    network = nx.DiGraph()
    for edge_id, (u, v) in enumerate(g.edges.tolist()):
        network.add_edge("source", ("edge", edge_id), capacity=1)
        network.add_edge(("edge", edge_id), ("vertex", u), capacity=1)
        network.add_edge(("edge", edge_id), ("vertex", v), capacity=1)
    for v in range(g.n):
        network.add_edge(("vertex", v), "sink", capacity=r)
    if g.m == 0:
        return Orientation(g.n, [], [])
    value, flow = nx.maximum_flow(network, "source", "sink")
    if value < g.m:
        return None
    tails = np.empty(g.m, dtype=np.int64)
    heads = np.empty(g.m, dtype=np.int64)
    for edge_id, (u, v) in enumerate(g.edges.tolist()):
        head = v if flow[("edge", edge_id)][("vertex", v)] > 0 else u
        tails[edge_id], heads[edge_id] = (u if head == v else v), head
    return Orientation(g.n, tails, heads)
