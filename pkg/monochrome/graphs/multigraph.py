"""
Graph representations and traversal primitives shared by every other module.

Edge identity is positional: edge ``i`` is row ``i`` of ``MultiGraph.edges``. Colorings,
orientations and subgraph mappings all refer to edge ids, never to endpoint pairs, so
parallel edges are distinct records that may be treated differently.
"""
from typing import Callable, List, Sequence, Union

import networkx as nx
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import ColoringError

EdgePredicate = Union[None, np.ndarray, Sequence[int], Callable[[int], bool]]


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class MultiGraph(object):
    def __init__(
        self,
        n: int,
        edges: Union[np.ndarray, Sequence],
        loops_allowed: bool = True,
        origin: np.ndarray = None,
    ):
        """
        Undirected multigraph on vertices ``0..n-1``. Loops and parallel edges are allowed
        and each one keeps its own edge id.

        :param n: int. Vertex count.
        :param edges: array-like of shape (m, 2). Endpoint pairs in edge-id order.
        :param loops_allowed: bool. Defaults to True. If False, loops are rejected.
        :param origin: Optional array of shape (m,). Edge ids of the graph this one was cut
            from (set by `induced_subgraph`).
        """
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        edges = np.array(edges, dtype=np.int64).reshape((-1, 2))
        if edges.size and (edges.min() < 0 or edges.max() >= n):
            raise ValueError(f"edge endpoint outside [0, {n})")
        if not loops_allowed and np.any(edges[:, 0] == edges[:, 1]):
            raise ValueError("graph has loops but loops_allowed is False")
        if origin is not None:
            origin = np.asarray(origin, dtype=np.int64)
            if origin.shape != (len(edges),):
                raise ValueError("origin must map every edge id")
            origin = _frozen(origin.copy())
        self.n = int(n)
        self.edges = _frozen(edges)
        self.loops_allowed = loops_allowed
        self.origin = origin

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, edge_id: int):
        u, v = self.edges[edge_id]
        return int(u), int(v)

    def loop_count(self) -> int:
        return int(np.count_nonzero(self.edges[:, 0] == self.edges[:, 1]))

    def multi_edge_count(self) -> int:
        """Number of non-loop edges that repeat an earlier endpoint pair."""
        proper = np.sort(self.edges[self.edges[:, 0] != self.edges[:, 1]], axis=1)
        if len(proper) == 0:
            return 0
        return len(proper) - len(np.unique(proper, axis=0))

    def is_simple(self) -> bool:
        return self.loop_count() == 0 and self.multi_edge_count() == 0

    def adjacency(self) -> List[List[tuple]]:
        """
        :return: List[List[Tuple[int, int]]]. For each vertex, (neighbor, edge_id) pairs in
            edge-id order. A loop appears once in its vertex's list.
        """
        adjacency = [[] for _ in range(self.n)]
        for edge_id, (u, v) in enumerate(self.edges.tolist()):
            adjacency[u].append((v, edge_id))
            if u != v:
                adjacency[v].append((u, edge_id))
        return adjacency

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(
            (u, v, edge_id) for edge_id, (u, v) in enumerate(self.edges.tolist())
        )
        return graph

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"


class FunctionalDigraph(object):
    def __init__(self, succ: Union[np.ndarray, Sequence[int]]):
        """
        Digraph on ``0..n-1`` where every vertex has exactly one out-arc ``v -> succ[v]``.
        Loops are forbidden.

        :param succ: array-like of shape (n,). Successor of every vertex.
        """
        succ = np.array(succ, dtype=np.int64).reshape((-1,))
        n = len(succ)
        if n and (succ.min() < 0 or succ.max() >= n):
            raise ValueError(f"successor outside [0, {n})")
        if np.any(succ == np.arange(n)):
            raise ValueError("functional digraph has a fixed point (loop)")
        self.n = n
        self.succ = _frozen(succ)

    def arcs(self) -> np.ndarray:
        """:return: np.ndarray of shape (n, 2). Arc ``v`` is (v, succ[v])."""
        return np.stack([np.arange(self.n), self.succ], axis=1)

    def in_degrees(self) -> np.ndarray:
        return np.bincount(self.succ, minlength=self.n)

    def __repr__(self):
        return f"FunctionalDigraph(n={self.n})"


class HamiltonDecomposition(object):
    def __init__(self, cycles: Union[np.ndarray, Sequence[Sequence[int]]]):
        """
        r Hamilton cycles on ``0..n-1``, each stored as one of its two cyclic vertex orders.
        Cycle i (0-based) contributes edges ``i*n + j = {cycles[i][j], cycles[i][j+1 mod n]}``
        to `to_multigraph`.

        :param cycles: array-like of shape (r, n). Each row is a permutation of range(n).
        """
        cycles = np.array(cycles, dtype=np.int64)
        if cycles.ndim != 2:
            raise ValueError("cycles must be a 2d array of shape (r, n)")
        r, n = cycles.shape
        identity = np.arange(n)
        for i, order in enumerate(cycles):
            if not np.array_equal(np.sort(order), identity):
                raise ValueError(f"cycle {i} is not a permutation of range({n})")
        self.n = n
        self.cycles = _frozen(cycles)

    @property
    def r(self) -> int:
        return len(self.cycles)

    def edge_ids(self, color: int) -> range:
        """:return: range. Edge ids of H_color (1-based) in `to_multigraph`."""
        return range((color - 1) * self.n, color * self.n)

    def to_multigraph(self) -> MultiGraph:
        heads = np.roll(self.cycles, -1, axis=1)
        edges = np.stack([self.cycles.reshape(-1), heads.reshape(-1)], axis=1)
        return MultiGraph(self.n, edges)

    def __repr__(self):
        return f"HamiltonDecomposition(n={self.n}, r={self.r})"


class EdgeColoring(object):
    def __init__(self, colors: Union[np.ndarray, Sequence[int]], r: int):
        """
        Total map edge id -> color in 1..r.

        :param colors: array-like of shape (m,). Color of every edge id.
        :param r: int. Number of colors.
        """
        colors = np.array(colors, dtype=np.int64).reshape((-1,))
        if r < 1:
            raise ColoringError(f"need at least one color, got r={r}")
        if colors.size and (colors.min() < 1 or colors.max() > r):
            raise ColoringError(f"colors must lie in 1..{r}")
        self.colors = _frozen(colors)
        self.r = int(r)

    def __len__(self):
        return len(self.colors)

    def check_total(self, g: MultiGraph):
        if len(self.colors) != g.m:
            raise ColoringError(
                f"coloring covers {len(self.colors)} edge ids but graph has {g.m}"
            )

    def mask(self, color: int) -> np.ndarray:
        return self.colors == color

    def counts(self) -> np.ndarray:
        """:return: np.ndarray of shape (r,). Edge count of colors 1..r."""
        return np.bincount(self.colors, minlength=self.r + 1)[1:]

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.r == other.r and np.array_equal(self.colors, other.colors)

    def __repr__(self):
        return f"EdgeColoring(m={len(self.colors)}, r={self.r})"


def edge_mask(g: MultiGraph, keep: EdgePredicate = None) -> np.ndarray:
    """
    Normalizes an edge predicate to a boolean mask over edge ids.

    :param keep: None (keep all), a boolean mask of shape (m,), a sequence of edge ids, or a
        callable edge_id -> bool.
    :return: np.ndarray of dtype bool and shape (m,).
    """
    if keep is None:
        return np.ones(g.m, dtype=bool)
    if callable(keep):
        return np.fromiter((bool(keep(i)) for i in range(g.m)), dtype=bool, count=g.m)
    keep = np.asarray(keep)
    if keep.dtype == bool:
        if keep.shape != (g.m,):
            raise ValueError(f"mask has shape {keep.shape}, expected ({g.m},)")
        return keep
    mask = np.zeros(g.m, dtype=bool)
    mask[keep.astype(np.int64)] = True
    return mask


def component_labels(g: MultiGraph, keep: EdgePredicate = None) -> np.ndarray:
    """
    :return: np.ndarray of shape (n,). Component label of every vertex in the subgraph
        spanned by the kept edges (isolated vertices get their own label).
    """
    kept = g.edges[edge_mask(g, keep)]
    adjacency = coo_matrix(
        (np.ones(len(kept), dtype=np.int32), (kept[:, 0], kept[:, 1])),
        shape=(g.n, g.n),
    )
    _, labels = connected_components(adjacency, directed=False)
    return labels


def components(g: MultiGraph, keep: EdgePredicate = None) -> List[np.ndarray]:
    """
    :param g: MultiGraph.
    :param keep: edge predicate, see `edge_mask`.
    :return: List[np.ndarray]. Sorted vertex arrays of every component of the kept-edge
        subgraph over the full vertex set, largest first (ties by smallest vertex).
    """
    if g.n == 0:
        return []
    labels = component_labels(g, keep)
    order = np.argsort(labels, kind="stable")
    boundaries = np.flatnonzero(np.diff(labels[order])) + 1
    groups = np.split(order, boundaries)
    groups.sort(key=lambda c: (-len(c), c[0]))
    return groups


def component_sizes(g: MultiGraph, keep: EdgePredicate = None) -> np.ndarray:
    """:return: np.ndarray. Vertex count of every component, largest first."""
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    return np.sort(np.bincount(component_labels(g, keep)))[::-1]


def induced_subgraph(g: MultiGraph, keep: EdgePredicate = None) -> MultiGraph:
    """
    :return: MultiGraph on the same vertex set holding exactly the kept edges, re-numbered
        densely in their original order. ``origin`` maps new edge ids to ids of ``g`` (and
        through ``g.origin`` if ``g`` was itself a subgraph).
    """
    kept_ids = np.flatnonzero(edge_mask(g, keep))
    origin = kept_ids if g.origin is None else g.origin[kept_ids]
    return MultiGraph(g.n, g.edges[kept_ids], g.loops_allowed, origin=origin)


def directed_cycles(succ: Sequence[int]) -> List[List[int]]:
    """
    :param succ: array-like of shape (n,). Partial successor map, -1 where a vertex has no
        out-arc.
    :return: List[List[int]]. Vertices of every directed cycle in arc order, each starting at
        the first vertex visited by a scan over ``0..n-1``.
    """
    succ = [int(s) for s in succ]
    state = [0] * len(succ)  # 0 new, 1 on current walk, 2 done
    cycles = []
    for start in range(len(succ)):
        walk = []
        v = start
        while v != -1 and state[v] == 0:
            state[v] = 1
            walk.append(v)
            v = succ[v]
        if v != -1 and state[v] == 1:
            cycles.append(walk[walk.index(v) :])
        for u in walk:
            state[u] = 2
    return cycles


def degree_sequence(g: MultiGraph) -> np.ndarray:
    """:return: np.ndarray of shape (n,). Degrees, loops counting twice."""
    return np.bincount(g.edges.reshape(-1), minlength=g.n)
