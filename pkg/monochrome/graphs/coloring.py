"""
The two constructive r-colorings: one for sums of Hamilton cycles (2r-regular graphs) and
one for sums of functional digraphs (r-out graphs).

Both colorings cut the vertex set into blocks, give color 1 to every edge inside a block,
give color i to the remaining edges of the i-th cycle / digraph, and give color 2 to the
small exceptional set E* of first-cycle / first-digraph edges that cross blocks.
"""
import heapq
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from .errors import ContractViolation
from .multigraph import (
    EdgeColoring,
    FunctionalDigraph,
    HamiltonDecomposition,
    directed_cycles,
)
from .utils import floor_power, power

HAMILTON_BLOCK_EXPONENT = 0.7
HAMILTON_PATH_EXPONENT = 0.4
KOUT_BLOCK_EXPONENT = 0.9
KOUT_PEEL_EXPONENT = 0.85
KOUT_ESTAR_EXPONENT = 0.2


class BlockPartition(object):
    def __init__(self, labels: Sequence[int]):
        """
        Ordered partition V_1, ..., V_b of the vertex set.

        :param labels: array-like of shape (n,). 0-based block index of every vertex; the
            indices used must be exactly 0..b-1.
        """
        labels = np.array(labels, dtype=np.int64).reshape((-1,))
        if labels.size and (
            labels.min() != 0 or len(np.unique(labels)) != labels.max() + 1
        ):
            raise ValueError("block labels must be exactly 0..b-1")
        labels.setflags(write=False)
        self.labels = labels
        self.n = len(labels)

    @property
    def count(self) -> int:
        return int(self.labels.max()) + 1 if self.n else 0

    @property
    def sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.count)

    @property
    def blocks(self) -> List[np.ndarray]:
        order = np.argsort(self.labels, kind="stable")
        return np.split(order, np.cumsum(self.sizes)[:-1])

    def same_block(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.labels[u] == self.labels[v]

    def __repr__(self):
        return f"BlockPartition(n={self.n}, blocks={self.count})"


class ArborescenceForest(object):
    def __init__(self, parent: Sequence[int]):
        """
        Vertex-disjoint in-arborescences: every non-root v has the single out-arc
        v -> parent[v], roots have parent -1.

        :param parent: array-like of shape (n,).
        """
        parent = np.array(parent, dtype=np.int64).reshape((-1,))
        n = len(parent)
        if n and (parent.min() < -1 or parent.max() >= n):
            raise ValueError(f"parent outside [-1, {n})")
        parent.setflags(write=False)
        self.parent = parent
        self.n = n
        self._root_of, self._depth = self._resolve(parent.tolist())

    @staticmethod
    def _resolve(parent: List[int]):
        n = len(parent)
        root_of = [-1] * n
        depth = [-1] * n
        for start in range(n):
            walk = []
            v = start
            while v != -1 and depth[v] == -1:
                depth[v] = -2  # on current walk
                walk.append(v)
                v = parent[v]
            if v != -1 and depth[v] == -2:
                raise ValueError(f"parent map has a cycle through vertex {v}")
            if v == -1:
                root, base = walk.pop(), 0
                root_of[root], depth[root] = root, 0
            else:
                root, base = root_of[v], depth[v]
            for u in reversed(walk):
                base += 1
                root_of[u], depth[u] = root, base
        return np.array(root_of, dtype=np.int64), np.array(depth, dtype=np.int64)

    @property
    def roots(self) -> np.ndarray:
        return np.flatnonzero(self.parent == -1)

    @property
    def root_of(self) -> np.ndarray:
        """Component id of every vertex: the root its arborescence drains into."""
        return self._root_of

    @property
    def depths(self) -> np.ndarray:
        """Number of arcs from every vertex to its root."""
        return self._depth

    def orders(self) -> np.ndarray:
        """:return: np.ndarray of shape (n,). Order of the arborescence rooted at each vertex
        (0 for non-roots)."""
        return np.bincount(self._root_of, minlength=self.n)

    def heights(self) -> np.ndarray:
        """:return: np.ndarray of shape (n,). Height of the arborescence rooted at each
        vertex (0 for non-roots and for singleton arborescences)."""
        heights = np.zeros(self.n, dtype=np.int64)
        np.maximum.at(heights, self._root_of, self._depth)
        return heights

    def subtree_sizes(self) -> np.ndarray:
        """:return: np.ndarray of shape (n,). Number of vertices that can reach each vertex
        along arcs, the vertex itself included."""
        sizes = np.ones(self.n, dtype=np.int64)
        if self.n == 0:
            return sizes
        by_depth = np.argsort(-self._depth, kind="stable")
        level_starts = np.flatnonzero(np.diff(self._depth[by_depth])) + 1
        for level in np.split(by_depth, level_starts):
            if self._depth[level[0]] == 0:
                break
            np.add.at(sizes, self.parent[level], sizes[level])
        return sizes

    def children(self) -> List[List[int]]:
        children = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent.tolist()):
            if p != -1:
                children[p].append(v)
        return children

    def __repr__(self):
        return f"ArborescenceForest(n={self.n}, arborescences={len(self.roots)})"


def break_cycles(succ: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    """
    Removes one arc from every directed cycle of a partial successor map (-1 = no out-arc):
    on each cycle the out-arc of the smallest vertex is dropped.

    :return: (parent array of the resulting forest, tails of the removed arcs, ascending).
    """
    parent = np.array(succ, dtype=np.int64)
    tails = np.array(
        sorted(min(cycle) for cycle in directed_cycles(parent)), dtype=np.int64
    )
    parent[tails] = -1
    return parent, tails


def strip_cycles(d1: FunctionalDigraph) -> Tuple[ArborescenceForest, np.ndarray]:
    """
    Removes one arc from each cycle of D_1 (the out-arc of the smallest cycle vertex),
    turning D_1 into vertex-disjoint in-arborescences.

    :return: (ArborescenceForest, tails of the removed arcs). Arc ``v`` is (v, succ(v)).
    """
    parent, tails = break_cycles(d1.succ)
    return ArborescenceForest(parent), tails


def peel_threshold(n: int, exponent: float = KOUT_PEEL_EXPONENT) -> int:
    return max(1, floor_power(n, exponent))


def peel_arborescences(
    forest: ArborescenceForest, threshold: int
) -> Tuple[ArborescenceForest, np.ndarray]:
    """
    While some in-arborescence has more than `threshold` vertices, picks a vertex v that is
    reachable from at least `threshold` other vertices while none of its in-neighbors is,
    and deletes every in-arc of v. Among several such vertices the smallest label goes
    first. Each severed subtree then has at most `threshold` vertices, so on exit every
    arborescence has order <= threshold.

    Reachable-set sizes are kept up to date incrementally: a cut only changes the sizes on
    the path from v to its root.

    :param forest: ArborescenceForest.
    :param threshold: int. At least 1.
    :return: (peeled forest, tails of the deleted arcs in deletion order).
    """
    if threshold < 1:
        raise ValueError(f"threshold must be at least 1, got {threshold}")
    parent = forest.parent.tolist()
    size = forest.subtree_sizes().tolist()
    root_of = forest.root_of.tolist()
    children = forest.children()
    order = forest.orders().tolist()

    qualifies = [s > threshold for s in size]  # reached by >= threshold others
    qualifying_children = [0] * forest.n
    for v, p in enumerate(parent):
        if p != -1 and qualifies[v]:
            qualifying_children[p] += 1
    heap = [
        v for v in range(forest.n) if qualifies[v] and qualifying_children[v] == 0
    ]
    heapq.heapify(heap)

    extra = []
    while heap:
        v = heapq.heappop(heap)
        if order[root_of[v]] <= threshold:
            continue
        removed = size[v] - 1
        for child in children[v]:
            if parent[child] == v:
                parent[child] = -1
                extra.append(child)
        size[v] = 1
        qualifies[v] = False
        order[root_of[v]] -= removed

        candidates = []
        below, a = v, parent[v]
        while a != -1:
            if not qualifies[below]:
                # ancestors of a qualifying vertex qualify, so `below` stopped during this cut
                qualifying_children[a] -= 1
                candidates.append(a)
            size[a] -= removed
            if qualifies[a] and size[a] <= threshold:
                qualifies[a] = False
            below, a = a, parent[a]
        for a in candidates:
            if qualifies[a] and qualifying_children[a] == 0:
                heapq.heappush(heap, a)
    return ArborescenceForest(parent), np.array(extra, dtype=np.int64)


def partition_blocks(
    forest: ArborescenceForest,
    n: int,
    block_exponent: float = KOUT_BLOCK_EXPONENT,
    peel_exponent: float = KOUT_PEEL_EXPONENT,
) -> BlockPartition:
    """
    Concatenates the arborescences, ordered by their smallest vertex, into blocks: with
    w = ceil(n^block_exponent), h_j is the first prefix of arborescences covering at least
    j*w vertices (1 <= j < ceil(n^(1-block_exponent))), and block j holds the arborescences
    with index in (h_{j-1}, h_j]. Arborescences are never split.

    :param forest: ArborescenceForest whose orders are all <= n^peel_exponent.
    :param n: int. Vertex count.
    :return: BlockPartition.
    """
    if forest.n != n:
        raise ValueError(f"forest has {forest.n} vertices, expected {n}")
    orders = forest.orders()
    limit = power(n, peel_exponent)
    if orders.max(initial=0) > limit:
        raise ValueError(
            f"arborescence of order {orders.max()} exceeds n^{peel_exponent} = {limit:.2f}; "
            "peel with threshold n^peel_exponent first"
        )
    roots = forest.roots
    minimum = np.full(n, n, dtype=np.int64)
    np.minimum.at(minimum, forest.root_of, np.arange(n))
    roots = roots[np.argsort(minimum[roots], kind="stable")]
    cumulative = np.cumsum(orders[roots])

    width = int(np.ceil(power(n, block_exponent)))
    block_count = int(np.ceil(power(n, 1.0 - block_exponent)))
    targets = width * np.arange(1, block_count)
    h = np.searchsorted(cumulative, targets, side="left") + 1
    h = np.minimum(h, len(roots))
    bounds = np.unique(np.concatenate([h, [len(roots)]]))
    arborescence_block = np.searchsorted(
        bounds, np.arange(1, len(roots) + 1), side="left"
    )
    block_of_root = np.empty(n, dtype=np.int64)
    block_of_root[roots] = arborescence_block
    return BlockPartition(block_of_root[forest.root_of])


def hamilton_block_bounds(n: int, block_exponent: float = HAMILTON_BLOCK_EXPONENT):
    """
    :return: List[int]. floor(i * n^block_exponent) for i = 1, 2, ..., capped at n; the
        last 1-based position of every block along H_1.
    """
    width = power(n, block_exponent)
    bounds = []
    i = 1
    while True:
        bound = int(np.floor(i * width))
        if bound >= n:
            bounds.append(n)
            return bounds
        if not bounds or bound > bounds[-1]:
            bounds.append(bound)
        i += 1


def color_hamilton(
    decomp: HamiltonDecomposition,
    r: int,
    block_exponent: float = HAMILTON_BLOCK_EXPONENT,
) -> Tuple[EdgeColoring, BlockPartition, np.ndarray]:
    """
    Relabels the vertices v_1, ..., v_n along H_1 and cuts them into consecutive blocks
    V_i = {v_j : floor((i-1)w) + 1 <= j <= floor(iw)}, w = n^block_exponent. E* is the set
    of H_1 edges {v_floor(iw), v_floor(iw)+1} crossing blocks (the last one wraps to v_1).
    E_1 holds every edge with both ends in one block, E_i = E(H_i) minus E_1. Color i goes to
    E_i and color 2 to E*.

    :param decomp: HamiltonDecomposition with exactly r cycles.
    :param r: int. Number of colors, at least 2.
    :return: (EdgeColoring over the edges of ``decomp.to_multigraph()``, BlockPartition,
        edge ids of E*).
    """
    if r < 2:
        raise ValueError(f"the coloring needs color 2 for E*, got r={r}")
    if decomp.r != r:
        raise ValueError(f"decomposition has {decomp.r} cycles, expected {r}")
    n = decomp.n
    if n < r:
        raise ValueError(f"need n >= r, got n={n}, r={r}")

    bounds = np.array(hamilton_block_bounds(n, block_exponent), dtype=np.int64)
    positions = np.arange(1, n + 1)
    position_block = np.searchsorted(bounds, positions, side="left")
    labels = np.empty(n, dtype=np.int64)
    labels[decomp.cycles[0]] = position_block
    blocks = BlockPartition(labels)

    tails = decomp.cycles.reshape(-1)
    heads = np.roll(decomp.cycles, -1, axis=1).reshape(-1)
    inside = blocks.same_block(tails, heads)
    estar = bounds - 1
    estar = estar[~inside[estar]]

    if not np.all(np.isin(np.flatnonzero(~inside[:n]), estar)):
        raise ContractViolation("an H_1 edge crosses blocks outside E*")
    colors = np.where(inside, 1, np.repeat(np.arange(1, r + 1), n))
    colors[estar] = 2
    return EdgeColoring(colors, r), blocks, estar


def assign_kout_colors(
    digraphs: List[FunctionalDigraph], blocks: BlockPartition, estar_tails: np.ndarray
) -> Tuple[EdgeColoring, np.ndarray]:
    """
    E_1 = arcs of any D_i with both ends in one block, E_i = E(D_i) minus E_1; color i goes
    to E_i and color 2 to E* (the D_1 arcs with the given tails), overriding color 1.

    :return: (EdgeColoring over ``digraph_sum_graph(digraphs)``, edge ids of E*).
    """
    r = len(digraphs)
    n = digraphs[0].n
    tails = np.tile(np.arange(n), r)
    heads = np.concatenate([d.succ for d in digraphs])
    inside = blocks.same_block(tails, heads)
    colors = np.where(inside, 1, np.repeat(np.arange(1, r + 1), n))
    estar = np.unique(np.asarray(estar_tails, dtype=np.int64))
    crossing = np.flatnonzero(~inside[:n])
    if not np.all(np.isin(crossing, estar)):
        raise ContractViolation("a D_1 arc crosses blocks but is not in E*")
    colors[estar] = 2
    return EdgeColoring(colors, r), estar


class KOutColoring(NamedTuple):
    coloring: EdgeColoring
    blocks: BlockPartition
    estar: np.ndarray
    forest: ArborescenceForest  # D_1 after cycle stripping and peeling
    stripped: np.ndarray  # tails of the removed cycle arcs
    peeled: np.ndarray  # tails of the peeled in-arcs


def color_kout(
    digraphs: List[FunctionalDigraph],
    r: int,
    block_exponent: float = KOUT_BLOCK_EXPONENT,
    peel_exponent: float = KOUT_PEEL_EXPONENT,
) -> KOutColoring:
    """
    strip_cycles(D_1) -> peel_arborescences(threshold n^peel_exponent) -> partition_blocks,
    then `assign_kout_colors` with E* = stripped cycle arcs plus peeled in-arcs.

    :param digraphs: List[FunctionalDigraph]. Exactly r digraphs on the same n.
    :param r: int. Number of colors, at least 2.
    :return: KOutColoring. The coloring is over ``digraph_sum_graph(digraphs)``; E* holds
        edge ids, `stripped` and `peeled` the D_1 tails they came from.
    """
    if r < 2:
        raise ValueError(f"the coloring needs color 2 for E*, got r={r}")
    if len(digraphs) != r:
        raise ValueError(f"got {len(digraphs)} digraphs, expected {r}")
    n = digraphs[0].n
    if any(d.n != n for d in digraphs):
        raise ValueError("all digraphs must share the vertex set")
    forest, stripped = strip_cycles(digraphs[0])
    forest, peeled = peel_arborescences(forest, peel_threshold(n, peel_exponent))
    blocks = partition_blocks(forest, n, block_exponent, peel_exponent)
    coloring, estar = assign_kout_colors(
        digraphs, blocks, np.concatenate([stripped, peeled])
    )
    return KOutColoring(coloring, blocks, estar, forest, stripped, peeled)
