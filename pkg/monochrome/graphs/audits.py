"""
Measurements taken on colored graphs: monochromatic component statistics, the structural
audits of both colorings, the local density audit and the majority-color subgraph.
"""
import sys
from collections import Counter
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .coloring import HAMILTON_PATH_EXPONENT, ArborescenceForest, BlockPartition
from .errors import AuditBudgetError, ContractViolation
from .multigraph import (
    EdgeColoring,
    FunctionalDigraph,
    HamiltonDecomposition,
    MultiGraph,
    component_labels,
    directed_cycles,
    induced_subgraph,
)
from .utils import power

DEFAULT_AUDIT_BUDGET = 2_000_000


class MonoStats(object):
    def __init__(self, n: int, max_orders: Sequence[int], component_counts: Sequence[int]):
        """
        Monochromatic component statistics of one colored graph.

        :param n: int. Vertex count.
        :param max_orders: array-like of shape (r,). Largest component order per color (1
            for a color with no edges).
        :param component_counts: array-like of shape (r,). Number of components per color
            that contain at least one edge of the color.
        """
        self.n = n
        self.max_orders = np.asarray(max_orders, dtype=np.int64)
        self.component_counts = np.asarray(component_counts, dtype=np.int64)

    @property
    def r(self) -> int:
        return len(self.max_orders)

    @property
    def max_order(self) -> int:
        return int(self.max_orders.max(initial=0))

    @property
    def fractions(self) -> np.ndarray:
        return self.max_orders / max(self.n, 1)

    @property
    def max_fraction(self) -> float:
        return self.max_order / max(self.n, 1)

    def __repr__(self):
        return f"MonoStats(n={self.n}, max_orders={self.max_orders.tolist()})"


def mono_stats(g: MultiGraph, coloring: EdgeColoring, r: int) -> MonoStats:
    coloring.check_total(g)
    if coloring.r > r:
        raise ValueError(f"coloring uses {coloring.r} colors, expected at most {r}")
    max_orders, counts = [], []
    for color in range(1, r + 1):
        mask = coloring.mask(color)
        labels = component_labels(g, mask)
        sizes = np.bincount(labels) if g.n else np.zeros(1, dtype=np.int64)
        max_orders.append(int(sizes.max()))
        counts.append(len(np.unique(labels[g.edges[mask, 0]])))
    return MonoStats(g.n, max_orders, counts)


def check_block_containment(
    g: MultiGraph, coloring: EdgeColoring, blocks: BlockPartition, color: int = 1
) -> int:
    """
    Asserts that every component of the given color lies inside a single block.

    :return: int. Largest component order of that color.
    """
    labels = component_labels(g, coloring.mask(color))
    block_min = np.full(g.n, np.iinfo(np.int64).max, dtype=np.int64)
    block_max = np.full(g.n, -1, dtype=np.int64)
    np.minimum.at(block_min, labels, blocks.labels)
    np.maximum.at(block_max, labels, blocks.labels)
    spread = np.flatnonzero((block_max >= 0) & (block_min != block_max))
    if len(spread):
        raise ContractViolation(
            f"{len(spread)} color-{color} components span more than one block"
        )
    return int(np.bincount(labels).max()) if g.n else 0


class PathLengthAudit(NamedTuple):
    max_lengths: Dict[int, int]
    limit: float
    violations: List[int]

    @property
    def passed(self) -> bool:
        return not self.violations


def _longest_run(mask: np.ndarray) -> int:
    """Longest run of True in a cyclic boolean array that is not all True."""
    if not mask.any():
        return 0
    start = int(np.flatnonzero(~mask)[0])
    rolled = np.concatenate([np.roll(mask, -start).astype(np.int8), [0]])
    edges = np.diff(np.concatenate([[0], rolled]))
    return int((np.flatnonzero(edges == -1) - np.flatnonzero(edges == 1)).max())


def path_length_audit(
    decomp: HamiltonDecomposition,
    coloring: EdgeColoring,
    path_exponent: float = HAMILTON_PATH_EXPONENT,
) -> PathLengthAudit:
    """
    Every E_i (edges of H_i colored i, i >= 2) must be a disjoint union of paths along H_i.
    Reports the longest path per color and flags colors whose longest path exceeds
    n^path_exponent. A class covering all of H_i (possible at small n) reports length n.

    :param decomp: HamiltonDecomposition the coloring was built from.
    :param coloring: EdgeColoring over ``decomp.to_multigraph()``.
    :return: PathLengthAudit.
    """
    n, r = decomp.n, decomp.r
    if len(coloring) != n * r:
        raise ValueError(f"coloring covers {len(coloring)} edges, expected {n * r}")
    owner = np.repeat(np.arange(1, r + 1), n)
    colors = coloring.colors
    stray = (colors >= 2) & (colors != owner) & ~((colors == 2) & (owner == 1))
    if stray.any():
        raise ContractViolation(
            f"edge {int(np.flatnonzero(stray)[0])} has color outside its own cycle and E*"
        )
    limit = power(n, path_exponent)
    max_lengths, violations = {}, []
    for color in range(2, r + 1):
        on_path = colors[decomp.edge_ids(color)] == color
        # no edge of H_i fell inside a block: the class is the whole cycle
        max_lengths[color] = n if on_path.all() else _longest_run(on_path)
        if max_lengths[color] > limit:
            violations.append(color)
    return PathLengthAudit(max_lengths, limit, violations)


class ArborescenceStats(NamedTuple):
    max_height: int
    max_order: int
    unicyclic_count: int


def arborescence_stats(
    tails: Sequence[int], heads: Sequence[int], n: int
) -> ArborescenceStats:
    """
    Decomposes an arc set with out-degree at most 1 into in-arborescences and unicyclic
    components. The height of a unicyclic component is the longest directed path into
    its cycle.

    :param tails: array-like. Arc tails.
    :param heads: array-like. Arc heads.
    :param n: int. Vertex count.
    :return: ArborescenceStats over all components (isolated vertices are arborescences of
        order 1 and height 0).
    """
    tails = np.asarray(tails, dtype=np.int64)
    heads = np.asarray(heads, dtype=np.int64)
    if len(np.unique(tails)) != len(tails):
        raise ContractViolation("arc set has a vertex with out-degree > 1")
    succ = np.full(n, -1, dtype=np.int64)
    succ[tails] = heads
    cycles = directed_cycles(succ)
    representative = np.arange(n)
    parent = succ.copy()
    for cycle in cycles:
        parent[cycle] = -1
        representative[cycle] = min(cycle)
    forest = ArborescenceForest(parent)
    component = representative[forest.root_of]
    orders = np.bincount(component, minlength=n)
    return ArborescenceStats(
        int(forest.depths.max(initial=0)), int(orders.max(initial=0)), len(cycles)
    )


def color_class_arcs(
    digraphs: List[FunctionalDigraph],
    coloring: EdgeColoring,
    color: int,
    exclude: Optional[Sequence[int]] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    :return: (tails, heads) of the arcs of D_1 + ... + D_r whose edges carry `color`,
        skipping the edge ids in `exclude` (typically E*).
    """
    n = digraphs[0].n
    tails = np.tile(np.arange(n), len(digraphs))
    heads = np.concatenate([d.succ for d in digraphs])
    mask = coloring.mask(color)
    if exclude is not None:
        mask[np.asarray(exclude, dtype=np.int64)] = False
    return tails[mask], heads[mask]


class DensityAudit(NamedTuple):
    c: float
    smax: int
    edges: int
    size: int
    witness: Tuple[int, ...]
    sets_enumerated: int
    exact: bool = True

    @property
    def worst_ratio(self) -> float:
        return self.edges / self.size if self.size else 0.0

    @property
    def passed(self) -> bool:
        """No set of at most smax vertices spans more than c|S| edges."""
        return self.edges <= Fraction(self.c) * self.size

    def as_dict(self) -> dict:
        return {
            "c": self.c,
            "smax": self.smax,
            "worst_ratio": self.worst_ratio,
            "witness": list(self.witness),
            "sets_enumerated": self.sets_enumerated,
            "passed": self.passed,
            "exact": self.exact,
        }


def _multiplicities(g: MultiGraph, vertices: Optional[np.ndarray] = None):
    keep = np.ones(g.n, dtype=bool) if vertices is None else np.isin(np.arange(g.n), vertices)
    neighbors = [Counter() for _ in range(g.n)]
    loops = [0] * g.n
    for u, v in g.edges.tolist():
        if not (keep[u] and keep[v]):
            continue
        if u == v:
            loops[u] += 1
        else:
            neighbors[u][v] += 1
            neighbors[v][u] += 1
    return neighbors, loops


def _sparse_core(g: MultiGraph, c: float) -> np.ndarray:
    """
    Vertices that can belong to a set with more than c|S| edges (c >= 1): repeatedly drops
    vertices of degree <= 1, isolated cycles, and induced paths whose internal vertices all
    have degree 2 and whose edge count is at least c/(c-1).
    """
    neighbors, loops = _multiplicities(g)
    alive = [True] * g.n
    degree = [2 * loops[v] + sum(neighbors[v].values()) for v in range(g.n)]
    chain_edges = float("inf") if c == 1 else c / (c - 1.0)

    def remove(v):
        alive[v] = False
        for u, k in neighbors[v].items():
            if alive[u]:
                degree[u] -= k

    def is_link(v):
        return alive[v] and degree[v] == 2 and loops[v] == 0 and len(
            [u for u in neighbors[v] if alive[u]]
        ) == 2

    changed = True
    while changed:
        changed = False
        stack = [v for v in range(g.n) if alive[v] and degree[v] <= 1]
        while stack:
            v = stack.pop()
            if not alive[v] or degree[v] > 1:
                continue
            remove(v)
            changed = True
            stack.extend(u for u in neighbors[v] if alive[u] and degree[u] <= 1)
        seen = set()
        for v in range(g.n):
            if v in seen or not is_link(v):
                continue
            chain, ends, closed = {v}, [], False
            for first in [u for u in neighbors[v] if alive[u]]:
                prev, cur = v, first
                while is_link(cur) and cur not in chain:
                    chain.add(cur)
                    prev, cur = cur, next(
                        u for u in neighbors[cur] if alive[u] and u != prev
                    )
                if cur in chain:
                    closed = True
                    break
                ends.append(cur)
            seen |= chain
            if closed or len(chain) + 1 >= chain_edges:
                for u in chain:
                    remove(u)
                changed = True
    return np.flatnonzero(alive)


def local_density_audit(
    g: MultiGraph,
    c: float,
    smax: int,
    budget: int = DEFAULT_AUDIT_BUDGET,
    reduce: bool = False,
) -> DensityAudit:
    """
    Finds the connected vertex set S with 1 <= |S| <= smax maximizing e(S)/|S|, where e(S)
    counts edges with both ends in S (loops once, parallel edges each). Singletons only
    count when they carry a loop. e(S) and |S| are additive over components, so the
    maximum over connected sets equals the maximum over all sets of at most smax vertices.

    Connected sets are enumerated exactly once each by extension from their smallest
    vertex. The enumeration refuses with `AuditBudgetError` once more than `budget` sets
    have been visited.

    :param g: MultiGraph.
    :param c: float. Density cap of the pass/fail verdict.
    :param smax: int. Largest set size examined.
    :param budget: int. Maximum number of connected sets enumerated.
    :param reduce: bool. Defaults to False. For c >= 1, first prunes vertices that cannot
        be part of a set with e(S) > c|S|. The verdict stays exact; worst_ratio is exact
        only when it exceeds c.
    :return: DensityAudit.
    """
    if smax < 1:
        raise ValueError(f"smax must be at least 1, got {smax}")
    if reduce and c < 1:
        raise ValueError(f"reduction needs c >= 1, got c={c}")
    vertices = _sparse_core(g, c) if reduce else None
    neighbors, loops = _multiplicities(g, vertices)
    roots = range(g.n) if vertices is None else vertices.tolist()

    best = [0, 0, ()]  # edges, size, witness
    count = [0]

    def visit(members, edges):
        count[0] += 1
        if count[0] > budget:
            raise AuditBudgetError(
                f"more than {budget} connected sets of size <= {smax}; "
                "lower smax or raise the budget",
                count[0],
            )
        if edges * best[1] > best[0] * len(members) or (best[1] == 0 and edges > 0):
            best[:] = [edges, len(members), tuple(sorted(members))]

    def extend(members, frontier, excluded, edges, root):
        visit(members, edges)
        if len(members) == smax:
            return
        frontier = list(frontier)
        while frontier:
            w = frontier.pop()
            gained = loops[w] + sum(neighbors[w][u] for u in neighbors[w] if u in members)
            fresh = [u for u in sorted(neighbors[w]) if u > root and u not in excluded]
            members.add(w)
            extend(
                members,
                frontier + fresh,
                excluded | set(fresh) | {w},
                edges + gained,
                root,
            )
            members.discard(w)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * smax + 100))
    try:
        for root in roots:
            if not neighbors[root] and not loops[root]:
                continue
            fresh = [u for u in sorted(neighbors[root]) if u > root]
            extend({root}, fresh, set(fresh) | {root}, loops[root], root)
    finally:
        sys.setrecursionlimit(limit)
    edges, size, witness = best
    exact = not reduce or edges > Fraction(c) * size
    return DensityAudit(c, smax, edges, size, witness, count[0], exact)


def majority_color(coloring: EdgeColoring, r: int) -> int:
    """Most frequent color, ties toward the smallest index."""
    counts = np.bincount(coloring.colors, minlength=r + 1)[1:]
    return int(np.argmax(counts)) + 1


def majority_subgraph(g: MultiGraph, coloring: EdgeColoring, r: int) -> MultiGraph:
    """
    :return: MultiGraph holding the edges of the majority color (at least m/r of them),
        with ``origin`` mapping back to edge ids of `g`.
    """
    coloring.check_total(g)
    return induced_subgraph(g, coloring.mask(majority_color(coloring, r)))
