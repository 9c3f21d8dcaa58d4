"""
Coloring strategies that try to keep every monochromatic component small, used to probe
the claim that every r-coloring of a denser graph still has a long monochromatic cycle.
"""
import logging
from typing import Tuple

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .multigraph import EdgeColoring, MultiGraph, degree_sequence
from .orientation import euler_orient
from .utils import get_rng

log = logging.getLogger(__name__)

UNIFORM_RANDOM = "uniform-random"
GREEDY_BALANCED = "greedy-balanced"
ORIENTATION_SPLIT = "orientation-split"
STRATEGIES = (UNIFORM_RANDOM, GREEDY_BALANCED, ORIENTATION_SPLIT)


def uniform_random_coloring(g: MultiGraph, r: int, rng: np.random.Generator) -> EdgeColoring:
    return EdgeColoring(rng.integers(1, r + 1, size=g.m), r)


def greedy_balanced_coloring(
    g: MultiGraph, r: int, rng: np.random.Generator
) -> EdgeColoring:
    """
    Edges in random order; each gets the color whose component would be smallest after
    adding it, ties toward the smallest color.
    """
    forests = [DisjointSet(range(g.n)) for _ in range(r)]
    colors = np.empty(g.m, dtype=np.int64)
    for edge_id in rng.permutation(g.m):
        u, v = g.endpoints(edge_id)
        merged = [
            forest.subset_size(u)
            if forest.connected(u, v)
            else forest.subset_size(u) + forest.subset_size(v)
            for forest in forests
        ]
        best = int(np.argmin(merged))
        forests[best].merge(u, v)
        colors[edge_id] = best + 1
    return EdgeColoring(colors, r)


def orientation_split_coloring(
    g: MultiGraph, r: int, rng: np.random.Generator
) -> EdgeColoring:
    """
    Euler-orients g, then spreads the in-edges of every vertex over the colors: the j-th
    in-edge of v (by edge id) gets color ((j + offset_v) mod r) + 1 for a random offset.
    On a 2r-regular graph every color class has in-degree exactly 1 at every vertex.
    """
    orientation = euler_orient(g)
    offsets = rng.integers(0, r, size=g.n)
    order = np.lexsort((np.arange(g.m), orientation.heads))
    heads = orientation.heads[order]
    group_start = np.searchsorted(heads, heads, side="left")
    rank = np.arange(g.m) - group_start
    colors = np.empty(g.m, dtype=np.int64)
    colors[order] = (rank + offsets[heads]) % r + 1
    return EdgeColoring(colors, r)


def adversarial_color(
    g: MultiGraph, r: int, strategy: str, seed
) -> Tuple[EdgeColoring, str]:
    """
    :param g: MultiGraph.
    :param r: int. Number of colors, at least 2.
    :param strategy: str. One of 'uniform-random', 'greedy-balanced', 'orientation-split'.
    :param seed: int or np.random.Generator.
    :return: (EdgeColoring, strategy actually used). 'orientation-split' falls back to
        'greedy-balanced' when g has a vertex of odd degree.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    rng = get_rng(seed)
    if strategy == UNIFORM_RANDOM:
        return uniform_random_coloring(g, r, rng), strategy
    elif strategy == GREEDY_BALANCED:
        return greedy_balanced_coloring(g, r, rng), strategy
    elif strategy == ORIENTATION_SPLIT:
        if np.any(degree_sequence(g) % 2):
            log.debug("odd degree vertex, orientation-split falls back to greedy")
            return greedy_balanced_coloring(g, r, rng), GREEDY_BALANCED
        return orientation_split_coloring(g, r, rng), strategy
    else:
        raise ValueError(
            f"arg `strategy` had value: {strategy} which is not supported. "
            f"Only {list(STRATEGIES)} are supported."
        )
