"""
Samplers for the random graph models: the pairing (configuration) model, sums of uniform
Hamilton cycles, and sums of uniform functional digraphs (the k-out model).

Every sampler is a pure function of its parameters and seed.
"""
import logging
from typing import List, Tuple

import numpy as np

from .multigraph import (
    FunctionalDigraph,
    HamiltonDecomposition,
    MultiGraph,
    directed_cycles,
)
from .errors import SamplingError
from .utils import get_rng

log = logging.getLogger(__name__)


def pairing_model(n: int, d: int, seed) -> MultiGraph:
    """
    Samples a random d-regular multigraph: n*d configuration points in n cells of size d,
    a uniform perfect matching on the points (shuffle, then pair consecutive points),
    cells contracted.
    Loops and multi-edges are kept; every vertex has degree d with loops counting twice.

    :param n: int. Vertex count.
    :param d: int. Degree, at least 1.
    :param seed: int or np.random.Generator.
    :return: MultiGraph with n*d/2 edges, each stored as (min, max).
    """
    if d < 1:
        raise ValueError(f"degree must be at least 1, got d={d}")
    if n < 1 or (n * d) % 2:
        raise ValueError(f"n * d must be even and positive, got n={n}, d={d}")
    rng = get_rng(seed)
    return _pairing(n, d, rng)


def _pairing(n: int, d: int, rng: np.random.Generator) -> MultiGraph:
    points = rng.permutation(np.repeat(np.arange(n, dtype=np.int64), d))
    return MultiGraph(n, np.sort(points.reshape((-1, 2)), axis=1))


def simple_regular(n: int, d: int, seed, max_attempts: int = 1000) -> MultiGraph:
    """
    Samples a simple random d-regular graph by rejection: pairing-model samples are drawn from one RNG stream until
    one has neither loops nor multi-edges. Meant for small n and d (d <= 8); the expected
    number of attempts grows like exp((d^2 - 1) / 4).

    :param max_attempts: int. Defaults to 1000. Attempt budget.
    :return: simple d-regular MultiGraph.
    """
    if not 1 <= d < n:
        raise ValueError(f"simple d-regular graphs need 1 <= d < n, got n={n}, d={d}")
    if (n * d) % 2:
        raise ValueError(f"n * d must be even, got n={n}, d={d}")
    rng = get_rng(seed)
    for attempt in range(max_attempts):
        graph = _pairing(n, d, rng)
        if graph.is_simple():
            return MultiGraph(n, graph.edges, loops_allowed=False)
        log.debug("simple_regular attempt %d rejected", attempt)
    raise SamplingError(
        f"no simple {d}-regular graph on {n} vertices after {max_attempts} attempts; "
        "d is too large for rejection sampling"
    )


def hamilton_sum(n: int, r: int, seed) -> Tuple[MultiGraph, HamiltonDecomposition]:
    """
    Samples G = H_1 + ... + H_r with each H_i a uniform Hamilton cycle on [n] (a uniform
    permutation read cyclically). The union is 2r-regular and may have multi-edges.

    :return: (MultiGraph, HamiltonDecomposition). Edge ``(i-1)*n + j`` of the graph is the
        j-th edge of H_i.
    """
    if n < 3:
        raise ValueError(f"Hamilton cycles need n >= 3, got n={n}")
    if r < 1:
        raise ValueError(f"need at least one cycle, got r={r}")
    rng = get_rng(seed)
    decomposition = HamiltonDecomposition(
        np.stack([rng.permutation(n) for _ in range(r)])
    )
    return decomposition.to_multigraph(), decomposition


def uniform_functional_digraph(n: int, rng: np.random.Generator) -> FunctionalDigraph:
    """Every succ(v) independently uniform on [n] minus {v}."""
    succ = rng.integers(0, n - 1, size=n)
    succ += succ >= np.arange(n)
    return FunctionalDigraph(succ)


def digraph_sum_graph(digraphs: List[FunctionalDigraph]) -> MultiGraph:
    """
    Forgets arc orientations. Edge ``(i-1)*n + v`` is the arc (v, succ_i(v)) of D_i.
    """
    n = digraphs[0].n
    if any(d.n != n for d in digraphs):
        raise ValueError("all digraphs must share the vertex set")
    return MultiGraph(n, np.concatenate([d.arcs() for d in digraphs], axis=0))


def kout_sum(n: int, k: int, seed) -> Tuple[MultiGraph, List[FunctionalDigraph]]:
    """
    Samples D = D_1 + ... + D_k of independent uniform loopless functional digraphs and the
    multigraph obtained by ignoring arc orientations.

    :return: (MultiGraph with exactly k*n edges, [D_1, ..., D_k]).
    """
    if n < 2:
        raise ValueError(f"k-out graphs need n >= 2, got n={n}")
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    rng = get_rng(seed)
    digraphs = [uniform_functional_digraph(n, rng) for _ in range(k)]
    return digraph_sum_graph(digraphs), digraphs


def kout_distinct(n: int, k: int, seed) -> Tuple[MultiGraph, List[FunctionalDigraph]]:
    """
    Samples a k-out digraph with distinct choices: every vertex picks k distinct
    out-neighbors uniformly. Rows with a repeated choice are redrawn, which is exactly
    the functional-digraph sum conditioned on distinct choices.
    The i-th choice of every vertex forms D_i.

    :return: (MultiGraph, [D_1, ..., D_k]) as in `kout_sum`.
    """
    if k < 1 or n < k + 1:
        raise ValueError(f"need 1 <= k <= n - 1, got n={n}, k={k}")
    rng = get_rng(seed)
    choices = np.empty((n, k), dtype=np.int64)
    pending = np.arange(n)
    while len(pending):
        draw = rng.integers(0, n - 1, size=(len(pending), k))
        draw += draw >= pending[:, None]
        ordered = np.sort(draw, axis=1)
        distinct = np.all(ordered[:, 1:] != ordered[:, :-1], axis=1)
        choices[pending[distinct]] = draw[distinct]
        pending = pending[~distinct]
    digraphs = [FunctionalDigraph(choices[:, i]) for i in range(k)]
    return digraph_sum_graph(digraphs), digraphs


def has_distinct_choices(digraphs: List[FunctionalDigraph]) -> bool:
    """Whether every vertex has pairwise distinct successors across the digraphs."""
    choices = np.sort(np.stack([d.succ for d in digraphs], axis=1), axis=1)
    return bool(np.all(choices[:, 1:] != choices[:, :-1]))


def functional_cycle_count(digraph: FunctionalDigraph) -> int:
    """Number of directed cycles of a functional digraph."""
    return len(directed_cycles(digraph.succ))
