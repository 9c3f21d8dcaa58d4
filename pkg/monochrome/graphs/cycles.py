"""
Long cycle search: a seeded heuristic for large graphs and an exhaustive oracle for tiny ones.

Cycles respect multigraph edge ids: a loop is a cycle of length 1 and two parallel edges
form a cycle of length 2.
"""
import logging
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from .errors import AuditBudgetError
from .multigraph import MultiGraph
from .utils import get_rng

log = logging.getLogger(__name__)

MAX_EXACT_VERTICES = 15
DEFAULT_STEPS_PER_VERTEX = 50
DEFAULT_RESTARTS = 10


class Cycle(NamedTuple):
    vertices: Tuple[int, ...]
    edge_ids: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_ids)


def is_cycle(g: MultiGraph, cycle: Cycle) -> bool:
    """
    Edge ``edge_ids[i]`` must join ``vertices[i]`` and ``vertices[i+1 mod L]``, the vertices
    must be distinct and so must the edge ids.
    """
    length = len(cycle.vertices)
    if length == 0 or len(cycle.edge_ids) != length:
        return False
    if len(set(cycle.vertices)) != length or len(set(cycle.edge_ids)) != length:
        return False
    for i, edge_id in enumerate(cycle.edge_ids):
        if not 0 <= edge_id < g.m:
            return False
        u, v = g.endpoints(edge_id)
        a, b = cycle.vertices[i], cycle.vertices[(i + 1) % length]
        if {u, v} != {a, b}:
            return False
    return True


class _Search(object):
    def __init__(self, g: MultiGraph, rng: np.random.Generator, budget: int):
        self.adjacency = g.adjacency()
        self.degrees = [len(neighbors) for neighbors in self.adjacency]
        self.rng = rng
        self.budget = budget
        self.steps = 0
        self.best: Optional[Cycle] = None

    @property
    def exhausted(self) -> bool:
        return self.steps >= self.budget

    def offer(self, vertices: List[int], edge_ids: List[int]):
        if self.best is None or len(edge_ids) > self.best.length:
            self.best = Cycle(tuple(vertices), tuple(edge_ids))

    def order(self, u: int, visited) -> List[tuple]:
        """Neighbors of u, those with fewest unvisited neighbors first, ties at random."""
        neighbors = self.adjacency[u]
        if len(neighbors) < 2:
            return list(neighbors)
        free = [
            sum(1 for x, _ in self.adjacency[w] if x not in visited) for w, _ in neighbors
        ]
        noise = self.rng.random(len(neighbors))
        return [neighbors[i] for i in np.lexsort((noise, free))]

    def dfs(self, start: int, limit: int):
        """One randomized depth-first search; every back edge closes a candidate cycle."""
        depth = {start: 0}
        finished = set()
        path_vertices, path_edges = [start], []
        stack = [(start, -1, iter(self.order(start, depth)))]
        stop = min(self.budget, self.steps + limit)
        while stack and self.steps < stop:
            u, parent_edge, neighbors = stack[-1]
            for w, edge_id in neighbors:
                self.steps += 1
                if edge_id == parent_edge or w in finished:
                    continue
                if w in depth:
                    top = depth[w]
                    self.offer(path_vertices[top:], path_edges[top:] + [edge_id])
                    continue
                depth[w] = depth[u] + 1
                path_vertices.append(w)
                path_edges.append(edge_id)
                stack.append((w, edge_id, iter(self.order(w, depth))))
                break
            else:
                stack.pop()
                finished.add(u)
                path_vertices.pop()
                if path_edges:
                    path_edges.pop()

    def insert_detours(self):
        """Replaces a cycle edge a-b by a-x-b through an outside vertex x while possible."""
        if self.best is None:
            return
        vertices, edge_ids = list(self.best.vertices), list(self.best.edge_ids)
        improved = True
        while improved and not self.exhausted:
            improved = False
            on_cycle = set(vertices)
            for i in range(len(vertices)):
                a, b = vertices[i], vertices[(i + 1) % len(vertices)]
                detour = self._detour(a, b, on_cycle)
                if detour is not None:
                    x, first, second = detour
                    vertices.insert(i + 1, x)
                    edge_ids[i : i + 1] = [first, second]
                    improved = True
                    break
        self.offer(vertices, edge_ids)

    def _detour(self, a: int, b: int, on_cycle):
        for x, first in self.adjacency[a]:
            if x in on_cycle:
                continue
            for y, second in self.adjacency[x]:
                self.steps += 1
                if y == b and second != first:
                    return x, first, second
        return None

    def backtrack(self, start: int, limit: int):
        """Budgeted exhaustive search for long cycles through `start`."""
        path, path_edges, on_path = [start], [], {start}
        stack = [iter(self.order(start, on_path))]
        stop = min(self.budget, self.steps + limit)
        while stack and self.steps < stop:
            u = path[-1]
            for w, edge_id in stack[-1]:
                self.steps += 1
                if w == start and edge_id not in path_edges:
                    self.offer(path, path_edges + [edge_id])
                elif w not in on_path:
                    path.append(w)
                    path_edges.append(edge_id)
                    on_path.add(w)
                    stack.append(iter(self.order(w, on_path)))
                    break
            else:
                stack.pop()
                if u != start:
                    path.pop()
                    path_edges.pop()
                    on_path.discard(u)


def find_long_cycle(
    g: MultiGraph,
    budget: Optional[int] = None,
    restarts: int = DEFAULT_RESTARTS,
    seed=0,
) -> Optional[Cycle]:
    """
    Heuristic search for a long cycle:
        1. `restarts` randomized depth-first searches (neighbors with few unvisited
           neighbors first), keeping the deepest back-edge cycle;
        2. detour insertion: an edge a-b of the best cycle is replaced by a-x-b through an
           off-cycle vertex x while one exists;
        3. budgeted backtracking for cycles through vertices of the best cycle.

    :param g: MultiGraph.
    :param budget: Optional int. Edge examinations per restart. Defaults to 50 * n.
    :param restarts: int. Defaults to 10.
    :param seed: int or np.random.Generator. The result is a function of (g, budget,
        restarts, seed).
    :return: Cycle, or None if g is acyclic.
    """
    if budget is None:
        budget = DEFAULT_STEPS_PER_VERTEX * max(g.n, 1)
    search = _Search(g, get_rng(seed), budget * max(restarts, 1))
    candidates = [v for v in range(g.n) if search.degrees[v] > 0]
    if not candidates:
        return None
    for _ in range(max(restarts, 1)):
        start = candidates[int(search.rng.integers(len(candidates)))]
        search.dfs(start, budget)
        if search.best is not None and search.best.length == g.n:
            return search.best
    if search.best is None:
        return None
    search.insert_detours()
    for start in sorted(search.best.vertices):
        if search.exhausted or search.best.length == g.n:
            break
        search.backtrack(start, budget)
    log.debug(
        "find_long_cycle: length %d after %d steps", search.best.length, search.steps
    )
    return search.best


def longest_cycle_exact(g: MultiGraph) -> int:
    """
    Exact longest cycle length by exhaustive search over simple paths, each cycle rooted at
    its smallest vertex, with pruning on the number of vertices still available.

    :return: int. 0 if g is acyclic.
    """
    n = g.n
    if n > MAX_EXACT_VERTICES:
        raise AuditBudgetError(
            f"exhaustive longest cycle search is limited to n <= {MAX_EXACT_VERTICES}, "
            f"got n={n}",
            n,
        )
    best = 0
    if g.loop_count():
        best = 1
    if g.multi_edge_count():
        best = 2
    neighbors = [0] * n
    for u, v in g.edges.tolist():
        if u != v:
            neighbors[u] |= 1 << v
            neighbors[v] |= 1 << u

    def extend(s: int, u: int, visited: int, allowed: int, length: int):
        nonlocal best
        if length >= 3 and neighbors[u] >> s & 1:
            best = max(best, length)
        if length + bin(allowed & ~visited).count("1") <= best:
            return
        candidates = neighbors[u] & allowed & ~visited
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            extend(s, low.bit_length() - 1, visited | low, allowed, length + 1)

    for s in range(n):
        if n - s <= best:
            break
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        extend(s, s, 1 << s, allowed, 1)
    return best
