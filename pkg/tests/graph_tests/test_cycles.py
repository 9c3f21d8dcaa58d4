import pytest

from monochrome.graphs import (
    AuditBudgetError,
    Cycle,
    MultiGraph,
    find_long_cycle,
    is_cycle,
    longest_cycle_exact,
)


def cycle_length(cycle):
    return 0 if cycle is None else cycle.length


class TestIsCycle:
    def test_triangle(self):
        g = MultiGraph(3, [(0, 1), (1, 2), (2, 0)])
        assert is_cycle(g, Cycle((0, 1, 2), (0, 1, 2)))
        assert not is_cycle(g, Cycle((0, 2, 1), (0, 1, 2)))
        assert not is_cycle(g, Cycle((0, 1), (0, 0)))

    def test_parallel_edges_and_loops(self):
        g = MultiGraph(2, [(0, 1), (1, 0), (1, 1)])
        assert is_cycle(g, Cycle((0, 1), (0, 1)))
        assert is_cycle(g, Cycle((1,), (2,)))
        assert not is_cycle(g, Cycle((0,), (0,)))


class TestLongestCycleExact:
    def test_petersen(self, petersen):
        assert longest_cycle_exact(petersen) == 9

    def test_small_cases(self, k4):
        assert longest_cycle_exact(k4) == 4
        assert longest_cycle_exact(MultiGraph(4, [(0, 1), (1, 2), (2, 3)])) == 0
        assert longest_cycle_exact(MultiGraph(2, [(1, 1)])) == 1
        assert longest_cycle_exact(MultiGraph(3, [(0, 1), (0, 1), (1, 2)])) == 2
        bowtie = MultiGraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        assert longest_cycle_exact(bowtie) == 3

    def test_size_guard(self):
        g = MultiGraph(16, [(i, i + 1) for i in range(15)])
        with pytest.raises(AuditBudgetError):
            longest_cycle_exact(g)


class TestFindLongCycle:
    def test_petersen(self, petersen):
        cycle = find_long_cycle(petersen, budget=5000, seed=1)
        assert is_cycle(petersen, cycle)
        assert cycle.length == 9

    def test_acyclic(self):
        assert find_long_cycle(MultiGraph(4, [(0, 1), (1, 2), (1, 3)])) is None
        assert find_long_cycle(MultiGraph(3, [])) is None

    def test_loop_and_parallel_pair(self):
        assert find_long_cycle(MultiGraph(1, [(0, 0)])).length == 1
        assert find_long_cycle(MultiGraph(2, [(0, 1), (0, 1)])).length == 2

    def test_seeded(self, cubic_pairing):
        first = find_long_cycle(cubic_pairing, seed=4)
        assert first == find_long_cycle(cubic_pairing, seed=4)
        assert is_cycle(cubic_pairing, first)
        assert first.length >= 20

    def test_never_beats_the_oracle(self, small_random_graphs):
        agree = 0
        for i, g in enumerate(small_random_graphs):
            found = find_long_cycle(g, budget=1000, seed=i)
            if found is not None:
                assert is_cycle(g, found)
            exact = longest_cycle_exact(g)
            assert cycle_length(found) <= exact
            agree += cycle_length(found) == exact
        assert agree >= 0.7 * len(small_random_graphs)
