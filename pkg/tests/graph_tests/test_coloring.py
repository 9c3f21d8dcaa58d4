import math

import numpy as np
import pytest

from monochrome.graphs import (
    ArborescenceForest,
    BlockPartition,
    ContractViolation,
    arborescence_stats,
    assign_kout_colors,
    color_class_arcs,
    color_hamilton,
    color_kout,
    functional_cycle_count,
    hamilton_sum,
    kout_sum,
    mono_stats,
    partition_blocks,
    peel_arborescences,
    strip_cycles,
)
from monochrome.graphs.audits import check_block_containment
from monochrome.graphs.coloring import hamilton_block_bounds, peel_threshold


def path_forest(n):
    return ArborescenceForest([i + 1 for i in range(n - 1)] + [-1])


class TestArborescenceForest:
    def test_small_tree(self):
        forest = ArborescenceForest([-1, 0, 0, 1])
        assert forest.roots.tolist() == [0]
        assert forest.depths.tolist() == [0, 1, 1, 2]
        assert forest.subtree_sizes().tolist() == [4, 2, 1, 1]
        assert forest.orders()[0] == 4
        assert forest.heights()[0] == 2
        assert forest.children()[0] == [1, 2]

    def test_rejects_cycles(self):
        with pytest.raises(ValueError):
            ArborescenceForest([1, 2, 0])

    def test_block_partition_labels(self):
        with pytest.raises(ValueError):
            BlockPartition([0, 2, 2])
        blocks = BlockPartition([1, 0, 1])
        assert blocks.count == 2
        assert blocks.sizes.tolist() == [1, 2]
        assert [b.tolist() for b in blocks.blocks] == [[1], [0, 2]]


class TestHamiltonColoring:
    def test_block_bounds(self):
        assert hamilton_block_bounds(27) == [10, 20, 27]

    @pytest.mark.parametrize("r", [2, 3])
    def test_contracts(self, r):
        g, decomp = hamilton_sum(3000, r, seed=r)
        coloring, blocks, estar = color_hamilton(decomp, r)
        coloring.check_total(g)
        largest = check_block_containment(g, coloring, blocks)
        assert largest <= math.ceil(3000 ** 0.7)
        assert (coloring.colors[estar] == 2).all()
        assert (estar < 3000).all()
        assert len(estar) <= blocks.count

    def test_edge_classes(self, hamilton_sample):
        g, decomp = hamilton_sample
        coloring, blocks, estar = color_hamilton(decomp, 2)
        n = decomp.n
        inside = blocks.same_block(g.edges[:, 0], g.edges[:, 1])
        assert (coloring.colors[inside] == 1).all()
        crossing_h2 = np.flatnonzero(~inside[n:]) + n
        assert (coloring.colors[crossing_h2] == 2).all()

    def test_rejects_wrong_r(self, hamilton_sample):
        _, decomp = hamilton_sample
        with pytest.raises(ValueError):
            color_hamilton(decomp, 3)


class TestPeeling:
    def test_path_peels_into_threshold_pieces(self):
        forest, extra = peel_arborescences(path_forest(100), 10)
        assert extra.tolist() == [9, 19, 29, 39, 49, 59, 69, 79, 89]
        assert forest.orders().max() == 10

    def test_threshold_bound(self, kout_sample):
        _, digraphs = kout_sample
        forest, _ = strip_cycles(digraphs[0])
        threshold = peel_threshold(5000, 0.5)
        peeled, extra = peel_arborescences(forest, threshold)
        assert peeled.orders().max() <= threshold
        assert len(peeled.roots) == len(forest.roots) + len(extra)

    def test_star_loses_every_in_arc(self):
        star = ArborescenceForest([-1] + [0] * 99)
        forest, extra = peel_arborescences(star, 10)
        assert sorted(extra.tolist()) == list(range(1, 100))
        assert len(forest.roots) == 100
        assert forest.orders().max() == 1

    def test_threshold_must_be_positive(self):
        with pytest.raises(ValueError):
            peel_arborescences(path_forest(5), 0)

    def test_strip_cycles(self, kout_sample):
        _, digraphs = kout_sample
        forest, tails = strip_cycles(digraphs[0])
        assert len(tails) == functional_cycle_count(digraphs[0])
        assert forest.roots.tolist() == tails.tolist()

    def test_mean_stripped_arcs(self):
        sizes = [len(strip_cycles(kout_sum(1000, 1, seed=s)[1][0])[1]) for s in range(200)]
        assert 2 <= np.mean(sizes) <= 6


class TestKOutColoring:
    def test_partition_keeps_arborescences_whole(self, kout_sample):
        _, digraphs = kout_sample
        forest, _ = strip_cycles(digraphs[0])
        forest, _ = peel_arborescences(forest, peel_threshold(5000))
        blocks = partition_blocks(forest, 5000)
        assert (blocks.labels == blocks.labels[forest.root_of]).all()

    def test_partition_of_singletons(self):
        n = 10 ** 4
        blocks = partition_blocks(ArborescenceForest([-1] * n), n)
        width = math.ceil(n ** 0.9)
        assert width == 3982
        cumulative = np.arange(1, n + 1)
        cuts = [int(np.searchsorted(cumulative, j * width)) + 1 for j in (1, 2)]
        assert blocks.sizes.tolist() == [cuts[0], cuts[1] - cuts[0], n - cuts[1]]
        assert blocks.sizes.tolist() == [3982, 3982, 2036]

    def test_partition_keeps_a_large_arborescence_in_one_block(self):
        n = 10 ** 4
        parent = [-1] * n
        chain = range(3000, 3000 + math.floor(n ** 0.85))
        for v in chain[:-1]:
            parent[v] = v + 1
        blocks = partition_blocks(ArborescenceForest(parent), n)
        assert len(np.unique(blocks.labels[list(chain)])) == 1

    def test_partition_rejects_large_arborescences(self):
        with pytest.raises(ValueError):
            partition_blocks(path_forest(100), 100, 0.9, 0.5)

    @pytest.mark.parametrize("r", [2, 3])
    def test_contracts(self, r):
        g, digraphs = kout_sum(4000, r, seed=10 + r)
        coloring, blocks, estar, _, _, _ = color_kout(digraphs, r)
        coloring.check_total(g)
        check_block_containment(g, coloring, blocks)
        assert (coloring.colors[estar] == 2).all()
        for color in range(2, r + 1):
            tails, heads = color_class_arcs(digraphs, coloring, color, exclude=estar)
            stats = arborescence_stats(tails, heads, 4000)
            assert stats.max_order <= 4000
        assert mono_stats(g, coloring, r).max_order < 4000

    def test_estar_size(self):
        n = 10 ** 4
        finite_bound = n ** 0.15 * math.log(n) + n ** 0.1
        for seed in range(8):
            _, digraphs = kout_sum(n, 2, seed=seed)
            result = color_kout(digraphs, 2)
            tails = np.unique(np.concatenate([result.stripped, result.peeled]))
            assert len(result.estar) == len(tails)
            assert len(result.estar) <= finite_bound

    def test_rejects_digraph_count(self, kout_sample):
        _, digraphs = kout_sample
        with pytest.raises(ValueError):
            color_kout(digraphs, 3)

    def test_estar_is_checked(self):
        _, digraphs = kout_sum(500, 2, seed=1)
        forest, _ = strip_cycles(digraphs[0])
        forest, _ = peel_arborescences(forest, peel_threshold(500))
        blocks = BlockPartition(np.arange(500) % 2)
        with pytest.raises(ContractViolation):
            assign_kout_colors(digraphs, blocks, np.zeros(0, dtype=np.int64))
