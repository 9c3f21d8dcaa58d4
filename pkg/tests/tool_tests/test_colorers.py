import math

import pytest

from monochrome.graphs import color_kout, mix_seed, mono_stats
from monochrome.graphs.adversaries import GREEDY_BALANCED, ORIENTATION_SPLIT
from monochrome.tools.colorers import (
    AdversarialColorer,
    Colorer,
    HamiltonColorer,
    KOutColorer,
)
from monochrome.tools.ingredients import make_colorer


class TestHamiltonColorer:
    def test_color_and_audit(self, hamilton_sample):
        colorer = make_colorer("hamilton", r=2)
        assert isinstance(colorer, HamiltonColorer)
        result = colorer.color(hamilton_sample)
        result.coloring.check_total(hamilton_sample.graph)
        assert result.stats["block_count"] == result.blocks.count
        assert result.stats["max_block_size"] <= math.ceil(1000 ** 0.7)
        assert result.stats["estar_size"] == len(result.estar)
        audit = colorer.audit(hamilton_sample, result)
        assert len(audit["path_max_lengths"]) == 1
        assert audit["path_limit"] == 1000 ** 0.4
        assert audit["path_ok"] == (audit["path_max_lengths"][0] <= audit["path_limit"])

    def test_sidecar(self, hamilton_sample):
        result = HamiltonColorer(r=2).color(hamilton_sample)
        sidecar = result.sidecar()
        assert sum(sidecar["block_sizes"]) == 1000
        assert sidecar["estar"] == result.estar.tolist()

    def test_needs_decomposition(self, pairing_sample):
        with pytest.raises(ValueError):
            HamiltonColorer(r=2).color(pairing_sample)


class TestKOutColorer:
    def test_color_and_audit(self, kout_sample):
        colorer = make_colorer("kout", r=2)
        assert isinstance(colorer, KOutColorer)
        result = colorer.color(kout_sample)
        result.coloring.check_total(kout_sample.graph)
        stats = result.stats
        assert stats["max_arborescence_order"] <= 3000 ** 0.85
        assert stats["estar_ok"] == (stats["estar_size"] < stats["estar_limit"])
        assert stats["stripped_arcs"] >= 1
        assert stats["peel_iterations"] <= stats["peeled_arcs"]
        assert stats["estar_size"] <= stats["stripped_arcs"] + stats["peeled_arcs"]
        assert stats["max_in_degree"] == kout_sample.digraphs[0].in_degrees().max()
        audit = colorer.audit(kout_sample, result)
        assert audit["class_max_order"] <= 3000
        assert audit["class_max_height"] < audit["class_max_order"]

    def test_same_coloring_as_library(self, kout_sample):
        result = KOutColorer(r=2).color(kout_sample)
        direct = color_kout(kout_sample.digraphs, 2)
        assert (result.coloring.colors == direct.coloring.colors).all()
        assert (result.estar == direct.estar).all()
        assert result.stats["stripped_arcs"] == len(direct.stripped)

    def test_digraph_count_must_match_r(self, kout_sample):
        with pytest.raises(ValueError):
            KOutColorer(r=3).color(kout_sample)

    def test_needs_digraphs(self, hamilton_sample):
        with pytest.raises(ValueError):
            KOutColorer(r=2).color(hamilton_sample)


class TestAdversarialColorer:
    def test_seed_follows_sample(self, pairing_sample):
        colorer = make_colorer("adversarial", r=2, strategy=GREEDY_BALANCED)
        assert isinstance(colorer, AdversarialColorer)
        first = colorer.color(pairing_sample)
        again = colorer.color(pairing_sample, seed=mix_seed(pairing_sample.seed, 1))
        assert first.coloring == again.coloring
        assert first.stats == dict(strategy=GREEDY_BALANCED, strategy_used=GREEDY_BALANCED)
        assert colorer.audit(pairing_sample, first) == {}

    def test_reports_fallback(self, pairing_sample):
        result = AdversarialColorer(r=2, strategy=ORIENTATION_SPLIT).color(pairing_sample)
        assert result.stats["strategy_used"] == GREEDY_BALANCED
        stats = mono_stats(pairing_sample.graph, result.coloring, 2)
        assert stats.max_order <= 100


class TestFactory:
    def test_unknown_colorer(self):
        with pytest.raises(ValueError):
            make_colorer("spectral", r=2)

    def test_base_class(self, pairing_sample):
        with pytest.raises(ValueError):
            Colorer(r=1)
        with pytest.raises(NotImplementedError):
            Colorer(r=2).color(pairing_sample)
