from monochrome.graphs import adversarial_color, mix_seed
from monochrome.graphs.adversaries import GREEDY_BALANCED
from monochrome.tools.samplers import Sample

from .colorer import ColoringResult, Colorer


class AdversarialColorer(Colorer):
    def __init__(self, r: int = 2, strategy: str = GREEDY_BALANCED, **kwargs):
        """
        :param strategy: str. Defaults to 'greedy-balanced'. See `adversarial_color`.
        """
        super().__init__(r, **kwargs)
        self.strategy = strategy

    def color(self, sample: Sample, seed: int = None) -> ColoringResult:
        """
        :param seed: Optional int. Coloring seed, derived from the sample's seed by default.
        """
        if seed is None:
            seed = mix_seed(sample.seed, 1)
        coloring, used = adversarial_color(sample.graph, self.r, self.strategy, seed)
        return ColoringResult(coloring, strategy=self.strategy, strategy_used=used)
