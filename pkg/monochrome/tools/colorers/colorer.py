import numpy as np

from monochrome.graphs import BlockPartition, EdgeColoring
from monochrome.tools.samplers import Sample


class ColoringResult(object):
    def __init__(
        self,
        coloring: EdgeColoring,
        blocks: BlockPartition = None,
        estar: np.ndarray = None,
        **stats,
    ):
        """
        :param coloring: EdgeColoring over the sample's graph.
        :param blocks: Optional BlockPartition (constructive colorings only).
        :param estar: Optional np.ndarray. Edge ids of the exceptional set E*.
        :param stats: scalar statistics gathered while coloring, keyed by RunRecord field.
        """
        self.coloring = coloring
        self.blocks = blocks
        self.estar = estar
        self.stats = stats

    def sidecar(self) -> dict:
        """JSON-ready description of the coloring (block sizes, |E*|, statistics)."""
        sidecar = dict(self.stats)
        if self.blocks is not None:
            sidecar["block_sizes"] = self.blocks.sizes.tolist()
        if self.estar is not None:
            sidecar["estar"] = self.estar.tolist()
        return sidecar


class Colorer(object):
    def __init__(self, r: int = 2, **kwargs):
        """
        :param r: int. Defaults to 2. Number of colors.
        """
        if r < 2:
            raise ValueError(f"need r >= 2, got r={r}")
        self.r = r

    def color(self, sample: Sample) -> ColoringResult:
        raise NotImplementedError(
            "color must be specified. Make sure a Colorer subclass is being used."
        )

    def audit(self, sample: Sample, result: ColoringResult) -> dict:
        """
        Structural audits of a coloring produced by this colorer. Deterministic guarantees
        raise `ContractViolation`; statistical ones are returned as RunRecord fields.
        """
        return {}
