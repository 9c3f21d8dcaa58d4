import numpy as np

from monochrome.graphs import (
    ContractViolation,
    arborescence_stats,
    color_class_arcs,
    color_kout,
)
from monochrome.graphs.audits import check_block_containment
from monochrome.graphs.coloring import (
    KOUT_BLOCK_EXPONENT,
    KOUT_ESTAR_EXPONENT,
    KOUT_PEEL_EXPONENT,
)
from monochrome.graphs.utils import power
from monochrome.tools.samplers import Sample

from .colorer import ColoringResult, Colorer


class KOutColorer(Colorer):
    def __init__(
        self,
        r: int = 2,
        kout_block_exponent: float = KOUT_BLOCK_EXPONENT,
        peel_exponent: float = KOUT_PEEL_EXPONENT,
        estar_exponent: float = KOUT_ESTAR_EXPONENT,
        **kwargs,
    ):
        super().__init__(r, **kwargs)
        self.block_exponent = kout_block_exponent
        self.peel_exponent = peel_exponent
        self.estar_exponent = estar_exponent

    def color(self, sample: Sample) -> ColoringResult:
        digraphs = sample.digraphs
        if digraphs is None:
            raise ValueError(
                f"{sample.model} samples carry no functional digraphs; use the kout model"
            )
        if len(digraphs) != self.r:
            raise ValueError(
                f"coloring needs one digraph per color, sample has k={len(digraphs)}, r={self.r}"
            )
        n = sample.n
        d1 = digraphs[0]
        result = color_kout(digraphs, self.r, self.block_exponent, self.peel_exponent)
        coloring, blocks, estar = result.coloring, result.blocks, result.estar
        max_order = int(result.forest.orders().max())
        if max_order > power(n, self.peel_exponent):
            raise ContractViolation(
                f"post-peel arborescence of order {max_order} exceeds n^{self.peel_exponent}"
            )
        estar_limit = power(n, self.estar_exponent)
        return ColoringResult(
            coloring,
            blocks,
            estar,
            block_count=blocks.count,
            max_block_size=int(blocks.sizes.max()),
            estar_size=len(estar),
            estar_limit=estar_limit,
            estar_ok=bool(len(estar) < estar_limit),
            stripped_arcs=len(result.stripped),
            peeled_arcs=len(result.peeled),
            peel_iterations=len(np.unique(d1.succ[result.peeled])),
            max_in_degree=int(d1.in_degrees().max()),
            max_arborescence_order=max_order,
        )

    def audit(self, sample: Sample, result: ColoringResult) -> dict:
        """
        Color-1 components stay inside blocks; color classes i >= 2 (minus E*) have
        out-degree at most 1, so they split into in-arborescences and unicyclic components.
        """
        check_block_containment(sample.graph, result.coloring, result.blocks)
        heights, orders, unicyclic = [], [], 0
        for color in range(2, self.r + 1):
            tails, heads = color_class_arcs(
                sample.digraphs, result.coloring, color, exclude=result.estar
            )
            stats = arborescence_stats(tails, heads, sample.n)
            heights.append(stats.max_height)
            orders.append(stats.max_order)
            unicyclic += stats.unicyclic_count
        return {
            "class_max_height": max(heights),
            "class_max_order": max(orders),
            "unicyclic_count": unicyclic,
        }
