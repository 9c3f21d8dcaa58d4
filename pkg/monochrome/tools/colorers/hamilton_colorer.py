from monochrome.graphs import ContractViolation, color_hamilton, path_length_audit
from monochrome.graphs.audits import check_block_containment
from monochrome.graphs.coloring import HAMILTON_BLOCK_EXPONENT, HAMILTON_PATH_EXPONENT
from monochrome.graphs.utils import ceil_power
from monochrome.tools.samplers import Sample

from .colorer import ColoringResult, Colorer


class HamiltonColorer(Colorer):
    def __init__(
        self,
        r: int = 2,
        block_exponent: float = HAMILTON_BLOCK_EXPONENT,
        path_exponent: float = HAMILTON_PATH_EXPONENT,
        **kwargs,
    ):
        super().__init__(r, **kwargs)
        self.block_exponent = block_exponent
        self.path_exponent = path_exponent

    def color(self, sample: Sample) -> ColoringResult:
        if sample.decomposition is None:
            raise ValueError(
                f"{sample.model} samples carry no Hamilton decomposition; "
                "use the hamilton-sum model"
            )
        coloring, blocks, estar = color_hamilton(
            sample.decomposition, self.r, self.block_exponent
        )
        return ColoringResult(
            coloring,
            blocks,
            estar,
            block_count=blocks.count,
            max_block_size=int(blocks.sizes.max()),
            estar_size=len(estar),
        )

    def audit(self, sample: Sample, result: ColoringResult) -> dict:
        """
        Color-1 components stay inside blocks and so have order at most
        ceil(n^block_exponent); every E_i is a union of paths, reported against n^path_exponent.
        """
        largest = check_block_containment(sample.graph, result.coloring, result.blocks)
        cap = ceil_power(sample.n, self.block_exponent)
        if largest > cap:
            raise ContractViolation(
                f"color-1 component of order {largest} exceeds ceil(n^{self.block_exponent}) = {cap}"
            )
        paths = path_length_audit(sample.decomposition, result.coloring, self.path_exponent)
        return {
            "path_max_lengths": [paths.max_lengths[c] for c in sorted(paths.max_lengths)],
            "path_limit": paths.limit,
            "path_ok": paths.passed,
        }
