from monochrome.graphs import hamilton_sum

from .sampler import Sample, Sampler


class HamiltonSampler(Sampler):
    model = "hamilton-sum"

    @property
    def degree(self) -> int:
        return 2 * self.r

    def sample(self, n: int, seed) -> Sample:
        """
        H_1 + ... + H_r of uniform Hamilton cycles, the stand-in for random 2r-regular graphs.
        """
        graph, decomposition = hamilton_sum(n, self.r, seed)
        return Sample(graph, self.model, n, seed, decomposition=decomposition, r=self.r)
