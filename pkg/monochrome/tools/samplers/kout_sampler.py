from monochrome.graphs import kout_distinct, kout_sum

from .sampler import Sample, Sampler


class KOutSampler(Sampler):
    model = "kout"

    def __init__(self, r: int = 2, k: int = None, distinct: bool = False, **kwargs):
        """
        :param k: Optional int. Out-degree, defaults to r (one digraph per color).
        :param distinct: bool. Defaults to False. Draw from the distinct-choice model instead
            of the functional-digraph sum.
        """
        super().__init__(r, **kwargs)
        self.k = k or r
        self.distinct = distinct

    @property
    def degree(self) -> int:
        return 2 * self.k

    def sample(self, n: int, seed) -> Sample:
        draw = kout_distinct if self.distinct else kout_sum
        graph, digraphs = draw(n, self.k, seed)
        return Sample(
            graph,
            self.model,
            n,
            seed,
            digraphs=digraphs,
            r=self.r,
            k=self.k,
            distinct=self.distinct,
        )
