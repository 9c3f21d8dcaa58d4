from monochrome.graphs import pairing_model, simple_regular

from .sampler import Sample, Sampler


class PairingSampler(Sampler):
    model = "pairing"

    def __init__(
        self, r: int = 2, d: int = None, simple: bool = False, max_attempts: int = 1000, **kwargs
    ):
        """
        :param d: Optional int. Degree, defaults to 2r + 1 (one more than r colors can keep
            free of long monochromatic cycles).
        :param simple: bool. Defaults to False. Reject until the graph is simple.
        :param max_attempts: int. Rejection budget when `simple` is True.
        """
        super().__init__(r, **kwargs)
        self.d = d or 2 * r + 1
        self.simple = simple
        self.max_attempts = max_attempts

    @property
    def degree(self) -> int:
        return self.d

    def sample(self, n: int, seed) -> Sample:
        if self.simple:
            graph = simple_regular(n, self.d, seed, self.max_attempts)
        else:
            graph = pairing_model(n, self.d, seed)
        return Sample(graph, self.model, n, seed, r=self.r, d=self.d, simple=self.simple)
