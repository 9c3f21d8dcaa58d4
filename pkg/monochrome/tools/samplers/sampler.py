from typing import List

from monochrome.graphs import (
    FunctionalDigraph,
    HamiltonDecomposition,
    MultiGraph,
)


class Sample(object):
    def __init__(
        self,
        graph: MultiGraph,
        model: str,
        n: int,
        seed: int,
        decomposition: HamiltonDecomposition = None,
        digraphs: List[FunctionalDigraph] = None,
        **params,
    ):
        """
        One drawn graph together with whatever structure the coloring algorithms need.

        :param graph: MultiGraph.
        :param model: str. Model identifier, 'hamilton-sum', 'kout' or 'pairing'.
        :param n: int. Vertex count.
        :param seed: int. Seed the graph was drawn with.
        :param decomposition: Optional HamiltonDecomposition (hamilton-sum only).
        :param digraphs: Optional list of FunctionalDigraph (kout only).
        :param params: model parameters (r, k, d) kept for records and archives.
        """
        self.graph = graph
        self.model = model
        self.n = n
        self.seed = seed
        self.decomposition = decomposition
        self.digraphs = digraphs
        self.params = params

    def attributes(self) -> dict:
        return dict(model=self.model, n=self.n, seed=self.seed, **self.params)

    def __repr__(self):
        return f"Sample(model={self.model}, n={self.n}, seed={self.seed})"


class Sampler(object):
    model = None

    def __init__(self, r: int = 2, **kwargs):
        """
        :param r: int. Defaults to 2. Number of colors the drawn graphs are meant for; fixes
            the model's degree parameter unless it is given explicitly.
        """
        if r < 1:
            raise ValueError(f"need r >= 1, got r={r}")
        self.r = r

    def sample(self, n: int, seed) -> Sample:
        """
        :param n: int. Vertex count.
        :param seed: int. 64-bit seed.
        :return: Sample.
        """
        raise NotImplementedError(
            "sample must be specified. Make sure a Sampler subclass is being used."
        )

    @property
    def degree(self) -> int:
        """Degree of every vertex (regular models) or average degree (kout)."""
        raise NotImplementedError
