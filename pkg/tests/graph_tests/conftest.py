import numpy as np
import pytest

from monochrome.graphs import MultiGraph, hamilton_sum, kout_sum, pairing_model


# ===== Graph Fixtures ===== #


@pytest.fixture(scope="session")
def hamilton_sample():
    return hamilton_sum(2000, 2, seed=7)


@pytest.fixture(scope="session")
def kout_sample():
    return kout_sum(5000, 2, seed=11)


@pytest.fixture(scope="session")
def cubic_pairing():
    return pairing_model(200, 3, seed=3)


@pytest.fixture(scope="session")
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, outer + spokes + inner)


@pytest.fixture(scope="session")
def k4():
    return MultiGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def small_random_graphs():
    """Mixed small multigraphs: pairing model graphs and arbitrary edge lists with loops."""
    rng = np.random.default_rng(2024)
    graphs = []
    for i in range(40):
        n = int(rng.integers(3, 9))
        if i % 2:
            d = 3 if n % 2 == 0 else 4
            graphs.append(pairing_model(n, d, seed=int(rng.integers(2 ** 32))))
        else:
            m = int(rng.integers(0, 2 * n))
            graphs.append(MultiGraph(n, rng.integers(0, n, size=(m, 2))))
    return graphs
