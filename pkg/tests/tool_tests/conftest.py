import os
from pathlib import Path
from shutil import rmtree

import pytest
from pytest import fixture
from sacred import SETTINGS

from monochrome.tools.samplers import HamiltonSampler, KOutSampler, PairingSampler

SETTINGS.CAPTURE_MODE = "sys"

test_dir = Path(os.path.abspath(os.path.dirname(__file__))) / "test_jobs"


def clear_directories():
    rmtree(test_dir / "sacred_storage", ignore_errors=True)
    rmtree(test_dir / "results", ignore_errors=True)


@fixture(scope="session", autouse=True)
def clear_logdirs(request):
    request.addfinalizer(clear_directories)


@pytest.fixture
def run_config(tmp_path):
    return {
        "storage_dir": str(test_dir / "sacred_storage"),
        "capture_output": False,
        "n_grid": [200, 400],
        "trials": 2,
        "seed": 3,
        "out": str(tmp_path / "results"),
    }


# ===== Sample Fixtures ===== #


@pytest.fixture(scope="session")
def hamilton_sample():
    return HamiltonSampler(r=2).sample(1000, 5)


@pytest.fixture(scope="session")
def kout_sample():
    return KOutSampler(r=2).sample(3000, 6)


@pytest.fixture(scope="session")
def pairing_sample():
    return PairingSampler(r=2).sample(100, 7)
