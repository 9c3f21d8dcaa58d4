from pathlib import Path

from monochrome.tools.jobs import AdversarialProbe, GridSearch

here = Path(__file__).parent
probe = AdversarialProbe(
    exp_config={
        "name": f"{here} probe",
        "run_config": {"n_grid": [2000], "trials": 10, "seed": 1, "out": str(here / "results")},
        "sampler_config": {"model": "kout", "r": 2, "k": 3},
    }
)
job = GridSearch(
    probe,
    grid={"r": [2, 3], "k": [3, 4], "smax": [12, 16]},
    exp_config={
        "name": f"{here}",
        "run_config": {"storage_dir": str(here / "sacred_storage")},
    },
)
job.run()
