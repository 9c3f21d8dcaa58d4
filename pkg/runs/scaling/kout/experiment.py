from pathlib import Path

from monochrome.tools.jobs import ScalingExperiment

here = Path(__file__).parent
job = ScalingExperiment(
    exp_config={
        "name": f"{here}",
        "run_config": {
            "n_grid": [10000, 100000, 1000000],
            "trials": 20,
            "seed": 1,
            "jobs": 4,
            "out": str(here / "results"),
            "storage_dir": str(here / "sacred_storage"),
        },
        "sampler_config": {"model": "kout", "r": 2, "k": 2},
        "colorer_config": {"colorer_type": "kout", "r": 2},
    }
)
job.run()
