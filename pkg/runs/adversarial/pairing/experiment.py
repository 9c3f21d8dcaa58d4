from pathlib import Path

from monochrome.tools.jobs import AdversarialProbe

here = Path(__file__).parent
job = AdversarialProbe(
    exp_config={
        "name": f"{here}",
        "run_config": {
            "n_grid": [2000],
            "trials": 10,
            "seed": 1,
            "jobs": 4,
            "out": str(here / "results"),
            "storage_dir": str(here / "sacred_storage"),
        },
        "sampler_config": {"model": "pairing", "r": 2, "d": 5},
        "audit_config": {"smax": 100, "audit_budget": 5000000, "reduce": True},
    }
)
job.run()
